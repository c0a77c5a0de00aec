"""The four label-preserving lexical transformations, the combined pipeline, and inversion.

Every transformation is a pure Corpus -> Corpus function driven by per-sentence
RNG streams derived from (master_seed, stage, sentence_index), so output is
bit-reproducible regardless of evaluation order. Injected tokens always carry
the tag their feature class maps to (emojis -> SYM, retweet/URL/hashtag
insertions -> X); rewritten tokens keep their tag.
"""

from __future__ import annotations

import hashlib
import random
import string
from dataclasses import dataclass, field
from importlib import resources

from .conllu import (
    Corpus,
    Provenance,
    ProvenanceKind,
    Sentence,
    Token,
    TransformId,
    UposTag,
)
from .errors import InvalidConfig, MissingProvenance
from .normdict import NormalizationDictionary
from .stats import PlacementModel, sample_position


def parse_inventory(text: str) -> tuple[str, ...]:
    """Parse an inventory file: one form per line, UTF-8.

    A line starting with `# ` (hash + space, or a bare `#`) is a comment;
    hashtag entries like `#tbt` are data.
    """
    forms = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if stripped == "#" or stripped.startswith("# "):
            continue
        forms.append(stripped)
    return tuple(forms)


def load_inventory_file(path: str) -> tuple[str, ...]:
    with open(path, encoding="utf-8") as f:
        return parse_inventory(f.read())


def _packaged_inventory(name: str) -> tuple[str, ...]:
    text = resources.files("lexshift.data").joinpath(name).read_text(encoding="utf-8")
    return parse_inventory(text)


DEFAULT_EMOJI_INVENTORY = _packaged_inventory("emojis.txt")
DEFAULT_X_HASHTAG_INVENTORY = _packaged_inventory("hashtags.txt")

# Neutral placement prior used until a model fitted on a target corpus is
# supplied; wide enough to spread insertions across the sentence.
DEFAULT_HASHTAG_PLACEMENT = PlacementModel(mean=0.5, std=0.25, n_observations=1)

_MAX_SEED = 2**64 - 1


def _check_prob(value: float, field_name: str) -> None:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise InvalidConfig(f"{field_name} must be a number")
    if not 0.0 <= value <= 1.0:
        raise InvalidConfig(f"{field_name} must be within [0, 1], got {value}")


@dataclass(frozen=True, slots=True)
class EmojiConfig:
    """Sentence-level emoji injection; placement=None draws uniformly over slots."""

    enabled: bool = True
    sentence_prob: float = 0.25
    placement: PlacementModel | None = None
    inventory: tuple[str, ...] = DEFAULT_EMOJI_INVENTORY

    def __post_init__(self):
        _check_prob(self.sentence_prob, "emoji.sentence_prob")
        if self.enabled and not self.inventory:
            raise InvalidConfig("emoji.inventory must be non-empty when emoji is enabled")


@dataclass(frozen=True, slots=True)
class IlnConfig:
    enabled: bool = True
    token_prob: float = 0.75
    weighting: str = "uniform"

    def __post_init__(self):
        _check_prob(self.token_prob, "iln.token_prob")
        if self.weighting not in ("uniform", "frequency"):
            raise InvalidConfig(
                f"iln.weighting must be 'uniform' or 'frequency', got {self.weighting!r}"
            )


@dataclass(frozen=True, slots=True)
class PropnConfig:
    enabled: bool = True
    p_mention: float = 0.50
    p_hashtag: float = 0.20

    def __post_init__(self):
        _check_prob(self.p_mention, "propn.p_mention")
        _check_prob(self.p_hashtag, "propn.p_hashtag")
        if self.p_mention + self.p_hashtag > 1.0:
            raise InvalidConfig(
                "propn.p_mention + propn.p_hashtag must not exceed 1, "
                f"got {self.p_mention} + {self.p_hashtag}"
            )


@dataclass(frozen=True, slots=True)
class XConfig:
    enabled: bool = True
    p_rt: float = 0.30
    p_url: float = 0.60
    p_hashtag: float = 0.10
    hashtag_inventory: tuple[str, ...] = DEFAULT_X_HASHTAG_INVENTORY
    url_style: str = "placeholder"
    hashtag_placement: PlacementModel = DEFAULT_HASHTAG_PLACEMENT

    def __post_init__(self):
        _check_prob(self.p_rt, "x.p_rt")
        _check_prob(self.p_url, "x.p_url")
        _check_prob(self.p_hashtag, "x.p_hashtag")
        if self.url_style not in ("placeholder", "pseudo_tco"):
            raise InvalidConfig(
                f"x.url_style must be 'placeholder' or 'pseudo_tco', got {self.url_style!r}"
            )
        if self.enabled and self.p_hashtag > 0 and not self.hashtag_inventory:
            raise InvalidConfig(
                "x.hashtag_inventory must be non-empty when x.p_hashtag > 0"
            )


@dataclass(frozen=True, slots=True)
class TransformConfig:
    master_seed: int
    emoji: EmojiConfig = field(default_factory=EmojiConfig)
    iln: IlnConfig = field(default_factory=IlnConfig)
    propn: PropnConfig = field(default_factory=PropnConfig)
    x: XConfig = field(default_factory=XConfig)

    def __post_init__(self):
        if not isinstance(self.master_seed, int) or isinstance(self.master_seed, bool):
            raise InvalidConfig("master_seed must be an integer")
        if not 0 <= self.master_seed <= _MAX_SEED:
            raise InvalidConfig("master_seed must be an unsigned 64-bit integer")


@dataclass(frozen=True, slots=True)
class SeededStreams:
    """Deterministic per-sentence RNG streams.

    The stream for (master_seed, stage, sentence_index) is identical no matter
    in which order sentences are processed, which keeps sentence-level
    parallelism bit-reproducible.
    """

    master_seed: int

    def sentence_rng(self, stage: str, sentence_index: int) -> random.Random:
        key = f"{self.master_seed}:{stage}:{sentence_index}".encode()
        seed = int.from_bytes(hashlib.sha256(key).digest()[:8], "big")
        return random.Random(seed)


def _replace_tokens(sentence: Sentence, tokens: tuple[Token, ...]) -> Sentence:
    return Sentence(tokens=tokens, sent_id=sentence.sent_id, comments=sentence.comments)


def inject_emojis(corpus: Corpus, cfg: EmojiConfig, streams: SeededStreams) -> Corpus:
    """Add one emoji token (tagged SYM) to each sentence selected with
    probability ``sentence_prob``; position comes from the placement Gaussian
    when one is configured, otherwise uniformly from the insertion slots."""
    if not cfg.enabled:
        return corpus
    if not cfg.inventory:
        raise InvalidConfig("emoji.inventory must be non-empty when emoji is enabled")
    out: list[Sentence] = []
    for index, sentence in enumerate(corpus.sentences):
        rng = streams.sentence_rng("emoji", index)
        if rng.random() >= cfg.sentence_prob:
            out.append(sentence)
            continue
        form = rng.choice(cfg.inventory)
        length = len(sentence.tokens)
        if length == 0:
            position = 0
        elif cfg.placement is not None:
            position = sample_position(cfg.placement, length, rng)
        else:
            position = rng.randint(0, length)
        token = Token(form=form, upos=UposTag.SYM, provenance=Provenance.injected(TransformId.EMOJI))
        tokens = sentence.tokens[:position] + (token,) + sentence.tokens[position:]
        out.append(_replace_tokens(sentence, tokens))
    return Corpus(sentences=tuple(out), source_label=corpus.source_label)


def apply_iln(
    corpus: Corpus,
    dictionary: NormalizationDictionary,
    cfg: IlnConfig,
    streams: SeededStreams,
) -> Corpus:
    """Replace dictionary-covered tokens by a noisy variant with probability
    ``token_prob``; the POS tag is retained and injected tokens are never
    rewritten."""
    if not cfg.enabled:
        return corpus
    if dictionary is None or len(dictionary) == 0:
        raise InvalidConfig("iln requires a non-empty normalization dictionary")
    out: list[Sentence] = []
    for index, sentence in enumerate(corpus.sentences):
        rng = streams.sentence_rng("iln", index)
        tokens: list[Token] = []
        changed = False
        for token in sentence.tokens:
            if token.provenance.kind is ProvenanceKind.INJECTED:
                tokens.append(token)
                continue
            if dictionary.lookup(token.form) is None:
                tokens.append(token)
                continue
            if rng.random() >= cfg.token_prob:
                tokens.append(token)
                continue
            variant = dictionary.sample_variant(token.form, rng, cfg.weighting)
            tokens.append(
                Token(
                    form=variant,
                    upos=token.upos,
                    provenance=Provenance.rewritten(TransformId.ILN, token.form),
                )
            )
            changed = True
        out.append(_replace_tokens(sentence, tuple(tokens)) if changed else sentence)
    return Corpus(sentences=tuple(out), source_label=corpus.source_label)


def convert_propn(corpus: Corpus, cfg: PropnConfig, streams: SeededStreams) -> Corpus:
    """Turn original proper nouns into user-mentions or hashtags by prefixing
    `@` or `#`; a single exclusive draw decides which, and the PROPN tag is
    kept."""
    if not cfg.enabled:
        return corpus
    out: list[Sentence] = []
    for index, sentence in enumerate(corpus.sentences):
        rng = streams.sentence_rng("propn", index)
        tokens: list[Token] = []
        changed = False
        for token in sentence.tokens:
            if token.upos is not UposTag.PROPN or token.provenance.kind is not ProvenanceKind.ORIGINAL:
                tokens.append(token)
                continue
            u = rng.random()
            if u < cfg.p_mention:
                prefix = "@"
            elif u < cfg.p_mention + cfg.p_hashtag:
                prefix = "#"
            else:
                tokens.append(token)
                continue
            tokens.append(
                Token(
                    form=prefix + token.form,
                    upos=UposTag.PROPN,
                    provenance=Provenance.rewritten(TransformId.PROPN, token.form),
                )
            )
            changed = True
        out.append(_replace_tokens(sentence, tuple(tokens)) if changed else sentence)
    return Corpus(sentences=tuple(out), source_label=corpus.source_label)


_ALNUM = string.ascii_lowercase + string.digits


def _url_token(cfg: XConfig, sentence_index: int, rng: random.Random) -> Token:
    if cfg.url_style == "pseudo_tco":
        suffix = "".join(rng.choice(_ALNUM) for _ in range(8))
        form = "http://t.co/" + suffix
    else:
        form = f"URL{sentence_index}"
    return Token(form=form, upos=UposTag.X, provenance=Provenance.injected(TransformId.X_URL))


def inject_x(corpus: Corpus, cfg: XConfig, streams: SeededStreams) -> Corpus:
    """Insert retweet markers (sentence-initial), URLs (sentence-final), and
    inventory hashtags (Gaussian-placed), all tagged X.

    Per sentence, three independent draws decide the insertions. The hashtag
    position is sampled over the original sentence length and then shifted by
    the two-token retweet prefix when one is added, so it can land neither
    before "RT" nor after the URL. The <k> in "@USER<k>"/"URL<k>" is the
    sentence index, which keeps output schedule-independent.
    """
    if not cfg.enabled:
        return corpus
    if cfg.p_hashtag > 0 and not cfg.hashtag_inventory:
        raise InvalidConfig("x.hashtag_inventory must be non-empty when x.p_hashtag > 0")
    out: list[Sentence] = []
    for index, sentence in enumerate(corpus.sentences):
        rng = streams.sentence_rng("x", index)
        add_rt = rng.random() < cfg.p_rt
        add_url = rng.random() < cfg.p_url
        add_hashtag = rng.random() < cfg.p_hashtag
        if not (add_rt or add_url or add_hashtag):
            out.append(sentence)
            continue
        tokens = sentence.tokens
        if add_hashtag:
            length = len(tokens)
            form = rng.choice(cfg.hashtag_inventory)
            position = sample_position(cfg.hashtag_placement, length, rng) if length else 0
            hashtag = Token(
                form=form, upos=UposTag.X, provenance=Provenance.injected(TransformId.X_HASHTAG)
            )
            tokens = tokens[:position] + (hashtag,) + tokens[position:]
        if add_rt:
            prov = Provenance.injected(TransformId.X_RT)
            tokens = (
                Token(form="RT", upos=UposTag.X, provenance=prov),
                Token(form=f"@USER{index}", upos=UposTag.X, provenance=prov),
            ) + tokens
        if add_url:
            tokens = tokens + (_url_token(cfg, index, rng),)
        out.append(_replace_tokens(sentence, tokens))
    return Corpus(sentences=tuple(out), source_label=corpus.source_label)


def transform_all(
    corpus: Corpus,
    config: TransformConfig,
    dictionary: NormalizationDictionary | None = None,
) -> Corpus:
    """Apply the enabled transformations in the fixed order iln -> propn ->
    emoji -> x and relabel the corpus with a "-T" suffix.

    The order plus the provenance guards make stage interactions impossible:
    normalization cannot corrupt injected tokens, and proper-noun conversion
    cannot re-prefix an injected user mention.
    """
    streams = SeededStreams(config.master_seed)
    result = corpus
    # No dictionary means the normalization stage has nothing to do; an empty
    # dictionary passed explicitly is still an error (see apply_iln).
    if config.iln.enabled and dictionary is not None:
        result = apply_iln(result, dictionary, config.iln, streams)
    result = convert_propn(result, config.propn, streams)
    result = inject_emojis(result, config.emoji, streams)
    result = inject_x(result, config.x, streams)
    return Corpus(sentences=result.sentences, source_label=corpus.source_label + "-T")


def restore_original(corpus: Corpus) -> Corpus:
    """Undo a transformation by provenance: drop injected tokens and restore
    rewritten forms.

    A single trailing "-T" label suffix is stripped, so this is the exact
    inverse of ``transform_all``.
    """
    out: list[Sentence] = []
    for sentence in corpus.sentences:
        tokens: list[Token] = []
        for token in sentence.tokens:
            if token.provenance is None:
                raise MissingProvenance("token lacks provenance metadata")
            kind = token.provenance.kind
            if kind is ProvenanceKind.INJECTED:
                continue
            if kind is ProvenanceKind.REWRITTEN:
                tokens.append(Token(form=token.provenance.original_form, upos=token.upos))
            else:
                tokens.append(token)
        out.append(_replace_tokens(sentence, tuple(tokens)))
    label = corpus.source_label
    if label.endswith("-T"):
        label = label[: -len("-T")]
    return Corpus(sentences=tuple(out), source_label=label)


def concat(a: Corpus, b: Corpus) -> Corpus:
    """Concatenate two corpora, sentences of ``a`` first."""
    return Corpus(
        sentences=a.sentences + b.sentences,
        source_label=f"{a.source_label}+{b.source_label}",
    )
