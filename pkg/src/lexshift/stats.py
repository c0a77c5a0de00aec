"""Positional Gaussian fitting and sampling, corpus length statistics, and feature-rate reports."""

from __future__ import annotations

import random
import re
import statistics
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

from .conllu import Corpus, ProvenanceKind, Token, TransformId
from .errors import NoObservations

# Codepoint ranges treated as emoji: emoticons, pictographs, transport,
# supplemental symbols, miscellaneous symbols, dingbats, plus the variation
# selectors and ZWJ that compose them.
_EMOJI_RANGES = (
    (0x1F600, 0x1F64F),
    (0x1F300, 0x1F5FF),
    (0x1F680, 0x1F6FF),
    (0x1F900, 0x1F9FF),
    (0x2600, 0x26FF),
    (0x2700, 0x27BF),
    (0xFE00, 0xFE0F),
    (0x200D, 0x200D),
)

DEFAULT_EMOTICONS = frozenset({":)", ":(", ":D", ";)", ":-)", "<3", ":-(", ":P"})


def _is_emoji_char(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _EMOJI_RANGES)


def is_emoji_token(form: str, emoticons: Iterable[str] = DEFAULT_EMOTICONS) -> bool:
    """True iff every character of ``form`` is an emoji codepoint, or ``form``
    is a known emoticon. Emoticons count as emojis throughout the toolkit."""
    if form in emoticons:
        return True
    return bool(form) and all(_is_emoji_char(ch) for ch in form)


@dataclass(frozen=True, slots=True)
class PlacementModel:
    """Gaussian over the relative in-sentence position of a lexical feature."""

    mean: float
    std: float
    n_observations: int

    def __post_init__(self):
        if not 0.0 <= self.mean <= 1.0:
            raise ValueError(f"placement mean must be in [0, 1], got {self.mean}")
        if self.std < 0.0:
            raise ValueError(f"placement std must be >= 0, got {self.std}")
        if self.n_observations < 1:
            raise ValueError("placement model requires at least one observation")

    def to_json_dict(self) -> dict:
        return {"mean": self.mean, "std": self.std, "n": self.n_observations}

    @classmethod
    def from_json_dict(cls, d: dict) -> "PlacementModel":
        return cls(mean=float(d["mean"]), std=float(d["std"]), n_observations=int(d["n"]))


@dataclass(frozen=True, slots=True)
class LengthStats:
    mean_tokens: float
    std_tokens: float
    n_sentences: int


def relative_positions(
    corpus: Corpus, feature_predicate: Callable[[Token], bool]
) -> list[float]:
    """Relative position i/(L-1) of every matching token, in corpus order.

    A match in a single-token sentence contributes 0.5.
    """
    positions: list[float] = []
    for sentence in corpus.sentences:
        length = len(sentence.tokens)
        for i, token in enumerate(sentence.tokens):
            if feature_predicate(token):
                positions.append(i / (length - 1) if length > 1 else 0.5)
    return positions


def fit_location_gaussian(positions: Sequence[float]) -> PlacementModel:
    """Fit mean and population standard deviation to observed relative positions."""
    if not positions:
        raise NoObservations("cannot fit a placement model to zero observations")
    mean = min(1.0, max(0.0, statistics.fmean(positions)))
    std = statistics.pstdev(positions)
    return PlacementModel(mean=mean, std=std, n_observations=len(positions))


def sample_position(model: PlacementModel, sentence_len: int, rng: random.Random) -> int:
    """Draw an insertion index in [0, sentence_len] from the placement Gaussian.

    The Gaussian draw is clamped to [0, 1] before scaling, so no rejection is
    needed; index k means "insert before token k" and k == sentence_len appends.
    """
    if sentence_len < 1:
        raise ValueError("sentence_len must be >= 1")
    g = rng.gauss(model.mean, model.std)
    g = min(1.0, max(0.0, g))
    return round(g * sentence_len)


def sentence_length_stats(corpus: Corpus) -> LengthStats:
    """Mean and population std of tokens per sentence; zeros for an empty corpus."""
    lengths = [len(s.tokens) for s in corpus.sentences]
    if not lengths:
        return LengthStats(mean_tokens=0.0, std_tokens=0.0, n_sentences=0)
    return LengthStats(
        mean_tokens=statistics.fmean(lengths),
        std_tokens=statistics.pstdev(lengths),
        n_sentences=len(lengths),
    )


FEATURES = ("emoji", "retweet", "url", "hashtag", "user_mention", "unnormalized_token")

# Deliberately conservative: an explicit scheme, a t.co-style host path, or the
# URL<digits> placeholder convention used for anonymized tweet corpora (which
# is also this toolkit's default injected-URL surface form).
_URL_RE = re.compile(r"https?://\S+|(?:www\.)?t\.co/\S+|URL[0-9]+")


def _is_url_form(form: str) -> bool:
    return bool(_URL_RE.fullmatch(form))


@dataclass(frozen=True, slots=True)
class FeatureRate:
    sentence_rate: float
    token_count: int


@dataclass(frozen=True)
class FeatureRateReport:
    """Per-feature sentence rates and token counts, keyed by feature name."""

    rates: dict[str, FeatureRate]

    def to_json_dict(self) -> dict:
        return {
            name: {"sentence_rate": fr.sentence_rate, "token_count": fr.token_count}
            for name, fr in self.rates.items()
        }


def feature_rate_report(
    corpus: Corpus, emoticons: Iterable[str] = DEFAULT_EMOTICONS
) -> FeatureRateReport:
    """Detect tweet-like lexical features by surface rules and report their rates.

    Features: emoji (see is_emoji_token), retweet ("RT" as first token), url,
    hashtag (`#`-prefixed), user_mention (`@`-prefixed), unnormalized_token
    (provenance says it was rewritten by inverse lexical normalization).
    """
    sentence_hits = {name: 0 for name in FEATURES}
    token_counts = {name: 0 for name in FEATURES}
    for sentence in corpus.sentences:
        seen: set[str] = set()
        for i, token in enumerate(sentence.tokens):
            form = token.form
            if is_emoji_token(form, emoticons):
                matched = "emoji"
                token_counts[matched] += 1
                seen.add(matched)
            if i == 0 and form == "RT":
                token_counts["retweet"] += 1
                seen.add("retweet")
            if _is_url_form(form):
                token_counts["url"] += 1
                seen.add("url")
            if form.startswith("#") and len(form) >= 2:
                token_counts["hashtag"] += 1
                seen.add("hashtag")
            if form.startswith("@") and len(form) >= 2:
                token_counts["user_mention"] += 1
                seen.add("user_mention")
            prov = token.provenance
            if prov.kind is ProvenanceKind.REWRITTEN and prov.transform_id is TransformId.ILN:
                token_counts["unnormalized_token"] += 1
                seen.add("unnormalized_token")
        for name in seen:
            sentence_hits[name] += 1
    n = len(corpus.sentences)
    rates = {
        name: FeatureRate(
            sentence_rate=(sentence_hits[name] / n) if n else 0.0,
            token_count=token_counts[name],
        )
        for name in FEATURES
    }
    return FeatureRateReport(rates=rates)
