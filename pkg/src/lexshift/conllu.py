"""Domain types for POS-annotated corpora plus CoNLL-U parsing, validation, and serialization.

Only the ID, FORM, and UPOS columns are interpreted; everything else is emitted
as `_` on write. Multiword-token range lines (`3-4`) and empty-node lines
(`3.1`) are skipped on read because transformations operate on the integer-ID
token sequence.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum

from .errors import MalformedLine, UnknownUpos


class UposTag(Enum):
    """The 17-tag universal part-of-speech inventory."""

    ADJ = "ADJ"
    ADP = "ADP"
    ADV = "ADV"
    AUX = "AUX"
    CCONJ = "CCONJ"
    DET = "DET"
    INTJ = "INTJ"
    NOUN = "NOUN"
    NUM = "NUM"
    PART = "PART"
    PRON = "PRON"
    PROPN = "PROPN"
    PUNCT = "PUNCT"
    SCONJ = "SCONJ"
    SYM = "SYM"
    VERB = "VERB"
    X = "X"


class TransformId(Enum):
    """Identifies which transformation created or rewrote a token."""

    EMOJI = "emoji"
    ILN = "iln"
    PROPN = "propn"
    X_RT = "x_rt"
    X_URL = "x_url"
    X_HASHTAG = "x_hashtag"


class ProvenanceKind(Enum):
    ORIGINAL = "original"
    INJECTED = "injected"
    REWRITTEN = "rewritten"


@dataclass(frozen=True, slots=True)
class Provenance:
    """Per-token record of whether a token came from the source corpus or a transformation."""

    kind: ProvenanceKind
    transform_id: TransformId | None = None
    original_form: str | None = None

    def __post_init__(self):
        if self.kind is ProvenanceKind.ORIGINAL:
            if self.transform_id is not None or self.original_form is not None:
                raise ValueError("original provenance carries no transform metadata")
        elif self.transform_id is None:
            raise ValueError(f"{self.kind.value} provenance requires a transform_id")
        if self.kind is ProvenanceKind.INJECTED and self.original_form is not None:
            raise ValueError("injected provenance carries no original_form")
        if self.kind is ProvenanceKind.REWRITTEN and not self.original_form:
            raise ValueError("rewritten provenance requires a non-empty original_form")

    @classmethod
    def injected(cls, transform_id: TransformId) -> "Provenance":
        return cls(ProvenanceKind.INJECTED, transform_id)

    @classmethod
    def rewritten(cls, transform_id: TransformId, original_form: str) -> "Provenance":
        return cls(ProvenanceKind.REWRITTEN, transform_id, original_form)


ORIGINAL = Provenance(ProvenanceKind.ORIGINAL)


@dataclass(frozen=True, slots=True)
class Token:
    """A surface form coupled with its universal POS tag and provenance."""

    form: str
    upos: UposTag
    provenance: Provenance = ORIGINAL

    def __post_init__(self):
        if not self.form:
            raise ValueError("token form must be non-empty")
        if "\t" in self.form or "\n" in self.form or "\r" in self.form:
            raise ValueError("token form must not contain tabs or line breaks")
        if (
            self.provenance is not None
            and self.provenance.kind is ProvenanceKind.REWRITTEN
            and self.provenance.original_form == self.form
        ):
            raise ValueError("rewritten token must differ from its original form")


@dataclass(frozen=True, slots=True)
class Sentence:
    """An ordered token sequence with its raw comment lines.

    An empty token list is constructible so that ``validate`` can report it as
    a violation; ``parse_conllu`` never produces one.
    """

    tokens: tuple[Token, ...]
    sent_id: str | None = None
    comments: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class Corpus:
    sentences: tuple[Sentence, ...] = ()
    source_label: str = ""

    def __len__(self) -> int:
        return len(self.sentences)


_INT_ID = re.compile(r"[0-9]+")
_RANGE_ID = re.compile(r"[0-9]+-[0-9]+")
_EMPTY_NODE_ID = re.compile(r"[0-9]+\.[0-9]+")
_SENT_ID_COMMENT = re.compile(r"#\s*sent_id\s*=\s*(.*)$")

_CONLLU_COLUMNS = 10


def parse_conllu(text: str, source_label: str = "") -> Corpus:
    """Parse CoNLL-U text into a Corpus, reading only ID, FORM, and UPOS.

    Comment lines are preserved verbatim per sentence; `# sent_id = ...` is
    also extracted into ``Sentence.sent_id``. Trailing comment blocks with no
    token lines are discarded. CRLF input is accepted.

    Raises MalformedLine for a structurally bad token line and UnknownUpos for
    any UPOS outside the 17-tag set; the unlabeled `_` is rejected the same
    way because every transformation requires labels.
    """
    sentences: list[Sentence] = []
    comments: list[str] = []
    sent_id: str | None = None
    tokens: list[Token] = []

    def flush():
        nonlocal comments, sent_id, tokens
        if tokens:
            sentences.append(
                Sentence(tokens=tuple(tokens), sent_id=sent_id, comments=tuple(comments))
            )
        comments = []
        sent_id = None
        tokens = []

    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw[:-1] if raw.endswith("\r") else raw
        if line == "":
            flush()
            continue
        if line.startswith("#"):
            comments.append(line)
            m = _SENT_ID_COMMENT.match(line)
            if m:
                sent_id = m.group(1).strip() or None
            continue
        columns = line.split("\t")
        if len(columns) != _CONLLU_COLUMNS:
            raise MalformedLine(
                line_number,
                f"expected {_CONLLU_COLUMNS} tab-separated columns, found {len(columns)}",
            )
        token_id = columns[0]
        if _RANGE_ID.fullmatch(token_id) or _EMPTY_NODE_ID.fullmatch(token_id):
            continue
        if not _INT_ID.fullmatch(token_id):
            raise MalformedLine(line_number, f"unrecognized token ID {token_id!r}")
        form = columns[1]
        if not form:
            raise MalformedLine(line_number, "empty FORM column")
        try:
            upos = UposTag(columns[3])
        except ValueError:
            raise UnknownUpos(line_number, columns[3]) from None
        tokens.append(Token(form=form, upos=upos))
    flush()
    return Corpus(sentences=tuple(sentences), source_label=source_label)


def serialize_conllu(corpus: Corpus) -> str:
    """Serialize a Corpus back to CoNLL-U text (LF line endings).

    Token IDs are re-numbered from 1; LEMMA and the remaining columns are
    emitted as `_`. A sentence whose ``sent_id`` is set but whose comments do
    not carry it gains a `# sent_id = ...` line. The output parses back to a
    structurally identical Corpus.
    """
    lines: list[str] = []
    for sentence in corpus.sentences:
        has_sent_id_comment = any(_SENT_ID_COMMENT.match(c) for c in sentence.comments)
        if sentence.sent_id is not None and not has_sent_id_comment:
            lines.append(f"# sent_id = {sentence.sent_id}")
        lines.extend(sentence.comments)
        for position, token in enumerate(sentence.tokens, start=1):
            lines.append(
                f"{position}\t{token.form}\t_\t{token.upos.value}\t_\t_\t_\t_\t_\t_"
            )
        lines.append("")
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ValidationReport:
    n_sentences: int
    n_tokens: int
    upos_histogram: dict[str, int]
    violations: tuple[str, ...]


def _has_control_chars(form: str) -> bool:
    return any(unicodedata.category(ch) == "Cc" for ch in form)


def validate(corpus: Corpus) -> ValidationReport:
    """Count sentences, tokens, and per-UPOS occurrences; report invariant violations.

    Violations (empty-token-list sentences, control characters in forms) are
    reported, never raised.
    """
    histogram = {tag.value: 0 for tag in UposTag}
    violations: list[str] = []
    n_tokens = 0
    for i, sentence in enumerate(corpus.sentences):
        if not sentence.tokens:
            violations.append(f"sentence {i}: empty token list")
        for j, token in enumerate(sentence.tokens):
            n_tokens += 1
            histogram[token.upos.value] += 1
            if _has_control_chars(token.form):
                violations.append(f"sentence {i}, token {j}: control character in form")
    return ValidationReport(
        n_sentences=len(corpus.sentences),
        n_tokens=n_tokens,
        upos_histogram=histogram,
        violations=tuple(violations),
    )
