"""Minimal CoNLL-U reader: surface forms and UPOS strings, nothing else.

The harness consumes corpus files produced upstream; it validates labels
against the 17-tag universal POS inventory and fails fast on anything else,
because a silent label drop would corrupt every downstream metric.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

UPOS_TAGS = (
    "ADJ", "ADP", "ADV", "AUX", "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
)

LABEL2ID = {tag: i for i, tag in enumerate(UPOS_TAGS)}
ID2LABEL = {i: tag for i, tag in enumerate(UPOS_TAGS)}


class UnknownLabel(ValueError):
    def __init__(self, line_number: int, label: str):
        super().__init__(f"line {line_number}: UPOS {label!r} is not one of the 17 tags")
        self.line_number = line_number
        self.label = label


@dataclass(frozen=True)
class LabeledSentence:
    forms: tuple[str, ...]
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(self.forms) != len(self.tags):
            raise ValueError("forms and tags must align")


_SKIP_ID = re.compile(r"[0-9]+-[0-9]+|[0-9]+\.[0-9]+")


def read_conllu(text: str) -> list[LabeledSentence]:
    sentences: list[LabeledSentence] = []
    forms: list[str] = []
    tags: list[str] = []

    def flush():
        nonlocal forms, tags
        if forms:
            sentences.append(LabeledSentence(forms=tuple(forms), tags=tuple(tags)))
        forms, tags = [], []

    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line:
            flush()
            continue
        if line.startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 10:
            raise ValueError(
                f"line {line_number}: expected 10 tab-separated columns, found {len(columns)}"
            )
        if _SKIP_ID.fullmatch(columns[0]):
            continue
        label = columns[3]
        if label not in LABEL2ID:
            raise UnknownLabel(line_number, label)
        forms.append(columns[1])
        tags.append(label)
    flush()
    return sentences


def read_conllu_file(path: str) -> list[LabeledSentence]:
    with open(path, encoding="utf-8") as f:
        return read_conllu(f.read())
