"""Inverse lexical-normalization dictionary built from a normalization shared-task dataset.

The shared-task data maps noisy social-media tokens to their normalized
spellings; inverting it gives canonical form -> observed noisy variants, which
is what converting standard English into tweet-like text needs.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .errors import MalformedJson, MissingField, NoVariants


@dataclass(frozen=True, slots=True)
class LexnormRecord:
    """One annotated item: raw tokens and their position-aligned normalizations.

    An output slot may hold several space-separated words when a single noisy
    token expands to a phrase.
    """

    input: tuple[str, ...]
    output: tuple[str, ...]

    def __post_init__(self):
        if len(self.input) != len(self.output):
            raise ValueError("input and output token lists must have equal length")


@dataclass(frozen=True)
class LexnormParse:
    records: tuple[LexnormRecord, ...]
    dropped: int


def parse_lexnorm(
    text: str, input_key: str = "input", output_key: str = "output"
) -> LexnormParse:
    """Parse shared-task JSON: an array of objects with aligned token arrays.

    Records whose input and output lengths disagree are dropped and tallied in
    ``dropped``. Key names are configurable because they vary by release.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedJson(f"not valid JSON: {e}") from None
    if not isinstance(data, list):
        raise MalformedJson("expected a top-level JSON array of records")
    records: list[LexnormRecord] = []
    dropped = 0
    for index, item in enumerate(data):
        if not isinstance(item, dict):
            raise MalformedJson(f"record {index}: expected a JSON object")
        for key in (input_key, output_key):
            if key not in item:
                raise MissingField(index, key)
        raw_in, raw_out = item[input_key], item[output_key]
        if not isinstance(raw_in, list) or not isinstance(raw_out, list):
            raise MalformedJson(f"record {index}: token fields must be arrays")
        if len(raw_in) != len(raw_out):
            dropped += 1
            continue
        records.append(
            LexnormRecord(
                input=tuple(str(t) for t in raw_in),
                output=tuple(str(t) for t in raw_out),
            )
        )
    return LexnormParse(records=tuple(records), dropped=dropped)


@dataclass(frozen=True, slots=True)
class VariantEntry:
    form: str
    count: int


@dataclass(frozen=True)
class NormalizationDictionary:
    """Map from canonical form (lowercased) to its observed noisy variants."""

    entries: dict[str, tuple[VariantEntry, ...]] = field(default_factory=dict)

    @property
    def total_entries(self) -> int:
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, form: str) -> tuple[VariantEntry, ...] | None:
        """Variants for a form, keyed case-insensitively; None when absent."""
        return self.entries.get(form.lower())

    def sample_variant(
        self, form: str, rng: random.Random, weighting: str = "uniform"
    ) -> str:
        """Draw a noisy variant for ``form``.

        "uniform" draws over distinct variants; "frequency" weights by
        observed counts.
        """
        variants = self.lookup(form)
        if not variants:
            raise NoVariants(f"no variants recorded for {form!r}")
        forms = [v.form for v in variants]
        if weighting == "frequency":
            return rng.choices(forms, weights=[v.count for v in variants])[0]
        return rng.choice(forms)

    def to_json_dict(self) -> dict:
        return {
            canonical: [{"variant": v.form, "count": v.count} for v in variants]
            for canonical, variants in self.entries.items()
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "NormalizationDictionary":
        entries: dict[str, tuple[VariantEntry, ...]] = {}
        for canonical, variants in d.items():
            entries[str(canonical)] = tuple(
                VariantEntry(form=str(v["variant"]), count=int(v["count"]))
                for v in variants
            )
        return cls(entries=entries)


def build_dictionary(records: list[LexnormRecord] | tuple[LexnormRecord, ...]) -> NormalizationDictionary:
    """Invert aligned (noisy, normalized) pairs into canonical -> variants.

    Only 1-to-1 positions are inverted: multiword output slots are skipped
    because a single retained POS tag is only well-defined for single-token
    replacement. Pairs identical under case-folding are skipped too.
    """
    counts: dict[str, dict[str, int]] = {}
    for record in records:
        for raw, normalized in zip(record.input, record.output):
            canonical = normalized.strip()
            if not canonical or " " in canonical:
                continue
            variant = raw.strip()
            if not variant or any(ch.isspace() for ch in variant):
                continue
            key = canonical.lower()
            if any(ch.isspace() for ch in key):
                continue
            if variant.lower() == key:
                continue
            per_key = counts.setdefault(key, {})
            per_key[variant] = per_key.get(variant, 0) + 1
    entries = {
        key: tuple(VariantEntry(form=v, count=c) for v, c in per_key.items())
        for key, per_key in counts.items()
    }
    return NormalizationDictionary(entries=entries)
