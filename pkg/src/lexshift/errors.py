"""Exception types shared across the toolkit."""


class LexshiftError(Exception):
    """Base class for all toolkit errors."""


class MalformedLine(LexshiftError):
    """A CoNLL-U line that cannot be interpreted (wrong column count, bad ID, empty form)."""

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class UnknownUpos(LexshiftError):
    """A UPOS value outside the 17-tag universal inventory (includes the unlabeled `_`)."""

    def __init__(self, line_number: int, upos: str):
        super().__init__(
            f"line {line_number}: UPOS {upos!r} is not one of the 17 universal tags"
        )
        self.line_number = line_number
        self.upos = upos


class MalformedJson(LexshiftError):
    """Input that is not valid JSON or not the expected JSON shape."""


class MissingField(LexshiftError):
    """A required key is absent from a JSON record."""

    def __init__(self, record_index: int, field: str):
        super().__init__(f"record {record_index}: missing field {field!r}")
        self.record_index = record_index
        self.field = field


class NoObservations(LexshiftError):
    """A fit was requested over an empty list of observations."""


class NoVariants(LexshiftError):
    """A variant draw was requested for a form with no dictionary entry."""


class InvalidConfig(LexshiftError):
    """A transformation config value is out of range, mistyped, or inconsistent."""


class MissingProvenance(LexshiftError):
    """A token without provenance metadata was fed to a provenance-driven operation."""
