"""Exception hierarchy shared across the engine.

Every error carries a wire ``code`` so the HTTP layer can map it onto a
structured error response without inspecting exception types, plus a
user-facing ``message`` and a machine-facing ``detail``.
"""

from __future__ import annotations


class EngineError(Exception):
    code = "bad_request"

    def __init__(self, message: str, detail: str = ""):
        super().__init__(message)
        self.message = message
        self.detail = detail or message


class IngestError(EngineError):
    """Raised when a CSV source cannot be turned into a dataset."""

    def __init__(self, reason: str, row: int | None = None):
        detail = f"row {row}: {reason}" if row is not None else reason
        super().__init__(f"could not ingest CSV: {reason}", detail)
        self.row = row
        self.reason = reason


class SchemaError(EngineError):
    """Duplicate or otherwise unusable column schema."""


class StatsError(EngineError):
    """No usable values to compute statistics from."""


class ParseError(EngineError):
    """The utterance could not be tokenized."""


class UnintelligibleQuery(EngineError):
    """No vague modifier and no recognizable attribute in the utterance."""

    code = "unintelligible"


class CorpusError(EngineError):
    """The n-gram count corpus file is malformed."""

    def __init__(self, reason: str, line_no: int | None = None):
        detail = f"line {line_no}: {reason}" if line_no is not None else reason
        super().__init__(f"bad corpus file: {reason}", detail)
        self.line_no = line_no


class NoCooccurrence(EngineError):
    """The modifier does not co-occur with any numeric attribute."""

    code = "no_cooccurrence"


class NotSupported(EngineError):
    """The modifier is routed out of this engine (numeric-graded forms)."""

    code = "not_supported"


class RefineError(EngineError):
    """A session refinement request was invalid."""

    code = "refine_error"


class DegenerateRange(EngineError):
    """A computed filter range has no overlap with the attribute's bounds."""

    def __init__(self, attribute: str):
        super().__init__(f"computed range for '{attribute}' is empty")
        self.attribute = attribute


class ConfigError(EngineError):
    """A configuration file (lexicon, registry) is invalid."""
