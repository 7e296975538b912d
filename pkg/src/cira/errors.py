"""Exception types shared across the pipeline stages."""

from __future__ import annotations


class CiraError(Exception):
    """Base class for all pipeline errors; ``code`` is the machine-readable reason."""

    code = "ERROR"


class LabelError(CiraError):
    """A sentence could not be turned into a valid role labeling."""

    code = "UNLABELABLE"


class NotCausalError(LabelError):
    code = "NOT_CAUSAL"


class NoEffectError(LabelError):
    code = "NO_EFFECT"


class NoCauseError(LabelError):
    code = "NO_CAUSE"


class InvalidLabelsError(CiraError):
    code = "INVALID_LABELS"

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class MissingAssignmentError(CiraError):
    code = "MISSING_ASSIGNMENT"

    def __init__(self, event_id: str):
        super().__init__(f"no value assigned for {event_id}")
        self.event_id = event_id


class WireParseError(CiraError):
    """Malformed structured document; ``path`` points at the offending element."""

    code = "PARSE_ERROR"

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class CorpusParseError(CiraError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateIdError(CorpusParseError):
    code = "DUPLICATE_ID"

    def __init__(self, entry_id: str, line: int):
        super().__init__(f"duplicate entry id {entry_id!r}", line)
        self.entry_id = entry_id


class MissingGoldError(CiraError):
    code = "MISSING_GOLD"

    def __init__(self, entry_ids: list[str]):
        super().__init__(
            "causal entries without gold annotations: " + ", ".join(entry_ids)
        )
        self.entry_ids = list(entry_ids)


class IdMismatchError(CiraError):
    code = "ID_MISMATCH"
