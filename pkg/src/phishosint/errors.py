"""Exception types shared across the pipeline."""


class PipelineError(Exception):
    """Base class for all phishosint errors."""


class ConfigError(PipelineError):
    """Bad configuration or command usage."""


class SchemaError(PipelineError):
    """Input file is missing a required column or is otherwise malformed."""


class RowError(PipelineError):
    """A single data row could not be interpreted."""

    def __init__(self, row_number, message):
        super().__init__(f"row {row_number}: {message}")
        self.row_number = row_number


class DataError(PipelineError):
    """Inconsistent in-memory data (mismatched lengths, empty class, ...)."""


class ParseError(PipelineError):
    """Tool output could not be parsed; carries the raw text."""

    def __init__(self, message, raw=""):
        super().__init__(message)
        self.raw = raw


class ProbeError(PipelineError):
    """A scan or harvest probe failed."""


class MissingFixtureError(ProbeError):
    """The fixture backend has no recording for the requested domain."""


class ColumnMismatchError(DataError):
    """Prediction input width differs from the training matrix width."""

    def __init__(self, expected, actual):
        super().__init__(f"expected {expected} feature columns, got {actual}")
        self.expected = expected
        self.actual = actual
