"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad arguments or malformed invocation (CLI exit code 1)."""


class ModelDomainError(Exception):
    """Parameters outside the model's domain, e.g. radius >= 1/4 (CLI exit code 2)."""


class CliqueTooLargeError(ValueError):
    """Requested clique size exceeds the instance's vertex count."""


class GraphFormatError(ValueError):
    """Malformed graph/instance file; carries the offending line number."""

    def __init__(self, line_number, message):
        super().__init__(message)
        self.line_number = line_number
