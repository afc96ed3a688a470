"""Exception types shared across the pipeline."""


class KghierError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(KghierError):
    """A malformed line in an input triple file."""

    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = str(path)
        self.lineno = lineno


class ConfigError(KghierError):
    """Invalid configuration value (alpha, theta, jobs, engine, ...)."""


class IntegrityError(KghierError):
    """Inputs that disagree with each other, e.g. a similarity record
    referencing a group that is not in the table."""


class DocumentError(KghierError):
    """A hierarchy document that fails schema validation."""

    def __init__(self, violations):
        super().__init__("invalid hierarchy document: " + "; ".join(violations))
        self.violations = list(violations)
