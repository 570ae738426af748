"""Exception types shared across the package."""


class MalformedInputError(ValueError):
    """An edge, vertex or certificate field does not fit the graph it refers to."""


class GraphFormatError(MalformedInputError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class PreconditionError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    """Exact computation refused because the input exceeds a configured size limit."""


class ContractViolation(RuntimeError):
    """A constructed certificate failed its own contract.

    Raised instead of returning anything unverified; seeing this means either a
    bug or a counterexample to one of the planar base contracts.
    """


class K5MinorError(Exception):
    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"K5 minor: {verdict}")
