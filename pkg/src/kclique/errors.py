"""Exception hierarchy shared by the library and the CLI."""


class KCliqueError(Exception):
    """Base class for all errors raised by kclique."""


class UsageError(KCliqueError, ValueError):
    """Invalid argument: out-of-range vertex, bad k, bad worker count, ..."""


class ParseError(KCliqueError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class FormatError(KCliqueError):
    """Binary CSR cache is truncated, has bad magic, or an unknown version."""


class CliqueOverflowError(KCliqueError, OverflowError):
    """A clique count or work total no longer fits in an unsigned 64-bit integer.

    ``partial`` is True when the overflow happened before every vertex had
    been processed, i.e. the run was cut short rather than merely summed.
    """

    def __init__(self, message, partial=False):
        self.partial = partial
        super().__init__(message)


class OracleGuardError(KCliqueError):
    """The brute-force oracle refused an input that is too large for it."""
