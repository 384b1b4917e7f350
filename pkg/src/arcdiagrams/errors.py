"""Exception types shared across the library.

Three families, matching the command-line exit codes: text that cannot be
parsed at all (exit 1), inputs that parse but break a domain rule (exit 2),
and guards that refuse oversized computations (exit 3).
"""


class DiagramError(ValueError):
    """Base class for every error raised by this library."""

    exit_code = 2


class ParseError(DiagramError):
    """Input text or letters could not be interpreted."""

    exit_code = 1


class CapError(DiagramError):
    """A size guard refused to start the computation."""

    exit_code = 3


# ---- parse failures ----

class NotAPermutation(ParseError):
    pass


class NotNormalized(ParseError):
    pass


class TooSmall(ParseError):
    pass


class EmptyBlock(ParseError):
    pass


class BlockTooLong(ParseError):
    pass


class AlphabetMismatch(ParseError):
    pass


class NotAWord(ParseError):
    pass


# ---- domain rule violations ----

class LengthMismatch(DiagramError):
    pass


class HasKeratoids(DiagramError):
    pass


class NotAGenerator(DiagramError):
    pass


class NotRepresentable(DiagramError):
    pass


class DegreeExceeded(DiagramError):
    pass


class WouldCycle(DiagramError):
    pass


class AlreadyPresent(DiagramError):
    pass


class NotPresent(DiagramError):
    pass


class OutOfRange(DiagramError):
    pass


class SizeMismatch(DiagramError):
    pass


# ---- size guards ----

class TooLarge(CapError):
    pass


class CapExceeded(CapError):
    pass
