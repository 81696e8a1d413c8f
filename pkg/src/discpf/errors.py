"""Exception hierarchy shared by all modules."""


class DiscpfError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(DiscpfError, ValueError):
    pass


class NotSquare(DimensionMismatch):
    pass


class NotSkewSymmetric(DiscpfError, ValueError):
    pass


class NotUnimodular(DiscpfError, ValueError):
    pass


class GcdNotOne(DiscpfError, ValueError):
    pass


class TooLarge(DiscpfError, ValueError):
    """Raised by brute-force oracles instead of silently truncating."""


class NotAssociative(DiscpfError):
    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"(e{i} e{j}) e{k} != e{i} (e{j} e{k}) (0-indexed basis)")


class NotIdentity(DiscpfError):
    def __init__(self, side, i):
        self.side = side
        self.index = i
        super().__init__(f"one_coords is not a {side} identity on e{i} (0-indexed basis)")


class InternalGcdViolation(DiscpfError):
    pass


class NotSymmetric(DiscpfError, ValueError):
    pass


class CornerNotRank(DiscpfError, ValueError):
    pass


class ParityViolation(DiscpfError, ValueError):
    def __init__(self, i):
        # 1-indexed, matching the b_ii numbering of the tracelike condition
        self.index = i
        super().__init__(f"b_{i}{i} has parity different from b_1{i}^2")


class RankNotMultipleOf4(DiscpfError, ValueError):
    pass


class OddDiagonal(DiscpfError, ValueError):
    pass


class NotAGroup(DiscpfError, ValueError):
    pass


class NotMonic(DiscpfError, ValueError):
    pass


class InvariantViolation(DiscpfError, AssertionError):
    """An internal consistency check failed. Never swallowed."""


class FormatError(DiscpfError, ValueError):
    """A ring or certificate file is syntactically valid JSON but malformed."""
