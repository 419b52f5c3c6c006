"""Exception hierarchy shared by every module."""


class PolyBlocksError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class MalformedPolynomial(PolyBlocksError, ValueError):
    pass


class CompanionUndefined(PolyBlocksError, ValueError):
    pass


class PreconditionFailed(PolyBlocksError, ValueError):
    pass


class SquarefulReduction(PreconditionFailed):
    pass


class RamifiedPrime(PreconditionFailed):
    pass


class RootInRange(PreconditionFailed):
    pass


class LemmaViolation(PolyBlocksError, AssertionError):
    """A close-root pair expected from f~(r) = 0 mod p was not found.

    Besides bugs this is raised for cubics irreducible mod 3: their three
    roots differ by elements of F_3, yet none of them lies in F_3.
    """


class ZeroValue(PolyBlocksError, ValueError):
    def __init__(self, offset):
        super().__init__(f"f(n+{offset}) = 0")
        self.offset = offset


class IsolatedOffset(PolyBlocksError):
    def __init__(self, offset):
        super().__init__(f"f(n+{offset}) is coprime to every other value in the block")
        self.offset = offset


class DuplicateModulus(PolyBlocksError, ValueError):
    pass


class InsufficientHarvest(PolyBlocksError):
    pass


class NoBasePrimes(PolyBlocksError):
    pass


class BudgetExceeded(PolyBlocksError):
    pass
