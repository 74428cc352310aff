"""Exception types shared across the library."""


class GrifcharError(Exception):
    """Base class for all errors raised by this package."""


class IllegalRank(GrifcharError):
    """Rank outside the legal range for the requested family."""


class DimensionMismatch(GrifcharError):
    """Operands do not live in the same (co)weight space."""


class InvalidPair(GrifcharError):
    """Root-string endpoints must satisfy alpha != +-beta."""


class NotDominant(GrifcharError):
    """A dominant (co)weight was required."""


class EmptySystem(GrifcharError):
    """Operation needs at least one weight."""


class CentralKernelViolated(GrifcharError):
    """The representation must have central kernel (some simple coroot
    pairs to zero with every weight)."""


class CentralMu(GrifcharError):
    """The cocharacter is central (pairs to zero with every root)."""


class InvalidPrime(GrifcharError):
    """p must be a prime number >= 2."""


class InvariantViolated(GrifcharError):
    """A mathematically guaranteed identity failed.  This signals an
    implementation bug, never an admissible input state."""


class EquivalenceViolated(GrifcharError):
    """The cocharacter-side and character-side p-closeness verdicts
    disagree; like InvariantViolated this indicates a bug."""


class SweepOverflow(GrifcharError):
    """The int64 fast path cannot guarantee exactness for these sizes."""
