"""Error taxonomy shared across the package.

Everything a caller can provoke with bad input derives from ConelabError;
the command line maps those to exit code 2 and any other exception to exit
code 3 (internal invariant breach).
"""


class ConelabError(Exception):
    """Base class for all caller-facing errors."""


class InvalidArgument(ConelabError, ValueError):
    """Generic precondition violation: bad bound, malformed record, ..."""


class NonSymmetricGram(ConelabError):
    """Gram matrix is not symmetric."""


class WrongSignature(ConelabError):
    """Gram matrix does not have signature (1, n, 0)."""

    def __init__(self, inertia):
        self.inertia = inertia
        super().__init__(
            "expected signature (1, n, 0), got inertia %r" % (inertia,)
        )


class NoOrientationFound(ConelabError):
    """Bounded search found no vector of positive square."""


class EmptyWallSquares(ConelabError):
    """The set of admissible wall squares is empty."""


class DimensionMismatch(ConelabError):
    """Vector length does not match the lattice rank."""


class ZeroVector(ConelabError):
    """The zero vector was passed where a nonzero one is required."""


class NonNegativeMirror(ConelabError):
    """Reflection mirror must have negative square."""


class NonIntegralReflection(ConelabError):
    """2*pair(x, v) is not divisible by quad(v).

    When raised mid-walk, the walk so far is attached as partial_trace.
    """

    def __init__(self, message, partial_trace=None):
        self.partial_trace = partial_trace
        super().__init__(message)


class NotPositiveBase(ConelabError):
    """Base vector h must lie in the positive cone."""


class XOutsideClosedCone(ConelabError):
    """Vector x must lie in the closed positive cone and be nonzero."""


class InfiniteWallSet(ConelabError):
    """The requested wall set is provably infinite.

    Walls through an isotropic ray on a lattice of rank >= 3 form an
    infinite family, so no complete finite answer exists.
    """


class NotPositive(ConelabError):
    """Vector must have positive square and positive orientation pairing."""


class NotIsotropic(ConelabError):
    """Vector must be nonzero isotropic on the positive side of the cone."""


class NotAmpleBase(ConelabError):
    """Base point must be positive and in the interior of a chamber."""


class OnWall(ConelabError):
    """The query point lies on a wall, so its chamber is ambiguous."""

    def __init__(self, wall):
        self.wall = wall
        super().__init__("point lies on wall %r" % (wall,))


class RankNotThree(ConelabError):
    """Disk rendering needs a lattice of rank exactly 3."""


class UnwritablePath(ConelabError):
    """Output path could not be written."""


class UnknownLattice(ConelabError):
    """Catalog name not recognised."""

    def __init__(self, name, available):
        self.name = name
        self.available = tuple(available)
        super().__init__(
            "unknown lattice %r; available: %s" % (name, ", ".join(self.available))
        )
