"""Exception types shared across the package."""


class LatticePolyError(Exception):
    """Base class for all package errors."""


class ZeroDenominator(LatticePolyError):
    """A substitution or division produced a zero denominator."""


class NotSeriesExpandable(LatticePolyError):
    """The denominator vanishes at the expansion point."""


class UnknownVariable(LatticePolyError):
    """A variable name or index outside the supported set."""


class InvalidPartition(LatticePolyError):
    """Input is not a weakly decreasing sequence of nonnegative integers."""


class WidthTooSmall(LatticePolyError):
    """The lattice has fewer columns than the boundary partitions need."""


class GridTooSmall(LatticePolyError):
    """The expansion grid cannot hold the given partitions."""


class NotTriangular(LatticePolyError):
    """The target basis is not unitriangular against the source."""


class UnknownIdentity(LatticePolyError):
    """No verification suite is registered under this name."""


class NotHorizontalStrip(LatticePolyError):
    """The skew shape lam/mu is not a horizontal strip."""
