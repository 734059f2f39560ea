"""Error types raised by the toolkit"""


class EdgecalcError(ValueError):
    """Base class for all toolkit errors"""


class InvalidPoint(EdgecalcError):
    """Point violates the invariants of its type"""


class ZeroPoint(InvalidPoint):
    """The origin has no hyperspherical coordinates"""


class DegenerateAngles(InvalidPoint):
    """Point lies on a chart locus where some angles are undefined"""


class WrongChart(EdgecalcError):
    """Operation is only implemented for another chart"""


class OutOfDomain(EdgecalcError):
    """Argument outside the domain of a coefficient function"""


class CoalescenceOverlap(EdgecalcError):
    """Point lies on the electron-electron edge inside chart U1"""


class OnSingularSet(EdgecalcError):
    """Point lies on a Coulomb singularity"""


class NonpositiveArgument(EdgecalcError):
    """Bessel function evaluated at z <= 0"""


class OrderOverflow(EdgecalcError):
    """Bessel order beyond the supported maximum"""


class TruncationBound(EdgecalcError):
    """Spherical-harmonic truncation would bind the kernel/cokernel count"""


class ConfigError(EdgecalcError):
    """Invalid run configuration"""


class InvalidReport(EdgecalcError):
    """Assembled report does not match the report schema"""


class ReportWriteError(EdgecalcError, OSError):
    """Report could not be written to the requested path"""
