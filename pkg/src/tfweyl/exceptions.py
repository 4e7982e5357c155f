"""
Exceptions and warnings raised by `tfweyl`.

Every error derives from `TfWeylError`, itself a `ValueError`, so callers that
only care about bad input can keep catching `ValueError`.
"""

__all__ = ["TfWeylError", "DimensionMismatch", "SpaceTagMismatch", "OffLattice", "GridMismatch",
           "ZeroWindow", "DegeneratePair", "NonSquareGrid", "LatticeIncompatible",
           "MemoryBudgetExceeded", "BoundaryAttained", "InconclusiveGrid", "InvalidWeight",
           "ConvergenceFailure", "ConfigError", "BoundaryDecayWarning", "ConsistencyWarning"]


class TfWeylError(ValueError):
    """Base class of every error raised by the package."""


class DimensionMismatch(TfWeylError):
    """A fixture or an array does not match the dimension of the grid."""


class SpaceTagMismatch(TfWeylError):
    """An axis is tagged TIME where FREQ is required, or the other way round."""


class OffLattice(TfWeylError):
    """A shift or modulation is not an integer multiple of the lattice step."""


class GridMismatch(TfWeylError):
    """Two sampled functions live on different grids."""


class ZeroWindow(TfWeylError):
    """The analysis window vanishes identically."""


class DegeneratePair(TfWeylError):
    """Analysis and synthesis windows are orthogonal, <gamma, psi> = 0."""


class NonSquareGrid(TfWeylError):
    """A kernel or a symbol is not laid out on the expected square geometry."""


class LatticeIncompatible(TfWeylError):
    """Two phase-space lattices do not intersect exactly."""


class MemoryBudgetExceeded(TfWeylError):
    """A phase-space field would hold more values than the configured budget."""


class BoundaryAttained(TfWeylError):
    """The supremum of a Young conjugate is attained at the end of the s-grid."""

    def __init__(self, t, s_max):
        self.t = t
        self.s_max = s_max
        super().__init__(f"sup over s is attained at s_max={s_max} for t={t}; increase s_max")


class InconclusiveGrid(TfWeylError):
    """The lattice carries no usable information for a decay diagnostic."""


class InvalidWeight(TfWeylError):
    """Weight parameters outside the admissible family range."""


class ConvergenceFailure(TfWeylError):
    """The eigensolver did not converge."""


class ConfigError(TfWeylError):
    """A run configuration cannot be parsed or is inconsistent."""


class BoundaryDecayWarning(RuntimeWarning):
    """A decaying fixture is not small at the grid boundary."""


class ConsistencyWarning(RuntimeWarning):
    """Two independent computation paths disagree beyond roundoff."""
