import logging
from dataclasses import dataclass, field

import numpy as np
import pandas as pd
from scipy import linalg

from ..exceptions import ConvergenceFailure, DimensionMismatch, GridMismatch
from ..grids import SampledFunction, SpaceTag, save_field

logger = logging.getLogger(__name__)

OPERATOR_KIND = 16
# (T f)(x_n) = sum_s entries[n, s] f(x_s) step
CONVENTION_STEP_WEIGHTED = 1


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    """Dense realization of an operator on sampled functions.

    Parameters
    ----------
    grid : Grid
        1-d grid with N points.
    entries : ndarray of shape (N, N)
        Kernel values, `(T f)(x_n) = sum_s entries[n, s] f(x_s) step`.
    meta : dict, optional
        How the matrix was built.
    """
    grid: object
    entries: np.ndarray
    meta: dict = field(default=None)

    def __post_init__(self):
        n = self.grid.shape[0]
        entries = np.array(self.entries, dtype=complex)
        if self.grid.ndim != 1 or entries.shape != (n, n):
            raise DimensionMismatch(f"Operator entries of shape {entries.shape} on grid {self.grid.axes}")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "meta", dict(self.meta or {}))

    @property
    def step(self):
        return self.grid.steps[0]

    @property
    def weighted(self):
        """Matrix of the operator acting on sample vectors, entries * step."""
        return self.entries * self.step

    def apply(self, f):
        if f.grid != self.grid:
            raise GridMismatch(f"Operator on {self.grid.axes} applied to a function on {f.grid.axes}")
        return SampledFunction(self.grid, self.weighted @ f.values, truncated=f.truncated)

    def spectrum(self, k=None):
        return spectrum(self, k)

    def spectrum_frame(self, k=None):
        """Eigenvalues as a DataFrame with columns (index, re, im, modulus)."""
        values = np.asarray(self.spectrum(k))
        return pd.DataFrame({"index": np.arange(len(values)), "re": values.real, "im": values.imag,
                             "modulus": np.abs(values)})

    def save(self, path):
        """Save with the binary field format (dims=2) and the step-weighted convention byte."""
        kernel = SampledFunction(self.grid * self.grid, self.entries, tags=(SpaceTag.TIME, SpaceTag.TIME))
        return save_field(kernel, path, kind=OPERATOR_KIND, convention=CONVENTION_STEP_WEIGHTED, meta=self.meta)

    def __repr__(self):
        return f"OperatorMatrix(N={self.grid.shape[0]}, meta={self.meta})"


def spectrum(T, k=None):
    """Eigenvalues of the quadrature-weighted operator sorted by decreasing modulus.

    Parameters
    ----------
    T : OperatorMatrix
    k : int, optional
        Number of eigenvalues to return, by default all N.

    Returns
    -------
    values : list of complex
        Real-valued (as complex) when the matrix is Hermitian.

    Raises
    ------
    ConvergenceFailure
        When the eigensolver does not converge.
    """
    n = T.grid.shape[0]
    k = n if k is None else k
    if not 1 <= k <= n:
        raise ValueError(f"`k` must be in [1, {n}], but found: {k}")
    matrix = T.weighted
    try:
        if np.allclose(matrix, matrix.conj().T, rtol=0, atol=1e-12 * max(1.0, np.abs(matrix).max())):
            values = linalg.eigvalsh((matrix + matrix.conj().T) / 2).astype(complex)
        else:
            values = linalg.eigvals(matrix)
    except linalg.LinAlgError as error:
        raise ConvergenceFailure(f"Eigensolver failed: {error}") from error
    order = np.argsort(-np.abs(values), kind="stable")
    logger.debug("spectrum of %dx%d operator, largest modulus %.3g", n, n, np.abs(values).max())
    return [complex(v) for v in values[order[:k]]]
