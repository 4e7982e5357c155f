import logging
import warnings

import numpy as np

from ..exceptions import ConsistencyWarning, DimensionMismatch
from ..grids import check_same_grid, dft_bridge
from ..utils import relative_error
from ._field import FieldKind, PhaseSpaceField
from ._stft import shifted_windows, stft
from ._wigner import fourier_wigner

logger = logging.getLogger(__name__)

__all__ = ["cross_ambiguity", "ambiguity_wigner_relation"]

CROSS_CHECK_TOL = 1e-10


def cross_ambiguity(f, g, check=True):
    """Cross-ambiguity function A(f, g)(x, xi) = int f(t) conj(g(t - x)) e^{-i (t - x/2) xi} dt.

    Every shift row is an independent DFT bridge with origin -L - x/2. When `check` is
    set, the result is compared with e^{i x xi / 2} V_g f and a ConsistencyWarning is
    emitted if they differ by more than 1e-10 (relative).

    Parameters
    ----------
    f, g : SampledFunction
        1-d functions on the same grid.
    check : bool, optional
        Cross-check against the STFT form, by default True

    Returns
    -------
    A : PhaseSpaceField
        Kind AMBIGUITY on the full STFT lattice.
    """
    check_same_grid(f, g)
    if f.ndim != 1:
        raise DimensionMismatch(f"cross_ambiguity analyzes 1-d functions, but found {f.ndim} axes")
    grid = f.grid
    n, half = grid.axes[0]
    step, = grid.steps
    lattice = grid.stft_lattice()
    shifts = lattice.points(0)
    windows = shifted_windows(g.values, np.arange(n), conjugate=True)
    values = np.empty((n, n), dtype=complex)
    for j, x in enumerate(shifts):
        values[j] = step * dft_bridge(f.values * windows[j], -half - x / 2, step, -np.pi / step)
    A = PhaseSpaceField(FieldKind.AMBIGUITY, grid, lattice, values, truncated=f.truncated or g.truncated)

    if check:
        x, xi = lattice.mesh()
        other = np.exp(0.5j * x * xi) * stft(f, g).values
        error = relative_error(values, other)
        logger.debug("cross_ambiguity two-path error %.3g", error)
        if error > CROSS_CHECK_TOL:
            warnings.warn(f"Cross-ambiguity paths differ by {error:.3g}", ConsistencyWarning)
    return A


def ambiguity_wigner_relation(f, g):
    """Both sides of F Wig(f, g)(u, v) = 2 pi A(f, g)(-v, u) at the common lattice points.

    -v_l is a shift of the STFT lattice for l = N/4 + 1 .. 3N/4.

    Returns
    -------
    lhs, rhs : ndarray of shape (N, N/2)
    """
    n = f.grid.shape[0]
    columns = np.arange(n // 4 + 1, 3 * n // 4 + 1)
    lhs = fourier_wigner(f, g).values[:, columns]
    A = cross_ambiguity(f, g, check=False).values
    rhs = 2 * np.pi * A[3 * n // 2 - 2 * columns, :].T
    return lhs, rhs
