import logging

import numpy as np
from joblib import Parallel, delayed

from ..exceptions import (DegeneratePair, DimensionMismatch, LatticeIncompatible, ZeroWindow)
from ..grids import SampledFunction, check_same_grid, dft_bridge, idft_bridge, inner_product
from ..utils import check_n_jobs
from ._field import FieldKind, PhaseSpaceField

logger = logging.getLogger(__name__)

__all__ = ["stft", "stft_adjoint", "stft_invert", "shifted_windows"]


def check_window(psi, name="window"):
    if not np.any(psi.values):
        raise ZeroWindow(f"The {name} vanishes identically")


def shifted_windows(window, shifts, conjugate=False):
    """Rows psi(x_n - x_j) for every shift index j, zero outside the grid.

    Parameters
    ----------
    window : ndarray of shape (N,)
    shifts : array-like of int
        Shift indices j, the shift being x_j = (j - N/2) step.
    conjugate : bool, optional
        Conjugate the window, by default False

    Returns
    -------
    rows : ndarray of shape (len(shifts), N)
    """
    n = len(window)
    padded = np.zeros(2 * n, dtype=complex)
    padded[n // 2:n // 2 + n] = np.conj(window) if conjugate else window
    columns = np.arange(n)[None, :] - np.asarray(shifts)[:, None] + n
    return padded[columns]


def _sub_axis(lattice_axis, full_axis, name):
    # index stride of a sub-lattice axis inside a full axis with the same extent
    (m, half), (n, full_half) = lattice_axis, full_axis
    if not np.isclose(half, full_half, rtol=1e-12) or n % m:
        raise LatticeIncompatible(f"{name} axis {lattice_axis} is not a sub-lattice of {full_axis}")
    return n // m


def _stft_rows(f_values, psi_values, shifts, grid):
    n, half = grid.axes[0]
    step = grid.steps[0]
    products = f_values[None, :] * shifted_windows(psi_values, shifts, conjugate=True)
    return step * dft_bridge(products, -half, step, -np.pi / step, axis=1)


def stft(f, psi, lattice=None, n_jobs=None):
    """Short-time Fourier transform V_psi f(x, xi) = <f, M_xi T_x psi>.

    For every shift x_j the samples f(y) conj(psi(y - x_j)) (window zero-filled outside
    the grid) go through the DFT bridge, so
    V_psi f(x_j, xi_k) = step * sum_n f(x_n) conj(psi(x_n - x_j)) e^{-i x_n xi_k}.

    Parameters
    ----------
    f : SampledFunction
        1-d function.
    psi : SampledFunction
        Window on the same grid.
    lattice : Grid, optional
        Sub-lattice of `grid.stft_lattice()` (same extents, sizes dividing N), by
        default the full lattice.
    n_jobs : int, optional
        Parallel jobs over blocks of shifts, by default None (1)

    Returns
    -------
    V : PhaseSpaceField
        Kind STFT, axes (shift, modulation).

    Raises
    ------
    GridMismatch
        When `f` and `psi` live on different grids.
    ZeroWindow
        When `psi` vanishes.
    """
    check_same_grid(f, psi)
    check_window(psi)
    grid = f.grid
    if grid.ndim != 1:
        raise DimensionMismatch(f"stft analyzes 1-d functions, but found {grid.ndim} axes")
    full = grid.stft_lattice()
    lattice = full if lattice is None else lattice
    if lattice.ndim != 2:
        raise LatticeIncompatible(f"STFT lattices have 2 axes, but found {lattice.ndim}")
    shift_stride = _sub_axis(lattice.axes[0], full.axes[0], "Shift")
    mod_stride = _sub_axis(lattice.axes[1], full.axes[1], "Modulation")

    shifts = np.arange(0, grid.shape[0], shift_stride)
    n_jobs = check_n_jobs(n_jobs)
    if n_jobs == 1:
        rows = _stft_rows(f.values, psi.values, shifts, grid)
    else:
        blocks = np.array_split(shifts, n_jobs)
        parts = Parallel(n_jobs=n_jobs)(
            delayed(_stft_rows)(f.values, psi.values, block, grid) for block in blocks if len(block))
        rows = np.concatenate(parts, axis=0)
    values = rows[:, ::mod_stride]
    logger.debug("stft on lattice %s (strides %d, %d)", lattice.shape, shift_stride, mod_stride)
    return PhaseSpaceField(FieldKind.STFT, grid, lattice, values, truncated=f.truncated or psi.truncated,
                           meta={"shift_stride": shift_stride, "modulation_stride": mod_stride})


def stft_adjoint(V, gamma):
    """Adjoint V*_gamma F = sum_z F(z) M_xi T_x gamma * step * dual_step on the full lattice.

    Parameters
    ----------
    V : PhaseSpaceField
        Field on the full STFT lattice of `gamma.grid`.
    gamma : SampledFunction
        Synthesis window.

    Returns
    -------
    f : SampledFunction
    """
    check_window(gamma, "synthesis window")
    grid = gamma.grid
    if V.base_grid != grid or V.lattice != grid.stft_lattice():
        raise LatticeIncompatible("stft_adjoint needs a field on the full STFT lattice of the window grid")
    n, half = grid.axes[0]
    step, = grid.steps
    dual_step, = grid.dual_steps
    # modulation sums: G[j, n] = sum_k F[j, k] e^{i x_n xi_k}
    modulated = idft_bridge(V.values, -np.pi / step, dual_step, -half, axis=1)
    windows = shifted_windows(gamma.values, np.arange(n))
    values = step * dual_step * np.sum(modulated * windows, axis=0)
    return SampledFunction(grid, values, truncated=V.truncated)


def stft_invert(V, psi, gamma):
    """Reconstruct f = (2 pi)^{-1} <gamma, psi>^{-1} V*_gamma V_psi f.

    Parameters
    ----------
    V : PhaseSpaceField
        V_psi f on the full lattice.
    psi : SampledFunction
        Analysis window used to compute `V`.
    gamma : SampledFunction
        Synthesis window.

    Returns
    -------
    f : SampledFunction

    Raises
    ------
    DegeneratePair
        When |<gamma, psi>| <= 1e-12 ||gamma|| ||psi||.
    """
    check_window(psi)
    check_window(gamma, "synthesis window")
    pairing = inner_product(gamma, psi)
    if abs(pairing) <= 1e-12 * gamma.norm() * psi.norm():
        raise DegeneratePair(f"<gamma, psi> = {pairing:.3g}, the windows are orthogonal")
    out = stft_adjoint(V, gamma)
    return out * (1 / (2 * np.pi * pairing))
