import logging

import numpy as np
from joblib import Parallel, delayed
from scipy.signal import fftconvolve

from ..exceptions import DimensionMismatch, LatticeIncompatible
from ..grids import SampledFunction, check_same_grid
from ..transforms import stft, stft_adjoint, symbol_from_lags, symbol_lags
from ..utils import check_n_jobs
from ._matrix import OperatorMatrix
from ._weyl import weyl_matrix, wigner_symbol

logger = logging.getLogger(__name__)


def _check_mask(a, grid):
    lattice = grid.stft_lattice()
    if a.grid != lattice:
        raise LatticeIncompatible(f"Localization symbols live on the STFT lattice {lattice.axes}, "
                                  f"but found {a.grid.axes}")


def localization_compose(a, psi, gamma, f):
    """L^a_{psi,gamma} f = V*_gamma(a . V_psi f).

    Parameters
    ----------
    a : SampledFunction
        Symbol on the full STFT lattice of the grid of `f`.
    psi, gamma : SampledFunction
        Analysis and synthesis windows.
    f : SampledFunction

    Returns
    -------
    g : SampledFunction
    """
    check_same_grid(f, psi)
    check_same_grid(f, gamma)
    _check_mask(a, f.grid)
    V = stft(f, psi)
    masked = V.with_values(a.values * V.values)
    out = stft_adjoint(masked, gamma)
    return SampledFunction(out.grid, out.values, truncated=a.truncated or f.truncated)


def _columns(a, psi, gamma, columns):
    n = psi.grid.shape[0]
    out = []
    for s in columns:
        unit = np.zeros(n, dtype=complex)
        unit[s] = 1
        out.append(localization_compose(a, psi, gamma, psi.with_values(unit, truncated=False)).values)
    return np.array(out).T


def localization_matrix(a, psi, gamma, n_jobs=None):
    """Dense matrix of the composition path, column s = L(e_s) / step.

    Parameters
    ----------
    a : SampledFunction
        Symbol on the full STFT lattice.
    psi, gamma : SampledFunction
        Analysis and synthesis windows.
    n_jobs : int, optional
        Parallel jobs over blocks of columns, by default None (1)

    Returns
    -------
    T : OperatorMatrix
    """
    check_same_grid(psi, gamma)
    _check_mask(a, psi.grid)
    n = psi.grid.shape[0]
    step, = psi.grid.steps
    n_jobs = check_n_jobs(n_jobs)
    blocks = [block for block in np.array_split(np.arange(n), n_jobs) if len(block)]
    parts = Parallel(n_jobs=n_jobs)(delayed(_columns)(a, psi, gamma, block) for block in blocks)
    entries = np.concatenate(parts, axis=1) / step
    return OperatorMatrix(psi.grid, entries, meta={"construction": "localization"})


def convolve_with_wigner(a, W):
    """a * W on the symbol grid: zero-padded linear convolution scaled by (step/2)(dual_step/2).

    Parameters
    ----------
    a, W : SampledFunction
        On the same symbol grid.

    Returns
    -------
    c : SampledFunction
    """
    if a.grid != W.grid or a.tags != W.tags:
        raise LatticeIncompatible(f"Convolution needs a common symbol grid, found {a.grid.axes} and {W.grid.axes}")
    if a.grid.base_of_symbol() is None:
        raise LatticeIncompatible(f"Grid {a.grid.axes} is not a symbol grid")
    rows, columns = a.grid.shape
    full = fftconvolve(a.values, W.values, mode="full")
    values = full[rows // 2:rows // 2 + rows, columns // 2:columns // 2 + columns] * a.grid.weight
    return SampledFunction(a.grid, values, tags=a.tags, truncated=a.truncated or W.truncated)


def fourier_multiplier(W, mask):
    """F^{-1}(m . F W) for a multiplier m(v) acting on the dual of the frequency axis.

    The Fourier transform in xi of a symbol is read exactly on the lag points of every
    row, F_xi W(x, v) = 2 pi (lag value at y = -v), so a 0/1 mask keeps or drops lags.

    Parameters
    ----------
    W : SampledFunction
        Symbol on a symbol grid.
    mask : callable
        Vectorized v -> m(v).

    Returns
    -------
    c : SampledFunction
    """
    lags, points = symbol_lags(W)
    return symbol_from_lags(lags * mask(-points), W)


def localization_via_weyl(a, psi, gamma, a_hat=None):
    """Matrix of L^a_{psi,gamma} = (a * Wig(gamma, psi))^w.

    Parameters
    ----------
    a : SampledFunction or None
        Symbol on the symbol grid of the window grid.
    psi, gamma : SampledFunction
        Analysis and synthesis windows.
    a_hat : callable, optional
        Fourier multiplier used instead of `a`, see `fourier_multiplier`.

    Returns
    -------
    T : OperatorMatrix
    """
    check_same_grid(psi, gamma)
    if psi.ndim != 1:
        raise DimensionMismatch(f"Windows are 1-d, but found {psi.ndim} axes")
    W = wigner_symbol(gamma, psi)
    if a_hat is not None:
        symbol = fourier_multiplier(W, a_hat)
    else:
        if a.grid != W.grid:
            raise LatticeIncompatible(f"Symbol grid {a.grid.axes} differs from the Wigner grid {W.grid.axes}")
        symbol = convolve_with_wigner(a, W)
    logger.debug("localization symbol on %s", symbol.grid.shape)
    T = weyl_matrix(symbol)
    return OperatorMatrix(T.grid, T.entries, meta={"construction": "localization_via_weyl"})
