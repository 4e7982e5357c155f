"""Weyl quantization: symbol to kernel to matrix.

A symbol a(x, xi) lives on the symbol grid of the base grid (2N half-step rows in x,
N Wigner frequencies), tagged (TIME, FREQ). Its kernel is
K(x, y) = (2 pi)^{-1} int a((x + y)/2, xi) e^{i (x - y) xi} dxi = Wig^{-1}[a](x, y).
"""
import logging
import warnings

import numpy as np

from ..exceptions import ConsistencyWarning, NonSquareGrid, SpaceTagMismatch
from ..grids import SampledFunction, SpaceTag, check_same_grid, inner_product
from ..transforms import wigner_like, wigner_like_inv
from ..utils import relative_error
from ._matrix import OperatorMatrix

logger = logging.getLogger(__name__)

KERNEL_CHECK_TOL = 1e-10


def _check_symbol(a):
    base = a.grid.base_of_symbol()
    if base is None:
        raise NonSquareGrid(f"Symbols live on a (2N, L) x (N, pi/(2 step)) grid, but found {a.grid.axes}")
    if a.tags != (SpaceTag.TIME, SpaceTag.FREQ):
        raise SpaceTagMismatch(f"Symbols are tagged (TIME, FREQ), but found {[t.name for t in a.tags]}")
    return base


def weyl_kernel_explicit(a):
    """Kernel by direct quadrature of the inverse Fourier transform in xi, O(N^3)."""
    base = _check_symbol(a)
    n = base.shape[0]
    step, = base.steps
    xi = a.grid.points(1)
    freq_step = a.grid.steps[1]
    p, q = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    differences = (p - q) * step
    phases = np.exp(1j * differences[..., None] * xi[None, None, :])
    values = freq_step / (2 * np.pi) * np.sum(a.values[p + q] * phases, axis=-1)
    return SampledFunction(base * base, values, truncated=a.truncated)


def weyl_kernel(a, check=False):
    """Kernel K = Wig^{-1}[a] of the Weyl operator of `a`.

    Parameters
    ----------
    a : SampledFunction
        Symbol on a symbol grid, tags (TIME, FREQ).
    check : bool, optional
        Compare with `weyl_kernel_explicit` and warn (ConsistencyWarning) when the two
        paths differ by more than 1e-10, by default False

    Returns
    -------
    K : SampledFunction
        N x N kernel, tags (TIME, TIME).
    """
    _check_symbol(a)
    K = wigner_like_inv(a)
    if check:
        error = relative_error(K.values, weyl_kernel_explicit(a).values)
        logger.debug("weyl_kernel two-path error %.3g", error)
        if error > KERNEL_CHECK_TOL:
            warnings.warn(f"Weyl kernel paths differ by {error:.3g}", ConsistencyWarning)
    return K


def symbol_from_kernel(K):
    """Weyl symbol of an operator with kernel K, the inverse of `weyl_kernel`."""
    return wigner_like(K)


def weyl_matrix(a):
    """Dense matrix of a^w(x, D), entries[n, s] = K(x_n, x_s)."""
    base = _check_symbol(a)
    K = weyl_kernel(a)
    return OperatorMatrix(base, K.values, meta={"construction": "weyl"})


def weyl_apply(a, f):
    return weyl_matrix(a).apply(f)


def wigner_symbol(g, f):
    """Wig(g, f) on the symbol grid, wigner_like(g (x) conj(f))."""
    check_same_grid(g, f)
    tensor = SampledFunction(g.grid * g.grid, np.outer(g.values, np.conj(f.values)),
                             truncated=g.truncated or f.truncated)
    return wigner_like(tensor)


def symbol_pairing(a, b):
    """<a, b> on the symbol grid, weights (step/2)(dual_step/2)."""
    _check_symbol(a)
    return inner_product(a, b)


def weak_pairing_check(a, f, g):
    """Both sides of <a^w f, g> = (2 pi)^{-1} <a, Wig(g, f)>.

    Parameters
    ----------
    a : SampledFunction
        Symbol on the symbol grid of the grid of `f`.
    f, g : SampledFunction
        1-d functions on the same grid.

    Returns
    -------
    lhs, rhs : complex
    """
    check_same_grid(f, g)
    base = _check_symbol(a)
    if base != f.grid:
        raise NonSquareGrid(f"Symbol grid of {base.axes} does not match functions on {f.grid.axes}")
    lhs = inner_product(weyl_apply(a, f), g)
    rhs = symbol_pairing(a, wigner_symbol(g, f)) / (2 * np.pi)
    return lhs, rhs
