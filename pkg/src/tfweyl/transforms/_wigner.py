"""Cross-Wigner and Wigner-like transforms on exact half-step lattices.

The lag variable runs over y = 2 m step, so x +- y/2 always lands on sample points and no
interpolation is needed. Frequencies of the result have spacing dual_step / 2 and cover
[-pi / (2 step), pi / (2 step)).
"""
import logging
from functools import lru_cache

import numpy as np

from ..exceptions import DimensionMismatch, NonSquareGrid, SpaceTagMismatch
from ..grids import (SampledFunction, SpaceTag, check_same_grid, dft_bridge, fourier, idft_bridge, reflect)
from ._field import FieldKind, PhaseSpaceField

logger = logging.getLogger(__name__)

__all__ = ["cross_wigner", "wigner_like", "wigner_like_inv", "symbol_lags", "symbol_from_lags", "fourier_wigner",
           "fourier_wigner_relation"]


@lru_cache(maxsize=8)
def _pair_indices(n):
    """Index pairs (p, q) with x_p + x_q = 2 x_h and lag index M for the 2N half-step rows h."""
    h = np.arange(2 * n)[:, None]
    m = np.arange(n)[None, :] - n // 2
    p = (h + 1) // 2 + m
    q = h // 2 - m
    valid = (p >= 0) & (p < n) & (q >= 0) & (q < n)
    return np.clip(p, 0, n - 1), np.clip(q, 0, n - 1), valid


def _lag_origin(half, step, parity):
    # first lag of even rows is y = -2L, odd rows are offset by one step
    return -2 * half + parity * step


def _lag_transform(lags, half, step, parity):
    return 2 * step * dft_bridge(lags, _lag_origin(half, step, parity), 2 * step, -np.pi / (2 * step), axis=1)


def _lag_inverse(rows, half, step, parity):
    freq_step = np.pi / (rows.shape[1] * step)
    return freq_step / (2 * np.pi) * idft_bridge(rows, -np.pi / (2 * step), freq_step,
                                                 _lag_origin(half, step, parity), axis=1)


def _base_axis(grid):
    n, half = grid.axes[0]
    return n, half, grid.steps[0]


def cross_wigner(g, f):
    """Cross-Wigner transform Wig(g, f)(x, xi) = int g(x + y/2) conj(f(x - y/2)) e^{-i y xi} dy.

    Parameters
    ----------
    g, f : SampledFunction
        1-d functions on the same grid.

    Returns
    -------
    W : PhaseSpaceField
        Kind WIGNER on `grid.wigner_lattice()`: x on the sample points, frequencies with
        spacing dual_step / 2.
    """
    check_same_grid(g, f)
    if g.ndim != 1:
        raise DimensionMismatch(f"cross_wigner analyzes 1-d functions, but found {g.ndim} axes")
    n, half, step = _base_axis(g.grid)
    p, q, valid = _pair_indices(n)
    p, q, valid = p[0::2], q[0::2], valid[0::2]
    lags = np.where(valid, g.values[p] * np.conj(f.values[q]), 0)
    values = _lag_transform(lags, half, step, 0)
    return PhaseSpaceField(FieldKind.WIGNER, g.grid, g.grid.wigner_lattice(), values,
                           truncated=g.truncated or f.truncated)


def wigner_like(F):
    """Wigner-like transform Wig[F] = F_2(T F) with T F(x, y) = F(x + y/2, x - y/2).

    Parameters
    ----------
    F : SampledFunction
        Function on a square 2-d grid, both axes TIME.

    Returns
    -------
    W : SampledFunction
        On `base.symbol_grid()` (2N half-step rows, N Wigner frequencies), tags (TIME, FREQ).
        Even rows coincide with `cross_wigner` when F = g (x) conj(f).

    Raises
    ------
    NonSquareGrid
        When the two axes of F differ.
    """
    grid = F.grid
    if grid.ndim != 2 or grid.axes[0] != grid.axes[1]:
        raise NonSquareGrid(f"wigner_like needs a square 2-d grid, but found {grid.axes}")
    if F.tags != (SpaceTag.TIME, SpaceTag.TIME):
        raise SpaceTagMismatch(f"wigner_like needs (TIME, TIME) tags, but found {[t.name for t in F.tags]}")
    base = grid.subgrid((0,))
    n, half, step = _base_axis(base)
    p, q, valid = _pair_indices(n)
    lags = np.where(valid, F.values[p, q], 0)
    values = np.empty((2 * n, n), dtype=complex)
    for parity in (0, 1):
        values[parity::2] = _lag_transform(lags[parity::2], half, step, parity)
    return SampledFunction(base.symbol_grid(), values, tags=(SpaceTag.TIME, SpaceTag.FREQ),
                           truncated=F.truncated, provenance=F.provenance)


def wigner_like_inv(W):
    """Left inverse of `wigner_like`: inverse lag transform per row, then the pairs (p, q) are read back.

    Parameters
    ----------
    W : SampledFunction
        On a symbol grid, tags (TIME, FREQ).

    Returns
    -------
    F : SampledFunction
        N x N, tags (TIME, TIME).

    Raises
    ------
    NonSquareGrid
        When `W` is not laid out on a symbol grid.
    """
    base = W.grid.base_of_symbol()
    lags, _ = symbol_lags(W)
    n = base.shape[0]
    p, q = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    h = p + q
    values = lags[h, p - (h + 1) // 2 + n // 2]
    return SampledFunction(base * base, values, truncated=W.truncated, provenance=W.provenance)


def symbol_lags(W):
    """Inverse Fourier transform in xi of a symbol, row by row, on the exact lag points.

    Returns
    -------
    lags : ndarray of shape (2N, N)
        (2 pi)^{-1} int W(x_h, xi) e^{i y xi} dxi at y = lag_points[h, m].
    lag_points : ndarray of shape (2N, N)
        Lags y of every row, -2L + 2 m step on even rows and shifted by one step on odd rows.
    """
    base = W.grid.base_of_symbol()
    if base is None:
        raise NonSquareGrid(f"Grid {W.grid.axes} is not the symbol grid of any base grid")
    if W.tags != (SpaceTag.TIME, SpaceTag.FREQ):
        raise SpaceTagMismatch(f"Symbols are tagged (TIME, FREQ), but found {[t.name for t in W.tags]}")
    n, half, step = _base_axis(base)
    lags = np.empty((2 * n, n), dtype=complex)
    points = np.empty((2 * n, n))
    for parity in (0, 1):
        lags[parity::2] = _lag_inverse(W.values[parity::2], half, step, parity)
        points[parity::2] = _lag_origin(half, step, parity) + 2 * step * np.arange(n)
    return lags, points


def symbol_from_lags(lags, W):
    """Inverse of `symbol_lags`: a symbol on the grid of `W` from its row lag values."""
    base = W.grid.base_of_symbol()
    n, half, step = _base_axis(base)
    values = np.empty((2 * n, n), dtype=complex)
    for parity in (0, 1):
        values[parity::2] = _lag_transform(lags[parity::2], half, step, parity)
    return W.with_values(values)


def fourier_wigner(f, g):
    """Two-dimensional Fourier transform of Wig(f, g), on the dual of the Wigner lattice."""
    W = cross_wigner(f, g)
    transformed = fourier(W.as_function(tags=(SpaceTag.TIME, SpaceTag.TIME)))
    return PhaseSpaceField(FieldKind.FOURIER_WIGNER, W.base_grid, transformed.grid, transformed.values,
                           truncated=W.truncated)


def fourier_wigner_relation(f, g):
    """Both sides of F Wig(f, g)(u, v) = pi Wig(f, I g)(-v/2, u/2) at the common lattice points.

    Returns
    -------
    lhs, rhs : ndarray of shape (N, N - 1)
        Indexed by (u_j, v_l) for l = 1..N-1, where -v_l / 2 is a sample point.
    """
    n = f.grid.shape[0]
    lhs = fourier_wigner(f, g).values[:, 1:]
    reflected = cross_wigner(f, reflect(g)).values
    rows = n - np.arange(1, n)
    rhs = np.pi * reflected[rows, :].T
    return lhs, rhs
