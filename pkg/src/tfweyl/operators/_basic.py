import logging

import numpy as np

from ..exceptions import DimensionMismatch, SpaceTagMismatch
from ..grids import Grid, SpaceTag
from ._matrix import OperatorMatrix

logger = logging.getLogger(__name__)


def _require_1d(f, tag=SpaceTag.TIME):
    if f.ndim != 1:
        raise DimensionMismatch(f"Expected a 1-d function, but found {f.ndim} axes")
    if f.tags[0] != tag:
        raise SpaceTagMismatch(f"Expected a {tag.name} axis, but found {f.tags[0].name}")


def multiplication_operator(a1):
    """Multiplication by a1, entries[n, n] = a1(x_n) / step."""
    _require_1d(a1)
    step, = a1.grid.steps
    return OperatorMatrix(a1.grid, np.diag(a1.values / step), meta={"construction": "multiplication"})


def convolution_operator(b):
    """Convolution with b, entries[n, s] = b(x_n - x_s), zero when x_n - x_s is off the grid."""
    _require_1d(b)
    n = b.grid.shape[0]
    index = np.arange(n)[:, None] - np.arange(n)[None, :] + n // 2
    valid = (index >= 0) & (index < n)
    entries = np.where(valid, b.values[np.clip(index, 0, n - 1)], 0)
    return OperatorMatrix(b.grid, entries, meta={"construction": "convolution"})


def op_tensor_delta(a1):
    """Weyl operator of the symbol a1(x) delta(xi): f -> (2 pi)^{-1} (a1(./2) * I f).

    The kernel is (2 pi)^{-1} a1((x + y)/2), so `a1` is sampled on the half-step grid
    `(2N, L)` of the N-point base grid; entries[n, s] = (2 pi)^{-1} a1 at half-step index n + s.

    Parameters
    ----------
    a1 : SampledFunction
        1-d function on a `(2N, L)` grid.

    Returns
    -------
    T : OperatorMatrix
        On the base grid `(N, L)`.
    """
    _require_1d(a1)
    (n2, half), = a1.grid.axes
    base = Grid(((n2 // 2, half),))
    n = n2 // 2
    index = np.arange(n)[:, None] + np.arange(n)[None, :]
    entries = a1.values[index] / (2 * np.pi)
    return OperatorMatrix(base, entries, meta={"construction": "tensor_delta"})


def op_delta_tensor(a2, grid=None):
    """Weyl operator of the symbol delta(x) a2(xi): f(t) -> 2 b(2t) f(-t) with b the inverse Fourier transform of a2.

    b(2 x_n) is computed by direct quadrature over the samples of `a2`, since 2 x_n
    leaves the dual grid of `a2`.

    Parameters
    ----------
    a2 : SampledFunction
        1-d function tagged FREQ.
    grid : Grid, optional
        Base grid of the operator, by default the dual of `a2.grid`.

    Returns
    -------
    T : OperatorMatrix
        entries[n, (-n) mod N] = 2 b(2 x_n) / step.
    """
    _require_1d(a2, SpaceTag.FREQ)
    grid = grid or a2.grid.dual()
    n = grid.shape[0]
    step, = grid.steps
    xi = a2.grid.points(0)
    t = 2 * grid.points(0)
    b = a2.grid.steps[0] / (2 * np.pi) * (np.exp(1j * t[:, None] * xi[None, :]) @ a2.values)
    entries = np.zeros((n, n), dtype=complex)
    rows = np.arange(n)
    entries[rows, (-rows) % n] = 2 * b / step
    return OperatorMatrix(grid, entries, meta={"construction": "delta_tensor"})
