import logging
import time
from dataclasses import dataclass

import numpy as np
from joblib import Parallel, delayed

from ..exceptions import DimensionMismatch, LatticeIncompatible, MemoryBudgetExceeded
from ..grids import Grid, check_same_grid, dft_bridge
from ..utils import check_n_jobs, is_int
from ._field import FieldKind, PhaseSpaceField
from ._stft import check_window

logger = logging.getLogger(__name__)

__all__ = ["SubLattice", "symbol_stft4", "MEMORY_BUDGET"]

MEMORY_BUDGET = 2 ** 28


@dataclass(frozen=True)
class SubLattice:
    """Outer lattice of the 4-variable STFT of a symbol.

    Shifts (x, xi) take every `stride`-th sample point inside the central
    `shift_fraction` of each axis; modulations (eta, y) take every `stride`-th point of
    the dual axes.

    Parameters
    ----------
    stride : int, optional
        Power of two, by default 4
    shift_fraction : float, optional
        1.0 (whole axis) or 0.5 (interior half), by default 1.0
    """
    stride: int = 4
    shift_fraction: float = 1.0

    def __post_init__(self):
        if not is_int(self.stride) or self.stride < 1 or self.stride & (self.stride - 1):
            raise ValueError(f"`stride` must be a power of two, but found: {self.stride}")
        if self.shift_fraction not in (1.0, 0.5):
            raise ValueError(f"`shift_fraction` must be 1.0 or 0.5, but found: {self.shift_fraction}")

    def shift_axis(self, axis):
        """Grid axis and sample indices of the shifts along one base axis `(N, L)`."""
        n, half = axis
        count = int(n * self.shift_fraction) // self.stride
        if count < 2:
            raise LatticeIncompatible(f"Stride {self.stride} leaves fewer than 2 shifts on an axis of {n} points")
        first = int(n * (1 - self.shift_fraction)) // 2
        return (count, half * self.shift_fraction), first + self.stride * np.arange(count)

    def modulation_axis(self, axis):
        n, half = axis
        step = 2 * half / n
        if n // self.stride < 2:
            raise LatticeIncompatible(f"Stride {self.stride} leaves fewer than 2 modulations on {n} points")
        return (n // self.stride, np.pi / step), self.stride

    def lattice(self, grid):
        shift_axes = [self.shift_axis(axis)[0] for axis in grid.axes]
        mod_axes = [self.modulation_axis(axis)[0] for axis in grid.axes]
        return Grid(tuple(shift_axes + mod_axes))

    def to_dict(self):
        return {"stride": self.stride, "shift_fraction": self.shift_fraction}


def _padded_conj(window):
    # conj(window) placed so that padded[i - j + N] = conj(window[i - j + N/2]), zero elsewhere
    n0, n1 = window.shape
    padded = np.zeros((2 * n0, 2 * n1), dtype=complex)
    padded[n0 // 2:n0 // 2 + n0, n1 // 2:n1 // 2 + n1] = np.conj(window)
    return padded


def _stft4_block(a, padded, rows, columns, grid, mod_stride):
    (n0, half0), (n1, half1) = grid.axes
    step0, step1 = grid.steps
    out = np.empty((len(rows), len(columns), n0 // mod_stride, n1 // mod_stride), dtype=complex)
    for r, j0 in enumerate(rows):
        for c, j1 in enumerate(columns):
            product = a * padded[n0 - j0:2 * n0 - j0, n1 - j1:2 * n1 - j1]
            spectrum = dft_bridge(product, -half0, step0, -np.pi / step0, axis=0)
            spectrum = dft_bridge(spectrum, -half1, step1, -np.pi / step1, axis=1)
            out[r, c] = spectrum[::mod_stride, ::mod_stride]
    return step0 * step1 * out


def symbol_stft4(a, window, outer_lattice=None, memory_budget=MEMORY_BUDGET, n_jobs=None):
    """STFT of a 2-variable function with a 2-variable window.

    V_window a(x, xi, eta, y) = int int a(u, v) conj(window(u - x, v - xi)) e^{-i (u eta + v y)} du dv,
    with the shifted window zero-filled outside the grid. Axis order of the result is
    (x, xi, eta, y). Both space tags of the input are kept: on a (TIME, FREQ) grid the
    second shift runs over frequencies.

    Parameters
    ----------
    a : SampledFunction
        2-d function (a symbol).
    window : SampledFunction
        Window on the same grid.
    outer_lattice : SubLattice, optional
        By default `SubLattice(stride=4)`.
    memory_budget : int, optional
        Largest admitted number of values, by default 2**28
    n_jobs : int, optional
        Parallel jobs over blocks of shifts, by default None (1)

    Returns
    -------
    V : PhaseSpaceField
        Kind STFT4.

    Raises
    ------
    MemoryBudgetExceeded
        When the 4-d lattice holds more than `memory_budget` values.
    """
    check_same_grid(a, window)
    check_window(window)
    if a.ndim != 2:
        raise DimensionMismatch(f"symbol_stft4 analyzes 2-d functions, but found {a.ndim} axes")
    outer_lattice = outer_lattice or SubLattice()
    grid = a.grid
    lattice = outer_lattice.lattice(grid)
    if lattice.size > memory_budget:
        raise MemoryBudgetExceeded(f"4-d lattice {lattice.shape} holds {lattice.size} values, "
                                   f"budget is {memory_budget}")
    _, rows = outer_lattice.shift_axis(grid.axes[0])
    _, columns = outer_lattice.shift_axis(grid.axes[1])
    padded = _padded_conj(window.values)

    start = time.perf_counter()
    n_jobs = check_n_jobs(n_jobs)
    if n_jobs == 1:
        values = _stft4_block(a.values, padded, rows, columns, grid, outer_lattice.stride)
    else:
        blocks = [block for block in np.array_split(rows, n_jobs) if len(block)]
        parts = Parallel(n_jobs=n_jobs)(
            delayed(_stft4_block)(a.values, padded, block, columns, grid, outer_lattice.stride)
            for block in blocks)
        values = np.concatenate(parts, axis=0)
    logger.debug("symbol_stft4 lattice %s in %.2fs", lattice.shape, time.perf_counter() - start)
    meta = dict(outer_lattice.to_dict(), tags=[t.name for t in a.tags])
    return PhaseSpaceField(FieldKind.STFT4, grid, lattice, values, truncated=a.truncated or window.truncated,
                           meta=meta)
