import logging
from dataclasses import dataclass, field, replace
from enum import IntEnum

import numpy as np

from ..exceptions import DimensionMismatch, GridMismatch, SpaceTagMismatch
from ..utils import is_power_of_two

logger = logging.getLogger(__name__)


class SpaceTag(IntEnum):
    TIME = 0
    FREQ = 1


@dataclass(frozen=True)
class Grid:
    """Uniform grid centered at 0, one `(N, L)` pair per axis.

    Axis points are x_n = -L + n*step with step = 2L/N, n = 0..N-1. The dual axis
    (frequencies of the DFT bridge) is `(N, pi/step)`, so step * dual_step * N = 2 pi.

    Parameters
    ----------
    axes : tuple of (int, float)
        Sample count (a power of two) and half extent of every axis.
    """
    axes: tuple

    def __post_init__(self):
        axes = tuple((int(n), float(half)) for n, half in self.axes)
        if len(axes) not in (1, 2, 4):
            raise DimensionMismatch(f"Grids have 1, 2 or 4 axes, but found {len(axes)}")
        for n, half in axes:
            if not is_power_of_two(n):
                raise ValueError(f"Axis size must be a power of two, but found: {n}")
            if not half > 0:
                raise ValueError(f"Axis half extent must be positive, but found: {half}")
        object.__setattr__(self, "axes", axes)

    @classmethod
    def uniform(cls, n, half_extent, ndim=1):
        """Grid with `ndim` identical axes."""
        return cls(((n, half_extent),) * ndim)

    @property
    def ndim(self):
        return len(self.axes)

    @property
    def shape(self):
        return tuple(n for n, _ in self.axes)

    @property
    def size(self):
        return int(np.prod(self.shape))

    @property
    def steps(self):
        return tuple(2 * half / n for n, half in self.axes)

    @property
    def dual_steps(self):
        return tuple(2 * np.pi / (n * step) for (n, _), step in zip(self.axes, self.steps))

    @property
    def weight(self):
        """Quadrature weight, the product of the axis steps."""
        return float(np.prod(self.steps))

    def points(self, axis=0):
        n, half = self.axes[axis]
        return -half + np.arange(n) * self.steps[axis]

    def mesh(self):
        return np.meshgrid(*(self.points(k) for k in range(self.ndim)), indexing="ij")

    def center_index(self, axis=0):
        """Index of the point 0 on `axis`."""
        return self.axes[axis][0] // 2

    def dual(self):
        """Grid of the DFT bridge frequencies, axis by axis."""
        return Grid(tuple((n, np.pi / step) for (n, _), step in zip(self.axes, self.steps)))

    def subgrid(self, axes):
        return Grid(tuple(self.axes[k] for k in axes))

    def __mul__(self, other):
        return Grid(self.axes + other.axes)

    # Phase-space lattices attached to a 1-d base grid
    def stft_lattice(self):
        """Shift x_n and modulation xi_k lattice of the STFT, `(N, L) x (N, pi/step)`."""
        self._require_1d()
        return self * self.dual()

    def wigner_lattice(self):
        """Lattice of `cross_wigner`: x on the grid, frequencies with step dual_step/2."""
        self._require_1d()
        (n, half), = self.axes
        return Grid(((n, half), (n, np.pi / (2 * self.steps[0]))))

    def symbol_grid(self):
        """Weyl symbol grid: 2N half steps in x and the N Wigner frequencies."""
        self._require_1d()
        (n, half), = self.axes
        return Grid(((2 * n, half), (n, np.pi / (2 * self.steps[0]))))

    def base_of_symbol(self):
        """Inverse of `symbol_grid`, or None when this grid is not a symbol grid."""
        if self.ndim != 2:
            return None
        (n2, half), (n, freq_half) = self.axes
        if n2 != 2 * n:
            return None
        base = Grid(((n, half),))
        if not np.isclose(freq_half, np.pi / (2 * base.steps[0]), rtol=1e-12):
            return None
        return base

    def _require_1d(self):
        if self.ndim != 1:
            raise DimensionMismatch(f"Phase-space lattices are built on 1-d grids, but found {self.ndim} axes")


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Complex samples of a function on a grid.

    Values are stored read-only, row-major in axis order. The quadrature weight is
    the product of the grid steps (step in x on TIME axes, in xi on FREQ axes).

    Parameters
    ----------
    grid : Grid
    values : array-like
        Sample values, reshaped to `grid.shape`.
    tags : tuple of SpaceTag, optional
        Space tag of each axis, by default all TIME.
    truncated : bool, optional
        The sampled function does not decay and has been cut at the grid boundary.
    provenance : dict, optional
        Free-form description of how the samples were produced (fixture, file hash...).
    """
    grid: Grid
    values: np.ndarray
    tags: tuple = None
    truncated: bool = False
    provenance: dict = field(default=None)

    def __post_init__(self):
        values = np.array(self.values, dtype=complex)
        if values.size != self.grid.size:
            raise DimensionMismatch(f"{values.size} values for a grid of shape {self.grid.shape}")
        values = values.reshape(self.grid.shape)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        tags = self.tags if self.tags is not None else (SpaceTag.TIME,) * self.grid.ndim
        if isinstance(tags, (SpaceTag, int)):
            tags = (tags,) * self.grid.ndim
        tags = tuple(SpaceTag(t) for t in tags)
        if len(tags) != self.grid.ndim:
            raise DimensionMismatch(f"{len(tags)} space tags for {self.grid.ndim} axes")
        object.__setattr__(self, "tags", tags)
        object.__setattr__(self, "provenance", dict(self.provenance or {}))

    @property
    def ndim(self):
        return self.grid.ndim

    @property
    def weight(self):
        return self.grid.weight

    def with_values(self, values, **changes):
        """Same grid and tags, new values."""
        return replace(self, values=values, **changes)

    def conj(self):
        return self.with_values(np.conj(self.values))

    def norm(self):
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.weight))

    def __add__(self, other):
        check_same_grid(self, other)
        return self.with_values(self.values + other.values, truncated=self.truncated or other.truncated)

    def __sub__(self, other):
        check_same_grid(self, other)
        return self.with_values(self.values - other.values, truncated=self.truncated or other.truncated)

    def __mul__(self, scalar):
        return self.with_values(scalar * self.values)

    __rmul__ = __mul__

    def __repr__(self):
        return (f"SampledFunction(shape={self.grid.shape}, tags={[t.name for t in self.tags]}, "
                f"truncated={self.truncated})")


def check_same_grid(f, g):
    """Raise GridMismatch unless `f` and `g` share grid and space tags."""
    if f.grid != g.grid:
        raise GridMismatch(f"Grids differ: {f.grid.axes} and {g.grid.axes}")
    if f.tags != g.tags:
        raise GridMismatch(f"Space tags differ: {f.tags} and {g.tags}")


def check_tags(f, tag):
    if any(t != tag for t in f.tags):
        raise SpaceTagMismatch(f"All axes must be {tag.name}, but found {[t.name for t in f.tags]}")


def inner_product(f, g):
    """<f, g> = sum f conj(g) times the quadrature weight (conjugate-linear in `g`).

    Parameters
    ----------
    f, g : SampledFunction
        Same grid and tags.

    Returns
    -------
    value : complex
    """
    check_same_grid(f, g)
    return complex(np.vdot(g.values, f.values) * f.weight)
