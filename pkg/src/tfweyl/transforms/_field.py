import logging
from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np

from ..exceptions import DimensionMismatch
from ..grids import Grid, SampledFunction, SpaceTag, lattice_index, save_field

logger = logging.getLogger(__name__)


class FieldKind(IntEnum):
    STFT = 1
    WIGNER = 2
    AMBIGUITY = 3
    STFT4 = 4
    FOURIER_WIGNER = 5


@dataclass(frozen=True, eq=False)
class PhaseSpaceField:
    """Values of a time-frequency transform on a phase-space lattice.

    Parameters
    ----------
    kind : FieldKind
        Transform that produced the values.
    base_grid : Grid
        Grid of the analyzed function(s).
    lattice : Grid
        Phase-space lattice, 2 axes (shift, modulation) or 4 axes (x, xi, eta, y).
    values : ndarray
        Complex values, shape `lattice.shape`.
    truncated : bool, optional
        Some input was a non-decaying function cut at the grid boundary.
    meta : dict, optional
        Lattice metadata (strides, space tags of the input...).
    """
    kind: FieldKind
    base_grid: Grid
    lattice: Grid
    values: np.ndarray
    truncated: bool = False
    meta: dict = field(default=None)

    def __post_init__(self):
        values = np.array(self.values, dtype=complex)
        if values.shape != self.lattice.shape:
            raise DimensionMismatch(f"Field values of shape {values.shape} on a lattice of shape {self.lattice.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "kind", FieldKind(self.kind))
        object.__setattr__(self, "meta", dict(self.meta or {}))

    @property
    def shape(self):
        return self.values.shape

    @property
    def ndim(self):
        return self.values.ndim

    @property
    def weight(self):
        """Quadrature weight of one lattice cell."""
        return self.lattice.weight

    def points(self, axis):
        return self.lattice.points(axis)

    def index(self, *coordinates):
        """Lattice multi-index of a phase-space point (OffLattice when it is not a lattice point)."""
        if len(coordinates) != self.ndim:
            raise DimensionMismatch(f"{len(coordinates)} coordinates for a {self.ndim}-d lattice")
        out = []
        for axis, value in enumerate(coordinates):
            n, half = self.lattice.axes[axis]
            k = lattice_index(value + half, self.lattice.steps[axis], f"coordinate {axis}")
            if not 0 <= k < n:
                raise DimensionMismatch(f"Coordinate {value} is outside lattice axis {axis}")
            out.append(k)
        return tuple(out)

    def at(self, *coordinates):
        return complex(self.values[self.index(*coordinates)])

    def as_function(self, tags=None):
        """The field as a SampledFunction on its lattice, tagged TIME for shifts and FREQ for modulations."""
        if tags is None:
            half = self.ndim // 2
            tags = (SpaceTag.TIME,) * half + (SpaceTag.FREQ,) * half
        return SampledFunction(self.lattice, self.values, tags=tags, truncated=self.truncated,
                               provenance={"field": self.kind.name})

    def with_values(self, values, kind=None):
        return PhaseSpaceField(kind if kind is not None else self.kind, self.base_grid, self.lattice, values,
                               truncated=self.truncated, meta=self.meta)

    def save(self, path):
        """Save with the binary field format, the kind byte and the lattice metadata in the trailer."""
        meta = dict(self.meta, base_grid=[list(axis) for axis in self.base_grid.axes])
        return save_field(self.as_function(), path, kind=int(self.kind), meta=meta)

    def __repr__(self):
        return f"PhaseSpaceField(kind={self.kind.name}, shape={self.shape}, truncated={self.truncated})"
