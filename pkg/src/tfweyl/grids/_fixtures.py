import logging
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import special

from ..exceptions import BoundaryDecayWarning, DimensionMismatch
from ._grid import SampledFunction, SpaceTag

logger = logging.getLogger(__name__)

BOUNDARY_DECAY_TOL = 1e-10


class FixtureKind(str, Enum):
    GAUSSIAN = "gaussian"
    HERMITE = "hermite"
    CHIRP_SYMBOL = "chirp_symbol"
    BUMP = "bump"
    CONSTANT = "constant"
    TENSOR = "tensor"


def hermite_function(order, t):
    """L2-normalized Hermite function (2^n n! sqrt(pi))^{-1/2} H_n(t) e^{-t^2/2}."""
    t = np.asarray(t, dtype=float)
    norm = 1.0 / np.sqrt(2.0 ** order * special.factorial(order) * np.sqrt(np.pi))
    return norm * special.eval_hermite(order, t) * np.exp(-t * t / 2)


def bump(t, a=-1.0, b=1.0, smoothness=1.0):
    """Compactly supported bump exp(-smoothness / (1 - s^2)) on [a, b], zero elsewhere."""
    t = np.asarray(t, dtype=float)
    s = (2 * t - a - b) / (b - a)
    inside = np.abs(s) < 1
    out = np.zeros_like(t)
    out[inside] = np.exp(-smoothness / (1 - s[inside] ** 2))
    return out


@dataclass(frozen=True)
class Fixture:
    """Specification of a test function, sampled with `sample`.

    Use the constructors `gaussian`, `hermite`, `chirp_symbol`, `bump`, `constant`
    and `tensor`. `conj()` returns the complex conjugate fixture.
    """
    kind: FixtureKind
    params: tuple = ()
    conjugate: bool = False

    @property
    def options(self):
        return dict(self.params)

    # constructors
    @classmethod
    def gaussian(cls, center=0.0, width=1.0, modulation=0.0):
        """exp(-|x - center|^2 / (2 width^2)) e^{i modulation . x}; tuples give a radial 2-d Gaussian."""
        center = tuple(np.atleast_1d(center).astype(float).tolist())
        modulation = tuple(np.broadcast_to(np.atleast_1d(modulation), (len(center),)).astype(float).tolist())
        return cls(FixtureKind.GAUSSIAN, (("center", center), ("width", float(width)),
                                          ("modulation", modulation)))

    @classmethod
    def hermite(cls, order):
        return cls(FixtureKind.HERMITE, (("order", int(order)),))

    @classmethod
    def chirp_symbol(cls, factor, sign=-1, axis=1):
        """Symbol e^{2 i sign x xi} factor(.), the factor acting on `axis` (1: xi, 0: x).

        `factor` is a 1-d Fixture or a 1-d SampledFunction on the matching axis.
        """
        if sign not in (-1, 1):
            raise ValueError(f"`sign` must be -1 or 1, but found: {sign}")
        return cls(FixtureKind.CHIRP_SYMBOL, (("factor", factor), ("sign", int(sign)), ("axis", int(axis))))

    @classmethod
    def bump(cls, a=-1.0, b=1.0, smoothness=1.0):
        if not b > a:
            raise ValueError(f"Bump support needs a < b, but found [{a}, {b}]")
        return cls(FixtureKind.BUMP, (("a", float(a)), ("b", float(b)), ("smoothness", float(smoothness))))

    @classmethod
    def constant(cls, value=1.0):
        return cls(FixtureKind.CONSTANT, (("value", complex(value)),))

    @classmethod
    def tensor(cls, first, second):
        return cls(FixtureKind.TENSOR, (("first", first), ("second", second)))

    def conj(self):
        return Fixture(self.kind, self.params, not self.conjugate)

    @property
    def arity(self):
        """Number of variables, None when the fixture adapts to any grid."""
        opts = self.options
        if self.kind is FixtureKind.GAUSSIAN:
            return len(opts["center"])
        if self.kind in (FixtureKind.HERMITE, FixtureKind.BUMP):
            return 1
        if self.kind is FixtureKind.CHIRP_SYMBOL:
            return 2
        if self.kind is FixtureKind.TENSOR:
            # a constant factor takes one variable
            return (opts["first"].arity or 1) + (opts["second"].arity or 1)
        return None

    @property
    def decaying(self):
        if self.kind is FixtureKind.TENSOR:
            return self.options["first"].decaying and self.options["second"].decaying
        return self.kind in (FixtureKind.GAUSSIAN, FixtureKind.HERMITE, FixtureKind.BUMP)

    def evaluate(self, *coordinates):
        """Pointwise values on broadcastable coordinate arrays."""
        values = self._evaluate(coordinates)
        return np.conj(values) if self.conjugate else values

    def _evaluate(self, coordinates):
        opts = self.options
        kind = self.kind
        if kind is FixtureKind.GAUSSIAN:
            squared = sum((x - c) ** 2 for x, c in zip(coordinates, opts["center"]))
            phase = sum(x * m for x, m in zip(coordinates, opts["modulation"]))
            return np.exp(-squared / (2 * opts["width"] ** 2)) * np.exp(1j * phase)
        if kind is FixtureKind.HERMITE:
            return hermite_function(opts["order"], coordinates[0]).astype(complex)
        if kind is FixtureKind.BUMP:
            return bump(coordinates[0], opts["a"], opts["b"], opts["smoothness"]).astype(complex)
        if kind is FixtureKind.CONSTANT:
            return np.full(np.broadcast(*coordinates).shape, opts["value"], dtype=complex)
        if kind is FixtureKind.CHIRP_SYMBOL:
            x, xi = coordinates
            factor = _factor_values(opts["factor"], coordinates[opts["axis"]])
            return np.exp(2j * opts["sign"] * x * xi) * factor
        first, second = opts["first"], opts["second"]
        k = first.arity or 1
        return first.evaluate(*coordinates[:k]) * second.evaluate(*coordinates[k:])

    def to_dict(self):
        out = {"kind": self.kind.value}
        for key, value in self.params:
            if isinstance(value, Fixture):
                value = value.to_dict()
            elif isinstance(value, SampledFunction):
                value = {"sampled": list(value.grid.axes)}
            elif isinstance(value, complex):
                value = [value.real, value.imag] if value.imag else value.real
            elif isinstance(value, tuple):
                value = list(value)
            out[key] = value
        if self.conjugate:
            out["conjugate"] = True
        return out

    @classmethod
    def from_dict(cls, data):
        """Parse the JSON form, e.g. `{"kind": "gaussian", "center": 0, "width": 1}`."""
        data = dict(data)
        kind = FixtureKind(data.pop("kind"))
        conjugate = bool(data.pop("conjugate", False))
        if kind is FixtureKind.GAUSSIAN:
            fixture = cls.gaussian(data.get("center", 0.0), data.get("width", 1.0), data.get("modulation", 0.0))
        elif kind is FixtureKind.HERMITE:
            fixture = cls.hermite(data.get("order", 0))
        elif kind is FixtureKind.BUMP:
            fixture = cls.bump(data.get("a", -1.0), data.get("b", 1.0), data.get("smoothness", 1.0))
        elif kind is FixtureKind.CONSTANT:
            value = data.get("value", 1.0)
            fixture = cls.constant(complex(*value) if isinstance(value, (list, tuple)) else value)
        elif kind is FixtureKind.CHIRP_SYMBOL:
            fixture = cls.chirp_symbol(cls.from_dict(data["factor"]), data.get("sign", -1), data.get("axis", 1))
        else:
            fixture = cls.tensor(cls.from_dict(data["first"]), cls.from_dict(data["second"]))
        return fixture.conj() if conjugate else fixture


def _factor_values(factor, coordinate):
    if isinstance(factor, Fixture):
        return factor.evaluate(coordinate)
    # sampled factor, must live on the matching axis points
    values = np.asarray(factor.values).ravel()
    points = factor.grid.points(0)
    axis_points = np.unique(coordinate)
    if len(axis_points) != len(points) or not np.allclose(axis_points, points, atol=1e-12):
        raise DimensionMismatch("Sampled chirp factor does not live on the symbol axis it multiplies")
    return values[np.searchsorted(points, coordinate.clip(points[0], points[-1]))]


def _boundary_modulus(values):
    worst = 0.0
    for axis in range(values.ndim):
        for end in (0, -1):
            worst = max(worst, float(np.max(np.abs(np.take(values, end, axis=axis)))))
    return worst


def sample(spec, grid, tags=None, check_decay=True):
    """Evaluate a fixture on every grid point.

    Parameters
    ----------
    spec : Fixture
    grid : Grid
    tags : tuple of SpaceTag, optional
        Space tags of the result, by default all TIME.
    check_decay : bool, optional
        Warn when a decaying fixture is not small at the boundary, by default True

    Returns
    -------
    f : SampledFunction
        `truncated` is set for non-decaying fixtures.

    Raises
    ------
    DimensionMismatch
        When the fixture arity differs from the grid dimension.
    """
    if spec.arity is not None and spec.arity != grid.ndim:
        raise DimensionMismatch(f"Fixture {spec.kind.value} has {spec.arity} variables, grid has {grid.ndim}")
    values = spec.evaluate(*grid.mesh())
    if check_decay and spec.decaying:
        worst = _boundary_modulus(values)
        if worst > BOUNDARY_DECAY_TOL:
            warnings.warn(f"Fixture {spec.kind.value} reaches {worst:.3g} at the grid boundary", BoundaryDecayWarning)
    return SampledFunction(grid, values, tags=tags if tags is not None else (SpaceTag.TIME,) * grid.ndim,
                           truncated=not spec.decaying, provenance={"fixture": spec.to_dict()})
