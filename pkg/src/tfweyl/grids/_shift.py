import numpy as np

from ..exceptions import OffLattice
from ._grid import SampledFunction

__all__ = ["lattice_index", "phase_space_shift", "reflect", "reflect_index"]


def lattice_index(value, step, name="shift", atol=1e-9):
    """Integer k with value = k * step, or OffLattice."""
    k = np.round(value / step)
    if abs(value / step - k) > atol:
        raise OffLattice(f"{name} {value} is not a multiple of the lattice step {step}")
    return int(k)


def _per_axis(value, ndim):
    value = np.atleast_1d(np.asarray(value, dtype=float))
    if value.size == 1:
        value = np.repeat(value, ndim)
    if value.size != ndim:
        raise OffLattice(f"Expected {ndim} components, but found {value.size}")
    return value


def phase_space_shift(f, x=0.0, xi=0.0):
    """Time-frequency shift Pi(x, xi) f(t) = e^{i t.xi} f(t - x) on the sample lattice.

    The translation is a circular index shift, the modulation uses the exact sample
    phases; both must be lattice multiples (step and dual step of each axis).

    Parameters
    ----------
    f : SampledFunction
    x : float or array-like, optional
        Translation per axis, by default 0.0
    xi : float or array-like, optional
        Modulation per axis, by default 0.0

    Returns
    -------
    g : SampledFunction
    """
    grid = f.grid
    x = _per_axis(x, grid.ndim)
    xi = _per_axis(xi, grid.ndim)
    values = f.values
    for axis in range(grid.ndim):
        shift = lattice_index(x[axis], grid.steps[axis], "shift")
        lattice_index(xi[axis], grid.dual_steps[axis], "modulation")
        values = np.roll(values, shift, axis=axis)
    phase = np.ones(grid.shape, dtype=complex)
    for axis, t in enumerate(grid.mesh()):
        phase = phase * np.exp(1j * t * xi[axis])
    return f.with_values(phase * values)


def reflect_index(n):
    """Index map n -> (-n) mod N, pairing x_n with -x_n on a symmetric grid."""
    return (-np.arange(n)) % n


def reflect(f):
    """Reflection I f(t) = f(-t) (circular at the unpaired point -L)."""
    values = f.values
    for axis, n in enumerate(f.grid.shape):
        values = np.take(values, reflect_index(n), axis=axis)
    return f.with_values(values)
