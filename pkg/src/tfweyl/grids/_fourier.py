"""DFT bridge between standard FFTs and the continuous Fourier convention.

fourier(f)(xi) = int e^{-i t xi} f(t) dt, inverse with the factor (2 pi)^{-d}. On a grid
x_n = x0 + n dx and frequencies xi_k = xi0 + k dxi, dx dxi N = 2 pi, the sums
sum_n e^{-i x_n xi_k} v_n factor into phase twiddles around one FFT.
"""
import logging

import numpy as np
from scipy import fft as sp_fft

from ..exceptions import SpaceTagMismatch
from ._grid import SampledFunction, SpaceTag, check_tags

logger = logging.getLogger(__name__)

__all__ = ["dft_bridge", "idft_bridge", "fourier", "inverse_fourier", "partial_fourier"]


def _along(vector, axis, ndim):
    shape = [1] * ndim
    shape[axis] = -1
    return np.reshape(vector, shape)


def dft_bridge(values, x0, dx, xi0, axis=-1):
    """Exact evaluation of sum_n exp(-i x_n xi_k) v_n along `axis`.

    Parameters
    ----------
    values : ndarray
        Samples v_n, n = 0..N-1 along `axis`.
    x0, dx : float
        Origin and step of the sample points.
    xi0 : float
        Origin of the output frequencies; their step is 2 pi / (N dx).
    axis : int, optional
        Axis to transform, by default -1

    Returns
    -------
    out : ndarray
        Same shape as `values`.
    """
    values = np.asarray(values, dtype=complex)
    axis = axis % values.ndim
    n = values.shape[axis]
    dxi = 2 * np.pi / (n * dx)
    k = np.arange(n)
    pre = _along(np.exp(-1j * k * dx * xi0), axis, values.ndim)
    post = _along(np.exp(-1j * x0 * (xi0 + k * dxi)), axis, values.ndim)
    return post * sp_fft.fft(pre * values, axis=axis)


def idft_bridge(values, xi0, dxi, x0, axis=-1):
    """Exact evaluation of sum_k exp(+i x_n xi_k) V_k along `axis`.

    Parameters
    ----------
    values : ndarray
        Samples V_k on xi_k = xi0 + k dxi.
    xi0, dxi : float
        Origin and step of the frequencies.
    x0 : float
        Origin of the output points; their step is 2 pi / (N dxi).
    axis : int, optional
        Axis to transform, by default -1
    """
    values = np.asarray(values, dtype=complex)
    axis = axis % values.ndim
    n = values.shape[axis]
    dx = 2 * np.pi / (n * dxi)
    k = np.arange(n)
    pre = _along(np.exp(1j * x0 * k * dxi), axis, values.ndim)
    post = _along(np.exp(1j * (x0 + k * dx) * xi0), axis, values.ndim)
    return post * (n * sp_fft.ifft(pre * values, axis=axis))


def _forward_axis(values, grid, axis):
    n, half = grid.axes[axis]
    step = grid.steps[axis]
    return step * dft_bridge(values, -half, step, -np.pi / step, axis=axis)


def _inverse_axis(values, grid, axis):
    # `grid` is the frequency grid, the output lands on its dual
    n, half = grid.axes[axis]
    step = grid.steps[axis]
    dual_half = np.pi / step
    return step / (2 * np.pi) * idft_bridge(values, -half, step, -dual_half, axis=axis)


def partial_fourier(F, axis, direction="forward"):
    """Fourier transform along one axis.

    Parameters
    ----------
    F : SampledFunction
        Function with `axis` tagged TIME (forward) or FREQ (inverse).
    axis : int
        Axis to transform (0-based).
    direction : {"forward", "inverse"}, optional
        By default "forward"

    Returns
    -------
    G : SampledFunction
        The transformed axis lives on the dual axis with the opposite tag.
    """
    if direction not in ("forward", "inverse"):
        raise ValueError(f"`direction` must be 'forward' or 'inverse', but found: {direction!r}")
    expected = SpaceTag.TIME if direction == "forward" else SpaceTag.FREQ
    if F.tags[axis] != expected:
        raise SpaceTagMismatch(f"Axis {axis} must be {expected.name} for a {direction} transform, "
                               f"but found {F.tags[axis].name}")
    if direction == "forward":
        values = _forward_axis(F.values, F.grid, axis)
    else:
        values = _inverse_axis(F.values, F.grid, axis)
    dual = F.grid.dual()
    axes = tuple(dual.axes[k] if k == axis else F.grid.axes[k] for k in range(F.ndim))
    tags = tuple((SpaceTag.FREQ if expected == SpaceTag.TIME else SpaceTag.TIME) if k == axis else t
                 for k, t in enumerate(F.tags))
    return SampledFunction(type(F.grid)(axes), values, tags=tags, truncated=F.truncated,
                           provenance=F.provenance)


def fourier(f):
    """Continuous-convention Fourier transform of a function with all axes TIME."""
    check_tags(f, SpaceTag.TIME)
    out = f
    for axis in range(f.ndim):
        out = partial_fourier(out, axis, "forward")
    return out


def inverse_fourier(F):
    """Inverse of `fourier`, includes the (2 pi)^{-d} factor. All axes must be FREQ."""
    check_tags(F, SpaceTag.FREQ)
    out = F
    for axis in range(F.ndim):
        out = partial_fourier(out, axis, "inverse")
    return out
