"""
Some utility functions

This module contains utility functions that are used in different parts of the library.

## Functions

[relative_error](#relative_error):
> Norm-wise relative error between two arrays.
[finite_or_none](#finite_or_none):
> A float, or None when it is not finite (JSON null).
[is_int](#is_int):
> Check if a value is an integer but not a boolean.
[is_power_of_two](#is_power_of_two):
> Check if an integer is a positive power of two.
[check_n_jobs](#check_n_jobs):
> Check `n_jobs` parameter according to the scikit-learn convention, capped by `TFWEYL_THREADS`.
[content_hash](#content_hash):
> SHA-256 digest of an array or a byte string.
[random_lattice_points](#random_lattice_points):
> Seeded random multi-indices inside a lattice shape.

"""

import hashlib
import os

import numpy as np
from joblib import cpu_count
from sklearn.utils import check_random_state

__all__ = ["relative_error", "finite_or_none", "is_int", "is_power_of_two", "check_n_jobs", "content_hash",
           "random_lattice_points"]

THREADS_ENV = "TFWEYL_THREADS"


def relative_error(actual, expected, axis=None):
    """Norm-wise relative error `||actual - expected|| / ||expected||`.

    Parameters
    ----------
    actual, expected : array-like or scalar
        Values to compare. Complex values are accepted.
    axis : int or tuple of int, optional
        Restrict the norm to some axes, by default the whole array.

    Returns
    -------
    error : float or ndarray
        Relative error, inf when `expected` vanishes and `actual` does not.
    """
    diff = np.abs(np.asarray(actual, dtype=complex) - np.asarray(expected, dtype=complex))
    reference = np.abs(np.asarray(expected, dtype=complex))
    # common scale keeps tiny magnitudes from underflowing when squared
    scale = np.maximum(diff.max(axis=axis, keepdims=True), reference.max(axis=axis, keepdims=True))
    scale = np.where(scale > 0, scale, 1.0)
    num = np.sqrt(np.sum((diff / scale) ** 2, axis=axis))
    den = np.sqrt(np.sum((reference / scale) ** 2, axis=axis))
    error = np.where(den > 0, num / np.where(den > 0, den, 1.0), np.where(num > 0, np.inf, 0.0))
    return float(error) if np.ndim(error) == 0 else error


def finite_or_none(value):
    """`float(value)`, or None for inf and NaN, which have no JSON form."""
    value = float(value)
    return value if np.isfinite(value) else None


def is_int(x):
    """Check if x is of integer type, but not boolean"""
    # boolean are subclasses of integers in Python, so explicitly exclude them
    return isinstance(x, (int, np.integer)) and not isinstance(x, bool)


def is_power_of_two(n):
    """Check if `n` is an integer power of two (1 excluded)."""
    return is_int(n) and n >= 2 and (n & (n - 1)) == 0


def check_n_jobs(n_jobs):
    """Check `n_jobs` parameter according to the scikit-learn convention.

    The environment variable `TFWEYL_THREADS`, when set to a positive integer,
    caps the returned value.

    Parameters
    ----------
    n_jobs : int, positive or -1
        The number of jobs for parallelization.

    Returns
    -------
    n_jobs : int
        Checked number of jobs.
    """
    # https://scikit-learn.org/stable/glossary.html#term-n-jobs
    if n_jobs is None:
        n_jobs = 1
    elif not is_int(n_jobs):
        raise ValueError(f"`n_jobs` must be None or an integer, but found: {n_jobs}")
    elif n_jobs < 0:
        n_jobs = cpu_count()
    elif n_jobs == 0:
        raise ValueError("`n_jobs` == 0 has no meaning")

    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            cap = int(cap)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be a positive integer, but found: {cap!r}")
        if cap > 0:
            n_jobs = min(n_jobs, cap)
    return int(n_jobs)


def content_hash(data):
    """SHA-256 hex digest of a numpy array (dtype, shape and bytes) or of raw bytes."""
    digest = hashlib.sha256()
    if isinstance(data, (bytes, bytearray)):
        digest.update(data)
    else:
        array = np.ascontiguousarray(data)
        digest.update(str(array.dtype).encode())
        digest.update(str(array.shape).encode())
        digest.update(array.tobytes())
    return digest.hexdigest()


def random_lattice_points(shape, n_points, random_state=None):
    """Draw `n_points` random multi-indices inside an array of shape `shape`.

    Parameters
    ----------
    shape : tuple of int
        Lattice shape.
    n_points : int
        Number of points.
    random_state : int, RandomState instance or None
        Controls the draw, see `sklearn.utils.check_random_state`.

    Returns
    -------
    indices : tuple of ndarray
        One index array per axis, usable for fancy indexing.
    """
    rng = check_random_state(random_state)
    return tuple(rng.randint(0, n, size=n_points) for n in shape)
