import logging
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from ..exceptions import BoundaryAttained
from ._weight import phi

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjugateTable:
    """Young conjugate phi*(t) = sup_{s >= 0} {s t - phi(s)} tabulated on `t_grid`.

    Attributes
    ----------
    t_grid : ndarray
        Increasing nonnegative abscissae.
    values : ndarray
        phi* on `t_grid`.
    argmax : ndarray
        Maximizing s for every t.
    s_max : float
        Right end of the s-grid.
    n_s : int
        Size of the s-grid.
    """
    t_grid: np.ndarray
    values: np.ndarray
    argmax: np.ndarray
    s_max: float
    n_s: int

    def second_differences(self):
        """Divided second differences of `values` along the (possibly non uniform) `t_grid`."""
        t, v = self.t_grid, self.values
        slopes = np.diff(v) / np.diff(t)
        return 2 * np.diff(slopes) / (t[2:] - t[:-2])


def _s_grid(s_max, n_s):
    return np.concatenate(([0.0], np.geomspace(min(1e-6, s_max / n_s), s_max, n_s - 1)))


def legendre_conjugate(phi_fn, t_grid, s_max=50.0, n_s=4000, tol=1e-10):
    """Conjugate of a convex function on [0, +inf) by a discrete sup plus golden-section refinement.

    Parameters
    ----------
    phi_fn : callable
        Vectorized s -> phi(s).
    t_grid : array-like
        Nonnegative increasing abscissae.
    s_max : float, optional
        Right end of the log-spaced s-grid, by default 50.0
    n_s : int, optional
        Size of the s-grid, by default 4000
    tol : float, optional
        Relative tolerance of the refinement, by default 1e-10

    Returns
    -------
    table : ConjugateTable

    Raises
    ------
    BoundaryAttained
        When the discrete sup for some t sits at `s_max`.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or np.any(t_grid < 0) or np.any(np.diff(t_grid) <= 0):
        raise ValueError("`t_grid` must be a nonnegative increasing 1-d array")
    s = _s_grid(s_max, n_s)
    phis = phi_fn(s)

    values = np.empty_like(t_grid)
    argmax = np.empty_like(t_grid)
    for i, t in enumerate(t_grid):
        objective = s * t - phis
        j = int(np.argmax(objective))
        if j == len(s) - 1:
            raise BoundaryAttained(float(t), float(s_max))

        def negative(x, t=t):
            return -(x * t - float(phi_fn(np.array([x]))[0]))

        if j == 0:
            result = minimize_scalar(negative, bounds=(0.0, s[1]), method="bounded",
                                     options={"xatol": tol * max(1.0, s[1])})
        else:
            try:
                result = minimize_scalar(negative, bracket=(s[j - 1], s[j], s[j + 1]), method="golden",
                                         tol=tol)
            except ValueError:
                # flat objective around the discrete argmax, no strict bracket
                result = minimize_scalar(negative, bounds=(s[j - 1], s[j + 1]), method="bounded",
                                         options={"xatol": tol * max(1.0, s[j + 1])})
        candidates = [(objective[j], s[j])]
        if result.x >= 0:
            candidates.append((-result.fun, result.x))
        values[i], argmax[i] = max(candidates)
    logger.debug("conjugate on %d points, s_max=%g, largest argmax %g", len(t_grid), s_max, argmax.max())
    return ConjugateTable(t_grid=t_grid, values=values, argmax=argmax, s_max=float(s_max), n_s=int(n_s))


def young_conjugate(w, t_grid, s_max=50.0, n_s=4000):
    """Young conjugate of phi_w(s) = w(e^s).

    Parameters
    ----------
    w : Weight
    t_grid : array-like
        Nonnegative increasing abscissae.
    s_max : float, optional
        Must be large enough for the sup to be interior, by default 50.0
    n_s : int, optional
        Size of the s-grid, by default 4000

    Returns
    -------
    table : ConjugateTable
        phi*(0) equals -w(1).

    Raises
    ------
    BoundaryAttained
        E.g. for `log1p` and t > 1, where the sup is infinite.
    """
    return legendre_conjugate(lambda s: phi(w, s), t_grid, s_max=s_max, n_s=n_s)
