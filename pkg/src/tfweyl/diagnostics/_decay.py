"""Decay diagnostics: the STFT characterizations turned into sweep-and-verdict procedures.

Every test evaluates S(lambda, mu) = max |V| e^{lambda D - mu G} over a phase-space lattice,
with D the coordinate weight that must decay and G the one allowed to grow, and flags
the cells whose maximum sits on the outermost lattice ring.
"""
import logging
from dataclasses import dataclass, field

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from ..exceptions import InconclusiveGrid
from ..grids import Fixture, Grid, SampledFunction, check_same_grid, sample
from ..operators import convolve_with_wigner, fourier_multiplier, wigner_symbol
from ..transforms import SubLattice, stft, symbol_stft4
from ..utils import check_n_jobs, content_hash, finite_or_none
from ..weights import Weight, WeightKind
from ._report import (DEFAULT_LAMBDAS, DecayReport, HeuristicParams, Verdict, classify, default_mu_grid,
                      fit_mu_star)

logger = logging.getLogger(__name__)

MULTIPLIER_FLOOR = 1e-10


def _sweep_row(log_magnitude, D, G, lam, mu_grid, inner, threshold):
    base = log_magnitude + lam * D
    sups = np.empty(len(mu_grid))
    flags = np.empty(len(mu_grid), dtype=bool)
    for i, mu in enumerate(mu_grid):
        weighted = base - mu * G
        full = np.max(weighted)
        interior = np.max(weighted[inner])
        sups[i] = full
        flags[i] = full - interior > threshold
    return sups, flags


class _DecayDiagnostic(BaseEstimator):
    """Shared sweep engine of the decay diagnostics."""

    _name = None
    _checks_growth = False

    def _params(self):
        return HeuristicParams(ring_tolerance=self.ring_tolerance, compact_slack=self.compact_slack,
                               growth_margin=getattr(self, "growth_margin", None) if self._checks_growth else None)

    def _weight(self):
        return self.weight if self.weight is not None else Weight(WeightKind.LOG1P)

    def _window(self, a):
        window = self.window
        if window is None:
            window = Fixture.gaussian((0.0,) * a.ndim)
        if isinstance(window, Fixture):
            return sample(window, a.grid, tags=a.tags, check_decay=False)
        check_same_grid(a, window)
        return window

    def _field(self, a):
        """|V| and the lattice coordinates, split into shift and modulation blocks."""
        window = self._window(a)
        if a.ndim == 1:
            V = stft(a, window, n_jobs=self.n_jobs)
            values = V.values
            shifts = V.points(0)
            if a.truncated:
                n = len(shifts)
                keep = slice(n // 4, 3 * n // 4)
                values, shifts = values[keep], shifts[keep]
            coordinates = np.meshgrid(shifts, V.points(1), indexing="ij", sparse=True)
            lattice_shape = values.shape
        else:
            outer = SubLattice(self.stride, 0.5 if a.truncated else 1.0)
            V = symbol_stft4(a, window, outer, n_jobs=self.n_jobs)
            values = V.values
            coordinates = np.meshgrid(*(V.points(k) for k in range(4)), indexing="ij", sparse=True)
            lattice_shape = V.shape
        half = len(coordinates) // 2
        provenance = {"input_sha256": content_hash(a.values), "window_sha256": content_hash(window.values),
                      "lattice_shape": list(lattice_shape), "truncated": bool(a.truncated)}
        return np.abs(values), coordinates[:half], coordinates[half:], provenance

    def _coordinate_weights(self, shifts, modulations):
        raise NotImplementedError

    def _check_lambdas(self):
        lambda_list = np.asarray(self.lambda_list, dtype=float)
        if lambda_list.ndim != 1 or not len(lambda_list) or np.any(lambda_list <= 0) \
                or np.any(np.diff(lambda_list) <= 0):
            raise ValueError(f"`lambda_list` must be positive and increasing, but found: {self.lambda_list}")
        mu_grid = np.asarray(self.mu_grid if self.mu_grid is not None else default_mu_grid(), dtype=float)
        if mu_grid.ndim != 1 or not len(mu_grid) or np.any(np.diff(mu_grid) <= 0):
            raise ValueError("`mu_grid` must be a nonempty increasing sequence")
        return lambda_list, mu_grid

    def _report(self, magnitude, D, G, provenance):
        lambda_list, mu_grid = self._check_lambdas()
        params = self._params()
        if not np.all(np.isfinite(magnitude)) or not np.any(magnitude):
            raise InconclusiveGrid(f"{self._name}: the field is zero or not finite")
        if min(magnitude.shape) < 3:
            raise InconclusiveGrid(f"{self._name}: lattice {magnitude.shape} has an axis with fewer than 3 points")
        D = np.broadcast_to(D, magnitude.shape)
        G = np.broadcast_to(G, magnitude.shape)
        inner = tuple(slice(1, -1) for _ in magnitude.shape)
        threshold = np.log1p(params.ring_tolerance)
        with np.errstate(divide="ignore"):
            log_magnitude = np.log(magnitude)

        n_jobs = min(check_n_jobs(self.n_jobs), len(lambda_list))
        rows = Parallel(n_jobs=n_jobs)(
            delayed(_sweep_row)(log_magnitude, D, G, lam, mu_grid, inner, threshold) for lam in lambda_list)
        log_sups = np.array([row[0] for row in rows])
        flags = np.array([row[1] for row in rows])

        growth_stable = None
        if self._checks_growth and params.growth_margin is not None:
            _, growth_flags = _sweep_row(log_magnitude, D, G, lambda_list[0], [-params.growth_margin], inner, threshold)
            growth_stable = not bool(growth_flags[0])

        mu_star = fit_mu_star(flags, mu_grid)
        verdict = classify(mu_star, mu_grid, params, growth_stable)
        with np.errstate(over="ignore"):
            sup_values = np.exp(log_sups)
        logger.debug("%s: mu_star=%s verdict=%s", self._name, mu_star, verdict.value)
        return DecayReport(test=self._name, weight=self._weight().to_dict(), lambda_list=lambda_list,
                           mu_grid=mu_grid, sup_values=sup_values, boundary_flags=flags, mu_star=mu_star,
                           verdict=verdict, heuristic_params=params.to_dict(), growth_stable=growth_stable,
                           provenance=provenance)

    def fit(self, a):
        """Run the diagnostic on `a`.

        Parameters
        ----------
        a : SampledFunction
            1-d function or 2-d symbol.

        Returns
        -------
        self
            With the DecayReport in `report_`.
        """
        magnitude, shifts, modulations, provenance = self._field(a)
        D, G = self._coordinate_weights(shifts, modulations)
        self.report_ = self._report(magnitude, D, G, provenance)
        return self

    @property
    def verdict_(self):
        check_is_fitted(self, "report_")
        return self.report_.verdict


class MultiplierDiagnostic(_DecayDiagnostic):
    """Multiplier test: sup |V_psi F(x, xi)| e^{lambda w(xi) - mu w(x)} for every lambda and some mu.

    Parameters
    ----------
    window : Fixture or SampledFunction, optional
        By default a centered Gaussian of the input dimension.
    weight : Weight, optional
        By default log(1 + t).
    lambda_list : sequence of float, optional
        Positive increasing, by default (0.5, 1, 2, 4)
    mu_grid : sequence of float, optional
        By default 0, 0.5, ..., 16.
    ring_tolerance : float, optional
        By default 0.01
    compact_slack : float, optional
        In units of the mu-grid step, by default 0.25
    growth_margin : float, optional
        Growth allowed in the second variable, by default 1.0
    stride : int, optional
        Stride of the 4-d lattice for 2-d inputs, by default 4
    n_jobs : int, optional
        By default None (1)
    """
    _name = "multiplier"
    _checks_growth = True

    def __init__(self, window=None, weight=None, lambda_list=DEFAULT_LAMBDAS, mu_grid=None, ring_tolerance=0.01,
                 compact_slack=0.25, growth_margin=1.0, stride=4, n_jobs=None):
        self.window = window
        self.weight = weight
        self.lambda_list = lambda_list
        self.mu_grid = mu_grid
        self.ring_tolerance = ring_tolerance
        self.compact_slack = compact_slack
        self.growth_margin = growth_margin
        self.stride = stride
        self.n_jobs = n_jobs

    def _coordinate_weights(self, shifts, modulations):
        w = self._weight()
        return w.radial(*modulations), w.radial(*shifts)


class ConvolutorDiagnostic(MultiplierDiagnostic):
    """Convolutor test, the multiplier test with the roles of shifts and modulations swapped."""
    _name = "convolutor"

    def _coordinate_weights(self, shifts, modulations):
        w = self._weight()
        return w.radial(*shifts), w.radial(*modulations)


class WeylCompactnessDiagnostic(_DecayDiagnostic):
    """Weyl continuity/compactness test on the 4-variable STFT of a symbol.

    S(lambda, mu) = max |V_Psi a(x, xi, eta, y)| e^{lambda w(x - y/2, xi + eta/2)} e^{-mu w(x + y/2, -xi + eta/2)}.
    A bounded mu_star curve reads as compact, a growing one as continuous.

    Parameters are those of `MultiplierDiagnostic` without `growth_margin`.
    """
    _name = "weyl_compactness"

    def __init__(self, window=None, weight=None, lambda_list=DEFAULT_LAMBDAS, mu_grid=None, ring_tolerance=0.01,
                 compact_slack=0.25, stride=4, n_jobs=None):
        self.window = window
        self.weight = weight
        self.lambda_list = lambda_list
        self.mu_grid = mu_grid
        self.ring_tolerance = ring_tolerance
        self.compact_slack = compact_slack
        self.stride = stride
        self.n_jobs = n_jobs

    def _coordinate_weights(self, shifts, modulations):
        w = self._weight()
        x, xi = shifts
        eta, y = modulations
        return w.radial(x - y / 2, xi + eta / 2), w.radial(x + y / 2, -xi + eta / 2)

    def fit(self, a):
        if a.ndim != 2:
            raise InconclusiveGrid(f"The Weyl test needs a 2-d symbol, but found {a.ndim} axes")
        return super().fit(a)


def crop_symbol(c):
    """Central half of a 2-d function in both axes."""
    (n0, half0), (n1, half1) = c.grid.axes
    grid = Grid(((n0 // 2, half0 / 2), (n1 // 2, half1 / 2)))
    values = c.values[n0 // 4:n0 // 4 + n0 // 2, n1 // 4:n1 // 4 + n1 // 2]
    return SampledFunction(grid, values, tags=c.tags, truncated=c.truncated, provenance=c.provenance)


class LocalizationCompactnessDiagnostic(WeylCompactnessDiagnostic):
    """Compactness test of L^a_{psi,gamma} through its Weyl symbol a * Wig(gamma, psi).

    Parameters
    ----------
    psi, gamma : SampledFunction
        Analysis and synthesis windows on the base grid.
    a_hat : callable, optional
        Fourier multiplier m(v) replacing the convolution with `a` (for symbols only known
        through their Fourier transform); `fit` then takes `a=None`.
        `fit` raises InconclusiveGrid when the multiplier leaves nothing of Wig(gamma, psi).
    crop : bool, optional
        Analyse the central half of the convolved symbol, by default False

    The remaining parameters are those of `WeylCompactnessDiagnostic`; `window` is sampled
    on the (possibly cropped) symbol grid.
    """
    _name = "localization_compactness"

    def __init__(self, psi, gamma, a_hat=None, crop=False, window=None, weight=None, lambda_list=DEFAULT_LAMBDAS,
                 mu_grid=None, ring_tolerance=0.01, compact_slack=0.25, stride=4, n_jobs=None):
        self.psi = psi
        self.gamma = gamma
        self.a_hat = a_hat
        self.crop = crop
        super().__init__(window=window, weight=weight, lambda_list=lambda_list, mu_grid=mu_grid,
                         ring_tolerance=ring_tolerance, compact_slack=compact_slack, stride=stride, n_jobs=n_jobs)

    def localization_symbol(self, a=None):
        W = wigner_symbol(self.gamma, self.psi)
        if self.a_hat is not None:
            symbol = fourier_multiplier(W, self.a_hat)
            if np.abs(symbol.values).max() <= MULTIPLIER_FLOOR * np.abs(W.values).max():
                raise InconclusiveGrid("The multiplier removes every lag of Wig(gamma, psi); "
                                       "check the order of the windows")
        else:
            symbol = convolve_with_wigner(a, W)
        return crop_symbol(symbol) if self.crop else symbol

    def fit(self, a=None):
        if a is None and self.a_hat is None:
            raise ValueError("Either a symbol `a` or a multiplier `a_hat` is needed")
        self.symbol_ = self.localization_symbol(a)
        return super().fit(self.symbol_)


@dataclass
class TailReport:
    """Tail curve t(r): max over the shell r <= |z| < r + width of
    sup_{|zeta| <= R} |V_psi a(z, zeta)| e^{lambda w(z)}.
    """
    radii: np.ndarray
    curve: np.ndarray
    passed: bool
    lam: float
    radius: float
    weight: dict
    provenance: dict = field(default_factory=dict)

    def frame(self):
        return pd.DataFrame({"radius": self.radii, "value": self.curve})

    def to_dict(self):
        return {"radii": [float(r) for r in self.radii], "curve": [finite_or_none(v) for v in self.curve],
                "passed": bool(self.passed), "lambda": self.lam, "R": self.radius, "weight": self.weight,
                "provenance": self.provenance}


class TailDiagnostic(_DecayDiagnostic):
    """Weighted tail condition: lim_{|z| -> inf} sup_{|zeta| <= R} |V_psi a(z, zeta)| e^{lambda w(z)} = 0.

    The condition passes when the shell curve is nonincreasing over its outer half
    (factor 1 + monotone_tolerance, plus an absolute floor of floor * t(0)) and its last
    value is at most decay_ratio * t(0).
    """
    _name = "tail"

    def __init__(self, window=None, weight=None, lam=0.0, radius=1.0, shell_width=None, monotone_tolerance=0.01,
                 floor=1e-12, decay_ratio=1e-6, stride=4, n_jobs=None):
        self.window = window
        self.weight = weight
        self.lam = lam
        self.radius = radius
        self.shell_width = shell_width
        self.monotone_tolerance = monotone_tolerance
        self.floor = floor
        self.decay_ratio = decay_ratio
        self.stride = stride
        self.n_jobs = n_jobs

    def fit(self, a):
        if self.lam < 0 or not self.radius > 0:
            raise ValueError(f"The tail test needs lambda >= 0 and R > 0, but found {self.lam}, {self.radius}")
        magnitude, shifts, modulations, provenance = self._field(a)
        half = len(shifts)
        zeta = np.sqrt(sum(np.square(m) for m in modulations)).reshape(magnitude.shape[half:])
        inside = zeta <= self.radius
        if not np.any(inside):
            raise InconclusiveGrid(f"No modulation lattice point within R={self.radius}")
        mod_axes = tuple(range(half, magnitude.ndim))
        restricted = np.max(np.where(inside, magnitude, 0), axis=mod_axes)

        shift_points = [np.ravel(s) for s in shifts]
        mesh = np.meshgrid(*shift_points, indexing="ij")
        r = np.sqrt(sum(np.square(m) for m in mesh))
        weighted = restricted * np.exp(self.lam * self._weight().radial(*mesh))
        width = self.shell_width or max(float(np.min(np.diff(p))) for p in shift_points)
        shells = np.floor(r / width).astype(int)
        indices = np.unique(shells)
        curve = np.array([weighted[shells == k].max() for k in indices])
        radii = indices * width

        t0 = curve[0]
        outer = curve[len(curve) // 2:]
        monotone = bool(np.all(outer[1:] <= outer[:-1] * (1 + self.monotone_tolerance) + self.floor * t0))
        passed = monotone and bool(curve[-1] <= self.decay_ratio * t0)
        logger.debug("tail curve over %d shells, last/first %.3g", len(curve), curve[-1] / t0 if t0 else np.nan)
        self.report_ = TailReport(radii=radii, curve=curve, passed=passed, lam=float(self.lam),
                                  radius=float(self.radius), weight=self._weight().to_dict(), provenance=provenance)
        return self

    @property
    def verdict_(self):
        check_is_fitted(self, "report_")
        return Verdict.COMPACT_LIKE if self.report_.passed else Verdict.FAIL


def multiplier_test(F, weight=None, lambda_list=DEFAULT_LAMBDAS, mu_grid=None, window=None, **params):
    """Run `MultiplierDiagnostic` on `F` (for a multiplier symbol, F is its Fourier transform)."""
    return MultiplierDiagnostic(window=window, weight=weight, lambda_list=lambda_list, mu_grid=mu_grid,
                                **params).fit(F).report_


def convolutor_test(a, weight=None, lambda_list=DEFAULT_LAMBDAS, mu_grid=None, window=None, **params):
    """Run `ConvolutorDiagnostic` on `a`."""
    return ConvolutorDiagnostic(window=window, weight=weight, lambda_list=lambda_list, mu_grid=mu_grid,
                                **params).fit(a).report_


def weyl_compactness_test(a, weight=None, lambda_list=DEFAULT_LAMBDAS, mu_grid=None, window=None, **params):
    """Run `WeylCompactnessDiagnostic` on the symbol `a`."""
    return WeylCompactnessDiagnostic(window=window, weight=weight, lambda_list=lambda_list, mu_grid=mu_grid,
                                     **params).fit(a).report_


def localization_compactness_test(a, psi, gamma, weight=None, lambda_list=DEFAULT_LAMBDAS, mu_grid=None,
                                  window=None, a_hat=None, crop=False, **params):
    """Run `LocalizationCompactnessDiagnostic`; `a` may be None when `a_hat` is given."""
    return LocalizationCompactnessDiagnostic(psi, gamma, a_hat=a_hat, crop=crop, window=window, weight=weight,
                                             lambda_list=lambda_list, mu_grid=mu_grid, **params).fit(a).report_


def tail_test(a, lam=0.0, radius=1.0, weight=None, window=None, **params):
    """Weighted tail condition of `a`.

    Returns
    -------
    curve : pandas.DataFrame
        Columns (radius, value).
    passed : bool
    """
    report = TailDiagnostic(window=window, weight=weight, lam=lam, radius=radius, **params).fit(a).report_
    return report.frame(), report.passed
