import logging
from dataclasses import dataclass, asdict

import numpy as np
from scipy import integrate, special

from ._weight import WeightKind, phi

logger = logging.getLogger(__name__)

ALPHA_TAIL_GROWTH = 1.1
SUBADDITIVE_TOL = 1e-12
CONVEXITY_TOL = 1e-10
MAX_PAIR_SAMPLES = 400


@dataclass(frozen=True)
class ConditionReport:
    """Numerical outcome of the weight conditions.

    Attributes
    ----------
    alpha_ok : bool
        (alpha) w(2t) <= L (w(t) + 1), with `alpha_L` the witness constant and
        `alpha_tail_growth` the growth of w(2t)/(w(t)+1) over the last doubling of the sample.
    alpha_prime_ok : bool
        Subadditivity on all sampled pairs; `alpha_prime_excess` is the worst w(s+t) - w(s) - w(t).
    beta_integral, beta_tail : float
        Quadrature of w(t)/(1+t^2) on [1, t_max] and analytic bound of the rest.
    gamma_ok : bool
        w(t) >= gamma_a + gamma_b log(1+t) on the sample, with gamma_b > 0.
    delta_ok : bool
        Convexity of t -> w(e^t); `delta_min_second_difference` is the smallest relative second difference.
    """
    t_max: float
    n_samples: int
    alpha_ok: bool
    alpha_L: float
    alpha_tail_growth: float
    alpha_prime_ok: bool
    alpha_prime_excess: float
    beta_ok: bool
    beta_integral: float
    beta_tail: float
    gamma_ok: bool
    gamma_a: float
    gamma_b: float
    delta_ok: bool
    delta_min_second_difference: float

    @property
    def all_ok(self):
        return self.alpha_ok and self.beta_ok and self.gamma_ok and self.delta_ok

    def to_dict(self):
        return {k: (bool(v) if isinstance(v, (bool, np.bool_)) else v) for k, v in asdict(self).items()}

    def reproduce(self, w):
        """Recompute every flag from the stored witnesses.

        Returns
        -------
        flags : dict
            `{"alpha_ok": ..., "alpha_prime_ok": ..., "beta_ok": ..., "gamma_ok": ..., "delta_ok": ...}`
        """
        t = _t_samples(self.t_max, self.n_samples)
        bound_holds = bool(np.all(w.kernel(2 * t) <= self.alpha_L * (w.kernel(t) + 1) * (1 + 1e-12)))
        gamma_holds = bool(np.all(w.kernel(t) >= self.gamma_a + self.gamma_b * np.log1p(t) - 1e-12))
        return {
            "alpha_ok": bound_holds and np.isfinite(self.alpha_L) and self.alpha_tail_growth <= ALPHA_TAIL_GROWTH,
            "alpha_prime_ok": self.alpha_prime_excess <= SUBADDITIVE_TOL,
            "beta_ok": bool(np.isfinite(self.beta_integral) and np.isfinite(self.beta_tail)),
            "gamma_ok": gamma_holds and self.gamma_b > 0,
            "delta_ok": self.delta_min_second_difference >= -CONVEXITY_TOL,
        }


def _t_samples(t_max, n_samples):
    return np.concatenate(([0.0], np.geomspace(1e-3, t_max, n_samples - 1)))


def _beta_tail(w, t_max):
    # Bounds of the integral over [t_max, inf), using 1/(1+t^2) <= 1/t^2
    T = float(t_max)
    if w.kind is WeightKind.LOG1P:
        return w.c * (np.log1p(T) / T + np.log1p(1 / T))
    if w.kind is WeightKind.POWER:
        return w.c * T ** (w.a - 1) / (1 - w.a)
    # log(1+t) <= log(2t) for t >= 1, then u = log(2t)
    return 2 * w.c * special.gamma(w.a + 1) * special.gammaincc(w.a + 1, np.log(2 * T))


def beta_quadrature(kernel, t_max, tail=None):
    """Adaptive quadrature of the integrability condition.

    Parameters
    ----------
    kernel : callable
        t -> w(t), evaluated on floats.
    t_max : float
        Upper end of the quadrature interval [1, t_max].
    tail : callable, optional
        t_max -> bound of the integral beyond t_max. When omitted the tail is reported as nan.

    Returns
    -------
    integral : float
        Value of the integral of w(t)/(1+t^2) over [1, t_max].
    tail : float
        Tail bound (nan when unknown).
    """
    # Split at decades so quad resolves the slowly varying integrand on long intervals
    edges = np.unique(np.concatenate(([1.0], np.geomspace(1.0, t_max, max(2, int(np.log10(t_max)) + 2)))))
    value = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        part, _ = integrate.quad(lambda s: float(kernel(s)) / (1 + s * s), lo, hi, limit=200)
        value += part
    return value, (float(tail(t_max)) if tail is not None else float("nan"))


def check_conditions(w, t_max=1e4, n_samples=2000):
    """Check the weight conditions (alpha), (alpha'), (beta), (gamma) and (delta) on samples.

    Failures are reported in the returned record, never raised.

    Parameters
    ----------
    w : Weight
        Weight to check.
    t_max : float, optional
        Largest sample, must exceed 1, by default 1e4
    n_samples : int, optional
        Number of samples, at least 100, by default 2000

    Returns
    -------
    report : ConditionReport
    """
    if not t_max > 1:
        raise ValueError(f"`t_max` must be greater than 1, but found: {t_max}")
    if n_samples < 100:
        raise ValueError(f"`n_samples` must be at least 100, but found: {n_samples}")

    t = _t_samples(t_max, n_samples)
    values = w.kernel(t)

    ratio = w.kernel(2 * t) / (values + 1)
    alpha_L = float(np.max(ratio))
    half = np.searchsorted(t, t_max / 2)
    alpha_tail_growth = float(ratio[-1] / ratio[min(half, len(t) - 1)])

    pairs = t[np.linspace(0, len(t) - 1, min(len(t), MAX_PAIR_SAMPLES)).astype(int)]
    s, r = np.meshgrid(pairs, pairs, indexing="ij")
    alpha_prime_excess = float(np.max(w.kernel(s + r) - w.kernel(s) - w.kernel(r)))

    beta_integral, beta_tail = beta_quadrature(w.kernel, t_max, tail=lambda T: _beta_tail(w, T))

    upper = t >= 1
    gamma_b = float(np.min(values[upper] / np.log1p(t[upper])))
    gamma_a = float(np.min(values - gamma_b * np.log1p(t)))

    s_grid = np.linspace(0.0, np.log(t_max), n_samples)
    phis = phi(w, s_grid)
    second = (phis[2:] - 2 * phis[1:-1] + phis[:-2]) / np.maximum(1.0, np.abs(phis[1:-1]))
    delta_min = float(np.min(second))

    report = ConditionReport(
        t_max=float(t_max), n_samples=int(n_samples),
        alpha_ok=bool(np.isfinite(alpha_L) and alpha_tail_growth <= ALPHA_TAIL_GROWTH),
        alpha_L=alpha_L, alpha_tail_growth=alpha_tail_growth,
        alpha_prime_ok=alpha_prime_excess <= SUBADDITIVE_TOL, alpha_prime_excess=alpha_prime_excess,
        beta_ok=bool(np.isfinite(beta_integral) and np.isfinite(beta_tail)),
        beta_integral=float(beta_integral), beta_tail=float(beta_tail),
        gamma_ok=bool(np.isfinite(gamma_b) and gamma_b > 0), gamma_a=gamma_a, gamma_b=gamma_b,
        delta_ok=delta_min >= -CONVEXITY_TOL, delta_min_second_difference=delta_min,
    )
    logger.debug("conditions of %s: %s", w, report)
    return report
