import logging
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from ..grids import check_same_grid
from ..transforms import stft
from ..weights import Weight, WeightKind

logger = logging.getLogger(__name__)


def _default_weight():
    return Weight(WeightKind.LOG1P)


@dataclass(frozen=True)
class MixedNormSpec:
    """Weighted mixed norm L^{p,q}_lambda: inner p over shifts, outer q over modulations.

    Parameters
    ----------
    p, q : float, optional
        Exponents in [1, inf], by default 2.0
    lam : float, optional
        Weight exponent, may be negative, by default 0.0
    weight : Weight, optional
        By default log(1 + t).
    """
    p: float = 2.0
    q: float = 2.0
    lam: float = 0.0
    weight: Weight = field(default_factory=_default_weight)

    def __post_init__(self):
        for name in ("p", "q"):
            value = float(getattr(self, name))
            if not value >= 1:
                raise ValueError(f"`{name}` must be in [1, inf], but found: {value}")
            object.__setattr__(self, name, value)
        object.__setattr__(self, "lam", float(self.lam))


def _lp(values, exponent, weight, axes):
    if np.isinf(exponent):
        return np.max(values, axis=axes)
    return (np.sum(values ** exponent, axis=axes) * weight) ** (1 / exponent)


def mixed_norm(V, spec):
    """||V||_{L^{p,q}_lambda}, the p-quadrature over the shift block of |V| e^{lambda w(z)} followed by
    the q-quadrature over the modulation block. Infinite exponents take lattice maxima.

    Parameters
    ----------
    V : PhaseSpaceField
        2 axes (x, xi) or 4 axes (x, xi, eta, y); the first half are shifts.
    spec : MixedNormSpec

    Returns
    -------
    value : float
    """
    lattice = V.lattice
    half = V.ndim // 2
    magnitude = np.abs(V.values)
    if spec.lam:
        magnitude = magnitude * np.exp(spec.lam * spec.weight.radial(*lattice.mesh()))
    shift_axes = tuple(range(half))
    shift_weight = float(np.prod(lattice.steps[:half]))
    mod_weight = float(np.prod(lattice.steps[half:]))
    inner = _lp(magnitude, spec.p, shift_weight, shift_axes)
    return float(_lp(inner, spec.q, mod_weight, tuple(range(inner.ndim))))


def modulation_norm(f, psi, spec):
    """||f||_{M^{p,q}_lambda} = ||V_psi f||_{L^{p,q}_lambda} on the full lattice."""
    return mixed_norm(stft(f, psi), spec)


def duality_pairing(f, h, psi):
    """Lattice quadrature of V_psi f conj(V_psi h), equal to 2 pi ||psi||^2 <f, h>."""
    check_same_grid(f, h)
    Vf = stft(f, psi)
    Vh = stft(h, psi)
    return complex(np.vdot(Vh.values, Vf.values) * Vf.weight)


def holder_bound(f, h, psi, lam, weight=None):
    """|pairing(f, h)| and its bound ||V_psi f||_{inf, lambda} ||V_psi h||_{1, -lambda}.

    Returns
    -------
    pairing, bound : float
    """
    weight = weight or Weight(WeightKind.LOG1P)
    pairing = abs(duality_pairing(f, h, psi))
    bound = (modulation_norm(f, psi, MixedNormSpec(np.inf, np.inf, lam, weight))
             * modulation_norm(h, psi, MixedNormSpec(1, 1, -lam, weight)))
    return pairing, bound


def norm_sweep(f, psi, ps=(1, 2, np.inf), qs=(1, 2, np.inf), lambdas=(0, 0.5, 1), weight=None, path=None):
    """Modulation norms of `f` over a grid of (p, q, lambda)

    Parameters
    ----------
    f, psi : SampledFunction
    ps, qs, lambdas : sequence of float, optional
    weight : Weight, optional
        By default log(1 + t).
    path : str, optional
        Write the table as CSV, by default None

    Returns
    -------
    table : pandas.DataFrame
        Columns (p, q, lambda, value).
    """
    weight = weight or Weight(WeightKind.LOG1P)
    V = stft(f, psi)
    rows = []
    for lam in lambdas:
        for p in ps:
            for q in qs:
                value = mixed_norm(V, MixedNormSpec(p, q, lam, weight))
                rows.append({"p": float(p), "q": float(q), "lambda": float(lam), "value": value})
    table = pd.DataFrame(rows, columns=["p", "q", "lambda", "value"])
    logger.debug("norm sweep over %d cells", len(table))
    if path is not None:
        table.to_csv(path, index=False)
    return table
