import json
import logging
import os
from dataclasses import asdict, dataclass, field
from enum import Enum

import numpy as np
import pandas as pd

from ..utils import finite_or_none

logger = logging.getLogger(__name__)

DEFAULT_LAMBDAS = (0.5, 1.0, 2.0, 4.0)


def default_mu_grid():
    return np.arange(0, 16.25, 0.5)


class Verdict(str, Enum):
    COMPACT_LIKE = "COMPACT_LIKE"
    CONTINUOUS_LIKE = "CONTINUOUS_LIKE"
    FAIL = "FAIL"


@dataclass(frozen=True)
class HeuristicParams:
    """Declared thresholds of the decay diagnostics.

    Parameters
    ----------
    ring_tolerance : float
        A cell is boundary-flagged when the weighted maximum over the whole lattice exceeds
        the one without the outermost ring by more than this fraction.
    compact_slack : float
        COMPACT_LIKE needs max mu_star - min mu_star <= compact_slack * (mu-grid step).
    growth_margin : float or None
        Multiplier and convolutor tests also require stability at mu = -growth_margin
        (growth allowed in the second variable); None disables the check.
    interior_fraction : float
        Fraction of the shift lattice analysed for truncated inputs.
    """
    ring_tolerance: float = 0.01
    compact_slack: float = 0.25
    growth_margin: float = 1.0
    interior_fraction: float = 0.5

    def to_dict(self):
        return asdict(self)


def fit_mu_star(flags, mu_grid):
    """Least unflagged mu per lambda row, made nondecreasing; NaN once some row has none."""
    flags = np.asarray(flags, dtype=bool)
    mu_grid = np.asarray(mu_grid, dtype=float)
    mu_star = np.full(flags.shape[0], np.nan)
    running = -np.inf
    for i, row in enumerate(flags):
        stable = np.flatnonzero(~row)
        if not len(stable):
            break
        running = max(running, mu_grid[stable[0]])
        mu_star[i] = running
    return mu_star


def classify(mu_star, mu_grid, params, growth_stable=None):
    """Verdict from the mu_star curve, see `HeuristicParams`."""
    if np.any(np.isnan(mu_star)):
        return Verdict.FAIL
    step = float(np.min(np.diff(mu_grid))) if len(mu_grid) > 1 else 0.0
    spread = float(np.max(mu_star) - np.min(mu_star))
    if spread <= params.compact_slack * step and growth_stable is not False:
        return Verdict.COMPACT_LIKE
    return Verdict.CONTINUOUS_LIKE


@dataclass
class DecayReport:
    """Outcome of a decay diagnostic.

    Attributes
    ----------
    test : str
        Name of the diagnostic.
    weight : dict
        JSON form of the weight.
    lambda_list, mu_grid : ndarray
    sup_values : ndarray of shape (len(lambda_list), len(mu_grid))
        Weighted lattice maxima S(lambda, mu).
    boundary_flags : ndarray of bool, same shape
        True when the maximum moves by more than the ring tolerance with the outermost ring.
    mu_star : ndarray
        Per lambda, NaN when no mu is boundary-stable.
    verdict : Verdict
    heuristic_params : dict
    growth_stable : bool or None
        Stability at mu = -growth_margin, None when the test has no such check.
    provenance : dict
        Content hashes of the inputs and lattice shape.
    """
    test: str
    weight: dict
    lambda_list: np.ndarray
    mu_grid: np.ndarray
    sup_values: np.ndarray
    boundary_flags: np.ndarray
    mu_star: np.ndarray
    verdict: Verdict
    heuristic_params: dict
    growth_stable: bool = None
    provenance: dict = field(default_factory=dict)

    def reproduce(self):
        """Verdict re-derived from the stored flags and thresholds."""
        params = HeuristicParams(**self.heuristic_params)
        mu_star = fit_mu_star(self.boundary_flags, self.mu_grid)
        return classify(mu_star, self.mu_grid, params, self.growth_stable)

    def mu_star_frame(self):
        return pd.DataFrame({"lambda": self.lambda_list, "mu_star": self.mu_star})

    def to_dict(self):
        return {
            "test": self.test,
            "weight": self.weight,
            "lambda_list": [float(v) for v in self.lambda_list],
            "mu_grid": [float(v) for v in self.mu_grid],
            "sup_values": [[finite_or_none(v) for v in row] for row in self.sup_values],
            "boundary_flags": [[bool(v) for v in row] for row in self.boundary_flags],
            "mu_star": [finite_or_none(v) for v in self.mu_star],
            "verdict": self.verdict.value,
            "heuristic_params": self.heuristic_params,
            "growth_stable": self.growth_stable,
            "provenance": self.provenance,
        }

    def to_json(self, **extra):
        """Stable JSON text (sorted keys); `extra` entries are added at top level.

        Non-finite maxima S(lambda, mu) are written as null.
        """
        return json.dumps(dict(self.to_dict(), **extra), sort_keys=True, indent=2, allow_nan=False)

    def save(self, path, **extra):
        """Write `path` (JSON) and the mu_star curve next to it as CSV.

        Returns
        -------
        paths : tuple of str
        """
        with open(path, "w") as file:
            file.write(self.to_json(**extra))
        csv_path = os.path.splitext(path)[0] + "_mu_star.csv"
        self.mu_star_frame().to_csv(csv_path, index=False)
        logger.debug("saved %s report to %s", self.test, path)
        return path, csv_path
