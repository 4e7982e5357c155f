import logging
from dataclasses import dataclass, field

from ..grids import Fixture, Grid, SpaceTag, reflect, sample
from ..weights import Weight, WeightKind
from ._decay import convolutor_test, localization_compactness_test, multiplier_test, weyl_compactness_test
from ._report import DecayReport, Verdict

logger = logging.getLogger(__name__)

PAIRED_WEIGHTS = (Weight(WeightKind.LOG1P), Weight(WeightKind.POWER, a=0.5))

_TESTS = {
    "multiplier": multiplier_test,
    "convolutor": convolutor_test,
    "weyl_compactness": weyl_compactness_test,
    "localization_compactness": localization_compactness_test,
}


def diagnose_pair(test, *args, **kwargs):
    """Run a decay test under log(1+t) and t^(1/2).

    Parameters
    ----------
    test : str or callable
        One of "multiplier", "convolutor", "weyl_compactness", "localization_compactness", or
        a test function taking a `weight` keyword.
    *args, **kwargs
        Forwarded to the test.

    Returns
    -------
    reports : tuple of DecayReport
        (log1p report, power report)
    """
    if isinstance(test, str):
        if test not in _TESTS:
            raise ValueError(f"Unknown test {test!r}, use one of {sorted(_TESTS)}")
        test = _TESTS[test]
    kwargs.pop("weight", None)
    return tuple(test(*args, weight=weight, **kwargs) for weight in PAIRED_WEIGHTS)


@dataclass
class ChainReport:
    """Convolutor, Weyl and localization verdicts of one symbol.

    A convolutor symbol gives compact localization operators, and a Weyl compact symbol
    is a convolutor; `violations` lists the pairs of verdicts that break either direction.
    """
    convolutor: DecayReport
    weyl: DecayReport
    localization: DecayReport
    violations: list = field(default_factory=list)

    @property
    def consistent(self):
        return not self.violations

    def to_dict(self):
        return {"convolutor": self.convolutor.to_dict(), "weyl": self.weyl.to_dict(),
                "localization": self.localization.to_dict(), "violations": list(self.violations),
                "consistent": self.consistent}


def chain_violations(convolutor, weyl, localization):
    violations = []
    if weyl.verdict is Verdict.COMPACT_LIKE and convolutor.verdict is Verdict.FAIL:
        violations.append("weyl COMPACT_LIKE but convolutor FAIL")
    if convolutor.verdict is not Verdict.FAIL and localization.verdict is not Verdict.COMPACT_LIKE:
        violations.append(f"convolutor {convolutor.verdict.value} but localization {localization.verdict.value}")
    return violations


def implication_chain(symbol, window=None, weight=None, base=None, localization_base=None, **params):
    """Run the convolutor, Weyl and localization tests on one symbol fixture.

    Parameters
    ----------
    symbol : Fixture
        2-variable symbol, sampled on the symbol grid of `base` with tags (TIME, FREQ).
    window : Fixture, optional
        1-d window used as both psi and gamma, by default the centered Gaussian.
    weight : Weight, optional
        By default log(1 + t).
    base : Grid, optional
        Base grid of the convolutor and Weyl tests, by default (64, 8).
    localization_base : Grid, optional
        Base grid of the localization test, by default (128, 16); the convolved symbol is
        cropped to its central half.
    **params
        Forwarded to every test (lambda_list, mu_grid, stride, n_jobs...).

    Returns
    -------
    chain : ChainReport
    """
    window = window or Fixture.gaussian()
    base = base or Grid(((64, 8.0),))
    localization_base = localization_base or Grid(((128, 16.0),))
    tags = (SpaceTag.TIME, SpaceTag.FREQ)

    a = sample(symbol, base.symbol_grid(), tags=tags, check_decay=False)
    convolutor = convolutor_test(a, weight=weight, **params)
    weyl = weyl_compactness_test(a, weight=weight, **params)

    a_wide = sample(symbol, localization_base.symbol_grid(), tags=tags, check_decay=False)
    psi = sample(window, localization_base, check_decay=False)
    localization = localization_compactness_test(a_wide, psi, psi, weight=weight, crop=True, **params)

    violations = chain_violations(convolutor, weyl, localization)
    for violation in violations:
        logger.warning("implication chain violated for %s: %s", symbol.kind.value, violation)
    return ChainReport(convolutor, weyl, localization, violations)


def band_limited_localization(base=None, a=0.5, b=4.5, smoothness=8.0, weight=None, **params):
    """Localization test of the strip multiplier m = 1 on v in [-2b, -2a] with windows I f and f.

    f is a bump supported in [a, b], so a * Wig(f, I f) = Wig(f, I f) and L^a is compact
    although `a` is no convolutor. The default bump is smooth enough for its STFT to
    outrun the paired weights on a (64, 8) grid.

    Parameters
    ----------
    base : Grid, optional
        Window grid, by default (64, 8).
    a, b : float, optional
        Support of f, by default [0.5, 4.5]
    smoothness : float, optional
        Bump parameter, by default 8.0
    weight : Weight, optional
        A single weight; by default both `PAIRED_WEIGHTS`.
    **params
        Forwarded to `localization_compactness_test`.

    Returns
    -------
    reports : tuple of DecayReport
    """
    base = base or Grid(((64, 8.0),))
    f = sample(Fixture.bump(a, b, smoothness), base)
    mask = lambda v: ((v >= -2 * b) & (v <= -2 * a)).astype(float)  # noqa: E731
    weights = PAIRED_WEIGHTS if weight is None else (weight,)
    # symbol a * Wig(gamma, psi) with gamma = f, psi = I f
    return tuple(localization_compactness_test(None, reflect(f), f, weight=w, a_hat=mask, **params)
                 for w in weights)
