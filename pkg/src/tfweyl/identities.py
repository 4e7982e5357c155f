"""
Identity suite

Executable checks of the exact relations between the transforms and operators of the
package, each returning an `IdentityCheck`. `run_identities` runs them all on one grid.

## Functions

[run_identities](#run_identities):
> Every check on an `(N, L)` grid.
[identities_frame](#identities_frame):
> The checks as a DataFrame.

"""

import json
import logging
import time
from dataclasses import dataclass

import numpy as np
import pandas as pd
from sklearn.utils import check_random_state

from .grids import Fixture, Grid, SampledFunction, SpaceTag, fourier, inner_product, partial_fourier, reflect, sample
from .modspaces import MixedNormSpec, holder_bound, modulation_norm
from .operators import (fourier_multiplier, localization_compose, localization_via_weyl, spectrum, symbol_pairing,
                        weak_pairing_check, weyl_apply, weyl_kernel, weyl_kernel_explicit, weyl_matrix,
                        wigner_symbol)
from .transforms import (SubLattice, ambiguity_wigner_relation, cross_wigner, fourier_wigner, fourier_wigner_relation,
                         stft, stft_invert, symbol_stft4, wigner_like, wigner_like_inv)
from .utils import finite_or_none, random_lattice_points, relative_error
from .weights import Weight, WeightKind

logger = logging.getLogger(__name__)

TIME_FREQ = (SpaceTag.TIME, SpaceTag.FREQ)


def _json_number(value):
    value = complex(value)
    if value.imag:
        return [finite_or_none(value.real), finite_or_none(value.imag)]
    return finite_or_none(value.real)


@dataclass
class IdentityCheck:
    """Outcome of one identity: both sides (scalars or norms of arrays), their relative error and the verdict."""
    name: str
    lhs: complex
    rhs: complex
    relative_error: float
    tolerance: float
    passed: bool

    def to_dict(self):
        return {"name": self.name, "lhs": _json_number(self.lhs), "rhs": _json_number(self.rhs),
                "relative_error": finite_or_none(self.relative_error), "tolerance": self.tolerance,
                "passed": bool(self.passed)}


def _compare(name, actual, expected, tolerance):
    actual = np.asarray(actual, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    error = relative_error(actual, expected)
    if actual.ndim:
        lhs, rhs = np.linalg.norm(actual), np.linalg.norm(expected)
    else:
        lhs, rhs = complex(actual), complex(expected)
    return IdentityCheck(name, lhs, rhs, float(error), tolerance, bool(error <= tolerance))


def _interior(n):
    return slice(n // 4, 3 * n // 4)


def check_fourier_bridge(grid):
    """Fast Fourier bridge against the direct quadrature step * sum f(x_n) e^{-i x_n xi_k}."""
    checks = []
    x = grid.points(0)
    xi = grid.dual().points(0)
    for spec in (Fixture.gaussian(0.5, 1.0, 2.0), Fixture.hermite(3), Fixture.bump(-2.0, 3.0)):
        f = sample(spec, grid)
        direct = grid.steps[0] * np.exp(-1j * np.outer(xi, x)) @ f.values
        checks.append(_compare(f"fourier_bridge[{spec.kind.value}]", fourier(f).values, direct, 1e-12))
    return checks


def check_stft_inversion(grid):
    f = sample(Fixture.gaussian(1.0, 1.5, 2.0), grid)
    psi = sample(Fixture.gaussian(), grid)
    gamma = sample(Fixture.gaussian(0.5), grid)
    recovered = stft_invert(stft(f, psi), psi, gamma)
    return [_compare("stft_inversion", recovered.values, f.values, 1e-6)]


def check_stft_points(grid, random_state=None):
    """V_psi f at 20 random lattice points against the direct quadrature sum.

    The error is the largest deviation relative to max |V_psi f|.
    """
    f = sample(Fixture.hermite(2), grid)
    psi = sample(Fixture.gaussian(), grid)
    V = stft(f, psi)
    rows, cols = random_lattice_points(V.shape, 20, random_state)
    t = grid.points(0)
    x, xi = V.lattice.points(0)[rows], V.lattice.points(1)[cols]
    window = np.exp(-(t[None, :] - x[:, None]) ** 2 / 2)
    direct = grid.steps[0] * np.sum(f.values * window * np.exp(-1j * xi[:, None] * t[None, :]), axis=1)
    actual = V.values[rows, cols]
    error = np.abs(actual - direct).max() / np.abs(V.values).max()
    return [IdentityCheck("stft_points", np.linalg.norm(actual), np.linalg.norm(direct), float(error), 1e-12,
                          bool(error <= 1e-12))]


def check_moyal(grid):
    """<Wig(g, f), Wig(k, h)> = 2 pi <g, k> conj(<f, h>).

    g and f run over the Hermite functions of orders 0..3, (k, h) over two fixed pairs.
    """
    hermite = [sample(Fixture.hermite(order), grid) for order in range(4)]
    pairs = [(Fixture.gaussian(0.0, 1.0, 0.5), Fixture.gaussian(-0.5, 1.2)),
             (Fixture.hermite(1), Fixture.gaussian(0.5, 0.8, -1.0))]
    lhs, rhs = [], []
    for k_spec, h_spec in pairs:
        k, h = sample(k_spec, grid), sample(h_spec, grid)
        W = wigner_symbol(k, h)
        for g in hermite:
            for f in hermite:
                lhs.append(symbol_pairing(wigner_symbol(g, f), W))
                rhs.append(2 * np.pi * inner_product(g, k) * np.conj(inner_product(f, h)))
    return [_compare("moyal", lhs, rhs, 1e-8)]


def check_wigner_marginal(grid):
    """int Wig(g, f)(x, xi) dxi = 2 pi g(x) conj(f(x)) at interior points."""
    g = sample(Fixture.gaussian(0.5, 1.0, 1.0), grid)
    f = sample(Fixture.hermite(2), grid)
    W = cross_wigner(g, f)
    marginal = W.values.sum(axis=1) * W.lattice.steps[1]
    keep = _interior(grid.shape[0])
    expected = 2 * np.pi * g.values * np.conj(f.values)
    return [_compare("wigner_marginal", marginal[keep], expected[keep], 1e-6)]


def check_wigner_like(grid, random_state=None):
    """Even rows of Wig[f (x) conj(g)] are Wig(f, g); wigner_like_inv undoes wigner_like."""
    rng = check_random_state(random_state)
    f = sample(Fixture.gaussian(0.5, 1.0, 1.0), grid)
    g = sample(Fixture.hermite(1), grid)
    symbol = wigner_symbol(f, g)
    tensor_check = _compare("wigner_tensor", symbol.values[::2], cross_wigner(f, g).values, 1e-10)
    n = grid.shape[0]
    F = SampledFunction(grid * grid, rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    round_trip = _compare("wigner_like_round_trip", wigner_like_inv(wigner_like(F)).values, F.values, 1e-10)
    return [tensor_check, round_trip]


def check_kernel_paths(grid):
    a = sample(Fixture.gaussian((0.5, -1.0), 1.0, (0.0, 0.5)), grid.symbol_grid(), tags=TIME_FREQ)
    return [_compare("weyl_kernel_paths", weyl_kernel(a).values, weyl_kernel_explicit(a).values, 1e-10)]


def check_weak_pairing(grid):
    """<a^w f, g> = (2 pi)^{-1} <a, Wig(g, f)> on a 3 x 3 x 3 battery."""
    symbol_grid = grid.symbol_grid()
    functions = [sample(spec, grid) for spec in
                 (Fixture.gaussian(), Fixture.hermite(1), Fixture.gaussian(1.0, 1.0, 1.0))]
    symbols = [sample(Fixture.gaussian((0.0, 0.0)), symbol_grid, tags=TIME_FREQ, check_decay=False),
               sample(Fixture.gaussian((1.0, -0.5), 1.5), symbol_grid, tags=TIME_FREQ, check_decay=False),
               wigner_symbol(functions[0], functions[2])]
    lhs, rhs = [], []
    for a in symbols:
        for f in functions:
            for g in functions:
                left, right = weak_pairing_check(a, f, g)
                lhs.append(left)
                rhs.append(right)
    return [_compare("weak_pairing", lhs, rhs, 1e-6)]


def check_rank_one(grid):
    """Wig(g, f)^w h = <h, f> g, with the single nonzero eigenvalue <g, f>."""
    g = sample(Fixture.gaussian(1.0), grid)
    f = sample(Fixture.gaussian(0.0, 1.0, 1.0), grid)
    h = sample(Fixture.hermite(1), grid)
    a = wigner_symbol(g, f)
    action = _compare("rank_one_action", weyl_apply(a, h).values, inner_product(h, f) * g.values, 1e-8)
    values = np.asarray(spectrum(weyl_matrix(a)))
    nonzero = int(np.sum(np.abs(values) > 1e-8))
    eigenvalue = _compare("rank_one_eigenvalue", values[0], inner_product(g, f), 1e-8)
    eigenvalue.passed = eigenvalue.passed and nonzero == 1
    return [action, eigenvalue]


def check_chirp_constant(grid):
    """e^{-2 i x xi} f(xi) maps g to the constant (2 pi)^{-1} int f_hat(2s) g(s) ds."""
    a = sample(Fixture.chirp_symbol(Fixture.gaussian()), grid.symbol_grid(), tags=TIME_FREQ)
    g = sample(Fixture.gaussian(), grid)
    out = weyl_apply(a, g).values
    mean = out.mean()
    variation = float(np.std(out) / abs(mean))
    constant = IdentityCheck("chirp_constant", variation, 0.0, variation, 1e-6, variation <= 1e-6)
    # f_hat(2s) = sqrt(2 pi) e^{-2 s^2}, so the integral is sqrt(2 pi) sqrt(pi / 2.5)
    expected = np.sqrt(2 * np.pi) * np.sqrt(np.pi / 2.5) / (2 * np.pi)
    return [constant, _compare("chirp_mean", mean, expected, 1e-6)]


def check_localization(grid):
    """L^1 = 2 pi <gamma, psi> I, and the composition and Weyl-symbol paths agree."""
    psi = sample(Fixture.gaussian(), grid)
    gamma = sample(Fixture.gaussian(0.3, 1.2), grid)
    f = sample(Fixture.gaussian(0.5, 1.0, 1.0), grid)
    one = sample(Fixture.constant(), grid.stft_lattice(), tags=TIME_FREQ)
    identity = _compare("localization_identity", localization_compose(one, psi, gamma, f).values,
                        2 * np.pi * inner_product(gamma, psi) * f.values, 1e-6)
    symbol = Fixture.gaussian((0.5, 0.0), 1.0, (0.0, 0.5))
    composed = localization_compose(sample(symbol, grid.stft_lattice(), tags=TIME_FREQ), psi, gamma, f)
    via_weyl = localization_via_weyl(sample(symbol, grid.symbol_grid(), tags=TIME_FREQ), psi, gamma).apply(f)
    return [identity, _compare("localization_paths", composed.values, via_weyl.values, 1e-4)]


def check_fourier_wigner(grid):
    f = sample(Fixture.gaussian(0.5, 1.0, 1.0), grid)
    g = sample(Fixture.gaussian(-1.0, 1.2, -0.5), grid)
    return [_compare("fourier_wigner", *fourier_wigner_relation(f, g), 1e-6),
            _compare("cross_ambiguity", *ambiguity_wigner_relation(f, g), 1e-6)]


def _matching(p, q):
    scale = max(np.abs(p).max(), np.abs(q).max(), 1.0)
    return np.nonzero(np.isclose(p[:, None], q[None, :], rtol=0, atol=1e-9 * scale))


def check_partial_fourier_stft(n=64, half_extent=10.0, stride=4):
    """V_psi a(x, -y, eta, xi) = (2 pi)^{-1} e^{i y xi} V_{F_2 psi} F_2 a(x, xi, eta, y).

    The left side is the 4-variable STFT on a (TIME, TIME) grid, the right side the one
    of the partial transforms on the (TIME, FREQ) grid, compared where both lattices meet.
    Both Nyquist limits sit well past the spectrum of a times the window, which is
    wider than the spectrum of either factor.
    """
    grid = Grid.uniform(n, half_extent, 2)
    a = sample(Fixture.gaussian((0.25, -0.25), 1.0, (0.0, 0.5)), grid, check_decay=False)
    psi = sample(Fixture.gaussian((0.0, 0.0)), grid, check_decay=False)
    lattice = SubLattice(stride)
    left = symbol_stft4(a, psi, lattice)
    right = symbol_stft4(partial_fourier(a, 1), partial_fourier(psi, 1), lattice)
    k, j = _matching(left.lattice.points(1), -right.lattice.points(3))
    m, l = _matching(left.lattice.points(3), right.lattice.points(1))
    y = right.lattice.points(3)[j]
    xi = right.lattice.points(1)[l]
    lhs = left.values[:, k][:, :, :, m]
    # axes (x, xi, eta, y) reordered to (x, y, eta, xi)
    rhs = np.transpose(right.values[:, l][:, :, :, j], (0, 3, 2, 1))
    rhs = rhs * np.exp(1j * y[None, :, None, None] * xi[None, None, None, :]) / (2 * np.pi)
    return [_compare("partial_fourier_stft", lhs, rhs, 1e-6)]


def check_band_limited(grid, a=0.5, b=2.0):
    """f supported in [a, b]: F Wig(f, I f) vanishes off v in [-2b, -2a], and the strip multiplier keeps Wig(f, I f)."""
    f = sample(Fixture.bump(a, b), grid)
    reflected = reflect(f)
    spectrum_values = np.abs(fourier_wigner(f, reflected).values)
    v = grid.wigner_lattice().dual().points(1)
    outside = (v < -2 * b) | (v > -2 * a)
    outside[0] = False
    leak = float(spectrum_values[:, outside].max() / spectrum_values.max())
    support = IdentityCheck("band_limited_support", leak, 0.0, leak, 1e-8, leak <= 1e-8)
    W = wigner_symbol(f, reflected)
    strip = fourier_multiplier(W, lambda w: ((w >= -2 * b) & (w <= -2 * a)).astype(float))
    return [support, _compare("band_limited_convolution", strip.values, W.values, 1e-6)]


def check_modulation_norms(grid, weight=None):
    """||V_psi f||_{2,2} = sqrt(2 pi) ||f|| ||psi||, and the weighted Holder bound of the duality pairing."""
    weight = weight or Weight(WeightKind.LOG1P)
    f = sample(Fixture.gaussian(0.5, 1.0, 1.0), grid)
    h = sample(Fixture.hermite(2), grid)
    psi = sample(Fixture.gaussian(), grid)
    energy = _compare("stft_energy", modulation_norm(f, psi, MixedNormSpec(2, 2, 0, weight)),
                      np.sqrt(2 * np.pi) * f.norm() * psi.norm(), 1e-6)
    pairing, bound = holder_bound(f, h, psi, 1.0, weight)
    holder = IdentityCheck("holder_bound", pairing, bound, 0.0, 0.0, pairing <= bound * (1 + 1e-12))
    return [energy, holder]


def run_identities(n=128, half_extent=12.0, weight=None, seed=0):
    """Run every identity check on the grid `(n, half_extent)`.

    Parameters
    ----------
    n : int, optional
        Grid size, by default 128
    half_extent : float, optional
        By default 12.0
    weight : Weight, optional
        Weight of the weighted norm checks, by default log(1 + t).
    seed : int, optional
        Seed of the random test data, by default 0

    Returns
    -------
    checks : list of IdentityCheck
    """
    grid = Grid(((n, half_extent),))
    checks = []
    for run in (check_fourier_bridge, lambda g: check_stft_points(g, seed), check_stft_inversion, check_moyal,
                check_wigner_marginal, lambda g: check_wigner_like(g, seed), check_kernel_paths, check_weak_pairing,
                check_rank_one, check_chirp_constant, check_localization, check_fourier_wigner,
                lambda g: check_partial_fourier_stft(), check_band_limited,
                lambda g: check_modulation_norms(g, weight)):
        start = time.perf_counter()
        result = run(grid)
        logger.info("%s: %s (%.2fs)", ", ".join(c.name for c in result),
                    "pass" if all(c.passed for c in result) else "FAIL", time.perf_counter() - start)
        checks.extend(result)
    return checks


def identities_frame(checks):
    return pd.DataFrame([{"name": c.name, "relative_error": c.relative_error, "tolerance": c.tolerance,
                          "passed": c.passed} for c in checks])


def identities_json(checks, **extra):
    return json.dumps(dict({"checks": [c.to_dict() for c in checks],
                            "passed": all(c.passed for c in checks)}, **extra), sort_keys=True, indent=2,
                      allow_nan=False)
