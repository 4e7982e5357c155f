import sys
import os

import numpy as np
import pandas as pd
import pytest
from pytest import approx

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from tfweyl.exceptions import ZeroWindow
from tfweyl.grids import Fixture, Grid, SampledFunction, inner_product, sample
from tfweyl.modspaces import MixedNormSpec, duality_pairing, holder_bound, mixed_norm, modulation_norm, norm_sweep
from tfweyl.transforms import SubLattice, stft, symbol_stft4
from tfweyl.weights import Weight

GRID = Grid(((128, 12.0),))
BATTERY = [Fixture.gaussian(), Fixture.gaussian(0.5, 1.0, 1.0), Fixture.hermite(1), Fixture.hermite(3),
           Fixture.bump(-2.0, 3.0)]


class TestMixedNorm():

    def test_energy(self):
        psi = sample(Fixture.gaussian(), GRID)
        for spec in BATTERY:
            f = sample(spec, GRID)
            value = modulation_norm(f, psi, MixedNormSpec(2, 2))
            assert value == approx(np.sqrt(2 * np.pi) * f.norm() * psi.norm(), rel=1e-6)

    def test_sup_of_gaussian(self):
        f = sample(Fixture.gaussian(), GRID)
        assert modulation_norm(f, f, MixedNormSpec(np.inf, np.inf)) == approx(np.sqrt(np.pi), rel=1e-12)

    def test_monotone_in_lambda(self):
        f = sample(Fixture.hermite(2), GRID)
        V = stft(f, sample(Fixture.gaussian(), GRID))
        for weight in (Weight("log1p"), Weight("power", a=0.5)):
            for p, q in [(1, 1), (2, 2), (np.inf, 1), (np.inf, np.inf)]:
                values = [mixed_norm(V, MixedNormSpec(p, q, lam, weight)) for lam in (-1, 0, 0.5, 1, 2)]
                assert np.all(np.diff(values) >= 0)

    def test_scaling(self):
        f = sample(Fixture.gaussian(0.5, 1.0, 1.0), GRID)
        psi = sample(Fixture.gaussian(), GRID)
        spec = MixedNormSpec(1, 2, 0.5)
        assert modulation_norm(2 * f, psi, spec) == approx(2 * modulation_norm(f, psi, spec))

    def test_window_equivalence(self):
        narrow = sample(Fixture.gaussian(), GRID)
        wide = sample(Fixture.gaussian(width=1.5), GRID)
        for spec in BATTERY:
            f = sample(spec, GRID)
            for norm in (MixedNormSpec(1, 1, 1.0), MixedNormSpec(np.inf, np.inf, 1.0), MixedNormSpec(2, 1)):
                ratio = modulation_norm(f, narrow, norm) / modulation_norm(f, wide, norm)
                assert 0.1 <= ratio <= 10

    def test_growth_in_lambda(self):
        f = sample(Fixture.gaussian(), GRID)
        values = [modulation_norm(f, f, MixedNormSpec(np.inf, np.inf, lam)) for lam in (1, 2, 4, 8)]
        assert np.all(np.isfinite(values))
        assert np.all(np.diff(values) > 0)

    def test_four_variable_field(self):
        grid = Grid.uniform(16, 8.0, 2)
        a = sample(Fixture.gaussian((0.0, 0.0)), grid)
        V = symbol_stft4(a, a, SubLattice(stride=2))
        assert mixed_norm(V, MixedNormSpec(np.inf, np.inf)) == approx(np.abs(V.values).max())
        assert mixed_norm(V, MixedNormSpec(1, 1, 1.0)) > mixed_norm(V, MixedNormSpec(1, 1))

    def test_spec(self):
        pytest.raises(ValueError, MixedNormSpec, 0.5)
        pytest.raises(ValueError, MixedNormSpec, 2, 0)
        spec = MixedNormSpec(1, np.inf, -1)
        assert spec.q == np.inf and spec.lam == -1.0
        assert spec.weight == Weight("log1p")

    def test_zero_window(self):
        f = sample(Fixture.gaussian(), GRID)
        zero = SampledFunction(GRID, np.zeros(128))
        pytest.raises(ZeroWindow, modulation_norm, f, zero, MixedNormSpec())
        pytest.raises(ZeroWindow, duality_pairing, f, f, zero)


class TestDuality():

    def test_pairing_constant(self):
        psi = sample(Fixture.gaussian(0.3, 1.2), GRID)
        for first, second in [(BATTERY[0], BATTERY[1]), (BATTERY[1], BATTERY[3]), (BATTERY[4], BATTERY[0])]:
            f, h = sample(first, GRID), sample(second, GRID)
            expected = 2 * np.pi * psi.norm() ** 2 * inner_product(f, h)
            assert duality_pairing(f, h, psi) == approx(expected, rel=1e-8)

    def test_parity(self):
        psi = sample(Fixture.gaussian(), GRID)
        f = sample(Fixture.gaussian(), GRID)
        h = sample(Fixture.hermite(1), GRID)
        assert abs(duality_pairing(f, h, psi)) <= 1e-10 * f.norm() * h.norm() * psi.norm() ** 2

    def test_conjugate_symmetry(self):
        psi = sample(Fixture.gaussian(), GRID)
        f = sample(Fixture.gaussian(0.5, 1.0, 1.0), GRID)
        h = sample(Fixture.hermite(2), GRID)
        assert duality_pairing(f, h, psi) == approx(np.conj(duality_pairing(h, f, psi)))

    def test_holder_bound(self):
        psi = sample(Fixture.gaussian(), GRID)
        for weight in (Weight("log1p"), Weight("power", a=0.5)):
            for lam in (0, 0.5, 1):
                for first, second in [(BATTERY[0], BATTERY[2]), (BATTERY[1], BATTERY[3]), (BATTERY[4], BATTERY[1])]:
                    pairing, bound = holder_bound(sample(first, GRID), sample(second, GRID), psi, lam, weight)
                    assert pairing <= bound * (1 + 1e-12)


class TestNormSweep():

    def test_table(self, tmp_path):
        f = sample(Fixture.hermite(1), GRID)
        psi = sample(Fixture.gaussian(), GRID)
        path = tmp_path / "sweep.csv"
        table = norm_sweep(f, psi, path=str(path))
        assert list(table.columns) == ["p", "q", "lambda", "value"]
        assert len(table) == 27
        row = table[(table["p"] == 2) & (table["q"] == 2) & (table["lambda"] == 0)]
        assert row["value"].iloc[0] == approx(np.sqrt(2 * np.pi) * f.norm() * psi.norm(), rel=1e-6)
        assert pd.read_csv(path).shape == (27, 4)
