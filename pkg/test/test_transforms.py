import sys
import os

import numpy as np
import pytest
from pytest import approx

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from tfweyl.exceptions import (DegeneratePair, DimensionMismatch, GridMismatch, LatticeIncompatible,
                               MemoryBudgetExceeded, NonSquareGrid, OffLattice, SpaceTagMismatch, ZeroWindow)
from tfweyl.grids import Fixture, Grid, SampledFunction, SpaceTag, load_field, phase_space_shift, sample
from tfweyl.transforms import (FieldKind, PhaseSpaceField, SubLattice, ambiguity_wigner_relation, cross_ambiguity,
                               cross_wigner, fourier_wigner_relation, stft, stft_adjoint, stft_invert,
                               symbol_from_lags, symbol_lags, symbol_stft4, wigner_like, wigner_like_inv)
from tfweyl.utils import relative_error

GRID = Grid(((128, 12.0),))
SMALL = Grid(((32, 8.0),))


class TestSTFT():

    def test_gaussian_closed_form(self):
        f = sample(Fixture.gaussian(), GRID)
        V = stft(f, f)
        x, xi = V.lattice.mesh()
        expected = np.sqrt(np.pi) * np.exp(-x ** 2 / 4 - xi ** 2 / 4 - 0.5j * x * xi)
        assert V.kind is FieldKind.STFT
        assert V.lattice == GRID.stft_lattice()
        assert np.abs(V.values - expected).max() < 1e-10

    def test_point_value(self):
        f = sample(Fixture.hermite(2), GRID)
        psi = sample(Fixture.gaussian(), GRID)
        V = stft(f, psi)
        x, xi = 1.5, 2 * V.lattice.steps[1]
        t = GRID.points(0)
        direct = GRID.steps[0] * np.sum(f.values * np.exp(-(t - x) ** 2 / 2) * np.exp(-1j * t * xi))
        assert V.at(x, xi) == approx(direct, abs=1e-10)
        pytest.raises(OffLattice, V.at, 0.1, 0.0)

    def test_covariance(self):
        f = sample(Fixture.hermite(1), GRID)
        psi = sample(Fixture.gaussian(), GRID)
        V = stft(f, psi)
        # 0.75 is four sample steps and pi/4 three modulation steps
        shifted = stft(phase_space_shift(f, 0.75, np.pi / 4), psi)
        xi = V.lattice.points(1)
        expected = np.exp(-0.75j * xi[None, :-3]) * V.values[:-4, :-3]
        assert np.abs(shifted.values[4:, 3:] - expected).max() < 1e-10 * np.abs(V.values).max()

    def test_inversion(self):
        f = sample(Fixture.hermite(2), GRID)
        psi = sample(Fixture.gaussian(), GRID)
        gamma = sample(Fixture.gaussian(0.5, 1.2), GRID)
        g = stft_invert(stft(f, psi), psi, gamma)
        assert relative_error(g.values, f.values) < 1e-6

    def test_sub_lattice(self):
        f = sample(Fixture.gaussian(1.0, 1.0, 1.0), GRID)
        psi = sample(Fixture.gaussian(), GRID)
        full = stft(f, psi)
        step = GRID.steps[0]
        lattice = Grid(((64, 12.0), (32, np.pi / step)))
        sub = stft(f, psi, lattice)
        assert sub.shape == (64, 32)
        assert np.allclose(sub.values, full.values[::2, ::4], rtol=0, atol=1e-14)
        pytest.raises(LatticeIncompatible, stft, f, psi, Grid(((128, 6.0), (128, np.pi / step))))
        pytest.raises(LatticeIncompatible, stft_adjoint, sub, psi)

    def test_parallel(self):
        f = sample(Fixture.hermite(1), SMALL)
        psi = sample(Fixture.gaussian(), SMALL)
        assert np.allclose(stft(f, psi, n_jobs=2).values, stft(f, psi).values)

    def test_errors(self):
        f = sample(Fixture.gaussian(), SMALL)
        zero = f.with_values(np.zeros(32))
        pytest.raises(ZeroWindow, stft, f, zero)
        pytest.raises(GridMismatch, stft, f, sample(Fixture.gaussian(), GRID))
        h0 = sample(Fixture.hermite(0), GRID)
        h1 = sample(Fixture.hermite(1), GRID)
        pytest.raises(DegeneratePair, stft_invert, stft(h0, h0), h0, h1)
        square = Grid.uniform(16, 8.0, 2)
        a = sample(Fixture.gaussian((0.0, 0.0)), square)
        pytest.raises(DimensionMismatch, stft, a, a)


class TestWigner():

    def test_gaussian(self):
        f = sample(Fixture.gaussian(), GRID)
        W = cross_wigner(f, f)
        x, xi = W.lattice.mesh()
        assert W.lattice == GRID.wigner_lattice()
        assert np.abs(W.values - 2 * np.sqrt(np.pi) * np.exp(-x ** 2 - xi ** 2)).max() < 1e-10

    def test_constant_second_argument(self):
        psi = sample(Fixture.gaussian(), GRID)
        W = cross_wigner(psi, sample(Fixture.constant(), GRID))
        x, xi = W.lattice.points(0), W.lattice.points(1)
        inner = np.abs(x) <= 1
        expected = 2 * np.exp(2j * np.outer(x[inner], xi)) * np.sqrt(2 * np.pi) * np.exp(-2 * xi ** 2)
        assert W.truncated
        assert np.abs(W.values[inner] - expected).max() < 1e-10

    def test_real_for_auto(self):
        f = sample(Fixture.hermite(3), GRID)
        W = cross_wigner(f, f)
        assert np.abs(W.values.imag).max() < 1e-12 * np.abs(W.values).max()

    def test_conjugate_symmetry(self):
        f = sample(Fixture.gaussian(0.5, 1.0, 1.0), GRID)
        g = sample(Fixture.hermite(1), GRID)
        assert np.allclose(cross_wigner(f, g).values, np.conj(cross_wigner(g, f).values), atol=1e-12)

    def test_wigner_like_tensor(self):
        f = Fixture.gaussian(0.5, 1.0, 1.0)
        g = Fixture.hermite(1)
        F = sample(Fixture.tensor(g, f.conj()), GRID * GRID)
        W = wigner_like(F)
        assert W.grid == GRID.symbol_grid()
        assert W.tags == (SpaceTag.TIME, SpaceTag.FREQ)
        expected = cross_wigner(sample(g, GRID), sample(f, GRID)).values
        assert np.abs(W.values[0::2] - expected).max() < 1e-10

    def test_wigner_like_inverse(self):
        rng = np.random.default_rng(0)
        grid = Grid(((16, 4.0),))
        F = SampledFunction(grid * grid, rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16)))
        assert relative_error(wigner_like_inv(wigner_like(F)).values, F.values) < 1e-10

    def test_lags_round_trip(self):
        symbol = sample(Fixture.gaussian((0.0, 0.0)), SMALL.symbol_grid(), tags=(SpaceTag.TIME, SpaceTag.FREQ),
                        check_decay=False)
        lags, points = symbol_lags(symbol)
        assert lags.shape == points.shape == (64, 32)
        assert points[0, 0] == -16.0
        assert points[1, 0] == approx(-16.0 + SMALL.steps[0])
        assert relative_error(symbol_from_lags(lags, symbol).values, symbol.values) < 1e-12

    def test_errors(self):
        rect = Grid(((16, 4.0), (32, 4.0)))
        pytest.raises(NonSquareGrid, wigner_like, SampledFunction(rect, np.ones(16 * 32)))
        square = Grid.uniform(16, 4.0, 2)
        tagged = SampledFunction(square, np.ones(256), tags=(SpaceTag.TIME, SpaceTag.FREQ))
        pytest.raises(SpaceTagMismatch, wigner_like, tagged)
        pytest.raises(NonSquareGrid, symbol_lags, tagged)
        untagged = SampledFunction(Grid(((16, 4.0),)).symbol_grid(), np.ones(32 * 16))
        pytest.raises(SpaceTagMismatch, symbol_lags, untagged)


class TestAmbiguity():

    def test_matches_stft(self):
        f = sample(Fixture.gaussian(0.5, 1.0, 1.0), GRID)
        g = sample(Fixture.gaussian(-1.0, 1.2, -0.5), GRID)
        A = cross_ambiguity(f, g)
        x, xi = A.lattice.mesh()
        assert A.kind is FieldKind.AMBIGUITY
        assert relative_error(A.values, np.exp(0.5j * x * xi) * stft(f, g).values) < 1e-10

    def test_fourier_wigner_relations(self):
        f = sample(Fixture.gaussian(0.5, 1.0, 1.0), GRID)
        g = sample(Fixture.gaussian(-1.0, 1.2, -0.5), GRID)
        lhs, rhs = fourier_wigner_relation(f, g)
        assert lhs.shape == (128, 127)
        assert relative_error(lhs, rhs) < 1e-6
        lhs, rhs = ambiguity_wigner_relation(f, g)
        assert lhs.shape == (128, 64)
        assert relative_error(lhs, rhs) < 1e-6


class TestSymbolSTFT():

    def _inputs(self):
        rng = np.random.default_rng(3)
        grid = Grid.uniform(16, 4.0, 2)
        a = SampledFunction(grid, rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16)))
        window = sample(Fixture.gaussian((0.0, 0.0), 0.5), grid)
        return grid, a, window

    def test_direct_sum(self):
        grid, a, window = self._inputs()
        V = symbol_stft4(a, window, SubLattice(stride=4))
        assert V.kind is FieldKind.STFT4
        assert V.shape == (4, 4, 4, 4)
        u, v = grid.mesh()
        for index in [(0, 0, 0, 0), (1, 2, 3, 0), (3, 1, 2, 2)]:
            x, xi, eta, y = (V.lattice.points(k)[i] for k, i in enumerate(index))
            shifted = np.exp(-((u - x) ** 2 + (v - xi) ** 2) / 0.5)
            direct = grid.weight * np.sum(a.values * shifted * np.exp(-1j * (u * eta + v * y)))
            assert V.values[index] == approx(direct, abs=1e-10)

    def test_interior(self):
        grid, a, window = self._inputs()
        full = symbol_stft4(a, window, SubLattice(stride=2))
        interior = symbol_stft4(a, window, SubLattice(stride=2, shift_fraction=0.5))
        assert interior.shape == (4, 4, 8, 8)
        assert interior.lattice.points(0)[0] == -2.0
        assert np.allclose(interior.values, full.values[2:6, 2:6])

    def test_gaussian_decay(self):
        grid = Grid.uniform(64, 8.0, 2)
        a = sample(Fixture.gaussian((0.0, 0.0)), grid)
        V = symbol_stft4(a, a)
        x, xi, eta, y = V.lattice.mesh()
        expected = np.pi * np.exp(-(x ** 2 + xi ** 2 + eta ** 2 + y ** 2) / 4 - 0.5j * (eta * x + y * xi))
        assert np.abs(V.values - expected).max() < 1e-10
        peak = np.abs(V.values).max()
        for axis in range(4):
            assert np.abs(np.take(V.values, 0, axis=axis)).max() < 1e-6 * peak

    def test_parallel(self):
        _, a, window = self._inputs()
        assert np.allclose(symbol_stft4(a, window, n_jobs=2).values, symbol_stft4(a, window).values)

    def test_errors(self):
        _, a, window = self._inputs()
        pytest.raises(ValueError, SubLattice, 3)
        pytest.raises(ValueError, SubLattice, 4, 0.3)
        pytest.raises(LatticeIncompatible, symbol_stft4, a, window, SubLattice(16))
        pytest.raises(MemoryBudgetExceeded, symbol_stft4, a, window, memory_budget=10)
        pytest.raises(GridMismatch, symbol_stft4, a, window.with_values(window.values, tags=(0, 1)))


class TestPhaseSpaceField():

    def test_field(self, tmp_path):
        f = sample(Fixture.gaussian(), SMALL)
        V = stft(f, f)
        assert V.as_function().tags == (SpaceTag.TIME, SpaceTag.FREQ)
        assert V.with_values(2 * V.values).values == approx(2 * V.values)
        pytest.raises(DimensionMismatch, PhaseSpaceField, FieldKind.STFT, SMALL, V.lattice, np.zeros((2, 2)))
        pytest.raises(DimensionMismatch, V.index, 0.0)
        path = str(tmp_path / "v.tfw")
        V.save(path)
        g, trailer = load_field(path, with_trailer=True)
        assert trailer["kind"] == int(FieldKind.STFT)
        assert trailer["meta"]["base_grid"] == [[32, 8.0]]
        assert np.array_equal(g.values, V.values)
