import sys
import os
import warnings

import numpy as np
import pytest
from pytest import approx

sys.path.append(os.path.join(os.path.dirname(os.path.abspath(__file__)), ".."))
from tfweyl.exceptions import (BoundaryDecayWarning, ConsistencyWarning, DimensionMismatch, GridMismatch, OffLattice,
                               SpaceTagMismatch)
from tfweyl.grids import (Fixture, FixtureKind, Grid, SampledFunction, SpaceTag, dft_bridge, fourier, idft_bridge,
                          inner_product, inverse_fourier, load_field, partial_fourier, phase_space_shift, reflect,
                          sample, save_field)

GRID = Grid(((128, 12.0),))
SMALL = Grid(((64, 8.0),))


class TestGrid():

    def test_lattice_relation(self):
        grid = Grid(((64, 8.0), (32, 3.0)))
        for (n, _), step, dual in zip(grid.axes, grid.steps, grid.dual_steps):
            assert step * dual * n == approx(2 * np.pi)
        assert grid.steps == approx((0.25, 0.1875))
        assert grid.points(0)[0] == -8.0
        assert grid.points(0)[grid.center_index(0)] == 0.0
        assert grid.size == 64 * 32
        assert grid.weight == approx(0.25 * 0.1875)

    def test_invalid(self):
        pytest.raises(ValueError, Grid, ((96, 8.0),))
        pytest.raises(ValueError, Grid, ((64, 0.0),))
        pytest.raises(DimensionMismatch, Grid, ((8, 1.0),) * 3)
        pytest.raises(DimensionMismatch, Grid.uniform(8, 1.0, 2).stft_lattice)

    def test_lattices(self):
        stft = SMALL.stft_lattice()
        assert stft.axes == ((64, 8.0), (64, np.pi / 0.25))
        wigner = SMALL.wigner_lattice()
        assert wigner.axes[1][1] == approx(np.pi / 0.5)
        symbol = SMALL.symbol_grid()
        assert symbol.shape == (128, 64)
        assert symbol.steps[0] == approx(SMALL.steps[0] / 2)
        assert symbol.base_of_symbol() == SMALL
        assert stft.base_of_symbol() is None
        assert SMALL.base_of_symbol() is None

    def test_product(self):
        assert (SMALL * GRID).axes == ((64, 8.0), (128, 12.0))
        assert (SMALL * GRID).subgrid([1]) == GRID


class TestSampledFunction():

    def test_values(self):
        f = SampledFunction(SMALL, np.arange(64))
        assert f.values.dtype == complex
        assert f.tags == (SpaceTag.TIME,)
        assert not f.values.flags.writeable
        pytest.raises(DimensionMismatch, SampledFunction, SMALL, np.arange(63))
        pytest.raises(DimensionMismatch, SampledFunction, SMALL, np.arange(64), tags=(0, 1))

    def test_arithmetic(self):
        f = sample(Fixture.gaussian(), GRID)
        g = sample(Fixture.hermite(1), GRID)
        assert ((f + g) - g).values == approx(f.values)
        assert (2 * f).norm() == approx(2 * f.norm())
        assert f.norm() == approx(np.pi ** 0.25)
        pytest.raises(GridMismatch, f.__add__, sample(Fixture.gaussian(), SMALL))

    def test_inner_product(self):
        f = sample(Fixture.gaussian(modulation=0.5), GRID)
        g = sample(Fixture.hermite(2), GRID)
        assert inner_product(f, 1j * g) == approx(-1j * inner_product(f, g))
        assert inner_product(f, f) == approx(f.norm() ** 2)
        freq = SampledFunction(GRID, g.values, tags=SpaceTag.FREQ)
        pytest.raises(GridMismatch, inner_product, f, freq)

    def test_hermite_orthonormal(self):
        h = [sample(Fixture.hermite(k), GRID) for k in range(5)]
        gram = np.array([[inner_product(a, b) for b in h] for a in h])
        assert np.abs(gram - np.eye(5)).max() < 1e-10


class TestFourier():

    def test_dft_bridge_direct_sum(self):
        rng = np.random.default_rng(0)
        values = rng.normal(size=16) + 1j * rng.normal(size=16)
        x0, dx, xi0 = -2.0, 0.25, -1.3
        x = x0 + dx * np.arange(16)
        xi = xi0 + 2 * np.pi / (16 * dx) * np.arange(16)
        direct = np.exp(-1j * np.outer(xi, x)) @ values
        assert dft_bridge(values, x0, dx, xi0) == approx(direct, abs=1e-12)
        dxi = 2 * np.pi / (16 * dx)
        back = np.exp(1j * np.outer(x, xi)) @ direct
        assert idft_bridge(direct, xi0, dxi, x0) == approx(back, abs=1e-10)

    def test_gaussian(self):
        f = sample(Fixture.gaussian(), GRID)
        F = fourier(f)
        xi = F.grid.points(0)
        assert F.tags == (SpaceTag.FREQ,)
        assert F.grid == GRID.dual()
        assert np.abs(F.values - np.sqrt(2 * np.pi) * np.exp(-xi ** 2 / 2)).max() < 1e-12

    def test_round_trip_and_plancherel(self):
        for spec in (Fixture.gaussian(width=0.7, modulation=1.0), Fixture.hermite(3)):
            f = sample(spec, GRID)
            F = fourier(f)
            assert np.abs(inverse_fourier(F).values - f.values).max() < 1e-12
            assert F.norm() ** 2 == approx(2 * np.pi * f.norm() ** 2, rel=1e-10)

    def test_hermite_eigenfunction(self):
        f = sample(Fixture.hermite(1), GRID)
        F = fourier(f)
        expected = np.sqrt(2 * np.pi) * (-1j) * Fixture.hermite(1).evaluate(F.grid.points(0))
        assert np.abs(F.values - expected).max() < 1e-10

    def test_partial(self):
        grid = Grid.uniform(32, 8.0, 2)
        f = sample(Fixture.gaussian((0.0, 0.0)), grid)
        once = partial_fourier(f, 1)
        assert once.tags == (SpaceTag.TIME, SpaceTag.FREQ)
        assert once.grid.axes[0] == grid.axes[0]
        assert np.abs(partial_fourier(once, 1, "inverse").values - f.values).max() < 1e-12
        pytest.raises(SpaceTagMismatch, partial_fourier, f, 0, "inverse")
        pytest.raises(ValueError, partial_fourier, f, 0, "backward")
        pytest.raises(SpaceTagMismatch, inverse_fourier, f)


class TestShift():

    def test_phase_space_shift(self):
        f = sample(Fixture.gaussian(), GRID)
        g = phase_space_shift(f, 0.75, np.pi / 4)
        expected = Fixture.gaussian(0.75, modulation=np.pi / 4).evaluate(GRID.points(0))
        assert np.abs(g.values - expected).max() < 1e-12
        assert g.norm() == approx(f.norm())

    def test_off_lattice(self):
        f = sample(Fixture.gaussian(), SMALL)
        pytest.raises(OffLattice, phase_space_shift, f, 0.1)
        pytest.raises(OffLattice, phase_space_shift, f, 0.0, 0.1)

    def test_reflect(self):
        f = sample(Fixture.gaussian(1.0), GRID)
        expected = Fixture.gaussian(-1.0).evaluate(GRID.points(0))
        assert np.abs(reflect(f).values - expected).max() < 1e-9
        assert reflect(reflect(f)).values == approx(f.values)


class TestFixtures():

    def test_sample_flags(self):
        assert sample(Fixture.constant(2.0), SMALL).truncated
        assert not sample(Fixture.gaussian(), SMALL).truncated
        grid = Grid.uniform(32, 4.0, 2)
        a = sample(Fixture.chirp_symbol(Fixture.gaussian()), grid, check_decay=False)
        assert a.truncated
        assert np.abs(a.values).max() == approx(1.0)
        pytest.raises(DimensionMismatch, sample, Fixture.gaussian(), grid)

    def test_boundary_warning(self):
        with pytest.warns(BoundaryDecayWarning):
            sample(Fixture.gaussian(width=3.0), Grid(((64, 4.0),)))
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            sample(Fixture.gaussian(width=3.0), Grid(((64, 4.0),)), check_decay=False)

    def test_bump_support(self):
        f = sample(Fixture.bump(-1.0, 2.0), SMALL)
        x = SMALL.points(0)
        assert np.all(f.values[(x <= -1) | (x >= 2)] == 0)
        assert np.all(np.abs(f.values[(x > -1) & (x < 2)]) > 0)

    def test_tensor_and_conj(self):
        spec = Fixture.tensor(Fixture.hermite(1), Fixture.gaussian(modulation=2.0))
        assert spec.arity == 2
        grid = Grid.uniform(32, 8.0, 2)
        a = sample(spec, grid)
        b = sample(spec.conj(), grid)
        assert b.values == approx(np.conj(a.values))

    def test_tensor_with_constant(self):
        grid = Grid.uniform(32, 8.0, 2)
        x, y = grid.points(0), grid.points(1)
        gaussian = Fixture.gaussian().evaluate(x)
        left = Fixture.tensor(Fixture.gaussian(), Fixture.constant(2.0))
        right = Fixture.tensor(Fixture.constant(), Fixture.gaussian())
        assert left.arity == right.arity == 2
        assert not left.decaying
        a = sample(left, grid)
        b = sample(right, grid)
        assert a.truncated and b.truncated
        assert a.values == approx(2 * np.repeat(gaussian[:, None], len(y), axis=1))
        assert b.values == approx(np.repeat(gaussian[None, :], len(x), axis=0))
        pytest.raises(DimensionMismatch, sample, left, SMALL)

    def test_dict(self):
        specs = [Fixture.gaussian(0.5, 2.0, 1.0), Fixture.hermite(3), Fixture.bump(0, 1, 2),
                 Fixture.constant(1 + 2j), Fixture.chirp_symbol(Fixture.gaussian(), sign=1).conj(),
                 Fixture.tensor(Fixture.hermite(0), Fixture.bump())]
        for spec in specs:
            assert Fixture.from_dict(spec.to_dict()) == spec
        assert Fixture.from_dict({"kind": "gaussian"}).kind is FixtureKind.GAUSSIAN
        pytest.raises(ValueError, Fixture.from_dict, {"kind": "sinc"})


class TestFieldIO():

    def test_round_trip(self, tmp_path):
        grid = Grid(((16, 2.0), (8, 3.0)))
        f = sample(Fixture.constant(1 + 1j), grid, tags=(SpaceTag.TIME, SpaceTag.FREQ))
        path = str(tmp_path / "a.tfw")
        digest = save_field(f, path, kind=3, convention=1, meta={"name": "a"})
        g, trailer = load_field(path, with_trailer=True)
        assert g.grid == grid
        assert g.tags == f.tags
        assert np.array_equal(g.values, f.values)
        assert g.truncated
        assert g.provenance["sha256"] == digest
        assert trailer == {"kind": 3, "convention": 1, "meta": {"name": "a"}}
        assert load_field(path).provenance["fixture"]["kind"] == "constant"

    def test_no_trailer(self, tmp_path):
        f = sample(Fixture.gaussian(), SMALL)
        path = str(tmp_path / "f.tfw")
        save_field(f, path)
        _, trailer = load_field(path, with_trailer=True)
        assert trailer is None

    def test_checksum_warning(self, tmp_path):
        f = sample(Fixture.gaussian(), SMALL)
        path = str(tmp_path / "f.tfw")
        save_field(f, path)
        with open(path, "r+b") as file:
            file.seek(-8, os.SEEK_END)
            file.write(b"\x01" * 8)
        with pytest.warns(ConsistencyWarning):
            load_field(path)

    def test_bad_file(self, tmp_path):
        path = tmp_path / "bad.tfw"
        path.write_bytes(b"not a field file at all")
        pytest.raises(ValueError, load_field, str(path))
