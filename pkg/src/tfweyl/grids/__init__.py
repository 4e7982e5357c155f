"""
Summary of module `tfweyl.grids`:

This module contains the uniform sample grids, the sampled functions living on them,
the bridge between the discrete Fourier transform and the continuous convention
f^(xi) = int e^{-i t xi} f(t) dt, the elementary phase-space operators and a library
of test functions.

## Classes

1. Grid : Uniform symmetric grid, one `(N, L)` pair per axis.
2. SampledFunction : Complex samples on a grid with space tags.
3. SpaceTag : `TIME` or `FREQ`, per axis.
4. Fixture : Specification of a test function (Gaussian, Hermite, chirp symbol, bump, constant, tensor).
5. FixtureKind : The fixture families.

## Functions

1. sample : Evaluate a fixture on a grid.
2. fourier, inverse_fourier, partial_fourier : Continuous-convention Fourier transforms.
3. dft_bridge, idft_bridge : Exact phase-twiddled DFT sums on arbitrary origins.
4. phase_space_shift, reflect : Time-frequency shifts and the reflection f(-t).
5. inner_product : Quadrature inner product, conjugate-linear in the second argument.
6. save_field, load_field : Binary field format with JSON sidecar.
7. hermite_function, bump : Pointwise evaluation helpers.

"""

from ._grid import Grid, SampledFunction, SpaceTag, check_same_grid, check_tags, inner_product
from ._fourier import dft_bridge, idft_bridge, fourier, inverse_fourier, partial_fourier
from ._shift import lattice_index, phase_space_shift, reflect, reflect_index
from ._fixtures import Fixture, FixtureKind, sample, hermite_function, bump
from ._io import save_field, load_field

__all__ = ["Grid", "SampledFunction", "SpaceTag", "check_same_grid", "check_tags", "inner_product",
           "dft_bridge", "idft_bridge", "fourier", "inverse_fourier", "partial_fourier",
           "lattice_index", "phase_space_shift", "reflect", "reflect_index",
           "Fixture", "FixtureKind", "sample", "hermite_function", "bump", "save_field", "load_field"]
