"""
Summary of module `tfweyl.transforms`:

This module contains the time-frequency transforms: short-time Fourier transform and
its inversion, cross-Wigner and Wigner-like transforms, cross-ambiguity function,
the Fourier-Wigner relations and the 4-variable STFT of symbols.

## Classes

1. PhaseSpaceField : Values of a transform on a phase-space lattice.
2. FieldKind : `STFT`, `WIGNER`, `AMBIGUITY`, `STFT4`, `FOURIER_WIGNER`.
3. SubLattice : Outer lattice of `symbol_stft4`.

## Functions

1. stft : V_psi f on the full or a sub-sampled lattice.
2. stft_adjoint : Adjoint V*_gamma on the full lattice.
3. stft_invert : Inversion formula with synthesis window gamma.
4. cross_wigner : Wig(g, f) on the Wigner lattice.
5. wigner_like, wigner_like_inv : Kernel to symbol grid and back.
6. cross_ambiguity : A(f, g), cross-checked against the STFT form.
7. fourier_wigner : Fourier transform of Wig(f, g).
8. fourier_wigner_relation, ambiguity_wigner_relation : Both sides of the Fourier-Wigner identities.
9. symbol_stft4 : V_Psi a(x, xi, eta, y) of a symbol.

"""

from ._field import FieldKind, PhaseSpaceField
from ._stft import stft, stft_adjoint, stft_invert, shifted_windows
from ._wigner import (cross_wigner, wigner_like, wigner_like_inv, symbol_lags, symbol_from_lags,
                      fourier_wigner, fourier_wigner_relation)
from ._ambiguity import cross_ambiguity, ambiguity_wigner_relation
from ._stft4 import SubLattice, symbol_stft4, MEMORY_BUDGET

__all__ = ["FieldKind", "PhaseSpaceField", "stft", "stft_adjoint", "stft_invert", "shifted_windows",
           "cross_wigner", "wigner_like", "wigner_like_inv", "symbol_lags", "symbol_from_lags", "fourier_wigner",
           "fourier_wigner_relation",
           "cross_ambiguity", "ambiguity_wigner_relation", "SubLattice", "symbol_stft4", "MEMORY_BUDGET"]
