"""
Summary of module `tfweyl.modspaces`:

This module contains the weighted mixed-norm functionals on phase-space fields, the
modulation norms built on them and the STFT duality pairing.

## Classes

1. MixedNormSpec : Exponents p, q, weight exponent lambda and weight.

## Functions

1. mixed_norm : L^{p,q}_lambda norm of a phase-space field.
2. modulation_norm : M^{p,q}_lambda norm of a function for a given window.
3. duality_pairing : Lattice quadrature of V_psi f conj(V_psi h).
4. holder_bound : Pairing next to its (inf, lambda) x (1, -lambda) bound.
5. norm_sweep : Table of modulation norms over (p, q, lambda).

"""

from ._norms import MixedNormSpec, mixed_norm, modulation_norm, duality_pairing, holder_bound, norm_sweep

__all__ = ["MixedNormSpec", "mixed_norm", "modulation_norm", "duality_pairing", "holder_bound", "norm_sweep"]
