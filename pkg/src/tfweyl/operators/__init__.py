"""
Summary of module `tfweyl.operators`:

This module contains the operators acting on sampled functions, materialized as dense
matrices: Weyl quantization of symbols, multiplication and convolution operators,
localization operators built by composition and through their Weyl symbol, and spectra.

## Classes

1. OperatorMatrix : Dense matrix with the step-weighted convention.

## Functions

1. weyl_kernel, weyl_kernel_explicit : Kernel of a^w(x, D), two paths.
2. symbol_from_kernel : Weyl symbol of a kernel.
3. weyl_matrix, weyl_apply : Matrix and action of a^w(x, D).
4. wigner_symbol : Wig(g, f) on the symbol grid.
5. weak_pairing_check : Both sides of the weak definition of a^w(x, D).
6. multiplication_operator, convolution_operator : M_a and C_b.
7. op_tensor_delta, op_delta_tensor : Weyl operators of a1 (x) delta and delta (x) a2.
8. localization_compose, localization_matrix : V*_gamma M_a V_psi.
9. localization_via_weyl : (a * Wig(gamma, psi))^w.
10. convolve_with_wigner, fourier_multiplier : Symbol-grid convolution and Fourier multipliers.
11. spectrum : Eigenvalues sorted by modulus.

"""

from ._matrix import OperatorMatrix, spectrum
from ._weyl import (weyl_kernel, weyl_kernel_explicit, symbol_from_kernel, weyl_matrix, weyl_apply,
                    wigner_symbol, symbol_pairing, weak_pairing_check)
from ._basic import multiplication_operator, convolution_operator, op_tensor_delta, op_delta_tensor
from ._localization import (localization_compose, localization_matrix, localization_via_weyl,
                            convolve_with_wigner, fourier_multiplier)

__all__ = ["OperatorMatrix", "spectrum", "weyl_kernel", "weyl_kernel_explicit", "symbol_from_kernel",
           "weyl_matrix", "weyl_apply", "wigner_symbol", "symbol_pairing", "weak_pairing_check",
           "multiplication_operator", "convolution_operator", "op_tensor_delta", "op_delta_tensor",
           "localization_compose", "localization_matrix", "localization_via_weyl", "convolve_with_wigner",
           "fourier_multiplier"]
