"""
Summary of module `tfweyl.diagnostics`:

This module turns the STFT decay characterizations of multipliers, convolutors, Weyl
operators and localization operators into sweep-and-verdict procedures on finite lattices.

## Classes

1. MultiplierDiagnostic, ConvolutorDiagnostic : Decay in one variable against growth in the other.
2. WeylCompactnessDiagnostic : 4-variable test of Weyl symbols.
3. LocalizationCompactnessDiagnostic : Weyl test of a * Wig(gamma, psi).
4. TailDiagnostic : Weighted tail condition.
5. DecayReport, TailReport, ChainReport : Outcomes.
6. HeuristicParams, Verdict : Declared thresholds and verdicts.

## Functions

1. multiplier_test, convolutor_test, weyl_compactness_test, localization_compactness_test, tail_test
2. diagnose_pair : A test under log(1+t) and t^(1/2).
3. implication_chain : Convolutor, Weyl and localization verdicts of one symbol.
4. band_limited_localization : Localization test of the band-limited strip multiplier.

"""

from ._report import DEFAULT_LAMBDAS, DecayReport, HeuristicParams, Verdict, classify, default_mu_grid, fit_mu_star
from ._decay import (MultiplierDiagnostic, ConvolutorDiagnostic, WeylCompactnessDiagnostic,
                     LocalizationCompactnessDiagnostic, TailDiagnostic, TailReport, crop_symbol, multiplier_test,
                     convolutor_test, weyl_compactness_test, localization_compactness_test, tail_test)
from ._chain import (PAIRED_WEIGHTS, ChainReport, band_limited_localization, chain_violations, diagnose_pair,
                     implication_chain)

__all__ = ["DEFAULT_LAMBDAS", "DecayReport", "HeuristicParams", "Verdict", "classify", "default_mu_grid",
           "fit_mu_star", "MultiplierDiagnostic", "ConvolutorDiagnostic", "WeylCompactnessDiagnostic",
           "LocalizationCompactnessDiagnostic", "TailDiagnostic", "TailReport", "crop_symbol", "multiplier_test",
           "convolutor_test", "weyl_compactness_test", "localization_compactness_test", "tail_test",
           "PAIRED_WEIGHTS", "ChainReport", "band_limited_localization", "chain_violations", "diagnose_pair",
           "implication_chain"]
