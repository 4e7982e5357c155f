"""
Summary of module `tfweyl.weights`:

This module contains the weight functions of Braun-Meise-Taylor type used by the
weighted modulation spaces, their condition checks and their Young conjugates.

## Classes

1. Weight : A weight function from one of the three admitted families.
2. WeightKind : The families, `log1p`, `power` and `logpower`.
3. ConditionReport : Outcome of the numerical checks of conditions (alpha) to (delta).
4. ConjugateTable : Tabulated Young conjugate.

## Functions

1. eval_weight : Evaluate a weight on a vector (radial extension).
2. phi : Evaluate t -> w(e^t).
3. check_conditions : Check conditions (alpha), (alpha'), (beta), (gamma), (delta) numerically.
4. beta_quadrature : Quadrature of the integrability condition for any kernel.
5. young_conjugate : Young conjugate of a weight on a t-grid.
6. legendre_conjugate : Conjugate of an arbitrary convex function on [0, inf).

"""

from ._weight import Weight, WeightKind, eval_weight, phi
from ._conditions import ConditionReport, check_conditions, beta_quadrature
from ._conjugate import ConjugateTable, young_conjugate, legendre_conjugate

__all__ = ["Weight", "WeightKind", "eval_weight", "phi", "ConditionReport", "check_conditions",
           "beta_quadrature", "ConjugateTable", "young_conjugate", "legendre_conjugate"]
