import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..exceptions import InvalidWeight

logger = logging.getLogger(__name__)


class WeightKind(str, Enum):
    LOG1P = "log1p"
    POWER = "power"
    LOGPOWER = "logpower"


@dataclass(frozen=True)
class Weight:
    """Weight function w(t) = c * kernel(t) on [0, +inf), extended radially to vectors.

    Families
    --------
    - `log1p`: w(t) = c log(1+t), the Schwartz case.
    - `power`: w(t) = c t^a with 0 < a < 1 (Gevrey type, subadditive).
    - `logpower`: w(t) = c log(1+t)^a with a >= 1.

    Parameters
    ----------
    kind : WeightKind or str
        Family of the weight.
    a : float, optional
        Exponent of the family, ignored for `log1p`, by default 1.0
    c : float, optional
        Positive multiplier, by default 1.0

    Example
    -------
    ```python
    from tfweyl.weights import Weight
    w = Weight("power", a=0.5)
    w([3.0, 4.0])  # sqrt(5)
    ```
    """
    kind: WeightKind
    a: float = 1.0
    c: float = 1.0

    def __post_init__(self):
        try:
            kind = WeightKind(self.kind)
        except ValueError:
            raise InvalidWeight(f"Unknown weight kind {self.kind!r}, use one of {[k.value for k in WeightKind]}")
        object.__setattr__(self, "kind", kind)
        a, c = float(self.a), float(self.c)
        if not c > 0:
            raise InvalidWeight(f"Weight multiplier c must be positive, but found: {c}")
        if kind is WeightKind.POWER and not 0 < a < 1:
            raise InvalidWeight(f"`power` weights need 0 < a < 1, but found: {a}")
        if kind is WeightKind.LOGPOWER and a < 1:
            raise InvalidWeight(f"`logpower` weights need a >= 1, but found: {a}")
        if kind is WeightKind.LOG1P:
            a = 1.0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)

    def kernel(self, t):
        """Evaluate w on nonnegative reals (elementwise)."""
        t = np.asarray(t, dtype=float)
        if self.kind is WeightKind.LOG1P:
            return self.c * np.log1p(t)
        if self.kind is WeightKind.POWER:
            return self.c * np.power(t, self.a)
        return self.c * np.power(np.log1p(t), self.a)

    def radial(self, *coordinates):
        """Evaluate w(|(x_1, ..., x_k)|) on broadcastable coordinate arrays."""
        squared = sum(np.square(np.asarray(x, dtype=float)) for x in coordinates)
        return self.kernel(np.sqrt(squared))

    def __call__(self, v):
        return eval_weight(self, v)

    @property
    def subadditive(self):
        """True for the families that satisfy w(s+t) <= w(s) + w(t)."""
        return self.kind in (WeightKind.LOG1P, WeightKind.POWER)

    def to_dict(self):
        return {"kind": self.kind.value, "a": self.a, "c": self.c}

    @classmethod
    def from_dict(cls, data):
        """Build a weight from its JSON form `{"kind": ..., "a": ..., "c": ...}`."""
        if isinstance(data, str):
            return cls(data)
        if "kind" not in data:
            raise InvalidWeight(f"Weight specification needs a `kind`, found keys {sorted(data)}")
        return cls(data["kind"], a=data.get("a", 1.0), c=data.get("c", 1.0))

    def __str__(self):
        if self.kind is WeightKind.LOG1P:
            return f"{self.c:g}*log(1+t)"
        if self.kind is WeightKind.POWER:
            return f"{self.c:g}*t^{self.a:g}"
        return f"{self.c:g}*log(1+t)^{self.a:g}"


def eval_weight(w, v):
    """Evaluate the weight on a real vector (or scalar) through its Euclidean norm.

    Parameters
    ----------
    w : Weight
        Weight function.
    v : float or array-like of shape (d,)
        Point of R^d.

    Returns
    -------
    value : float
        w(|v|), nonnegative.
    """
    v = np.atleast_1d(np.asarray(v, dtype=float))
    return float(w.kernel(np.linalg.norm(v)))


def phi(w, t):
    """phi_w(t) = w(e^t), elementwise."""
    return w.kernel(np.exp(np.asarray(t, dtype=float)))
