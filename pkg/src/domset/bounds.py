"""Closed-form and numeric bound calculators.

Exact quantities:
    gamma32(n)   = C(n,2) - floor((n+1)^2 / 8)      (optimal size at (3,2))
    lemma2_rhs(n) = floor((n+1)^2 / 8)

Asymptotic coefficients (per C(n,k)):
    gerbner lower  1 - (k-1)/k * t_k
    gerbner upper  1 - ((k-1)/k)^(k-1) / 2
    new upper      1 - (k-1)^2 a (1-a)^(k-2) / k   at a = alpha_star(k)
    layered rate   (k-1) a (1-a)^(k-1) / (1 - a^k)

alpha_star(k) is the root of (k-1) x^k - k x + 1 in [0, 1/2], found by
bisection to 1e-12 (p(0) = 1 > 0 and p(1/2) < 0 for k >= 3 bracket it).

The Turan densities t_k are configuration constants, not computed.  The
defaults below are reverse-engineered from the printed lower-bound column
via t_k = k (1 - L) / (k - 1); the published table rounds each bound
conservatively (lower bounds to nearest, upper bounds up), so the display
helpers reproduce the printed three-decimal values exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import binomial

# t_k defaults: k=3 is the classical (3 + sqrt(17))/12 upper bound rounded to
# four places; the rest invert the printed lower-bound column.
DEFAULT_TK = {3: 0.5936, 4: 0.7373, 5: 0.7697, 6: 0.834, 7: 0.8412}


def gamma32(n: int) -> int:
    """Optimal dominating-set size in G_{3,2}: C(n,2) - floor((n+1)^2/8).

    The closed form is proved for n >= 5; smaller n evaluate the same
    expression (the CLI flags those as extrapolation).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return binomial(n, 2) - (n + 1) ** 2 // 8


def lemma2_rhs(n: int) -> int:
    """floor((n+1)^2 / 8), the exact upper bound for f(H)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return (n + 1) ** 2 // 8


def _poly(k: int, x: float) -> float:
    return (k - 1) * x**k - k * x + 1.0


def alpha_star(k: int, tol: float = 1e-12) -> float:
    """Root of (k-1) x^k - k x + 1 in [0, 1/2] by bisection."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    lo, hi = 0.0, 0.5
    flo, fhi = _poly(k, lo), _poly(k, hi)
    if not (flo > 0 > fhi):
        raise RuntimeError(f"root bracket failed for k={k}")  # unreachable for k >= 3
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if _poly(k, mid) > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)


def new_upper(k: int) -> float:
    """Optimized upper-bound coefficient 1 - (k-1)^2 a (1-a)^(k-2) / k."""
    a = alpha_star(k)
    return 1.0 - (k - 1) ** 2 * a * (1.0 - a) ** (k - 2) / k


def layered_rate(k: int, a: float) -> float:
    """(k-1) a (1-a)^(k-1) / (1 - a^k); at a = alpha_star(k) this equals
    the improvement 1 - new_upper(k) (substitute a^k = (k a - 1)/(k - 1))."""
    if not 0 < a < 1:
        raise ValueError(f"need 0 < a < 1, got {a}")
    return (k - 1) * a * (1.0 - a) ** (k - 1) / (1.0 - a**k)


def gerbner_bounds(k: int, tk: float) -> tuple[float, float]:
    """Coefficient pair (lower, upper) of the earlier sandwich."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if not 0 < tk < 1:
        raise ValueError(f"Turan density must be in (0,1), got {tk}")
    lower = 1.0 - (k - 1) / k * tk
    upper = 1.0 - 0.5 * ((k - 1) / k) ** (k - 1)
    return lower, upper


def general_lower_l(l: int, k: int, tlk: float) -> float:
    """Coefficient 1 - (C(l,k)-2)/(C(l,k)-1) * t_{l,k} of the general lower bound."""
    if not 2 <= k < l:
        raise ValueError(f"need 2 <= k < l, got l={l} k={k}")
    if not 0 < tlk < 1:
        raise ValueError(f"Turan density must be in (0,1), got {tlk}")
    c = math.comb(l, k)
    return 1.0 - (c - 2) / (c - 1) * tlk


def gamma_l2(l: int) -> float:
    """Asymptotic coefficient (l+3)/((l-1)(l+1)) of gamma(G_{l,2})/C(n,2)."""
    if l < 3:
        raise ValueError(f"need l >= 3, got {l}")
    return (l + 3) / ((l - 1) * (l + 1))


def round_lower_3(x: float) -> float:
    """Printed form of a lower bound: nearest three decimals."""
    return round(x, 3)


def round_upper_3(x: float) -> float:
    """Printed form of an upper bound: rounded up to three decimals."""
    return math.ceil(x * 1000 - 1e-6) / 1000


@dataclass(frozen=True)
class BoundsRow:
    """One table row: raw coefficients plus the printed three-decimal forms."""

    k: int
    turan_upper_tk: float
    lower: float
    gerbner_upper: float
    new_upper: float
    alpha_star: float

    def __post_init__(self):
        assert self.lower < self.new_upper < self.gerbner_upper
        k, a = self.k, self.alpha_star
        assert abs((k - 1) * a**k - k * a + 1) <= 1e-10

    def display(self) -> dict[str, float]:
        return {
            "k": self.k,
            "tk": self.turan_upper_tk,
            "lower": round_lower_3(self.lower),
            "gerbner_upper": round_upper_3(self.gerbner_upper),
            "new_upper": round_upper_3(self.new_upper),
        }


def table1(config: dict[int, float] | None = None) -> list[BoundsRow]:
    """Rows of the numeric bound table for the configured (k, t_k) pairs."""
    tk_map = dict(DEFAULT_TK)
    if config:
        for k, tk in config.items():
            if not 0 < tk < 1:
                raise ValueError(f"Turan density must be in (0,1), got t_{k}={tk}")
            tk_map[k] = tk
    rows = []
    for k in sorted(tk_map):
        tk = tk_map[k]
        lower, g_upper = gerbner_bounds(k, tk)
        rows.append(
            BoundsRow(
                k=k,
                turan_upper_tk=tk,
                lower=lower,
                gerbner_upper=g_upper,
                new_upper=new_upper(k),
                alpha_star=alpha_star(k),
            )
        )
    return rows
