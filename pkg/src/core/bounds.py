"""
Intersection Bounds for Curves in P^4

Closed-form upper bounds on the number of points two reduced, irreducible,
nondegenerate curves of degrees d1 and d2 can share:

- B_DG: the Diaz-Giuffrida bound
- B:    the parity bound (sharp on a cubic scroll)
- B_g:  the genus bound g(d1 + d2) + 1

plus the (alpha, beta, u, k) decomposition that splits B - B_g into sixteen
cases, each with its own difference polynomial and threshold M(d1, d2).

All arithmetic is exact. Every division is checked through exact_div.
"""

import logging
from dataclasses import dataclass, asdict
from typing import Dict, Tuple, Union, Any

import pandas as pd

from src.utils.exceptions import ValidationError, exact_div

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreePair:
    """
    Degrees of two curves.

    Attributes:
        d1: Degree of the first curve
        d2: Degree of the second curve
    """
    d1: int
    d2: int

    def __post_init__(self):
        for name in ("d1", "d2"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValidationError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise ValidationError(f"{name} must be >= 1, got {value}")

    @property
    def total(self) -> int:
        """d = d1 + d2"""
        return self.d1 + self.d2

    def ordered(self) -> Tuple["DegreePair", bool]:
        """Return the pair with d1 <= d2 and whether a swap happened"""
        if self.d1 <= self.d2:
            return self, False
        return DegreePair(self.d2, self.d1), True

    def swapped(self) -> "DegreePair":
        return DegreePair(self.d2, self.d1)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.d1, self.d2)

    def to_dict(self) -> Dict[str, int]:
        return {"d1": self.d1, "d2": self.d2}


PairLike = Union[DegreePair, Tuple[int, int]]


def as_pair(pair: PairLike) -> DegreePair:
    """Accept a DegreePair or a plain (d1, d2) tuple"""
    if isinstance(pair, DegreePair):
        return pair
    try:
        d1, d2 = pair
    except (TypeError, ValueError):
        raise ValidationError(f"Expected a degree pair, got {pair!r}")
    return DegreePair(d1, d2)


# (d1 mod 4, (d2 - d1) mod 4) -> case label
CASE_GRID: Dict[Tuple[int, int], str] = {
    (0, 0): "I", (0, 1): "V", (0, 2): "IX", (0, 3): "XIII",
    (1, 0): "X", (1, 1): "XIV", (1, 2): "II", (1, 3): "VI",
    (2, 0): "III", (2, 1): "VII", (2, 2): "XI", (2, 3): "XV",
    (3, 0): "XII", (3, 1): "XVI", (3, 2): "IV", (3, 3): "VIII",
}

# B - B_g per case as (u, k, k^2, constant) coefficients
CASE_POLYNOMIALS: Dict[str, Tuple[int, int, int, int]] = {
    "I": (2, 2, -2, -2),
    "II": (0, -2, -2, -1),
    "III": (2, 2, -2, -1),
    "IV": (0, -2, -2, -1),
    "V": (2, 1, -2, -1),
    "VI": (2, -3, -2, -2),
    "VII": (2, 1, -2, 0),
    "VIII": (2, -3, -2, -1),
    "IX": (2, 0, -2, -1),
    "X": (0, 0, -2, 0),
    "XI": (2, 0, -2, 0),
    "XII": (0, 0, -2, 0),
    "XIII": (2, -1, -2, -1),
    "XIV": (2, -1, -2, -1),
    "XV": (2, -1, -2, 0),
    "XVI": (2, -1, -2, 0),
}

# M(d1, d2) per case as (d1, d2, constant) coefficients
CASE_THRESHOLDS: Dict[str, Tuple[int, int, int]] = {
    "I": (0, 4, -16), "V": (0, 4, -11), "IX": (0, 4, -12), "XIII": (0, 4, -11),
    "X": (0, 0, 0), "XIV": (4, 0, -11), "II": (0, 0, -1), "VI": (4, 0, -11),
    "III": (0, 4, -16), "VII": (0, 4, -11), "XI": (0, 4, -12), "XV": (0, 4, -11),
    "XII": (0, 0, 0), "XVI": (4, 0, -11), "IV": (0, 0, -1), "VIII": (4, 0, -11),
}


@dataclass(frozen=True)
class CaseParams:
    """
    Decomposition d1 = 4u + alpha, d2 - d1 = 4k + beta of an ordered pair.

    Attributes:
        alpha: d1 mod 4
        beta: (d2 - d1) mod 4
        u: d1 // 4
        k_step: (d2 - d1) // 4
        case_label: Roman numeral of the cell (alpha, beta)
    """
    alpha: int
    beta: int
    u: int
    k_step: int
    case_label: str

    def __post_init__(self):
        if not (0 <= self.alpha <= 3 and 0 <= self.beta <= 3):
            raise ValidationError(f"alpha and beta must lie in 0..3, got {self.alpha}, {self.beta}")
        if self.u < 0 or self.k_step < 0:
            raise ValidationError("u and k_step must be nonnegative")
        if CASE_GRID[(self.alpha, self.beta)] != self.case_label:
            raise ValidationError(
                f"Case {self.case_label} does not sit at cell ({self.alpha}, {self.beta})"
            )

    @property
    def d1(self) -> int:
        return 4 * self.u + self.alpha

    @property
    def d2(self) -> int:
        return self.d1 + 4 * self.k_step + self.beta

    def pair(self) -> DegreePair:
        """Reconstruct the ordered pair"""
        return DegreePair(self.d1, self.d2)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class BoundValues:
    """All closed-form bounds evaluated on one pair"""
    b_dg: int
    b: int
    b_g: int
    trivial: int
    g_extremal_of_sum: int

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


def b_dg(pair: PairLike) -> int:
    """
    Diaz-Giuffrida bound.

    (d1-2)(d2-2)+2 when either degree is at most 5, otherwise the minimum of
    that value, (d1-3)d2 and d1(d2-3).
    """
    p = as_pair(pair)
    d1, d2 = p.d1, p.d2
    base = (d1 - 2) * (d2 - 2) + 2
    if min(d1, d2) <= 5:
        return base
    return min(base, (d1 - 3) * d2, d1 * (d2 - 3))


def b(pair: PairLike) -> int:
    """
    Parity bound B(d1, d2).

    Args:
        pair: Degrees, in the order written (the both-even subcase compares them)

    Returns:
        d1(d2-1)/2, (d1-1)d2/2 or (d1-1)(d2-1)/2 + 1 by parity
    """
    p = as_pair(pair)
    d1, d2 = p.d1, p.d2
    even1, even2 = d1 % 2 == 0, d2 % 2 == 0

    if (even1 and even2 and d1 <= d2) or (even1 and not even2):
        return exact_div(d1 * (d2 - 1), 2, "B")
    if (even1 and even2) or (not even1 and even2):
        return exact_div((d1 - 1) * d2, 2, "B")
    return exact_div((d1 - 1) * (d2 - 1), 2, "B") + 1


def g_extremal(d: int) -> int:
    """
    Largest h-vector genus of a degree-d curve section off a cubic surface.

    Raises:
        ValidationError: If d <= 0
    """
    if isinstance(d, bool) or not isinstance(d, int):
        raise ValidationError(f"Degree must be an integer, got {d!r}")
    if d <= 0:
        raise ValidationError(f"Degree must be positive, got {d}")
    if d <= 4:
        # (1,3) and the degenerate sections below it carry genus 0
        return 0

    residue = d % 4
    if residue == 0:
        return exact_div(d * d - 4 * d + 8, 8, "g(d)")
    if residue == 2:
        return exact_div(d * d - 4 * d + 4, 8, "g(d)")
    return exact_div(d * d - 4 * d + 3, 8, "g(d)")


def b_g_closed_form(d: int) -> int:
    """Genus bound written directly in terms of d = 4k + l"""
    if d < 5:
        raise ValidationError(f"The genus bound needs d >= 5, got {d}")
    ell = d % 4
    if ell == 0:
        return exact_div(d * d - 4 * d, 8, "B_g") + 2
    if ell == 2:
        return exact_div(d * d - 4 * d + 4, 8, "B_g") + 1
    return exact_div(d * d - 4 * d + 3, 8, "B_g") + 1


def b_g(pair: PairLike) -> int:
    """Genus bound B_g(d1, d2) = g(d1 + d2) + 1"""
    p = as_pair(pair)
    if p.total < 5:
        raise ValidationError(f"The genus bound needs d1 + d2 >= 5, got {p.total}")
    return g_extremal(p.total) + 1


def trivial(pair: PairLike) -> int:
    """Bezout-style bound d1 * d2"""
    p = as_pair(pair)
    return p.d1 * p.d2


def giuffrida_bound(pair: PairLike, n: int = 4) -> int:
    """Giuffrida's bound (d1-n+2)(d2-n+2)+n-2 for curves in P^n"""
    if n < 3:
        raise ValidationError(f"Ambient dimension must be >= 3, got {n}")
    p = as_pair(pair)
    return (p.d1 - n + 2) * (p.d2 - n + 2) + n - 2


def diaz_bound(pair: PairLike, n: int = 4) -> int:
    """Diaz's bound (d1-n+1)d2+1 for curves in P^n"""
    if n < 3:
        raise ValidationError(f"Ambient dimension must be >= 3, got {n}")
    p = as_pair(pair)
    return (p.d1 - n + 1) * p.d2 + 1


def diaz_reduced_bound(pair: PairLike, n: int = 4) -> int:
    """
    Diaz's bound for nondegenerate irreducible curves, (d1-n+1)d2.

    Raises:
        ValidationError: If d1 < n + 2
    """
    p = as_pair(pair)
    if p.d1 < n + 2:
        raise ValidationError(f"The reduced Diaz bound needs d1 >= {n + 2}, got {p.d1}")
    return (p.d1 - n + 1) * p.d2


def bound_values(pair: PairLike) -> BoundValues:
    """Evaluate every closed form on a pair"""
    p = as_pair(pair)
    return BoundValues(
        b_dg=b_dg(p),
        b=b(p),
        b_g=b_g(p),
        trivial=trivial(p),
        g_extremal_of_sum=g_extremal(p.total),
    )


def _require_ordered(p: DegreePair, what: str):
    if p.d1 > p.d2:
        raise ValidationError(f"{what} needs d1 <= d2, got ({p.d1}, {p.d2}); normalize first")


def case_of(pair: PairLike) -> CaseParams:
    """
    Split an ordered pair into (alpha, beta, u, k_step) and its case label.

    Raises:
        ValidationError: If d1 > d2
    """
    p = as_pair(pair)
    _require_ordered(p, "case_of")
    u, alpha = divmod(p.d1, 4)
    k_step, beta = divmod(p.d2 - p.d1, 4)
    return CaseParams(
        alpha=alpha,
        beta=beta,
        u=u,
        k_step=k_step,
        case_label=CASE_GRID[(alpha, beta)],
    )


def m_threshold(pair: PairLike) -> int:
    """Threshold M(d1, d2) from the case table"""
    p = as_pair(pair)
    _require_ordered(p, "m_threshold")
    c1, c2, const = CASE_THRESHOLDS[case_of(p).case_label]
    return c1 * p.d1 + c2 * p.d2 + const


def b_minus_bg_case_poly(params: CaseParams) -> int:
    """Evaluate the difference polynomial of the case at (u, k_step)"""
    cu, ck, ck2, const = CASE_POLYNOMIALS[params.case_label]
    u, k = params.u, params.k_step
    return cu * u + ck * k + ck2 * k * k + const


def case_table() -> pd.DataFrame:
    """
    Case labels with their thresholds as a 4x4 frame.

    Rows are alpha = d1 mod 4, columns beta = (d2 - d1) mod 4.
    """
    def render(label: str) -> str:
        c1, c2, const = CASE_THRESHOLDS[label]
        if c1:
            expr = f"{c1}d1{const:+d}"
        elif c2:
            expr = f"{c2}d2{const:+d}"
        else:
            expr = str(const)
        return f"{label}: {expr}"

    rows = [[render(CASE_GRID[(alpha, beta)]) for beta in range(4)] for alpha in range(4)]
    frame = pd.DataFrame(rows, index=range(4), columns=range(4))
    frame.index.name = "alpha"
    frame.columns.name = "beta"
    return frame
