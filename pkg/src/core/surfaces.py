"""
Divisor Arithmetic on Cubic and Quartic Surfaces in P^4

- Smooth cubic scroll (blowup of P^2 at a point): classes a*h + b*(h - e),
  the objective F(a1, a2) = -3 a1 a2 + a1 d2 + a2 d1 and its corner maximum
- Cubic cone: the vertex-dependent intersection bounds
- Quartic del Pezzo (blowup of P^2 at five points): the signature pairing,
  adjunction genus and the two-parameter family of rational curves meeting
  in 2kl + 1 points
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Any

import numpy as np

from src.core.bounds import DegreePair, PairLike, as_pair
from src.utils.exceptions import ValidationError, IntegralityError, exact_div

logger = logging.getLogger(__name__)


def _render_hyperplane_form(x: int, y: int, h: str = "h", e: str = "e") -> str:
    """Render x*h - y*e as '7h-6e', '3h', 'h-e'"""
    def term(coeff: int, symbol: str) -> str:
        if coeff == 1:
            return symbol
        if coeff == -1:
            return f"-{symbol}"
        return f"{coeff}{symbol}"

    parts = []
    if x:
        parts.append(term(x, h))
    if y:
        rendered = term(-y, e)
        if parts and not rendered.startswith("-"):
            rendered = "+" + rendered
        parts.append(rendered)
    return "".join(parts) or "0"


@dataclass(frozen=True)
class ScrollClass:
    """
    Divisor class a*h + b*(h - e) on the smooth cubic scroll.

    h is the pullback of a line, e the exceptional curve; the hyperplane
    class is H = 2h - e, i.e. (a, b) = (1, 1).
    """
    a: int
    b: int

    @classmethod
    def curve(cls, a: int, b: int) -> "ScrollClass":
        """
        Class of a reduced irreducible curve of degree >= 2.

        Raises:
            ValidationError: Unless a > 0 and b >= 0
        """
        if a <= 0 or b < 0:
            raise ValidationError(f"Curve class needs a > 0 and b >= 0, got ({a}, {b})")
        return cls(a, b)

    @classmethod
    def from_hyperplane_form(cls, x: int, y: int) -> "ScrollClass":
        """Class x*h - y*e"""
        return cls(x - y, y)

    @property
    def degree(self) -> int:
        return 2 * self.a + self.b

    @property
    def h_coefficient(self) -> int:
        return self.a + self.b

    @property
    def e_coefficient(self) -> int:
        return self.b

    def __str__(self) -> str:
        return _render_hyperplane_form(self.h_coefficient, self.e_coefficient)

    def basis_form(self) -> str:
        return f"{self.a}·h + {self.b}·(h−e)"

    def to_dict(self) -> Dict[str, Any]:
        return {"a": self.a, "b": self.b, "degree": self.degree, "class": str(self)}


@dataclass
class OptResult:
    """
    Corner maximum of F over the box 1 <= a_i <= floor(d_i / 2).

    Attributes:
        maximum: Largest value of F
        maximizers: Every corner (a1, a2) attaining it
        classes: Divisor classes (C1, C2) for each maximizer
    """
    maximum: int
    maximizers: List[Tuple[int, int]] = field(default_factory=list)
    classes: List[Tuple[ScrollClass, ScrollClass]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "maximum": self.maximum,
            "maximizers": [list(corner) for corner in self.maximizers],
            "classes": [[str(c1), str(c2)] for c1, c2 in self.classes],
        }


def scroll_intersect(c1: ScrollClass, c2: ScrollClass) -> int:
    """Intersection number a1 a2 + a1 b2 + a2 b1"""
    return c1.a * c2.a + c1.a * c2.b + c2.a * c1.b


def _box(pair: DegreePair) -> Tuple[int, int]:
    if pair.d1 < 2 or pair.d2 < 2:
        raise ValidationError(f"Scroll optimization needs degrees >= 2, got {pair.as_tuple()}")
    return pair.d1 // 2, pair.d2 // 2


def scroll_objective(a1: int, a2: int, pair: PairLike) -> int:
    """
    F(a1, a2) = -3 a1 a2 + a1 d2 + a2 d1.

    Raises:
        ValidationError: If (a1, a2) lies outside the box
    """
    p = as_pair(pair)
    m1, m2 = p.d1 // 2, p.d2 // 2
    if not (1 <= a1 <= m1 and 1 <= a2 <= m2):
        raise ValidationError(
            f"({a1}, {a2}) is outside the box 1..{m1} x 1..{m2} for degrees {p.as_tuple()}"
        )
    return -3 * a1 * a2 + a1 * p.d2 + a2 * p.d1


def scroll_maximize(pair: PairLike) -> OptResult:
    """
    Maximize F over the four corners of its box.

    F is linear in each variable separately, so the maximum over the box
    sits at a corner.
    """
    p = as_pair(pair)
    m1, m2 = _box(p)
    corners = list(dict.fromkeys([(1, 1), (1, m2), (m1, 1), (m1, m2)]))
    values = {corner: scroll_objective(corner[0], corner[1], p) for corner in corners}
    best = max(values.values())
    maximizers = [corner for corner in corners if values[corner] == best]
    classes = [
        (ScrollClass.curve(a1, p.d1 - 2 * a1), ScrollClass.curve(a2, p.d2 - 2 * a2))
        for a1, a2 in maximizers
    ]
    return OptResult(maximum=best, maximizers=maximizers, classes=classes)


def scroll_bruteforce(pair: PairLike) -> int:
    """Maximum of F over the whole box"""
    p = as_pair(pair)
    m1, m2 = _box(p)
    a1 = np.arange(1, m1 + 1, dtype=np.int64)[:, None]
    a2 = np.arange(1, m2 + 1, dtype=np.int64)[None, :]
    grid = -3 * a1 * a2 + a1 * p.d2 + a2 * p.d1
    return int(grid.max())


def scroll_sharp_classes(pair: PairLike) -> Tuple[ScrollClass, ScrollClass]:
    """
    Classes of degrees (d1, d2) on the scroll meeting in B(d1, d2) points.

    d1 even with d1 <= d2 or d2 odd: (d1/2)h and (d2-1)h-(d2-2)e.
    Both odd: ((d1+1)/2)h-e and (d2-1)h-(d2-2)e.
    Otherwise the roles swap.
    """
    p = as_pair(pair)
    _box(p)
    d1, d2 = p.d1, p.d2
    odd1, odd2 = d1 % 2 == 1, d2 % 2 == 1

    if odd1 and odd2:
        return ScrollClass.curve((d1 - 1) // 2, 1), ScrollClass.curve(1, d2 - 2)
    if not odd1 and (d1 <= d2 or odd2):
        return ScrollClass.curve(d1 // 2, 0), ScrollClass.curve(1, d2 - 2)
    second, first = scroll_sharp_classes(p.swapped())
    return first, second


HYPERPLANE = ScrollClass(1, 1)


def hyperplane_split(c: ScrollClass) -> Tuple[int, ScrollClass]:
    """Write c = n*H + R with H = 2h - e and n as large as possible (n >= 0)"""
    n = max(0, min(c.a, c.b))
    return n, ScrollClass(c.a - n, c.b - n)


def is_nondegenerate_degree(d: int) -> bool:
    """An irreducible curve on a nondegenerate cubic surface spans P^4 iff d >= 4"""
    return d >= 4


def surface_meet_bound(d: int, rational: bool = True) -> int:
    """
    Points a degree-d curve off a cubic scroll can share with it.

    Returns:
        2d - 1, or 2d - 2 when the curve is not rational
    """
    if d < 1:
        raise ValidationError(f"Degree must be positive, got {d}")
    return 2 * d - 1 if rational else 2 * d - 2


@dataclass(frozen=True)
class ConeIncidence:
    """Which curves pass through the cone vertex, with d1 = 3 b1 + i, d2 = 3 b2 + j"""
    through_vertex_1: bool
    through_vertex_2: bool
    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i <= 3 and 1 <= self.j <= 3):
            raise ValidationError(f"i and j must lie in 1..3, got ({self.i}, {self.j})")

    @staticmethod
    def residue(d: int) -> int:
        """Representative of d mod 3 in 1..3"""
        return (d - 1) % 3 + 1

    @classmethod
    def for_pair(cls, pair: PairLike, through_vertex_1: bool, through_vertex_2: bool) -> "ConeIncidence":
        p = as_pair(pair)
        return cls(through_vertex_1, through_vertex_2, cls.residue(p.d1), cls.residue(p.d2))


@dataclass(frozen=True)
class ConeBound:
    """
    Intersection bound on the cubic cone.

    Attributes:
        bound: Largest possible number of shared points
        strict: Count stays strictly below d1 d2 / 3 + 1 (both through the vertex)
        sharp_claimed: The bound is attained for these degrees
        exceeds_off_vertex: (i, j) in {(1,1), (1,2), (2,1)}, so the bound is above d1 d2 / 3
    """
    bound: int
    strict: bool
    sharp_claimed: bool
    exceeds_off_vertex: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bound": self.bound,
            "strict": self.strict,
            "sharp_claimed": self.sharp_claimed,
            "exceeds_off_vertex": self.exceeds_off_vertex,
        }


def cone_bound(pair: PairLike, inc: ConeIncidence) -> ConeBound:
    """
    Bound for two curves on a nondegenerate cubic cone.

    Raises:
        ValidationError: If a curve missing the vertex has degree not divisible
            by 3, or i/j disagree with the degrees mod 3
    """
    p = as_pair(pair)
    if ConeIncidence.residue(p.d1) != inc.i or ConeIncidence.residue(p.d2) != inc.j:
        raise ValidationError(
            f"(i, j) = ({inc.i}, {inc.j}) does not match degrees {p.as_tuple()} mod 3"
        )

    for degree, through in ((p.d1, inc.through_vertex_1), (p.d2, inc.through_vertex_2)):
        if not through and degree % 3:
            raise ValidationError(
                f"A curve missing the vertex has degree divisible by 3, got {degree}"
            )

    if not (inc.through_vertex_1 and inc.through_vertex_2):
        return ConeBound(bound=exact_div(p.d1 * p.d2, 3, "cone bound"), strict=False, sharp_claimed=True)

    value = exact_div(p.d1 * p.d2 - inc.i * inc.j, 3, "cone bound") + 1
    b1 = (p.d1 - inc.i) // 3
    b2 = (p.d2 - inc.j) // 3
    return ConeBound(
        bound=value,
        strict=True,
        sharp_claimed=(b1 > 0 or b2 > 0),
        exceeds_off_vertex=(inc.i, inc.j) in {(1, 1), (1, 2), (2, 1)},
    )


# Intersection form on Pic of P^2 blown up at five points, basis (h, e1..e5)
DP_FORM = np.diag([1, -1, -1, -1, -1, -1]).astype(np.int64)


@dataclass(frozen=True)
class DelPezzoClass:
    """Class c0*h - (c1 e1 + ... + c5 e5) on the quartic del Pezzo surface"""
    c0: int
    c: Tuple[int, int, int, int, int]

    def __post_init__(self):
        if len(self.c) != 5:
            raise ValidationError(f"Expected five exceptional coefficients, got {len(self.c)}")
        object.__setattr__(self, "c", tuple(int(v) for v in self.c))

    def vector(self) -> np.ndarray:
        """Coordinates in the basis (h, e1, ..., e5)"""
        return np.array([self.c0] + [-v for v in self.c], dtype=np.int64)

    @property
    def degree(self) -> int:
        return dp_intersect(self, ANTICANONICAL)

    def __str__(self) -> str:
        text = _render_hyperplane_form(self.c0, 0) if self.c0 else ""
        for index, coeff in enumerate(self.c, start=1):
            if coeff:
                term = _render_hyperplane_form(0, coeff, e=f"e{index}")
                if text and not term.startswith("-"):
                    term = "+" + term
                text += term
        return text or "0"

    def to_dict(self) -> Dict[str, Any]:
        return {"c0": self.c0, "c": list(self.c), "class": str(self)}


ANTICANONICAL = DelPezzoClass(3, (1, 1, 1, 1, 1))
CANONICAL = DelPezzoClass(-3, (-1, -1, -1, -1, -1))


def dp_intersect(c1: DelPezzoClass, c2: DelPezzoClass) -> int:
    """c0 c0' - sum c_i c_i'"""
    return int(c1.vector() @ DP_FORM @ c2.vector())


def dp_genus(c: DelPezzoClass) -> int:
    """
    Arithmetic genus 1 + (c.c + c.K) / 2.

    Raises:
        IntegralityError: If c.c + c.K is odd
    """
    total = dp_intersect(c, c) + dp_intersect(c, CANONICAL)
    try:
        return 1 + exact_div(total, 2, "adjunction")
    except IntegralityError:
        logger.warning(f"Adjunction parity failure for {c}")
        raise


def dp_construction(k: int, l: int) -> Tuple[DelPezzoClass, DelPezzoClass]:
    """
    Rational curves of degrees 2k+1 and 2l+1 meeting in 2kl + 1 points.

    L1 = (2k+1)h - e1 - k e2 - k e3 - k e4 - (k+1) e5
    L2 = (l+1)h - l e1 - e2 - e3

    Raises:
        ValidationError: If k or l < 1
    """
    if k < 1 or l < 1:
        raise ValidationError(f"k and l must be >= 1, got ({k}, {l})")
    first = DelPezzoClass(2 * k + 1, (1, k, k, k, k + 1))
    second = DelPezzoClass(l + 1, (l, 1, 1, 0, 0))
    return first, second
