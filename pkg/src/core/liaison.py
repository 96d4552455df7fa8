"""
Linkage Numerics in P^4

Degrees and genera of curves linked by a complete intersection of three
hypersurfaces, and the two margin certificates that rule out B(d1, d2)
intersection points for special degree pairs:

- even_case_margin: both degrees even, d1 + d2 divisible by 4
- odd_degree_obstruction: odd degrees with d2 - d1 = 4
"""

import logging
from dataclasses import dataclass, asdict
from typing import Dict, Any

from src.core.bounds import PairLike, as_pair, b, b_g, g_extremal
from src.utils.exceptions import ValidationError, exact_div

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CIType:
    """Complete intersection of hypersurfaces of degrees f1, f2, f3"""
    f1: int
    f2: int
    f3: int

    def __post_init__(self):
        if min(self.f1, self.f2, self.f3) < 1:
            raise ValidationError(f"Hypersurface degrees must be positive, got {self.as_tuple()}")

    @property
    def degree(self) -> int:
        return self.f1 * self.f2 * self.f3

    @property
    def slope(self) -> int:
        """s = f1 + f2 + f3 - 5"""
        return self.f1 + self.f2 + self.f3 - 5

    def as_tuple(self):
        return (self.f1, self.f2, self.f3)


@dataclass(frozen=True)
class LinkedPair:
    """A curve and its residual in a complete intersection"""
    d_in: int
    g_in: int
    d_res: int
    g_res: int

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


def linked_genus_difference(ci: CIType, d_in: int, d_res: int) -> int:
    """
    g_in - g_res = s (d_in - d_res) / 2.

    Raises:
        IntegralityError: If s (d_in - d_res) is odd
    """
    return exact_div(ci.slope * (d_in - d_res), 2, "linkage genus difference")


def residual(ci: CIType, d_in: int, g_in: int) -> LinkedPair:
    """
    Degree and genus of the curve linked to (d_in, g_in) by ci.

    Raises:
        ValidationError: If d_in is not strictly between 0 and the CI degree
        IntegralityError: If the genus difference is not an integer
    """
    if not 0 < d_in < ci.degree:
        raise ValidationError(
            f"Linked degree must lie strictly between 0 and {ci.degree}, got {d_in}"
        )
    d_res = ci.degree - d_in
    g_res = g_in - linked_genus_difference(ci, d_in, d_res)
    return LinkedPair(d_in=d_in, g_in=g_in, d_res=d_res, g_res=g_res)


@dataclass(frozen=True)
class EvenCaseMargin:
    """
    Certificate for d1 = 2k, d1 + d2 = 4(m + 2).

    Attributes:
        m: From d1 + d2 = 4(m + 2)
        k: d1 / 2
        n_max: Largest number of shared points the linkage allows
        margin_lb: Lower bound for B(d1, d2) - n_max
        b_value: B(d1, d2)
    """
    m: int
    k: int
    n_max: int
    margin_lb: int
    b_value: int

    @property
    def margin(self) -> int:
        return self.b_value - self.n_max

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["margin"] = self.margin
        return data


def even_case_margin(pair: PairLike) -> EvenCaseMargin:
    """
    Margin certificate for two even-degree curves.

    Raises:
        ValidationError: Unless d1 < d2, both even, d1 + d2 = 0 mod 4 and
            d1 + d2 >= 16
    """
    p = as_pair(pair)
    d1, d2 = p.d1, p.d2
    if not (d1 < d2 and d1 % 2 == 0 and d2 % 2 == 0):
        raise ValidationError(f"Even-case certificate needs even d1 < d2, got {p.as_tuple()}")
    if p.total % 4 or p.total < 16:
        raise ValidationError(
            f"Even-case certificate needs d1 + d2 divisible by 4 and >= 16, got {p.total}"
        )

    k = d1 // 2
    m = p.total // 4 - 2
    n_max = 2 * m * k + 2 * k + 1
    margin_lb = k * (2 * m + 5 - 2 * k) - 1
    certificate = EvenCaseMargin(m=m, k=k, n_max=n_max, margin_lb=margin_lb, b_value=b(p))

    if certificate.margin < margin_lb:
        logger.warning(f"{p.as_tuple()}: margin {certificate.margin} below stated bound {margin_lb}")
    return certificate


@dataclass(frozen=True)
class OddDegreeObstruction:
    """
    Certificate for odd d1 >= 7 with d2 = d1 + 4 and d1 + d2 = 4m + 6.

    The extremal-degree union lies in a CI(2, 2, m + 2); its residual is a
    degree-2 curve of genus 0 (ACM branch) or -1 (defect-1 branch).
    """
    m: int
    b_minus_bg: int
    residual_degree: int
    residual_genus_acm: int
    residual_genus_defect1: int
    union_genus: int

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


def odd_degree_obstruction(pair: PairLike) -> OddDegreeObstruction:
    """
    Obstruction certificate for odd degrees four apart.

    Raises:
        ValidationError: Unless d2 - d1 = 4, d1 odd, d1 >= 7 and B - B_g = -2
    """
    p = as_pair(pair)
    d1, d2 = p.d1, p.d2
    if d2 - d1 != 4 or d1 % 2 == 0 or d1 < 7:
        raise ValidationError(
            f"Odd-degree certificate needs odd d1 >= 7 and d2 = d1 + 4, got {p.as_tuple()}"
        )
    if (p.total - 6) % 4:
        raise ValidationError(f"d1 + d2 must be 2 mod 4, got {p.total}")

    m = (p.total - 6) // 4
    difference = b(p) - b_g(p)
    if difference != -2:
        raise ValidationError(f"{p.as_tuple()}: expected B - B_g = -2, got {difference}")

    ci = CIType(2, 2, m + 2)
    total = p.total
    acm = residual(ci, total, g_extremal(total))
    defect = residual(ci, total, g_extremal(total) - 1)

    # C1 u D against C2, D the degree-2 residual
    union_genus = linked_genus_difference(ci, d1 + 2, d2)

    return OddDegreeObstruction(
        m=m,
        b_minus_bg=difference,
        residual_degree=acm.d_res,
        residual_genus_acm=acm.g_res,
        residual_genus_defect1=defect.g_res,
        union_genus=union_genus,
    )
