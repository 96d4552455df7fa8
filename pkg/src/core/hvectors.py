"""
H-vectors of Curve Sections

The h-vector of a general hyperplane section of a curve in P^4 determines an
upper bound for the curve's arithmetic genus. This module covers:

- O-sequences and Macaulay's growth bound
- integration to Hilbert functions and the genus of an h-vector
- the admissibility rules (R1..R8) for sections of curves of degree >= 9
  not lying on a cubic surface
- exhaustive enumeration and a branch-and-bound search for the largest genus
- the extremal h-vector (1,3,4,...,4,a,b)
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import islice
from math import comb
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple, Any

import numpy as np
import pandas as pd

from src.utils.config import Config
from src.utils.exceptions import EnumerationLimitError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HVector:
    """
    Finite sequence of positive integers indexed from degree 0.

    Attributes:
        entries: (a_0, a_1, ..., a_r) with a_r >= 1

    Example:
        >>> h = HVector((1, 3, 4, 2))
        >>> h.degree, h.socle_degree
        (10, 3)
    """
    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValidationError("An h-vector needs at least one entry")
        for i, value in enumerate(entries):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise ValidationError(f"Entry {i} is not an integer: {value!r}")
            if value < 1:
                raise ValidationError(f"Entry {i} must be positive, got {value}")
        object.__setattr__(self, "entries", tuple(int(v) for v in entries))

    @classmethod
    def of(cls, values: Iterable[int]) -> "HVector":
        return cls(tuple(values))

    @property
    def degree(self) -> int:
        """Sum of the entries"""
        return sum(self.entries)

    @property
    def socle_degree(self) -> int:
        """Last index r"""
        return len(self.entries) - 1

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.entries)

    def to_list(self) -> List[int]:
        return list(self.entries)


@dataclass(frozen=True)
class HilbertFunction:
    """
    Eventually constant Hilbert function stored as a prefix plus its stable value.

    values[t] = prefix[t] for t < len(prefix), stable afterwards.
    """
    prefix: Tuple[int, ...]
    stable: int

    def value(self, t: int) -> int:
        if t < 0:
            return 0
        if t < len(self.prefix):
            return self.prefix[t]
        return self.stable

    def to_dict(self) -> Dict[str, Any]:
        return {"prefix": list(self.prefix), "stable": self.stable}


@dataclass(frozen=True)
class GenusProfile:
    """Genus of a curve whose section has h-vector `hvector` and Rao defect `rao_defect`"""
    hvector: HVector
    rao_defect: int
    genus: int

    @property
    def is_acm(self) -> bool:
        return self.rao_defect == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "hvector": self.hvector.to_list(),
            "rao_defect": self.rao_defect,
            "genus": self.genus,
        }


class Rule(Enum):
    """Admissibility rules for sections of curves of degree >= 9"""
    R1 = "R1"  # a_0 = 1
    R2 = "R2"  # O-sequence
    R3 = "R3"  # a_1 = 3
    R4 = "R4"  # a_2 >= 4
    R5 = "R5"  # r >= 4: a_k >= 4 for 2 <= k <= r-2, a_{r-1} >= 3
    R6 = "R6"  # growth caps after a_2
    R7 = "R7"  # tail is not (3, 2)
    R8 = "R8"  # no a_i = a_{i+1} <= 3 for i >= 2


ALL_RULES: FrozenSet[Rule] = frozenset(Rule)


@dataclass(frozen=True)
class RuleViolation:
    """One failed admissibility rule"""
    rule_id: Rule
    detail: str

    def to_dict(self) -> Dict[str, str]:
        return {"rule_id": self.rule_id.value, "detail": self.detail}


@dataclass
class GenusSearchResult:
    """Outcome of the largest-genus search for one degree"""
    degree: int
    hvector: HVector
    genus: int
    nodes_visited: int = 0
    leaves_checked: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "hvector": self.hvector.to_list(),
            "genus": self.genus,
            "nodes_visited": self.nodes_visited,
            "leaves_checked": self.leaves_checked,
        }


# Curve-section h-vectors below the admissibility range
SMALL_DEGREE_HVECTORS: Dict[int, Tuple[Tuple[int, ...], ...]] = {
    4: ((1, 3),),
    5: ((1, 3, 1),),
    6: ((1, 3, 2),),
    7: ((1, 3, 3),),
    8: ((1, 3, 4), (1, 3, 3, 1)),
    9: ((1, 3, 3, 2), (1, 3, 4, 1), (1, 3, 5)),
}

ACM_TAILS: FrozenSet[Tuple[int, int]] = frozenset({(1, 0), (2, 0), (3, 0), (3, 1)})


def _as_hvector(h) -> HVector:
    return h if isinstance(h, HVector) else HVector(tuple(h))


@lru_cache(maxsize=4096)
def macaulay_next_max(value: int, degree: int) -> int:
    """
    Largest entry allowed after `value` in position `degree` of an O-sequence.

    Writes value = C(k_t, t) + C(k_{t-1}, t-1) + ... with k_t > k_{t-1} > ...
    and returns C(k_t + 1, t + 1) + C(k_{t-1} + 1, t) + ...

    Raises:
        ValidationError: If value or degree is not positive
    """
    if value < 1 or degree < 1:
        raise ValidationError(
            f"Macaulay bound needs positive value and degree, got ({value}, {degree})"
        )

    remainder = value
    result = 0
    j = degree
    while remainder > 0 and j >= 1:
        k = j
        while comb(k + 1, j) <= remainder:
            k += 1
        remainder -= comb(k, j)
        result += comb(k + 1, j + 1)
        j -= 1
    return result


def is_o_sequence(h) -> bool:
    """True iff h starts with 1 and never grows faster than Macaulay allows"""
    h = _as_hvector(h)
    if h[0] != 1:
        return False
    for t in range(1, len(h) - 1):
        if h[t + 1] > macaulay_next_max(h[t], t):
            return False
    return True


def integrate(h) -> HilbertFunction:
    """Cumulative sums of an h-vector"""
    h = _as_hvector(h)
    sums = np.cumsum(np.asarray(h.entries, dtype=np.int64))
    return HilbertFunction(prefix=tuple(int(v) for v in sums), stable=h.degree)


def difference(f: HilbertFunction) -> HVector:
    """
    First differences of a Hilbert function, trailing zeros dropped.

    Raises:
        ValidationError: If the function decreases or never reaches its stable value
    """
    values = list(f.prefix)
    if not values or values[-1] != f.stable:
        values.append(f.stable)
    steps = np.diff(np.asarray([0] + values, dtype=np.int64))
    if (steps < 0).any():
        raise ValidationError(f"Hilbert function is not nondecreasing: {values}")
    entries = [int(v) for v in steps]
    while entries and entries[-1] == 0:
        entries.pop()
    if 0 in entries:
        raise ValidationError(f"Hilbert function stalls before stabilizing: {values}")
    return HVector(tuple(entries))


def genus_of_hvector(h) -> int:
    """
    Genus bound read off an h-vector: sum over i >= 1 of (d - H(i)).

    Example:
        >>> genus_of_hvector((1, 3, 5, 4, 3))
        22
    """
    h = _as_hvector(h)
    hilbert = integrate(h)
    d = hilbert.stable
    return sum(d - value for value in hilbert.prefix[1:])


def genus_with_defect(h, k: int) -> GenusProfile:
    """
    Genus of a curve whose section has h-vector h and Rao defect k.

    Args:
        h: h-vector of the general hyperplane section
        k: Rao defect (0 for ACM curves)

    Raises:
        ValidationError: If k is negative
    """
    h = _as_hvector(h)
    if k < 0:
        raise ValidationError(f"Rao defect must be nonnegative, got {k}")
    return GenusProfile(hvector=h, rao_defect=k, genus=genus_of_hvector(h) - k)


def acm_genus_closed_form(m: int, a: int, b: int) -> int:
    """
    Genus of (1, 3, 4 x m, a, b) as (m+2)b + (m+1)a + 4 C(m+1, 2).

    Raises:
        ValidationError: If (a, b) is not one of the extremal tails
    """
    if m < 0:
        raise ValidationError(f"m must be nonnegative, got {m}")
    if (a, b) not in ACM_TAILS:
        raise ValidationError(
            f"Tail ({a}, {b}) is not one of {sorted(ACM_TAILS)}"
        )
    return (m + 2) * b + (m + 1) * a + 4 * comb(m + 1, 2)


def tail_hvector(m: int, a: int, b: int) -> HVector:
    """(1, 3, 4 x m, a, b) with trailing zeros dropped"""
    entries = [1, 3] + [4] * m + [a, b]
    while entries[-1] == 0:
        entries.pop()
    return HVector(tuple(entries))


def regularity(h) -> int:
    """Regularity s + 1 of an ACM curve whose section has h-vector h"""
    return _as_hvector(h).socle_degree + 1


def check_rules(h, rules: Iterable[Rule] = ALL_RULES) -> List[RuleViolation]:
    """Every violated rule among `rules`, in rule order"""
    h = _as_hvector(h)
    active = frozenset(rules)
    a = h.entries
    r = h.socle_degree
    found: List[RuleViolation] = []

    def flag(rule: Rule, detail: str):
        if rule in active:
            found.append(RuleViolation(rule, detail))

    if a[0] != 1:
        flag(Rule.R1, f"a_0 = {a[0]}, expected 1")

    if Rule.R2 in active:
        for t in range(1, r):
            cap = macaulay_next_max(a[t], t)
            if a[t + 1] > cap:
                flag(Rule.R2, f"a_{t + 1} = {a[t + 1]} exceeds Macaulay bound {cap} after a_{t} = {a[t]}")

    if r < 1 or a[1] != 3:
        flag(Rule.R3, f"a_1 = {a[1] if r >= 1 else 'missing'}, expected 3")

    if r < 2 or a[2] < 4:
        flag(Rule.R4, f"a_2 = {a[2] if r >= 2 else 'missing'}, expected >= 4")

    if r >= 4:
        for k in range(2, r - 1):
            if a[k] < 4:
                flag(Rule.R5, f"a_{k} = {a[k]} < 4 with r = {r}")
        if a[r - 1] < 3:
            flag(Rule.R5, f"a_{r - 1} = {a[r - 1]} < 3 with r = {r}")

    if r >= 3:
        if a[2] == 4 and a[3] > 4:
            flag(Rule.R6, f"a_2 = 4 forces a_3 <= 4, got a_3 = {a[3]}")
        if r == 3 and a[2] == 5 and a[3] > 7:
            flag(Rule.R6, f"a_2 = 5 forces a_3 <= 7, got a_3 = {a[3]}")
        if r == 3 and a[2] == 6 and a[3] > 10:
            flag(Rule.R6, f"a_2 = 6 forces a_3 <= 10, got a_3 = {a[3]}")

    if r >= 3 and (a[r - 1], a[r]) == (3, 2):
        flag(Rule.R7, f"tail (a_{r - 1}, a_{r}) = (3, 2)")

    for i in range(2, r):
        if a[i] == a[i + 1] <= 3:
            flag(Rule.R8, f"a_{i} = a_{i + 1} = {a[i]} is maximal growth")

    return found


def is_admissible(h, rules: Iterable[Rule] = ALL_RULES) -> Tuple[bool, List[RuleViolation]]:
    """
    Check an h-vector of degree >= 9 against the admissibility rules.

    Args:
        h: Candidate h-vector
        rules: Rule subset to apply (all by default)

    Returns:
        (admissible, violations)

    Raises:
        ValidationError: If the degree is below 9
    """
    h = _as_hvector(h)
    if h.degree < 9:
        raise ValidationError(f"Admissibility rules apply to degree >= 9, got {h.degree}")
    violations = check_rules(h, rules)
    return (not violations, violations)


def _check_enum_degree(d: int):
    cap = Config.max_enum()
    if not 9 <= d <= cap:
        raise EnumerationLimitError(f"Degree must lie in 9..{cap}, got {d}")


def _children(prefix: Tuple[int, ...], remaining: int, closing: bool,
              rules: FrozenSet[Rule]) -> Iterator[Tuple[int, int, bool]]:
    """
    Next entries worth exploring after `prefix`, in ascending order.

    Yields (value, remaining_after, closing_after). `closing` means the
    previous entry sits below 4, so the next one has to be the last.
    """
    pos = len(prefix)
    cap = min(macaulay_next_max(prefix[-1], pos - 1), remaining)
    if Rule.R6 in rules and pos == 3 and prefix[2] == 4:
        cap = min(cap, 4)
    low = 4 if (Rule.R4 in rules and pos == 2) else 1
    prune_tail = Rule.R5 in rules

    for v in range(low, cap + 1):
        rest = remaining - v
        if prune_tail and closing and rest:
            continue
        if prune_tail and rest and v <= 2:
            continue
        yield v, rest, v < 4


def iter_admissible(d: int, rules: Iterable[Rule] = ALL_RULES) -> Iterator[HVector]:
    """
    Lazily yield every admissible h-vector of degree d in lexicographic order.

    Raises:
        EnumerationLimitError: If d is outside 9..CURVEBOUNDS_MAX_ENUM
    """
    _check_enum_degree(d)
    active = frozenset(rules)
    if Rule.R3 not in active:
        raise ValidationError("Enumeration fixes a_1 = 3 and needs R3 in the rule set")

    def walk(prefix: Tuple[int, ...], remaining: int, closing: bool) -> Iterator[HVector]:
        for v, rest, closing_after in _children(prefix, remaining, closing, active):
            candidate = prefix + (v,)
            if rest == 0:
                h = HVector(candidate)
                if not check_rules(h, active):
                    yield h
            else:
                yield from walk(candidate, rest, closing_after)

    yield from walk((1, 3), d - 4, False)


def enumerate_admissible(d: int, rules: Iterable[Rule] = ALL_RULES) -> List[HVector]:
    """Every admissible h-vector of degree d, lexicographically ordered"""
    found = list(iter_admissible(d, rules))
    logger.debug(f"Degree {d}: {len(found)} admissible h-vectors")
    return found


def _enumeration_rows(vectors: Iterable[HVector]) -> pd.DataFrame:
    rows = [
        {"hvector": str(h), "genus": genus_of_hvector(h), "regularity": regularity(h)}
        for h in vectors
    ]
    return pd.DataFrame(rows, columns=["hvector", "genus", "regularity"])


def enumeration_frame(d: int) -> pd.DataFrame:
    """Admissible h-vectors of degree d with their genus and regularity"""
    return _enumeration_rows(iter_admissible(d))


def enumeration_page(d: int, limit: int, offset: int = 0) -> Tuple[pd.DataFrame, bool]:
    """
    One window of enumeration_frame, read lazily from iter_admissible.

    Args:
        d: Degree
        limit: Largest number of rows to return
        offset: Rows of the lexicographic enumeration to skip first

    Returns:
        (frame, has_more) where has_more means rows remain after the window

    Raises:
        EnumerationLimitError: If d is outside 9..CURVEBOUNDS_MAX_ENUM
        ValidationError: If limit or offset is outside the accepted window
    """
    if not 1 <= limit <= Config.ENUM_PAGE_MAX:
        raise ValidationError(f"limit must lie in 1..{Config.ENUM_PAGE_MAX}, got {limit}")
    if not 0 <= offset <= Config.ENUM_OFFSET_MAX:
        raise ValidationError(f"offset must lie in 0..{Config.ENUM_OFFSET_MAX}, got {offset}")
    window = list(islice(iter_admissible(d), offset, offset + limit + 1))
    return _enumeration_rows(window[:limit]), len(window) > limit


@lru_cache(maxsize=None)
def _future_genus_cap(remaining: int) -> int:
    """
    Upper bound on the genus still to be collected with `remaining` degree left.

    Relaxation: every further entry is >= 4 except the last two.
    """
    if remaining <= 0:
        return 0
    best = 0
    for x in range(1, remaining):
        gain = remaining - x
        if x >= 4:
            gain += _future_genus_cap(remaining - x)
        best = max(best, gain)
    return best


def max_genus_search(d: int, rules: Iterable[Rule] = ALL_RULES) -> GenusSearchResult:
    """
    Largest genus over admissible h-vectors of degree d, by branch and bound.

    Walks the same lexicographic tree as iter_admissible and only replaces the
    incumbent on strict improvement, so ties go to the smallest vector.

    Raises:
        EnumerationLimitError: If d is outside 9..CURVEBOUNDS_MAX_ENUM
        ValidationError: If no admissible h-vector exists (rule subsets only)
    """
    _check_enum_degree(d)
    active = frozenset(rules)
    use_cap = Rule.R5 in active

    best: Dict[str, Any] = {"hvector": None, "genus": -1}
    stats = {"nodes": 0, "leaves": 0}

    def walk(prefix: Tuple[int, ...], remaining: int, closing: bool, collected: int):
        stats["nodes"] += 1
        for v, rest, closing_after in _children(prefix, remaining, closing, active):
            candidate = prefix + (v,)
            gained = collected + rest
            if rest == 0:
                stats["leaves"] += 1
                if gained > best["genus"] and not check_rules(HVector(candidate), active):
                    best["hvector"], best["genus"] = candidate, gained
                continue
            if use_cap and best["hvector"] is not None:
                ceiling = 0 if closing_after else _future_genus_cap(rest)
                if gained + ceiling <= best["genus"]:
                    continue
            walk(candidate, rest, closing_after, gained)

    # genus collects d - H(i) for every non-final position i >= 1
    walk((1, 3), d - 4, False, d - 4)

    if best["hvector"] is None:
        raise ValidationError(f"No admissible h-vector of degree {d}")

    result = GenusSearchResult(
        degree=d,
        hvector=HVector(best["hvector"]),
        genus=best["genus"],
        nodes_visited=stats["nodes"],
        leaves_checked=stats["leaves"],
    )
    logger.debug(
        f"Degree {d}: max genus {result.genus} at {result.hvector} "
        f"({result.nodes_visited} nodes)"
    )
    return result


def max_genus_bruteforce(d: int, rules: Iterable[Rule] = ALL_RULES) -> Tuple[HVector, int]:
    """
    (h-vector, genus) of largest genus, scanning every admissible h-vector of degree d.

    No genus pruning, so max_genus_search can be checked against it. Ties go
    to the lexicographically smallest vector.

    Raises:
        EnumerationLimitError: If d is outside 9..CURVEBOUNDS_MAX_ENUM
        ValidationError: If no admissible h-vector exists (rule subsets only)
    """
    best_h, best_genus = None, -1
    for h in iter_admissible(d, rules):
        genus = genus_of_hvector(h)
        if genus > best_genus:
            best_h, best_genus = h, genus
    if best_h is None:
        raise ValidationError(f"No admissible h-vector of degree {d}")
    return best_h, best_genus


def extremal_hvector(d: int) -> HVector:
    """
    The h-vector (1, 3, 4 x m, p) or (1, 3, 4 x m, 3, 1) of largest genus.

    Raises:
        ValidationError: If d < 5
    """
    if d < 5:
        raise ValidationError(f"Extremal h-vector needs d >= 5, got {d}")
    p = (d - 1) % 4 + 1
    m = (d - 4 - p) // 4
    if p == 4:
        return HVector(tuple([1, 3] + [4] * m + [3, 1]))
    return HVector(tuple([1, 3] + [4] * m + [p]))


def small_degree_hvectors(d: int) -> List[HVector]:
    """
    Section h-vectors of nondegenerate curves of degree 4..9.

    Raises:
        ValidationError: If d is outside 4..9
    """
    if d not in SMALL_DEGREE_HVECTORS:
        raise ValidationError(f"Small-degree list covers 4..9, got {d}")
    return [HVector(entries) for entries in SMALL_DEGREE_HVECTORS[d]]


def parse_hvector(text: str) -> HVector:
    """
    Parse comma-separated entries such as "1,3,4,2".

    Raises:
        ValidationError: On empty fields, non-integers, nonpositive entries
            or a first entry other than 1
    """
    if text is None or not text.strip():
        raise ValidationError("Empty h-vector")
    parts = text.strip().split(",")
    values = []
    for i, part in enumerate(parts):
        part = part.strip()
        if not part:
            raise ValidationError(f"Empty field at position {i} in {text!r}")
        try:
            values.append(int(part))
        except ValueError:
            raise ValidationError(f"Not an integer at position {i}: {part!r}")
    if values[0] != 1:
        raise ValidationError(f"An h-vector must start with 1, got {values[0]}")
    return HVector(tuple(values))


def rosa_bound(g: int, g1: int, g2: int) -> int:
    """Points shared by two curves whose union has genus g: at most g - g1 - g2 + 1"""
    return g - g1 - g2 + 1
