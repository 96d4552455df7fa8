"""
Unit tests for h-vectors and the largest-genus search

Tests:
- Macaulay growth and O-sequences
- Integration, differences and the genus of an h-vector
- Admissibility rules
- Enumeration, branch-and-bound search and the extremal h-vector
"""

import pytest
from hypothesis import given, settings, strategies as st

from src.core.bounds import g_extremal
from src.core.hvectors import (
    ACM_TAILS,
    ALL_RULES,
    HVector,
    HilbertFunction,
    Rule,
    acm_genus_closed_form,
    check_rules,
    difference,
    enumerate_admissible,
    enumeration_frame,
    enumeration_page,
    extremal_hvector,
    genus_of_hvector,
    genus_with_defect,
    integrate,
    is_admissible,
    is_o_sequence,
    iter_admissible,
    macaulay_next_max,
    max_genus_bruteforce,
    max_genus_search,
    parse_hvector,
    regularity,
    rosa_bound,
    small_degree_hvectors,
    tail_hvector,
)
from src.utils.exceptions import EnumerationLimitError, ValidationError


class TestHVector:
    """Test the HVector record"""

    def test_degree_and_socle(self):
        h = HVector((1, 3, 4, 2))
        assert h.degree == 10
        assert h.socle_degree == 3
        assert str(h) == "1,3,4,2"
        assert h.to_list() == [1, 3, 4, 2]

    def test_rejects_zero_entry(self):
        with pytest.raises(ValidationError):
            HVector((1, 3, 0, 2))

    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            HVector(())

    def test_parse(self):
        """Whitespace around fields is ignored"""
        assert parse_hvector(" 1, 3,5,4 ,3") == HVector((1, 3, 5, 4, 3))

    @pytest.mark.parametrize("text", ["", "1,,3", "1,3,x", "2,3", "1,3,-1"])
    def test_parse_rejects(self, text):
        """Empty fields, non-integers, bad first entry"""
        with pytest.raises(ValidationError):
            parse_hvector(text)


class TestMacaulay:
    """Test Macaulay's growth bound"""

    @pytest.mark.parametrize("value,degree,expected", [
        (3, 1, 6),
        (4, 2, 5),
        (3, 3, 3),
        (2, 2, 2),
        (1, 5, 1),
    ])
    def test_next_max(self, value, degree, expected):
        assert macaulay_next_max(value, degree) == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(ValidationError):
            macaulay_next_max(0, 2)

    def test_o_sequence(self):
        assert is_o_sequence((1, 3, 6, 10))
        assert is_o_sequence((1, 3, 4, 5, 6))
        assert not is_o_sequence((1, 3, 7))
        assert not is_o_sequence((1, 3, 4, 6))


class TestGenus:
    """Test integration and the genus of an h-vector"""

    @pytest.mark.parametrize("h,expected", [
        ((1, 3, 5, 4, 3), 22),
        ((1, 3, 4, 4, 4), 24),
        ((1, 3, 4, 4, 3, 1), 25),
        ((1, 3, 4, 4, 2), 18),
        ((1, 3, 4, 3, 1), 13),
    ])
    def test_genus(self, h, expected):
        assert genus_of_hvector(h) == expected

    def test_integrate(self):
        f = integrate((1, 3, 4, 2))
        assert f.prefix == (1, 4, 8, 10)
        assert f.stable == 10
        assert f.value(-1) == 0
        assert f.value(100) == 10

    def test_difference_of_hilbert_function(self):
        """(1,3,6,9,10) has h-vector (1,2,3,3,1); with defect 1 the genus is 11"""
        h = difference(HilbertFunction(prefix=(1, 3, 6, 9, 10), stable=10))
        assert h == HVector((1, 2, 3, 3, 1))
        assert genus_with_defect(h, 1).genus == 11

    def test_difference_rejects_decrease(self):
        with pytest.raises(ValidationError):
            difference(HilbertFunction(prefix=(1, 4, 3), stable=5))

    def test_defect(self):
        profile = genus_with_defect((1, 3, 5, 4, 3), 2)
        assert profile.genus == 20
        assert not profile.is_acm
        assert profile.to_dict() == {"hvector": [1, 3, 5, 4, 3], "rao_defect": 2, "genus": 20}
        with pytest.raises(ValidationError):
            genus_with_defect((1, 3), -1)

    @given(st.lists(st.integers(min_value=1, max_value=12), min_size=1, max_size=12))
    def test_difference_inverts_integrate(self, entries):
        """Integrating then differencing returns the h-vector"""
        h = HVector(tuple(entries))
        assert difference(integrate(h)) == h

    @given(st.integers(min_value=0, max_value=40), st.sampled_from(sorted(ACM_TAILS)))
    def test_closed_form_genus(self, m, tail):
        """(m+2)b + (m+1)a + 4 C(m+1, 2) matches the summed genus"""
        a, b = tail
        assert acm_genus_closed_form(m, a, b) == genus_of_hvector(tail_hvector(m, a, b))

    def test_closed_form_rejects_tail(self):
        with pytest.raises(ValidationError):
            acm_genus_closed_form(2, 2, 1)

    def test_regularity(self):
        assert regularity((1, 3, 4, 3, 1)) == 5

    def test_rosa_bound(self):
        assert rosa_bound(25, 0, 0) == 26

    @pytest.mark.slow
    @settings(max_examples=10_000, deadline=None)
    @given(st.lists(st.integers(min_value=1, max_value=8), min_size=3, max_size=10), st.data())
    def test_genus_monotone_in_hilbert_function(self, tail, data):
        """A pointwise larger Hilbert function of the same degree never has larger genus"""
        low = [1] + tail
        high = list(low)
        moves = 0
        # shift a unit from position j down to 1 <= i < j: H grows on [i, j), degree is kept
        for _ in range(data.draw(st.integers(min_value=1, max_value=4))):
            if len(high) < 3:
                break
            j = data.draw(st.integers(min_value=2, max_value=len(high) - 1))
            i = data.draw(st.integers(min_value=1, max_value=j - 1))
            if high[j] == 1 and j != len(high) - 1:
                continue
            high[i] += 1
            high[j] -= 1
            if high[-1] == 0:
                high.pop()
            moves += 1

        f, g = integrate(tuple(low)), integrate(tuple(high))
        assert f.stable == g.stable
        span = range(len(low) + 1)
        assert all(f.value(t) <= g.value(t) for t in span)
        assert genus_of_hvector(tuple(low)) >= genus_of_hvector(tuple(high))
        if moves:
            assert any(f.value(t) < g.value(t) for t in range(1, len(low)))
            assert genus_of_hvector(tuple(low)) > genus_of_hvector(tuple(high))


class TestRules:
    """Test the admissibility rules"""

    def test_extremal_vector_admissible(self):
        admissible, violations = is_admissible((1, 3, 4, 4, 4, 4, 2))
        assert admissible
        assert violations == []

    @pytest.mark.parametrize("h,rule", [
        ((1, 3, 4, 4, 3, 2), Rule.R7),
        ((1, 3, 4, 5), Rule.R6),
        ((1, 3, 3, 3), Rule.R4),
        ((1, 3, 3, 3), Rule.R8),
        ((1, 3, 4, 2, 4), Rule.R5),
        ((1, 3, 7), Rule.R2),
        ((1, 2, 4, 4), Rule.R3),
    ])
    def test_violation(self, h, rule):
        ids = {v.rule_id for v in check_rules(h)}
        assert rule in ids

    def test_rule_subset(self):
        """Only the requested rules are reported"""
        assert check_rules((1, 3, 4, 5), rules=[Rule.R7]) == []

    def test_violation_to_dict(self):
        violation = check_rules((1, 3, 4, 5))[0]
        assert violation.to_dict()["rule_id"] == "R6"

    def test_low_degree_rejected(self):
        """Admissibility is only defined from degree 9"""
        with pytest.raises(ValidationError):
            is_admissible((1, 3, 4))

    def test_small_degree_list(self):
        assert small_degree_hvectors(8) == [HVector((1, 3, 4)), HVector((1, 3, 3, 1))]
        with pytest.raises(ValidationError):
            small_degree_hvectors(10)


class TestEnumeration:
    """Test enumeration and the largest-genus search"""

    def test_degree_nine(self):
        assert enumerate_admissible(9) == [HVector((1, 3, 4, 1)), HVector((1, 3, 5))]

    def test_degree_ten(self):
        assert [str(h) for h in enumerate_admissible(10)] == ["1,3,4,2", "1,3,5,1", "1,3,6"]

    def test_enumeration_is_lazy(self):
        first = next(iter_admissible(20))
        assert first.degree == 20

    def test_enumeration_frame(self):
        frame = enumeration_frame(10)
        assert list(frame.columns) == ["hvector", "genus", "regularity"]
        assert frame["genus"].tolist() == [8, 7, 6]
        assert frame["regularity"].tolist() == [4, 4, 3]

    def test_every_result_admissible(self):
        for h in enumerate_admissible(18):
            assert is_admissible(h) == (True, [])

    def test_lexicographic_order(self):
        found = [h.entries for h in enumerate_admissible(20)]
        assert found == sorted(found)

    @pytest.mark.parametrize("d", [8, 121])
    def test_degree_limits(self, d, clean_env):
        with pytest.raises(EnumerationLimitError):
            enumerate_admissible(d)

    def test_limit_from_environment(self, clean_env):
        clean_env.setenv("CURVEBOUNDS_MAX_ENUM", "15")
        with pytest.raises(EnumerationLimitError):
            max_genus_search(16)

    @pytest.mark.parametrize("d,hvector,genus", [
        (12, (1, 3, 4, 3, 1), 13),
        (16, (1, 3, 4, 4, 3, 1), 25),
        (22, (1, 3, 4, 4, 4, 4, 2), 50),
    ])
    def test_max_genus(self, d, hvector, genus):
        assert max_genus_bruteforce(d) == (HVector(hvector), genus)

    def test_search_matches_bruteforce(self):
        """Pruning never loses the optimum, and both pick the same vector on ties"""
        for d in range(9, 41):
            result = max_genus_search(d)
            assert max_genus_bruteforce(d) == (result.hvector, result.genus)

    def test_bruteforce_scans_enumeration(self):
        best = max(genus_of_hvector(h) for h in enumerate_admissible(25))
        assert max_genus_bruteforce(25)[1] == best

    def test_search_result_to_dict(self):
        data = max_genus_search(16).to_dict()
        assert data["genus"] == 25
        assert data["nodes_visited"] > 0

    def test_enumeration_page(self):
        frame, has_more = enumeration_page(10, limit=2)
        assert frame["hvector"].tolist() == ["1,3,4,2", "1,3,5,1"]
        assert has_more

        frame, has_more = enumeration_page(10, limit=2, offset=2)
        assert frame["hvector"].tolist() == ["1,3,6"]
        assert not has_more

    def test_enumeration_page_past_end(self):
        frame, has_more = enumeration_page(10, limit=5, offset=7)
        assert frame.empty
        assert list(frame.columns) == ["hvector", "genus", "regularity"]
        assert not has_more

    def test_enumeration_page_matches_frame(self):
        full = enumeration_frame(24)
        frame, _ = enumeration_page(24, limit=4, offset=3)
        assert frame.to_dict(orient="records") == full.iloc[3:7].to_dict(orient="records")

    def test_enumeration_page_at_cap_is_bounded(self, clean_env):
        """The top degree returns one page without walking the whole tree"""
        frame, has_more = enumeration_page(120, limit=10)
        assert len(frame) == 10
        assert has_more

    @pytest.mark.parametrize("limit,offset", [(0, 0), (10001, 0), (5, -1), (5, 100001)])
    def test_enumeration_page_rejects_window(self, limit, offset):
        with pytest.raises(ValidationError):
            enumeration_page(10, limit=limit, offset=offset)


class TestRuleSensitivity:
    """Dropping a rule can only raise the maximum genus"""

    def test_without_r8_beats_extremal(self):
        rules = ALL_RULES - {Rule.R8}
        result = max_genus_search(22, rules=rules)
        assert result.hvector == HVector((1, 3, 4, 4, 4, 3, 3))
        assert result.genus == 51
        assert g_extremal(22) == 50
        assert max_genus_bruteforce(22, rules=rules) == (result.hvector, 51)

    def test_witness_breaks_only_r8(self):
        ids = [v.rule_id for v in check_rules((1, 3, 4, 4, 4, 3, 3))]
        assert ids == [Rule.R8]

    def test_all_rules_keep_extremal(self):
        assert max_genus_search(22, rules=ALL_RULES).genus == 50

    @pytest.mark.parametrize("dropped", [Rule.R4, Rule.R5, Rule.R6, Rule.R7, Rule.R8])
    def test_dropping_rule_never_lowers_maximum(self, dropped):
        for d in (16, 22):
            relaxed = max_genus_search(d, rules=ALL_RULES - {dropped}).genus
            assert relaxed >= g_extremal(d)


class TestExtremal:
    """Test the extremal h-vector"""

    @pytest.mark.parametrize("d,expected", [
        (9, (1, 3, 4, 1)),
        (10, (1, 3, 4, 2)),
        (11, (1, 3, 4, 3)),
        (12, (1, 3, 4, 3, 1)),
        (14, (1, 3, 4, 4, 2)),
    ])
    def test_shape(self, d, expected):
        assert extremal_hvector(d) == HVector(expected)

    def test_rejects_small_degree(self):
        with pytest.raises(ValidationError):
            extremal_hvector(4)

    @given(st.integers(min_value=5, max_value=400))
    def test_genus_is_g_extremal(self, d):
        """The extremal h-vector attains g(d)"""
        h = extremal_hvector(d)
        assert h.degree == d
        assert genus_of_hvector(h) == g_extremal(d)

    @pytest.mark.slow
    def test_extremality_to_eighty(self):
        """Search maximum equals g(d) for 9 <= d <= 80"""
        for d in range(9, 81):
            assert max_genus_search(d).genus == g_extremal(d)

    @pytest.mark.slow
    def test_bruteforce_extremality_to_eighty(self):
        """Unpruned scan of every admissible h-vector reaches g(d) and no further"""
        for d in range(9, 81):
            h, genus = max_genus_bruteforce(d)
            assert genus == g_extremal(d)
            assert genus_of_hvector(h) == genus
