"""
Unit tests for divisor arithmetic on the cubic scroll, cubic cone and
quartic del Pezzo surface
"""

import pytest
from hypothesis import given, strategies as st

from src.core.bounds import b
from src.core.surfaces import (
    ANTICANONICAL,
    HYPERPLANE,
    ConeIncidence,
    DelPezzoClass,
    ScrollClass,
    cone_bound,
    dp_construction,
    dp_genus,
    dp_intersect,
    hyperplane_split,
    is_nondegenerate_degree,
    scroll_bruteforce,
    scroll_intersect,
    scroll_maximize,
    scroll_objective,
    scroll_sharp_classes,
    surface_meet_bound,
)
from src.utils.exceptions import ValidationError



class TestScrollClass:
    """Test divisor classes on the cubic scroll"""

    def test_hyperplane(self):
        """H = 2h - e has degree 3"""
        assert str(HYPERPLANE) == "2h-e"
        assert HYPERPLANE.degree == 3
        assert scroll_intersect(HYPERPLANE, HYPERPLANE) == 3

    def test_rendering(self):
        assert str(ScrollClass(3, 0)) == "3h"
        assert str(ScrollClass(1, 6)) == "7h-6e"
        assert str(ScrollClass(0, 1)) == "h-e"

    def test_from_hyperplane_form(self):
        assert ScrollClass.from_hyperplane_form(7, 6) == ScrollClass(1, 6)

    def test_curve_validation(self):
        with pytest.raises(ValidationError):
            ScrollClass.curve(0, 3)
        with pytest.raises(ValidationError):
            ScrollClass.curve(2, -1)

    def test_hyperplane_split(self):
        n, rest = hyperplane_split(ScrollClass(3, 1))
        assert n == 1
        assert rest == ScrollClass(2, 0)


class TestScrollOptimization:
    """Test the corner maximum of F"""

    def test_six_eight(self):
        """(6, 8): 21 at (3, 1) with classes 3h and 7h-6e"""
        result = scroll_maximize((6, 8))
        assert result.maximum == 21
        assert result.maximizers == [(3, 1)]
        assert result.to_dict() == {
            "maximum": 21,
            "maximizers": [[3, 1]],
            "classes": [["3h", "7h-6e"]],
        }

    def test_objective_outside_box(self):
        with pytest.raises(ValidationError):
            scroll_objective(4, 1, (6, 8))

    def test_degree_one_rejected(self):
        with pytest.raises(ValidationError):
            scroll_maximize((1, 8))

    def test_corners_match_full_box_small(self):
        for d1 in range(2, 16):
            for d2 in range(2, 16):
                assert scroll_maximize((d1, d2)).maximum == scroll_bruteforce((d1, d2))

    @pytest.mark.slow
    def test_corners_match_full_box(self):
        """Box maximum, corner maximum and B agree for all 2 <= d1, d2 <= 60"""
        for d1 in range(2, 61):
            for d2 in range(2, 61):
                corner = scroll_maximize((d1, d2)).maximum
                assert scroll_bruteforce((d1, d2)) == corner
                assert corner == b((d1, d2))

    @given(st.integers(min_value=3, max_value=120), st.integers(min_value=3, max_value=120))
    def test_sharp_classes(self, d1, d2):
        """The listed classes have the right degrees and meet in B points"""
        c1, c2 = scroll_sharp_classes((d1, d2))
        assert (c1.degree, c2.degree) == (d1, d2)
        assert scroll_intersect(c1, c2) == b((d1, d2))

    def test_meet_bound(self):
        assert surface_meet_bound(6) == 11
        assert surface_meet_bound(6, rational=False) == 10
        assert is_nondegenerate_degree(4)
        assert not is_nondegenerate_degree(3)


class TestCone:
    """Test the cubic cone bound"""

    def test_off_vertex(self):
        """Curves missing the vertex meet in d1 d2 / 3 points"""
        inc = ConeIncidence.for_pair((6, 6), False, False)
        result = cone_bound((6, 6), inc)
        assert result.bound == 12
        assert not result.strict

    def test_through_vertex(self):
        """(4, 5) through the vertex: (20 - 2) / 3 + 1"""
        inc = ConeIncidence.for_pair((4, 5), True, True)
        assert (inc.i, inc.j) == (1, 2)
        result = cone_bound((4, 5), inc)
        assert result.bound == 7
        assert result.strict
        assert result.exceeds_off_vertex
        assert result.sharp_claimed

    def test_residue(self):
        assert [ConeIncidence.residue(d) for d in (3, 4, 5, 6)] == [3, 1, 2, 3]

    def test_off_vertex_needs_multiple_of_three(self):
        inc = ConeIncidence(False, True, 2, 3)
        with pytest.raises(ValidationError):
            cone_bound((5, 6), inc)

    def test_mismatched_incidence(self):
        with pytest.raises(ValidationError):
            cone_bound((4, 5), ConeIncidence(True, True, 1, 1))

    def test_incidence_range(self):
        with pytest.raises(ValidationError):
            ConeIncidence(True, True, 0, 1)

    def test_smallest_cases(self):
        """Two lines through the vertex meet once; two quartics meet in 6 points"""
        lines = cone_bound((1, 1), ConeIncidence.for_pair((1, 1), True, True))
        assert lines.bound == 1
        assert lines.strict
        assert not lines.sharp_claimed
        assert cone_bound((4, 4), ConeIncidence.for_pair((4, 4), True, True)).bound == 6

    def test_through_vertex_integral(self):
        """The vertex bound is an integer with the closed forms for small residues"""
        for d1 in range(1, 301):
            for d2 in range(1, 301):
                inc = ConeIncidence.for_pair((d1, d2), True, True)
                result = cone_bound((d1, d2), inc)
                assert result.strict
                assert 3 * (result.bound - 1) == d1 * d2 - inc.i * inc.j
                if (inc.i, inc.j) == (1, 1):
                    assert 3 * result.bound == d1 * d2 + 2
                elif (inc.i, inc.j) in {(1, 2), (2, 1)}:
                    assert 3 * result.bound == d1 * d2 + 1
                assert result.exceeds_off_vertex == (3 * result.bound > d1 * d2)
                assert result.sharp_claimed == (max(d1, d2) > 3)


class TestDelPezzo:
    """Test the quartic del Pezzo surface"""

    def test_anticanonical(self):
        """-K is the hyperplane class: degree 4, genus 1"""
        assert ANTICANONICAL.degree == 4
        assert dp_genus(ANTICANONICAL) == 1

    def test_construction(self):
        """k = 2, l = 3: degrees 5 and 7 meeting in 13 points"""
        first, second = dp_construction(2, 3)
        assert str(first) == "5h-e1-2e2-2e3-2e4-3e5"
        assert (first.degree, second.degree) == (5, 7)
        assert dp_intersect(first, second) == 13
        assert dp_genus(first) == dp_genus(second) == 0

    @pytest.mark.slow
    def test_construction_family(self):
        """Rational curves of degrees 2k+1, 2l+1 meeting in B points, for all 1 <= k, l <= 50"""
        for k in range(1, 51):
            for l in range(1, 51):
                first, second = dp_construction(k, l)
                assert (first.degree, second.degree) == (2 * k + 1, 2 * l + 1)
                assert dp_intersect(first, second) == 2 * k * l + 1
                assert dp_intersect(first, second) == b((2 * k + 1, 2 * l + 1))
                assert dp_genus(first) == dp_genus(second) == 0

    def test_construction_rejects(self):
        with pytest.raises(ValidationError):
            dp_construction(0, 2)

    def test_exceptional_line(self):
        """e1 is a line of genus 0 with self-intersection -1"""
        e1 = DelPezzoClass(0, (-1, 0, 0, 0, 0))
        assert str(e1) == "e1"
        assert e1.degree == 1
        assert dp_intersect(e1, e1) == -1
        assert dp_genus(e1) == 0

    def test_wrong_length(self):
        with pytest.raises(ValidationError):
            DelPezzoClass(3, (1, 1, 1))
