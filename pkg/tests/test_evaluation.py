from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evidentia import EMPTY, THETA, Preference, Regime, belief, compare_hypotheses, interval, make_boe, plausibility, vacuous
from evidentia import errors

from helpers import as_sets, bodies_on, overlap_frame, frames, oracle_bel, oracle_pl, oracle_table


@pytest.fixture
def frame():
    return overlap_frame()


def _t2(frame):
    a1, a2 = frame.possibility("A1"), frame.possibility("A2")
    return make_boe(frame, {a1: F(3, 9), a2: F(3, 9), a1 & a2: F(2, 9), THETA: F(1, 9)})


def _t3(frame):
    a1, a2 = frame.possibility("A1"), frame.possibility("A2")
    return make_boe(frame, {a2: F(4, 9), a1 & a2: F(5, 9)}, "open_tbm")


def _t1(frame):
    return make_boe(frame, {"A1": F(1, 3), "A2": F(1, 3), THETA: F(1, 3)})


class TestTableMode:
    def test_second_row(self, frame):
        assert belief(_t2(frame), "A1", "table") == F(3, 9)
        assert plausibility(_t2(frame), "A1", "table") == F(5, 9)

    def test_third_row(self, frame):
        assert belief(_t3(frame), "A1", "table") == 0
        assert belief(_t3(frame), "A2", "table") == F(4, 9)
        assert plausibility(_t3(frame), "A1", "table") == F(5, 9)
        assert plausibility(_t3(frame), "A2", "table") == 1

    def test_first_row_interval(self, frame):
        r = interval(_t1(frame), "A1", "table")
        assert (r.belief, r.plausibility) == (F(1, 3), F(1, 3))

    def test_unnamed_hypothesis(self, frame):
        with pytest.raises(errors.TableModeOnUnnamedHypothesis):
            belief(_t2(frame), frame.subset(["c1"]), "table")
        with pytest.raises(errors.TableModeOnUnnamedHypothesis):
            belief(_t2(frame), THETA, "table")


class TestLiteralMode:
    def test_overlap_counts_toward_belief(self, frame):
        # the overlap focal A1&A2 sits inside A1; brute-force subset enumeration agrees
        t3 = _t3(frame)
        assert belief(t3, "A1", "literal") == F(5, 9)
        assert oracle_bel(as_sets(t3), frozenset(frame.labels(frame.possibility("A1")))) == F(5, 9)

    def test_vacuous(self, frame):
        assert plausibility(vacuous(frame), "A2") == 1
        r = interval(vacuous(frame), frame.subset(["c6"]))
        assert (r.belief, r.plausibility) == (0, 1)

    def test_labels_by_definition(self, frame):
        b = _t3(frame)
        assert interval(b, THETA).belief == 1 and interval(b, THETA).plausibility == 1
        assert interval(b, EMPTY).belief == 0 and interval(b, EMPTY).plausibility == 0

    def test_full_ground_belief(self, frame):
        b = make_boe(frame, {"A1": F(1, 2), EMPTY: F(1, 4), THETA: F(1, 4)}, "open_tbm")
        assert belief(b, frame.full_mask) == F(1, 2)

    def test_outside_frame(self, frame):
        with pytest.raises(errors.HypothesisOutsideFrame):
            belief(_t2(frame), "A3")
        with pytest.raises(errors.HypothesisOutsideFrame):
            belief(_t2(frame), 1 << 10)
        with pytest.raises(errors.HypothesisOutsideFrame):
            belief(_t2(frame), 0)


class TestTBMMode:
    def test_labels_return_their_mass(self, frame):
        b = make_boe(frame, {"A1": F(1, 2), EMPTY: F(1, 3), THETA: F(1, 6)}, "open_tbm")
        assert interval(b, EMPTY, "tbm").belief == F(1, 3) == interval(b, EMPTY, "tbm").plausibility
        assert interval(b, THETA, "tbm").belief == F(1, 6) == interval(b, THETA, "tbm").plausibility

    def test_proper_hypothesis_uses_literal_rule(self, frame):
        b = _t3(frame)
        assert interval(b, "A1", "tbm").belief == interval(b, "A1", "literal").belief


class TestCompare:
    def test_unambiguous_third_row(self, frame):
        assert compare_hypotheses(_t3(frame), "A1", "A2", "belief", "table") is Preference.SECOND

    def test_ambiguous_third_row(self, frame):
        assert compare_hypotheses(_t2(frame), "A1", "A2", "belief", "table") is Preference.INDIFFERENT

    def test_reflexive(self, frame):
        assert compare_hypotheses(_t3(frame), "A2", "A2", "plausibility") is Preference.INDIFFERENT

    def test_float_tolerance(self, frame):
        b = make_boe(frame, {"A1": 0.3, "A2": 0.3 + 1e-13, THETA: 0.4 - 1e-13})
        assert compare_hypotheses(b, "A1", "A2", "belief", "literal") is Preference.INDIFFERENT

    def test_bad_criterion(self, frame):
        with pytest.raises(ValueError):
            compare_hypotheses(_t3(frame), "A1", "A2", "median")


@st.composite
def body_and_hypotheses(draw, regime=Regime.OPEN_TBM):
    frame = draw(frames(max_ground=8))
    b = draw(bodies_on(frame, regime, max_focals=16))
    h1 = draw(st.integers(1, frame.full_mask))
    h2 = draw(st.integers(1, frame.full_mask))
    return frame, b, h1, h2


def _labels(frame, mask):
    return frozenset(frame.labels(mask))


class TestProperties:
    @given(body_and_hypotheses())
    def test_literal_matches_oracle(self, case):
        frame, b, h, _ = case
        r = interval(b, h, "literal")
        assert r.belief == oracle_bel(as_sets(b), _labels(frame, h))
        assert r.plausibility == oracle_pl(as_sets(b), _labels(frame, h))
        assert r.belief <= r.plausibility

    @given(body_and_hypotheses())
    def test_monotone(self, case):
        frame, b, h1, h2 = case
        small, big = h1 & h2, h1 | h2
        if small:
            assert belief(b, small) <= belief(b, big)
            assert plausibility(b, small) <= plausibility(b, big)

    @given(body_and_hypotheses())
    def test_table_matches_oracle(self, case):
        frame, b, _, _ = case
        for name, mask in frame.possibilities:
            others = [_labels(frame, m) for n, m in frame.possibilities if m != mask]
            r = interval(b, name, "table")
            assert (r.belief, r.plausibility) == oracle_table(as_sets(b), _labels(frame, mask), others)
            assert r.belief <= r.plausibility

    @given(body_and_hypotheses())
    def test_compare_antisymmetric(self, case):
        _, b, h1, h2 = case
        flip = {Preference.FIRST: Preference.SECOND, Preference.SECOND: Preference.FIRST}
        for crit in ("belief", "plausibility"):
            p, q = compare_hypotheses(b, h1, h2, crit), compare_hypotheses(b, h2, h1, crit)
            assert q is flip.get(p, Preference.INDIFFERENT)
