"""Division: partial products, worked step values, reconstruction, oracle agreement."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plumcalc import plum_div
from plumcalc.digit_string import DigitString
from plumcalc.plum_div import div_decimal, pp0_plum, pp0_wedge, pp1


def ds(value: int) -> DigitString:
    return DigitString.from_int(value)


def test_pp0_plum_worked_values():
    b = ds(369)
    assert pp0_plum(b, (), 1)[0] == 0
    assert pp0_plum(b, (1,), 2)[0] == -3
    assert pp0_plum(b, (1, 5), 3)[0] == 4
    assert pp0_plum(b, (1, 5, 3), 4)[0] == -4
    assert pp0_plum(b, (1, 5, 3), 5)[0] == -3


def test_pp0_wedge_worked_values():
    b = ds(697)
    assert pp0_wedge(b, (0,), 2)[0] == 0
    assert pp0_wedge(b, (0, 3), 3)[0] == -1
    assert pp0_wedge(b, (0, 3, 4), 4)[0] == 0
    assert pp0_wedge(b, (0, 3, 4, 8), 5)[0] == 6
    assert pp0_wedge(b, (0, 3, 4, 8), 6)[0] == -4


def test_pp0_wedge_without_leading_zero_digit():
    # same partial products, indexed from the first chosen digit
    b = ds(697)
    assert pp0_wedge(b, (3,), 2)[0] == -1
    assert pp0_wedge(b, (3, 4), 3)[0] == 0
    assert pp0_wedge(b, (3, 4, 8), 4)[0] == 6


def test_pp0_methods_agree_valuewise():
    for bv in (369, 697, 3456, 41, 5):
        b = ds(bv)
        for n in range(1, 9):
            for c1 in range(10):
                for c2 in range(10):
                    c = (c1, c2)[: max(0, n - 1)]
                    assert pp0_plum(b, c, n)[0] == pp0_wedge(b, c, n)[0]


def test_pp0_rejects_bad_step():
    with pytest.raises(ValueError):
        pp0_plum(ds(369), (), 0)
    with pytest.raises(ValueError):
        pp0_wedge(ds(369), (), -1)


def test_pp1_worked_values():
    assert pp1(ds(369), 5)[0] == 18
    assert pp1(ds(369), 1)[0] == 4
    assert pp1(ds(369), 3)[0] == 11
    assert pp1(ds(697), 3)[0] == 21
    assert pp1(ds(697), 4)[0] == 28
    assert pp1(ds(697), 8)[0] == 55
    assert pp1(ds(401), 0)[0] == 0
    assert pp1(ds(7), 6)[0] == 42
    with pytest.raises(ValueError):
        pp1(ds(369), 10)


def test_divmod_worked_trace_56789_369():
    q, r, trace = plum_div.divmod(ds(56789), ds(369), "plum")
    assert (str(q), str(r)) == ("153", "332")
    assert [s.remainder for s in trace.steps] == [1, 1, 2, 32, 332]
    assert [s.pp0 for s in trace.steps] == [0, -3, 4, -4, -3]
    assert [s.pp1 for s in trace.steps] == [4, 18, 11, None, None]
    assert [s.interim for s in trace.steps] == [5, 16, 17, 28, 329]
    assert trace.quotient_digits == (1, 5, 3)


def test_divmod_worked_trace_2728018_3456():
    q, r, trace = plum_div.divmod(ds(2728018), ds(3456), "plum")
    assert (str(q), str(r)) == ("789", "1234")
    assert trace.quotient_digits == (0, 7, 8, 9)
    assert [s.pp1 for s in trace.steps] == [0, 24, 27, 31, None, None, None]
    assert [s.pp0 for s in trace.steps] == [0, 0, 2, 5, 8, -1, -6]
    assert [s.remainder for s in trace.steps] == [2, 3, 3, 2, 12, 122, 1234]


def test_divmod_worked_trace_242558_697_wedge():
    q, r, trace = plum_div.divmod(ds(242558), ds(697), "wedge")
    assert (str(q), str(r)) == ("348", "2")
    assert trace.quotient_digits == (0, 3, 4, 8)
    assert [s.pp0 for s in trace.steps] == [0, 0, -1, 0, 6, -4]
    assert [s.pp1 for s in trace.steps] == [0, 21, 28, 55, None, None]
    assert [s.remainder for s in trace.steps] == [2, 3, 5, 0, -1, 2]


def test_divmod_allows_transiently_negative_remainders():
    _, _, trace = plum_div.divmod(ds(242558), ds(697), "wedge")
    assert any(s.remainder < 0 for s in trace.steps)
    assert int(trace.remainder) >= 0


def test_divmod_small_dividend():
    q, r, trace = plum_div.divmod(ds(5), ds(369), "plum")
    assert (str(q), str(r)) == ("0", "5")
    assert trace.steps == ()


def test_divmod_rejects_zero_divisor():
    with pytest.raises(ZeroDivisionError):
        plum_div.divmod(ds(5), ds(0), "plum")
    with pytest.raises(ValueError):
        plum_div.divmod(ds(5), ds(3), "nope")


def test_step_recurrence_holds():
    for a, b, method in ((56789, 369, "plum"), (2728018, 3456, "plum"), (242558, 697, "wedge")):
        _, _, trace = plum_div.divmod(ds(a), ds(b), method)
        prev = 0
        for step in trace.steps:
            assert step.interim == 10 * prev + step.digit
            assert step.after_pp0 == step.interim - step.pp0
            expected = step.after_pp0 - (step.pp1 or 0)
            assert step.remainder == expected
            assert step.pp0 == sum(t.value for t in step.pp0_terms)
            if step.pp1 is not None:
                assert step.pp1 == sum(t.value for t in step.pp1_terms)
            prev = step.remainder


def test_pp_reconstruction_identity():
    for a, b in ((56789, 369), (2728018, 3456), (242558, 697), (5678900, 369), (99999, 7)):
        for method in ("plum", "wedge"):
            q, _, trace = plum_div.divmod(ds(a), ds(b), method)
            assert trace.pp_reconstruction() == b * int(q)


def test_divmod_agrees_exhaustively_small():
    for a in range(0, 160):
        for b in range(1, 60):
            for method in ("plum", "wedge"):
                q, r, _ = plum_div.divmod(ds(a), ds(b), method)
                assert (int(q), int(r)) == (a // b, a % b), (a, b, method)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(min_value=0, max_value=10**64),
    st.integers(min_value=1, max_value=10**32),
    st.sampled_from(("plum", "wedge")),
)
def test_divmod_agrees_random_large(x, y, method):
    q, r, trace = plum_div.divmod(ds(x), ds(y), method)
    assert (int(q), int(r)) == (x // y, x % y)
    assert trace.pp_reconstruction() == y * (x // y)
    # canonical outputs
    assert str(q) == str(x // y)
    assert str(r) == str(x % y)


def test_div_decimal_worked_example():
    text, remainder, _ = div_decimal(ds(56789), ds(369), 2)
    assert text == "153.89"
    assert str(remainder) == "359"


def test_div_decimal_zero_places_matches_divmod():
    text, remainder, _ = div_decimal(ds(56789), ds(369), 0)
    assert text == "153"
    assert str(remainder) == "332"


def test_div_decimal_small_quotient():
    text, remainder, _ = div_decimal(ds(1), ds(3), 3)
    assert text == "0.333"
    assert str(remainder) == "1"


def test_div_decimal_rejects_bad_arguments():
    with pytest.raises(ValueError):
        div_decimal(ds(1), ds(3), -1)
    with pytest.raises(ZeroDivisionError):
        div_decimal(ds(1), ds(0), 2)


def test_divide_alias():
    assert plum_div.divide(ds(100), ds(7))[0] == ds(14)
