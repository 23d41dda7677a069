import pytest
from hypothesis import given, strategies as st

from galois_dsp.errors import UnsupportedSequence, ZeroArgument
from galois_dsp.prime_field import PrimeModulus
from galois_dsp.sequences import (
    ExponentialRight,
    FiniteSupport,
    LeftSidedPeriodic,
    RightSidedPeriodic,
    TwoSidedPeriodic,
    exponential,
    impulse,
    minimal_period,
    sequence_from_json,
    unit_step,
    window,
)

F3, F5, F7 = (PrimeModulus.of(p) for p in (3, 5, 7))


def test_powers_of_three():
    seq = exponential(1, 3, 7)
    assert seq.eval(4) == 4
    assert list(window(seq, 0, 6).values) == [1, 3, 2, 6, 4, 5]
    assert list(window(seq, 6, 6).values) == [1, 3, 2, 6, 4, 5]
    assert seq.period == 6
    assert seq.eval(-1) == 0


def test_two_sided_blocks_have_period_nine():
    seq = TwoSidedPeriodic(F3, (0, 0, 0, 1, 1, 1, 2, 2, 2))
    assert seq.period == 9
    assert minimal_period([0, 0, 0, 1, 1, 1, 2, 2, 2] * 3) == 9
    assert seq.eval(-6) == 1


def test_finite_support_outside_is_zero():
    seq = FiniteSupport(F7, 2, (1, 2, 3))
    assert [seq.value_at(n) for n in range(0, 7)] == [0, 0, 1, 2, 3, 0, 0]


def test_impulse():
    d = impulse(3)
    assert d.period == 8
    assert [d.value_at(n) for n in range(9)] == [1, 0, 0, 0, 0, 0, 0, 0, 1]
    assert d.value_at(-8) == 1
    assert d.value_at(1) == 0
    assert list(window(d, 0, 8).values) == [1, 0, 0, 0, 0, 0, 0, 0]


def test_unit_step_and_exponential():
    u = unit_step(5)
    assert u.period == 1
    assert [u.value_at(n) for n in range(-2, 4)] == [0, 0, 1, 1, 1, 1]
    assert exponential(1, 3, 7).period == 6
    zero = exponential(0, 3, 7)
    assert all(zero.value_at(n) == 0 for n in range(10))
    with pytest.raises(ZeroArgument):
        ExponentialRight(F7, 1, 0)


@pytest.mark.parametrize("values, expected", [([1, 3, 2, 6, 4, 5], 6), ([1, 1, 1, 1], 1), ([1, 2, 1, 2], 2)])
def test_minimal_period_examples(values, expected):
    assert minimal_period(values) == expected


def test_constructors_reduce_the_period():
    seq = RightSidedPeriodic(F7, 0, (), (1, 2, 1, 2, 1, 2))
    assert seq.period_values == (1, 2)


def test_left_sided_mirror():
    seq = LeftSidedPeriodic(F7, 3, (5,), (1, 2))
    assert [seq.value_at(n) for n in range(6, -4, -1)] == [0, 0, 0, 5, 1, 2, 1, 2, 1, 2]


def test_window_of_length_one():
    seq = exponential(2, 3, 7)
    assert list(window(seq, 5, 1).values) == [seq.value_at(5)]
    with pytest.raises(ValueError):
        window(seq, 0, 0)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=30))
def test_minimal_period_retiles(values):
    d = minimal_period(values)
    assert len(values) % d == 0
    assert values[:d] * (len(values) // d) == values


@given(
    st.integers(-5, 5),
    st.lists(st.integers(0, 10), max_size=4),
    st.lists(st.integers(0, 10), min_size=1, max_size=6),
)
def test_periodicity_inside_periodic_region(start, transient, period):
    seq = RightSidedPeriodic(F7, start, tuple(transient), tuple(period))
    P = seq.period
    first = start + len(transient)
    for n in range(first, first + 3 * P):
        assert seq.value_at(n) == seq.value_at(n + P)
    two = TwoSidedPeriodic(F7, tuple(period), start)
    for n in range(-10, 10):
        assert two.value_at(n) == two.value_at(n + two.period)


@pytest.mark.parametrize("a", range(1, 11))
@pytest.mark.parametrize("A", [0, 1, 4])
def test_exponential_matches_materialised_period(A, a):
    seq = ExponentialRight(PrimeModulus.of(11), A, a)
    rsp = seq.as_right_periodic()
    for n in range(-5, 5 * seq.period + 1):
        assert seq.value_at(n) == rsp.value_at(n)


@pytest.mark.parametrize(
    "seq",
    [
        FiniteSupport(F7, -2, (1, 2, 3)),
        RightSidedPeriodic(F7, 1, (4,), (1, 6)),
        LeftSidedPeriodic(F7, 0, (), (3,)),
        TwoSidedPeriodic(F7, (1, 0, 2), 1),
        ExponentialRight(F7, 2, 3),
    ],
)
def test_json_roundtrip(seq):
    assert sequence_from_json(seq.to_json(), 7) == seq


def test_unknown_kind():
    with pytest.raises(UnsupportedSequence):
        sequence_from_json({"kind": "random"}, 7)
