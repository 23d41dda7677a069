from fractions import Fraction

from hypothesis import given, settings, strategies as st

from galois_dsp.cesaro import (
    Convergent,
    Divergent,
    DivergenceReason,
    TermStream,
    cesaro,
    cesaro_oracle,
    cesaro_sum,
    partial_sum_profile,
    reduce_rational,
    term_stream,
)
from galois_dsp.complex_field import GlElement
from galois_dsp.prime_field import PrimeModulus
from galois_dsp.sequences import RightSidedPeriodic, exponential, unit_step

PRIMES = [3, 7, 11, 19]


def brute_partial_sum_period(period, p):
    """Minimal period of S[k] by brute force over P*p terms (S[k] repeats after that)."""
    L = len(period)
    S, s = [], 0
    for k in range(2 * L * p):
        s = (s + period[k % L]) % p
        S.append(s)
    n = L * p
    return next(d for d in range(1, n + 1) if n % d == 0 and all(S[i] == S[i + d] for i in range(n)))


@st.composite
def convergent_periods(draw, primes=PRIMES):
    p = draw(st.sampled_from(primes))
    L = draw(st.integers(1, 12).filter(lambda n: n % p))
    vals = draw(st.lists(st.integers(0, p - 1), min_size=L, max_size=L))
    vals[-1] = (vals[-1] - sum(vals)) % p
    return p, vals


def test_example_powers_of_three():
    seq = exponential(1, 3, 7)
    profile = partial_sum_profile(term_stream(seq))
    assert [s[0] for s in profile.period_sums] == [1, 4, 6, 5, 2, 0]
    assert profile.period == 6
    assert cesaro_sum(profile) == Convergent(PrimeModulus.of(7)(3))
    # 1 / (1 - 3) in GF(7)
    assert reduce_rational(Fraction(1, 1 - 3), 7) == 3


def test_all_ones_diverges():
    assert cesaro(unit_step(5)) == Divergent(DivergenceReason.PERIOD_DIVISIBLE_BY_P)


def test_zero_sequence():
    seq = RightSidedPeriodic(PrimeModulus.of(7), 0, (), (0,))
    profile = partial_sum_profile(term_stream(seq))
    assert profile.period == 1
    assert cesaro(seq) == Convergent(PrimeModulus.of(7)(0))


def test_partial_sum_period_divisible_by_p():
    # terms sum to 0 per period but S = 1, 0, 0 repeats with period 3 = p
    seq = RightSidedPeriodic(PrimeModulus.of(3), 0, (), (1, 2, 0))
    assert cesaro(seq) == Divergent(DivergenceReason.PERIOD_DIVISIBLE_BY_P)


def test_transient_does_not_change_the_limit():
    F7 = PrimeModulus.of(7)
    plain = cesaro(RightSidedPeriodic(F7, 0, (), (1, 6)))
    shifted = cesaro(RightSidedPeriodic(F7, 0, (0, 0, 0), (1, 6)))
    assert plain == shifted


def test_oracle_examples():
    assert cesaro_oracle([1, -1], 1000, period=2) == Fraction(1, 2)
    assert cesaro_oracle([1, 3, 2, 6, 4, 5], 600, period=6, p=7) == Fraction(18, 6) == 3
    assert cesaro_oracle([0], 10) == 0
    assert cesaro_oracle(lambda k: (-1) ** (k + 1), 10, period=2) == Fraction(1, 2)


def test_complex_stream_is_componentwise():
    m = PrimeModulus.of(7)
    re = [1, 6, 3, 4]
    im = [2, 2, 5, 5]
    stream = TermStream.of(m, [], [GlElement(a, b, m) for a, b in zip(re, im)])
    result = cesaro(stream)
    r_re = cesaro(RightSidedPeriodic(m, 0, (), tuple(re)))
    r_im = cesaro(RightSidedPeriodic(m, 0, (), tuple(im)))
    assert result.sigma == GlElement(r_re.sigma.value, r_im.sigma.value, m)


def test_complex_stream_diverges_if_one_part_does():
    m = PrimeModulus.of(7)
    stream = TermStream.of(m, [], [GlElement(1, 1, m), GlElement(6, 0, m)])
    assert isinstance(cesaro(stream), Divergent)


@settings(max_examples=200)
@given(convergent_periods())
def test_agrees_with_integer_oracle(case):
    p, vals = case
    seq = RightSidedPeriodic(PrimeModulus.of(p), 1, (), tuple(vals))
    result = cesaro(seq)
    assert isinstance(result, Convergent)
    L = len(vals)
    limit = cesaro_oracle(vals, 50 * L, period=L, p=p)
    assert reduce_rational(limit, p) == result.sigma.value


@given(convergent_periods(), st.data())
def test_linearity(case, data):
    p, x = case
    y = data.draw(st.lists(st.integers(0, p - 1), min_size=len(x), max_size=len(x)))
    y[-1] = (y[-1] - sum(y)) % p
    alpha, beta = data.draw(st.integers(0, p - 1)), data.draw(st.integers(0, p - 1))
    m = PrimeModulus.of(p)
    combo = [(alpha * a + beta * b) % p for a, b in zip(x, y)]
    sx = cesaro(RightSidedPeriodic(m, 0, (), tuple(x))).sigma
    sy = cesaro(RightSidedPeriodic(m, 0, (), tuple(y))).sigma
    sc = cesaro(RightSidedPeriodic(m, 0, (), tuple(combo))).sigma
    assert sc == sx * alpha + sy * beta


@given(st.sampled_from(PRIMES), st.lists(st.integers(0, 18), min_size=1, max_size=8), st.integers(1, 500))
def test_truncation_identity(p, vals, n):
    # S reduced mod p, summed over whole periods of S, as integers
    P = brute_partial_sum_period([v % p for v in vals], p)
    S, s = [], 0
    for k in range(n + P):
        s = (s + vals[k % len(vals)]) % p
        S.append(s)
    whole = (n // P) * P
    assert sum(S[:whole]) == (n // P) * sum(S[:P])


@given(st.sampled_from(PRIMES), st.lists(st.integers(0, 18), min_size=1, max_size=8))
def test_convergence_iff_partial_sum_period_is_a_unit(p, vals):
    vals = [v % p for v in vals]
    P = brute_partial_sum_period(vals, p)
    result = cesaro(RightSidedPeriodic(PrimeModulus.of(p), 0, (), tuple(vals)))
    assert isinstance(result, Convergent) == (P % p != 0)


@settings(max_examples=150)
@given(convergent_periods(), st.data())
def test_transient_offsets_tail_partial_sums(case, data):
    p, vals = case
    transient = data.draw(st.lists(st.integers(0, p - 1), max_size=5))
    seq = RightSidedPeriodic(PrimeModulus.of(p), 0, tuple(transient), tuple(vals))
    # brute force: mean of the reduced partial sums over whole periods after the transient
    s = sum(transient) % p
    tail = []
    for k in range(len(vals)):
        s = (s + vals[k % len(vals)]) % p
        tail.append(s)
    expected = reduce_rational(Fraction(sum(tail), len(tail)), p)
    assert cesaro(seq).sigma.value == expected
