import random

import pytest
from hypothesis import given, settings, strategies as st

from galois_dsp.errors import InvalidLength, LengthMismatch, NotInAlphabet, OrderMismatch
from galois_dsp.extension_field import build_complex_ext, ext_order
from galois_dsp.ffft import (
    FfftPlan,
    all_real,
    cyclic_convolution,
    ffft,
    iffft,
    kernel_is_real,
    length_catalogue,
    plan,
    plan_with_kernel,
    pointwise_mul,
    pollard_special_case,
    real_kernel_lengths,
)


def brute_dft(f, zeta, cx):
    """Each term computed with a fresh power; no shared tables."""
    N = len(f)
    return [
        sum((cx.embed_alphabet(v) * zeta ** (i * k) for i, v in enumerate(f)), cx.carrier.zero)
        for k in range(N)
    ]


def brute_cyclic(f, g, p):
    N = len(f)
    return [sum(f[i] * g[(n - i) % N] for i in range(N)) % p for n in range(N)]


def as_ints(vec):
    assert all(not any(v.coeffs[1:]) for v in vec)
    return [v.coeffs[0] for v in vec]


@pytest.mark.parametrize("N", [8, 16, 4, 24, 48])
def test_plans_for_gf7(N):
    pl = plan(7, N=N)
    assert ext_order(pl.zeta) == N
    assert pl.N == N


def test_length_five_rejected_for_gf7():
    with pytest.raises(InvalidLength):
        plan(7, N=5)


def test_gf3_length_four_uses_j():
    pl = plan(3, N=4)
    assert pl.zeta == pl.field.j_element
    F = ffft([0, 1, 0, 0], pl)
    pairs = [tuple(c.coeffs[0] for c in pl.field.cartesian(v)) for v in F]
    assert pairs == [(1, 0), (0, 1), (2, 0), (0, 2)]


def test_wrong_order_kernel_rejected():
    pl = plan(7, N=8)
    with pytest.raises(OrderMismatch):
        FfftPlan(16, pl.zeta, pl.field)


def test_input_checks():
    pl = plan(7, N=8)
    with pytest.raises(LengthMismatch):
        ffft([1, 2, 3], pl)
    with pytest.raises(NotInAlphabet):
        ffft([pl.zeta] + [0] * 7, pl)
    ffft([pl.zeta] + [0] * 7, pl, relaxed=True)


@pytest.mark.parametrize("p,N", [(7, 8), (7, 16), (3, 8), (11, 12)])
def test_impulse_and_zero(p, N):
    pl = plan(p, N=N)
    one, zero = pl.field.carrier.one, pl.field.carrier.zero
    assert ffft([1] + [0] * (N - 1), pl) == [one] * N
    assert ffft([0] * N, pl) == [zero] * N


@pytest.mark.parametrize("p,N", [(7, 8), (7, 16), (3, 4), (11, 24)])
def test_matches_brute_force(p, N):
    pl = plan(p, N=N)
    rng = random.Random(p * N)
    f = [rng.randrange(p) for _ in range(N)]
    assert ffft(f, pl) == brute_dft(f, pl.zeta, pl.field)


def test_roundtrip_random_gf7():
    pl = plan(7, N=8)
    rng = random.Random(8)
    for _ in range(100):
        f = [rng.randrange(7) for _ in range(8)]
        assert as_ints(iffft(ffft(f, pl), pl)) == f


def test_inverse_of_constant_is_scaled_impulse():
    pl = plan(7, N=8)
    c = pl.field.carrier(5)
    assert as_ints(iffft([c] * 8, pl)) == [5, 0, 0, 0, 0, 0, 0, 0]


def test_length_one_is_identity():
    pl = plan(7, N=1)
    assert as_ints(ffft([4], pl)) == [4]
    assert as_ints(iffft(ffft([4], pl), pl)) == [4]


def test_convolution_small_cases():
    pl = plan(7, N=3)
    assert as_ints(cyclic_convolution([1, 0, 0], [3, 1, 2], pl)) == [3, 1, 2]
    assert as_ints(cyclic_convolution([0, 1, 0], [3, 1, 2], pl)) == [2, 3, 1]


@pytest.mark.parametrize("N", [4, 8, 16])
def test_convolution_theorem(N):
    pl = plan(7, N=N)
    rng = random.Random(N)
    for _ in range(20):
        f = [rng.randrange(7) for _ in range(N)]
        g = [rng.randrange(7) for _ in range(N)]
        direct = cyclic_convolution(f, g, pl)
        assert as_ints(direct) == brute_cyclic(f, g, 7)
        assert ffft(direct, pl, relaxed=True) == pointwise_mul(ffft(f, pl), ffft(g, pl))
        assert as_ints(iffft(pointwise_mul(ffft(f, pl), ffft(g, pl)), pl)) == brute_cyclic(f, g, 7)


@settings(max_examples=40)
@given(
    st.sampled_from([(7, 8), (3, 8), (11, 6)]),
    st.data(),
)
def test_linearity(case, data):
    p, N = case
    pl = plan(p, N=N)
    vec = st.lists(st.integers(0, p - 1), min_size=N, max_size=N)
    f, g = data.draw(vec), data.draw(vec)
    a, b = data.draw(st.integers(0, p - 1)), data.draw(st.integers(0, p - 1))
    combo = [(a * x + b * y) % p for x, y in zip(f, g)]
    F, G = ffft(f, pl), ffft(g, pl)
    assert ffft(combo, pl) == [x * a + y * b for x, y in zip(F, G)]


def test_conjugate_symmetry_of_real_input():
    pl = plan(7, N=8)
    cx = pl.field
    assert ext_order(pl.zeta) == 8 and not kernel_is_real(pl)
    f = [3, 1, 4, 1, 5, 2, 6, 0]
    F = ffft(f, pl)
    # order divides q + 1, so conj(zeta) = zeta^q = zeta^-1 and F_(-k) = conj(F_k)
    assert cx.conjugate(pl.zeta) == pl.zeta ** (8 - 1)
    for k in range(8):
        assert F[-k % 8] == cx.conjugate(F[k])


def test_pollard_all_ones():
    cx = build_complex_ext(7)
    # 3 has order 6 in GF(7); transform of the impulse is all ones
    out = pollard_special_case([1, 0, 0, 0, 0, 0], 3, cx)
    assert out == [cx.carrier.one] * 6


def test_pollard_matches_complex_path():
    cx = build_complex_ext(7)
    rng = random.Random(6)
    zeta = cx.base_embedding(cx.base(3))
    pl = plan_with_kernel(cx, zeta)
    assert pl.N == 6 and kernel_is_real(pl)
    for _ in range(50):
        f = [rng.randrange(7) for _ in range(6)]
        out = pollard_special_case(f, 3, cx)
        assert all_real(out, cx)
        assert out == ffft(f, pl)


def test_pollard_butterfly():
    cx = build_complex_ext(7)
    out = pollard_special_case([2, 5], 6, cx)
    assert out == [cx.carrier(0), cx.carrier((2 - 5) % 7)]


def test_pollard_rejects_wrong_order():
    cx = build_complex_ext(7)
    with pytest.raises(OrderMismatch):
        pollard_special_case([1, 2, 3], 3, cx)


def test_length_catalogue_gf7():
    kinds = {info.N: info.kind for info in length_catalogue(7)}
    assert sorted(kinds) == [1, 2, 3, 4, 6, 8, 12, 16, 24, 48]
    assert kinds[8] == "new" and kinds[4] == "new"
    assert kinds[16] == "mixed"
    assert kinds[6] == "classic" and kinds[2] == "classic"
    assert real_kernel_lengths(7) == [1, 2, 3, 6]


@given(st.sampled_from([3, 5, 7, 11, 13]))
def test_catalogue_covers_divisors(p):
    order = p * p - 1
    Ns = [info.N for info in length_catalogue(p)]
    assert Ns == [d for d in range(1, order + 1) if order % d == 0]


@pytest.mark.parametrize("p,r,m,N", [(3, 2, 1, 16), (3, 1, 2, 16), (3, 2, 1, 80), (7, 1, 1, 48)])
def test_extension_plans_roundtrip(p, r, m, N):
    pl = plan(p, r, m, N)
    cx = pl.field
    rng = random.Random(N)
    q = cx.q
    f = [cx.alphabet(list(rng.randrange(p) for _ in range(r))) for _ in range(N)]
    back = iffft(ffft(f, pl), pl)
    assert back == [cx.embed_alphabet(v) for v in f]
    assert all(cx.in_alphabet(v) for v in back)
    assert q == p**r
