"""Cesàro summation of eventually periodic series over GF(p) and GL(p).

The partial sums ``S[n]`` of a periodic series over GF(p) are themselves
periodic once the per-period term sum vanishes. The mean of the partial
sums, read as integers, then tends to the one-period average
``(1/P) * sum(S[1..P])``; that rational limit is reduced mod p afterwards.
When the per-period term sum ``c`` is nonzero the partial sums only repeat
after ``P * p`` terms, the period is divisible by p and no residue exists.

GL(p)-valued series are summed componentwise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .complex_field import GlElement
from .errors import UnsupportedSequence
from .prime_field import FpElement, PrimeModulus, as_modulus
from .sequences import ExponentialRight, FiniteSupport, RightSidedPeriodic, SequenceSpec, minimal_period


class DivergenceReason(enum.Enum):
    PERIOD_DIVISIBLE_BY_P = "PeriodDivisibleByP"
    # reserved for streams whose partial sums never repeat; periodic input cannot produce it
    PARTIAL_SUMS_APERIODIC = "PartialSumsAperiodic"


@dataclass(frozen=True)
class Convergent:
    sigma: Union[FpElement, GlElement]


@dataclass(frozen=True)
class Divergent:
    reason: DivergenceReason = DivergenceReason.PERIOD_DIVISIBLE_BY_P

    def to_json(self) -> str:
        return "div"


CesaroResult = Union[Convergent, Divergent]


def _entry(v, complex_: bool):
    if complex_:
        if isinstance(v, GlElement):
            return (v.a, v.b)
        a, b = v
        return (int(a), int(b))
    if isinstance(v, GlElement):
        raise TypeError("complex term in a real stream")
    return (int(v),)


@dataclass(frozen=True)
class TermStream:
    """Right-sided term stream: ``transient`` once, then ``period`` forever.

    Entries are stored as tuples of canonical ints, one per component
    (1 for GF(p) terms, 2 for GL(p) terms).
    """

    modulus: PrimeModulus
    transient: tuple[tuple[int, ...], ...]
    period: tuple[tuple[int, ...], ...]
    complex: bool = False

    @classmethod
    def of(cls, p, transient: Sequence, period: Sequence, complex: bool | None = None) -> TermStream:
        m = as_modulus(p)
        if complex is None:
            complex = any(isinstance(v, GlElement) for v in (*transient, *period))
        q = m.p
        tr = tuple(tuple(c % q for c in _entry(v, complex)) for v in transient)
        pe = tuple(tuple(c % q for c in _entry(v, complex)) for v in period)
        if not pe:
            raise ValueError("a term stream needs a nonempty period")
        return cls(m, tr, pe, complex)

    @property
    def width(self) -> int:
        return 2 if self.complex else 1

    def term(self, k: int) -> tuple[int, ...]:
        """k-th term, counting from 1."""
        t = len(self.transient)
        if k <= t:
            return self.transient[k - 1]
        return self.period[(k - t - 1) % len(self.period)]


def term_stream(seq: SequenceSpec) -> TermStream:
    """Terms of a right-sided sequence in index order from its first sample."""
    if isinstance(seq, ExponentialRight):
        seq = seq.as_right_periodic()
    if isinstance(seq, RightSidedPeriodic):
        return TermStream.of(seq.modulus, seq.transient, seq.period_values, complex=False)
    if isinstance(seq, FiniteSupport):
        return TermStream.of(seq.modulus, seq.values, [0], complex=False)
    raise UnsupportedSequence(f"Cesàro sums need a right-sided sequence, got {seq.kind}")


@dataclass(frozen=True)
class PartialSumProfile:
    modulus: PrimeModulus
    transient_sums: tuple[tuple[int, ...], ...]
    period_sums: tuple[tuple[int, ...], ...]
    period: int
    complex: bool = False


def partial_sum_profile(stream: TermStream) -> PartialSumProfile | Divergent:
    p = stream.modulus.p
    w = stream.width
    c = [sum(t[i] for t in stream.period) % p for i in range(w)]
    if any(c):
        return Divergent(DivergenceReason.PERIOD_DIVISIBLE_BY_P)
    running = [0] * w
    sums = []
    for t in (*stream.transient, *stream.period):
        running = [(running[i] + t[i]) % p for i in range(w)]
        sums.append(tuple(running))
    n_tr = len(stream.transient)
    period_sums = sums[n_tr:]
    P = minimal_period(period_sums)
    return PartialSumProfile(stream.modulus, tuple(sums[:n_tr]), tuple(period_sums[:P]), P, stream.complex)


def cesaro_sum(profile: PartialSumProfile | Divergent) -> CesaroResult:
    """Limit of the partial-sum means, reduced mod p.

    The average over one period is formed as an exact rational first, then
    mapped into GF(p); a period divisible by p has no inverse and diverges.
    """
    if isinstance(profile, Divergent):
        return profile
    p = profile.modulus.p
    P = profile.period
    if P % p == 0:
        return Divergent(DivergenceReason.PERIOD_DIVISIBLE_BY_P)
    width = 2 if profile.complex else 1
    parts = []
    for i in range(width):
        limit = Fraction(sum(s[i] for s in profile.period_sums), P)
        parts.append(limit.numerator * pow(limit.denominator, p - 2, p) % p)
    if profile.complex:
        return Convergent(GlElement._raw(parts[0], parts[1], profile.modulus))
    return Convergent(FpElement(parts[0], profile.modulus))


def cesaro(source) -> CesaroResult:
    """Cesàro sum of a right-sided sequence or a :class:`TermStream`."""
    stream = source if isinstance(source, TermStream) else term_stream(source)
    return cesaro_sum(partial_sum_profile(stream))


def cesaro_oracle(
    terms: Union[Sequence[int], Callable[[int], int]],
    n_max: int,
    period: int = 1,
    p: int | None = None,
) -> Fraction:
    """Brute-force mean of the first ``n`` partial sums as an exact rational.

    ``terms`` is either one repeating block of integer terms or a function of
    the 1-based index. With ``p`` given, each partial sum is reduced to its
    canonical residue and then read as an integer; nothing else is reduced.
    ``n`` is the largest multiple of ``period`` not exceeding ``n_max``.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if callable(terms):
        term = terms
    else:
        block = [int(t) for t in terms]
        term = lambda k: block[(k - 1) % len(block)]  # noqa: E731
    n = max(n_max // period, 1) * period
    s = 0
    total = 0
    for k in range(1, n + 1):
        s += term(k)
        if p is not None:
            s %= p
        total += s
    return Fraction(total, n)


def reduce_rational(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"{x} has no image in GF({p})")
    return x.numerator * pow(x.denominator, p - 2, p) % p
