"""Finite-field discrete-time Fourier transform over GL(p).

``X(eps^theta) = sum_n x[n] eps^(-n theta)`` with ``eps`` of order 2(p+1).
Finite sequences are summed directly; one-sided periodic sequences go
through the Cesàro engine, term stream ``x[n] eps^(-n theta)`` per phase.
Entries where that stream diverges are kept as :class:`Divergent` markers.

The inverse is a finite sum over the 2(p+1) phases and recovers a window
of length 2(p+1); wider inputs come back periodised.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union

from .cesaro import Convergent, Divergent, DivergenceReason, TermStream, cesaro_sum, partial_sum_profile
from .complex_field import GlElement, PolarContext, inv_pair, mul_pair
from .errors import DivergentSpectrum, ModulusMismatch, NonRealResult, UnsupportedSequence, ZeroArgument
from .prime_field import FpElement, PrimeModulus
from .sequences import (
    ExponentialRight,
    FiniteSupport,
    LeftSidedPeriodic,
    RightSidedPeriodic,
    SequenceSpec,
    TwoSidedPeriodic,
    Window,
)

SpectrumEntry = Union[GlElement, Divergent]


@dataclass(frozen=True)
class Spectrum:
    values: tuple[SpectrumEntry, ...]
    context: PolarContext

    def __post_init__(self):
        if len(self.values) != self.context.n_theta:
            raise ValueError(f"a spectrum has exactly {self.context.n_theta} entries")

    @property
    def modulus(self) -> PrimeModulus:
        return self.context.modulus

    def __len__(self):
        return len(self.values)

    def __getitem__(self, theta: int) -> SpectrumEntry:
        return self.values[theta]

    def divergent_at(self) -> list[int]:
        return [t for t, v in enumerate(self.values) if isinstance(v, Divergent)]

    def to_json(self) -> dict:
        return {
            "context": self.context.to_json(),
            "values": [v.to_json() if isinstance(v, Divergent) else [v.a, v.b] for v in self.values],
        }

    @classmethod
    def from_json(cls, obj, context: PolarContext | None = None) -> Spectrum:
        """Accepts the ``to_json`` form or a bare list of entries.

        A bare entry may be ``[re, im]``, a plain integer (real) or ``"div"``.
        """
        if isinstance(obj, dict):
            context = PolarContext.from_json(obj["context"])
            entries = obj["values"]
        else:
            if context is None:
                raise ValueError("a bare spectrum list needs a polar context")
            entries = obj
        m = context.modulus
        values = []
        for e in entries:
            if e == "div":
                values.append(Divergent(DivergenceReason.PERIOD_DIVISIBLE_BY_P))
            elif isinstance(e, int):
                values.append(GlElement(e, 0, m))
            else:
                values.append(GlElement(e[0], e[1], m))
        return cls(tuple(values), context)


def _finite_entry(values, start: int, ctx: PolarContext, theta: int) -> GlElement:
    p = ctx.p
    n_theta = ctx.n_theta
    table = ctx.eps_pairs
    re = im = 0
    for i, v in enumerate(values):
        if v:
            ea, eb = table[(-(start + i) * theta) % n_theta]
            re += v * ea
            im += v * eb
    return GlElement._raw(re % p, im % p, ctx.modulus)


def _one_sided_entry(start: int, step: int, transient, period, ctx: PolarContext, theta: int) -> SpectrumEntry:
    """Cesàro sum of ``x[n] eps^(-n theta)`` walking ``n = start, start+step, ...``."""
    p = ctx.p
    n_theta = ctx.n_theta
    table = ctx.eps_pairs
    phase_period = n_theta // gcd(theta, n_theta)
    P = len(period)
    L = P * phase_period // gcd(P, phase_period)

    def term(i: int, v: int) -> tuple[int, int]:
        ea, eb = table[(-(start + step * i) * theta) % n_theta]
        return (v * ea % p, v * eb % p)

    t = len(transient)
    tr = tuple(term(i, v) for i, v in enumerate(transient))
    pe = tuple(term(t + i, period[i % P]) for i in range(L))
    stream = TermStream(ctx.modulus, tr, pe, complex=True)
    result = cesaro_sum(partial_sum_profile(stream))
    return result.sigma if isinstance(result, Convergent) else result


def fdtft_entry(seq: SequenceSpec, ctx: PolarContext, theta: int) -> SpectrumEntry:
    if seq.modulus != ctx.modulus:
        raise ModulusMismatch("sequence and polar context use different primes")
    if isinstance(seq, FiniteSupport):
        return _finite_entry(seq.values, seq.start, ctx, theta)
    if isinstance(seq, ExponentialRight):
        seq = seq.as_right_periodic()
    if isinstance(seq, RightSidedPeriodic):
        return _one_sided_entry(seq.start, 1, seq.transient, seq.period_values, ctx, theta)
    if isinstance(seq, LeftSidedPeriodic):
        return _one_sided_entry(seq.end, -1, seq.transient, seq.period_values, ctx, theta)
    if isinstance(seq, TwoSidedPeriodic):
        raise UnsupportedSequence(
            "two-sided periodic sequences have no Cesàro sum under one-sided partial sums"
        )
    raise UnsupportedSequence(f"cannot transform {type(seq).__name__}")


def fdtft(seq: SequenceSpec, ctx: PolarContext) -> Spectrum:
    return Spectrum(tuple(fdtft_entry(seq, ctx, theta) for theta in range(ctx.n_theta)), ctx)


def fdtft_closed_form_exponential(A, a, ctx: PolarContext) -> Spectrum:
    """``A / (1 - a eps^-theta)`` per phase; divergent where the denominator vanishes."""
    p = ctx.p
    A, a = int(A) % p, int(a) % p
    if a == 0:
        raise ZeroArgument("exponential base a must be nonzero")
    m = ctx.modulus
    if A == 0:
        zero = GlElement._raw(0, 0, m)
        return Spectrum((zero,) * ctx.n_theta, ctx)
    table = ctx.eps_pairs
    n_theta = ctx.n_theta
    out: list[SpectrumEntry] = []
    for theta in range(n_theta):
        za, zb = table[-theta % n_theta]
        za, zb = a * za % p, a * zb % p
        if (za, zb) == (1, 0):
            out.append(Divergent(DivergenceReason.PERIOD_DIVISIBLE_BY_P))
            continue
        da, db = inv_pair(p, ((1 - za) % p, -zb % p))
        out.append(GlElement._raw(A * da % p, A * db % p, m))
    return Spectrum(tuple(out), ctx)


def orthogonality_sum(k: int, ctx: PolarContext) -> GlElement:
    """``sum_theta eps^(theta k)`` over all 2(p+1) phases."""
    p = ctx.p
    re = im = 0
    x = (1, 0)
    step = ctx.eps_pairs[k % ctx.n_theta]
    for _ in range(ctx.n_theta):
        re += x[0]
        im += x[1]
        x = mul_pair(p, x, step)
    return GlElement._raw(re % p, im % p, ctx.modulus)


def inverse_fdtft(spec: Spectrum, real: bool = True) -> Window | list[GlElement]:
    """``x[n] = (1/2(p+1)) sum_theta X(eps^theta) eps^(theta n)`` for n in [0, 2(p+1)).

    With ``real=True`` the result must have zero imaginary parts and comes
    back as a :class:`Window`; otherwise the GL(p) values are returned.
    """
    ctx = spec.context
    p = ctx.p
    n_theta = ctx.n_theta
    if any(isinstance(v, Divergent) for v in spec.values):
        raise DivergentSpectrum(f"spectrum diverges at theta = {spec.divergent_at()}")
    table = ctx.eps_pairs
    scale = pow(n_theta % p, p - 2, p)  # 2(p+1) = 2 (mod p)
    out = []
    for n in range(n_theta):
        re = im = 0
        for theta, X in enumerate(spec.values):
            ea, eb = table[(theta * n) % n_theta]
            re += X.a * ea - X.b * eb
            im += X.a * eb + X.b * ea
        out.append((re * scale % p, im * scale % p))
    if not real:
        return [GlElement._raw(a, b, ctx.modulus) for a, b in out]
    bad = [n for n, (_, b) in enumerate(out) if b]
    if bad:
        raise NonRealResult(f"inverse has nonzero imaginary part at n = {bad}")
    return Window(ctx.modulus, 0, tuple(a for a, _ in out))


def plane_spectrum(ctx: PolarContext) -> Spectrum:
    one = GlElement._raw(1, 0, ctx.modulus)
    return Spectrum((one,) * ctx.n_theta, ctx)


def scale_spectrum(spec: Spectrum, c: FpElement | GlElement | int) -> Spectrum:
    return Spectrum(tuple(v if isinstance(v, Divergent) else v * c for v in spec.values), spec.context)
