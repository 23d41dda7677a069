"""FIR and IIR filtering of GF(p) sequences.

FIR filters convolve directly or through the complex-kernel transform.
IIR filters are given in partial-fraction form, an impulse response
``sum_i A_i a_i^n u[n]``, whose frequency response is a sum of the
closed-form exponential spectra.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass
from math import gcd

from .cesaro import Divergent, DivergenceReason
from .complex_field import GlElement, PolarContext, inv_pair
from .errors import ModulusMismatch, NotInAlphabet, PlanTooShort, ZeroArgument
from .ffdtft import Spectrum
from .ffft import FfftPlan, ffft, iffft, pointwise_mul
from .prime_field import FpElement, PrimeModulus, as_modulus, multiplicative_order
from .sequences import RightSidedPeriodic, SequenceSpec, Window


@dataclass(frozen=True)
class FirFilter:
    modulus: PrimeModulus
    taps: tuple[int, ...]

    def __post_init__(self):
        if not self.taps:
            raise ValueError("an FIR filter needs at least one tap")
        object.__setattr__(self, "taps", tuple(int(t) % self.modulus.p for t in self.taps))

    @classmethod
    def of(cls, taps, p) -> FirFilter:
        return cls(as_modulus(p), tuple(taps))

    def to_json(self) -> dict:
        return {"taps": list(self.taps)}


@dataclass(frozen=True)
class IirFilter:
    """Impulse response ``sum_i A_i a_i^n u[n]`` from ``pole_params = ((A_i, a_i), ...)``."""

    modulus: PrimeModulus
    pole_params: tuple[tuple[int, int], ...]

    def __post_init__(self):
        p = self.modulus.p
        params = tuple((int(A) % p, int(a) % p) for A, a in self.pole_params)
        if any(a == 0 for _, a in params):
            raise ZeroArgument("IIR pole a_i must be nonzero")
        object.__setattr__(self, "pole_params", params)

    @classmethod
    def of(cls, pole_params, p) -> IirFilter:
        return cls(as_modulus(p), tuple(tuple(x) for x in pole_params))

    def combined(self) -> list[tuple[int, int]]:
        """Pole terms with equal ``a`` merged and zero residues dropped."""
        p = self.modulus.p
        acc: OrderedDict[int, int] = OrderedDict()
        for A, a in self.pole_params:
            acc[a] = (acc.get(a, 0) + A) % p
        return [(A, a) for a, A in acc.items() if A]

    def impulse_response(self) -> SequenceSpec:
        p = self.modulus.p
        terms = self.combined()
        period = 1
        for _, a in terms:
            o = multiplicative_order(FpElement(a, self.modulus))
            period = period * o // gcd(period, o)
        values = tuple(sum(A * pow(a, n, p) for A, a in terms) % p for n in range(period))
        return RightSidedPeriodic(self.modulus, 0, (), values)

    def to_json(self) -> dict:
        return {"poles": [list(t) for t in self.pole_params]}


def fir_apply_time(f: FirFilter, x: Window) -> Window:
    """Full linear convolution; the output starts at ``x.start``."""
    if f.modulus != x.modulus:
        raise ModulusMismatch("filter and input use different primes")
    p = f.modulus.p
    h = f.taps
    out = [0] * (len(h) + len(x.values) - 1)
    for k, hk in enumerate(h):
        if hk:
            for i, xi in enumerate(x.values):
                out[k + i] += hk * xi
    return Window(f.modulus, x.start, tuple(v % p for v in out))


def fir_apply_ffft(f: FirFilter, x: Window, plan: FfftPlan) -> Window:
    """Linear convolution via zero-padded cyclic convolution in the transform domain."""
    if f.modulus != x.modulus or plan.p != f.modulus.p:
        raise ModulusMismatch("filter, input and plan must share the prime")
    n_out = len(f.taps) + len(x.values) - 1
    if n_out > plan.N:
        raise PlanTooShort(f"linear convolution needs length {n_out}, plan has N = {plan.N}")
    pad = plan.N
    h = list(f.taps) + [0] * (pad - len(f.taps))
    xs = list(x.values) + [0] * (pad - len(x.values))
    y = iffft(pointwise_mul(ffft(h, plan), ffft(xs, plan)), plan)
    values = []
    for v in y[:n_out]:
        if any(v.coeffs[1:]):
            raise NotInAlphabet("transform-domain filtering left GF(p); inconsistent plan")
        values.append(v.coeffs[0])
    return Window(f.modulus, x.start, tuple(values))


def iir_frequency_response(f: IirFilter, ctx: PolarContext) -> Spectrum:
    """``sum_i A_i / (1 - a_i eps^-theta)``; divergent where a surviving pole hits."""
    if f.modulus != ctx.modulus:
        raise ModulusMismatch("filter and polar context use different primes")
    p = ctx.p
    m = ctx.modulus
    n_theta = ctx.n_theta
    table = ctx.eps_pairs
    terms = f.combined()
    out = []
    for theta in range(n_theta):
        ea, eb = table[-theta % n_theta]
        re = im = 0
        hit = False
        for A, a in terms:
            za, zb = a * ea % p, a * eb % p
            if (za, zb) == (1, 0):
                hit = True
                break
            da, db = inv_pair(p, ((1 - za) % p, -zb % p))
            re += A * da
            im += A * db
        if hit:
            out.append(Divergent(DivergenceReason.PERIOD_DIVISIBLE_BY_P))
        else:
            out.append(GlElement._raw(re % p, im % p, m))
    return Spectrum(tuple(out), ctx)
