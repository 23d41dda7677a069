"""Finite-field Fourier transform with a complex kernel.

``F_k = sum_i f_i zeta^(ik)`` where ``f`` is over GF(q), q = p^r, and
``zeta`` has order N in GL(q^m). Because the kernel may leave the real
subfield GF(q^m), N can be any divisor of q^(2m) - 1, including divisors
of q^m + 1 that the real-kernel transform cannot reach.

Evaluation is the direct O(N^2) sum.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _ntheory
from .errors import InvalidLength, LengthMismatch, NotInAlphabet, OrderMismatch
from .extension_field import ComplexExt, ExtElement, build_complex_ext, element_of_order, ext_order, ext_pow


@dataclass(frozen=True)
class FfftPlan:
    N: int
    zeta: ExtElement
    field: ComplexExt

    def __post_init__(self):
        order = self.field.group_order
        if self.N < 1 or order % self.N:
            raise InvalidLength(f"length {self.N} does not divide q^(2m) - 1 = {order}")
        if self.zeta.field != self.field.carrier:
            raise ValueError("zeta must live in the carrier field")
        if ext_order(self.zeta) != self.N:
            raise OrderMismatch(f"zeta has order {ext_order(self.zeta)}, not {self.N}")
        assert self.N % self.field.p != 0

    @property
    def p(self) -> int:
        return self.field.p

    def powers(self) -> list[ExtElement]:
        """``zeta**t`` for t in [0, N)."""
        out = [self.field.carrier.one]
        for _ in range(self.N - 1):
            out.append(out[-1] * self.zeta)
        return out

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "r": self.field.r,
            "m": self.field.m,
            "N": self.N,
            "zeta": self.zeta.to_json(),
            "carrier": self.field.carrier.to_json(),
        }


def plan(p, r: int = 1, m: int = 1, N: int = 1) -> FfftPlan:
    cx = build_complex_ext(p, r, m)
    if N < 1 or cx.group_order % N:
        raise InvalidLength(f"length {N} does not divide q^(2m) - 1 = {cx.group_order}")
    return FfftPlan(N, element_of_order(cx, N), cx)


def plan_with_kernel(cx: ComplexExt, zeta: ExtElement) -> FfftPlan:
    return FfftPlan(ext_order(zeta), zeta, cx)


def _inputs(f, plan: FfftPlan, relaxed: bool) -> list[ExtElement]:
    if len(f) != plan.N:
        raise LengthMismatch(f"expected {plan.N} components, got {len(f)}")
    cx = plan.field
    out = []
    for v in f:
        if isinstance(v, ExtElement) and v.field == cx.carrier:
            if not relaxed and not cx.in_alphabet(v):
                raise NotInAlphabet(f"{v!r} is not in GF(q); pass relaxed=True for carrier input")
            out.append(v)
        else:
            out.append(cx.embed_alphabet(v))
    return out


def _carrier_vector(F, plan: FfftPlan) -> list[ExtElement]:
    if len(F) != plan.N:
        raise LengthMismatch(f"expected {plan.N} components, got {len(F)}")
    carrier = plan.field.carrier
    return [carrier(v) for v in F]


def _transform(vec: list[ExtElement], plan: FfftPlan, sign: int) -> list[ExtElement]:
    N = plan.N
    pw = plan.powers()
    zero = plan.field.carrier.zero
    out = []
    for k in range(N):
        acc = zero
        for i, v in enumerate(vec):
            if v:
                acc = acc + v * pw[(sign * i * k) % N]
        out.append(acc)
    return out


def ffft(f, plan: FfftPlan, relaxed: bool = False) -> list[ExtElement]:
    """Forward transform. Inputs must lie in GF(q) unless ``relaxed``."""
    return _transform(_inputs(f, plan, relaxed), plan, 1)


def iffft(F, plan: FfftPlan) -> list[ExtElement]:
    """``f_i = N^-1 sum_k F_k zeta^(-ik)``; N is a unit mod p since N | q^(2m) - 1."""
    vec = _carrier_vector(F, plan)
    p = plan.p
    n_inv = pow(plan.N % p, p - 2, p)
    return [v * n_inv for v in _transform(vec, plan, -1)]


def pointwise_mul(F, G) -> list[ExtElement]:
    if len(F) != len(G):
        raise LengthMismatch("pointwise product needs equal lengths")
    return [x * y for x, y in zip(F, G)]


def cyclic_convolution(f, g, plan: FfftPlan, relaxed: bool = True) -> list[ExtElement]:
    """``(f * g)_n = sum_i f_i g_((n - i) mod N)``, evaluated directly."""
    if len(f) != len(g):
        raise LengthMismatch("cyclic convolution needs equal lengths")
    fv = _inputs(f, plan, relaxed)
    gv = _inputs(g, plan, relaxed)
    N = plan.N
    zero = plan.field.carrier.zero
    out = []
    for n in range(N):
        acc = zero
        for i in range(N):
            acc = acc + fv[i] * gv[(n - i) % N]
        out.append(acc)
    return out


def all_real(F, cx: ComplexExt) -> bool:
    return all(cx.is_real(v) for v in F)


def pollard_special_case(f, a, cx: ComplexExt) -> list[ExtElement]:
    """Real-kernel transform ``sum_i f_i a^(ik)`` with ``a`` in GF(q^m).

    Computed entirely in the base field GF(q^m) and only then embedded in the
    carrier, so it is independent of the complex-kernel code path.
    """
    base = cx.base
    a = base(a) if not isinstance(a, ExtElement) else a
    if a.field != base:
        raise OrderMismatch("kernel must be an element of GF(q^m)")
    N = len(f)
    if not a or ext_order(a) != N:
        raise OrderMismatch(f"kernel order must equal the vector length {N}")
    fb = []
    for v in f:
        if isinstance(v, ExtElement) and v.field == base:
            fb.append(v)
        elif isinstance(v, int):
            fb.append(base(v))
        else:
            fb.append(cx.alphabet_embedding(v if isinstance(v, ExtElement) else cx.alphabet(list(v))))
    powers = [base.one]
    for _ in range(N - 1):
        powers.append(powers[-1] * a)
    out = []
    for k in range(N):
        acc = base.zero
        for i, v in enumerate(fb):
            acc = acc + v * powers[(i * k) % N]
        out.append(cx.base_embedding(acc))
    return out


@dataclass(frozen=True)
class LengthInfo:
    N: int
    kind: str  # "classic" | "new" | "mixed"

    def to_json(self) -> dict:
        return {"N": self.N, "kind": self.kind}


def length_catalogue(p, r: int = 1, m: int = 1) -> list[LengthInfo]:
    """Every admissible length, split by which factor of q^(2m) - 1 it divides.

    classic: divides q^m - 1 (reachable with a real kernel); new: divides
    q^m + 1 only; mixed: divides neither factor alone.
    """
    p = int(p)
    qm = p ** (r * m)
    out = []
    for n in _ntheory.divisors(qm * qm - 1):
        if (qm - 1) % n == 0:
            kind = "classic"
        elif (qm + 1) % n == 0:
            kind = "new"
        else:
            kind = "mixed"
        out.append(LengthInfo(n, kind))
    return out


def real_kernel_lengths(p, r: int = 1, m: int = 1) -> list[int]:
    return [info.N for info in length_catalogue(p, r, m) if info.kind == "classic"]


def kernel_is_real(plan: FfftPlan) -> bool:
    return ext_pow(plan.zeta, plan.field.q**plan.field.m) == plan.zeta
