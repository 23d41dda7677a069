"""Galoisian integers: the field GL(p) of elements a + jb with j^2 = -1.

For ``p = 3 (mod 4)`` the polynomial ``x^2 + 1`` is irreducible over GF(p),
so GL(p) is a model of GF(p^2). Its multiplicative group (order p^2 - 1)
splits as a direct product of a "radial" group G_r of order (p-1)/2 (the
quadratic residues of GF(p)) and a "phase" group G_theta of order 2(p+1),
which gives every nonzero element a polar form ``r * eps**theta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _ntheory
from .errors import ModulusMismatch, ZeroArgument, ZeroInverse
from .prime_field import FpElement, PrimeModulus, as_modulus, modulus_signed, sqrt_qr


class GlElement:
    """``a + jb`` in GL(p)."""

    __slots__ = ("a", "b", "modulus")

    def __init__(self, a, b=0, modulus=None):
        if modulus is None:
            modulus = _modulus_from(a, b)
        modulus = as_modulus(modulus)
        modulus.require_complex()
        p = modulus.p
        self.a = int(a) % p
        self.b = int(b) % p
        self.modulus = modulus

    @classmethod
    def _raw(cls, a: int, b: int, modulus: PrimeModulus) -> GlElement:
        # trusted constructor: a, b already canonical
        obj = cls.__new__(cls)
        obj.a = a
        obj.b = b
        obj.modulus = modulus
        return obj

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def re(self) -> FpElement:
        return FpElement(self.a, self.modulus)

    @property
    def im(self) -> FpElement:
        return FpElement(self.b, self.modulus)

    @property
    def is_real(self) -> bool:
        return self.b == 0

    def pair(self) -> tuple[int, int]:
        return (self.a, self.b)

    def _coerce(self, other):
        if isinstance(other, GlElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"GL({self.p}) and GL({other.p}) elements do not combine")
            return other.a, other.b
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"GL({self.p}) and GF({other.p}) elements do not combine")
            return other.value, 0
        if isinstance(other, int):
            return other % self.p, 0
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        return GlElement._raw((self.a + o[0]) % p, (self.b + o[1]) % p, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p
        return GlElement._raw((self.a - o[0]) % p, (self.b - o[1]) % p, self.modulus)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = mul_pair(self.p, (self.a, self.b), o)
        return GlElement._raw(a, b, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * gl_inv(GlElement._raw(o[0], o[1], self.modulus))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GlElement._raw(o[0], o[1], self.modulus) * gl_inv(self)

    def __neg__(self):
        p = self.p
        return GlElement._raw(-self.a % p, -self.b % p, self.modulus)

    def __pow__(self, e: int):
        return gl_pow(self, e)

    def __eq__(self, other):
        if isinstance(other, GlElement):
            return self.a == other.a and self.b == other.b and self.modulus == other.modulus
        if isinstance(other, FpElement):
            return self.b == 0 and self.modulus == other.modulus and self.a == other.value
        if isinstance(other, int):
            return self.b == 0 and self.a == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.modulus.p))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"GlElement({self.a}, {self.b}, p={self.p})"

    def __str__(self):
        return f"{self.a}+{self.b}j"


def _modulus_from(*parts):
    for x in parts:
        if isinstance(x, (FpElement, GlElement)):
            return x.modulus
    raise TypeError("modulus required when building a GlElement from plain integers")


# Pair-level arithmetic on (a, b) integer tuples. Hot loops use these to
# avoid allocating GlElement objects.

def mul_pair(p: int, x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    a1, b1 = x
    a2, b2 = y
    return ((a1 * a2 - b1 * b2) % p, (a1 * b2 + a2 * b1) % p)


def pow_pair(p: int, x: tuple[int, int], e: int) -> tuple[int, int]:
    result = (1, 0)
    base = x
    while e:
        if e & 1:
            result = mul_pair(p, result, base)
        base = mul_pair(p, base, base)
        e >>= 1
    return result


def inv_pair(p: int, x: tuple[int, int]) -> tuple[int, int]:
    a, b = x
    n = (a * a + b * b) % p
    if n == 0:
        raise ZeroInverse(f"0 has no inverse in GL({p})")
    n_inv = pow(n, p - 2, p)
    return (a * n_inv % p, -b * n_inv % p)


def gl_add(x: GlElement, y: GlElement) -> GlElement:
    return x + y


def gl_sub(x: GlElement, y: GlElement) -> GlElement:
    return x - y


def gl_mul(x: GlElement, y: GlElement) -> GlElement:
    return x * y


def gl_inv(x: GlElement) -> GlElement:
    """``conj(x) / (a^2 + b^2)``."""
    a, b = inv_pair(x.p, (x.a, x.b))
    return GlElement._raw(a, b, x.modulus)


def conjugate(x: GlElement) -> GlElement:
    return GlElement._raw(x.a, -x.b % x.p, x.modulus)


def quadratic_norm(x: GlElement) -> FpElement:
    return FpElement(x.a * x.a + x.b * x.b, x.modulus)


def gl_modulus(x: GlElement) -> FpElement:
    """``| sqrt(|a^2 + b^2|) |``.

    The inner signed modulus makes the norm a residue so the root exists;
    the outer one picks a single root.
    """
    return modulus_signed(sqrt_qr(modulus_signed(quadratic_norm(x))))


def gl_pow(x: GlElement, e: int) -> GlElement:
    if e < 0:
        if not x:
            raise ZeroArgument("negative power of 0")
        x, e = gl_inv(x), -e
    a, b = pow_pair(x.p, (x.a, x.b), e)
    return GlElement._raw(a, b, x.modulus)


def gl_order(x: GlElement) -> int:
    if not x:
        raise ZeroArgument("0 has no multiplicative order")
    p = x.p
    return _ntheory.element_order((x.a, x.b), p * p - 1, lambda v, e: pow_pair(p, v, e), (1, 0))


def gl_elements(p, nonzero: bool = True):
    """All elements of GL(p) in lexicographic order of ``(a, b)``."""
    m = as_modulus(p)
    m.require_complex()
    for a in range(m.p):
        for b in range(m.p):
            if nonzero and a == 0 and b == 0:
                continue
            yield GlElement._raw(a, b, m)


@dataclass(frozen=True)
class PolarContext:
    """Fixed generators for the polar decomposition of GL(p)*.

    ``epsilon`` generates the phase group G_theta (order 2(p+1));
    ``g_r`` generates the radial group G_r (order (p-1)/2) inside GF(p).
    """

    modulus: PrimeModulus
    epsilon: GlElement
    g_r: FpElement

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def n_theta(self) -> int:
        return 2 * (self.p + 1)

    @property
    def n_r(self) -> int:
        return (self.p - 1) // 2

    def eps_pow(self, theta: int) -> GlElement:
        a, b = self.eps_pairs[theta % self.n_theta]
        return GlElement._raw(a, b, self.modulus)

    @property
    def eps_pairs(self) -> tuple[tuple[int, int], ...]:
        """``eps**t`` as integer pairs for ``t`` in ``[0, 2(p+1))``."""
        return _eps_table(self.p, self.epsilon.a, self.epsilon.b)

    def to_json(self) -> dict:
        return {"p": self.p, "epsilon": [self.epsilon.a, self.epsilon.b], "g_r": self.g_r.value}

    @classmethod
    def from_json(cls, obj: dict) -> PolarContext:
        m = PrimeModulus.of(int(obj["p"]))
        eps = GlElement(*obj["epsilon"], modulus=m)
        ctx = cls(m, eps, FpElement(obj["g_r"], m))
        _check_context(ctx)
        return ctx


@lru_cache(maxsize=None)
def _eps_table(p: int, a: int, b: int) -> tuple[tuple[int, int], ...]:
    out = [(1, 0)]
    for _ in range(2 * (p + 1) - 1):
        out.append(mul_pair(p, out[-1], (a, b)))
    return tuple(out)


def _check_context(ctx: PolarContext):
    p = ctx.p
    if gl_order(ctx.epsilon) != 2 * (p + 1):
        raise ValueError(f"epsilon {ctx.epsilon} does not have order 2(p+1) = {2 * (p + 1)}")
    expected = (p - 1) // 2
    if _ntheory.element_order(ctx.g_r.value, p - 1, lambda v, e: pow(v, e, p), 1) != expected:
        raise ValueError(f"g_r = {ctx.g_r.value} does not have order (p-1)/2 = {expected}")


def find_generator(p) -> GlElement:
    """First generator of GL(p)* in lexicographic ``(a, b)`` order."""
    m = as_modulus(p)
    n = m.p * m.p - 1
    for x in gl_elements(m):
        if _ntheory.is_generator((x.a, x.b), n, lambda v, e: pow_pair(m.p, v, e), (1, 0)):
            return x
    raise AssertionError("GL(p)* is cyclic; a generator always exists")


@lru_cache(maxsize=None)
def _polar_context(p: int) -> PolarContext:
    m = PrimeModulus.of(p)
    g = find_generator(m)
    eps = gl_pow(g, (p - 1) // 2)
    gr = gl_pow(g, 2 * (p + 1))
    assert gr.b == 0
    ctx = PolarContext(m, eps, FpElement(gr.a, m))
    _check_context(ctx)
    return ctx


def find_polar_context(p) -> PolarContext:
    m = as_modulus(p)
    m.require_complex()
    return _polar_context(m.p)


@dataclass(frozen=True)
class PolarForm:
    r: FpElement
    theta: int
    context: PolarContext

    def __post_init__(self):
        p = self.context.p
        if self.r.value == 0 or pow(self.r.value, (p - 1) // 2, p) != 1:
            raise ValueError(f"radius {self.r.value} is not a quadratic residue mod {p}")
        if not 0 <= self.theta < self.context.n_theta:
            raise ValueError(f"theta must lie in [0, {self.context.n_theta})")


def to_polar(x: GlElement, ctx: PolarContext) -> PolarForm:
    """Write ``x = r * eps**theta`` with ``r`` a residue in GF(p)."""
    if not x:
        raise ZeroArgument("0 has no polar form")
    p = x.p
    if ctx.p != p:
        raise ModulusMismatch("polar context built for a different prime")
    xp = (x.a, x.b)
    # x * eps^-theta must be real and a quadratic residue; exactly one theta works
    for theta, (ea, eb) in enumerate(ctx.eps_pairs):
        a, b = mul_pair(p, xp, (ea, -eb % p))  # eps has norm +-1, so conj is +-inverse
        if b != 0:
            continue
        n = (ea * ea + eb * eb) % p
        if n != 1:
            a = -a % p
        if pow(a, (p - 1) // 2, p) == 1:
            return PolarForm(FpElement(a, x.modulus), theta, ctx)
    raise AssertionError(f"no polar decomposition found for {x!r}")


def from_polar(pf: PolarForm) -> GlElement:
    return pf.context.eps_pow(pf.theta) * pf.r
