"""Arithmetic in GF(p), with the signed modulus used by the complex layer.

Elements are canonical residues in ``[0, p-1]``. The "signed modulus"
``|a|`` maps a nonzero element to whichever of ``a`` and ``-a`` is a
quadratic residue, mirroring absolute value on the reals. That choice is
unique only when ``-1`` is a non-residue, i.e. ``p = 3 (mod 4)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _ntheory
from .errors import ModulusMismatch, NotAResidue, NotPrime, UnsupportedModulus, ZeroArgument, ZeroInverse

MAX_PRIME = 2**64


@dataclass(frozen=True)
class PrimeModulus:
    """An odd prime ``p``; use :meth:`of` to get a shared instance."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or self.p >= MAX_PRIME:
            raise NotPrime(f"modulus must be an odd prime below 2**64, got {self.p!r}")
        if not _ntheory.is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    @staticmethod
    @lru_cache(maxsize=None)
    def of(p: int) -> PrimeModulus:
        return PrimeModulus(p)

    @property
    def supports_complex(self) -> bool:
        return self.p % 4 == 3

    def require_complex(self):
        if not self.supports_complex:
            raise UnsupportedModulus(f"GL({self.p}) needs p = 3 (mod 4); -1 is a square mod {self.p}")

    def __call__(self, value: int) -> FpElement:
        return FpElement(value, self)

    def __int__(self):
        return self.p

    def __repr__(self):
        return f"PrimeModulus({self.p})"


def as_modulus(p) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus.of(int(p))


class FpElement:
    """An element of GF(p)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus):
        modulus = as_modulus(modulus)
        self.value = int(value) % modulus.p
        self.modulus = modulus

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other) -> int:
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"GF({self.p}) and GF({other.p}) elements do not combine")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _new(self, value: int) -> FpElement:
        return FpElement(value, self.modulus)

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._new(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._new(self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._new(v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._new(self.value * v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * inv(self._new(v))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else inv(self) * v

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, e: int):
        if e < 0:
            return inv(self) ** (-e)
        return self._new(pow(self.value, e, self.p))

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus.p))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FpElement({self.value}, p={self.p})"


def add(x: FpElement, y: FpElement) -> FpElement:
    return x + y


def sub(x: FpElement, y: FpElement) -> FpElement:
    return x - y


def mul(x: FpElement, y: FpElement) -> FpElement:
    return x * y


def neg(x: FpElement) -> FpElement:
    return -x


def inv(x: FpElement) -> FpElement:
    if x.value == 0:
        raise ZeroInverse(f"0 has no inverse in GF({x.p})")
    return FpElement(pow(x.value, x.p - 2, x.p), x.modulus)


def power(x: FpElement, e: int) -> FpElement:
    """``x**e``; negative exponents go through :func:`inv`."""
    return x**e


def _euler(x: FpElement) -> int:
    return pow(x.value, (x.p - 1) // 2, x.p)


def is_quadratic_residue(x: FpElement) -> bool:
    if x.value == 0:
        raise ZeroArgument("0 is neither a residue nor a non-residue")
    return _euler(x) == 1


def modulus_signed(x: FpElement) -> FpElement:
    """The element of ``{x, -x}`` that is a quadratic residue; ``|0| = 0``."""
    if x.value == 0:
        return x
    return x if _euler(x) == 1 else -x


def sqrt_qr(x: FpElement) -> FpElement:
    """Square root of a residue, normalised to be a residue itself.

    Uses ``x**((p+1)/4)``, valid because ``p = 3 (mod 4)``.
    """
    if x.value == 0:
        return x
    if x.modulus.p % 4 != 3:
        raise UnsupportedModulus("sqrt_qr relies on p = 3 (mod 4)")
    if _euler(x) != 1:
        raise NotAResidue(f"{x.value} is not a square mod {x.p}")
    s = FpElement(pow(x.value, (x.p + 1) // 4, x.p), x.modulus)
    return modulus_signed(s)


def multiplicative_order(x: FpElement) -> int:
    if x.value == 0:
        raise ZeroArgument("0 has no multiplicative order")
    p = x.p
    return _ntheory.element_order(x.value, p - 1, lambda v, e: pow(v, e, p), 1)


def quadratic_residues(p) -> list[int]:
    p = as_modulus(p).p
    return sorted({(i * i) % p for i in range(1, p)})
