"""Extension fields GF(p^k) as polynomials modulo a fixed irreducible.

Also builds the complex alphabet GL(q^m) used by the complex-kernel
transform. GL(q^m) is realised as the single field GF(p^(2rm)), q = p^r,
with a distinguished square root ``j`` of -1; the Cartesian view
``a + jb`` (a, b in the subfield GF(q^m)) is recovered on demand.

Polynomials are coefficient lists, constant term first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from . import _ntheory
from .errors import FieldMismatch, InvalidLength, UnsupportedModulus, ZeroArgument, ZeroInverse
from .prime_field import PrimeModulus, as_modulus

MAX_FIELD_SIZE = 2**64


# -- polynomial helpers over GF(p) -------------------------------------------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f, g, p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for k, gk in enumerate(g):
                out[i + k] += fi * gk
    return _trim([c % p for c in out])


def poly_divmod(f, g, p: int) -> tuple[list[int], list[int]]:
    g = _trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim([c % p for c in f])
    lead_inv = pow(g[-1], p - 2, p)
    q = [0] * max(len(r) - len(g) + 1, 0)
    while len(r) >= len(g):
        shift = len(r) - len(g)
        c = r[-1] * lead_inv % p
        q[shift] = c
        for i, gi in enumerate(g):
            r[shift + i] = (r[shift + i] - c * gi) % p
        _trim(r)
    return _trim(q), r


def poly_mod(f, g, p: int) -> list[int]:
    return poly_divmod(f, g, p)[1]


def poly_gcd(f, g, p: int) -> list[int]:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, poly_mod(f, g, p)
    if f:
        lead_inv = pow(f[-1], p - 2, p)
        f = [c * lead_inv % p for c in f]
    return f


def poly_powmod(f, e: int, mod, p: int) -> list[int]:
    result = [1]
    base = poly_mod(f, mod, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), mod, p)
        base = poly_mod(poly_mul(base, base, p), mod, p)
        e >>= 1
    return result


def poly_sub(f, g, p: int) -> list[int]:
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return _trim([(a - b) % p for a, b in zip(f, g)])


def is_irreducible(f, p: int) -> bool:
    """Rabin's test for a monic ``f`` of degree ``k >= 1`` over GF(p)."""
    f = _trim([c % p for c in f])
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    if poly_sub(poly_powmod(x, p**k, f, p), x, p):
        return False
    for q in _ntheory.prime_factors(k):
        h = poly_sub(poly_powmod(x, p ** (k // q), f, p), x, p)
        if len(poly_gcd(f, h, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``k``.

    Candidates ``c_0 + c_1 x + ... + x^k`` are visited in increasing order of
    the integer ``sum(c_i p^i)``.
    """
    for n in range(p**k):
        coeffs = []
        for _ in range(k):
            n, c = divmod(n, p)
            coeffs.append(c)
        f = coeffs + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


# -- the field ----------------------------------------------------------------

@dataclass(frozen=True)
class ExtField:
    """GF(p^k) = GF(p)[x] / (modulus_poly)."""

    modulus: PrimeModulus
    k: int
    modulus_poly: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        if len(self.modulus_poly) != self.k + 1 or self.modulus_poly[-1] != 1:
            raise ValueError("modulus_poly must be monic of degree k")
        if self.modulus.p**self.k >= MAX_FIELD_SIZE:
            raise ValueError("field too large for desk-scale arithmetic")
        if not is_irreducible(self.modulus_poly, self.modulus.p):
            raise ValueError(f"{list(self.modulus_poly)} is reducible over GF({self.modulus.p})")

    @classmethod
    def build(cls, p, k: int) -> ExtField:
        m = as_modulus(p)
        return _ext_field(m.p, k)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def zero(self) -> ExtElement:
        return ExtElement._raw((0,) * self.k, self)

    @property
    def one(self) -> ExtElement:
        return self(1)

    def __call__(self, value) -> ExtElement:
        """Element from an int (prime subfield) or a coefficient list."""
        p = self.p
        if isinstance(value, ExtElement):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, int):
            coeffs = [value % p] + [0] * (self.k - 1)
        else:
            coeffs = [int(c) % p for c in value]
            if len(coeffs) > self.k:
                coeffs = poly_mod(coeffs, self.modulus_poly, p)
            coeffs = coeffs + [0] * (self.k - len(coeffs))
        return ExtElement._raw(tuple(coeffs), self)

    def elements(self, nonzero: bool = False):
        for coeffs in itertools.product(range(self.p), repeat=self.k):
            coeffs = coeffs[::-1]
            if nonzero and not any(coeffs):
                continue
            yield ExtElement._raw(coeffs, self)

    @cached_property
    def generator(self) -> ExtElement:
        """First primitive element, scanning in the order of :meth:`elements`."""
        n = self.size - 1
        one = self.one
        for x in self.elements(nonzero=True):
            if _ntheory.is_generator(x, n, ext_pow, one):
                return x
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def subfield_elements(self, d: int) -> list[ExtElement]:
        """Nonzero elements of the unique subfield GF(p^d), ``d | k``."""
        if self.k % d:
            raise ValueError(f"GF({self.p}^{d}) is not a subfield of GF({self.p}^{self.k})")
        h = ext_pow(self.generator, (self.size - 1) // (self.p**d - 1))
        out = [self.one]
        for _ in range(self.p**d - 2):
            out.append(out[-1] * h)
        return out

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus_poly": list(self.modulus_poly)}

    def __repr__(self):
        return f"ExtField(GF({self.p}^{self.k}), poly={list(self.modulus_poly)})"


@lru_cache(maxsize=None)
def _ext_field(p: int, k: int) -> ExtField:
    return ExtField(PrimeModulus.of(p), k, find_irreducible(p, k))


class ExtElement:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field: ExtField):
        el = field(list(coeffs))
        self.coeffs = el.coeffs
        self.field = field

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...], field: ExtField) -> ExtElement:
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.field = field
        return obj

    def _other(self, other) -> ExtElement | None:
        if isinstance(other, ExtElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("elements of different extension fields do not combine")
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return ExtElement._raw(tuple((x + y) % p for x, y in zip(self.coeffs, o.coeffs)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return ExtElement._raw(tuple((x - y) % p for x, y in zip(self.coeffs, o.coeffs)), self.field)

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        p = self.field.p
        return ExtElement._raw(tuple(-x % p for x in self.coeffs), self.field)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ext_mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ext_mul(self, ext_inv(o))

    def __pow__(self, e: int):
        return ext_pow(self, e)

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, int):
            return self.coeffs == self.field(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.modulus_poly))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"ExtElement({list(self.coeffs)}, GF({self.field.p}^{self.field.k}))"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def ext_add(x: ExtElement, y: ExtElement) -> ExtElement:
    return x + y


def ext_mul(x: ExtElement, y: ExtElement) -> ExtElement:
    f = x.field
    if y.field is not f and y.field != f:
        raise FieldMismatch("elements of different extension fields do not combine")
    p, k = f.p, f.k
    prod = [0] * (2 * k - 1)
    for i, a in enumerate(x.coeffs):
        if a:
            for t, b in enumerate(y.coeffs):
                prod[i + t] += a * b
    mod = f.modulus_poly
    # reduce with the monic modulus from the top down
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[d] % p
        if c:
            base = d - k
            for i in range(k):
                prod[base + i] -= c * mod[i]
        prod[d] = 0
    return ExtElement._raw(tuple(c % p for c in prod[:k]), f)


def ext_pow(x: ExtElement, e: int) -> ExtElement:
    if e < 0:
        x, e = ext_inv(x), -e
    result = x.field.one
    base = x
    while e:
        if e & 1:
            result = ext_mul(result, base)
        base = ext_mul(base, base)
        e >>= 1
    return result


def ext_inv(x: ExtElement) -> ExtElement:
    if not x:
        raise ZeroInverse("0 has no inverse")
    return ext_pow(x, x.field.size - 2)


def ext_order(x: ExtElement) -> int:
    if not x:
        raise ZeroArgument("0 has no multiplicative order")
    return _ntheory.element_order(x, x.field.size - 1, ext_pow, x.field.one)


def element_of_order(field, n: int) -> ExtElement:
    """Deterministic element of multiplicative order ``n``."""
    carrier = field.carrier if isinstance(field, ComplexExt) else field
    size = carrier.size - 1
    if n < 1 or size % n:
        raise InvalidLength(f"no element of order {n}: {n} does not divide {size}")
    return ext_pow(carrier.generator, size // n)


def _find_root(poly, target: ExtField, d: int) -> ExtElement:
    # zero first, then the nonzero elements of GF(p^d) by increasing exponent
    for x in [target.zero, *target.subfield_elements(d)]:
        acc = target.zero
        for c in reversed(poly):
            acc = acc * x + c
        if not acc:
            return x
    raise AssertionError("irreducible polynomial of degree d has a root in GF(p^d)")


@dataclass(frozen=True)
class Embedding:
    """Field homomorphism ``src -> dst`` fixed by the image of ``x``."""

    src: ExtField
    dst: ExtField
    image_of_x: ExtElement

    def __call__(self, el) -> ExtElement:
        if isinstance(el, int):
            return self.dst(el)
        if el.field != self.src:
            raise FieldMismatch("element is not in the embedding's source field")
        acc = self.dst.zero
        for c in reversed(el.coeffs):
            acc = acc * self.image_of_x + c
        return acc


def embedding(src: ExtField, dst: ExtField) -> Embedding:
    if src.p != dst.p or dst.k % src.k:
        raise FieldMismatch(f"GF({src.p}^{src.k}) does not embed in GF({dst.p}^{dst.k})")
    return Embedding(src, dst, _find_root(src.modulus_poly, dst, src.k))


@dataclass(frozen=True)
class ComplexExt:
    """GL(q^m) with q = p^r, carried by GF(p^(2rm)) and a fixed ``j``.

    ``alphabet`` is GF(q), ``base`` is GF(q^m); both are embedded in the
    carrier compatibly (alphabet -> base -> carrier).
    """

    modulus: PrimeModulus
    r: int
    m: int
    base: ExtField
    carrier: ExtField
    j_element: ExtElement
    alphabet: ExtField
    base_embedding: Embedding = field(repr=False)
    alphabet_embedding: Embedding = field(repr=False)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def group_order(self) -> int:
        return self.carrier.size - 1

    def embed_alphabet(self, value) -> ExtElement:
        """GF(q) value (int or length-r coefficient list) into the carrier."""
        if isinstance(value, ExtElement):
            if value.field == self.carrier:
                return value
            if value.field == self.base:
                return self.base_embedding(value)
            return self.base_embedding(self.alphabet_embedding(value))
        if isinstance(value, int):
            return self.carrier(value)
        el = self.alphabet(list(value))
        return self.base_embedding(self.alphabet_embedding(el))

    def in_alphabet(self, el: ExtElement) -> bool:
        return ext_pow(el, self.q) == el

    def is_real(self, el: ExtElement) -> bool:
        """True when ``el`` lies in the base GF(q^m), i.e. has no j-part."""
        return ext_pow(el, self.q**self.m) == el

    def conjugate(self, el: ExtElement) -> ExtElement:
        # Frobenius of order 2 over GF(q^m); it sends j to -j
        return ext_pow(el, self.q**self.m)

    @property
    def has_cartesian_view(self) -> bool:
        # for q^m = 1 (mod 4) both roots of -1 already lie in GF(q^m)
        return (self.q**self.m) % 4 == 3

    def cartesian(self, el: ExtElement) -> tuple[ExtElement, ExtElement]:
        """``(a, b)`` in the base subfield with ``el = a + b*j``."""
        if not self.has_cartesian_view:
            raise UnsupportedModulus(f"j is real when q^m = {self.q**self.m} = 1 (mod 4); no a + jb split")
        c = self.conjugate(el)
        half = self.carrier(pow(2, self.p - 2, self.p))
        a = (el + c) * half
        b = (el - c) * half * ext_inv(self.j_element)
        return a, b

    def from_cartesian(self, a, b) -> ExtElement:
        return self.embed_alphabet(a) + self.embed_alphabet(b) * self.j_element

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "m": self.m,
            "carrier": self.carrier.to_json(),
            "j": self.j_element.to_json(),
        }


def build_complex_ext(p, r: int = 1, m: int = 1) -> ComplexExt:
    mod = as_modulus(p)
    if r < 1 or m < 1:
        raise ValueError("r and m must be >= 1")
    return _complex_ext(mod.p, r, m)


@lru_cache(maxsize=None)
def _complex_ext(p: int, r: int, m: int) -> ComplexExt:
    mod = PrimeModulus.of(p)
    carrier = _ext_field(p, 2 * r * m)
    base = _ext_field(p, r * m)
    alphabet = _ext_field(p, r)
    # an element of order 4 squares to the unique element of order 2, i.e. -1
    j = ext_pow(carrier.generator, (carrier.size - 1) // 4)
    assert ext_mul(j, j) == carrier(-1)
    return ComplexExt(
        modulus=mod,
        r=r,
        m=m,
        base=base,
        carrier=carrier,
        j_element=j,
        alphabet=alphabet,
        base_embedding=embedding(base, carrier),
        alphabet_embedding=embedding(alphabet, base),
    )
