"""Symbolic sequences over GF(p).

Infinite sequences are never materialised. Each variant stores the finite
data needed to evaluate any index: a support window, or a transient block
followed by one period that repeats forever in one direction (or both).

Values are stored as canonical integers; :meth:`eval` returns FpElement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnsupportedSequence, ZeroArgument
from .prime_field import FpElement, PrimeModulus, as_modulus, multiplicative_order


def minimal_period(values) -> int:
    """Smallest divisor ``d`` of ``len(values)`` for which ``values`` is d-periodic."""
    vals = list(values)
    n = len(vals)
    if n == 0:
        raise ValueError("minimal_period needs a nonempty list")
    for d in range(1, n + 1):
        if n % d == 0 and all(vals[i] == vals[i - d] for i in range(d, n)):
            return d
    return n


def _canon(values, p: int) -> tuple[int, ...]:
    return tuple(int(v) % p for v in values)


def _reduce_period(values: tuple[int, ...]) -> tuple[int, ...]:
    return values[: minimal_period(values)]


class SequenceSpec:
    """Base class of the symbolic sequence variants."""

    kind: str
    modulus: PrimeModulus

    @property
    def p(self) -> int:
        return self.modulus.p

    def eval(self, n: int) -> FpElement:
        return FpElement(self.value_at(n), self.modulus)

    def value_at(self, n: int) -> int:
        raise NotImplementedError

    @property
    def period(self) -> int | None:
        return None

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class FiniteSupport(SequenceSpec):
    modulus: PrimeModulus
    start: int
    values: tuple[int, ...]

    kind = "finite"

    def __post_init__(self):
        object.__setattr__(self, "values", _canon(self.values, self.modulus.p))

    def value_at(self, n: int) -> int:
        i = n - self.start
        return self.values[i] if 0 <= i < len(self.values) else 0

    def to_json(self) -> dict:
        return {"kind": self.kind, "start": self.start, "values": list(self.values)}


@dataclass(frozen=True)
class RightSidedPeriodic(SequenceSpec):
    """Zero before ``start``; ``transient`` then ``period_values`` repeating."""

    modulus: PrimeModulus
    start: int
    transient: tuple[int, ...]
    period_values: tuple[int, ...]

    kind = "right_periodic"

    def __post_init__(self):
        if not self.period_values:
            raise ValueError("period_values must be nonempty")
        p = self.modulus.p
        object.__setattr__(self, "transient", _canon(self.transient, p))
        object.__setattr__(self, "period_values", _reduce_period(_canon(self.period_values, p)))

    @property
    def period(self) -> int:
        return len(self.period_values)

    def value_at(self, n: int) -> int:
        i = n - self.start
        if i < 0:
            return 0
        t = len(self.transient)
        if i < t:
            return self.transient[i]
        return self.period_values[(i - t) % len(self.period_values)]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "start": self.start,
            "transient": list(self.transient),
            "period_values": list(self.period_values),
        }


@dataclass(frozen=True)
class LeftSidedPeriodic(SequenceSpec):
    """Mirror image of :class:`RightSidedPeriodic`.

    Zero after ``end``. Lists are read walking leftwards from ``end``:
    ``x[end - i] = transient[i]``, then ``period_values`` repeats.
    """

    modulus: PrimeModulus
    end: int
    transient: tuple[int, ...]
    period_values: tuple[int, ...]

    kind = "left_periodic"

    def __post_init__(self):
        if not self.period_values:
            raise ValueError("period_values must be nonempty")
        p = self.modulus.p
        object.__setattr__(self, "transient", _canon(self.transient, p))
        object.__setattr__(self, "period_values", _reduce_period(_canon(self.period_values, p)))

    @property
    def period(self) -> int:
        return len(self.period_values)

    def value_at(self, n: int) -> int:
        i = self.end - n
        if i < 0:
            return 0
        t = len(self.transient)
        if i < t:
            return self.transient[i]
        return self.period_values[(i - t) % len(self.period_values)]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "end": self.end,
            "transient": list(self.transient),
            "period_values": list(self.period_values),
        }


@dataclass(frozen=True)
class TwoSidedPeriodic(SequenceSpec):
    """``x[n] = period_values[(n - phase) mod P]`` for all integers n."""

    modulus: PrimeModulus
    period_values: tuple[int, ...]
    phase: int = 0

    kind = "two_sided_periodic"

    def __post_init__(self):
        if not self.period_values:
            raise ValueError("period_values must be nonempty")
        object.__setattr__(
            self, "period_values", _reduce_period(_canon(self.period_values, self.modulus.p))
        )

    @property
    def period(self) -> int:
        return len(self.period_values)

    def value_at(self, n: int) -> int:
        return self.period_values[(n - self.phase) % len(self.period_values)]

    def to_json(self) -> dict:
        return {"kind": self.kind, "period_values": list(self.period_values), "phase": self.phase}


@dataclass(frozen=True)
class ExponentialRight(SequenceSpec):
    """``A * a**n * u[n]``."""

    modulus: PrimeModulus
    A: int
    a: int

    kind = "exponential"

    def __post_init__(self):
        p = self.modulus.p
        object.__setattr__(self, "A", self.A % p)
        object.__setattr__(self, "a", self.a % p)
        if self.a == 0:
            raise ZeroArgument("exponential base a must be nonzero")

    @property
    def period(self) -> int:
        return multiplicative_order(FpElement(self.a, self.modulus))

    def value_at(self, n: int) -> int:
        if n < 0:
            return 0
        return self.A * pow(self.a, n % self.period, self.p) % self.p

    def as_right_periodic(self) -> RightSidedPeriodic:
        return RightSidedPeriodic(self.modulus, 0, (), tuple(self.value_at(n) for n in range(self.period)))

    def to_json(self) -> dict:
        return {"kind": self.kind, "A": self.A, "a": self.a}


@dataclass(frozen=True)
class Window:
    """Finite view ``values[i] = x[start + i]``."""

    modulus: PrimeModulus
    start: int
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("a window holds at least one value")
        object.__setattr__(self, "values", _canon(self.values, self.modulus.p))

    def __len__(self):
        return len(self.values)

    def elements(self) -> list[FpElement]:
        return [FpElement(v, self.modulus) for v in self.values]

    def to_json(self) -> dict:
        return {"start": self.start, "values": list(self.values)}

    @classmethod
    def from_json(cls, obj, p) -> Window:
        if isinstance(obj, list):
            return cls(as_modulus(p), 0, tuple(obj))
        return cls(as_modulus(p), int(obj.get("start", 0)), tuple(obj["values"]))


def impulse(p) -> TwoSidedPeriodic:
    """Galois impulse: 1 at multiples of 2(p+1), else 0."""
    m = as_modulus(p)
    m.require_complex()
    n = 2 * (m.p + 1)
    return TwoSidedPeriodic(m, (1,) + (0,) * (n - 1), 0)


def unit_step(p) -> RightSidedPeriodic:
    return RightSidedPeriodic(as_modulus(p), 0, (), (1,))


def exponential(A, a, p=None) -> ExponentialRight:
    if p is None:
        p = A.modulus if isinstance(A, FpElement) else a.modulus
    return ExponentialRight(as_modulus(p), int(A), int(a))


def window(seq: SequenceSpec, start: int, length: int) -> Window:
    if length < 1:
        raise ValueError("window length must be >= 1")
    return Window(seq.modulus, start, tuple(seq.value_at(n) for n in range(start, start + length)))


_KINDS = {
    "finite": FiniteSupport,
    "right_periodic": RightSidedPeriodic,
    "left_periodic": LeftSidedPeriodic,
    "two_sided_periodic": TwoSidedPeriodic,
    "exponential": ExponentialRight,
}


def sequence_from_json(obj: dict, p) -> SequenceSpec:
    m = as_modulus(p)
    kind = obj.get("kind")
    if kind == "finite":
        return FiniteSupport(m, int(obj.get("start", 0)), tuple(obj["values"]))
    if kind == "right_periodic":
        return RightSidedPeriodic(
            m, int(obj.get("start", 0)), tuple(obj.get("transient", ())), tuple(obj["period_values"])
        )
    if kind == "left_periodic":
        return LeftSidedPeriodic(
            m, int(obj.get("end", 0)), tuple(obj.get("transient", ())), tuple(obj["period_values"])
        )
    if kind == "two_sided_periodic":
        return TwoSidedPeriodic(m, tuple(obj["period_values"]), int(obj.get("phase", 0)))
    if kind == "exponential":
        return ExponentialRight(m, int(obj.get("A", 1)), int(obj["a"]))
    if kind == "impulse":
        return impulse(m)
    if kind == "unit_step":
        return unit_step(m)
    raise UnsupportedSequence(f"unknown sequence kind {kind!r}; expected one of {sorted(_KINDS)}")
