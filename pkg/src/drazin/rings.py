"""Concrete rings with exact arithmetic.

A ring is described by a small frozen dataclass (``Modular(12)``,
``Matrix(2, PrimeField(2))``, ...).  Descriptors know how to do arithmetic on
raw payloads; :class:`Element` pairs a payload with its descriptor and is what
user code handles.

Payloads are always canonical, so equality of elements is plain structural
equality:

* ``Modular`` / ``PrimeField``: an ``int`` in ``[0, n)``
* ``Integers``: an ``int``
* ``Rationals``: a :class:`fractions.Fraction` (lowest terms, positive denominator)
* ``Matrix``: a row-major tuple of row tuples of base payloads
* ``Product``: a ``(left, right)`` tuple
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, Optional

DEFAULT_CAP = 65536


class RingError(ValueError):
    """Bad input: mismatched rings, malformed payloads, wrong shapes."""


class UnsupportedRingError(RingError):
    """The requested operation has no strategy for this ring."""


class ResourceError(RingError):
    """A finite ring is too large for the requested exhaustive operation."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


class Ring:
    """Base class for ring descriptors; subclasses are frozen dataclasses."""

    kind: str = ""
    is_field = False

    # payload-level arithmetic
    def zero_value(self) -> Any:
        raise NotImplementedError

    def one_value(self) -> Any:
        raise NotImplementedError

    def add_values(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def neg_values(self, x: Any) -> Any:
        raise NotImplementedError

    def mul_values(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def canon(self, raw: Any) -> Any:
        """Validate ``raw`` and return its canonical payload."""
        raise NotImplementedError

    def inv_value(self, x: Any) -> Any:
        raise UnsupportedRingError(f"{self.describe()} is not a field")

    # structure
    @property
    def is_finite(self) -> bool:
        raise NotImplementedError

    @property
    def cardinality(self) -> int | None:
        """Number of elements, or ``None`` for infinite rings."""
        raise NotImplementedError

    def iter_values(self) -> Iterator[Any]:
        raise UnsupportedRingError(f"{self.describe()} is infinite")

    # JSON
    def to_json(self) -> dict:
        raise NotImplementedError

    def encode(self, value: Any) -> Any:
        return value

    def decode(self, data: Any) -> Any:
        return self.canon(data)

    def describe(self) -> str:
        return repr(self)

    # conveniences
    def __call__(self, raw: Any) -> Element:
        return Element(self, self.canon(raw))

    def zero(self) -> Element:
        return Element(self, self.zero_value())

    def one(self) -> Element:
        return Element(self, self.one_value())


class _Scalar(Ring):
    """Rings whose payloads are Python numbers under ordinary + and *."""

    def zero_value(self):
        return 0

    def one_value(self):
        return 1

    def reduce(self, v):
        return v

    def add_values(self, x, y):
        return self.reduce(x + y)

    def neg_values(self, x):
        return self.reduce(-x)

    def mul_values(self, x, y):
        return self.reduce(x * y)


def _check_int(raw) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise RingError(f"expected an integer payload, got {raw!r}")
    return raw


@dataclass(frozen=True)
class Modular(_Scalar):
    n: int
    kind = "modular"

    def __post_init__(self):
        if _check_int(self.n) < 2:
            raise RingError(f"modulus must be >= 2, got {self.n}")

    def reduce(self, v):
        return v % self.n

    def canon(self, raw):
        return _check_int(raw) % self.n

    @property
    def is_finite(self):
        return True

    @property
    def cardinality(self):
        return self.n

    def iter_values(self):
        return iter(range(self.n))

    def to_json(self):
        return {"kind": "modular", "n": self.n}

    def describe(self):
        return f"Z_{self.n}"


@dataclass(frozen=True)
class PrimeField(Modular):
    kind = "prime_field"
    is_field = True

    def __post_init__(self):
        if not _is_prime(_check_int(self.n)):
            raise RingError(f"{self.n} is not prime")

    @property
    def p(self) -> int:
        return self.n

    def inv_value(self, x):
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(x, -1, self.n)

    def to_json(self):
        return {"kind": "prime_field", "p": self.n}

    def describe(self):
        return f"F_{self.n}"


@dataclass(frozen=True)
class Integers(_Scalar):
    kind = "integers"

    def canon(self, raw):
        return _check_int(raw)

    @property
    def is_finite(self):
        return False

    @property
    def cardinality(self):
        return None

    def to_json(self):
        return {"kind": "integers"}

    def describe(self):
        return "Z"


@dataclass(frozen=True)
class Rationals(_Scalar):
    kind = "rationals"
    is_field = True

    def zero_value(self):
        return Fraction(0)

    def one_value(self):
        return Fraction(1)

    def canon(self, raw):
        if isinstance(raw, bool):
            raise RingError(f"expected a rational payload, got {raw!r}")
        if isinstance(raw, (int, Fraction)):
            return Fraction(raw)
        if isinstance(raw, str):
            try:
                num, _, den = raw.strip().partition("/")
                return Fraction(int(num), int(den) if den else 1)
            except (ValueError, ZeroDivisionError) as exc:
                raise RingError(f"bad fraction {raw!r}") from exc
        raise RingError(f"expected a rational payload, got {raw!r}")

    def inv_value(self, x):
        if x == 0:
            raise ZeroDivisionError("zero has no inverse")
        return 1 / x

    @property
    def is_finite(self):
        return False

    @property
    def cardinality(self):
        return None

    def to_json(self):
        return {"kind": "rationals"}

    def encode(self, value):
        return f"{value.numerator}/{value.denominator}"

    def describe(self):
        return "Q"


@dataclass(frozen=True)
class Matrix(Ring):
    dim: int
    base: Ring
    kind = "matrix"

    def __post_init__(self):
        if _check_int(self.dim) < 1:
            raise RingError(f"matrix dimension must be >= 1, got {self.dim}")
        if not isinstance(self.base, Ring):
            raise RingError(f"matrix base must be a ring, got {self.base!r}")

    def zero_value(self):
        z = self.base.zero_value()
        return tuple((z,) * self.dim for _ in range(self.dim))

    def one_value(self):
        z, o = self.base.zero_value(), self.base.one_value()
        return tuple(tuple(o if i == j else z for j in range(self.dim)) for i in range(self.dim))

    def add_values(self, x, y):
        add = self.base.add_values
        return tuple(tuple(add(u, v) for u, v in zip(rx, ry)) for rx, ry in zip(x, y))

    def neg_values(self, x):
        neg = self.base.neg_values
        return tuple(tuple(neg(u) for u in row) for row in x)

    def mul_values(self, x, y):
        cols = list(zip(*y))
        base = self.base
        if isinstance(base, _Scalar):
            red = base.reduce
            return tuple(
                tuple(red(sum(u * v for u, v in zip(row, col))) for col in cols) for row in x
            )
        add, mul, z = base.add_values, base.mul_values, base.zero_value()
        out = []
        for row in x:
            new_row = []
            for col in cols:
                acc = z
                for u, v in zip(row, col):
                    acc = add(acc, mul(u, v))
                new_row.append(acc)
            out.append(tuple(new_row))
        return tuple(out)

    def canon(self, raw):
        if not isinstance(raw, (list, tuple)) or len(raw) != self.dim:
            raise RingError(f"expected {self.dim} rows, got {raw!r}")
        rows = []
        for row in raw:
            if not isinstance(row, (list, tuple)) or len(row) != self.dim:
                raise RingError(f"expected rows of length {self.dim}, got {row!r}")
            rows.append(tuple(self.base.canon(v) for v in row))
        return tuple(rows)

    @property
    def is_finite(self):
        return self.base.is_finite

    @property
    def cardinality(self):
        c = self.base.cardinality
        return None if c is None else c ** (self.dim * self.dim)

    def iter_values(self):
        d = self.dim
        entries = list(self.base.iter_values())
        for flat in itertools.product(entries, repeat=d * d):
            yield tuple(flat[i * d:(i + 1) * d] for i in range(d))

    def to_json(self):
        return {"kind": "matrix", "dim": self.dim, "base": self.base.to_json()}

    def encode(self, value):
        return [[self.base.encode(v) for v in row] for row in value]

    def decode(self, data):
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise RingError(f"expected a nested array, got {data!r}")
        return self.canon([[self.base.decode(v) for v in row] for row in data])

    def describe(self):
        return f"M_{self.dim}({self.base.describe()})"


@dataclass(frozen=True)
class Product(Ring):
    left: Ring
    right: Ring
    kind = "product"

    def __post_init__(self):
        if not (isinstance(self.left, Ring) and isinstance(self.right, Ring)):
            raise RingError("product factors must be rings")

    def zero_value(self):
        return (self.left.zero_value(), self.right.zero_value())

    def one_value(self):
        return (self.left.one_value(), self.right.one_value())

    def add_values(self, x, y):
        return (self.left.add_values(x[0], y[0]), self.right.add_values(x[1], y[1]))

    def neg_values(self, x):
        return (self.left.neg_values(x[0]), self.right.neg_values(x[1]))

    def mul_values(self, x, y):
        return (self.left.mul_values(x[0], y[0]), self.right.mul_values(x[1], y[1]))

    def canon(self, raw):
        if not isinstance(raw, (list, tuple)) or len(raw) != 2:
            raise RingError(f"expected a (left, right) pair, got {raw!r}")
        return (self.left.canon(raw[0]), self.right.canon(raw[1]))

    @property
    def is_finite(self):
        return self.left.is_finite and self.right.is_finite

    @property
    def cardinality(self):
        a, b = self.left.cardinality, self.right.cardinality
        return None if a is None or b is None else a * b

    def iter_values(self):
        return itertools.product(list(self.left.iter_values()), list(self.right.iter_values()))

    def to_json(self):
        return {"kind": "product", "left": self.left.to_json(), "right": self.right.to_json()}

    def encode(self, value):
        return [self.left.encode(value[0]), self.right.encode(value[1])]

    def decode(self, data):
        if not isinstance(data, list) or len(data) != 2:
            raise RingError(f"expected a [left, right] pair, got {data!r}")
        return (self.left.decode(data[0]), self.right.decode(data[1]))

    def describe(self):
        return f"{self.left.describe()} x {self.right.describe()}"


@dataclass(frozen=True, slots=True)
class Element:
    """An immutable ring element; ``value`` is the canonical payload."""

    ring: Ring
    value: Any

    def _same(self, other: Element) -> Ring:
        if not isinstance(other, Element):
            raise RingError(f"expected an Element, got {other!r}")
        r = self.ring
        if r is not other.ring and r != other.ring:
            raise RingError(f"ring mismatch: {r.describe()} vs {other.ring.describe()}")
        return r

    def __add__(self, other):
        other = self._coerce(other)
        return Element(self.ring, self._same(other).add_values(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, self.ring.neg_values(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return _scale(self, other)
        return Element(self.ring, self._same(other).mul_values(self.value, other.value))

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return _scale(self, other)
        return NotImplemented

    def __pow__(self, k: int):
        return power(self, k)

    def _coerce(self, other) -> Element:
        # integers stand for multiples of the unity, so "1 - p" reads naturally
        if isinstance(other, int) and not isinstance(other, bool):
            return _scale(self.ring.one(), other)
        return other

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "value": self.ring.encode(self.value)}

    def sort_key(self) -> str:
        return json.dumps(self.ring.encode(self.value), sort_keys=True)

    def __repr__(self):
        return f"Element({self.ring.describe()}, {self.ring.encode(self.value)!r})"


def _scale(x: Element, k: int) -> Element:
    """``k * x`` for an integer ``k`` by double-and-add."""
    r = x.ring
    acc, base = r.zero_value(), x.value
    if k < 0:
        k, base = -k, r.neg_values(base)
    while k:
        if k & 1:
            acc = r.add_values(acc, base)
        base = r.add_values(base, base)
        k >>= 1
    return Element(r, acc)


# functional surface


def zero(r: Ring) -> Element:
    return r.zero()


def one(r: Ring) -> Element:
    return r.one()


def add(x: Element, y: Element) -> Element:
    return x + y


def neg(x: Element) -> Element:
    return -x


def sub(x: Element, y: Element) -> Element:
    return x - y


def mul(x: Element, y: Element) -> Element:
    return x * y


def eq(x: Element, y: Element) -> bool:
    x._same(y)
    return x.value == y.value


def power(x: Element, k: int) -> Element:
    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise RingError(f"exponent must be a non-negative integer, got {k!r}")
    r = x.ring
    acc, base = r.one_value(), x.value
    while k:
        if k & 1:
            acc = r.mul_values(acc, base)
        base = r.mul_values(base, base)
        k >>= 1
    return Element(r, acc)


def is_idempotent(e: Element) -> bool:
    return e.ring.mul_values(e.value, e.value) == e.value


def enumerate_elements(r: Ring, cap: int = DEFAULT_CAP) -> Iterator[Element]:
    """Yield every element of a finite ring exactly once."""
    if not r.is_finite:
        raise UnsupportedRingError(f"cannot enumerate infinite ring {r.describe()}")
    if r.cardinality > cap:
        raise ResourceError(f"{r.describe()} has {r.cardinality} elements, cap is {cap}")
    for v in r.iter_values():
        yield Element(r, v)


# IdempotentFamily modes
EXHAUSTIVE = "exhaustive"
PARAMETRIZED = "parametrized-2x2-integer"
EXPLICIT = "explicit-list"


@dataclass(frozen=True)
class IdempotentFamily:
    ring: Ring
    mode: str = EXHAUSTIVE
    bound: Optional[int] = None
    elements: tuple[Element, ...] = ()

    @classmethod
    def exhaustive(cls, ring: Ring) -> "IdempotentFamily":
        return cls(ring, EXHAUSTIVE)

    @classmethod
    def parametrized(cls, bound: int) -> "IdempotentFamily":
        return cls(Matrix(2, Integers()), PARAMETRIZED, bound=bound)

    @classmethod
    def explicit(cls, ring: Ring, elements: Iterable) -> "IdempotentFamily":
        elems = tuple(e if isinstance(e, Element) else ring(e) for e in elements)
        return cls(ring, EXPLICIT, elements=elems)


def enumerate_idempotents(family: IdempotentFamily, cap: int = DEFAULT_CAP) -> Iterator[Element]:
    """Yield the idempotents described by ``family``."""
    r = family.ring
    if family.mode == EXHAUSTIVE:
        for e in enumerate_elements(r, cap):
            if is_idempotent(e):
                yield e
    elif family.mode == PARAMETRIZED:
        if r != Matrix(2, Integers()):
            raise RingError("the parametrized family lives in M_2(Z)")
        bound = family.bound
        if isinstance(bound, bool) or not isinstance(bound, int) or bound < 1:
            raise RingError(f"family bound must be a positive integer, got {bound!r}")
        yield r.zero()
        yield r.one()
        span = range(-bound, bound + 1)
        # trace 1, determinant 0:  [[a, b], [c, 1 - a]] with bc = a - a^2
        for a, b, c in itertools.product(span, span, span):
            if b * c == a - a * a:
                yield r([[a, b], [c, 1 - a]])
    elif family.mode == EXPLICIT:
        for e in family.elements:
            if e.ring != r:
                raise RingError("explicit family element from another ring")
            if not is_idempotent(e):
                raise RingError(f"{e!r} is not idempotent")
            yield e
    else:
        raise RingError(f"unknown family mode {family.mode!r}")


# JSON codec

def ring_from_json(data: Any) -> Ring:
    if not isinstance(data, dict) or "kind" not in data:
        raise RingError(f"ring JSON must be an object with 'kind', got {data!r}")
    kind = data["kind"]
    try:
        if kind == "modular":
            return Modular(data["n"])
        if kind == "prime_field":
            return PrimeField(data["p"])
        if kind == "integers":
            return Integers()
        if kind == "rationals":
            return Rationals()
        if kind == "matrix":
            return Matrix(data["dim"], ring_from_json(data["base"]))
        if kind == "product":
            return Product(ring_from_json(data["left"]), ring_from_json(data["right"]))
    except KeyError as exc:
        raise RingError(f"ring JSON of kind {kind!r} is missing {exc}") from exc
    raise RingError(f"unknown ring kind {kind!r}")


def ring_to_json(r: Ring) -> dict:
    return r.to_json()


def element_from_json(data: Any) -> Element:
    if not isinstance(data, dict) or "ring" not in data or "value" not in data:
        raise RingError("element JSON must be an object with 'ring' and 'value'")
    r = ring_from_json(data["ring"])
    return Element(r, r.decode(data["value"]))


def element_to_json(x: Element) -> dict:
    return x.to_json()
