"""Exact scalars, polynomials in the formal highest weight, binomials and partitions.

Scalars are Python ints or :class:`fractions.Fraction`; a Fraction whose
denominator is 1 is normalized back to an int so the common integral case
stays on the fast path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]
Partition = tuple  # weakly decreasing tuple of positive ints

__all__ = [
    "Scalar",
    "Partition",
    "LambdaPoly",
    "as_scalar",
    "binom",
    "partitions_of",
    "partition_count",
    "partition_key",
    "make_partition",
]


def as_scalar(x) -> Scalar:
    """Coerce ``x`` to an exact rational, preferring ``int`` when integral."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return as_scalar(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return as_scalar(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


@lru_cache(maxsize=None)
def binom(a: int, m: int) -> int:
    """Generalized binomial coefficient a(a-1)...(a-m+1)/m! for any integer ``a``."""
    if m < 0:
        raise ValueError("binom: m must be non-negative")
    num = 1
    den = 1
    for i in range(m):
        num *= a - i
        den *= i + 1
    return num // den


# -- partitions ---------------------------------------------------------------


def partition_key(p: Partition) -> tuple:
    """Sort key: size first, then lexicographic on the reversed parts.

    Within one size this lists ``(1, ..., 1)`` first and ``(n,)`` last.
    """
    return (sum(p), tuple(reversed(p)))


def make_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(sorted((int(x) for x in parts), reverse=True))
    if parts and parts[-1] <= 0:
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def _raw_partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _raw_partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple:
    return tuple(sorted(_raw_partitions(n, n), key=partition_key))


def partitions_of(n: int) -> list:
    """All partitions of ``n`` in the canonical (reverse-lexicographic) order."""
    if n < 0:
        raise ValueError("partitions_of: n must be non-negative")
    return list(_partitions_cached(n))


def partition_count(n: int) -> int:
    return len(_partitions_cached(n))


# -- polynomials in lambda ----------------------------------------------------


def _trim(coeffs: Sequence[Scalar]) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class LambdaPoly:
    """Univariate polynomial in the formal highest weight ``lam``.

    Stored densely as a tuple of exact coefficients, lowest degree first,
    with trailing zeros stripped (so the zero polynomial is ``()``).
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([as_scalar(c) for c in coeffs])
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "LambdaPoly":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LambdaPoly":
        return cls((c,))

    @classmethod
    def from_dict(cls, terms: dict) -> "LambdaPoly":
        if not terms:
            return ZERO
        deg = max(terms)
        coeffs = [0] * (deg + 1)
        for d, c in terms.items():
            if d < 0:
                raise ValueError("negative degree")
            coeffs[d] = c
        return cls(coeffs)

    # basic predicates
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Scalar:
        return self.coeffs[0] if self.coeffs else 0

    def as_dict(self) -> dict:
        return {d: c for d, c in enumerate(self.coeffs) if c}

    # arithmetic
    def __add__(self, other) -> "LambdaPoly":
        if not isinstance(other, LambdaPoly):
            other = LambdaPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = as_scalar(out[i] + c)
        return LambdaPoly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> "LambdaPoly":
        return LambdaPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "LambdaPoly":
        if not isinstance(other, LambdaPoly):
            other = LambdaPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LambdaPoly":
        return (-self) + other

    def scale(self, c) -> "LambdaPoly":
        c = as_scalar(c)
        if not c:
            return ZERO
        if c == 1:
            return self
        return LambdaPoly._raw(tuple(as_scalar(x * c) for x in self.coeffs))

    def __mul__(self, other) -> "LambdaPoly":
        if not isinstance(other, LambdaPoly):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return ZERO
        if len(other.coeffs) == 1:
            return self.scale(other.coeffs[0])
        if len(self.coeffs) == 1:
            return other.scale(self.coeffs[0])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return LambdaPoly._raw(_trim([as_scalar(c) for c in out]))

    __rmul__ = __mul__

    def shift(self) -> "LambdaPoly":
        """Multiply by ``lam``."""
        if not self.coeffs:
            return self
        return LambdaPoly._raw((0,) + self.coeffs)

    def evaluate_at(self, x) -> Scalar:
        x = as_scalar(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return as_scalar(acc)

    # comparison / hashing
    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"LambdaPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def format_scalar(c: Scalar) -> str:
    c = as_scalar(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_poly(p: LambdaPoly, var: str = "lam") -> str:
    if not p.coeffs:
        return "0"
    pieces = []
    for d in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if d == 0:
            body = format_scalar(mag)
        else:
            mono = var if d == 1 else f"{var}^{d}"
            body = mono if mag == 1 else f"{format_scalar(mag)}*{mono}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


ZERO = LambdaPoly._raw(())
ONE = LambdaPoly._raw((1,))
LAM = LambdaPoly._raw((0, 1))
