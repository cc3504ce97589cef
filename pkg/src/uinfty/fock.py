"""Fock modules M(1, lam) of the rank-one Heisenberg vertex operator algebra.

A basis vector alpha(-n1)...alpha(-nr)|0> is a partition ``(n1, ..., nr)``.
On M(1, lam), ``alpha(0)`` acts on the highest-weight vector by the formal
variable ``lam`` so a single computation covers every highest weight at once.
Functions taking ``lam`` read ``None`` as formal and a rational as a fixed
weight; V = M(1) itself is ``lam=0``.

Vertex operators follow the free-field realization

    Y(alpha(-n1)...alpha(-nr)|0>, x) = :d^(n1-1)alpha(x) ... d^(nr-1)alpha(x):

with divided-power derivatives and all annihilation modes (index >= 0)
to the right.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .exact import (
    LAM,
    ONE,
    ZERO,
    LambdaPoly,
    Partition,
    Scalar,
    as_scalar,
    binom,
    format_poly,
    format_scalar,
    make_partition,
    partition_key,
)

__all__ = [
    "FockVector",
    "vacuum",
    "basis",
    "alphas",
    "alpha_apply",
    "mode",
    "l_zero",
    "l_minus_one",
    "weight_split",
    "res_kernel",
]


def _coerce_coeff(c) -> LambdaPoly:
    if isinstance(c, LambdaPoly):
        return c
    return LambdaPoly.const(c)


class FockVector:
    """Finite linear combination of partition basis vectors.

    ``terms`` maps partitions to nonzero :class:`LambdaPoly` coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None):
        clean = {}
        if terms:
            for p, c in terms.items():
                c = _coerce_coeff(c)
                if c:
                    clean[make_partition(p)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    # -- inspection --------------------------------------------------------
    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, p: Partition) -> LambdaPoly:
        return self.terms.get(tuple(p), ZERO)

    def is_lambda_free(self) -> bool:
        return all(c.is_constant() for c in self.terms.values())

    def weights(self) -> set:
        return {sum(p) for p in self.terms}

    def max_degree(self) -> int:
        """Largest Fock degree present, or -1 for the zero vector."""
        return max((sum(p) for p in self.terms), default=-1)

    def homogeneous_weight(self) -> Optional[int]:
        """The common weight of all terms, or None if the vector is not homogeneous.

        The zero vector counts as homogeneous of weight 0.
        """
        ws = self.weights()
        if not ws:
            return 0
        if len(ws) == 1:
            return next(iter(ws))
        return None

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: partition_key(kv[0]))

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p)
            s = c if s is None else s + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return self.__class__._raw(out)

    def __neg__(self):
        return self.__class__._raw({p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        """Multiply by a rational or a :class:`LambdaPoly`."""
        if isinstance(c, LambdaPoly):
            if c.is_constant():
                c = c.constant()
            else:
                out = {}
                for p, x in self.terms.items():
                    y = x * c
                    if y:
                        out[p] = y
                return self.__class__._raw(out)
        c = as_scalar(c)
        if not c:
            return self.__class__._raw({})
        if c == 1:
            return self
        return self.__class__._raw({p: x.scale(c) for p, x in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, FockVector):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # -- projections -------------------------------------------------------
    def project_degree(self, k: int):
        return self.__class__._raw({p: c for p, c in self.terms.items() if sum(p) == k})

    def evaluate_at(self, lam0):
        """Substitute a rational for the formal highest weight."""
        out = {}
        for p, c in self.terms.items():
            v = c.evaluate_at(lam0)
            if v:
                out[p] = LambdaPoly.const(v)
        return self.__class__._raw(out)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({format_vector(self)!r})"

    def __str__(self) -> str:
        return format_vector(self)


def vacuum() -> FockVector:
    return FockVector._raw({(): ONE})


def basis(p: Iterable[int], coeff=1) -> FockVector:
    return FockVector({make_partition(p): coeff})


def alphas(*ns: int) -> FockVector:
    """``alphas(1, 1)`` is alpha(-1)alpha(-1)|0>."""
    return basis(ns)


def linear_combination(pairs) -> FockVector:
    out = FockVector._raw({})
    for c, v in pairs:
        out = out + v.scale(c)
    return out


# -- printing -----------------------------------------------------------------


def format_monomial(p: Partition) -> str:
    return "".join(f"a(-{n})" for n in p) + "|0>"


def format_vector(v: FockVector) -> str:
    """Canonical text form, e.g. ``a(-2)|0> - 3/2 * a(-1)a(-1)|0>``."""
    if not v.terms:
        return "0"
    out = []
    for i, (p, c) in enumerate(v.sorted_terms()):
        mono = format_monomial(p)
        if c.is_constant():
            x = c.constant()
            neg = x < 0
            mag = -x if neg else x
            body = mono if mag == 1 else f"{format_scalar(mag)} * {mono}"
        else:
            neg = False
            body = f"({format_poly(c)}) * {mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- Heisenberg modes ----------------------------------------------------------


def _remove_part(p: Partition, k: int) -> Partition:
    i = p.index(k)
    return p[:i] + p[i + 1:]


def _insert_part(p: Partition, k: int) -> Partition:
    i = 0
    while i < len(p) and p[i] > k:
        i += 1
    return p[:i] + (k,) + p[i:]


def _zero_mode_scalar(lam) -> LambdaPoly:
    return LAM if lam is None else LambdaPoly.const(lam)


def _alpha_basis(m: int, p: Partition, lam) -> Optional[tuple]:
    """alpha(m) on a basis vector as ``(partition, scalar or LambdaPoly)`` or None."""
    if m < 0:
        return _insert_part(p, -m), 1
    if m == 0:
        return p, _zero_mode_scalar(lam)
    mult = p.count(m)
    if not mult:
        return None
    return _remove_part(p, m), m * mult


def alpha_apply(m: int, w: FockVector, lam=None) -> FockVector:
    """Apply the Heisenberg generator alpha(m); the central element acts by 1.

    alpha(0) multiplies by the formal ``lam`` unless a rational is given.
    """
    if lam is not None:
        lam = as_scalar(lam)
    out = FockVector._raw({})
    for p, c in w.terms.items():
        r = _alpha_basis(m, p, lam)
        if r is None:
            continue
        q, s = r
        out = out + FockVector._raw({q: c * s if isinstance(s, LambdaPoly) else c.scale(s)})
    return out


# The recursion peels the first factor off v:
#   (alpha(-n) v')_m w = sum_{k >= n} C(k-1, n-1) alpha(-k) v'_{m+k-n} w
#                      + sum_{j >= 0} (-1)^(n-1) C(j+n-1, n-1) v'_{m-j-n} alpha(j) w
@lru_cache(maxsize=None)
def _mode_basis(v: Partition, m: int, w: Partition, lam) -> tuple:
    """v_m applied to basis w, as a tuple of (partition, LambdaPoly) pairs."""
    if not v:
        return ((w, ONE),) if m == -1 else ()
    n = v[0]
    rest = v[1:]
    acc: dict = {}

    def add(p, c):
        s = acc.get(p)
        s = c if s is None else s + c
        if s:
            acc[p] = s
        else:
            acc.pop(p, None)

    wdeg = sum(w)
    rdeg = sum(rest)
    # creation part: alpha(-k) for k >= n
    kmax = wdeg + rdeg - 1 - m + n
    for k in range(n, kmax + 1):
        c0 = binom(k - 1, n - 1)
        for q, c in _mode_basis(rest, m + k - n, w, lam):
            add(_insert_part(q, k), c.scale(c0))
    # annihilation and zero part
    sign = -1 if (n - 1) % 2 else 1
    for j in sorted({0, *w}):
        r = _alpha_basis(j, w, lam)
        q0, s = r
        c0 = sign * binom(j + n - 1, n - 1)
        for q, c in _mode_basis(rest, m - j - n, q0, lam):
            add(q, (c * s).scale(c0) if isinstance(s, LambdaPoly) else c.scale(c0 * s))
    return tuple(acc.items())


def _check_vertex_algebra_element(v: FockVector) -> None:
    if not v.is_lambda_free():
        raise ValueError("only lam-free vectors (elements of V) have vertex operators")


def mode(v: FockVector, m: int, w: FockVector, lam=0) -> FockVector:
    """Compute v_m w, the coefficient of x^(-m-1) in Y(v, x)w.

    ``v`` must be lam-free. By default ``w`` is read as an element of V
    itself, where alpha(0) acts by 0; pass ``lam=None`` to act on M(1, lam)
    with formal highest weight, or a rational for a numeric one.
    For homogeneous v of weight d and w of degree e, the result has degree
    e + d - m - 1.
    """
    _check_vertex_algebra_element(v)
    if lam is not None:
        lam = as_scalar(lam)
    acc: dict = {}
    for pv, cv in v.terms.items():
        sv = cv.constant()
        for pw, cw in w.terms.items():
            if sum(pv) + sum(pw) - m - 1 < 0:
                continue
            factor = cw.scale(sv)
            for q, c in _mode_basis(pv, m, pw, lam):
                x = c * factor
                s = acc.get(q)
                s = x if s is None else s + x
                if s:
                    acc[q] = s
                else:
                    acc.pop(q, None)
    return FockVector._raw(acc)


def l_zero(v: FockVector) -> FockVector:
    """The weight operator on V: multiply each basis term by its size."""
    return FockVector._raw({p: c.scale(sum(p)) for p, c in v.terms.items() if sum(p)})


def weight_split(v: FockVector) -> dict:
    """Homogeneous components of ``v`` keyed by weight."""
    out: dict = {}
    for p, c in v.terms.items():
        out.setdefault(sum(p), {})[p] = c
    return {d: FockVector._raw(t) for d, t in sorted(out.items())}


def l_minus_one(v: FockVector) -> FockVector:
    """L(-1)v = Res_x x^-2 Y(v, x)|0> = v_{-2}|0>."""
    return mode(v, -2, vacuum())


def res_kernel(u: FockVector, v: FockVector, t: int, s: int, lam=0) -> FockVector:
    """Res_x x^t (1+x)^s Y((1+x)^{L(0)} u, x) v.

    Expands as sum over weight components u_d and i >= 0 of
    C(s+d, i) (u_d)_{t+i} v; the i-sum stops once t+i exceeds the
    largest index that can act nonzero on ``v``.
    """
    _check_vertex_algebra_element(u)
    out = FockVector._raw({})
    if not v.terms:
        return out
    vdeg = v.max_degree()
    for d, ud in weight_split(u).items():
        top = s + d
        imax = vdeg + d - 1 - t
        if top >= 0:
            imax = min(imax, top)
        for i in range(0, imax + 1):
            c = binom(top, i)
            if c:
                out = out + mode(ud, t + i, v, lam).scale(c)
    return out
