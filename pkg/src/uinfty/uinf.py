"""Finite-support matrices with entries in V and the products on them.

``[v]_{kl}`` is the matrix with the single entry ``v`` at row ``k``,
column ``l``. :func:`diamond` is the (nonassociative) product whose
diagonal blocks reproduce the level-n Zhu products :func:`star_n`.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .exact import binom
from .fock import (
    FockVector,
    basis,
    l_minus_one,
    l_zero,
    mode,
    res_kernel,
    vacuum,
    weight_split,
)
from .exact import partitions_of

__all__ = [
    "UElement",
    "entry",
    "circ_n",
    "star_n",
    "diamond",
    "diamond_entry",
    "o_infty_gen",
    "l_gen",
    "j_gen",
    "shift_diag",
    "o_n_span",
    "ShiftError",
]


class ShiftError(ValueError):
    """Raised when shifting an element that has an entry in row 0 or column 0."""


class UElement:
    """Finite-support element of U^infty(V): a sparse map (row, col) -> FockVector."""

    __slots__ = ("entries",)

    def __init__(self, entries: Optional[dict] = None):
        clean = {}
        for (k, l), v in (entries or {}).items():
            if k < 0 or l < 0:
                raise ValueError(f"negative matrix index ({k}, {l})")
            if not v.is_lambda_free():
                raise ValueError("matrix entries must be lam-free")
            if v:
                clean[(int(k), int(l))] = v
        self.entries = clean

    @classmethod
    def _raw(cls, entries: dict) -> "UElement":
        obj = cls.__new__(cls)
        obj.entries = entries
        return obj

    def __iter__(self) -> Iterator:
        return iter(sorted(self.entries.items()))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __getitem__(self, kl) -> FockVector:
        return self.entries.get(tuple(kl), FockVector._raw({}))

    def support(self) -> list:
        return sorted(self.entries)

    def columns(self) -> list:
        return sorted({l for _, l in self.entries})

    def column(self, l: int) -> "UElement":
        return UElement._raw({kl: v for kl, v in self.entries.items() if kl[1] == l})

    def __add__(self, other: "UElement") -> "UElement":
        if not isinstance(other, UElement):
            return NotImplemented
        out = dict(self.entries)
        for kl, v in other.entries.items():
            s = out.get(kl)
            s = v if s is None else s + v
            if s:
                out[kl] = s
            else:
                out.pop(kl, None)
        return UElement._raw(out)

    def __neg__(self) -> "UElement":
        return UElement._raw({kl: -v for kl, v in self.entries.items()})

    def __sub__(self, other: "UElement") -> "UElement":
        return self + (-other)

    def scale(self, c) -> "UElement":
        out = {}
        for kl, v in self.entries.items():
            w = v.scale(c)
            if w:
                out[kl] = w
        return UElement._raw(out)

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if isinstance(other, UElement):
            return self.entries == other.entries
        if other == 0:
            return not self.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.entries.items()))

    def __repr__(self) -> str:
        return f"UElement({format_uelement(self)!r})"

    def __str__(self) -> str:
        return format_uelement(self)


def entry(v: FockVector, k: int, l: int) -> UElement:
    """The element [v]_{kl}."""
    return UElement({(k, l): v})


def format_uelement(a: UElement) -> str:
    if not a.entries:
        return "0"
    return " + ".join(f"[{v}]{{{k},{l}}}" for (k, l), v in a)


# -- products on V -------------------------------------------------------------


def circ_n(u: FockVector, v: FockVector, n: int) -> FockVector:
    """u o_n v = Res_x (1+x)^{wt u + n} Y(u, x)v / x^{2n+2}, extended linearly in u."""
    return res_kernel(u, v, -2 * n - 2, n)


def star_n(u: FockVector, v: FockVector, n: int) -> FockVector:
    """The level-n Zhu product u *_n v."""
    out = FockVector._raw({})
    for m in range(n + 1):
        c = (-1) ** m * binom(m + n, n)
        out = out + res_kernel(u, v, -n - m - 1, n).scale(c)
    return out


def diamond_entry(u: FockVector, v: FockVector, k: int, n: int, l: int) -> FockVector:
    """The vector w with [u]_{kn} <> [v]_{nl} = [w]_{kl}."""
    out = FockVector._raw({})
    top = -k + n - l - 1
    for m in range(n + 1):
        c = binom(top, m)
        if c:
            out = out + res_kernel(u, v, top - m, l).scale(c)
    return out


def diamond(a: UElement, b: UElement) -> UElement:
    """Bilinear product on U^infty(V); blocks pair only when inner indices agree."""
    out: dict = {}
    for (k, m), u in a.entries.items():
        for (n, l), v in b.entries.items():
            if m != n:
                continue
            w = diamond_entry(u, v, k, n, l)
            if not w:
                continue
            s = out.get((k, l))
            s = w if s is None else s + w
            if s:
                out[(k, l)] = s
            else:
                out.pop((k, l), None)
    return UElement._raw(out)


# -- generator families --------------------------------------------------------


def o_infty_gen(u: FockVector, v: FockVector, k: int, l: int, p: int) -> UElement:
    """Res_x x^{-k-l-p-2} (1+x)^l [Y((1+x)^{L(0)} u, x) v]_{kl}."""
    if min(k, l, p) < 0:
        raise ValueError("o_infty_gen needs k, l, p >= 0")
    return UElement._raw(_single(k, l, res_kernel(u, v, -k - l - p - 2, l)))


def l_gen(v: FockVector, k: int, l: int) -> UElement:
    """[(L(-1) + L(0) + l - k) v]_{kl}."""
    if min(k, l) < 0:
        raise ValueError("l_gen needs k, l >= 0")
    w = l_minus_one(v) + l_zero(v) + v.scale(l - k)
    return UElement._raw(_single(k, l, w))


def _single(k: int, l: int, w: FockVector) -> dict:
    return {(k, l): w} if w else {}


def j_gen(u: FockVector, v: FockVector, k: int, l: int, p: int, n: int) -> UElement:
    """Jacobi-identity element of U^infty(V), supported at (k, l + p).

    The first two sums run over j >= 0 keeping every inner index
    non-negative; the third runs until v_{p+j} u vanishes.
    """
    wt_v = v.homogeneous_weight()
    if wt_v is None:
        raise ValueError("j_gen needs homogeneous v")
    if k < 0:
        raise ValueError("j_gen needs k >= 0")
    col = l + p
    if col < 0:
        raise ValueError("j_gen needs l + p >= 0")

    out = FockVector._raw({})
    for j in range(0, n + p + 1):
        mid = n + p - j
        c = (-1) ** j * binom(p, j)
        if c:
            out = out + diamond_entry(v, u, k, mid, col).scale(c)
    for j in range(0, l - n + k + p + 1):
        mid = l - n + k + p - j
        c = (-1) ** ((p - j) % 2) * binom(p, j)
        if c:
            out = out - diamond_entry(u, v, k, mid, col).scale(c)
    # v_{p+j} u = 0 once p + j >= wt v + deg u
    top = wt_v + n - k - 1
    for j in range(0, max(0, wt_v + u.max_degree() - p)):
        c = binom(top, j)
        if c:
            out = out - mode(v, p + j, u).scale(c)
    return UElement._raw(_single(k, col, out))


def shift_diag(a: UElement) -> UElement:
    """Move every entry (k, l) to (k-1, l-1)."""
    for k, l in a.entries:
        if k < 1 or l < 1:
            raise ShiftError(f"cannot shift entry at ({k}, {l}): row and column must be >= 1")
    return UElement._raw({(k - 1, l - 1): v for (k, l), v in a.entries.items()})


# -- level-n Zhu ideal ---------------------------------------------------------


def o_n_span(n: int, weight_cutoff: int) -> list:
    """Spanning vectors u o_n v and (L(-1) + L(0))v with wt u + wt v <= cutoff.

    u and v run over the partition basis; zero vectors are dropped. The
    order is deterministic: circ products by (wt u, u, wt v, v), then the
    L-type vectors by v.
    """
    if weight_cutoff < 0:
        raise ValueError("weight_cutoff must be >= 0")
    out = []
    basis_by_weight = [partitions_of(d) for d in range(weight_cutoff + 1)]
    for du in range(weight_cutoff + 1):
        for pu in basis_by_weight[du]:
            for dv in range(weight_cutoff - du + 1):
                for pv in basis_by_weight[dv]:
                    w = circ_n(basis(pu), basis(pv), n)
                    if w:
                        out.append(w)
    for dv in range(weight_cutoff + 1):
        for pv in basis_by_weight[dv]:
            v = basis(pv)
            w = l_minus_one(v) + l_zero(v)
            if w:
                out.append(w)
    return out
