"""Associated graded Gr(M(1, lam)) and the action of U^infty(V) on it.

For a Fock module the filtration piece Omega_n is spanned by the partition
vectors of size <= n, so the class [w]_n of a degree-n vector is determined
by its degree-n part. A :class:`GrVector` stores exactly those top parts;
the level of a term is the size of its partition.
"""

from __future__ import annotations

from .exact import partitions_of
from .fock import FockVector, mode, weight_split
from .uinf import UElement

__all__ = ["GrVector", "gr_basis", "gr_class", "theta_apply"]


class GrVector(FockVector):
    """Element of the direct sum of Gr_n(M(1, lam)), keyed by partition (level = size)."""

    __slots__ = ()

    def levels(self) -> list:
        return sorted({sum(p) for p in self.terms})

    def level(self, n: int) -> "GrVector":
        return self.project_degree(n)

    def items_by_level(self) -> list:
        return [((sum(p), p), c) for p, c in self.sorted_terms()]


def gr_class(p, coeff=1) -> GrVector:
    """The class [alpha(-p1)...alpha(-pr) (x) w]_{|p|} of a partition."""
    return GrVector({tuple(p): coeff})


def gr_basis(n: int) -> list:
    """One class per partition of ``n``, in canonical partition order."""
    return [gr_class(p) for p in partitions_of(n)]


def theta_apply(a: UElement, x: FockVector, lam=None) -> GrVector:
    """The action of ``a`` on Gr(M(1, lam)).

    An entry [v]_{kl} acts on level-l classes by the single mode
    (v_d)_{d-1+l-k} of each weight-d component v_d, and the image is read
    modulo Omega_{k-1}, i.e. only its degree-k part is kept. Classes at
    other levels are sent to zero. ``lam=None`` keeps the highest weight
    formal; a rational fixes it.
    """
    by_level: dict = {}
    for p, c in x.terms.items():
        by_level.setdefault(sum(p), {})[p] = c
    acc = GrVector._raw({})
    for (k, l), v in a.entries.items():
        terms = by_level.get(l)
        if not terms:
            continue
        src = FockVector._raw(terms)
        for d, vd in weight_split(v).items():
            img = mode(vd, d - 1 + l - k, src, lam=lam)
            acc = acc + GrVector._raw(img.project_degree(k).terms)
    return acc
