"""Membership test for Q^infty(M(1)) on finite-support elements.

Every lower-bounded generalized M(1)-module is M(1) (x) Omega(W) as a
Heisenberg module, with alpha(0) acting on Omega(W) by some operator that
commutes with everything in sight. The image of a basis class under a
finite-support element is therefore a polynomial expression in alpha(0),
which we compute once with alpha(0) = lam formal. If all those polynomials
vanish identically they vanish for any commuting substitution, including
non-semisimple ones; if one is nonzero, any rational non-root gives a
one-dimensional Omega(W) on which the element acts nontrivially. So
checking the formal images on every basis class of every column in the
support decides membership.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exact import Partition, format_poly
from .grmod import GrVector, gr_basis, theta_apply
from .uinf import UElement, shift_diag

__all__ = ["Witness", "MembershipReport", "ShiftReport", "in_qinf", "diagonal_shift_report"]


@dataclass(frozen=True)
class Witness:
    column: int
    partition: Partition
    image: GrVector

    def to_dict(self) -> dict:
        return {
            "column": self.column,
            "partition": list(self.partition),
            "image": [
                {"level": lvl, "partition": list(p), "coeff": format_poly(c)}
                for (lvl, p), c in self.image.items_by_level()
            ],
        }


@dataclass(frozen=True)
class MembershipReport:
    member: bool
    witness: Optional[Witness] = None
    checked_columns: list = field(default_factory=list)

    def __post_init__(self):
        if self.member != (self.witness is None):
            raise ValueError("member must be True exactly when there is no witness")

    def to_dict(self) -> dict:
        return {
            "member": self.member,
            "witness": self.witness.to_dict() if self.witness else None,
            "checked_columns": list(self.checked_columns),
        }


@dataclass(frozen=True)
class ShiftReport:
    original: MembershipReport
    shifted: MembershipReport

    @property
    def satisfies(self) -> bool:
        """The property only constrains members: a non-member satisfies it vacuously."""
        return self.shifted.member or not self.original.member

    def to_dict(self) -> dict:
        return {
            "original": self.original.to_dict(),
            "shifted": self.shifted.to_dict(),
            "satisfies": self.satisfies,
        }


def in_qinf(a: UElement, lam=None) -> MembershipReport:
    """Decide whether ``a`` acts as zero on Gr(W) for every lower-bounded module W.

    Columns are scanned in increasing order and partitions in canonical
    order; the first nonzero image is returned as the witness. Passing a
    rational ``lam`` restricts the test to the single Fock module of that
    highest weight (a necessary condition only).
    """
    cols = a.columns()
    for l in cols:
        block = a.column(l)
        for cls in gr_basis(l):
            img = theta_apply(block, cls, lam=lam)
            if img:
                (p, _), = cls.terms.items()
                return MembershipReport(False, Witness(l, p, img), cols[: cols.index(l) + 1])
    return MembershipReport(True, None, cols)


def diagonal_shift_report(a: UElement) -> ShiftReport:
    """Membership of ``a`` and of its diagonal shift; raises ShiftError on row/col 0."""
    shifted = shift_diag(a)
    return ShiftReport(in_qinf(a), in_qinf(shifted))
