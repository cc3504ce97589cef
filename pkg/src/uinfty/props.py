"""Executable checks of the structural identities over parameter grids.

Each check returns a list of :class:`CheckResult`; a failed result always
carries a ``detail`` string. Randomized checks take a seed and record it in
their parameters so a run can be replayed exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .exact import binom, partitions_of
from .fock import FockVector, alphas, basis, mode, res_kernel, vacuum
from .grmod import gr_basis, theta_apply
from .oracle import diagonal_shift_report, in_qinf
from .uinf import (
    UElement,
    diamond,
    entry,
    j_gen,
    l_gen,
    o_infty_gen,
    shift_diag,
    star_n,
)

__all__ = [
    "CheckResult",
    "basis_upto",
    "counterexample_element",
    "jacobi_sides",
    "check_jacobi",
    "check_diamond_star",
    "check_prop_mult",
    "check_prop_mult0",
    "check_corollary_kl",
    "check_theorem_main",
    "check_counterexample",
    "check_a1_heis",
    "check_homomorphism",
    "random_uelement",
    "SUITES",
    "run_suite",
]


@dataclass
class CheckResult:
    name: str
    parameters: dict = field(default_factory=dict)
    passed: bool = True
    detail: Optional[str] = None

    def __post_init__(self):
        if not self.passed and not self.detail:
            raise ValueError("a failed check must carry a detail message")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.parameters,
            "passed": self.passed,
            "witness": self.detail,
        }


def _fmt(p) -> str:
    return str(basis(p))


def basis_upto(max_weight: int) -> list:
    """Partition basis vectors of V of weight <= max_weight, as partitions."""
    return [p for d in range(max_weight + 1) for p in partitions_of(d)]


def _result(name, params, ok, detail_fn):
    return CheckResult(name, params, ok, None if ok else detail_fn())


# -- Jacobi identity ------------------------------------------------------------


def jacobi_sides(a: FockVector, b: FockVector, l: int, m: int, n: int, c: FockVector, lam=None):
    """Both sides of the Jacobi identity in mode form applied to ``c``.

    Returns ``(lhs, rhs)`` where the right side is the difference of the two
    operator-product sums. a and b must be homogeneous.
    """
    wa = a.homogeneous_weight()
    wb = b.homogeneous_weight()
    dc = c.max_degree()
    lhs = FockVector._raw({})
    for i in itertools.count():
        if l + i > wa + wb - 1 or (m >= 0 and i > m):
            break
        ab = mode(a, l + i, b)
        if ab:
            lhs = lhs + mode(ab, m + n - i, c, lam=lam).scale(binom(m, i))
    rhs = FockVector._raw({})
    for i in itertools.count():
        if n + i > wb + dc - 1 or (l >= 0 and i > l):
            break
        coef = (-1) ** i * binom(l, i)
        if coef:
            rhs = rhs + mode(a, m + l - i, mode(b, n + i, c, lam=lam), lam=lam).scale(coef)
    for i in itertools.count():
        if m + i > wa + dc - 1 or (l >= 0 and i > l):
            break
        coef = (-1) ** ((l + i) % 2) * binom(l, i)
        if coef:
            rhs = rhs - mode(b, n + l - i, mode(a, m + i, c, lam=lam), lam=lam).scale(coef)
    return lhs, rhs


def check_jacobi(
    vectors: Optional[Sequence] = None,
    index_range: Iterable[int] = range(-2, 3),
    targets: Optional[Sequence] = None,
) -> list:
    """Jacobi identity on all (a, b, l, m, n), each side applied to every target.

    Defaults: a, b over the basis of weight <= 3, l, m, n in -2..2, targets
    the basis of M(1, lam) of degree <= 4 with lam formal. One result per
    (a, b, l, m, n).
    """
    vectors = basis_upto(3) if vectors is None else list(vectors)
    targets = basis_upto(4) if targets is None else list(targets)
    idx = list(index_range)
    out = []
    for pa, pb in itertools.product(vectors, repeat=2):
        a, b = basis(pa), basis(pb)
        for l, m, n in itertools.product(idx, repeat=3):
            bad = None
            for pc in targets:
                lhs, rhs = jacobi_sides(a, b, l, m, n, basis(pc))
                if lhs != rhs:
                    bad = (pc, lhs, rhs)
                    break
            params = {"a": _fmt(pa), "b": _fmt(pb), "l": l, "m": m, "n": n}
            out.append(
                _result(
                    "jacobi",
                    params,
                    bad is None,
                    lambda: f"target {_fmt(bad[0])}: lhs {bad[1]} != rhs {bad[2]}",
                )
            )
    return out


# -- diamond vs star ------------------------------------------------------------


def check_diamond_star(nmax: int = 3, max_weight: int = 3) -> list:
    out = []
    vecs = basis_upto(max_weight)
    for n in range(nmax + 1):
        for pu, pv in itertools.product(vecs, repeat=2):
            u, v = basis(pu), basis(pv)
            lhs = diamond(entry(u, n, n), entry(v, n, n))
            rhs = entry(star_n(u, v, n), n, n)
            out.append(
                _result(
                    "diamond-star",
                    {"n": n, "u": _fmt(pu), "v": _fmt(pv)},
                    lhs == rhs,
                    lambda: f"diamond {lhs} != star {rhs}",
                )
            )
    return out


# -- propositions on shifting products -----------------------------------------


def _membership_result(name, params, element):
    rep = in_qinf(element)
    return _result(
        name,
        params,
        rep.member,
        lambda: f"not in Q: column {rep.witness.column}, class {_fmt(rep.witness.partition)}, "
        f"image {rep.witness.image}",
    )


def check_prop_mult(max_weight: int = 3, index_range: Iterable[int] = range(1, 4)) -> list:
    """[u]_{k-1,i-1} <> [v]_{i-1,l-1} minus the shifted [u]_{ki} <> [v]_{il} lies in Q."""
    out = []
    idx = list(index_range)
    vecs = basis_upto(max_weight)
    for pu, pv in itertools.product(vecs, repeat=2):
        u, v = basis(pu), basis(pv)
        for k, i, l in itertools.product(idx, repeat=3):
            lower = diamond(entry(u, k - 1, i - 1), entry(v, i - 1, l - 1))
            upper = shift_diag(diamond(entry(u, k, i), entry(v, i, l)))
            params = {"u": _fmt(pu), "v": _fmt(pv), "k": k, "i": i, "l": l}
            out.append(_membership_result("mult", params, lower - upper))
    return out


def check_prop_mult0(max_weight: int = 3, index_range: Iterable[int] = range(1, 4)) -> list:
    """The shift of [u]_{k0} <> [v]_{0l} lies in Q."""
    out = []
    idx = list(index_range)
    vecs = basis_upto(max_weight)
    for pu, pv in itertools.product(vecs, repeat=2):
        u, v = basis(pu), basis(pv)
        for k, l in itertools.product(idx, repeat=2):
            elem = shift_diag(diamond(entry(u, k, 0), entry(v, 0, l)))
            params = {"u": _fmt(pu), "v": _fmt(pv), "k": k, "l": l}
            out.append(_membership_result("mult0", params, elem))
    return out


def check_corollary_kl(max_weight: int = 2, max_index: int = 3, p_range: Iterable[int] = range(0, 3)) -> list:
    """A residue generator's vector built for (k', l') still lies in Q at (k, l).

    Checked for every k <= k' with k - l = k' - l' inside the index box.
    """
    out = []
    vecs = basis_upto(max_weight)
    ps = list(p_range)
    for pu, pv in itertools.product(vecs, repeat=2):
        u, v = basis(pu), basis(pv)
        for k2, l2, p in itertools.product(range(max_index + 1), range(max_index + 1), ps):
            w = res_kernel(u, v, -k2 - l2 - p - 2, l2)
            for k in range(0, k2 + 1):
                l = l2 - (k2 - k)
                if l < 0:
                    continue
                params = {"u": _fmt(pu), "v": _fmt(pv), "k'": k2, "l'": l2, "p": p, "k": k, "l": l}
                out.append(_membership_result("corollary-kl", params, entry(w, k, l)))
    return out


# -- diagonal shift property of the generator families -------------------------


def o_infty_grid(max_weight=3, index_range=range(1, 4), p_range=range(0, 3)):
    vecs = basis_upto(max_weight)
    idx = list(index_range)
    for pu, pv in itertools.product(vecs, repeat=2):
        for k, l, p in itertools.product(idx, idx, p_range):
            params = {"kind": "O", "u": _fmt(pu), "v": _fmt(pv), "k": k, "l": l, "p": p}
            yield params, o_infty_gen(basis(pu), basis(pv), k, l, p)


def l_gen_grid(max_weight=3, index_range=range(1, 4)):
    idx = list(index_range)
    for pv in basis_upto(max_weight):
        for k, l in itertools.product(idx, idx):
            yield {"kind": "L", "v": _fmt(pv), "k": k, "l": l}, l_gen(basis(pv), k, l)


def j_gen_grid(max_weight=2, k_range=range(0, 3), n_range=range(-2, 3), p_range=range(-2, 3), cols=(1, 2)):
    """All admissible Jacobi elements; l is determined by the target column l + p."""
    vecs = basis_upto(max_weight)
    for pu, pv in itertools.product(vecs, repeat=2):
        for k, n, p, col in itertools.product(k_range, n_range, p_range, cols):
            l = col - p
            params = {"kind": "J", "u": _fmt(pu), "v": _fmt(pv), "k": k, "l": l, "p": p, "n": n}
            yield params, j_gen(basis(pu), basis(pv), k, l, p, n)


def _shift_result(name, params, element):
    # Elements with an entry in row 0 or column 0 have no diagonal shift;
    # for those only membership is checked.
    if any(k == 0 or l == 0 for k, l in element.support()):
        return _membership_result(name, params, element)
    rep = diagonal_shift_report(element)
    ok = rep.original.member and rep.shifted.member

    def detail():
        which = "original" if not rep.original.member else "shifted"
        w = getattr(rep, which).witness
        return f"{which} not in Q: column {w.column}, class {_fmt(w.partition)}, image {w.image}"

    return _result(name, params, ok, detail)


def check_theorem_main(
    generators: Optional[Iterable] = None,
    combos: int = 20,
    seed: int = 0,
) -> list:
    """Diagonal shift property for generators and random combinations of them.

    ``generators`` yields ``(params, element)`` pairs; by default a small grid
    of residue, L-type and Jacobi elements. ``combos`` random rational
    combinations of generators sharing a support entry are also checked.
    """
    if generators is None:
        generators = itertools.chain(
            o_infty_grid(max_weight=2, index_range=range(1, 3), p_range=range(0, 2)),
            l_gen_grid(max_weight=2, index_range=range(1, 3)),
            j_gen_grid(max_weight=1, k_range=range(1, 3), n_range=range(-1, 2), p_range=range(-1, 2)),
        )
    out = []
    by_support: dict = {}
    for params, elem in generators:
        out.append(_shift_result("theorem-main", params, elem))
        if elem and min(min(kl) for kl in elem.support()) >= 1:
            by_support.setdefault(tuple(elem.support()), []).append(elem)
    rng = random.Random(seed)
    pools = [v for _, v in sorted(by_support.items()) if len(v) >= 2]
    for t in range(combos if pools else 0):
        pool = rng.choice(pools)
        picks = rng.sample(range(len(pool)), min(3, len(pool)))
        coeffs = [rng.choice([-2, -1, 1, 2]) for _ in picks]
        elem = UElement._raw({})
        for c, i in zip(coeffs, picks):
            elem = elem + pool[i].scale(c)
        params = {"kind": "combination", "seed": seed, "draw": t, "coefficients": coeffs}
        out.append(_shift_result("theorem-main", params, elem))
    return out


# -- the Heisenberg counterexample --------------------------------------------


def counterexample_element(n: int) -> UElement:
    """[a(-1)]_{nn} <> [a(-1)]_{nn} - [a(-1)^2]_{nn} + 2n [1]_{nn}."""
    a = alphas(1)
    return (
        diamond(entry(a, n, n), entry(a, n, n))
        - entry(alphas(1, 1), n, n)
        + entry(vacuum().scale(2 * n), n, n)
    )


def check_counterexample(nmax: int = 4) -> list:
    out = []
    for n in range(1, nmax + 1):
        e = counterexample_element(n)
        rep = diagonal_shift_report(e)
        w = rep.shifted.witness
        ones = (1,) * (n - 1)
        factor_ok = (
            w is not None
            and w.column == n - 1
            and w.partition == ones
            and w.image == basis(ones).scale(2)
        )
        ok = rep.original.member and not rep.shifted.member and factor_ok
        out.append(
            _result(
                "counterexample",
                {"n": n},
                ok,
                lambda: f"original member={rep.original.member}, shifted report={rep.shifted.to_dict()}",
            )
        )
    return out


def a1_heis_elements() -> dict:
    """Representatives of x^2 - y, x^2 - y + 2 and their *_1 product."""
    u = alphas(1)
    y = alphas(1, 1)
    f = star_n(u, u, 1) - y
    g = f + vacuum().scale(2)
    return {"f": f, "g": g, "r": star_n(f, g, 1)}


def check_a1_heis() -> list:
    els = a1_heis_elements()
    out = []
    expected = {
        # element -> level -> scalar it acts by on that level
        "f": {0: 0, 1: -2},
        "g": {0: 2, 1: 0},
        "r": {0: 0, 1: 0},
    }
    for name, levels in expected.items():
        for lvl, scalar in levels.items():
            bad = None
            for cls in gr_basis(lvl):
                img = theta_apply(entry(els[name], lvl, lvl), cls)
                if img != cls.scale(scalar):
                    bad = (cls, img)
                    break
            out.append(
                _result(
                    "a1-heis",
                    {"element": name, "level": lvl, "acts_by": scalar},
                    bad is None,
                    lambda: f"class {bad[0]} maps to {bad[1]}",
                )
            )
    return out


# -- homomorphism ---------------------------------------------------------------


def random_uelement(
    rng: random.Random,
    max_index: int = 3,
    max_weight: int = 2,
    max_terms: int = 3,
    columns: Optional[Sequence[int]] = None,
) -> UElement:
    """Random element with coefficients in {-2, -1, 1, 2}; columns drawn from ``columns`` if given."""
    vecs = basis_upto(max_weight)
    elem = UElement._raw({})
    for _ in range(rng.randint(1, max_terms)):
        k = rng.randint(0, max_index)
        l = rng.choice(list(columns)) if columns else rng.randint(0, max_index)
        c = rng.choice([-2, -1, 1, 2])
        elem = elem + entry(basis(rng.choice(vecs)).scale(c), k, l)
    return elem


def check_homomorphism(pairs: int = 50, seed: int = 0, max_index: int = 3, max_level: int = 3) -> list:
    """theta(A <> B) x == theta(A) theta(B) x for seeded random A, B and all classes x."""
    rng = random.Random(seed)
    out = []
    for t in range(pairs):
        b = random_uelement(rng, max_index)
        # A's columns meet B's rows so the product is not trivially zero
        a = random_uelement(rng, max_index, columns=sorted({k for k, _ in b.support()}) or None)
        ab = diamond(a, b)
        bad = None
        for lvl in range(max_level + 1):
            for cls in gr_basis(lvl):
                lhs = theta_apply(ab, cls)
                rhs = theta_apply(a, theta_apply(b, cls))
                if lhs != rhs:
                    bad = (cls, lhs, rhs)
                    break
            if bad:
                break
        out.append(
            _result(
                "homomorphism",
                {"seed": seed, "draw": t, "A": str(a), "B": str(b)},
                bad is None,
                lambda: f"class {bad[0]}: {bad[1]} != {bad[2]}",
            )
        )
    return out


# -- suites --------------------------------------------------------------------

SUITES = {
    "jacobi": check_jacobi,
    "diamond-star": check_diamond_star,
    "mult": lambda: check_prop_mult() + check_prop_mult0(),
    "theorem-main": check_theorem_main,
    "counterexample": check_counterexample,
    "a1-heis": check_a1_heis,
}


def run_suite(name: str) -> list:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key]())
        return out
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}") from None
    return fn()
