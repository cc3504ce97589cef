"""Exact computations in the matrix algebra U^infty(V) over the rank-one Heisenberg VOA."""

from .exact import LambdaPoly, binom, partitions_of
from .fock import (
    FockVector,
    alpha_apply,
    alphas,
    basis,
    l_minus_one,
    l_zero,
    mode,
    res_kernel,
    vacuum,
    weight_split,
)
from .grmod import GrVector, gr_basis, gr_class, theta_apply
from .oracle import MembershipReport, ShiftReport, diagonal_shift_report, in_qinf
from .parse import ParseError, parse_element
from .uinf import (
    ShiftError,
    UElement,
    circ_n,
    diamond,
    entry,
    j_gen,
    l_gen,
    o_infty_gen,
    o_n_span,
    shift_diag,
    star_n,
)

__version__ = "0.1.0"
