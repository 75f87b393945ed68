"""Signed Mahonian polynomials for the classical Weyl groups S_n, B_n and D_n."""

from .genfun import GfQuery, VerificationReport, enumerate_family, pair_census, signed_gf, verify
from .groups import (
    GroupFamily,
    ParityClass,
    Window,
    compose,
    identity,
    inverse,
    is_member,
    make_window,
    negate,
    parse_window,
    phi,
    phi_inverse,
    swap_values,
)
from .involution import BarredWindow, barred_stats, from_barred, iota, is_fixed, to_barred
from .kernels import BACKEND
from .qpoly import QPoly, formula, neg_q_correction, q_int, substitute_neg_q
from .stats import (
    Character,
    OrderConvention,
    StatisticKind,
    character_value,
    descent_set,
    dmaj,
    fmaj,
    inv,
    length,
    maj,
    neg_stats,
)

__version__ = "0.1.0"
