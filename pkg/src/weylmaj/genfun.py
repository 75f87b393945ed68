"""Exhaustive signed generating functions and identity verification.

``signed_gf`` sums ``chi(w) q^stat(w)`` over a whole family with the
enumeration kernel.  ``reference_gf`` computes the same sum by walking
:func:`enumerate_family` and calling the statistic functions one window at
a time; it is slow, shares no code with the kernels, and serves as their
oracle in the tests.
"""

from __future__ import annotations

import math
import os
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import kernels
from .groups import GroupFamily, ParityClass, Window
from .involution import iota, is_fixed
from .qpoly import QPoly, formula, neg_q_correction, q_int
from .stats import (
    Character,
    StatisticKind,
    character_value,
    fmaj,
    length,
    length_kind,
    statistic,
)

#: default ceiling on the rank of any enumerated family
DEFAULT_CEILING = 8
#: largest rank reachable with ``allow_large``
LARGE_CEILING = 9
#: identities summing over B_{2n} stop here
B2N_CEILING = 8


def cardinality(fam: GroupFamily, n: int) -> int:
    if fam is GroupFamily.S:
        return math.factorial(n)
    if fam is GroupFamily.B:
        return 2**n * math.factorial(n)
    return 2 ** max(n - 1, 0) * math.factorial(n)


def enumerate_family(fam: GroupFamily, n: int) -> Iterator[Window]:
    """Yield every element of ``fam`` at rank ``n`` once, in lexicographic order."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    values = list(range(-n, 0)) + list(range(1, n + 1))
    if fam is GroupFamily.S:
        values = values[n:]
    prefix: list[int] = []
    used = [False] * (n + 1)

    def rec(neg: int):
        k = len(prefix)
        if k == n:
            yield Window._trusted(prefix)
            return
        last = k == n - 1
        for v in values:
            a = abs(v)
            if used[a]:
                continue
            if last and fam is GroupFamily.DELTA and v < 0:
                continue
            if last and fam is GroupFamily.D and (neg + (v < 0)) % 2:
                continue
            used[a] = True
            prefix.append(v)
            yield from rec(neg + (v < 0))
            prefix.pop()
            used[a] = False

    return rec(0)


# statistic/family compatibility
_VALID_STATS = {
    StatisticKind.LEN_S: {GroupFamily.S},
    StatisticKind.LEN_D: {GroupFamily.S, GroupFamily.D},
    StatisticKind.DMAJ: {GroupFamily.D, GroupFamily.DELTA},
}


@dataclass(frozen=True)
class GfQuery:
    family: GroupFamily
    rank: int
    statistic: StatisticKind
    character: Character = Character.TRIVIAL
    parity: ParityClass = ParityClass.ALL
    #: statistic whose parity ``parity`` filters on; defaults to ``statistic``
    parity_statistic: StatisticKind | None = None

    @property
    def filter_statistic(self) -> StatisticKind:
        return self.parity_statistic or self.statistic

    def validate(self, ceiling: int = DEFAULT_CEILING) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.rank > ceiling:
            raise ValueError(f"rank {self.rank} exceeds the enumeration ceiling {ceiling}")
        for kind in (self.statistic, self.filter_statistic):
            allowed = _VALID_STATS.get(kind)
            if allowed is not None and self.family not in allowed:
                raise ValueError(f"statistic {kind.value} is not defined on family {self.family.value}")

    def kernel_args(self) -> tuple[int, ...]:
        return (
            self.rank,
            kernels.FAMILY_CODES[self.family.value],
            kernels.STAT_CODES[self.statistic.value],
            kernels.CHAR_CODES[self.character.value],
            kernels.STAT_CODES[length_kind(self.family).value],
            kernels.PARITY_CODES[self.parity.value],
            kernels.STAT_CODES[self.filter_statistic.value],
        )


def _partitions(q: GfQuery) -> list[int]:
    n = q.rank
    if q.family is GroupFamily.S:
        return list(range(1, n + 1))
    firsts = list(range(-n, 0)) + list(range(1, n + 1))
    if q.family is GroupFamily.DELTA and n == 1:
        return [1]
    return firsts


def _run_partition(args):
    backend, kargs, first = args
    return kernels.get_accumulate(backend)(*kargs, first)


def _merge(parts) -> list[int]:
    total: list[int] = []
    for p in parts:
        if len(p) > len(total):
            total.extend([0] * (len(p) - len(total)))
        for i, c in enumerate(p):
            total[i] += c
    return total


def signed_gf(
    q: GfQuery,
    *,
    jobs: int = 1,
    backend: str | None = None,
    ceiling: int = DEFAULT_CEILING,
) -> QPoly:
    """``sum chi(w) q^stat(w)`` over the (parity-filtered) family.

    With ``jobs > 1`` the family is split by the first window entry and the
    partial sums are merged; integer addition makes the result independent
    of ``jobs``.
    """
    q.validate(ceiling)
    kargs = q.kernel_args()
    if jobs <= 1 or q.rank < 2:
        return QPoly(kernels.get_accumulate(backend)(*kargs))
    work = [(backend, kargs, f) for f in _partitions(q)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_run_partition, work))
    return QPoly(_merge(parts))


def reference_gf(q: GfQuery) -> QPoly:
    """Window-by-window evaluation of the same sum; the kernels' oracle."""
    q.validate(ceiling=LARGE_CEILING)
    out: dict[int, int] = {}
    fam = q.family
    for w in enumerate_family(fam, q.rank):
        if q.parity is not ParityClass.ALL and not q.parity.admits(statistic(w, q.filter_statistic)):
            continue
        e = statistic(w, q.statistic)
        out[e] = out.get(e, 0) + character_value(w, q.character, fam)
    size = max(out, default=-1) + 1
    return QPoly(out.get(k, 0) for k in range(size))


def default_jobs() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


@dataclass
class VerificationReport:
    identity: str
    rank: int
    brute: QPoly
    closed: QPoly
    elements: int
    seconds: float
    equal: bool = field(init=False)
    first_mismatch: int | None = field(init=False)

    def __post_init__(self):
        self.first_mismatch = self.brute.first_mismatch(self.closed)
        self.equal = self.first_mismatch is None


class _Runner:
    """Evaluates brute-force sums for one verification and counts elements visited."""

    def __init__(self, jobs: int, backend: str | None, ceiling: int):
        self.jobs = jobs
        self.backend = backend
        self.ceiling = ceiling
        self.elements = 0

    def __call__(self, fam, n, stat, chi=Character.TRIVIAL, parity=ParityClass.ALL) -> QPoly:
        self.elements += cardinality(fam, n)
        return signed_gf(
            GfQuery(fam, n, stat, chi, parity),
            jobs=self.jobs,
            backend=self.backend,
            ceiling=self.ceiling,
        )


S, B, D, DELTA = GroupFamily.S, GroupFamily.B, GroupFamily.D, GroupFamily.DELTA
INV, MAJ, FMAJ, DMAJ = StatisticKind.INV, StatisticKind.MAJ, StatisticKind.FMAJ, StatisticKind.DMAJ
LEN_S, LEN_B, LEN_D = StatisticKind.LEN_S, StatisticKind.LEN_B, StatisticKind.LEN_D
TRIVIAL, SIGN = Character.TRIVIAL, Character.SIGN_LENGTH
EVEN, ODD = ParityClass.EVEN, ParityClass.ODD


@dataclass(frozen=True)
class Identity:
    name: str
    brute: Callable[[_Runner, int], QPoly]
    closed: Callable[[_Runner, int], QPoly]
    applies: Callable[[int], bool] = lambda n: n >= 1
    #: the identity sums over B_{2n} and takes the even rank 2n
    doubled: bool = False


def _odd_part_signed(n: int) -> QPoly:
    """``-q - q^3 - ... - q^{n-2}`` for odd ``n``."""
    return QPoly(-1 if k % 2 else 0 for k in range(n - 1))


IDENTITIES: dict[str, Identity] = {
    i.name: i
    for i in [
        Identity("macmahon", lambda g, n: g(S, n, MAJ), lambda g, n: g(S, n, INV)),
        Identity("gessel-simion", lambda g, n: g(S, n, MAJ, SIGN), lambda g, n: formula("gessel-simion", n)),
        Identity("adin-roichman", lambda g, n: g(B, n, FMAJ), lambda g, n: g(B, n, LEN_B)),
        Identity("agr", lambda g, n: g(B, n, FMAJ, SIGN), lambda g, n: formula("agr", n)),
        Identity(
            "b-negparity",
            lambda g, n: g(B, n, FMAJ, Character.NEG_PARITY),
            lambda g, n: formula("b-negparity", n),
        ),
        Identity(
            "b-abssign",
            lambda g, n: g(B, n, FMAJ, Character.ABS_SIGN),
            lambda g, n: formula("b-abssign", n),
        ),
        Identity("bc-dmaj", lambda g, n: g(DELTA, n, DMAJ), lambda g, n: g(D, n, LEN_D)),
        Identity(
            "b2n-recursion",
            lambda g, n: g(B, n, FMAJ, SIGN),
            lambda g, n: formula("b2n-recursion-rhs", n // 2),
            applies=lambda n: n >= 2 and n % 2 == 0,
            doubled=True,
        ),
        Identity(
            "quarto",
            lambda g, n: g(B, n, FMAJ, SIGN, ODD),
            lambda g, n: QPoly.zero(),
            applies=lambda n: n >= 2 and n % 2 == 0,
            doubled=True,
        ),
        Identity(
            "prop-zero",
            lambda g, n: g(B, n, FMAJ, SIGN),
            lambda g, n: g(DELTA, n, DMAJ, SIGN) * (QPoly.one() + QPoly.monomial(n, (-1) ** n)),
        ),
        Identity(
            "delta-even",
            lambda g, n: g(DELTA, n, DMAJ, SIGN),
            lambda g, n: formula("delta-even", n),
            applies=lambda n: n >= 2 and n % 2 == 0,
        ),
        Identity(
            "delta-odd",
            lambda g, n: g(DELTA, n, DMAJ, SIGN),
            lambda g, n: formula("delta-odd", n),
            applies=lambda n: n >= 1 and n % 2 == 1,
        ),
        Identity("primo", lambda g, n: g(DELTA, n, DMAJ, SIGN, EVEN), lambda g, n: g(D, n, DMAJ, SIGN, EVEN)),
        Identity("secondo", lambda g, n: g(DELTA, n, DMAJ, SIGN, ODD), lambda g, n: -g(D, n, DMAJ, SIGN, ODD)),
        Identity(
            "terzo",
            lambda g, n: g(DELTA, n, DMAJ, SIGN, ODD),
            lambda g, n: QPoly.zero(),
            applies=lambda n: n >= 2 and n % 2 == 0,
        ),
        Identity(
            "doppio",
            lambda g, n: g(DELTA, n, DMAJ, SIGN, ODD),
            lambda g, n: formula("agr", n - 1) * _odd_part_signed(n),
            applies=lambda n: n >= 1 and n % 2 == 1,
        ),
        Identity(
            "signed-mahonian-d",
            lambda g, n: g(D, n, DMAJ, SIGN),
            lambda g, n: formula("signed-mahonian-d", n),
        ),
        Identity("poincare-s", lambda g, n: g(S, n, LEN_S), lambda g, n: formula("poincare-s", n)),
        Identity("poincare-b", lambda g, n: g(B, n, LEN_B), lambda g, n: formula("poincare-b", n)),
        Identity("poincare-d", lambda g, n: g(D, n, LEN_D), lambda g, n: formula("poincare-d", n)),
    ]
}

IDENTITY_NAMES = tuple(IDENTITIES)


def applies(name: str, n: int) -> bool:
    return _lookup(name).applies(n)


def _lookup(name: str) -> Identity:
    try:
        return IDENTITIES[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}") from None


def verify(
    name: str,
    n: int,
    *,
    jobs: int = 1,
    backend: str | None = None,
    allow_large: bool = False,
) -> VerificationReport:
    ident = _lookup(name)
    if not ident.applies(n):
        raise ValueError(f"identity {name} does not apply at rank {n}")
    ceiling = LARGE_CEILING if allow_large else DEFAULT_CEILING
    if ident.doubled:
        ceiling = min(ceiling, B2N_CEILING)
    if n > ceiling:
        raise ValueError(f"rank {n} exceeds the enumeration ceiling {ceiling}")
    run = _Runner(jobs, backend, ceiling)
    t0 = time.perf_counter()
    brute = ident.brute(run, n)
    closed = ident.closed(run, n)
    return VerificationReport(name, n, brute, closed, run.elements, time.perf_counter() - t0)


def odd_proof_chain(n: int, *, jobs: int = 1, backend: str | None = None) -> list[VerificationReport]:
    """Check each step of the odd-rank derivation of the type D formula.

    Steps: the Delta_n sum factors through B_{n-1}; the B_{n-1} sum has only
    even exponents; the Delta_n^1 part equals the B_{n-1} sum times
    ``-q - q^3 - ... - q^{n-2}``; and the D_n sum equals the B_{n-1} sum times
    ``[n]_{-q} + ([n]_q - [n]_{-q}) = [n]_q``.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("the odd-rank chain needs an odd rank")
    run = _Runner(jobs, backend, DEFAULT_CEILING)
    t0 = time.perf_counter()
    b_prev = run(B, n - 1, FMAJ, SIGN)
    delta = run(DELTA, n, DMAJ, SIGN)
    delta1 = run(DELTA, n, DMAJ, SIGN, ODD)
    d_sum = run(D, n, DMAJ, SIGN)
    dt = time.perf_counter() - t0
    even_part = QPoly(c if k % 2 == 0 else 0 for k, c in enumerate(b_prev.coeffs))
    correction = neg_q_correction(n)
    return [
        VerificationReport("odd-chain-rhs", n, delta, b_prev * q_int(n, -1), run.elements, dt),
        VerificationReport("odd-chain-even-support", n, b_prev, even_part, run.elements, dt),
        VerificationReport("odd-chain-doppio", n, delta1, b_prev * _odd_part_signed(n), run.elements, dt),
        VerificationReport(
            "odd-chain-assembly", n, d_sum, b_prev * (q_int(n, -1) + correction), run.elements, dt
        ),
        VerificationReport("odd-chain-correction", n, correction, q_int(n, 1) - q_int(n, -1), 0, 0.0),
    ]


@dataclass
class PairCensus:
    rank: int
    elements: int
    fixed_points: list[Window]
    two_orbits: int
    #: 2-orbits whose members differ in fmaj or agree in B_n length parity
    bad_orbits: int
    #: signed fmaj sum over all 2-orbit members; zero when every orbit cancels
    orbit_sum: QPoly


def pair_census(n: int) -> PairCensus:
    """Split B_n into iota-orbits and check that every 2-orbit cancels."""
    fixed: list[Window] = []
    two = bad = 0
    acc: dict[int, int] = {}
    count = 0
    for w in enumerate_family(B, n):
        count += 1
        if is_fixed(w):
            fixed.append(w)
            continue
        v = iota(w)
        f, sgn = fmaj(w), -1 if length(w, B) % 2 else 1
        acc[f] = acc.get(f, 0) + sgn
        if w < v:
            two += 1
            if fmaj(v) != f or length(v, B) % 2 == length(w, B) % 2:
                bad += 1
    size = max(acc, default=-1) + 1
    return PairCensus(n, count, fixed, two, bad, QPoly(acc.get(k, 0) for k in range(size)))
