"""Permutation statistics and one-dimensional characters on windows."""

from __future__ import annotations

import enum
from collections.abc import Sequence

from .groups import GroupFamily, is_member, n_neg


class OrderConvention(enum.Enum):
    #: the usual order on the integers
    NATURAL = "natural"
    #: -1 < -2 < ... < -n < 0 < 1 < 2 < ...
    BORDER = "border"


class Character(enum.Enum):
    TRIVIAL = "trivial"
    SIGN_LENGTH = "sign"
    NEG_PARITY = "negparity"
    ABS_SIGN = "abssign"


class StatisticKind(enum.Enum):
    INV = "inv"
    MAJ = "maj"
    FMAJ = "fmaj"
    DMAJ = "dmaj"
    LEN_S = "len-s"
    LEN_B = "len-b"
    LEN_D = "len-d"


def border_key(x: int, n: int) -> int:
    """A strictly monotone integer realisation of the flag order on ``[-n, n]``."""
    return x if x >= 0 else -(n + 1) - x


def inv(w: Sequence[int]) -> int:
    """Number of pairs ``i < j`` with ``w_i > w_j`` in the usual integer order."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descent_set(w: Sequence[int], order: OrderConvention) -> set[int]:
    if order is OrderConvention.NATURAL:
        k = list(w)
    else:
        n = len(w)
        k = [border_key(x, n) for x in w]
    return {i + 1 for i in range(len(k) - 1) if k[i] > k[i + 1]}


def maj(w: Sequence[int], order: OrderConvention) -> int:
    return sum(descent_set(w, order))


def neg_stats(w: Sequence[int]) -> tuple[set[int], int, int]:
    """Return ``(Neg, N1, N2)``.

    ``Neg`` holds the (1-based) positions of negative entries and ``N2`` counts
    unordered position pairs whose entries sum to a negative number.
    """
    neg = {i + 1 for i, x in enumerate(w) if x < 0}
    n = len(w)
    n2 = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
    return neg, len(neg), n2


def length(w: Sequence[int], fam: GroupFamily) -> int:
    """Coxeter length of ``w`` in ``fam``.

    Delta_n is not a subgroup; its elements are measured with the B_n length.
    """
    if not is_member(w, fam):
        raise ValueError(f"{list(w)} is not a member of {fam.name}")
    if fam is GroupFamily.S:
        return inv(w)
    _, n1, n2 = neg_stats(w)
    if fam is GroupFamily.D:
        return inv(w) + n2
    return inv(w) + n1 + n2


def fmaj(w: Sequence[int]) -> int:
    return 2 * maj(w, OrderConvention.BORDER) + n_neg(w)


def dmaj(w: Sequence[int]) -> int:
    """D-major index of an element of D_n or Delta_n.

    Both readings agree: an element lying in both families has a positive
    last entry, so the absolute-value projection leaves it unchanged.
    """
    if not w:
        return 0
    if w[-1] > 0:
        return fmaj(w)
    if n_neg(w) % 2 == 0:
        return fmaj(tuple(w[:-1]) + (-w[-1],))
    raise ValueError(f"{list(w)} lies in neither D_n nor Delta_n")


_LENGTH_STAT = {
    GroupFamily.S: StatisticKind.LEN_S,
    GroupFamily.B: StatisticKind.LEN_B,
    GroupFamily.D: StatisticKind.LEN_D,
    GroupFamily.DELTA: StatisticKind.LEN_B,
}


def length_kind(fam: GroupFamily) -> StatisticKind:
    """The length statistic that the sign character uses on ``fam``."""
    return _LENGTH_STAT[fam]


def statistic(w: Sequence[int], kind: StatisticKind) -> int:
    if kind is StatisticKind.INV:
        return inv(w)
    if kind is StatisticKind.MAJ:
        return maj(w, OrderConvention.NATURAL)
    if kind is StatisticKind.FMAJ:
        return fmaj(w)
    if kind is StatisticKind.DMAJ:
        return dmaj(w)
    if kind is StatisticKind.LEN_S:
        return length(w, GroupFamily.S)
    if kind is StatisticKind.LEN_B:
        return length(w, GroupFamily.B)
    if kind is StatisticKind.LEN_D:
        return length(w, GroupFamily.D)
    raise ValueError(f"unknown statistic {kind!r}")


def character_value(w: Sequence[int], chi: Character, fam: GroupFamily = GroupFamily.B) -> int:
    if chi is Character.TRIVIAL:
        return 1
    if chi is Character.SIGN_LENGTH:
        return -1 if length(w, fam) % 2 else 1
    if chi is Character.NEG_PARITY:
        return -1 if n_neg(w) % 2 else 1
    if chi is Character.ABS_SIGN:
        return -1 if inv([abs(x) for x in w]) % 2 else 1
    raise ValueError(f"unknown character {chi!r}")
