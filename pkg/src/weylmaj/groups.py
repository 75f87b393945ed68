"""Signed permutations in window notation.

A signed permutation of rank ``n`` is stored as the tuple of its values on
``1..n``; the value on ``-i`` is implied by ``w(-i) = -w(i)``.  The same type
carries elements of S_n (all entries positive), B_n, D_n and the subset
Delta_n of B_n whose last entry is positive.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable


class GroupFamily(enum.Enum):
    S = "s"
    B = "b"
    D = "d"
    DELTA = "delta"


class ParityClass(enum.Enum):
    ALL = "all"
    EVEN = "even"
    ODD = "odd"

    def admits(self, value: int) -> bool:
        if self is ParityClass.ALL:
            return True
        return (value % 2 == 0) == (self is ParityClass.EVEN)


class Window(tuple):
    """An immutable signed permutation ``[w_1, ..., w_n]``.

    Construct through :func:`make_window` (validating) or ``Window(seq)``
    which validates as well.  ``Window._trusted`` skips validation and is
    meant for enumeration code that already guarantees the invariants.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        _validate(self)
        return self

    @classmethod
    def _trusted(cls, entries: Iterable[int]) -> "Window":
        return tuple.__new__(cls, entries)

    @property
    def rank(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Window([{', '.join(map(str, self))}])"

    def __str__(self) -> str:
        return format_window(self)


def _validate(entries: tuple) -> None:
    n = len(entries)
    seen = set()
    for x in entries:
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"window entries must be integers, got {x!r}")
        if x == 0:
            raise ValueError("window entries must be nonzero")
        a = abs(x)
        if a > n:
            raise ValueError(f"|{x}| exceeds the rank {n}")
        if a in seen:
            raise ValueError(f"absolute value {a} repeated")
        seen.add(a)


def make_window(entries: Iterable[int]) -> Window:
    return Window(tuple(entries))


def identity(n: int) -> Window:
    return Window._trusted(range(1, n + 1))


_BRACKETS = re.compile(r"^\s*[\[(]?(.*?)[\])]?\s*$", re.S)


def parse_window(text: str) -> Window:
    """Parse ``"2,-5,-3,-1,4"``; surrounding brackets and whitespace are allowed."""
    body = _BRACKETS.match(text).group(1).strip()
    if not body:
        return Window(())
    try:
        values = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse window {text!r}") from None
    return make_window(values)


def format_window(w: Iterable[int]) -> str:
    return ",".join(str(x) for x in w)


def _apply(w: Window, i: int) -> int:
    return w[i - 1] if i > 0 else -w[-i - 1]


def compose(a: Window, b: Window) -> Window:
    """Return ``a o b``, i.e. ``(a o b)(i) = a(b(i))``."""
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {len(a)} != {len(b)}")
    return Window._trusted(_apply(a, x) for x in b)


def inverse(w: Window) -> Window:
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[abs(x) - 1] = i if x > 0 else -i
    return Window._trusted(out)


def negate(w: Window) -> Window:
    return Window._trusted(-x for x in w)


def n_neg(w: Iterable[int]) -> int:
    return sum(1 for x in w if x < 0)


def is_member(w: Window, fam: GroupFamily) -> bool:
    if fam is GroupFamily.B:
        return True
    if fam is GroupFamily.S:
        return all(x > 0 for x in w)
    if fam is GroupFamily.D:
        return n_neg(w) % 2 == 0
    if fam is GroupFamily.DELTA:
        return len(w) == 0 or w[-1] > 0
    raise ValueError(f"unknown family {fam!r}")


def phi(gamma: Window) -> Window:
    """The bijection D_n -> Delta_n replacing the last entry by its absolute value."""
    if not is_member(gamma, GroupFamily.D):
        raise ValueError(f"{gamma} is not in D_{len(gamma)}")
    if not gamma:
        return gamma
    return Window._trusted(gamma[:-1] + (abs(gamma[-1]),))


def phi_inverse(beta: Window) -> Window:
    if not is_member(beta, GroupFamily.DELTA):
        raise ValueError(f"{beta} is not in Delta_{len(beta)}")
    if n_neg(beta) % 2 == 0:
        return beta
    return Window._trusted(beta[:-1] + (-beta[-1],))


def swap_values(w: Window, i: int) -> Window:
    """Left-multiply by the transposition of values ``i`` and ``i+1``.

    Signs and positions are kept; only the absolute values ``i`` and ``i+1``
    trade places.
    """
    n = len(w)
    if not 1 <= i < n:
        raise ValueError(f"swap index {i} out of range for rank {n}")
    j = i + 1

    def sw(x: int) -> int:
        a = abs(x)
        if a == i:
            return j if x > 0 else -j
        if a == j:
            return i if x > 0 else -i
        return x

    return Window._trusted(sw(x) for x in w)
