"""The pairing involution on B_n and the barred encoding of its fixed points.

``iota`` looks at the letter pairs {1,2}, {3,4}, ...  A pair is *good* when
its two letters sit in adjacent window positions (either order) and carry
the same sign.  ``iota`` swaps the values of the first bad pair, and fixes
``w`` when every pair is good.  Swapping the values of one pair changes the
B_n length by one while keeping the flag descent set and the negative count,
so non-fixed points cancel in pairs in any signed fmaj sum.

For even rank 2n a fixed point is a sequence of n adjacent blocks, one per
pair.  Collapsing block ``(+-(2i-1), +-2i)`` to ``+-i`` and the reversed block
``(+-2i, +-(2i-1))`` to a barred ``+-i`` gives a barred signed permutation of
rank n, and this is a bijection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Window, make_window, swap_values
from .stats import OrderConvention, descent_set, fmaj, inv, neg_stats


def _first_bad_pair(w) -> int:
    """Smallest ``i`` whose letters ``2i-1, 2i`` are not an adjacent same-sign block; 0 if none."""
    pos = [0] * (len(w) + 1)
    for p, x in enumerate(w):
        pos[abs(x)] = p
    for i in range(1, len(w) // 2 + 1):
        pa, pb = pos[2 * i - 1], pos[2 * i]
        if abs(pa - pb) != 1 or (w[pa] > 0) != (w[pb] > 0):
            return i
    return 0


def iota(w: Window) -> Window:
    i = _first_bad_pair(w)
    if i == 0:
        return w
    return swap_values(w, 2 * i - 1)


def is_fixed(w: Window) -> bool:
    return _first_bad_pair(w) == 0


@dataclass(frozen=True)
class BarredWindow:
    entries: Window
    bars: frozenset[int] = frozenset()

    def __post_init__(self):
        if not isinstance(self.entries, Window):
            object.__setattr__(self, "entries", make_window(self.entries))
        bars = frozenset(self.bars)
        if any(not 1 <= b <= len(self.entries) for b in bars):
            raise ValueError(f"bar positions {sorted(bars)} out of range")
        object.__setattr__(self, "bars", bars)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def bars_plus(self) -> frozenset[int]:
        return frozenset(p for p in self.bars if self.entries[p - 1] > 0)

    @property
    def bars_minus(self) -> frozenset[int]:
        return frozenset(p for p in self.bars if self.entries[p - 1] < 0)

    def __str__(self) -> str:
        return format_barred(self)


def format_barred(b: BarredWindow) -> str:
    return ",".join(f"{x}~" if p in b.bars else str(x) for p, x in enumerate(b.entries, start=1))


def parse_barred(text: str) -> BarredWindow:
    """Parse ``"-2,1,-3~"``; a trailing ``~`` marks a barred entry."""
    body = text.strip().strip("[]()").strip()
    if not body:
        return BarredWindow(Window(()))
    entries, bars = [], set()
    for p, tok in enumerate(body.split(","), start=1):
        tok = tok.strip()
        if tok.endswith("~"):
            bars.add(p)
            tok = tok[:-1]
        try:
            entries.append(int(tok))
        except ValueError:
            raise ValueError(f"cannot parse barred window {text!r}") from None
    return BarredWindow(make_window(entries), frozenset(bars))


def to_barred(w: Window) -> BarredWindow:
    if len(w) % 2:
        raise ValueError("the barred encoding needs an even rank")
    if not is_fixed(w):
        raise ValueError(f"{w} is not a fixed point of iota")
    entries, bars = [], set()
    for k in range(len(w) // 2):
        x = w[2 * k]
        a = abs(x)
        i = (a + 1) // 2
        entries.append(i if x > 0 else -i)
        if a % 2 == 0:
            bars.add(k + 1)
    return BarredWindow(Window._trusted(entries), frozenset(bars))


def from_barred(b: BarredWindow) -> Window:
    out = []
    for p, x in enumerate(b.entries, start=1):
        i = abs(x)
        s = 1 if x > 0 else -1
        lo, hi = s * (2 * i - 1), s * 2 * i
        out.extend((hi, lo) if p in b.bars else (lo, hi))
    return Window._trusted(out)


@dataclass(frozen=True)
class BarredStats:
    maj: int
    des: frozenset[int]
    inv: int
    n1: int
    bars: frozenset[int]
    bars_plus: frozenset[int]
    bars_minus: frozenset[int]
    #: fmaj of the underlying window, bars ignored
    fmaj: int


def barred_stats(b: BarredWindow) -> BarredStats:
    """Statistics of the underlying window (bars ignored) plus the bar bookkeeping.

    Descents use the flag order, inversions the usual order.
    """
    des = frozenset(descent_set(b.entries, OrderConvention.BORDER))
    return BarredStats(
        maj=sum(des),
        des=des,
        inv=inv(b.entries),
        n1=neg_stats(b.entries)[1],
        bars=b.bars,
        bars_plus=b.bars_plus,
        bars_minus=b.bars_minus,
        fmaj=fmaj(b.entries),
    )


def expanded_stats(b: BarredWindow) -> dict[str, object]:
    """Statistics of ``from_barred(b)`` computed only from ``b``'s own data."""
    st = barred_stats(b)
    neg_values = [x for x in b.entries if x < 0]
    return {
        "des": frozenset({2 * i for i in st.des} | {2 * i - 1 for i in st.bars}),
        "maj": 2 * st.maj + sum(2 * i - 1 for i in st.bars),
        "inv": 4 * st.inv + len(st.bars_plus) + (st.n1 - len(st.bars_minus)),
        "n1_plus_n2": -sum(4 * x + 1 for x in neg_values),
        "n1": 2 * st.n1,
        "fmaj": 4 * st.maj + sum(4 * i - 2 for i in st.bars) + 2 * st.n1,
        "len_b_parity": len(st.bars) % 2,
    }
