import itertools

import pytest

from conftest import all_signed
from weylmaj.groups import GroupFamily, identity, make_window
from weylmaj.involution import (
    BarredWindow,
    barred_stats,
    expanded_stats,
    format_barred,
    from_barred,
    iota,
    is_fixed,
    parse_barred,
    to_barred,
)
from weylmaj.stats import OrderConvention, descent_set, dmaj, fmaj, inv, length, maj, neg_stats

B = GroupFamily.B
FIXED = make_window([-3, -4, 1, 2, -6, -5])
MOVED = make_window([2, 6, 5, -4, -3, 1])
FIXED_BARRED = BarredWindow(make_window([-2, 1, -3]), frozenset({3}))


def all_barred(n):
    for w in all_signed(n):
        for r in range(n + 1):
            for bars in itertools.combinations(range(1, n + 1), r):
                yield BarredWindow(w, frozenset(bars))


def test_iota_examples():
    assert iota(FIXED) == FIXED
    assert iota(MOVED) == make_window([1, 6, 5, -4, -3, 2])
    assert iota(identity(2)) == identity(2)


def test_is_fixed_examples():
    assert is_fixed(FIXED)
    assert not is_fixed(MOVED)
    for n in range(0, 6):
        assert is_fixed(identity(2 * n))


def test_odd_rank_ignores_last_letter():
    assert is_fixed(make_window([1, 2, -3]))
    assert is_fixed(make_window([-3, 2, 1]))
    assert not is_fixed(make_window([1, -3, 2]))


def test_codec_examples():
    assert to_barred(FIXED) == FIXED_BARRED
    assert to_barred(identity(6)) == BarredWindow(identity(3), frozenset())
    assert to_barred(make_window([2, 1, 4, 3])) == BarredWindow(identity(2), frozenset({1, 2}))
    assert from_barred(FIXED_BARRED) == FIXED
    assert from_barred(BarredWindow(identity(3))) == identity(6)
    assert from_barred(BarredWindow(identity(2), frozenset({1, 2}))) == make_window([2, 1, 4, 3])


def test_codec_rejects_non_fixed_and_odd_rank():
    with pytest.raises(ValueError):
        to_barred(MOVED)
    with pytest.raises(ValueError):
        to_barred(identity(3))


def test_barred_text_format():
    assert format_barred(FIXED_BARRED) == "-2,1,-3~"
    assert parse_barred("-2,1,-3~") == FIXED_BARRED
    with pytest.raises(ValueError):
        parse_barred("1,~")


def test_barred_stats_worked_example():
    st = barred_stats(FIXED_BARRED)
    assert st.maj == 2
    assert st.n1 == 2
    assert st.inv == 2
    assert st.bars_plus == frozenset() and st.bars_minus == {3}
    # 2*maj + N1 = 6; a value of 5 for this barred window is a misprint
    assert st.fmaj == 6
    w = from_barred(FIXED_BARRED)
    assert maj(w, OrderConvention.BORDER) == 9 == 2 * 2 + 5
    assert inv(w) == 9
    _, n1, n2 = neg_stats(w)
    assert n1 + n2 == 18
    assert fmaj(w) == 22


def test_barred_stats_identity_and_reversed_pairs():
    st = barred_stats(BarredWindow(identity(3)))
    assert (st.maj, st.inv, st.n1, st.fmaj) == (0, 0, 0, 0)
    b = BarredWindow(identity(2), frozenset({1, 2}))
    assert barred_stats(b).maj == 0
    w = from_barred(b)
    assert descent_set(w, OrderConvention.BORDER) == {1, 3}
    assert fmaj(w) == 8


@pytest.mark.parametrize("n", range(1, 7))
def test_iota_exhaustive(n):
    for w in all_signed(n):
        v = iota(w)
        assert iota(v) == w
        if v == w:
            continue
        assert fmaj(v) == fmaj(w)
        assert descent_set(v, OrderConvention.BORDER) == descent_set(w, OrderConvention.BORDER)
        assert neg_stats(v)[1] == neg_stats(w)[1]
        assert (length(v, B) - length(w, B)) % 2 == 1


@pytest.mark.parametrize("n", range(1, 4))
def test_fixed_points_of_even_rank_match_codec(n):
    from math import factorial

    fixed = {w for w in all_signed(2 * n) if is_fixed(w)}
    assert len(fixed) == 4**n * factorial(n)
    assert {from_barred(b) for b in all_barred(n)} == fixed
    assert all(from_barred(to_barred(w)) == w for w in fixed)


@pytest.mark.parametrize("n", range(1, 5))
def test_codec_bijection_and_barred_identities(n):
    seen = set()
    for b in all_barred(n):
        w = from_barred(b)
        assert is_fixed(w)
        assert to_barred(w) == b
        seen.add(w)
        e = expanded_stats(b)
        _, n1, n2 = neg_stats(w)
        assert descent_set(w, OrderConvention.BORDER) == e["des"]
        assert maj(w, OrderConvention.BORDER) == e["maj"]
        assert inv(w) == e["inv"]
        assert n1 + n2 == e["n1_plus_n2"]
        assert n1 == e["n1"]
        assert fmaj(w) == e["fmaj"]
        assert length(w, B) % 2 == e["len_b_parity"]
        # fixed points never have odd fmaj
        assert fmaj(w) % 2 == 0
    assert len(seen) == 2**n * len(list(itertools.permutations(range(n)))) * 2**n


@pytest.mark.parametrize("n", [2, 4, 6])
def test_iota_on_odd_dmaj_delta_has_no_fixed_points(n):
    for w in all_signed(n):
        if w[-1] < 0 or dmaj(w) % 2 == 0:
            continue
        assert not is_fixed(w)
        v = iota(w)
        assert v[-1] > 0
        assert dmaj(v) == dmaj(w)
        assert (length(v, B) - length(w, B)) % 2 == 1


@pytest.mark.parametrize("n", [1, 3, 5])
def test_odd_rank_fixed_points_put_last_letter_in_odd_position(n):
    for w in all_signed(n):
        if is_fixed(w):
            pos = [abs(x) for x in w].index(n) + 1
            assert pos % 2 == 1
