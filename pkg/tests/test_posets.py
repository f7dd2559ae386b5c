import itertools

import pytest
from hypothesis import given, strategies as st

from unimodal_chains import posets


def small_compositions():
    return st.integers(0, 4).flatmap(
        lambda n: st.lists(st.integers(0, 4), min_size=n + 1, max_size=n + 1)
    ).map(tuple)


def small_partitions():
    return st.lists(st.integers(0, 4), min_size=0, max_size=5).map(
        lambda xs: tuple(sorted(xs))
    )


def test_parse_format_round_trip():
    assert posets.parse_composition("[2,0,1,0,0,2]") == (2, 0, 1, 0, 0, 2)
    assert posets.parse_composition("[]") == ()
    assert posets.format_composition((1, 0, 1)) == "[1,0,1]"
    with pytest.raises(ValueError):
        posets.parse_composition("2,0,1")
    with pytest.raises(ValueError):
        posets.parse_composition("[1,-2]")


def test_to_counts_examples():
    assert posets.to_counts((0, 1, 1, 3), 3) == (1, 2, 0, 1)
    assert posets.to_counts((), 2) == (0, 0, 0)
    assert posets.to_counts((2, 2), 2) == (0, 0, 2)


def test_from_counts_examples():
    assert posets.from_counts((1, 2, 0, 1)) == (0, 1, 1, 3)
    assert posets.from_counts((3,)) == (0, 0, 0)
    assert posets.from_counts((0, 0, 2)) == (2, 2)


def test_counts_rank_preserved():
    comp = posets.to_counts((0, 1, 1, 3), 3)
    assert posets.rank(comp) == sum((0, 1, 1, 3))


@given(small_partitions(), st.integers(0, 6))
def test_counts_round_trip(parts, extra):
    bound = (parts[-1] if parts else 0) + extra
    comp = posets.to_counts(parts, bound)
    assert sum(comp) == len(parts)
    assert posets.from_counts(comp) == parts


def test_conjugate_examples():
    assert posets.conjugate((0, 1, 1, 3), 3) == (1, 1, 3)
    assert posets.conjugate((), 3) == (0, 0, 0)
    assert posets.conjugate((2, 2), 2) == (2, 2)


@given(small_partitions(), st.integers(0, 6))
def test_conjugate_involution(parts, extra):
    bound = (parts[-1] if parts else 0) + extra
    other = posets.conjugate(parts, bound)
    assert posets.conjugate(other, len(parts)) == parts


def test_gaps_examples():
    assert posets.to_gaps((1, 1, 3), 4) == (1, 2, 0, 1)
    assert posets.to_gaps((0, 0, 0), 5) == (5, 0, 0, 0)
    assert posets.to_gaps((1, 1), 2) == (1, 0, 1)
    assert posets.from_gaps((1, 2, 0, 1)) == (1, 1, 3)
    assert posets.from_gaps((7,)) == ()


def test_gaps_equal_counts_of_conjugate():
    # commuting triangle of encodings, exhaustively on a small box
    for parts in itertools.combinations_with_replacement(range(5), 3):
        assert posets.to_gaps(parts, 4) == posets.to_counts(
            posets.conjugate(parts, 4), 3
        )


def test_flip_examples():
    assert posets.flip((2, 0, 1, 0, 0, 2)) == (2, 0, 0, 1, 0, 2)
    assert posets.flip((3, 0, 0)) == (0, 0, 3)
    assert posets.flip((1, 0, 1)) == (1, 0, 1)


@given(small_compositions())
def test_flip_involution_and_weight(comp):
    assert posets.flip(posets.flip(comp)) == comp
    assert posets.weight(posets.flip(comp)) == -posets.weight(comp)


def test_rank_weight_examples():
    assert posets.rank((2, 0, 0)) == 0
    assert posets.rank((0, 0, 2)) == 4
    assert posets.rank((1, 2, 0, 1)) == 5
    assert posets.weight((2, 0, 0)) == 4
    assert posets.weight((0, 2, 0)) == 0
    assert posets.weight((0, 0, 2)) == -4


def test_weight_parity():
    for comp in posets.enumerate_compositions(3, 4):
        assert (posets.weight(comp) - 12) % 2 == 0


def test_leq_examples():
    assert posets.leq((2, 0, 0), (0, 0, 2))
    assert posets.leq((1, 0, 1), (1, 0, 1))
    assert not posets.leq((1, 0, 1), (0, 2, 0))
    assert not posets.leq((0, 2, 0), (1, 0, 1))
    with pytest.raises(ValueError):
        posets.leq((1, 0), (1, 0, 0))


def test_leq_matches_componentwise_partition_order():
    elements = list(posets.enumerate_compositions(3, 3))
    for x, y in itertools.product(elements, repeat=2):
        direct = all(
            a <= b for a, b in zip(posets.from_counts(x), posets.from_counts(y))
        )
        assert posets.leq(x, y) == direct


def test_leq_flip_anti_automorphism():
    elements = list(posets.enumerate_compositions(3, 3))
    for x, y in itertools.product(elements, repeat=2):
        assert posets.leq(x, y) == posets.leq(posets.flip(y), posets.flip(x))


def test_cover_color_examples():
    assert posets.cover_color((2, 0, 0), (1, 1, 0)) == 1
    assert posets.cover_color((0, 2, 0), (0, 1, 1)) == 2
    assert posets.cover_color((2, 0, 0), (0, 2, 0)) is None
    assert posets.cover_color((1, 1, 0), (2, 0, 0)) is None
    with pytest.raises(ValueError):
        posets.cover_color((1, 0), (1, 0, 0))


def test_covers_are_rank_one_comparable_pairs():
    elements = list(posets.enumerate_compositions(2, 3))
    for x, y in itertools.product(elements, repeat=2):
        c = posets.cover_color(x, y)
        if c is not None:
            assert posets.rank(y) == posets.rank(x) + 1
            assert posets.leq(x, y)
            assert posets.apply_color_down(x, c) == y


def test_upper_lower_covers_agree():
    for comp in posets.enumerate_compositions(3, 3):
        for color, up in posets.upper_covers(comp):
            assert posets.cover_color(comp, up) == color
            assert (color, comp) in posets.lower_covers(up)


def test_enumerate_counts():
    assert len(list(posets.enumerate_compositions(2, 2))) == 6
    assert list(posets.enumerate_compositions(0, 5)) == [(5,)]
    assert list(posets.enumerate_compositions(-1, 0)) == [()]
    for n, m in [(3, 4), (4, 3), (5, 2), (2, 0)]:
        got = list(posets.enumerate_compositions(n, m))
        assert len(got) == posets.count_compositions(n, m)
        assert len(set(got)) == len(got)
        assert all(sum(c) == m and len(c) == n + 1 for c in got)


def test_enumerate_lexicographic():
    got = list(posets.enumerate_compositions(2, 2))
    assert got == sorted(got)
    assert got[0] == (0, 0, 2) and got[-1] == (2, 0, 0)


def test_enumerate_errors():
    with pytest.raises(ValueError):
        list(posets.enumerate_compositions(-1, 1))
    with pytest.raises(ValueError):
        list(posets.enumerate_compositions(-2, 0))
    with pytest.raises(posets.ResourceGuardError):
        list(posets.enumerate_compositions(2**20, 2**20))
