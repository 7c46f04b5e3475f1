import itertools

import pytest
from hypothesis import given

from permsquares.classify import ParityClass, class_label, parity_class
from permsquares.maps import (
    MapError,
    Relabeling,
    add_and_swap,
    add_and_swap_inverse,
    join_type3,
    parity_toggle,
    relabel,
    split_type3,
)
from permsquares.perm_core import cycle_type, identity, parse_cycles
from permsquares.squares import is_perfect_square, is_square_permutation

from conftest import perms, permutations_st

W = parse_cycles("(1,2)(3,4,5,6)", 6)


@pytest.mark.parametrize(
    "i, expected",
    [
        (1, "(7,2)(3,4,5,6)(1)"),
        (2, "(1,7)(3,4,5,6)(2)"),
        (3, "(1,2)(7,4,5,6)(3)"),
        (4, "(1,2)(3,7,5,6)(4)"),
        (7, "(1,2)(3,4,5,6)(7)"),
    ],
)
def test_add_and_swap_worked_example(i, expected):
    v = add_and_swap(W, i)
    assert v == parse_cycles(expected, 7)
    assert add_and_swap_inverse(v) == (W, i)


def test_add_and_swap_preconditions():
    with pytest.raises(MapError):
        add_and_swap(parse_cycles("(1,2)", 3), 1)
    with pytest.raises(MapError):
        add_and_swap(W, 8)
    with pytest.raises(MapError):
        add_and_swap(W, 0)
    with pytest.raises(MapError):
        add_and_swap_inverse(identity(3))
    with pytest.raises(MapError):
        add_and_swap_inverse(parse_cycles("(1,2,3)", 3))


def fixed_point_free(m):
    return [w for w in perms(m) if all(w(i) != i for i in range(1, m + 1))]


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_add_and_swap_injective_globally(m):
    sources = fixed_point_free(m)
    images = {}
    for w in sources:
        per_w = {add_and_swap(w, i) for i in range(1, m + 2)}
        assert len(per_w) == m + 1
        for i in range(1, m + 2):
            v = add_and_swap(w, i)
            assert v not in images
            images[v] = (w, i)
            assert add_and_swap_inverse(v) == (w, i)
            fixed = [x for x in range(1, m + 2) if v(x) == x]
            assert fixed == [i]


@pytest.mark.parametrize("m", [2, 4, 6])
def test_add_and_swap_keeps_label_and_square_flag(m):
    for w in fixed_point_free(m):
        lab, sq = class_label(cycle_type(w)), is_square_permutation(w)
        for i in range(1, m + 2):
            v = add_and_swap(w, i)
            assert class_label(cycle_type(v)) == lab
            assert is_square_permutation(v) == sq


def test_split_worked_example():
    s = split_type3(parse_cycles("(1,2)(3,4)(5,6,7)", 7))
    assert s.odd_support == {5, 6, 7}
    assert s.even_part == parse_cycles("(1,2)(3,4)", 4)
    assert s.odd_part == parse_cycles("(1,2,3)", 3)


def test_split_smallest_and_errors():
    s = split_type3(parse_cycles("(1,2)(3)", 3))
    assert s == ({3}, parse_cycles("(1,2)", 2), identity(1))
    with pytest.raises(MapError):
        split_type3(parse_cycles("(1,2,3,4)", 4))
    with pytest.raises(MapError):
        split_type3(identity(3))


def test_join_examples():
    e, o = parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,2,3)", 3)
    assert join_type3(7, {5, 6, 7}, e, o) == parse_cycles("(1,2)(3,4)(5,6,7)", 7)
    eta = join_type3(5, {1, 2, 3}, parse_cycles("(1,2)", 2), identity(3))
    assert eta == parse_cycles("(4,5)", 5)
    assert split_type3(eta) == ({1, 2, 3}, parse_cycles("(1,2)", 2), identity(3))


def test_join_errors():
    with pytest.raises(MapError):
        join_type3(5, {1, 2}, parse_cycles("(1,2)", 2), identity(3))
    with pytest.raises(MapError):
        join_type3(5, {1, 2, 3}, identity(2), identity(3))
    with pytest.raises(MapError):
        join_type3(5, {1, 2, 3}, parse_cycles("(1,2)", 2), parse_cycles("(1,2)", 3))


@pytest.mark.parametrize("n", range(2, 8))
def test_split_join_round_trip_exhaustive(n):
    for eta in perms(n):
        t = cycle_type(eta)
        if not (t.has_even() and t.has_odd()):
            continue
        s = split_type3(eta)
        assert join_type3(n, *s) == eta
        assert not cycle_type(s.even_part).has_odd()
        assert not cycle_type(s.odd_part).has_even()
        # odd cycles are always squares, so squareness lives in the even part
        assert is_square_permutation(eta) == is_square_permutation(s.even_part)
        assert is_perfect_square(cycle_type(s.odd_part))


@pytest.mark.parametrize("n", range(2, 8))
def test_parity_toggle_exhaustive(n):
    group = perms(n)
    ee = {w for w in group if parity_class(cycle_type(w)) is ParityClass.EE}
    oe = set(group) - ee
    toggled = {parity_toggle(w) for w in ee}
    assert toggled == oe
    for w in group:
        assert parity_toggle(parity_toggle(w)) == w


def test_parity_toggle_small():
    assert parity_toggle(identity(2)) == parse_cycles("(1,2)", 2)
    with pytest.raises(MapError):
        parity_toggle(identity(1))


def test_relabel():
    r = Relabeling.between({1, 2, 3}, {5, 6, 7})
    assert relabel(parse_cycles("(1,2,3)", 3), r) == parse_cycles("(5,6,7)", 7)
    back = relabel(relabel(parse_cycles("(1,3)", 3), r), r.inverse())
    assert back == parse_cycles("(1,3)", 3)
    with pytest.raises(MapError):
        Relabeling((1, 2), (3,))
    with pytest.raises(MapError):
        relabel(parse_cycles("(1,4)", 4), r)


@given(permutations_st(max_n=9))
def test_relabel_preserves_cycle_type(w):
    target = range(3, 3 + w.n)
    v = relabel(w, Relabeling.between(range(1, w.n + 1), target))
    assert sorted(cycle_type(v).parts) == sorted(cycle_type(w).parts + (1,) * 2)
    assert relabel(v, Relabeling.between(target, range(1, w.n + 1))) == w


def test_relabel_on_a_union_of_cycles():
    eta = parse_cycles("(1,2)(3,4)(5,6,7)", 7)
    assert relabel(eta, Relabeling.onto_prefix({5, 6, 7})) == parse_cycles("(1,2,3)", 3)
    assert list(itertools.islice(Relabeling.onto_prefix({9, 4}).mapping.items(), 2)) == [(4, 1), (9, 2)]
