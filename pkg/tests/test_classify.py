import pytest
from hypothesis import given

from permsquares.classify import (
    ClassificationError,
    ClassLabel,
    ParityClass,
    class_label,
    classify,
    ee_type,
    odd_support,
    oe_type,
    parity_class,
    ps_type,
)
from permsquares.counting import partitions
from permsquares.perm_core import CycleType, identity, inverse, parse_cycles, square

from conftest import perms, permutations_st


def T(n, mult):
    return CycleType.from_mapping(n, mult)


@pytest.mark.parametrize(
    "t, expected",
    [(T(7, {2: 2, 3: 1}), ParityClass.EE), (T(3, {2: 1, 1: 1}), ParityClass.OE), (T(5, {1: 5}), ParityClass.EE)],
)
def test_parity_class(t, expected):
    assert parity_class(t) is expected


@pytest.mark.parametrize(
    "t, expected",
    [
        (T(6, {2: 1, 4: 1}), 1),
        (T(7, {2: 2, 3: 1}), 3),
        (T(7, {2: 1, 4: 1, 1: 1}), 1),
        (T(7, {1: 7}), 2),
        (T(6, {1: 6}), 2),
        (T(8, {3: 1, 2: 2, 1: 1}), 3),
        (T(7, {2: 2, 1: 3}), 3),
    ],
)
def test_ee_type(t, expected):
    assert ee_type(t) == expected


def test_ee_type_rejects_oe():
    with pytest.raises(ClassificationError):
        ee_type(T(2, {2: 1}))


@pytest.mark.parametrize(
    "t, expected",
    [
        (T(4, {4: 1}), 1),
        (T(6, {2: 1, 3: 1, 1: 1}), 3),
        (T(6, {3: 1, 1: 1, 2: 1}), 3),
        (T(5, {2: 1, 3: 1}), 3),
        (T(7, {2: 1, 3: 1, 1: 2}), 3),
        (T(10, {2: 1, 3: 1, 5: 1}), 2),
        (T(8, {2: 1, 3: 2}), 2),
        (T(9, {2: 1, 3: 2, 1: 1}), 2),
        # one fixed point, other cycles even: type 1 (see test below)
        (T(3, {2: 1, 1: 1}), 1),
    ],
)
def test_oe_type(t, expected):
    assert oe_type(t) == expected


def test_oe_type_of_transposition_in_s3():
    # OE_3 consists of the three transpositions and OE_2 of (1,2) alone, so the
    # type-wise identity |OE^(i)_3| = 3 |OE^(i)_2| forces these into type 1.
    assert oe_type(T(2, {2: 1})) == 1
    assert oe_type(T(3, {2: 1, 1: 1})) == 1


def test_oe_type_rejects_ee():
    with pytest.raises(ClassificationError):
        oe_type(T(3, {1: 3}))


def test_odd_support():
    assert odd_support(parse_cycles("(1,2)(3,4)(5,6,7)", 7)) == {5, 6, 7}
    assert odd_support(identity(3)) == {1, 2, 3}
    assert odd_support(parse_cycles("(1,2,3,4)", 4)) == frozenset()


def test_ps_type():
    assert ps_type(T(8, {2: 2, 1: 4})) == 3
    assert ps_type(T(5, {1: 5})) == 2
    assert ps_type(T(6, {2: 1, 4: 1})) is None
    # cross-check the None against literal squares
    w = parse_cycles("(1,2)(3,4,5,6)", 6)
    assert all(square(u) != w for u in perms(6))


def test_label_text():
    assert str(ClassLabel(ParityClass.OE, 2)) == "OE2"
    assert ClassLabel.parse("ee3") == ClassLabel(ParityClass.EE, 3)
    with pytest.raises(ClassificationError):
        ClassLabel.parse("EE4")


@pytest.mark.parametrize("n", range(1, 31))
def test_every_cycle_type_gets_one_label(n):
    for parts in partitions(n):
        t = CycleType.from_parts(parts)
        lab = class_label(t)
        assert lab.type_index in (1, 2, 3)
        ps = ps_type(t)
        if ps is not None:
            assert lab.parity is ParityClass.EE and ps == lab.type_index
        if lab.parity is ParityClass.EE and lab.type_index == 2:
            assert ps_type(t) == 2  # all-odd types are always squares


@pytest.mark.parametrize("n", range(1, 10))
def test_type_rules_match_set_definitions(n):
    # Literal membership predicates, written independently of classify.py.
    for parts in partitions(n):
        t = CycleType.from_parts(parts)
        evens = [p for p in parts if p % 2 == 0]
        odds = [p for p in parts if p % 2]
        ones = parts.count(1)
        # n = 1: the identity is "all odd" (type 2), not "one fixed point"
        only_even_plus_one_fixed = ones == 1 and len(odds) == 1 and n > 1
        if len(evens) % 2 == 0:
            if n % 2 == 0:
                expected = 1 if not odds else 2 if not evens else 3
            else:
                expected = 1 if only_even_plus_one_fixed else 2 if not evens else 3
            assert ee_type(t) == expected
        else:
            if n % 2 == 0:
                expected = 1 if not odds else 3 if ones else 2
            else:
                expected = (1 if only_even_plus_one_fixed else 2) if ones == 1 else 3
            assert oe_type(t) == expected


@given(permutations_st(max_n=10))
def test_odd_support_parity(w):
    assert len(odd_support(w)) % 2 == w.n % 2


@given(permutations_st(max_n=10), permutations_st(max_n=10))
def test_label_is_conjugation_invariant(w, s):
    if w.n != s.n:
        return
    c1, c2 = classify(w), classify(s * w * inverse(s))
    assert (c1.label, c1.perfect_square) == (c2.label, c2.perfect_square)


def test_classify_bundle():
    c = classify(parse_cycles("(1,2)(3,4)(5,6,7)", 7))
    assert str(c.label) == "EE3" and c.ps_flag == "PS" and c.odd_support == {5, 6, 7}
