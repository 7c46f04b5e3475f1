import math

import pytest

from permsquares.counting import census
from permsquares.enumeration import (
    CAP_ENV,
    D_CLASSES,
    GuardError,
    admissible_supports,
    all_permutations,
    brute_alpha,
    brute_census,
    class_members,
    squares_set,
    verify_d_bijection,
    verify_equation2,
    verify_lemma41,
)
from permsquares.perm_core import identity, square


def test_all_permutations():
    assert len(list(all_permutations(3))) == 6
    assert list(all_permutations(1)) == [identity(1)]
    eight = list(all_permutations(8))
    assert len(eight) == len(set(eight)) == math.factorial(8)
    assert [p.image for p in eight] == sorted(p.image for p in eight)


def test_all_permutations_guard():
    with pytest.raises(GuardError):
        next(all_permutations(0))
    with pytest.raises(GuardError):
        next(all_permutations(11))
    assert next(all_permutations(11, unbounded=True)) == identity(11)


def test_cap_env(monkeypatch):
    monkeypatch.setenv(CAP_ENV, "3")
    with pytest.raises(GuardError):
        brute_alpha(4)
    monkeypatch.setenv(CAP_ENV, "x")
    with pytest.raises(GuardError):
        brute_alpha(2)
    monkeypatch.delenv(CAP_ENV)
    with pytest.raises(GuardError):
        brute_census(10)


@pytest.mark.parametrize("n, expected", [(2, 1), (3, 3), (5, 60)])
def test_brute_alpha(n, expected):
    assert brute_alpha(n) == expected


def test_squares_set_is_literal():
    assert squares_set(4) == {square(u).image for u in all_permutations(4)}


def test_brute_census_small():
    assert brute_census(2)["EE"] == 1
    assert brute_census(4) == census(4)
    assert brute_census(7)["alpha"] == 1890


def test_brute_census_independent_of_workers():
    assert brute_census(6, workers=3) == brute_census(6, workers=1)


@pytest.mark.parametrize("cls", sorted(D_CLASSES))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_d_bijection(cls, n):
    assert verify_d_bijection(cls, n).passed


def test_d_bijection_ee1_at_four():
    v = verify_d_bijection("EE1", 2)
    count = [c for c in v.checks if c.label.endswith("count")][0]
    assert count.lhs == 5 * len(class_members(4, "EE1"))


@pytest.mark.parametrize("cls", ["EE2", "EE3", "OE3", "PS2"])
def test_d_bijection_rejects_classes_with_fixed_points(cls):
    with pytest.raises(ValueError):
        verify_d_bijection(cls, 2)


@pytest.mark.parametrize("A, a", [({5, 6, 7}, 7), ({1, 3, 5}, 3)])
def test_equation2_examples(A, a):
    v = verify_equation2(3, A, a)
    assert v.passed and len(v.checks) == 2


@pytest.mark.parametrize(
    "n, A, a",
    [(2, {1, 2, 3, 4, 5}, 1), (3, {1, 2}, 1), (3, {1, 2, 3}, 4), (3, {1, 2, 9}, 1)],
)
def test_equation2_rejects(n, A, a):
    with pytest.raises(ValueError):
        verify_equation2(n, A, a)


def test_lemma41():
    assert verify_lemma41(3, {5, 6, 7}).passed
    with pytest.raises(ValueError):
        verify_lemma41(3, {5, 6})


def test_admissible_supports():
    sup = admissible_supports(3)
    assert len(sup) == math.comb(7, 3) + math.comb(7, 5)
    assert admissible_supports(1) == []
