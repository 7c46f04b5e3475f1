"""Exhaustive oracle over S_n.

Nothing here uses the cycle-type criterion for squares: a permutation counts
as a perfect square only if it literally appears in ``{u*u : u in S_n}``.
Class sizes come from enumeration, never from the class-size formula.

Enumeration is capped (default n <= 9, env ``PERMSQUARES_MAX_N`` overrides);
``all_permutations`` alone refuses n > 10 unless ``unbounded=True``.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable, Iterator

from .classify import ClassLabel, class_label
from .counting import Check, CensusReport, Verdict, census_from_type_counts
from .maps import Relabeling, add_and_swap, join_type3, split_type3
from .perm_core import CycleType, Permutation

__all__ = [
    "GuardError",
    "DEFAULT_CAP",
    "HARD_CAP",
    "enumeration_cap",
    "all_permutations",
    "squares_set",
    "brute_alpha",
    "brute_census",
    "class_members",
    "D_CLASSES",
    "verify_d_bijection",
    "verify_equation2",
    "verify_lemma41",
    "admissible_supports",
]

DEFAULT_CAP = 9
HARD_CAP = 10
CAP_ENV = "PERMSQUARES_MAX_N"


class GuardError(ValueError):
    """Enumeration size outside the allowed range."""


def enumeration_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise GuardError(f"{CAP_ENV}={raw!r} is not an integer") from None


def _guard(n: int) -> None:
    cap = enumeration_cap()
    if not 1 <= n <= cap:
        raise GuardError(
            f"exhaustive enumeration needs 1 <= n <= {cap} (got {n}); "
            f"set {CAP_ENV} to raise the cap"
        )


def all_permutations(n: int, unbounded: bool = False) -> Iterator[Permutation]:
    """Every permutation of [n] once, lexicographic in one-line form."""
    if n < 1 or (n > HARD_CAP and not unbounded):
        raise GuardError(f"all_permutations needs 1 <= n <= {HARD_CAP} (got {n})")
    for img in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(img)


# Raw one-line tuples (1-indexed values) keep the inner loops cheap.

def _partition_of(img: tuple[int, ...]) -> tuple[int, ...]:
    n = len(img)
    seen = [False] * (n + 1)
    lengths = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        k = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = img[j - 1]
            k += 1
        lengths.append(k)
    lengths.sort(reverse=True)
    return tuple(lengths)


def _odd_support_of(img: tuple[int, ...]) -> frozenset[int]:
    n = len(img)
    seen = [False] * (n + 1)
    out: list[int] = []
    for s in range(1, n + 1):
        if seen[s]:
            continue
        cyc = []
        j = s
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = img[j - 1]
        if len(cyc) % 2:
            out.extend(cyc)
    return frozenset(out)


def _chunk(n: int, first: int) -> tuple[Counter, set]:
    """Partition counts and squares for the permutations with w(1) = first."""
    rest = [x for x in range(1, n + 1) if x != first]
    parts: Counter = Counter()
    squares = set()
    for tail in itertools.permutations(rest):
        u = (first,) + tail
        parts[_partition_of(u)] += 1
        squares.add(tuple(u[x - 1] for x in u))
    return parts, squares


def _run_chunks(n: int, workers: int) -> tuple[Counter, frozenset]:
    firsts = range(1, n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_chunk, itertools.repeat(n), firsts))
    else:
        results = [_chunk(n, f) for f in firsts]
    parts: Counter = Counter()
    squares: set = set()
    for p, s in results:
        parts.update(p)
        squares |= s
    return parts, frozenset(squares)


@lru_cache(maxsize=None)
def _enumerated(n: int) -> tuple[Counter, frozenset]:
    return _run_chunks(n, 1)


def squares_set(n: int) -> frozenset[tuple[int, ...]]:
    """One-line images of ``{u*u : u in S_n}``."""
    _guard(n)
    return _enumerated(n)[1]


def brute_alpha(n: int) -> int:
    return len(squares_set(n))


def brute_census(n: int, workers: int = 1) -> CensusReport:
    """Census of S_n by full enumeration; same schema as ``counting.census``.

    With ``workers > 1`` the enumeration is split by w(1) across processes;
    the result does not depend on the worker count.
    """
    _guard(n)
    if workers > 1:
        parts, squares = _run_chunks(n, workers)
    else:
        parts, squares = _enumerated(n)
    square_parts = Counter(_partition_of(w) for w in squares)
    type_counts = {}
    for p, total in parts.items():
        sq = square_parts.get(p, 0)
        if sq:
            type_counts[(p, True)] = sq
        if total - sq:
            type_counts[(p, False)] = total - sq
    return census_from_type_counts(n, type_counts)


@lru_cache(maxsize=None)
def _label_of(parts: tuple[int, ...]) -> ClassLabel:
    return class_label(CycleType.from_parts(parts))


def _in_class(img: tuple[int, ...], key: str, squares: frozenset | None) -> bool:
    ps_only = key.startswith("PS_")
    label = ClassLabel.parse(key[3:] if ps_only else key)
    if _label_of(_partition_of(img)) != label:
        return False
    return not ps_only or img in squares


@lru_cache(maxsize=32)
def _class_members(m: int, key: str) -> frozenset[tuple[int, ...]]:
    squares = squares_set(m) if key.startswith("PS_") else None
    return frozenset(
        img for img in itertools.permutations(range(1, m + 1)) if _in_class(img, key, squares)
    )


def class_members(m: int, key: str) -> frozenset[Permutation]:
    """All permutations of S_m in a class such as ``"EE1"`` or ``"PS_EE3"``."""
    _guard(m)
    return frozenset(Permutation._trusted(img) for img in _class_members(m, key))


# Classes whose members have no 1-cycle at even size, so the add-and-swap
# map applies; PS1 means PS_EE1.
D_CLASSES = {"EE1": "EE1", "PS1": "PS_EE1", "OE1": "OE1", "OE2": "OE2"}


def verify_d_bijection(class_name: str, n: int) -> Verdict:
    """Check that add_and_swap is a bijection class_{2n} x [2n+1] -> class_{2n+1}."""
    if class_name not in D_CLASSES:
        raise ValueError(
            f"add-and-swap needs a class without 1-cycles; {class_name!r} is not one of "
            f"{sorted(D_CLASSES)}"
        )
    if n < 1:
        raise ValueError("n must be >= 1")
    key = D_CLASSES[class_name]
    m = 2 * n
    _guard(m + 1)
    sources = _class_members(m, key)
    targets = _class_members(m + 1, key)
    images = [
        add_and_swap(Permutation._trusted(w), i).image
        for w in sorted(sources)
        for i in range(1, m + 2)
    ]
    distinct = set(images)
    label = f"{class_name}: {m}->{m + 1}"
    return Verdict(
        "d_bijection",
        n,
        "brute",
        (
            Check(f"{label} distinct images", len(distinct), len(images)),
            Check(f"{label} images inside target", len(distinct & targets), len(distinct)),
            Check(f"{label} images cover target", len(distinct), len(targets)),
            Check(f"{label} count", len(targets), (m + 1) * len(sources)),
        ),
    )


@lru_cache(maxsize=16)
def _type3_by_support(m: int) -> dict[frozenset[int], list[tuple[int, ...]]]:
    groups: dict[frozenset[int], list[tuple[int, ...]]] = {}
    for img in sorted(_class_members(m, "EE3")):
        groups.setdefault(_odd_support_of(img), []).append(img)
    return groups


@lru_cache(maxsize=16)
def _type3_supports(m: int) -> tuple[Counter, Counter]:
    """Odd-support tallies over EE3_m and over its perfect squares."""
    squares = squares_set(m)
    ee3: Counter = Counter()
    ps3: Counter = Counter()
    for a, imgs in _type3_by_support(m).items():
        ee3[a] = len(imgs)
        ps3[a] = sum(img in squares for img in imgs)
    return ee3, ps3


def _check_support(n: int, A: Iterable[int]) -> tuple[frozenset[int], int]:
    A = frozenset(A)
    m = 2 * n + 1
    if not all(1 <= x <= m for x in A):
        raise ValueError(f"A must be a subset of [1..{m}]")
    if len(A) % 2 == 0:
        raise ValueError(f"|A| = {len(A)} must be odd")
    c = (len(A) - 1) // 2
    if not 1 <= c <= n - 1:
        raise ValueError(f"|A| = 2c+1 needs 1 <= c <= {n - 1} (got c = {c})")
    return A, c


def admissible_supports(n: int) -> list[frozenset[int]]:
    """All A in [2n+1] with |A| = 2c+1, 1 <= c <= n-1."""
    m = 2 * n + 1
    return [
        frozenset(A)
        for c in range(1, n)
        for A in itertools.combinations(range(1, m + 1), 2 * c + 1)
    ]


def verify_equation2(n: int, A: Iterable[int], a: int) -> Verdict:
    """Support-wise count of EE3 (and PS3) between S_{2n+1} and S_{2n}.

    Left: permutations of S_{2n+1} in the class with odd support A.  Right:
    2c+1 times those of S_{2n} whose odd support is A minus a, carried into
    [2n] by the order-preserving relabeling of [2n+1] minus a.
    """
    A, c = _check_support(n, A)
    if a not in A:
        raise ValueError(f"a = {a} is not in A")
    m = 2 * n + 1
    _guard(m)
    r = Relabeling.between([x for x in range(1, m + 1) if x != a], range(1, m))
    B = frozenset(r(x) for x in A - {a})
    big_ee, big_ps = _type3_supports(m)
    small_ee, small_ps = _type3_supports(m - 1)
    tag = f"A={sorted(A)}, a={a}"
    return Verdict(
        "equation2",
        n,
        "brute",
        (
            Check(f"EE3 {tag}", big_ee[A], (2 * c + 1) * small_ee[B]),
            Check(f"PS3 {tag}", big_ps[A], (2 * c + 1) * small_ps[B]),
        ),
    )


def verify_lemma41(n: int, A: Iterable[int]) -> Verdict:
    """Split EE3 permutations of S_{2n+1} with odd support A into EE1 x EE2 parts."""
    A, c = _check_support(n, A)
    m = 2 * n + 1
    _guard(m)
    members = [Permutation._trusted(img) for img in _type3_by_support(m).get(A, [])]
    even_class = _class_members(2 * n - 2 * c, "EE1")
    odd_class = _class_members(2 * c + 1, "EE2")
    images = set()
    in_product = round_trips = support_ok = 0
    for eta in members:
        s = split_type3(eta)
        images.add((s.even_part, s.odd_part))
        support_ok += s.odd_support == A
        in_product += s.even_part.image in even_class and s.odd_part.image in odd_class
        round_trips += join_type3(m, A, s.even_part, s.odd_part) == eta
    k = len(members)
    tag = f"A={sorted(A)}"
    return Verdict(
        "lemma41",
        n,
        "brute",
        (
            Check(f"{tag} split injective", len(images), k),
            Check(f"{tag} support recovered", support_ok, k),
            Check(f"{tag} lands in EE1 x EE2", in_product, k),
            Check(f"{tag} join inverts split", round_trips, k),
            Check(f"{tag} |EE3:A| = |EE1|*|EE2|", k, len(even_class) * len(odd_class)),
        ),
    )
