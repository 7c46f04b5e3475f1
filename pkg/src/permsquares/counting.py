"""Exact census of S_n by cycle type.

Every count is a sum of conjugacy-class sizes ``n! / prod(l**m_l * m_l!)``
over the partitions of n selected by a cycle-type predicate.  Python ints are
arbitrary precision, so nothing overflows at any n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .classify import LABELS, ClassLabel, class_label
from .perm_core import CycleType, Permutation, cycle_decompose, cycle_type, from_cycles
from .squares import is_perfect_square

__all__ = [
    "partitions",
    "factorial",
    "class_size",
    "alpha",
    "CENSUS_LABELS",
    "CensusReport",
    "Check",
    "Verdict",
    "census",
    "census_from_type_counts",
    "IDENTITIES",
    "verify_identity",
    "type_count",
    "rank",
    "unrank",
    "class_partitions",
    "class_rank",
    "class_unrank",
    "canonical_pairing",
    "canonical_pairing_inverse",
]


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples, reverse lexicographic."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    parts = [n] if n > 1 else []  # parts > 1, descending
    ones = 0 if n > 1 else 1
    while True:
        yield tuple(parts) + (1,) * ones
        if not parts:
            return
        # lower the last part > 1 by one, refill greedily with that size
        big = parts.pop() - 1
        rest = big + 1 + ones
        if big == 1:
            ones = rest
            continue
        while rest >= big:
            parts.append(big)
            rest -= big
        if rest > 1:
            parts.append(rest)
            rest = 0
        ones = rest


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return math.factorial(n)


@lru_cache(maxsize=None)
def _cycle_type_of(parts: tuple[int, ...]) -> CycleType:
    # parts is weakly decreasing (the generator's output); sum is n
    items: list[tuple[int, int]] = []
    for p in reversed(parts):
        if items and items[-1][0] == p:
            items[-1] = (p, items[-1][1] + 1)
        else:
            items.append((p, 1))
    return CycleType._trusted(sum(parts), tuple(items))


@lru_cache(maxsize=None)
def _label_of(parts: tuple[int, ...]) -> ClassLabel:
    return class_label(_cycle_type_of(parts))


def class_size(parts: Sequence[int]) -> int:
    """Number of permutations of S_n with cycle type ``parts``."""
    return _class_size(tuple(sorted(parts, reverse=True)))


@lru_cache(maxsize=None)
def _class_size(parts: tuple[int, ...]) -> int:
    t = _cycle_type_of(parts)
    denom = 1
    for l, m in t.items:
        denom *= l**m * factorial(m)
    return factorial(t.n) // denom


def _label_key(label: ClassLabel, ps_only: bool) -> str:
    return f"PS_{label}" if ps_only else str(label)


CENSUS_LABELS: tuple[str, ...] = (
    tuple(str(lab) for lab in LABELS)
    + tuple(_label_key(lab, True) for lab in LABELS)
    + ("EE", "OE", "alpha", "total")
)


@dataclass(frozen=True)
class Check:
    """One equality with both sides recorded."""

    label: str
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class Verdict:
    identity: str
    n: int
    backend: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class CensusReport:
    """Per-label counts of S_n plus internal consistency checks.

    ``counts`` is keyed by :data:`CENSUS_LABELS`: the six class labels, their
    perfect-square restrictions (``PS_EE1`` ...), and the totals ``EE``,
    ``OE``, ``alpha`` (number of squares) and ``total`` (n!).
    """

    n: int
    counts: dict[str, int] = field(hash=False)
    verdicts: tuple[Check, ...] = ()

    def __getitem__(self, key: str) -> int:
        return self.counts[key]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "labels": list(CENSUS_LABELS),
            "counts": {k: str(self.counts[k]) for k in CENSUS_LABELS},
            "verdicts": [
                {"check": c.label, "lhs": str(c.lhs), "rhs": str(c.rhs), "pass": c.passed}
                for c in self.verdicts
            ],
        }

    def csv_rows(self) -> list[tuple[int, str, str]]:
        return [(self.n, k, str(self.counts[k])) for k in CENSUS_LABELS]


def census_from_type_counts(
    n: int, type_counts: dict[tuple[tuple[int, ...], bool], int]
) -> CensusReport:
    """Build a report from counts keyed by ``(partition, is_square)``.

    Shared by both backends, so they differ only in how the counts and the
    square flags are obtained.
    """
    counts = dict.fromkeys(CENSUS_LABELS, 0)
    for (parts, square), k in type_counts.items():
        label = _label_of(tuple(sorted(parts, reverse=True)))
        counts[str(label)] += k
        counts[label.parity.value] += k
        counts["total"] += k
        if square:
            counts[_label_key(label, True)] += k
            counts["alpha"] += k
    checks = [
        Check("EE = EE1+EE2+EE3", counts["EE"], sum(counts[f"EE{i}"] for i in (1, 2, 3))),
        Check("OE = OE1+OE2+OE3", counts["OE"], sum(counts[f"OE{i}"] for i in (1, 2, 3))),
        Check("EE+OE = n!", counts["EE"] + counts["OE"], factorial(n)),
        Check(
            "alpha = PS1+PS2+PS3",
            counts["alpha"],
            sum(counts[f"PS_EE{i}"] for i in (1, 2, 3)),
        ),
        Check("PS in OE = 0", sum(counts[f"PS_OE{i}"] for i in (1, 2, 3)), 0),
        Check("PS2 = EE2", counts["PS_EE2"], counts["EE2"]),
    ]
    if n > 1:
        checks.append(Check("EE = OE", counts["EE"], counts["OE"]))
    return CensusReport(n, counts, tuple(checks))


@lru_cache(maxsize=None)
def census(n: int) -> CensusReport:
    """Partition-backend census of S_n."""
    if n < 1:
        raise ValueError("census needs n >= 1")
    type_counts = {}
    for parts in partitions(n):
        square = is_perfect_square(_cycle_type_of(parts))
        type_counts[(parts, square)] = class_size(parts)
    return census_from_type_counts(n, type_counts)


def alpha(n: int) -> int:
    """Number of perfect squares in S_n (alpha(1) = 1)."""
    if n < 1:
        raise ValueError("alpha is defined for n >= 1")
    return sum(
        class_size(parts)
        for parts in partitions(n)
        if is_perfect_square(_cycle_type_of(parts))
    )


# Identities.  For the ratio identities ``n`` is the half-size: they compare
# S_{2n+1} against S_{2n}.  lemma31 and ps2_eq_ee2 take the size of S_n itself.

def _ratio(keys: Sequence[str]) -> Callable[[Callable[[int], CensusReport], int], list[Check]]:
    def checks(get, n):
        big, small = get(2 * n + 1), get(2 * n)
        return [Check(f"|{k}_{2*n+1}| = {2*n+1}*|{k}_{2*n}|", big[k], (2 * n + 1) * small[k]) for k in keys]

    return checks


def _lemma31(get, n):
    r = get(n)
    return [Check(f"|EE_{n}| = |OE_{n}|", r["EE"], r["OE"])]


def _ps2_eq_ee2(get, n):
    # PS_EE2 is a subset of EE2 by construction, so equal counts mean equal sets
    r = get(n)
    return [Check(f"|PS2_{n}| = |EE2_{n}|", r["PS_EE2"], r["EE2"])]


IDENTITIES: dict[str, tuple[Callable, int]] = {
    "theorem1": (_ratio(["EE1", "EE2", "EE3"]), 1),
    "theorem2": (_ratio(["PS_EE1", "PS_EE2", "PS_EE3"]), 1),
    "corollary": (_ratio(["alpha"]), 1),
    "lemma31": (_lemma31, 2),
    "lemma32": (_ratio(["EE"]), 1),
    "remark31": (_ratio(["OE"]), 1),
    "oe_types": (_ratio(["OE1", "OE2", "OE3"]), 1),
    "ps2_eq_ee2": (_ps2_eq_ee2, 1),
}


def verify_identity(name: str, n: int, backend: str = "partition") -> Verdict:
    """Check a named counting identity at n, computing both sides.

    ``backend`` is ``"partition"``, ``"brute"`` (exhaustive enumeration) or
    ``"both"``; the latter also demands that the two backends agree.
    """
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}")
    build, n_min = IDENTITIES[name]
    if n < n_min:
        raise ValueError(f"{name} needs n >= {n_min}")
    if backend == "partition":
        return Verdict(name, n, backend, tuple(build(census, n)))
    from .enumeration import brute_census

    if backend == "brute":
        return Verdict(name, n, backend, tuple(build(brute_census, n)))
    if backend == "both":
        part = build(census, n)
        brute = build(brute_census, n)
        checks = list(part)
        for p, b in zip(part, brute):
            checks.append(Check(f"partition vs brute: {p.label} [lhs]", p.lhs, b.lhs))
            checks.append(Check(f"partition vs brute: {p.label} [rhs]", p.rhs, b.rhs))
        return Verdict(name, n, backend, tuple(checks))
    raise ValueError(f"unknown backend {backend!r}")


# Ranking within a conjugacy class.
#
# A permutation of type ``parts`` is built cycle by cycle: the smallest unused
# element opens the next cycle, whose length is chosen among the remaining
# lengths (ascending) and whose other elements form an ordered selection from
# the unused ones (lexicographic).  The canonical cycle decomposition reads the
# choices back, so this is a bijection onto 0 .. class_size - 1.

def _falling(a: int, k: int) -> int:
    return math.perm(a, k) if 0 <= k <= a else 0


def _remove(state: tuple[tuple[int, int], ...], l: int) -> tuple[tuple[int, int], ...]:
    return tuple((x, m - (x == l)) for x, m in state if m - (x == l) > 0)


@lru_cache(maxsize=None)
def _arrangements(state: tuple[tuple[int, int], ...]) -> int:
    r = sum(l * m for l, m in state)
    if r == 0:
        return 1
    return sum(_falling(r - 1, l - 1) * _arrangements(_remove(state, l)) for l, _ in state)


def type_count(parts: Sequence[int]) -> int:
    return _arrangements(CycleType.from_parts(parts).items)


def _unrank_selection(avail: list[int], k: int, idx: int) -> list[int]:
    chosen = []
    avail = list(avail)
    for j in range(k):
        block = _falling(len(avail) - 1, k - 1 - j)
        d, idx = divmod(idx, block)
        chosen.append(avail.pop(d))
    return chosen


def _rank_selection(avail: list[int], seq: Sequence[int]) -> int:
    avail = list(avail)
    k = len(seq)
    idx = 0
    for j, x in enumerate(seq):
        d = avail.index(x)
        idx += d * _falling(len(avail) - 1, k - 1 - j)
        avail.pop(d)
    return idx


def unrank(parts: Sequence[int], k: int) -> Permutation:
    t = CycleType.from_parts(parts)
    state = t.items
    total = _arrangements(state)
    if not 0 <= k < total:
        raise IndexError(f"rank {k} outside 0..{total - 1} for type {tuple(parts)}")
    remaining = list(range(1, t.n + 1))
    cycles = []
    while remaining:
        first, rest = remaining[0], remaining[1:]
        for l, _ in state:
            sub = _remove(state, l)
            sub_count = _arrangements(sub)
            block = _falling(len(rest), l - 1) * sub_count
            if k < block:
                sel, k = divmod(k, sub_count)
                chosen = _unrank_selection(rest, l - 1, sel)
                cycles.append((first, *chosen))
                taken = set(chosen)
                remaining = [x for x in rest if x not in taken]
                state = sub
                break
            k -= block
    return from_cycles(t.n, cycles)


def rank(w: Permutation) -> int:
    state = cycle_type(w).items
    remaining = list(range(1, w.n + 1))
    k = 0
    for c in cycle_decompose(w):
        rest = remaining[1:]
        l = len(c)
        for x, _ in state:
            if x == l:
                break
            k += _falling(len(rest), x - 1) * _arrangements(_remove(state, x))
        sub = _remove(state, l)
        k += _rank_selection(rest, c[1:]) * _arrangements(sub)
        taken = set(c)
        remaining = [x for x in remaining if x not in taken]
        state = sub
    return k


# Ranking within a whole class (EE1, PS_EE2, ...), partitions in reverse
# lexicographic order.  Used for a canonical, explicitly non-structural
# pairing of class_{2n+1} with [2n+1] x class_{2n}.

def _class_predicate(key: str) -> Callable[[CycleType], bool]:
    ps_only = key.startswith("PS_")
    label = ClassLabel.parse(key[3:] if ps_only else key)

    def pred(t: CycleType) -> bool:
        return class_label(t) == label and (not ps_only or is_perfect_square(t))

    return pred


def class_partitions(n: int, key: str) -> list[tuple[int, ...]]:
    pred = _class_predicate(key)
    return [p for p in partitions(n) if pred(CycleType.from_parts(p))]


def class_rank(w: Permutation, key: str) -> int:
    parts = cycle_type(w).parts
    offset = 0
    for p in class_partitions(w.n, key):
        if p == parts:
            return offset + rank(w)
        offset += class_size(p)
    raise ValueError(f"{w} is not in class {key}")


def class_unrank(n: int, key: str, k: int) -> Permutation:
    if k >= 0:
        for p in class_partitions(n, key):
            size = class_size(p)
            if k < size:
                return unrank(p, k)
            k -= size
    raise IndexError(f"rank out of range for class {key} in S_{n}")


def canonical_pairing(w: Permutation, key: str) -> tuple[int, Permutation]:
    """Send w in class_{2n+1} to (i, u) with 1 <= i <= 2n+1, u in class_{2n}.

    The correspondence is by global rank only; it carries no structural
    meaning and exists because the type-2 count identity is proved
    non-constructively.
    """
    m = w.n
    if m % 2 == 0 or m < 3:
        raise ValueError("pairing maps odd sizes 2n+1 >= 3 down to 2n")
    j, i0 = divmod(class_rank(w, key), m)
    return i0 + 1, class_unrank(m - 1, key, j)


def canonical_pairing_inverse(i: int, u: Permutation, key: str) -> Permutation:
    m = u.n + 1
    if u.n % 2 or not 1 <= i <= m:
        raise ValueError("need u in S_{2n} and 1 <= i <= 2n+1")
    return class_unrank(m, key, class_rank(u, key) * m + (i - 1))
