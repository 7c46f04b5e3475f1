"""Constructive maps between permutation classes.

* ``add_and_swap`` / ``add_and_swap_inverse``: extend a permutation of [2n]
  with no fixed points by the new point 2n+1, then let i and 2n+1 trade
  places, so that (i) is the only fixed point of the result.
* ``split_type3`` / ``join_type3``: separate a permutation with both even and
  odd cycles into its even-cycle part and odd-cycle part, each relabeled
  order-preservingly onto an initial segment.
* ``parity_toggle``: left multiplication by (1,2), an involution exchanging
  EE and OE.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .perm_core import (
    Permutation,
    PermutationError,
    compose,
    cycle_decompose,
    from_cycles,
    transposition,
)

__all__ = [
    "MapError",
    "Relabeling",
    "relabel",
    "restrict",
    "add_and_swap",
    "add_and_swap_inverse",
    "Type3Split",
    "split_type3",
    "join_type3",
    "parity_toggle",
]


class MapError(ValueError):
    pass


@dataclass(frozen=True)
class Relabeling:
    """Order-preserving bijection between two equal-size sets of integers."""

    source: tuple[int, ...]
    target: tuple[int, ...]

    def __post_init__(self):
        if len(self.source) != len(self.target):
            raise MapError("relabeling needs ground sets of equal size")
        for side in (self.source, self.target):
            if any(a >= b for a, b in zip(side, side[1:])):
                raise MapError(f"ground set {side} is not strictly increasing")

    @classmethod
    def between(cls, source: Iterable[int], target: Iterable[int]) -> "Relabeling":
        return cls(tuple(sorted(source)), tuple(sorted(target)))

    @classmethod
    def onto_prefix(cls, source: Iterable[int]) -> "Relabeling":
        """Relabel ``source`` onto 1..len(source), keeping the order."""
        s = tuple(sorted(source))
        return cls(s, tuple(range(1, len(s) + 1)))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    @property
    def mapping(self) -> dict[int, int]:
        return dict(zip(self.source, self.target))

    def inverse(self) -> "Relabeling":
        return Relabeling(self.target, self.source)


def restrict(w: Permutation, ground: Iterable[int]) -> list[tuple[int, ...]]:
    """The cycles of w lying inside ``ground``; ``ground`` must be a union of cycles."""
    ground = frozenset(ground)
    out = []
    for c in cycle_decompose(w):
        inside = c[0] in ground
        if any((x in ground) != inside for x in c):
            raise MapError(f"{sorted(ground)} is not a union of cycles of {w}")
        if inside:
            out.append(c)
    return out


def relabel(w: Permutation, r: Relabeling, n: int | None = None) -> Permutation:
    """Carry w, viewed as a permutation of ``r.source``, over to ``r.target``.

    w may act on a larger domain as long as ``r.source`` is a union of its
    cycles; the result lives on [n], ``n`` defaulting to ``max(r.target)``.
    """
    cycles = restrict(w, r.source)
    m = r.mapping
    if n is None:
        n = max(r.target) if r.target else 0
    try:
        return from_cycles(n, [tuple(m[x] for x in c) for c in cycles])
    except PermutationError as exc:
        raise MapError(str(exc)) from None


def _fixed_points(w: Permutation) -> list[int]:
    return [i for i, v in enumerate(w.image, 1) if i == v]


def add_and_swap(w: Permutation, i: int) -> Permutation:
    """Map a fixed-point-free w on [m] and ``1 <= i <= m+1`` into S_{m+1}.

    The point m+1 is added as a fixed point, then conjugated by the
    transposition (i, m+1): inside w's cycles, i is replaced by m+1 and (i)
    becomes the unique fixed point.
    """
    m = w.n
    if _fixed_points(w):
        raise MapError(f"{w} has a 1-cycle; the map needs none")
    if not 1 <= i <= m + 1:
        raise MapError(f"i={i} is outside [1..{m + 1}]")
    new = m + 1
    swap = {i: new}
    cycles = [tuple(swap.get(x, x) for x in c) for c in cycle_decompose(w)]
    return from_cycles(new, cycles)


def add_and_swap_inverse(v: Permutation) -> tuple[Permutation, int]:
    fixed = _fixed_points(v)
    if len(fixed) != 1:
        raise MapError(f"{v} has {len(fixed)} 1-cycles; exactly one is required")
    if v.n < 2:
        raise MapError("nothing to remove from S_1")
    (i,) = fixed
    last = v.n
    swap = {last: i}
    cycles = [tuple(swap.get(x, x) for x in c) for c in cycle_decompose(v) if c != (i,)]
    return from_cycles(last - 1, cycles), i


class Type3Split(NamedTuple):
    odd_support: frozenset[int]
    even_part: Permutation
    odd_part: Permutation


def split_type3(eta: Permutation) -> Type3Split:
    cycles = cycle_decompose(eta).cycles
    odd = [c for c in cycles if len(c) % 2]
    even = [c for c in cycles if len(c) % 2 == 0]
    if not odd or not even:
        raise MapError(f"{eta} needs both even and odd cycles")
    support = frozenset(x for c in odd for x in c)
    rest = frozenset(range(1, eta.n + 1)) - support
    return Type3Split(
        support,
        relabel(eta, Relabeling.onto_prefix(rest)),
        relabel(eta, Relabeling.onto_prefix(support)),
    )


def join_type3(
    n: int, A: Iterable[int], even_part: Permutation, odd_part: Permutation
) -> Permutation:
    A = frozenset(A)
    if not A or not all(1 <= a <= n for a in A):
        raise MapError(f"support {sorted(A)} is not a nonempty subset of [1..{n}]")
    if len(A) != odd_part.n or n - len(A) != even_part.n:
        raise MapError("part sizes do not match the support")
    even_cycles = cycle_decompose(even_part).cycles
    odd_cycles = cycle_decompose(odd_part).cycles
    if any(len(c) % 2 for c in even_cycles):
        raise MapError(f"even part {even_part} has an odd cycle")
    if any(len(c) % 2 == 0 for c in odd_cycles):
        raise MapError(f"odd part {odd_part} has an even cycle")
    to_a = Relabeling.onto_prefix(A).inverse().mapping
    to_rest = Relabeling.onto_prefix(frozenset(range(1, n + 1)) - A).inverse().mapping
    cycles = [tuple(to_rest[x] for x in c) for c in even_cycles]
    cycles += [tuple(to_a[x] for x in c) for c in odd_cycles]
    return from_cycles(n, cycles)


def parity_toggle(w: Permutation) -> Permutation:
    if w.n < 2:
        raise MapError("parity toggle needs n >= 2")
    return compose(transposition(w.n, 1, 2), w)
