"""Perfect squares in S_n: the cycle-type criterion and a canonical square root."""

from __future__ import annotations

from collections import defaultdict
from typing import Optional, Sequence

from .perm_core import (
    CycleType,
    Permutation,
    canonical_cycle,
    cycle_decompose,
    cycle_type,
    from_cycles,
)

__all__ = [
    "is_perfect_square",
    "is_square_permutation",
    "square_root",
    "cycle_power",
]


def is_perfect_square(t: CycleType) -> bool:
    """True iff every even cycle length occurs an even number of times.

    Odd lengths never matter: an odd cycle is always the square of a cycle
    on the same elements.
    """
    return all(m % 2 == 0 for l, m in t.items if l % 2 == 0)


def is_square_permutation(w: Permutation) -> bool:
    return is_perfect_square(cycle_type(w))


def cycle_power(c: Sequence[int], k: int, n: Optional[int] = None) -> Permutation:
    """The k-th power of the cycle ``c``, as a permutation of [n].

    ``n`` defaults to ``max(c)``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    c = canonical_cycle(c)
    if n is None:
        n = max(c)
    m = len(c)
    img = list(range(1, n + 1))
    for j, x in enumerate(c):
        img[x - 1] = c[(j + k) % m]
    return Permutation(img)


def _odd_cycle_root(c: tuple[int, ...]) -> tuple[int, ...]:
    # c^((m+1)/2) is again an m-cycle, and its square is c^(m+1) = c
    m = len(c)
    step = (m + 1) // 2
    return tuple(c[(j * step) % m] for j in range(m))


def _interleave(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for x, y in zip(a, b):
        out.append(x)
        out.append(y)
    return tuple(out)


def square_root(w: Permutation) -> Optional[Permutation]:
    """A canonical u with ``u * u == w``, or None if w is not a perfect square.

    Odd m-cycles c contribute c^((m+1)/2).  Even cycles of equal length are
    taken in order of their minimum element and paired off; the pair
    (a1..am), (b1..bm) contributes the 2m-cycle (a1,b1,a2,b2,...,am,bm).
    """
    if not is_square_permutation(w):
        return None
    root_cycles = []
    even_by_length: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    for c in cycle_decompose(w):
        if len(c) % 2:
            root_cycles.append(_odd_cycle_root(c))
        else:
            even_by_length[len(c)].append(c)
    for cycles in even_by_length.values():
        # cycle_decompose already sorts by minimum element
        for a, b in zip(cycles[0::2], cycles[1::2]):
            root_cycles.append(_interleave(a, b))
    return from_cycles(w.n, root_cycles)
