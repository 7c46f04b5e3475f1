"""Permutations of [n] = {1, ..., n}, their cycle structure and cycle notation.

Everything here is 1-indexed.  A permutation is stored as its one-line
image ``(w(1), ..., w(n))``; the domain size ``n`` is always explicit and is
never inferred from the largest element written in cycle notation.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import groupby
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Permutation",
    "CycleDecomposition",
    "CycleType",
    "PermutationError",
    "canonical_cycle",
    "compose",
    "square",
    "inverse",
    "identity",
    "transposition",
    "cycle_decompose",
    "from_cycles",
    "cycle_type",
    "parse_cycles",
    "format_cycles",
]


class PermutationError(ValueError):
    """Raised for malformed permutations, cycles or cycle notation."""


class Permutation:
    """An immutable bijection of [n]."""

    __slots__ = ("_image",)

    def __init__(self, image: Iterable[int]):
        image = tuple(image)
        n = len(image)
        if n < 1:
            raise PermutationError("a permutation needs n >= 1")
        if sorted(image) != list(range(1, n + 1)):
            raise PermutationError(f"{image} is not a bijection of [1..{n}]")
        object.__setattr__(self, "_image", image)

    @classmethod
    def _trusted(cls, image: tuple[int, ...]) -> "Permutation":
        # skips the bijectivity check; callers guarantee a valid image
        p = object.__new__(cls)
        object.__setattr__(p, "_image", image)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self) -> int:
        return len(self._image)

    @property
    def image(self) -> tuple[int, ...]:
        return self._image

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self._image):
            raise PermutationError(f"{i} is outside [1..{self.n}]")
        return self._image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._image == other._image

    def __hash__(self):
        return hash(self._image)

    def __lt__(self, other: "Permutation") -> bool:
        return (self.n, self._image) < (other.n, other._image)

    def __repr__(self):
        return f"Permutation({format_cycles(self)!r}, n={self.n})"

    def __str__(self):
        return format_cycles(self)

    def __reduce__(self):
        return (Permutation, (self._image,))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self._image, 1))


def identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError("a permutation needs n >= 1")
    return Permutation._trusted(tuple(range(1, n + 1)))


def transposition(n: int, a: int, b: int) -> Permutation:
    if a == b or not (1 <= a <= n and 1 <= b <= n):
        raise PermutationError(f"bad transposition ({a},{b}) in S_{n}")
    img = list(range(1, n + 1))
    img[a - 1], img[b - 1] = b, a
    return Permutation._trusted(tuple(img))


def compose(u: Permutation, w: Permutation) -> Permutation:
    """Return ``u o w``, i.e. ``i -> u(w(i))``."""
    if u.n != w.n:
        raise PermutationError(f"cannot compose S_{u.n} with S_{w.n}")
    ui = u.image
    return Permutation._trusted(tuple(ui[j - 1] for j in w.image))


def square(w: Permutation) -> Permutation:
    return compose(w, w)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, v in enumerate(w.image, 1):
        inv[v - 1] = i
    return Permutation._trusted(tuple(inv))


def canonical_cycle(elements: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cycle so that its minimum element comes first."""
    elements = tuple(elements)
    if not elements:
        raise PermutationError("empty cycle")
    if len(set(elements)) != len(elements):
        raise PermutationError(f"repeated element in cycle {elements}")
    k = elements.index(min(elements))
    return elements[k:] + elements[:k]


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical disjoint-cycle form, fixed points included.

    Each cycle starts at its minimum; cycles are sorted by that minimum.
    """

    n: int
    cycles: tuple[tuple[int, ...], ...]

    def __iter__(self):
        return iter(self.cycles)

    def __len__(self):
        return len(self.cycles)

    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths, stored as sorted ``(length, multiplicity)`` pairs."""

    n: int
    items: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if any(l < 1 or m < 1 for l, m in self.items):
            raise PermutationError(f"invalid cycle type {self.items}")
        if sum(l * m for l, m in self.items) != self.n:
            raise PermutationError(f"cycle type {self.items} does not sum to {self.n}")

    @classmethod
    def from_mapping(cls, n: int, multiplicity: Mapping[int, int]) -> "CycleType":
        return cls(n, tuple(sorted((l, m) for l, m in multiplicity.items() if m)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "CycleType":
        runs = [(l, len(list(g))) for l, g in groupby(sorted(parts))]
        return cls(sum(l * m for l, m in runs), tuple(runs))

    @classmethod
    def _trusted(cls, n: int, items: tuple[tuple[int, int], ...]) -> "CycleType":
        # no validation; for items produced by a partition generator
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "items", items)
        return t

    @property
    def multiplicity(self) -> dict[int, int]:
        return dict(self.items)

    def count(self, length: int) -> int:
        for l, m in self.items:
            if l == length:
                return m
        return 0

    @property
    def parts(self) -> tuple[int, ...]:
        """The cycle type as a weakly decreasing partition of n."""
        out: list[int] = []
        for l, m in reversed(self.items):
            out.extend([l] * m)
        return tuple(out)

    def even_cycle_count(self) -> int:
        return sum(m for l, m in self.items if l % 2 == 0)

    def has_even(self) -> bool:
        return any(l % 2 == 0 for l, _ in self.items)

    def has_odd(self) -> bool:
        return any(l % 2 for l, _ in self.items)

    def __str__(self):
        return "{" + ", ".join(f"{l}:{m}" for l, m in self.items) + "}"


def _cycles_of(image: Sequence[int]) -> list[tuple[int, ...]]:
    n = len(image)
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = image[j - 1]
        # start is the smallest unseen element, hence the minimum of its cycle
        cycles.append(tuple(cyc))
    return cycles


def cycle_decompose(w: Permutation) -> CycleDecomposition:
    return CycleDecomposition(w.n, tuple(_cycles_of(w.image)))


def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation of [n] from disjoint cycles; omitted elements are fixed."""
    if n < 1:
        raise PermutationError("a permutation needs n >= 1")
    img = list(range(1, n + 1))
    used: set[int] = set()
    for cyc in cycles:
        cyc = tuple(cyc)
        if not cyc:
            raise PermutationError("empty cycle")
        for x in cyc:
            if not 1 <= x <= n:
                raise PermutationError(f"element {x} is outside [1..{n}]")
            if x in used:
                raise PermutationError(f"element {x} is repeated")
            used.add(x)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    return Permutation._trusted(tuple(img))


def cycle_type(w: Permutation) -> CycleType:
    return CycleType.from_mapping(w.n, Counter(len(c) for c in _cycles_of(w.image)))


_CYCLES_RE = re.compile(r"\s*(?:\(\s*\d+\s*(?:,\s*\d+\s*)*\)\s*)*")
_ONE_CYCLE_RE = re.compile(r"\(([^)]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1,2)(3,4,5,6)"`` into a permutation of [n]."""
    if _CYCLES_RE.fullmatch(text) is None:
        raise PermutationError(f"malformed cycle notation: {text!r}")
    cycles = [
        [int(tok) for tok in body.split(",")]
        for body in _ONE_CYCLE_RE.findall(text)
    ]
    return from_cycles(n, cycles)


def format_cycles(w: Permutation) -> str:
    return "".join(
        "(" + ",".join(map(str, c)) + ")" for c in _cycles_of(w.image)
    )
