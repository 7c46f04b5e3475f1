"""EE/OE parity classes and their three-way type splits.

EE permutations have an even number of even-length cycles, OE an odd
number.  Each class is cut into types 1, 2, 3; the rules differ between even
and odd n, because at odd n the type-1 permutations carry one fixed point.

Every label depends only on the cycle type, so the functions here take a
:class:`CycleType`; ``classify`` is the convenience entry point for a
permutation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .perm_core import CycleType, Permutation, cycle_decompose, cycle_type
from .squares import is_perfect_square

__all__ = [
    "ParityClass",
    "ClassLabel",
    "Classification",
    "ClassificationError",
    "parity_class",
    "ee_type",
    "oe_type",
    "class_label",
    "ps_type",
    "odd_support",
    "classify",
    "LABELS",
]


class ClassificationError(ValueError):
    pass


class ParityClass(str, enum.Enum):
    EE = "EE"
    OE = "OE"

    def __str__(self):
        return self.value


@dataclass(frozen=True, order=True)
class ClassLabel:
    parity: ParityClass
    type_index: int

    def __str__(self):
        return f"{self.parity.value}{self.type_index}"

    @classmethod
    def parse(cls, text: str) -> "ClassLabel":
        text = text.strip().upper()
        if len(text) != 3 or text[:2] not in ("EE", "OE") or text[2] not in "123":
            raise ClassificationError(f"unknown class label {text!r}")
        return cls(ParityClass(text[:2]), int(text[2]))


LABELS = tuple(ClassLabel(p, i) for p in ParityClass for i in (1, 2, 3))


def parity_class(t: CycleType) -> ParityClass:
    return ParityClass.EE if t.even_cycle_count() % 2 == 0 else ParityClass.OE


def _one_fixed_point_rest_even(t: CycleType) -> bool:
    return t.count(1) == 1 and all(l % 2 == 0 for l, _ in t.items if l != 1)


def ee_type(t: CycleType) -> int:
    if parity_class(t) is not ParityClass.EE:
        raise ClassificationError(f"cycle type {t} is OE, not EE")
    if not t.has_even():
        return 2
    if t.n % 2 == 0:
        return 1 if not t.has_odd() else 3
    return 1 if _one_fixed_point_rest_even(t) else 3


def oe_type(t: CycleType) -> int:
    if parity_class(t) is not ParityClass.OE:
        raise ClassificationError(f"cycle type {t} is EE, not OE")
    fixed = t.count(1)
    if t.n % 2 == 0:
        if not t.has_odd():
            return 1
        return 2 if fixed == 0 else 3
    if fixed == 1:
        return 1 if _one_fixed_point_rest_even(t) else 2
    return 3


def class_label(t: CycleType) -> ClassLabel:
    p = parity_class(t)
    return ClassLabel(p, ee_type(t) if p is ParityClass.EE else oe_type(t))


def ps_type(t: CycleType) -> Optional[int]:
    """The EE type of a perfect-square cycle type, None for non-squares."""
    if not is_perfect_square(t) or parity_class(t) is not ParityClass.EE:
        return None
    return ee_type(t)


def odd_support(w: Permutation) -> frozenset[int]:
    """Elements of w lying in odd-length cycles."""
    return frozenset(x for c in cycle_decompose(w) if len(c) % 2 for x in c)


@dataclass(frozen=True)
class Classification:
    label: ClassLabel
    perfect_square: bool
    cycle_type: CycleType
    odd_support: frozenset[int]

    @property
    def ps_flag(self) -> str:
        return "PS" if self.perfect_square else "NPS"


def classify(w: Permutation) -> Classification:
    t = cycle_type(w)
    return Classification(class_label(t), is_perfect_square(t), t, odd_support(w))
