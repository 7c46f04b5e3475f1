"""Perfect-square permutations, EE/OE classes and their census."""

from .perm_core import (
    CycleDecomposition,
    CycleType,
    Permutation,
    PermutationError,
    compose,
    cycle_decompose,
    cycle_type,
    format_cycles,
    from_cycles,
    identity,
    inverse,
    parse_cycles,
    square,
)
from .squares import cycle_power, is_perfect_square, is_square_permutation, square_root
from .classify import (
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
from .maps import (
    Relabeling,
    add_and_swap,
    add_and_swap_inverse,
    join_type3,
    parity_toggle,
    relabel,
    split_type3,
)
from .counting import alpha, census, class_size, partitions, verify_identity

__version__ = "0.1.0"
