"""Published values of alpha(n), the number of squares in S_n (OEIS A003483)."""

ALPHA_TABLE: dict[int, int] = {
    2: 1,
    3: 3,
    4: 12,
    5: 60,
    6: 270,
    7: 1890,
    8: 14280,
    9: 128520,
    10: 1096200,
    11: 12058200,
    12: 139043520,
    13: 1807565760,
    14: 22642139520,
    15: 339632092800,
    16: 5237183952000,
    17: 89032127184000,
}


def reference_mismatches(compute) -> list[tuple[int, int, int]]:
    """``(n, expected, got)`` for every tabulated n where ``compute(n)`` disagrees."""
    return [(n, v, compute(n)) for n, v in ALPHA_TABLE.items() if compute(n) != v]
