"""Published reference data: the E8 worked example and the class tables.

Weights of the worked example are e-coordinates as printed; entries of the
class tables are (class of I, class of J, blocks) with the printed labels.
"""
from __future__ import annotations

from fractions import Fraction

H = Fraction(1, 2)

# E8, I = {2,...,7} (D6), J = {3,4,5,7} (A3 x A1).
E8_EXAMPLE_I = (2, 3, 4, 5, 6, 7)
E8_EXAMPLE_J = (3, 4, 5, 7)
E8_EXAMPLE_OMEGA_J = (H, H, H, H, 3 * H, 3 * H, 5 * H, 17 * H)
E8_EXAMPLE_NORM = 84


def _row(*v):
    return tuple(Fraction(x) for x in v)


_h = lambda *odd: tuple(Fraction(k, 2) for k in odd)  # noqa: E731

# Index -> weight as printed.
E8_EXAMPLE_WEIGHTS_PRINTED = {
    1: _row(0, 1, 2, 3, 4, 5, 2, 5),
    2: _row(0, 1, 2, 3, 4, 5, -2, 5),
    3: _row(0, 1, 2, 3, 4, 6, 3, 3),
    4: _h(1, 3, 5, 7, 9, 11, 1, 7),
    5: _row(0, 1, 2, 3, 4, 5, 5, 2),
    6: _h(-1, 3, 5, 7, 9, 11, 5, 5),
    7: _h(-1, 3, 5, 7, 9, 11, -1, 7),
    8: _row(0, 1, 2, 3, 5, 6, 0, 3),
    9: _row(0, 1, 2, 3, 4, 7, 1, 2),
    10: _row(0, 1, 2, 3, 4, 6, -3, 3),
    11: _h(1, 3, 5, 7, 9, 11, 7, 1),
    12: _h(1, 3, 5, 7, 9, 11, -5, 5),
    13: _row(0, 1, 2, 3, 4, 7, 2, 1),
    14: _row(0, 1, 2, 3, 4, 7, -1, 2),
    15: _row(0, 1, 2, 4, 5, 6, 1, 1),
    16: _row(0, 1, 2, 3, 5, 6, 3, 0),
    17: _h(1, 3, 5, 7, 9, 13, 1, 1),
    18: _row(0, 1, 2, 4, 5, 6, -1, 1),
    19: _h(-1, 3, 5, 7, 9, 11, 7, -1),
    20: _row(0, 1, 2, 3, 4, 7, -2, 1),
    21: _row(0, 1, 2, 3, 4, 5, -5, 2),
    22: _h(-1, 3, 5, 7, 9, 13, -1, 1),
    23: _row(0, 1, 2, 3, 4, 7, 2, -1),
    24: _row(0, 1, 2, 3, 4, 5, 5, -2),
    25: _h(-1, 3, 5, 7, 9, 13, 1, -1),
    26: _h(1, 3, 5, 7, 9, 13, -1, -1),
    27: _row(0, 1, 2, 4, 5, 6, 1, -1),
    28: _h(-1, 3, 5, 7, 9, 11, -7, 1),
    29: _row(0, 1, 2, 3, 5, 6, -3, 0),
    30: _row(0, 1, 2, 4, 5, 6, -1, -1),
    31: _h(1, 3, 5, 7, 9, 11, 5, -5),
    32: _h(1, 3, 5, 7, 9, 11, -7, 1),
    33: _row(0, 1, 2, 3, 4, 7, 1, -2),
    34: _row(0, 1, 2, 3, 4, 7, -2, -1),
    35: _row(0, 1, 2, 3, 4, 6, 3, -3),
    36: _row(0, 1, 2, 3, 4, 7, -1, -2),
    37: _row(0, 1, 2, 3, 5, 6, 0, -3),
    38: _h(-1, 3, 5, 7, 9, 11, 1, -7),
    39: _h(-1, 3, 5, 7, 9, 11, -5, -5),
    40: _h(1, 3, 5, 7, 9, 11, -1, -7),
    41: _row(0, 1, 2, 3, 4, 5, -5, -2),
    42: _row(0, 1, 2, 3, 4, 6, -3, -3),
    43: _row(0, 1, 2, 3, 4, 5, 2, -5),
    44: _row(0, 1, 2, 3, 4, 5, -2, -5),
}

# Row 32 as printed has an odd coordinate sum, so it is not in the E8 lattice
# (solving for x1 gives a half-integer).  The sign of its last coordinate is
# the misprint: with -1/2 it is a weight of the orbit, the only one missing
# from the other 43 rows, and the coefficient table below then matches.
E8_EXAMPLE_CORRECTIONS = {32: _h(1, 3, 5, 7, 9, 11, -7, -1)}

E8_EXAMPLE_WEIGHTS = {**E8_EXAMPLE_WEIGHTS_PRINTED, **E8_EXAMPLE_CORRECTIONS}

# i -> (columns with c = +1, columns with c = -1)
E8_EXAMPLE_JANTZEN = {
    1: ((2, 4, 14, 29, 41, 43), (8, 20, 32)),
    2: ((7, 9, 16, 24, 44), (8, 13, 19)),
    3: ((6, 10, 17, 30, 35, 42), (15, 26, 39)),
    4: ((7, 8, 20, 32, 38), (14, 29, 41)),
    5: ((11, 21, 23, 24, 37, 44), (16, 33, 40)),
    6: ((12, 15, 26, 31, 39), (17, 30, 42)),
    7: ((8, 13, 19, 40), (9, 16, 24)),
    8: ((9, 14, 16, 24, 29, 37, 41), (13, 19, 20, 32)),
    9: ((13, 14, 19, 33), (16, 24)),
    10: ((12, 22, 27, 35, 42), (18, 25, 31)),
    11: ((16, 19, 28, 33, 40), (23, 37, 44)),
    12: ((18, 25, 31, 39), (22, 27, 35)),
    13: ((16, 20, 23, 24), (19,)),
    14: ((20, 32, 36), (29, 41)),
    15: ((17, 18, 27, 30, 42), (26, 39)),
    16: ((19, 23, 29, 37, 44), (24, 33, 40)),
    17: ((22, 25, 26, 39), (30, 42)),
    18: ((22, 27, 30, 35), (25, 31)),
    19: ((24, 32), ()),
    20: ((29, 34, 41), (32,)),
    21: ((28, 34, 37, 41, 43), (29, 36, 38)),
    22: ((25, 26, 31), (27, 35)),
    23: ((33, 34, 40), (37, 44)),
    24: ((41,), ()),
    25: ((26, 27, 35), (31,)),
    26: ((30, 42), (39,)),
    27: ((30, 31), (35,)),
    28: ((29, 32, 36, 38), (34, 37, 43)),
    29: ((32, 34, 37, 43), (36, 38, 41)),
    30: ((39,), (42,)),
    31: ((35, 39), ()),
    32: ((41,), ()),
    33: ((36, 37, 44), (40,)),
    34: ((36, 38), (37, 43)),
    35: ((42,), ()),
    36: ((37, 43), (38,)),
    37: ((38, 40), (43, 44)),
    38: ((40, 43), ()),
    39: ((42,), ()),
    40: ((44,), ()),
    41: ((), ()),
    42: ((), ()),
    43: ((44,), ()),
    44: ((), ()),
}

E8_EXAMPLE_BLOCK_SIZES = (16, 28)
E8_EXAMPLE_SIMPLE_GVM = frozenset({41, 42, 44})
E8_EXAMPLE_ISOLATED_TOP = frozenset({1, 3, 5})


def e8_example_entries() -> dict[tuple[int, int], int]:
    out = {}
    for i, (pos, neg) in E8_EXAMPLE_JANTZEN.items():
        out.update({(i, j): 1 for j in pos})
        out.update({(i, j): -1 for j in neg})
    return out


# Counts of ordered (I, J) pairs giving a disconnected system, |I| + |J| above
# the one-block threshold.
DISCONNECTED_PAIR_COUNTS = {"E6": 110, "E7": 294, "E8": 418}

DISCONNECTED = {
    "E8": [
        ("E7", "A1^3(21)", "2x1"),
        ("D7", "A2xA1^3(8)", "2x1"),
        ("A7", "A3xA2xA1(4)", "2x1"),
        ("E6xA1", "A3xA1(20)", "2x1"),
        ("D5xA1(3)", "A5(4)", "2x1"),
        ("D5xA2", "A3^2(2)", "2x2"),
        ("D6", "A3xA2(10)", "2x2"),
        ("D6", "A2^2xA1^2(2)", "2x4"),
        ("E6xA1", "A2^2(8)", "2x6"),
        ("A4xA3", "D4xA2", "2x6"),
        ("A4xA3", "A5(4)", "2x6"),
        ("E6", "A2^2(8)", "2x12"),
        ("D6", "A3xA1(20)", "16 + 28"),
        ("D4xA2", "A5(4)", "12 + 37"),
        ("A5xA1(3)", "D4xA1(2)", "36 + 60"),
        # Printed with I = E6; see ROW_CORRECTIONS.
        ("E6", "A3(7)", "65 + 80"),
        ("D4xA2", "D4xA1(2)", "72 + 96"),
        ("A5(4)", "D4xA1(2)", "72 + 201"),
        ("A5xA1(3)", "D4", "96 + 144"),
        ("D4xA2", "D4", "2x192"),
        ("A5(4)", "D4", "192 + 504"),
        ("D4xA1(2)", "D4xA1(2)", "288 + 450"),
        ("D4xA1(2)", "D4", "576 + 1224"),
        ("D4", "D4", "1152 + 3366"),
        ("E6xA1", "A2^2xA1(8)", "3x1"),
        ("D6", "A3xA2^1(10)", "3x4"),
        ("D4xA2", "A5xA1(3)", "3x6"),
        ("D4xA2", "D4xA2", "2x12 + 20"),
        ("A5(4)", "A5(4)", "2x12 + 20 + 36"),
        ("A5xA1(3)", "A5(4)", "5x6"),
        ("A4xA3", "A5xA1(3)", "6x1"),
        ("A4xA3", "A4xA3", "7x1"),
        ("A5xA1(3)", "A5xA1(3)", "12x1"),
    ],
    "E7": [
        ("D6", "(A1^3)'(10)", "2x1"),
        ("A5xA1", "(A3xA1)'(9)", "2x1"),
        ("(A5)'(2)", "A3xA1^2(3)", "2x1"),
        ("A4xA1(5)", "A4xA1(5)", "2x1"),
        ("(A5)'(2)", "A2^2xA1(3)", "2x2"),
        ("A3xA2(3)", "D4xA1", "2x2"),
        ("A4xA1(5)", "A4(5)", "2x3"),
        ("(A5)'(2)", "A3(6)", "8 + 12"),
        ("D4xA1", "(A3xA1)'(9)", "8 + 12"),
        ("A4(5)", "A4(5)", "2x10"),
        ("D4", "(A3xA1)'(9)", "2x24"),
        ("D4xA1", "A3(6)", "24 + 33"),
        ("D4", "A3(6)", "48 + 102"),
        ("A5xA1", "A2^2xA1(3)", "3x1"),
        ("(A5)'(2)", "(A3xA1)'(9)", "3x2"),
    ],
    "E6": [
        ("A5", "A1^3(5)", "2x1"),
        ("A2^2xA1", "A3xA1(4)", "2x1"),
        ("A3xA1(4)", "A3(5)", "2x4"),
        ("D4", "A2(5)", "2x6"),
        ("A3(5)", "A3(5)", "8 + 17"),
        ("A2^2xA1", "A2^2xA1", "3x1"),
        ("A3xA1(4)", "A3xA1(4)", "3x1"),
    ],
}

SEMISIMPLE = {
    "E8": [
        ("E8", "0", 1), ("E7", "A2(7)", 1), ("D7", "A2^2(8)", 1), ("A6xA1", "A4xA2xA1", 1),
        ("D5xA2", "A4xA2(4)", 1), ("E6", "D4", 1), ("D6", "A4(6)", 1), ("A6(3)", "D4xA2", 1),
        ("D5(2)", "D5(2)", 1),
        ("E7", "A1^3(21)", 2), ("D7", "A2xA1^3(8)", 2), ("A7", "A3xA2xA1(4)", 2),
        ("E6xA1", "A3xA1(20)", 2), ("D5xA1(3)", "A5(4)", 2), ("E6xA1", "A2^2xA1(8)", 3),
        ("A4xA3", "A5xA1(3)", 6), ("A4xA3", "A4xA3", 7), ("A5xA1(3)", "A5xA1(3)", 12),
    ],
    "E7": [
        ("E7", "0", 1), ("E6", "(A1^3)''", 1), ("D6", "A2(6)", 1), ("A6", "A2xA1^3", 1),
        ("D5xA1", "A2^2(4)", 1), ("D5(2)", "(A3xA1)''(2)", 1), ("(A5)''", "D4", 1),
        ("D4xA1", "A4(5)", 1), ("A4xA2", "A3xA2xA1", 1),
        ("D6", "(A1^3)'(10)", 2), ("A5xA1", "(A3xA1)'(9)", 2), ("(A5)'(2)", "A3xA1^2(3)", 2),
        ("A4xA1(5)", "A4xA1(5)", 2), ("A5xA1", "A2^2xA1(3)", 3),
    ],
    "E6": [
        ("E6", "0", 1), ("D5(2)", "A1^2(10)", 1), ("A5", "A2(5)", 1), ("A4xA1(2)", "A2xA1^2(5)", 1),
        ("D4", "A2^2", 1), ("A4(4)", "A3(5)", 1),
        ("A5", "A1^3(5)", 2), ("A2^2xA1", "A3xA1(4)", 2), ("A2^2xA1", "A2^2xA1", 3),
        ("A3xA1(4)", "A3xA1(4)", 3),
    ],
}

# Printed label -> intended label.  Read literally, "A3xA2^1(10)" is A3xA2(10),
# whose D6 cell already has its own row (2x2).
AMBIGUOUS_LABELS = {("E8", "A3xA2^1(10)"): "A3xA1^2(10)"}

# (kind, printed I label, J label) -> intended I label.  (E6, A3(7)) systems have
# N = 32 and one block; the sizes 65 + 80 belong to (D6, A3(7)) with N = 145.
ROW_CORRECTIONS = {("E8", "E6", "A3(7)"): "D6"}

# Largest system in each type, with its block sizes.
LARGEST_DISCONNECTED = {"E8": ("D4", "D4", 4518), "E7": ("D4", "A3(6)", 150), "E6": ("A3(5)", "A3(5)", 25)}
