"""Published reference data for the verification suites.

Values are transcribed from the source tables/figures (decimal commas
normalized to points).  Entries marked `MISPRINTS` are arithmetically
inconsistent with their own row (e.g. a polynomial cell whose value at 1
is not the row's sequence member); the suites assert the corrected value
and flag the printed one.  Constants tagged DERIVED_* were computed once
with the independent oracles in the test suite and frozen here.
"""
from __future__ import annotations

from fractions import Fraction as Fr

#: Spiral constant, 12 published decimals.
C2 = -2.157782996659

# --- winding-distance table (suite: table1) ---------------------------------
# (probe n, successor m, printed distance sqrt(m)-sqrt(n))
TABLE1_ROWS = (
    (2, 21, 3.16836), (3, 24, 3.16693), (5, 29, 3.14910), (9, 38, 3.16441),
    (10, 40, 3.16228), (11, 42, 3.16412), (16, 51, 3.14143), (17, 53, 3.15700),
    (20, 58, 3.14364), (23, 63, 3.14142), (26, 68, 3.14719), (31, 76, 3.15003),
    (33, 79, 3.14363), (35, 82, 3.13931), (45, 97, 3.14065), (47, 100, 3.14435),
    (49, 103, 3.14889), (56, 113, 3.14683), (66, 127, 3.14539), (74, 138, 3.14501),
    (77, 142, 3.14141), (101, 174, 3.14103), (104, 178, 3.14363), (107, 182, 3.14666),
    (114, 191, 3.14320), (121, 200, 3.14213), (128, 209, 3.14312), (139, 223, 3.14336),
    (143, 228, 3.14141), (171, 263, 3.14058), (175, 268, 3.14195), (179, 273, 3.14362),
    (188, 284, 3.14099), (192, 289, 3.14359),
)
# Printed per-winding averages.  The published groups follow the computed
# winding of m for windings 2-4; the final printed group pools windings >= 5.
TABLE1_WINDING_AVGS = {2: 3.1592037, 3: 3.1443455, 4: 3.14428, 5: 3.142395}
TABLE1_FOLD_AT = 5

# --- exemplary spiral-arm sequences (suite: table2) --------------------------
# group -> system name -> printed sequence prefix
TABLE2 = {
    "div:19": {"N1": (19, 76, 152, 247, 361), "P1": (19, 38, 76, 133, 209)},
    "div:17": {"N1": (51, 136, 238, 357), "P1": (85, 136, 204, 289)},
    "div:13": {"N1": (39, 104, 195, 312), "N2": (13, 65, 143, 247),
               "P1": (39, 65, 104, 156)},
    "div:11": {"N1": (22, 77, 154, 253, 374), "N2": (11, 55, 121, 209, 319),
               "P1": (33, 44, 77, 132, 209), "P2": (33, 55, 99, 165, 253)},
    "div:7": {"N1": (14, 49, 105, 182, 280), "N2": (7, 49, 112, 196, 301),
              "N3": (21, 70, 140, 231, 343), "P1": (28, 49, 91, 154, 238),
              "P2": (21, 35, 70, 126, 203), "P3": (21, 28, 56, 105, 175)},
    "div:5": {"N1": (25, 80, 155, 250, 365), "N2": (5, 45, 105, 185, 285),
              "N3": (45, 110, 195, 300), "N4": (15, 65, 135, 225, 335),
              "P1": (15, 40, 85, 150, 235), "P2": (10, 20, 50, 100, 170),
              "P3": (10, 25, 60, 115, 190), "P4": (10, 30, 70, 130, 210)},
    "div:3": {"N1": (24, 69, 135, 222, 330), "N2": (27, 75, 144, 234, 345),
              "N3": (9, 39, 90, 162, 255), "N4": (12, 45, 99, 174, 270),
              "N5": (15, 51, 108, 186, 285), "N6": (3, 21, 60, 120, 201),
              "N7": (3, 24, 66, 129, 213), "P1": (21, 48, 93, 156, 237),
              "P2": (12, 42, 90, 156, 240), "P3": (9, 24, 57, 108, 177),
              "P4": (3, 21, 57, 111, 183), "P5": (6, 27, 66, 123, 198),
              "P6": (6, 30, 72, 132, 210)},
    "div:2": {"N1": (2, 26, 70, 134, 218), "N2": (4, 30, 76, 142, 228),
              "N3": (6, 34, 82, 150, 238), "N4": (8, 38, 88, 158, 248),
              "N5": (6, 38, 90, 162, 254), "N6": (10, 44, 98, 172, 266),
              "N7": (10, 46, 102, 178, 274), "N8": (12, 50, 108, 186, 284),
              "N9": (16, 56, 116, 196, 296), "N10": (20, 62, 124, 206, 308),
              "P1": (8, 38, 86, 152, 236), "P2": (2, 16, 48, 98, 166),
              "P3": (6, 22, 56, 108, 178), "P4": (4, 22, 58, 112, 184),
              "P5": (2, 22, 60, 116, 190), "P6": (6, 28, 68, 126, 202),
              "P7": (6, 30, 72, 132, 210), "P8": (6, 14, 40, 84, 146, 226),
              "P9": (12, 40, 86, 150, 232)},
    "squares": {"Q1": (1, 16, 49, 100, 169, 256), "Q2": (4, 25, 64, 121, 196, 289),
                "Q3": (9, 36, 81, 144, 225, 324)},
}

# Rotation direction of each published system (Q arms curl positive).
def system_direction(name: str) -> str:
    return "P" if name[0] in ("P", "Q") else "N"


# --- system-counting rule rows (suite: rule52) -------------------------------
# (divisor p, direction, system count, second differential)
RULE52_ROWS = (
    (2, "N", 10, 20), (2, "P", 9, 18),
    (3, "N", 7, 21), (3, "P", 6, 18),
    (5, "N", 4, 20), (5, "P", 4, 20),
    (7, "N", 3, 21), (7, "P", 3, 21),
    (11, "N", 2, 22), (11, "P", 2, 22),
    (13, "N", 2, 26), (13, "P", 1, 13),
    (17, "N", 1, 17), (17, "P", 1, 17),
    (19, "N", 1, 19), (19, "P", 1, 19),
)
SQUARES_SYSTEMS = ("P", 3, 18)   # direction, count, second differential

# --- polynomial tables (suite: table3) ---------------------------------------
# rows: (group, system, sequence, ((a, b, c) for f1..), printed as transcribed).
# Half-integers are exact Fractions.
def _h(x) -> Fr:
    return Fr(x) if isinstance(x, int) else Fr(int(x * 2), 2)


def _row(group, system, seq, *polys):
    return (group, system, tuple(seq),
            tuple((_h(a), _h(b), _h(c)) for a, b, c in polys))


TABLE3_ROWS = (
    _row("div:19", "N1", (19, 76, 152, 247, 361, 494),
         (9.5, 28.5, -19), (9.5, 47.5, 19), (9.5, 66.5, 76), (9.5, 85.5, 152)),
    _row("div:19", "P1", (19, 38, 76, 133, 209, 304),
         (9.5, -9.5, 19), (9.5, 9.5, 19), (9.5, 28.5, 38), (9.5, 47.5, 76)),
    _row("div:17", "N1", (51, 136, 238, 357, 493, 646),
         (8.5, 59.5, -17), (8.5, 76.5, 51), (8.5, 93.5, 136), (8.5, 111, 238)),
    _row("div:17", "P1", (34, 51, 85, 136, 204, 289),
         (8.5, -8.5, 34), (8.5, 8.5, 34), (8.5, 25.5, 51), (8.5, 42.5, 85)),
    _row("div:13", "N1", (39, 104, 195, 312, 455, 624),
         (13, 26, 0), (13, 52, 39), (13, 78, 104), (13, 104, 195)),
    _row("div:13", "N2", (13, 65, 143, 247, 377, 533),
         (13, 13, -13), (13, 39, 13), (13, 65, 65), (13, 91, 143)),
    _row("div:13", "P1", (26, 39, 65, 104, 156, 221),
         (6.5, -6.5, 26), (6.5, 6.5, 26), (6.5, 19.5, 39), (6.5, 32.5, 65)),
    _row("div:11", "N1", (22, 77, 154, 253, 374, 517),
         (11, 22, -11), (11, 44, 22), (11, 66, 77), (11, 88, 154)),
    _row("div:11", "N2", (11, 55, 121, 209, 319, 451),
         (11, 11, -11), (11, 33, 11), (11, 55, 55), (11, 77, 121)),
    _row("div:11", "P1", (33, 44, 77, 132, 209, 308),
         (11, -22, 44), (11, 0, 33), (11, 22, 44), (11, 44, 77)),
    _row("div:11", "P2", (33, 55, 99, 165, 253, 363),
         (11, -11, 33), (11, 11, 33), (11, 33, 55), (11, 55, 99)),
    _row("div:7", "N1", (14, 49, 105, 182, 280, 399),
         (10.5, 3.5, 0), (10.5, 24.5, 14), (10.5, 45.5, 49), (10.5, 66.5, 105)),
    _row("div:7", "N2", (7, 49, 112, 196, 301, 427),
         (10.5, 10.5, -14), (10.5, 31.5, 7), (10.5, 52.5, 49), (10.5, 73.5, 112)),
    _row("div:7", "N3", (21, 70, 140, 231, 343, 476),
         (10.5, 17.5, -7), (10.5, 38.5, 21), (10.5, 59.5, 70), (10.5, 80.5, 140)),
    _row("div:7", "P1", (28, 49, 91, 154, 238, 343),
         (10.5, -10.5, 28), (10.5, 10.5, 28), (10.5, 31.5, 49), (10.5, 52.5, 91)),
    _row("div:7", "P2", (21, 35, 70, 126, 203, 301),
         (10.5, -17.5, 28), (10.5, 3.5, 21), (10.5, 24.5, 35), (10.5, 45.5, 70)),
    _row("div:7", "P3", (21, 28, 56, 105, 175, 266),
         (10.5, -24.5, 35), (10.5, 3.5, 21), (10.5, 17.5, 28), (10.5, 38.5, 56)),
    _row("div:5", "N1", (25, 80, 155, 250, 365, 500),
         (10, 25, -10), (10, 45, 25), (10, 65, 80), (10, 85, 155)),
    _row("div:5", "N2", (5, 45, 105, 185, 285, 405),
         (10, 10, -15), (10, 30, 5), (10, 50, 45), (10, 70, 105)),
    _row("div:5", "N3", (45, 110, 195, 300, 425, 570),
         (10, 35, 0), (10, 55, 45), (10, 75, 110), (10, 95, 195)),
    _row("div:5", "N4", (15, 65, 135, 225, 335, 465),
         (10, 20, 15), (10, 40, 15), (10, 60, 65), (10, 80, 135)),
    _row("div:5", "P1", (15, 40, 85, 150, 235, 340),
         (10, -5, 10), (10, 15, 15), (10, 35, 40), (10, 55, 85)),
    _row("div:5", "P2", (10, 20, 50, 100, 170, 260),
         (10, -20, 20), (10, 0, 10), (10, 20, 20), (10, 40, 50)),
    _row("div:5", "P3", (10, 25, 60, 115, 190, 285),
         (10, -15, 15), (10, 5, 10), (10, 25, 25), (10, 45, 60)),
    _row("div:5", "P4", (10, 30, 70, 130, 210, 310),
         (10, -10, 10), (10, 10, 10), (10, 30, 30), (10, 50, 70)),
    _row("div:3", "N1", (24, 69, 135, 222, 330, 459),
         (10.5, 13.5, 0), (10.5, 34.5, 24), (10.5, 55.5, 69), (10.5, 76.5, 135)),
    _row("div:3", "N2", (27, 75, 144, 234, 345, 477),
         (10.5, 16.5, 0), (10.5, 37.5, 27), (10.5, 58.5, 75), (10.5, 79.5, 144)),
    _row("div:3", "N3", (9, 39, 90, 162, 255, 369),
         (10.5, -1.5, 0), (10.5, 19.5, 9), (10.5, 40.5, 39), (10.5, 61.5, 90)),
    _row("div:3", "N4", (12, 45, 99, 174, 270, 387),
         (10.5, 1.5, 0), (10.5, 22.5, 12), (10.5, 43.5, 45), (10.5, 64.5, 99)),
    _row("div:3", "N5", (15, 51, 108, 186, 285, 405),
         (10.5, 4.5, 0), (10.5, 25.5, 15), (10.5, 46.5, 51), (10.5, 67.5, 108)),
    _row("div:3", "N6", (3, 21, 60, 120, 201, 303),
         (10.5, -13.5, 6), (10.5, 7.5, 3), (10.5, 28.5, 21), (10.5, 49.5, 60)),
    _row("div:3", "N7", (3, 24, 66, 129, 213, 318),
         (10.5, -10.5, 3), (10.5, 10.5, 3), (10.5, 31.5, 24), (10.5, 52.5, 66)),
    _row("div:3", "P1", (12, 21, 48, 93, 156, 237),
         (9, -18, 21), (9, 0, 12), (9, 18, 21), (9, 36, 48)),
    _row("div:3", "P2", (12, 42, 90, 156, 240, 342),
         (9, 3, 0), (9, 21, 12), (9, 39, 42), (9, 57, 90)),
    _row("div:3", "P3", (9, 24, 57, 108, 177, 264),
         (9, -12, 12), (9, 6, 9), (9, 24, 24), (9, 42, 57)),
    _row("div:3", "P4", (3, 21, 57, 111, 183, 273),
         (9, -9, 3), (9, 9, 3), (9, 27, 21), (9, 45, 57)),
    _row("div:3", "P5", (6, 27, 66, 123, 198, 291),
         (9, -6, 3), (9, 12, 6), (9, 30, 27), (9, 48, 66)),
    _row("div:3", "P6", (6, 30, 72, 132, 210, 306),
         (9, -3, 0), (9, 15, 6), (9, 33, 30), (9, 51, 72)),
    _row("div:2", "N1", (2, 26, 70, 134, 218, 322),
         (10, -6, -2), (10, 14, 2)),
    _row("div:2", "N2", (4, 30, 76, 142, 228, 334),
         (10, -4, -2), (10, 16, 4), (10, 36, 30), (10, 56, 76)),
    _row("div:2", "N3", (6, 34, 82, 150, 238, 346),
         (10, -2, -2), (10, 18, 6), (10, 38, 34), (10, 58, 82)),
    _row("div:2", "N4", (8, 38, 88, 158, 248, 358),
         (10, 0, -2), (10, 20, 8), (10, 40, 38), (10, 60, 88)),
    _row("div:2", "N5", (6, 38, 90, 162, 254, 366),
         (10, 2, -6), (10, 22, 6), (10, 42, 38), (10, 62, 90)),
    _row("div:2", "N6", (10, 44, 98, 172, 266, 380),
         (10, 4, -4), (10, 24, 10), (10, 44, 44), (10, 64, 98)),
    _row("div:2", "N7", (10, 46, 102, 178, 274, 390),
         (10, 6, -6), (10, 26, 10), (10, 46, 46), (10, 66, 102)),
    _row("div:2", "N8", (12, 50, 108, 186, 284, 402),
         (10, 8, -6), (10, 28, 12), (10, 48, 50), (10, 68, 108)),
    _row("div:2", "N9", (16, 56, 116, 196, 296, 416),
         (10, 10, -4), (10, 30, 16), (10, 50, 56), (10, 70, 116)),
    _row("div:2", "N10", (20, 62, 124, 206, 308, 430),
         (10, 12, -2), (10, 32, 20), (10, 52, 62), (10, 72, 124)),
    _row("div:2", "P1", (8, 38, 86, 152, 236, 338),
         (9, 3, -4), (9, 21, 8), (9, 39, 38), (9, 57, 86)),
    _row("div:2", "P2", (2, 16, 48, 98, 166, 252),
         (9, -13, 6), (9, 5, 2), (9, 23, 16), (9, 41, 48)),
    _row("div:2", "P3", (6, 22, 56, 108, 178, 266),
         (9, -11, 8), (9, 7, 6), (9, 25, 22), (9, 43, 56)),
    _row("div:2", "P4", (4, 22, 58, 112, 184, 274),
         (9, -9, 4), (9, 9, 4), (9, 27, 22), (9, 45, 58)),
    _row("div:2", "P5", (2, 22, 60, 116, 190, 282),
         (9, -7, 0), (9, 11, 2), (9, 29, 22), (9, 47, 60)),
    _row("div:2", "P6", (6, 28, 68, 126, 202, 296),
         (9, -5, 2), (9, 13, 6), (9, 31, 28), (9, 49, 68)),
    _row("div:2", "P7", (6, 30, 72, 132, 210, 306),
         (9, -3, 0), (9, 15, 6), (9, 33, 30), (9, 51, 72)),
    _row("div:2", "P8", (6, 14, 40, 84, 146, 226),
         (9, -19, 16), (9, -1, 6), (9, 17, 14), (9, 35, 40)),
    _row("div:2", "P9", (12, 40, 86, 150, 232, 332),
         (9, 1, 2), (9, 19, 12), (9, 37, 40), (9, 55, 86)),
    _row("squares", "Q1", (1, 16, 49, 100, 169, 256),
         (9, -12, 4), (9, 6, 1), (9, 24, 16), (9, 42, 49)),
    _row("squares", "Q2", (4, 25, 64, 121, 196, 289),
         (9, -6, 1), (9, 12, 4), (9, 30, 25), (9, 48, 64)),
    _row("squares", "Q3", (9, 36, 81, 144, 225, 324),
         (9, 0, 0), (9, 18, 9), (9, 36, 36), (9, 54, 81)),
)

# Printed polynomial cells inconsistent with their own sequence
# (group, system, window j) -> corrected (a, b, c).  f_j must satisfy
# f_j(1) = sequence[j-1]; the printed cells fail that identity.
MISPRINTS = {
    ("div:17", "N1", 4): (_h(8.5), _h(110.5), _h(238)),  # printed 111x
    ("div:7", "P3", 2): (_h(10.5), _h(-3.5), _h(21)),    # printed +3.5x
    ("div:5", "N4", 1): (_h(10), _h(20), _h(-15)),       # printed +15
}

# --- band-area ratios (suite: fig7) ------------------------------------------
FIG7_RATIOS = {1: 2.932696777, 2: 1.987148057, 3: 1.662221486,
               50: 1.039998693, 51: 1.039214454}

# --- square-number arm geometry (suite: fig15) -------------------------------
# Angle column: cumulative same-arm angles along Q1 (members 1, 16, 49, 100,
# 169, 256), printed against a zero at the first member's ray.
FIG15_CUM_ANGLES = (0.0, 22.88582334, 40.12815644, 56.75743814,
                    73.20458755, 89.56818432)
FIG15_DIFFS = {7: 16.6292817, 10: 16.44714941, 13: 16.36359677}
FIG15_POLY = (_h(9), _h(-12), _h(4))
SAME_ARM_LIMIT_DEG = 16.22533  # 360 - 3*(360/pi)

# --- axis-crossing difference graph (suite: fig16) ---------------------------
FIG16_ROOTS = (2, 18, 154, 110, 186, 282)   # as printed; winding 3 prints 154
FIG16_COMPUTED_W3 = 54                      # brute-force crossing; see suite
FIG16_ANGLES = (45.0, 4.78344235, -0.26102520, -0.87145670,
                -0.10910812, 1.25786779)
FIG16_POLY = (_h(10), _h(-14), _h(6))
FIG16_SECOND_DIFF = 20

# --- Fibonacci constants (suite: fib) ----------------------------------------
FIB_ALPHAS_DEG = (45.0, 35.26, 56.57, 67.01, 88.34, 111.40)
SAW_BRACKET = (1.272242, 1.272507)
SAW_CONJECTURE = 1.27201965          # sqrt(golden mean)
ARC_MEASURED = (2.05819, 0.0003)     # value +/- uncertainty
ARC_CONJECTURE = 2.058171            # golden * sqrt(golden)
FIG14B_RATIOS = (1.41421, 2.63896, 1.96442, 2.15124, 2.05542)

# --- prime-rich quadratics (suite: primes) ------------------------------------
PRIME_POLYS = {
    "B3": (_h(9), _h(27), _h(17)),    # canonical shift: 9x^2 + 9x - 1
    "K5": (_h(11), _h(25), _h(13)),   # canonical shift: 11x^2 + 3x - 1
}
PRIME_POLY_CANONICAL = {
    "B3": (_h(9), _h(9), _h(-1)),
    "K5": (_h(11), _h(3), _h(-1)),
}
# DERIVED (sieve oracle): prime counts over t = 1..100 / t = 1..50.
DERIVED_PRIME_COUNTS_100 = {"B3": 53, "K5": 30}
DERIVED_PRIME_COUNTS_50 = {"B3": 31, "K5": 14}

# --- misc ---------------------------------------------------------------------
ARCHIMEDEAN_INTERCEPT = 1.078891498   # -C2 / 2, as printed
PI_PERCENT_WINDING5 = 99.97447        # accuracy column of the distance table
