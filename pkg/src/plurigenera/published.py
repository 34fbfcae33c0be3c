"""Published values reproduced by :mod:`plurigenera.verify`.

Basket strings use the ``mult*r/a`` grammar of :meth:`Basket.parse`.
"""

from __future__ import annotations

# Appendix table as printed:
# (no, r, first weight, second weight, nabla'_1..4, lambda'_1..3 or None)
PRINTED_TABLE = [
    (1, 2, 1, -1, (1, 1, 1, -1), (1, 1, 0)),
    (2, 3, 2, -2, (1, 5, 1, 2), (1, 3, 1)),
    (3, 4, 3, -3, (1, 7, 1, 3), (1, 4, 1)),
    (4, 5, 4, -4, (1, 8, 1, 10), (1, 4, 25)),
    (5, 5, 3, -3, (2, 7, 1, 2), (2, 4, 17)),
    (6, 6, 5, -5, (1, 8, 4, 14), (1, 4, 41)),
    (7, 7, 6, -6, (1, 8, 6, 18), (1, 4, 52)),
    (8, 7, 5, -5, (3, 8, 3, 5), (3, 5, 24)),
    (9, 7, 4, -4, (2, 12, 3, 7), (2, 7, 8)),
    (10, 8, 7, -7, (1, 8, 7, 25), (1, 4, 59)),
    (11, 8, 5, -5, (3, 12, 3, 3), (3, 7, 22)),
    (12, 9, 8, -8, (1, 8, 7, 35), (1, 4, 65)),
    (13, 9, 7, -7, (4, 9, 4, 10), (4, 6, 27)),
    (14, 9, 5, -5, (2, 15, 2, 17), (2, 8, 29)),
    (15, 10, 9, -9, (1, 8, 7, 43), (1, 4, 70)),
    (16, 10, 7, -7, (3, 17, 4, 13), (3, 10, 11)),
    (17, 11, 10, -10, (1, 8, 7, 50), (1, 4, 74)),
    (18, 11, 9, -9, (5, 10, 5, 13), (5, 7, 29)),
    (19, 11, 8, -8, (4, 17, 4, 8), (4, 10, 25)),
    (20, 11, 7, -7, (3, 19, 4, 12), (3, 11, 10)),
    (21, 11, 6, -6, (2, 16, 5, 27), (2, 8, 67)),
    (22, 12, 11, -11, (1, 8, 7, 56), (1, 4, 77)),
    (23, 12, 7, -7, (5, 15, 4, 9), (5, 9, 42)),
    (24, 13, 12, -12, (1, 8, 7, 61), (1, 4, 79)),
    (25, 13, 11, -11, (6, 11, 6, 15), (6, 8, 30)),
    (26, 13, 10, -10, (4, 22, 5, 17), (4, 13, 13)),
    (27, 13, 9, -9, (3, 22, 3, 22), (3, 12, 31)),
    (28, 13, 8, -8, (5, 19, 4, 6), (5, 11, 40)),
    (29, 13, 7, -7, (2, 16, 10, 33), (2, 8, 94)),
    (30, 14, 13, -13, (1, 8, 7, 65), (1, 4, 80)),
    (31, 14, 11, -11, (5, 22, 5, 12), (5, 13, 27)),
    (32, 14, 9, -9, (3, 23, 3, 28), (3, 12, 55)),
    (33, 15, 14, -14, (1, 8, 7, 68), (1, 4, 80)),
    (34, 15, 13, -13, (7, 12, 7, 16), (7, 9, 30)),
    (35, 15, 11, -11, (4, 26, 5, 16), (4, 15, 11)),
    (36, 15, 8, -8, (2, 16, 13, 44), (2, 8, 111)),
    (37, 16, 15, -15, (1, 8, 7, 70), (1, 4, 80)),
    (38, 16, 13, -13, (5, 27, 6, 20), (5, 16, 14)),
    (39, 16, 11, -11, (3, 24, 6, 38), (3, 12, 92)),
    (40, 16, 9, -9, (7, 17, 7, 16), (7, 11, 51)),
    (41, 17, 16, -16, (1, 8, 7, 71), (1, 4, 80)),
    (42, 17, 15, -15, (8, 13, 8, 16), (8, 10, 30)),
    (43, 17, 14, -14, (6, 27, 6, 15), (6, 16, 28)),
    (44, 17, 13, -13, (4, 29, 4, 26), (4, 16, 32)),
    (45, 17, 12, -12, (7, 22, 5, 12), (7, 13, 59)),
    (46, 17, 11, -11, (3, 24, 9, 42), (3, 12, 108)),
    (47, 17, 10, -10, (5, 29, 7, 21), (5, 17, 19)),
    (48, 17, 9, -9, (2, 16, 14, 61), (2, 8, 124)),
    (49, 18, 17, -17, (1, 8, 7, 71), (1, 4, 80)),
    (50, 18, 13, -13, (7, 26, 5, 8), (7, 15, 57)),
    (51, 18, 11, -11, (5, 31, 7, 19), (5, 18, 18)),
    (52, 19, 18, -18, (1, 8, 7, 71), (1, 4, 80)),
    (53, 19, 17, -17, (9, 14, 9, 15), (9, 11, 30)),
    (54, 19, 16, -16, (6, 32, 7, 22), (6, 19, 15)),
    (55, 19, 15, -15, (5, 33, 6, 19), (5, 19, 12)),
    (56, 19, 14, -14, (4, 31, 4, 38), (4, 16, 80)),
    (57, 19, 13, -13, (3, 24, 14, 47), (3, 12, 135)),
    (58, 19, 12, -12, (8, 23, 7, 14), (8, 14, 66)),
    (59, 19, 11, -11, (7, 29, 7, 11), (7, 17, 47)),
    (60, 19, 10, -10, (2, 16, 14, 78), (2, 8, 135)),
    (61, 20, 19, -19, (1, 8, 7, 71), (1, 4, 80)),
    (62, 20, 17, -17, (7, 32, 7, 17), (7, 19, 29)),
    (63, 20, 13, -13, (3, 24, 16, 51), (3, 12, 146)),
    (64, 20, 11, -11, (9, 19, 9, 23), (9, 13, 56)),
    (65, 21, 20, -10, (1, 8, 7, 71), (1, 4, 80)),
    (66, 21, 19, -19, (10, 15, 10, 14), (10, 12, 30)),
    (67, 21, 17, -17, (5, 36, 5, 29), (5, 20, 33)),
    (68, 21, 16, -16, (4, 32, 7, 48), (4, 16, 117)),
    (69, 21, 13, -13, (8, 31, 7, 9), (8, 18, 62)),
    (70, 21, 11, -11, (2, 16, 14, 93), (2, 8, 144)),
    (71, 22, 21, -21, (1, 8, 7, 71), (1, 4, 80)),
    (72, 22, 19, -19, (7, 37, 8, 24), (7, 22, 16)),
    (73, 22, 17, -17, (9, 29, 6, 14), (9, 17, 76)),
    (74, 22, 15, -15, (3, 24, 19, 62), (3, 12, 163)),
    (75, 22, 13, -13, (5, 37, 5, 39), (5, 20, 60)),
    (76, 23, 22, -22, (1, 8, 7, 71), (1, 4, 80)),
    (77, 23, 21, -21, (11, 16, 11, 13), (11, 13, 30)),
    (78, 23, 20, -20, (8, 37, 8, 19), (8, 22, 30)),
    (79, 23, 19, -19, (6, 40, 7, 22), (6, 23, 13)),
    (80, 23, 18, -18, (9, 33, 6, 10), (9, 19, 74)),
    (81, 23, 17, -17, (4, 32, 13, 56), (4, 16, 149)),
    (82, 23, 16, -16, (10, 25, 10, 21), (10, 16, 75)),
    (83, 23, 15, -15, (3, 24, 20, 69), (3, 12, 170)),
    (84, 23, 14, -14, (5, 38, 5, 45), (5, 20, 84)),
    (85, 23, 13, -13, (7, 39, 9, 30), (7, 23, 24)),
    (86, 23, 12, -12, (2, 16, 14, 106), (2, 8, 151)),
    (87, 24, 23, -23, (1, 8, 7, 71), (1, 4, 80)),
    (88, 24, 19, -19, (5, 39, 5, 48), (5, 20, 105)),
    (89, 24, 17, -17, (7, 41, 10, 28), (7, 24, 27)),
    (90, 24, 13, -13, (11, 21, 11, 28), (11, 15, 59)),
    (91, 25, 24, -24, (1, 8, 7, 71), (1, 4, 80)),
    (92, 25, 23, -23, (12, 17, 12, 12), (12, 14, 30)),
    (93, 25, 22, -22, (8, 42, 9, 26), (8, 25, 17)),
    (94, 25, 21, -21, (6, 43, 6, 32), (6, 24, 34)),
    (95, 25, 19, -19, (4, 32, 18, 61), (4, 16, 176)),
    (96, 25, 18, -18, (7, 43, 10, 26), (7, 25, 26)),
    (97, 25, 17, -17, (3, 24, 21, 86), (3, 12, 183)),
    (98, 25, 16, -16, (11, 26, 11, 26), (11, 17, 78)),
    (99, 25, 14, -14, (9, 39, 9, 20), (9, 23, 52)),
    (100, 25, 13, -13, (2, 16, 14, 117), (2, 8, 156)),
    (101, 26, 25, -25, (1, 8, 7, 71), None),
    (102, 26, 23, -23, (9, 42, 9, 21), None),
    (103, 26, 21, -21, (5, 40, 8, 58), None),
    (104, 26, 19, -19, (11, 31, 10, 19), None),
    (105, 26, 17, -17, (3, 24, 21, 96), None),
    (106, 26, 15, -15, (7, 45, 9, 28), None),
    (107, 27, 26, -26, (1, 8, 7, 71), None),
    (108, 27, 25, -25, (13, 18, 13, 11), None),
    (109, 27, 23, -23, (7, 47, 8, 25), None),
    (110, 27, 22, -22, (11, 36, 7, 16), None),
    (111, 27, 20, -20, (4, 32, 22, 69), None),
    (112, 27, 19, -19, (10, 41, 10, 14), None),
    (113, 27, 17, -17, (8, 46, 11, 34), None),
    (114, 27, 16, -16, (5, 40, 11, 65), None),
    (115, 27, 14, -14, (2, 16, 14, 126), None),
]

# rows whose printed label or values are known slips, with the reading used
KNOWN_TABLE_SLIPS = {
    65: "label printed as 1/21(20,-10,1), which is not of the form 1/r(a,-a,1); read as 1/21(20,-20,1)",
}

# last row carrying lambda' columns in print
LAMBDA_ROWS_PRINTED = 100

# (plurigenus combination, printed constant, Delta indices on the right-hand side)
STEP1_IDENTITIES = [
    ({3: 1, 2: -5}, 10, (2,)),
    ({6: 1, 3: -1, 2: -50}, 144, (3, 4, 5)),
    ({9: 1, 6: -1, 2: -149}, 441, (6, 7, 8)),
    ({18: 1, 9: -1, 2: -1581}, 4725, tuple(range(9, 18))),
]
THM14_IDENTITIES = [
    ({3: 1, 2: -5}, 10, (2,)),
    ({5: 1, 3: -1, 2: -25}, 71, (3, 4)),
    ({15: 1, 5: -1, 2: -985}, 2935, tuple(range(5, 15))),
]

# label -> (basket, printed note on l(2) or None)
SOLUTIONS = {
    "i": ("3*2/1,2*5/3,1*10/7", "=3"),
    "ii": ("4*2/1,3*3/2,1*5/4,1*5/3", "=3"),
    "iii": ("2*2/1,2*3/2,1*4/3,1*12/7", "=3"),
    "iv": ("5*2/1,2*4/3,1*5/4,1*5/3", "=3"),
    "v": ("5*2/1,4*3/2,1*6/5", "=3"),
    "vi": ("2*4/3,1*5/3,1*7/4,1*8/5", ">3"),
    "vii": ("9*3/2", "=3"),
    "viii": ("2*2/1,2*3/2,1*4/3,1*5/3,1*7/5", None),
    "ix": ("6*2/1,1*3/2,2*4/3,1*6/5", "=3"),
    "x": ("4*2/1,2*5/4,2*5/3", "=3"),
    "xi": ("1*2/1,6*3/2,2*4/3", "=3"),
    "xii": ("1*10/7,2*5/3,3*2/1", "=3"),
    "xiii": ("1*4/3,2*8/5,3*2/1", "=3"),
    "xiv": ("2*3/2,1*4/3,1*12/7,2*2/1", ">3"),
    "xv": ("3*3/2,1*5/4,1*5/3,4*2/1", "=3"),
    "xvi": ("4*3/2,1*6/5,5*2/1", "=3"),
}

# label, family, r_max, assumed plurigenera, printed transformed target, expected solutions
SEARCH_CASES = [
    ("Step1", "nabla", 27, {2: 0, 3: 0, 6: 0, 9: 0, 18: 0}, (10, 34, 9, 14), ("i", "ii", "iii")),
    ("Step2-a", "nabla", 27, {2: 0, 3: 0, 6: 0, 9: 0, 18: 1}, (10, 34, 9, 13), ("iv",)),
    ("Step2-b", "nabla", 27, {2: 0, 3: 0, 6: 1, 9: 0, 18: 1}, (10, 33, 13, 17), ("v",)),
    ("Step2-c", "nabla", 27, {2: 0, 3: 0, 6: 0, 9: 1, 18: 1}, (10, 34, 8, 21), ()),
    ("Step2-d", "nabla", 27, {2: 0, 3: 1, 6: 1, 9: 1, 18: 1}, (9, 45, 9, 18), ("vi", "vii")),
    ("Step2-e", "nabla", 27, {2: 0, 3: 0, 6: 1, 9: 1, 18: 1}, (10, 33, 12, 25), ()),
    ("Step3-a", "nabla", 27, {2: 0, 3: 0, 6: 0, 9: 0, 18: 2}, (10, 34, 9, 12), ("viii",)),
    ("Step3-b", "nabla", 27, {2: 0, 3: 0, 6: 1, 9: 0, 18: 2}, (10, 33, 13, 16), ("ix",)),
    ("Step3-c", "nabla", 27, {2: 0, 3: 0, 6: 0, 9: 1, 18: 2}, (10, 34, 8, 20), ("x",)),
    ("Step3-d", "nabla", 27, {2: 0, 3: 1, 6: 1, 9: 1, 18: 2}, (9, 45, 9, 17), ("xi",)),
    ("Step3-e", "nabla", 27, {2: 0, 3: 0, 6: 1, 9: 1, 18: 2}, (10, 33, 12, 24), ()),
    ("Thm14", "lambda", 25, {2: 0, 3: 0, 5: 0, 15: 0}, (10, 21, 45), ("xii", "xiii", "xiv", "xv", "xvi")),
]

# P_2 .. P_21 for case (viii) with chi = 1
CASE_VIII_PLURIGENERA = (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 2, 3, 3)

# (m0, m1, d, n_gamma, printed bound, use m1-threshold refinements)
PRINTED_BOUNDS = [
    (14, 18, 3, 2, 56, False),
    (14, 18, 2, 2, 63, True),
    (14, 18, 1, 3, 58, True),
    (6, 10, "unknown", 2, 54, True),
]
