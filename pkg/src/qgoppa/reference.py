"""Frozen reference data for the worked examples.

The matrices, residue vectors, and place sequences below were produced
by independent computer-algebra sessions and are kept verbatim as
regression goldens.  Place sequences matter: the algebra system's
internal ordering of the two points in a split pair is a session
artifact that the canonical ordering of :mod:`.curve` does not try to
imitate, so each example records the exact sequence its matrices were
computed against.  All of it is re-derivable from the library itself;
the point of freezing it is byte-level comparability.
"""

from __future__ import annotations

# -- GF(19), curve y^2 = (x-1)(x-2)(x-3)(x-4)(x-5), genus 2 --------------------

GF19_CURVE = "(x-1)*(x-2)*(x-3)*(x-4)*(x-5)"

# the full session place list: infinity, then affine points in session order
GF19_PLACES = [
    "inf",
    (2, 0), (4, 0),
    (16, 14), (16, 5), (7, 13), (7, 6), (17, 11), (17, 8),
    (15, 17), (15, 2), (11, 12), (11, 7),
    (3, 0),
    (6, 14), (6, 5), (12, 13), (12, 6),
    (5, 0), (1, 0),
]

# pair representatives P_1..P_7 in session order (conjugates are (x, -y))
GF19_PAIR_SEQUENCE = [(16, 14), (7, 13), (17, 11), (15, 17), (11, 12), (6, 14), (12, 13)]

GF19_RESIDUES = [3, 11, 1, 10, 14, 5, 12]

# reduced echelon generator of the r=1 code, interleaved column order
GF19_M14_6 = [
    [1, 0, 0, 0, 0, 13, 0, 14, 15, 11, 17, 15, 4, 16],
    [0, 1, 0, 0, 0, 6, 0, 5, 6, 10, 13, 15, 13, 1],
    [0, 0, 1, 0, 0, 10, 0, 7, 12, 11, 2, 6, 6, 14],
    [0, 0, 0, 1, 0, 9, 0, 12, 4, 5, 16, 12, 2, 13],
    [0, 0, 0, 0, 1, 1, 0, 0, 4, 4, 5, 5, 3, 3],
    [0, 0, 0, 0, 0, 0, 1, 1, 17, 17, 5, 5, 11, 11],
]

GF19_M14_5 = [
    [1, 0, 0, 14, 0, 6, 0, 11, 14, 5, 13, 12, 13, 8],
    [0, 1, 0, 5, 0, 13, 0, 8, 7, 16, 17, 18, 4, 9],
    [0, 0, 1, 1, 0, 0, 0, 0, 16, 16, 18, 18, 8, 8],
    [0, 0, 0, 0, 1, 1, 0, 0, 4, 4, 5, 5, 3, 3],
    [0, 0, 0, 0, 0, 0, 1, 1, 17, 17, 5, 5, 11, 11],
]

# the same codes in (X|Z) block order, before and after weight absorption
GF19_G1 = [
    [1, 0, 0, 0, 15, 17, 4, 0, 0, 13, 14, 11, 15, 16],
    [0, 0, 0, 0, 6, 13, 13, 1, 0, 6, 5, 10, 15, 1],
    [0, 1, 0, 0, 12, 2, 6, 0, 0, 10, 7, 11, 6, 14],
    [0, 0, 0, 0, 4, 16, 2, 0, 1, 9, 12, 5, 12, 13],
    [0, 0, 1, 0, 4, 5, 3, 0, 0, 1, 0, 4, 5, 3],
    [0, 0, 0, 1, 17, 5, 11, 0, 0, 0, 1, 17, 5, 11],
]

GF19_G1_ABSORBED = [
    [3, 0, 0, 0, 1, 9, 10, 0, 0, 13, 14, 11, 15, 16],
    [0, 0, 0, 0, 8, 8, 4, 1, 0, 6, 5, 10, 15, 1],
    [0, 11, 0, 0, 16, 10, 15, 0, 0, 10, 7, 11, 6, 14],
    [0, 0, 0, 0, 18, 4, 5, 0, 1, 9, 12, 5, 12, 13],
    [0, 0, 1, 0, 18, 6, 17, 0, 0, 1, 0, 4, 5, 3],
    [0, 0, 0, 10, 10, 6, 18, 0, 0, 0, 1, 17, 5, 11],
]

GF19_G2 = [
    [1, 0, 0, 0, 14, 13, 13, 0, 14, 6, 11, 5, 12, 8],
    [0, 0, 0, 0, 7, 17, 4, 1, 5, 13, 8, 16, 18, 9],
    [0, 1, 0, 0, 16, 18, 8, 0, 1, 0, 0, 16, 18, 8],
    [0, 0, 1, 0, 4, 5, 3, 0, 0, 1, 0, 4, 5, 3],
    [0, 0, 0, 1, 17, 5, 11, 0, 0, 0, 1, 17, 5, 11],
]

GF19_G2_ABSORBED = [
    [3, 0, 0, 0, 6, 8, 4, 0, 14, 6, 11, 5, 12, 8],
    [0, 0, 0, 0, 3, 9, 10, 1, 5, 13, 8, 16, 18, 9],
    [0, 11, 0, 0, 15, 14, 1, 0, 1, 0, 0, 16, 18, 8],
    [0, 0, 1, 0, 18, 6, 17, 0, 0, 1, 0, 4, 5, 3],
    [0, 0, 0, 10, 10, 6, 18, 0, 0, 0, 1, 17, 5, 11],
]

# -- GF(9) = GF(3)[w]/(w^2+2w+2), y^2 = x^5 - 2x^3 + x^2 + 1 -------------------
# The quintic equals (x+1)^3 (x^2+1): the smooth model is z^2 = (x+1)(x^2+1)
# of genus 1, and all session data below lives on that model.

GF9_CURVE = "x^5 - 2*x^3 + x^2 + 1"

# pair representatives as (x coeffs, z coeffs), constant coefficient first
GF9_PAIR_SEQUENCE = [
    ((0,), (2,)),        # x = 0,    z = 2
    ((0, 2), (0, 1)),    # x = w^5,  z = w
    ((2, 1), (1, 2)),    # x = w^7,  z = w^3
    ((1,), (1,)),        # x = 1,    z = 1
]

# residues as powers of w: w^4 = 2, 1 = w^8
GF9_RESIDUES_WPOW = [4, 2, 6, 8]

# [8, 3] generator in w-power notation ('0' denotes zero, 'w^k' otherwise)
GF9_M8_3 = [
    ["1", "0", "0", "w", "w", "1", "w^6", "w^5"],
    ["0", "1", "0", "w^5", "w", "w^6", "w^3", "w^5"],
    ["0", "0", "1", "1", "w^2", "w^2", "w^3", "w^3"],
]

GF9_G3 = [
    ["1", "0", "w", "w^6", "0", "w", "1", "w^5"],
    ["0", "0", "w", "w^3", "1", "w^5", "w^6", "w^5"],
    ["0", "1", "w^2", "w^3", "0", "1", "w^2", "w^3"],
]

GF9_G3_ABSORBED = [
    ["2", "0", "w^7", "w^6", "0", "w", "1", "w^5"],
    ["0", "0", "w^7", "w^3", "1", "w^5", "w^6", "w^5"],
    ["0", "w^2", "1", "w^3", "0", "1", "w^2", "w^3"],
]

GF9_MIN_DISTANCE = 5

# -- GF(3), y^2 = (x^2+1)(x^3+2x^2+1), genus 2 ---------------------------------

GF3_CURVE = "(x^2+1)*(x^3+2*x^2+1)"
GF3_PAIR_SEQUENCE = [((0,), (2,)), ((2,), (2,))]
GF3_M4_2 = [[1, 0, 1, 0], [0, 1, 0, 1]]
GF3_RESIDUES = [2, 1]
GF3_MIN_DISTANCE = 2

# -- binary [7,4,3] block code --------------------------------------------------

HAMMING_GEN = [
    [1, 0, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
    [1, 1, 1, 0, 0, 0, 0],
]

HAMMING_CHECK = [
    [1, 0, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
]

HAMMING_MESSAGE = [1, 0, 1, 0]
HAMMING_CODEWORD = [1, 0, 1, 1, 0, 1, 0]
HAMMING_RECEIVED = [1, 1, 1, 1, 0, 1, 0]
# the printed session gives (0, 1, 1) here, but its own parity-check matrix
# yields (0, 1, 0), consistent with the stated coset leader; see the tests
HAMMING_SYNDROME = [0, 1, 0]
HAMMING_SYNDROME_AS_PRINTED = [0, 1, 1]
HAMMING_LEADER = [0, 1, 0, 0, 0, 0, 0]

# -- GF(5) weighted symplectic example -------------------------------------------

F5_GEN = [[1, 0, 1, 4, 0, 0, 2, 4], [4, 1, 1, 0, 2, 3, 3, 0]]
F5_WEIGHTS = [2, 1, 1, 4]
F5_GEN_ABSORBED = [[2, 0, 1, 1, 0, 0, 2, 4], [3, 1, 1, 0, 2, 3, 3, 0]]

# -- GF(7) CSS example ------------------------------------------------------------

F7_C1 = [[3, 3, 4]]
F7_C2 = [[5, 3, 1]]
F7_DUAL2_SPAN = [[1, 2, 3], [2, 1, 1]]   # (3,3,4) = (1,2,3) + (2,1,1)
F7_PARAMS = (3, 1, 2)

# -- nine-qubit code, 8 x 18 over GF(2) -------------------------------------------

NINE_QUBIT_GEN = [
    [0] * 9 + [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0] * 9 + [1, 0, 1, 0, 0, 0, 0, 0, 0],
    [0] * 9 + [0, 0, 0, 1, 1, 0, 0, 0, 0],
    [0] * 9 + [0, 0, 0, 1, 0, 1, 0, 0, 0],
    [0] * 9 + [0, 0, 0, 0, 0, 0, 1, 1, 0],
    [0] * 9 + [0, 0, 0, 0, 0, 0, 1, 0, 1],
    [1, 1, 1, 1, 1, 1, 0, 0, 0] + [0] * 9,
    [1, 1, 1, 0, 0, 0, 1, 1, 1] + [0] * 9,
]

# -- tower and family arithmetic ----------------------------------------------------

TOWER_M2_I2 = {"n": 30, "genus": 6}
TOWER_BINARY_120 = {"j": 10, "n": 120, "k_lower": 40, "d_lower": 8}
TOWER_INVALID_J = 15          # delta estimate -1/48 < 0
RATE_THRESHOLD_M2 = (1, 3)    # R = 1/3 at delta = 0
