"""Hand-checked reference values for the G2 case.

Everything in this file was worked out independently of the library
(orbit enumeration and polynomial division done by hand or with throwaway
scripts) and is frozen here as oracle data.  Tests compare library output
against these dicts structurally; none of the values below are produced
by the code under test.
"""

from __future__ import annotations

# Reduced words of the six determinant -1 elements of the G2 Weyl group
# (generator indices, applied left to right).
NEGATIVE_DET_WORDS = {
    (1,),
    (2,),
    (2, 1, 2),
    (1, 2, 1),
    (2, 1, 2, 1, 2),
    (1, 2, 1, 2, 1),
}

# Second-kind variable x: exponent -> coefficient, 7 terms, constant 1.
X_LAURENT = {
    (-1, 0): 1,
    (1, -1): 1,
    (-2, 1): 1,
    (2, -1): 1,
    (-1, 1): 1,
    (1, 0): 1,
    (0, 0): 1,
}

# Second-kind variable y: 14 terms counted with multiplicity (the constant
# term is 2), i.e. 13 distinct exponents.
Y_LAURENT = {
    (0, 1): 1,
    (3, -1): 1,
    (-3, 2): 1,
    (3, -2): 1,
    (-3, 1): 1,
    (0, -1): 1,
    (1, 0): 1,
    (-1, 1): 1,
    (2, -1): 1,
    (-2, 1): 1,
    (1, -1): 1,
    (-1, 0): 1,
    (0, 0): 2,
}

# The signed orbit sum at (1,1): 12 terms, one per group element.
SINGULAR_ELEMENT = {
    (1, 1): 1,
    (-1, 2): -1,
    (-4, 3): 1,
    (4, -1): -1,
    (5, -2): 1,
    (5, -3): -1,
    (-5, 2): 1,
    (-5, 3): -1,
    (4, -3): 1,
    (1, -2): -1,
    (-1, -1): 1,
    (-4, 1): -1,
}

# Second-kind polynomials for all indices with m + n <= 4, keyed by index;
# each value maps (x degree, y degree) to the integer coefficient.
SECOND_KIND = {
    (0, 0): {(0, 0): 1},
    (1, 0): {(1, 0): 1},
    (0, 1): {(0, 1): 1},
    (2, 0): {(2, 0): 1, (1, 0): -1, (0, 1): -1, (0, 0): -1},
    (1, 1): {(2, 0): -1, (1, 1): 1, (0, 1): 1, (0, 0): 1},
    (0, 2): {(3, 0): -1, (1, 1): 2, (0, 2): 1, (1, 0): 2, (0, 1): 1},
    (3, 0): {(1, 1): -2, (1, 0): -1, (2, 0): -1, (0, 1): -1, (3, 0): 1},
    (2, 1): {(0, 1): -1, (1, 0): 1, (2, 0): 1, (0, 2): -1, (3, 0): -1, (2, 1): 1},
    (1, 2): {(2, 0): 2, (1, 0): -1, (0, 0): -1, (4, 0): -1, (2, 1): 1, (3, 0): 1,
             (0, 2): 1, (1, 2): 1},
    (0, 3): {(3, 1): -2, (1, 2): 4, (0, 2): 3, (1, 1): 4, (0, 1): 2, (3, 0): -1,
             (2, 0): -1, (4, 0): 1, (2, 1): -2, (0, 3): 1},
    (4, 0): {(0, 2): 1, (0, 1): 2, (1, 0): 1, (2, 1): -3, (2, 0): -1, (3, 0): -1,
             (4, 0): 1},
    (3, 1): {(3, 0): 2, (0, 2): -2, (1, 0): -2, (0, 1): -2, (2, 1): 1, (3, 1): 1,
             (1, 2): -2, (1, 1): -2, (4, 0): -1, (2, 0): 1},
    (2, 2): {(0, 0): 1, (3, 0): 2, (0, 2): -2, (1, 0): -1, (5, 0): -1, (0, 3): -1,
             (2, 1): -1, (3, 1): 2, (1, 2): -2, (1, 1): -4, (2, 2): 1, (4, 0): 2,
             (2, 0): -4},
    (1, 3): {(3, 0): -4, (0, 2): 1, (1, 0): 2, (5, 0): 2, (0, 3): 1, (2, 1): 4,
             (3, 1): -4, (1, 2): 4, (1, 1): 6, (2, 2): 3, (4, 1): -2, (1, 3): 1,
             (4, 0): -2, (2, 0): 2},
    (0, 4): {(0, 0): -1, (3, 0): 2, (0, 2): 4, (1, 0): -1, (0, 1): -2, (5, 0): -1,
             (0, 3): 5, (2, 1): 6, (3, 1): -2, (1, 2): 9, (1, 1): 2, (4, 1): -2,
             (3, 2): -3, (1, 3): 6, (4, 0): -3, (2, 0): 3, (6, 0): 1, (0, 4): 1},
}

# Coefficient lists of the two closed-form denominators (degree 6 each).
P1_COEFFS = [
    {(0, 0): 1},
    {(0, 0): 1, (1, 0): -1},
    {(0, 1): 1, (0, 0): 1},
    {(2, 0): -1, (0, 1): 2, (0, 0): 1},
    {(0, 1): 1, (0, 0): 1},
    {(0, 0): 1, (1, 0): -1},
    {(0, 0): 1},
]
P2_COEFFS = [
    {(0, 0): 1},
    {(1, 0): 1, (0, 1): -1, (0, 0): 1},
    {(3, 0): 1, (1, 1): -3, (0, 1): -2, (1, 0): -1, (0, 0): 1},
    {(0, 2): -1, (3, 0): 2, (1, 1): -4, (0, 1): -4, (2, 0): -1, (1, 0): -2,
     (0, 0): 1},
    {(3, 0): 1, (1, 1): -3, (0, 1): -2, (1, 0): -1, (0, 0): 1},
    {(1, 0): 1, (0, 1): -1, (0, 0): 1},
    {(0, 0): 1},
]

# The 19 nonzero numerator entries of the closed-form generating function;
# all other entries with 0 <= i, j <= 5 vanish.
K_TABLE = {
    (0, 0): {(0, 0): 1},
    (1, 0): {(0, 0): 1},
    (0, 1): {(1, 0): 1, (0, 0): 1},
    (0, 2): {(1, 0): 1, (0, 0): 1},
    (1, 1): {(2, 0): -1, (1, 0): 1, (0, 1): 1, (0, 0): 2},
    (0, 3): {(0, 0): 1},
    (1, 2): {(2, 0): -1, (1, 0): 1, (0, 0): 1},
    (2, 1): {(0, 1): 1, (0, 0): 1},
    (3, 1): {(0, 0): 1, (1, 0): -1},
    (1, 3): {(0, 0): 1, (1, 0): -1},
    (2, 2): {(2, 0): -1, (1, 1): 1, (0, 1): 1, (1, 0): 2, (0, 0): 1},
    (4, 1): {(0, 0): 1},
    (2, 3): {(0, 1): 1, (0, 0): 1},
    (3, 2): {(2, 0): -1, (1, 0): 1, (0, 0): 1},
    (3, 3): {(2, 0): -1, (1, 0): 1, (0, 1): 1, (0, 0): 2},
    (4, 2): {(1, 0): 1, (0, 0): 1},
    (3, 4): {(0, 0): 1},
    (4, 3): {(1, 0): 1, (0, 0): 1},
    (4, 4): {(0, 0): 1},
}

# Irreducible representation dimensions, from the product-over-positive-
# roots formula evaluated by hand.
DIMENSIONS = {
    (0, 0): 1,
    (1, 0): 7,
    (0, 1): 14,
    (2, 0): 27,
    (1, 1): 64,
    (0, 2): 77,
    (3, 0): 77,
    (2, 1): 189,
    (1, 2): 286,
    (0, 3): 273,
    (4, 0): 182,
    (3, 1): 448,
    (2, 2): 729,
    (1, 3): 896,
    (0, 4): 748,
}
