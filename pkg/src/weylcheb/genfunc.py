"""Generating-function route to the polynomials.

The generating functions are traces of products of diagonal resolvents
(1 - p M)^{-1} where M carries the exponentials z^{w mu} on its diagonal,
one entry per group element.  Because the matrices are diagonal, series
coefficients come out in closed form: position j contributes
z^{m (w_j mu_1) + n (w_j mu_2)}, so no truncated series is ever built.

For the second kind the full generating function is rational; this module
also computes its closed form: per-axis denominators P_k (products over the
det = +1 diagonal entries) and the finite numerator table K obtained by
convolving the polynomial table against the denominator coefficients.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly, exact_divide
from .orbit import Kind, orbit_sum, signed_orbit_sum, unit_weight
from .polynomialize import VariableBasis, XYPoly, reduce
from .rootsystem import RootSystem, Weight, act

log = logging.getLogger(__name__)


class ConvolutionNotTerminatingError(ArithmeticError):
    """Numerator entries persist beyond the denominator degree bound."""


class SignClass(Enum):
    PLUS = "plus"
    MINUS = "minus"
    DIFFERENCE = "difference"


@dataclass(frozen=True)
class DiagonalExpMatrix:
    """Diagonal exponential matrix for one fundamental weight.

    entries[j] is the weight w_j . lambda_i, with j running over the group
    elements in root-system order (the same order for every i), and dets[j]
    the determinant of w_j, splitting positions into the two sign classes.
    """

    entries: tuple[Weight, ...]
    dets: tuple[int, ...]


@lru_cache(maxsize=None)
def diagonal_exp_matrix(rs: RootSystem, i: int) -> DiagonalExpMatrix:
    lam = unit_weight(rs, i)
    entries = tuple(act(rs, w, lam) for w in rs.elements)
    dets = tuple(w.det for w in rs.elements)
    return DiagonalExpMatrix(entries, dets)


def coefficient_trace(rs: RootSystem, signs: SignClass, *index: int) -> LaurentPoly:
    """Coefficient of p1^m1 ... pd^md in the resolvent-product trace.

    Summed over diagonal positions of the chosen sign class; DIFFERENCE
    weights each position by its determinant.  This is an independent route
    to the same Laurent polynomials as the orbit sums.
    """
    if len(index) != rs.rank:
        raise ValueError("index rank mismatch")
    if any(m < 0 for m in index):
        raise ValueError("index entries must be nonnegative")
    mats = [diagonal_exp_matrix(rs, i) for i in range(rs.rank)]
    acc: dict[Weight, int | Fraction] = {}
    for j, det in enumerate(mats[0].dets):
        if signs is SignClass.PLUS and det != 1:
            continue
        if signs is SignClass.MINUS and det != -1:
            continue
        exp = tuple(
            sum(m * mats[k].entries[j][c] for k, m in enumerate(index))
            for c in range(rs.rank)
        )
        weight = det if signs is SignClass.DIFFERENCE else 1
        new = acc.get(exp, 0) + weight
        if new:
            acc[exp] = new
        else:
            del acc[exp]
    return LaurentPoly(rs.rank, acc)


def second_kind_poly(rs: RootSystem, basis: VariableBasis, *index: int) -> XYPoly:
    """Second-kind polynomial at a dominant index: the character quotient
    at the rho-shifted index, rewritten over the variables."""
    if basis.kind is not Kind.SECOND:
        raise ValueError("second_kind_poly needs a second-kind basis")
    if len(index) != rs.rank:
        raise ValueError("index arity must match the rank")
    if any(m < 0 for m in index):
        raise ValueError("indices must be nonnegative")
    shifted = tuple(m + 1 for m in index)
    numerator = coefficient_trace(rs, SignClass.DIFFERENCE, *shifted)
    denominator = coefficient_trace(rs, SignClass.DIFFERENCE, *(1,) * rs.rank)
    return reduce(basis, exact_divide(numerator, denominator))


def first_kind_poly(rs: RootSystem, basis: VariableBasis, n: Weight) -> XYPoly:
    """First-kind polynomial: the plain orbit sum rewritten over the
    variables (non-normalized convention, so the index 0 gives |W|)."""
    if basis.kind is not Kind.FIRST:
        raise ValueError("first_kind_poly needs a first-kind basis")
    if len(n) != rs.rank:
        raise ValueError("index arity must match the rank")
    if any(c < 0 for c in n):
        raise ValueError("indices must be nonnegative")
    return reduce(basis, orbit_sum(rs, n))


def _index_box(rank: int, max_m: int, max_n: int | None) -> list[tuple[int, ...]]:
    if rank == 1:
        return [(m,) for m in range(max_m + 1)]
    if max_n is None:
        raise ValueError("rank-2 tables need max_n")
    return [(m, n) for m in range(max_m + 1) for n in range(max_n + 1)]


def second_kind_table(
    rs: RootSystem, basis: VariableBasis, max_m: int, max_n: int | None = None
) -> dict[tuple[int, ...], XYPoly]:
    return {
        idx: second_kind_poly(rs, basis, *idx)
        for idx in _index_box(rs.rank, max_m, max_n)
    }


def first_kind_table(
    rs: RootSystem, basis: VariableBasis, max_m: int, max_n: int | None = None
) -> dict[tuple[int, ...], XYPoly]:
    return {
        idx: first_kind_poly(rs, basis, idx)
        for idx in _index_box(rs.rank, max_m, max_n)
    }


# -- closed-form rational generating function --------------------------------


@dataclass(frozen=True)
class RationalGF:
    """Closed form of the double series: numerator / (P1(p) P2(q)).

    denominators[k] lists the coefficients of P_{k+1} by ascending power of
    its formal parameter; numerator maps (i, j) to the nonzero K_ij.
    """

    denominators: tuple[tuple[XYPoly, ...], ...]
    numerator: dict[tuple[int, int], XYPoly]


def denominator_coeffs(rs: RootSystem, basis: VariableBasis, i: int) -> tuple[XYPoly, ...]:
    """Coefficients of P_{i+1}(t) = prod over det = +1 positions of
    (1 - t z^{w lambda_i}), each coefficient rewritten over the variables.

    Each coefficient is an elementary symmetric function of a full Weyl
    orbit (the det classes hit every orbit point exactly once at rank 2),
    hence W-invariant and reducible.
    """
    mat = diagonal_exp_matrix(rs, i)
    coeffs: list[LaurentPoly] = [LaurentPoly.one(rs.rank)]
    for mu, det in zip(mat.entries, mat.dets):
        if det != 1:
            continue
        factor = LaurentPoly.monomial(rs.rank, mu)
        nxt = [coeffs[0]]
        for k in range(1, len(coeffs) + 1):
            prev = coeffs[k] if k < len(coeffs) else LaurentPoly.zero(rs.rank)
            nxt.append(prev - coeffs[k - 1] * factor)
        coeffs = nxt
    reduced = tuple(reduce(basis, c) for c in coeffs)
    if reduced[0] != XYPoly.constant(rs.rank, 1):
        raise RuntimeError("denominator constant term is not 1")
    return reduced


def closed_form_gf(rs: RootSystem, basis: VariableBasis) -> RationalGF:
    """Denominators from the diagonal-matrix products, numerator by finite
    convolution of the polynomial table against them."""
    if rs.rank != 2:
        raise ValueError("closed form is implemented for rank-2 systems")
    if basis.kind is not Kind.SECOND:
        raise ValueError("closed form is implemented for the second kind")
    dens = tuple(denominator_coeffs(rs, basis, i) for i in range(2))
    deg1 = len(dens[0]) - 1
    deg2 = len(dens[1]) - 1
    table = second_kind_table(rs, basis, deg1, deg2)
    numerator: dict[tuple[int, int], XYPoly] = {}
    for i in range(deg1 + 1):
        for j in range(deg2 + 1):
            acc = XYPoly.zero(2)
            for a in range(i + 1):
                for b in range(j + 1):
                    acc = acc + table[(a, b)] * dens[0][i - a] * dens[1][j - b]
            if acc:
                if i > deg1 - 1 or j > deg2 - 1:
                    raise ConvolutionNotTerminatingError(
                        f"nonzero numerator entry at ({i}, {j})"
                    )
                numerator[(i, j)] = acc
    return RationalGF(denominators=dens, numerator=numerator)


def gf_series_check(
    gf: RationalGF, basis: VariableBasis, max_m: int, max_n: int
) -> bool:
    """Expand the closed form back into a double series by long division and
    compare every coefficient up to (max_m, max_n) with the direct route."""
    rs = basis.rs
    p_coeffs, q_coeffs = gf.denominators
    series: dict[tuple[int, int], XYPoly] = {}
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            acc = gf.numerator.get((m, n), XYPoly.zero(2))
            for a in range(min(m, len(p_coeffs) - 1) + 1):
                for b in range(min(n, len(q_coeffs) - 1) + 1):
                    if a == 0 and b == 0:
                        continue
                    acc = acc - p_coeffs[a] * q_coeffs[b] * series[(m - a, n - b)]
            series[(m, n)] = acc
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            direct = second_kind_poly(rs, basis, m, n)
            if series[(m, n)] != direct:
                log.warning(
                    "series mismatch at (%d, %d): %s != %s",
                    m, n, series[(m, n)].as_text(), direct.as_text(),
                )
                return False
    return True
