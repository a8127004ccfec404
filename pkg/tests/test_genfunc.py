"""Generating-function route: traces, tables, and the closed form."""

from __future__ import annotations

import pytest

import weylcheb.genfunc as genfunc_module
from weylcheb import (
    ConvolutionNotTerminatingError,
    SignClass,
    XYPoly,
    act,
    closed_form_gf,
    coefficient_trace,
    diagonal_exp_matrix,
    expand,
    first_kind_poly,
    first_kind_table,
    gf_series_check,
    orbit_sum,
    reduce,
    second_kind_poly,
    second_kind_table,
    signed_orbit_sum,
    unit_weight,
)
from g2_reference import K_TABLE, P1_COEFFS, P2_COEFFS, SECOND_KIND, SINGULAR_ELEMENT


def test_diagonal_matrices_follow_element_order(g2):
    for i in range(2):
        mat = diagonal_exp_matrix(g2, i)
        assert len(mat.entries) == 12
        assert mat.dets.count(1) == 6 and mat.dets.count(-1) == 6
        lam = unit_weight(g2, i)
        for j, w in enumerate(g2.elements):
            assert mat.entries[j] == act(g2, w, lam)
            assert mat.dets[j] == w.det


def test_trace_equals_orbit_sums(g2):
    for m in range(9):
        for n in range(9):
            assert coefficient_trace(g2, SignClass.DIFFERENCE, m, n) == (
                signed_orbit_sum(g2, (m, n))
            )
    # the two unsigned classes add up to the full orbit sum
    for idx in [(0, 0), (2, 1), (5, 3), (8, 8)]:
        total = coefficient_trace(g2, SignClass.PLUS, *idx) + coefficient_trace(
            g2, SignClass.MINUS, *idx
        )
        assert total == orbit_sum(g2, idx)


def test_trace_singular_element(g2):
    from weylcheb import LaurentPoly

    assert coefficient_trace(g2, SignClass.DIFFERENCE, 1, 1) == LaurentPoly(
        2, SINGULAR_ELEMENT
    )


def test_second_kind_matches_reference_table(g2, g2_second):
    for idx, want in SECOND_KIND.items():
        assert second_kind_poly(g2, g2_second, *idx) == XYPoly(2, want)


def test_denominators_match_reference(g2_gf):
    assert list(g2_gf.denominators[0]) == [XYPoly(2, d) for d in P1_COEFFS]
    assert list(g2_gf.denominators[1]) == [XYPoly(2, d) for d in P2_COEFFS]


def test_denominators_are_palindromic(g2_gf):
    for coeffs in g2_gf.denominators:
        degree = len(coeffs) - 1
        for i in range(degree + 1):
            assert coeffs[i] == coeffs[degree - i]


def test_numerator_matches_reference(g2_gf):
    assert g2_gf.numerator == {k: XYPoly(2, v) for k, v in K_TABLE.items()}
    for i in range(6):
        for j in range(6):
            if (i, j) not in K_TABLE:
                assert (i, j) not in g2_gf.numerator


def test_numerator_central_symmetry(g2_gf):
    for i in range(5):
        for j in range(5):
            assert g2_gf.numerator.get((i, j)) == g2_gf.numerator.get(
                (4 - i, 4 - j)
            )


def test_degree_bound(g2_tables):
    gf_table, _ = g2_tables
    for (m, n), poly in gf_table.items():
        if m + n <= 8:
            assert poly.total_degree() <= m + 2 * n


def test_series_expansion_agrees_with_direct_route(g2_gf, g2_second):
    assert gf_series_check(g2_gf, g2_second, 0, 0)
    assert gf_series_check(g2_gf, g2_second, 6, 6)
    assert gf_series_check(g2_gf, g2_second, 10, 10)


def test_convolution_guard_trips_on_corrupted_denominator(
    monkeypatch, g2, g2_second
):
    real = genfunc_module.denominator_coeffs

    def corrupted(rs, basis, i):
        coeffs = real(rs, basis, i)
        return coeffs[:-1] + (XYPoly.zero(rs.rank),)

    monkeypatch.setattr(genfunc_module, "denominator_coeffs", corrupted)
    with pytest.raises(ConvolutionNotTerminatingError):
        genfunc_module.closed_form_gf(g2, g2_second)


def test_closed_form_guards(a1, a1_second, g2, g2_first):
    with pytest.raises(ValueError):
        closed_form_gf(a1, a1_second)
    with pytest.raises(ValueError):
        closed_form_gf(g2, g2_first)


def test_kind_guards(g2, g2_second, g2_first):
    with pytest.raises(ValueError):
        second_kind_poly(g2, g2_first, 1, 0)
    with pytest.raises(ValueError):
        first_kind_poly(g2, g2_second, (1, 0))


def test_a1_three_term_recurrence(a1, a1_second, a1_first):
    x1 = XYPoly.variable(1, 0)
    second = [second_kind_poly(a1, a1_second, m) for m in range(22)]
    for n in range(1, 21):
        assert second[n + 1] == x1 * second[n] - second[n - 1]
    first = [first_kind_poly(a1, a1_first, (m,)) for m in range(22)]
    for n in range(1, 21):
        assert first[n + 1] == x1 * first[n] - first[n - 1]


def test_first_kind_examples(g2, g2_first, a1, a1_first):
    assert first_kind_poly(g2, g2_first, (0, 0)) == XYPoly.constant(2, 12)
    assert first_kind_poly(g2, g2_first, (1, 0)) == XYPoly.variable(2, 0)
    assert first_kind_poly(a1, a1_first, (3,)) == XYPoly(1, {(3,): 1, (1,): -3})
    p = first_kind_poly(g2, g2_first, (2, 1))
    assert reduce(g2_first, expand(g2_first, p)) == p


def test_table_shapes(a1, a1_second, a1_first, g2, g2_second):
    small = second_kind_table(g2, g2_second, 2, 3)
    assert set(small) == {(m, n) for m in range(3) for n in range(4)}
    line = second_kind_table(a1, a1_second, 5)
    assert set(line) == {(m,) for m in range(6)}
    first_line = first_kind_table(a1, a1_first, 3)
    assert set(first_line) == {(m,) for m in range(4)}
    assert second_kind_poly(g2, g2_second, 0, 0) == XYPoly.constant(2, 1)


def test_rank_one_second_kind_is_plain_chebyshev(a1, a1_second):
    # U_m(z + 1/z) in the monomial style: U_2 = x^2 - 1, U_3 = x^3 - 2x
    assert second_kind_poly(a1, a1_second, 2) == XYPoly(1, {(2,): 1, (0,): -1})
    assert second_kind_poly(a1, a1_second, 3) == XYPoly(1, {(3,): 1, (1,): -2})


def test_index_guards(g2, g2_second):
    with pytest.raises(ValueError):
        second_kind_poly(g2, g2_second, 1)
    with pytest.raises(ValueError):
        second_kind_poly(g2, g2_second, -1, 0)
    with pytest.raises(ValueError):
        second_kind_table(g2, g2_second, 2, None)
