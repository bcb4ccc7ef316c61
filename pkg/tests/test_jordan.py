from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from trinil.jordan import (
    ConsistencyError, DyckPath, catalan, catalan_binomial_sides,
    catalan_coefficient_identity, dyck_paths, dyck_stats, edge_weight,
    f_hook, f_lambda, f_lambda_syt, f_two_columns, f_two_equal_alt,
    f_two_rows, format_two_equal_alt, g_lambda, hook, tableau_weight,
    two_columns,
)
from trinil.partition import Box, enumerate_syt, partitions_of
from trinil.qpoly import ONE, Q, QM1, Poly, eval_int, extract_qminus1, parse_poly


def test_edge_weights():
    assert edge_weight((), Box(1, 1)) == ONE
    assert edge_weight((1,), Box(1, 2)) == QM1
    assert edge_weight((1,), Box(2, 1)) == ONE
    # (2,1) -> (2,2): column 2, mu'_1 = 2, mu'_2 = 1
    assert edge_weight((2, 1), Box(2, 2)) == Q * QM1
    with pytest.raises(ValueError, match="not a cover"):
        edge_weight((2, 1), Box(3, 2))


def test_small_f_values():
    assert f_lambda(()) == ONE
    assert f_lambda((1,)) == ONE
    assert f_lambda((2,)) == QM1
    assert f_lambda((1, 1, 1)) == ONE
    assert f_lambda((3,)) == QM1**2 * Q
    assert f_lambda((2, 1)) == QM1 * Poly([1, 2])
    assert f_lambda((3, 1)) == parse_poly("(q-1)^2 * (3*q^3 + q^2)")


def test_tableau_weight_single_chain():
    (chain,) = enumerate_syt((3,))
    assert tableau_weight(chain) == f_lambda((3,))


def test_catalan_values():
    assert [catalan(n, n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert catalan(3, 4) == 0
    assert catalan(4, -1) == 0
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert catalan(n, k) == catalan(n, k - 1) + catalan(n - 1, k)


def test_catalan_counts_paths():
    for n in range(7):
        for k in range(n + 1):
            assert len(dyck_paths(n, k)) == catalan(n, k)


def test_dyck_path_validation():
    with pytest.raises(ValueError):
        DyckPath(("N", "E"))
    with pytest.raises(ValueError):
        DyckPath(("E", "X"))
    assert DyckPath(tuple("EEN")).end == (2, 1)


def test_dyck_worked_example():
    p = DyckPath(tuple("EENENNENEE"))
    assert dyck_stats(p) == (12, (2, 2, 1, 1))
    assert dyck_stats(DyckPath(tuple("EN"))) == (0, (1,))


def test_closed_forms_reject_bad_input():
    with pytest.raises(ValueError):
        f_hook(3, 3)
    with pytest.raises(ValueError):
        f_two_rows(1, 2)
    with pytest.raises(ValueError):
        f_two_columns(0, 0)
    with pytest.raises(ValueError):
        f_two_equal_alt(0)


def test_two_equal_display():
    assert format_two_equal_alt(1) == "1"
    assert format_two_equal_alt(2) == "(q-1)^2 * (q^2 + q*(q+1))"
    assert format_two_equal_alt(3) == "(q-1)^4 * (2*q^8 + 2*q^7*(q+1) + q^6*(q+1)^2)"


def test_g_lambda():
    assert g_lambda((2, 2)) == Poly([0, 1, 2])
    assert g_lambda(()) == ONE


def test_g_lambda_flags_bad_multiplicity(monkeypatch):
    import trinil.jordan as j

    monkeypatch.setattr(j, "f_lambda", lambda lam: Poly([1, 1]))
    with pytest.raises(ConsistencyError):
        j.g_lambda((2, 1))


def test_catalan_identity_reports():
    rep = catalan_coefficient_identity(2)
    assert rep.ok
    assert rep.rows == [(0, 5, 5), (1, 4, 4), (2, 1, 1)]
    assert QM1 ** 4 * rep.lhs == f_lambda((3, 3))
    for k in range(7):
        for m in range(k + 1):
            a, b = catalan_binomial_sides(k, m)
            assert a == b


def test_shape_helpers():
    assert hook(5, 3) == (3, 1, 1)
    assert two_columns(2, 1) == (2, 2, 1)


partitions = st.integers(1, 8).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@settings(max_examples=60)
@given(partitions)
def test_recurrence_matches_tableaux(lam):
    assert f_lambda(lam) == f_lambda_syt(lam)


@settings(max_examples=60)
@given(partitions)
def test_degree_leading_multiplicity(lam):
    from trinil.partition import n_lambda, num_syt

    f = f_lambda(lam)
    n = sum(lam)
    assert f.degree == comb(n, 2) - n_lambda(lam)
    assert f.leading == num_syt(lam)
    m, g = extract_qminus1(f)
    assert m == n - len(lam)
    assert all(c >= 0 for c in g)


@given(st.integers(0, 7), st.sampled_from([2, 3, 4, 5, 7]))
def test_row_sum_counts_all_matrices(n, q):
    assert sum(eval_int(f_lambda(lam), q) for lam in partitions_of(n)) == q ** comb(n, 2)


@given(st.integers(1, 6), st.integers(0, 6))
def test_two_columns_closed_form(r, s):
    assert f_two_columns(r, s) == f_lambda(two_columns(r, s))


@given(st.integers(2, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1)) if n > 2 else st.just((3, 2))))
def test_hook_closed_form(nk):
    n, k = nk
    assert f_hook(n, k) == f_lambda(hook(n, k))


@given(st.integers(1, 6).flatmap(lambda s: st.tuples(st.integers(s, 8), st.just(s))))
def test_two_rows_closed_form(rs):
    r, s = rs
    assert f_two_rows(r, s) == f_lambda((r, s))
