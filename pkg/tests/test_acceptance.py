"""Acceptance gate: eight criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary. ``python tests/test_acceptance.py``
runs the same checks without pytest.
"""

import contextlib
import time
from math import comb

from trinil.bij import (
    check_weight_preservation, classical_bijection, format_set_partition,
    partition_type, phi, phi_inverse, psi, psi_inverse,
)
from trinil.jordan import (
    catalan, catalan_coefficient_identity, f_hook, f_lambda, f_lambda_syt,
    f_two_columns, f_two_equal_alt, f_two_rows, hook, two_columns,
    two_equal_alt_terms,
)
from trinil.oracle import border_extension_count, census
from trinil.partition import covers_up, n_lambda, num_syt, partitions_of
from trinil.qpoly import ONE, QM1, ZERO, Poly, eval_int, extract_qminus1, parse_poly, q_factorial, q_int
from trinil.rook import (
    FerrersBoard, enumerate_placements, inv, ne, ne_direct, p_rank_count,
    p_rank_count_direct, p_rank_count_haglund, parse_placement,
    placement_weight, q_rook_poly, q_stirling,
)

Q = Poly.monomial(1)
QP1 = Q + 1


@contextlib.contextmanager
def criterion(number, title, sink=print):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        sink(f"FAIL  criterion {number}: {title} ({type(exc).__name__}: {exc})")
        raise
    sink(f"PASS  criterion {number}: {title} [{time.perf_counter() - start:.2f}s]")


def _emit(report_line):
    def sink(line):
        print(line)
        report_line(line)
    return sink


def check_1():
    start = time.perf_counter()
    for p, n_max in ((2, 6), (3, 5)):
        for n in range(1, n_max + 1):
            counts = census(n, p).counts
            for lam in partitions_of(n):
                assert counts[lam] == eval_int(f_lambda(lam), p), (n, p, lam)
            assert sum(counts.values()) == p ** comb(n, 2)
    assert time.perf_counter() - start < 30


def check_2():
    f31, f22 = f_lambda((3, 1)), f_lambda((2, 2))
    assert f31 == QM1**2 * (3 * Q**3 + Q**2)
    assert f22 == QM1**2 * (2 * Q**2 + Q)
    assert f31 + f22 == QM1**2 * (3 * Q**3 + 3 * Q**2 + Q)
    assert f31 + f22 == p_rank_count(FerrersBoard.staircase(4), 2)

    # two equal rows: both displayed forms of each example
    displayed_alt = {
        1: [(1, 0, 0)],
        2: [(1, 2, 0), (1, 1, 1)],
        3: [(2, 8, 0), (2, 7, 1), (1, 6, 2)],
        4: [(5, 18, 0), (5, 17, 1), (3, 16, 2), (1, 15, 3)],
        5: [(14, 32, 0), (14, 31, 1), (9, 30, 2), (4, 29, 3), (1, 28, 4)],
    }
    displayed = {
        1: "1",
        2: "(q-1)^2 * (2*q^2 + q)",
        3: "(q-1)^4 * (5*q^8 + 4*q^7 + q^6)",
        4: "(q-1)^6 * (14*q^18 + 14*q^17 + 6*q^16 + q^15)",
        5: "(q-1)^8 * (42*q^32 + 48*q^31 + 27*q^30 + 8*q^29 + q^28)",
    }
    for k in range(1, 6):
        f = f_lambda((k, k))
        assert f == parse_poly(displayed[k]), k
        assert two_equal_alt_terms(k) == displayed_alt[k], k
        alt = sum((c * Q**a * QP1**b for c, a, b in displayed_alt[k]), ZERO)
        assert f == QM1 ** (2 * k - 2) * alt, k

    # (2^r): r = 1 is q - 1; the printed r = 1 line is off (see ledger)
    two, three = q_int(2), q_int(3)
    fac3 = q_factorial(3)
    assert f_lambda((2,)) == QM1
    assert f_lambda((2, 2)) == QM1**2 * Q * (Q + QP1)
    assert f_lambda((2, 2, 2)) == QM1**3 * Q**3 * (Q**3 + 2 * Q**2 * QP1 + Q * QP1**2 + q_int(3) * QP1)
    inner4 = (Q**6 + 3 * Q**5 * two + 3 * Q**4 * two**2 + Q**3 * two**3 + 2 * Q**3 * fac3
              + 2 * Q**2 * two * fac3 + Q * three * fac3 + q_factorial(4))
    assert f_lambda((2, 2, 2, 2)) == QM1**4 * Q**6 * inner4


def check_3():
    start = time.perf_counter()
    for n in range(1, 11):
        for lam in partitions_of(n):
            assert f_lambda(lam) == f_lambda_syt(lam), lam
    for n in range(1, 13):
        for k in range(2, n):
            assert f_hook(n, k) == f_lambda(hook(n, k)), (n, k)
        for s in range(1, n // 2 + 1):
            assert f_two_rows(n - s, s) == f_lambda((n - s, s)), (n - s, s)
        if n % 2 == 0:
            assert f_two_equal_alt(n // 2) == f_lambda((n // 2, n // 2)), n
        for r in range(n // 2 + 1):
            assert f_two_columns(r, n - 2 * r) == f_lambda(two_columns(r, n - 2 * r)), (r, n)
    assert time.perf_counter() - start < 60


def check_4():
    for n in range(1, 11):
        for lam in partitions_of(n):
            f = f_lambda(lam)
            assert f.degree == comb(n, 2) - n_lambda(lam), lam
            assert f.leading == num_syt(lam), lam
            m, g = extract_qminus1(f)
            assert m == n - len(lam), lam
            assert all(c >= 0 for c in g), lam


def check_5():
    for n in range(11):
        board = FerrersBoard.staircase(n)
        for k in range(n + 1):
            assert q_rook_poly(board, k) == q_stirling(n, n - k), (n, k)
    for n in range(10):
        board = FerrersBoard.staircase(n)
        for k in range(n + 1):
            assert p_rank_count_haglund(board, k) == p_rank_count_direct(board, k), (n, k)
    for n in range(11):
        board = FerrersBoard.staircase(n)
        for k in range(n):
            total = sum((f_lambda(lam) for lam in partitions_of(n, n - k)), ZERO)
            assert total == p_rank_count_haglund(board, k), (n, k)


def check_6():
    count = 0
    for n in range(1, 9):
        board = FerrersBoard.staircase(n)
        for k in range(n):
            for c in enumerate_placements(board, k):
                check_weight_preservation(c)
                assert phi_inverse(phi(c)) == c
                assert psi_inverse(psi(c)) == c
                count += 1 if n == 8 else 0
    assert count == 4140

    ex = parse_placement("2,3;1,5;5,6;4,7", 7)
    assert ne(ex) == ne_direct(ex) == 11
    assert inv(ex) == 6
    assert placement_weight(ex) == QM1**4 * Q**11

    nine = parse_placement("4,5;1,7;3,8;7,9", 9)
    assert format_set_partition(psi(nine)) == "3,8,9|1,5|6,7|2|4"
    assert phi(nine).weight == QM1**4 * Q ** ne(nine)

    remark = parse_placement("1,2;3,4", 4)
    assert format_set_partition(psi(remark)) == "1,2,4|3"
    assert format_set_partition(classical_bijection(remark)) == "1,2|3,4"
    assert partition_type(remark) == (3, 1)

    fig4 = [
        ("1,2;2,3", [(), (1,), (2,), (3,), (3, 1)], [ONE, QM1, QM1 * Q, Q**2], "1,2,3|4"),
        ("1,2;3,4", [(), (1,), (2,), (2, 1), (3, 1)], [ONE, QM1, Q, QM1 * Q**2], "1,2,4|3"),
        ("2,3;3,4", [(), (1,), (1, 1), (2, 1), (3, 1)], [ONE, ONE, QM1 * Q, QM1 * Q**2], "1,3,4|2"),
        ("1,3;3,4", [(), (1,), (1, 1), (2, 1), (3, 1)], [ONE, ONE, QM1, QM1 * Q**2], "2,3,4|1"),
    ]
    total = ZERO
    for text, chain, weights, sp in fig4:
        c = parse_placement(text, 4)
        path = phi(c)
        assert list(path.chain) == chain, text
        assert [e.weight for e in path.edges] == weights, text
        assert format_set_partition(psi(c)) == sp, text
        total = total + path.weight
    assert total == f_lambda((3, 1))


def check_7():
    for k in range(9):
        rep = catalan_coefficient_identity(k)
        assert rep.ok, k
        assert all(a == b for _, a, b in rep.rows), k
        assert QM1 ** (2 * k) * rep.lhs == f_lambda((k + 1, k + 1)), k
    triangle = [
        [1],
        [1, 1],
        [1, 2, 2],
        [1, 3, 5, 5],
        [1, 4, 9, 14, 14],
        [1, 5, 14, 28, 42, 42],
        [1, 6, 20, 48, 90, 132, 132],
    ]
    for n, row in enumerate(triangle):
        assert [catalan(n, k) for k in range(n + 1)] == row, n


def check_8():
    from trinil.jordan import edge_weight

    for p in (2, 3):
        for size in range(5):
            for mu in partitions_of(size):
                for lam, box in covers_up(mu):
                    assert border_extension_count(mu, lam, p) == eval_int(edge_weight(mu, box), p), (mu, lam, p)


CRITERIA = [
    (1, "census over F_2 (n<=6) and F_3 (n<=5) equals F_lambda(p)", check_1),
    (2, "worked examples: (3,1), (2,2), P_{B_4,2}, (k,k) k<=5, (2^r) r<=4", check_2),
    (3, "recurrence vs tableau sum (n<=10) and closed forms (n<=12)", check_3),
    (4, "degree, leading coefficient, (q-1)-multiplicity, G_lambda >= 0 (n<=10)", check_4),
    (5, "R = S (n<=10), two rank-count routes (n<=9), refinement (n<=10)", check_5),
    (6, "Phi/Psi on all placements n<=8 and the worked placements", check_6),
    (7, "Catalan coefficient identity (k<=8) and triangle (n<=6)", check_7),
    (8, "border extension counts equal edge weights (|lambda|<=5, p=2,3)", check_8),
]


def test_criterion_1(report_line):
    with criterion(*CRITERIA[0][:2], sink=_emit(report_line)):
        check_1()


def test_criterion_2(report_line):
    with criterion(*CRITERIA[1][:2], sink=_emit(report_line)):
        check_2()


def test_criterion_3(report_line):
    with criterion(*CRITERIA[2][:2], sink=_emit(report_line)):
        check_3()


def test_criterion_4(report_line):
    with criterion(*CRITERIA[3][:2], sink=_emit(report_line)):
        check_4()


def test_criterion_5(report_line):
    with criterion(*CRITERIA[4][:2], sink=_emit(report_line)):
        check_5()


def test_criterion_6(report_line):
    with criterion(*CRITERIA[5][:2], sink=_emit(report_line)):
        check_6()


def test_criterion_7(report_line):
    with criterion(*CRITERIA[6][:2], sink=_emit(report_line)):
        check_7()


def test_criterion_8(report_line):
    with criterion(*CRITERIA[7][:2], sink=_emit(report_line)):
        check_8()


if __name__ == "__main__":
    failed = 0
    for number, title, fn in CRITERIA:
        try:
            with criterion(number, title):
                fn()
        except Exception:
            failed += 1
    raise SystemExit(1 if failed else 0)
