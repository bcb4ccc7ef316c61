"""Exhaustive self-check of every identity the library implements."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable

from . import jordan, rook
from .bij import (
    check_weight_preservation,
    phi,
    phi_inverse,
    placements_of_type,
    psi,
    psi_inverse,
    set_partitions,
)
from .jordan import ConsistencyError
from .oracle import DEFAULT_BUDGET, border_extension_count, census
from .partition import covers_down, format_partition, n_lambda, num_syt, partitions_of
from .qpoly import ZERO, Poly, eval_int, extract_qminus1


@dataclass
class Check:
    name: str
    params: dict
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    def as_dict(self) -> dict:
        return {
            "checks": [
                {"name": c.name, "params": c.params, "status": "pass" if c.passed else "fail", "detail": c.detail}
                for c in self.checks
            ],
            "summary": {"total": len(self.checks), "passed": self.passed, "failed": self.failed},
        }


def _first(items, pred) -> str:
    """Detail string for the first item failing ``pred`` ('' when none)."""
    for item in items:
        try:
            ok = pred(item)
        except (ConsistencyError, ValueError) as exc:
            return f"{item}: {exc}"
        if not ok:
            return f"counterexample {item}"
    return ""


def run_verify(
    n_max: int = 6,
    primes=(2, 3),
    budget: int = DEFAULT_BUDGET,
    flambda: Callable = jordan.f_lambda,
) -> VerifyReport:
    """Run all suites up to size ``n_max``; ``flambda`` may be swapped for a
    faulty implementation in negative tests."""
    report = VerifyReport()

    def add(name, params, detail):
        report.checks.append(Check(name, params, not detail, detail))

    shapes = [lam for n in range(1, n_max + 1) for lam in partitions_of(n)]

    add("recurrence_equals_syt_sum", {"n_max": n_max},
        _first(shapes, lambda lam: flambda(lam) == jordan.f_lambda_syt(lam)))

    def degree_ok(lam):
        f = flambda(lam)
        n = sum(lam)
        return f.degree == comb(n, 2) - n_lambda(lam) and f.leading == num_syt(lam)

    add("degree_and_leading_coefficient", {"n_max": n_max}, _first(shapes, degree_ok))

    def mult_ok(lam):
        m, g = extract_qminus1(flambda(lam))
        return m == sum(lam) - len(lam) and all(c >= 0 for c in g)

    add("qminus1_multiplicity_and_positivity", {"n_max": n_max}, _first(shapes, mult_ok))

    closed = []
    for n in range(3, n_max + 1):
        closed += [(("hook", n, k), jordan.hook(n, k), lambda n=n, k=k: jordan.f_hook(n, k)) for k in range(2, n)]
    for n in range(2, n_max + 1):
        for s in range(1, n // 2 + 1):
            closed.append((("two_rows", n - s, s), (n - s, s), lambda r=n - s, s=s: jordan.f_two_rows(r, s)))
    for r in range(1, n_max // 2 + 1):
        closed.append((("two_equal_alt", r), (r, r), lambda r=r: jordan.f_two_equal_alt(r)))
    for n in range(1, n_max + 1):
        for r in range(0, n // 2 + 1):
            s = n - 2 * r
            closed.append((("two_columns", r, s), jordan.two_columns(r, s), lambda r=r, s=s: jordan.f_two_columns(r, s)))
    add("closed_forms", {"n_max": n_max}, _first(closed, lambda t: t[2]() == flambda(t[1])))

    add("completeness", {"n_max": n_max, "primes": list(primes)},
        _first([(n, p) for n in range(n_max + 1) for p in primes],
               lambda t: sum(eval_int(flambda(lam), t[1]) for lam in partitions_of(t[0])) == t[1] ** comb(t[0], 2)))

    add("catalan_coefficient_identity", {"k_max": n_max},
        _first(range(n_max + 1), lambda k: jordan.catalan_coefficient_identity(k).ok))

    pairs = [(0, 0)] + [(n, k) for n in range(1, n_max + 1) for k in range(n)]
    add("rook_poly_equals_q_stirling", {"n_max": n_max},
        _first(pairs, lambda t: rook.q_rook_poly(rook.FerrersBoard.staircase(t[0]), t[1]) == rook.q_stirling(t[0], t[0] - t[1])))

    def refine_ok(t):
        n, k = t
        p = rook.p_rank_count(rook.FerrersBoard.staircase(n), k)
        total = ZERO
        for lam in partitions_of(n, n - k):
            total = total + flambda(lam)
        return p == total

    add("rank_count_two_routes_and_refinement", {"n_max": n_max}, _first(pairs, refine_ok))

    placements = [c for n in range(1, n_max + 1) for k in range(n) for c in rook.enumerate_placements(rook.FerrersBoard.staircase(n), k)]

    def bij_ok(c):
        check_weight_preservation(c)
        return phi_inverse(phi(c)) == c and psi_inverse(psi(c)) == c

    add("phi_psi_weight_and_round_trip", {"n_max": n_max, "placements": len(placements)},
        _first(placements, bij_ok))

    add("psi_surjective_on_set_partitions", {"n_max": n_max},
        _first([s for n in range(1, n_max + 1) for s in set_partitions(n)], lambda s: psi(psi_inverse(s)) == s))

    def type_sum_ok(lam):
        total = ZERO
        for c in placements_of_type(lam):
            total = total + rook.placement_weight(c)
        return total == flambda(lam)

    add("placements_of_type_sum", {"n_max": n_max}, _first(shapes, type_sum_ok))

    covers = [(mu, lam, p) for lam in shapes if sum(lam) <= 5 for mu, _ in covers_down(lam) for p in primes]

    def border_ok(t):
        mu, lam, p = t
        box = next(b for m, b in covers_down(lam) if m == mu)
        return border_extension_count(mu, lam, p) == eval_int(jordan.edge_weight(mu, box), p)

    add("border_extension_counts", {"max_size": min(n_max, 5), "primes": list(primes)},
        _first(covers, border_ok))

    for p in primes:
        for n in range(1, n_max + 1):
            params = {"n": n, "p": p}
            if p ** comb(n, 2) > budget:
                report.checks.append(Check("oracle_census", params, True, f"skipped: {p}^{comb(n, 2)} exceeds budget"))
                continue
            counts = census(n, p, budget=budget).counts
            bad = next((lam for lam in counts if counts[lam] != eval_int(flambda(lam), p)), None)
            detail = ""
            if bad is not None:
                detail = f"lambda={format_partition(bad)}: census {counts[bad]}, formula {eval_int(flambda(bad), p)}"
            add("oracle_census", params, detail)
    return report


def tampered(lam, base=jordan.f_lambda, target=(2, 1)) -> Poly:
    """F_lambda with one coefficient bumped at ``target``; for negative tests."""
    f = base(lam)
    return f + Poly([1]) if tuple(lam) == tuple(target) else f
