"""The polynomials F_lambda(q) counting upper-triangular nilpotent matrices
over F_q by Jordan type, and their closed forms for special shapes."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .partition import (
    Box,
    Partition,
    column,
    covers_down,
    enumerate_syt,
    make_partition,
)
from .qpoly import ONE, QM1, ZERO, Poly, extract_qminus1, q_int


class ConsistencyError(RuntimeError):
    """Two routes that must agree did not; indicates a bug."""


def _is_addable(mu: Partition, box: Box) -> bool:
    r, c = box
    if r < 1 or c < 1:
        return False
    cur = mu[r - 1] if r <= len(mu) else 0
    if cur != c - 1:
        return False
    return r == 1 or mu[r - 2] >= c


def edge_weight(mu: Partition, box: Box) -> Poly:
    """Number of ways to border a matrix of type ``mu`` so that the Jordan
    type grows by ``box``."""
    box = Box(*box)
    if not _is_addable(mu, box):
        raise ValueError("not a cover")
    n = sum(mu)
    j = box.col
    if j == 1:
        return Poly.monomial(n - column(mu, 1))
    left, here = column(mu, j - 1), column(mu, j)
    return Poly.monomial(n - left) * (Poly.monomial(left - here) - ONE)


@lru_cache(maxsize=None)
def _f_lambda(lam: Partition) -> Poly:
    if not lam:
        return ONE
    total = ZERO
    for mu, box in covers_down(lam):
        total = total + edge_weight(mu, box) * _f_lambda(mu)
    return total


def f_lambda(lam) -> Poly:
    """F_lambda(q) via the recurrence over partitions covered by lambda."""
    return _f_lambda(make_partition(lam))


def tableau_weight(chain) -> Poly:
    """Weight of a standard tableau given as its chain of shapes."""
    out = ONE
    for i in range(1, len(chain)):
        prev, cur = chain[i - 1], chain[i]
        r = next(k for k in range(len(cur)) if k >= len(prev) or cur[k] != prev[k])
        j = cur[r]
        if j == 1:
            term = Poly.monomial(i - len(cur))
        else:
            term = Poly.monomial(i - column(cur, j)) - Poly.monomial(i - 1 - column(cur, j - 1))
        out = out * term
    return out


def f_lambda_syt(lam) -> Poly:
    total = ZERO
    for chain in enumerate_syt(lam):
        total = total + tableau_weight(chain)
    return total


def catalan(n: int, k: int) -> int:
    """Generalised Catalan number C_{n,k}; 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    if k == 0:
        return 1
    return comb(n + k, k) - comb(n + k, k - 1)


def f_hook(n: int, k: int) -> Poly:
    """F for the hook (n-k+1, 1^(k-1)), n > k >= 2."""
    if not n > k >= 2:
        raise ValueError("not a proper hook")
    alpha = comb(n - 1, 2) - comb(k - 1, 2)
    inner = ZERO
    for i in range(k):
        inner = inner + Poly.monomial(alpha - i, comb(n - i - 1, k - i - 1))
    return QM1 ** (n - k) * inner


def f_two_rows(r: int, s: int) -> Poly:
    if not r >= s >= 1:
        raise ValueError("need r >= s >= 1")
    if r > s:
        inner = Poly(catalan(r + s - i, i) for i in range(s + 1))
        return QM1 ** (r + s - 2) * inner.shift(comb(r + s - 1, 2) - 2 * s + 1)
    inner = Poly(catalan(2 * r - 1 - i, i) for i in range(r))
    return QM1 ** (2 * r - 2) * inner.shift(comb(2 * r - 2, 2))


def two_equal_alt_terms(r: int) -> list[tuple[int, int, int]]:
    """Summands ``(c, a, b)`` meaning ``c * q^a * (q+1)^b`` of the
    alternative factorisation of F_{(r,r)} / (q-1)^(2r-2)."""
    if r < 1:
        raise ValueError("r must be positive")
    return [
        (catalan(r - 1, r - 1 - i), 2 * (r - 1) ** 2 - i, i) for i in range(r)
    ]


def f_two_equal_alt(r: int) -> Poly:
    qp1 = Poly([1, 1])
    inner = ZERO
    for c, a, b in two_equal_alt_terms(r):
        inner = inner + Poly.monomial(a, c) * qp1 ** b
    return QM1 ** (2 * r - 2) * inner


def format_two_equal_alt(r: int) -> str:
    """Display form such as ``(q-1)^2 * (q^2 + q*(q+1))``."""
    parts = []
    for c, a, b in two_equal_alt_terms(r):
        factors = [] if c == 1 else [str(c)]
        if a:
            factors.append("q" if a == 1 else f"q^{a}")
        if b:
            factors.append("(q+1)" if b == 1 else f"(q+1)^{b}")
        parts.append("*".join(factors) or "1")
    body = " + ".join(parts)
    m = 2 * r - 2
    if m == 0:
        return body
    return ("(q-1)" if m == 1 else f"(q-1)^{m}") + f" * ({body})"


@dataclass(frozen=True)
class DyckPath:
    """Lattice path of unit East ('E') and North ('N') steps that never
    rises above y = x."""

    steps: tuple[str, ...]

    def __post_init__(self):
        h = x = 0
        for s in self.steps:
            if s == "E":
                x += 1
            elif s == "N":
                h += 1
                if h > x:
                    raise ValueError("path rises above y = x")
            else:
                raise ValueError(f"bad step {s!r}")

    @property
    def end(self) -> tuple[int, int]:
        return self.steps.count("E"), self.steps.count("N")


def dyck_paths(n: int, k: int) -> list[DyckPath]:
    """All Dyck paths from (0,0) to (n,k), East steps tried first."""
    if not 0 <= k <= n:
        return []
    out = []

    def rec(x, y, acc):
        if x == n and y == k:
            out.append(DyckPath(tuple(acc)))
            return
        if x < n:
            acc.append("E")
            rec(x + 1, y, acc)
            acc.pop()
        if y < k and y < x:
            acc.append("N")
            rec(x, y + 1, acc)
            acc.pop()

    rec(0, 0, [])
    return out


def dyck_stats(path: DyckPath) -> tuple[int, tuple[int, ...]]:
    """(coarea, rho); rho[i-1] belongs to the i-th row from the bottom."""
    x = y = coarea = 0
    rho = []
    for s in path.steps:
        if s == "E":
            x += 1
            coarea += y
        else:
            y += 1
            rho.append(x - y + 1)
    return coarea, tuple(rho)


def f_two_columns(r: int, s: int) -> Poly:
    """F for (2^r, 1^s) as a sum over Dyck paths to (r+s, r)."""
    if r < 0 or s < 0 or r + s < 1:
        raise ValueError("need r, s >= 0 and r + s >= 1")
    total = ZERO
    for path in dyck_paths(r + s, r):
        coarea, rho = dyck_stats(path)
        term = Poly.monomial(coarea)
        for p in rho:
            term = term * q_int(p)
        total = total + term
    return QM1 ** r * total.shift(comb(r, 2))


def g_lambda(lam) -> Poly:
    """F_lambda with its (q-1)^(n - l(lambda)) factor removed."""
    lam = make_partition(lam)
    m, g = extract_qminus1(f_lambda(lam))
    expected = sum(lam) - len(lam)
    if m != expected:
        raise ConsistencyError(
            f"(q-1) multiplicity {m} != {expected} for {lam}"
        )
    return g


@dataclass
class CoefficientReport:
    k: int
    lhs: Poly
    rhs: Poly
    # (m, coefficient of q^(2k^2 - m) on each side)
    rows: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def catalan_coefficient_identity(k: int) -> CoefficientReport:
    """Expand both factorisations of F_{(k+1,k+1)} / (q-1)^(2k) and compare
    them coefficient by coefficient."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    top = 2 * k * k
    lhs = ZERO
    qp1 = Poly([1, 1])
    for i in range(k + 1):
        lhs = lhs + Poly.monomial(top - i, catalan(k, k - i)) * qp1 ** i
    rhs = Poly(catalan(2 * k + 1 - i, i) for i in range(k + 1)).shift(comb(2 * k, 2))
    rows = [(m, lhs[top - m], rhs[top - m]) for m in range(k + 1)]
    return CoefficientReport(k, lhs, rhs, rows)


def catalan_binomial_sides(k: int, m: int) -> tuple[int, int]:
    """Both sides of the binomial/Catalan identity read off the coefficient
    of q^(2k^2 - m): sum_{i>=m} C(i,m) C_{k,k-i} and C_{k+1+m, k-m}."""
    left = sum(comb(i, m) * catalan(k, k - i) for i in range(m, k + 1))
    return left, catalan(k + 1 + m, k - m)


def hook(n: int, k: int) -> Partition:
    return make_partition((n - k + 1,) + (1,) * (k - 1))


def two_columns(r: int, s: int) -> Partition:
    return make_partition((2,) * r + (1,) * s)


__all__ = [
    "ConsistencyError",
    "CoefficientReport",
    "DyckPath",
    "catalan",
    "catalan_binomial_sides",
    "catalan_coefficient_identity",
    "dyck_paths",
    "dyck_stats",
    "edge_weight",
    "f_hook",
    "f_lambda",
    "f_lambda_syt",
    "f_two_columns",
    "f_two_equal_alt",
    "f_two_rows",
    "format_two_equal_alt",
    "g_lambda",
    "hook",
    "tableau_weight",
    "two_columns",
    "two_equal_alt_terms",
]
