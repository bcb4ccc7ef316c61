"""Brute-force ground truth: enumerate strictly upper-triangular matrices over
a small prime field and tally them by Jordan type."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from itertools import product
from math import comb

import numpy as np

from .partition import Partition, conjugate, format_partition, make_partition, partitions_of

DEFAULT_BUDGET = 10**8
SUPPORTED_PRIMES = (2, 3, 5)


class BudgetExceeded(ValueError):
    pass


def _check_prime(p: int):
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise ValueError(f"{p} is not prime")


def mat_rank(rows, p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    _check_prime(p)
    a = [[x % p for x in row] for row in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for r in range(nrows):
            if r != rank and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def mat_mul(a, b, p: int):
    n, m = len(a), len(b[0])
    return [
        [sum(a[i][t] * b[t][j] for t in range(len(b))) % p for j in range(m)]
        for i in range(n)
    ]


def jordan_matrix(lam) -> list[list[int]]:
    """J_lambda: blocks J_{lambda_1}, J_{lambda_2}, ... down the diagonal."""
    lam = make_partition(lam)
    n = sum(lam)
    out = [[0] * n for _ in range(n)]
    start = 0
    for part in lam:
        for i in range(start, start + part - 1):
            out[i][i + 1] = 1
        start += part
    return out


def jordan_power_ranks(lam) -> tuple[int, ...]:
    """(rank J^0, rank J^1, ..., 0) read off the column lengths."""
    cols = conjugate(make_partition(lam))
    out = [sum(cols[k:]) for k in range(len(cols))]
    out.append(0)
    return tuple(out)


def type_from_ranks(ranks) -> Partition:
    """Partition whose conjugate has parts r_{k-1} - r_k."""
    cols = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    cols = [c for c in cols if c]
    return conjugate(make_partition(cols))


def jordan_type(x, p: int) -> Partition:
    """Jordan type of a nilpotent matrix from the ranks of its powers."""
    n = len(x)
    ranks = [n]
    power = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(n + 1):
        power = mat_mul(power, x, p)
        ranks.append(mat_rank(power, p))
        if ranks[-1] == 0:
            return type_from_ranks(ranks)
    raise ValueError("matrix is not nilpotent")


def free_positions(n: int) -> list[tuple[int, int]]:
    """Strictly upper entries in column-major order (0-based)."""
    return [(i, j) for j in range(n) for i in range(j)]


def _batch_rank(a: np.ndarray, p: int, inv_table: np.ndarray) -> np.ndarray:
    """Ranks mod p of a stack of square matrices, shape (B, n, n)."""
    a = a.copy()
    b, n, _ = a.shape
    rank = np.zeros(b, dtype=np.int64)
    used = np.zeros((b, n), dtype=bool)
    idx = np.arange(b)
    for c in range(n):
        cand = (a[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        sel = idx[has]
        piv = cand[sel].argmax(axis=1)
        prow = a[sel, piv, :]
        prow = prow * inv_table[prow[:, c]][:, None] % p
        a[sel, piv, :] = prow
        factors = a[sel, :, c].copy()
        factors[np.arange(len(sel)), piv] = 0
        a[sel] = (a[sel] - factors[:, :, None] * prow[:, None, :]) % p
        used[sel, piv] = True
        rank[sel] += 1
    return rank


def _batch_types(mats: np.ndarray, p: int) -> list[tuple[int, ...]]:
    """Rank sequences of powers for a stack of nilpotent matrices."""
    b, n, _ = mats.shape
    inv_table = np.zeros(p, dtype=np.int64)
    for v in range(1, p):
        inv_table[v] = pow(v, -1, p)
    ranks = [np.full(b, n, dtype=np.int64)]
    power = mats.copy()
    for _ in range(n):
        r = _batch_rank(power, p, inv_table)
        ranks.append(r)
        if not r.any():
            break
        power = np.matmul(power, mats) % p
    stacked = np.stack(ranks, axis=1)
    return [tuple(row) for row in stacked.tolist()]


@dataclass
class TypeCensus:
    n: int
    p: int
    counts: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "p": self.p,
                "counts": {format_partition(k): v for k, v in self.counts.items()},
            },
            sort_keys=False,
        )

    @classmethod
    def from_json(cls, text: str) -> "TypeCensus":
        from .partition import parse_partition

        d = json.loads(text)
        counts = {parse_partition(k): int(v) for k, v in d["counts"].items()}
        return cls(int(d["n"]), int(d["p"]), counts)

    def to_csv(self, formula=None) -> str:
        """CSV with columns lambda, count, formula_value, match."""
        from .jordan import f_lambda
        from .qpoly import eval_int

        formula = formula or f_lambda
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda", "count", "formula_value", "match"])
        for lam, cnt in self.counts.items():
            fv = eval_int(formula(lam), self.p)
            w.writerow([format_partition(lam), cnt, fv, str(fv == cnt).lower()])
        return buf.getvalue()


def census(
    n: int,
    p: int,
    budget: int = DEFAULT_BUDGET,
    shards: int = 1,
    chunk: int = 1 << 15,
) -> TypeCensus:
    """Count every strictly upper-triangular n x n matrix over F_p by type.

    The free entries, in column-major order, are the base-p digits of a
    counter; ``shards`` splits the counter range, and the merged tally does
    not depend on it.
    """
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"p must be one of {SUPPORTED_PRIMES}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = comb(n, 2)
    total = p**m
    if total > budget:
        raise BudgetExceeded(
            f"census({n}, {p}) needs {total} matrices, budget is {budget}"
        )
    shards = max(1, min(shards, total))
    bounds = [total * s // shards for s in range(shards + 1)]
    tally: dict = {}
    for s in range(shards):
        for lam, cnt in _census_range(n, p, bounds[s], bounds[s + 1], chunk).items():
            tally[lam] = tally.get(lam, 0) + cnt
    counts = {lam: tally.get(lam, 0) for lam in partitions_of(n)}
    return TypeCensus(n, p, counts)


def _census_range(n: int, p: int, lo: int, hi: int, chunk: int) -> dict:
    if n == 0:
        return {(): hi - lo}
    pos = free_positions(n)
    m = len(pos)
    rows = np.array([i for i, _ in pos], dtype=np.int64)
    cols = np.array([j for _, j in pos], dtype=np.int64)
    weights = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    by_ranks: dict = {}
    for start in range(lo, hi, chunk):
        stop = min(hi, start + chunk)
        codes = np.arange(start, stop, dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % p
        mats = np.zeros((stop - start, n, n), dtype=np.int64)
        mats[:, rows, cols] = digits
        for seq in _batch_types(mats, p):
            by_ranks[seq] = by_ranks.get(seq, 0) + 1
    out: dict = {}
    for seq, cnt in by_ranks.items():
        lam = type_from_ranks(seq)
        out[lam] = out.get(lam, 0) + cnt
    return out


def border_extension_count(mu, lam, p: int) -> int:
    """Number of vectors v making [[J_mu, v], [0, 0]] have Jordan type lam."""
    mu, lam = make_partition(mu), make_partition(lam)
    if sum(lam) != sum(mu) + 1:
        raise ValueError("lam must have one more box than mu")
    j = jordan_matrix(mu)
    n = sum(lam)
    count = 0
    for v in product(range(p), repeat=n - 1):
        x = [row + [v[i]] for i, row in enumerate(j)] + [[0] * n]
        if jordan_type(x, p) == lam:
            count += 1
    return count


def enumerate_matrices(n: int, p: int):
    """Yield every strictly upper-triangular matrix as nested lists."""
    pos = free_positions(n)
    for digits in product(range(p), repeat=len(pos)):
        x = [[0] * n for _ in range(n)]
        for (i, j), d in zip(pos, digits):
            x[i][j] = d
        yield x
