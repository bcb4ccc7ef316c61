"""Integer partitions and Young's lattice.

Partitions are plain tuples of positive ints in weakly decreasing order;
the empty partition is ``()``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

Partition = tuple


class Box(NamedTuple):
    """1-based (row, col) position of a box in a Ferrers diagram."""

    row: int
    col: int


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate and canonicalise; trailing zeros are dropped."""
    ps = [int(p) for p in parts]
    while ps and ps[-1] == 0:
        ps.pop()
    if any(p <= 0 for p in ps):
        raise ValueError(f"parts must be positive: {ps}")
    if any(a < b for a, b in zip(ps, ps[1:])):
        raise ValueError(f"parts must be weakly decreasing: {ps}")
    return tuple(ps)


def size(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def column(lam: Partition, j: int) -> int:
    """Size of the j-th column (1-based); 0 beyond the diagram."""
    if j < 1:
        raise ValueError("columns are 1-based")
    return sum(1 for p in lam if p >= j)


def add_box(mu: Partition, row: int) -> Partition:
    parts = list(mu) + [0]
    parts[row - 1] += 1
    return make_partition(parts)


def covers_up(mu: Partition) -> list[tuple[Partition, Box]]:
    """All lambda covering ``mu``, with the added box, by increasing row."""
    out = []
    for i in range(len(mu) + 1):
        cur = mu[i] if i < len(mu) else 0
        if i == 0 or mu[i - 1] > cur:
            lam = mu[:i] + (cur + 1,) + mu[i + 1:]
            out.append((lam, Box(i + 1, cur + 1)))
    return out


def covers_down(lam: Partition) -> list[tuple[Partition, Box]]:
    """All mu covered by ``lam``, with the removed box, by increasing row."""
    out = []
    for i, p in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if p > nxt:
            mu = lam[:i] + ((p - 1,) if p > 1 else ()) + lam[i + 1:]
            out.append((mu, Box(i + 1, p)))
    return out


def n_lambda(lam: Partition) -> int:
    return sum(i * p for i, p in enumerate(lam))


@lru_cache(maxsize=None)
def num_syt(lam: Partition) -> int:
    """Number of standard Young tableaux, by counting chains from the empty
    partition."""
    if not lam:
        return 1
    return sum(num_syt(mu) for mu, _ in covers_down(lam))


def enumerate_syt(lam: Partition) -> list[tuple[Partition, ...]]:
    """Every maximal chain () < ... < lam, as a tuple of partitions."""
    lam = make_partition(lam)
    if not lam:
        return [((),)]
    return [chain + (lam,) for mu, _ in covers_down(lam) for chain in enumerate_syt(mu)]


def chain_to_tableau(chain: tuple[Partition, ...]) -> list[list[int]]:
    """Row fillings of the standard tableau recorded by a chain."""
    rows: list[list[int]] = []
    for i in range(1, len(chain)):
        prev, cur = chain[i - 1], chain[i]
        r = next(k for k in range(len(cur)) if k >= len(prev) or cur[k] != prev[k])
        if r == len(rows):
            rows.append([])
        rows[r].append(i)
    return rows


def partitions_of(n: int, num_parts: int | None = None) -> list[Partition]:
    """Partitions of n in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    out = list(gen(n, n))
    if num_parts is not None:
        out = [p for p in out if len(p) == num_parts]
    return out


def parse_partition(text: str) -> Partition:
    s = text.strip()
    if s in ("-", ""):
        return ()
    try:
        parts = [int(x) for x in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return make_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "-"
