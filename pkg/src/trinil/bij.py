"""Bijections between rook placements on the staircase board, paths in the
multigraph Z (Young's lattice with split edges), and set partitions.

Every map here factors through the column-degree sequence
``(deg C_1(q), ..., deg C_n(q))`` of a placement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .jordan import ConsistencyError
from .partition import Partition, add_box, column, make_partition
from .qpoly import ONE, QM1, Poly
from .rook import (
    FerrersBoard,
    RookPlacement,
    column_degrees,
    enumerate_placements,
    ne,
    placement_from_degrees,
)


@dataclass(frozen=True)
class ZEdge:
    source: Partition
    target: Partition
    weight: Poly

    @property
    def degree(self) -> int:
        return self.weight.degree

    @property
    def has_rook(self) -> bool:
        # rook edges carry a (q-1) factor; first-column edges are monomials
        return self.weight(1) == 0


@dataclass(frozen=True)
class ZPath:
    edges: tuple[ZEdge, ...]

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(e.degree for e in self.edges)

    @property
    def chain(self) -> tuple[Partition, ...]:
        return ((),) + tuple(e.target for e in self.edges)

    @property
    def end(self) -> Partition:
        return self.edges[-1].target if self.edges else ()

    @property
    def weight(self) -> Poly:
        out = ONE
        for e in self.edges:
            out = out * e.weight
        return out


def _rook_edge_target(mu: Partition, h: int) -> Partition:
    """Target of the Z edge out of ``mu`` with weight (q-1) q^h."""
    size = sum(mu)
    j = 2
    while True:
        left, here = column(mu, j - 1), column(mu, j)
        if left == 0:
            raise ValueError(f"no edge of weight (q-1)q^{h} leaves {mu}")
        if size - left <= h <= size - here - 1:
            return add_box(mu, here + 1)
        j += 1


def z_edges_from(mu) -> list[ZEdge]:
    """The l(mu)+1 edges leaving ``mu``, by decreasing degree."""
    mu = make_partition(mu)
    size, ell = sum(mu), len(mu)
    out = [
        ZEdge(mu, _rook_edge_target(mu, size - i), QM1 * Poly.monomial(size - i))
        for i in range(1, ell + 1)
    ]
    out.append(ZEdge(mu, add_box(mu, ell + 1), Poly.monomial(size - ell)))
    return out


def _z_step(mu: Partition, d: int) -> ZEdge | None:
    size, ell = sum(mu), len(mu)
    if d == size - ell:
        return ZEdge(mu, add_box(mu, ell + 1), Poly.monomial(d))
    if size - ell < d <= size:
        return ZEdge(mu, _rook_edge_target(mu, d - 1), QM1 * Poly.monomial(d - 1))
    return None


def path_from_degrees(degrees: Sequence[int]) -> ZPath:
    """The unique Z path from the empty partition with these edge degrees."""
    mu: Partition = ()
    edges = []
    for i, d in enumerate(degrees, start=1):
        e = _z_step(mu, int(d))
        if e is None:
            raise ValueError(
                f"degree sequence not admissible at index {i}: {d} not in "
                f"[{sum(mu) - len(mu)}, {sum(mu)}]"
            )
        edges.append(e)
        mu = e.target
    return ZPath(tuple(edges))


def z_paths(n: int) -> Iterator[ZPath]:
    """Every Z path of length n, by brute-force extension."""

    def rec(mu, acc):
        if len(acc) == n:
            yield ZPath(tuple(acc))
            return
        for e in z_edges_from(mu):
            acc.append(e)
            yield from rec(e.target, acc)
            acc.pop()

    yield from rec((), [])


def _require_staircase(c: RookPlacement):
    if not c.board.is_staircase():
        raise ValueError("placement must live on a staircase board B_n")


def phi(c: RookPlacement) -> ZPath:
    _require_staircase(c)
    return path_from_degrees(column_degrees(c))


def phi_inverse(path: ZPath) -> RookPlacement:
    return placement_from_degrees(path.degree_sequence)


def partition_type(c: RookPlacement) -> Partition:
    return phi(c).end


def placements_of_type(lam) -> list[RookPlacement]:
    lam = make_partition(lam)
    n = sum(lam)
    board = FerrersBoard.staircase(n)
    return [c for c in enumerate_placements(board, n - len(lam)) if partition_type(c) == lam]


def min_ne(lam) -> int:
    """Smallest north-east count over placements of type ``lam``."""
    return min(ne(c) for c in placements_of_type(lam))


# Set partitions are tuples of ascending tuples, blocks in decreasing size,
# ties broken by increasing minimum.
SetPartition = tuple


def normalize_blocks(blocks) -> SetPartition:
    bs = [tuple(sorted(b)) for b in blocks if b]
    bs.sort(key=lambda b: (-len(b), b[0]))
    return tuple(bs)


def set_partition_from_degrees(degrees: Sequence[int]) -> SetPartition:
    """Insert i into block i - d_i of the partition built so far (a new
    singleton when that index is one past the last block)."""
    blocks: list[tuple[int, ...]] = []
    for i, d in enumerate(degrees, start=1):
        j = i - int(d)
        if not 1 <= j <= len(blocks) + 1:
            raise ValueError(f"degree {d} at position {i} is not admissible")
        if j == len(blocks) + 1:
            blocks.append((i,))
        else:
            blocks[j - 1] = blocks[j - 1] + (i,)
        blocks = list(normalize_blocks(blocks))
    return tuple(blocks)


def _restrict(s: SetPartition, i: int) -> SetPartition:
    return normalize_blocks([x for x in b if x <= i] for b in s)


def set_partition_degrees(s: SetPartition) -> tuple[int, ...]:
    n = sum(len(b) for b in s)
    out = []
    prev: SetPartition = ()
    for i in range(1, n + 1):
        block = next(b for b in s if i in b)
        if min(block) == i:
            out.append(i - 1 - len(prev))
        else:
            u = min(block)
            r = next(idx for idx, b in enumerate(prev, start=1) if u in b)
            out.append(i - r)
        prev = _restrict(s, i)
    return tuple(out)


def set_partition_weight(s: SetPartition) -> Poly:
    """Product of the per-element weights q^(i-1-l) or (q-1) q^(i-1-r)."""
    n = sum(len(b) for b in s)
    out = ONE
    prev: SetPartition = ()
    for i in range(1, n + 1):
        block = next(b for b in s if i in b)
        u = min(block)
        if u == i:
            out = out * Poly.monomial(i - 1 - len(prev))
        else:
            r = next(idx for idx, b in enumerate(prev, start=1) if u in b)
            out = out * QM1 * Poly.monomial(i - 1 - r)
        prev = _restrict(s, i)
    return out


def psi(c: RookPlacement) -> SetPartition:
    _require_staircase(c)
    return set_partition_from_degrees(column_degrees(c))


def psi_inverse(s: SetPartition) -> RookPlacement:
    s = normalize_blocks(s)
    return placement_from_degrees(set_partition_degrees(s))


def classical_bijection(c: RookPlacement) -> SetPartition:
    """i and j share a block iff (i, j) holds a rook (transitively)."""
    _require_staircase(c)
    n = c.board.n
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r, col in c.rooks:
        parent[find(r)] = find(col)
    groups: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        groups.setdefault(find(x), []).append(x)
    return normalize_blocks(groups.values())


def set_partitions(n: int) -> Iterator[SetPartition]:
    """All set partitions of [n] via restricted growth words."""
    if n == 0:
        yield ()
        return

    def rec(i, blocks):
        if i > n:
            yield normalize_blocks(blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def set_partition_type(s: SetPartition) -> Partition:
    return tuple(len(b) for b in s)


def set_partitions_of_type(lam) -> list[SetPartition]:
    return [psi(c) for c in placements_of_type(lam)]


def check_weight_preservation(c: RookPlacement) -> None:
    """Raise unless the placement, its Z path and its set partition all carry
    the same weight."""
    w = QM1 ** c.k * Poly.monomial(ne(c))
    if phi(c).weight != w or set_partition_weight(psi(c)) != w:
        raise ConsistencyError(f"weights disagree for {sorted(c.rooks)}")


def parse_set_partition(text: str) -> SetPartition:
    s = text.strip()
    if s in ("-", ""):
        return ()
    try:
        blocks = [[int(x) for x in part.split(",")] for part in s.split("|")]
    except ValueError:
        raise ValueError(f"cannot parse set partition {text!r}") from None
    flat = sorted(x for b in blocks for x in b)
    if flat != list(range(1, len(flat) + 1)):
        raise ValueError(f"blocks must partition 1..n: {text!r}")
    return normalize_blocks(blocks)


def format_set_partition(s: SetPartition) -> str:
    if not s:
        return "-"
    return "|".join(",".join(map(str, b)) for b in s)


__all__ = [
    "SetPartition",
    "ZEdge",
    "ZPath",
    "check_weight_preservation",
    "classical_bijection",
    "format_set_partition",
    "min_ne",
    "normalize_blocks",
    "parse_set_partition",
    "partition_type",
    "path_from_degrees",
    "phi",
    "phi_inverse",
    "placements_of_type",
    "psi",
    "psi_inverse",
    "set_partition_degrees",
    "set_partition_from_degrees",
    "set_partition_type",
    "set_partition_weight",
    "set_partitions",
    "set_partitions_of_type",
    "z_edges_from",
    "z_paths",
]
