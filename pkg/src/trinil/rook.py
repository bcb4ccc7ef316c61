"""Ferrers boards, non-attacking rook placements and q-rook polynomials.

Squares are (row, col) matrix entries, 1-based; boards are justified up and
to the right, so column ``j`` holds rows ``1 .. heights[j-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .jordan import ConsistencyError
from .qpoly import ONE, QM1, ZERO, Poly, q_int, reverse_scaled


@dataclass(frozen=True)
class FerrersBoard:
    heights: tuple[int, ...]

    def __post_init__(self):
        hs = tuple(int(h) for h in self.heights)
        object.__setattr__(self, "heights", hs)
        if any(h < 0 for h in hs):
            raise ValueError("column heights must be nonnegative")
        if any(a > b for a, b in zip(hs, hs[1:])):
            raise ValueError("column heights must be weakly increasing")

    @classmethod
    def staircase(cls, n: int) -> "FerrersBoard":
        return cls(tuple(range(n)))

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> "FerrersBoard":
        return cls((rows,) * cols)

    @property
    def n(self) -> int:
        return len(self.heights)

    @property
    def area(self) -> int:
        return sum(self.heights)

    def __contains__(self, square) -> bool:
        r, c = square
        return 1 <= c <= self.n and 1 <= r <= self.heights[c - 1]

    def is_staircase(self) -> bool:
        return self.heights == tuple(range(self.n))


@dataclass(frozen=True)
class RookPlacement:
    board: FerrersBoard
    rooks: frozenset

    def __post_init__(self):
        rooks = frozenset((int(r), int(c)) for r, c in self.rooks)
        object.__setattr__(self, "rooks", rooks)
        for sq in rooks:
            if sq not in self.board:
                raise ValueError(f"square {sq} is off the board")
        if len({r for r, _ in rooks}) != len(rooks):
            raise ValueError("two rooks share a row")
        if len({c for _, c in rooks}) != len(rooks):
            raise ValueError("two rooks share a column")

    @classmethod
    def on_staircase(cls, n: int, rooks) -> "RookPlacement":
        return cls(FerrersBoard.staircase(n), frozenset(rooks))

    @property
    def k(self) -> int:
        return len(self.rooks)

    def rook_in_column(self, j: int) -> int | None:
        for r, c in self.rooks:
            if c == j:
                return r
        return None

    def sorted_rooks(self) -> list[tuple[int, int]]:
        return sorted(self.rooks, key=lambda rc: (rc[1], rc[0]))


def _column_ne(height: int, rook_row: int | None, west_rows) -> int:
    # north-east squares inside one column
    if rook_row is None:
        return sum(1 for r in west_rows if r <= height)
    return (rook_row - 1) + sum(1 for r in west_rows if rook_row < r <= height)


def _iter_rows(board: FerrersBoard, k: int) -> Iterator[tuple]:
    """Yield per-column rook rows (``None`` for an empty column)."""
    n = board.n
    hs = board.heights
    used: set[int] = set()
    cols: list = []

    def rec(j, placed):
        if j == n:
            if placed == k:
                yield tuple(cols)
            return
        if k - placed > n - j:
            return
        if placed < k:
            for r in range(1, hs[j] + 1):
                if r not in used:
                    used.add(r)
                    cols.append(r)
                    yield from rec(j + 1, placed + 1)
                    cols.pop()
                    used.discard(r)
        cols.append(None)
        yield from rec(j + 1, placed)
        cols.pop()

    yield from rec(0, 0)


def _from_rows(board: FerrersBoard, rows) -> RookPlacement:
    return RookPlacement(
        board, frozenset((r, j + 1) for j, r in enumerate(rows) if r is not None)
    )


def enumerate_placements(board: FerrersBoard, k: int) -> list[RookPlacement]:
    """All placements of k rooks; columns left to right, rows top to bottom
    within a column, the empty choice last."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return [_from_rows(board, rows) for rows in _iter_rows(board, k)]


def _rows_of(c: RookPlacement) -> list:
    rows = [None] * c.board.n
    for r, col in c.rooks:
        rows[col - 1] = r
    return rows


def column_ne(c: RookPlacement, j: int) -> int:
    rows = _rows_of(c)
    return _column_ne(c.board.heights[j - 1], rows[j - 1], [r for r in rows[: j - 1] if r])


def ne(c: RookPlacement) -> int:
    """Board squares lying directly north or directly east of some rook."""
    rows = _rows_of(c)
    total = 0
    west: list[int] = []
    for j, h in enumerate(c.board.heights):
        total += _column_ne(h, rows[j], west)
        if rows[j] is not None:
            west.append(rows[j])
    return total


def ne_direct(c: RookPlacement) -> int:
    """Same as :func:`ne`, by scanning every square of the board."""
    count = 0
    for col, h in enumerate(c.board.heights, start=1):
        for row in range(1, h + 1):
            if (row, col) in c.rooks:
                continue
            if any(cc == col and rr > row for rr, cc in c.rooks) or any(
                rr == row and cc < col for rr, cc in c.rooks
            ):
                count += 1
    return count


def inv(c: RookPlacement) -> int:
    return c.board.area - c.k - ne(c)


def column_weight(c: RookPlacement, j: int) -> Poly:
    if not 1 <= j <= c.board.n:
        raise ValueError("column out of range")
    e = column_ne(c, j)
    w = Poly.monomial(e)
    return QM1 * w if c.rook_in_column(j) is not None else w


def placement_weight(c: RookPlacement) -> Poly:
    return QM1 ** c.k * Poly.monomial(ne(c))


def column_degrees(c: RookPlacement) -> tuple[int, ...]:
    """Degrees of the column weights, (deg C_1, ..., deg C_n)."""
    rows = _rows_of(c)
    out = []
    west: list[int] = []
    for j, h in enumerate(c.board.heights):
        e = _column_ne(h, rows[j], west)
        out.append(e + (rows[j] is not None))
        if rows[j] is not None:
            west.append(rows[j])
    return tuple(out)


def placement_from_degrees(degrees) -> RookPlacement:
    """Inverse of :func:`column_degrees` on the staircase board B_n.

    A column with k rooks to its west has weight q^k when empty, or
    (q-1) q^(k+i) when its rook sits on the i-th free square from the top.
    """
    n = len(degrees)
    used: list[int] = []
    rooks = []
    for j, d in enumerate(degrees, start=1):
        k = len(used)
        if d == k:
            continue
        free = [r for r in range(1, j) if r not in used]
        i = d - 1 - k
        if not 0 <= i < len(free):
            raise ValueError(f"degree {d} at column {j} is not admissible")
        used.append(free[i])
        rooks.append((free[i], j))
    return RookPlacement.on_staircase(n, rooks)


def q_rook_poly(board: FerrersBoard, k: int) -> Poly:
    """Sum of q^inv over all placements of k rooks."""
    counts: dict[int, int] = {}
    base = board.area - k
    for rows in _iter_rows(board, k):
        e = base - _ne_rows(board.heights, rows)
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return ZERO
    return Poly(counts.get(i, 0) for i in range(max(counts) + 1))


def _ne_rows(heights, rows) -> int:
    total = 0
    west: list[int] = []
    for h, r in zip(heights, rows):
        total += _column_ne(h, r, west)
        if r is not None:
            west.append(r)
    return total


@lru_cache(maxsize=None)
def q_stirling(n: int, k: int) -> Poly:
    """q-Stirling numbers of the second kind."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE
    left = Poly.monomial(k - 1) * q_stirling(n - 1, k - 1) if k >= 1 else ZERO
    return left + q_int(k) * q_stirling(n - 1, k)


def p_rank_count_haglund(board: FerrersBoard, k: int) -> Poly:
    """(q-1)^k q^(area-k) R_{B,k}(1/q)."""
    r = q_rook_poly(board, k)
    if r.is_zero():
        return ZERO
    return QM1 ** k * reverse_scaled(r, board.area - k)


def p_rank_count_direct(board: FerrersBoard, k: int) -> Poly:
    """Sum of (q-1)^k q^ne over all placements of k rooks."""
    counts: dict[int, int] = {}
    for rows in _iter_rows(board, k):
        e = _ne_rows(board.heights, rows)
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return ZERO
    return QM1 ** k * Poly(counts.get(i, 0) for i in range(max(counts) + 1))


def p_rank_count(board: FerrersBoard, k: int) -> Poly:
    """Number of rank-k matrices supported in ``board``, computed two ways."""
    a = p_rank_count_haglund(board, k)
    b = p_rank_count_direct(board, k)
    if a != b:
        raise ConsistencyError(f"rank-count routes disagree for {board}, k={k}")
    return a


def parse_placement(text: str, n: int | None = None) -> RookPlacement:
    """Parse ``"2,3;1,5"`` onto B_n (n defaults to the largest column)."""
    s = text.strip()
    rooks = []
    if s not in ("-", ""):
        for pair in s.split(";"):
            try:
                r, c = (int(x) for x in pair.split(","))
            except ValueError:
                raise ValueError(f"cannot parse square {pair!r}") from None
            rooks.append((r, c))
    if n is None:
        n = max((c for _, c in rooks), default=0)
    return RookPlacement.on_staircase(n, rooks)


def format_placement(c: RookPlacement) -> str:
    if not c.rooks:
        return "-"
    return ";".join(f"{r},{col}" for r, col in c.sorted_rooks())
