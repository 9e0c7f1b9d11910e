"""The ground-truth oracle: exhaustive placement and lattice-point counters.

Everything here is exact integer counting.  ``count_unlabelled`` enumerates
squares in a fixed total order and only extends with higher-indexed squares,
pruning with per-square attack bitsets; the last piece is counted with a
popcount instead of a loop.  That combination is what makes q = 4 boards in
the high teens feasible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .core import Move, MoveSet, is_multiple

DEFAULT_BUDGET = 10**9


class BudgetExceededError(Exception):
    """Search budget exhausted; carries partial progress for reporting."""

    def __init__(self, nodes: int, budget: int, partial: Optional[int] = None,
                 last_completed_n: Optional[int] = None):
        self.nodes = nodes
        self.budget = budget
        self.partial = partial
        self.last_completed_n = last_completed_n
        detail = f"visited {nodes} partial placements (budget {budget})"
        if last_completed_n is not None:
            detail += f"; last completed board size n={last_completed_n}"
        super().__init__(detail)


@dataclass(frozen=True)
class AttackTable:
    """Per-square bitsets over the n*n squares marking attacked squares (self included)."""

    board_size: int
    masks: tuple[int, ...]

    @classmethod
    def build(cls, moves: MoveSet, n: int) -> "AttackTable":
        masks = [0] * (n * n)
        for y in range(1, n + 1):
            for x in range(1, n + 1):
                idx = (y - 1) * n + (x - 1)
                mask = 1 << idx
                for m in moves:
                    for sign in (1, -1):
                        t = sign
                        while True:
                            tx, ty = x + t * m.c, y + t * m.d
                            if not (1 <= tx <= n and 1 <= ty <= n):
                                break
                            mask |= 1 << ((ty - 1) * n + (tx - 1))
                            t += sign
                masks[idx] = mask
        return cls(n, tuple(masks))


def count_unlabelled(moves: MoveSet, q: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of q-subsets of distinct squares of the n x n board, pairwise nonattacking."""
    if q < 1:
        raise ValueError("q must be >= 1")
    if n == 0:
        return 0
    if q == 1:
        return n * n
    size = n * n
    full = (1 << size) - 1
    table = AttackTable.build(moves, n)
    # ok[i]: higher-indexed squares neither equal to nor attacked by square i
    ok = [(~table.masks[i] & full) & ~((1 << (i + 1)) - 1) for i in range(size)]

    total = 0
    nodes = 0

    def extend(allowed: int, depth: int) -> None:
        nonlocal total, nodes
        if depth == q - 2:
            m = allowed
            while m:
                lsb = m & -m
                i = lsb.bit_length() - 1
                m ^= lsb
                nodes += 1
                total += (allowed & ok[i]).bit_count()
            if nodes > budget:
                raise BudgetExceededError(nodes, budget, partial=total)
            return
        m = allowed
        while m:
            lsb = m & -m
            i = lsb.bit_length() - 1
            m ^= lsb
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(nodes, budget, partial=total)
            nxt = allowed & ok[i]
            if nxt:
                extend(nxt, depth + 1)

    extend(full, 0)
    return total


def count_labelled(moves: MoveSet, q: int, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of nonattacking placements of q labelled pieces: q! times the unlabelled count."""
    return math.factorial(q) * count_unlabelled(moves, q, n, budget=budget)


def _line_runs(slope: Move, n: int) -> Iterator[int]:
    """Lengths of the maximal board lines of the given slope."""
    starts = []
    for y in range(1, n + 1):
        for x in range(1, n + 1):
            px, py = x - slope.c, y - slope.d
            if not (1 <= px <= n and 1 <= py <= n):
                starts.append((x, y))
    for x, y in starts:
        length = 0
        while 1 <= x <= n and 1 <= y <= n:
            length += 1
            x += slope.c
            y += slope.d
        yield length


def alpha_pairs(slope: Move, n: int) -> int:
    """Ordered pairs of squares that attack each other along one slope
    (coincident pairs included): the sum of squared line lengths."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(length * length for length in _line_runs(slope, n))


def beta_triples(slope: Move, n: int) -> int:
    """Ordered triples of squares collinear along one slope (coincidences
    allowed): the sum of cubed line lengths."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(length**3 for length in _line_runs(slope, n))


@dataclass(frozen=True)
class Collinear:
    """Pieces i and j lie on a common line of the given slope (possibly coincident)."""

    i: int
    j: int
    slope: Move


@dataclass(frozen=True)
class Equal:
    """Pieces i and j occupy the same square."""

    i: int
    j: int


Constraint = Union[Collinear, Equal]


@dataclass(frozen=True)
class ConstraintPattern:
    """A placement pattern on ``piece_count`` pieces; counting it means counting
    ordered tuples of squares (repetition allowed) meeting every constraint."""

    piece_count: int
    constraints: tuple[Constraint, ...]

    def __post_init__(self) -> None:
        if not self.constraints:
            raise ValueError("pattern needs at least one constraint")
        for c in self.constraints:
            if not (1 <= c.i < c.j <= self.piece_count):
                raise ValueError(f"constraint indices {(c.i, c.j)} out of range")

    def relabelled(self, perm: dict[int, int]) -> "ConstraintPattern":
        """Apply a piece permutation consistently to every constraint."""
        out: list[Constraint] = []
        for c in self.constraints:
            i, j = perm[c.i], perm[c.j]
            if i > j:
                i, j = j, i
            if isinstance(c, Collinear):
                out.append(Collinear(i, j, c.slope))
            else:
                out.append(Equal(i, j))
        return ConstraintPattern(self.piece_count, tuple(out))


def pattern(piece_count: int, *constraints: Constraint) -> ConstraintPattern:
    return ConstraintPattern(piece_count, tuple(constraints))


def _line_count_through(x: int, y: int, slope: Move, n: int) -> int:
    """Number of board points of the form (x, y) + t*slope, t any integer."""
    lo, hi = None, None

    def clamp(p: int, step: int) -> tuple[Optional[int], Optional[int]]:
        if step == 0:
            return None, None
        a, b = 1 - p, n - p
        if step > 0:
            return -((-a) // step), b // step
        return -((-b) // step), a // step

    for p, step in ((x, slope.c), (y, slope.d)):
        l, h = clamp(p, step)
        if l is not None:
            lo = l if lo is None else max(lo, l)
            hi = h if hi is None else min(hi, h)
    if lo is None:
        raise ValueError("zero slope vector")
    return max(0, hi - lo + 1)


def _line_points_through(x: int, y: int, slope: Move, n: int) -> Iterator[tuple[int, int]]:
    for sign in (1, -1):
        t = 0 if sign == 1 else -1
        while True:
            px, py = x + t * slope.c, y + t * slope.d
            if not (1 <= px <= n and 1 <= py <= n):
                break
            yield (px, py)
            t += sign


def count_pattern(pat: ConstraintPattern, n: int) -> int:
    """Exact number of ordered tuples of board squares satisfying the pattern.

    Constraint components are enumerated independently and the component
    counts multiplied; inside a component each piece after the first is
    generated from one constraint to an already-placed piece and filtered
    by the others, and a final single-constraint piece is counted
    arithmetically instead of enumerated.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    edges: dict[int, list[Constraint]] = {i: [] for i in range(1, pat.piece_count + 1)}
    for c in pat.constraints:
        edges[c.i].append(c)
        edges[c.j].append(c)

    seen: set[int] = set()
    total = 1
    for root in range(1, pat.piece_count + 1):
        if root in seen:
            continue
        order: list[int] = [root]
        seen.add(root)
        frontier = [root]
        while frontier:
            cur = frontier.pop(0)
            for c in edges[cur]:
                other = c.j if c.i == cur else c.i
                if other not in seen:
                    seen.add(other)
                    order.append(other)
                    frontier.append(other)
        total *= _count_component(order, edges, n)
        if total == 0:
            return 0
    return total


def _count_component(order: list[int], edges: dict[int, list[Constraint]], n: int) -> int:
    placed_rank = {p: r for r, p in enumerate(order)}

    def back_constraints(piece: int) -> list[tuple[Constraint, int]]:
        out = []
        for c in edges[piece]:
            other = c.j if c.i == piece else c.i
            if other in placed_rank and placed_rank[other] < placed_rank[piece]:
                out.append((c, other))
        return out

    backs = {p: back_constraints(p) for p in order}

    def satisfies(c: Constraint, pos_new: tuple[int, int], pos_old: tuple[int, int]) -> bool:
        dx, dy = pos_new[0] - pos_old[0], pos_new[1] - pos_old[1]
        if isinstance(c, Equal):
            return (dx, dy) == (0, 0)
        return is_multiple(dx, dy, c.slope)

    count = 0
    positions: dict[int, tuple[int, int]] = {}
    last = order[-1]

    def place(rank: int) -> None:
        nonlocal count
        piece = order[rank]
        cons = backs[piece]
        if rank == 0:
            if len(order) == 1:
                count += n * n
                return
            for x in range(1, n + 1):
                for y in range(1, n + 1):
                    positions[piece] = (x, y)
                    place(1)
            return
        anchor_c, anchor = cons[0]
        ax, ay = positions[anchor]
        if piece == last and len(cons) == 1:
            if isinstance(anchor_c, Equal):
                count += 1
            else:
                count += _line_count_through(ax, ay, anchor_c.slope, n)
            return
        if isinstance(anchor_c, Equal):
            candidates: Iterable[tuple[int, int]] = ((ax, ay),)
        else:
            candidates = _line_points_through(ax, ay, anchor_c.slope, n)
        rest = cons[1:]
        for pos in candidates:
            if all(satisfies(c, pos, positions[other]) for c, other in rest):
                positions[piece] = pos
                if rank + 1 == len(order):
                    count += 1
                else:
                    place(rank + 1)
        return

    place(0)
    return count


@dataclass(frozen=True)
class CountRecord:
    """One oracle output: the exact count for (piece, q, n)."""

    moves: MoveSet
    q: int
    n: int
    count: int


def sequence(
    moves: MoveSet,
    q: int,
    n_lo: int,
    n_hi: int,
    budget: int = DEFAULT_BUDGET,
    cache: Optional["CountCache"] = None,
) -> list[CountRecord]:
    """Oracle counts for each n in [n_lo, n_hi], cache-aware and deterministic.

    Budget errors propagate with the last completed board size attached.
    """
    if n_lo > n_hi:
        raise ValueError("empty range")
    records = []
    last_completed = None
    for n in range(n_lo, n_hi + 1):
        cached = cache.get(moves, q, n) if cache is not None else None
        if cached is not None:
            value = cached
        else:
            try:
                value = count_unlabelled(moves, q, n, budget=budget)
            except BudgetExceededError as err:
                raise BudgetExceededError(
                    err.nodes, err.budget, partial=err.partial,
                    last_completed_n=last_completed,
                ) from err
            if cache is not None:
                cache.put(CountRecord(moves, q, n, value))
        records.append(CountRecord(moves, q, n, value))
        last_completed = n
    return records
