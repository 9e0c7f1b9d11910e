"""Boards, moves, pieces, and the attack relation.

A rider piece is defined by a finite set of basic moves: nonzero integer
vectors in lowest terms, pairwise non-parallel.  A piece on square ``a``
attacks square ``b`` when ``b - a`` is an integer multiple (zero included,
so coincident squares attack) of some basic move.  Boards are ``n x n``
with 1-based coordinates in ``[1, n]``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple


@dataclass(frozen=True)
class Move:
    """A basic move vector ``(c, d)`` in lowest terms with canonical sign.

    Canonical sign means ``c > 0``, or ``c == 0 and d == 1``, so parallel
    vectors share one representative and slope identity is equality.
    """

    c: int
    d: int

    def __post_init__(self) -> None:
        if (self.c, self.d) == (0, 0):
            raise ValueError("move vector must be nonzero")
        if math.gcd(abs(self.c), abs(self.d)) != 1:
            raise ValueError(f"move vector {(self.c, self.d)} is not in lowest terms")
        if not (self.c > 0 or (self.c == 0 and self.d == 1)):
            raise ValueError(
                f"move vector {(self.c, self.d)} is not sign-canonical; "
                "use Move.from_vector"
            )

    @classmethod
    def from_vector(cls, c: int, d: int) -> "Move":
        """Build a canonical move from any nonzero integer vector in lowest terms."""
        if c < 0 or (c == 0 and d < 0):
            c, d = -c, -d
        return cls(c, d)


def chat_dhat(m: Move) -> tuple[int, int]:
    """Return ``(min(|c|, |d|), max(|c|, |d|))`` for a move."""
    a, b = abs(m.c), abs(m.d)
    return (min(a, b), max(a, b))


HORIZONTAL = Move(1, 0)
VERTICAL = Move(0, 1)
DIAGONAL_UP = Move(1, 1)
DIAGONAL_DOWN = Move(1, -1)


@dataclass(frozen=True)
class MoveSet:
    """A nonempty ordered set of pairwise non-parallel canonical moves."""

    moves: tuple[Move, ...]

    def __post_init__(self) -> None:
        if not self.moves:
            raise ValueError("move set must be nonempty")
        if len(set(self.moves)) != len(self.moves):
            raise ValueError("move set contains parallel (duplicate) moves")

    def __iter__(self):
        return iter(self.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __contains__(self, m: Move) -> bool:
        return m in self.moves

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "MoveSet":
        return cls(tuple(Move.from_vector(c, d) for c, d in pairs))

    def to_pairs(self) -> list[list[int]]:
        return [[m.c, m.d] for m in self.moves]

    def canonical_key(self) -> tuple[tuple[int, int], ...]:
        """Order-independent key; cache entries and reports use it."""
        return tuple(sorted((m.c, m.d) for m in self.moves))

    def to_json(self) -> str:
        return json.dumps(self.to_pairs())

    @classmethod
    def from_json(cls, text: str) -> "MoveSet":
        pairs = json.loads(text)
        return cls.from_pairs((int(c), int(d)) for c, d in pairs)


@dataclass(frozen=True)
class PartialQueenSpec:
    """A piece with ``h`` orthogonal moves and ``k`` diagonal (slope +-1) moves."""

    h: int
    k: int

    def __post_init__(self) -> None:
        if self.h not in (0, 1, 2) or self.k not in (0, 1, 2):
            raise ValueError("h and k must each be 0, 1, or 2")
        if self.h + self.k < 1:
            raise ValueError("h + k must be at least 1")

    @property
    def move_count(self) -> int:
        return self.h + self.k

    def to_json(self) -> str:
        return json.dumps({"h": self.h, "k": self.k})

    @classmethod
    def from_json(cls, text: str) -> "PartialQueenSpec":
        obj = json.loads(text)
        return cls(int(obj["h"]), int(obj["k"]))


def partial_queen(spec: PartialQueenSpec) -> MoveSet:
    """Canonical move set of a partial queen.

    h=1 contributes the horizontal move, h=2 adds the vertical one; k=1
    contributes slope +1, k=2 adds slope -1.  On a square board every
    alternative single-move choice is count-equivalent; tests verify that
    rather than assume it.
    """
    moves: list[Move] = []
    if spec.h >= 1:
        moves.append(HORIZONTAL)
    if spec.h == 2:
        moves.append(VERTICAL)
    if spec.k >= 1:
        moves.append(DIAGONAL_UP)
    if spec.k == 2:
        moves.append(DIAGONAL_DOWN)
    return MoveSet(tuple(moves))


ALL_PIECE_SPECS: tuple[PartialQueenSpec, ...] = tuple(
    PartialQueenSpec(h, k) for h in (0, 1, 2) for k in (0, 1, 2) if h + k >= 1
)


class Square(NamedTuple):
    """A board square with 1-based coordinates."""

    x: int
    y: int

    def on_board(self, n: int) -> bool:
        return 1 <= self.x <= n and 1 <= self.y <= n


@dataclass(frozen=True)
class Placement:
    """Labelled pieces on a board: square i holds piece i+1."""

    squares: tuple[Square, ...]
    board_size: int

    def __post_init__(self) -> None:
        if len(self.squares) < 1:
            raise ValueError("placement needs at least one piece")
        for s in self.squares:
            if not s.on_board(self.board_size):
                raise ValueError(f"square {s} is off the {self.board_size}x{self.board_size} board")


def is_multiple(dx: int, dy: int, m: Move) -> bool:
    """True when ``(dx, dy)`` equals ``t * (m.c, m.d)`` for some integer t (t=0 allowed)."""
    if m.c == 0:
        # canonical vertical move is (0, 1)
        return dx == 0
    if dx % m.c != 0:
        return False
    return dy == (dx // m.c) * m.d


def attacks(moves: MoveSet, a: Square, b: Square) -> bool:
    """Whether pieces on ``a`` and ``b`` attack each other.

    Coincident squares always attack.
    """
    dx, dy = b.x - a.x, b.y - a.y
    if (dx, dy) == (0, 0):
        return True
    return any(is_multiple(dx, dy, m) for m in moves)
