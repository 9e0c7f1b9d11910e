"""Shared helpers: a transparent brute-force oracle independent of the fast paths."""

import itertools

from qqueens.core import MoveSet, Square, attacks


def naive_count_unlabelled(moves: MoveSet, q: int, n: int) -> int:
    """Check every q-combination of squares against the attack predicate."""
    squares = [Square(x, y) for y in range(1, n + 1) for x in range(1, n + 1)]
    total = 0
    for combo in itertools.combinations(squares, q):
        ok = True
        for a, b in itertools.combinations(combo, 2):
            if attacks(moves, a, b):
                ok = False
                break
        if ok:
            total += 1
    return total


def naive_count_labelled(moves: MoveSet, q: int, n: int) -> int:
    """Ordered tuples of distinct squares, pairwise nonattacking."""
    squares = [Square(x, y) for y in range(1, n + 1) for x in range(1, n + 1)]
    total = 0
    for combo in itertools.permutations(squares, q):
        ok = True
        for a, b in itertools.combinations(combo, 2):
            if attacks(moves, a, b):
                ok = False
                break
        if ok:
            total += 1
    return total


def naive_count_pattern(pattern, n: int) -> int:
    """Nested product enumeration of every constrained tuple."""
    from qqueens.core import is_multiple
    from qqueens.enumerator import Collinear

    squares = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    total = 0
    for tup in itertools.product(squares, repeat=pattern.piece_count):
        ok = True
        for c in pattern.constraints:
            (xi, yi), (xj, yj) = tup[c.i - 1], tup[c.j - 1]
            dx, dy = xj - xi, yj - yi
            if isinstance(c, Collinear):
                if not is_multiple(dx, dy, c.slope):
                    ok = False
                    break
            else:
                if (dx, dy) != (0, 0):
                    ok = False
                    break
        if ok:
            total += 1
    return total
