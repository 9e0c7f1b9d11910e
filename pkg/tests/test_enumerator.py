import pytest
from hypothesis import given, settings, strategies as st

from conftest import naive_count_labelled, naive_count_pattern, naive_count_unlabelled
from qqueens.core import ALL_PIECE_SPECS, Move, MoveSet, PartialQueenSpec, partial_queen
from qqueens.enumerator import (
    AttackTable,
    BudgetExceededError,
    Collinear,
    ConstraintPattern,
    Equal,
    alpha_pairs,
    beta_triples,
    count_labelled,
    count_pattern,
    count_unlabelled,
    pattern,
    sequence,
)

QUEEN = partial_queen(PartialQueenSpec(2, 2))
BISHOP = partial_queen(PartialQueenSpec(0, 2))
ROOK = partial_queen(PartialQueenSpec(2, 0))
SEMIROOK = partial_queen(PartialQueenSpec(1, 0))


def test_attack_table_symmetric_and_reflexive():
    for n in (1, 2, 5):
        table = AttackTable.build(QUEEN, n)
        for i in range(n * n):
            assert table.masks[i] >> i & 1
            for j in range(n * n):
                assert (table.masks[i] >> j) & 1 == (table.masks[j] >> i) & 1


def test_count_single_piece_is_board_size():
    for spec in ALL_PIECE_SPECS:
        moves = partial_queen(spec)
        for n in (0, 1, 3, 7):
            assert count_unlabelled(moves, 1, n) == n * n


def test_count_examples():
    assert count_unlabelled(QUEEN, 2, 3) == 8
    assert count_unlabelled(ROOK, 2, 2) == 2
    assert count_labelled(QUEEN, 2, 3) == 16
    assert count_unlabelled(QUEEN, 2, 0) == 0
    assert count_labelled(QUEEN, 1, 2) == 4
    # every three-square subset of the 2x2 board holds a bishop-attacking pair
    assert count_labelled(BISHOP, 3, 2) == 6 * count_unlabelled(BISHOP, 3, 2) == 0


def test_counts_match_naive_oracle():
    for spec in ALL_PIECE_SPECS:
        moves = partial_queen(spec)
        for q in (2, 3):
            for n in (1, 2, 3, 4):
                assert count_unlabelled(moves, q, n) == naive_count_unlabelled(moves, q, n)


def test_count_labelled_matches_naive_permutation_count():
    # the q! relation is checked against an independent ordered enumeration
    for spec in (PartialQueenSpec(2, 2), PartialQueenSpec(1, 1)):
        moves = partial_queen(spec)
        for n in (2, 3):
            assert count_labelled(moves, 3, n) == naive_count_labelled(moves, 3, n)


def test_count_non_unit_slope_piece():
    nightrider = MoveSet.from_pairs([(1, 2), (2, 1), (1, -2), (2, -1)])
    for n in (3, 4):
        assert count_unlabelled(nightrider, 2, n) == naive_count_unlabelled(nightrider, 2, n)


def test_monotone_in_board_size():
    for spec in ALL_PIECE_SPECS:
        moves = partial_queen(spec)
        values = [count_unlabelled(moves, 3, n) for n in range(0, 9)]
        assert values == sorted(values)


def test_budget_error_carries_progress():
    with pytest.raises(BudgetExceededError) as exc:
        count_unlabelled(QUEEN, 3, 8, budget=10)
    assert exc.value.nodes > 10
    assert exc.value.budget == 10


def test_alpha_examples():
    assert alpha_pairs(Move(1, 0), 3) == 27
    assert alpha_pairs(Move(0, 1), 3) == 27
    assert alpha_pairs(Move(1, 1), 3) == 19
    assert alpha_pairs(Move(1, 1), 0) == 0


def test_beta_examples():
    assert beta_triples(Move(1, 0), 2) == 16
    assert beta_triples(Move(1, 1), 2) == 10
    assert beta_triples(Move(1, -1), 1) == 1


def test_attack_line_closed_forms_to_50():
    from fractions import Fraction

    from qqueens.formulas import alpha_closed, beta_closed
    from qqueens.quasipoly import evaluate

    for slope in (Move(1, 0), Move(0, 1), Move(1, 1), Move(1, -1)):
        ap, bq = alpha_closed(slope), beta_closed(slope)
        for n in range(51):
            assert Fraction(alpha_pairs(slope, n)) == ap(n)
            assert Fraction(beta_triples(slope, n)) == evaluate(bq, n)


def test_pattern_validation():
    with pytest.raises(ValueError):
        ConstraintPattern(2, ())
    with pytest.raises(ValueError):
        pattern(2, Collinear(2, 1, Move(1, 0)))
    with pytest.raises(ValueError):
        pattern(2, Equal(1, 3))


def test_count_pattern_examples():
    assert count_pattern(pattern(2, Collinear(1, 2, Move(1, 0))), 3) == 27
    # the two-diagonal chain: closed form (5/12)n^4 + n^2/3 + 1/8 - (-1)^n/8
    assert count_pattern(pattern(3, Collinear(1, 2, Move(1, 1)), Collinear(2, 3, Move(1, -1))), 2) == 8
    assert count_pattern(pattern(2, Equal(1, 2)), 4) == 16


def test_count_pattern_matches_naive():
    pats = [
        pattern(2, Collinear(1, 2, Move(1, 1))),
        pattern(3, Collinear(1, 2, Move(1, 1)), Collinear(2, 3, Move(1, -1))),
        pattern(3, Collinear(1, 2, Move(1, 0)), Collinear(1, 3, Move(1, 1)), Collinear(2, 3, Move(1, -1))),
        pattern(3, Equal(1, 2), Collinear(2, 3, Move(0, 1))),
        pattern(4, Collinear(1, 2, Move(1, 1)), Collinear(3, 4, Move(1, 0))),
        pattern(4, Collinear(1, 2, Move(1, 2)), Collinear(2, 3, Move(1, -1)), Collinear(3, 4, Move(0, 1))),
    ]
    for pat in pats:
        for n in (1, 2, 3, 4):
            assert count_pattern(pat, n) == naive_count_pattern(pat, n)


def test_count_pattern_agrees_with_specialized_counters():
    for slope in (Move(1, 0), Move(0, 1), Move(1, 1), Move(1, -1)):
        for n in range(31):
            assert alpha_pairs(slope, n) == count_pattern(
                pattern(2, Collinear(1, 2, slope)), n
            )
            assert beta_triples(slope, n) == count_pattern(
                pattern(3, Collinear(1, 2, slope), Collinear(2, 3, slope)), n
            )


@given(st.permutations([1, 2, 3]), st.integers(1, 5))
def test_count_pattern_relabelling_invariance(perm, n):
    pat = pattern(3, Collinear(1, 2, Move(1, 1)), Collinear(2, 3, Move(1, 0)))
    mapping = {i + 1: perm[i] for i in range(3)}
    assert count_pattern(pat, n) == count_pattern(pat.relabelled(mapping), n)


@given(st.permutations([1, 2, 3, 4]), st.integers(1, 4))
@settings(max_examples=30)
def test_count_pattern_relabelling_invariance_four_pieces(perm, n):
    pat = pattern(
        4, Collinear(1, 2, Move(1, 1)), Collinear(2, 3, Move(1, -1)), Equal(3, 4)
    )
    mapping = {i + 1: perm[i] for i in range(4)}
    assert count_pattern(pat, n) == count_pattern(pat.relabelled(mapping), n)


def test_single_move_symmetry_horizontal_vs_vertical():
    # one orthogonal move: the horizontal and vertical choices count alike
    horizontal = MoveSet.from_pairs([(1, 0)])
    vertical = MoveSet.from_pairs([(0, 1)])
    for k_extra in ((), ((1, 1),), ((1, 1), (1, -1))):
        a = MoveSet.from_pairs([(1, 0), *k_extra])
        b = MoveSet.from_pairs([(0, 1), *k_extra])
        for q in (2, 3):
            for n in range(1, 11):
                assert count_unlabelled(a, q, n) == count_unlabelled(b, q, n)
    assert all(
        count_unlabelled(horizontal, 2, n) == count_unlabelled(vertical, 2, n)
        for n in range(1, 11)
    )


def test_single_diagonal_symmetry():
    up = MoveSet.from_pairs([(1, 1)])
    down = MoveSet.from_pairs([(1, -1)])
    for q in (2, 3):
        for n in range(1, 9):
            assert count_unlabelled(up, q, n) == count_unlabelled(down, q, n)


def test_sequence_examples():
    records = sequence(QUEEN, 1, 1, 3)
    assert [r.count for r in records] == [1, 4, 9]
    semiqueen = partial_queen(PartialQueenSpec(1, 1))
    assert sequence(semiqueen, 3, 2, 2)[0].count == 0
    bishop_pairs = [r.count for r in sequence(BISHOP, 2, 1, 4)]
    from qqueens.formulas import u2_closed

    closed = u2_closed(0, 2)
    assert bishop_pairs == [closed(n) for n in range(1, 5)]


def test_sequence_budget_reports_last_completed():
    with pytest.raises(BudgetExceededError) as exc:
        sequence(QUEEN, 3, 1, 9, budget=2000)
    assert exc.value.last_completed_n is not None
    assert exc.value.last_completed_n >= 1
