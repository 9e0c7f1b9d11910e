from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from qqueens.quasipoly import (
    CoeffDecomposition,
    InconsistentSamplesError,
    InsufficientSamplesError,
    PeriodNotFoundError,
    PeriodTooLargeError,
    Polynomial,
    QuasiPolynomial,
    coefficient,
    detect_period,
    eval_at_minus_one,
    evaluate,
    fit,
    format_fraction,
    lagrange,
    residue_coefficient,
)


def P(*coeffs):
    return Polynomial.make(coeffs)


def test_polynomial_trims_trailing_zeros():
    assert P(1, 2, 0, 0) == P(1, 2)
    assert P(0).is_zero()
    assert P().degree == -1


def test_polynomial_arithmetic():
    assert P(0, 0, 1) + P(0, 1) == P(0, 1, 1)
    assert P(0, 1) * P(0, 1) == P(0, 0, 1)
    assert P(1, 1) - P(1, 1) == P()
    assert P(1, 2, 3)(2) == 17
    assert P(2).scale(F(1, 2)) == P(1)
    assert P(1).shift(3) == P(0, 0, 0, 1)


def test_quasipoly_period_lifting_and_equality():
    square = QuasiPolynomial.constant_poly(P(0, 0, 1))
    lifted = square.with_period(2)
    assert lifted.period == 2
    assert lifted == square
    assert lifted.minimized().period == 1
    mixed = QuasiPolynomial(2, (P(0, 1), P(0, 0, 1)))
    assert mixed != square


def test_parity_split_round_trip():
    qp = QuasiPolynomial.from_parity_split(P(1, 2), P(F(1, 2)))
    assert qp.period == 2
    assert evaluate(qp, 2) == 1 + 4 + F(1, 2)
    assert evaluate(qp, 3) == 1 + 6 - F(1, 2)
    dec = coefficient(qp, 0)
    assert (dec.constant, dec.alternating) == (F(1), F(1, 2))


def test_evaluate_examples():
    square = QuasiPolynomial.constant_poly(P(0, 0, 1))
    assert evaluate(square, 7) == 49
    from qqueens.formulas import table2_row

    # odd constituent selected at n=5; cross-checked against the oracle
    from qqueens.core import PartialQueenSpec, partial_queen
    from qqueens.enumerator import count_unlabelled

    queen_row = table2_row(2, 2)
    assert evaluate(queen_row, 5) == count_unlabelled(partial_queen(PartialQueenSpec(2, 2)), 3, 5)
    assert evaluate(table2_row(0, 2), 0) == 0


def test_arithmetic_period_lcm():
    p1 = QuasiPolynomial.constant_poly(P(0, 1))
    p2 = QuasiPolynomial.from_parity_split(P(0, 0, 1), P(1))
    total = p1 + p2
    assert total.period == 2
    assert evaluate(total, 4) == 4 + 16 + 1
    prod = p1 * p1
    assert prod == QuasiPolynomial.constant_poly(P(0, 0, 1))


def test_eval_at_minus_one_picks_last_constituent():
    qp = QuasiPolynomial.from_parity_split(P(0, 1), P(3))
    # at n = -1 the odd constituent applies and (-1)^n = -1
    assert eval_at_minus_one(qp) == -1 - 3


def test_coefficient_period_one_has_zero_alternating():
    qp = QuasiPolynomial.constant_poly(P(5, 0, 2))
    dec = coefficient(qp, 2)
    assert dec == CoeffDecomposition(2, F(2), F(0))


def test_coefficient_rejects_large_period_with_sibling_accessor():
    qp = QuasiPolynomial(3, (P(1), P(2), P(3)))
    with pytest.raises(PeriodTooLargeError):
        coefficient(qp, 0)
    assert residue_coefficient(qp, 0, 1) == 2
    assert residue_coefficient(qp, 0, 4) == 2


def test_lagrange_exactness():
    pts = [(1, F(1)), (2, F(4)), (3, F(9)), (5, F(25))]
    assert lagrange(pts) == P(0, 0, 1)


def test_fit_square_polynomial():
    samples = [(n, n * n) for n in range(1, 5)]
    qp = fit(samples, 2, 1)
    assert qp == QuasiPolynomial.constant_poly(P(0, 0, 1))


def test_fit_requires_surplus():
    samples = [(n, n * n) for n in range(1, 4)]
    with pytest.raises(InsufficientSamplesError):
        fit(samples, 2, 1)
    fit(samples, 2, 1, surplus=0)


def test_fit_reports_first_inconsistent_sample():
    samples = [(1, 1), (2, 4), (3, 9), (4, 16), (5, 99)]
    with pytest.raises(InconsistentSamplesError) as exc:
        fit(samples, 2, 1)
    assert exc.value.n == 5


def test_fit_rejects_duplicate_samples():
    with pytest.raises(ValueError):
        fit([(1, 1), (1, 1), (2, 4), (3, 9)], 1, 1)


def test_detect_period_queen_pieces():
    from qqueens.core import PartialQueenSpec, partial_queen
    from qqueens.enumerator import sequence

    queen = partial_queen(PartialQueenSpec(2, 2))
    semiqueen = partial_queen(PartialQueenSpec(1, 1))
    q3 = [(r.n, r.count) for r in sequence(queen, 3, 1, 17)]
    s3 = [(r.n, r.count) for r in sequence(semiqueen, 3, 1, 17)]
    q2 = [(r.n, r.count) for r in sequence(queen, 2, 1, 7)]
    assert detect_period(q3, 6, 2) == 2
    assert detect_period(s3, 6, 2) == 1
    assert detect_period(q2, 4, 2) == 1


def test_detect_period_failure():
    samples = [(n, 2**n) for n in range(1, 15)]
    with pytest.raises(PeriodNotFoundError):
        detect_period(samples, 2, 3)


def test_fit_queen_two_pieces_closed_form():
    from qqueens.core import PartialQueenSpec, partial_queen
    from qqueens.enumerator import sequence
    from qqueens.formulas import u2_closed

    queen = partial_queen(PartialQueenSpec(2, 2))
    samples = [(r.n, r.count) for r in sequence(queen, 2, 1, 7)]
    qp = fit(samples, 4, 1)
    assert qp == QuasiPolynomial.constant_poly(u2_closed(2, 2))


def test_fit_bishop_three_pieces_table_row():
    from qqueens.core import PartialQueenSpec, partial_queen
    from qqueens.enumerator import sequence
    from qqueens.formulas import table2_row

    bishop = partial_queen(PartialQueenSpec(0, 2))
    samples = [(r.n, r.count) for r in sequence(bishop, 3, 1, 17)]
    qp = fit(samples, 6, 2)
    assert qp == table2_row(0, 2)


fractions = st.builds(F, st.integers(-30, 30), st.integers(1, 12))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.data())
def test_fit_round_trip_recovers_random_quasipolynomial(period, data):
    # random rational coefficients, degree up to 8, period up to 4
    constituents = tuple(
        Polynomial.make(data.draw(st.lists(fractions, min_size=0, max_size=9)))
        for _ in range(period)
    )
    qp = QuasiPolynomial(period, constituents)
    degree = max(qp.degree, 0)
    # integer-valued samples are not required by fit; feed exact fractions
    n_max = period * (degree + 2)
    samples = [(n, evaluate(qp, n)) for n in range(1, n_max + 1)]
    recovered = fit(samples, degree, period)
    assert recovered == qp
    for n, value in samples:
        assert evaluate(recovered, n) == value


def test_detect_period_returns_minimal_consistent_period():
    # distinct constituents: period 3 is minimal and detected
    qp = QuasiPolynomial(3, (P(0, 1), P(5, 1), P(-7, 1)))
    samples = [(n, evaluate(qp, n)) for n in range(1, 16)]
    assert detect_period(samples, 1, 4) == 3
    # duplicated constituents: the minimal divisor wins
    fat = QuasiPolynomial(4, (P(2, 2), P(3, 2), P(2, 2), P(3, 2)))
    samples = [(n, evaluate(fat, n)) for n in range(1, 17)]
    assert detect_period(samples, 1, 4) == 2
    assert fat.minimized().period == 2


def test_eval_at_minus_one_matches_parity_substitution():
    qp = QuasiPolynomial.from_parity_split(P(2, 3, 5), P(7, 11))
    constant, alternating = P(2, 3, 5), P(7, 11)
    assert eval_at_minus_one(qp) == constant(-1) - alternating(-1)


def test_json_round_trip():
    qp = QuasiPolynomial.from_parity_split(P(F(1, 8), 0, 1), P(F(-1, 8)))
    obj = qp.to_json_dict()
    assert obj["period"] == 2
    assert obj["constituents"][1][0] == "1/4"  # odd constant term: 1/8 - (-1/8)
    assert QuasiPolynomial.from_json_dict(obj) == qp


def test_format_fraction():
    assert format_fraction(F(3)) == "3"
    assert format_fraction(F(-5, 3)) == "-5/3"
