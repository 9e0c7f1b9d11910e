"""Exact counting of nonattacking rider placements on square boards.

The package has three layers: an exhaustive-enumeration oracle
(:mod:`qqueens.enumerator`), exact quasipolynomial arithmetic and fitting
(:mod:`qqueens.quasipoly`), and a bank of closed-form counting formulas
(:mod:`qqueens.formulas`) together with the subspace catalog that certifies
them against the oracle (:mod:`qqueens.audit`).
"""

from .core import (
    ALL_PIECE_SPECS,
    Move,
    MoveSet,
    PartialQueenSpec,
    Placement,
    Square,
    attacks,
    chat_dhat,
    partial_queen,
)
from .enumerator import (
    AttackTable,
    BudgetExceededError,
    Collinear,
    ConstraintPattern,
    CountRecord,
    Equal,
    alpha_pairs,
    beta_triples,
    count_labelled,
    count_pattern,
    count_unlabelled,
    sequence,
)
from .quasipoly import (
    CoeffDecomposition,
    InconsistentSamplesError,
    InsufficientSamplesError,
    PeriodNotFoundError,
    Polynomial,
    QuasiPolynomial,
    coefficient,
    detect_period,
    eval_at_minus_one,
    evaluate,
    fit,
)
from .cache import CountCache

__all__ = [name for name in dir() if not name.startswith("_")]
