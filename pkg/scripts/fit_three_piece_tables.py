#!/usr/bin/env python3
"""Reproduce the two- and three-piece counting tables from the oracle alone.

For each piece (h, k): sample the enumeration oracle, detect the period,
fit the exact quasipolynomial, and print it next to the closed form, the
value at -1 (the combinatorial-type count), and the conjecture value.
"""

import argparse

from qqueens.core import ALL_PIECE_SPECS, partial_queen
from qqueens.enumerator import sequence
from qqueens.formulas import TABLE3_TYPES, types3_conjecture, u2_closed, u3_closed
from qqueens.quasipoly import QuasiPolynomial, detect_period, eval_at_minus_one, fit
from qqueens.reports import qp_str


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=17, help="largest board sampled (default 17)")
    args = parser.parse_args()

    for spec in ALL_PIECE_SPECS:
        h, k = spec.h, spec.k
        moves = partial_queen(spec)
        print(f"== piece (h, k) = ({h}, {k})  moves {moves.to_pairs()}")
        s2 = [(r.n, r.count) for r in sequence(moves, 2, 1, 7)]
        qp2 = fit(s2, 4, detect_period(s2, 4, 2))
        match2 = qp2 == QuasiPolynomial.constant_poly(u2_closed(h, k))
        print(f"   q=2 fit: {qp_str(qp2)}   closed-form match: {match2}")
        s3 = [(r.n, r.count) for r in sequence(moves, 3, 1, args.n_max)]
        qp3 = fit(s3, 6, detect_period(s3, 6, 2))
        match3 = qp3 == u3_closed(h, k)
        print(f"   q=3 fit: {qp_str(qp3)}   closed-form match: {match3}")
        types = eval_at_minus_one(qp3)
        print(
            f"   types at -1: {types}   printed table: {TABLE3_TYPES[(h, k)]}   "
            f"conjecture at |M|={h + k}: {types3_conjecture(h + k)}"
        )
        print()


if __name__ == "__main__":
    main()
