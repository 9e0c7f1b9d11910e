#!/usr/bin/env python3
"""Arbitrate the periodic-coefficient sign discrepancy from oracle data.

The standalone periodic-part formula and the three-piece table print opposite signs for
the alternating part of the linear coefficient when k = 2 and h > 0.  This
fits the oracle counts for the two affected pieces and names the route the
data confirms.
"""

import argparse

from qqueens.audit import gamma5_sign_report
from qqueens.quasipoly import format_fraction


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=17)
    args = parser.parse_args()
    report = gamma5_sign_report(args.n_max)
    for row in report["pieces"]:
        print(
            f"piece ({row['h']},{row['k']}): fitted alternating n-coefficient "
            f"{format_fraction(row['fitted_alternating_n_coefficient'])}; "
            f"periodic-part formula says {format_fraction(row['periodic_part_formula_value'])}, "
            f"three-piece table says {format_fraction(row['three_piece_table_value'])}"
        )
    print(f"conclusion: {report['conclusion']}")


if __name__ == "__main__":
    main()
