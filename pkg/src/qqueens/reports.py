"""Claim suites and report rendering for the command-line front end.

Each suite returns ``ClaimResult`` rows; a command exits nonzero when any
row fails.  All numeric output is exact (fraction strings), never floating
point, and rendering is deterministic so warm-cache reruns are
byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import ALL_PIECE_SPECS, PartialQueenSpec, partial_queen
from .enumerator import alpha_pairs, beta_triples, count_unlabelled, sequence
from .quasipoly import (
    Polynomial,
    QuasiPolynomial,
    coefficient,
    detect_period,
    eval_at_minus_one,
    evaluate,
    fit,
    format_fraction,
)
from . import audit as audit_mod
from . import formulas as fm


@dataclass(frozen=True)
class ClaimResult:
    name: str
    passed: bool
    detail: str = ""


def poly_str(poly: Polynomial, var: str = "n") -> str:
    if poly.is_zero():
        return "0"
    parts = []
    for power in range(poly.degree, -1, -1):
        c = poly.coefficient(power)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = format_fraction(mag)
        else:
            head = "" if mag == 1 else f"{format_fraction(mag)}*"
            body = f"{head}{var}" + (f"^{power}" if power > 1 else "")
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def qp_str(qp: QuasiPolynomial, var: str = "n") -> str:
    mini = qp.minimized()
    if mini.period == 1:
        return poly_str(mini.constituents[0], var)
    rows = [
        f"[{var} = {r} mod {mini.period}] {poly_str(c, var)}"
        for r, c in enumerate(mini.constituents)
    ]
    return "; ".join(rows)


def render(headers: Sequence[str], rows: Sequence[Sequence], fmt: str) -> str:
    rows = [[str(x) for x in row] for row in rows]
    if fmt == "json":
        return json.dumps(
            [dict(zip(headers, row)) for row in rows], indent=2, sort_keys=True
        )
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "latex":
        lines = [
            "\\begin{tabular}{" + "l" * len(headers) + "}",
            " & ".join(headers) + " \\\\",
            "\\hline",
        ]
        for row in rows:
            lines.append(" & ".join(row) + " \\\\")
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    if fmt == "text":
        widths = [
            max(len(headers[i]), max((len(r[i]) for r in rows), default=0))
            for i in range(len(headers))
        ]
        out = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
        for row in rows:
            out.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
        return "\n".join(out)
    raise ValueError(f"unknown format {fmt!r}")


def _oracle_samples(spec: PartialQueenSpec, q: int, n_max: int, cache=None) -> list[tuple[int, int]]:
    moves = partial_queen(spec)
    return [(r.n, r.count) for r in sequence(moves, q, 1, n_max, cache=cache)]


def suite_attacklines(n_max: int = 50) -> list[ClaimResult]:
    """Closed forms for attacking pairs and collinear triples along each slope."""
    out = []
    for slope in fm.SUPPORTED_SLOPES:
        a_poly = fm.alpha_closed(slope)
        b_qp = fm.beta_closed(slope)
        ok_a = all(Fraction(alpha_pairs(slope, n)) == a_poly(n) for n in range(n_max + 1))
        ok_b = all(Fraction(beta_triples(slope, n)) == evaluate(b_qp, n) for n in range(n_max + 1))
        label = f"{slope.d}/{slope.c}"
        out.append(ClaimResult(f"attack-pair closed form, slope {label}, n<=%d" % n_max, ok_a))
        out.append(ClaimResult(f"collinear-triple closed form, slope {label}, n<=%d" % n_max, ok_b))
    return out


def suite_tables(n_max: int = 8, cache=None) -> list[ClaimResult]:
    """Two- and three-piece closed forms vs the oracle, coefficient-table
    coherence, and type counts."""
    out = []
    for spec in ALL_PIECE_SPECS:
        h, k = spec.h, spec.k
        moves = partial_queen(spec)
        u2 = fm.u2_closed(h, k)
        ok2 = all(
            Fraction(count_unlabelled(moves, 2, n)) == u2(n) for n in range(1, n_max + 1)
        )
        out.append(ClaimResult(f"two-piece closed form vs oracle ({h},{k})", ok2))
        u3 = fm.u3_closed(h, k)
        ok3 = all(
            Fraction(count_unlabelled(moves, 3, n)) == evaluate(u3, n)
            for n in range(1, n_max + 1)
        )
        out.append(ClaimResult(f"three-piece closed form vs oracle ({h},{k})", ok3))
        out.append(
            ClaimResult(
                f"three-piece closed form equals printed row ({h},{k})",
                u3 == fm.table2_row(h, k),
            )
        )
        out.append(
            ClaimResult(
                f"gamma2 two-route agreement ({h},{k})",
                fm.gamma2_expr(h, k).same_value(fm.gamma2_expr_expanded(h, k)),
            )
        )
        for i in (1, 2, 3):
            expr = (fm.gamma1_expr, fm.gamma2_expr, fm.gamma3_expr)[i - 1](h, k)
            out.append(
                ClaimResult(
                    f"gamma{i} leading q-coefficient ({h},{k})",
                    expr.leading_q_coefficient() == fm.gamma_leading_term(h, k, i),
                )
            )
        out.append(
            ClaimResult(
                f"two-piece types value at -1 is h+k ({h},{k})",
                fm.u2_closed(h, k)(-1) == h + k,
            )
        )
        out.append(
            ClaimResult(
                f"three-piece type table matches conjecture ({h},{k})",
                fm.types3_conjecture(h + k) == fm.TABLE3_TYPES[(h, k)],
            )
        )
    return out


def suite_coeffs() -> list[ClaimResult]:
    """Symbolic coefficient checks: gammas vs the closed counting forms and
    the codimension-sum reassembly at q = 3."""
    out = []
    for spec in ALL_PIECE_SPECS:
        h, k = spec.h, spec.k
        u2 = fm.u2_closed(h, k)
        u3 = fm.u3_closed(h, k)
        for q, qp in ((2, QuasiPolynomial.constant_poly(u2)), (3, u3)):
            gammas = (fm.gamma1(h, k, q), fm.gamma2(h, k, q), fm.gamma3(h, k, q))
            ok = all(
                coefficient(qp, 2 * q - i).constant == gammas[i - 1]
                and coefficient(qp, 2 * q - i).alternating == 0
                for i in (1, 2, 3)
            )
            out.append(ClaimResult(f"gamma1..3 equal q={q} closed-form coefficients ({h},{k})", ok))
        total = audit_mod._qp_zero()
        for nu in range(4):
            total = total + fm.codim_contribution(h, k, 3, nu)
        total = total + fm.coincident_triple_contribution(h, k, 3)
        out.append(
            ClaimResult(
                f"codimension contributions reassemble the three-piece form ({h},{k})",
                total == u3,
            )
        )
        for i in (0, 1, 2, 3):
            dec = audit_mod.gamma_from_audit(h, k, 3, i)
            if i == 0:
                expected = Fraction(1, 6)
            else:
                expected = (fm.gamma1, fm.gamma2, fm.gamma3)[i - 1](h, k, 3)
            out.append(
                ClaimResult(
                    f"assembled gamma{i} at q=3 ({h},{k})",
                    dec.constant == expected,
                )
            )
    return out


def suite_audit(n_max: int = 10, pieces=ALL_PIECE_SPECS) -> tuple[list[ClaimResult], list[audit_mod.AuditResult]]:
    """Every catalog case against brute force for every applicable piece."""
    claims = []
    records = []
    for case in audit_mod.case_catalog():
        for spec in pieces:
            h, k = spec.h, spec.k
            if not case.applicable(h, k):
                continue
            ok = True
            for n in range(1, n_max + 1):
                res = audit_mod.audit_case(case, h, k, n)
                records.append(res)
                ok = ok and res.match
            claims.append(ClaimResult(f"case {case.name} ({h},{k}) n<=%d" % n_max, ok))
    return claims, records


def suite_assembly(n_max: int = 8, cache=None) -> list[ClaimResult]:
    """Catalog assembly equals q! times the oracle for q <= 3."""
    out = []
    for spec in ALL_PIECE_SPECS:
        h, k = spec.h, spec.k
        moves = partial_queen(spec)
        for q in (1, 2, 3):
            ok = all(
                audit_mod.assemble_labelled_count(h, k, q, n)
                == math.factorial(q) * count_unlabelled(moves, q, n)
                for n in range(1, n_max + 1)
            )
            out.append(ClaimResult(f"assembly equals q!*oracle q={q} ({h},{k})", ok))
    return out


def suite_types(n_max: int = 17, cache=None) -> list[ClaimResult]:
    """Type counts via the value at -1 of fitted quasipolynomials."""
    out = []
    for spec in ALL_PIECE_SPECS:
        h, k = spec.h, spec.k
        samples2 = _oracle_samples(spec, 2, 7, cache=cache)
        qp2 = fit(samples2, 4, detect_period(samples2, 4, 2))
        out.append(
            ClaimResult(
                f"fitted two-piece value at -1 is h+k ({h},{k})",
                eval_at_minus_one(qp2) == h + k,
            )
        )
        samples3 = _oracle_samples(spec, 3, n_max, cache=cache)
        qp3 = fit(samples3, 6, detect_period(samples3, 6, 2))
        out.append(
            ClaimResult(
                f"fitted three-piece value at -1 matches type table ({h},{k})",
                eval_at_minus_one(qp3) == fm.TABLE3_TYPES[(h, k)],
            )
        )
    for m in (1, 2, 3, 4):
        expected = {1: 1, 2: 6, 3: 17, 4: 36}[m]
        out.append(
            ClaimResult(
                f"three-piece type conjecture value |M|={m}",
                fm.types3_conjecture(m) == expected,
            )
        )
    return out


def suite_gamma5_sign(n_max: int = 17) -> tuple[list[ClaimResult], dict]:
    report = audit_mod.gamma5_sign_report(n_max)
    claims = [
        ClaimResult(
            "exactly one printed sign for the periodic n-coefficient matches the oracle",
            report["exactly_one_route_matches"],
            report["conclusion"],
        )
    ]
    return claims, report


VERIFY_SCOPES = ("tables", "coeffs", "audit", "assembly", "types", "gamma5-sign", "attacklines", "all")


def run_verify(scope: str, n_max: Optional[int] = None, cache=None) -> tuple[list[ClaimResult], dict]:
    """Dispatch a verify scope; returns claims plus any auxiliary report."""
    aux: dict = {}
    if scope == "tables":
        return suite_tables(n_max or 8, cache=cache), aux
    if scope == "coeffs":
        return suite_coeffs(), aux
    if scope == "audit":
        claims, records = suite_audit(n_max or 10)
        aux["records"] = records
        return claims, aux
    if scope == "assembly":
        return suite_assembly(n_max or 8, cache=cache), aux
    if scope == "types":
        return suite_types(n_max or 17, cache=cache), aux
    if scope == "gamma5-sign":
        claims, report = suite_gamma5_sign(n_max or 17)
        aux["report"] = report
        return claims, aux
    if scope == "attacklines":
        return suite_attacklines(n_max or 50), aux
    if scope == "all":
        claims: list[ClaimResult] = []
        claims += suite_attacklines(n_max or 50)
        claims += suite_tables(n_max or 8, cache=cache)
        claims += suite_coeffs()
        audit_claims, _ = suite_audit(n_max or 10)
        claims += audit_claims
        claims += suite_assembly(min(n_max or 8, 8), cache=cache)
        claims += suite_types(cache=cache)
        sign_claims, report = suite_gamma5_sign()
        aux["report"] = report
        claims += sign_claims
        return claims, aux
    raise ValueError(f"unknown scope {scope!r}; choose from {VERIFY_SCOPES}")


def formula_bank_rows(h: int, k: int, q: int) -> list[tuple[str, str]]:
    """Every formula-bank output for one (h, k, q), for diffing against
    published tables by eye."""
    rows: list[tuple[str, str]] = []
    for i, expr_fn in ((1, fm.gamma1_expr), (2, fm.gamma2_expr), (3, fm.gamma3_expr)):
        expr = expr_fn(h, k)
        rows.append(
            (
                f"gamma{i} expression",
                f"({poly_str(expr.numerator, 'q')}) / ({expr.denominator_constant} (q-2)!)",
            )
        )
        rows.append((f"gamma{i} at q={q}", format_fraction(expr.value(q))))
    rows.append(
        ("gamma3 expanded-display route at q=%d" % q,
         format_fraction(fm.gamma3_expr_expanded(h, k).value(q)))
    )
    for i in (1, 2, 3):
        rows.append(
            (f"gamma{i} leading q-term", format_fraction(fm.gamma_leading_term(h, k, i)))
        )
    if q >= 3:
        rows.append(("gamma5 periodic part", format_fraction(fm.gamma5_periodic(h, k, q))))
    if q >= 4:
        rows.append(("gamma6 periodic part", format_fraction(fm.gamma6_periodic(h, k, q))))
    rows.append(("two-piece count u(2;n)", poly_str(fm.u2_closed(h, k))))
    rows.append(("three-piece count u(3;n)", qp_str(fm.u3_closed(h, k))))
    rows.append(("three-piece types (value at -1)", format_fraction(eval_at_minus_one(fm.u3_closed(h, k)))))
    rows.append(("type-count conjecture at |M|=h+k", str(fm.types3_conjecture(h + k))))
    return rows
