"""Command-line entry point: ``fanocone <command> ...``.

Exit codes: 0 success, 2 usage or syntax error, 3 domain error (including
requests for quantities that are not implemented).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import classify as cl
from .chern import Projective, WeightedProjective, chern_character_ci, pair_ch2_with_surface
from .cones import homogeneous_betti
from .errors import DomainError, SyntaxErrorInSpec
from .grassmann import GrassmannSpace, hyperplane_factors, intersection_number, product
from .hodge import HODGE_ROWS_ASSUMPTION, ChiTable, evaluate_b4_x11
from .isotropic import IsotropicSpace
from .parsing import format_class, format_fraction, parse_class, parse_ci, parse_degrees, parse_space
from .weyl import ParabolicQuotient, coxeter, duality_check, poincare_polynomial

SCHEMA = 1
CHI_TABLE_ENV = "FANOCONE_CHI_TABLE"

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 2, 3


class Output:
    """What a command produced: plain text, a JSON payload and CSV rows."""

    def __init__(self, text: str, payload, rows: list, citations: list):
        self.text = text
        self.payload = payload
        self.rows = rows
        self.citations = list(dict.fromkeys(citations))


def _num(x) -> str:
    return format_fraction(x) if isinstance(x, (int, Fraction)) else str(x)


def _table(headers, rows) -> str:
    cells = [list(map(str, headers))] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


# ------------------------------------------------------------------ commands


def _betti_vector(space) -> tuple:
    if isinstance(space, (Projective, WeightedProjective)):
        return (1,) * (space.dim + 1)
    return homogeneous_betti(space)


def cmd_betti(args) -> Output:
    space = parse_space(args.space)
    betti = _betti_vector(space)
    cite = ["schubert-basis:isotropic-(lambda,mu)"] if isinstance(space, IsotropicSpace) else ["schubert-basis"]
    if args.codim is not None:
        k = args.codim
        value = betti[k] if 0 <= k < len(betti) else 0
        payload = {"space": str(space), "codim": k, "betti": str(value)}
        return Output(str(value), payload, [["codim", "betti"], [k, value]], cite)
    payload = {"space": str(space), "betti": [str(b) for b in betti]}
    rows = [["codim", "betti"]] + [[k, b] for k, b in enumerate(betti)]
    return Output(" ".join(map(str, betti)), payload, rows, cite)


def _grassmann(text: str) -> GrassmannSpace:
    space = parse_space(text)
    if not isinstance(space, GrassmannSpace):
        raise DomainError(f"Schubert products are available on Grassmannians only, not {space}")
    return space


def cmd_product(args) -> Output:
    space = _grassmann(args.space)
    classes = [parse_class(c, space) for c in args.classes]
    acc = classes[0]
    for c in classes[1:]:
        acc = product(acc, c)
    text = format_class(acc)
    payload = {"space": str(space), "factors": args.classes, "product": text}
    rows = [["partition", "coefficient"]] + [[format_class(type(acc).schubert(space, lam)), _num(c)]
                                             for lam, c in acc.coeffs.items()]
    return Output(text, payload, rows, ["littlewood-richardson-rule"])


def cmd_intersect(args) -> Output:
    space = _grassmann(args.space)
    degrees = parse_degrees(args.ci) if args.ci else ()
    classes = [parse_class(c, space) for c in args.classes]
    value = intersection_number(classes + hyperplane_factors(space, degrees))
    payload = {"space": str(space), "factors": args.classes, "ci": list(degrees), "value": _num(value)}
    cite = ["littlewood-richardson-rule"] + (["restriction:append-d_i*s1"] if degrees else [])
    return Output(_num(value), payload, [["value"], [_num(value)]], cite)


def _ch_text(value, s: int, isotropic: bool = False) -> str:
    if isotropic:
        return f"{format_fraction(value)}s1"
    if isinstance(value, Fraction):
        return f"{format_fraction(value)}H^{s}" if s > 1 else f"{format_fraction(value)}H"
    return format_class(value)


def cmd_chern(args) -> Output:
    X = parse_ci(args.ci)
    if args.pair is not None:
        if not isinstance(X.ambient, GrassmannSpace):
            raise DomainError("surface pairings are computed on Grassmannian ambients only")
        surface = parse_class(args.pair, X.ambient)
        value = pair_ch2_with_surface(X, surface)
        payload = {"variety": str(X), "surface": format_class(surface), "ch2.S": _num(value)}
        cite = ["tangent:ch(S^v)ch(Q)", "adjunction", "restriction:append-d_i*s1"]
        return Output(_num(value), payload, [["ch2.S"], [_num(value)]], cite)
    up_to = args.degree
    if up_to is None:
        up_to = 1 if isinstance(X.ambient, IsotropicSpace) else 2
    ch = chern_character_ci(X, up_to)
    iso = isinstance(X.ambient, IsotropicSpace)
    text = {s: _ch_text(ch[s], s, iso) for s in ch}
    lines = [f"ch{s} = {v}" for s, v in text.items()]
    payload = {"variety": str(X), "ch": {str(s): v for s, v in text.items()}}
    rows = [["degree", "ch"]] + [[s, v] for s, v in text.items()]
    if isinstance(X.ambient, GrassmannSpace):
        cite = ["tangent:ch(S^v)ch(Q)"]
    elif iso:
        cite = ["c1:isotropic-grassmannian"]
    else:
        cite = ["euler-sequence"]
    if X.degrees:
        cite.append("adjunction")
    return Output("\n".join(lines), payload, rows, cite)


def _record_json(rec: cl.CandidateRecord) -> dict:
    out = {
        "space": rec.space_label,
        "type": rec.type_label,
        "variety": str(rec.variety),
        "verdict": rec.verdict,
        "evidence": None if rec.evidence is None else _num(rec.evidence),
        "citations": list(rec.constraints_used),
        "notes": list(rec.notes),
    }
    if rec.equivalent is not None:
        out["equivalent"] = str(rec.equivalent)
    if rec.family is not None:
        out["derived_bound"] = None if rec.derived_bound is None else str(rec.derived_bound)
        out["cited_bound"] = None if rec.cited_bound is None else str(rec.cited_bound)
        out["discrepancy"] = rec.discrepancy
    if rec.cones:
        out["cones"] = [
            {"k": k, "verdict": rep.verdict, "rank_bound": rep.rank_bound, "rays": rep.rays,
             "justification": list(rep.justification)}
            for k, rep in rec.cones
        ]
    return out


def _bound(b) -> str:
    return "-" if b is None else f"n>{b}"


def cmd_classify(args) -> Output:
    which = args.which
    if which == "grassmann":
        records = cl.enumerate_grassmann_4folds()
    elif which == "og":
        records = cl.enumerate_og_4folds(include_spinor=args.include_spinor)
    elif which == "sg":
        records = cl.enumerate_sg_4folds()
    else:
        records = cl.high_index_catalog_check()
    citations = [t for rec in records for t in rec.constraints_used]
    payload = {"table": which, "records": [_record_json(r) for r in records]}
    if which == "high-index":
        headers = ["family", "derived", "cited", "status", "verdict", "cones"]
        rows = []
        for r in records:
            status = "-" if r.family is None else ("DISCREPANCY" if r.discrepancy else "agree")
            rows.append([r.space_label, _bound(r.derived_bound), _bound(r.cited_bound), status, r.verdict,
                         cl.cone_summary(r.cones)])
    else:
        headers = ["space", "type", "verdict", "evidence", "notes"]
        rows = [[r.space_label, r.type_label, r.verdict, "-" if r.evidence is None else _num(r.evidence),
                 "; ".join(r.notes)] for r in records]
    return Output(_table(headers, rows), payload, [headers] + rows, citations)


def _nodes(text: str) -> set:
    text = text.strip()
    if text.lower() in ("", "none", "{}"):
        return set()
    try:
        return {int(x) for x in text.strip("{}").split(",") if x.strip()}
    except ValueError:
        raise SyntaxErrorInSpec(f"bad node list {text!r}", token=text) from None


def cmd_weyl(args) -> Output:
    system = coxeter(args.type.upper(), args.rank)
    if args.cross is not None:
        q = ParabolicQuotient.crossing(system, _nodes(args.cross))
    else:
        q = ParabolicQuotient(system, frozenset(_nodes(args.theta)))
    theta = sorted(q.theta)
    base = {"system": system.label, "theta": theta}
    cite = ["coxeter:minimal-coset-representatives"]
    if args.query == "poincare":
        counts = poincare_polynomial(q)
        payload = dict(base, poincare=[str(c) for c in counts])
        rows = [["length", "count"]] + [[k, c] for k, c in enumerate(counts)]
        return Output(" ".join(map(str, counts)), payload, rows, cite)
    if args.query == "dim":
        payload = dict(base, dim=str(q.dim))
        return Output(str(q.dim), payload, [["dim"], [q.dim]], cite + ["dim=l(w0)-l(w_theta)"])
    checked, ok = 0, True
    for level in q.representatives:
        for w in level:
            ok = duality_check(q, w)[1] and ok
            checked += 1
    payload = dict(base, duality=ok, checked=str(checked))
    text = f"{'true' if ok else 'false'} ({checked} elements)"
    return Output(text, payload, [["duality", "checked"], [str(ok).lower(), checked]], cite + ["w -> w0 w w_theta"])


def cmd_hodge(args) -> Output:
    path = args.table or os.environ.get(CHI_TABLE_ENV)
    table = ChiTable.load(path) if path else ChiTable.default()
    res = evaluate_b4_x11(table)
    pairs = [("chi(Omega_X)", res.chi_omega1), ("chi(Omega^2_X)", res.chi_omega2),
             ("h13", res.h13), ("h22", res.h22), ("b4", res.b4)]
    lines = [f"{k} = {v}" for k, v in pairs]
    if args.trace:
        lines += ["", *res.trace]
    payload = {k: str(v) for k, v in pairs}
    payload.update(table=table.source, default_inputs=res.default_inputs, trace=list(res.trace))
    cite = ["koszul-complex", "conormal-sequence", HODGE_ROWS_ASSUMPTION, f"chi-table:{table.source}"]
    return Output("\n".join(lines), payload, [["quantity", "value"]] + [[k, v] for k, v in pairs], cite)


# ------------------------------------------------------------------- parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = argparse.ArgumentParser(prog="fanocone", description="Schubert calculus and k-Fano checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", parents=[common], help="Betti numbers b_{2k}")
    p.add_argument("space")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--codim", type=int)
    g.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("product", parents=[common], help="cup product of Schubert classes")
    p.add_argument("space")
    p.add_argument("classes", nargs="+")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("intersect", parents=[common], help="intersection number, optionally on a CI")
    p.add_argument("space")
    p.add_argument("classes", nargs="+")
    p.add_argument("--ci", help="degrees d1,d2,... of the complete intersection")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("chern", parents=[common], help="Chern character of a complete intersection")
    p.add_argument("ci", help="e.g. G(2,5):(1,1) or P5:(2,2)")
    p.add_argument("--pair", help="pair ch_2 with this surface class")
    p.add_argument("--degree", type=int, help="highest ch_s to print")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("classify", parents=[common], help="candidate tables and the high-index catalog")
    p.add_argument("which", choices=("grassmann", "og", "sg", "high-index"))
    p.add_argument("--include-spinor", action="store_true", help="og: add the OG+(r,2r) case")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("weyl", parents=[common], help="parabolic quotients W/W_Θ")
    p.add_argument("type")
    p.add_argument("rank", type=int)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--theta", help="the nodes in Θ, e.g. 1,3,4")
    g.add_argument("--cross", help="the nodes outside Θ, e.g. 2 for A4/P2")
    p.add_argument("query", choices=("poincare", "dim", "duality-check"))
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("hodge", parents=[common], help="Euler-characteristic ledger")
    p.add_argument("what", choices=("b4-x11",))
    p.add_argument("--table", help=f"χ table file (default: ${CHI_TABLE_ENV} or the shipped table)")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_hodge)
    return parser


def render(out: Output, fmt: str, argv) -> str:
    if fmt == "json":
        doc = {"schema": SCHEMA, "command": " ".join(argv), "citations": out.citations, "result": out.payload}
        return json.dumps(doc, indent=2, ensure_ascii=False)
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(out.rows)
        return buf.getvalue().rstrip("\n")
    return out.text


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except SyntaxErrorInSpec as exc:
        print(f"fanocone: error: {exc} (token: {exc.token!r})", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"fanocone: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, NotImplementedError) as exc:
        print(f"fanocone: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(render(out, args.format, argv))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
