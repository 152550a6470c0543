"""Command-line interface.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage or
parse error, 3 domain error, 4 flat-count cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from math import log2
from concurrent.futures import ProcessPoolExecutor

from . import counting, dope, enumeration
from .dope import NotDopeError
from .enumeration import FlatCapExceeded
from .forms import NodeTuple
from .matroid import MatroidView
from .parsing import ParseError, parse_inputs, parse_matrix, parse_nodes
from .scalars import SignUndefinedError

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_DOMAIN, EXIT_CAP = 0, 1, 2, 3, 4

DEFAULT_TABLE = ["0,1,sqrt(2)", "0,1,2", "0,1,3", "0,1,pi", "0,1,4"]


class DomainError(ValueError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


# ---------------------------------------------------------------------------
# output helpers


def _emit_json(obj, out):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _emit_table(header, rows, fmt, out):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        out.write(buf.getvalue())
    elif fmt == "json":
        for r in rows:
            _emit_json(dict(zip(header, r)), out)
    else:
        cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
        widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
        for r in cells:
            out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")


def _nodes_label(nodes: NodeTuple) -> str:
    return "(" + ",".join(str(v) for v in nodes) + ")"


def _load_matrix(args, multiplicity=False):
    text = args.matrix
    if text is None and getattr(args, "matrix_file", None):
        with open(args.matrix_file) as fh:
            text = fh.read()
    if text is None:
        raise ParseError("a matrix is required (--matrix or --matrix-file)")
    return parse_matrix(text, multiplicity)


def _poly_json(p):
    return p.to_json()


# ---------------------------------------------------------------------------
# commands


def cmd_dope(args, out):
    p, nodes = parse_inputs(args.poly, args.nodes)
    if p.is_zero:
        raise DomainError("the zero polynomial has no dope matrix")
    D = dope.dope_matrix_of(p, nodes)
    M = dope.multiplicity_matrix_of(p, nodes)
    S = None
    if args.signed:
        try:
            S = dope.signed_dope_matrix_of(p, nodes)
        except SignUndefinedError as exc:
            raise DomainError(f"sign undefined: {exc}") from exc
    if args.format == "json":
        obj = {"dope": D.to_json(), "multiplicity": M.to_json()}
        if S is not None:
            obj["signed"] = {"rows": [list(r) for r in S.rows]}
        _emit_json(obj, out)
    else:
        out.write(f"dope\n{D}\nmultiplicity\n{M}\n")
        if S is not None:
            out.write(f"signed\n{S}\n")
    return EXIT_OK


def cmd_check(args, out):
    M = _load_matrix(args, args.multiplicity)
    conds = dope.check_conditions(M)
    D = M.support() if args.multiplicity else M
    result = dict(conds)
    verdict = None
    if args.nodes is not None:
        nodes = parse_nodes(args.nodes)
        if len(nodes) != D.m:
            raise DomainError("node count differs from the number of rows")
        verdict = enumeration.is_realizable(D.ones(), nodes, D.n)
    elif D.m == 2:
        verdict = dope.is_dope_two_row(D)
    result["dope"] = verdict
    result["tail_violation"] = dope.tail_violation(D)
    if args.format == "json":
        _emit_json(result, out)
    else:
        for k in ("E", "R", "C", "T"):
            out.write(f"{k}: {'yes' if conds[k] else 'no'}\n")
        if result["tail_violation"] is not None:
            out.write(f"T fails at k={result['tail_violation']}\n")
        if verdict is None:
            out.write("dope: undecided (membership requires --lambda)\n")
        else:
            out.write(f"dope: {'yes' if verdict else 'no'}\n")
    return EXIT_NO if verdict is False else EXIT_OK


def _table_row(task):
    text, n_max, cap = task
    nodes = parse_nodes(text)
    return _nodes_label(nodes), [enumeration.count_dope(nodes, n, cap) for n in range(n_max + 1)]


def cmd_table(args, out):
    lambdas = args.nodes or DEFAULT_TABLE
    for text in lambdas:
        parse_nodes(text)  # fail fast on bad input
    tasks = [(text, args.n_max, args.cap) for text in lambdas]
    if args.threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(_table_row, tasks))
    else:
        rows = [_table_row(t) for t in tasks]
    header = ["lambda"] + [str(n) for n in range(args.n_max + 1)]
    _emit_table(header, [[label] + counts for label, counts in rows], args.format, out)
    return EXIT_OK


def _target_nodes(args):
    if args.generic is not None:
        return enumeration.generic_nodes(args.generic)
    if args.nodes is None:
        raise ParseError("give --lambda or --generic M")
    return parse_nodes(args.nodes)


def cmd_enumerate(args, out):
    nodes = _target_nodes(args)
    mats = enumeration.enumerate_dope(nodes, args.n, args.cap)
    if args.format == "summary":
        _emit_json({"m": len(nodes), "n": args.n, "lambda": nodes.to_json(), "count": len(mats)}, out)
    elif args.format == "text":
        for D in mats:
            out.write(D.bitstring() + "\n")
    else:
        for D in mats:
            _emit_json(D.to_json(), out)
    return EXIT_OK


def cmd_witness(args, out):
    D = _load_matrix(args)
    if D.m == 2 and not args.general:
        nodes = parse_nodes(args.nodes) if args.nodes else None
        try:
            P = dope.witness_two_row(D, nodes)
        except NotDopeError as exc:
            out.write(f"not realizable: {exc}\n")
            return EXIT_NO
    else:
        if args.nodes is None:
            raise DomainError("matrices with other than two rows need --lambda")
        nodes = parse_nodes(args.nodes)
        if len(nodes) != D.m:
            raise DomainError("node count differs from the number of rows")
        if any(r[-1] for r in D.rows):
            out.write("not realizable: a 1 in the last column\n")
            return EXIT_NO
        P = dope.witness_general(D.ones(), nodes, D.n)
        if not P:
            out.write(f"not realizable: {P.reason}\n")
            return EXIT_NO
    if args.format == "json":
        _emit_json({"poly": _poly_json(P)}, out)
    else:
        out.write(f"{P}\n")
    return EXIT_OK


def cmd_extend(args, out):
    D = _load_matrix(args)
    nodes = parse_nodes(args.nodes)
    if len(nodes) != D.m:
        raise DomainError("node count differs from the number of rows")
    P = dope.extend(D, nodes)
    full = dope.dope_matrix_of(P, nodes)
    if args.format == "json":
        _emit_json({"poly": _poly_json(P), "degree": P.degree, "dope": full.to_json()}, out)
    else:
        out.write(f"{P}\ndegree {P.degree}\n{full}\n")
    return EXIT_OK


def cmd_count(args, out):
    n = args.n
    if n < 1:
        raise DomainError("n must be at least 1")
    rows = []
    for t in range(n + 2):
        rows.append(["C", t, counting.count_C(n, t)])
    for s in range(n // 2 + 1):
        rows.append(["B", 2 * s, counting.count_B(n, s)])
    rows.append(["tail_total", "", sum(counting.count_C(n, t) for t in range(n + 2))])
    rows.append(["up_to_swap", "", counting.count_two_row_up_to_swap(n)])
    if args.m is not None:
        rows.append([f"tail_m{args.m}", "", enumeration.count_condition_T(args.m, n)])
    _emit_table(["quantity", "ones", "value"], rows, args.format, out)
    return EXIT_OK


def cmd_bounds(args, out):
    m = args.m
    if m < 3:
        raise DomainError("bounds are tabulated for m >= 3")
    header = ["n", "pairwise", "zero_patterns", "fixed_tuple",
              "pairwise_log2_approx", "zero_patterns_log2_approx", "fixed_tuple_log2_approx"]
    if args.exact:
        header.insert(1, "generic_exact")
    rows = []
    for n in range(max(args.n_min, 2), args.n_max + 1):
        b = [counting.bound_pairwise(m, n), counting.bound_zero_patterns(m, n), counting.bound_fixed_tuple(m, n)]
        row = [n] + [int(x) for x in b] + [round(x.approx_log2, 4) for x in b]
        if args.exact:
            row.insert(1, enumeration.count_dope(enumeration.generic_nodes(m), n, args.cap))
        rows.append(row)
    _emit_table(header, rows, args.format, out)
    if args.erc is not None:
        e = counting.erc_lower_bound_construction(args.erc)
        _emit_table(["erc_n", "checkerboard_count", "count_log2", "comparison_log2_approx"],
                    [[args.erc, int(e), round(log2(e), 4), round(e.approx_log2, 4)]], args.format, out)
    return EXIT_OK


def cmd_conjecture81(args, out):
    report = enumeration.check_conjecture_8_1(args.m, args.n_max, args.cap)
    rows = [[r["n"], r["generic"], r["condition_T"], r["equal"],
             r["counterexample"].bitstring() if r["counterexample"] else ""] for r in report]
    _emit_table(["n", "generic", "condition_T", "equal", "counterexample"], rows, args.format, out)
    return EXIT_OK if all(r["equal"] for r in report) else EXIT_NO


def cmd_compare_generic(args, out):
    nodes = parse_nodes(args.nodes)
    rep = enumeration.compare_to_generic(nodes, args.n, args.cap)
    if args.format == "json":
        _emit_json(rep, out)
    else:
        for k in ("size", "generic_size", "subset", "equal"):
            out.write(f"{k}: {rep[k]}\n")
    return EXIT_OK


def cmd_matroid_flats(args, out):
    nodes = parse_nodes(args.nodes)
    flats = MatroidView(nodes, args.n).all_flats(args.contract_top, args.cap)
    if args.format == "summary":
        _emit_json({"m": len(nodes), "n": args.n, "contract_top": args.contract_top, "count": len(flats)}, out)
    else:
        for F in flats:
            _emit_json({"positions": [list(p) for p in sorted(F)]}, out)
    return EXIT_OK


def cmd_polya(args, out):
    E = _load_matrix(args)
    if E.m != 2:
        raise DomainError("the Polya condition is stated for two rows")
    nodes = parse_nodes(args.nodes) if args.nodes else None
    polya = dope.polya_poised(E)
    kernel = dope.interpolation_kernel(E, nodes)
    res = {"polya": polya, "poised": not kernel, "kernel_dim": len(kernel)}
    if args.format == "json":
        _emit_json(res, out)
    else:
        for k, v in res.items():
            out.write(f"{k}: {v}\n")
    return EXIT_OK if not kernel else EXIT_NO


def _int_set(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ParseError(f"bad integer list {text!r}") from exc


def cmd_gv(args, out):
    G, H = _int_set(args.G), _int_set(args.H)
    if len(set(G)) != len(set(H)):
        raise DomainError("G and H must have the same size")
    if any(v < 0 for v in G + H):
        raise DomainError("entries must be nonnegative")
    res = dope.gv_nonsingular(G, H)
    res = {**res, "det": str(res["det"])}
    if args.format == "json":
        _emit_json(res, out)
    else:
        for k, v in res.items():
            out.write(f"{k}: {v}\n")
    return EXIT_OK if res["det_nonzero"] else EXIT_NO


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    ap = _ArgumentParser(prog="dopekit", description="Dope matrices of polynomials.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def add(name, func, help, fmts=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=fmts, default=fmts[0])
        return p

    def cap(p):
        p.add_argument("--cap", type=int, default=None, help="flat-count cap (default: $DOPEKIT_FLAT_CAP or 10^7)")

    def matrix(p):
        p.add_argument("--matrix", help='rows like "0101;0011" or JSON {"rows": [...]}')
        p.add_argument("--matrix-file", help="file holding the matrix")

    p = add("dope", cmd_dope, "dope and multiplicity matrices of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--lambda", dest="nodes", required=True)
    p.add_argument("--signed", action="store_true")

    p = add("check", cmd_check, "conditions E, R, C, T and a dope verdict")
    matrix(p)
    p.add_argument("--multiplicity", action="store_true", help="read a multiplicity matrix")
    p.add_argument("--lambda", dest="nodes")

    p = add("table", cmd_table, "counts |D_n(lambda)| for several tuples", ("text", "csv", "json"))
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--lambda", dest="nodes", action="append")
    p.add_argument("--threads", type=int, default=1)
    cap(p)

    p = add("enumerate", cmd_enumerate, "list dope matrices", ("jsonl", "summary", "text"))
    p.add_argument("--lambda", dest="nodes")
    p.add_argument("--generic", type=int, metavar="M")
    p.add_argument("--n", type=int, required=True)
    cap(p)

    p = add("witness", cmd_witness, "a polynomial realising a matrix")
    matrix(p)
    p.add_argument("--lambda", dest="nodes")
    p.add_argument("--general", action="store_true", help="use the subspace search even for two rows")

    p = add("extend", cmd_extend, "extend a matrix to a full dope matrix")
    matrix(p)
    p.add_argument("--lambda", dest="nodes", required=True)

    p = add("count", cmd_count, "closed-form two-row counts", ("text", "csv", "json"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="also count m-row tail-condition matrices")

    p = add("bounds", cmd_bounds, "upper bounds on the number of dope matrices", ("text", "csv", "json"))
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--exact", action="store_true", help="add the exact generic count")
    p.add_argument("--erc", type=int, metavar="N", help="also report the checkerboard ERC count")
    cap(p)

    p = add("conjecture81", cmd_conjecture81, "generic set versus tail-condition set", ("text", "csv", "json"))
    p.add_argument("--m", type=int, default=3)
    p.add_argument("--n-max", type=int, default=6)
    cap(p)

    p = add("compare-generic", cmd_compare_generic, "compare a tuple with the generic tuple")
    p.add_argument("--lambda", dest="nodes", required=True)
    p.add_argument("--n", type=int, required=True)
    cap(p)

    p = add("matroid-flats", cmd_matroid_flats, "flats of the form matroid", ("jsonl", "summary"))
    p.add_argument("--lambda", dest="nodes", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--contract-top", action="store_true")
    cap(p)

    p = add("polya", cmd_polya, "Polya condition versus poisedness")
    matrix(p)
    p.add_argument("--lambda", dest="nodes")

    p = add("gv", cmd_gv, "binomial determinant of two index sets")
    p.add_argument("--G", required=True)
    p.add_argument("--H", required=True)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FlatCapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ValueError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
