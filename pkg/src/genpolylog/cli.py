"""Command-line front end: ``genpolylog {show,table,verify}``.

Exit codes: 0 when everything requested succeeded (and every check passed),
1 when a check failed or a specialization hit a pole, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .errors import BadArgument, PoleError, PolylogError
from .funcfield import RatFunc
from .polyring import BiPoly, Poly, format_poly
from .primefield import check_prime, is_prime, max_prime, valuation_e
from . import special, verify

SHOW_OBJECTS = ("polylog", "gen_polylog", "laguerre", "gexp", "trunc_exp", "T", "g",
                "b1s", "correction", "thm1")
TABLE_OBJECTS = ("g", "e", "b1s")
VERIFY_CAP = 13


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# argument helpers


def parse_primes(text: str) -> list[int]:
    """``7``, ``3..11`` (odd primes in the closed range) or ``3,5,7``."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = (int(v) for v in text.split("..", 1))
            if lo > hi:
                raise UsageError(f"empty prime range {text!r}")
            primes = [n for n in range(lo, hi + 1) if n != 2 and is_prime(n)]
            if not primes:
                raise UsageError(f"no odd primes in {text!r}")
            return primes
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed prime specification {text!r}") from None
    for n in values:
        if n == 2 or not is_prime(n):
            raise UsageError(f"{n} is not an odd prime")
    return sorted(set(values))


def parse_mutation(text: str) -> verify.Mutation:
    """``TARGET:INDEX`` with INDEX an integer or ``i,j``."""
    target, _, index = text.partition(":")
    try:
        parts = tuple(int(v) for v in index.split(",")) if index else (1,)
    except ValueError:
        raise UsageError(f"malformed mutation {text!r}") from None
    return verify.Mutation(target, parts[0] if len(parts) == 1 else parts)


def _cap(args, default):
    if args.max_prime is not None:
        return args.max_prime
    return max_prime(default) if os.environ.get("POLYLOG_MAX_PRIME") else default


def _single_prime(args) -> int:
    primes = parse_primes(args.p)
    if len(primes) != 1:
        raise UsageError(f"{args.command} needs a single prime, got {args.p!r}")
    try:
        return check_prime(primes[0], bound=_cap(args, 101))
    except BadArgument as exc:
        raise UsageError(str(exc)) from None


# --------------------------------------------------------------------------
# rendering


def _latex_alpha_poly(coeffs) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("\\alpha" if k == 1 else f"\\alpha^{{{k}}}")
        parts.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
    return " + ".join(parts) if parts else "0"


def _latex_coeff(c) -> str:
    if isinstance(c, RatFunc):
        if c.is_polynomial():
            return _latex_alpha_poly(c.num)
        return f"\\frac{{{_latex_alpha_poly(c.num)}}}{{{_latex_alpha_poly(c.den)}}}"
    return str(c)


def _latex_poly(f: Poly, var="X") -> str:
    parts = []
    for k, c in enumerate(f.coeffs):
        if f.field.is_zero(c):
            continue
        cs = _latex_coeff(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{{{k}}}")
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(mono)
        elif cs.isdigit():
            parts.append(f"{cs}{mono}")
        else:
            parts.append(f"\\left({cs}\\right){mono}")
    return " + ".join(parts) if parts else "0"


def _fmt(c) -> str:
    if isinstance(c, RatFunc):
        return c.fmt()
    return str(c)


def _build(args, p):
    """(latex name, body, params) for the selected object."""
    obj, d, s = args.object, args.d, args.s
    if obj == "polylog":
        return f"\\pounds_{{{d}}}(X)", special.build_polylog(p, d), {"d": d}
    if obj == "gen_polylog":
        body = special.build_gen_polylog(p, d).body
        return f"\\pounds_{{{d}}}^{{(\\alpha)}}(X)", body, {"d": d}
    if obj == "laguerre":
        return f"L_{{{p - 1}}}^{{(\\alpha)}}(X)", special.build_laguerre(p).body, {}
    if obj == "gexp":
        return "\\mathcal{E}^{(\\alpha)}(X)", special.build_gexp(p).body, {}
    if obj == "trunc_exp":
        return "E(X)", special.build_trunc_exp(p).body, {}
    if obj == "T":
        return "T(X)", special.build_T(p), {}
    if obj == "b1s":
        if not 0 < s < p - 1:
            raise UsageError(f"b1s needs 0 < s < p-1, got s={s}")
        return f"b_{{1,{s}}}(\\alpha)", special.build_b1s(p, s), {"s": s}
    if obj == "g":
        return "g_k(\\alpha)", special.build_g(p), {}
    if obj == "correction":
        return "1+\\sum s_i X^iY^{p-i}", special.build_thm2_correction(p).body, {}
    if obj == "thm1":
        return "c_i(\\alpha,\\beta)", list(special.build_thm1_coeffs(p).body), {}
    raise UsageError(f"unknown object {obj!r}")


def _specialize(body, c):
    """Replace alpha by c in every rational coefficient."""
    if isinstance(body, dict):
        return {k: v.specialize(c) for k, v in body.items()}
    if isinstance(body, Poly) and body.coeffs and isinstance(body.coeffs[0], RatFunc):
        from .primefield import GF
        return Poly(GF(body.field.p), [v.specialize(c) for v in body.coeffs])
    raise UsageError("--c applies only to objects with coefficients in F_p(alpha)")


def _entries(body, args) -> list[tuple[str, str]]:
    """(index, exact coefficient string) pairs in ascending index order."""
    if isinstance(body, dict):
        return [(str(k), _fmt(v)) for k, v in sorted(body.items())]
    if isinstance(body, list):
        return [(str(i), v.fmt()) for i, v in enumerate(body)]
    if isinstance(body, BiPoly):
        return [(f"{i},{j}", c.fmt()) for (i, j), c in body.terms()]
    return [(str(k), _fmt(c)) for k, c in enumerate(body.coeffs)]


def _render_text(body, args) -> str:
    if isinstance(body, Poly):
        var = "a" if args.object == "b1s" else "X"
        if args.object == "b1s":
            return format_poly(body, var="a", spaced=False)
        return format_poly(body, var=var)
    if isinstance(body, dict):
        return "\n".join(f"g_{k} = {_fmt(v)}" for k, v in sorted(body.items()))
    if isinstance(body, list):
        return "\n".join(f"c_{i} = {v.fmt()}" for i, v in enumerate(body))
    parts = []
    for (i, j), c in body.terms():
        mono = "*".join(m for m in (
            "" if i == 0 else ("X" if i == 1 else f"X^{i}"),
            "" if j == 0 else ("Y" if j == 1 else f"Y^{j}")) if m)
        cs = c.fmt()
        parts.append(cs if not mono else (mono if cs == "1" else f"({cs})*{mono}"))
    return " + ".join(parts) if parts else "0"


def _render_latex(name, body, args) -> str:
    if isinstance(body, Poly):
        var = "\\alpha" if args.object == "b1s" else "X"
        if args.object == "b1s":
            return f"{name} = {_latex_alpha_poly(body.coeffs)}"
        return f"{name} = {_latex_poly(body, var)}"
    if isinstance(body, dict):
        return "\n".join(f"g_{{{k}}}(\\alpha) = {_latex_coeff(v)} \\\\"
                         for k, v in sorted(body.items()))
    return "\n".join(f"{i} & {v} \\\\" for i, v in _entries(body, args))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def run_show(args) -> str:
    p = _single_prime(args)
    name, body, params = _build(args, p)
    if args.c is not None:
        body = _specialize(body, args.c)
        params["c"] = args.c % p
    fmt = args.format
    if fmt == "text":
        return _render_text(body, args)
    if fmt == "latex":
        return _render_latex(name, body, args)
    entries = _entries(body, args)
    if fmt == "csv":
        return _csv(["index", "coefficient"], entries)
    doc = {"object": args.object, "p": p, "params": params,
           "coefficients": [{"index": i, "value": v} for i, v in entries]}
    return json.dumps(doc, indent=2)


def _table_rows(args, p):
    obj = args.object
    if obj == "g":
        table = special.build_g(p)
        return ["k", "g_k"], [[str(k), table[k].fmt()] for k in range(1, p)]
    if obj == "e":
        header = ["k"] + [f"a={a}" for a in range(1, p)]
        rows = [[str(k)] + [str(valuation_e(k, a, p)) for a in range(1, p)]
                for k in range(1, p)]
        return header, rows
    if obj == "b1s":
        rows = []
        for s in range(1, p - 1):
            f = special.build_b1s(p, s)
            rows.append([str(s), format_poly(f, var="a", spaced=False),
                         special.linear_factorization(f),
                         " ".join(str(a) for a in special.b1s_roots(p, s))])
        return ["s", "b_1s", "factorization", "roots"], rows
    raise UsageError(f"table supports {', '.join(TABLE_OBJECTS)}, got {obj!r}")


def run_table(args) -> str:
    p = _single_prime(args)
    header, rows = _table_rows(args, p)
    fmt = args.format
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        return json.dumps({"object": args.object, "p": p, "header": header, "rows": rows},
                          indent=2)
    if fmt == "latex":
        cols = "r" * len(header)
        lines = [f"\\begin{{tabular}}{{{cols}}}", " & ".join(header) + " \\\\", "\\hline"]
        lines += [" & ".join(r) + " \\\\" for r in rows]
        lines.append("\\end{tabular}")
        return "\n".join(lines)
    if args.object == "e":
        return "\n".join(f"k={r[0]}: {','.join(r[1:])}" for r in rows)
    if args.object == "g":
        return "\n".join(f"g_{r[0]} = {r[1]}" for r in rows)
    return "\n".join(f"s={r[0]}: {r[1]} = {r[2]}  roots {r[3]}" for r in rows)


def run_verify(args) -> tuple[str, int]:
    primes = parse_primes(args.p)
    cap = _cap(args, VERIFY_CAP)
    try:
        for p in primes:
            check_prime(p, bound=cap)
        selection = verify.resolve_selection(
            [s.strip() for s in args.suite.split(",") if s.strip()])
    except BadArgument as exc:
        raise UsageError(str(exc)) from None
    mutation = parse_mutation(args.mutate) if args.mutate else None
    result = verify.run_suite(primes, selection, jobs=args.jobs, mutation=mutation)
    doc = result.to_json()
    payload = json.dumps(doc, indent=2)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    if args.format == "json":
        out = payload
    else:
        lines = []
        for r in result.reports:
            params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
            line = f"{r.status.upper():5} {r.identity} p={r.p}" + (f" {params}" if params else "")
            if r.witness:
                line += "  " + json.dumps(r.witness)
            lines.append(line)
        s = doc["summary"]
        lines.append(f"summary: pass={s['pass']} fail={s['fail']} error={s['error']}")
        out = "\n".join(lines)
    return out, 0 if result.ok else 1


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genpolylog",
        description="Generalized finite polylogarithms over F_p(alpha).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, default_p):
        sp.add_argument("--p", default=default_p,
                        help="odd prime, range lo..hi, or comma list")
        sp.add_argument("--format", default="text", choices=["text", "latex", "json", "csv"])
        sp.add_argument("--max-prime", type=int, default=None,
                        help="raise or lower the safety cap on p")

    show = sub.add_parser("show", help="print one constructed object")
    common(show, "3")
    show.add_argument("--object", default="polylog", choices=SHOW_OBJECTS)
    show.add_argument("--d", type=int, default=1, help="polylogarithm index")
    show.add_argument("--s", type=int, default=1, help="index of b_(1,s)")
    show.add_argument("--h", type=int, default=None, help=argparse.SUPPRESS)
    show.add_argument("--c", type=int, default=None, help="specialize alpha to c")

    table = sub.add_parser("table", help="coefficient tables")
    common(table, "3")
    table.add_argument("--object", default="g", choices=TABLE_OBJECTS)

    ver = sub.add_parser("verify", help="run identity checks")
    common(ver, "3..7")
    ver.add_argument("--suite", default="all",
                     help="comma list of identity tags or groups: " + ", ".join(verify.GROUPS))
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--report", default=None, help="write the JSON report here")
    ver.add_argument("--mutate", default=None, help=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            if args.format == "csv":
                raise UsageError("verify writes text or json")
            out, code = run_verify(args)
        elif args.command == "show":
            out, code = run_show(args), 0
        else:
            out, code = run_table(args), 0
    except UsageError as exc:
        print(f"genpolylog: error: {exc}", file=sys.stderr)
        return 2
    except PoleError as exc:
        print(f"genpolylog: {exc}", file=sys.stderr)
        return 1
    except BadArgument as exc:
        print(f"genpolylog: error: {exc}", file=sys.stderr)
        return 2
    except PolylogError as exc:
        print(f"genpolylog: {exc}", file=sys.stderr)
        return 1
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
