"""Command line interface: parse ideal files, run analyses, emit tables
and bit-stable JSON.

Ideal file grammar (line oriented, ``#`` starts a comment)::

    p = 2
    vars = x, y, z, w
    I:
    x*z
    x*w
    expect.cd = 3

Expected-value keys are ``expect.depth``, ``expect.dim``, ``expect.pd``,
``expect.cd``; they are optional and only ``verify`` consumes them.

JSON reports use a fixed key order (schema_version, p, n, vars, order,
generators, depth, dim, pd, cd, fgrade, fdepth, strict_comparison_gap,
chains, checks, unknowns), integers as JSON numbers, no floats; two runs on
the same input are byte-identical.

Exit codes: 0 success, 1 parse error, 2 failed check or expectation,
3 capped/Unknown chain, 4 resource cap exhausted.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import groebner as gb
from .errors import FDepthError, ParseError, ResourceExhausted
from .fmodule import ext_module
from .invariants import report as run_report
from .resolution import free_resolution
from .ring import RingCtx, parse_polynomial

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_CHECK_FAILED = 2
EXIT_UNKNOWN = 3
EXIT_RESOURCE = 4

_EXPECT_KEYS = ("depth", "dim", "pd", "cd")


@dataclass
class IdealFile:
    """Parsed form of one ideal description file."""

    p: int
    var_names: tuple
    generators: tuple            # polynomial strings as given
    expects: dict = field(default_factory=dict)
    label: str = ""

    def build(self, order="grevlex"):
        try:
            ctx = RingCtx(self.p, self.var_names, order)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        gens = [parse_polynomial(s, ctx) for s in self.generators]
        return ctx, gb.Ideal(ctx, gens)


def parse_ideal_file(text):
    p = None
    var_names = None
    label = ""
    generators = []
    expects = {}
    in_gens = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not in_gens:
            if line == "I:":
                if p is None or var_names is None:
                    raise ParseError(f"line {lineno}: 'I:' before p/vars")
                in_gens = True
                continue
            if "=" not in line:
                raise ParseError(f"line {lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key == "p":
                try:
                    p = int(value)
                except ValueError:
                    raise ParseError(f"line {lineno}: bad p {value!r}") from None
            elif key == "vars":
                var_names = tuple(v.strip() for v in value.split(",") if v.strip())
                if not var_names:
                    raise ParseError(f"line {lineno}: empty vars")
            elif key == "label":
                label = value
            else:
                raise ParseError(f"line {lineno}: unknown key {key!r}")
        else:
            if line.startswith("expect."):
                key, _, value = line.partition("=")
                key = key.strip()[len("expect."):]
                if key not in _EXPECT_KEYS:
                    raise ParseError(f"line {lineno}: unknown expect key {key!r}")
                try:
                    expects[key] = int(value.strip())
                except ValueError:
                    raise ParseError(f"line {lineno}: bad expect value") from None
            else:
                generators.append(line)
    if p is None or var_names is None:
        raise ParseError("missing 'p =' or 'vars =' line")
    if not in_gens or not generators:
        raise ParseError("empty generator list")
    return IdealFile(p=p, var_names=var_names, generators=tuple(generators),
                     expects=expects, label=label)


def format_ideal_file(f):
    """Canonical text form; parse(format(f)) == f."""
    lines = []
    if f.label:
        lines.append(f"label = {f.label}")
    lines.append(f"p = {f.p}")
    lines.append("vars = " + ", ".join(f.var_names))
    lines.append("I:")
    lines.extend(f.generators)
    for key in _EXPECT_KEYS:
        if key in f.expects:
            lines.append(f"expect.{key} = {f.expects[key]}")
    return "\n".join(lines) + "\n"


def load_ideal_file(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    f = parse_ideal_file(text)
    if not f.label:
        f.label = Path(path).stem
    return f


# ---------------------------------------------------------------------------
# JSON report

def report_to_json_dict(rep):
    chains = []
    for c in rep.chain_results:
        chains.append({
            "j": c.j,
            "verdict": c.verdict_str(),
            "stab_e": c.stab_e,
            "capped": c.capped,
        })
    checks = [{"name": c.name, "status": c.status, "paper_anchor": c.paper_anchor}
              for c in rep.checks]
    return {
        "schema_version": "1",
        "p": rep.p,
        "n": rep.n,
        "vars": list(rep.var_names),
        "order": rep.order,
        "generators": list(rep.generators),
        "depth": rep.depth,
        "dim": rep.dim,
        "pd": rep.pd,
        "cd": rep.cd,
        "fgrade": rep.fgrade,
        "fdepth": rep.fdepth,
        "strict_comparison_gap": rep.strict_comparison_gap,
        "chains": chains,
        "checks": checks,
        "unknowns": list(rep.unknowns),
    }


def render_json(rep):
    return json.dumps(report_to_json_dict(rep), indent=2) + "\n"


# ---------------------------------------------------------------------------
# human tables

def _fmt(v):
    return "?" if v is None else str(v)


def print_report(rep, out, source=""):
    w = out.write
    if source:
        w(f"ideal file: {source}\n")
    w(f"p = {rep.p}   n = {rep.n}   vars = {', '.join(rep.var_names)}   "
      f"order = {rep.order}\n")
    w("generators: " + ", ".join(rep.generators) + "\n\n")
    header = ("depth", "dim", "pd", "cd", "fgrade", "F-depth")
    values = (rep.depth, rep.dim, rep.pd, rep.cd, rep.fgrade, rep.fdepth)
    w("  " + "  ".join(f"{h:>7}" for h in header) + "\n")
    w("  " + "  ".join(f"{_fmt(v):>7}" for v in values) + "\n\n")
    w("checks:\n")
    for c in rep.checks:
        w(f"  {c.name}  {c.status:<7}  {c.paper_anchor}\n")
    w("chains:\n")
    for c in rep.chain_results:
        stab = "" if c.stab_e is None else f"  stab_e={c.stab_e}"
        w(f"  j={c.j}  {c.verdict_str()}{stab}\n")
    if rep.strict_comparison_gap:
        w("note: depth < F-depth here -- the comparison inequality is strict "
          "for this ideal\n")
    if rep.unknowns:
        w(f"unknown (capped) chains at j = {list(rep.unknowns)}\n")


def _exit_code_for(rep):
    if rep.has_unknowns:
        return EXIT_UNKNOWN
    if not rep.all_checks_pass:
        return EXIT_CHECK_FAILED
    return EXIT_OK


# ---------------------------------------------------------------------------
# subcommands

def cmd_analyze(args, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        f = load_ideal_file(args.path)
        ctx, ideal = f.build(order=args.order)
        rep = run_report(ideal, max_e=args.max_e, pair_cap=args.pair_cap)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ResourceExhausted as exc:
        err.write(f"resource exhausted: {exc}\n")
        return EXIT_RESOURCE
    print_report(rep, out, source=str(args.path))
    if args.json:
        Path(args.json).write_text(render_json(rep))
    return _exit_code_for(rep)


def _verify_one(path, args):
    """Returns (exit_code, summary_line)."""
    name = Path(path).name
    try:
        f = load_ideal_file(path)
        _, ideal = f.build(order=args.order)
        rep = run_report(ideal, max_e=args.max_e, pair_cap=args.pair_cap)
    except ParseError as exc:
        return EXIT_PARSE, f"{name}: parse error: {exc}"
    except ResourceExhausted as exc:
        return EXIT_RESOURCE, f"{name}: resource exhausted: {exc}"

    cells = []
    mismatched = []
    actual = {"depth": rep.depth, "dim": rep.dim, "pd": rep.pd, "cd": rep.cd}
    for key in _EXPECT_KEYS:
        if key in f.expects:
            want = f.expects[key]
            got = actual[key]
            ok = got == want
            cells.append(f"{key}={_fmt(got)}{'' if ok else f'!={want}'}")
            if not ok:
                mismatched.append(key)
        else:
            cells.append(f"{key}={_fmt(actual[key])}")
    checks_ok = rep.all_checks_pass

    if rep.has_unknowns:
        code = EXIT_UNKNOWN
        tag = "UNKNOWN"
    elif mismatched or not checks_ok:
        code = EXIT_CHECK_FAILED
        tag = "FAIL"
    else:
        code = EXIT_OK
        tag = "PASS"
    line = f"{name:<36} {' '.join(cells)}  checks={'ok' if checks_ok else 'FAIL'}  {tag}"
    return code, line


def cmd_verify(args, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    root = Path(args.corpus_dir)
    paths = sorted(root.glob("*.ideal"))
    if not paths:
        err.write(f"warning: no *.ideal files under {root}\n")
        return EXIT_OK
    worst = EXIT_OK
    for path in paths:
        code, line = _verify_one(path, args)
        out.write(line + "\n")
        worst = max(worst, code)
    out.write(f"{'ALL PASS' if worst == EXIT_OK else 'FAILURES PRESENT'} "
              f"({len(paths)} files)\n")
    return worst


def cmd_gb(args, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        f = load_ideal_file(args.path)
        ctx, ideal = f.build(order=args.order)
        basis = ideal.groebner(pair_cap=args.pair_cap)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ResourceExhausted as exc:
        err.write(f"resource exhausted: {exc}\n")
        return EXIT_RESOURCE
    for g in basis:
        out.write(f"{g!r}\n")
    return EXIT_OK


def cmd_resolve(args, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        f = load_ideal_file(args.path)
        ctx, ideal = f.build(order=args.order)
        C = free_resolution(ideal, pair_cap=args.pair_cap)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ResourceExhausted as exc:
        err.write(f"resource exhausted: {exc}\n")
        return EXIT_RESOURCE
    out.write(" ".join(str(b) for b in C.betti()) + "\n")
    for k, m in enumerate(C.modules):
        out.write(f"F_{k}: rank {m.rank}, shifts {list(m.shifts)}\n")
    return EXIT_OK


def cmd_ext(args, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        f = load_ideal_file(args.path)
        ctx, ideal = f.build(order=args.order)
        if not (0 <= args.j <= ctx.n):
            raise ParseError(f"--j must be in [0, {ctx.n}]")
        E = ext_module(ideal, args.j, pair_cap=args.pair_cap)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ResourceExhausted as exc:
        err.write(f"resource exhausted: {exc}\n")
        return EXIT_RESOURCE
    out.write(f"Ext^{args.j}: ambient rank {E.ambient_rank}, "
              f"zero: {E.is_zero()}\n")
    out.write("generators:\n")
    for v in E.numerator.gens:
        out.write(f"  {v!r}\n")
    out.write("relations:\n")
    for v in E.denominator.gens:
        out.write(f"  {v!r}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="fdepth",
        description="Local cohomology vanishing over F_p[x1..xn] via "
                    "Frobenius nilpotency; reports depth, dim, pd, cd, "
                    "fgrade and F-depth.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_json=False, with_j=False):
        p.add_argument("--max-e", type=int, default=8, dest="max_e",
                       help="kernel chain iteration cap (default 8)")
        p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex",
                       help="monomial order (default grevlex)")
        p.add_argument("--pair-cap", type=int, default=None, dest="pair_cap",
                       help="Groebner pair-reduction cap (default 10^6)")
        if with_json:
            p.add_argument("--json", default=None, metavar="PATH",
                           help="also write the JSON report to PATH")
        if with_j:
            p.add_argument("--j", type=int, required=True,
                           help="cohomological index")

    p = sub.add_parser("analyze", help="full invariant report for one ideal file")
    p.add_argument("path")
    common(p, with_json=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="batch-run a corpus directory against "
                                      "its expect.* values")
    p.add_argument("corpus_dir")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gb", help="print the reduced Groebner basis")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("resolve", help="print the Betti numbers and shifts "
                                       "of the minimal free resolution")
    p.add_argument("path")
    common(p)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("ext", help="print the Ext^j subquotient presentation")
    p.add_argument("path")
    common(p, with_j=True)
    p.set_defaults(func=cmd_ext)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FDepthError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE if isinstance(exc, ParseError) else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
