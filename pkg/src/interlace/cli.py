"""Command-line front end.

    interlace analyze "x^3-3x+1" [--width 2^-20] [--sturm]
    interlace analyze --batch polys.txt
    interlace construct -n 5 --c0 -3 [--set q=0] [--tol 2^-40]
    interlace interval "x^3-3x" "3x^2"
    interlace sturm "x^3-3x+1"
    interlace classify "x^6-15x^4+40x^3-45x^2+24x-5"

Every command accepts ``--json``.  JSON output carries ``"schema": 1`` and
writes every rational as an exact ``"num/den"`` string.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Optional

from .construct import (
    DEFAULT_TOL,
    AdmissibleInterval,
    MultiplicityProfile,
    admissible_interval,
    build_all_real,
    classify_multiplicities,
)
from .errors import (
    CertificationError,
    ConstructionFailedError,
    InterlaceError,
    InvalidArgumentError,
    InvalidCertificateError,
    NoAdmissibleChoiceError,
    ParseError,
    PreconditionError,
)
from .family import coeff_index, coeff_name
from .parse import parse_polynomial
from .polycore import Poly, discriminant, render
from .realroots import (
    NEG_INF,
    POS_INF,
    IntervalQ,
    count_distinct_real_roots,
    isolate_real_roots,
    sign_variations,
    sturm_chain,
)

SCHEMA = 1
DEFAULT_WIDTH = Fraction(1, 2 ** 20)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_CONSTRUCTION = 4
EXIT_CERTIFICATION = 5


def exit_code(err: Exception) -> int:
    if isinstance(err, ParseError):
        return EXIT_PARSE
    if isinstance(err, (ConstructionFailedError, NoAdmissibleChoiceError)):
        return EXIT_CONSTRUCTION
    if isinstance(err, (CertificationError, InvalidCertificateError)):
        return EXIT_CERTIFICATION
    return EXIT_PRECONDITION


# -- serialization --------------------------------------------------------------

def q(v: Fraction) -> str:
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(text: str) -> Fraction:
    """``"3"``, ``"-10/3"``, ``"0.25"`` or a power of two such as ``"2^-20"``."""
    m = re.fullmatch(r"\s*(-?\d+)\s*\^\s*(-?\d+)\s*", text)
    try:
        if m:
            return Fraction(int(m.group(1))) ** int(m.group(2))
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidArgumentError(f"not a rational number: {text!r}") from None


def poly_json(p: Poly) -> dict:
    return {"text": render(p), "coeffs": [q(c) for c in p.coeffs]}


def interval_json(iv: IntervalQ) -> dict:
    return {"lo": q(iv.lo), "hi": q(iv.hi), "kind": iv.kind}


def admissible_json(iv: AdmissibleInterval) -> dict:
    return {
        "lo": q(iv.lo),
        "hi": q(iv.hi),
        "inner_lo": q(iv.inner_lo),
        "inner_hi": q(iv.inner_hi),
        "lo_exact": iv.lo_exact,
        "hi_exact": iv.hi_exact,
        "empty": iv.empty,
        "diagnosis": iv.diagnosis,
        "lo_attained_at": list(iv.lo_attained_at),
        "hi_attained_at": list(iv.hi_attained_at),
    }


def profile_json(prof: MultiplicityProfile) -> dict:
    return {
        "roots": [dict(interval_json(iv), multiplicity=m) for iv, m in prof.entries],
        "limit_cases": [{"name": c.name, "conditions": c.description} for c in prof.matches],
    }


def sturm_json(p: Poly) -> dict:
    chain = sturm_chain(p)
    return {
        "normalization": "remainders negated and scaled to primitive form by a positive factor",
        "chain": [poly_json(c) for c in chain],
        "leading_signs": list(chain.leading_signs()),
        "variations_neg_inf": sign_variations(chain, NEG_INF),
        "variations_pos_inf": sign_variations(chain, POS_INF),
    }


# -- commands -------------------------------------------------------------------

def _nonconstant(p: Poly) -> Poly:
    if p.degree < 1:
        raise PreconditionError("expected a non-constant polynomial")
    return p


def cmd_analyze(text: str, width=DEFAULT_WIDTH, sturm: bool = False) -> dict:
    p = _nonconstant(parse_polynomial(text))
    width = Fraction(width)
    if width <= 0:
        raise InvalidArgumentError("width must be positive")
    roots = []
    for a in isolate_real_roots(p).roots():
        exact = a.as_rational()
        roots.append(IntervalQ.point(exact) if exact is not None else a.refine(width).interval)
    disc = discriminant(p)
    report = {
        "schema": SCHEMA,
        "command": "analyze",
        "input": text,
        "polynomial": poly_json(p),
        "degree": p.degree,
        "distinct_real_root_count": count_distinct_real_roots(p),
        "roots": [interval_json(iv) for iv in roots],
        "discriminant": q(disc),
        "discriminant_sign": (disc > 0) - (disc < 0),
        "multiplicity": profile_json(classify_multiplicities(p, width)),
    }
    if sturm:
        report["sturm"] = sturm_json(p)
    return report


def _stage_json(ledger_n: Optional[int], final: Optional[Poly], st) -> dict:
    out = {
        "degree": st.degree,
        "label": st.label,
        "poly": poly_json(st.poly),
        "remainder": poly_json(st.remainder),
        "shifted_remainder": poly_json(st.shifted_remainder),
        "interval": admissible_json(st.interval),
        "trailing": q(st.trailing),
        "coefficient": {"name": coeff_name(st.degree - 2), "value": q(st.c_value)},
        "given": st.given,
        "sturm_count": st.sturm_count,
        "interlaced": st.interlaced,
    }
    if final is not None:
        out["final_coefficient"] = {"power": ledger_n - st.degree, "value": q(final.coeff(ledger_n - st.degree))}
    return out


def parse_assignments(items) -> dict:
    fixed = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise InvalidArgumentError(f"--set expects name=value, got {item!r}")
        fixed[coeff_index(name.strip())] = parse_rational(value)
    return fixed


def cmd_construct(n: int, c0, fixed=None, tol=DEFAULT_TOL, strategy: str = "midpoint") -> dict:
    ledger = build_all_real(n, Fraction(c0), strategy=strategy, tol=tol, fixed=fixed)
    return {
        "schema": SCHEMA,
        "command": "construct",
        "input": {"n": n, "c0": q(c0), "strategy": strategy, "tol": q(tol),
                  "fixed": {coeff_name(k): q(v) for k, v in sorted((fixed or {}).items())}},
        "degree": n,
        "c": {coeff_name(k): q(v) for k, v in enumerate(ledger.c)},
        "base": poly_json(ledger.base),
        "stages": [_stage_json(n, ledger.final, st) for st in ledger.stages],
        "final": poly_json(ledger.final),
        "distinct_real_root_count": count_distinct_real_roots(ledger.final),
    }


def cmd_interval(reduced_text: str, shifted_text: str, tol=DEFAULT_TOL) -> dict:
    reduced = parse_polynomial(reduced_text)
    shifted = parse_polynomial(shifted_text)
    iv = admissible_interval(reduced, shifted, tol)
    return {
        "schema": SCHEMA,
        "command": "interval",
        "input": {"reduced": reduced_text, "shifted_remainder": shifted_text, "tol": q(tol)},
        "degree": reduced.degree + 1,
        "reduced": poly_json(reduced),
        "shifted_remainder": poly_json(shifted),
        "interval": admissible_json(iv),
    }


def cmd_sturm(text: str) -> dict:
    p = _nonconstant(parse_polynomial(text))
    return {
        "schema": SCHEMA,
        "command": "sturm",
        "input": text,
        "polynomial": poly_json(p),
        "degree": p.degree,
        "distinct_real_root_count": count_distinct_real_roots(p),
        "sturm": sturm_json(p),
    }


def cmd_classify(text: str, width=DEFAULT_WIDTH) -> dict:
    p = _nonconstant(parse_polynomial(text))
    return {
        "schema": SCHEMA,
        "command": "classify",
        "input": text,
        "polynomial": poly_json(p),
        "degree": p.degree,
        "multiplicity": profile_json(classify_multiplicities(p, Fraction(width))),
    }


def error_report(command: str, err: Exception) -> dict:
    out = {"schema": SCHEMA, "command": command,
           "error": {"type": type(err).__name__, "message": str(err), "exit_code": exit_code(err)}}
    if isinstance(err, ParseError):
        out["error"]["position"] = err.position
    if isinstance(err, ConstructionFailedError):
        out["error"]["stage"] = err.stage
        if err.interval is not None:
            out["error"]["interval"] = admissible_json(err.interval)
        out["error"]["completed_stages"] = [_stage_json(None, None, st) for st in getattr(err, "completed", ())]
    return out


# -- human-readable rendering ---------------------------------------------------

def _approx(s: str) -> str:
    v = Fraction(s)
    return str(v) if v.denominator == 1 else f"{v} (≈ {float(v):.10g})"


def _fmt_interval(d: dict) -> str:
    if d["kind"] == "point":
        return f"{{{Fraction(d['lo'])}}}"
    return f"({_approx(d['lo'])}, {_approx(d['hi'])})"


def _fmt_admissible(d: dict) -> str:
    lo = Fraction(d["lo"]) if d["lo_exact"] else _approx(d["lo"])
    hi = Fraction(d["hi"]) if d["hi_exact"] else _approx(d["hi"])
    text = f"]{lo}; {hi}["
    if d["diagnosis"]:
        text += f"  [{d['diagnosis']}]"
    return text + f"  at roots {d['lo_attained_at']} / {d['hi_attained_at']}"


def render_human(report: dict) -> str:
    lines = []
    add = lines.append
    if "error" in report:
        e = report["error"]
        add(f"error ({e['type']}): {e['message']}")
        if "interval" in e:
            add(f"  interval: {_fmt_admissible(e['interval'])}")
        return "\n".join(lines)
    cmd = report["command"]
    if "polynomial" in report:
        add(f"polynomial        {report['polynomial']['text']}")
    if "degree" in report:
        add(f"degree            {report['degree']}")
    if "distinct_real_root_count" in report:
        add(f"real roots        {report['distinct_real_root_count']} distinct")
    if cmd == "analyze":
        for i, r in enumerate(report["roots"], start=1):
            add(f"  root {i:<3}        {_fmt_interval(r)}")
        add(f"discriminant      {Fraction(report['discriminant'])}  (sign {report['discriminant_sign']:+d})")
    if "multiplicity" in report:
        add("multiplicities")
        for r in report["multiplicity"]["roots"]:
            add(f"  {_fmt_interval(r):<40} x{r['multiplicity']}")
        for c in report["multiplicity"]["limit_cases"]:
            add(f"limit case        {c['name']}: {c['conditions']}")
    if "sturm" in report:
        s = report["sturm"]
        add(f"sturm chain       ({s['normalization']})")
        for i, (c, sg) in enumerate(zip(s["chain"], s["leading_signs"])):
            add(f"  S{i:<3} {'+' if sg > 0 else '-'}  {c['text']}")
        add(f"variations        V(-inf)={s['variations_neg_inf']}  V(+inf)={s['variations_pos_inf']}")
    if cmd == "interval":
        add(f"reduced           {report['reduced']['text']}")
        add(f"shifted remainder {report['shifted_remainder']['text']}")
        add(f"admissible a0     {_fmt_admissible(report['interval'])}")
    if cmd == "construct":
        add(f"base              {report['base']['text']}")
        for st in report["stages"]:
            add(f"stage {st['degree']}: {st['label']} in {_fmt_admissible(st['interval'])}")
            chosen = Fraction(st["trailing"])
            line = f"  chose {st['label']} = {chosen}"
            if st["label"] != st["coefficient"]["name"]:
                line += f", {st['coefficient']['name']} = {Fraction(st['coefficient']['value'])}"
            add(line + (" (given)" if st["given"] else ""))
            add(f"  P_{st['degree']} = {st['poly']['text']}")
            add(f"  sturm count {st['sturm_count']}, interlaced {'yes' if st['interlaced'] else 'no'}")
        add(f"final             {report['final']['text']}")
    return "\n".join(lines)


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(prog="interlace", description="Exact real-root analysis and all-real-root construction.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="root count, isolation, discriminant, multiplicities")
    a.add_argument("expr", nargs="?")
    a.add_argument("--batch", metavar="PATH", help="one expression per line, '#' starts a comment")
    a.add_argument("--width", type=parse_rational, default=DEFAULT_WIDTH)
    a.add_argument("--sturm", action="store_true", help="include the Sturm chain")

    c = sub.add_parser("construct", parents=[common], help="build a family member with only real distinct roots")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--c0", type=parse_rational, required=True)
    c.add_argument("--set", action="append", metavar="NAME=VALUE", default=[])
    c.add_argument("--tol", type=parse_rational, default=DEFAULT_TOL)
    c.add_argument("--strategy", choices=["midpoint"], default="midpoint")

    i = sub.add_parser("interval", parents=[common], help="admissible trailing-coefficient interval")
    i.add_argument("reduced")
    i.add_argument("shifted_remainder")
    i.add_argument("--tol", type=parse_rational, default=DEFAULT_TOL)

    s = sub.add_parser("sturm", parents=[common], help="Sturm chain")
    s.add_argument("expr")

    k = sub.add_parser("classify", parents=[common], help="multiplicity profile and limit cases")
    k.add_argument("expr")
    k.add_argument("--width", type=parse_rational, default=DEFAULT_WIDTH)
    return parser


def _read_batch(path: str) -> list:
    with open(path, encoding="utf-8") as fh:
        lines = [line.split("#", 1)[0].strip() for line in fh]
    return [line for line in lines if line]


def _run(args) -> dict:
    if args.command == "analyze":
        return cmd_analyze(args.expr, args.width, args.sturm)
    if args.command == "construct":
        return cmd_construct(args.n, args.c0, parse_assignments(args.set), args.tol, args.strategy)
    if args.command == "interval":
        return cmd_interval(args.reduced, args.shifted_remainder, args.tol)
    if args.command == "sturm":
        return cmd_sturm(args.expr)
    return cmd_classify(args.expr, args.width)


def _emit(report: dict, as_json: bool, stream=None):
    stream = stream or sys.stdout
    if as_json:
        stream.write(json.dumps(report, indent=2) + "\n")
    else:
        stream.write(render_human(report) + "\n")


def _batch(args) -> int:
    exprs = _read_batch(args.batch)
    reports, code = [], EXIT_OK
    for text in exprs:
        try:
            reports.append(cmd_analyze(text, args.width, args.sturm))
        except InterlaceError as err:
            rep = error_report("analyze", err)
            rep["input"] = text
            reports.append(rep)
            code = code or exit_code(err)
    if args.json:
        _emit({"schema": SCHEMA, "command": "analyze", "batch": reports}, True)
    else:
        blocks = [f"[{r['input']}]\n{render_human(r)}" for r in reports]
        sys.stdout.write("\n\n".join(blocks) + "\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            if (args.expr is None) == (args.batch is None):
                parser.error("analyze needs exactly one of EXPR or --batch")
            if args.batch is not None:
                return _batch(args)
        report = _run(args)
    except InterlaceError as err:
        rep = error_report(args.command, err)
        if args.json:
            _emit(rep, True)
        else:
            _emit(rep, False, sys.stderr)
        return exit_code(err)
    except OSError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_PRECONDITION
    _emit(report, args.json)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
