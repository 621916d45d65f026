"""Command-line front end.

Subcommands: info (invariants only), check (theorem audits), gen (write a
generator's facet file), batch (check every facet file in a directory).
Exit codes: 0 all selected checks hold, 1 a check failed, 2 input error.
Every number in a JSON report is a decimal string or a reduced "p/q"
rational; nothing is ever emitted as floating point.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from .checks import check_main_formula, ds_residuals, is_eulerian, proof_trace
from .complexes import SimplicialComplex
from .errors import ConstructionError, InputError
from .facetio import FORMATS, detect_format, load_complex, write_facets
from .generators import GeneratorSpec, build
from .invariants import euler_characteristic, f_vector, h_vector

SCHEMA_VERSION = 1
THEOREM_CHECKS = ("eulerian", "ds", "formula", "proof")
CHECK_NAMES = THEOREM_CHECKS + ("flag",)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"-?[0-9]+")


# -- generator expression grammar: name[:p][(arg, arg)] -----------------------


def parse_generator_expr(text: str) -> GeneratorSpec:
    spec, pos = _parse_expr(text, 0)
    pos = _skip_ws(text, pos)
    if pos != len(text):
        raise InputError(f"generator expression: unexpected {text[pos]!r} at column {pos + 1}")
    return spec


def _skip_ws(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_expr(text, pos):
    pos = _skip_ws(text, pos)
    m = _NAME.match(text, pos)
    if not m:
        raise InputError(f"generator expression: name expected at column {pos + 1}")
    name, pos = m.group(), m.end()
    params = []
    while pos < len(text) and text[pos] == ":":
        m = _INT.match(text, pos + 1)
        if not m:
            raise InputError(f"generator expression: integer expected at column {pos + 2}")
        params.append(int(m.group()))
        pos = m.end()
    args = []
    ahead = _skip_ws(text, pos)
    if ahead < len(text) and text[ahead] == "(":
        pos = ahead + 1
        while True:
            spec, pos = _parse_expr(text, pos)
            args.append(spec)
            pos = _skip_ws(text, pos)
            if pos < len(text) and text[pos] == ",":
                pos += 1
                continue
            if pos < len(text) and text[pos] == ")":
                pos += 1
                break
            raise InputError(
                f"generator expression: ',' or ')' expected at column {pos + 1}"
            )
    return GeneratorSpec(name, tuple(params), tuple(args)), pos


# -- exact serialization -------------------------------------------------------


def _istr(n: int) -> str:
    return str(int(n))


def _qstr(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _witness_json(K, witness):
    if witness is None:
        return None
    if isinstance(witness, tuple):
        return list(K.labels_of(witness))
    if isinstance(witness, int):
        return _istr(witness)
    return str(witness)


def _eulerian_section(K, report):
    section = {"holds": report.holds, "witness": _witness_json(K, report.witness)}
    if not report.holds:
        detail = {"reason": str(report.values.get("reason", ""))}
        for key in ("chi_link", "expected", "facet_dim"):
            if key in report.values:
                detail[key] = _istr(report.values[key])
        section["detail"] = detail
    if report.failures:
        section["failures"] = [
            {
                "face": list(K.labels_of(rec["face"])),
                "kind": rec["kind"],
                **{
                    k: _istr(v)
                    for k, v in rec.items()
                    if k in ("chi_link", "expected", "facet_dim", "complex_dim")
                },
            }
            for rec in report.failures
        ]
    return section


def build_document(K, provenance, include, gate, exhaustive=False, strict=()):
    """Assemble a ReportDocument dict plus the overall pass flag.

    include: checks to run; gate: subset that decides the pass flag.
    Checks named in strict raise InputError when their preconditions fail;
    the rest are recorded under "skipped" instead.
    """
    doc = {
        "schema_version": SCHEMA_VERSION,
        "input": provenance,
        "dim": _istr(K.dim),
        "f_vector": [_istr(n) for n in f_vector(K)],
        "h_vector": [_istr(n) for n in h_vector(K)],
        "chi": _istr(euler_characteristic(K)),
        "is_pure": K.is_pure(),
    }
    results = {}
    skipped = {}

    def unavailable(name, reason):
        if name in strict:
            raise InputError(f"check {name!r}: {reason}")
        skipped[name] = reason

    if "flag" in include:
        rep = K.is_flag()
        doc["is_flag"] = {"holds": rep.holds, "witness": _witness_json(K, rep.witness)}
        results["flag"] = rep.holds if "flag" in gate else None
    if "eulerian" in include:
        rep = is_eulerian(K, exhaustive=exhaustive)
        doc["is_eulerian"] = _eulerian_section(K, rep)
        results["eulerian"] = rep.holds
    if "ds" in include:
        if K.is_empty():
            unavailable("ds", "empty complex")
        else:
            rows, rep = ds_residuals(K)
            doc["ds_rows"] = [
                {"i": _istr(r.i), "lhs": _istr(r.lhs), "rhs": _istr(r.rhs), "holds": r.holds}
                for r in rows
            ]
            results["ds"] = rep.holds
    if "formula" in include:
        if K.is_empty():
            unavailable("formula", "empty complex")
        else:
            rep = check_main_formula(K)
            doc["main_formula"] = {
                "lhs": _istr(rep.values["lhs"]),
                "rhs": _qstr(rep.values["rhs"]),
                "scaled_lhs": _istr(rep.values["scaled_lhs"]),
                "scaled_rhs": _istr(rep.values["scaled_rhs"]),
                "holds": rep.holds,
                "parity_warning": rep.values["parity_warning"],
            }
            # the identity is only asserted in even dimension; under the
            # default selection an odd-dimensional report is informational
            gates = "formula" in strict or K.dim % 2 == 0
            results["formula"] = rep.holds if gates else None
    if "proof" in include:
        if K.is_empty():
            unavailable("proof", "empty complex")
        elif K.dim % 2 != 0:
            unavailable("proof", f"dimension {K.dim} is odd")
        else:
            rep = proof_trace(K)
            doc["proof_trace"] = {
                "A": _istr(rep.values["A"]),
                "B": _istr(rep.values["B"]),
                "C": _istr(rep.values["C"]),
                "P": _istr(rep.values["P"]),
                "holds": rep.holds,
            }
            results["proof"] = rep.holds

    if skipped:
        doc["skipped"] = skipped
    ok = all(v for name, v in results.items() if name in gate and v is not None)
    if gate:
        doc["checks_passed"] = ok
    return doc, ok


# -- human-readable rendering --------------------------------------------------


def _use_color(stream) -> bool:
    return (
        hasattr(stream, "isatty")
        and stream.isatty()
        and not os.environ.get("NO_COLOR")
    )


def _mark(ok: bool, color: bool) -> str:
    word = "ok" if ok else "FAIL"
    if not color:
        return word
    return f"\x1b[32m{word}\x1b[0m" if ok else f"\x1b[31m{word}\x1b[0m"


def _vec(values) -> str:
    return "(" + ", ".join(values) + ")"


def _wit(witness) -> str:
    if witness is None:
        return ""
    if isinstance(witness, list):
        return "{" + ",".join(witness) + "}"
    return str(witness)


def render_text(doc, color=False) -> str:
    lines = []
    src = doc["input"]
    if src["kind"] == "generator":
        lines.append(f"input: generator {src['expr']}")
    else:
        lines.append(f"input: file {src['path']} ({src['format']})")
    lines.append(f"dim: {doc['dim']}")
    lines.append(f"f-vector: {_vec(doc['f_vector'])}")
    lines.append(f"h-vector: {_vec(doc['h_vector'])}")
    lines.append(f"chi: {doc['chi']}")
    lines.append(f"pure: {'yes' if doc['is_pure'] else 'no'}")
    if "is_flag" in doc:
        sec = doc["is_flag"]
        line = f"flag: {'yes' if sec['holds'] else 'no'}"
        if sec["witness"]:
            line += f"   non-face clique: {_wit(sec['witness'])}"
        lines.append(line)
    if "is_eulerian" in doc:
        sec = doc["is_eulerian"]
        line = f"eulerian: {_mark(sec['holds'], color)}"
        if not sec["holds"]:
            detail = sec.get("detail", {})
            line += f"   witness: {_wit(sec['witness'])}"
            if detail.get("reason") == "bad_link":
                line += f" (link chi {detail['chi_link']}, expected {detail['expected']})"
            elif detail.get("reason") == "not_pure":
                line += f" (facet of dimension {detail['facet_dim']})"
            elif detail.get("reason"):
                line += f" ({detail['reason']})"
        lines.append(line)
        for rec in sec.get("failures", []):
            extra = ", ".join(
                f"{k} {rec[k]}" for k in ("chi_link", "expected", "facet_dim") if k in rec
            )
            lines.append(f"    failure: {_wit(rec['face'])} [{rec['kind']}] {extra}".rstrip())
    if "ds_rows" in doc:
        rows = doc["ds_rows"]
        all_hold = all(r["holds"] for r in rows)
        lines.append(f"dehn-sommerville: {_mark(all_hold, color)}")
        width = max(len(r["lhs"]) for r in rows)
        width = max(width, max(len(r["rhs"]) for r in rows), len("h_(d-i)-h_i"))
        lines.append(f"    i | {'h_(d-i)-h_i':>{width}} | {'expected':>{width}} | holds")
        for r in rows:
            lines.append(
                f"    {r['i']} | {r['lhs']:>{width}} | {r['rhs']:>{width}} | {_mark(r['holds'], color)}"
            )
    if "main_formula" in doc:
        sec = doc["main_formula"]
        line = (
            f"main-formula: {_mark(sec['holds'], color)}   "
            f"chi = {sec['lhs']}, half-power sum = {sec['rhs']}, "
            f"scaled {sec['scaled_lhs']} vs {sec['scaled_rhs']}"
        )
        if sec["parity_warning"]:
            line += "   [odd dimension: identity not expected to hold]"
        lines.append(line)
    if "proof_trace" in doc:
        sec = doc["proof_trace"]
        lines.append(
            f"proof-trace: {_mark(sec['holds'], color)}   "
            f"A = {sec['A']}, B = {sec['B']}, C = {sec['C']}, P = {sec['P']}"
        )
    for name, reason in doc.get("skipped", {}).items():
        lines.append(f"{name}: skipped ({reason})")
    if "checks_passed" in doc:
        word = "PASS" if doc["checks_passed"] else "FAIL"
        if color:
            word = f"\x1b[32m{word}\x1b[0m" if doc["checks_passed"] else f"\x1b[31m{word}\x1b[0m"
        lines.append(f"result: {word}")
    return "\n".join(lines)


# -- commands -------------------------------------------------------------------


def _add_input_args(sub):
    sub.add_argument("--gen", metavar="EXPR", help="generator expression instead of a file")
    sub.add_argument(
        "--format", choices=FORMATS, help="force the input file format (default: by extension)"
    )


def _load_input(args):
    if args.gen and args.path:
        raise InputError("give either a facet file or --gen, not both")
    if args.gen:
        spec = parse_generator_expr(args.gen)
        return build(spec), {"kind": "generator", "expr": spec.to_expr()}
    if not args.path:
        raise InputError("no input: give a facet file or --gen EXPR")
    fmt = args.format or detect_format(args.path)
    K = load_complex(args.path, fmt)
    return K, {"kind": "file", "path": str(args.path), "format": fmt}


def _split_operands(args):
    """First operand is the input path unless --gen is given or it names a
    check; the rest select checks."""
    operands = list(args.operands or [])
    known = set(CHECK_NAMES) | {"all"}
    if args.gen or (operands and operands[0] in known):
        args.path = None
        args.which = operands
    else:
        args.path = operands[0] if operands else None
        args.which = operands[1:]


def _emit(doc, as_json):
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        print(render_text(doc, color=_use_color(sys.stdout)))


def _selection(args):
    names = set(args.which or [])
    unknown = names - set(CHECK_NAMES) - {"all"}
    if unknown:
        raise InputError(
            f"unknown check {sorted(unknown)[0]!r}; choose from "
            f"{', '.join(CHECK_NAMES + ('all',))}"
        )
    explicit = names - {"all"}
    if getattr(args, "all", False) or "all" in names or not explicit:
        selected = explicit | set(THEOREM_CHECKS)
    else:
        selected = explicit
    return selected, explicit


def cmd_info(args) -> int:
    args.path = args.operands[0] if args.operands else None
    if len(args.operands or []) > 1:
        raise InputError("info takes a single facet file")
    K, prov = _load_input(args)
    doc, _ = build_document(K, prov, include={"flag"}, gate=set())
    _emit(doc, args.json)
    return 0


def cmd_check(args) -> int:
    _split_operands(args)
    K, prov = _load_input(args)
    selected, explicit = _selection(args)
    doc, ok = build_document(
        K, prov, include=selected, gate=selected, exhaustive=args.exhaustive, strict=explicit
    )
    _emit(doc, args.json)
    return 0 if ok else 1


def cmd_gen(args) -> int:
    spec = parse_generator_expr(args.expr)
    K = build(spec)
    write_facets(K, args.output, args.format)
    print(
        f"wrote {len(K.facets)} facets ({K.num_faces()} faces, dim {K.dim}) to {args.output}",
        file=sys.stderr,
    )
    return 0


def cmd_batch(args) -> int:
    dirpath = Path(args.dir)
    if not dirpath.is_dir():
        raise InputError(f"{args.dir}: not a directory")
    files = sorted(
        p for p in dirpath.iterdir() if p.is_file() and p.suffix in (".facets", ".txt", ".json")
    )
    outdir = Path(args.out) if args.out else dirpath / "reports"
    selected, explicit = _selection(args)

    rows = []
    n_pass = n_fail = n_error = 0
    for path in files:
        try:
            K = load_complex(path)
            prov = {"kind": "file", "path": str(path), "format": detect_format(path)}
            doc, ok = build_document(
                K,
                prov,
                include=selected,
                gate=selected,
                exhaustive=args.exhaustive,
                strict=explicit,
            )
            outdir.mkdir(parents=True, exist_ok=True)
            report_path = outdir / (path.name + ".report.json")
            report_path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
            if ok:
                n_pass += 1
                rows.append((path.name, "pass", ""))
            else:
                n_fail += 1
                failed = [n for n in selected if _check_failed(doc, n, explicit)]
                rows.append((path.name, "FAIL", ",".join(sorted(failed))))
        except (InputError, ConstructionError) as e:
            n_error += 1
            rows.append((path.name, "error", str(e)))

    width = max((len(r[0]) for r in rows), default=4)
    for name, status, detail in rows:
        line = f"{name:<{width}}  {status}"
        if detail:
            line += f"  {detail}"
        print(line)
    print(f"{len(files)} file(s): {n_pass} passed, {n_fail} failed, {n_error} error(s)")

    if files and n_error == len(files):
        return 2
    if n_fail or n_error:
        return 1
    return 0


def _check_failed(doc, name, strict=()) -> bool:
    key = {
        "eulerian": "is_eulerian",
        "ds": "ds_rows",
        "formula": "main_formula",
        "proof": "proof_trace",
        "flag": "is_flag",
    }[name]
    if key not in doc:
        return False
    section = doc[key]
    if key == "ds_rows":
        return not all(r["holds"] for r in section)
    if key == "main_formula" and section["parity_warning"] and name not in strict:
        return False
    return not section["holds"]


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerian-kit",
        description=(
            "Exact f-vector, h-vector, and Euler-characteristic computations for "
            "finite simplicial complexes, with Eulerian-manifold, Dehn-Sommerville, "
            "and even-dimension formula audits."
        ),
        epilog="exit codes: 0 all selected checks hold, 1 a check failed, 2 input error",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="invariants of a complex, no theorem checks")
    p_info.add_argument("operands", nargs="*", metavar="PATH", help="facet file (plain or json)")
    _add_input_args(p_info)
    p_info.add_argument("--json", action="store_true", help="emit a JSON report document")
    p_info.set_defaults(func=cmd_info)

    p_check = sub.add_parser("check", help="run theorem checks and report exactly")
    p_check.add_argument(
        "operands",
        nargs="*",
        metavar="[PATH] [WHICH ...]",
        help=f"facet file, then checks to run: {', '.join(CHECK_NAMES + ('all',))} (default: all)",
    )
    _add_input_args(p_check)
    p_check.add_argument(
        "--all", action="store_true", help="run eulerian, ds, formula, and proof"
    )
    p_check.add_argument(
        "--exhaustive", action="store_true", help="collect every failure, not just the first"
    )
    p_check.add_argument("--json", action="store_true", help="emit a JSON report document")
    p_check.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("gen", help="write a generator's facets to a file")
    p_gen.add_argument("expr", help="generator expression, e.g. 'suspension(torus7)'")
    p_gen.add_argument("-o", "--output", required=True, help="output path")
    p_gen.add_argument("--format", choices=FORMATS, default="plain", help="output format")
    p_gen.set_defaults(func=cmd_gen)

    p_batch = sub.add_parser("batch", help="check every facet file in a directory")
    p_batch.add_argument("dir", help="directory of .facets/.txt/.json files")
    p_batch.add_argument(
        "which",
        nargs="*",
        metavar="WHICH",
        help="checks to run per file (default: all)",
    )
    p_batch.add_argument("--all", action="store_true", help="run all theorem checks")
    p_batch.add_argument("--exhaustive", action="store_true", help="collect every failure")
    p_batch.add_argument(
        "-o", "--out", help="directory for per-file JSON reports (default: DIR/reports)"
    )
    p_batch.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ConstructionError as e:
        print(f"internal construction error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
