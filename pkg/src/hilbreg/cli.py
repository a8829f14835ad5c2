"""Command line interface: ``python -m hilbreg <command> [file] [flags]``.

Output is one JSON document ``{"command", "input", "result", "warnings"}``
(or CSV with ``--csv`` where tabular).  Exit codes: 0 success, 1 usage
error, 2 computation error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from importlib import resources
from typing import List, Optional

from . import bounds as bnd
from .enumerate import brute_force_hf_oracle, census_rows, enumerate_hilbert_functions
from .errors import AlgebraError, ParseError
from .groebner import gin, initial_ideal_of
from .hilbert import (
    gotzmann_representation,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
)
from .monideal import saturate
from .parse import IdealDocument, parse_ideal
from .regularity import (
    as_monomial_ideal,
    check_mumford,
    h0_dims,
    h0_dims_monomial,
    lex_ideal,
    regularity,
)

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_VERIFY = 0, 1, 2, 3
COMMANDS = ("hf", "series", "reg", "gin", "lex", "gotzmann", "sat", "bounds",
            "enumerate", "check-mumford", "verify-paper")
_SAFE_INT = 2 ** 53


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def jsonable(obj):
    """Exact values for JSON: rationals and oversized ints become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < _SAFE_INT else str(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _monomial_model(doc: IdealDocument, order: str) -> "object":
    I = doc.ideal
    if I.is_monomial():
        return as_monomial_ideal(I)
    return initial_ideal_of(I, order)


def _hf_payload(J, upto):
    series = hilbert_series(J)
    hf = hilbert_function(series, upto)
    p = hilbert_polynomial(series)
    return {
        "values": hf.values,
        "embdim": hf.embdim,
        "agreement_index": hf.agreement_index,
        "polynomial": [str(c) for c in p.coefficients],
        "polynomial_text": p.poly.to_str("n"),
    }


def cmd_hf(doc, args, warnings):
    J = _monomial_model(doc, args.order)
    upto = args.upto if args.upto is not None else 12
    return _hf_payload(J, upto)


def cmd_series(doc, args, warnings):
    J = _monomial_model(doc, args.order)
    s = hilbert_series(J)
    return {
        "numerator": s.numerator,
        "denominator_exponent": s.nvars,
        "reduced_numerator": s.reduced,
        "dim": s.dim,
        "multiplicity": s.multiplicity,
        "length": s.length,
        "dimension_zero": s.dimension_zero,
    }


def cmd_reg(doc, args, warnings):
    rep = regularity(doc.ideal, seed=args.seed, trials=args.trials)
    warnings.extend(rep.warnings)
    return rep.as_dict()


def cmd_gin(doc, args, warnings):
    G = gin(doc.ideal, seed=args.seed, trials=args.trials)
    warnings.extend(G.warnings)
    return {
        "gin": [list(g) for g in G.gin.gens],
        "gin_text": G.gin.to_str(),
        "trials_used": G.trials_used,
        "seed": G.seed,
        "borel_fixed": G.borel_fixed,
        "max_gen_degree": G.max_gen_degree,
    }


def cmd_lex(doc, args, warnings):
    J = _monomial_model(doc, args.order)
    L = lex_ideal(J)
    return {"lex": [list(g) for g in L.gens], "lex_text": L.to_str()}


def cmd_gotzmann(doc, args, warnings):
    J = _monomial_model(doc, args.order)
    rep = gotzmann_representation(hilbert_polynomial(hilbert_series(J)))
    return {"exponents": list(rep.exponents), "s": rep.s, "bound": rep.bound}


def cmd_sat(doc, args, warnings):
    I = doc.ideal
    if I.is_monomial():
        J, source = as_monomial_ideal(I), "input"
    else:
        J, source = gin(I, seed=args.seed, trials=args.trials).gin, "gin"
    S = saturate(J)
    upto = args.upto if args.upto is not None else 8
    return {
        "source": source,
        "saturation": [list(g) for g in S.gens],
        "saturation_text": S.to_str(),
        "h0_dims": h0_dims_monomial(J, upto),
    }


def cmd_bounds(args, warnings):
    if args.d is None or args.e is None:
        raise UsageError("bounds needs --d and --e")
    out = bnd.all_bounds(args.d, args.e)
    out["F_d"] = [str(c) for c in bnd.bound_polynomial("F", args.d).coefficients]
    out["Q_d"] = [str(c) for c in bnd.bound_polynomial("Q", args.d).coefficients]
    if args.t is not None:
        out["F_d(t)"] = bnd.bound_polynomial("F", args.d).value(args.t)
    return out


def cmd_enumerate(args, warnings):
    if args.r is None or args.m is None:
        raise UsageError("enumerate needs --r and --m")
    census = enumerate_hilbert_functions(args.r, args.m)
    out = {"r": args.r, "m": args.m, "count": len(census), "census": census_rows(census)}
    if args.oracle:
        out["oracle_equal"] = brute_force_hf_oracle(args.r, args.m) == census
    return out


def cmd_check_mumford(doc, args, warnings):
    rep = check_mumford(doc.ideal, seed=args.seed, trials=args.trials)
    if not rep.ok:
        warnings.append("INCONCLUSIVE")
    return rep.as_dict()


# ---------------------------------------------------------------------------
# fixtures

def load_fixtures() -> List[dict]:
    pkg = resources.files("hilbreg") / "fixtures"
    out = []
    for entry in sorted(pkg.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            out.append(json.loads(entry.read_text()))
    return out


def verify_fixture(fx: dict, seed: int = 0, trials: int = 3) -> dict:
    """Evaluate every expected value of a fixture; returns per-check results."""
    doc = parse_ideal(fx["document"])
    I = doc.ideal
    exp = fx["expected"]
    rep = regularity(I, seed=seed, trials=trials)
    results = {}

    def record(key, expected, actual):
        results[key] = {"expected": expected, "actual": actual, "ok": expected == actual}

    for key in ("reg", "g_reg", "dim", "mult", "embdim"):
        if key in exp:
            record(key, exp[key], getattr(rep, key))
    if "hf" in exp:
        model = as_monomial_ideal(I) if I.is_monomial() else initial_ideal_of(I)
        record("hf", exp["hf"], hilbert_function(model, len(exp["hf"]) - 1).values)
    if "h0" in exp:
        record("h0", exp["h0"], h0_dims(I, len(exp["h0"]) - 1, seed=seed, trials=trials))
    if exp.get("mumford"):
        record("mumford", True, check_mumford(I, seed=seed, trials=trials).ok)
    # Gotzmann bound on the geometric regularity holds for every algebra
    p = hilbert_polynomial(hilbert_series(rep.gin_used.gin if rep.gin_used else as_monomial_ideal(I)))
    g = gotzmann_representation(p)
    record("gotzmann", True, rep.g_reg <= g.bound)
    if exp.get("reduced_equidimensional") and rep.dim >= 1:
        reg_cap, embdim_cap = bnd.kleiman_bounds(rep.dim, rep.mult)
        record("kleiman", True, rep.reg <= reg_cap and rep.embdim <= embdim_cap)
    if exp.get("cm") and rep.dim == 1:
        record("one_dim_cm", True, rep.reg <= rep.mult - 1)
    return {"name": fx["name"], "kind": fx.get("kind"), "checks": results,
            "ok": all(r["ok"] for r in results.values())}


def cmd_verify_paper(args, warnings):
    rows = [verify_fixture(fx, seed=args.seed, trials=args.trials) for fx in load_fixtures()]
    failed = [r["name"] for r in rows if not r["ok"]]
    return {"fixtures": rows, "count": len(rows), "failed": failed, "ok": not failed}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex")
    common.add_argument("--char", type=int, default=None, dest="char")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--upto", type=int, default=None)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    parser = _Parser(prog="hilbreg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command")
    for name in ("hf", "series", "reg", "gin", "lex", "gotzmann", "sat", "check-mumford"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("file", nargs="?", default="-",
                        help="ideal document (default: standard input)")
    sp = sub.add_parser("bounds", parents=[common])
    sp.add_argument("--d", type=int)
    sp.add_argument("--e", type=int)
    sp.add_argument("--t", type=int)
    sp = sub.add_parser("enumerate", parents=[common])
    sp.add_argument("--r", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--oracle", action="store_true")
    sub.add_parser("verify-paper", parents=[common])
    return parser


_DOC_COMMANDS = {
    "hf": cmd_hf, "series": cmd_series, "reg": cmd_reg, "gin": cmd_gin, "lex": cmd_lex,
    "gotzmann": cmd_gotzmann, "sat": cmd_sat, "check-mumford": cmd_check_mumford,
}
_PLAIN_COMMANDS = {"bounds": cmd_bounds, "enumerate": cmd_enumerate,
                   "verify-paper": cmd_verify_paper}


def _to_csv(command, result) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if command == "enumerate":
        w.writerow(["prefix", "polynomial"])
        for row in result["census"]:
            w.writerow([" ".join(map(str, row["prefix"])), " ".join(row["polynomial"])])
    elif command == "hf":
        w.writerow(["n", "h"])
        for n, v in enumerate(result["values"]):
            w.writerow([n, v])
    else:
        raise UsageError(f"--csv is not available for {command}")
    return buf.getvalue()


def _read(path: str, stdin) -> str:
    if path == "-":
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def dispatch(argv: Optional[List[str]] = None, stdout=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    argv = sys.argv[1:] if argv is None else list(argv)
    warnings: List[str] = []
    input_text = None
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError(f"a command is required: {', '.join(COMMANDS)}")
        if args.trials < 2:
            raise UsageError("--trials must be at least 2")
        if args.command in _DOC_COMMANDS:
            try:
                text = _read(args.file, stdin)
            except OSError as exc:
                raise UsageError(str(exc)) from None
            doc = parse_ideal(text, characteristic=args.char)
            input_text = doc.to_text()
            result = _DOC_COMMANDS[args.command](doc, args, warnings)
        else:
            result = _PLAIN_COMMANDS[args.command](args, warnings)
    except (UsageError, ParseError) as exc:
        _emit(stdout, argv, input_text, None, warnings, error=str(exc))
        return EXIT_USAGE
    except (AlgebraError, ValueError) as exc:
        _emit(stdout, getattr(args, "command", None), input_text, None, warnings,
              error=f"{type(exc).__name__}: {exc}")
        return EXIT_COMPUTE
    if args.csv:
        try:
            stdout.write(_to_csv(args.command, result))
        except UsageError as exc:
            _emit(stdout, args.command, input_text, None, warnings, error=str(exc))
            return EXIT_USAGE
    else:
        _emit(stdout, args.command, input_text, result, warnings)
    if args.command == "verify-paper" and not result["ok"]:
        return EXIT_VERIFY
    if args.command == "check-mumford" and result["status"] != "verified":
        return EXIT_VERIFY
    return EXIT_OK


def _emit(stdout, command, input_text, result, warnings, error=None):
    if isinstance(command, list):
        command = next((a for a in command if a in COMMANDS), None)
    doc = {"command": command, "input": input_text, "result": jsonable(result),
           "warnings": warnings}
    if error is not None:
        doc["error"] = error
    stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def main() -> None:
    sys.exit(dispatch())
