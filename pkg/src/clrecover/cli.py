"""Command-line front end: ``clrecover <command> [options]``.

Every command writes one JSON document (to ``--output`` or stdout) that
carries the package version.  Exit codes: 0 success, 2 usage or input
error, 3 polynomial syntax error, 4 resource limit, 5 verification failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .chowlam import (Parametrization, VarietyIdeal, chow_lam_ideal, chow_lam_parametric, dual_variety,
                      membership_oracle, recovery_ideal, sweep_ideal)
from .checks import EXAMPLES, load_example, run_check
from .grassmann import GrassmannContext, SubspaceMatrix
from .groebner import DEFAULT_TERM_BUDGET, ResourceLimit
from .poly import PolyError, PolyRing, PolySyntaxError
from .schubert import recovered_components

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SYNTAX = 3
EXIT_RESOURCE = 4
EXIT_VERIFY = 5

log = logging.getLogger("clrecover")


class InputError(Exception):
    pass


def _load_input(args) -> dict:
    if args.input is None:
        return {}
    text = args.input
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
    else:
        path = Path(text)
        if not path.exists():
            # fall back to a built-in example of that name
            try:
                doc = load_example(path.stem)
            except FileNotFoundError:
                raise InputError(f"no such input file: {text}") from None
        else:
            doc = json.loads(path.read_text())
    return doc


def _ctx(args, doc: dict) -> GrassmannContext:
    vals = {}
    for key in ("k", "n", "r"):
        v = getattr(args, key, None)
        if v is None:
            v = doc.get(key)
        if v is None:
            raise InputError(f"missing {key} (flag --{key} or input field)")
        vals[key] = int(v)
    return GrassmannContext(**vals)


def _chow_lam(args, doc: dict):
    ctx = _ctx(args, doc)
    if "parametrization" in doc:
        return chow_lam_parametric(Parametrization.from_json(doc["parametrization"]), ctx,
                                   budget=args.budget_terms)
    if "variety" in doc:
        V = VarietyIdeal.from_strings(ctx, doc["variety"]["generators"])
        return chow_lam_ideal(V, budget=args.budget_terms)
    raise InputError("input needs a 'variety' or 'parametrization' field")


def cmd_chowlam(args, doc):
    return _chow_lam(args, doc).to_json()


def cmd_recover(args, doc):
    R = _chow_lam(args, doc)
    if not R.is_hypersurface:
        return {"chow_lam": R.to_json(), "recovery": None,
                "note": "Chow–Lam locus is not a hypersurface; nothing to recover"}
    W = recovery_ideal(R, budget=args.budget_terms, reduce_kernel=args.reduce_kernel,
                       include_plucker=args.include_plucker)
    return {"chow_lam": R.to_json(), "recovery": W.to_json()}


def cmd_sweep(args, doc):
    ctx = _ctx(args, doc)
    if "variety" not in doc:
        raise InputError("sweep needs a 'variety' field")
    V = VarietyIdeal.from_strings(ctx, doc["variety"]["generators"])
    return {"sweep": sweep_ideal(V, budget=args.budget_terms).to_json()}


def cmd_dual(args, doc):
    try:
        spec = doc["quadric"] if "quadric" in doc else doc
        ring = PolyRing(spec["ring"])
        f = ring.parse(spec["polynomial"])
    except KeyError as e:
        raise InputError(f"dual needs 'ring' and 'polynomial' fields (missing {e})") from None
    return {"dual": dual_variety(f, budget=args.budget_terms).to_json()}


def cmd_oracle(args, doc):
    ctx = _ctx(args, doc)
    if "variety" not in doc or "point" not in doc:
        raise InputError("oracle needs 'variety' and 'point' fields")
    V = VarietyIdeal.from_strings(ctx, doc["variety"]["generators"])
    P = SubspaceMatrix.from_json(doc["point"])
    verdict = membership_oracle(P, V, trials=args.trials, seed=args.seed, budget=args.budget_terms)
    return {"verdict": verdict, "trials": args.trials}


def cmd_predict(args, doc):
    k = args.k if args.k is not None else doc.get("k")
    i = args.i if args.i is not None else doc.get("i")
    if k is None or i is None:
        raise InputError("predict needs --k and --i")
    return {"k": k, "i": i, "rows": [p.to_json() for p in recovered_components(int(k), int(i))]}


def cmd_verify(args, doc):
    if args.all:
        names = list(EXAMPLES)
    elif args.example:
        names = [args.example]
    else:
        raise InputError("verify needs --example NAME or --all")
    results = []
    for name in names:
        for res in run_check(name, seed=args.seed):
            print(res.line(), file=sys.stderr)
            results.append(res)
    passed = all(r.passed for r in results)
    summary = {"passed": sum(r.passed for r in results), "failed": sum(not r.passed for r in results)}
    return {"examples": names, "results": [r.to_json() for r in results], "summary": summary,
            "status": "PASS" if passed else "FAIL"}


COMMANDS = {
    "chowlam": cmd_chowlam, "recover": cmd_recover, "sweep": cmd_sweep, "dual": cmd_dual,
    "oracle": cmd_oracle, "predict": cmd_predict, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clrecover", description="Chow–Lam forms and recovered varieties")
    p.add_argument("--version", action="version", version=f"clrecover {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--input", help="JSON file, inline JSON, or a built-in example name")
        s.add_argument("--output", help="write the JSON result here instead of stdout")
        s.add_argument("--k", type=int)
        s.add_argument("--n", type=int)
        s.add_argument("--r", type=int)
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--budget-terms", type=int, default=DEFAULT_TERM_BUDGET)
        s.add_argument("--trials", type=int, default=5)
        s.add_argument("-v", "--verbose", action="store_true")
        if name == "predict":
            s.add_argument("--i", type=int)
        if name == "recover":
            s.add_argument("--reduce-kernel", action="store_true",
                           help="reduce modulo the Plücker relations of the kernel first")
            s.add_argument("--include-plucker", action="store_true",
                           help="add the Plücker relations of P to the recovered ideal")
        if name == "verify":
            s.add_argument("--example", choices=EXAMPLES)
            s.add_argument("--all", action="store_true")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    code = EXIT_OK
    try:
        doc = _load_input(args)
        result = COMMANDS[args.command](args, doc)
        if args.command == "verify" and result["status"] != "PASS":
            code = EXIT_VERIFY
    except PolySyntaxError as e:
        print(f"syntax error: {e}", file=sys.stderr)
        return EXIT_SYNTAX
    except ResourceLimit as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except json.JSONDecodeError as e:
        print(f"invalid JSON input: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InputError, PolyError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    doc_out = {"clrecover_version": __version__, "command": args.command, "seed": args.seed,
               "result": result}
    text = json.dumps(doc_out, indent=2, sort_keys=True, default=str) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
