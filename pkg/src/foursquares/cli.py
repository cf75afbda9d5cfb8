"""Command-line interface.

Every command prints one JSON envelope on stdout:
``{"command", "inputs", "result", "meta"}``.  Exit codes: 0 success,
1 no witness / check failed, 2 invalid input, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__, _kernels, oracle
from .arith import is_perfect_square, is_prime, ord_p
from .errors import CapacityError, FourSquaresError, ShapeViolationError
from .lattice import (
    admissible_mu,
    genus_equals_spinor_genus,
    local_represents,
    spinor_places,
)
from .localfield import INFINITY, DiagonalSpace, Place, anisotropic_places
from .solver import solve, validate_pair, verify

EXIT_OK, EXIT_NO_WITNESS, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2, 3


@dataclass
class OutputEnvelope:
    command: str
    inputs: dict[str, Any]
    result: Any
    meta: dict[str, Any] = field(default_factory=dict)

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "OutputEnvelope":
        data = json.loads(text)
        return cls(data["command"], data["inputs"], data["result"], data.get("meta", {}))


class CommandFailed(Exception):
    def __init__(self, code: int, result: Any):
        super().__init__(code)
        self.code = code
        self.result = result


def _decomposition(dec) -> dict[str, Any] | None:
    if dec is None:
        return None
    return {"n": dec.n, "x": dec.x, "y": dec.y, "z": dec.z, "w": dec.w,
            "m": dec.m, "delta": dec.delta, "path": dec.path}


def _pair_or_fail(a: int, b: int):
    try:
        return validate_pair(a, b)
    except ShapeViolationError as exc:
        raise CommandFailed(EXIT_INVALID, {
            "error": "shape-violation",
            "message": str(exc),
            "factorization": [list(f) for f in exc.factorization.factors],
        }) from exc
    except ValueError as exc:
        kind = "not-coprime" if "gcd" in str(exc) else "invalid-pair"
        raise CommandFailed(EXIT_INVALID, {"error": kind, "message": str(exc)}) from exc


def cmd_decompose(args, meta) -> dict[str, Any]:
    pair = _pair_or_fail(args.a, args.b)
    if args.n < 0:
        raise CommandFailed(EXIT_INVALID, {"error": "invalid-input", "message": "n must be >= 0"})
    outcome = solve(pair, args.n, method=args.method)
    meta["solver_paths"] = {outcome.result.path if outcome.ok else "none": 1}
    result = {
        "pair": {"a": args.a, "b": args.b, "c": pair.c, "shape": pair.shape},
        "decomposition": _decomposition(outcome.result) if outcome.ok else "none",
        "verified": bool(outcome.ok and verify(pair, outcome.result)),
        "attempts": [{"m": m, "reason": r} for m, r in outcome.attempts],
    }
    if not outcome.ok:
        raise CommandFailed(EXIT_NO_WITNESS, result)
    return result


def cmd_scan(args, meta) -> dict[str, Any]:
    if args.a < 1 or args.b < 1 or args.n_max < 1:
        raise CommandFailed(EXIT_INVALID, {"error": "invalid-input",
                                           "message": "a, b and n-max must be positive"})
    report = oracle.scan_failures(args.a, args.b, args.n_max, jobs=args.jobs)
    meta["scan_seconds"] = round(report.elapsed, 6)
    return {
        "pair": list(report.pair),
        "n_max": report.n_max,
        "failures": report.failures,
        "witness_sample": {str(n): _decomposition(d) for n, d in report.witness_sample.items()},
    }


def _dyadic_residues(t: int) -> dict[str, Any]:
    return {
        "ord2": None if t == 0 else ord_p(2, t),
        "mod4": t % 4, "mod8": t % 8, "mod16": t % 16, "mod64": t % 64,
    }


def _report_places(pair) -> list[Place]:
    places = [INFINITY, Place(2)]
    if pair.p is not None:
        places.append(Place(pair.p))
    q = 3
    while pair.c % q == 0 or not is_prime(q):
        q += 2
    places.append(Place(q))
    return places


def cmd_local_report(args, meta) -> dict[str, Any]:
    pair = _pair_or_fail(args.a, args.b)
    t = pair.c * args.n - args.m * args.m
    lattice = pair.lattice
    reports = []
    for v in _report_places(pair):
        rep = local_represents(lattice, v, t)
        reports.append({"place": str(v), "representable": rep.representable,
                        "reason": rep.reason.value})
    admissible = None
    if is_perfect_square(args.m) and args.n > 0 and ord_p(2, args.n) <= 3:
        admissible = admissible_mu(pair.c, args.n, args.m)
    return {
        "lattice": str(lattice),
        "t": t,
        "dyadic_class": _dyadic_residues(t),
        "places": reports,
        "admissible_mu": admissible,
    }


def cmd_lattice_report(args, meta) -> dict[str, Any]:
    pair = _pair_or_fail(args.a, args.b)
    lattice = pair.lattice
    aniso = anisotropic_places(DiagonalSpace(lattice.d1, lattice.d2, lattice.d3))
    return {
        "lattice": str(lattice),
        "c": pair.c,
        "shape": pair.shape,
        "spinor_norm_groups": {str(p): g.value for p, g in spinor_places(lattice).items()},
        "gen_equals_spn": genus_equals_spinor_genus(lattice),
        "anisotropic_finite_places": sorted(v.prime for v in aniso if not v.is_infinite),
        "anisotropic_at_infinity": INFINITY in aniso,
    }


def cmd_corpus(args, meta) -> dict[str, Any]:
    bound = args.bound
    if bound < 0:
        raise CommandFailed(EXIT_INVALID, {"error": "invalid-input", "message": "bound must be >= 0"})
    if args.check == "dickson":
        gap = oracle.dickson_gap_check(bound)
        expected = [15] if bound >= 15 else []
        result = {"check": "dickson", "gap": gap, "pass": gap == expected}
    elif args.check == "cauchy":
        bad = oracle.cauchy_check(bound)
        result = {"check": "cauchy", "violations": [list(p) for p in bad], "pass": not bad}
    elif args.check == "family310":
        rows = oracle.counterexample_family_check(bound)
        result = {"check": "family310",
                  "rows": [{"r": r, "n": n, "verdict": v} for r, n, v in rows],
                  "pass": all(v for _, _, v in rows)}
    else:
        missing = oracle.lagrange_check(bound)
        result = {"check": "lagrange", "missing": missing, "pass": not missing}
    if not result["pass"]:
        raise CommandFailed(EXIT_NO_WITNESS, result)
    return result


COMMANDS = {
    "decompose": cmd_decompose,
    "scan": cmd_scan,
    "local-report": cmd_local_report,
    "lattice-report": cmd_lattice_report,
    "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="foursquares", allow_abbrev=False)
    parser.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", allow_abbrev=False)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["constructive", "oracle", "hybrid"], default="hybrid")

    p = sub.add_parser("scan", allow_abbrev=False)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("local-report", allow_abbrev=False)
    for name in ("a", "b", "n", "m"):
        p.add_argument(f"--{name}", type=int, required=True)

    p = sub.add_parser("lattice-report", allow_abbrev=False)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    p = sub.add_parser("corpus", allow_abbrev=False)
    p.add_argument("--check", choices=["dickson", "cauchy", "family310", "lagrange"], required=True)
    p.add_argument("--bound", type=int, required=True)

    for sp in sub.choices.values():
        sp.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    return parser


def _render(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return lines
    if isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            return [pad + ", ".join(json.dumps(v) for v in value)]
        lines = []
        for v in value:
            lines.append(f"{pad}-")
            lines.extend(_render(v, indent + 1))
        return lines
    return [pad + json.dumps(value)]


def run(argv: list[str] | None = None) -> tuple[int, OutputEnvelope]:
    args = build_parser().parse_args(argv)
    inputs = {k: v for k, v in vars(args).items() if k not in ("command", "pretty")}
    meta: dict[str, Any] = {"version": __version__, "backend": _kernels.BACKEND}
    start = time.perf_counter()
    code = EXIT_OK
    try:
        result = COMMANDS[args.command](args, meta)
    except CommandFailed as exc:
        code, result = exc.code, exc.result
    except CapacityError as exc:
        code, result = EXIT_CAPACITY, {"error": "capacity", "message": str(exc)}
    except (FourSquaresError, ValueError) as exc:
        code, result = EXIT_INVALID, {"error": "invalid-input", "message": str(exc)}
    meta["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return code, OutputEnvelope(args.command, inputs, result, meta)


def main(argv: list[str] | None = None) -> int:
    code, env = run(argv)
    pretty = "--pretty" in (sys.argv[1:] if argv is None else argv)
    if pretty:
        print("\n".join(_render(asdict(env))))
    else:
        print(env.to_json())
    if code != EXIT_OK and isinstance(env.result, dict) and "message" in env.result:
        print(env.result["message"], file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
