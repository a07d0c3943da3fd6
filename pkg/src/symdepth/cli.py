"""Command-line interface.

Subcommands: ``depth`` (one depth with witness), ``scan`` (symbolic depth
function as CSV/JSON), ``verify`` (the acceptance claims), ``plan``
(decompose a step function into realizable building blocks).

Exit codes: 0 success, 1 verification mismatch, 2 input error,
3 mathematical precondition violation.

Ideals are entered as monomial strings over named variables
(``name`` or ``name^k`` joined by ``*``; ``1`` is the empty product), as a
JSON document, or as a named family.  JSON documents look like one of::

    {"vars": ["x","y"], "gens": ["x^2", "x*y"]}
    {"vars": [...], "components": [{"support": ["x","y"], "gens": [...]}]}
    {"family": {"name": "typeC", "params": {"m": 3, "d": 1}}}
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import verify as verify_mod
from .depth import (
    DepthReport,
    depth,
    depth_at_least_1,
    depth_at_least_2,
    depth_of_symbolic_power,
)
from .families import (
    assemble_mpq,
    example6_triple,
    mpq_depth,
    thm28_ideal,
    type_a_triple,
    type_b_triple,
    type_c_triple,
    MPQTriple,
)
from .ideals import (
    Decomposition,
    Exponents,
    MonomialIdeal,
    PreconditionError,
    PrimaryComponent,
    Ring,
    RingMismatchError,
    format_monomial,
    make_ideal,
    minimal_primes_squarefree,
)
from .stepfun import (
    decompose,
    evaluate,
    parse_step_function,
    plan_lines,
    realize,
    recipe_text,
    symbolic_depth_check_nodes,
)


class InputError(ValueError):
    """Malformed user input (monomial syntax, JSON shape, unknown names)."""


def parse_monomial(text: str, ring: Ring) -> Exponents:
    """Parse ``name(^int)?`` factors joined by ``*``; whitespace is ignored."""
    exps = [0] * ring.n
    pos = 0
    n = len(text)
    expect_factor = True
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        if text[pos] == "*":
            if expect_factor:
                raise InputError(f"unexpected '*' at position {pos} in {text!r}")
            expect_factor = True
            pos += 1
            continue
        if not expect_factor:
            raise InputError(f"missing '*' before position {pos} in {text!r}")
        if text[pos] == "1":
            pos += 1
            expect_factor = False
            continue
        if not (text[pos].isalpha() or text[pos] == "_"):
            raise InputError(f"expected a variable name at position {pos} in {text!r}")
        start = pos
        while pos < n and (text[pos].isalnum() or text[pos] == "_"):
            pos += 1
        name = text[start:pos]
        if name not in ring.names:
            raise InputError(
                f"unknown variable {name!r} at position {start} in {text!r}"
            )
        exponent = 1
        if pos < n and text[pos] == "^":
            pos += 1
            digits_start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if pos == digits_start:
                raise InputError(f"missing exponent at position {pos} in {text!r}")
            exponent = int(text[digits_start:pos])
        exps[ring.index(name)] += exponent
        expect_factor = False
    if expect_factor:
        raise InputError(f"trailing '*' or empty monomial in {text!r}")
    return tuple(exps)


def _parse_gens(texts, ring: Ring) -> MonomialIdeal:
    return make_ideal(ring, [parse_monomial(t, ring) for t in texts])


@dataclass
class Problem:
    """Resolved input: a plain ideal or a decomposition, plus its origin."""

    ideal: MonomialIdeal | None
    decomposition: Decomposition | None
    triple: MPQTriple | None
    label: str

    def require_decomposition(self) -> Decomposition:
        if self.decomposition is not None:
            return self.decomposition
        ideal = self.ideal
        if ideal is not None and ideal.is_squarefree and not (ideal.is_zero or ideal.is_unit):
            return minimal_primes_squarefree(ideal)
        raise PreconditionError(
            "symbolic powers need a decomposition (components, a family, or squarefree generators)"
        )


_FAMILY_PARAMS = {
    "typeA": ("m",),
    "typeB": ("m",),
    "typeC": ("m", "d"),
    "thm28": ("s",),
    "example6": (),
}


def _build_family(name: str, params: dict) -> Problem:
    if name not in _FAMILY_PARAMS:
        raise InputError(
            f"unknown family {name!r}; choose from {sorted(_FAMILY_PARAMS)}"
        )
    needed = _FAMILY_PARAMS[name]
    for key in needed:
        if params.get(key) is None:
            raise InputError(f"family {name!r} needs parameter --{key}")
    values = {k: int(params[k]) for k in needed}
    if name == "typeA":
        triple = type_a_triple(values["m"])
    elif name == "typeB":
        triple = type_b_triple(values["m"])
    elif name == "typeC":
        triple = type_c_triple(values["m"], values["d"])
    elif name == "example6":
        triple = example6_triple()
    else:
        dec = thm28_ideal(values["s"])
        return Problem(None, dec, None, f"thm28 s={values['s']}")
    label = name + (" " + " ".join(f"{k}={values[k]}" for k in needed) if needed else "")
    return Problem(None, assemble_mpq(triple), triple, label)


def _load_document(path: str) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"top-level JSON value in {path} must be an object")
    if "family" in doc:
        fam = doc["family"]
        if not isinstance(fam, dict) or "name" not in fam:
            raise InputError("family document needs {'name': ..., 'params': {...}}")
        return _build_family(fam["name"], fam.get("params", {}))
    if "vars" not in doc:
        raise InputError("ideal document needs a 'vars' list")
    ring = Ring(tuple(doc["vars"]))
    if "components" in doc:
        comps = []
        for entry in doc["components"]:
            support = frozenset(ring.index(nm) for nm in entry["support"])
            ideal = _parse_gens(entry["gens"], ring)
            comps.append(
                PrimaryComponent(
                    support, ideal, bool(entry.get("complete_intersection", False))
                )
            )
        return Problem(None, Decomposition(ring, tuple(comps)), None, "components")
    if "gens" in doc:
        return Problem(_parse_gens(doc["gens"], ring), None, None, "ideal")
    raise InputError("ideal document needs 'gens', 'components' or 'family'")


def _resolve_problem(args) -> Problem:
    sources = [args.family is not None, args.input is not None, args.gens is not None]
    if sum(sources) != 1:
        raise InputError("provide exactly one of --family, --input, --gens")
    if args.family is not None:
        return _build_family(
            args.family, {"m": args.m, "d": args.d, "s": args.s}
        )
    if args.input is not None:
        return _load_document(args.input)
    if args.vars is None:
        raise InputError("--gens needs --vars")
    ring = Ring(tuple(v.strip() for v in args.vars.split(",") if v.strip()))
    gens = [g for g in args.gens.split(",") if g.strip()]
    return Problem(_parse_gens(gens, ring), None, None, "ideal")


def _add_source_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--gens", help="comma-separated monomials, e.g. 'x^2*y, y*z'")
    parser.add_argument("--vars", help="comma-separated variable names")
    parser.add_argument("--input", help="path to a JSON ideal document")
    parser.add_argument(
        "--family",
        choices=sorted(_FAMILY_PARAMS),
        help="named ideal family",
    )
    parser.add_argument("--m", type=int, help="family parameter m")
    parser.add_argument("--d", type=int, help="family parameter d (typeC)")
    parser.add_argument("--s", type=int, help="family parameter s (thm28)")
    parser.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")


def _cmd_depth(args) -> int:
    problem = _resolve_problem(args)
    if problem.decomposition is not None or args.t != 1:
        dec = problem.require_decomposition()
        report = depth_of_symbolic_power(dec, args.t, args.char, args.box_margin)
        ring = dec.ring
        what = f"{problem.label}, symbolic power t={args.t}"
    else:
        report = depth(problem.ideal, args.char, args.box_margin)
        ring = problem.ideal.ring
        what = problem.label
    print(f"depth {report.depth}  ({what})")
    neg = sum(1 for v in report.witness_point if v < 0)
    print(
        f"witness a = {list(report.witness_point)}  |G_a| = {neg}  j = {report.witness_j}"
    )
    sizes = " ".join(
        f"{name}:{size}" for name, size in zip(ring.names, report.box_sizes)
    )
    print(f"candidate box: {sizes} (total {report.box_points} points)")
    return 0


def _scan_row(dec: Decomposition, triple: MPQTriple | None, t: int, char: int):
    start = time.perf_counter()
    if triple is not None:
        d = mpq_depth(triple, t)
        ge1, ge2 = True, d >= 2
    else:
        d = depth_of_symbolic_power(dec, t, char).depth
        ge1 = depth_at_least_1(dec)
        ge2 = depth_at_least_2(dec, char, t)
    millis = int((time.perf_counter() - start) * 1000)
    return {"t": t, "depth": d, "ge1": ge1, "ge2": ge2, "millis": millis}


def _cmd_scan(args) -> int:
    problem = _resolve_problem(args)
    dec = problem.require_decomposition()
    ts = range(1, args.t_max + 1)
    worker = lambda t: _scan_row(dec, problem.triple, t, args.char)
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(worker, ts))
    else:
        rows = [worker(t) for t in ts]
    if not args.timings:
        for row in rows:
            row["millis"] = 0
    if args.format == "csv":
        print("t,depth,ge1,ge2,millis")
        for row in rows:
            print(
                f"{row['t']},{row['depth']},{int(row['ge1'])},{int(row['ge2'])},{row['millis']}"
            )
    else:
        print(json.dumps(rows, indent=2))
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for claim in verify_mod.claim_ids():
            print(claim)
        return 0
    if args.claim is None and not args.all:
        print("verify: give a claim id or --all (see --list)", file=sys.stderr)
        return 2
    if args.claim is not None and args.claim not in verify_mod.claim_ids():
        print(f"verify: unknown claim {args.claim!r} (see --list)", file=sys.stderr)
        return 2
    claims = verify_mod.claim_ids() if args.all else [args.claim]
    failed = 0
    for claim in claims:
        result = verify_mod.run_claim(claim)
        print(result.summary())
        for line in result.lines:
            print(line)
        if not result.passed:
            failed += 1
    return 1 if failed else 0


def _cmd_plan(args) -> int:
    try:
        f = parse_step_function(args.function)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    recipe = decompose(f)
    values = evaluate(recipe)
    print(f"function: {f.text()}  ->  {', '.join(map(str, values.values(10)))}, ...")
    print(f"recipe: {recipe_text(recipe)}")
    plan = realize(recipe)
    print("plan:")
    for line in plan_lines(plan, indent=1):
        print(line)
    if args.check_t > 0:
        print(f"engine check (t <= {args.check_t}):")
        mismatches = symbolic_depth_check_nodes(plan, args.check_t)
        for label, expected, computed in mismatches:
            mark = "ok " if expected == computed else "FAIL"
            print(f"  [{mark}] {label}: expected {expected}, engine {computed}")
        if any(e != c for _, e, c in mismatches):
            return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symdepth",
        description="Depth functions of symbolic powers of monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_depth = sub.add_parser("depth", help="depth of one (symbolic power of an) ideal")
    _add_source_arguments(p_depth)
    p_depth.add_argument("--t", type=int, default=1, help="symbolic power index")
    p_depth.add_argument("--box-margin", type=int, default=0, help="enlarge candidate sets")
    p_depth.set_defaults(func=_cmd_depth)

    p_scan = sub.add_parser("scan", help="symbolic depth function as a table")
    _add_source_arguments(p_scan)
    p_scan.add_argument("--t-max", type=int, required=True, dest="t_max")
    p_scan.add_argument("--format", choices=("csv", "json"), default="csv")
    p_scan.add_argument("--jobs", type=int, default=1, help="worker count (same output for all)")
    p_scan.add_argument(
        "--timings",
        action="store_true",
        help="fill the millis column with wall time (default 0 for byte-stable output)",
    )
    p_scan.set_defaults(func=_cmd_scan)

    p_verify = sub.add_parser("verify", help="run verification claims")
    p_verify.add_argument("claim", nargs="?", help="claim id")
    p_verify.add_argument("--all", action="store_true")
    p_verify.add_argument("--list", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_plan = sub.add_parser("plan", help="decompose a step function into base families")
    p_plan.add_argument("function", help="step function as 'prefix;period', e.g. '2;1,2'")
    p_plan.add_argument("--check-t", type=int, default=0, dest="check_t")
    p_plan.set_defaults(func=_cmd_plan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"symdepth: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, RingMismatchError) as exc:
        print(f"symdepth: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"symdepth: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
