"""Command-line interface.

Exit codes: 0 success, 1 selftest failure, 2 invalid quiver, 3 bad orbit or
representation input, 4 internal consistency failure, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import collapsing as col
from . import polyengine as pe
from . import repkit as rk
from . import selftest
from .quiverkit import (
    QuiverError,
    ar_quiver,
    default_order,
    enumerate_orbits,
    root_key,
    root_order,
    root_system_of,
    validate_adapted,
    validate_dynkin,
)
from .serialize import (
    InputError,
    dims_from_arg,
    dumps,
    load_json_arg,
    orbit_from_arg,
    orbit_to_json,
    quiver_from_json,
    representation_from_json,
    result_to_json,
)

EXIT_OK, EXIT_SELFTEST, EXIT_QUIVER, EXIT_INPUT, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2, 3, 4, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["json", "pretty", "dot"], default="json")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p.add_argument("--trials", type=int, default=20, help="random points per summation check")
    p.add_argument("--quick", action="store_true", help="selftest: golden checks only")
    return p


def _quiver_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--quiver", required=True, help="quiver JSON, inline or a file path")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="quiverloci", description="Multidegrees and K-polynomials of ADE quiver loci.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="diagram type, adapted word, root order, AR quiver")
    _quiver_args(p)
    p.add_argument("--word", help="validate and use this adapted word, e.g. 213423142341 or 2,1,3")

    p = sub.add_parser("orbits", parents=[common], help="list orbits of a dimension vector")
    _quiver_args(p)
    p.add_argument("--dims", required=True)

    for name in ("multidegree", "kpoly"):
        p = sub.add_parser(name, parents=[common], help=f"{name} of an orbit closure")
        _quiver_args(p)
        p.add_argument("--dims", required=True)
        p.add_argument("--orbit", required=True, help='root-keyed multiplicities, e.g. {"110": 2}')
        p.add_argument("--kpoly", action="store_true", help="also compute the K-polynomial")
        p.add_argument("--check-sum-formula", action="store_true")

    p = sub.add_parser("poset", parents=[common], help="degeneration order on the orbits of a dimension vector")
    _quiver_args(p)
    p.add_argument("--dims", required=True)

    p = sub.add_parser("decompose", parents=[common], help="multiplicities of an explicit representation")
    _quiver_args(p)
    p.add_argument("--rep", required=True, help="representation JSON, inline or a file path")

    sub.add_parser("selftest", parents=[common], help="run the acceptance checks")
    return parser


# --- helpers ---------------------------------------------------------------------------


def _load_quiver(arg: str):
    try:
        data = load_json_arg(arg)
    except (OSError, json.JSONDecodeError) as exc:
        raise QuiverError(f"not a Dynkin quiver: cannot read input ({exc})") from exc
    q = quiver_from_json(data)
    validate_dynkin(q)
    return q


def _parse_word(text: str) -> tuple:
    parts = text.split(",") if "," in text else list(text)
    return tuple(int(p) if p.strip().lstrip("-").isdigit() else p.strip() for p in parts)


def _namer(q, laurent=False):
    return pe.alias_namer(q.vertices, laurent)


def _emit(args, payload, pretty_text: str | None = None, dot: str | None = None) -> None:
    if args.format == "dot" and dot is not None:
        print(dot)
    elif args.format == "pretty" and pretty_text is not None:
        print(pretty_text)
    else:
        print(dumps(payload))


# --- subcommands ------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    q = _load_quiver(args.quiver)
    diag = validate_dynkin(q)
    rs = root_system_of(q)
    if args.word:
        word = _parse_word(args.word)
        if not validate_adapted(q, word):
            print(f"word {args.word} is not a reduced word adapted to the quiver", file=sys.stderr)
            return EXIT_INPUT
        ro = root_order(rs, word)
    else:
        ro = default_order(q)
        word = ro.word
    ar = ar_quiver(rs, word)
    rows = [
        {"index": j, "letter": a, "gamma": list(g), "row": r, "column": c}
        for j, (a, g, (r, c)) in enumerate(zip(word, ro.gammas, ar.placements), start=1)
    ]
    payload = {
        "diagram": {"series": diag.series, "rank": diag.rank},
        "canonical_labels": {str(k): v for k, v in diag.canonical},
        "quiver": {"vertices": list(q.vertices), "arrows": [{"tail": t, "head": h} for t, h in q.arrows]},
        "adapted_word": list(word),
        "roots": rows,
        "betas": [root_key(b) for b in ro.betas],
        "ar_edges": [list(e) for e in ar.edges],
    }
    lines = [f"type {diag.name}", "word " + " ".join(map(str, word)), "j  letter  gamma  (row, column)"]
    for row in rows:
        lines.append(f"{row['index']:>2}  {row['letter']}  {root_key(tuple(row['gamma']))}  ({row['row']}, {row['column']})")
    lines.append("AR arrows " + " ".join(f"{a}->{b}" for a, b in ar.edges))
    _emit(args, payload, "\n".join(lines), ar.to_dot(ro.gammas))
    return EXIT_OK


def _orbit_inputs(args):
    q = _load_quiver(args.quiver)
    ro = default_order(q)
    d = dims_from_arg(q, args.dims)
    return q, ro, d


def cmd_orbits(args) -> int:
    q, ro, d = _orbit_inputs(args)
    orbits = enumerate_orbits(root_system_of(q), ro, d)
    payload = [{"orbit": orbit_to_json(ro, m), "codim": rk.codim_orbit(q, ro, m)} for m in orbits]
    text = "\n".join(f"codim {p['codim']}: {json.dumps(p['orbit'], sort_keys=True)}" for p in payload)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_multidegree(args, force_kpoly: bool = False) -> int:
    q, ro, d = _orbit_inputs(args)
    m = orbit_from_arg(ro, args.orbit)
    with_k = force_kpoly or args.kpoly
    res = col.analyze_orbit(q, ro, d, m, with_kpoly=with_k)
    payload = result_to_json(res)
    if args.check_sum_formula:
        reports = col.sum_formula_reports(q, ro, d, m, args.trials, seed=args.seed, k_side=with_k, result=res)
        payload["sum_formula"] = {r.side: r.ok for r in reports}
        payload["sum_formula"].update(trials=args.trials, seed=args.seed)
        if not all(r.ok for r in reports):
            print(dumps(payload))
            print("summation formula disagrees with the operator result", file=sys.stderr)
            return EXIT_INTERNAL
    lines = [f"[Omega] = {pe.pretty(res.multidegree, _namer(q))}", f"codim {res.codim}, operators {res.operators_applied}"]
    if res.kpolynomial is not None:
        lines.append(f"[Omega]^K = {pe.pretty(res.kpolynomial, _namer(q, True))}")
    lines.extend(f"warning: {w}" for w in res.warnings)
    if "sum_formula" in payload:
        lines.append("summation formula: " + ", ".join(f"{k} {v}" for k, v in payload["sum_formula"].items()))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_poset(args) -> int:
    q, ro, d = _orbit_inputs(args)
    orbits = enumerate_orbits(root_system_of(q), ro, d)
    P = rk.degeneration_poset(q, ro, orbits)
    keys = [json.dumps(orbit_to_json(ro, m), sort_keys=True) for m in P.orbits]
    payload = {
        "orbits": [orbit_to_json(ro, m) for m in P.orbits],
        "codims": [rk.codim_orbit(q, ro, m) for m in P.orbits],
        "hasse": [list(e) for e in P.hasse],
    }
    dot = ["digraph degenerations {"]
    for i, k in enumerate(keys):
        dot.append(f'  o{i} [label="{k.replace(chr(34), "")}"];')
    dot.extend(f"  o{u} -> o{w};" for u, w in P.hasse)
    dot.append("}")
    text = "\n".join([f"{i}: {k}" for i, k in enumerate(keys)] + [f"{u} < {w}" for u, w in P.hasse])
    _emit(args, payload, text, "\n".join(dot))
    return EXIT_OK


def cmd_decompose(args) -> int:
    q = _load_quiver(args.quiver)
    ro = default_order(q)
    try:
        rep = representation_from_json(q, load_json_arg(args.rep))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read representation ({exc})") from exc
    except rk.RepresentationError as exc:
        raise InputError(str(exc)) from exc
    m = rk.decompose(q, ro, rep)
    payload = {"orbit": orbit_to_json(ro, m)}
    _emit(args, payload, json.dumps(payload["orbit"], sort_keys=True))
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = selftest.run_all(seed=args.seed, quick=args.quick)
    if args.format == "json":
        print(dumps([
            {"criterion": r.number, "title": r.title, "passed": r.passed, "seconds": round(r.seconds, 3), "detail": r.detail}
            for r in results
        ]))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_SELFTEST


COMMANDS = {
    "analyze": cmd_analyze,
    "orbits": cmd_orbits,
    "multidegree": cmd_multidegree,
    "kpoly": lambda a: cmd_multidegree(a, force_kpoly=True),
    "poset": cmd_poset,
    "decompose": cmd_decompose,
    "selftest": cmd_selftest,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except QuiverError as exc:
        msg = str(exc)
        print(msg if msg.startswith("not a Dynkin quiver") else f"not a Dynkin quiver: {msg}", file=sys.stderr)
        return EXIT_QUIVER
    except (InputError, col.OrbitError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, rk.RepresentationError, pe.DivisionError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
