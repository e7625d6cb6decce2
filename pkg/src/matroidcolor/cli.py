"""Command-line entry point.

Exit codes: 0 success, 1 a checked inequality failed, 2 usage or input
error, 3 an instance exceeded a size or enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from . import hypergraph as hg
from . import matroid as mt
from .bitset import elements, mask_of
from .bound_engine import game_derivation, game_value
from .coloring import LIST_GROUND_LIMIT, chi, chi_list, chi_matroid, check_chi_sum
from .complex import SimplicialComplex, circ
from .errors import DomainError, MatroidcolorError, ResourceError, TheoremViolation
from .formats import (
    complex_to_json,
    dumps,
    hypergraph_to_json,
    load_json,
    load_object,
    matroid_to_json,
    to_jsonable,
)
from .harness import (
    SUITES,
    SuiteConfig,
    check_tightness,
    random_complex,
    random_hypergraph,
    random_matroid,
    replay,
    run_suite,
    single_case,
)
from .homology import Field, delta_eta, eta, reduced_betti
from .intersection import max_common_independent
from .nu import NU_BUDGET, equalized_witness, nu_pq

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _set(text: str) -> int:
    text = text.strip()
    if not text:
        return 0
    try:
        return mask_of(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated element indices, got {text!r}")


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_globals(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--field", type=_field, default=d(Field()), help="q (default), gf2 or gf<p>")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--budget", type=int, default=d(NU_BUDGET), help="enumeration cap for nu computations")
    p.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    p.add_argument("--trace", action="store_true", default=d(False), help="debug logging and derivation trees")


def _complex_of(paths: Sequence[str]) -> SimplicialComplex:
    """One complex, hypergraph (its independence complex) or several matroids (their intersection)."""
    objs = [load_object(p) for p in paths]
    if all(isinstance(o, mt.Matroid) for o in objs):
        return mt.intersection_complex(*objs)
    if len(objs) != 1:
        raise DomainError("several files are only allowed when all are matroids")
    o = objs[0]
    if isinstance(o, hg.Hypergraph):
        return hg.independence_complex(o)
    return o


def _load_matroid(path: str) -> mt.Matroid:
    o = load_object(path)
    if not isinstance(o, mt.Matroid):
        raise DomainError(f"{path} does not describe a matroid")
    return o


def _load_hypergraph(path: str) -> hg.Hypergraph:
    o = load_object(path)
    if isinstance(o, mt.Matroid):
        return o.circuit_hypergraph()
    if not isinstance(o, hg.Hypergraph):
        raise DomainError(f"{path} does not describe a hypergraph")
    return o


def _emit(args, payload: dict, lines: Optional[list[str]] = None) -> None:
    if args.json or lines is None:
        print(dumps(payload))
    else:
        print("\n".join(lines))


def _show(value: Any) -> str:
    return json.dumps(to_jsonable(value))


# --- verbs ------------------------------------------------------------------


def cmd_eta(args) -> int:
    c = _complex_of(args.files)
    e = eta(c, args.field)
    _emit(args, {"eta": e, "field": str(args.field)}, [f"eta = {_show(e)} over {args.field}"])
    return EXIT_OK


def cmd_betti(args) -> int:
    c = _complex_of(args.files)
    b = reduced_betti(c, args.field)
    lines = [f"reduced betti over {args.field} (degrees -1..{len(b) - 2}): {b}"]
    if args.delta:
        d = delta_eta(c, args.field)
        lines.append(f"delta_eta = {d}")
        _emit(args, {"betti": b, "delta_eta": d}, lines)
    else:
        _emit(args, {"betti": b}, lines)
    return EXIT_OK


def cmd_chi(args) -> int:
    o = load_object(args.file)
    c = o.complex if isinstance(o, mt.Matroid) else _complex_of([args.file])
    k, coloring = chi(c)
    payload: dict[str, Any] = {"chi": k, "classes": [elements(x) for x in coloring.classes]}
    lines = [f"chi = {k}", "classes: " + " ".join(_show(elements(x)) for x in coloring.classes)]
    if isinstance(o, mt.Matroid):
        payload["chi_formula"] = chi_matroid(o)
        lines.append(f"max ceil(|X|/r(X)) = {payload['chi_formula']}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_chi_list(args) -> int:
    c = _complex_of(args.files)
    res = chi_list(c, args.kmax, ground_limit=args.nmax, k_limit=max(args.kmax, 3))
    payload = {"chi_list": res.value, "k_max": res.k_max, "blocking": res.blocking}
    lines = [f"chi_list = {res}"]
    if res.blocking is not None:
        lines.append(f"lists defeating k = {(res.value or res.k_max + 1) - 1}: {_show(res.blocking)}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_chi_sum(args) -> int:
    m, n = _load_matroid(args.a), _load_matroid(args.b)
    rep = check_chi_sum(m, n, ground_limit=args.nmax)
    payload = {
        "chi_M": rep.chi_m,
        "chi_N": rep.chi_n,
        "chi_MN": rep.chi_intersection,
        "chi_list_MN": rep.chi_list_intersection,
        "bound": rep.bound,
        "slack": rep.slack,
        "classes": [elements(x) for x in rep.witness.classes],
    }
    lines = [
        f"chi(M) = {rep.chi_m}, chi(N) = {rep.chi_n}",
        f"chi(M&N) = {rep.chi_intersection} <= {rep.bound}",
        f"chi_list(M&N) = {rep.chi_list_intersection if rep.chi_list_intersection is not None else 'not computed'}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_nu(args) -> int:
    m, n = _load_matroid(args.a), _load_matroid(args.b)
    res = equalized_witness(m, n, args.p, args.q) if args.equalize else nu_pq(m, n, args.p, args.q, args.budget)
    payload = res.to_json() if args.witness or args.equalize else {"value": res.value}
    lines = [f"nu_{{{args.p},{args.q}}} = {res.value}"]
    if args.witness or args.equalize:
        lines.append("A: " + _show(payload["A"]))
        lines.append("B: " + _show(payload["B"]))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_intersect(args) -> int:
    m, n = _load_matroid(args.a), _load_matroid(args.b)
    cert = max_common_independent(m, n)
    if not cert.check(m, n):
        raise TheoremViolation("intersection certificate does not verify", {"M": m, "N": n})
    payload = cert.to_json()
    _emit(args, payload, [f"|I| = {cert.size}", f"I = {payload['I']}", f"V1 = {payload['V1']}", f"V2 = {payload['V2']}"])
    return EXIT_OK


def cmd_game(args) -> int:
    h = _load_hypergraph(args.file)
    value = game_value(h)
    payload: dict[str, Any] = {"game_value": value}
    lines = [f"game value = {_show(value)}"]
    if args.check:
        e = eta(hg.independence_complex(h), args.field)
        payload["eta"] = e
        lines.append(f"eta = {_show(e)}")
        if value > e:
            raise TheoremViolation(f"game value {value} exceeds eta {e}", {"H": h})
    if args.trace:
        payload["derivation"] = game_derivation(h).to_json()
        lines.append(json.dumps(payload["derivation"], indent=1))
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_circ(args) -> int:
    o = load_object(args.file)
    if isinstance(o, mt.Matroid):
        sets = list(o.circuits)
    elif isinstance(o, hg.Hypergraph):
        sets = circ(hg.independence_complex(o))
    else:
        sets = circ(o)
    out = [elements(s) for s in sets]
    _emit(args, {"circ": out}, [" ".join(_show(s) for s in out) or "(none)"])
    return EXIT_OK


_MATROID_OPS = {"restrict": mt.minor_restrict, "contract": mt.minor_contract, "sim": mt.minor_sim}
_HYPERGRAPH_OPS = {
    "restrict": hg.restrict,
    "contract": hg.contract,
    "sim": hg.sim,
    "delete-vertices": hg.delete_vertices,
    "delete-edge": hg.delete_edge,
}


def cmd_minor(args) -> int:
    o = load_object(args.file)
    if isinstance(o, mt.Matroid):
        if args.op not in _MATROID_OPS:
            raise DomainError(f"matroids support {', '.join(_MATROID_OPS)}")
        res = _MATROID_OPS[args.op](o, args.set)
        payload = {
            "ground": elements(res.ground),
            "circuits": [elements(c) for c in res.circuits],
            "loops": elements(res.loops),
        }
        lines = [f"ground {payload['ground']}", "circuits " + _show(payload["circuits"])]
    elif isinstance(o, hg.Hypergraph):
        res = _HYPERGRAPH_OPS[args.op](o, args.set)
        payload = hypergraph_to_json(res)
        payload["vertices"] = elements(res.vertices)
        lines = [f"vertices {payload['vertices']}", "edges " + _show(payload["edges"])]
    else:
        raise DomainError("minor needs a matroid or hypergraph file")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_tightness(args) -> int:
    rows = []
    for p in range(1, args.pmax + 1) if args.p is None else [args.p]:
        for q in range(1, args.qmax + 1) if args.q is None else [args.q]:
            rep = check_tightness(p, q, args.field)
            rows.append({"p": p, "q": q, "chi_M": rep.chi_m, "chi_N": rep.chi_n, "eta": rep.eta, "delta_eta": rep.delta_eta})
    lines = [
        f"p={r['p']} q={r['q']}: chi(M)={r['chi_M']} chi(N)={r['chi_N']} eta={r['eta']} delta_eta={r['delta_eta']}"
        for r in rows
    ]
    _emit(args, {"rows": rows, "tight": True}, lines)
    return EXIT_OK


def _suite_inputs(name: str, files: list[str]) -> dict:
    source = SUITES[name].source
    objs = [load_object(f) for f in files]
    if source in ("pairs",) and len(objs) == 2:
        return {"M": objs[0], "N": objs[1]}
    if source == "matroid_lists" and objs and all(isinstance(o, mt.Matroid) for o in objs):
        return {"matroids": objs}
    if source in ("complex_pairs", "join_pairs") and len(objs) == 2:
        return {"A": objs[0], "B": objs[1]}
    if len(objs) == 1:
        o = objs[0]
        if isinstance(o, mt.Matroid) and ("matroids" in source):
            return {"matroid": o}
        if isinstance(o, SimplicialComplex) and "complexes" in source:
            return {"complex": o}
        if isinstance(o, hg.Hypergraph) and "hypergraphs" in source:
            return {"hypergraph": o}
    raise DomainError(f"suite {name} cannot run on the given files")


def cmd_verify(args) -> int:
    if args.replay:
        report = replay(load_json(args.replay))
    else:
        if args.suite is None:
            raise DomainError("verify needs a suite name or --replay")
        pq = ((args.p, args.q),) if args.p is not None and args.q is not None else None
        cfg = SuiteConfig(
            seed=args.seed,
            random_cases=args.cases,
            use_corpus=not args.no_corpus,
            nmax=args.nmax,
            field=args.field,
            budget=args.budget,
            pmax=args.pmax,
            qmax=args.qmax,
            pq=pq,
            vertex=args.v,
            allow_large=args.allow_large,
            bundle_dir=Path(args.bundle_dir) if args.bundle_dir else None,
        )
        names = list(SUITES) if args.suite == "all" else [args.suite]
        if args.suite != "all" and args.suite not in SUITES:
            raise DomainError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
        if args.files:
            if len(names) != 1:
                raise DomainError("files can only be checked against one suite")
            reports = [single_case(names[0], _suite_inputs(names[0], args.files), cfg)]
        else:
            reports = [run_suite(n, cfg) for n in names]
        return _print_reports(args, reports)
    return _print_reports(args, [report])


def _print_reports(args, reports) -> int:
    for r in reports:
        if args.json:
            for line in r.json_lines():
                print(line)
        else:
            if args.trace:
                for c in r.cases:
                    print(dumps(c.to_json()))
            print(r.summary())
            for f in r.failures:
                print(f"  failing case {f['case']}: {f['error']}")
                if "path" in f:
                    print(f"  replay with: verify --replay {f['path']}")
                else:
                    print("  bundle: " + dumps(f))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_gen(args) -> int:
    if args.what == "matroid":
        payload = matroid_to_json(random_matroid(args.seed, args.n, args.kind))
    elif args.what == "pair":
        payload = {
            "M": matroid_to_json(random_matroid(f"{args.seed}:M", args.n, args.kind)),
            "N": matroid_to_json(random_matroid(f"{args.seed}:N", args.n, args.kind)),
        }
    elif args.what == "complex":
        payload = complex_to_json(random_complex(args.seed, args.n, args.density))
    else:
        m = args.edges if args.edges is not None else args.n
        payload = hypergraph_to_json(random_hypergraph(args.seed, args.n, m, args.arity))
    text = json.dumps(payload, sort_keys=True)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matroidcolor", description="Exact checks for matroid intersection colouring bounds.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def verb(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        _add_globals(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = verb("eta", cmd_eta, "connectivity of a complex, hypergraph or matroid intersection")
    p.add_argument("files", nargs="+")
    p = verb("betti", cmd_betti, "reduced Betti numbers")
    p.add_argument("files", nargs="+")
    p.add_argument("--delta", action="store_true", help="also report delta_eta")
    p = verb("chi", cmd_chi, "chromatic number with a witness colouring")
    p.add_argument("file")
    p = verb("chi-list", cmd_chi_list, "list chromatic number (small instances)")
    p.add_argument("files", nargs="+")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--nmax", type=int, default=LIST_GROUND_LIMIT)
    p = verb("chi-sum", cmd_chi_sum, "chi(M&N) <= chi(M) + chi(N)")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--nmax", type=int, default=5, help="largest ground set for the list version")
    p = verb("nu", cmd_nu, "the packing parameter nu_{p,q}")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--equalize", action="store_true", help="witness with equal multiplicities on both sides")
    p = verb("intersect", cmd_intersect, "maximum common independent set with certificate")
    p.add_argument("a")
    p.add_argument("b")
    p = verb("game", cmd_game, "deletion/contraction lower bound on eta")
    p.add_argument("file")
    p.add_argument("--check", action="store_true", help="compare against eta")
    p = verb("circ", cmd_circ, "minimal non-faces / circuits")
    p.add_argument("file")
    p = verb("minor", cmd_minor, "apply a minor or hypergraph operator")
    p.add_argument("file")
    p.add_argument("--op", required=True, choices=sorted(_HYPERGRAPH_OPS))
    p.add_argument("--set", type=_set, required=True, help="comma-separated elements")
    p = verb("tightness", cmd_tightness, "the blown-up 4-cycle family")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--pmax", type=int, default=3)
    p.add_argument("--qmax", type=int, default=3)
    p = verb("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", nargs="?", help=f"all, {', '.join(SUITES)}")
    p.add_argument("files", nargs="*")
    p.add_argument("--replay", metavar="BUNDLE")
    p.add_argument("--cases", type=int, default=0, help="extra seeded random cases")
    p.add_argument("--no-corpus", action="store_true")
    p.add_argument("--nmax", type=int)
    p.add_argument("--pmax", type=int, default=3)
    p.add_argument("--qmax", type=int, default=3)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--v", type=int, help="vertex for coloop/claim")
    p.add_argument("--bundle-dir")
    p.add_argument("--allow-large", action="store_true", help="accept sizes beyond the defaults")
    p = verb("gen", cmd_gen, "write a seeded random instance")
    p.add_argument("what", choices=["matroid", "pair", "complex", "hypergraph"])
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--kind", default="mix", choices=["mix", "uniform", "partition", "graphic", "transversal", "free"])
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--edges", type=int)
    p.add_argument("--arity", type=int, default=3)
    p.add_argument("--out")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.trace else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"theorem check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (MatroidcolorError, OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
