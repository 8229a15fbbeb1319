"""Command-line front end.

Subcommands: corpus | solve | generate | verify | recognize | export-dot.
Streams are graph6 lines in, JSON lines (or graph6/DOT) out.  Settings
resolve as CLI flag > environment (prefix ``CIDGRAPH_``) > config file
(``key=value`` lines) > default.  Exit codes: 0 clean, 1 violations found,
2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Iterator, Sequence

from .corpus import exhaustive_graphs
from .families import FAMILY_KINDS, FamilySpec, build_family, random_connected
from .graph import Graph
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .recognizers import (
    Certificate,
    classify_large_cid,
    classify_small_cid,
    double_cover_certificate,
    half_order_certificate,
)
from .solvers import (
    CapExceeded,
    SolveResult,
    cid_number_bruteforce,
    cid_number_exact,
    cid_two_approx,
    independence_number,
    italian_number_exact,
    oird_number_exact,
    roman_number_exact,
    two_oid_number_exact,
    vertex_cover_number,
)
from .verify import THEOREM_NAMES, sweep, sweep_exhaustive

ENV_PREFIX = "CIDGRAPH_"

_DEFAULTS = {"oracle-cap": 15, "subset-cap": 20, "jobs": 1}

INVARIANTS = (
    "cid",
    "cid-brute",
    "beta",
    "alpha",
    "italian",
    "roman",
    "oird",
    "two-oid",
    "cid-approx",
)


def _load_config(path: str | None) -> dict[str, int]:
    settings = dict(_DEFAULTS)
    if path:
        with open(path, encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise SystemExit(f"config line without '=': {raw.rstrip()}")
                key, value = (part.strip() for part in line.split("=", 1))
                if key in settings:
                    settings[key] = int(value)
    for key in settings:
        env = os.environ.get(ENV_PREFIX + key.upper().replace("-", "_"))
        if env is not None:
            settings[key] = int(env)
    return settings


def _resolve(args: argparse.Namespace) -> dict[str, int]:
    settings = _load_config(args.config)
    if getattr(args, "oracle_cap", None) is not None:
        settings["oracle-cap"] = args.oracle_cap
    if getattr(args, "subset_cap", None) is not None:
        settings["subset-cap"] = args.subset_cap
    if getattr(args, "jobs", None) is not None:
        settings["jobs"] = args.jobs
    return settings


def _input_lines(path: str | None) -> Iterator[str]:
    if path is None or path == "-":
        yield from sys.stdin
    else:
        with open(path, encoding="utf-8") as fh:
            yield from fh


def _witness_json(res: SolveResult) -> list[int]:
    if isinstance(res.witness, frozenset):
        return sorted(res.witness)
    return list(res.witness)


def _solve_one(g: Graph, invariant: str, caps: dict[str, int]) -> SolveResult:
    lab_cap = caps["oracle-cap"]
    sub_cap = caps["subset-cap"]
    if invariant == "cid":
        return cid_number_exact(g)
    if invariant == "cid-brute":
        return cid_number_bruteforce(g, lab_cap)
    if invariant == "beta":
        return vertex_cover_number(g)
    if invariant == "alpha":
        beta = vertex_cover_number(g)
        return SolveResult(
            g.n - beta.value,
            frozenset(v for v in range(g.n) if v not in beta.witness),  # type: ignore[operator]
            beta.nodes,
            beta.elapsed,
        )
    if invariant == "italian":
        return italian_number_exact(g, lab_cap)
    if invariant == "roman":
        return roman_number_exact(g, lab_cap)
    if invariant == "oird":
        return oird_number_exact(g, lab_cap)
    if invariant == "two-oid":
        return two_oid_number_exact(g, sub_cap)
    if invariant == "cid-approx":
        return cid_two_approx(g)
    raise SystemExit(f"unknown invariant {invariant!r}")


def cmd_solve(args: argparse.Namespace) -> int:
    caps = _resolve(args)
    had_errors = False
    for lineno, raw in enumerate(_input_lines(args.input), 1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
            res = _solve_one(g, args.invariant, caps)
        except (Graph6Error, CapExceeded, ValueError) as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            had_errors = True
            continue
        out = {
            "graph6": line,
            "invariant": args.invariant,
            "value": res.value,
            "witness": _witness_json(res),
            "nodes": res.nodes,
        }
        if not args.stable:
            out["micros"] = int(res.elapsed * 1_000_000)
        print(json.dumps(out))
    return 2 if had_errors else 0


def cmd_corpus(args: argparse.Namespace) -> int:
    for g in exhaustive_graphs(args.n, args.connected):
        print(emit_graph6(g))
    return 0


def _family_graphs(args: argparse.Namespace) -> list[Graph]:
    params = tuple(int(p) for p in args.params.split(",")) if args.params else ()
    spec = FamilySpec(args.family, params, args.seed, args.p)
    return build_family(spec, args.count)


def cmd_generate(args: argparse.Namespace) -> int:
    for g in _family_graphs(args):
        print(emit_graph6(g))
    return 0


def _verify_corpus(args: argparse.Namespace) -> tuple[Iterable[Graph], str] | None:
    if args.input:
        graphs = [parse_graph6(ln.strip()) for ln in _input_lines(args.input) if ln.strip()]
        return graphs, f"file {args.input}"
    if args.family:
        return _family_graphs(args), f"family {args.family}"
    if args.random:
        seed = args.seed if args.seed is not None else 0
        lo, hi = args.n_min, args.n_max
        sizes = list(range(lo, hi + 1))
        graphs = [
            random_connected(sizes[i % len(sizes)], args.p, seed + i)
            for i in range(args.count)
        ]
        return graphs, f"random connected n={lo}..{hi} count={args.count} seed={seed}"
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    settings = _resolve(args)
    corpus = _verify_corpus(args)
    if corpus is None:
        if args.n is None:
            raise SystemExit("verify needs --n, --input, --family or --random")
        report = sweep_exhaustive(
            args.theorem, args.n, args.connected, args.r, settings["jobs"]
        )
    else:
        graphs, descr = corpus
        report = sweep(args.theorem, graphs, descr, args.r)
    print(json.dumps(report.to_json(stable=args.stable)))
    return 0 if report.ok else 1


def _cert_json(cert: Certificate | None) -> dict | None:
    if cert is None:
        return None
    return {"family": cert.family, "clause": cert.clause, "witness": list(cert.witness)}


def cmd_recognize(args: argparse.Namespace) -> int:
    had_errors = False
    for lineno, raw in enumerate(_input_lines(args.input), 1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            had_errors = True
            continue
        out: dict = {"graph6": line}
        try:
            cert = double_cover_certificate(g)
            out["double_cover"] = _cert_json(cert)
        except (ValueError, CapExceeded):
            out["double_cover"] = None
        try:
            cert = half_order_certificate(g)
            out["half_order"] = _cert_json(cert)
        except ValueError:
            out["half_order"] = None
        try:
            label, cert = classify_small_cid(g)
            out["small"] = label
            out["small_certificate"] = _cert_json(cert)
        except ValueError:
            out["small"] = None
            out["small_certificate"] = None
        try:
            label, cert = classify_large_cid(g)
            out["large"] = label
            out["large_certificate"] = _cert_json(cert)
        except ValueError:
            out["large"] = None
            out["large_certificate"] = None
        print(json.dumps(out))
    return 2 if had_errors else 0


def cmd_export_dot(args: argparse.Namespace) -> int:
    labeling = None
    if args.labeling:
        labeling = [int(x) for x in args.labeling.split(",")]
    had_errors = False
    for idx, raw in enumerate(line for line in _input_lines(args.input) if line.strip()):
        line = raw.strip()
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            print(f"graph {idx}: {exc}", file=sys.stderr)
            had_errors = True
            continue
        if labeling is not None and len(labeling) != g.n:
            print(f"graph {idx}: labeling length mismatch", file=sys.stderr)
            had_errors = True
            continue
        print(f"graph g{idx} {{")
        for v in range(g.n):
            if labeling is not None:
                print(f'  {v} [label="{v}:{labeling[v]}"];')
            else:
                print(f'  {v} [label="{v}"];')
        for u, v in g.edges():
            print(f"  {u} -- {v};")
        print("}")
    return 2 if had_errors else 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cidgraph",
        description="covering Italian domination: solvers, families, verification",
    )
    top.add_argument("--config", help="key=value settings file")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--oracle-cap", type=int, help="3^n enumeration cap")
        p.add_argument("--subset-cap", type=int, help="2^n enumeration cap")
        p.add_argument("--stable", action="store_true", help="omit timing fields")
        p.add_argument("--config", help="key=value settings file")

    p = sub.add_parser("corpus", help="emit every labeled graph on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("solve", help="solve an invariant over a graph6 stream")
    p.add_argument("input", nargs="?", default=None, help="graph6 file (default stdin)")
    p.add_argument("--invariant", choices=INVARIANTS, default="cid")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("generate", help="emit members of a named family")
    p.add_argument("--family", required=True)
    p.add_argument("--params", default="", help="comma-separated integers")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--p", type=float, default=0.5, help="edge probability")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="sweep a theorem over a corpus")
    p.add_argument("--theorem", choices=THEOREM_NAMES, required=True)
    p.add_argument("--n", type=int, default=None, help="exhaustive corpus order")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--input", default=None, help="graph6 corpus file")
    p.add_argument("--family", default=None)
    p.add_argument("--params", default="")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--random", action="store_true", help="seeded random connected corpus")
    p.add_argument("--n-min", type=int, default=7)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--r", type=int, default=3, help="star-freeness parameter")
    p.add_argument("--jobs", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recognize", help="run the family recognizers on a stream")
    p.add_argument("input", nargs="?", default=None)
    common(p)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("export-dot", help="emit DOT drawings, optionally labeled")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--labeling", default=None, help="comma-separated labels")
    p.set_defaults(func=cmd_export_dot)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "stable"):
        args.stable = False
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
