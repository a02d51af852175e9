"""Command line interface.

Exit codes: 0 success, 1 negative verification, 2 input error,
3 capacity or budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import nip
from .errors import CapacityError, InputError, KSwitchError
from .generators import FAMILIES, from_family
from .graph import is_balanced
from .incidence import build_incidence, injective_mu, mu_from_incidence
from .io import read_graph, read_switching, serialize_graph, serialize_switching
from .solver import bdim, sbdim
from .switching import is_positive_switching
from .ternary import format_vector

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _cmd_balance(args) -> int:
    g = read_graph(args.graph)
    cert = is_balanced(g)
    if args.json:
        print(_dump({"kind": "balance", "balanced": cert.balanced,
                     "switching": list(cert.switching) if cert.switching else None,
                     "negative_cycle": list(cert.negative_cycle) if cert.negative_cycle else None}))
    elif cert:
        print("balanced")
        print("switching: " + " ".join(f"{x:+d}" for x in cert.switching))
    else:
        print("unbalanced")
        print("negative cycle: " + " ".join(map(str, cert.negative_cycle)))
    return EXIT_OK


def _cmd_dimension(args) -> int:
    g = read_graph(args.graph)
    solve = bdim if args.command == "bdim" else sbdim
    res = solve(g, max_k=args.max_k, threads=args.threads)
    if args.json:
        print(_dump(res.as_dict(timing=args.timing)))
        return EXIT_OK
    print(f"# {res.kind} = {res.value}" + ("  (all-positive convention)" if res.convention else ""))
    print("# lower bounds: " + " ".join(f"{n}={v}" for n, v in res.trace.lower_bounds))
    print("# upper bounds: " + " ".join(f"{n}={v}" for n, v in res.trace.upper_bounds))
    if res.certified:
        print("# searched: " + " ".join(f"k={k}:{'found' if ok else 'none'}" for k, ok in res.certified))
    print(f"# nodes: {res.nodes}")
    if args.timing:
        print(f"# elapsed: {res.elapsed:.6f}s")
    sys.stdout.write(serialize_switching(res.witness))
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = read_graph(args.graph)
    zeta = read_switching(args.switching)
    report = is_positive_switching(g, zeta, args.injective)
    if report:
        print("pass")
        return EXIT_OK
    print("fail")
    for r in report.reasons:
        print(f"  {r}")
    return EXIT_FAIL


def _cmd_mu(args) -> int:
    g = read_graph(args.graph)
    zeta = injective_mu(g) if args.injective else mu_from_incidence(g)
    if g.m:
        print("# incidence matrix (rows = vertices, columns = edges in file order)")
        for row in build_incidence(g):
            print("# " + " ".join(f"{int(x):2d}" for x in row))
    sys.stdout.write(serialize_switching(zeta))
    return EXIT_OK


def _cmd_nip(args) -> int:
    if args.command == "nubar":
        value = nip.nu_bar(args.n, k_max=args.k_max, cache=args.cache)
        if args.json:
            print(_dump({"kind": "nubar", "n": args.n, "value": value}))
        else:
            print(f"nubar({args.n}) = {value}")
        return EXIT_OK
    fn = nip.nu if args.command == "nu" else nip.lambda_lines
    report = fn(args.k, cache=args.cache)
    if args.json:
        print(_dump(report.as_dict(timing=args.timing)))
        return EXIT_OK
    name = "nu" if args.command == "nu" else "lambda"
    note = "  (implementation-computed value)" if name == "lambda" and args.k != 2 else ""
    print(f"{name}({args.k}) = {report.value}{note}")
    print(f"compatibility graph: {report.graph_vertices} vertices, {report.graph_edges} edges")
    if args.timing:
        print(f"elapsed: {report.elapsed:.6f}s")
    print("witness:")
    for v in report.witness:
        print("  " + format_vector(v))
    return EXIT_OK


def _cmd_gen(args) -> int:
    sys.stdout.write(serialize_graph(from_family(args.family, args.params)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kswitch", description="Vector-valued switching in signed graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("balance", help="balance test with certificate")
    s.add_argument("graph")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_balance)

    for name, text in (("bdim", "balancing dimension"), ("sbdim", "strong balancing dimension")):
        s = sub.add_parser(name, help=text)
        s.add_argument("graph")
        s.add_argument("--max-k", type=int, default=None, help="give up above this dimension (exit 3)")
        s.add_argument("--threads", type=int, default=1, help="worker processes; 1 is deterministic")
        s.add_argument("--json", action="store_true")
        s.add_argument("--timing", action="store_true", help="include wall time in the output")
        s.set_defaults(func=_cmd_dimension)

    s = sub.add_parser("verify", help="check a switching file against a graph")
    s.add_argument("graph")
    s.add_argument("switching")
    s.add_argument("--injective", action="store_true")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("mu", help="incidence-based positive switching")
    s.add_argument("graph")
    s.add_argument("--injective", action="store_true")
    s.set_defaults(func=_cmd_mu)

    for name, arg in (("nu", "k"), ("lambda", "k"), ("nubar", "n")):
        s = sub.add_parser(name)
        s.add_argument(arg, type=int)
        s.add_argument("--cache", default=None, help=f"cache file (default: ${nip.CACHE_ENV})")
        s.add_argument("--json", action="store_true")
        s.add_argument("--timing", action="store_true")
        if name == "nubar":
            s.add_argument("--k-max", type=int, default=nip.NU_BAR_K_MAX)
        s.set_defaults(func=_cmd_nip)

    s = sub.add_parser("gen", help="emit a graph file for a family",
                       epilog="families: " + "; ".join(FAMILIES.values()))
    s.add_argument("family")
    s.add_argument("params", nargs="*")
    s.set_defaults(func=_cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CapacityError as exc:
        msg = f"capacity exceeded: {exc}"
        if exc.lower is not None:
            hi = "?" if exc.upper is None else exc.upper
            msg += f"; value lies in [{exc.lower}, {hi}]"
        print(msg, file=sys.stderr)
        return EXIT_CAPACITY
    except (InputError, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KSwitchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())
