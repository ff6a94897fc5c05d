"""Command line interface: ``hyperspec {gen,eig,scan,verify}``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error,
3 solver did not converge (the last enclosure is still printed).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import hypergraph as hg
from .eigen import ConvergenceError, SolverConfig, UnsupportedError, laplacian_largest, largest_h_eigenvalue
from .io import dumps_hypergraph, read_hypergraph
from .tensors import TensorKind
from .verify import SUITES, reports_to_csv, run_suite, scan_power

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_NO_CONVERGENCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-10, help="bound-gap tolerance (default: %(default)g)")
    p.add_argument("--max-iter", type=int, default=10**6, help="iteration cap (default: %(default)d)")
    p.add_argument("--shift", type=float, default=1.0, help="adjacency diagonal shift (default: %(default)g)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperspec", description="Largest H-eigenvalues of uniform hypergraph tensors.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a generated hypergraph as JSON")
    gsub = gen.add_subparsers(dest="generator", required=True)
    g = gsub.add_parser("sunflower")
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    for name in ("path", "cycle", "complete"):
        g = gsub.add_parser(name)
        g.add_argument("--n", type=int, required=True)
        if name == "complete":
            g.add_argument("--k", type=int, default=2)
    g = gsub.add_parser("star")
    g.add_argument("--d", type=int, required=True)
    g = gsub.add_parser("power", help="(generalized) power of an input graph")
    g.add_argument("--input", required=True, help="graph file (JSON or text), '-' for stdin")
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--s", type=int, default=1)

    eig = sub.add_parser("eig", help="largest H-eigenvalue of a hypergraph tensor")
    eig.add_argument("--input", required=True)
    eig.add_argument("--tensor", choices=["A", "L", "Q"], default="Q", help="tensor kind (default: %(default)s)")
    eig.add_argument("--format", choices=["json"], default="json")
    _solver_flags(eig)

    scan = sub.add_parser("scan", help="scan lambda over powers G^k of a graph")
    scan.add_argument("--input", required=True)
    scan.add_argument("--tensor", choices=["A", "Q"], default="Q", help="tensor kind (default: %(default)s)")
    scan.add_argument("--k-to", type=int, required=True, help="largest uniformity")
    scan.add_argument("--format", choices=["json", "csv"], default="json")
    _solver_flags(scan)

    ver = sub.add_parser("verify", help="run a named verification suite")
    ver.add_argument("suite", choices=SUITES)
    ver.add_argument("--format", choices=["json", "csv"], default="json")
    _solver_flags(ver)
    return parser


def _config(args) -> SolverConfig:
    try:
        return SolverConfig(tol=args.tol, max_iter=args.max_iter, shift=args.shift)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _gen(args) -> hg.UniformHypergraph:
    if args.generator == "sunflower":
        return hg.sunflower(args.d, args.k)
    if args.generator == "path":
        return hg.path(args.n)
    if args.generator == "cycle":
        return hg.cycle(args.n)
    if args.generator == "star":
        return hg.star(args.d)
    if args.generator == "complete":
        return hg.complete_kuniform(args.n, args.k)
    G = read_hypergraph(args.input)
    if args.s == 1 and args.k >= 2:
        return hg.power(G, args.k)[0]
    return hg.generalized_power(G, args.k, args.s)[0]


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "gen":
            print(dumps_hypergraph(_gen(args)), file=out)
            return EXIT_OK
        cfg = _config(args)
        if args.command == "eig":
            H = read_hypergraph(args.input)
            try:
                if args.tensor == "L":
                    res = laplacian_largest(H, cfg)
                else:
                    res = largest_h_eigenvalue(args.tensor, H, cfg)
            except ConvergenceError as exc:
                print(json.dumps(exc.result.to_dict()), file=out)
                print(f"error: {exc}", file=sys.stderr)
                return EXIT_NO_CONVERGENCE
            print(json.dumps(res.to_dict()), file=out)
            return EXIT_OK if res.converged else EXIT_NO_CONVERGENCE
        if args.command == "scan":
            G = read_hypergraph(args.input)
            table = scan_power(G, args.k_to, TensorKind.parse(args.tensor), cfg)
            out.write(table.to_csv() if args.format == "csv" else json.dumps(table.to_dict()) + "\n")
            return EXIT_NO_CONVERGENCE if any(r.flags for r in table.rows) else EXIT_OK
        if args.command == "verify":
            reports = run_suite(args.suite, cfg)
            if args.format == "csv":
                out.write(reports_to_csv(reports))
            else:
                out.write(json.dumps([r.to_dict() for r in reports]) + "\n")
            return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except (hg.HypergraphError, UnsupportedError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
