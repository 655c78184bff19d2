"""Command-line front end: ``hamparity {parity,gen,verify,bench}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from dataclasses import replace
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import oracle
from .bipartite import parity_bipartite
from .derandomize import choose_diagonal
from .digraph import (
    Digraph,
    NotBipartite,
    ParseError,
    Unbalanced,
    bipartition,
    parse_edge_list,
    random_bipartite,
    random_digraph,
    write_edge_list,
)
from .gf2 import BitVector
from .general import parity_general
from .result import ParityResult, merge_results, resolve_diagonal

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
SOLVERS = ("auto", "general", "bipartite", "heldkarp", "brute", "theorem3")


class UsageError(Exception):
    pass


def worker_count() -> int:
    raw = os.environ.get("HAMPARITY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"HAMPARITY_THREADS must be an integer, got {raw!r}") from None


def _general_shard(args):
    g, r, index, count = args
    return parity_general(g, diagonal=r, shard=(index, count))


def run_general(g: Digraph, diagonal: BitVector, workers: int = 1) -> ParityResult:
    """Sharded ``parity_general``; the merged result does not depend on ``workers``."""
    if workers <= 1:
        return parity_general(g, diagonal=diagonal)
    jobs = [(g, diagonal, i, workers) for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return merge_results(pool.map(_general_shard, jobs))


def pick_solver(g: Digraph) -> str:
    try:
        bipartition(g)
    except (NotBipartite, Unbalanced):
        return "general"
    return "bipartite"


def compute(g: Digraph, solver: str, seed: int, derandomize: bool = False, K: int = 2,
            workers: int = 1) -> tuple[str, ParityResult | int]:
    """Run one solver; returns the solver actually used and its result.

    Oracle solvers with K > 2 return a plain residue instead of a ParityResult.
    """
    if g.n < 2:
        raise UsageError(f"need at least 2 vertices, got {g.n}")
    if K < 2:
        raise UsageError(f"K must be >= 2, got {K}")
    if K != 2 and solver not in ("brute", "theorem3"):
        raise UsageError(f"solver {solver!r} only computes parity (K=2)")
    if derandomize and solver not in ("auto", "general"):
        raise UsageError("--derandomize applies to the general solver only")
    if solver == "auto":
        solver = "general" if derandomize else pick_solver(g)

    if solver == "general":
        r = choose_diagonal(g) if derandomize else resolve_diagonal(g.n, None, seed)
        res = run_general(g, r, workers)
        if derandomize:
            return solver, replace(res, solver="general+derandomized", seed=None)
        return solver, replace(res, seed=seed)
    if solver == "bipartite":
        try:
            return solver, parity_bipartite(g, seed=seed)
        except NotBipartite as exc:
            raise UsageError(f"bipartite solver on non-bipartite input: {exc}") from None
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        if solver == "heldkarp":
            return solver, ParityResult(oracle.ham_parity_heldkarp(g), "heldkarp")
        if solver == "brute":
            value = oracle.ham_count_brute(g, K)
        elif solver == "theorem3":
            if (K + 1) ** g.n > 10**8:
                raise UsageError(f"theorem3 with K={K} is limited to (K+1)^n <= 1e8")
            value = oracle.theorem3_direct(g, K)
        else:
            raise UsageError(f"unknown solver {solver!r}")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return solver, (ParityResult(value, solver) if K == 2 else value)


def format_report(solver: str, result: ParityResult | int, K: int, wall_ms: float) -> str:
    if isinstance(result, int):
        lines = [f"count_mod_K={result}", f"K={K}", f"solver={solver}"]
    else:
        lines = [f"parity={result.parity}", f"solver={result.solver}"]
        if result.seed is not None:
            lines.append(f"seed={result.seed}")
        if result.diagonal is not None:
            lines.append(f"diagonal={result.diagonal}")
        lines += [
            f"prefixes_examined={result.prefixes_examined}",
            f"candidates_generated={result.candidates_generated}",
            f"contributing_count={result.contributing_count}",
        ]
    lines.append(f"wall_ms={wall_ms:.3f}")
    return "\n".join(lines)


def cmd_parity(args) -> int:
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    g = parse_edge_list(text)
    t0 = time.perf_counter()
    solver, res = compute(g, args.solver, args.seed, args.derandomize, args.K, worker_count())
    wall = (time.perf_counter() - t0) * 1000
    print(format_report(solver, res, args.K, wall))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        if args.bipartite:
            g = random_bipartite(args.n, args.p, args.seed)
        else:
            g = random_digraph(args.n, args.p, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = write_edge_list(g)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def _instance_seeds(seed: int):
    rng = np.random.default_rng(seed)
    while True:
        yield int(rng.integers(2**32))


def verify_instance(g: Digraph, solver_seed: int, derandomize: bool = True,
                    bipartite: bool = False) -> list[str]:
    """Run the fast solvers against the oracles; returns mismatch descriptions."""
    expected = oracle.ham_parity_heldkarp(g)
    problems = []
    if g.n <= 9:
        brute = oracle.ham_count_brute(g, 2)
        if brute != expected:
            problems.append(f"brute={brute} heldkarp={expected}")
    got = parity_general(g, seed=solver_seed).parity
    if got != expected:
        problems.append(f"general={got} heldkarp={expected}")
    if derandomize:
        got = parity_general(g, diagonal=choose_diagonal(g)).parity
        if got != expected:
            problems.append(f"derandomized={got} heldkarp={expected}")
    if bipartite:
        got = parity_bipartite(g, seed=solver_seed).parity
        if got != expected:
            problems.append(f"bipartite={got} heldkarp={expected}")
    return problems


def cmd_verify(args) -> int:
    if args.n_min < 2 or args.n_max < args.n_min:
        raise UsageError("need 2 <= n-min <= n-max")
    if args.n_max > 20:
        raise UsageError("verify is limited to n-max <= 20 (Held-Karp oracle)")
    densities = [float(d) for d in args.densities.split(",")]
    if any(not 0 <= d <= 1 for d in densities):
        raise UsageError("densities must lie in [0, 1]")
    seeds = _instance_seeds(args.seed)
    mismatches = checked = 0
    for n in range(args.n_min, args.n_max + 1):
        for p in densities:
            for t in range(args.trials):
                g = random_digraph(n, p, next(seeds))
                derand = n <= 12 and not args.no_derandomize
                for msg in verify_instance(g, next(seeds), derandomize=derand):
                    mismatches += 1
                    print(f"MISMATCH n={n} p={p} trial={t}: {msg}")
                checked += 1
                if n % 2 == 0:
                    gb = random_bipartite(n, p, next(seeds))
                    for msg in verify_instance(gb, next(seeds), derandomize=False, bipartite=True):
                        mismatches += 1
                        print(f"MISMATCH bipartite n={n} p={p} trial={t}: {msg}")
                    checked += 1
    print(f"{checked} instances checked")
    print(f"{mismatches} mismatches")
    return EXIT_MISMATCH if mismatches else EXIT_OK


BENCH_COLUMNS = ["n", "solver", "seed", "wall_ms", "prefixes_examined",
                 "candidates_generated", "contributing_count", "parity"]


def cmd_bench(args) -> int:
    if args.solver not in ("general", "bipartite", "heldkarp"):
        raise UsageError("bench supports general, bipartite and heldkarp")
    if args.step < 1 or args.n_min < 2 or args.n_max < args.n_min:
        raise UsageError("need 2 <= n-min <= n-max and step >= 1")
    try:
        fh = open(args.out, "w", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from None
    with fh:
        writer = csv.writer(fh)
        writer.writerow(BENCH_COLUMNS)
        for n in range(args.n_min, args.n_max + 1, args.step):
            if args.solver == "bipartite":
                if n % 2:
                    continue
                g = random_bipartite(n, args.density, args.seed)
            else:
                g = random_digraph(n, args.density, args.seed)
            t0 = time.perf_counter()
            _, res = compute(g, args.solver, args.seed, workers=worker_count())
            wall = (time.perf_counter() - t0) * 1000
            writer.writerow([n, args.solver, args.seed, f"{wall:.3f}", res.prefixes_examined,
                             res.candidates_generated, res.contributing_count, res.parity])
            fh.flush()
            print(f"n={n} wall_ms={wall:.1f} parity={res.parity}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hamparity",
                                 description="Parity of the number of directed Hamiltonian cycles.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parity", help="compute the parity for an edge-list file")
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.add_argument("--solver", choices=SOLVERS, default="auto")
    p.add_argument("--seed", type=int, default=0, help="seed for the random diagonal")
    p.add_argument("--derandomize", action="store_true",
                   help="choose the diagonal deterministically, then run the general solver")
    p.add_argument("-K", type=int, default=2, help="modulus for the brute/theorem3 oracles")
    p.set_defaults(func=cmd_parity)

    p = sub.add_parser("gen", help="write a random instance")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="cross-check the solvers against the oracles")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=11)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--densities", default="0.2,0.5,0.8")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-derandomize", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time a solver over a range of n, CSV output")
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--step", type=int, default=2)
    p.add_argument("--solver", default="general")
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out", required=True)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
