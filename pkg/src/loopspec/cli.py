"""Command-line front end.

Subcommands: analyze (report one graph), lift (write the lifted graph),
verify (run all spectral checks), generate (seeded random graph), sweep
(verification campaigns, exhaustive or randomized).

Exit codes: 0 success, 1 at least one verification check failed, 2 usage,
I/O, or computation error. Floats are printed with 9 significant digits so
output is stable across platforms. The environment variable LOOPSPEC_TOL
(a decimal string) overrides the default eigenvalue match tolerance.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import (
    EdgeListError,
    Graph,
    connected_components,
    is_pseudo_connected,
    read_edge_list,
    write_edge_list,
)
from .laplacian import format_matrix, laplacian_of
from .lifting import lift
from .oracle import GenerationError, GeneratorConfig, enumerate_graphs, random_graph
from .spectral import (
    JacobiConvergenceError,
    MATCH_TOL,
    VerificationReport,
    degree_upper_bound,
    eigen_sym,
    fiedler_lower_bound,
    verify_all,
)

__all__ = ["SweepResult", "main", "run_sweep"]

_EXIT_OK = 0
_EXIT_CHECK_FAILED = 1
_EXIT_ERROR = 2


@dataclass(frozen=True)
class SweepResult:
    """Outcome of a verification campaign.

    ``failures`` holds one record per failing graph with enough detail to
    reproduce it (enumeration index or generator seed) plus the failed check
    ids and their margins. ``passed + len(failures) == total`` always.
    """

    mode: str
    total: int
    passed: int
    failures: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "total": self.total,
            "passed": self.passed,
            "failures": [dict(f) for f in self.failures],
        }


def _fmt(x: float) -> str:
    return format(float(x), ".9g")


def _round9(obj):
    """Recursively round floats to 9 significant digits for stable JSON."""
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {k: _round9(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round9(v) for v in obj]
    return obj


def _print_json(payload: dict) -> None:
    print(json.dumps(_round9(payload), indent=2))


def _match_tol() -> float:
    raw = os.environ.get("LOOPSPEC_TOL")
    if raw is None:
        return MATCH_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ValueError(f"LOOPSPEC_TOL is not a number: {raw!r}") from None
    if tol <= 0:
        raise ValueError(f"LOOPSPEC_TOL must be positive, got {raw!r}")
    return tol


def _load(path: str) -> Graph:
    try:
        return read_edge_list(path)
    except EdgeListError as exc:
        raise EdgeListError(f"{path}: {exc}") from exc


def _bound_rows(g: Graph, eigenvalues: np.ndarray) -> list[dict]:
    """Applicable eigenvalue bounds with margins (positive = slack)."""
    rows: list[dict] = []
    lam_max = float(eigenvalues[-1])
    loopless = g.loop_count == 0
    if loopless and g.n >= 2 and connected_components(g).count == 1:
        bound = fiedler_lower_bound(g.n)
        value = float(eigenvalues[1])
        rows.append(
            {"id": "eq2", "kind": "lower", "bound": bound, "value": value, "margin": value - bound}
        )
    bound = degree_upper_bound(g)
    rows.append(
        {
            "id": "eq3" if loopless else "eq8",
            "kind": "upper",
            "bound": bound,
            "value": lam_max,
            "margin": bound - lam_max,
        }
    )
    return rows


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _load(args.path)
    lap = laplacian_of(g)
    spectrum = eigen_sym(lap)
    parts = connected_components(g)
    pseudo = is_pseudo_connected(g)
    loopless = g.loop_count == 0
    algebraic = float(spectrum.eigenvalues[1]) if loopless and g.n >= 2 else None
    bounds = _bound_rows(g, spectrum.eigenvalues)

    if args.format == "json":
        _print_json(
            {
                "n": g.n,
                "q": g.loop_count,
                "components": parts.count,
                "pseudo_connected": pseudo,
                "laplacian": lap.tolist(),
                "eigenvalues": [float(v) for v in spectrum.eigenvalues],
                "algebraic_connectivity": algebraic,
                "bounds": bounds,
            }
        )
        return _EXIT_OK

    print(f"n: {g.n}")
    print(f"loops: {g.loop_count}")
    print(f"components: {parts.count}")
    print(f"pseudo-connected: {'yes' if pseudo else 'no'}")
    print("laplacian:")
    print(format_matrix(lap))
    print("eigenvalues:", " ".join(_fmt(v) for v in spectrum.eigenvalues))
    if algebraic is not None:
        print(f"algebraic connectivity: {_fmt(algebraic)}")
    for row in bounds:
        rel = ">=" if row["kind"] == "lower" else "<="
        print(
            f"{row['id']}: {_fmt(row['value'])} {rel} {_fmt(row['bound'])} "
            f"(margin {_fmt(row['margin'])})"
        )
    return _EXIT_OK


def cmd_lift(args: argparse.Namespace) -> int:
    g = _load(args.path)
    lifted = lift(g)
    write_edge_list(lifted.lifted, args.out)
    summary = {
        "n": g.n,
        "q": g.loop_count,
        "lifted_n": lifted.lifted.n,
        "lifted_edges": len(lifted.lifted.edges),
        "middle": lifted.middle,
        "out": args.out,
    }
    if g.loop_count == 0:
        summary["note"] = "no self-loops, middle vertex is isolated"
    _print_json(summary)
    return _EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load(args.path)
    report = verify_all(g, match_tol=_match_tol())
    _print_json(report.to_json_dict())
    return _EXIT_OK if report.passed else _EXIT_CHECK_FAILED


def cmd_generate(args: argparse.Namespace) -> int:
    cfg = GeneratorConfig(
        n=args.n,
        p_edge=args.p_edge,
        p_loop=args.p_loop,
        seed=args.seed,
        require=args.require,
    )
    g = random_graph(cfg)
    write_edge_list(g, args.out)
    _print_json(
        {
            "config": cfg.to_json_dict(),
            "n": g.n,
            "edges": len(g.edges),
            "loops": g.loop_count,
            "out": args.out,
        }
    )
    return _EXIT_OK


def _failure_record(report: VerificationReport, **origin) -> dict:
    failed = report.failed_checks()
    record = dict(origin)
    record["failed_checks"] = [c.id for c in failed]
    record["margins"] = {c.id: c.margin for c in failed}
    return record


def run_sweep(
    mode: str,
    n_max: int,
    samples: int = 0,
    seed: int = 0,
    n_min: int = 2,
    p_edge: float = 0.4,
    p_loop: float = 0.3,
    match_tol: float = MATCH_TOL,
) -> SweepResult:
    """Verify a campaign of graphs and collect failures.

    Exhaustive mode checks every graph on 1..n_max vertices. Random mode
    draws ``samples`` graphs with n uniform in [n_min, n_max]; per-sample
    seeds are derived from ``seed`` up front, so any failure is reproducible
    from its record alone without replaying the whole sweep.
    """
    failures: list[dict] = []
    total = 0
    if mode == "exhaustive":
        for n in range(1, n_max + 1):
            for index, g in enumerate(enumerate_graphs(n)):
                total += 1
                report = verify_all(g, match_tol=match_tol)
                if not report.passed:
                    failures.append(_failure_record(report, n=n, index=index))
    else:
        root = np.random.default_rng(seed)
        child_seeds = root.integers(0, 2**63, size=samples, dtype=np.uint64)
        sizes = root.integers(n_min, n_max + 1, size=samples)
        for i in range(samples):
            total += 1
            cfg = GeneratorConfig(
                n=int(sizes[i]),
                p_edge=p_edge,
                p_loop=p_loop,
                seed=int(child_seeds[i]),
            )
            g = random_graph(cfg)
            report = verify_all(g, match_tol=match_tol)
            if not report.passed:
                failures.append(
                    _failure_record(report, sample=i, config=cfg.to_json_dict())
                )
    return SweepResult(mode, total, total - len(failures), tuple(failures))


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.mode == "exhaustive" and args.n_max > 5:
        raise ValueError(f"exhaustive sweeps are capped at n-max 5, got {args.n_max}")
    if args.n_min > args.n_max:
        raise ValueError(f"n-min {args.n_min} exceeds n-max {args.n_max}")
    result = run_sweep(
        mode=args.mode,
        n_max=args.n_max,
        samples=args.samples,
        seed=args.seed,
        n_min=args.n_min,
        p_edge=args.p_edge,
        p_loop=args.p_loop,
        match_tol=_match_tol(),
    )
    _print_json(result.to_json_dict())
    return _EXIT_OK if not result.failures else _EXIT_CHECK_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopspec",
        description="Laplacian spectra of graphs with self-loops: analysis, lifting, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report structure, Laplacian, spectrum, and bounds")
    p.add_argument("path", help="edge-list file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("lift", help="write the loopless lifted graph")
    p.add_argument("path", help="edge-list file")
    p.add_argument("out", help="output edge-list file for the lifted graph")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", help="run all spectral checks, exit 1 on failure")
    p.add_argument("path", help="edge-list file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a seeded random graph")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--p-edge", type=float, required=True, help="per-pair edge probability")
    p.add_argument("--p-loop", type=float, required=True, help="per-vertex loop probability")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument(
        "--require",
        choices=("none", "connected", "pseudo_connected"),
        default="none",
        help="resample until the graph satisfies this predicate",
    )
    p.add_argument("--out", required=True, help="output edge-list file")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("sweep", help="verify a campaign of graphs")
    p.add_argument("--mode", choices=("random", "exhaustive"), default="random")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2, help="random mode only")
    p.add_argument("--samples", type=int, default=1000, help="random mode only")
    p.add_argument("--seed", type=int, default=0, help="random mode only")
    p.add_argument("--p-edge", type=float, default=0.4, help="random mode only")
    p.add_argument("--p-loop", type=float, default=0.3, help="random mode only")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EdgeListError, OSError, ValueError, GenerationError, JacobiConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
