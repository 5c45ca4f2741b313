#!/usr/bin/env python3

"""
Command-line front end.

    python cli.py solve --example 1 --alpha 1.2 --n 63 --precond tau --out report.json
    python cli.py spectrum --example 1 --alpha 1.8 --size 64 --method lanczos
    python cli.py table --table 1 --max-size 1024 --out table1.csv
    python cli.py rerun --manifest report.json

Exit codes: 0 success, 2 usage, 3 numerical failure, 4 resource limit.
"""

import argparse
import sys
import time

import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from config import SIZE_CONVENTIONS, config, interior_points
from errors import DefinitenessError, NumericalError, RieszTauError, UsageError
from krylov import pcg
from preconditioners import PRECONDITIONER_CHOICES, build_preconditioner
from problems import (
    DEFAULT_ALPHAS,
    EXAMPLE_IDS,
    RieszProblem,
    error_norms,
    example_system,
    riesz_linear_system,
)
from run_helpers import seed as seed_helper
from run_helpers.manifest import RunManifest, load_manifest
from run_helpers.output_files import (
    DEFAULT_FORMAT,
    FORMAT_CHOICES,
    write_eigenvalues_csv,
    write_report,
    write_table_csv,
)
from spectral import (
    SPECTRUM_METHODS,
    dense_spectrum_report,
    lanczos_extremes,
)
from table_layouts import (
    SKIPPED,
    TABLE_CHOICES,
    TABLE_LAYOUTS,
    UNCONVERGED,
    format_alphas,
)

SEPARATOR = "===================================="


def add_problem_arguments(parser):
    parser.add_argument("--example", type=int, choices=EXAMPLE_IDS)
    parser.add_argument("--dim", type=int, choices=[1, 2, 3])
    parser.add_argument("--alpha", type=float, nargs="+")
    parser.add_argument("--d", type=float, nargs="+")
    parser.add_argument(
        "--domain", type=float, nargs="+", help="a_1 b_1 [a_2 b_2 ...]"
    )
    parser.add_argument("--n", type=int, nargs="+", help="Interior points per dimension")
    parser.add_argument(
        "--size", type=int, nargs="+", help="Published grid size, e.g. 64 for 2^6"
    )
    parser.add_argument(
        "--size-convention", choices=SIZE_CONVENTIONS, default=config.size_convention
    )
    parser.add_argument(
        "--precond", choices=PRECONDITIONER_CHOICES, default="tau"
    )
    parser.add_argument("--bandwidth", type=int, default=config.banded_bandwidth)
    parser.add_argument("--out", help="Report path")
    parser.add_argument("--format", choices=FORMAT_CHOICES, default=DEFAULT_FORMAT)


def build_parser():
    parser = argparse.ArgumentParser(
        description="tau-preconditioned solvers for Riesz fractional diffusion equations"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Solve one problem with PCG")
    add_problem_arguments(solve)
    solve.add_argument("--tol", type=float, default=config.pcg_tol)
    solve.add_argument("--max-iter", type=int, default=config.pcg_max_iter)
    solve.add_argument(
        "--seed",
        type=int,
        default=config.rhs_seed,
        help="Seed of the random Example 4 right-hand side, negative for random",
    )
    solve.add_argument(
        "--allow-indefinite",
        action="store_true",
        help="Run PCG even when the preconditioner is indefinite",
    )
    solve.set_defaults(func=cmd_solve)

    spectrum = commands.add_parser(
        "spectrum", help="Extreme eigenvalues of the preconditioned operator"
    )
    add_problem_arguments(spectrum)
    spectrum.add_argument("--method", choices=SPECTRUM_METHODS, default="dense")
    spectrum.add_argument("--max-iter", type=int, default=config.lanczos_max_iter)
    spectrum.add_argument("--tol", type=float, default=config.lanczos_tol)
    spectrum.add_argument(
        "--seed", type=int, default=0, help="Lanczos start vector seed, negative for random"
    )
    spectrum.add_argument("--eigenvalues-csv", help="Write every eigenvalue (dense only)")
    spectrum.set_defaults(func=cmd_spectrum)

    table = commands.add_parser("table", help="Reproduce an iteration table as CSV")
    table.add_argument("--table", type=int, required=True)
    table.add_argument("--max-size", type=int, default=1024)
    table.add_argument(
        "--size-convention", choices=SIZE_CONVENTIONS, default=config.size_convention
    )
    table.add_argument("--out", help="CSV path")
    table.set_defaults(func=cmd_table)

    rerun = commands.add_parser("rerun", help="Replay a run from its manifest")
    rerun.add_argument("--manifest", required=True)
    rerun.set_defaults(func=cmd_rerun)

    return parser


def _per_dimension(values, m, name):
    if values is None:
        return None
    if len(values) == 1:
        return list(values) * m
    if len(values) != m:
        raise UsageError(f"--{name} needs 1 or {m} values, got {len(values)}")
    return list(values)


def system_from_args(args, seed=None):
    if args.n and args.size:
        raise UsageError("Give either --n or --size, not both")
    n = args.n
    if args.size:
        n = [interior_points(s, args.size_convention) for s in args.size]

    if args.example is not None:
        if args.d or args.domain or args.dim:
            raise UsageError("--d, --domain and --dim apply to explicit problems only")
        m = 2 if args.example == 4 else args.example
        alphas = _per_dimension(args.alpha, m, "alpha") or DEFAULT_ALPHAS[args.example]
        n = _per_dimension(n, m, "n")
        return example_system(args.example, tuple(alphas), tuple(n) if n else None, seed)

    if not args.alpha:
        raise UsageError("Give --example or an explicit problem with --alpha")
    m = args.dim or len(args.alpha)
    alphas = _per_dimension(args.alpha, m, "alpha")
    n = _per_dimension(n or [63], m, "n")
    d = _per_dimension(args.d, m, "d")
    domain = None
    if args.domain:
        bounds = _per_dimension(args.domain, 2 * m, "domain")
        domain = tuple(zip(bounds[0::2], bounds[1::2]))
    problem = RieszProblem(alphas=tuple(alphas), n=tuple(n), d=d and tuple(d), domain=domain)
    return riesz_linear_system(problem, label=f"riesz-{m}d")


def _seed(args, argv, purpose):
    seed = seed_helper.generate(args.seed, purpose)
    if seed != args.seed:
        # replay with the seed that was drawn
        argv = list(argv) + ["--seed", str(seed)]
    return seed, argv


def _manifest(args, argv, **extra):
    parameters = {k: v for k, v in vars(args).items() if k != "func"}
    return RunManifest(
        command=args.command,
        argv=list(argv),
        parameters=parameters,
        **extra,
    )


def _finish(args, report):
    if args.out:
        path = write_report(args.out, report, args.format)
        print(f"✅ Report written to {path}")
    return 0


def cmd_solve(args, argv):
    if args.tol <= 0:
        raise UsageError(f"--tol must be positive, got {args.tol}")
    if args.max_iter < 0:
        raise UsageError(f"--max-iter must be non-negative, got {args.max_iter}")

    start = time.time()
    seed = None
    if args.example == 4:
        seed, argv = _seed(args, argv, "right-hand side")
    print(f"⏳ Building {args.precond} preconditioner")
    system = system_from_args(args, seed)
    P = build_preconditioner(args.precond, system, bandwidth=args.bandwidth)
    build_time = time.time() - start
    if not P.definite and not args.allow_indefinite:
        raise DefinitenessError(
            f"{args.precond} preconditioner is indefinite; pass --allow-indefinite to run PCG anyway"
        )
    print(f"✅ {system.label} ready, N = {system.size}, took {build_time:.2f}s")

    print(f"⏳ Running PCG (tol {args.tol:g})")
    result = pcg(
        system.operator,
        P,
        system.rhs,
        tol=args.tol,
        max_iter=args.max_iter,
        check_definite=not args.allow_indefinite,
    )
    status = "converged" if result.converged else "stopped"
    print(
        f"✅ PCG {status} after {result.iterations} iterations, "
        f"relative residual {result.final_residual:.3e}, took {result.wall_time:.2f}s"
    )

    max_error = l2_error = None
    if system.problem is not None:
        max_error, l2_error = error_norms(system.problem, result.solution)
        print(f"Max error: {max_error:.3e}")

    manifest = _manifest(
        args,
        argv,
        tol=args.tol,
        seed=system.seed,
        wall_times={"build": build_time, "solve": result.wall_time},
    )
    report = {
        "manifest": manifest.model_dump(),
        "iterations": result.iterations,
        "residual_history": result.residual_history,
        "lambda_min": None,
        "lambda_max": None,
        "max_error": max_error,
        "wall_ms": 1000.0 * result.wall_time,
        "converged": result.converged,
        "true_residual": result.true_residual,
        "l2_error": l2_error,
        "preconditioner": args.precond,
        "size": system.size,
    }
    return _finish(args, report)


def cmd_spectrum(args, argv):
    if args.eigenvalues_csv and args.method != "dense":
        raise UsageError("--eigenvalues-csv needs --method dense")
    if args.tol <= 0:
        raise UsageError(f"--tol must be positive, got {args.tol}")

    system = system_from_args(args)
    P = None
    if args.precond != "none":
        P = build_preconditioner(args.precond, system, bandwidth=args.bandwidth)

    print(f"⏳ Computing {args.method} spectrum of {system.label}, N = {system.size}")
    start = time.time()
    seed = None
    if args.method == "dense":
        spectrum = dense_spectrum_report(system.operator, P)
    else:
        seed, argv = _seed(args, argv, "Lanczos start vector")
        spectrum = lanczos_extremes(system.operator, P, args.max_iter, args.tol, seed)
    elapsed = time.time() - start
    print(
        f"✅ lambda_min {spectrum.lambda_min:.6f}, lambda_max {spectrum.lambda_max:.6f}, "
        f"condition number {spectrum.condition_number:.4f}, took {elapsed:.2f}s"
    )

    if args.eigenvalues_csv:
        path = write_eigenvalues_csv(args.eigenvalues_csv, spectrum.eigenvalues)
        print(f"✅ Eigenvalues written to {path}")

    manifest = _manifest(
        args,
        argv,
        tol=args.tol,
        seed=seed,
        wall_times={"spectrum": elapsed},
    )
    report = {
        "manifest": manifest.model_dump(),
        "iterations": spectrum.iterations,
        "residual_history": [],
        "lambda_min": spectrum.lambda_min,
        "lambda_max": spectrum.lambda_max,
        "max_error": None,
        "wall_ms": 1000.0 * elapsed,
        "method": spectrum.method,
        "converged": spectrum.converged,
        "condition_number": spectrum.condition_number,
        "ritz_residuals": list(spectrum.residuals),
        "preconditioner": args.precond,
        "size": system.size,
    }
    return _finish(args, report)


def run_table_cell(layout, alphas, size, convention):
    n = interior_points(size, convention)
    m = 2 if layout.example == 4 else layout.example
    system = example_system(layout.example, alphas, (n,) * m)

    row = {"alpha": format_alphas(alphas), "size": size}
    wall = {}
    for name, key in layout.columns:
        if key is None:
            row[name] = SKIPPED
            continue
        start = time.perf_counter()
        try:
            P = build_preconditioner(key, system)
            result = pcg(
                system.operator,
                P,
                system.rhs,
                tol=config.pcg_tol,
                max_iter=config.table_max_iter,
                check_definite=False,
            )
            row[name] = result.iterations if result.converged else UNCONVERGED
        except NumericalError:
            row[name] = UNCONVERGED
        wall[f"{name}_wall_ms"] = 1000.0 * (time.perf_counter() - start)
    row.update(wall)
    return row


def run_table(table_id, max_size, convention=None) -> pd.DataFrame:
    if table_id not in TABLE_LAYOUTS:
        raise UsageError(f"Unknown table: {table_id}. Choose from {TABLE_CHOICES}")
    layout = TABLE_LAYOUTS[table_id]
    convention = convention or config.size_convention
    cells = [
        (alphas, size)
        for alphas in layout.alphas
        for size in layout.sizes
        if size <= max_size
    ]
    if not cells:
        raise UsageError(
            f"--max-size {max_size} is below the smallest size {min(layout.sizes)} of table {table_id}"
        )

    results = Parallel(n_jobs=config.threads, prefer="threads", return_as="generator")(
        delayed(run_table_cell)(layout, alphas, size, convention) for alphas, size in cells
    )
    # the bar advances as cells finish, in submission order
    rows = list(tqdm(results, total=len(cells), desc=f"Table {table_id}"))
    columns = ["alpha", "size"] + layout.column_names()
    timing = [f"{name}_wall_ms" for name, key in layout.columns if key is not None]
    return pd.DataFrame(rows, columns=columns + timing)


def cmd_table(args, argv):
    print(SEPARATOR)
    print(f"⏳ Table {args.table} up to size {args.max_size} ({args.size_convention})")
    start = time.time()
    frame = run_table(args.table, args.max_size, args.size_convention)
    print(f"✅ Table {args.table} finished, took {time.time() - start:.2f}s")
    skipped = [name for name, key in TABLE_LAYOUTS[args.table].columns if key is None]
    if skipped:
        print(f"⚠️  Multigrid columns not implemented, emitted as '{SKIPPED}': {skipped}")
    print(SEPARATOR)
    print(frame.to_string(index=False))

    if args.out:
        path = write_table_csv(args.out, frame)
        print(f"✅ Table written to {path}")
    return 0


def cmd_rerun(args, argv):
    manifest = load_manifest(args.manifest)
    if manifest.command == "rerun":
        raise UsageError("A rerun manifest cannot be replayed again")
    print(f"⏳ Replaying {manifest.command} from {args.manifest} (version {manifest.version})")
    return main(manifest.argv)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, argv)
    except RieszTauError as e:
        print(f"❌ {e}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
