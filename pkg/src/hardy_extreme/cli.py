"""Command-line front end.

Exit codes for ``check``: 0 extreme, 1 not extreme, 2 input error,
3 near-threshold rank decision.  ``witness``: 0 verified, 1 verification
failed, 2 input error, 4 the instance is extreme.  ``corpus``: 0 unless some
instance fails an internal consistency check (then 1).
"""
import csv
import io
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click
import numpy as np

from . import __version__
from .config import DEFAULT
from .errors import HardyError, NoWitnessError
from .extremality import NEAR_THRESHOLD, classify, direct_constraint_matrix
from .factorization import canonical_factorize, max_roundtrip_error
from .reports import (
    TOOL,
    build_report,
    dumps,
    factorization_dict,
    load_instance,
    witness_dict,
)
from .witness import witness_for

ENV_PREFIX = "HARDY_EXTREME_"

EXIT_EXTREME, EXIT_NON_EXTREME, EXIT_INPUT, EXIT_NEAR = 0, 1, 2, 3
EXIT_WITNESS_EXTREME = 4


def exit_code(verdict):
    if verdict.m <= verdict.M and verdict.condition_flag == NEAR_THRESHOLD:
        return EXIT_NEAR
    return EXIT_EXTREME if verdict.is_extreme else EXIT_NON_EXTREME


def _opt(name, type_, help_):
    env = ENV_PREFIX + name.lstrip("-").replace("-", "_").upper()
    return click.option(name, type=type_, default=None, envvar=env, show_envvar=True, help=help_)


def tolerance_options(fn):
    for dec in reversed([
        _opt("--rank-tol", float, "Relative singular-value cut for the rank test."),
        _opt("--quad-tol", float, "Convergence tolerance of circle quadrature."),
        _opt("--dec-tol", float, "Tolerance of the witness decomposition check."),
        _opt("--grid-max", int, "Largest quadrature grid (power of two)."),
        _opt("--seed", int, "Seed for randomized selections (recorded in reports)."),
        click.option("--out", type=click.Path(dir_okay=False), default=None,
                     help="Write output here instead of stdout."),
    ]):
        fn = dec(fn)
    return fn


def resolve_config(instance, rank_tol=None, quad_tol=None, dec_tol=None, grid_max=None):
    """Defaults < instance "config" block < environment / flags."""
    cfg = DEFAULT.updated(**instance.config)
    return cfg.updated(rank_tol=rank_tol, quad_tol=quad_tol, dec_tol=dec_tol, grid_max=grid_max)


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


def _fail_input(exc):
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_INPUT)


@click.group()
@click.version_option(__version__, prog_name=TOOL)
def main():
    """Decide extremality in the unit ball of H^1_K and emit certificates."""


@main.command()
@click.argument("instance_file", type=click.Path(dir_okay=False))
@tolerance_options
@click.option("--emit-matrix", is_flag=True, help="Embed the extremality matrix in the report.")
@click.option("--timing", is_flag=True, help="Add wall-clock timing (makes reports non-reproducible).")
def check(instance_file, rank_tol, quad_tol, dec_tol, grid_max, seed, out, emit_matrix, timing):
    """Classify one instance and write a JSON report."""
    t0 = time.perf_counter()
    try:
        inst = load_instance(instance_file)
        cfg = resolve_config(inst, rank_tol, quad_tol, dec_tol, grid_max)
        verdict = classify(inst.polynomial, inst.holes, cfg)
    except (HardyError, ValueError) as exc:
        _fail_input(exc)
    witness, witness_error = None, None
    if not verdict.is_extreme:
        try:
            witness = witness_for(verdict, config=cfg)
        except HardyError as exc:
            witness_error = str(exc)
    report = build_report(
        inst, verdict, cfg, witness=witness, witness_error=witness_error,
        emit_matrix=emit_matrix, seed=seed,
        timing=time.perf_counter() - t0 if timing else None,
    )
    _emit(dumps(report), out)
    sys.exit(exit_code(verdict))


@main.command()
@click.argument("instance_file", type=click.Path(dir_okay=False))
@tolerance_options
def factorize(instance_file, rank_tol, quad_tol, dec_tol, grid_max, seed, out):
    """Print the inner-outer factorization of an instance's polynomial."""
    try:
        inst = load_instance(instance_file)
        cfg = resolve_config(inst, rank_tol, quad_tol, dec_tol, grid_max)
        f = inst.polynomial
        fac = canonical_factorize(f, boundary_delta=cfg.boundary_delta, root_tol=cfg.root_tol)
    except (HardyError, ValueError) as exc:
        _fail_input(exc)
    body = {"tool": TOOL, "version": __version__}
    body.update(factorization_dict(fac))
    body["roundtrip_error"] = max_roundtrip_error(fac, f)
    _emit(dumps(body), out)


@main.command()
@click.argument("instance_file", type=click.Path(dir_okay=False))
@tolerance_options
def witness(instance_file, rank_tol, quad_tol, dec_tol, grid_max, seed, out):
    """Construct and verify a midpoint decomposition for a non-extreme instance."""
    try:
        inst = load_instance(instance_file)
        cfg = resolve_config(inst, rank_tol, quad_tol, dec_tol, grid_max)
        verdict = classify(inst.polynomial, inst.holes, cfg)
    except (HardyError, ValueError) as exc:
        _fail_input(exc)
    if verdict.is_extreme:
        click.echo("instance is extreme; no witness exists", err=True)
        sys.exit(EXIT_WITNESS_EXTREME)
    try:
        w, chk = witness_for(verdict, config=cfg)
    except NoWitnessError as exc:
        click.echo(f"witness construction failed: {exc}", err=True)
        sys.exit(1)
    body = {"tool": TOOL, "version": __version__,
            "normalization_scale": verdict.normalization_scale}
    body.update(witness_dict(w, chk))
    _emit(dumps(body), out)
    sys.exit(0 if chk.passed else 1)


CORPUS_COLUMNS = ["file", "status", "verdict", "m", "M", "rank", "kernel_dim",
                  "flag", "witness", "consistency", "note"]


def corpus_row(path, overrides=None):
    """Classify one corpus file and run the internal consistency checks."""
    row = dict.fromkeys(CORPUS_COLUMNS, "-")
    row["file"] = Path(path).name
    try:
        inst = load_instance(path)
        cfg = resolve_config(inst, **(overrides or {}))
        v = classify(inst.polynomial, inst.holes, cfg)
    except (HardyError, ValueError) as exc:
        row.update(status="error", note=str(exc).replace("\t", " "))
        return row, True
    row.update(status="ok", verdict="extreme" if v.is_extreme else "non-extreme",
               m=v.m, M=v.M, rank=v.rank, kernel_dim=v.kernel_dim, flag=v.condition_flag)
    problems = []
    fac = v.factorization
    direct = direct_constraint_matrix(fac.outer, fac.inner.zeros, v.holes, v.table)
    scale = max(1.0, float(np.max(np.abs(v.matrix.matrix)))) if v.matrix.matrix.size else 1.0
    if v.matrix.matrix.size and np.max(np.abs(direct.matrix - v.matrix.matrix)) > 1e-10 * scale:
        problems.append("matrix routes disagree")
    if v.p0_residual > 1e-9:
        problems.append("p0 not in kernel")
    if v.rank + v.kernel_dim != 2 * v.m + 1:
        problems.append("rank-nullity")
    if v.m > v.M and v.kernel_dim < 2 * v.m + 1 - 2 * v.M:
        problems.append("kernel bound")
    if not v.is_extreme:
        try:
            _, chk = witness_for(v, config=cfg)
            row["witness"] = "pass" if chk.passed else "fail"
            if not chk.passed:
                problems.append("witness failed")
        except HardyError as exc:
            row["witness"] = "none"
            problems.append(f"witness: {exc}")
    if inst.expect and inst.expect != row["verdict"]:
        problems.append(f"expected {inst.expect}")
    row["consistency"] = "FAIL" if problems else "ok"
    row["note"] = "; ".join(problems) or "-"
    return row, not problems


@main.command()
@click.argument("directory", type=click.Path(file_okay=False, exists=True))
@tolerance_options
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes.")
def corpus(directory, rank_tol, quad_tol, dec_tol, grid_max, seed, out, jobs):
    """Classify every *.json instance in DIRECTORY; print a tab-separated table."""
    files = sorted(Path(directory).glob("*.json"), key=lambda p: p.name)
    overrides = dict(rank_tol=rank_tol, quad_tol=quad_tol, dec_tol=dec_tol, grid_max=grid_max)
    args = [(str(p), overrides) for p in files]
    if jobs > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(corpus_row, *zip(*args)))
    else:
        results = [corpus_row(*a) for a in args]

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CORPUS_COLUMNS, delimiter="\t", lineterminator="\n")
    writer.writeheader()
    for row, _ in results:
        writer.writerow(row)
    rows = [r for r, _ in results]
    n_ok = sum(r["status"] == "ok" for r in rows)
    n_fail = sum(r["consistency"] == "FAIL" for r in rows)
    buf.write(
        f"# total={len(rows)} classified={n_ok} errors={len(rows) - n_ok} "
        f"extreme={sum(r['verdict'] == 'extreme' for r in rows)} "
        f"non_extreme={sum(r['verdict'] == 'non-extreme' for r in rows)} "
        f"consistency_failures={n_fail}\n"
    )
    _emit(buf.getvalue(), out)
    sys.exit(1 if n_fail else 0)


if __name__ == "__main__":
    main()
