#!/usr/bin/env python3
# Copyright (c) 2025, quditkit developers
#
# SPDX-License-Identifier: MIT

"""
quditkit command line

Simulation, compilation, algorithm demos and Hamiltonian utilities. Stdout
carries JSON (or CSV for ``run --format csv``); diagnostics go to stderr.

Exit codes: 0 ok, 2 parse or parameter error, 3 dimension mismatch,
4 numeric validation failure.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Any, Optional

import click
import numpy as np
from loguru import logger
from pydantic import ValidationError
from rich.console import Console

from . import __version__
from .algorithms import (
    GRID_POINTS,
    AffineOracle,
    PermutationOracle,
    bernstein_vazirani,
    deutsch_jozsa,
    dft_matrix,
    grover,
    parity,
    phase_estimate,
    phase_fit,
    qft_circuit,
)
from .config import (
    DEFAULT_SEED,
    LOG_LEVEL_ENV,
    RECONSTRUCTION_TOL,
    SEED_ENV,
    RunConfig,
)
from .core import Register, basis_state, histogram, probabilities
from .decompose import compile_unitary, gate_count_bound
from .errors import QuditKitError
from .gates import toffoli_gate_counts
from .geodesic import body_weights, cost, expand, gell_mann_basis, project_local
from .io import (
    amplitudes_csv,
    circuit_to_dict,
    dump_json,
    expansion_to_dict,
    load_circuit,
    load_counts,
    load_expansion,
    load_matrix,
    load_unitary,
    load_vector,
)

EXIT_PARSE = 2


def _digits(value: Optional[str]) -> Optional[tuple[int, ...]]:
    """Parse ``"0,2,1"`` into a digit tuple; range checks are left to the caller."""
    if value is None:
        return None
    text = value.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def _emit(ctx: click.Context, payload: dict[str, Any]) -> None:
    payload.setdefault("seed", ctx.obj.get("seed", DEFAULT_SEED))
    if ctx.obj.get("pretty"):
        Console().print_json(dump_json(payload))
    else:
        click.echo(dump_json(payload))


def _fail(exc: Exception) -> None:
    if isinstance(exc, QuditKitError):
        click.echo(f"error: {exc}", err=True)
        sys.exit(exc.exit_code)
    if isinstance(exc, ValidationError):
        click.echo(f"error: invalid input: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    raise exc


def _digit_key(digits) -> str:
    return "-".join(str(int(k)) for k in digits)


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--log-level",
    default="WARNING",
    envvar=LOG_LEVEL_ENV,
    show_default=True,
    help="Log level for stderr diagnostics",
)
@click.option("--pretty", is_flag=True, help="Pretty-print JSON for humans")
@click.option(
    "--seed",
    default=DEFAULT_SEED,
    envvar=SEED_ENV,
    show_default=True,
    help="Seed recorded in every output for replay",
)
@click.pass_context
def cli(ctx: click.Context, log_level: str, pretty: bool, seed: int):
    """Qudit circuit simulation, compilation and algorithm demos."""
    logger.remove()
    logger.add(sys.stderr, level=log_level.upper())
    logger.enable("quditkit")
    ctx.ensure_object(dict)
    ctx.obj["pretty"] = pretty
    ctx.obj["seed"] = seed


@cli.command()
@click.argument("circuit", type=click.Path(path_type=Path))
@click.option("--digits", help="Initial basis digits, e.g. 0,1 (default all zero)")
@click.option("--shots", default=0, help="0 prints exact amplitudes")
@click.option("--seed", type=int, envvar=SEED_ENV, help="Sampling seed")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "csv"]),
    default="json",
    help="Output format",
)
@click.pass_context
def run(
    ctx: click.Context,
    circuit: Path,
    digits: Optional[str],
    shots: int,
    seed: Optional[int],
    output_format: str,
):
    """Simulate a circuit file from a basis state."""
    try:
        config = RunConfig(
            circuit=circuit,
            digits=_digits(digits),
            shots=shots,
            seed=ctx.obj.get("seed", DEFAULT_SEED) if seed is None else seed,
            output_format=output_format,
        )
        parsed = load_circuit(config.circuit)
        register = parsed.register
        start = config.digits or (0,) * register.n_sites
        final = parsed.run(basis_state(register, start))
    except (QuditKitError, ValidationError) as e:
        _fail(e)

    if config.shots == 0:
        if config.output_format == "csv":
            click.echo(amplitudes_csv(final), nl=False)
            return
        payload = {
            "dims": register.dims,
            "digits": start,
            "shots": 0,
            "seed": config.seed,
            "amplitudes": [[a.real, a.imag] for a in final.amplitudes],
            "probabilities": probabilities(final),
        }
    else:
        counts = histogram(final, config.shots, config.seed)
        if config.output_format == "csv":
            click.echo("digits,count")
            for key, count in sorted(counts.items()):
                click.echo(f"{_digit_key(key)},{count}")
            return
        payload = {
            "dims": register.dims,
            "digits": start,
            "shots": config.shots,
            "seed": config.seed,
            "counts": {_digit_key(k): c for k, c in sorted(counts.items())},
        }
    _emit(ctx, payload)


@cli.command()
@click.argument("matrix", type=click.Path(path_type=Path))
@click.option("--d", "d", type=int, required=True, help="Local dimension (>= 3)")
@click.option("--n", "n", type=int, required=True, help="Number of qudits")
@click.option("--no-peephole", is_flag=True, help="Skip permutation cancellation")
@click.pass_context
def decompose(ctx: click.Context, matrix: Path, d: int, n: int, no_peephole: bool):
    """Compile a unitary CSV into elementary qudit gates."""
    try:
        register = Register.uniform(d, n)
        u = load_unitary(matrix, register.dims)
        report = compile_unitary(u, register, peephole=not no_peephole)
    except (QuditKitError, ValidationError) as e:
        _fail(e)

    payload = report.summary()
    payload["params"] = {"d": d, "n": n, "peephole": not no_peephole}
    payload["circuit"] = circuit_to_dict(report.circuit())
    _emit(ctx, payload)
    if report.reconstruction_error > RECONSTRUCTION_TOL:
        click.echo(
            f"error: reconstruction error {report.reconstruction_error:.3e} "
            f"exceeds {RECONSTRUCTION_TOL:g}",
            err=True,
        )
        sys.exit(4)


@cli.command()
@click.option("--d", "d", type=int, required=True, help="Local dimension")
@click.option("--n", "n", type=int, required=True, help="Number of qudits")
@click.pass_context
def gatecount(ctx: click.Context, d: int, n: int):
    """Analytical gate-count bounds."""
    if d < 2 or n < 1:
        raise click.BadParameter("need d >= 2 and n >= 1")
    payload: dict[str, Any] = {
        "params": {"d": d, "n": n},
        "compile_bound": gate_count_bound(n, d),
    }
    if n >= 2:
        qudit, tree, qubit = toffoli_gate_counts(n)
        payload["toffoli"] = {"qudit_target": qudit, "tree": tree, "qubit_best": qubit}
    _emit(ctx, payload)


@cli.command()
@click.option("--d", "d", type=int, required=True, help="Local dimension")
@click.option("--n", "n", type=int, required=True, help="Number of qudits")
@click.option("--show-circuit", is_flag=True, help="Include the circuit file")
@click.pass_context
def qft(ctx: click.Context, d: int, n: int, show_circuit: bool):
    """Build the qudit QFT circuit and check it against the DFT matrix."""
    try:
        circuit = qft_circuit(d, n)
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    error = float(np.max(np.abs(circuit.unitary() - dft_matrix(d**n))))
    payload: dict[str, Any] = {
        "params": {"d": d, "n": n},
        "gate_count": len(circuit),
        "two_qudit_count": circuit.two_qudit_count,
        "max_abs_error": error,
    }
    if show_circuit:
        payload["circuit"] = circuit_to_dict(circuit)
    _emit(ctx, payload)


@cli.command()
@click.argument("unitary", type=click.Path(path_type=Path))
@click.argument("eigvec", type=click.Path(path_type=Path))
@click.option("--d", "d", type=int, required=True, help="Control dimension")
@click.option("--t", "t", type=int, required=True, help="Number of control qudits")
@click.pass_context
def pea(ctx: click.Context, unitary: Path, eigvec: Path, d: int, t: int):
    """Phase estimation of a unitary CSV on an eigenvector CSV."""
    try:
        result = phase_estimate(d, t, load_unitary(unitary), load_vector(eigvec))
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    _emit(
        ctx,
        {
            "params": {"d": d, "t": t},
            "digits": result.digits,
            "value": result.value,
            "probability": result.probability,
            "exact": result.exact,
            "phase_rad": result.phase,
            "phase_over_pi": result.phase / np.pi,
        },
    )


@cli.command("grover")
@click.option("--d", "d", type=int, required=True, help="Local dimension")
@click.option("--n", "n", type=int, required=True, help="Number of qudits")
@click.option("--marked", required=True, help="Digits of the marked item, e.g. 1,2")
@click.option("--iters", type=int, help="Iterations (default round(pi/4 sqrt N))")
@click.option("--phi-s", type=float, default=float(np.pi), help="Oracle phase")
@click.option("--phi-a", type=float, default=float(np.pi), help="Diffusion phase")
@click.pass_context
def grover_cmd(
    ctx: click.Context,
    d: int,
    n: int,
    marked: str,
    iters: Optional[int],
    phi_s: float,
    phi_a: float,
):
    """Grover search for one marked basis item."""
    try:
        result = grover(d, n, _digits(marked), (phi_s, phi_a), iters)
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    _emit(
        ctx,
        {
            "params": {
                "d": d,
                "n": n,
                "marked": _digits(marked),
                "phi_s": phi_s,
                "phi_a": phi_a,
            },
            "iterations": result.iterations,
            "success_probability": result.success_probability,
            "closed_form": result.closed_form,
        },
    )


@cli.command("parity")
@click.option("--d", "d", type=int, required=True, help="Local dimension")
@click.option("--perm", required=True, help="Permutation images, e.g. 0,2,1")
@click.pass_context
def parity_cmd(ctx: click.Context, d: int, perm: str):
    """Single-query permutation parity."""
    try:
        oracle = PermutationOracle(d=d, mapping=_digits(perm))
        result = parity(oracle)
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    _emit(
        ctx,
        {
            "params": {"d": d, "perm": oracle.mapping},
            "label": result.label,
            "outcome": result.outcome,
            "probability": result.probability,
            "oracle_calls": result.oracle_calls,
        },
    )


@cli.command()
@click.option("--d", "d", type=int, required=True, help="Local dimension")
@click.option("--r", "r", type=int, help="Number of input qudits (with --table)")
@click.option("--table", help="Function values f(0..d^r-1), comma separated")
@click.option("--coeffs", help="Affine coefficients a0,a1,...,ar")
@click.pass_context
def dj(
    ctx: click.Context,
    d: int,
    r: Optional[int],
    table: Optional[str],
    coeffs: Optional[str],
):
    """Deutsch-Jozsa: constant or balanced in one query."""
    if (table is None) == (coeffs is None):
        click.echo("error: give exactly one of --table or --coeffs", err=True)
        sys.exit(EXIT_PARSE)
    try:
        if coeffs is not None:
            oracle = AffineOracle(d=d, coeffs=_digits(coeffs))
            result = deutsch_jozsa(oracle)
            params = {"d": d, "coeffs": oracle.coeffs}
        else:
            if r is None:
                raise click.BadParameter("--table needs --r")
            result = deutsch_jozsa(_digits(table), d=d, r=r)
            params = {"d": d, "r": r, "table": _digits(table)}
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    _emit(
        ctx,
        {
            "params": params,
            "kind": result.kind,
            "coeffs": result.coeffs,
            "zero_probability": result.zero_probability,
            "oracle_calls": result.oracle_calls,
        },
    )


@cli.command()
@click.option("--d", "d", type=int, required=True, help="Local dimension")
@click.option("--string", "hidden", required=True, help="Hidden string g, e.g. 1,2")
@click.pass_context
def bv(ctx: click.Context, d: int, hidden: str):
    """Bernstein-Vazirani: recover g from f(x) = g.x mod d."""
    g = _digits(hidden)
    try:
        result = bernstein_vazirani(d, len(g), g)
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    _emit(
        ctx,
        {
            "params": {"d": d, "string": g},
            "recovered": result.string,
            "probability": result.probability,
            "oracle_calls": result.oracle_calls,
        },
    )


@cli.command("phase-fit")
@click.argument("counts", type=click.Path(path_type=Path))
@click.option("--grid-points", default=GRID_POINTS, show_default=True, help="Grid size")
@click.pass_context
def phase_fit_cmd(ctx: click.Context, counts: Path, grid_points: int):
    """Least-squares phase from qutrit control counts (n, count CSV)."""
    try:
        raw = load_counts(counts)
        result = phase_fit(raw, grid_points)
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    _emit(
        ctx,
        {
            "params": {"counts": raw, "grid_points": grid_points},
            "phi_hat_rad": result.phi_hat,
            "phi_hat_over_pi": result.phi_hat_over_pi,
            "mse": result.mse,
        },
    )


@cli.command()
@click.argument("d", type=int)
@click.option("--matrices", is_flag=True, help="Include the matrices")
@click.pass_context
def gellmann(ctx: click.Context, d: int, matrices: bool):
    """List the generalized Gell-Mann basis of dimension d."""
    try:
        basis = gell_mann_basis(d)
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    elements = []
    for element in basis:
        entry: dict[str, Any] = {
            "label": element.label,
            "name": element.name,
            "kind": element.kind,
            "indices": element.indices,
            "norm_squared": element.norm_squared,
        }
        if matrices:
            entry["matrix"] = [
                [[z.real, z.imag] for z in row] for row in element.matrix
            ]
        elements.append(entry)
    _emit(ctx, {"params": {"d": d}, "count": len(elements), "elements": elements})


@cli.command("expand")
@click.argument("matrix", type=click.Path(path_type=Path))
@click.argument("d", type=int)
@click.argument("n", type=int)
@click.option("--local", is_flag=True, help="Project onto one- and two-body terms")
@click.pass_context
def expand_cmd(ctx: click.Context, matrix: Path, d: int, n: int, local: bool):
    """Expand a Hermitian matrix CSV in tensor products of Gell-Mann matrices."""
    try:
        h = load_matrix(matrix)
        expansion = expand(h, d, n)
        if local:
            expansion = project_local(expansion)
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    payload = expansion_to_dict(expansion)
    payload["max_body"] = expansion.max_body()
    payload["body_weights"] = {str(k): v for k, v in body_weights(expansion).items()}
    _emit(ctx, payload)


@cli.command("cost")
@click.argument("expansion", type=click.Path(path_type=Path))
@click.argument("p", type=float)
@click.pass_context
def cost_cmd(ctx: click.Context, expansion: Path, p: float):
    """Penalty-metric cost of an expansion JSON."""
    try:
        parsed = load_expansion(expansion)
        value = cost(parsed, p)
    except (QuditKitError, ValidationError) as e:
        _fail(e)
    _emit(
        ctx,
        {
            "params": {"d": parsed.d, "n": parsed.n, "p": p},
            "cost": value,
            "max_body": parsed.max_body(),
        },
    )


def main():
    """Main CLI entry point."""
    cli(obj={})


if __name__ == "__main__":
    main()
