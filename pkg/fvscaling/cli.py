#!/usr/bin/env python3

import enum
import logging
import sys
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Tuple

import click
from pydantic import ValidationError

from .config import settings
from .grid import GridError
from .iteration import IterationError, direct_solution, iterate
from .laws import check_hypotheses, get_model, model_names
from .reference import ReferenceConfig, ReferenceSolutionError, golden_path, reference_profile, save_profile
from .report import emit_csv, emit_profile, emit_profiles, reproduce_table
from .scheme import SchemeError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INSTABILITY = 2
EXIT_NO_CONVERGENCE = 3

# CLI flag -> RunDefaults field
OVERRIDE_FLAGS = {
    'cells': 'n_cells',
    'cfl': 'cfl',
    'alpha': 'alpha',
    'tfinal': 't_final',
    'tol': 'tol',
    'max_iters': 'max_iters',
    'ref_cells': 'reference_cells',
}


class Action(enum.Enum):
    RUN = "run"
    ITERATE = "iterate"
    TABLE = "table"
    HYPOTHESES = "hypotheses"
    REFERENCE = "reference"


@dataclass(frozen=True)
class CliCommand:
    action: Action
    model_name: str
    overrides: Mapping[str, float] = field(default_factory=dict)
    output_path: Optional[str] = None
    profiles_path: Optional[str] = None
    q_range: Optional[Tuple[float, float]] = None
    n_samples: int = 401
    verbose: bool = False


def _build(ctx: click.Context, action: Action, model: str, output_path: Optional[str] = None,
           **options) -> CliCommand:
    overrides = {OVERRIDE_FLAGS[k]: v for k, v in options.items() if k in OVERRIDE_FLAGS and v is not None}
    try:
        cfg = get_model(model).defaults.with_overrides(**overrides)
    except ValidationError as e:
        raise click.UsageError(f'invalid run parameters for {model}: {e}', ctx=ctx) from e
    if action is Action.TABLE and cfg.reference_cells % cfg.n_cells != 0:
        raise click.UsageError(
            f'--ref-cells ({cfg.reference_cells}) must be a multiple of --cells ({cfg.n_cells})', ctx=ctx)
    extra = {k: v for k, v in options.items() if k not in OVERRIDE_FLAGS}
    return CliCommand(action=action, model_name=model, overrides=overrides, output_path=output_path,
                      verbose=bool(ctx.obj and ctx.obj.get('verbose')), **extra)


def model_option(f):
    return click.option('--model', required=True, type=click.Choice(model_names()),
                        help="Balance law to solve")(f)


def run_options(f):
    options = [
        click.option('--cells', type=int, help="Number of cells of the coarse mesh"),
        click.option('--cfl', type=float, help="CFL coefficient, in (0, 1]"),
        click.option('--alpha', type=float, help="FORCE-alpha parameter, >= 1"),
        click.option('--tfinal', type=float, help="Output time"),
        click.option('--tol', type=float, help="Tolerance on |beta_n - beta_n+1|"),
        click.option('--max-iters', type=int, help="Maximum number of auxiliary solves"),
        click.option('--ref-cells', type=int, help="Number of cells of the reference mesh"),
        click.option('--out', 'output_path', type=click.Path(dir_okay=False), help="Output CSV file"),
        model_option,
    ]
    for option in reversed(options):
        f = option(f)
    return f


@click.group()
@click.option('--verbose', is_flag=True, help="Debug logging")
@click.pass_context
def cli(ctx, verbose):
    ctx.obj = {'verbose': verbose}


@cli.command(help="Direct first-order solve; writes the final profile as x,q")
@run_options
@click.pass_context
def run(ctx, model, output_path, **options):
    return _build(ctx, Action.RUN, model, output_path, **options)


@cli.command(name='iterate', help="Scaling iteration; streams n, beta_n, E_n and writes the final profile")
@run_options
@click.pass_context
def iterate_command(ctx, model, output_path, **options):
    return _build(ctx, Action.ITERATE, model, output_path, **options)


@cli.command(help="Iteration, direct solve and reference; writes the n,beta,err,tau table")
@run_options
@click.option('--profiles', 'profiles_path', type=click.Path(dir_okay=False),
              help="Also write reference, direct and iterate profiles to this CSV")
@click.pass_context
def table(ctx, model, output_path, **options):
    return _build(ctx, Action.TABLE, model, output_path, **options)


@cli.command(help="Write the golden reference profile of a model")
@model_option
@click.option('--ref-cells', type=int, help="Number of cells of the reference mesh")
@click.option('--tfinal', type=float, help="Output time")
@click.option('--out', 'output_path', type=click.Path(dir_okay=False), help="Output CSV file")
@click.pass_context
def reference(ctx, model, output_path, **options):
    return _build(ctx, Action.REFERENCE, model, output_path, **options)


@cli.command(help="Check the flux and source hypotheses of a model over a range of states")
@model_option
@click.option('--qmin', type=float, default=-2.0, show_default=True)
@click.option('--qmax', type=float, default=2.0, show_default=True)
@click.option('--samples', 'n_samples', type=int, default=401, show_default=True)
@click.pass_context
def hypotheses(ctx, model, qmin, qmax, n_samples):
    if not qmax > qmin:
        raise click.UsageError(f'--qmax ({qmax}) must exceed --qmin ({qmin})', ctx=ctx)
    if n_samples < 3:
        raise click.UsageError(f'--samples must be at least 3, got {n_samples}', ctx=ctx)
    return _build(ctx, Action.HYPOTHESES, model, q_range=(qmin, qmax), n_samples=n_samples)


def parse_args(argv: Sequence[str]) -> Optional[CliCommand]:
    """
    Parse command line arguments into a CliCommand. Raises click.UsageError on
    bad input; returns None when click answered the request itself (--help).
    """
    result = cli.main(args=list(argv), prog_name=settings.PROJECT_NAME, standalone_mode=False)
    return result if isinstance(result, CliCommand) else None


def _write(destination: Optional[str], writer) -> None:
    if destination is None:
        writer(sys.stdout)
    else:
        with open(destination, 'w', newline='') as fd:
            writer(fd)


def execute(cmd: CliCommand) -> int:
    model = get_model(cmd.model_name)
    cfg = model.defaults.with_overrides(**cmd.overrides)
    status = EXIT_OK
    try:
        if cmd.action is Action.RUN:
            grid = model.grid(cfg.n_cells)
            final = direct_solution(model, grid, cfg).final
            _write(cmd.output_path, lambda fd: emit_profile(grid, final, fd))

        elif cmd.action is Action.ITERATE:
            grid = model.grid(cfg.n_cells)
            trace = iterate(model, grid, cfg, on_row=lambda row: click.echo(
                f'{row.n} {row.beta:.9f} {"-" if row.e_n is None else format(row.e_n, ".3e")}'))
            if cmd.output_path is not None:
                _write(cmd.output_path, lambda fd: emit_profile(grid, trace.final_field.final, fd))
            if not trace.converged:
                status = EXIT_NO_CONVERGENCE

        elif cmd.action is Action.TABLE:
            study = reproduce_table(model, cfg)
            _write(cmd.output_path, lambda fd: emit_csv(study.table, fd))
            if cmd.profiles_path is not None:
                columns = {'reference': study.reference, 'direct': study.direct}
                columns.update({f'w{row.n}': snap for row, snap in zip(study.trace.rows, study.trace.snapshots)})
                _write(cmd.profiles_path, lambda fd: emit_profiles(study.grid, columns, fd))
            if not study.trace.converged:
                status = EXIT_NO_CONVERGENCE

        elif cmd.action is Action.REFERENCE:
            rc = ReferenceConfig(n_cells=cfg.reference_cells)
            grid, profile = reference_profile(model, rc, cfg.t_final)
            save_profile(grid, profile, cmd.output_path or golden_path(model.name, grid.n_cells))

        elif cmd.action is Action.HYPOTHESES:
            report = check_hypotheses(model, cmd.q_range, cmd.n_samples)
            for line in report.as_lines():
                click.echo(line)

    except (SchemeError, GridError, ReferenceSolutionError, IterationError) as e:
        logger.error("%s: %s", cmd.action.value, e)
        return EXIT_INSTABILITY
    except OSError as e:
        logger.error("cannot write output: %s", e)
        return EXIT_USAGE

    if status == EXIT_NO_CONVERGENCE:
        logger.warning("%s: iteration did not converge within %d iterations", model.name, cfg.max_iters)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(level=settings.log_level, format=settings.log_format)
    try:
        cmd = parse_args(sys.argv[1:] if argv is None else argv)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    if cmd is None:
        return EXIT_OK
    if cmd.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    return execute(cmd)


def run_cli():
    sys.exit(main())


if __name__ == '__main__':
    run_cli()
