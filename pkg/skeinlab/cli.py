"""
Command line for the skein verification suites.

    python -m skeinlab verify eight eigen --xi 8/1 --json
    python -m skeinlab verify prop61 --xi 8/1
    python -m skeinlab eval --diagram knot.json --xi 12/1
    python -m skeinlab suites
"""
import json
import logging
import sys
from typing import Optional, Tuple

import click

from skeinlab.algebra.cyclotomic import RootSpec
from skeinlab.config import Config
from skeinlab.diagrams.diagram import DiagramError
from skeinlab.diagrams.io import read_diagram
from skeinlab.diagrams.state_sum import StateSpaceTooLarge
from skeinlab.services.evaluation import evaluate_diagram
from skeinlab.services.verifier import (
    OptionError, SuiteOptions, UnknownSuiteError, describe_suites, run_suites,
)
from skeinlab.utils.report_format import render_json, render_text

logger = logging.getLogger(__name__)


def _configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, Config.LOG_LEVEL, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


class RootParam(click.ParamType):
    name = 'n/a'

    def convert(self, value, param, ctx):
        if isinstance(value, RootSpec):
            return value
        try:
            return RootSpec.parse(value)
        except ValueError as e:
            self.fail(str(e), param, ctx)


ROOT = RootParam()


@click.group()
@click.option('-v', '--verbose', is_flag=True, help='Log per-evaluation details to stderr.')
def main(verbose: bool):
    """Exact Kauffman bracket skein computations and their verification suites."""
    _configure_logging(verbose)


@main.command()
@click.argument('suites', nargs=-1)
@click.option('--xi', type=ROOT, default=None, help='Only check at this root of unity, written n/a.')
@click.option('--n-max', 'n_max', type=click.IntRange(min=0), default=None, help='Largest root order to sweep.')
@click.option('--N-max', '--N', 'N_max', type=click.IntRange(min=0), default=None, help='Largest N.')
@click.option('--k-max', '--k', 'k_max', type=click.IntRange(min=0), default=None, help='Largest k.')
@click.option('--max-states', type=click.IntRange(min=1), default=None,
              help=f'State limit per evaluation, at most {Config.HARD_MAX_STATES}.')
@click.option('--workers', type=click.IntRange(min=1), default=None, help='Worker processes per state sum.')
@click.option('--json', 'as_json', is_flag=True, help='Emit the report as JSON.')
@click.option('--timings', is_flag=True, help='Record wall time per check.')
def verify(suites: Tuple[str, ...], xi: Optional[RootSpec], n_max, N_max, k_max, max_states, workers,
           as_json: bool, timings: bool):
    """Run verification suites by name or alias (all of them when none is named)."""
    try:
        options = SuiteOptions(xi=xi, n_max=n_max, N_max=N_max, k_max=k_max, max_states=max_states,
                               workers=workers or Config.WORKERS, timings=timings)
        report = run_suites(suites, options)
    except (UnknownSuiteError, OptionError) as e:
        raise click.UsageError(str(e))
    except (StateSpaceTooLarge, DiagramError, ValueError) as e:
        raise click.ClickException(str(e))

    click.echo(render_json(report) if as_json else render_text(report))
    if not report.ok:
        sys.exit(1)


@main.command(name='eval')
@click.option('--diagram', 'path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='Diagram file to evaluate.')
@click.option('--xi', type=ROOT, default=None, help='Also specialize at this root of unity, written n/a.')
@click.option('--max-states', type=click.IntRange(min=1, max=Config.HARD_MAX_STATES), default=None)
@click.option('--workers', type=click.IntRange(min=1), default=None)
@click.option('--json', 'as_json', is_flag=True, help='Emit the result as JSON.')
def evaluate_command(path: str, xi: Optional[RootSpec], max_states, workers, as_json: bool):
    """Evaluate a diagram file into the skein module of its disk."""
    try:
        d, disk = read_diagram(path)
        result = evaluate_diagram(d, disk, xi, workers=workers or Config.WORKERS, max_states=max_states)
    except (DiagramError, StateSpaceTooLarge) as e:
        raise click.ClickException(str(e))

    if as_json:
        click.echo(result.model_dump_json(indent=2, exclude_none=True))
        return
    click.echo(result.value)
    if result.specialized is not None:
        click.echo(f"at xi = {result.xi}: {result.specialized}")


@main.command(name='suites')
@click.option('--json', 'as_json', is_flag=True)
def list_suites(as_json: bool):
    """List the verification suites and their default caps."""
    catalog = describe_suites()
    if as_json:
        click.echo(json.dumps(catalog, indent=2))
        return
    for entry in catalog:
        caps = ', '.join(f"{k}={v}" for k, v in entry['caps'].items())
        aliases = f" [also {', '.join(entry['aliases'])}]" if entry['aliases'] else ''
        click.echo(f"{entry['suite']:<12} {entry['description']} ({caps}){aliases}")


if __name__ == '__main__':
    main()
