import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

import click

from poch_verify import main
from poch_verify.errors import VerificationError
from poch_verify.registry import select

log = logging.getLogger("poch_verify")

CONFIG = main.Config()


@click.group()
@click.option(
    "--work-dir",
    help="""The working directory of the program, the current working directory by default.
The run log is kept as "$WORK_DIR/debug.log".
""",
    default=Path.cwd(),
    type=Path,
)
@click.option("--log-level", default="WARNING", help="The log level of the stderr. WARNING by default.")
def cli(work_dir: Path, log_level):
    global CONFIG
    # Create the config and save as a global variable
    CONFIG = main.Config(work_dir)
    CONFIG.initialize_dirs()

    log.setLevel(log_level)
    formatter = logging.Formatter("%(asctime)s: %(message)s", "%Y-%m-%d %H:%M:%S")

    stderr_handler = logging.StreamHandler(sys.stderr)
    stderr_handler.setLevel(log_level)
    stderr_handler.setFormatter(formatter)

    file_handler = RotatingFileHandler(CONFIG.run_log, maxBytes=10000, backupCount=1)
    file_handler.setLevel(log_level)
    file_handler.setFormatter(formatter)

    # Handlers of an earlier invocation in the same process point at stale streams
    for handler in list(log.handlers):
        log.removeHandler(handler)
        handler.close()
    log.addHandler(file_handler)
    log.addHandler(stderr_handler)


@cli.command(name="list")
@click.option("--id-filter", default=CONFIG.id_filter, help="Only list identities whose id starts with this prefix.")
def list_identities(id_filter: str):
    """List the identity catalog: id, kind, the formula checked and the free variables."""
    CONFIG.id_filter = id_filter
    table = main.list_identities(CONFIG.id_filter)
    if table:
        click.echo(table)


@cli.command()
@click.option("--id-filter", default=CONFIG.id_filter, help="Only verify identities whose id starts with this prefix.")
@click.option("--max-n", default=CONFIG.max_n, type=click.IntRange(min=1), help="Largest n of the exact identities.")
@click.option(
    "--trials",
    default=CONFIG.trials,
    type=click.IntRange(min=1),
    help="Random joint samples per n for identities with three or more variables.",
)
@click.option("--seed", default=CONFIG.seed, type=int, help="Seed of the rational sample points.")
@click.option("--precision-bits", default=CONFIG.precision_bits, type=int, help="Working precision of the series.")
@click.option(
    "--tolerance-exp",
    default=CONFIG.tolerance_exp,
    type=int,
    help="A series passes when its residual is below 2^TOLERANCE_EXP.",
)
@click.option("--max-terms", default=CONFIG.max_terms, type=int, help="Partial sums allowed per series.")
@click.option("--output", default=None, type=Path, help="Write the report to this file instead of stdout.")
@click.option("--format", "format_", default=CONFIG.format, type=click.Choice(main.FORMATS), help="Report format.")
@click.option(
    "--strict/--no-strict",
    default=CONFIG.strict,
    help="Should an id filter matching no identity be an error?",
)
def verify(
    id_filter: str,
    max_n: int,
    trials: int,
    seed: int,
    precision_bits: int,
    tolerance_exp: int,
    max_terms: int,
    output: Optional[Path],
    format_: str,
    strict: bool,
):
    """Verify the identities matching the id filter.
    Exits with 1 when any identity failed, after the report is written."""
    CONFIG.id_filter = id_filter
    CONFIG.max_n = max_n
    CONFIG.trials = trials
    CONFIG.seed = seed
    CONFIG.precision_bits = precision_bits
    CONFIG.tolerance_exp = tolerance_exp
    CONFIG.max_terms = max_terms
    CONFIG.output = output
    CONFIG.format = format_
    CONFIG.strict = strict
    try:
        CONFIG.precision()
    except VerificationError as error:
        raise click.UsageError(str(error)) from error
    if CONFIG.strict and not select(CONFIG.id_filter):
        raise click.UsageError("no matching identities")
    aggregate = main.verify_all(config=CONFIG)
    text = main.write_report(aggregate, config=CONFIG)
    if text is not None:
        click.echo(text)
    else:
        click.echo(aggregate.summary.line(aggregate.status))
    if aggregate.failed:
        sys.exit(1)


@cli.command(name="eval")
@click.argument("expression", type=str)
@click.option("--precision-bits", default=CONFIG.precision_bits, type=int, help="Working precision of numeric values.")
def eval_expression(expression: str, precision_bits: int):
    """Evaluate one operation at literal arguments, e.g. "qpoch(1/2, 1/3, 2)" or "jacobi(3, 1/4; a=1, b=2)".
    Exact values print as fractions, numeric ones as decimals at the requested precision."""
    CONFIG.precision_bits = precision_bits
    try:
        click.echo(main.evaluate(expression, config=CONFIG))
    except (VerificationError, ZeroDivisionError) as error:
        raise click.UsageError(str(error)) from error


if __name__ == "__main__":
    cli()
