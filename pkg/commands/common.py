"""
Shared command plumbing
Run settings, workspace loading, bound options and report emission
"""

import functools
import logging
from dataclasses import dataclass

import click

from config import Config
from structures import DescentLevel
from utils import encode_tuple, format_chain, validate_bound
from workspace import DocumentError, USAGE_ERROR, load

logger = logging.getLogger(__name__)


@dataclass
class RunSettings:
    """Options of the top-level group, shared by every command"""

    fmt: str = Config.REPORT_FORMAT
    parallel: bool = Config.PARALLEL
    max_workers: int = Config.MAX_WORKERS


def settings(ctx):
    return ctx.find_object(RunSettings) or RunSettings()


def fail_usage(ctx, message):
    """Report a usage or document error on stderr and exit with status 64"""
    click.echo(f"error: {message}", err=True)
    ctx.exit(USAGE_ERROR)


def load_workspace(ctx, path):
    try:
        return load(path)
    except DocumentError as e:
        logger.debug("Rejected workspace %s: %s", path, e)
        fail_usage(ctx, str(e))


def subject(ctx, document, name, *kinds):
    """A declared structure of one of the expected kinds"""
    try:
        return document.value(name, *kinds)
    except DocumentError as e:
        fail_usage(ctx, str(e))


def emit(ctx, report):
    """Print a report in the selected format and exit with its status"""
    click.echo(report.render(settings(ctx).fmt), nl=False)
    ctx.exit(report.exit_code)


def _positive(ctx, param, value):
    is_valid, message = validate_bound(value, param.name.replace('_', ' '))
    if not is_valid:
        fail_usage(ctx, message)
    return value


def bound_options(command):
    """Add --bound and --stability-bound with configured defaults"""
    @click.option('--stability-bound', type=int, default=Config.STABILITY_BOUND,
                  show_default=True, callback=_positive,
                  help='Size of the test objects for pullback stability')
    @click.option('--bound', type=int, default=Config.DESCENT_BOUND,
                  show_default=True, callback=_positive,
                  help='Fiber multiplicity bound of the descent-data search')
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        return command(*args, **kwargs)
    return wrapper


def add_levels(report, descent_class):
    """Almost / descent / effective criteria from a descent class"""
    level = descent_class.level
    report.add('almost descent', level >= DescentLevel.ALMOST)
    report.add('descent', level >= DescentLevel.DESCENT)
    if level == DescentLevel.EFFECTIVE:
        effective = True
    elif level == DescentLevel.EFFECTIVE_UP_TO_BOUND:
        effective = None
    else:
        effective = False
    report.add('effective descent', effective, descent_class.certificate if effective else '')
    return effective


def show_tuple(atoms):
    return encode_tuple(*atoms)


def show_chain(atoms):
    return format_chain(atoms)
