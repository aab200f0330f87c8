"""
Descent Toolkit - Main Application
Command-line entry point for the descent classifiers
"""

import logging
import sys

import click

from config import Config
from workspace import USAGE_ERROR

logger = logging.getLogger(__name__)


def create_app():
    """Application factory pattern"""

    @click.group()
    @click.option('--format', 'fmt', type=click.Choice(Config.REPORT_FORMATS),
                  default=Config.REPORT_FORMAT, show_default=True, help='Report format')
    @click.option('--parallel/--no-parallel', default=Config.PARALLEL,
                  help='Spread descent-data enumeration over a thread pool')
    @click.option('--diagnostics', is_flag=True, help='Print startup diagnostics to stderr')
    @click.pass_context
    def cli(ctx, fmt, parallel, diagnostics):
        """Classify finite categorical structures by descent"""
        from commands import RunSettings

        ctx.obj = RunSettings(fmt=fmt, parallel=parallel, max_workers=Config.MAX_WORKERS)
        if diagnostics:
            print_diagnostics()

    # Register commands
    register_commands(cli)

    return cli


def register_commands(cli):
    """Register all command groups"""
    from commands import ALL_COMMANDS

    for command in ALL_COMMANDS:
        cli.add_command(command)


def configure_logging():
    """Stderr handler at the configured level; reports own stdout"""
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL, logging.WARNING),
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr
    )


def print_diagnostics():
    """Check configuration and libraries on startup"""
    def echo(line):
        click.echo(line, err=True)

    echo("\n" + "=" * 60)
    echo("DESCENT TOOLKIT - STARTUP DIAGNOSTICS")
    echo("=" * 60)

    if Config.validate():
        echo("✅ Configuration: valid")
    else:
        echo("❌ Configuration: invalid (see log)")
    echo(f"   Bound: {Config.DESCENT_BOUND}, stability bound: {Config.STABILITY_BOUND}")
    echo(f"   Parallel: {'on' if Config.PARALLEL else 'off'} ({Config.MAX_WORKERS} workers)")

    try:
        import networkx
        echo(f"✅ networkx: {networkx.__version__}")
    except ImportError:
        echo("❌ networkx: not installed")

    try:
        from workspace.report import Report
        Report('diagnostics', '-', 'ok', 0).render('text')
        echo("✅ Report templates: loaded")
    except Exception as e:
        echo(f"❌ Report templates: {e}")

    echo("=" * 60 + "\n")


def main(argv=None):
    """
    Run the command line

    Returns:
        int: 0 holds, 1 fails, 2 undecided, 64 usage or document error
    """
    configure_logging()
    cli = create_app()
    try:
        status = cli.main(args=argv, prog_name='descent', standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("Aborted", err=True)
        return USAGE_ERROR
    except click.ClickException as e:
        e.show()
        return USAGE_ERROR
    return status if isinstance(status, int) else 0


if __name__ == '__main__':
    sys.exit(main())
