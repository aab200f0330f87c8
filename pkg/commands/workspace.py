"""
Workspace commands
"""

import click

from workspace import HOLDS, dumps
from .common import load_workspace


@click.command('dump')
@click.argument('workspace')
@click.pass_context
def dump_command(ctx, workspace):
    """Re-serialize a workspace in canonical form"""
    document = load_workspace(ctx, workspace)
    click.echo(dumps(document), nl=False)
    ctx.exit(HOLDS)
