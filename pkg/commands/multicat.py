"""
Multicategory commands
"""

import click

from structures import classify_multifunctor, reflexive_graph_transfer
from workspace import Report, exit_code_for
from .common import emit, load_workspace, subject


@click.command('classify-multifunctor')
@click.argument('workspace')
@click.argument('name')
@click.pass_context
def classify_multifunctor_command(ctx, workspace, name):
    """Surjectivity on multimorphisms and on the chain objects x2, x3"""
    document = load_workspace(ctx, workspace)
    p = subject(ctx, document, name, 'multifunctor')

    result = classify_multifunctor(p)
    verdict = 'sufficient condition holds' if result.sufficient else 'sufficient condition fails'
    report = Report('classify-multifunctor', name, verdict, exit_code_for(result.sufficient))
    for n, check in result.levels.items():
        report.add(f"level {n}", check.holds, check.certificate)
    transfer = reflexive_graph_transfer(p)
    report.add('objects covered', transfer.holds, transfer.certificate)
    emit(ctx, report)
