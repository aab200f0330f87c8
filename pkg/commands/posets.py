"""
Finite-poset commands
classify-poset runs the bounded descent oracle next to the 2-chain lifting criterion
"""

import click

from descent import engine, poset_base
from structures import DescentClass, DescentLevel, poset_chain_lift_check
from workspace import HOLDS, Report, exit_code_for
from .common import add_levels, bound_options, emit, load_workspace, settings, show_chain, subject

LIFTING_SETTLES = 'effective by 2-chain lifting'


@click.command('classify-poset')
@click.argument('workspace')
@click.argument('name')
@bound_options
@click.pass_context
def classify_poset(ctx, workspace, name, bound, stability_bound):
    """Classify a monotone map between finite posets"""
    document = load_workspace(ctx, workspace)
    p = subject(ctx, document, name, 'monotone')
    run = settings(ctx)

    verdict = engine.classify(p, bound=bound, stability_bound=stability_bound, base=poset_base,
                              parallel=run.parallel, max_workers=run.max_workers)
    descent_class = verdict.descent_class
    lifting = poset_chain_lift_check(p)

    # no counterexample within the bound plus 2-chain lifting is exact for finite posets
    if descent_class.level == DescentLevel.EFFECTIVE_UP_TO_BOUND and lifting.holds:
        descent_class = DescentClass(DescentLevel.EFFECTIVE, LIFTING_SETTLES)

    report = Report('classify-poset', name, descent_class.label, HOLDS,
                    certificate=descent_class.certificate, bound=verdict.bound_used)
    effective = add_levels(report, descent_class)
    report.add('2-chain lifting', lifting.holds, lifting.certificate,
               failures=[show_chain(chain) for chain in lifting.failures])

    report.detail('data checked', verdict.data_checked)
    if verdict.faithful_witness:
        report.detail('faithful', verdict.faithful_witness)
    if verdict.full_witness:
        report.detail('full', verdict.full_witness)
    report.exit_code = exit_code_for(effective)
    emit(ctx, report)
