"""
Lattice-enriched commands
classify-vfunctor, join-check and classify-cover
"""

import click

from structures import (
    DescentLevel, LatticeError, classify_cover_thin, classify_vfunctor,
    is_regular_by_coequalizer, join_condition_check
)
from utils import format_mapping
from workspace import Report, exit_code_for
from .common import emit, fail_usage, load_workspace, show_tuple, subject


@click.command('classify-vfunctor')
@click.argument('workspace')
@click.argument('name')
@click.pass_context
def classify_vfunctor_command(ctx, workspace, name):
    """Chain-cover conditions for a V-functor"""
    document = load_workspace(ctx, workspace)
    F = subject(ctx, document, name, 'vfunctor')

    result = classify_vfunctor(F)
    verdict = 'sufficient condition holds' if result.sufficient else 'sufficient condition fails'
    report = Report('classify-vfunctor', name, verdict, exit_code_for(result.sufficient))
    for n, check in result.levels.items():
        report.add(f"{n}-chain covers", check.holds, check.certificate,
                   failures=[show_tuple(ys) for ys in check.failures])
    report.detail('lattice', F.dom.lattice.name)
    report.detail('heyting', 'yes' if result.heyting else 'no')
    emit(ctx, report)


@click.command('join-check')
@click.argument('workspace')
@click.argument('name')
@click.pass_context
def join_check(ctx, workspace, name):
    """Join condition on 2-chain hom meets for a V-functor"""
    document = load_workspace(ctx, workspace)
    F = subject(ctx, document, name, 'vfunctor')
    try:
        check = join_condition_check(F)
    except LatticeError as e:
        fail_usage(ctx, str(e))

    verdict = 'sufficient condition holds' if check.holds else 'sufficient condition fails'
    report = Report('join-check', name, verdict, exit_code_for(check.holds))
    report.add('join condition', check.holds, check.certificate,
               failures=[show_tuple(ys) for ys in check.failures])
    emit(ctx, report)


@click.command('classify-cover')
@click.argument('workspace')
@click.argument('name')
@click.pass_context
def classify_cover(ctx, workspace, name):
    """Descent level of a cover in Fam(V)"""
    document = load_workspace(ctx, workspace)
    c = subject(ctx, document, name, 'cover')
    v = c.lattice

    result = classify_cover_thin(v, c)
    report = Report('classify-cover', name, result.label,
                    exit_code_for(result.level == DescentLevel.EFFECTIVE),
                    certificate=result.certificate)
    report.add('almost descent', result.level >= DescentLevel.ALMOST)
    report.add('descent', result.level >= DescentLevel.DESCENT)
    report.add('effective descent', result.level == DescentLevel.EFFECTIVE)
    report.add('coequalizer of kernel pair', is_regular_by_coequalizer(v, c))
    report.detail('lattice', v.name)
    report.detail('family', format_mapping(c.dom.fiber) or '∅')
    report.detail('target', c.target)
    emit(ctx, report)
