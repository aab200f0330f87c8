"""
Finite-category commands
classify-functor, chains and karoubi
"""

import click

from structures import (
    StructureError, chain_criteria_report, classify_ff_lax_epi, enumerate_chains,
    fully_faithful_check, idempotent_splits, idempotents, karoubi_envelope
)
from utils import format_chain
from workspace import HOLDS, Report, exit_code_for
from .common import emit, fail_usage, load_workspace, subject


@click.command('classify-functor')
@click.argument('workspace')
@click.argument('name')
@click.pass_context
def classify_functor(ctx, workspace, name):
    """Chain-surjectivity criteria (levels 1–3) for a functor"""
    document = load_workspace(ctx, workspace)
    F = subject(ctx, document, name, 'functor')

    sufficient, levels = chain_criteria_report(F)
    verdict = 'sufficient condition holds' if sufficient else 'sufficient condition fails'
    report = Report('classify-functor', name, verdict, exit_code_for(sufficient))
    for n, check in levels.items():
        report.add(f"surjective on {n}-chains", check.holds, check.certificate)
    emit(ctx, report)


@click.command('chains')
@click.argument('workspace')
@click.argument('name')
@click.option('--n', 'n', type=int, required=True, help='Chain length 0..3')
@click.pass_context
def chains(ctx, workspace, name, n):
    """Enumerate the composable n-chains of a category"""
    document = load_workspace(ctx, workspace)
    c = subject(ctx, document, name, 'category')
    try:
        table = enumerate_chains(c, n)
    except StructureError as e:
        fail_usage(ctx, str(e))

    report = Report('chains', name, f"{len(table)} chains", HOLDS)
    report.detail('n', n)
    for i, chain in enumerate(table, 1):
        report.detail(f"chain.{i}", format_chain(chain, '∘') if n else chain[0])
    emit(ctx, report)


@click.command('karoubi')
@click.argument('workspace')
@click.argument('name')
@click.option('--envelope', is_flag=True, help='Compute the Karoubi envelope of a category')
@click.option('--check-ff-lax-epi', 'check_ff_lax_epi', is_flag=True,
              help='Decide whether a functor is a fully faithful lax epimorphism')
@click.pass_context
def karoubi(ctx, workspace, name, envelope, check_ff_lax_epi):
    """Karoubi envelope of a category, or the lax-epimorphism test for a functor"""
    if envelope == check_ff_lax_epi:
        fail_usage(ctx, "choose exactly one of --envelope and --check-ff-lax-epi")
    document = load_workspace(ctx, workspace)

    if envelope:
        c = subject(ctx, document, name, 'category')
        k = karoubi_envelope(c)
        unsplit = [i for i in idempotents(k.category) if not idempotent_splits(k.category, i).holds]
        report = Report('karoubi', name, k.category.describe(), exit_code_for(not unsplit))
        report.add('unit fully faithful', *_check(fully_faithful_check(k.unit)))
        report.add('idempotents split', not unsplit,
                   f"{unsplit[0].endo} does not split" if unsplit else 'every idempotent splits')
        report.detail('objects', ', '.join(k.category.objects))
        report.detail('source idempotents', len(idempotents(c)))
        emit(ctx, report)

    p = subject(ctx, document, name, 'functor')
    verdict = classify_ff_lax_epi(p)
    label = 'fully faithful lax epimorphism' if verdict.holds else 'not a fully faithful lax epimorphism'
    report = Report('karoubi', name, label, exit_code_for(verdict.holds), certificate=verdict.certificate)
    report.add('envelope equivalence', verdict.holds, verdict.certificate)
    report.add('fully faithful', *_check(fully_faithful_check(p)))
    report.add('lax epimorphism', verdict.lax_epi)
    emit(ctx, report)


def _check(check):
    return check.holds, check.certificate
