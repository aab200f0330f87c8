"""
Finite-set and limit commands
classify-fn, pullback and coequalizer
"""

import click

from structures import (
    classify_set_function, coequalizer, poset_coequalizer,
    pullback, poset_pullback, pullback_category
)
from utils import format_mapping
from workspace import HOLDS, Report, exit_code_for
from .common import add_levels, bound_options, emit, fail_usage, load_workspace, subject


@click.command('classify-fn')
@click.argument('workspace')
@click.argument('name')
@bound_options
@click.pass_context
def classify_fn(ctx, workspace, name, bound, stability_bound):
    """Classify a function between finite sets"""
    document = load_workspace(ctx, workspace)
    p = subject(ctx, document, name, 'function')

    result = classify_set_function(p, bound=bound, stability_bound=stability_bound)
    report = Report('classify-fn', name, result.label, HOLDS, certificate=result.certificate)
    report.exit_code = exit_code_for(add_levels(report, result))
    report.detail('image', ', '.join(p.image()) or '∅')
    emit(ctx, report)


@click.command('pullback')
@click.argument('workspace')
@click.argument('f')
@click.argument('g')
@click.pass_context
def pullback_command(ctx, workspace, f, g):
    """Pullback of a cospan of functions, monotone maps or functors"""
    document = load_workspace(ctx, workspace)
    left = subject(ctx, document, f, 'function', 'monotone', 'functor')
    kind = document.get(f).kind
    right = subject(ctx, document, g, kind)
    if left.cod != right.cod:
        fail_usage(ctx, f"{f} and {g} do not share a codomain")

    report = Report('pullback', f"{f},{g}", 'computed', HOLDS)
    if kind == 'function':
        pb = pullback(left, right)
        report.detail('apex', ', '.join(pb.apex) or '∅')
        report.detail('size', len(pb.apex))
    elif kind == 'monotone':
        pb = poset_pullback(left, right)
        report.detail('apex', ', '.join(pb.apex.carrier) or '∅')
        report.detail('order', ', '.join(f"{a}<{b}" for a, b in pb.apex.hasse_edges()) or 'discrete')
        report.detail('size', len(pb.apex))
    else:
        pb = pullback_category(left, right)
        report.detail('objects', ', '.join(pb.apex.objects) or '∅')
        report.detail('morphisms', ', '.join(pb.apex.morphisms) or '∅')
        report.detail('size', pb.apex.describe())
    emit(ctx, report)


@click.command('coequalizer')
@click.argument('workspace')
@click.argument('f')
@click.argument('g')
@click.pass_context
def coequalizer_command(ctx, workspace, f, g):
    """Coequalizer of a parallel pair of functions or monotone maps"""
    document = load_workspace(ctx, workspace)
    left = subject(ctx, document, f, 'function', 'monotone')
    kind = document.get(f).kind
    right = subject(ctx, document, g, kind)
    if left.dom != right.dom or left.cod != right.cod:
        fail_usage(ctx, f"{f} and {g} are not parallel")

    report = Report('coequalizer', f"{f},{g}", 'computed', HOLDS)
    if kind == 'function':
        coeq = coequalizer(left, right)
        report.detail('quotient', ', '.join(coeq.quotient))
        report.detail('projection', format_mapping(coeq.q.mapping, limit=32))
    else:
        coeq = poset_coequalizer(left, right)
        report.detail('quotient', ', '.join(coeq.quotient.carrier))
        report.detail('order', ', '.join(f"{a}<{b}" for a, b in coeq.quotient.hasse_edges()) or 'discrete')
        report.detail('projection', format_mapping(coeq.q.fn.mapping, limit=32))
    emit(ctx, report)
