"""
Subcommand handlers of the zhomology command line
"""
import logging
from argparse import Namespace
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tabulate import tabulate

from zhomology import UnverifiedEquivalenceError
from zhomology.barcode import build_barcode, build_field_barcode, render_text
from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.configuration import Configuration
from zhomology.constants import INFINITY, INFINITY_TEXT, TEXT_TABLE_FORMAT, TSV_TABLE_FORMAT
from zhomology.data.complex_files import load_complex
from zhomology.data.equivalence_files import load_equivalence
from zhomology.linalg.field import check_field
from zhomology.misc import field_name, format_chain, format_component, format_label
from zhomology.persistence.field import field_betti, mu_counts
from zhomology.persistence.groups import (PersistenceQuery, check_query, compute,
                                          persistent_generators)
from zhomology.spectral.pages import check_inequality, spsq_differential, spsq_group
from zhomology.state import QueryKind
from zhomology.transfer.equivalence import (equivalence_filtered, transfer_levels,
                                            verify_equivalence)
from zhomology.transfer.reduction import ReductionReport, homotopy_order

logger = logging.getLogger(__name__)

Components = List[Tuple[int, Optional[Sequence[int]]]]


def setup_utils_configuration(args: Namespace) -> Dict[str, Any]:
    """
    Prepare the configuration for a subcommand
    :param args: Cli args from Arguments()
    :return: Configuration
    """
    configuration = Configuration(args)
    return configuration.get_config()


def _load(args: Namespace, config: Dict[str, Any]) -> FilteredChainComplex:
    return load_complex(args.complex_file, config.get('filtration_start'))


def _tablefmt(config: Dict[str, Any]) -> str:
    return TSV_TABLE_FORMAT if config['output_format'] == 'tsv' else TEXT_TABLE_FORMAT


def _stage_text(stage) -> str:
    return INFINITY_TEXT if stage == INFINITY else str(stage)


def render_components(title: str, components: Components, names: Sequence[str],
                      config: Dict[str, Any], field: Optional[int] = None) -> str:
    """
    Kenzo style "Component" lines under a title, or a divisor/generator table for tsv.
    Generators are printed when the configuration asks for them and they are known.
    """
    show = config.get('show_generators', False)
    if config['output_format'] == 'tsv':
        rows = []
        for divisor, chain in components:
            label = field_name(field) if field is not None else str(divisor)
            rows.append([label, format_chain(names, chain) if chain is not None else ''])
        return tabulate(rows, headers=['divisor', 'generator'], tablefmt=TSV_TABLE_FORMAT,
                        disable_numparse=True, stralign=None) + '\n'
    lines = [title]
    for divisor, chain in components:
        lines.append(format_component(divisor, field))
        if show and chain is not None:
            lines.append(f'  generator: {format_chain(names, chain)}')
    return '\n'.join(lines) + '\n'


def _page_title(r, p: int, q: int) -> str:
    return f'Spectral sequence E^{_stage_text(r)}_{{{p},{q}}}'


def start_spsq_group(args: Namespace) -> None:
    """
    Print E^r_{p,q}
    :param args: Cli args from Arguments()
    :return: None
    """
    config = setup_utils_configuration(args)
    complex_ = _load(args, config)
    group = spsq_group(complex_, args.level, args.p, args.q)
    components = list(zip(group.presentation.divisors, group.presentation.generators))
    print(render_components(_page_title(args.level, args.p, args.q), components,
                            complex_.basis(group.degree), config), end='')


def start_spsq_dffr(args: Namespace) -> None:
    """
    Print d^r_{p,q}: source and target components plus the matrix in their coordinates
    :param args: Cli args from Arguments()
    :return: None
    """
    config = setup_utils_configuration(args)
    complex_ = _load(args, config)
    differential = spsq_differential(complex_, args.level, args.p, args.q)
    source, target = differential.source, differential.target
    n = source.degree
    sources = [format_label([d]) for d in source.presentation.divisors]
    rows = [[format_label([divisor])] + [str(v) for v in differential.matrix[idx, :]]
            for idx, divisor in enumerate(target.presentation.divisors)]
    if config['output_format'] == 'tsv':
        print(tabulate(rows, headers=['target'] + sources, tablefmt=TSV_TABLE_FORMAT,
                       disable_numparse=True, stralign=None))
        return
    r = _stage_text(args.level)
    print(f'Spectral sequence differential d^{r}_{{{args.p},{args.q}}}: '
          f'E^{r}_{{{args.p},{args.q}}} -> '
          f'E^{r}_{{{target.id.p},{target.id.q}}}')
    print(render_components('Source', list(zip(source.presentation.divisors,
                                               source.presentation.generators)),
                            complex_.basis(n), config), end='')
    print(render_components('Target', list(zip(target.presentation.divisors,
                                               target.presentation.generators)),
                            complex_.basis(n - 1), config), end='')
    if rows and sources:
        print('Matrix')
        print(tabulate(rows, headers=['target'] + sources, tablefmt=TEXT_TABLE_FORMAT,
                       disable_numparse=True))
    else:
        print('Zero differential')


def _field_count(complex_: FilteredChainComplex, query: PersistenceQuery, prime: int) -> int:
    """
    Dimension of a persistence group over a field, from the Betti table.
    Stages past the last one behave as the last one.
    """
    check_query(complex_, query)
    start, m = complex_.filtration_start, complex_.max_filtration
    if query.i < start:
        return 0
    table = field_betti(complex_, prime)
    if query.kind == QueryKind.TOTAL:
        return table.beta(query.i, query.j, query.n)
    if query.kind == QueryKind.BD:
        if query.i > m or (query.k != INFINITY and query.k > m):
            return 0
        return mu_counts(table, query.i, query.k, query.n)
    if query.k == INFINITY:
        return table.beta(query.i, query.j, query.n)
    born = 0
    if query.i <= m:
        born = sum(mu_counts(table, query.i, k, query.n)
                   for k in range(query.j + 1, min(int(query.k), m) + 1))
    return table.beta(query.i - 1, query.j, query.n) + born


def _persistence(args: Namespace, query: PersistenceQuery) -> None:
    config = setup_utils_configuration(args)
    complex_ = _load(args, config)
    names = complex_.basis(query.n)

    if config.get('field') is not None:
        prime = check_field(config['field'])
        if config.get('show_generators'):
            logger.warning('Generators are not available over a field.')
        count = _field_count(complex_, query, prime)
        print(render_components(query.describe(), [(0, None)] * count, names, config,
                                field=prime), end='')
        return

    group = compute(complex_, query, oracle=config.get('use_oracle', False))
    if not config.get('show_generators'):
        components: Components = [(d, None) for d in group.divisors]
    elif config.get('use_oracle'):
        components = list(zip(group.divisors, group.presentation.generators))
    else:
        components = [(d, chain) for d, chain in persistent_generators(group)]
    print(render_components(query.describe(), components, names, config), end='')


def start_prst_hmlg_group(args: Namespace) -> None:
    """
    Print BD^{i,k}_n
    """
    _persistence(args, PersistenceQuery.bd(args.stage_i, args.stage_k, args.degree))


def start_total_prst_hmlg_group(args: Namespace) -> None:
    """
    Print H^{i,j}_n
    """
    _persistence(args, PersistenceQuery.total(args.stage_i, args.stage_j, args.degree))


def start_triple_prst_hmlg_group(args: Namespace) -> None:
    """
    Print H^{i,j,k}_n
    """
    _persistence(args, PersistenceQuery.triple(args.stage_i, args.stage_j,
                                                 args.stage_k, args.degree))


def start_stage_hmlg_group(args: Namespace) -> None:
    """
    Print H_n(K^j), the persistent group H^{j,j}_n
    """
    _persistence(args, PersistenceQuery.total(args.stage_j, args.stage_j, args.degree))


def start_barcode(args: Namespace) -> None:
    """
    Print the barcode diagram and optionally store it as SVG
    :param args: Cli args from Arguments()
    :return: None
    """
    config = setup_utils_configuration(args)
    complex_ = _load(args, config)
    barcode = config['barcode']
    if config.get('field') is not None:
        diagram = build_field_barcode(complex_, config['field'], barcode.get('degrees'))
    else:
        diagram = build_barcode(complex_, barcode['mode'], barcode.get('degrees'))
    print(render_text(diagram, _tablefmt(config)), end='')

    if barcode.get('svg'):
        # matplotlib is an optional dependency
        from zhomology.plot.plotting import store_svg
        store_svg(diagram, Path(barcode['svg']))


def start_check_inequality(args: Namespace) -> None:
    """
    Print both sides of the page rank inequality at level r in degree n
    :param args: Cli args from Arguments()
    :return: None
    """
    config = setup_utils_configuration(args)
    complex_ = _load(args, config)
    report = check_inequality(complex_, args.level, args.degree)
    if not report.holds:
        verdict = 'VIOLATED'
    else:
        verdict = 'STRICT' if report.strict else 'EQUAL'
    if config['output_format'] == 'tsv':
        print(tabulate([[str(report.lhs), str(report.rhs), verdict]],
                       headers=['lhs', 'rhs', 'verdict'], tablefmt=TSV_TABLE_FORMAT,
                       disable_numparse=True, stralign=None))
    else:
        print(f'lhs={report.lhs} rhs={report.rhs} {verdict}')


def _reduction_lines(label: str, report: ReductionReport) -> List[str]:
    if report.ok:
        return [f'{label}: ok']
    lines = [f'{label}: {len(report.violations)} violations']
    for violation in report.violations:
        lines.append(f'  {violation.identity} fails in degree {violation.degree} '
                     f'on {violation.generator}')
    return lines


def _page_label(cells) -> str:
    return format_label([d for _, divisors in cells for d in divisors])


def start_verify_equivalence(args: Namespace) -> None:
    """
    Verify both reductions, print homotopy orders and compare every page of C and EC
    :param args: Cli args from Arguments()
    :return: None
    :raises UnverifiedEquivalenceError: a reduction fails its identities
    """
    config = setup_utils_configuration(args)
    equivalence = load_equivalence(args.equivalence_file)
    left, right = verify_equivalence(equivalence)
    print('\n'.join(_reduction_lines('left reduction D => C', left)
                    + _reduction_lines('right reduction D => EC', right)))
    if not left.ok or not right.ok:
        raise UnverifiedEquivalenceError('Equivalence does not satisfy the reduction identities')

    print(f'homotopy order: left {homotopy_order(equivalence.left).s}, '
          f'right {homotopy_order(equivalence.right).s}')
    print(f"filtered: {'yes' if equivalence_filtered(equivalence) else 'no'}")
    rows = [[str(report.query.r), _page_label(report.left_divisors),
             _page_label(report.right_divisors), report.status.value]
            for report in transfer_levels(equivalence)]
    print(tabulate(rows, headers=['level', 'C', 'EC', 'status'], tablefmt=_tablefmt(config),
                   disable_numparse=True))
