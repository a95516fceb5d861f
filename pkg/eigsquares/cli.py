#    Licensed under the MIT License
#    eigsquares - sums of squares of graph eigenvalues

"""
Command line
============

The ``eigsquares`` command has four subcommands:

* ``verify``: full bound report of each input graph.
* ``search``: enumeration and search for graphs below ``n - kappa``.
* ``family``: report on one member of a named family.
* ``quotient``: twin quotient and multiplicities of each input graph.

Exit code 0 means no violation was found, 2 that some bound or the
conjecture failed, 1 that the command could not run.
"""

import argparse
from contextlib import ExitStack
import csv
from dataclasses import dataclass, replace
import json
import logging
import sys
from typing import IO, Iterator, Optional, Sequence

from eigsquares._internal import DEFAULT_TOLERANCES, Tolerances
from eigsquares.bounds import BOUND_DESCRIPTIONS, BOUND_IDS, BoundsReport, full_report
from eigsquares.canonical import canonical_graph
from eigsquares.chromatic import chromatic_number
from eigsquares.families import FAMILIES, barbell_predicted_spectrum
from eigsquares.graph import Graph
from eigsquares.graph6 import decode, encode, read_graph6
from eigsquares.search import SearchConfig, extremal_report, hunt
from eigsquares.spectral import summarize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATIONS = 2

FORMATS = ('csv', 'json', 'table')


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with status 1, as 2 reports violations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f'{self.prog}: error: {message}\n')


@dataclass(frozen=True)
class CliConfig:
    """Options shared by every subcommand.

    Attributes
    ----------
    command : str
        Subcommand name.
    graph6 : str, optional
        Inline graph, exclusive with ``path``.
    path : str, optional
        File with one graph6 string per line; ``-`` is standard input.
    with_chi : bool
        Compute chromatic numbers.
    tolerances : Tolerances
        Classification tolerances after ``--tol``.
    output_format : str
        ``csv``, ``json`` or ``table``.
    out : str, optional
        Output file; standard output when missing.
    """

    command: str
    graph6: Optional[str] = None
    path: Optional[str] = None
    with_chi: bool = False
    tolerances: Tolerances = DEFAULT_TOLERANCES
    output_format: str = 'json'
    out: Optional[str] = None


def _parse_range(text: str) -> tuple[int, int]:
    """``'A..B'`` or ``'B'`` (meaning ``1..B``) as an inclusive range."""

    try:
        if '..' in text:
            low, high = text.split('..', 1)
            return int(low), int(high)
        return 1, int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid vertex range {text!r}") from None


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid tolerance {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {text}")
    return value


def _bounds_epilog() -> str:
    lines = ['bound ids:']
    width = max(len(bound_id) for bound_id in BOUND_IDS)
    for bound_id in BOUND_IDS:
        lines.append(f'  {bound_id.ljust(width)}  {BOUND_DESCRIPTIONS[bound_id]}')
    return '\n'.join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--with-chi', action='store_true', help="compute chromatic numbers"
    )
    common.add_argument(
        '--tol',
        type=_positive_float,
        help=(
            "slack tolerance (default 1e-6); all classification tolerances "
            "are rescaled by the same factor, computed values are not"
        ),
    )
    common.add_argument(
        '--format',
        choices=FORMATS,
        dest='output_format',
        help="output format (default: table on a terminal, json otherwise)",
    )
    common.add_argument('--out', metavar='PATH', help="output file")

    inputs = argparse.ArgumentParser(add_help=False)
    group = inputs.add_mutually_exclusive_group(required=True)
    group.add_argument(
        'path', nargs='?', help="graph6 file, one graph per line ('-' for stdin)"
    )
    group.add_argument('--graph6', metavar='TEXT', help="single graph in graph6")

    parser = _ArgumentParser(
        prog='eigsquares',
        description="Sums of squares of graph eigenvalues.",
        epilog=_bounds_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('-v', '--verbose', action='store_true', help="debug logging")
    subparsers = parser.add_subparsers(
        dest='command', required=True, parser_class=_ArgumentParser
    )

    subparsers.add_parser(
        'verify',
        parents=[common, inputs],
        help="full bound report of each graph",
        epilog=_bounds_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )

    search = subparsers.add_parser(
        'search', parents=[common], help="search for graphs below n - kappa"
    )
    search.add_argument(
        '--n',
        type=_parse_range,
        default=(1, 8),
        metavar='A..B',
        help="vertex range (default 1..8)",
    )
    search.add_argument(
        '--connected', action='store_true', help="connected graphs only"
    )
    search.add_argument(
        '--max-degree', type=int, metavar='D', help="maximum degree filter"
    )
    search.add_argument('--jobs', type=int, metavar='K', help="worker processes")
    search.add_argument(
        '--input', metavar='PATH', help="evaluate a graph6 file instead"
    )
    search.add_argument(
        '--no-bounds', action='store_true', help="skip the bound report"
    )

    family = subparsers.add_parser(
        'family', parents=[common], help="report on a member of a named family"
    )
    family.add_argument('name', choices=sorted(FAMILIES), help="family name")
    family.add_argument(
        'params', nargs='*', help="integers, comma-separated lists or a graph6 graph"
    )

    subparsers.add_parser(
        'quotient', parents=[common, inputs], help="twin quotient of each graph"
    )

    return parser


def _tolerances(tol: Optional[float]) -> Tolerances:
    if tol is None:
        return DEFAULT_TOLERANCES
    return DEFAULT_TOLERANCES.scaled(tol / DEFAULT_TOLERANCES.slack)


def _config(args: argparse.Namespace, stream: IO[str]) -> CliConfig:
    output_format = args.output_format
    if output_format is None:
        output_format = 'table' if args.out is None and stream.isatty() else 'json'
    return CliConfig(
        command=args.command,
        graph6=getattr(args, 'graph6', None),
        path=getattr(args, 'path', None),
        with_chi=args.with_chi,
        tolerances=_tolerances(args.tol),
        output_format=output_format,
        out=args.out,
    )


def _read_input(cfg: CliConfig, stack: ExitStack) -> Iterator[Graph]:
    if cfg.graph6 is not None:
        return iter([decode(cfg.graph6)])
    elif cfg.path == '-':
        return read_graph6(sys.stdin)
    stream = stack.enter_context(open(cfg.path, encoding='ascii'))
    return read_graph6(stream)


def _report(g: Graph, cfg: CliConfig) -> BoundsReport:
    chi = chromatic_number(g).chi if cfg.with_chi else None
    return full_report(g, summarize(g, cfg.tolerances), chi, cfg.tolerances)


def _write_reports(
    reports: Iterator[BoundsReport], cfg: CliConfig, out: IO[str]
) -> tuple[int, int]:
    graphs = violations = 0
    writer = csv.writer(out, lineterminator='\n')
    if cfg.output_format == 'csv':
        writer.writerow(BoundsReport.csv_header())

    for report in reports:
        if cfg.output_format == 'csv':
            writer.writerow(report.csv_row())
        elif cfg.output_format == 'json':
            out.write(report.to_json() + '\n')
        else:
            if graphs:
                out.write('\n')
            out.write(f'{report.graph6}  n={report.n}  m={report.m}\n')
            out.write(report.to_table() + '\n')
        graphs += 1
        violations += len(report.violations())

    return graphs, violations


def cmd_verify(cfg: CliConfig, out: IO[str]) -> int:
    with ExitStack() as stack:
        reports = (_report(g, cfg) for g in _read_input(cfg, stack))
        graphs, violations = _write_reports(reports, cfg, out)

    print(f"{graphs} graphs, {violations} violations", file=sys.stderr)
    return EXIT_VIOLATIONS if violations else EXIT_OK


def cmd_search(cfg: CliConfig, args: argparse.Namespace, out: IO[str]) -> int:
    n_min, n_max = args.n
    search_cfg = SearchConfig(
        n_min=n_min,
        n_max=n_max,
        connected=args.connected,
        max_degree=args.max_degree,
        with_chi=cfg.with_chi,
        check_bounds=not args.no_bounds,
        tolerances=cfg.tolerances,
        sink=out if cfg.output_format == 'csv' else None,
        keep_records=cfg.output_format != 'csv',
    )
    if args.jobs is not None:
        search_cfg = replace(search_cfg, jobs=args.jobs)

    with ExitStack() as stack:
        graphs = None
        if args.input is not None:
            graphs = _read_input(replace(cfg, path=args.input), stack)
        summary = hunt(search_cfg, graphs)

    if cfg.output_format == 'json':
        document = summary.to_dict()
        document['extremal'] = extremal_report(summary.records).to_dict()
        out.write(json.dumps(document, indent=2) + '\n')
    elif cfg.output_format == 'table':
        rows = [
            ['graphs', str(summary.graphs)],
            ['violations', str(len(summary.violations))],
            ['bound failures', str(sum(summary.bound_failures.values()))],
            ['min slack', _format_slack(summary.min_slack)],
            ['argmin', summary.argmin or ''],
            ['boundary', str(summary.boundary)],
            ['trees at zero', str(summary.trees_at_zero)],
            ['complete at zero', str(summary.complete_at_zero)],
            ['truncated', 'yes' if summary.truncated else 'no'],
        ]
        out.write(_format_summary(rows) + '\n\n')
        out.write(extremal_report(summary.records).to_table() + '\n')

    for record in summary.violations:
        logger.error("Violation %s: slack %.6e", record.graph6, record.slack)
    return EXIT_VIOLATIONS if summary.found_violations else EXIT_OK


def _format_slack(slack: Optional[float]) -> str:
    return '' if slack is None else f'{slack:.6f}'


def _format_summary(rows: Sequence[Sequence[str]]) -> str:
    width = max(len(row[0]) for row in rows)
    return '\n'.join(f'{label.ljust(width)}  {value}' for label, value in rows)


def _family_params(kinds: Sequence[str], params: Sequence[str]) -> list:
    if len(kinds) != len(params):
        raise ValueError(f"Expected {len(kinds)} parameters, got {len(params)}")

    values: list = []
    for kind, text in zip(kinds, params):
        try:
            if kind == 'ints':
                values.append([int(part) for part in text.split(',') if part])
            elif kind == 'graph6':
                values.append(decode(text))
            else:
                values.append(int(text))
        except ValueError:
            raise ValueError(f"Invalid parameter {text!r}") from None
    return values


def cmd_family(cfg: CliConfig, args: argparse.Namespace, out: IO[str]) -> int:
    constructor, kinds = FAMILIES[args.name]
    g = constructor(*_family_params(kinds, args.params))
    s = summarize(g, cfg.tolerances)
    chi = chromatic_number(g).chi if cfg.with_chi else None
    report = full_report(g, s, chi, cfg.tolerances)

    deviation = None
    if args.name == 'barbell':
        prediction = barbell_predicted_spectrum(int(args.params[0]))
        deviation = prediction.deviation(s.eigenvalues)

    if cfg.output_format == 'json':
        document = {
            'family': args.name,
            'params': list(args.params),
            'graph6': report.graph6,
            'inertia': s.inertia._asdict(),
            'report': report.to_dict(),
        }
        if deviation is not None:
            document['barbell_deviation'] = deviation
        out.write(json.dumps(document, indent=2) + '\n')
    elif cfg.output_format == 'csv':
        out.write(report.to_csv())
    else:
        pi, nu, gamma = s.inertia
        out.write(f'{report.graph6}  n={report.n}  m={report.m}  ')
        out.write(f'inertia=({pi}, {nu}, {gamma})\n')
        out.write(report.to_table() + '\n')
        if deviation is not None:
            out.write(f'barbell closed form deviation: {deviation:.3e}\n')

    return EXIT_VIOLATIONS if report.violations() else EXIT_OK


def cmd_quotient(cfg: CliConfig, out: IO[str]) -> int:
    writer = csv.writer(out, lineterminator='\n')
    if cfg.output_format == 'csv':
        writer.writerow(['graph6', 'quotient', 'multiplicities'])

    with ExitStack() as stack:
        for g in _read_input(cfg, stack):
            decomposition = canonical_graph(g)
            quotient = encode(decomposition.quotient)
            multiplicities = list(decomposition.multiplicities)
            if cfg.output_format == 'json':
                document = {'graph6': encode(g), **decomposition.to_dict()}
                out.write(json.dumps(document) + '\n')
            elif cfg.output_format == 'csv':
                sizes = ','.join(map(str, multiplicities))
                writer.writerow([encode(g), quotient, sizes])
            else:
                out.write(f'{encode(g)}  ->  {quotient}  {multiplicities}\n')

    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``eigsquares`` command; returns the exit code."""

    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='[%(asctime)s][%(name)s][%(processName)s]: %(message)s',
    )

    try:
        with ExitStack() as stack:
            if args.out is not None:
                stream = open(args.out, 'w', encoding='utf-8', newline='')
                out = stack.enter_context(stream)
            else:
                out = sys.stdout
            cfg = _config(args, out)

            if cfg.command == 'verify':
                return cmd_verify(cfg, out)
            elif cfg.command == 'search':
                return cmd_search(cfg, args, out)
            elif cfg.command == 'family':
                return cmd_family(cfg, args, out)
            return cmd_quotient(cfg, out)
    except (ValueError, TypeError, ArithmeticError, RuntimeError, OSError) as error:
        print(f"eigsquares: error: {error}", file=sys.stderr)
        return EXIT_ERROR
