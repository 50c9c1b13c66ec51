"""
Command-line front end.

    hydrocomplex compute --D 3 --n 1 --mu 0,0 --space both --out json
    hydrocomplex sweep --dims 2 5 15 --n-range 1:8 --family circular --measures lmc
    hydrocomplex validate --D 3 --n 2 --tol 1e-6

Results go to stdout (or --output); log records go to stderr.
"""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .adapters.report import mu_text, report_json, rows_frame, state_rows, to_csv, to_json_text, to_table
from .adapters.validation import validation_frame, validation_report
from .complexity import compute_state, cramer_rao, fisher_shannon, lmc
from .config import Settings, resolve_settings
from .core import DomainError, HyperState, QuadratureAccuracyError, Space, StateError, validate_state
from .families import chain_family, circular_state
from .measures import canonical_variance, disequilibrium_estimate, fisher_information, shannon_estimate
from .quadrature import QuadratureSpec

logger = logging.getLogger(__name__)

MEASURES = ('lmc', 'fs', 'cr', 'shannon', 'fisher', 'variance', 'disequilibrium')
EXIT_STATE = 2
EXIT_ACCURACY = 3


def parse_mu(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(',') if part.strip() != '')
    except ValueError:
        raise argparse.ArgumentTypeError(f"mu must be a comma list of integers, got {text!r}") from None


def parse_n_range(text: str) -> range:
    """'1:8' (inclusive) or a single '3'."""
    try:
        if ':' in text:
            low, high = (int(part) for part in text.split(':', 1))
        else:
            low = high = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"n range must look like 1:8, got {text!r}") from None
    if high < low:
        raise argparse.ArgumentTypeError(f"Empty n range {text!r}")
    return range(low, high + 1)


def _spaces(choice: str) -> Tuple[Space, ...]:
    if choice == 'both':
        return (Space.POSITION, Space.MOMENTUM)
    return (Space.parse(choice),)


def _settings(args: argparse.Namespace) -> Settings:
    return resolve_settings(args.config, overrides={
        'workers': getattr(args, 'workers', None),
        'gate': getattr(args, 'tol', None),
    })


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text if text.endswith('\n') else text + '\n')
        return
    with open(output, 'w', encoding='utf-8', newline='') as handle:
        handle.write(text)
    logger.info("Wrote %s", output)


# compute


def cmd_compute(args: argparse.Namespace) -> int:
    settings = _settings(args)
    if args.circular:
        state: HyperState = circular_state(args.n, args.D)
    else:
        state = validate_state(args.D, args.n, args.mu)

    report = compute_state(state, args.Z, _spaces(args.space), settings.quadrature)
    if args.out == 'json':
        _emit(report_json(report), args.output)
    else:
        frame = rows_frame(state_rows(report))
        _emit(to_csv(frame) if args.out == 'csv' else to_table(frame), args.output)
    return 0


# sweep


@dataclass(frozen=True)
class SweepRequest:
    dims: Tuple[int, ...]
    n_values: Tuple[int, ...]
    family: str = 'circular'
    mus: Tuple[Tuple[int, ...], ...] = ()
    spaces: Tuple[Space, ...] = (Space.POSITION,)
    measures: Tuple[str, ...] = ('lmc',)
    Z: float = 1.0
    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)

    def __post_init__(self) -> None:
        if not self.dims or not self.n_values:
            raise ValueError("A sweep needs at least one dimension and one n")
        if self.family not in ('circular', 'explicit', 'chains'):
            raise ValueError(f"Unknown state family '{self.family}'")
        if self.family == 'explicit' and not self.mus:
            raise ValueError("The explicit family needs at least one --mu chain")
        unknown = [name for name in self.measures if name not in MEASURES]
        if unknown:
            raise ValueError(f"Unknown measure(s): {', '.join(unknown)}")

    def jobs(self) -> List[Tuple[int, int, Tuple[int, ...]]]:
        """(D, n, mu) in D-major, n-minor order."""
        jobs = []
        for D in self.dims:
            for n in self.n_values:
                if self.family == 'circular':
                    jobs.append((D, n, (n - 1,) * (D - 1)))
                elif self.family == 'chains':
                    jobs.extend((D, n, state.mu) for state in chain_family(D, n))
                else:
                    jobs.extend((D, n, mu) for mu in self.mus)
        return jobs


def _measure(state: HyperState, Z: float, space: Space, name: str, q: QuadratureSpec) -> Tuple[float, float]:
    """(value, error estimate) of one sweep measure."""
    if name == 'lmc':
        return lmc(state, Z, space, q), 0.0
    if name == 'fs':
        return fisher_shannon(state, Z, space, q), 0.0
    if name == 'cr':
        return cramer_rao(state, Z, space, q), 0.0
    if name == 'shannon':
        estimate = shannon_estimate(state, Z, space, q)
        return estimate.value, estimate.error
    if name == 'disequilibrium':
        estimate = disequilibrium_estimate(state, Z, space, q)
        return estimate.value, estimate.error
    if name == 'fisher':
        return fisher_information(state, Z, space), 0.0
    return canonical_variance(state, Z, space, q)[0], 0.0


def sweep_rows(job: Tuple[int, int, Tuple[int, ...], SweepRequest]) -> List[Dict[str, Any]]:
    """Rows of one (D, n, mu); a failure turns into error rows instead of stopping the sweep."""
    D, n, mu, request = job
    rows = []
    state: Optional[HyperState] = None
    failure = ''
    try:
        state = validate_state(D, n, mu)
    except StateError as exc:
        failure = str(exc)
    for space in request.spaces:
        for name in request.measures:
            value, err, message = float('nan'), float('nan'), ''
            if state is None:
                message = failure
            else:
                try:
                    value, err = _measure(state, request.Z, space, name, request.quadrature)
                except (QuadratureAccuracyError, DomainError) as exc:
                    message = str(exc)
            if message:
                logger.warning("D=%d n=%d mu=(%s) %s %s: %s", D, n, mu_text(mu), space.value, name, message)
            rows.append({'D': D, 'n': n, 'mu': mu_text(mu), 'Z': request.Z, 'space': space.value,
                         'measure': name, 'value': value, 'err_estimate': err, 'error': message})
    return rows


def run_sweep(request: SweepRequest, workers: int = 0) -> List[Dict[str, Any]]:
    jobs = [(D, n, mu, request) for D, n, mu in request.jobs()]
    logger.info("Sweeping %d state(s) on %s", len(jobs), f"{workers} worker(s)" if workers > 0 else "one process")
    if workers > 0:
        with Pool(processes=workers) as pool:
            chunks = pool.map(sweep_rows, jobs)
    else:
        chunks = [sweep_rows(job) for job in jobs]
    return [row for chunk in chunks for row in chunk]


def cmd_sweep(args: argparse.Namespace) -> int:
    settings = _settings(args)
    request = SweepRequest(
        dims=tuple(args.dims),
        n_values=tuple(args.n_range),
        family=args.family,
        mus=tuple(args.mu or ()),
        spaces=tuple(space for choice in args.spaces for space in _spaces(choice)),
        measures=tuple(args.measures),
        Z=args.Z,
        quadrature=settings.quadrature,
    )
    _emit(to_csv(rows_frame(run_sweep(request, settings.workers))), args.output)
    return 0


# validate


def cmd_validate(args: argparse.Namespace) -> int:
    settings = _settings(args)
    states = [state for D in args.D for n in range(1, args.n + 1) for state in chain_family(D, n)]
    rows = validation_report(states, args.Z, settings.quadrature, settings.gate)
    frame = validation_frame(rows)
    if args.out == 'json':
        _emit(to_json_text({'gate': settings.gate, 'rows': [row.to_json() for row in rows]}), args.output)
    else:
        _emit(to_csv(frame) if args.out == 'csv' else to_table(frame), args.output)
    counts = frame['status'].value_counts().to_dict()
    logger.info("Validation: %s", ", ".join(f"{key}={value}" for key, value in sorted(counts.items())))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='hydrocomplex',
                                     description="Information measures and complexities of D-dimensional hydrogenic states")
    parser.add_argument('-v', '--verbose', action='count', default=0, help="-v for INFO, -vv for DEBUG")
    parser.add_argument('--config', type=str, default=None, help="key = value file with quadrature settings")
    sub = parser.add_subparsers(dest='command', required=True)

    comp = sub.add_parser('compute', help="Measures and complexities of one state")
    comp.add_argument('--D', type=int, required=True)
    comp.add_argument('--n', type=int, required=True)
    chain = comp.add_mutually_exclusive_group(required=True)
    chain.add_argument('--mu', type=parse_mu, help="comma list mu_1,...,mu_{D-1}")
    chain.add_argument('--circular', action='store_true', help="use mu_i = n - 1 for every i")
    comp.add_argument('--Z', type=float, default=1.0)
    comp.add_argument('--space', choices=['position', 'momentum', 'both'], default='both')
    comp.add_argument('--out', choices=['json', 'csv', 'table'], default='json')
    comp.add_argument('--output', type=str, default=None)
    comp.set_defaults(func=cmd_compute)

    swp = sub.add_parser('sweep', help="Tabulate measures over a grid of states (CSV)")
    swp.add_argument('--dims', type=int, nargs='+', default=[2, 5, 15])
    swp.add_argument('--n-range', type=parse_n_range, default=parse_n_range('1:8'))
    swp.add_argument('--family', choices=['circular', 'explicit', 'chains'], default='circular')
    swp.add_argument('--mu', type=parse_mu, action='append', help="explicit chain, repeatable")
    swp.add_argument('--spaces', nargs='+', choices=['position', 'momentum', 'both'], default=['position'])
    swp.add_argument('--measures', nargs='+', choices=list(MEASURES), default=['lmc'])
    swp.add_argument('--Z', type=float, default=1.0)
    swp.add_argument('--workers', type=int, default=None)
    swp.add_argument('--output', type=str, default=None)
    swp.set_defaults(func=cmd_sweep)

    val = sub.add_parser('validate', help="Closed forms against the quadrature oracle")
    val.add_argument('--D', type=int, nargs='+', default=[2, 3, 4, 6])
    val.add_argument('--n', type=int, default=4, help="largest n")
    val.add_argument('--tol', type=float, default=None, help="relative agreement gate")
    val.add_argument('--Z', type=float, default=1.0)
    val.add_argument('--out', choices=['csv', 'table', 'json'], default='table')
    val.add_argument('--output', type=str, default=None)
    val.set_defaults(func=cmd_validate)
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return int(args.func(args))
    except StateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STATE
    except QuadratureAccuracyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ACCURACY
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
