'''Command-line front door for the Penning-trap engine.

Verify the degeneracy superalgebras, tabulate spectra, reproduce the
frequency and level plots as data, scan for crossings and evaluate
wavefunctions.  Data goes to stdout (or ``--out``), logs to stderr.

Examples::

    # Exact relation tables, closure and Jacobi for one case
    python -m penning.cli.trap verify --case su21

    # Level table at the supersymmetric point
    python -m penning.cli.trap spectrum --sigma 3/2 --g 4/3

    # Level-plot data for g = 2/3
    python -m penning.cli.trap figure 2 --out fig2.csv

    # Crossings and frequency ratios
    python -m penning.cli.trap scan --g 2/3 --format json

    # Ground-state differential-equation check
    python -m penning.cli.trap wavefunction --N 0 --K 0 --M 0 --sigma 3/2 --check

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
'''
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from penning.config import THREADS_ENV, default_config
from penning.errors import FailedRelation, NotClosedError, PenningError
from penning.logger import Logger
from penning.report import OutputEnvelope

__all__ = ['main', 'build_parser', 'EXIT_OK', 'EXIT_FAILED', 'EXIT_USAGE']

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='penning-trap',
        description='Degeneracy superalgebras of a Penning trap: verification, spectra, scans and wavefunctions',
        epilog=f'{THREADS_ENV} caps worker processes.',
    )
    parser.add_argument(
        '--log-level', default='warn',
        choices=['debug', 'info', 'warn', 'error'],
        help='Log level on stderr (default: warn)',
    )
    sub = parser.add_subparsers(dest='command', help='Sub-command')

    def add_output(p: argparse.ArgumentParser, default: str = 'csv') -> None:
        p.add_argument('--format', '-f', default=default, choices=['csv', 'json'],
                       help=f'Output format (default: {default})')
        p.add_argument('--out', '-o', default=None, help='Output file (default: stdout)')

    # --- verify ---
    p_verify = sub.add_parser('verify', help='Verify relation tables, closure, Jacobi and identities')
    p_verify.add_argument('--case', '-c', default=None, help='Case id (default: every case)')
    p_verify.add_argument('--numeric-cross-check', action='store_true',
                          help='Recompute every bracket on truncated Fock matrices')
    p_verify.add_argument('--cutoff', type=int, default=None, help='Fock cutoff per boson mode (default: 8)')
    add_output(p_verify)

    # --- spectrum ---
    p_spec = sub.add_parser('spectrum', help='Energy levels at one trap point')
    p_spec.add_argument('--sigma', required=True, help='wc/wz, e.g. 3/2')
    p_spec.add_argument('--g', required=True, help='Lande factor, e.g. 4/3')
    p_spec.add_argument('--max-na', type=int, default=2)
    p_spec.add_argument('--max-nb', type=int, default=2)
    p_spec.add_argument('--max-nc', type=int, default=2)
    p_spec.add_argument('--max-nf', type=int, default=1, choices=[0, 1])
    add_output(p_spec)

    # --- figure ---
    p_fig = sub.add_parser('figure', help='Data behind the frequency plot (1) and level plots (2, 3)')
    p_fig.add_argument('number', type=int, choices=[1, 2, 3])
    p_fig.add_argument('--steps', type=int, default=600, help='Grid points in sigma (default: 600)')
    add_output(p_fig)

    # --- scan ---
    p_scan = sub.add_parser('scan', help='Level crossings, rational frequency ratios and their classification')
    p_scan.add_argument('--g', required=True)
    p_scan.add_argument('--sigma-min', type=float, default=1.45)
    p_scan.add_argument('--sigma-max', type=float, default=3.0)
    p_scan.add_argument('--steps', type=int, default=None, help='Grid points (default: 600)')
    p_scan.add_argument('--maxden', type=int, default=None, help='Largest ratio denominator (default: 16)')
    p_scan.add_argument('--max-na', type=int, default=2)
    p_scan.add_argument('--max-nb', type=int, default=3)
    p_scan.add_argument('--max-nc', type=int, default=1)
    p_scan.add_argument('--max-nf', type=int, default=1, choices=[0, 1])
    add_output(p_scan, default='json')

    # --- wavefunction ---
    p_wave = sub.add_parser('wavefunction', help='Evaluate or profile a coordinate-space eigenfunction')
    p_wave.add_argument('--N', type=int, required=True)
    p_wave.add_argument('--K', type=int, required=True)
    p_wave.add_argument('--M', type=int, required=True)
    p_wave.add_argument('--sigma', required=True)
    mode = p_wave.add_mutually_exclusive_group()
    mode.add_argument('--eval', action='append', default=None, metavar='RHO,PHI,Z',
                      help='Point to evaluate; repeatable')
    mode.add_argument('--profile', action='store_true', help='Dump (rho, z, real, imag) on a rho grid')
    p_wave.add_argument('--points', type=int, default=201, help='Profile grid size (default: 201)')
    p_wave.add_argument('--rho-max', type=float, default=None)
    p_wave.add_argument('--z', type=float, action='append', default=None, help='Profile z value; repeatable')
    p_wave.add_argument('--check', action='store_true', help='Report the differential-equation residual')
    p_wave.add_argument('--tol', type=float, default=1e-8, help='Residual threshold for --check (default: 1e-8)')
    add_output(p_wave)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    '''Verify, tabulate, scan and evaluate Penning-trap degeneracy data'''
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    Logger.set_level(Logger.Level.from_name(args.log_level))
    if args.command is None:
        parser.print_help()
        return EXIT_OK

    commands = {
        'verify': _cmd_verify,
        'spectrum': _cmd_spectrum,
        'figure': _cmd_figure,
        'scan': _cmd_scan,
        'wavefunction': _cmd_wavefunction,
    }
    try:
        return commands[args.command](args)
    except (FailedRelation, NotClosedError) as e:
        Logger.error(str(e))
        return EXIT_FAILED
    except (PenningError, ValueError) as e:
        Logger.error(str(e))
        return EXIT_USAGE


def _envelope(args, **metadata) -> OutputEnvelope:
    return OutputEnvelope(args.command, args.format, args.out, metadata)


def _point_metadata(params) -> dict:
    meta = {'sigma': params.sigma, 'g': params.g, 'exact': params.exact}
    if not params.exact:
        Logger.warn(f'{params}: inputs or Omega are not rational; values are floating point')
    return meta


# ----------------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------------

def _cmd_verify(args) -> int:
    from penning.catalog import CASES, catalog, higher_order_checks, verify_case

    cases = [args.case] if args.case else list(CASES)
    # unknown ids fail before any work starts
    sets = {case: catalog(case) for case in cases}
    config = default_config()
    if args.cutoff is not None:
        config['fock']['cutoff'] = args.cutoff

    reports = [verify_case(case, args.numeric_cross_check, args.cutoff, config) for case in cases]
    reports.append(higher_order_checks())

    summary = {
        case: {'generators': len(gs), 'even': len(gs.even_names()), 'odd': len(gs.odd_names())}
        for case, gs in sets.items()
    }
    ok = all(r.ok for r in reports)
    env = _envelope(args, cases=cases, numeric=args.numeric_cross_check,
                    cutoff=config['fock']['cutoff'], ok=ok)
    if args.format == 'json':
        env.write_document({'cases': summary, 'reports': [r.to_dict() for r in reports]})
    else:
        rows = []
        for report in reports:
            for result in report.results:
                d = result.to_dict()
                rows.append((d['case'], d['identity'], d['passed'], d['residual'], d.get('note', '')))
        env.write_table(['case', 'identity', 'passed', 'residual', 'note'], rows)

    if not ok:
        for report in reports:
            for failure in report.failures():
                Logger.error(f'{report.title}: {failure.identity}')
        return EXIT_FAILED
    return EXIT_OK


# ----------------------------------------------------------------------------
# spectrum
# ----------------------------------------------------------------------------

def _cmd_spectrum(args) -> int:
    import itertools

    from penning.errors import DomainError
    from penning.trap import StateLabel, TrapParameters, energy

    params = TrapParameters.parse(args.sigma, args.g)
    caps = (args.max_na, args.max_nb, args.max_nc, args.max_nf)
    if min(caps) < 0:
        raise DomainError(f'state caps must be non-negative, got {caps}')
    states = [StateLabel(*s) for s in itertools.product(*(range(c + 1) for c in caps))]
    levels = sorted(((energy(s, params), s) for s in states), key=lambda t: (t[0], t[1]))
    env = _envelope(args, **_point_metadata(params), caps=list(caps))
    env.write_table(['Na', 'Nb', 'Nc', 'Nf', 'energy'], [(*s, e) for e, s in levels])
    return EXIT_OK


# ----------------------------------------------------------------------------
# figure
# ----------------------------------------------------------------------------

def _cmd_figure(args) -> int:
    from penning.scan import ScanConfig, figure1_data, find_crossings, scan_levels

    if args.number == 1:
        data = figure1_data(steps=args.steps)
        env = _envelope(args, figure=1, g_values=list(data.g_values), checks=data.checks)
        env.write_table(data.columns, data.rows)
        return EXIT_OK if all(data.checks.values()) else EXIT_FAILED

    config = ScanConfig.figure2(steps=args.steps) if args.number == 2 else ScanConfig.figure3(steps=args.steps)
    levels = scan_levels(config)
    crossings = find_crossings(config)
    clusters = [c.sigma_exact if c.sigma_exact is not None else c.sigma
                for c in crossings if len(c.pairs) > 1]
    env = _envelope(args, figure=args.number, g=config.g,
                    caps=[config.max_na, config.max_nb, config.max_nc, config.max_nf],
                    crossing_clusters=clusters)
    env.write_table(['sigma', 'Na', 'Nb', 'Nc', 'Nf', 'energy'], levels.rows())
    return EXIT_OK


# ----------------------------------------------------------------------------
# scan
# ----------------------------------------------------------------------------

def _cmd_scan(args) -> int:
    from penning.scan import ScanConfig, scan

    overrides = dict(
        sigma_min=args.sigma_min, sigma_max=args.sigma_max,
        max_na=args.max_na, max_nb=args.max_nb, max_nc=args.max_nc, max_nf=args.max_nf,
    )
    if args.steps is not None:
        overrides['steps'] = args.steps
    if args.maxden is not None:
        overrides['max_denominator'] = args.maxden
    config = ScanConfig.from_config(args.g, default_config(), **overrides)
    report = scan(config)
    env = _envelope(args, g=config.g, sigma_min=config.sigma_min, sigma_max=config.sigma_max,
                    steps=config.steps, maxden=config.max_denominator)
    if args.format == 'json':
        env.write_document(report.to_dict())
    else:
        rows = [
            (c.sigma, c.sigma_exact, c.ratio.to_text() if c.ratio else None, c.case, len(c.pairs),
             ' '.join(f'{len(g.members)}@{g.energy}' for g in c.groups))
            for c in report.crossings
        ]
        env.write_table(['sigma', 'sigma_exact', 'ratio', 'case', 'pairs', 'degenerate_groups'], rows)
    return EXIT_OK


# ----------------------------------------------------------------------------
# wavefunction
# ----------------------------------------------------------------------------

def _parse_point(text: str) -> tuple[float, float, float]:
    from penning.errors import ParseError

    parts = text.split(',')
    if len(parts) != 3:
        raise ParseError(f'--eval expects RHO,PHI,Z, got {text!r}')
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise ParseError(f'--eval expects three numbers, got {text!r}') from None


def _cmd_wavefunction(args) -> int:
    from penning.wavefunction import (
        QuantumNumbersNKM,
        WaveParams,
        energy_nkm,
        normalization,
        pde_residual,
        profile,
        psi,
        radial_nodes,
    )

    qn = QuantumNumbersNKM(args.N, args.K, args.M).validate()
    wp = WaveParams(args.sigma)
    meta = {'N': qn.N, 'K': qn.K, 'M': qn.M, 'sigma': wp.sigma, 'energy': energy_nkm(qn, wp)}
    residual = None
    if args.check:
        residual = pde_residual(qn, wp)
        meta['residual'] = residual
        meta['residual_ok'] = residual < args.tol
    env = _envelope(args, **meta)

    if args.eval:
        rows = []
        for text in args.eval:
            rho, phi, z = _parse_point(text)
            value = complex(psi(qn, wp, rho, phi, z))
            rows.append((rho, phi, z, value.real, value.imag))
        env.write_table(['rho', 'phi', 'z', 'real', 'imag'], rows)
    elif args.profile:
        rows = profile(qn, wp, rho_max=args.rho_max, points=args.points, z_values=args.z or (0.0,))
        env.write_table(['rho', 'z', 'real', 'imag'], rows)
    else:
        row = (qn.N, qn.K, qn.M, energy_nkm(qn, wp), normalization(qn.N, qn.K, qn.M, wp),
               radial_nodes(qn, wp), residual)
        env.write_table(['N', 'K', 'M', 'energy', 'normalization', 'radial_nodes', 'residual'], [row])

    if residual is not None and not residual < args.tol:
        Logger.error(f'wavefunction residual {residual:.3e} exceeds {args.tol:g}')
        return EXIT_FAILED
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
