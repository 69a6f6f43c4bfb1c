#!/usr/bin/env python3

import sys
import os
import csv
import json
import argparse
import datetime
import time

# Append troplab to sys.path to allow troplab import even if troplab was not
# installed using pip
parentdir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(parentdir)

import troplab

FORMATS = ('table', 'json', 'csv', 'svg')
ARROWS = ('beta', 'rho', 'psi', 'psi-inverse', 'eta', 'pi', 'shift', 'nu', 'v')
ENUMERATIONS = ('toda', 'bbs', 'jacobian')

################################# DEFINE FUNCTIONS ##########################
def log(string, logfile, indent=0):
    print(('\t' * indent) + string, file=logfile)
    logfile.flush()

def emit(text, outfile):
    print(text, file=outfile)
    outfile.flush()

def curve_of(C, state=None):
    "The curve of -C, or of the conserved vector of the input state"
    if C is not None:
        return troplab.curve.build(C)
    if state is None:
        raise argparse.ArgumentTypeError('This command needs the curve, pass -C')
    return troplab.curve.build(troplab.toda.conserved(state))

def evolve_rows(bbs=None, toda=None, steps=troplab.verify.DEFAULT_STEPS):
    """Rows of an orbit. A box-ball row is (t, b(t), beta(b(t)), T^t(beta(b(0)))),
    a Toda row is (t, T^t(s)). beta columns are None where beta cannot read b(t)."""
    rows = list()
    if bbs is not None:
        try:
            toda = troplab.bbs.beta(bbs)
        except ValueError:
            toda = None
        for t, b in enumerate(troplab.bbs.orbit(bbs, steps)):
            try:
                read = troplab.bbs.beta(b)
            except ValueError:
                read = None
            rows.append((t, b, read, toda))
            if toda is not None:
                toda = troplab.toda.evolve(toda)
    else:
        for t, state in enumerate(troplab.toda.orbit(toda, steps)):
            rows.append((t, state))

    return rows

def format_rows(rows, fmt):
    if fmt == 'json':
        if len(rows[0]) == 4:
            document = {'kind': 'bbs',
                        'rows': [{'t': t, 'bbs': str(b),
                                  'beta': None if read is None else read.to_json(),
                                  'toda': None if toda is None else toda.to_json()}
                                 for t, b, read, toda in rows]}
        else:
            document = {'kind': 'toda', 'rows': [{'t': t, 'toda': s.to_json()} for t, s in rows]}
        return troplab.troptools.dumps(document, 'orbit')

    lines = list()
    if len(rows[0]) == 4:
        lines.append('t\tb(t)\tbeta(b(t))\tT^t(beta(b(0)))')
        for t, b, read, toda in rows:
            lines.append('{}\t{}\t{}\t{}'.format(t, b, '-' if read is None else read,
                                                 '-' if toda is None else toda))
    else:
        lines.append('t\t(Q_1..Q_g+1,W_1..W_g+1)')
        for t, state in rows:
            lines.append('{}\t{}'.format(t, state))
    return '\n'.join(lines)

def curve_document(curve):
    "Curve geometry with its period data"
    jac = troplab.jacobian.jacobian(curve)
    document = curve.to_json()
    document.update({'K': [list(row) for row in jac.K],
                     'Lambda': [list(row) for row in jac.Lambda],
                     'A': [list(row) for row in jac.A],
                     'detK': jac.detK,
                     'detLambda': jac.detLambda,
                     'detA': jac.detA,
                     'smooth': all(ok for _, _, ok in troplab.curve.balance(curve))})
    if curve.C.is_integral():
        document['invariant_factors'] = list(jac.invariant_factors('K'))
    return document

def run_evolve(bbs, toda, steps, fmt, outfile, logfile):
    begintime = time.time()
    log('\nEvolving {} for {} steps'.format(bbs if bbs is not None else toda, steps), logfile)
    rows = evolve_rows(bbs, toda, steps)
    emit(format_rows(rows, fmt), outfile)
    log('Evolved in {} seconds'.format(round(time.time() - begintime, 2)), logfile, 1)

def run_curve(C, fmt, svgpath, divisors, orbit, steps, outfile, logfile):
    begintime = time.time()
    curve = troplab.curve.build(C)
    log('\nBuilding curve of C = {}'.format(curve.C), logfile)
    log('lambda = {}, p = {}'.format(tuple(map(troplab.troptools.format_rational, curve.lambdas)),
        tuple(map(troplab.troptools.format_rational, curve.ps))), logfile, 1)

    overlays = [troplab.jacobian.Divisor.from_json(curve, d) for d in divisors]
    if orbit is not None:
        for state in troplab.toda.orbit(orbit, steps):
            overlays.append(troplab.eigmap.psi(curve, state)[0])

    if svgpath is not None:
        troplab.curve.to_svg(curve, svgpath, overlays)
        log('Wrote SVG to {}'.format(svgpath), logfile, 1)

    if fmt == 'svg':
        if outfile is sys.stdout:
            raise argparse.ArgumentTypeError('SVG output needs --out')
        outfile.close()
        troplab.curve.to_svg(curve, outfile.name, overlays)
    else:
        emit(troplab.troptools.dumps(curve_document(curve), 'curve'), outfile)
    log('Built curve in {} seconds'.format(round(time.time() - begintime, 2)), logfile, 1)

def apply_arrow(arrow, C, bbs, toda, divisor, point, basepoint, basis):
    "Runs one map of the pipeline b -> beta -> psi -> eta. Output: (document, schema)"
    if arrow == 'beta':
        return troplab.bbs.beta(bbs).to_json(), 'toda_state'
    elif arrow == 'rho':
        return troplab.bbs.rho(toda).to_json(), 'bbs_state'
    elif arrow == 'shift':
        return troplab.toda.shift(toda).to_json(), 'toda_state'

    if bbs is not None:
        toda = troplab.bbs.beta(bbs)
    curve = curve_of(C, toda)
    P0 = None if basepoint is None else troplab.curve.locate(curve, *basepoint)

    if arrow == 'psi':
        D, trace = troplab.eigmap.psi(curve, toda)
        return {'divisor': D.to_json(), 'trace': trace.to_json()}, 'divisor'
    elif arrow == 'psi-inverse':
        D = troplab.jacobian.Divisor.from_json(curve, divisor)
        return troplab.eigmap.psi_inverse(curve, D).to_json(), 'toda_state'
    elif arrow == 'eta':
        D = troplab.jacobian.Divisor.from_json(curve, divisor)
        return troplab.jacobian.eta(curve, D, P0, basis).to_json(), 'jacpoint'
    elif arrow == 'pi':
        return troplab.eigmap.pi(curve, toda, P0, basis).to_json(), 'jacpoint'
    else:
        jac = troplab.jacobian.jacobian(curve)
        z = jac.reduce(troplab.troptools.vector(point['z']), point.get('basis', basis))
        return jac.translate(z, arrow).to_json(), 'jacpoint'

def run_map(arrow, C, bbs, toda, divisor, point, basepoint, basis, outfile, logfile):
    begintime = time.time()
    log('\nApplying {}'.format(arrow), logfile)
    document, schema = apply_arrow(arrow, C, bbs, toda, divisor, point, basepoint, basis)
    emit(troplab.troptools.dumps(document, schema), outfile)
    log('Mapped in {} seconds'.format(round(time.time() - begintime, 2)), logfile, 1)

def run_verify(names, params, subprocesses, timing, outfile, logfile):
    begintime = time.time()
    log('\nRunning checks: {}'.format(', '.join(names)), logfile)
    reports = troplab.verify.run_checks(names, params, subprocesses, logfile)
    for report in reports:
        emit(troplab.troptools.dumps(report.to_json(timing), 'check_report'), outfile)
        flag = '!! ' if report.verdict != 'pass' else ''
        log('{}{} [{}]: {}'.format(flag, report.name, report.grade, report.verdict), logfile, 1)

    log('Ran {} checks in {} seconds'.format(len(reports), round(time.time() - begintime, 2)),
        logfile, 1)
    return troplab.verify.exit_code(reports)

def enumerate_items(kind, C, basis, subprocesses, logfile):
    "Output: (header, rows of strings)"
    if kind == 'toda':
        states = troplab.toda.enumerate_isolevel(C, subprocesses, logfile)
        g = C.g
        header = ['Q{}'.format(i) for i in range(1, g + 2)] + ['W{}'.format(i) for i in range(1, g + 2)]
        rows = [[troplab.troptools.format_rational(x) for x in s.as_tuple()] for s in states]
    elif kind == 'bbs':
        states = troplab.bbs.enumerate_bbs(int(C.c(-1)), C.lambdas(), subprocesses, logfile)
        header = ['cells']
        rows = [[str(b)] for b in states]
    else:
        jac = troplab.jacobian.jacobian(troplab.curve.build(C))
        header = ['z{}'.format(i) for i in range(1, C.g + 1)]
        rows = [[troplab.troptools.format_rational(x) for x in z] for z in jac.lattice_points(basis)]

    return header, rows

def run_enumerate(kind, C, basis, fmt, subprocesses, outfile, logfile):
    begintime = time.time()
    log('\nEnumerating {} for C = {}'.format(kind, C), logfile)
    header, rows = enumerate_items(kind, C, basis, subprocesses, logfile)

    if fmt == 'json':
        document = {'kind': kind, 'C': list(C.C), 'count': len(rows), 'columns': header, 'rows': rows}
        if kind == 'jacobian':
            document['basis'] = basis
        emit(troplab.troptools.dumps(document, 'enumeration'), outfile)
    else:
        writer = csv.writer(outfile, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
        outfile.flush()

    log('Enumerated {} items in {} seconds'.format(len(rows), round(time.time() - begintime, 2)),
        logfile, 1)

def load_json(text, what):
    "JSON from a file path or an inline string"
    try:
        if os.path.isfile(text):
            with open(text) as file:
                return json.load(file)
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise argparse.ArgumentTypeError('Cannot parse {} as JSON: {}'.format(what, error)) from None

def add_common(parser, fmt_default):
    helpos = parser.add_argument_group(title='Help', description=None)
    helpos.add_argument('-h', '--help', help='print help and exit', action='help')

    outos = parser.add_argument_group(title='Output options', description=None)
    outos.add_argument('--format', dest='fmt', metavar='', choices=FORMATS, default=fmt_default,
                       help='output format, one of {} [{}]'.format(', '.join(FORMATS), fmt_default))
    outos.add_argument('--out', metavar='', help='write output to this file [stdout]')
    outos.add_argument('--log', metavar='', help='write log to this file [stderr]')
    outos.add_argument('--timing', help='include runtimes in output [False]', action='store_true')

def add_inputs(parser, state=True, curve=True):
    inos = parser.add_argument_group(title='Input', description=None)
    if state:
        inos.add_argument('--bbs', metavar='', help='box-ball state as a 0/1 string')
        inos.add_argument('--toda', metavar='', help='Toda state as JSON {"Q": [..], "W": [..]} or path')
    if curve:
        inos.add_argument('-C', '--curve', dest='C', metavar='', nargs='+',
                          help='conserved vector C_-1 C_0 ... C_g [from the state]')
    return inos

def main():
    doc = """troplab: Ultra-discrete periodic Toda lattice, box-ball system and tropical Jacobian.

    Version: {}

    Subcommands:
      evolve      orbit of a box-ball or Toda state
      curve       tropical curve of C, its period matrices and an optional SVG
      map         one arrow of b -> beta -> psi -> eta: {}
      verify      run named checks, or all, and print one JSON report per check
      enumerate   integer Toda states, box-ball states or Jacobian classes of C

    Run "troplab <subcommand> -h" for options.""".format('.'.join(map(str, troplab.__version__)),
                                                        ', '.join(ARROWS))
    parser = argparse.ArgumentParser(
        prog='troplab',
        description=doc,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        usage="%(prog)s subcommand [options]",
        add_help=False)

    helpos = parser.add_argument_group(title='Help', description=None)
    helpos.add_argument('-h', '--help', help='print help and exit', action='help')
    subparsers = parser.add_subparsers(dest='command', metavar='')

    evolveparser = subparsers.add_parser('evolve', add_help=False,
                                         usage='%(prog)s (--bbs CELLS | --toda JSON) [options]')
    add_inputs(evolveparser, curve=False)
    evolveparser.add_argument('-t', '--steps', dest='steps', metavar='', type=int, default=5,
                              help='number of time steps [5]')
    add_common(evolveparser, 'table')

    curveparser = subparsers.add_parser('curve', add_help=False, usage='%(prog)s C... [options]')
    curveparser.add_argument('C', metavar='C', nargs='+', help='conserved vector C_-1 C_0 ... C_g')
    curveos = curveparser.add_argument_group(title='Drawing', description=None)
    curveos.add_argument('--svg', metavar='', help='also draw the curve to this SVG file')
    curveos.add_argument('--divisor', metavar='', action='append', default=[],
                         help='overlay a divisor, JSON [{"X": .., "Y": ..}, ..] (repeatable)')
    curveos.add_argument('--orbit', metavar='', help='overlay psi of the orbit of this Toda state JSON')
    curveos.add_argument('-t', '--steps', dest='steps', metavar='', type=int, default=5,
                         help='number of orbit steps to overlay [5]')
    add_common(curveparser, 'json')

    mapparser = subparsers.add_parser('map', add_help=False, usage='%(prog)s arrow [inputs] [options]')
    mapparser.add_argument('arrow', metavar='arrow', choices=ARROWS, help=', '.join(ARROWS))
    mapinos = add_inputs(mapparser)
    mapinos.add_argument('--divisor', metavar='', help='divisor JSON [{"X": .., "Y": ..}, ..] or path')
    mapinos.add_argument('--point', metavar='', help='Jacobian point JSON {"z": [..], "basis": ..}')
    mapinos.add_argument('--basepoint', metavar='', nargs=2, help='basepoint X Y of eta [0 0]')
    mapinos.add_argument('--basis', metavar='', choices=('K', 'Lambda', 'A'), default='K',
                         help='basis of the Jacobian, K, Lambda or A [K]')
    add_common(mapparser, 'json')

    verifyparser = subparsers.add_parser('verify', add_help=False, usage='%(prog)s check... [options]')
    verifyparser.add_argument('checks', metavar='check', nargs='+',
                              help='"all" or any of: {}'.format(', '.join(troplab.verify.CHECKS)))
    add_inputs(verifyparser, state=False)
    verifyos = verifyparser.add_argument_group(title='Check options', description=None)
    verifyos.add_argument('-g', dest='g', metavar='', type=int, default=None,
                          help='restrict random trials to this genus [all]')
    verifyos.add_argument('--seed', metavar='', type=int, default=troplab.verify.DEFAULT_SEED,
                          help='random seed [{}]'.format(troplab.verify.DEFAULT_SEED))
    verifyos.add_argument('--trials', metavar='', type=int, default=troplab.verify.DEFAULT_TRIALS,
                          help='random trials per check [{}]'.format(troplab.verify.DEFAULT_TRIALS))
    verifyos.add_argument('-t', '--steps', dest='steps', metavar='', type=int,
                          default=troplab.verify.DEFAULT_STEPS,
                          help='orbit length [{}]'.format(troplab.verify.DEFAULT_STEPS))
    verifyos.add_argument('--orders', metavar='', type=int, default=troplab.verify.DEFAULT_ORDERS,
                          help='random ball orders per box-ball state [{}]'.format(troplab.verify.DEFAULT_ORDERS))
    verifyos.add_argument('-p', dest='subprocesses', metavar='', type=int, default=None,
                          help='number of subprocesses [{}]'.format(troplab.troptools.DEFAULT_SUBPROCESSES))
    add_common(verifyparser, 'json')

    enumparser = subparsers.add_parser('enumerate', add_help=False, usage='%(prog)s kind -C C... [options]')
    enumparser.add_argument('kind', metavar='kind', choices=ENUMERATIONS, help=', '.join(ENUMERATIONS))
    add_inputs(enumparser, state=False)
    enumparser.add_argument('--basis', metavar='', choices=('K', 'Lambda', 'A'), default='K',
                            help='basis of the Jacobian classes [K]')
    enumparser.add_argument('-p', dest='subprocesses', metavar='', type=int, default=None,
                            help='number of subprocesses [{}]'.format(troplab.troptools.DEFAULT_SUBPROCESSES))
    add_common(enumparser, 'csv')

    ######################### PRINT HELP IF NO ARGUMENTS ###################
    if len(sys.argv) == 1:
        parser.print_help()
        sys.exit()

    args = parser.parse_args()
    if args.command is None:
        parser.print_help()
        sys.exit()

    ######################### PARSE INPUTS #################################
    bbs = toda = C = None
    try:
        if getattr(args, 'bbs', None) is not None:
            bbs = troplab.bbs.BBSState(args.bbs)
        if getattr(args, 'toda', None) is not None:
            toda = troplab.toda.TodaState.from_json(load_json(args.toda, 'Toda state'))
        if getattr(args, 'C', None) is not None:
            C = troplab.toda.ConservedVector([troplab.troptools.parse_rational(c) for c in args.C])
    except ValueError as error:
        parser.error(str(error))

    ######################### CHECK ARGUMENTS ##############################
    if args.command in ('evolve', 'map'):
        if bbs is not None and toda is not None:
            raise argparse.ArgumentTypeError('Pass either --bbs or --toda, not both')

    if args.command == 'evolve':
        if bbs is None and toda is None:
            raise argparse.ArgumentTypeError('Must specify --bbs or --toda')
        if args.steps < 0:
            raise argparse.ArgumentTypeError('Number of steps must be nonnegative, not {}'.format(args.steps))
        if args.fmt not in ('table', 'json'):
            raise argparse.ArgumentTypeError('evolve prints a table or json, not {}'.format(args.fmt))

    if args.command == 'curve' and args.fmt not in ('json', 'svg'):
        raise argparse.ArgumentTypeError('curve prints json or svg, not {}'.format(args.fmt))

    if args.command == 'map':
        if args.arrow == 'beta' and bbs is None:
            raise argparse.ArgumentTypeError('beta needs --bbs')
        if args.arrow in ('rho', 'shift', 'psi') and toda is None and not (args.arrow == 'psi' and bbs is not None):
            raise argparse.ArgumentTypeError('{} needs --toda'.format(args.arrow))
        if args.arrow == 'pi' and toda is None and bbs is None:
            raise argparse.ArgumentTypeError('pi needs --toda or --bbs')
        if args.arrow in ('psi-inverse', 'eta'):
            if args.divisor is None or C is None:
                raise argparse.ArgumentTypeError('{} needs --divisor and -C'.format(args.arrow))
        if args.arrow in ('nu', 'v'):
            if args.point is None or C is None:
                raise argparse.ArgumentTypeError('{} needs --point and -C'.format(args.arrow))
        if args.fmt != 'json':
            raise argparse.ArgumentTypeError('map prints json, not {}'.format(args.fmt))

    if args.command in ('verify', 'enumerate') and args.subprocesses is not None and args.subprocesses < 1:
        raise argparse.ArgumentTypeError('Zero or negative subprocesses requested')

    if args.command == 'verify':
        if 'all' in args.checks and len(args.checks) > 1:
            raise argparse.ArgumentTypeError('"all" cannot be combined with other checks')
        for name in args.checks:
            if name != 'all' and name not in troplab.verify.CHECKS:
                raise argparse.ArgumentTypeError('Unknown check "{}"'.format(name))
        if args.trials < 1:
            raise argparse.ArgumentTypeError('Minimum 1 trial, not {}'.format(args.trials))
        if args.orders < 1:
            raise argparse.ArgumentTypeError('Minimum 1 ball order, not {}'.format(args.orders))
        if args.fmt != 'json':
            raise argparse.ArgumentTypeError('verify prints json, not {}'.format(args.fmt))

    if args.command == 'enumerate':
        if C is None:
            raise argparse.ArgumentTypeError('enumerate needs -C')
        if args.fmt not in ('csv', 'json'):
            raise argparse.ArgumentTypeError('enumerate prints csv or json, not {}'.format(args.fmt))

    ################### RUN PROGRAM #########################
    outfile = sys.stdout if args.out is None else open(args.out, 'w')
    logfile = sys.stderr if args.log is None else open(args.log, 'w')
    status = 0

    try:
        log('Started troplab version {}'.format('.'.join(map(str, troplab.__version__))), logfile)
        log('Date and time is {}'.format(datetime.datetime.now()), logfile, 1)
        begintime = time.time()

        if args.command == 'evolve':
            run_evolve(bbs, toda, args.steps, args.fmt, outfile, logfile)

        elif args.command == 'curve':
            divisors = [load_json(d, 'divisor') for d in args.divisor]
            orbit = None
            if args.orbit is not None:
                orbit = troplab.toda.TodaState.from_json(load_json(args.orbit, 'Toda state'))
            run_curve(C, args.fmt, args.svg, divisors, orbit, args.steps, outfile, logfile)

        elif args.command == 'map':
            divisor = None if args.divisor is None else load_json(args.divisor, 'divisor')
            point = None if args.point is None else load_json(args.point, 'Jacobian point')
            run_map(args.arrow, C, bbs, toda, divisor, point, args.basepoint, args.basis,
                    outfile, logfile)

        elif args.command == 'verify':
            names = 'all' if args.checks == ['all'] else args.checks
            if names == 'all':
                names = list(troplab.verify.CHECKS)
            params = {'C': None if C is None else list(C.C), 'g': args.g, 'seed': args.seed,
                      'trials': args.trials, 'steps': args.steps, 'orders': args.orders}
            subprocesses = troplab.troptools.subprocesses(args.subprocesses)
            status = run_verify(names, params, subprocesses, args.timing, outfile, logfile)

        else:
            subprocesses = troplab.troptools.subprocesses(args.subprocesses)
            run_enumerate(args.kind, C, args.basis, args.fmt, subprocesses, outfile, logfile)

        elapsed = round(time.time() - begintime, 2)
        log('\nCompleted troplab in {} seconds'.format(elapsed), logfile)

    finally:
        if outfile is not sys.stdout and not outfile.closed:
            outfile.close()
        if logfile is not sys.stderr:
            logfile.close()

    sys.exit(status)

if __name__ == '__main__':
    main()
