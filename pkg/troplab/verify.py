__doc__ = """Verification suites over isolevel sets, box-ball states and curves.

Every check is a registered function run through run_check, which returns a
CheckReport. Checks have a grade: 'proposition' for statements that are
proved, 'conjecture' for statements only supported by computation. A failing
proposition gives the verdict 'fail'; a failing conjecture gives
'counterexample'. Both carry a witness from which one library call
reproduces the failure.

Usage:
>>> report = run_check('counting', {'C': [7, 3, 1, 0]})
>>> report.verdict, report.details['(7,3,1,0)']['toda']
('pass', 63)
"""

import sys as _sys
import time as _time
import random as _random
import itertools as _itertools
import functools as _functools
import multiprocessing as _multiprocessing
import troplab.troptools as _troptools
import troplab.toda as _toda
import troplab.bbs as _bbs
import troplab.curve as _curve
import troplab.jacobian as _jacobian
import troplab.eigmap as _eigmap

DEFAULT_TRIALS = 1000
DEFAULT_SEED = 0
DEFAULT_STEPS = 20
DEFAULT_ORDERS = 100

BENCHMARKS = ((8, 3, 0), (7, 3, 1, 0), (13, 6, 3, 1, 0))

VERDICTS = ('pass', 'fail', 'counterexample')

class CheckReport:
    """Outcome of one check.

    name, grade, params: what was run
    verdict: 'pass', 'fail' or 'counterexample'
    witness: None, or JSON-ready data reproducing a failure
    details: JSON-ready dict of counts and findings
    runtime: wall-clock seconds
    """
    __slots__ = ['name', 'grade', 'params', 'verdict', 'witness', 'details', 'runtime']

    def __init__(self, name, grade, params, verdict, witness=None, details=None, runtime=0.0):
        if verdict not in VERDICTS:
            raise ValueError('Verdict must be one of {}, not {}'.format(VERDICTS, verdict))

        self.name = name
        self.grade = grade
        self.params = params
        self.verdict = verdict
        self.witness = witness
        self.details = dict() if details is None else details
        self.runtime = runtime

    @property
    def passed(self):
        return self.verdict == 'pass'

    @property
    def breaking(self):
        "A proven statement failed: the implementation is wrong"
        return self.verdict == 'fail'

    def to_json(self, timing=False):
        document = {'name': self.name,
                    'grade': self.grade,
                    'params': self.params,
                    'verdict': self.verdict,
                    'witness': self.witness,
                    'details': self.details}
        if timing:
            document['runtime'] = round(self.runtime, 2)
        return _troptools.jsonable(document)

    def __repr__(self):
        return 'CheckReport({}, {}, {})'.format(self.name, self.grade, self.verdict)

class _Failure(Exception):
    "Raised inside a check to end it with a witness"
    def __init__(self, witness, details=None, conjecture=False):
        super().__init__(witness)
        self.witness = witness
        self.details = details
        self.conjecture = conjecture

def _log(string, logfile):
    if logfile is not None:
        print('\t\t' + string, file=logfile)
        logfile.flush()

def _curves(params, genera=(1, 2, 3, 4, 5, 6)):
    "Curves to run on: the one given by params['C'], or the benchmark curves"
    if params.get('C') is not None:
        C = _toda.as_conserved(params['C'])
        if C.g not in genera:
            raise ValueError('This check runs on genus {}, not {}'.format(genera, C.g))
        return [_curve.build(C)]
    return [_curve.build(C) for C in BENCHMARKS if len(C) - 2 in genera]

def _integer(curve):
    if not curve.C.is_integral():
        raise ValueError('This check needs an integer C, not {}'.format(curve.C))
    return curve

def _isolevel(curve):
    return _toda.cached_isolevel(_integer(curve).C)

@_functools.lru_cache(maxsize=16)
def _bbs_states(L, lambdas):
    return tuple(_bbs.enumerate_bbs(L, lambdas))

def _bbs_of(curve):
    C = _integer(curve).C
    return _bbs_states(int(C.c(-1)), C.lambdas())

def _rng(params):
    return _random.Random(params['seed'])

def _genera(params, default):
    if params.get('g') is not None:
        return [int(params['g'])]
    return list(default)

def _conservation(params, logfile):
    rng = _rng(params)
    count = 0
    for g in _genera(params, (1, 2, 3, 4, 5)):
        _log('conservation: {} random states of genus {}'.format(params['trials'], g), logfile)
        for _ in range(params['trials']):
            state = _toda.random_state(g, rng)
            before = _toda.conserved(state)
            after = _toda.conserved(_toda.evolve(state))
            if before != after:
                raise _Failure({'state': state.to_json(), 'before': before.to_json(),
                                'after': after.to_json()})

            for k, value in _toda.explicit_conserved(state).items():
                if before.c(k) != value:
                    raise _Failure({'state': state.to_json(), 'k': k, 'explicit': value,
                                    'general': before.c(k)})

            if g == 2 and _toda.explicit_conserved_g2(state) != before:
                raise _Failure({'state': state.to_json(), 'general': before.to_json(),
                                'explicit': _toda.explicit_conserved_g2(state).to_json()})
            count += 1

    return {'states': count}

def _roundtrip(curve, state):
    divisor, _ = _eigmap.psi(curve, state)
    back = _eigmap.psi_inverse(curve, divisor)
    if back != state:
        raise _Failure({'C': curve.C.to_json()['C'], 'state': state.to_json(),
                        'divisor': divisor.to_json(), 'inverse': back.to_json()})

def _psi_roundtrip(params, logfile):
    rng = _rng(params)
    details = dict()
    curves = _curves(params, genera=_eigmap.INVERTIBLE_GENERA)

    for curve in curves:
        if curve.C.is_integral():
            states = _isolevel(curve)
            _log('psi-roundtrip: {} integer states of C = {}'.format(len(states), curve.C), logfile)
            for state in states:
                _roundtrip(curve, state)
            details[str(curve.C)] = len(states)

    _log('psi-roundtrip: {} random rational states'.format(params['trials']), logfile)
    genera = _genera(params, _eigmap.INVERTIBLE_GENERA) if params.get('C') is None else [curves[0].g]
    # Small curves, each isolevel set is enumerated once
    pool = [_toda.random_generic(g, rng, maxlambda=g + 2) for g in genera for _ in range(6)]
    for trial in range(params['trials']):
        C = pool[trial % len(pool)]
        factor = _troptools.Rational(rng.randint(1, 12), rng.randint(1, 12))
        state = _toda.random_isolevel_state(C, rng, scales=(1, 2)).scaled(factor)
        _roundtrip(_curve.build(C.scaled(factor)), state)

    # psi . psi_inverse on random points of genus 1 curves
    points = 0
    for curve in curves:
        if curve.g != 1:
            continue
        for _ in range(params['trials']):
            P = _curve.random_point(curve, rng)
            state = _eigmap.psi_inverse(curve, _jacobian.Divisor([P]))
            divisor, _ = _eigmap.psi(curve, state)
            if divisor != _jacobian.Divisor([P]):
                raise _Failure({'C': curve.C.to_json()['C'], 'point': P.to_json(),
                                'state': state.to_json(), 'divisor': divisor.to_json()})
            points += 1

    details['random_states'] = params['trials']
    details['random_points'] = points
    return details

def _psi_image(params, logfile):
    details = dict()
    for curve in _curves(params, genera=_eigmap.SUPPORTED_GENERA):
        states = _isolevel(curve)
        _log('psi-image-in-Dg: {} states of C = {}'.format(len(states), curve.C), logfile)
        for state in states:
            pairs, trace = _eigmap.psi_points(curve, state)
            witness = {'C': curve.C.to_json()['C'], 'state': state.to_json(),
                       'points': [list(p) for p in pairs], 'trace': trace.to_json()}
            if not all(_curve.contains(curve, x, y) for x, y in pairs):
                raise _Failure(witness, {'reason': 'point off the curve'}, conjecture=(curve.g == 3))
            divisor = _jacobian.Divisor.from_coords(curve, pairs)
            if not _jacobian.in_Dg(curve, divisor):
                raise _Failure(witness, {'reason': 'divisor not in D^g'}, conjecture=(curve.g == 3))
        details[str(curve.C)] = len(states)

    return details

def _counting(params, logfile):
    details = dict()
    for curve in _curves(params):
        jac = _jacobian.jacobian(curve)
        toda = len(_isolevel(curve))
        bbs = len(_bbs_of(curve))
        g = curve.g
        counts = {'toda': toda,
                  'detLambda': jac.lattice_point_count('Lambda'),
                  'detK': jac.lattice_point_count('K'),
                  '(g+1)detA': (g + 1) * jac.lattice_point_count('A'),
                  '(g+1)bbs': (g + 1) * bbs}
        _log('counting: C = {}: {}'.format(curve.C, counts), logfile)
        if len(set(counts.values())) != 1:
            raise _Failure(dict(counts, C=curve.C.to_json()['C']))
        details[str(curve.C)] = dict(counts, bbs=bbs)

    return details

def _pi_images(curve, logfile):
    "(state, pi(state)) over the integer isolevel set; raises a conjecture failure off the curve"
    images = list()
    for state in _isolevel(curve):
        try:
            images.append((state, _eigmap.pi(curve, state)))
        except ValueError as error:
            raise _Failure({'C': curve.C.to_json()['C'], 'state': state.to_json(),
                            'error': str(error)}, conjecture=True) from None
    _log('computed pi on {} states of C = {}'.format(len(images), curve.C), logfile)
    return images

def _pi_injectivity(params, logfile):
    details = dict()
    for curve in _curves(params, genera=_eigmap.SUPPORTED_GENERA):
        seen = dict()
        for state, point in _pi_images(curve, logfile):
            if point in seen:
                raise _Failure({'C': curve.C.to_json()['C'], 'states': [seen[point].to_json(),
                                state.to_json()], 'image': point.to_json()}, conjecture=True)
            if not _troptools.is_integral(point.z):
                raise _Failure({'C': curve.C.to_json()['C'], 'state': state.to_json(),
                                'image': point.to_json()}, {'reason': 'image is not a lattice point'},
                               conjecture=True)
            seen[point] = state

        detK = _jacobian.jacobian(curve).lattice_point_count('K')
        details[str(curve.C)] = {'states': len(seen), 'detK': detK, 'bijective': len(seen) == detK}
        if len(seen) != detK:
            raise _Failure({'C': curve.C.to_json()['C'], 'images': len(seen), 'detK': detK},
                           conjecture=True)

    details['summary'] = 'supported at these parameters'
    return details

def _eta_injectivity(params, logfile):
    step = _troptools.rational(params.get('step', '1/2'))
    details = dict()
    for curve in _curves(params, genera=(1, 2, 3)):
        jac = _jacobian.jacobian(curve)
        basepoint = _curve.vertex_point(curve, 0)
        points = _curve.lattice_points(curve, step)
        vectors = {p: _jacobian.iota(curve, basepoint, p) for p in points}

        seen = dict()
        for divisor in _itertools.combinations_with_replacement(points, curve.g):
            divisor = _jacobian.Divisor(divisor)
            if not _jacobian.in_Dg(curve, divisor):
                continue
            z = [sum(column) for column in zip(*(vectors[p] for p in divisor))]
            image = jac.reduce(z, 'K')
            if image in seen:
                raise _Failure({'C': curve.C.to_json()['C'], 'divisors': [seen[image].to_json(),
                                divisor.to_json()], 'image': image.to_json()}, conjecture=True)
            seen[image] = divisor

        result = {'points': len(points), 'divisors': len(seen)}
        if curve.g == 1:
            # Integer points of a genus 1 curve against the integer classes of J
            integer = [p for p in points if p.offset.denominator == 1]
            images = {jac.reduce(vectors[p], 'K') for p in integer}
            result['bijective'] = (len(images) == len(integer) == jac.lattice_point_count('K'))
            if not result['bijective']:
                raise _Failure({'C': curve.C.to_json()['C'], 'integer_points': len(integer),
                                'images': len(images)}, result, conjecture=True)
        _log('eta-injectivity-on-Dg: C = {}: {}'.format(curve.C, result), logfile)
        details[str(curve.C)] = result

    details['summary'] = 'supported at these parameters'
    return details

def _linearization(params, logfile):
    details = dict()
    for curve in _curves(params, genera=_eigmap.SUPPORTED_GENERA):
        jac = _jacobian.jacobian(curve)
        images = dict(_pi_images(curve, logfile))

        delta = None
        for state, point in images.items():
            after = images[_toda.evolve(state)]
            difference = jac.reduce([b - a for a, b in zip(point.z, after.z)], 'K')
            if delta is None:
                delta = difference
            elif difference != delta:
                raise _Failure({'C': curve.C.to_json()['C'], 'state': state.to_json(),
                                'delta': delta.to_json(), 'difference': difference.to_json()},
                               conjecture=True)

        v = jac.translation_vector('v', 'K')
        matches = list()
        if jac.jac_equal(delta.z, v, 'K'):
            matches.append('K')
        if jac.jac_equal(jac.to_basis(delta, 'Lambda').z, v, 'Lambda'):
            matches.append('Lambda')

        result = {'delta': list(delta.z), 'v': list(v), 'v_matches': matches}
        _log('linearization: C = {}: {}'.format(curve.C, result), logfile)
        details[str(curve.C)] = result

    details['summary'] = 'supported at these parameters'
    return details

def _read(b, t=0):
    "beta(b), failing the check when b has no generic reading"
    try:
        return _bbs.beta(b)
    except ValueError as error:
        raise _Failure({'bbs': str(b), 't': t, 'error': str(error)}) from None

def _diagram(params, logfile):
    steps = params['steps']
    details = dict()
    for curve in _curves(params):
        states = _bbs_of(curve)
        _log('bbs-toda-diagram: {} box-ball states, {} steps'.format(len(states), steps), logfile)
        for b in states:
            toda = _read(b)
            for t, bt in enumerate(_bbs.orbit(b, steps)):
                read = _read(bt, t)
                if not any(_toda.shift(toda, i) == read for i in range(curve.g + 1)):
                    raise _Failure({'bbs': str(b), 't': t, 'beta': str(read), 'toda': str(toda)})
                toda = _toda.evolve(toda)

        # Shift orbits against nu translations, informational
        nu = None
        if curve.g in _eigmap.SUPPORTED_GENERA:
            nu = _shift_nu(curve)
        details[str(curve.C)] = {'bbs': len(states), 'shift_is_nu': nu}

    return details

def _shift_nu(curve):
    "Whether pi(shift(s)) and nu(pi(s)) agree in J'(Gamma) for every integer state"
    jac = _jacobian.jacobian(curve)
    try:
        for state in _isolevel(curve):
            shifted = jac.to_Jprime(_eigmap.pi(curve, _toda.shift(state)))
            translated = jac.to_Jprime(jac.translate(_eigmap.pi(curve, state), 'nu'))
            if shifted != translated:
                return False
    except ValueError:
        return None
    return True

def _t_cover(params, logfile):
    details = dict()
    for curve in _curves(params):
        counts = [0] * (curve.g + 1)
        for state in _isolevel(curve):
            try:
                piece = _toda.t0_membership(state)
            except ValueError as error:
                raise _Failure({'C': curve.C.to_json()['C'], 'state': state.to_json(),
                                'error': str(error)}) from None

            # T^0 states have positive Q_2..Q_g and W_1..W_g
            if piece == 0 and not _toda.lemma43(state):
                raise _Failure({'C': curve.C.to_json()['C'], 'state': state.to_json()},
                               {'reason': 'T^0 state with a zero Q_i or W_j'})
            counts[piece] += 1
        details[str(curve.C)] = counts

    return details

def _det_identities(params, logfile):
    rng = _rng(params)
    trials = params.get('det_trials', 100)
    count = 0
    for g in _genera(params, (1, 2, 3, 4, 5, 6)):
        _log('det-identities: {} random curves of genus {}'.format(trials, g), logfile)
        for _ in range(trials):
            C = _toda.random_generic(g, rng)
            curve = _curve.build(C)
            jac = _jacobian.Jacobian(curve)
            product = C.c(-1)
            for p in curve.ps[:g - 1]:
                product *= p
            witness = {'C': C.to_json()['C'], 'detK': jac.detK, 'detLambda': jac.detLambda,
                       'detA': jac.detA, 'expected': (g + 1) * product}

            if not jac.detLambda == jac.detK == (g + 1) * jac.detA == (g + 1) * product:
                raise _Failure(witness)
            if jac.lattice_point_count('Lambda') != (g + 1) * jac.lattice_point_count('A'):
                raise _Failure(witness)

            for i, j in _itertools.product(range(g), repeat=2):
                if jac.K[i][j] != jac.K[j][i]:
                    raise _Failure(dict(witness, asymmetric=[i, j]))
                total = sum(jac.K[k][l] for k in range(i + 1) for l in range(j + 1))
                if jac.Lambda[i][j] != total:
                    raise _Failure(dict(witness, basis_change=[i, j]))

            if not jac.is_positive_definite('K'):
                raise _Failure(dict(witness, reason='K is not positive definite'))
            count += 1

    return {'curves': count}

def _smoothness(params, logfile):
    rng = _rng(params)
    curves = _curves(params)
    if params.get('C') is None:
        curves += [_curve.build(_toda.random_generic(g, rng)) for g in range(1, 7) for _ in range(10)]

    for curve in curves:
        for vertex, vectors, ok in _curve.balance(curve):
            if not ok:
                raise _Failure({'C': curve.C.to_json()['C'], 'vertex': vertex,
                                'vectors': [list(v) for v in vectors]})

    return {'curves': len(curves)}

def _bbs_order(params, logfile):
    rng = _rng(params)
    orders = int(params.get('orders', DEFAULT_ORDERS))
    count = 0
    for curve in _curves(params):
        states = _bbs_of(curve)
        _log('bbs-order: {} box-ball states, {} orders each'.format(len(states), orders), logfile)
        for b in states:
            expected = _bbs.bbs_evolve(b)
            for _ in range(orders):
                order = list(range(b.nballs))
                rng.shuffle(order)
                if _bbs.bbs_evolve(b, order) != expected:
                    raise _Failure({'bbs': str(b), 'order': order, 'expected': str(expected)})
            count += 1

    return {'states': count, 'runs': count * orders}

def _path_independence(params, logfile):
    rng = _rng(params)
    curves = _curves(params)
    for trial in range(params['trials']):
        curve = curves[trial % len(curves)]
        jac = _jacobian.jacobian(curve)
        S, P = _curve.random_point(curve, rng), _curve.random_point(curve, rng)
        path, windings = _jacobian.random_path(curve, S, P, rng)
        z = [_jacobian.pairing(curve, path, k) for k in range(1, curve.g + 1)]
        canonical = _jacobian.iota(curve, S, P)
        shift = [sum(windings[k] * jac.K[k][i] for k in range(curve.g)) for i in range(curve.g)]

        if [a - b for a, b in zip(z, canonical)] != shift or not jac.jac_equal(z, canonical, 'K'):
            raise _Failure({'C': curve.C.to_json()['C'], 'S': S.to_json(), 'P': P.to_json(),
                            'windings': windings, 'random': z, 'canonical': list(canonical)})

    return {'paths': params['trials']}

def _psi_exchange(params, logfile):
    details = dict()
    for curve in _curves(params, genera=(3,)):
        free = 0
        for state in _isolevel(curve):
            alternatives = _eigmap.psi_alternatives(curve, state)
            if len(alternatives) > 1:
                free += 1
            divisors = set(alternatives.values())
            if len(divisors) != 1:
                raise _Failure({'C': curve.C.to_json()['C'], 'state': state.to_json(),
                                'alternatives': {str(s): None if d is None else d.to_json()
                                                 for s, d in alternatives.items()}},
                               conjecture=True)
        details[str(curve.C)] = {'states_with_free_choice': free}

    details['summary'] = 'supported at these parameters'
    return details

def _lemma_ordering(params, logfile):
    details = dict()
    for curve in _curves(params, genera=(2,)):
        lam = curve.lambdas
        states = _isolevel(curve)
        for state in states:
            (Q1, Q2, Q3), (W1, W2, W3) = state.Q, state.W
            ((X1, _), (X2, _)), _ = _eigmap.psi_points(curve, state)
            a, b = min(Q2, W1), min(Q3, W2)
            if not (0 <= X1 <= lam[0] <= X2 <= lam[1] and X1 == min(a, b) and X2 >= max(a, b)):
                raise _Failure({'C': curve.C.to_json()['C'], 'state': state.to_json(),
                                'X': [X1, X2], 'lambda': list(lam)})
        details[str(curve.C)] = len(states)

    return details

def _curve_identities(params, logfile):
    rng = _rng(params)
    curves = _curves(params)
    if params.get('C') is None:
        curves += [_curve.build(_toda.random_generic(g, rng)) for g in range(1, 7) for _ in range(10)]

    for curve in curves:
        g, C = curve.g, curve.C
        witness = {'C': C.to_json()['C']}
        for k in range(1, g + 1):
            if curve.height(curve.lambdas[k - 1]) != (g - k) * curve.lambdas[k - 1] + C.c(g - k):
                raise _Failure(dict(witness, k=k, reason='height at lambda_k'))

        jac = _jacobian.jacobian(curve)
        lam, p = curve.lambdas, curve.ps
        if jac.K[0][0] != C.c(-1) + p[0] + 2 * lam[0]:
            raise _Failure(dict(witness, reason='Q(alpha_1, alpha_1)'))
        if g > 1 and jac.K[0][1] != -p[0]:
            raise _Failure(dict(witness, reason='Q(alpha_1, alpha_2)'))
        if any(jac.K[0][i] != 0 for i in range(2, g)):
            raise _Failure(dict(witness, reason='Q(alpha_1, alpha_i), i > 2'))

        # Points differing by nu agree in J'
        z = jac.reduce([_troptools.Rational(rng.randint(0, 50), rng.randint(1, 6)) for _ in range(g)],
                       'Lambda')
        if jac.to_Jprime(z) != jac.to_Jprime(jac.translate(z, 'nu')):
            raise _Failure(dict(witness, z=z.to_json(), reason='nu is not trivial on J\''))

    return {'curves': len(curves)}

def _beta_rho(params, logfile):
    details = dict()
    for curve in _curves(params):
        states = _bbs_of(curve)
        for b in states:
            toda = _bbs.beta(b)
            if _bbs.rho(toda) != b:
                raise _Failure({'bbs': str(b), 'beta': str(toda), 'rho': str(_bbs.rho(toda))})

        t0 = [s for s in _isolevel(curve) if _toda.in_T0(s)]
        for state in t0:
            if _bbs.beta(_bbs.rho(state)) != state:
                raise _Failure({'state': state.to_json(), 'rho': str(_bbs.rho(state))})
        details[str(curve.C)] = {'bbs': len(states), 'T0': len(t0)}

    return details

# name: (grade, function, description)
CHECKS = {
    'conservation': ('proposition', _conservation, 'conserved vector is invariant under evolve'),
    'psi-roundtrip': ('proposition', _psi_roundtrip, 'psi_inverse . psi is the identity, g <= 2'),
    'psi-image-in-Dg': ('proposition', _psi_image, 'psi lands on the curve and in D^g'),
    'counting': ('proposition', _counting, '|T_C integer| = det Lambda = (g+1) det A = (g+1) |B|'),
    'pi-injectivity': ('conjecture', _pi_injectivity, 'pi is a bijection onto J_Z'),
    'eta-injectivity-on-Dg': ('conjecture', _eta_injectivity, 'eta is injective on D^g'),
    'linearization': ('conjecture', _linearization, 'pi . evolve = pi + constant'),
    'bbs-toda-diagram': ('proposition', _diagram, 'beta . bbs_evolve = evolve . beta up to shift'),
    't-cover': ('proposition', _t_cover, 'isolevel set is the disjoint union of the T^i'),
    'det-identities': ('proposition', _det_identities, 'det Lambda = det K = (g+1) det A'),
    'smoothness': ('proposition', _smoothness, 'balance and unimodularity at every vertex'),
    'bbs-order': ('proposition', _bbs_order, 'bbs_evolve does not depend on ball order'),
    'path-independence': ('proposition', _path_independence, 'paths S -> P differ by K-periods'),
    'psi-exchange': ('conjecture', _psi_exchange, 'free choices of s_i give the same divisor'),
    'lemma-ordering': ('proposition', _lemma_ordering, '0 <= X_1 <= lambda_1 <= X_2 <= lambda_2'),
    'curve-identities': ('proposition', _curve_identities, 'vertex heights and cycle pairings'),
    'beta-rho': ('proposition', _beta_rho, 'beta and rho are mutually inverse'),
}

def normalize_params(params=None):
    "A complete, JSON-ready parameter dict with defaults filled in"
    params = dict() if params is None else dict(params)
    params.setdefault('seed', DEFAULT_SEED)
    params.setdefault('trials', DEFAULT_TRIALS)
    params.setdefault('steps', DEFAULT_STEPS)
    params.setdefault('orders', DEFAULT_ORDERS)
    if params.get('C') is not None:
        params['C'] = [_troptools.format_rational(c) for c in _toda.as_conserved(params['C']).C]
    return {k: v for k, v in params.items() if v is not None}

def run_check(name, params=None, logfile=None):
    """Runs one registered check.

    Inputs:
        name: Name of a check in CHECKS
        params: [None] dict with optional keys C, g, seed [0], trials [1000], steps [20],
                orders [100] (random ball orders per box-ball state)
        logfile: [None] File to print progress to

    Output: CheckReport
    """
    if name not in CHECKS:
        raise KeyError('Unknown check "{}". Known checks: {}'.format(name, ', '.join(CHECKS)))

    grade, function, _ = CHECKS[name]
    params = normalize_params(params)
    _log('Running check {}'.format(name), logfile)

    begintime = _time.time()
    try:
        details = function(params, logfile)
        verdict, witness = 'pass', None
    except _Failure as failure:
        details = dict() if failure.details is None else failure.details
        witness = failure.witness
        conjecture = grade == 'conjecture' or failure.conjecture
        verdict = 'counterexample' if conjecture else 'fail'
    runtime = _time.time() - begintime

    return CheckReport(name, grade, params, verdict, _troptools.jsonable(witness),
                       _troptools.jsonable(details), runtime)

def run_checks(names, params=None, subprocesses=1, logfile=None):
    """Runs several checks, in a process pool when subprocesses > 1.

    Output: list of CheckReport in the order of names
    """
    names = list(CHECKS) if names == 'all' else list(names)
    for name in names:
        if name not in CHECKS:
            raise KeyError('Unknown check "{}". Known checks: {}'.format(name, ', '.join(CHECKS)))

    if subprocesses == 1 or len(names) == 1:
        return [run_check(name, params, logfile) for name in names]

    if logfile is not None:
        def _callback(report):
            print('\t\tFinished {}: {}'.format(report.name, report.verdict), file=logfile)
            logfile.flush()
    else:
        def _callback(report):
            pass

    processresults = list()
    with _multiprocessing.Pool(processes=min(subprocesses, len(names))) as pool:
        for name in names:
            processresults.append(pool.apply_async(run_check, (name, params), callback=_callback))

        pool.close()
        pool.join()

    for process in processresults:
        if not process.successful():
            print('troplab aborted due to error in subprocess. See stacktrace for source of exception.',
                  file=_sys.stderr)
            process.get()

    return [process.get() for process in processresults]

def exit_code(reports):
    "0 unless a proposition-grade check failed"
    return 1 if any(report.breaking for report in reports) else 0
