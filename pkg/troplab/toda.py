__doc__ = """The (g+1)-periodic ultra-discrete Toda lattice.

A state is (Q_1..Q_{g+1}, W_1..W_{g+1}) with sum(Q) < sum(W). One time step is

    Q'_i = min[W_i, Q_i - X_i]
    W'_i = Q_{i+1} + W_i - Q'_i
    X_i  = min_{k=0..g} sum_{l=1..k} (W_{i-l} - Q_{i-l})

with all indices cyclic. The conserved quantities C = (C_-1, C_0, ..., C_g)
are minima over admissible selections of Q's and W's: C_{g-k} is the minimum
of sum_S Q_i + sum_T W_j over index sets with |S| + |T| = k+1 such that no
j in T equals i or i-1 for an i in S. This rule reproduces the explicitly
known C_g, C_{g-1}, C_0 and C_-1; the middle quantities are a reconstruction
whose invariance under evolve is checked by troplab.verify.

Usage:
>>> s = TodaState((0, 1, 2), (1, 2, 1))
>>> print(evolve(s))
(1,1,1,1,3,0)
>>> conserved(s)
ConservedVector(7, 3, 1, 0)
>>> states = enumerate_isolevel(ConservedVector((7, 3, 1, 0)))
"""

import sys as _sys
import itertools as _itertools
import functools as _functools
import multiprocessing as _multiprocessing
import numpy as _np
import troplab.troptools as _troptools

class TodaState:
    """A point (Q, W) of the Toda phase space. Both vectors hold g+1 Fractions.

    Instantiate with the two vectors
        TodaState((0, 1, 2), (1, 2, 1))
    or with the flat vector (Q, W)
        TodaState.from_vector((0, 1, 2, 1, 2, 1))
    """
    __slots__ = ['g', 'Q', 'W']

    def __init__(self, Q, W):
        Q = _troptools.vector(Q)
        W = _troptools.vector(W)

        if len(Q) != len(W):
            raise ValueError('Q and W must have same length, not {} and {}'.format(len(Q), len(W)))
        if len(Q) < 2:
            raise ValueError('Toda state needs at least 2 sites, not {}'.format(len(Q)))

        self.g = len(Q) - 1
        self.Q = Q
        self.W = W

    @classmethod
    def from_vector(cls, values):
        "Instantiate from (Q_1..Q_{g+1}, W_1..W_{g+1})"
        values = list(values)
        if len(values) % 2 != 0:
            raise ValueError('Toda vector must have even length, not {}'.format(len(values)))
        half = len(values) // 2
        return cls(values[:half], values[half:])

    @classmethod
    def from_json(cls, document):
        "Instantiate from {'Q': [...], 'W': [...]} with an optional genus 'g'"
        if 'Q' not in document or 'W' not in document:
            raise ValueError('Toda JSON must have keys "Q" and "W"')

        state = cls(document['Q'], document['W'])
        if 'g' in document and int(document['g']) != state.g:
            raise ValueError('Toda JSON says g={} but has {} sites'.format(document['g'], state.g + 1))

        return state

    def to_json(self):
        return {'g': self.g, 'Q': list(self.Q), 'W': list(self.W)}

    def as_tuple(self):
        return self.Q + self.W

    def in_phase_space(self):
        return sum(self.Q) < sum(self.W)

    def is_integral(self):
        return _troptools.is_integral(self.as_tuple())

    def scaled(self, factor):
        "The state multiplied by a positive rational"
        factor = _troptools.rational(factor)
        if factor <= 0:
            raise ValueError('Scale factor must be positive, not {}'.format(factor))
        return TodaState([q * factor for q in self.Q], [w * factor for w in self.W])

    def __eq__(self, other):
        if not isinstance(other, TodaState):
            return NotImplemented
        return self.Q == other.Q and self.W == other.W

    def __lt__(self, other):
        return self.as_tuple() < other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return 'TodaState(Q=({}), W=({}))'.format(','.join(map(_troptools.format_rational, self.Q)),
                                                  ','.join(map(_troptools.format_rational, self.W)))

    def __str__(self):
        return '(' + ','.join(map(_troptools.format_rational, self.as_tuple())) + ')'

class ConservedVector:
    """The conserved vector C = (C_-1, C_0, ..., C_g) of a Toda state or a curve.

    Index it with k in -1..g through c(k):
    >>> C = ConservedVector((7, 3, 1, 0))
    >>> C.c(-1), C.c(2)
    (Fraction(7, 1), Fraction(0, 1))
    """
    __slots__ = ['C']

    def __init__(self, values):
        values = _troptools.vector(values)
        if len(values) < 3:
            raise ValueError('Conserved vector needs at least 3 entries, not {}'.format(len(values)))
        self.C = values

    @classmethod
    def from_json(cls, document):
        if 'C' not in document:
            raise ValueError('Conserved vector JSON must have key "C"')
        return cls(document['C'])

    def to_json(self):
        return {'C': list(self.C)}

    @property
    def g(self):
        return len(self.C) - 2

    def c(self, k):
        "C_k for k in -1..g"
        if not -1 <= k <= self.g:
            raise IndexError('C_{} does not exist for genus {}'.format(k, self.g))
        return self.C[k + 1]

    def is_integral(self):
        return _troptools.is_integral(self.C)

    def is_normalized(self):
        return self.c(self.g) == 0

    def violations(self):
        "List of the genericity inequalities that fail, as strings"
        g = self.g
        c = self.c
        failed = list()
        if not c(-1) > 2 * c(0):
            failed.append('C_-1 > 2*C_0')
        for i in range(g - 1):
            if not c(i) + c(i + 2) > 2 * c(i + 1):
                failed.append('C_{} + C_{} > 2*C_{}'.format(i, i + 2, i + 1))
        if not c(g - 1) > 2 * c(g):
            failed.append('C_{} > 2*C_{}'.format(g - 1, g))
        return failed

    def is_generic(self):
        return len(self.violations()) == 0

    def check_generic(self):
        "Raises ValueError naming the first violated inequality, or a nonzero C_g"
        failed = self.violations()
        if failed:
            raise ValueError('C is not generic: {} violated'.format(failed[0]))
        if not self.is_normalized():
            raise ValueError('C is not normalized: C_{} = {} != 0'.format(
                             self.g, _troptools.format_rational(self.c(self.g))))

    def lambdas(self):
        "(lambda_1, ..., lambda_g) with lambda_i = C_{g-i} - C_{g-i+1}"
        g = self.g
        return tuple(self.c(g - i) - self.c(g - i + 1) for i in range(1, g + 1))

    def ps(self):
        "(p_1, ..., p_g) with p_i = C_-1 - 2 sum_j min[lambda_i, lambda_j]"
        lam = self.lambdas()
        return tuple(self.c(-1) - 2 * sum(min(li, lj) for lj in lam) for li in lam)

    def scaled(self, factor):
        factor = _troptools.rational(factor)
        return ConservedVector([c * factor for c in self.C])

    def __eq__(self, other):
        if not isinstance(other, ConservedVector):
            return NotImplemented
        return self.C == other.C

    def __hash__(self):
        return hash(self.C)

    def __repr__(self):
        return 'ConservedVector({})'.format(', '.join(map(_troptools.format_rational, self.C)))

    def __str__(self):
        return '(' + ','.join(map(_troptools.format_rational, self.C)) + ')'

def as_conserved(C):
    "ConservedVector from a ConservedVector or a sequence"
    if isinstance(C, ConservedVector):
        return C
    return ConservedVector(C)

def from_partition(L, lambdas):
    """Conserved vector with C_g = 0 and C_-1 = L whose partition is lambdas.
    Inverse of ConservedVector.lambdas."""
    lambdas = _troptools.vector(lambdas)
    g = len(lambdas)
    values = [_troptools.rational(L)]
    for k in range(g + 1):
        # C_k = lambda_1 + ... + lambda_{g-k}
        values.append(sum(lambdas[:g - k], _troptools.Rational(0)))
    return ConservedVector(values)

def _check_state(state):
    if not isinstance(state, TodaState):
        raise TypeError('Expected a TodaState, not {}'.format(type(state).__name__))

def evolve(state):
    "One step of the ultra-discrete periodic Toda lattice"
    _check_state(state)
    if not state.in_phase_space():
        raise ValueError('not in 𝒯: {}'.format(state))

    Q, W = state.Q, state.W
    n = state.g + 1
    diffs = [w - q for q, w in zip(Q, W)]

    newQ = list()
    for i in range(n):
        partial = x = _troptools.Rational(0)
        for l in range(1, n):
            partial += diffs[(i - l) % n]
            x = min(x, partial)
        newQ.append(min(W[i], Q[i] - x))

    newW = [Q[(i + 1) % n] + W[i] - newQ[i] for i in range(n)]
    return TodaState(newQ, newW)

def orbit(state, steps):
    "List of the first steps+1 states of the orbit of state"
    if steps < 0:
        raise ValueError('Number of steps must be nonnegative, not {}'.format(steps))

    states = [state]
    for _ in range(steps):
        states.append(evolve(states[-1]))
    return states

def shift(state, times=1):
    "Cyclic shift s: (Q_1..Q_{g+1}, W_1..) -> (Q_2..Q_{g+1}, Q_1, W_2.., W_1), applied times times"
    _check_state(state)
    n = state.g + 1
    k = times % n
    return TodaState(state.Q[k:] + state.Q[:k], state.W[k:] + state.W[:k])

@_functools.lru_cache(maxsize=None)
def _selections(g):
    """Admissible selections for the conserved quantities of genus g.

    Returns a list over k = 0..g of lists of (S, T) index tuples (0-based),
    |S| + |T| = k+1, such that C_{g-k} is the minimum over them."""
    n = g + 1
    result = list()
    for k in range(g + 1):
        size = k + 1
        selections = list()
        for nq in range(min(size, n) + 1):
            nw = size - nq
            if nw > n:
                continue
            for S in _itertools.combinations(range(n), nq):
                forbidden = set(S) | {(i - 1) % n for i in S}
                allowed = [j for j in range(n) if j not in forbidden]
                for T in _itertools.combinations(allowed, nw):
                    selections.append((S, T))
        result.append(selections)

    return result

@_functools.lru_cache(maxsize=None)
def _incidence(g):
    """0/1 matrix (2(g+1) x nselections) of all admissible selections and the
    array of their sizes, for vectorized evaluation on integer states."""
    n = g + 1
    columns = list()
    sizes = list()
    for k, selections in enumerate(_selections(g)):
        for S, T in selections:
            column = _np.zeros(2 * n, dtype=_np.int64)
            column[list(S)] = 1
            column[[n + j for j in T]] = 1
            columns.append(column)
            sizes.append(k + 1)

    return _np.array(columns, dtype=_np.int64).T, _np.array(sizes, dtype=_np.int64)

def conserved(state):
    "The conserved vector (C_-1, C_0, ..., C_g) of a state"
    _check_state(state)
    Q, W = state.Q, state.W
    g = state.g

    values = [None] * (g + 2)
    values[0] = sum(Q) + sum(W)
    for k, selections in enumerate(_selections(g)):
        values[g - k + 1] = min(sum(Q[i] for i in S) + sum(W[j] for j in T)
                                for S, T in selections)

    return ConservedVector(values)

def explicit_conserved(state):
    """The conserved quantities with closed formulas valid for every genus.

    Output: dict {g: C_g, g-1: C_{g-1}, 0: C_0, -1: C_-1}"""
    _check_state(state)
    Q, W = state.Q, state.W
    g = state.g
    n = g + 1

    pairs = [Q[i] + Q[j] for i, j in _itertools.combinations(range(n), 2)]
    pairs += [W[i] + W[j] for i, j in _itertools.combinations(range(n), 2)]
    pairs += [Q[i] + W[j] for i in range(n) for j in range(n) if j not in (i, (i - 1) % n)]

    return {g: min(Q + W),
            g - 1: min(pairs),
            0: min(sum(Q), sum(W)),
            -1: sum(Q) + sum(W)}

def explicit_conserved_g2(state):
    "The genus 2 conserved vector written out term by term"
    _check_state(state)
    if state.g != 2:
        raise ValueError('Expected genus 2 state, not genus {}'.format(state.g))

    (Q1, Q2, Q3), (W1, W2, W3) = state.Q, state.W
    C2 = min(Q1, Q2, Q3, W1, W2, W3)
    C1 = min(Q1 + Q2, Q2 + Q3, Q3 + Q1, W1 + W2, W2 + W3, W3 + W1,
             Q1 + W2, Q2 + W3, Q3 + W1)
    C0 = min(Q1 + Q2 + Q3, W1 + W2 + W3)
    Cm1 = Q1 + Q2 + Q3 + W1 + W2 + W3
    return ConservedVector((Cm1, C0, C1, C2))

def in_T0(state):
    "(a) W_1 > 0 and (b) Q_1 = 0 or W_{g+1} = 0"
    return state.W[0] > 0 and (state.Q[0] == 0 or state.W[-1] == 0)

def t0_membership(state):
    """The unique i in 0..g with state in T^i = s^i(T^0), i.e. shift^{-i}(state) in T^0.

    Raises ValueError when no i or several i are found; on a generic normalized
    isolevel set this falsifies the decomposition of the isolevel set into the T^i."""
    _check_state(state)
    conserved(state).check_generic()

    found = [i for i in range(state.g + 1) if in_T0(shift(state, -i))]
    if len(found) != 1:
        raise ValueError('state lies in {} of the T^i: {}'.format(len(found), state))

    return found[0]

def lemma43(state):
    "For a T^0 state: Q_i > 0 for 2 <= i <= g and W_j > 0 for 1 <= j <= g"
    g = state.g
    return all(q > 0 for q in state.Q[1:g]) and all(w > 0 for w in state.W[:g])

def _compositions(total, parts):
    """All compositions of total into parts nonnegative integers as rows of an
    int64 array, in lexicographic order."""
    if parts == 1:
        return _np.array([[total]], dtype=_np.int64)

    bars = _np.array(list(_itertools.combinations(range(total + parts - 1), parts - 1)),
                     dtype=_np.int64).reshape(-1, parts - 1)
    left = _np.full((len(bars), 1), -1, dtype=_np.int64)
    right = _np.full((len(bars), 1), total + parts - 1, dtype=_np.int64)
    return _np.diff(_np.hstack((left, bars, right)), axis=1) - 1

def _isolevel_chunk(qrows, wrows, target, g):
    """Rows (Q, W) with Q from qrows and W from wrows whose conserved vector is target.
    target is the integer tuple (C_-1, ..., C_g)."""
    incidence, sizes = _incidence(g)
    rows = _np.hstack((_np.repeat(qrows, len(wrows), axis=0),
                       _np.tile(wrows, (len(qrows), 1))))
    sums = rows @ incidence
    mask = _np.ones(len(rows), dtype=bool)
    for k in range(g + 1):
        mask &= sums[:, sizes == k + 1].min(axis=1) == target[g - k + 1]

    return rows[mask]

def enumerate_isolevel(C, subprocesses=1, logfile=None):
    """All integer Toda states whose conserved vector is C.

    Since C_g = 0 every entry is nonnegative; sum(Q) = C_0 and sum(W) = C_-1 - C_0
    on the phase space, so the search runs over pairs of compositions.

    Inputs:
        C: ConservedVector or sequence with integer entries, generic, C_g = 0
        subprocesses: Number of worker processes [1]
        logfile: [None] File to print progress to

    Output: List of TodaState in lexicographic order of (Q_1..W_{g+1})
    """
    C = as_conserved(C)
    if not C.is_integral():
        raise ValueError('Isolevel enumeration needs integer C, not {}'.format(C))
    C.check_generic()

    g = C.g
    n = g + 1
    target = tuple(int(c) for c in C.C)
    qsum = target[1]
    wsum = target[0] - target[1]

    qrows = _compositions(qsum, n)
    wrows = _compositions(wsum, n)

    if logfile is not None:
        print('\tEnumerating {} x {} candidates for C = {}'.format(len(qrows), len(wrows), C),
              file=logfile)
        logfile.flush()

    # Bound the rows x selections matrix held per chunk
    nchunks = max(1, min(len(qrows), max(4 * subprocesses, len(qrows) * len(wrows) // 100000)))
    chunks = _np.array_split(qrows, nchunks)

    if subprocesses == 1:
        results = [_isolevel_chunk(chunk, wrows, target, g) for chunk in chunks]
    else:
        results = _pool_map(_isolevel_chunk, [(chunk, wrows, target, g) for chunk in chunks],
                            subprocesses, logfile)

    states = list()
    for rows in results:
        for row in rows.tolist():
            states.append(TodaState(row[:n], row[n:]))

    if logfile is not None:
        print('\tFound {} states'.format(len(states)), file=logfile)
        logfile.flush()

    return states

def _pool_map(function, argumentlist, subprocesses, logfile=None):
    """Runs function over the argument tuples in a process pool and returns the
    results in submission order."""
    if logfile is not None:
        def _callback(result):
            print('\tFinished job', file=logfile)
            logfile.flush()
    else:
        def _callback(result):
            pass

    processresults = list()
    with _multiprocessing.Pool(processes=subprocesses) as pool:
        for arguments in argumentlist:
            processresults.append(pool.apply_async(function, arguments, callback=_callback))

        pool.close()
        pool.join()

    for process in processresults:
        if not process.successful():
            print('troplab aborted due to error in subprocess. See stacktrace for source of exception.',
                  file=_sys.stderr)
            if logfile is not None:
                logfile.flush()
            process.get()

    return [process.get() for process in processresults]

def random_state(g, rng, maxvalue=12, denominators=(1, 2, 3, 4, 6)):
    "Random rational state of the phase space of genus g"
    while True:
        values = [_troptools.Rational(rng.randint(0, maxvalue * d), d)
                  for d in (rng.choice(denominators) for _ in range(2 * (g + 1)))]
        state = TodaState.from_vector(values)
        if state.in_phase_space():
            return state

def random_generic(g, rng, maxlambda=None):
    "Random generic integer conserved vector of genus g with C_g = 0"
    if maxlambda is None:
        maxlambda = 3 * g + 3
    lambdas = sorted(rng.sample(range(1, maxlambda + 1), g))
    L = 2 * sum(lambdas) + rng.randint(1, 2 * g + 4)
    return from_partition(L, lambdas)

def partition(C):
    "(lambda, p) of a generic conserved vector with C_g = 0"
    C = as_conserved(C)
    C.check_generic()
    return C.lambdas(), C.ps()

@_functools.lru_cache(maxsize=32)
def cached_isolevel(C):
    "enumerate_isolevel as a tuple, cached per C"
    return tuple(enumerate_isolevel(C))

def random_isolevel_state(C, rng, scales=(1, 2, 3)):
    """Random rational state with conserved vector C, integer C generic with C_g = 0.

    An integer state of the isolevel set of d*C for a random d in scales is
    divided by d, so the result has denominators dividing d."""
    C = as_conserved(C)
    d = rng.choice(scales)
    states = cached_isolevel(C.scaled(d))
    return rng.choice(states).scaled(_troptools.Rational(1, d))
