__doc__ = """The periodic box-ball system and its correspondence with the Toda lattice.

A state is a cyclic row of L boxes, each empty (0) or holding one ball (1),
with 2 * (number of balls) < L. One time step moves every ball once to the
leftmost empty box to its right, ignoring boxes that balls moved to or from
during the same step.

beta reads a box-ball state as a Toda state in T^0 by run lengths, rho writes
it back. The conserved partition lambda of a box-ball state is read off the
conserved vector of beta(b).

Usage:
>>> b = BBSState('0100110')
>>> print(bbs_evolve(b))
1010001
>>> print(beta(b))
(0,1,2,1,2,1)
>>> len(enumerate_bbs(7, (1, 2)))
21
"""

import numpy as _np
import troplab.troptools as _troptools
import troplab.toda as _toda

class BBSState:
    """A periodic box-ball state. Instantiate with a 0/1 string or a sequence of 0/1:
        BBSState('0100110')
        BBSState([0, 1, 0, 0, 1, 1, 0])
    """
    __slots__ = ['cells']

    def __init__(self, cells):
        if isinstance(cells, str):
            parsed = list()
            for position, char in enumerate(cells):
                if char not in '01':
                    raise ValueError('Invalid character "{}" at position {} of BBS state {}'.format(
                                     char, position, cells))
                parsed.append(int(char))
            cells = parsed
        else:
            cells = [int(c) for c in cells]
            for position, cell in enumerate(cells):
                if cell not in (0, 1):
                    raise ValueError('Invalid cell {} at position {} of BBS state'.format(cell, position))

        if len(cells) == 0:
            raise ValueError('BBS state must have at least one box')
        if 2 * sum(cells) >= len(cells):
            raise ValueError('BBS state needs 2*(number of balls) < L, got {} balls in {} boxes'.format(
                             sum(cells), len(cells)))

        self.cells = tuple(cells)

    @classmethod
    def from_json(cls, document):
        if 'cells' not in document:
            raise ValueError('BBS JSON must have key "cells"')
        state = cls(document['cells'])
        if 'L' in document and int(document['L']) != state.L:
            raise ValueError('BBS JSON says L={} but has {} boxes'.format(document['L'], state.L))
        return state

    def to_json(self):
        return {'L': self.L, 'cells': str(self)}

    @property
    def L(self):
        return len(self.cells)

    @property
    def nballs(self):
        return sum(self.cells)

    def balls(self):
        "Positions of the balls, left to right"
        return [i for i, c in enumerate(self.cells) if c == 1]

    def __eq__(self, other):
        if not isinstance(other, BBSState):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __len__(self):
        return len(self.cells)

    def __repr__(self):
        return 'BBSState({})'.format(str(self))

    def __str__(self):
        return ''.join(map(str, self.cells))

def bbs_evolve(state, order=None):
    """One time step of the periodic box-ball system.

    Inputs:
        state: BBSState
        order: [None] Order in which to move the balls, as a permutation of
               range(number of balls) indexing the balls left to right.
               None moves them left to right.

    Output: BBSState
    """
    cells = list(state.cells)
    L = len(cells)
    positions = state.balls()

    if order is None:
        order = range(len(positions))
    elif sorted(order) != list(range(len(positions))):
        raise ValueError('Ball order must be a permutation of range({})'.format(len(positions)))

    vacated = set()
    for index in order:
        position = positions[index]
        target = (position + 1) % L
        while cells[target] == 1 or target in vacated:
            target = (target + 1) % L
        cells[position] = 0
        vacated.add(position)
        cells[target] = 1

    return BBSState(cells)

def orbit(state, steps):
    "List of the first steps+1 states of the orbit of state"
    if steps < 0:
        raise ValueError('Number of steps must be nonnegative, not {}'.format(steps))

    states = [state]
    for _ in range(steps):
        states.append(bbs_evolve(states[-1]))
    return states

def _runs(cells):
    "Maximal runs of the linear (not cyclic) row as (value, length) pairs"
    runs = list()
    for cell in cells:
        if runs and runs[-1][0] == cell:
            runs[-1][1] += 1
        else:
            runs.append([cell, 1])
    return [(value, length) for value, length in runs]

def beta(state):
    """Reads a box-ball state as a Toda state in T^0.

    If the leftmost box is occupied, Q_1 is the first run of 1's, otherwise
    Q_1 = 0. W_i is the i-th run of 0's and the remaining Q_i are the following
    runs of 1's. Runs that do not exist are 0. The genus is the smallest one for
    which this reading has a generic conserved vector with C_g = 0.
    """
    runs = _runs(state.cells)
    ones = [length for value, length in runs if value == 1]
    zeros = [length for value, length in runs if value == 0]

    if len(ones) == 0:
        raise ValueError('BBS state does not parse into T^0: {}'.format(state))

    qs = ones if state.cells[0] == 1 else [0] + ones
    ws = zeros

    for n in range(max(2, len(qs), len(ws)), state.nballs + 2):
        Q = qs + [0] * (n - len(qs))
        W = ws + [0] * (n - len(ws))
        candidate = _toda.TodaState(Q, W)
        if not candidate.in_phase_space() or not _toda.in_T0(candidate):
            continue

        C = _toda.conserved(candidate)
        if C.is_normalized() and C.is_generic():
            return candidate

    raise ValueError('BBS state does not parse into T^0: {}'.format(state))

def rho(state):
    """Writes an integer Toda state of T^0 as the box-ball row
    1^Q_1 0^W_1 1^Q_2 0^W_2 ... 1^Q_{g+1} 0^W_{g+1}, where Q_1 = 0 or W_{g+1} = 0."""
    if not isinstance(state, _toda.TodaState):
        raise TypeError('Expected a TodaState, not {}'.format(type(state).__name__))
    if not state.is_integral():
        raise ValueError('rho needs an integer state, not {}'.format(state))
    if not _toda.in_T0(state):
        raise ValueError('state is not in T^0: {}'.format(state))
    _toda.conserved(state).check_generic()

    cells = list()
    for q, w in zip(state.Q, state.W):
        cells.extend([1] * int(q))
        cells.extend([0] * int(w))

    return BBSState(cells)

def invariants_of(state):
    """Conserved data of a box-ball state.

    Output: (g, lambda, C) with C = conserved(beta(state)) and lambda its partition"""
    C = _toda.conserved(beta(state))
    return C.g, C.lambdas(), C

def _bbs_chunk(rows, lambdas):
    "Strings among the 0/1 rows whose partition is lambdas, and the rows beta cannot read"
    found, failed = list(), list()
    for row in rows.tolist():
        state = BBSState(row)
        try:
            _, lam, _ = invariants_of(state)
        except ValueError:
            failed.append(str(state))
            continue
        if lam == lambdas:
            found.append(str(state))

    return found, failed

def enumerate_bbs(L, lambdas, subprocesses=1, logfile=None, failures=None):
    """All box-ball states of L boxes whose conserved partition is lambdas.

    Inputs:
        L: Number of boxes
        lambdas: Strictly increasing positive partition with 2*sum(lambdas) < L
        subprocesses: Number of worker processes [1]
        logfile: [None] File to print progress to
        failures: [None] If a list, states that beta cannot read are appended to it

    Output: List of BBSState in lexicographic order of their strings
    """
    lambdas = _troptools.vector(lambdas)
    if len(lambdas) == 0:
        raise ValueError('Partition cannot be empty')
    if any(a >= b for a, b in zip(lambdas, lambdas[1:])) or lambdas[0] <= 0:
        raise ValueError('Partition must be strictly increasing and positive, not ({})'.format(
                         ','.join(map(_troptools.format_rational, lambdas))))
    if not _troptools.is_integral(lambdas):
        raise ValueError('Partition must be integral')
    if 2 * sum(lambdas) >= L:
        raise ValueError('Need 2*sum(lambda) < L, got {} and L={}'.format(sum(lambdas), L))

    nballs = int(sum(lambdas))
    codes = _np.arange(2**L, dtype=_np.int64)
    rows = (codes[:, None] >> _np.arange(L - 1, -1, -1, dtype=_np.int64)) & 1
    rows = rows[rows.sum(axis=1) == nballs]

    if logfile is not None:
        print('\tScanning {} box-ball rows with {} balls'.format(len(rows), nballs), file=logfile)
        logfile.flush()

    nchunks = max(1, min(len(rows), 4 * subprocesses))
    chunks = _np.array_split(rows, nchunks)
    if subprocesses == 1:
        results = [_bbs_chunk(chunk, lambdas) for chunk in chunks]
    else:
        results = _toda._pool_map(_bbs_chunk, [(chunk, lambdas) for chunk in chunks],
                                  subprocesses, logfile)

    states = list()
    for found, failed in results:
        states.extend(BBSState(s) for s in found)
        if failures is not None:
            failures.extend(BBSState(s) for s in failed)

    if logfile is not None:
        print('\tFound {} box-ball states'.format(len(states)), file=logfile)
        logfile.flush()

    return states
