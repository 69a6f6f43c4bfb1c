__doc__ = """Ultra-discrete eigenvector maps from an isolevel set to divisors on its curve.

psi sends a Toda state s with conserved vector C to an effective divisor
P_1 + ... + P_g on the curve of C, for g = 1, 2, 3. psi_inverse undoes it for
g = 1, 2 and pi = eta . psi lands in the tropical Jacobian.

Brackets [a, b, ...] in the formulas below mean min[a, b, ...].

Usage:
>>> curve = troplab.curve.build((7, 3, 1, 0))
>>> D, trace = psi(curve, troplab.toda.TodaState((0, 1, 2), (1, 2, 1)))
>>> D
Divisor((1,2) + (2,3))
>>> psi_inverse(curve, D)
TodaState(Q=(0,1,2), W=(1,2,1))
"""

import itertools as _itertools
import troplab.troptools as _troptools
import troplab.toda as _toda
import troplab.curve as _curve
import troplab.jacobian as _jacobian

SUPPORTED_GENERA = (1, 2, 3)
INVERTIBLE_GENERA = (1, 2)

class BranchTrace:
    """Which formula branches psi took.

    g=2: case is 'a' when [Q_2,W_1] <= [Q_3,W_2] (Y_1 = Y_1^a, Y_2 = Y_2^b)
         and 'b' otherwise; tie is whether X_1 = X_2.
    g=3: s = (s_1, s_2, s_3) and rule is 'ii' when both s_2 and s_3 were fixed
         by their conditions, 'ii-partial' when only one was, 'iii' when the
         choice was free. s1_choices lists every s_1 that rule (i) allowed.
    """
    __slots__ = ['g', 'case', 'tie', 's', 'rule', 's1_choices']

    def __init__(self, g, case=None, tie=False, s=None, rule=None, s1_choices=()):
        self.g = g
        self.case = case
        self.tie = tie
        self.s = s
        self.rule = rule
        self.s1_choices = tuple(s1_choices)

    def to_json(self):
        document = {'g': self.g}
        if self.g == 2:
            document.update({'case': self.case, 'tie': self.tie})
        elif self.g == 3:
            document.update({'s': list(self.s), 'rule': self.rule,
                             's1_choices': list(self.s1_choices)})
        return document

    def __repr__(self):
        if self.g == 2:
            return 'BranchTrace(g=2, case={}, tie={})'.format(self.case, self.tie)
        elif self.g == 3:
            return 'BranchTrace(g=3, s={}, rule={})'.format(self.s, self.rule)
        return 'BranchTrace(g={})'.format(self.g)

def _check_supported(g, genera, what):
    if g not in genera:
        raise NotImplementedError('{} is not available for genus {}'.format(what, g))

def _check_state(curve, state):
    if state.g != curve.g:
        raise ValueError('State has genus {} but the curve has genus {}'.format(state.g, curve.g))
    C = _toda.conserved(state)
    if C != curve.C:
        raise ValueError('State has conserved vector {} but the curve has C = {}'.format(C, curve.C))

def _psi1(C, Q, W):
    X = min(Q[1], W[0])
    Y = Q[0] + W[0]
    return [(X, Y)], BranchTrace(1)

def _psi2(C, Q, W):
    Q1, Q2, Q3 = Q
    W1, W2, W3 = W
    Cm1 = C.c(-1)

    X1 = min(Q2, Q3, W1, W2)
    X2 = min(Q2 + Q3, W1 + W2, Q3 + W1) - X1
    a = min(Q2, W1)
    b = min(Q3, W2)

    if a <= b:
        case = 'a'
        Y1 = Q1 + W1 + a
        Y2 = Cm1 - (Q3 + W3 + a)
    else:
        case = 'b'
        Y1 = Cm1 - (Q3 + W3 + b)
        Y2 = Q1 + W1 + b

    return [(X1, Y1), (X2, Y2)], BranchTrace(2, case=case, tie=(X1 == X2))

def _g3_quantities(C, Q, W):
    Q1, Q2, Q3, Q4 = Q
    W1, W2, W3, W4 = W

    X1 = min(Q2, Q3, Q4, W1, W2, W3)
    X2 = min(Q2 + Q3, Q3 + Q4, Q2 + Q4, W1 + W2, W2 + W3, W1 + W3,
             Q4 + W1, Q4 + W2, Q2 + W3, Q3 + W1) - X1
    X3 = min(Q2 + Q3 + Q4, W1 + Q3 + Q4, W1 + W2 + Q4, W1 + W2 + W3) - (X1 + X2)

    A1, A2, A3 = min(Q2, W1), min(Q3, W2), min(Q4, W3)
    B1 = min(Q3 + Q4, W2 + W3, Q4 + W2)
    B3 = min(Q2 + Q3, W1 + W2, Q3 + W1)
    return (X1, X2, X3), (A1, A2, A3), (B1, B3)

def _g3_ys(C, Q, W, X):
    "Y^1, Y^2, Y^3 at one X"
    Q1, Q2, Q3, Q4 = Q
    W1, W2, W3, W4 = W
    Y1 = Q1 + W1 + min(2 * X, X + min(Q3, Q4, W2, W3), min(Q3 + Q4, W2 + W3, Q4 + W2))
    Y2 = Q1 + W1 + Q2 + W2 + min(Q4, W3, X) - min(Q2, W1, X)
    Y3 = C.c(-1) - (Q4 + W4 + min(2 * X, X + min(Q2, Q3, W1, W2), min(Q2 + Q3, W1 + W2, Q3 + W1)))
    return (Y1, Y2, Y3)

def _s1_choices(A):
    A1, A2, A3 = A
    choices = list()
    if A1 <= min(A2, A3):
        choices.append(1)
    if A2 <= min(A3, A1):
        choices.append(2)
    if A3 <= min(A1, A2):
        choices.append(3)
    return choices

def _s2_holds(s2, X2, A, B):
    A1, A2, A3 = A
    B1, B3 = B
    if s2 == 1:
        return X2 + min(A2, A3) < B1
    elif s2 == 2:
        return A1 < X2 < A3 or A3 < X2 < A1
    else:
        return X2 + min(A1, A2) < B3

def _s3_holds(s3, X3, A, B):
    A1, A2, A3 = A
    B1, B3 = B
    if s3 == 1:
        return X3 + min(A2, A3) > B1
    elif s3 == 2:
        return X3 > max(A1, A3)
    else:
        return X3 + min(A1, A2) > B3

def _g3_completions(s1, X, A, B):
    """The permitted (s_2, s_3) after s_1 and the rule that permits them.
    Completions fixing both indices by their conditions win over those fixing one."""
    tiers = {2: list(), 1: list(), 0: list()}
    for s2, s3 in _itertools.permutations([s for s in (1, 2, 3) if s != s1]):
        held = _s2_holds(s2, X[1], A, B) + _s3_holds(s3, X[2], A, B)
        tiers[held].append((s2, s3))

    for held, rule in ((2, 'ii'), (1, 'ii-partial'), (0, 'iii')):
        if tiers[held]:
            return tiers[held], rule

def _psi3(C, Q, W):
    X, A, B = _g3_quantities(C, Q, W)
    s1_choices = _s1_choices(A)
    s1 = s1_choices[0]
    completions, rule = _g3_completions(s1, X, A, B)
    s = (s1,) + completions[0]

    points = [(X[i], _g3_ys(C, Q, W, X[i])[s[i] - 1]) for i in range(3)]
    return points, BranchTrace(3, s=s, rule=rule, s1_choices=s1_choices)

_PSI = {1: _psi1, 2: _psi2, 3: _psi3}

def psi_points(curve, state):
    """Planar points (X_i, Y_i) of psi before they are located on the curve.

    Output: (list of g (X, Y) pairs ordered by X, BranchTrace)"""
    _check_supported(curve.g, SUPPORTED_GENERA, 'psi')
    _check_state(curve, state)
    return _PSI[curve.g](curve.C, state.Q, state.W)

def psi(curve, state):
    """The eigenvector map of a state on the isolevel set of the curve.

    Inputs:
        curve: CurveModel of genus 1, 2 or 3
        state: TodaState with conserved vector curve.C

    Output: (Divisor, BranchTrace)
    Raises ValueError if a point is off the curve, which can only happen for g=3.
    """
    pairs, trace = psi_points(curve, state)
    return _jacobian.Divisor.from_coords(curve, pairs), trace

def psi_alternatives(curve, state):
    """Every divisor psi may return for a g=3 state when the choice of s_1 or
    of (s_2, s_3) is free, keyed by s. Points off the curve are kept as None."""
    _check_supported(curve.g, (3,), 'psi_alternatives')
    _check_state(curve, state)
    C, Q, W = curve.C, state.Q, state.W
    X, A, B = _g3_quantities(C, Q, W)
    ys = [_g3_ys(C, Q, W, x) for x in X]

    result = dict()
    for s1 in _s1_choices(A):
        completions, _ = _g3_completions(s1, X, A, B)
        for completion in completions:
            s = (s1,) + completion
            pairs = [(X[i], ys[i][s[i] - 1]) for i in range(3)]
            try:
                result[s] = _jacobian.Divisor.from_coords(curve, pairs)
            except ValueError:
                result[s] = None

    return result

def _inverse1(C, points):
    X, Y = points[0].X, points[0].Y
    Cm1, C0 = C.c(-1), C.c(0)
    Q1 = min(C0, Y) - X
    Q2 = X + min(Cm1, C0 + Y) - min(Cm1, C0 + Y, 2 * Y)
    return _toda.TodaState((Q1, Q2), (Y - Q1, Cm1 - Y - Q2))

def _inverse2(C, points):
    (X1, Y1), (X2, Y2) = points[0].coords, points[1].coords
    Cm1, C0 = C.c(-1), C.c(0)
    U1 = min(X1 + Y1, X2 + Y2)
    U2 = min(X1 + Y2, X2 + Y1)
    Ymin = min(Y1, Y2)

    Q1 = min(C0 + X1, U2) - (2 * X1 + X2)
    Q2 = (2 * X1 + min(Cm1 + U1, Y1 + Y2 + U2, C0 + min(X1 + Y1 + Y2, X2 + 2 * Ymin))
          - Ymin - min(Cm1 + 2 * X1, C0 + X1 + U2, 2 * U2))
    Q3 = (X1 + X2 + Ymin + min(Cm1 + U1, C0 + X1 + Y1 + Y2)
          - min(Cm1 + 2 * U1, C0 + X1 + Y1 + Y2 + U1, 2 * X1 + 2 * Y1 + 2 * Y2))
    W1 = Ymin - X1 - Q1
    W2 = Y1 + Y2 + 2 * X1 - 2 * Ymin - Q2
    # Total sum of the state is C_-1
    W3 = Cm1 - (Q1 + Q2 + Q3 + W1 + W2)
    return _toda.TodaState((Q1, Q2, Q3), (W1, W2, W3))

_INVERSE = {1: _inverse1, 2: _inverse2}

def psi_inverse(curve, divisor):
    """The Toda state whose eigenvector divisor is the given one, for g = 1, 2.

    Inputs:
        curve: CurveModel of genus 1 or 2
        divisor: Divisor in D^g of the curve

    Output: TodaState
    """
    _check_supported(curve.g, INVERTIBLE_GENERA, 'psi_inverse')
    if not _jacobian.in_Dg(curve, divisor):
        raise ValueError('divisor is not in D^g: {}'.format(divisor))

    # Divisor points are sorted by (X, Y), so X_1 <= X_2
    return _INVERSE[curve.g](curve.C, list(divisor))

def pi(curve, state, basepoint=None, tag='K'):
    "eta(psi(state)): the image of a state in the tropical Jacobian"
    divisor, _ = psi(curve, state)
    return _jacobian.eta(curve, divisor, basepoint, tag)
