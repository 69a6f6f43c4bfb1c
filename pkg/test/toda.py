import sys
import os
import random

parentdir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(parentdir)
import troplab

TodaState = troplab.toda.TodaState
ConservedVector = troplab.toda.ConservedVector

s = TodaState((0, 1, 2), (1, 2, 1))
assert TodaState.from_vector((0, 1, 2, 1, 2, 1)) == s
assert str(s) == '(0,1,2,1,2,1)'
assert repr(s) == 'TodaState(Q=(0,1,2), W=(1,2,1))'

# Evolution matches the hand computed orbit
orbit = troplab.toda.orbit(s, 5)
expected = [(0, 1, 2, 1, 2, 1), (1, 1, 1, 1, 3, 0), (1, 2, 0, 1, 2, 1),
            (1, 2, 0, 2, 0, 2), (1, 0, 2, 3, 0, 1), (2, 0, 1, 1, 2, 1)]
assert [state.as_tuple() for state in orbit] == expected

assert troplab.toda.evolve(TodaState((0, 3), (2, 3))) == TodaState((0, 3), (5, 0))

try:
    troplab.toda.evolve(TodaState((3, 1), (1, 1)))
except ValueError as error:
    assert error.args == ('not in 𝒯: (3,1,1,1)',)
else:
    raise AssertionError('Should have failed evolving a state outside the phase space')

try:
    TodaState((0, 1), (1, 2, 3))
except ValueError as error:
    assert error.args == ('Q and W must have same length, not 2 and 3',)
else:
    raise AssertionError('Should have failed on vectors of different lengths')

# Conserved quantities
C = troplab.toda.conserved(s)
assert C == ConservedVector((7, 3, 1, 0))
assert str(C) == '(7,3,1,0)'
assert C.c(-1) == 7 and C.c(2) == 0
assert all(troplab.toda.conserved(state) == C for state in orbit)
assert troplab.toda.explicit_conserved(s) == {2: 0, 1: 1, 0: 3, -1: 7}
assert troplab.toda.explicit_conserved_g2(s) == C

# Conserved quantities of rational states are conserved too
rng = random.Random(0)
for _ in range(100):
    state = troplab.toda.random_state(2, rng)
    assert troplab.toda.conserved(troplab.toda.evolve(state)) == troplab.toda.conserved(state)

# Partitions and genericity
assert C.lambdas() == (1, 2)
assert C.ps() == (3, 1)
assert troplab.toda.partition((8, 3, 0)) == ((3,), (2,))
assert troplab.toda.partition((13, 6, 3, 1, 0)) == ((1, 2, 3), (7, 3, 1))
assert troplab.toda.from_partition(7, (1, 2)) == C
assert troplab.toda.from_partition(20, (2, 5)) == ConservedVector((20, 7, 2, 0))

try:
    ConservedVector((6, 3, 0)).check_generic()
except ValueError as error:
    assert error.args == ('C is not generic: C_-1 > 2*C_0 violated',)
else:
    raise AssertionError('Should have failed on C_-1 = 2*C_0')

try:
    ConservedVector((7, 3, 1, 1)).check_generic()
except ValueError as error:
    assert error.args == ('C is not generic: C_1 > 2*C_2 violated',)
else:
    raise AssertionError('Should have failed on C_1 = C_2')

for _ in range(20):
    assert troplab.toda.random_generic(3, rng).is_generic()

# Cyclic shift and the pieces T^i of the isolevel set
assert troplab.toda.shift(s) == TodaState((1, 2, 0), (2, 1, 1))
assert troplab.toda.shift(s, 3) == s
assert troplab.toda.shift(troplab.toda.shift(s), -1) == s
assert troplab.toda.in_T0(s)
assert troplab.toda.lemma43(s)
assert troplab.toda.t0_membership(s) == 0
assert troplab.toda.t0_membership(TodaState((1, 2, 0), (2, 1, 1))) == 1

# Isolevel sets have det Lambda integer points
states = troplab.toda.enumerate_isolevel((8, 3, 0))
assert len(states) == 16
assert TodaState((0, 3), (2, 3)) in states

states = troplab.toda.enumerate_isolevel((7, 3, 1, 0))
assert len(states) == 63
assert states == sorted(states)
assert s in states
assert all(troplab.toda.conserved(state) == C for state in states)
assert sum(troplab.toda.in_T0(state) for state in states) == 21

assert troplab.toda.enumerate_isolevel((7, 3, 1, 0), subprocesses=2) == states
assert len(troplab.toda.enumerate_isolevel((13, 6, 3, 1, 0))) == 1092

# Every T^0 state has positive Q_2..Q_g and W_1..W_g
for C, size in [((8, 3, 0), 8), ((7, 3, 1, 0), 21), ((13, 6, 3, 1, 0), 273)]:
    T0 = [state for state in troplab.toda.enumerate_isolevel(C) if troplab.toda.in_T0(state)]
    assert len(T0) == size
    assert all(troplab.toda.lemma43(state) for state in T0)

assert not troplab.toda.lemma43(TodaState((0, 0, 2), (1, 2, 1)))

try:
    troplab.toda.enumerate_isolevel(('15/2', 3, 1, 0))
except ValueError:
    pass
else:
    raise AssertionError('Should have refused a rational C for enumeration')

# Random rational states on an isolevel set
for _ in range(20):
    state = troplab.toda.random_isolevel_state((7, 3, 1, 0), rng)
    assert troplab.toda.conserved(state) == C
