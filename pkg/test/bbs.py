import sys
import os

parentdir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(parentdir)
import troplab

BBSState = troplab.bbs.BBSState
TodaState = troplab.toda.TodaState

b = BBSState('0100110')
assert BBSState([0, 1, 0, 0, 1, 1, 0]) == b
assert b.L == 7
assert b.nballs == 3
assert b.balls() == [1, 4, 5]

# A single soliton travels its own length per step
expected = ['00111000', '00000111', '11100000', '00011100', '10000011', '01110000']
assert [str(state) for state in troplab.bbs.orbit(BBSState('00111000'), 5)] == expected

# Two solitons of lengths 1 and 2 in 7 boxes
orbit = troplab.bbs.orbit(b, 5)
expected = ['0100110', '1010001', '0101100', '0010011', '1101000', '0010110']
assert [str(state) for state in orbit] == expected

# beta reads every row of the orbit
expected = [(0, 1, 2, 1, 2, 1), (1, 1, 1, 1, 3, 0), (0, 1, 2, 1, 1, 2),
            (0, 1, 2, 2, 2, 0), (2, 1, 0, 1, 3, 0), (0, 1, 2, 2, 1, 1)]
assert [troplab.bbs.beta(state).as_tuple() for state in orbit] == expected
assert troplab.bbs.beta(BBSState('00111000')) == TodaState((0, 3), (2, 3))
assert troplab.bbs.beta(BBSState('11000001')) == TodaState((2, 1), (5, 0))

# rho writes a T^0 state back
for state in orbit:
    assert troplab.bbs.rho(troplab.bbs.beta(state)) == state
assert troplab.bbs.rho(TodaState((0, 1, 2), (1, 2, 1))) == b

try:
    troplab.bbs.rho(TodaState((1, 2, 0), (2, 1, 1)))
except ValueError as error:
    assert error.args == ('state is not in T^0: (1,2,0,2,1,1)',)
else:
    raise AssertionError('Should have refused a state outside T^0')

# Conserved data of the box-ball state
g, lambdas, C = troplab.bbs.invariants_of(b)
assert g == 2
assert lambdas == (1, 2)
assert C == troplab.toda.ConservedVector((7, 3, 1, 0))

# The order in which balls move does not matter
assert troplab.bbs.bbs_evolve(b, order=[2, 1, 0]) == BBSState('1010001')
assert troplab.bbs.bbs_evolve(b, order=[1, 0, 2]) == BBSState('1010001')

try:
    troplab.bbs.bbs_evolve(b, order=[0, 0, 1])
except ValueError as error:
    assert error.args == ('Ball order must be a permutation of range(3)',)
else:
    raise AssertionError('Should have refused an order that is not a permutation')

# Bad states
try:
    BBSState('0120')
except ValueError as error:
    assert error.args == ('Invalid character "2" at position 2 of BBS state 0120',)
else:
    raise AssertionError('Should have failed on a non 0/1 character')

try:
    BBSState('0110')
except ValueError as error:
    assert error.args == ('BBS state needs 2*(number of balls) < L, got 2 balls in 4 boxes',)
else:
    raise AssertionError('Should have failed on a half full row')

try:
    troplab.bbs.beta(BBSState('0000'))
except ValueError as error:
    assert error.args == ('BBS state does not parse into T^0: 0000',)
else:
    raise AssertionError('Should have failed reading an empty row')

# Counting states by their partition
states = troplab.bbs.enumerate_bbs(8, (3,))
assert len(states) == 8
assert BBSState('00111000') in states

failures = list()
states = troplab.bbs.enumerate_bbs(7, (1, 2), failures=failures)
assert len(states) == 21
assert b in states
# Rows of three separate balls have no generic reading
assert BBSState('1010100') in failures
assert all(state not in failures for state in states)
assert [str(state) for state in states] == sorted(str(state) for state in states)
assert troplab.bbs.enumerate_bbs(7, (1, 2), subprocesses=2) == states

assert len(troplab.bbs.enumerate_bbs(13, (1, 2, 3))) == 273

try:
    troplab.bbs.enumerate_bbs(7, (2, 1))
except ValueError as error:
    assert error.args == ('Partition must be strictly increasing and positive, not (2,1)',)
else:
    raise AssertionError('Should have refused a decreasing partition')

try:
    troplab.bbs.enumerate_bbs(6, (1, 2))
except ValueError as error:
    assert error.args == ('Need 2*sum(lambda) < L, got 3 and L=6',)
else:
    raise AssertionError('Should have refused a partition too large for the row')
