import sys
import os
import json
from fractions import Fraction

import jsonschema

parentdir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(parentdir)
import troplab

tt = troplab.troptools

# Tropical sums report the minimum and every position attaining it
result = tt.trop_min([3, 1, 2])
assert result.value == 1
assert result.argmins == {1}
assert not result.is_tie

result = tt.trop_min([2, 1, 1])
assert result.argmins == {1, 2}
assert result.is_tie

try:
    tt.trop_min([])
except ValueError as error:
    assert error.args == ('empty tropical sum',)
else:
    raise AssertionError('Should have failed on an empty tropical sum')

# Rationals parse and print exactly
assert tt.parse_rational('6/4') == Fraction(3, 2)
assert tt.parse_rational('-1.25') == Fraction(-5, 4)
assert tt.parse_rational(' 7 ') == 7
assert tt.format_rational(Fraction(3, 2)) == '3/2'
assert tt.format_rational(5) == '5'
assert tt.format_decimal(Fraction(-5, 4)) == '-1.25'
assert tt.format_decimal(Fraction(1, 20)) == '0.05'
assert tt.format_decimal(Fraction(12)) == '12'

try:
    tt.format_decimal(Fraction(1, 3))
except ValueError as error:
    assert error.args == ('1/3 has no finite decimal expansion',)
else:
    raise AssertionError('Should have failed on a repeating decimal')

try:
    tt.parse_rational('abc')
except ValueError as error:
    assert error.args == ('Cannot parse "abc" as rational',)
else:
    raise AssertionError('Should have failed parsing a non-number')

# Floats and bools are refused
for bad in (0.5, True):
    try:
        tt.rational(bad)
    except TypeError:
        pass
    else:
        raise AssertionError('Should have refused {!r} as a rational'.format(bad))

assert tt.vector([1, '1/2', Fraction(2, 4)]) == (1, Fraction(1, 2), Fraction(1, 2))
assert tt.is_integral([1, Fraction(4, 2)])
assert not tt.is_integral([1, Fraction(1, 2)])

# The thread cap in the environment bounds the worker count
old = os.environ.pop('TROPLAB_THREADS', None)
assert tt.subprocesses(3) == 3
os.environ['TROPLAB_THREADS'] = '2'
assert tt.subprocesses(8) == 2
assert tt.subprocesses(1) == 1
os.environ['TROPLAB_THREADS'] = 'many'
try:
    tt.subprocesses(4)
except ValueError as error:
    assert error.args == ('TROPLAB_THREADS must be an integer, not "many"',)
else:
    raise AssertionError('Should have failed on a non-integer thread cap')
del os.environ['TROPLAB_THREADS']
if old is not None:
    os.environ['TROPLAB_THREADS'] = old

try:
    tt.subprocesses(0)
except ValueError:
    pass
else:
    raise AssertionError('Should have refused zero subprocesses')

# JSON documents carry rationals as strings and are checked against the schemas
assert tt.jsonable({'a': (Fraction(1, 2), 3)}) == {'a': ['1/2', 3]}

state = troplab.toda.TodaState((0, 3), (2, 3))
assert tt.dumps(state.to_json(), 'toda_state') == '{"g": 1, "Q": ["0", "3"], "W": ["2", "3"]}'
assert json.loads(tt.dumps({'x': Fraction(-7, 3)})) == {'x': '-7/3'}

try:
    tt.validate({'g': 1, 'Q': ['0', 'three'], 'W': ['2', '3']}, 'toda_state')
except jsonschema.ValidationError:
    pass
else:
    raise AssertionError('Should have refused a malformed rational')

try:
    tt.load_schema('nonexistent')
except KeyError:
    pass
else:
    raise AssertionError('Should have failed loading an unknown schema')
