import sys
import os

parentdir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(parentdir)
import troplab

eigmap = troplab.eigmap
TodaState = troplab.toda.TodaState
Divisor = troplab.jacobian.Divisor

# Genus 1
curve1 = troplab.curve.build((8, 3, 0))
state = TodaState((0, 3), (2, 3))
D, trace = eigmap.psi(curve1, state)
assert D == Divisor.from_coords(curve1, [(2, 2)])
assert trace.to_json() == {'g': 1}
assert eigmap.psi_inverse(curve1, D) == state

states1 = troplab.toda.enumerate_isolevel((8, 3, 0))
for state in states1:
    D, _ = eigmap.psi(curve1, state)
    assert eigmap.psi_inverse(curve1, D) == state

# One evolution step moves pi by lambda_1 on a genus 1 curve
jac1 = troplab.jacobian.jacobian(curve1)
images = {state: eigmap.pi(curve1, state) for state in states1}
assert len(set(images.values())) == 16
for state, point in images.items():
    after = images[troplab.toda.evolve(state)]
    assert jac1.reduce((after.z[0] - point.z[0],), 'K').z == (3,)

# Genus 2
curve2 = troplab.curve.build((7, 3, 1, 0))
s = TodaState((0, 1, 2), (1, 2, 1))
D, trace = eigmap.psi(curve2, s)
assert repr(D) == 'Divisor((1,2) + (2,3))'
assert (trace.case, trace.tie) == ('a', False)
assert trace.to_json() == {'g': 2, 'case': 'a', 'tie': False}
assert eigmap.psi_inverse(curve2, D) == s

# X_1 = X_2 puts both points on the vertical edge at lambda_1
t = troplab.toda.evolve(s)
D, trace = eigmap.psi(curve2, t)
assert repr(D) == 'Divisor((1,3) + (1,5))'
assert (trace.case, trace.tie) == ('a', True)
assert eigmap.psi_inverse(curve2, D) == t

points, _ = eigmap.psi_points(curve2, s)
assert points == [(1, 2), (2, 3)]

for state in troplab.toda.enumerate_isolevel((7, 3, 1, 0)):
    D, _ = eigmap.psi(curve2, state)
    assert troplab.jacobian.in_Dg(curve2, D)
    assert eigmap.psi_inverse(curve2, D) == state

assert eigmap.pi(curve2, s, troplab.curve.locate(curve2, 1, 2)) == troplab.jacobian.JacPoint((0, 1), 'K')

try:
    eigmap.psi_inverse(curve2, Divisor.from_coords(curve2, [(1, 3), (1, 4)]))
except ValueError as error:
    assert error.args == ('divisor is not in D^g: Divisor((1,3) + (1,4))',)
else:
    raise AssertionError('Should have refused a divisor outside D^g')

try:
    eigmap.psi(curve2, TodaState((0, 1, 2), (1, 2, 2)))
except ValueError as error:
    assert error.args == ('State has conserved vector (8,3,1,0) but the curve has C = (7,3,1,0)',)
else:
    raise AssertionError('Should have refused a state of another isolevel set')

try:
    eigmap.psi(curve2, TodaState((0, 3), (2, 3)))
except ValueError as error:
    assert error.args == ('State has genus 1 but the curve has genus 2',)
else:
    raise AssertionError('Should have refused a state of another genus')

# Genus 3 records which branch it took
curve3 = troplab.curve.build((13, 6, 3, 1, 0))
for state in troplab.toda.enumerate_isolevel((13, 6, 3, 1, 0))[:50]:
    points, trace = eigmap.psi_points(curve3, state)
    assert len(points) == 3
    assert sorted(trace.s) == [1, 2, 3]
    assert trace.s[0] in trace.s1_choices
    assert trace.rule in ('ii', 'ii-partial', 'iii')
    assert trace.s in eigmap.psi_alternatives(curve3, state)

# The free choice of (s_2, s_3) is not always harmless
state = TodaState((0, 2, 1, 3), (1, 2, 2, 2))
assert troplab.toda.conserved(state) == troplab.toda.ConservedVector((13, 6, 3, 1, 0))
alternatives = eigmap.psi_alternatives(curve3, state)
assert Divisor.from_coords(curve3, [(1, 3), (1, 5), (3, 6)]) in alternatives.values()
assert Divisor.from_coords(curve3, [(1, 3), (1, 6), (3, 6)]) in alternatives.values()

try:
    eigmap.psi_inverse(curve3, Divisor.from_coords(curve3, [(0, 0), (0, 0), (0, 0)]))
except NotImplementedError as error:
    assert error.args == ('psi_inverse is not available for genus 3',)
else:
    raise AssertionError('Should have refused inverting psi in genus 3')

curve4 = troplab.curve.build(troplab.toda.from_partition(21, (1, 2, 3, 4)))
try:
    eigmap.psi(curve4, TodaState((0, 0, 0, 0, 0), (1, 1, 1, 1, 1)))
except NotImplementedError as error:
    assert error.args == ('psi is not available for genus 4',)
else:
    raise AssertionError('Should have refused psi in genus 4')
