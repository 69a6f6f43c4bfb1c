import sys
import os
import random

parentdir = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.append(parentdir)
import troplab

jacobian = troplab.jacobian
locate = troplab.curve.locate

# Period matrices of the genus 2 benchmark
curve = troplab.curve.build((7, 3, 1, 0))
jac = jacobian.Jacobian(curve)
assert jac.K == ((12, -3), (-3, 6))
assert jac.Lambda == ((12, 9), (9, 12))
assert jac.A == ((5, 2), (2, 5))
assert (jac.detK, jac.detLambda, jac.detA) == (63, 63, 21)
assert jac.matrix('Λ') == jac.Lambda
assert jac.is_positive_definite('K')
assert jacobian.jacobian(curve) is jacobian.jacobian(troplab.curve.build((7, 3, 1, 0)))

# K is the pairing of the cycles
alpha1 = jacobian.Path.from_cycle(curve, 1)
alpha2 = jacobian.Path.from_cycle(curve, 2)
assert jacobian.pairing(curve, alpha1, 1) == 12
assert jacobian.pairing(curve, alpha1, 2) == -3
assert jacobian.pairing(curve, alpha2.reversed(), 2) == -6

curve3 = troplab.curve.build((13, 6, 3, 1, 0))
jac3 = jacobian.jacobian(curve3)
assert jac3.K[0] == (22, -7, 0)
assert jac3.detLambda == jac3.detK == 4 * jac3.detA == 1092

try:
    jacobian.pairing(curve, jacobian.Path([(3, 0, 1), (5, 0, 1)]), 1)
except ValueError as error:
    assert error.args == ('disconnected path: segment 0 ends at (1, 2) but segment 1 starts at (0, 7)',)
else:
    raise AssertionError('Should have refused a disconnected path')

# Determinant identities on random curves
rng = random.Random(0)
for _ in range(10):
    C = troplab.toda.random_generic(rng.randint(1, 4), rng)
    other = jacobian.Jacobian(troplab.curve.build(C))
    assert other.detLambda == other.detK == (C.g + 1) * other.detA
    assert other.is_positive_definite('K')

# Abel-Jacobi vectors of single points
curve1 = troplab.curve.build((8, 3, 0))
jac1 = jacobian.jacobian(curve1)
origin = troplab.curve.vertex_point(curve1, 0)
assert jacobian.iota(curve1, origin, locate(curve1, 2, 2)) == (2,)
assert jacobian.iota(curve1, origin, locate(curve1, 3, 5)) == (5,)
assert jacobian.iota(curve1, origin, origin) == (0,)

# Winding around cycles changes the vector by periods
for _ in range(20):
    S = troplab.curve.random_point(curve, rng)
    P = troplab.curve.random_point(curve, rng)
    path, counts = jacobian.random_path(curve, S, P, rng)
    canonical = jacobian.iota(curve, S, P)
    for j in range(2):
        winding = sum(counts[k] * jac.K[k][j] for k in range(2))
        assert jacobian.pairing(curve, path, j + 1) - canonical[j] == winding

# Lattice reduction
assert jac1.K == ((16,),)
assert jac1.reduce((17,), 'K') == jacobian.JacPoint((1,), 'K')
assert repr(jac1.reduce((17,), 'K')) == 'JacPoint((1), basis=K)'
assert jac1.reduce((-1,), 'K').z == (15,)
assert jac.reduce(jac.K[0], 'K').z == (0, 0)
assert jac.jac_equal((1, 1), (1 + 12, 1 + 9), 'Lambda')
assert not jac.jac_equal((1, 1), (2, 1), 'Lambda')

# Translations
zero = jac.reduce((0, 0), 'Lambda')
assert jac.translate(zero, 'nu').z == (7, 7)
assert jac.translate(jac.reduce((0, 0), 'K'), 'nu').z == (7, 0)
assert jac.translate(jac.reduce((0, 0), 'K'), 'v').z == (1, 1)
assert jac1.translate(jacobian.JacPoint((0,), 'K'), 'v').z == (3,)
assert jac.to_Jprime(jac.translate(zero, 'nu')) == jac.to_Jprime(zero)
assert jac.to_basis(jacobian.JacPoint((7, 0), 'K'), 'Lambda').z == (7, 7)
assert jac.to_basis(jacobian.JacPoint((7, 7), 'Lambda'), 'K').z == (7, 0)

try:
    jac.to_basis(jacobian.JacPoint((0, 0), 'A'), 'K')
except ValueError as error:
    assert error.args == ("Cannot lift a point of J'(Gamma) back to J(Gamma)",)
else:
    raise AssertionError('Should have refused lifting a point of the quotient torus')

try:
    jacobian.JacPoint((0, 0), 'B')
except KeyError:
    pass
else:
    raise AssertionError('Should have refused an unknown basis')

# Integer points of the tori
assert jac1.lattice_point_count('K') == 16
assert jac.lattice_point_count('A') == 21
assert jac.invariant_factors('K') == (3, 21)
assert jac1.invariant_factors('K') == (16,)

points = jac.lattice_points('K')
assert len(points) == 63
assert points[0] == (0, 0)
assert len(set(points)) == 63
assert all(jac.reduce(z, 'K').z == z for z in points)
assert len(jac.lattice_points('A')) == 21

# The Hermite normal form walk finds the same classes
threshold = jacobian.SNF_THRESHOLD
jacobian.SNF_THRESHOLD = 0
try:
    assert jac.lattice_points('K') == points
    assert len(jac3.lattice_points('Lambda')) == 1092
finally:
    jacobian.SNF_THRESHOLD = threshold

rational = jacobian.Jacobian(troplab.curve.build(('15/2', 3, 1, 0)))
try:
    rational.lattice_point_count('K')
except ValueError as error:
    assert error.args == ('Lattice points need an integer period matrix; C must be integral',)
else:
    raise AssertionError('Should have refused counting lattice points of a rational C')

# Divisors and D^g
D = jacobian.Divisor.from_coords(curve, [(2, 3), (1, 2)])
assert repr(D) == 'Divisor((1,2) + (2,3))'
assert D == jacobian.Divisor([locate(curve, 1, 2), locate(curve, 2, 3)])
assert D.degree == 2
assert jacobian.Divisor.from_json(curve, [{'X': '1', 'Y': '2'}, {'X': '2', 'Y': '3'}]) == D
assert jacobian.in_Dg(curve, D)
assert jacobian.in_Dg(curve, jacobian.Divisor.from_coords(curve, [(1, 3), (2, 3)]))
assert not jacobian.in_Dg(curve, jacobian.Divisor.from_coords(curve, [(1, 3), (1, 4)]))
assert not jacobian.in_Dg(curve, jacobian.Divisor.from_coords(curve, [(0, 3), (0, 5)]))
assert not jacobian.in_Dg(curve, jacobian.Divisor.from_coords(curve, [(1, 3)]))
assert jacobian.in_Dg(curve1, jacobian.Divisor.from_coords(curve1, [(0, 5)]))

# The Abel-Jacobi map of a divisor
P0 = locate(curve, 1, 2)
assert jacobian.eta(curve, D, P0) == jacobian.JacPoint((0, 1), 'K')
assert jacobian.eta(curve, D) == jacobian.JacPoint((2, 1), 'K')
assert jacobian.eta(curve, D, tag='Lambda') == jacobian.JacPoint((14, 12), 'Lambda')
assert jacobian.eta(curve, jacobian.Divisor([P0, P0]), P0).z == (0, 0)

try:
    jacobian.eta(curve, jacobian.Divisor([P0]))
except ValueError as error:
    assert error.args == ('Divisor must have degree g=2, not 1',)
else:
    raise AssertionError('Should have refused a divisor of the wrong degree')
