__doc__ = """Period matrices, the tropical Jacobian and the Abel-Jacobi map of a curve.

The bilinear form Q on paths of the metric graph is the signed weighted length
of their overlap. With the cycles alpha_1..alpha_g of troplab.curve:

    K_ij      = Q(alpha_i, alpha_j)
    Lambda_ij = C_-1 + p_i delta_ij + 2 min[lambda_i, lambda_j]
    A_ij      = Lambda_ij - C_-1

J(Gamma) = R^g / K Z^g in K-coordinates (z_i = Q(gamma, alpha_i)), or
R^g / Lambda Z^g in Lambda-coordinates (pairings with alpha_1 + ... + alpha_i).
J'(Gamma) = R^g / A Z^g uses Lambda-coordinates too.

Usage:
>>> curve = troplab.curve.build((7, 3, 1, 0))
>>> jac = Jacobian(curve)
>>> jac.detK, jac.detLambda, jac.detA
(Fraction(63, 1), Fraction(63, 1), Fraction(21, 1))
>>> P0 = troplab.curve.locate(curve, 1, 2)
>>> D = Divisor([P0, troplab.curve.locate(curve, 2, 3)])
>>> eta(curve, D, P0)
JacPoint((0, 1), basis=K)
"""

import itertools as _itertools
import functools as _functools
import math as _math
import numpy as _np
import sympy as _sympy
from sympy.matrices.normalforms import invariant_factors as _invariant_factors
from sympy.matrices.normalforms import hermite_normal_form as _hermite_normal_form
import troplab.troptools as _troptools
import troplab.curve as _curve

# Above this many classes, or this box volume, lattice representatives come
# from the Hermite normal form instead of a bounding-box scan
SNF_THRESHOLD = 10**5
BOX_THRESHOLD = 10**6

_BASES = {'K': 'K', 'Lambda': 'Lambda', 'Λ': 'Lambda', 'A': 'A'}

def _basis(tag):
    try:
        return _BASES[tag]
    except KeyError:
        raise KeyError('Unknown basis "{}", use K, Lambda or A'.format(tag)) from None

class Path:
    """An oriented chain of edge segments (edge id, start offset, end offset).
    A segment with start > end runs against the edge's orientation."""
    __slots__ = ['segments']

    def __init__(self, segments=()):
        self.segments = tuple((int(e), _troptools.rational(a), _troptools.rational(b))
                              for e, a, b in segments)

    @classmethod
    def from_cycle(cls, curve, k):
        "The closed path alpha_k starting at the lower vertex at lambda_{k-1}"
        segments = list()
        for edge, sign in curve.cycle(k):
            weight = curve.edges[edge].weight
            segments.append((edge, 0, weight) if sign > 0 else (edge, weight, 0))
        return cls(segments)

    def reversed(self):
        return Path((e, b, a) for e, a, b in reversed(self.segments))

    def __add__(self, other):
        return Path(self.segments + other.segments)

    def __len__(self):
        return len(self.segments)

    def __repr__(self):
        return 'Path({} segments)'.format(len(self.segments))

def _segment_point(curve, edge, offset):
    edge = curve.edges[edge]
    tx, ty = curve.vertices[edge.tail]
    return (tx + offset * edge.xi[0], ty + offset * edge.xi[1])

def check_connected(curve, path):
    "Raises ValueError if consecutive segments of the path do not meet"
    for index, (first, second) in enumerate(zip(path.segments, path.segments[1:])):
        end = _segment_point(curve, first[0], first[2])
        start = _segment_point(curve, second[0], second[1])
        if end != start:
            raise ValueError('disconnected path: segment {} ends at ({}, {}) but segment {} starts at ({}, {})'.format(
                             index, *map(_troptools.format_rational, end), index + 1,
                             *map(_troptools.format_rational, start)))

def pairing(curve, path, k):
    "Q(path, alpha_k): signed weighted length of the overlap of the path with alpha_k"
    check_connected(curve, path)
    signs = dict(curve.cycle(k))
    total = _troptools.Rational(0)
    for edge, start, end in path.segments:
        if edge in signs:
            total += signs[edge] * (end - start)
    return total

def root_path(curve, gp):
    """The path from the lower vertex at X = 0 to a point, inside the spanning
    tree of vertical edges and lower chain, except for a last stretch along an
    upper chain edge."""
    g = curve.g
    edge = curve.edges[gp.edge]
    k = edge.index
    segments = list()

    if edge.kind == 'vertical':
        segments.extend((g + j, 0, curve.edges[g + j].weight) for j in range(1, k + 1))
    elif edge.kind == 'lower':
        segments.extend((g + j, 0, curve.edges[g + j].weight) for j in range(1, k))
    else:
        segments.extend((g + j, 0, curve.edges[g + j].weight) for j in range(1, k))
        segments.append((k - 1, 0, curve.edges[k - 1].weight))

    segments.append((gp.edge, 0, gp.offset))
    return Path(segments)

def canonical_path(curve, S, P):
    "The spanning-tree path from S to P"
    return root_path(curve, S).reversed() + root_path(curve, P)

def random_path(curve, S, P, rng, windings=3):
    """A path from S to P that winds around randomly chosen cycles, in random
    directions, between the canonical halves.

    Output: (Path, winding counts per cycle)"""
    g = curve.g
    counts = [0] * g
    path = root_path(curve, S).reversed()
    for _ in range(rng.randint(0, windings)):
        k = rng.randint(1, g)
        sign = rng.choice((1, -1))
        approach = Path((g + j, 0, curve.edges[g + j].weight) for j in range(1, k))
        loop = Path.from_cycle(curve, k)
        if sign < 0:
            loop = loop.reversed()
        path = path + approach + loop + approach.reversed()
        counts[k - 1] += sign

    return path + root_path(curve, P), counts

def iota(curve, S, P):
    "(Q(gamma, alpha_1), ..., Q(gamma, alpha_g)) for the canonical path gamma from S to P"
    path = canonical_path(curve, S, P)
    return tuple(pairing(curve, path, k) for k in range(1, curve.g + 1))

class Divisor:
    "An effective divisor: a multiset of GraphPoints, kept sorted by (X, Y)"
    __slots__ = ['points']

    def __init__(self, points):
        points = tuple(sorted(points))
        if len(points) == 0:
            raise ValueError('Divisor must have at least one point')
        self.points = points

    @classmethod
    def from_coords(cls, curve, pairs):
        "Divisor of the points at planar coordinates [(X, Y), ...]"
        return cls([_curve.locate(curve, x, y) for x, y in pairs])

    @classmethod
    def from_json(cls, curve, document):
        return cls.from_coords(curve, [(p['X'], p['Y']) for p in document])

    def to_json(self):
        return [p.to_json() for p in self.points]

    @property
    def degree(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return sorted(self.points, key=_pointkey) == sorted(other.points, key=_pointkey)

    def __hash__(self):
        return hash(tuple(sorted(self.points, key=_pointkey)))

    def __repr__(self):
        return 'Divisor({})'.format(' + '.join('({},{})'.format(
               _troptools.format_rational(p.X), _troptools.format_rational(p.Y)) for p in self.points))

def _pointkey(gp):
    return (gp.X, gp.Y)

def in_Dg(curve, divisor):
    """Whether a divisor lies in the divisor class D^g: it has g points that can
    be put one on each alpha_i, and each open overlap of alpha_i and alpha_{i+1}
    holds at most one of them."""
    g = curve.g
    points = list(divisor)
    if len(points) != g:
        return False

    for k in range(1, g):
        if sum(_curve.in_overlap(curve, p, k) for p in points) > 1:
            return False

    for permutation in _itertools.permutations(points):
        if all(_curve.on_cycle(curve, p, i + 1) for i, p in enumerate(permutation)):
            return True

    return False

class JacPoint:
    """A point of a real torus R^g / M Z^g, stored as its canonical
    representative z = M t with 0 <= t_i < 1. basis names M."""
    __slots__ = ['z', 'basis']

    def __init__(self, z, basis):
        self.z = _troptools.vector(z)
        self.basis = _basis(basis)

    def to_json(self):
        return {'z': list(self.z), 'basis': self.basis}

    def __eq__(self, other):
        if not isinstance(other, JacPoint):
            return NotImplemented
        return self.z == other.z and self.basis == other.basis

    def __hash__(self):
        return hash((self.z, self.basis))

    def __repr__(self):
        return 'JacPoint(({}), basis={})'.format(', '.join(map(_troptools.format_rational, self.z)),
                                                 self.basis)

def _to_sympy(rows):
    return _sympy.Matrix([[_sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows])

def _from_sympy(matrix):
    return tuple(tuple(_troptools.rational(matrix[i, j]) for j in range(matrix.cols))
                 for i in range(matrix.rows))

def _matvec(matrix, v):
    return tuple(sum((a * b for a, b in zip(row, v)), _troptools.Rational(0)) for row in matrix)

class Jacobian:
    """Period data of a curve: K, Lambda, A, their determinants and the lattice
    reductions of the tropical Jacobian.

    Usage:
    >>> jac = Jacobian(troplab.curve.build((8, 3, 0)))
    >>> jac.reduce((17,), 'K')
    JacPoint((1), basis=K)
    """
    __slots__ = ['curve', 'K', 'Lambda', 'A', 'detK', 'detLambda', 'detA', '_inverses']

    def __init__(self, curve):
        self.curve = curve
        g = curve.g
        Cm1 = curve.C.c(-1)
        lam, p = curve.lambdas, curve.ps

        cycles = [Path.from_cycle(curve, i) for i in range(1, g + 1)]
        self.K = tuple(tuple(pairing(curve, cycles[i], j + 1) for j in range(g)) for i in range(g))
        self.Lambda = tuple(tuple(Cm1 + (p[i] if i == j else 0) + 2 * min(lam[i], lam[j])
                                  for j in range(g)) for i in range(g))
        self.A = tuple(tuple(x - Cm1 for x in row) for row in self.Lambda)

        self._inverses = dict()
        self.detK = self._determinant('K')
        self.detLambda = self._determinant('Lambda')
        self.detA = self._determinant('A')

    @property
    def g(self):
        return self.curve.g

    def matrix(self, tag):
        return getattr(self, _basis(tag))

    def _determinant(self, tag):
        return _troptools.rational(_to_sympy(self.matrix(tag)).det())

    def is_positive_definite(self, tag='K'):
        return bool(_to_sympy(self.matrix(tag)).is_positive_definite)

    def inverse(self, tag):
        tag = _basis(tag)
        if tag not in self._inverses:
            self._inverses[tag] = _from_sympy(_to_sympy(self.matrix(tag)).inv())
        return self._inverses[tag]

    def coordinates(self, z, tag):
        "t = M^-1 z"
        return _matvec(self.inverse(tag), _troptools.vector(z))

    def reduce(self, z, tag='K'):
        "Canonical representative of z modulo M Z^g"
        t = self.coordinates(z, tag)
        fractional = tuple(x - _math.floor(x) for x in t)
        return JacPoint(_matvec(self.matrix(tag), fractional), tag)

    def jac_equal(self, z1, z2, tag='K'):
        "Whether z1 and z2 agree modulo M Z^g"
        difference = tuple(a - b for a, b in zip(_troptools.vector(z1), _troptools.vector(z2)))
        return all(x.denominator == 1 for x in self.coordinates(difference, tag))

    def to_basis(self, point, tag):
        """Re-expresses a JacPoint in another basis. K-coordinates z become
        Lambda-coordinates (z_1, z_1 + z_2, ...); A is a quotient of Lambda."""
        tag = _basis(tag)
        if point.basis == tag:
            return point

        z = point.z
        if point.basis == 'K':
            z = tuple(_itertools.accumulate(z))
        elif tag == 'K':
            if point.basis == 'A':
                raise ValueError('Cannot lift a point of J\'(Gamma) back to J(Gamma)')
            z = (z[0],) + tuple(b - a for a, b in zip(z, z[1:]))
        elif point.basis == 'A':
            raise ValueError('Cannot lift a point of J\'(Gamma) back to J(Gamma)')

        return self.reduce(z, tag)

    def to_Jprime(self, point):
        "The image in J'(Gamma) = R^g / A Z^g"
        return self.to_basis(point, 'A')

    def translation_vector(self, kind, tag):
        """nu: C_-1 (1, ..., 1) in Lambda-coordinates, (C_-1, 0, ..., 0) in K-coordinates.
        v: (lambda_1, lambda_2 - lambda_1, ..., lambda_g - lambda_{g-1}) in the given coordinates."""
        tag = _basis(tag)
        g = self.g
        if kind == 'nu':
            Cm1 = self.curve.C.c(-1)
            if tag == 'K':
                return (Cm1,) + (_troptools.Rational(0),) * (g - 1)
            return (Cm1,) * g
        elif kind == 'v':
            lam = (_troptools.Rational(0),) + self.curve.lambdas
            return tuple(b - a for a, b in zip(lam, lam[1:]))
        else:
            raise KeyError('Unknown translation "{}", use nu or v'.format(kind))

    def translate(self, point, kind):
        "Applies the translation nu or v to a JacPoint"
        delta = self.translation_vector(kind, point.basis)
        return self.reduce(tuple(a + b for a, b in zip(point.z, delta)), point.basis)

    def _integer_matrix(self, tag):
        matrix = self.matrix(tag)
        if not all(_troptools.is_integral(row) for row in matrix):
            raise ValueError('Lattice points need an integer period matrix; C must be integral')
        return matrix

    def lattice_point_count(self, tag='K'):
        "|Z^g / M Z^g| = |det M|"
        self._integer_matrix(tag)
        return int(abs(getattr(self, 'det' + _basis(tag))))

    def invariant_factors(self, tag='K'):
        "Invariant factors d_1 | d_2 | ... of Z^g / M Z^g"
        matrix = _sympy.Matrix([[int(x) for x in row] for row in self._integer_matrix(tag)])
        return tuple(int(d) for d in _invariant_factors(matrix, domain=_sympy.ZZ))

    def lattice_points(self, tag='K'):
        """Canonical representatives of all integer points of R^g / M Z^g, sorted.

        Scans the bounding box of the fundamental parallelepiped with numpy when
        it is small, otherwise walks the box of the Hermite normal form."""
        tag = _basis(tag)
        matrix = self._integer_matrix(tag)
        det = self.lattice_point_count(tag)
        g = self.g

        lows = [sum(min(0, int(x)) for x in row) for row in matrix]
        highs = [sum(max(0, int(x)) for x in row) for row in matrix]
        volume = 1
        for low, high in zip(lows, highs):
            volume *= (high - low + 1)

        if det <= SNF_THRESHOLD and volume <= BOX_THRESHOLD:
            grids = _np.meshgrid(*[_np.arange(l, h + 1, dtype=_np.int64) for l, h in zip(lows, highs)],
                                 indexing='ij')
            candidates = _np.stack([grid.ravel() for grid in grids], axis=1)
            sign = 1 if getattr(self, 'det' + tag) > 0 else -1
            adjugate = _np.array([[int(x * det * sign) for x in row] for row in self.inverse(tag)],
                                 dtype=_np.int64)
            scaled = candidates @ adjugate.T
            mask = _np.all((scaled >= 0) & (scaled < det), axis=1)
            points = [tuple(_troptools.Rational(int(x)) for x in row) for row in candidates[mask]]
        else:
            hnf = _hermite_normal_form(_sympy.Matrix([[int(x) for x in row] for row in matrix]))
            diagonal = [int(hnf[i, i]) for i in range(hnf.rows)]
            points = [self.reduce(x, tag).z for x in _itertools.product(*[range(d) for d in diagonal])]

        points.sort()
        if len(points) != det:
            raise AssertionError('Found {} lattice classes, expected det = {}'.format(len(points), det))
        return points

@_functools.lru_cache(maxsize=64)
def _jacobian(C):
    return Jacobian(_curve.build(C))

def jacobian(curve):
    "The (cached) Jacobian of a curve"
    return _jacobian(curve.C)

def reduce(curve, z, tag='K'):
    return jacobian(curve).reduce(z, tag)

def jac_equal(curve, z1, z2, tag='K'):
    return jacobian(curve).jac_equal(z1, z2, tag)

def translate(curve, point, kind):
    return jacobian(curve).translate(point, kind)

def to_Jprime(curve, point):
    return jacobian(curve).to_Jprime(point)

def lattice_point_count(curve, tag='K'):
    return jacobian(curve).lattice_point_count(tag)

def eta(curve, divisor, basepoint=None, tag='K'):
    """Abel-Jacobi map: sum_i iota(P0, P_i) reduced modulo the period lattice.

    Inputs:
        curve: CurveModel
        divisor: Divisor (or sequence of GraphPoints) of degree g
        basepoint: [None] GraphPoint P0, None is the vertex (0, 0)
        tag: ['K'] Basis of the target torus

    Output: JacPoint
    """
    if basepoint is None:
        basepoint = _curve.vertex_point(curve, 0)

    points = list(divisor)
    if len(points) != curve.g:
        raise ValueError('Divisor must have degree g={}, not {}'.format(curve.g, len(points)))

    jac = jacobian(curve)
    z = [_troptools.Rational(0)] * curve.g
    for gp in points:
        z = [a + b for a, b in zip(z, iota(curve, basepoint, gp))]

    point = jac.reduce(z, 'K')
    return point if _basis(tag) == 'K' else jac.to_basis(point, tag)
