__doc__ = """The compact tropical hyperelliptic curve of a generic conserved vector.

For C = (C_-1, C_0, ..., C_g) with C_g = 0 the curve is the locus in the (X, Y)
plane where the minimum of

    2Y, (g+1)X + Y, gX + Y + C_g, ..., X + Y + C_1, Y + C_0, C_-1

is attained at least twice. Its compact part consists of a lower chain
Y = height(X), an upper chain Y = C_-1 - height(X) over 0 <= X <= lambda_g,
and g+1 vertical edges at X = 0, lambda_1, ..., lambda_g. Here

    height(X) = min[(g+1)X, gX + C_g, ..., X + C_1, C_0]

Edges are numbered vertical first (V_0..V_g), then lower chain (L_1..L_g), then
upper chain (U_1..U_g). Edge weights are lattice lengths: the edge runs from
tail to tail + weight * xi for its primitive tangent vector xi. The cycle
alpha_k runs L_k, V_k up, U_k backwards and V_{k-1} down.

Usage:
>>> curve = build((8, 3, 0))
>>> curve.lambdas, curve.ps
((Fraction(3, 1),), (Fraction(2, 1),))
>>> contains(curve, 2, 2)
True
>>> locate(curve, 2, 2)
GraphPoint(edge=2, offset=2, at (2,2))
"""

import troplab.troptools as _troptools
import troplab.toda as _toda

class Edge:
    "A compact edge from vertex tail to vertex head along primitive vector xi"
    __slots__ = ['id', 'kind', 'index', 'tail', 'head', 'xi', 'weight']

    def __init__(self, id, kind, index, tail, head, xi, weight):
        self.id = id
        self.kind = kind
        self.index = index
        self.tail = tail
        self.head = head
        self.xi = xi
        self.weight = weight

    @property
    def name(self):
        return {'vertical': 'V', 'lower': 'L', 'upper': 'U'}[self.kind] + str(self.index)

    def to_json(self):
        return {'id': self.id, 'name': self.name, 'tail': self.tail, 'head': self.head,
                'xi': list(self.xi), 'weight': self.weight}

    def __repr__(self):
        return 'Edge({}, {} -> {}, xi={}, w={})'.format(self.name, self.tail, self.head, self.xi,
                                                       _troptools.format_rational(self.weight))

class GraphPoint:
    """A point of the curve as an edge and a weight-metric offset from the edge's
    tail, with cached planar coordinates. Make them with locate or point."""
    __slots__ = ['edge', 'offset', 'X', 'Y']

    def __init__(self, edge, offset, X, Y):
        self.edge = edge
        self.offset = offset
        self.X = X
        self.Y = Y

    @property
    def coords(self):
        return (self.X, self.Y)

    def to_json(self):
        return {'X': self.X, 'Y': self.Y}

    def __eq__(self, other):
        if not isinstance(other, GraphPoint):
            return NotImplemented
        return self.edge == other.edge and self.offset == other.offset

    def __hash__(self):
        return hash((self.edge, self.offset))

    def __lt__(self, other):
        return (self.X, self.Y) < (other.X, other.Y)

    def __repr__(self):
        return 'GraphPoint(edge={}, offset={}, at ({},{}))'.format(self.edge,
                _troptools.format_rational(self.offset),
                _troptools.format_rational(self.X), _troptools.format_rational(self.Y))

class CurveModel:
    """Metric graph of the compact curve. Build with CurveModel.build(C) or build(C).

    Vertices 0..g are the lower chain (lambda_k, height(lambda_k)), vertices
    g+1..2g+1 the upper chain (lambda_k, C_-1 - height(lambda_k)), lambda_0 = 0.
    """
    __slots__ = ['g', 'C', 'lambdas', 'ps', 'vertices', 'edges', 'cycles', 'rays']

    def __init__(self, C):
        C = _toda.as_conserved(C)
        C.check_generic()

        g = C.g
        self.g = g
        self.C = C
        self.lambdas = C.lambdas()
        self.ps = C.ps()

        xs = (_troptools.Rational(0),) + self.lambdas
        lower = [(x, _height(C, x)) for x in xs]
        upper = [(x, C.c(-1) - y) for x, y in lower]
        self.vertices = tuple(lower + upper)

        edges = list()
        for k in range(g + 1):
            weight = C.c(-1) if k == 0 else self.ps[k - 1]
            edges.append(Edge(k, 'vertical', k, k, g + 1 + k, (0, 1), weight))
        for k in range(1, g + 1):
            edges.append(Edge(g + k, 'lower', k, k - 1, k, (1, g + 1 - k), xs[k] - xs[k - 1]))
        for k in range(1, g + 1):
            edges.append(Edge(2 * g + k, 'upper', k, g + k, g + 1 + k, (1, -(g + 1 - k)),
                              xs[k] - xs[k - 1]))
        self.edges = tuple(edges)

        self.cycles = tuple(((g + k, 1), (k, 1), (2 * g + k, -1), (k - 1, -1))
                            for k in range(1, g + 1))

        # Primitive vectors of the infinite rays dropped from the compact part
        self.rays = {0: (-1, -(g + 1)), g + 1: (-1, g + 1), g: (1, 0), 2 * g + 1: (1, 0)}

    @classmethod
    def build(cls, C):
        return cls(C)

    def cycle(self, k):
        "alpha_k for k in 1..g, as ((edge id, sign), ...)"
        if not 1 <= k <= self.g:
            raise IndexError('Curve of genus {} has no cycle alpha_{}'.format(self.g, k))
        return self.cycles[k - 1]

    def height(self, X):
        return _height(self.C, X)

    def to_json(self):
        return {'g': self.g,
                'C': list(self.C.C),
                'lambda': list(self.lambdas),
                'p': list(self.ps),
                'vertices': [list(v) for v in self.vertices],
                'edges': [e.to_json() for e in self.edges],
                'cycles': [[list(pair) for pair in cycle] for cycle in self.cycles]}

    def __repr__(self):
        return 'CurveModel(C={}, lambda={}, p={})'.format(self.C,
                tuple(map(_troptools.format_rational, self.lambdas)),
                tuple(map(_troptools.format_rational, self.ps)))

def build(C):
    "Builds the curve model of a generic conserved vector with C_g = 0"
    return CurveModel(C)

def _height(C, X):
    g = C.g
    X = _troptools.rational(X)
    return min([(g + 1) * X] + [m * X + C.c(m) for m in range(g + 1)])

def height(curve, X):
    "Lower branch height(X) = min[(g+1)X, gX + C_g, ..., X + C_1, C_0]"
    return _height(curve.C, X)

def tropical_polynomial_terms(curve, X, Y):
    "The terms 2Y, (g+1)X+Y, gX+Y+C_g, ..., Y+C_0, C_-1 at (X, Y)"
    X, Y = _troptools.rational(X), _troptools.rational(Y)
    C, g = curve.C, curve.g
    return [2 * Y, (g + 1) * X + Y] + [m * X + Y + C.c(m) for m in range(g, -1, -1)] + [C.c(-1)]

def contains(curve, X, Y):
    "Whether (X, Y) lies on the compact curve"
    X, Y = _troptools.rational(X), _troptools.rational(Y)
    if not 0 <= X <= curve.lambdas[-1]:
        return False
    return _troptools.trop_min(tropical_polynomial_terms(curve, X, Y)).is_tie

def _offset_on(curve, edge, X, Y):
    "The offset of (X, Y) along edge, or None if the point is not on it"
    tx, ty = curve.vertices[edge.tail]
    dx, dy = edge.xi
    if dx != 0:
        offset = (X - tx) / dx
        if ty + offset * dy != Y:
            return None
    else:
        if X != tx:
            return None
        offset = (Y - ty) / dy

    if 0 <= offset <= edge.weight:
        return offset
    return None

def locate(curve, X, Y):
    """The GraphPoint at planar coordinates (X, Y). Points at vertices are given on
    the incident edge with the smallest id."""
    X, Y = _troptools.rational(X), _troptools.rational(Y)
    for edge in curve.edges:
        offset = _offset_on(curve, edge, X, Y)
        if offset is not None:
            return GraphPoint(edge.id, offset, X, Y)

    raise ValueError('point ({}, {}) is not on the curve'.format(_troptools.format_rational(X),
                                                                _troptools.format_rational(Y)))

def coords(curve, point):
    "Planar coordinates of a GraphPoint, recomputed from its edge and offset"
    edge = curve.edges[point.edge]
    tx, ty = curve.vertices[edge.tail]
    return (tx + point.offset * edge.xi[0], ty + point.offset * edge.xi[1])

def point(curve, edge, offset):
    "Canonical GraphPoint at an offset along an edge"
    edge = curve.edges[edge]
    offset = _troptools.rational(offset)
    if not 0 <= offset <= edge.weight:
        raise ValueError('Offset {} outside edge {} of weight {}'.format(
                         _troptools.format_rational(offset), edge.name,
                         _troptools.format_rational(edge.weight)))
    tx, ty = curve.vertices[edge.tail]
    return locate(curve, tx + offset * edge.xi[0], ty + offset * edge.xi[1])

def vertex_point(curve, vertex):
    "Canonical GraphPoint of a vertex"
    return locate(curve, *curve.vertices[vertex])

def on_cycle(curve, gp, k):
    "Whether a point lies on alpha_k, the boundary of the strip lambda_{k-1} <= X <= lambda_k"
    left = 0 if k == 1 else curve.lambdas[k - 2]
    return left <= gp.X <= curve.lambdas[k - 1]

def in_overlap(curve, gp, k):
    """Whether a point lies in the open overlap of alpha_k and alpha_{k+1}, the
    vertical edge at lambda_k without its end points"""
    if not 1 <= k < curve.g:
        return False
    edge = curve.edges[gp.edge]
    return edge.kind == 'vertical' and edge.index == k and 0 < gp.offset < edge.weight

def lattice_points(curve, step=1):
    "Every point of the curve whose offset along its edge is a multiple of step"
    step = _troptools.rational(step)
    if step <= 0:
        raise ValueError('Step must be positive, not {}'.format(step))

    seen = set()
    points = list()
    for edge in curve.edges:
        offset = _troptools.Rational(0)
        while offset <= edge.weight:
            gp = point(curve, edge.id, offset)
            if gp not in seen:
                seen.add(gp)
                points.append(gp)
            offset += step

    return points

def random_point(curve, rng, denominators=(1, 2, 3, 5, 7)):
    "A random rational point, uniformly chosen edge and offset"
    edge = rng.choice(curve.edges)
    d = rng.choice(denominators)
    numerator = rng.randint(0, int(edge.weight * d))
    return point(curve, edge.id, _troptools.Rational(numerator, d))

def balance(curve):
    """Smoothness data of the curve at every vertex, counting the dropped rays.

    Output: list of (vertex, outgoing primitive vectors, ok) where ok is True iff
    the vertex is 3-valent, the vectors sum to zero and every pair has |det| = 1"""
    outgoing = {v: list() for v in range(len(curve.vertices))}
    for edge in curve.edges:
        outgoing[edge.tail].append(edge.xi)
        outgoing[edge.head].append((-edge.xi[0], -edge.xi[1]))
    for v, ray in curve.rays.items():
        outgoing[v].append(ray)

    result = list()
    for v, vectors in outgoing.items():
        total = (sum(x for x, _ in vectors), sum(y for _, y in vectors))
        unimodular = all(abs(a[0] * b[1] - a[1] * b[0]) == 1
                         for i, a in enumerate(vectors) for b in vectors[i + 1:])
        ok = len(vectors) == 3 and total == (0, 0) and unimodular
        result.append((v, tuple(vectors), ok))

    return result

def to_svg(curve, path, divisors=(), title=None):
    """Draws the curve to an SVG file with edge weights and vertex labels.

    Inputs:
        curve: CurveModel
        path: Path of the SVG file to write
        divisors: [()] Sequence of divisors (sequences of GraphPoints) to overlay
        title: [None] Figure title, default is the conserved vector
    """
    import matplotlib
    matplotlib.use('Agg')
    import matplotlib.pyplot as plt

    matplotlib.rcParams['svg.hashsalt'] = 'troplab'

    fig, ax = plt.subplots(1, 1, figsize=(6, 6))
    for edge in curve.edges:
        (x0, y0), (x1, y1) = curve.vertices[edge.tail], curve.vertices[edge.head]
        ax.plot([float(x0), float(x1)], [float(y0), float(y1)], color='black', linewidth=1.5)
        ax.annotate(_troptools.format_rational(edge.weight),
                    ((float(x0) + float(x1)) / 2, (float(y0) + float(y1)) / 2),
                    textcoords='offset points', xytext=(4, 4), fontsize=8, color='gray')

    for index, (x, y) in enumerate(curve.vertices):
        ax.plot([float(x)], [float(y)], marker='o', color='black', markersize=3)
        ax.annotate('({},{})'.format(_troptools.format_rational(x), _troptools.format_rational(y)),
                    (float(x), float(y)), textcoords='offset points', xytext=(-10, -12), fontsize=7)

    colors = ['tab:red', 'tab:blue', 'tab:green', 'tab:orange', 'tab:purple']
    for index, divisor in enumerate(divisors):
        color = colors[index % len(colors)]
        xs = [float(p.X) for p in divisor]
        ys = [float(p.Y) for p in divisor]
        ax.scatter(xs, ys, color=color, s=25, zorder=3)

    ax.set_xlabel('X')
    ax.set_ylabel('Y')
    ax.set_title('C = {}'.format(curve.C) if title is None else title)
    fig.savefig(path, format='svg', metadata={'Date': None})
    plt.close(fig)
