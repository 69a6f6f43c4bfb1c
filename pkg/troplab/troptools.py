__doc__ = """Exact scalars, min-plus primitives and plumbing troplab uses internally.

All real-valued quantities (Q_i, W_i, C_i, lambda_i, p_i, X, Y, ...) are
fractions.Fraction. Floats are rejected on input: a float tie in a branch test
of the eigenvector maps would silently select the wrong branch.

Usage:
>>> trop_min([3, 1, 2])
MinResult(1, argmins={1})
>>> format_rational(parse_rational('6/4'))
'3/2'
"""

import os as _os
import json as _json
import numbers as _numbers
from fractions import Fraction as _Fraction

import jsonschema as _jsonschema

Rational = _Fraction

DEFAULT_SUBPROCESSES = min(8, _os.cpu_count() or 1)

_SCHEMADIR = _os.path.join(_os.path.dirname(_os.path.abspath(__file__)), 'schemas')
_SCHEMAS = dict()

class MinResult:
    """Result of a tropical sum: the minimum and the set of positions attaining it.
    Positions are 0-based indices into the list of terms.
    """
    __slots__ = ['value', 'argmins']

    def __init__(self, value, argmins):
        if len(argmins) == 0:
            raise ValueError('argmins of a tropical sum cannot be empty')

        self.value = value
        self.argmins = frozenset(argmins)

    def __repr__(self):
        return 'MinResult({}, argmins={})'.format(format_rational(self.value),
                                                 set(sorted(self.argmins)))

    def __eq__(self, other):
        if not isinstance(other, MinResult):
            return NotImplemented
        return self.value == other.value and self.argmins == other.argmins

    def __hash__(self):
        return hash((self.value, self.argmins))

    @property
    def is_tie(self):
        "The minimum is attained at least twice"
        return len(self.argmins) > 1

def rational(x):
    """Converts an int, Fraction, sympy Rational or string to a Fraction.

    Strings may be integers, "p/q" or finite decimals such as "-1.25".
    Floats are refused.
    """
    if isinstance(x, _Fraction):
        return x
    elif isinstance(x, bool):
        raise TypeError('Cannot use a bool as a rational: {}'.format(x))
    elif isinstance(x, int):
        return _Fraction(x)
    elif isinstance(x, str):
        return parse_rational(x)
    elif isinstance(x, float):
        raise TypeError('Floats are not exact, pass a string or Fraction: {}'.format(x))
    elif isinstance(x, _numbers.Rational):
        return _Fraction(int(x.numerator), int(x.denominator))
    # sympy Rational exposes p and q
    elif hasattr(x, 'p') and hasattr(x, 'q'):
        return _Fraction(int(x.p), int(x.q))
    else:
        raise TypeError('Cannot convert {} to a rational'.format(type(x).__name__))

def parse_rational(string):
    "Parses '3', '-7/2' or '1.25' exactly"
    text = string.strip()
    if not text:
        raise ValueError('Cannot parse empty string as rational')

    try:
        if '/' in text:
            num, _, den = text.partition('/')
            value = _Fraction(int(num), int(den))
        else:
            value = _Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError('Cannot parse "{}" as rational'.format(string)) from None

    return value

def format_rational(x):
    "Prints a rational as 'p/q', or 'p' when it is an integer"
    x = rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '{}/{}'.format(x.numerator, x.denominator)

def format_decimal(x):
    """Prints a rational as an exact decimal string. Raises ValueError if the
    rational has no finite decimal expansion."""
    x = rational(x)
    den = x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1

    if den != 1:
        raise ValueError('{} has no finite decimal expansion'.format(format_rational(x)))

    digits = max(twos, fives)
    if digits == 0:
        return str(x.numerator)

    scaled = abs(x) * 10**digits
    integer = str(scaled.numerator).rjust(digits + 1, '0')
    sign = '-' if x < 0 else ''
    return '{}{}.{}'.format(sign, integer[:-digits], integer[-digits:])

def vector(values):
    "Tuple of Fractions from an iterable"
    return tuple(rational(v) for v in values)

def is_integral(values):
    return all(rational(v).denominator == 1 for v in values)

def trop_min(terms):
    """Tropical sum with tie detection.

    Input: non-empty sequence of rationals
    Output: MinResult(minimum, 0-based positions attaining it)
    """
    terms = list(terms)
    if len(terms) == 0:
        raise ValueError('empty tropical sum')

    value = min(terms)
    return MinResult(value, [i for i, t in enumerate(terms) if t == value])

def subprocesses(requested=None):
    """Number of worker processes to use.

    The environment variable TROPLAB_THREADS, when set to a positive integer,
    caps the number.
    """
    n = DEFAULT_SUBPROCESSES if requested is None else requested
    cap = _os.environ.get('TROPLAB_THREADS')
    if cap is not None:
        try:
            cap = int(cap)
        except ValueError:
            raise ValueError('TROPLAB_THREADS must be an integer, not "{}"'.format(cap)) from None
        if cap < 1:
            raise ValueError('TROPLAB_THREADS must be positive, not {}'.format(cap))
        n = min(n, cap)

    if n < 1:
        raise ValueError('Zero or negative subprocesses requested')

    return n

def jsonable(obj):
    "Recursively converts Fractions to 'p/q' strings and tuples to lists"
    if isinstance(obj, _Fraction):
        return format_rational(obj)
    elif isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [jsonable(i) for i in obj]
    elif hasattr(obj, 'item') and not isinstance(obj, (str, bytes)):
        # numpy scalar
        return obj.item()
    else:
        return obj

def load_schema(name):
    "Loads the shipped JSON schema troplab/schemas/<name>.json"
    if name not in _SCHEMAS:
        path = _os.path.join(_SCHEMADIR, name + '.json')
        if not _os.path.isfile(path):
            raise KeyError('No JSON schema named {}'.format(name))
        with open(path) as file:
            _SCHEMAS[name] = _json.load(file)

    return _SCHEMAS[name]

def validate(document, schema):
    "Validates a JSON-ready document against a shipped schema, raising on mismatch"
    _jsonschema.validate(instance=document, schema=load_schema(schema))
    return document

def dumps(document, schema=None):
    """Serializes a document to a JSON string after converting rationals.
    If schema is given, the document is validated first."""
    document = jsonable(document)
    if schema is not None:
        validate(document, schema)

    return _json.dumps(document)
