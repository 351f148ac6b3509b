"""Sparse term-map helpers shared by Weyl elements and symbol polynomials.

Both rings store an element as a dict mapping an exponent tuple of length
``2*m`` to a nonzero :class:`fractions.Fraction`.  The first ``m`` slots are
the powers of ``x1..xm``; the last ``m`` are the powers of ``d1..dm`` (Weyl
side) or ``Y1..Ym`` (symbol side).
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import lcm
from numbers import Rational


def grlex_key(exp):
    """Sort key for graded-lex order with x1 < ... < xm < d1 < ... < dm.

    Total degree decides first; ties are broken lexicographically starting at
    the largest variable.
    """
    return (sum(exp), exp[::-1])


def as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"coefficient must be an exact rational, got {type(c).__name__}")


def clean(terms):
    """Drop zero coefficients, coercing the rest to Fraction."""
    return {e: as_fraction(c) for e, c in terms.items() if c}


def integer_form(terms):
    """Return ``(den, ints)`` with ``terms[e] == ints[e] / den`` and ints integral."""
    den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    return den, {e: c.numerator * (den // c.denominator) for e, c in terms.items()}


def from_integer_form(den, ints):
    if den == 1:
        return {e: Fraction(c) for e, c in ints.items() if c}
    return {e: Fraction(c, den) for e, c in ints.items() if c}


def add_terms(p, q, sign=1):
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + sign * c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def scale_terms(p, c):
    if not c:
        return {}
    return {e: v * c for e, v in p.items()}


@lru_cache(maxsize=None)
def monomials_of_degree(nvars, degree):
    """All exponent tuples with ``nvars`` slots and total degree ``degree``."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    out.sort(key=grlex_key)
    return tuple(out)


def monomials_up_to(nvars, degree):
    """Exponent tuples of total degree <= ``degree`` in ascending graded-lex order."""
    out = []
    for t in range(degree + 1):
        out.extend(monomials_of_degree(nvars, t))
    return out
