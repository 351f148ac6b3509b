"""Independent oracles and random generators shared by the test modules."""

import random
from fractions import Fraction
from itertools import permutations

import sympy
from hypothesis import strategies as st

from weyldet import SymbolPoly, WeylElement, WeylMatrix
from weyldet.terms import monomials_up_to


def naive_mul(a, b):
    """Product by rewriting words letter by letter with d_i x_i -> x_i d_i + 1."""
    assert a.m == b.m
    m = a.m

    def word(exp):
        w = []
        for i in range(m):
            w += [("x", i)] * exp[i]
        for i in range(m):
            w += [("d", i)] * exp[m + i]
        return tuple(w)

    pending = [
        (word(e1) + word(e2), c1 * c2)
        for e1, c1 in a.terms.items()
        for e2, c2 in b.terms.items()
    ]
    out = {}
    while pending:
        w, c = pending.pop()
        for pos in range(len(w) - 1):
            (k1, i1), (k2, i2) = w[pos], w[pos + 1]
            if (k1 == "d" and k2 == "x") or (k1 == k2 and i1 > i2):
                pending.append((w[:pos] + (w[pos + 1], w[pos]) + w[pos + 2:], c))
                if k1 == "d" and k2 == "x" and i1 == i2:
                    pending.append((w[:pos] + w[pos + 2:], c))
                break
        else:
            exp = [0] * (2 * m)
            for kind, i in w:
                exp[i if kind == "x" else m + i] += 1
            exp = tuple(exp)
            out[exp] = out.get(exp, 0) + c
    return WeylElement(m, out)


def apply_operator(a, f):
    """Apply a Weyl element to a sympy expression in x1..xm."""
    xs = sympy.symbols(f"x1:{a.m + 1}")
    total = sympy.Integer(0)
    for exp, c in a.terms.items():
        g = f
        for i in range(a.m):
            if exp[a.m + i]:
                g = sympy.diff(g, xs[i], exp[a.m + i])
        mono = sympy.Integer(1)
        for i in range(a.m):
            mono *= xs[i] ** exp[i]
        total += sympy.Rational(c.numerator, c.denominator) * mono * g
    return sympy.expand(total)


def leibniz_det(rows, m):
    """Permutation expansion of a commutative determinant."""
    n = len(rows)
    total = SymbolPoly.zero(m)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = SymbolPoly.const(-1 if inversions % 2 else 1, m)
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term
    return total


def random_weyl(rng, m, degree, height=3, density=1.0, f0=False):
    """Random element: each monomial of Bernstein degree <= degree is kept with
    probability ``density`` and given a uniform coefficient in [-height, height]."""
    terms = {}
    for exp in monomials_up_to(2 * m, degree):
        if f0 and any(exp[m:]):
            continue
        if rng.random() < density:
            c = rng.randint(-height, height)
            if c:
                terms[exp] = c
    return WeylElement(m, terms)


def random_nonzero_weyl(rng, m, degree, **kw):
    while True:
        a = random_weyl(rng, m, degree, **kw)
        if a:
            return a


def random_matrix(rng, m, n, degree, **kw):
    return WeylMatrix(m, [[random_weyl(rng, m, degree, **kw) for _ in range(n)] for _ in range(n)])


def random_symbol(rng, m, degree, height=3, density=0.5):
    terms = {}
    for exp in monomials_up_to(2 * m, degree):
        if rng.random() < density:
            c = rng.randint(-height, height)
            if c:
                terms[exp] = c
    return SymbolPoly(m, terms)


# hypothesis strategies

coefficients = st.one_of(
    st.integers(-5, 5),
    st.fractions(min_value=-5, max_value=5, max_denominator=6),
).map(Fraction)


@st.composite
def weyl_elements(draw, m=None, max_degree=3, max_terms=5, nonzero=False):
    if m is None:
        m = draw(st.integers(1, 2))
    monos = monomials_up_to(2 * m, max_degree)
    chosen = draw(st.lists(st.sampled_from(monos), max_size=max_terms, unique=True,
                           min_size=1 if nonzero else 0))
    terms = {}
    for exp in chosen:
        c = draw(coefficients)
        if nonzero and not c:
            c = Fraction(1)
        terms[exp] = c
    return WeylElement(m, terms)


@st.composite
def symbol_polys(draw, m=1, max_degree=3, max_terms=4, nonzero=False):
    monos = monomials_up_to(2 * m, max_degree)
    chosen = draw(st.lists(st.sampled_from(monos), max_size=max_terms, unique=True,
                           min_size=1 if nonzero else 0))
    terms = {}
    for exp in chosen:
        c = draw(coefficients)
        terms[exp] = c if c else Fraction(1)
    return SymbolPoly(m, terms)


def seeded(seed):
    return random.Random(seed)
