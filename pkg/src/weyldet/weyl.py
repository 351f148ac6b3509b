"""Exact arithmetic in the Weyl algebra A_m(Q).

Elements are stored in the normal form ``sum c * x^alpha * d^beta`` with every
``x`` to the left of every ``d``.  Products are renormalized eagerly using the
closed-form commutation rule

    d^b x^a = sum_k C(b, k) * a!/(a-k)! * x^(a-k) d^(b-k)

applied independently for each index, since generators with distinct indices
commute.
"""

from functools import lru_cache
from itertools import product
from math import comb, perm

from .errors import IndexMismatch
from .terms import (
    add_terms,
    as_fraction,
    clean,
    from_integer_form,
    grlex_key,
    integer_form,
    scale_terms,
)


@lru_cache(maxsize=None)
def _swap(b, a):
    """Expansion of d^b x^a as ``((k, coeff), ...)`` meaning coeff * x^(a-k) d^(b-k)."""
    return tuple((k, comb(b, k) * perm(a, k)) for k in range(min(a, b) + 1))


@lru_cache(maxsize=1 << 18)
def _mono_product(e1, e2, m):
    """Normal form of the product of two monomials, as ``((exp, int), ...)``."""
    per_index = []
    for i in range(m):
        a1, b1 = e1[i], e1[m + i]
        a2, b2 = e2[i], e2[m + i]
        per_index.append(
            [(a1 + a2 - k, b1 + b2 - k, c) for k, c in _swap(b1, a2)]
        )
    if all(len(opts) == 1 for opts in per_index):
        xs = tuple(opts[0][0] for opts in per_index)
        ds = tuple(opts[0][1] for opts in per_index)
        return ((xs + ds, 1),)
    out = []
    for choice in product(*per_index):
        coeff = 1
        for _, _, c in choice:
            coeff *= c
        xs = tuple(t[0] for t in choice)
        ds = tuple(t[1] for t in choice)
        out.append((xs + ds, coeff))
    return tuple(out)


def _mul_int_terms(p, q, m):
    out = {}
    get = out.get
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            c = c1 * c2
            for e, k in _mono_product(e1, e2, m):
                out[e] = get(e, 0) + c * k
    return out


class WeylElement:
    """An immutable element of A_m(Q) in x-before-d normal form.

    ``terms`` maps exponent tuples ``(alpha_1..alpha_m, beta_1..beta_m)`` to
    nonzero Fractions.  Equality is equality of term maps.
    """

    __slots__ = ("m", "_terms", "_hash")

    def __init__(self, m, terms=None):
        if m < 1:
            raise ValueError("Weyl index must be positive")
        self.m = m
        terms = clean(terms or {})
        for e in terms:
            if len(e) != 2 * m or any(v < 0 for v in e):
                raise ValueError(f"bad exponent tuple {e!r} for index {m}")
        self._terms = terms
        self._hash = None

    @classmethod
    def _raw(cls, m, terms):
        obj = cls.__new__(cls)
        obj.m = m
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, m):
        return cls._raw(m, {})

    @classmethod
    def const(cls, c, m):
        c = as_fraction(c)
        return cls._raw(m, {(0,) * (2 * m): c} if c else {})

    @classmethod
    def one(cls, m):
        return cls.const(1, m)

    @classmethod
    def x(cls, i, m, power=1):
        exp = [0] * (2 * m)
        exp[i - 1] = power
        return cls._raw(m, {tuple(exp): as_fraction(1)})

    @classmethod
    def d(cls, i, m, power=1):
        exp = [0] * (2 * m)
        exp[m + i - 1] = power
        return cls._raw(m, {tuple(exp): as_fraction(1)})

    @classmethod
    def monomial(cls, exp, m, coeff=1):
        return cls(m, {tuple(exp): coeff})

    # accessors

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def in_f0(self):
        """True when no term carries a derivative, i.e. the element lies in Q[x]."""
        m = self.m
        return all(not any(e[m:]) for e in self._terms)

    def leading_monomial(self):
        if not self._terms:
            return None
        return max(self._terms, key=grlex_key)

    def leading_coefficient(self):
        lm = self.leading_monomial()
        return self._terms[lm] if lm is not None else as_fraction(0)

    def constant_value(self):
        """The rational value of a constant element (0 for the zero element)."""
        if not self.is_constant():
            raise ValueError("element is not a constant")
        return self._terms.get((0,) * (2 * self.m), as_fraction(0))

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, WeylElement):
            if other.m != self.m:
                raise IndexMismatch(f"Weyl indices differ: {self.m} vs {other.m}")
            return other
        try:
            return WeylElement.const(other, self.m)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return WeylElement._raw(self.m, add_terms(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return WeylElement._raw(self.m, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return WeylElement._raw(self.m, add_terms(self._terms, other._terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return WeylElement.zero(self.m)
        dp, ip = integer_form(self._terms)
        dq, iq = integer_form(other._terms)
        prod = _mul_int_terms(ip, iq, self.m)
        return WeylElement._raw(self.m, from_integer_form(dp * dq, prod))

    def __rmul__(self, other):
        # scalars commute with everything
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return WeylElement._raw(self.m, scale_terms(self._terms, other.constant_value()))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a natural number")
        result = WeylElement.one(self.m)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return WeylElement._raw(self.m, scale_terms(self._terms, as_fraction(c)))

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.m == other.m and self._terms == other._terms
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        from .parse import format_weyl

        return format_weyl(self)

    def __repr__(self):
        return f"WeylElement({self.m}, {str(self)!r})"


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def order_degree(a):
    """Least j with ``a`` in F(j): the top total derivative order.  None for zero."""
    if a.is_zero():
        return None
    m = a.m
    return max(sum(e[m:]) for e in a._terms)


def bernstein_degree(a):
    """Total degree in x's and d's together.  None for zero."""
    if a.is_zero():
        return None
    return max(sum(e) for e in a._terms)


def principal_symbol(a):
    """Image of ``a`` in the graded ring: its top-order part with each d_i read as Y_i."""
    from .symbols import SymbolPoly

    if a.is_zero():
        return SymbolPoly.zero(a.m)
    top = order_degree(a)
    m = a.m
    return SymbolPoly._raw(m, {e: c for e, c in a._terms.items() if sum(e[m:]) == top})

