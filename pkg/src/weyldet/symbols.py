"""The graded ring of principal symbols, Q[x1..xm, Y1..Ym].

Values of the determinant live here.  Only the pieces the determinant needs
are provided: ring arithmetic, Y-homogeneity, exact division by a single
divisor and the classical determinant.
"""

from fractions import Fraction

from .errors import DivisionByZero, IndexMismatch, NotDivisible
from .terms import add_terms, as_fraction, clean, grlex_key


class SymbolPoly:
    """Immutable commutative polynomial over Q in x1..xm, Y1..Ym.

    Exponent tuples have ``2*m`` slots: x-powers first, then Y-powers.
    """

    __slots__ = ("m", "_terms", "_hash")

    def __init__(self, m, terms=None):
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
        return cls._raw(m, {tuple(exp): Fraction(1)})

    @classmethod
    def y(cls, i, m, power=1):
        exp = [0] * (2 * m)
        exp[m + i - 1] = power
        return cls._raw(m, {tuple(exp): Fraction(1)})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(e) for e in self._terms)

    def y_degrees(self):
        m = self.m
        return {sum(e[m:]) for e in self._terms}

    def leading_monomial(self):
        if not self._terms:
            return None
        return max(self._terms, key=grlex_key)

    def _check(self, other):
        if isinstance(other, SymbolPoly):
            if other.m != self.m:
                raise IndexMismatch(f"symbol indices differ: {self.m} vs {other.m}")
            return other
        try:
            return SymbolPoly.const(other, self.m)
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return SymbolPoly._raw(self.m, add_terms(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return SymbolPoly._raw(self.m, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return SymbolPoly._raw(self.m, add_terms(self._terms, other._terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return sym_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = SymbolPoly.one(self.m)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, SymbolPoly):
            return self.m == other.m and self._terms == other._terms
        if isinstance(other, int) or hasattr(other, "denominator"):
            if not self.is_constant():
                return False
            return self._terms.get((0,) * (2 * self.m), 0) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.m, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        from .parse import format_symbol

        return format_symbol(self)

    def __repr__(self):
        return f"SymbolPoly({self.m}, {str(self)!r})"


def sym_mul(p, q):
    if p.m != q.m:
        raise IndexMismatch(f"symbol indices differ: {p.m} vs {q.m}")
    out = {}
    get = out.get
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = get(e, 0) + c1 * c2
    return SymbolPoly._raw(p.m, {e: c for e, c in out.items() if c})


def is_homogeneous_in_y(p):
    """True iff all terms share one total Y-degree (vacuously true for 0)."""
    return len(p.y_degrees()) <= 1


def exact_div(p, q):
    """Quotient ``r`` with ``r * q == p``; raises NotDivisible if q does not divide p.

    Single-divisor division in graded-lex order.  When ``q`` divides ``p`` the
    leading monomial of ``q`` divides the leading monomial of every remainder
    step, so the first failure proves non-divisibility.
    """
    if p.m != q.m:
        raise IndexMismatch(f"symbol indices differ: {p.m} vs {q.m}")
    if q.is_zero():
        raise DivisionByZero("division by the zero symbol")
    lq = q.leading_monomial()
    cq = q._terms[lq]
    rest = p._terms
    quotient = {}
    while rest:
        lp = max(rest, key=grlex_key)
        shift = tuple(a - b for a, b in zip(lp, lq))
        if any(s < 0 for s in shift):
            raise NotDivisible(f"{q} does not divide {p}")
        c = rest[lp] / cq
        quotient[shift] = c
        step = {tuple(a + b for a, b in zip(shift, e)): v * c for e, v in q._terms.items()}
        rest = add_terms(rest, step, -1)
    return SymbolPoly._raw(p.m, quotient)


def commutative_det(rows, m=None):
    """Classical determinant of a square matrix of SymbolPoly entries.

    Fraction-free Bareiss elimination; every division is exact.  The 0x0
    determinant is 1.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if m is None:
        if n == 0:
            raise ValueError("index m required for the empty matrix")
        m = rows[0][0].m
    if n == 0:
        return SymbolPoly.one(m)
    a = [list(r) for r in rows]
    sign = 1
    prev = SymbolPoly.one(m)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for r in range(k + 1, n):
                if not a[r][k].is_zero():
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return SymbolPoly.zero(m)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det

