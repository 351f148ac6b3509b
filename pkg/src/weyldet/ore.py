"""Left common multiples in A_m(Q).

Given nonzero ``a`` and ``b`` we look for ``u, v`` with ``u*a == v*b`` by
iterative deepening on the Bernstein degree of ``u``.  At bound ``d`` the
unknowns are the coefficients of ``u`` (degree <= d) and ``v`` (degree <=
d + deg a - deg b); expanding ``u*a - v*b`` monomial by monomial gives a
homogeneous rational linear system.

Degree bound.  Write N(k) = C(k + 2m, 2m) for the number of monomials of
Bernstein degree <= k.  Bernstein degree is additive on A_m, so ``u*a`` and
``v*b`` both lie in the N(d + deg a)-dimensional slice, while the unknowns
span N(d) + N(d + deg a - deg b) dimensions.  As soon as the unknowns
outnumber the slice the system has a nonzero solution, and N is a polynomial
of degree 2m, so such a d always exists.  :func:`sufficient_bound` returns the
least one and the default search never stops below it.

Selection rule.  Columns are ordered with every ``v`` unknown first, then
the ``u`` unknowns in ascending graded-lex order.  The ``v`` columns are
independent (right multiplication by ``b`` is injective), so the first free
column of the reduced echelon form is a ``u`` column, and the reduced
kernel vector attached to it is the unique solution whose ``u`` has the
smallest possible leading monomial, with leading coefficient 1.
"""

from dataclasses import dataclass
from math import comb

from .errors import BoundExceeded, IndexMismatch, InternalInconsistency, ZeroInput
from .linalg import rational_kernel
from .terms import integer_form, monomials_up_to
from .weyl import WeylElement, bernstein_degree


@dataclass(frozen=True)
class OreSearchConfig:
    initial_bound: int
    max_bound: int
    bound_step: int = 1

    def __post_init__(self):
        if self.initial_bound < 0 or self.initial_bound > self.max_bound:
            raise ValueError("need 0 <= initial_bound <= max_bound")
        if self.bound_step < 1:
            raise ValueError("bound_step must be >= 1")


@dataclass(frozen=True)
class OrePair:
    """``u*a == v*b == common_multiple`` for the inputs the pair was built from."""

    u: WeylElement
    v: WeylElement
    common_multiple: WeylElement

    def __post_init__(self):
        if self.u.is_zero() or self.v.is_zero() or self.common_multiple.is_zero():
            raise InternalInconsistency("Ore pair with a zero component")

    def holds_for(self, a, b):
        return self.u * a == self.common_multiple == self.v * b


def _slice_size(m, k):
    return comb(k + 2 * m, 2 * m) if k >= 0 else 0


def sufficient_bound(m, deg_a, deg_b):
    """Least d >= max(deg_a, deg_b) at which a dimension count forces a solution."""
    d = max(deg_a, deg_b)
    while (
        _slice_size(m, d) + _slice_size(m, d + deg_a - deg_b)
        <= _slice_size(m, d + deg_a)
    ):
        d += 1
    return d


def default_config(a, b, max_bound=None):
    """initial = max Bernstein degree, step 1, cap = initial + 12 (never below the
    dimension-count bound).  An explicit ``max_bound`` overrides the cap."""
    da, db = bernstein_degree(a), bernstein_degree(b)
    initial = max(da, db)
    if max_bound is None:
        max_bound = max(initial + 12, sufficient_bound(a.m, da, db))
    return OreSearchConfig(initial, max(initial, max_bound), 1)


def _shift_products(monos, elem_terms, m, sign):
    """Columns ``sign * mu * elem`` for each monomial mu, as integer term maps."""
    one = WeylElement._raw
    cols = []
    for mu in monos:
        prod = one(m, {mu: 1}) * one(m, elem_terms)
        cols.append({e: sign * int(c) for e, c in prod._terms.items()})
    return cols


def left_ore_pair(a, b, cfg=None, backend="auto"):
    """Return an :class:`OrePair` with ``u*a == v*b``.

    Raises ZeroInput for a zero argument and BoundExceeded when no solution
    exists with ``deg u <= cfg.max_bound``.
    """
    if a.m != b.m:
        raise IndexMismatch(f"Weyl indices differ: {a.m} vs {b.m}")
    if a.is_zero() or b.is_zero():
        raise ZeroInput("left Ore pair of a zero element")
    if cfg is None:
        cfg = default_config(a, b)
    m = a.m
    n_vars = 2 * m
    # integral copies keep the linear system over Z
    den_a, ia = integer_form(a._terms)
    den_b, ib = integer_form(b._terms)
    da, db = bernstein_degree(a), bernstein_degree(b)

    for d in range(cfg.initial_bound, cfg.max_bound + 1, cfg.bound_step):
        dv = d + da - db
        if dv < 0:
            continue
        u_monos = monomials_up_to(n_vars, d)
        v_monos = monomials_up_to(n_vars, dv)
        cols = _shift_products(v_monos, ib, m, -1) + _shift_products(u_monos, ia, m, 1)
        support = sorted({e for col in cols for e in col})
        row_of = {e: i for i, e in enumerate(support)}
        system = [[0] * len(cols) for _ in support]
        for j, col in enumerate(cols):
            for e, c in col.items():
                system[row_of[e]][j] = c
        basis = rational_kernel(system, len(cols), backend=backend)
        if not basis:
            continue
        nv = len(v_monos)
        vec = min(basis, key=lambda x: max(j for j, c in enumerate(x) if c))
        lead = max(j for j, c in enumerate(vec) if c)
        if lead < nv:
            raise InternalInconsistency("kernel vector without a u-part")
        u_int = WeylElement(m, {u_monos[j]: vec[nv + j] for j in range(len(u_monos))})
        v_int = WeylElement(m, {v_monos[j]: vec[j] for j in range(nv)})
        # u_int * (den_a a) == v_int * (den_b b)
        u = u_int.scale(den_a)
        v = v_int.scale(den_b)
        lc = u.leading_coefficient()
        u, v = u.scale(1 / lc), v.scale(1 / lc)
        ua, vb = u * a, v * b
        if ua != vb:
            raise InternalInconsistency("Ore identity failed after kernel solve")
        return OrePair(u, v, ua)
    raise BoundExceeded(
        f"no left common multiple with deg u <= {cfg.max_bound} "
        f"(deg a = {da}, deg b = {db})"
    )
