"""The canonical determinant det_F over A_m(Q), computed by Gauss elimination.

Each elimination step left-multiplies the working matrix by an elementary
matrix, a diagonal matrix with one nonzero (cancellable) entry, or a row
transposition.  With the multipliers p_1, ..., p_r satisfying
``p_1 ... p_r A = T`` (T upper triangular),

    det_F(A) = prod sigma(T[i][i]) / prod_k prod_i sigma(p_k[i][i])

where sigma is the principal symbol.  Elementary multipliers contribute 1,
a scaling by ``v`` contributes sigma(v), and a transposition contributes -1.
The quotient is always exact in the symbol ring; a failed division is an
internal error, never a fractional answer.
"""

from dataclasses import dataclass, field

from .errors import InternalInconsistency, NotDivisible, NotTriangular, SizeMismatch
from .matrix import (
    ElementaryDescriptor,
    WeylMatrix,
    diagonal,
    elementary,
    mat_mul,
    permutation,
    product_of_word,
)
from .ore import default_config, left_ore_pair
from .symbols import SymbolPoly, exact_div, is_homogeneous_in_y
from .weyl import WeylElement, bernstein_degree, principal_symbol

PIVOT_STRATEGIES = ("min-degree", "first-nonzero", "max-degree")


@dataclass(frozen=True)
class Elementary:
    desc: ElementaryDescriptor

    def matrix(self, m, n):
        return elementary(self.desc)

    def symbol_factor(self, m):
        return SymbolPoly.one(m)

    def __str__(self):
        return f"Elementary {self.desc}"


@dataclass(frozen=True)
class ScalingDiagonal:
    position: int
    factor: WeylElement

    def __post_init__(self):
        if self.factor.is_zero():
            raise ValueError("scaling factor must be nonzero")

    def matrix(self, m, n):
        one = WeylElement.one(m)
        return diagonal([self.factor if i == self.position - 1 else one for i in range(n)], m)

    def symbol_factor(self, m):
        return principal_symbol(self.factor)

    def __str__(self):
        return f"ScalingDiagonal row {self.position} by ({self.factor})"


@dataclass(frozen=True)
class Permutation:
    row_a: int
    row_b: int

    def __post_init__(self):
        if self.row_a == self.row_b:
            raise ValueError("permutation rows must differ")

    def matrix(self, m, n):
        return permutation(m, n, self.row_a, self.row_b)

    def symbol_factor(self, m):
        return SymbolPoly.const(-1, m)

    def __str__(self):
        return f"Permutation rows {self.row_a} <-> {self.row_b}"


@dataclass(frozen=True)
class ReductionTrace:
    """``steps[0] * steps[1] * ... * steps[-1] * A == triangular``.

    ``steps[-1]`` is the first multiplier applied to A, ``steps[0]`` the last.
    """

    steps: tuple
    triangular: WeylMatrix

    def replay(self, A):
        """Apply the steps to ``A`` as left multiplications and return the result."""
        result = A
        for step in reversed(self.steps):
            result = mat_mul(step.matrix(A.m, A.n), result)
        return result

    def verify(self, A):
        return self.replay(A) == self.triangular and self.triangular.is_upper_triangular()


@dataclass(frozen=True)
class DetResult:
    value: SymbolPoly
    numerator: SymbolPoly
    denominator: SymbolPoly
    trace: ReductionTrace = field(repr=False)


def _choose_pivot(candidates, rows, col, strategy):
    if strategy == "first-nonzero":
        return candidates[0]
    if strategy == "min-degree":
        return min(candidates, key=lambda r: (bernstein_degree(rows[r][col]), r))
    if strategy == "max-degree":
        return min(candidates, key=lambda r: (-bernstein_degree(rows[r][col]), r))
    raise ValueError(f"unknown pivot strategy {strategy!r}")


def gauss_reduce(A, pivot="min-degree", max_bound=None):
    """Reduce ``A`` to upper-triangular form, recording every left multiplier.

    For each column a pivot is chosen among the nonzero entries on or below
    the diagonal and swapped into place.  Each lower entry ``e`` is cleared
    with a left Ore pair ``u*pivot == v*e``: row := v*row, then
    row := row - u*pivot_row.  A scaling by exactly 1 is not recorded.
    """
    n, m = A.n, A.m
    rows = A.rows()
    applied = []
    for col in range(n):
        candidates = [r for r in range(col, n) if rows[r][col]]
        if not candidates:
            continue
        p = _choose_pivot(candidates, rows, col, pivot)
        if p != col:
            rows[p], rows[col] = rows[col], rows[p]
            applied.append(Permutation(col + 1, p + 1))
        piv_row = rows[col]
        piv = piv_row[col]
        for r in range(col + 1, n):
            e = rows[r][col]
            if e.is_zero():
                continue
            cfg = default_config(piv, e, max_bound)
            pair = left_ore_pair(piv, e, cfg)
            u, v = pair.u, pair.v
            if v != 1:
                applied.append(ScalingDiagonal(r + 1, v))
                rows[r] = [v * x if x else x for x in rows[r]]
            applied.append(Elementary(ElementaryDescriptor(n, r + 1, col + 1, -u)))
            rows[r] = [
                rows[r][j] - u * piv_row[j] if piv_row[j] else rows[r][j] for j in range(n)
            ]
            if rows[r][col]:
                raise InternalInconsistency("Ore step failed to clear the entry")
    return ReductionTrace(tuple(reversed(applied)), WeylMatrix(m, rows))


def det_f(A, pivot="min-degree", max_bound=None):
    """det_F of a square matrix over A_m(Q), with its provenance."""
    m = A.m
    trace = gauss_reduce(A, pivot=pivot, max_bound=max_bound)
    numerator = SymbolPoly.one(m)
    for e in trace.triangular.diagonal():
        numerator = numerator * principal_symbol(e)
    denominator = SymbolPoly.one(m)
    for step in trace.steps:
        denominator = denominator * step.symbol_factor(m)
    if numerator.is_zero():
        return DetResult(numerator, numerator, denominator, trace)
    try:
        value = exact_div(numerator, denominator)
    except NotDivisible as exc:
        raise InternalInconsistency(
            f"symbol quotient is not exact: ({numerator}) / ({denominator})"
        ) from exc
    if not is_homogeneous_in_y(value):
        raise InternalInconsistency(f"determinant {value} is not homogeneous in Y")
    return DetResult(value, numerator, denominator, trace)


def det_f_triangular(T):
    """Product of the principal symbols of the diagonal of a triangular matrix."""
    if not (T.is_upper_triangular() or T.is_lower_triangular()):
        raise NotTriangular("matrix is neither upper nor lower triangular")
    value = SymbolPoly.one(T.m)
    for e in T.diagonal():
        value = value * principal_symbol(e)
    return value


def is_invertible(A, **kwargs):
    """A is invertible over A_m(Q) iff det_F(A) is a nonzero rational."""
    value = det_f(A, **kwargs).value
    return not value.is_zero() and value.is_constant()


def verify_elementary_product(word, A):
    """True iff the ordered product of the elementary matrices in ``word`` is A.

    On success det_F(A) == 1 is cross-checked and a violation raised loudly.
    """
    for desc in word:
        if desc.size != A.n:
            raise SizeMismatch(f"descriptor of size {desc.size} against a {A.n}x{A.n} matrix")
    if product_of_word(word, A.m, A.n) != A:
        return False
    if det_f(A).value != 1:
        raise InternalInconsistency("product of elementary matrices with det_F != 1")
    return True


@dataclass(frozen=True)
class DetOneReport:
    n: int
    value: SymbolPoly
    is_one: bool
    verdict: str

    def __str__(self):
        return f"det_F = {self.value}\nverdict: {self.verdict}"


def check_det_one(A):
    """Classify A by whether det_F(A) == 1 and what that implies for its size."""
    value = det_f(A).value
    n = A.n
    if value != 1:
        verdict = "det ≠ 1"
    elif n >= 3:
        verdict = f"member of E_{n} by the Theorem (non-constructive)"
    elif n == 2:
        verdict = (
            "stably elementary; E_2 membership undecided "
            "(cf. Cohn example, conjecturally not in E_2)"
        )
    else:
        verdict = f"identity matrix; E_{n} is trivial"
    return DetOneReport(n, value, value == 1, verdict)
