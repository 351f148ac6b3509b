"""Square matrices over A_m(Q).

Row and column indices are 1-based wherever they appear in a public
interface (descriptors, traces, printed output); the ``entries`` tuple is of
course indexed from 0.
"""

from dataclasses import dataclass

from .errors import BadIndices, IndexMismatch, SizeMismatch
from .weyl import WeylElement


class WeylMatrix:
    """Immutable n x n matrix with entries in A_m(Q)."""

    __slots__ = ("m", "n", "entries")

    def __init__(self, m, entries):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise SizeMismatch("matrix must be square")
        fixed = []
        for r in rows:
            row = []
            for e in r:
                if not isinstance(e, WeylElement):
                    e = WeylElement.const(e, m)
                elif e.m != m:
                    raise IndexMismatch(f"entry has index {e.m}, matrix has {m}")
                row.append(e)
            fixed.append(tuple(row))
        self.m = m
        self.n = n
        self.entries = tuple(fixed)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self):
        return [list(r) for r in self.entries]

    def __mul__(self, other):
        return mat_mul(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, WeylMatrix):
            return NotImplemented
        return self.m == other.m and self.entries == other.entries

    def __hash__(self):
        return hash((self.m, self.entries))

    def is_upper_triangular(self):
        return all(self.entries[i][j].is_zero() for i in range(self.n) for j in range(i))

    def is_lower_triangular(self):
        return all(
            self.entries[i][j].is_zero() for i in range(self.n) for j in range(i + 1, self.n)
        )

    def diagonal(self):
        return [self.entries[i][i] for i in range(self.n)]

    def __str__(self):
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries)

    def __repr__(self):
        return f"WeylMatrix(m={self.m}, n={self.n})"


@dataclass(frozen=True)
class ElementaryDescriptor:
    """E_{row,col}(coefficient) of size ``size``; indices are 1-based."""

    size: int
    row: int
    col: int
    coefficient: WeylElement

    def __post_init__(self):
        if self.row == self.col:
            raise BadIndices("elementary matrix needs row != col")
        if not (1 <= self.row <= self.size and 1 <= self.col <= self.size):
            raise BadIndices(f"indices ({self.row}, {self.col}) out of range for size {self.size}")

    def inverse(self):
        return ElementaryDescriptor(self.size, self.row, self.col, -self.coefficient)

    def __str__(self):
        return f"E_{self.row},{self.col}({self.coefficient})"


def identity(m, n):
    one, zero = WeylElement.one(m), WeylElement.zero(m)
    return WeylMatrix(m, [[one if i == j else zero for j in range(n)] for i in range(n)])


def elementary(desc):
    m = desc.coefficient.m
    rows = identity(m, desc.size).rows()
    rows[desc.row - 1][desc.col - 1] = desc.coefficient
    return WeylMatrix(m, rows)


def diagonal(elements, m=None):
    elements = list(elements)
    if m is None:
        m = elements[0].m
    zero = WeylElement.zero(m)
    n = len(elements)
    return WeylMatrix(m, [[elements[i] if i == j else zero for j in range(n)] for i in range(n)])


def diag_first(x, n):
    """diag(x, 1, ..., 1) of size n."""
    if n < 1:
        raise SizeMismatch("diag_first needs n >= 1")
    return diagonal([x] + [WeylElement.one(x.m)] * (n - 1), x.m)


def permutation(m, n, i, j):
    """Identity with rows i and j (1-based) exchanged."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise BadIndices(f"bad transposition ({i}, {j}) for size {n}")
    rows = identity(m, n).rows()
    rows[i - 1], rows[j - 1] = rows[j - 1], rows[i - 1]
    return WeylMatrix(m, rows)


def mat_mul(A, B):
    if A.m != B.m:
        raise IndexMismatch(f"matrix indices differ: {A.m} vs {B.m}")
    if A.n != B.n:
        raise SizeMismatch(f"matrix sizes differ: {A.n} vs {B.n}")
    n, m = A.n, A.m
    zero = WeylElement.zero(m)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = zero
            for k in range(n):
                a, b = A.entries[i][k], B.entries[k][j]
                if a and b:
                    s = s + a * b
            row.append(s)
        out.append(row)
    return WeylMatrix(m, out)


def direct_sum(A, B):
    if A.m != B.m:
        raise IndexMismatch(f"matrix indices differ: {A.m} vs {B.m}")
    m = A.m
    zero = WeylElement.zero(m)
    n = A.n + B.n
    rows = [[zero] * n for _ in range(n)]
    for i in range(A.n):
        for j in range(A.n):
            rows[i][j] = A.entries[i][j]
    for i in range(B.n):
        for j in range(B.n):
            rows[A.n + i][A.n + j] = B.entries[i][j]
    return WeylMatrix(m, rows)


def is_in_f0(A):
    """True iff no entry involves a derivative, i.e. A lies in M_n(Q[x])."""
    return all(e.in_f0() for r in A.entries for e in r)


def product_of_word(word, m, n):
    """Ordered product E(word[0]) * E(word[1]) * ... (identity for the empty word)."""
    rows = identity(m, n).rows()
    for desc in word:
        if desc.size != n:
            raise SizeMismatch(f"descriptor of size {desc.size} in a word of size {n}")
        if desc.coefficient.m != m:
            raise IndexMismatch(f"descriptor index {desc.coefficient.m}, expected {m}")
        # right multiplication by E_ij(c): column j += column i * c
        i, j, c = desc.row - 1, desc.col - 1, desc.coefficient
        for r in rows:
            if r[i]:
                r[j] = r[j] + r[i] * c
    return WeylMatrix(m, rows)
