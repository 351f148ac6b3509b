"""Exact null spaces of rational matrices.

The kernel basis returned is the reduced one: one vector per free column
``f`` of the reduced row echelon form, with a 1 in position ``f``, 0 at the
other free columns, and the pivot coordinates solved for.  That basis is
unique given the column order, so every backend returns identical output.

Two backends compute it.  ``"python"`` is a fraction-free (Bareiss) forward
elimination followed by rational back-substitution.  ``"flint"`` hands the
integer matrix to FLINT's fraction-free rref; it is only a speed path for
the large systems produced by the Ore search.
"""

from fractions import Fraction
from math import lcm

try:
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None

# below this many entries the pure-Python route is as fast as the FLINT round trip
_FLINT_THRESHOLD = 400


def _integer_rows(system):
    rows = []
    for row in system:
        if all(type(c) is int for c in row):
            rows.append(list(row))
            continue
        row = [Fraction(c) for c in row]
        den = 1
        for c in row:
            den = lcm(den, c.denominator)
        rows.append([c.numerator * (den // c.denominator) for c in row])
    return rows


def _echelon_bareiss(rows, ncols):
    """Fraction-free forward elimination in place; returns the pivot columns.

    Pivot search scans rows top to bottom and takes the first nonzero entry.
    """
    nrows = len(rows)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        prow = rows[r]
        pc = prow[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            ic = row[c]
            for j in range(c + 1, ncols):
                row[j] = (pc * row[j] - ic * prow[j]) // prev
            row[c] = 0
        prev = pc
        pivots.append(c)
        r += 1
    return pivots


def _kernel_python(rows, ncols):
    pivots = _echelon_bareiss(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            row = rows[i]
            p = pivots[i]
            s = sum(row[j] * x[j] for j in range(p + 1, ncols) if row[j] and x[j])
            x[p] = Fraction(-s) / row[p]
        basis.append(x)
    return basis


def _kernel_flint(rows, ncols):
    nrows = len(rows)
    flat = [c for row in rows for c in row]
    R, den, rank = flint.fmpz_mat(nrows, ncols, flat).rref()
    den = int(den)
    pivots = []
    for i in range(rank):
        j = next(j for j in range(ncols) if R[i, j] != 0)
        pivots.append(j)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v = int(R[i, f])
            if v:
                x[p] = Fraction(-v, den)
        basis.append(x)
    return basis


def rational_kernel(system, ncols=None, backend="auto"):
    """Reduced basis of the null space of ``system`` (a list of rows).

    ``ncols`` is needed only when ``system`` has no rows.  ``backend`` is
    ``"python"``, ``"flint"`` or ``"auto"``.
    """
    if ncols is None:
        if not system:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(system[0])
    if any(len(row) != ncols for row in system):
        raise ValueError("ragged matrix")
    rows = _integer_rows(system)
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == f)) for i in range(ncols)] for f in range(ncols)]
    if backend == "auto":
        big = len(rows) * ncols > _FLINT_THRESHOLD
        backend = "flint" if flint is not None and big else "python"
    if backend == "flint":
        if flint is None:
            raise RuntimeError("python-flint is not installed")
        return _kernel_flint(rows, ncols)
    if backend == "python":
        return _kernel_python(rows, ncols)
    raise ValueError(f"unknown backend {backend!r}")
