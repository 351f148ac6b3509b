import random
from fractions import Fraction

import pytest

from weyldet.linalg import rational_kernel

BACKENDS = ["python", "flint"]


def matvec(rows, x):
    return [sum(Fraction(c) * v for c, v in zip(row, x)) for row in rows]


@pytest.mark.parametrize("backend", BACKENDS)
class TestExamples:
    def test_identity_has_trivial_kernel(self, backend):
        assert rational_kernel([[1, 0], [0, 1]], backend=backend) == []

    def test_single_row(self, backend):
        basis = rational_kernel([[1, 1]], backend=backend)
        assert basis == [[-1, 1]]

    def test_zero_row(self, backend):
        basis = rational_kernel([[0, 0]], backend=backend)
        assert len(basis) == 2
        assert basis == [[1, 0], [0, 1]]

    def test_rational_entries(self, backend):
        rows = [[Fraction(1, 2), Fraction(1, 3), 1]]
        (v1, v2) = rational_kernel(rows, backend=backend)
        assert matvec(rows, v1) == [0] and matvec(rows, v2) == [0]


def test_no_rows():
    assert rational_kernel([], ncols=2) == [[1, 0], [0, 1]]


def test_ragged_rejected():
    with pytest.raises(ValueError):
        rational_kernel([[1, 2], [3]])


def test_backends_agree_and_basis_is_reduced():
    rng = random.Random(7)
    for _ in range(60):
        r, c = rng.randint(1, 8), rng.randint(1, 9)
        rank_cap = rng.randint(1, min(r, c))
        # low-rank product so kernels are usually nontrivial
        L = [[rng.randint(-4, 4) for _ in range(rank_cap)] for _ in range(r)]
        R = [[rng.randint(-4, 4) for _ in range(c)] for _ in range(rank_cap)]
        rows = [[sum(L[i][k] * R[k][j] for k in range(rank_cap)) for j in range(c)] for i in range(r)]
        py = rational_kernel(rows, backend="python")
        fl = rational_kernel(rows, backend="flint")
        assert py == fl
        free = [max(j for j, v in enumerate(x) if v) for x in py]
        for x, f in zip(py, free):
            assert matvec(rows, x) == [0] * r
            assert x[f] == 1
            assert all(x[g] == 0 for g in free if g != f)


def test_dimension_matches_rank():
    import sympy

    rng = random.Random(11)
    for _ in range(20):
        rows = [[rng.randint(-2, 2) for _ in range(6)] for _ in range(4)]
        assert len(rational_kernel(rows, backend="python")) == 6 - sympy.Matrix(rows).rank()
