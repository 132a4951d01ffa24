import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cohomforms.arith import CycloNum
from cohomforms.exactla import ExactMat, matmul, nullspace, rank, rref


def random_matrix(rng, rows, cols, field=None, density=0.5, rank_cap=None):
    def entry():
        if rng.random() > density:
            return 0
        if field is None:
            return Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        return CycloNum(field, [rng.randint(-3, 3) for _ in range(4)])
    if rank_cap is None:
        return ExactMat([[entry() for _ in range(cols)] for _ in range(rows)], cols)
    A = ExactMat([[entry() for _ in range(rank_cap)] for _ in range(rows)], rank_cap)
    B = ExactMat([[entry() for _ in range(cols)] for _ in range(rank_cap)], cols)
    return A @ B


def is_rref(R):
    lead = -1
    for row in R.data:
        nz = [j for j, x in enumerate(row) if x]
        assert nz, "zero row left in rref"
        assert nz[0] > lead
        lead = nz[0]
        assert row[lead] == 1
        for other in R.data:
            if other is not row:
                assert not other[lead]
    return True


@pytest.mark.parametrize("seed", range(50))
def test_rank_nullity_rational(seed):
    rng = random.Random(seed)
    A = random_matrix(rng, rng.randint(1, 9), rng.randint(1, 9), rank_cap=rng.randint(1, 5))
    Nl = nullspace(A)
    assert rank(A) + Nl.rows == A.cols
    assert (A @ Nl.T).is_zero() if Nl.rows else True
    R, rk, piv = rref(A)
    assert is_rref(R) and rk == rank(A) == len(piv)


@pytest.mark.parametrize("seed", range(50))
def test_rank_nullity_cyclotomic(seed):
    rng = random.Random(1000 + seed)
    A = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), field=12, rank_cap=rng.randint(1, 4))
    Nl = nullspace(A)
    assert rank(A) + Nl.rows == A.cols
    if Nl.rows:
        assert (A @ Nl.T).is_zero()
    assert is_rref(rref(A)[0])


@settings(max_examples=40)
@given(st.integers(0, 10**6))
def test_rref_is_canonical_under_row_operations(seed):
    rng = random.Random(seed)
    A = random_matrix(rng, 5, 6, rank_cap=3)
    # scramble: random invertible combination of rows
    U = ExactMat([[Fraction(rng.randint(-3, 3)) for _ in range(5)] for _ in range(5)], 5)
    if rank(U) < 5:
        return
    assert rref(U @ A)[0] == rref(A)[0]


def test_small_examples():
    A = ExactMat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    R, rk, piv = rref(A)
    assert rk == 2 and piv == [0, 1]
    assert R.tolist() == [[1, 0, 1], [0, 1, 1]]
    assert nullspace(A).tolist() == [[1, 1, -1]]
    assert rank(ExactMat.zeros(3, 4)) == 0
    assert nullspace(ExactMat.identity(3)).rows == 0


def test_big_integers_stay_exact():
    big = 10**40 + 7
    A = ExactMat([[big, 1], [1, Fraction(1, big)]])
    assert rank(A) == 1
    B = ExactMat([[big, 1], [1, Fraction(2, big)]])
    assert rank(B) == 2


def test_matrix_helpers():
    A = ExactMat([[1, 2], [3, 4]])
    assert (A + A) == A.scale(2)
    assert (A - A).is_zero()
    assert A.T.tolist() == [[1, 3], [2, 4]]
    assert matmul(A, ExactMat.identity(2)) == A
    assert A.nnz() == 4 and A.shape == (2, 2)
    with pytest.raises(ValueError):
        A @ ExactMat.zeros(3, 1)
    with pytest.raises(ValueError):
        ExactMat([[1], [1, 2]])
