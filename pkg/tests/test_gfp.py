import itertools
import random

import pytest

from burgebox.gfp import MatrixGFp, is_prime, rank_of, row_echelon_basis


def det_mod(rows, p):
    # Leibniz determinant, fine for the tiny oracle sizes used here
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total % p


def brute_rank(rows, p):
    # largest r with a nonsingular r x r submatrix
    m, n = len(rows), len(rows[0]) if rows else 0
    for r in range(min(m, n), 0, -1):
        for ri in itertools.combinations(range(m), r):
            for ci in itertools.combinations(range(n), r):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if det_mod(sub, p) != 0:
                    return r
    return 0


def test_is_prime():
    assert [x for x in range(20) if is_prime(x)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(10007)
    assert not is_prime(10005)


def test_construction_reduces_mod_p():
    m = MatrixGFp([[5, -1], [7, 3]], 5)
    assert m.rows == ((0, 4), (2, 3))
    with pytest.raises(ValueError):
        MatrixGFp([[1, 2], [3]], 5)
    with pytest.raises(ValueError):
        MatrixGFp([[1]], 6)


def test_arithmetic():
    p = 7
    a = MatrixGFp([[1, 2], [3, 4]], p)
    b = MatrixGFp([[0, 1], [1, 0]], p)
    assert (a + b).rows == ((1, 3), (4, 4))
    assert (a - b).rows == ((1, 1), (2, 4))
    assert (a @ b).rows == ((2, 1), (4, 3))
    i = MatrixGFp.identity(2, p)
    assert a @ i == a and i @ a == a
    assert MatrixGFp.zero(2, 3, p).is_zero()
    with pytest.raises(ValueError):
        a @ MatrixGFp([[1]], 5)


def test_power():
    j = MatrixGFp([[0, 1, 0], [0, 0, 1], [0, 0, 0]], 2)
    assert j.power(0) == MatrixGFp.identity(3, 2)
    assert j.power(2).rows == ((0, 0, 1), (0, 0, 0), (0, 0, 0))
    assert j.power(3).is_zero()
    assert j.is_nilpotent()
    assert not MatrixGFp.identity(3, 2).is_nilpotent()


def test_mat_vec():
    a = MatrixGFp([[1, 2], [3, 4]], 5)
    assert a.mat_vec((1, 1)) == (3, 2)
    with pytest.raises(ValueError):
        a.mat_vec((1, 1, 1))


def test_rank_against_brute_force():
    rng = random.Random(11)
    for p in (2, 3, 7):
        for _ in range(120):
            m = rng.randrange(1, 5)
            n = rng.randrange(1, 5)
            rows = [[rng.randrange(p) for _ in range(n)] for _ in range(m)]
            assert MatrixGFp(rows, p).rank() == brute_rank(rows, p)


def test_row_echelon_basis_canonical():
    p = 5
    vecs = [(1, 2, 0), (2, 4, 0), (0, 0, 3)]
    basis = row_echelon_basis(vecs, p)
    assert basis == [(1, 2, 0), (0, 0, 1)]
    # span equality gives identical canonical bases
    shuffled = [(0, 0, 1), (1, 2, 3), (3, 6, 0)]
    assert row_echelon_basis(shuffled, p) == basis
    assert rank_of(vecs, p) == 2
    assert row_echelon_basis([], p) == []
    assert row_echelon_basis([(0, 0)], p) == []


def test_empty_matrix():
    e = MatrixGFp([], 2)
    assert e.nrows == 0 and e.ncols == 0
    assert e.rank() == 0
    assert e.is_zero()
    assert e.is_nilpotent()
