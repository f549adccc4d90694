"""Exact dense linear algebra over a prime field GF(p).

Matrices are immutable: rows are stored as a tuple of tuples with entries
already reduced mod p.  Everything is plain integer arithmetic, so results
are exact for any prime modulus; pivoting uses modular inverses via
``pow(x, -1, p)``.  Sizes in this project stay tiny (n <= ~20), so no
effort is spent on blocking or bit packing.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


class MatrixGFp:
    """A dense matrix over GF(p)."""

    __slots__ = ("p", "rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence[int]], p: int):
        self.p = check_prime(p)
        self.rows = tuple(tuple(x % p for x in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged rows")

    @classmethod
    def zero(cls, nrows: int, ncols: int, p: int) -> "MatrixGFp":
        return cls([[0] * ncols for _ in range(nrows)], p)

    @classmethod
    def identity(cls, n: int, p: int) -> "MatrixGFp":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixGFp)
            and self.p == other.p
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.p, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"MatrixGFp[{self.nrows}x{self.ncols} mod {self.p}]({body})"

    def __add__(self, other: "MatrixGFp") -> "MatrixGFp":
        self._check_compat(other, same_shape=True)
        return MatrixGFp(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.p,
        )

    def __sub__(self, other: "MatrixGFp") -> "MatrixGFp":
        self._check_compat(other, same_shape=True)
        return MatrixGFp(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.p,
        )

    def __matmul__(self, other: "MatrixGFp") -> "MatrixGFp":
        self._check_compat(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.ncols} != {other.nrows}")
        cols = list(zip(*other.rows)) if other.rows else []
        p = self.p
        return MatrixGFp(
            [[sum(a * b for a, b in zip(row, col)) % p for col in cols] for row in self.rows],
            p,
        )

    def _check_compat(self, other: "MatrixGFp", same_shape: bool = False) -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")
        if same_shape and (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def power(self, k: int) -> "MatrixGFp":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        result = MatrixGFp.identity(self.nrows, self.p)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def mat_vec(self, vec: Sequence[int]) -> tuple:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        p = self.p
        return tuple(sum(a * b for a, b in zip(row, vec)) % p for row in self.rows)

    def columns(self) -> list:
        return [tuple(col) for col in zip(*self.rows)] if self.rows else []

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def rank(self) -> int:
        return len(row_echelon_basis(self.rows, self.p))

    def is_nilpotent(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return self.power(self.nrows).is_zero()


def row_echelon_basis(vectors: Iterable[Sequence[int]], p: int) -> list:
    """Reduced row-echelon basis of the span of the given vectors.

    Returns a list of tuples (possibly empty); its length is the rank.
    The output is canonical for the span, so two spans are equal iff their
    bases compare equal.
    """
    check_prime(p)
    basis: list = []  # rows in echelon order, paired with pivot column
    pivots: list = []
    for vec in vectors:
        v = [x % p for x in vec]
        for row, col in zip(basis, pivots):
            if v[col]:
                c = v[col]
                v = [(a - c * b) % p for a, b in zip(v, row)]
        lead = next((j for j, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = pow(v[lead], -1, p)
        v = [(x * inv) % p for x in v]
        # back-substitute to keep earlier rows reduced
        for idx, (row, col) in enumerate(zip(basis, pivots)):
            if row[lead]:
                c = row[lead]
                basis[idx] = [(a - c * b) % p for a, b in zip(row, v)]
        basis.append(v)
        pivots.append(lead)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [tuple(basis[i]) for i in order]


def rank_of(vectors: Iterable[Sequence[int]], p: int) -> int:
    return len(row_echelon_basis(vectors, p))
