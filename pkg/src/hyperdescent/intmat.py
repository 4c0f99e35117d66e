"""Exact integer matrices and Smith normal form.

Matrices are immutable (rows x cols tuples of Python ints, arbitrary
precision).  Products go through numpy int64 when a safe entry bound holds
and fall back to object dtype otherwise, so results are always exact.

smith_normal_form certifies itself on every call: it re-multiplies
U*M*V == D and proves unimodularity of U and V by checking tracked inverses
(U*Uinv == I forces |det U| == 1 over the integers).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

_INT64_SAFE = 2**62


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows:
            raise ValueError("row count mismatch")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("column count mismatch")

    @staticmethod
    def from_rows(rows, num_cols: int | None = None) -> "Matrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if num_cols is None:
            if not rows:
                raise ValueError("empty matrix needs explicit column count")
            num_cols = len(rows[0])
        return Matrix(len(rows), num_cols, tuple(rows))

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.entries)

    def max_abs(self) -> int:
        best = 0
        for row in self.entries:
            for x in row:
                if x > best:
                    best = x
                elif -x > best:
                    best = -x
        return best

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)))

    def add(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in add")
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.entries, other.entries)))

    def sub(self, other: "Matrix") -> "Matrix":
        return self.add(other.scale(-1))

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(tuple(c * x for x in row) for row in self.entries))

    def mul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in mul")
        return _mat_mul(self, other)

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.entries)


def _to_numpy(M: Matrix, dtype):
    arr = np.zeros((M.rows, M.cols), dtype=dtype)
    for i, row in enumerate(M.entries):
        for j, x in enumerate(row):
            if x:
                arr[i, j] = x
    return arr


def _mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.rows == 0 or B.cols == 0:
        return Matrix.zero(A.rows, B.cols)
    if A.cols == 0:
        return Matrix.zero(A.rows, B.cols)
    bound = A.max_abs() * B.max_abs() * A.cols
    dtype = np.int64 if bound < _INT64_SAFE else object
    C = _to_numpy(A, dtype) @ _to_numpy(B, dtype)
    return Matrix(A.rows, B.cols, tuple(tuple(int(x) for x in row) for row in C))


def block_matrix(blocks, row_dims, col_dims) -> Matrix:
    """Assemble a matrix from a grid of optional blocks (None = zero block)."""
    rows = sum(row_dims)
    cols = sum(col_dims)
    data = [[0] * cols for _ in range(rows)]
    r0 = 0
    for bi, rdim in enumerate(row_dims):
        c0 = 0
        for bj, cdim in enumerate(col_dims):
            blk = blocks[bi][bj]
            if blk is not None:
                if (blk.rows, blk.cols) != (rdim, cdim):
                    raise ValueError("block shape mismatch")
                for i in range(rdim):
                    row = blk.entries[i]
                    tgt = data[r0 + i]
                    for j in range(cdim):
                        if row[j]:
                            tgt[c0 + j] = row[j]
            c0 += cdim
        r0 += rdim
    return Matrix(rows, cols, tuple(tuple(r) for r in data))


class _SmithWorker:
    """Row/column reduction with transformation matrices and their inverses."""

    def __init__(self, M: Matrix):
        self.m = M.rows
        self.n = M.cols
        self.D = [list(row) for row in M.entries]
        self.U = [[1 if i == j else 0 for j in range(self.m)] for i in range(self.m)]
        self.Ui = [row[:] for row in self.U]
        self.V = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        self.Vi = [row[:] for row in self.V]

    # D <- R D keeps U <- R U and Ui <- Ui R^{-1}
    def row_swap(self, i, j):
        if i == j:
            return
        self.D[i], self.D[j] = self.D[j], self.D[i]
        self.U[i], self.U[j] = self.U[j], self.U[i]
        for row in self.Ui:
            row[i], row[j] = row[j], row[i]

    def row_neg(self, i):
        self.D[i] = [-x for x in self.D[i]]
        self.U[i] = [-x for x in self.U[i]]
        for row in self.Ui:
            row[i] = -row[i]

    def row_add(self, i, j, c):
        # r_i += c * r_j
        if c == 0:
            return
        di, dj = self.D[i], self.D[j]
        for k in range(self.n):
            if dj[k]:
                di[k] += c * dj[k]
        ui, uj = self.U[i], self.U[j]
        for k in range(self.m):
            if uj[k]:
                ui[k] += c * uj[k]
        for row in self.Ui:
            if row[i]:
                row[j] -= c * row[i]

    # D <- D C keeps V <- V C and Vi <- C^{-1} Vi
    def col_swap(self, i, j):
        if i == j:
            return
        for row in self.D:
            row[i], row[j] = row[j], row[i]
        for row in self.V:
            row[i], row[j] = row[j], row[i]
        self.Vi[i], self.Vi[j] = self.Vi[j], self.Vi[i]

    def col_neg(self, i):
        for row in self.D:
            row[i] = -row[i]
        for row in self.V:
            row[i] = -row[i]
        self.Vi[i] = [-x for x in self.Vi[i]]

    def col_add(self, j, i, c):
        # c_j += c * c_i
        if c == 0:
            return
        for row in self.D:
            if row[i]:
                row[j] += c * row[i]
        for row in self.V:
            if row[i]:
                row[j] += c * row[i]
        vi, vj = self.Vi[i], self.Vi[j]
        for k in range(self.n):
            if vj[k]:
                vi[k] -= c * vj[k]

    def _find_pivot(self, k):
        best = None
        best_val = None
        for i in range(k, self.m):
            row = self.D[i]
            for j in range(k, self.n):
                v = abs(row[j])
                if v:
                    if v == 1:
                        return i, j
                    if best_val is None or v < best_val:
                        best, best_val = (i, j), v
        return best

    def diagonalize(self, start: int = 0):
        k = start
        limit = min(self.m, self.n)
        while k < limit:
            piv = self._find_pivot(k)
            if piv is None:
                break
            self.row_swap(k, piv[0])
            self.col_swap(k, piv[1])
            while True:
                restart = False
                # clear column k; a nonzero remainder becomes a smaller pivot
                for i in range(k + 1, self.m):
                    a = self.D[i][k]
                    if a == 0:
                        continue
                    q = a // self.D[k][k]
                    self.row_add(i, k, -q)
                    if self.D[i][k]:
                        self.row_swap(i, k)
                        restart = True
                        break
                if restart:
                    continue
                for j in range(k + 1, self.n):
                    a = self.D[k][j]
                    if a == 0:
                        continue
                    q = a // self.D[k][k]
                    self.col_add(j, k, -q)
                    if self.D[k][j]:
                        self.col_swap(j, k)
                        restart = True
                        break
                if restart:
                    continue
                # pivot must divide the remaining submatrix
                p = self.D[k][k]
                bad = None
                for i in range(k + 1, self.m):
                    row = self.D[i]
                    for j in range(k + 1, self.n):
                        if row[j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                self.row_add(k, bad, 1)
            if self.D[k][k] < 0:
                self.row_neg(k)
            k += 1

    def fix_divisor_chain(self):
        limit = min(self.m, self.n)
        while True:
            violation = None
            for k in range(limit - 1):
                a, b = self.D[k][k], self.D[k + 1][k + 1]
                if a and b and b % a:
                    violation = k
                    break
            if violation is None:
                return
            k = violation
            self.col_add(k, k + 1, 1)
            self.diagonalize(k)


class SmithVerificationError(AssertionError):
    pass


def smith_normal_form(M: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with D = U*M*V diagonal, d1 | d2 | ..., U, V unimodular.

    Every call re-verifies the factorization and the unimodularity
    certificates; failure raises SmithVerificationError.
    """
    w = _SmithWorker(M)
    w.diagonalize()
    w.fix_divisor_chain()
    U = Matrix.from_rows(w.U, M.rows) if M.rows else Matrix.zero(0, 0)
    Ui = Matrix.from_rows(w.Ui, M.rows) if M.rows else Matrix.zero(0, 0)
    V = Matrix.from_rows(w.V, M.cols) if M.cols else Matrix.zero(0, 0)
    Vi = Matrix.from_rows(w.Vi, M.cols) if M.cols else Matrix.zero(0, 0)
    D = Matrix.from_rows(w.D, M.cols) if M.rows else Matrix.zero(0, M.cols)
    if U.mul(M).mul(V) != D:
        raise SmithVerificationError("U*M*V != D")
    if U.mul(Ui) != Matrix.identity(M.rows):
        raise SmithVerificationError("U not unimodular")
    if V.mul(Vi) != Matrix.identity(M.cols):
        raise SmithVerificationError("V not unimodular")
    diag = [D[k, k] for k in range(min(M.rows, M.cols))]
    for a, b in zip(diag, diag[1:]):
        if b and (a == 0 or b % a):
            raise SmithVerificationError("divisor chain violated")
        if a < 0 or b < 0:
            raise SmithVerificationError("negative divisor")
    return U, D, V


@lru_cache(maxsize=16384)
def elementary_divisors(M: Matrix) -> tuple[int, ...]:
    """Nonzero diagonal of the Smith form (verified computation, cached)."""
    _, D, _ = smith_normal_form(M)
    out = []
    for k in range(min(M.rows, M.cols)):
        d = D[k, k]
        if d:
            out.append(d)
    return tuple(out)


def rank_over_int(M: Matrix) -> int:
    return len(elementary_divisors(M))


def rank_mod_prime(M: Matrix, p: int) -> int:
    return sum(1 for d in elementary_divisors(M) if d % p)


def integer_kernel_basis(M: Matrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel, as columns of V past the rank."""
    U, D, V = smith_normal_form(M)
    r = len(elementary_divisors(M))
    cols = []
    for j in range(r, M.cols):
        cols.append(tuple(V[i, j] for i in range(M.cols)))
    return cols
