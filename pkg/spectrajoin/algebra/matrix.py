"""
Exact rational matrices.

Determinants are fraction-free: each row is scaled to integers and the
Bareiss elimination runs on Python ints. Characteristic polynomials are
interpolated from determinants at n + 1 integer points.
"""

import logging
import math
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..core.exceptions import AlgebraException, SingularMatrixException
from .poly import Number, Poly, RatFunc, interpolate, to_fraction

logger = logging.getLogger(__name__)


class ExactMatrix:
    """Immutable matrix of Fractions.

    Args:
        rows: Row sequences of ints, Fractions or ``"p/q"`` strings.
    """

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable]):
        self.rows: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(to_fraction(v) for v in row) for row in rows
        )
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise AlgebraException(f"Ragged matrix rows: widths {sorted(widths)}")
        self.shape = (len(self.rows), widths.pop() if widths else 0)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def ones(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[1] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values: Sequence[Number]) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block(cls, blocks: Sequence[Sequence["ExactMatrix"]]) -> "ExactMatrix":
        """Assemble a block matrix; blocks in a block-row share their row count."""
        rows: List[List[Fraction]] = []
        for block_row in blocks:
            height = block_row[0].shape[0]
            if any(b.shape[0] != height for b in block_row):
                raise AlgebraException("Blocks in one block-row differ in height")
            for i in range(height):
                rows.append([v for b in block_row for v in b.rows[i]])
        return cls(rows)

    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.shape[0]

    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.n) for j in range(i)
        )

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.shape[0]}x{self.shape[1]})"

    def _check_same_shape(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise AlgebraException(f"Shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        return ExactMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape[1] != other.shape[0]:
            raise AlgebraException(f"Cannot multiply {self.shape} by {other.shape}")
        columns = list(zip(*other.rows))
        return ExactMatrix(
            [sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in columns]
            for row in self.rows
        )

    def scale(self, factor: Number) -> "ExactMatrix":
        factor = to_fraction(factor)
        return ExactMatrix([v * factor for v in row] for row in self.rows)

    def shift(self, value: Number) -> "ExactMatrix":
        """value * I + self."""
        value = to_fraction(value)
        return ExactMatrix(
            [v + value if i == j else v for j, v in enumerate(row)]
            for i, row in enumerate(self.rows)
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self.rows)) if self.rows else ExactMatrix([])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix([self.rows[i][j] for j in cols] for i in rows)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.n)), Fraction(0))

    def total(self) -> Fraction:
        """Sum of all entries, i.e. 1^T M 1."""
        return sum((v for row in self.rows for v in row), Fraction(0))

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.rows], dtype=float).reshape(self.shape)

    def row_strings(self) -> List[List[str]]:
        return [[str(v) for v in row] for row in self.rows]

    # ------------------------------------------------------------------
    # exact linear algebra
    # ------------------------------------------------------------------

    def det(self) -> Fraction:
        """Exact determinant.

        Raises:
            AlgebraException: If the matrix is not square.
        """
        if not self.is_square():
            raise AlgebraException(f"Determinant of a non-square {self.shape} matrix")
        scale = 1
        int_rows = []
        for row in self.rows:
            lcm = 1
            for v in row:
                lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
            scale *= lcm
            int_rows.append([int(v * lcm) for v in row])
        return Fraction(bareiss_det(int_rows), scale)

    def solve(self, rhs: Sequence[Number]) -> List[Fraction]:
        """Solve ``self @ x = rhs`` by Gauss-Jordan elimination over Q.

        Raises:
            SingularMatrixException: If the matrix is singular.
        """
        if not self.is_square():
            raise AlgebraException(f"Cannot solve with a non-square {self.shape} matrix")
        n = self.n
        aug = [list(row) + [to_fraction(b)] for row, b in zip(self.rows, rhs)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixException(f"Singular {n}x{n} matrix")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return [aug[i][n] for i in range(n)]

    def inverse(self) -> "ExactMatrix":
        """Exact inverse, column by column."""
        n = self.n
        columns = [self.solve([1 if i == j else 0 for i in range(n)]) for j in range(n)]
        return ExactMatrix(zip(*columns)) if n else ExactMatrix([])


def bareiss_det(rows: List[List[int]]) -> int:
    """Fraction-free determinant of a square integer matrix.

    Every intermediate value is itself a minor of the input, so the
    divisions are exact.
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // previous
        previous = pivot
    return sign * a[n - 1][n - 1]


def charpoly(matrix: ExactMatrix) -> Poly:
    """det(xI - M), interpolated from n + 1 exact determinants.

    Raises:
        AlgebraException: If the matrix is not square.
    """
    if not matrix.is_square():
        raise AlgebraException(f"Characteristic polynomial of a non-square {matrix.shape} matrix")
    n = matrix.n
    if n == 0:
        return Poly.constant(1)
    logger.debug(f"charpoly: interpolating {n + 1} determinants of a {n}x{n} matrix")
    negated = -matrix
    points = [(k, negated.shift(k).det()) for k in range(n + 1, 2 * n + 2)]
    result = interpolate(points)
    if result.degree != n or not result.is_monic():
        raise AlgebraException(f"Interpolated charpoly is not monic of degree {n}: {result}")
    return result


def coronal(matrix: ExactMatrix) -> RatFunc:
    """Gamma_M(x) = 1^T (xI - M)^{-1} 1 as a reduced rational function.

    Uses det(xI - M + J) = det(xI - M) * (1 + Gamma_M(x)).
    """
    n = matrix.n
    f = charpoly(matrix)
    if n == 0:
        return RatFunc(Poly(), Poly.constant(1))
    g = charpoly(matrix - ExactMatrix.ones(n, n))
    return RatFunc(g - f, f)


def coronal_at(matrix: ExactMatrix, x: Number) -> Fraction:
    """Gamma_M(x) at one rational point by a single exact solve.

    Raises:
        SingularMatrixException: If x is an eigenvalue of M.
    """
    n = matrix.n
    if n == 0:
        return Fraction(0)
    solution = (-matrix).shift(x).solve([1] * n)
    return sum(solution, Fraction(0))


def schur_det_check(matrix: ExactMatrix, split: int, invert: str = "D") -> bool:
    """Check det(M) against its Schur-complement factorisation.

    With M = [[A, B], [C, D]] split after ``split`` rows and columns,
    det M = det D * det(A - B D^{-1} C) or det A * det(D - C A^{-1} B).

    Raises:
        SingularMatrixException: If the designated block is singular.
    """
    n = matrix.n
    if not 0 < split < n:
        raise AlgebraException(f"Split {split} must lie strictly inside 0..{n}")
    head, tail = list(range(split)), list(range(split, n))
    A = matrix.submatrix(head, head)
    B = matrix.submatrix(head, tail)
    C = matrix.submatrix(tail, head)
    D = matrix.submatrix(tail, tail)
    if invert == "D":
        if D.det() == 0:
            raise SingularMatrixException("Designated block D is singular")
        factored = D.det() * (A - B @ D.inverse() @ C).det()
    elif invert == "A":
        if A.det() == 0:
            raise SingularMatrixException("Designated block A is singular")
        factored = A.det() * (D - C @ A.inverse() @ B).det()
    else:
        raise AlgebraException(f"Unknown block to invert: {invert}")
    return factored == matrix.det()


def rank_one_det_check(matrix: ExactMatrix, alpha: Number) -> bool:
    """Check det(M + alpha J) = det M + alpha * 1^T adj(M) 1 for invertible M.

    The adjugate is never formed: 1^T adj(M) 1 = det M * 1^T M^{-1} 1.

    Raises:
        SingularMatrixException: If M is singular.
    """
    n = matrix.n
    det = matrix.det()
    if det == 0:
        raise SingularMatrixException("Rank-one identity needs an invertible matrix")
    adj_total = det * sum(matrix.solve([1] * n), Fraction(0))
    lhs = (matrix + ExactMatrix.ones(n, n).scale(alpha)).det()
    return lhs == det + to_fraction(alpha) * adj_total
