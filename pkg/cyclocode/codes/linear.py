from logging import getLogger
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..circulant import GfMatrix, MaskVector, mask_matrix
from ..cyclotomy import CyclotomicContext
from ..gf import FieldSpec

logger = getLogger(__name__)


def row_echelon(
    entries: np.ndarray,
    field: FieldSpec,
    column_order: Sequence[int] = None,
) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row-echelon form over GF(l).

    Pivots are searched column by column in `column_order` (defaults to
    left to right); each pivot is scaled to 1 and cleared from every other
    row, so the result is the identity on the pivot columns.

    Returns:
        (R, pivots):
            R - the nonzero rows of the reduced matrix, shape (rank, cols).
            pivots - pivot column of each row of R.
    """
    R = np.array(entries, dtype=np.int64)
    m, n = R.shape
    if column_order is None:
        column_order = range(n)

    pivots: List[int] = []
    pivot_row = 0
    for col in column_order:
        if pivot_row == m:
            break

        found = np.flatnonzero(R[pivot_row:, col])
        if not len(found):
            continue

        row = pivot_row + found[0]
        if row != pivot_row:
            R[[pivot_row, row]] = R[[row, pivot_row]]

        R[pivot_row] = field.mul(field.inv(int(R[pivot_row, col])), R[pivot_row])

        factors = R[:, col].copy()
        factors[pivot_row] = 0
        targets = np.flatnonzero(factors)
        if len(targets):
            R[targets] = field.sub(
                R[targets],
                field.mul(factors[targets][:, None], R[pivot_row][None, :])
            )

        pivots.append(int(col))
        pivot_row += 1

    return R[:pivot_row], pivots


def rank(matrix: GfMatrix) -> int:
    _, pivots = row_echelon(matrix.entries, matrix.field)
    return len(pivots)


def null_space(matrix: GfMatrix) -> GfMatrix:
    """
    Generator of {x : G x^T = 0}, one row per non-pivot column.
    """
    field = matrix.field
    R, pivots = row_echelon(matrix.entries, field)
    free = [col for col in range(matrix.cols) if col not in set(pivots)]

    kernel = np.zeros((len(free), matrix.cols), dtype=np.int64)
    if free:
        kernel[np.arange(len(free)), free] = 1
        if pivots:
            kernel[:, pivots] = field.neg(R[:, free].T)
    return GfMatrix._wrap(field, kernel)


def weight(word) -> int:
    """Hamming weight."""
    return int(np.count_nonzero(np.asarray(word)))


def distance(x, y) -> int:
    """Hamming distance."""
    return int(np.count_nonzero(np.asarray(x) != np.asarray(y)))


class LinearCode:
    """
    Linear code given by a generator matrix. The rows need not be
    independent; `dimension` is the rank of the generator.
    """

    def __init__(self, generator: GfMatrix, name: str = None):
        self.generator = generator
        self.field = generator.field
        self.name = name

        basis, pivots = row_echelon(generator.entries, self.field)
        basis.setflags(write=False)
        self._basis = basis
        self._pivots = tuple(pivots)

        # filled in by the minimum-distance engine
        self.distance_result = None

    def __repr__(self):
        return "LinearCode({}[{}, {}] over GF({}))".format(
            "{} ".format(self.name) if self.name else "",
            self.length, self.dimension, self.field.order
        )

    @property
    def length(self) -> int:
        return self.generator.cols

    @property
    def dimension(self) -> int:
        return len(self._pivots)

    @property
    def basis(self) -> np.ndarray:
        """Reduced row-echelon basis, shape (dimension, length)."""
        return self._basis

    @property
    def minimum_distance(self) -> Optional[int]:
        if self.distance_result is None:
            return None
        return self.distance_result.distance

    def encode(self, message) -> np.ndarray:
        """message (length = generator rows) times the generator."""
        message = GfMatrix(self.field, [message])
        return (message @ self.generator).entries[0]

    def contains(self, word) -> bool:
        word = self.field.validate_array(word)
        if word.shape != (self.length,):
            return False
        stacked = np.vstack([self._basis, word[None, :]])
        _, pivots = row_echelon(stacked, self.field)
        return len(pivots) == self.dimension

    def same_space(self, other: "LinearCode") -> bool:
        if other.field != self.field or other.length != self.length:
            return False
        if other.dimension != self.dimension:
            return False
        stacked = np.vstack([self._basis, other.basis])
        _, pivots = row_echelon(stacked, self.field)
        return len(pivots) == self.dimension


def dual_code(code: LinearCode) -> LinearCode:
    """Euclidean dual; dimension length - k."""
    name = "{}^perp".format(code.name) if code.name else None
    return LinearCode(null_space(code.generator), name=name)


def gram(code: LinearCode) -> GfMatrix:
    return code.generator @ code.generator.T


def is_self_orthogonal(code: LinearCode) -> bool:
    """C is contained in its dual: G G^T = 0."""
    return gram(code).is_zero()


def is_self_dual(code: LinearCode) -> bool:
    """
    G G^T = 0 and rank(G) = N / 2. Odd lengths are never self-dual.
    """
    if code.length % 2:
        return False
    return code.dimension * 2 == code.length and is_self_orthogonal(code)


def pure_pdc(ctx: CyclotomicContext, field: FieldSpec, m: MaskVector) -> LinearCode:
    """
    Pure double circulant code with generator (I_n | R), R = C_n(m).
    """
    R = mask_matrix(ctx, field, m)
    generator = GfMatrix.hstack([GfMatrix.identity(field, ctx.n), R])
    return LinearCode(generator, name="pure{}".format(m.format(field)))


def bordered_pdc(ctx: CyclotomicContext, field: FieldSpec, alpha: int, m: MaskVector) -> LinearCode:
    """
    Bordered double circulant code with generator (I_{n+1} | B):

        B = | alpha   1 ... 1 |
            |  -1             |
            |   :      R      |
            |  -1             |

    with R = C_n(m).
    """
    alpha = field.validate(alpha)
    R = mask_matrix(ctx, field, m)
    minus_one = int(field.neg(1))

    top = GfMatrix._wrap(field, np.concatenate([[alpha], np.ones(ctx.n, dtype=np.int64)])[None, :])
    left = GfMatrix._wrap(field, np.full((ctx.n, 1), minus_one, dtype=np.int64))
    border = GfMatrix.vstack([top, GfMatrix.hstack([left, R])])

    generator = GfMatrix.hstack([GfMatrix.identity(field, ctx.n + 1), border])
    return LinearCode(generator, name="bordered{}".format(m.with_alpha(alpha).format(field)))
