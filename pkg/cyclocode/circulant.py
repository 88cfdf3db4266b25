"""
Matrices over GF(l) indexed by the cyclotomic partition of Z_n.

Entry (i, j) of a mask matrix C_n(m0, ..., m4) is m_k where k is the class
(R, P, Q, C0, C1) of (j - i) mod n. The basis matrices are

    I  = C_n(1, 0, 0, 0, 0)    P  = C_n(0, 1, 0, 0, 0)    Q = C_n(0, 0, 1, 0, 0)
    A1 = C_n(0, 0, 0, 1, 0)    A2 = C_n(0, 0, 0, 0, 1)

and J = C_n(1, 1, 1, 1, 1).
"""

from dataclasses import dataclass
from functools import lru_cache
from logging import getLogger
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .cyclotomy import LABELS, CyclotomicContext, cyclotomic_numbers
from .exceptions import DecompositionError, FieldError, FormatError, HypothesisError, ParameterError
from .gf import FieldSpec, TokenStyle, make_field
from .utils import constants, split_tokens

logger = getLogger(__name__)

# float64 matrix products are exact while every partial sum stays below 2**53
_FLOAT_EXACT = 2 ** 53


def _exact_matmul(a: np.ndarray, b: np.ndarray, entry_bound: int) -> np.ndarray:
    if a.shape[1] * entry_bound * entry_bound < _FLOAT_EXACT:
        product = a.astype(np.float64) @ b.astype(np.float64)
        return np.rint(product).astype(np.int64)
    return a @ b


class GfMatrix:
    """
    Dense immutable matrix over GF(l) holding element codes.
    """

    def __init__(self, field: FieldSpec, entries):
        array = np.array(entries, dtype=np.int64, ndmin=2)
        if array.ndim != 2:
            raise FieldError("matrix entries must be two-dimensional", order=field.order)
        field.validate_array(array)
        array.setflags(write=False)
        self.field = field
        self.entries = array

    @classmethod
    def _wrap(cls, field: FieldSpec, array: np.ndarray) -> "GfMatrix":
        # trusted constructor for arrays already reduced into the field
        matrix = cls.__new__(cls)
        array = np.ascontiguousarray(array, dtype=np.int64)
        array.setflags(write=False)
        matrix.field = field
        matrix.entries = array
        return matrix

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "GfMatrix":
        return cls._wrap(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, size: int) -> "GfMatrix":
        return cls._wrap(field, np.eye(size, dtype=np.int64))

    @classmethod
    def ones(cls, field: FieldSpec, rows: int, cols: int) -> "GfMatrix":
        return cls._wrap(field, np.ones((rows, cols), dtype=np.int64))

    @classmethod
    def hstack(cls, blocks: Sequence["GfMatrix"]) -> "GfMatrix":
        field = cls._common_field(blocks)
        return cls._wrap(field, np.hstack([block.entries for block in blocks]))

    @classmethod
    def vstack(cls, blocks: Sequence["GfMatrix"]) -> "GfMatrix":
        field = cls._common_field(blocks)
        return cls._wrap(field, np.vstack([block.entries for block in blocks]))

    @staticmethod
    def _common_field(blocks: Sequence["GfMatrix"]) -> FieldSpec:
        fields = {block.field for block in blocks}
        if len(fields) != 1:
            raise FieldError("cannot combine matrices over different fields")
        return fields.pop()

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> "GfMatrix":
        return self._wrap(self.field, self.entries.T)

    def _check(self, other: "GfMatrix") -> None:
        if not isinstance(other, GfMatrix):
            raise TypeError("expected GfMatrix, got {}".format(type(other).__name__))
        if other.field != self.field:
            raise FieldError(
                "GF({}) and GF({}) matrices do not mix".format(self.field.order, other.field.order)
            )

    def __add__(self, other: "GfMatrix") -> "GfMatrix":
        self._check(other)
        return self._wrap(self.field, self.field.add(self.entries, other.entries))

    def __sub__(self, other: "GfMatrix") -> "GfMatrix":
        self._check(other)
        return self._wrap(self.field, self.field.sub(self.entries, other.entries))

    def __neg__(self) -> "GfMatrix":
        return self._wrap(self.field, self.field.neg(self.entries))

    def scale(self, scalar: int) -> "GfMatrix":
        scalar = self.field.validate(scalar)
        return self._wrap(self.field, self.field.mul(scalar, self.entries))

    def __matmul__(self, other: "GfMatrix") -> "GfMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise ParameterError("shape mismatch {} @ {}".format(self.shape, other.shape), parameter="other")

        a, b = self.entries, other.entries
        if self.field.is_quaternary:
            # (a0 + a1 u)(b0 + b1 u) = (a0 b0 + a1 b1) + (a0 b1 + a1 b0 + a1 b1) u
            a0, a1 = a & 1, a >> 1
            b0, b1 = b & 1, b >> 1
            low = _exact_matmul(a0, b0, 1) + _exact_matmul(a1, b1, 1)
            high = _exact_matmul(a0, b1, 1) + _exact_matmul(a1, b0, 1) + _exact_matmul(a1, b1, 1)
            return self._wrap(self.field, (low & 1) | ((high & 1) << 1))

        order = self.field.order
        return self._wrap(self.field, _exact_matmul(a, b, order - 1) % order)

    def __eq__(self, other):
        return (
            isinstance(other, GfMatrix)
            and other.field == self.field
            and np.array_equal(other.entries, self.entries)
        )

    def __repr__(self):
        return "GfMatrix(GF({}), {}x{})".format(self.field.order, self.rows, self.cols)

    def is_zero(self) -> bool:
        return not self.entries.any()

    def take_columns(self, columns: Iterable[int]) -> "GfMatrix":
        return self._wrap(self.field, self.entries[:, list(columns)])

    def tolist(self) -> List[List[int]]:
        return self.entries.tolist()


@dataclass(frozen=True)
class MaskVector:
    """
    Coefficients (m0, m1, m2, m3, m4) for the classes R, P, Q, C0, C1 and
    an optional border scalar alpha.
    """
    values: Tuple[int, int, int, int, int]
    alpha: Optional[int] = None

    def __post_init__(self):
        values = tuple(int(value) for value in self.values)
        if len(values) != 5:
            raise FormatError("a mask has five components, got {}".format(len(values)))
        object.__setattr__(self, "values", values)
        if self.alpha is not None:
            object.__setattr__(self, "alpha", int(self.alpha))

    @classmethod
    def parse(cls, field: FieldSpec, text: str, alpha: str = None) -> "MaskVector":
        """
        Examples:
            "1,0,1,0,1" over GF(2) => (1, 0, 1, 0, 1)
            "1,1,0,u+1,u" over GF(4) => (1, 1, 0, 3, 2)
        """
        values = tuple(field.parse(token) for token in split_tokens(text, expected=5))
        return cls(values, None if alpha is None else field.parse(alpha))

    def validate(self, field: FieldSpec) -> "MaskVector":
        for value in self.values:
            field.validate(value)
        if self.alpha is not None:
            field.validate(self.alpha)
        return self

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def __iter__(self):
        return iter(self.values)

    def with_alpha(self, alpha: Optional[int]) -> "MaskVector":
        return MaskVector(self.values, alpha)

    def swapped(self) -> "MaskVector":
        """The mask of the transposed matrix on mixed-residue contexts: m3 <-> m4."""
        m0, m1, m2, m3, m4 = self.values
        return MaskVector((m0, m1, m2, m4, m3), self.alpha)

    def format(self, field: FieldSpec, style: str = TokenStyle.POLYNOMIAL) -> str:
        text = ",".join(field.format(value, style) for value in self.values)
        if self.alpha is None:
            return "({})".format(text)
        return "({}; {})".format(field.format(self.alpha, style), text)


@dataclass(frozen=True)
class DCoefficients:
    """
    Coefficients (d0, ..., d4) of M M^T on the basis (I, P, Q, A1, A2).
    """
    values: Tuple[int, int, int, int, int]

    @property
    def d0(self) -> int:
        return self.values[0]

    @property
    def d1(self) -> int:
        return self.values[1]

    @property
    def d2(self) -> int:
        return self.values[2]

    @property
    def d3(self) -> int:
        return self.values[3]

    @property
    def d4(self) -> int:
        return self.values[4]

    def __getitem__(self, index: int) -> int:
        return self.values[index]


@constants
class BasisKind:
    I = "I"
    P = "P"
    Q = "Q"
    A1 = "A1"
    A2 = "A2"
    J = "J"


_BASIS_MASKS = {
    BasisKind.I: (1, 0, 0, 0, 0),
    BasisKind.P: (0, 1, 0, 0, 0),
    BasisKind.Q: (0, 0, 1, 0, 0),
    BasisKind.A1: (0, 0, 0, 1, 0),
    BasisKind.A2: (0, 0, 0, 0, 1),
    BasisKind.J: (1, 1, 1, 1, 1),
}


@lru_cache(maxsize=32)
def difference_labels(ctx: CyclotomicContext) -> np.ndarray:
    """n x n array of label indices of (j - i) mod n."""
    index = np.arange(ctx.n, dtype=np.int64)
    labels = ctx.labels[(index[None, :] - index[:, None]) % ctx.n]
    labels.setflags(write=False)
    return labels


def mask_matrix(ctx: CyclotomicContext, field: FieldSpec, m: MaskVector) -> GfMatrix:
    m.validate(field)
    values = np.asarray(m.values, dtype=np.int64)
    return GfMatrix._wrap(field, values[difference_labels(ctx)])


def basis_matrix(ctx: CyclotomicContext, field: FieldSpec, kind: str) -> GfMatrix:
    if kind not in _BASIS_MASKS:
        raise FormatError("unknown basis matrix {!r}".format(kind))
    return mask_matrix(ctx, field, MaskVector(_BASIS_MASKS[kind]))


def decompose(ctx: CyclotomicContext, matrix: GfMatrix) -> Tuple[int, int, int, int, int]:
    """
    Coefficients of `matrix` on (I, P, Q, A1, A2), read off their disjoint
    supports.

    :raises DecompositionError:
        if the matrix is not constant on some support.
    """
    if matrix.shape != (ctx.n, ctx.n):
        raise ParameterError(
            "expected a {0}x{0} matrix, got {1}".format(ctx.n, matrix.shape), parameter="matrix"
        )

    labels = difference_labels(ctx)
    coefficients = []
    for index, label in enumerate(LABELS):
        values = np.unique(matrix.entries[labels == index])
        if len(values) != 1:
            raise DecompositionError(
                "product not in the basis span: class {} carries values {}".format(
                    label, values.tolist()
                ),
                label=label,
                values=values.tolist()
            )
        coefficients.append(int(values[0]))
    return tuple(coefficients)


def d_coefficients_direct(ctx: CyclotomicContext, field: FieldSpec, m: MaskVector) -> DCoefficients:
    """
    Expand M M^T on the basis by computing the product directly. Works for
    every residue combination of p and q.
    """
    matrix = mask_matrix(ctx, field, m)
    return DCoefficients(decompose(ctx, matrix @ matrix.T))


def d_coefficients_closed_form(ctx: CyclotomicContext, field: FieldSpec, m: MaskVector) -> DCoefficients:
    """
    Closed-form expansion of M M^T for p, q in distinct residue classes
    modulo 4; the last two coefficients coincide.

    Cyclotomic numbers enter the field as count * 1.

    :raises HypothesisError:
        if p = q (mod 4).
    """
    if not ctx.is_mixed:
        raise HypothesisError(
            "closed form does not cover p = {} and q = {} (both {} mod 4)".format(
                ctx.p, ctx.q, ctx.p % 4
            ),
            condition="p and q in distinct residue classes mod 4"
        )
    m.validate(field)

    def add(*terms):
        total = 0
        for term in terms:
            total = int(field.add(total, term))
        return total

    def mul(*factors):
        total = 1
        for factor in factors:
            total = int(field.mul(total, factor))
        return total

    def twice(value):
        return add(value, value)

    numbers = cyclotomic_numbers(ctx)
    c00 = field.from_int(numbers[0, 0])
    c10_01 = field.from_int(numbers[1, 0] + numbers[0, 1])

    m0, m1, m2, m3, m4 = m.values
    a0 = mul(m0, m0)
    a3 = add(
        mul(add(m0, m1, m2), add(m3, m4)),
        twice(mul(m1, m2)),
        mul(c00, add(mul(m3, m3), mul(m4, m4))),
        mul(c10_01, m3, m4),
    )

    if ctx.p % 4 == 1:
        a1 = add(mul(m1, m1), twice(mul(m0, m1)))
        a2 = add(
            mul(m2, m2), mul(m3, m3), mul(m4, m4),
            twice(mul(m0, m2)),
            twice(mul(m1, add(m3, m4))),
        )
    else:
        a1 = add(
            mul(m1, m1), mul(m3, m3), mul(m4, m4),
            twice(mul(m0, m1)),
            twice(mul(m2, add(m3, m4))),
        )
        a2 = add(mul(m2, m2), twice(mul(m0, m2)))

    return DCoefficients((a0, a1, a2, a3, a3))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    expected: Tuple[int, int, int, int, int]
    actual: Optional[Tuple[int, int, int, int, int]]
    passed: bool


@dataclass(frozen=True)
class IdentityReport:
    p: int
    q: int
    field_order: int
    family: str
    checks: Tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.passed]


def _identity_table(ctx: CyclotomicContext, field: FieldSpec):
    """
    (name, left side, expected coefficients) for every matrix identity of
    the mixed-residue case. P and Q trade roles between p = 1 and p = 3
    (mod 4).
    """
    basis = {kind: basis_matrix(ctx, field, kind) for kind in (BasisKind.P, BasisKind.Q, BasisKind.A1, BasisKind.A2)}
    P, Q, A1, A2 = basis[BasisKind.P], basis[BasisKind.Q], basis[BasisKind.A1], basis[BasisKind.A2]

    numbers = {key: field.from_int(value) for key, value in cyclotomic_numbers(ctx).items()}
    c00, c01, c10, c11 = numbers[0, 0], numbers[0, 1], numbers[1, 0], numbers[1, 1]

    # `mover` maps A1 and A2 onto `fixed` plus the other unit class;
    # `fixed` leaves A1 and A2 unchanged.
    if ctx.p % 4 == 1:
        mover, fixed, mover_name, fixed_name, fixed_slot = P, Q, "P", "Q", 2
    else:
        mover, fixed, mover_name, fixed_name, fixed_slot = Q, P, "Q", "P", 1

    def vec(p=0, q=0, a1=0, a2=0):
        return (0, p, q, a1, a2)

    def fixed_plus(a1=0, a2=0):
        coefficients = [0, 0, 0, a1, a2]
        coefficients[fixed_slot] = 1
        return tuple(coefficients)

    names = {"M": mover_name, "F": fixed_name}
    return [
        ("A1^T = A2", A1.T, vec(a2=1)),
        ("A2^T = A1", A2.T, vec(a1=1)),
        ("P^T = P", P.T, vec(p=1)),
        ("Q^T = Q", Q.T, vec(q=1)),
        ("{M}*A1 = {F} + A2".format(**names), mover @ A1, fixed_plus(a2=1)),
        ("A1*{M} = {F} + A2".format(**names), A1 @ mover, fixed_plus(a2=1)),
        ("{M}*A2 = {F} + A1".format(**names), mover @ A2, fixed_plus(a1=1)),
        ("A2*{M} = {F} + A1".format(**names), A2 @ mover, fixed_plus(a1=1)),
        ("{F}*A1 = A1".format(**names), fixed @ A1, vec(a1=1)),
        ("A1*{F} = A1".format(**names), A1 @ fixed, vec(a1=1)),
        ("{F}*A2 = A2".format(**names), fixed @ A2, vec(a2=1)),
        ("A2*{F} = A2".format(**names), A2 @ fixed, vec(a2=1)),
        ("P*Q = A1 + A2", P @ Q, vec(a1=1, a2=1)),
        ("Q*P = A1 + A2", Q @ P, vec(a1=1, a2=1)),
        ("P^2 = P", P @ P, vec(p=1)),
        ("Q^2 = Q", Q @ Q, vec(q=1)),
        ("A1^2 = (1,0)A1 + (0,1)A2", A1 @ A1, vec(a1=c10, a2=c01)),
        ("A2^2 = (0,1)A1 + (1,0)A2", A2 @ A2, vec(a1=c01, a2=c10)),
        ("A1*A2 = {F} + (0,0)A1 + (1,1)A2".format(**names), A1 @ A2, fixed_plus(a1=c00, a2=c11)),
        ("A2*A1 = {F} + (1,1)A1 + (0,0)A2".format(**names), A2 @ A1, fixed_plus(a1=c11, a2=c00)),
    ]


def verify_algebra_identities(ctx: CyclotomicContext, field: FieldSpec) -> IdentityReport:
    """
    Check the product table of P, Q, A1, A2 as matrix equations over a
    field of characteristic 2.

    Failed checks carry the true decomposition of the left side, or None
    when it leaves the basis span.

    :raises HypothesisError:
        for odd characteristic or when p = q (mod 4).
    """
    if field.characteristic != 2:
        raise HypothesisError(
            "identities are asserted in characteristic 2 only, got GF({})".format(field.order),
            condition="characteristic 2"
        )
    if not ctx.is_mixed:
        raise HypothesisError(
            "no identity list covers p = {} and q = {} (both {} mod 4)".format(
                ctx.p, ctx.q, ctx.p % 4
            ),
            condition="p and q in distinct residue classes mod 4"
        )

    checks = []
    for name, lhs, expected in _identity_table(ctx, field):
        expected = tuple(int(value) for value in expected)
        try:
            actual = decompose(ctx, lhs)
        except DecompositionError:
            actual = None
        passed = actual == expected
        if not passed:
            logger.warning("identity %s fails for %r over GF(%d): %s", name, ctx, field.order, actual)
        checks.append(IdentityCheck(name=name, expected=expected, actual=actual, passed=passed))

    family = "p=1,q=3 (mod 4)" if ctx.p % 4 == 1 else "p=3,q=1 (mod 4)"
    return IdentityReport(
        p=ctx.p,
        q=ctx.q,
        field_order=field.order,
        family=family,
        checks=tuple(checks),
    )


# Matrix text format.

def dump_matrix(matrix: GfMatrix) -> str:
    """
    Header "field=<l> rows=<r> cols=<c>" followed by one line per row,
    entries as field tokens separated by single spaces (GF(4): 0 1 u v).
    """
    field = matrix.field
    names = [field.format(a, TokenStyle.COMPACT) for a in field.elements()] \
        if field.order <= 256 else None

    lines = ["field={} rows={} cols={}".format(field.order, matrix.rows, matrix.cols)]
    for row in matrix.entries:
        if names is None:
            lines.append(" ".join(str(int(a)) for a in row))
        else:
            lines.append(" ".join(names[a] for a in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> GfMatrix:
    lines = [line.strip() for line in text.strip().splitlines()]
    if not lines:
        raise FormatError("empty matrix text")

    header = {}
    for item in lines[0].split():
        key, sep, value = item.partition("=")
        if not sep:
            raise FormatError("malformed header item {!r}".format(item))
        header[key] = value

    try:
        order, rows, cols = int(header["field"]), int(header["rows"]), int(header["cols"])
    except (KeyError, ValueError):
        raise FormatError("header must read 'field=<l> rows=<r> cols=<c>', got {!r}".format(lines[0]))

    field = make_field(order)
    body = lines[1:]
    if len(body) != rows:
        raise FormatError("expected {} rows, got {}".format(rows, len(body)))

    entries = []
    for number, line in enumerate(body, start=2):
        tokens = line.split(" ")
        if len(tokens) != cols:
            raise FormatError("line {}: expected {} entries, got {}".format(number, cols, len(tokens)))
        entries.append([field.parse(token) for token in tokens])
    return GfMatrix(field, entries)
