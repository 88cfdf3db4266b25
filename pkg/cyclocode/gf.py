"""
Finite fields GF(2), GF(3), GF(4) and odd prime fields GF(l), l <= 2**16.

Elements are integer codes 0..l-1. For a prime l the code c is the residue c.
For GF(4) the codes 0, 1, 2, 3 stand for 0, 1, u, u+1 in the polynomial basis
with u^2 + u + 1 = 0, so addition is the bitwise XOR of the codes.

All arithmetic methods of FieldSpec accept plain integers as well as numpy
arrays of element codes and broadcast like numpy operators.
"""

from functools import lru_cache
from itertools import product
from logging import getLogger
from typing import List, Optional

import numpy as np
from sympy import isprime

from .exceptions import FieldError, FormatError
from .utils import constants

logger = getLogger(__name__)

MAX_PRIME_ORDER = 2 ** 16

# fields up to this order carry full add/mul tables
TABLE_LIMIT = 256

# u * u = u + 1, u * (u + 1) = 1, (u + 1) * (u + 1) = u
_GF4_MUL = np.array([
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
], dtype=np.int64)
_GF4_MUL.setflags(write=False)

_GF4_TOKENS = {
    "0": 0,
    "1": 1,
    "2": 2,
    "3": 3,
    "u": 2,
    "u+1": 3,
    "1+u": 3,
    "v": 3,
}
_GF4_POLYNOMIAL_NAMES = ("0", "1", "u", "u+1")
_GF4_COMPACT_NAMES = ("0", "1", "u", "v")


@constants
class Operation:
    ADD = "add"
    MUL = "mul"
    NEG = "neg"
    INV = "inv"


@constants
class TokenStyle:
    # 0, 1, u, u+1
    POLYNOMIAL = "polynomial"

    # 0, 1, u, v; used by the matrix text format
    COMPACT = "compact"


class FieldSpec:
    """
    Arithmetic context for GF(l). Immutable after construction; obtain
    instances through `make_field`.
    """

    def __init__(self, order: int):
        self.order = order
        self.characteristic = 2 if order == 4 else order
        self.is_quaternary = order == 4

        if self.is_quaternary:
            mul = _GF4_MUL
            inv = np.array([0, 1, 3, 2], dtype=np.int64)
        else:
            codes = np.arange(order, dtype=np.int64)
            mul = (codes[:, None] * codes[None, :]) % order if order <= TABLE_LIMIT else None
            inv = np.zeros(order, dtype=np.int64)
            inv[1:] = [pow(int(a), order - 2, order) for a in range(1, order)]

        neg = np.arange(order, dtype=np.int64) if self.characteristic == 2 \
            else (-np.arange(order, dtype=np.int64)) % order

        if order <= TABLE_LIMIT:
            codes = np.arange(order, dtype=np.int64)
            add = self.add(codes[:, None], codes[None, :])
            add.setflags(write=False)
            mul.setflags(write=False)
        else:
            add = None

        neg.setflags(write=False)
        inv.setflags(write=False)
        self.add_table: Optional[np.ndarray] = add
        self.mul_table: Optional[np.ndarray] = mul
        self.neg_table: np.ndarray = neg
        self.inv_table: np.ndarray = inv

    def __repr__(self):
        return "FieldSpec(order={})".format(self.order)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and other.order == self.order

    def __hash__(self):
        return hash(("FieldSpec", self.order))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    def is_element(self, a) -> bool:
        return isinstance(a, (int, np.integer)) and 0 <= a < self.order

    def validate(self, a) -> int:
        if not self.is_element(a):
            raise FieldError(
                "{!r} is not an element code of GF({})".format(a, self.order),
                order=self.order
            )
        return int(a)

    def validate_array(self, values) -> np.ndarray:
        array = np.asarray(values, dtype=np.int64)
        if array.size and (array.min() < 0 or array.max() >= self.order):
            raise FieldError(
                "array holds values outside GF({})".format(self.order),
                order=self.order
            )
        return array

    # Vectorized arithmetic.

    def add(self, a, b):
        if self.characteristic == 2:
            return np.bitwise_xor(a, b)
        return (np.asarray(a, dtype=np.int64) + b) % self.order

    def neg(self, a):
        return self.neg_table[a]

    def sub(self, a, b):
        return self.add(a, self.neg_table[b])

    def mul(self, a, b):
        if self.mul_table is not None:
            return self.mul_table[a, b]
        return (np.asarray(a, dtype=np.int64) * b) % self.order

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise FieldError("division by zero", order=self.order)
        return self.inv_table[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a: int, exponent: int) -> int:
        result, base = 1, int(a)
        if exponent < 0:
            base, exponent = int(self.inv(base)), -exponent
        while exponent:
            if exponent & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            exponent >>= 1
        return result

    def from_int(self, value):
        """
        Image of an integer in the field: value * 1, i.e. value reduced
        modulo the characteristic.
        """
        return np.asarray(value, dtype=np.int64) % self.characteristic \
            if isinstance(value, np.ndarray) else int(value) % self.characteristic

    # Text codec.

    def parse(self, token: str) -> int:
        text = token.strip().lower().replace(" ", "")
        if self.is_quaternary:
            if text not in _GF4_TOKENS:
                raise FormatError("{!r} is not an element of GF(4)".format(token))
            return _GF4_TOKENS[text]

        try:
            value = int(text)
        except ValueError:
            raise FormatError("{!r} is not an element of GF({})".format(token, self.order))

        if not -self.order < value < self.order:
            raise FormatError("{!r} is out of range for GF({})".format(token, self.order))
        return value % self.order

    def format(self, a, style: str = TokenStyle.POLYNOMIAL) -> str:
        a = self.validate(a)
        if self.is_quaternary:
            names = _GF4_COMPACT_NAMES if style == TokenStyle.COMPACT else _GF4_POLYNOMIAL_NAMES
            return names[a]
        return str(a)

    def check_axioms(self) -> List[str]:
        """
        Exhaustively verify the field axioms on the operation tables.
        Returns the names of violated axioms; empty for a field.

        Only available for fields carrying tables.
        """
        if self.add_table is None:
            raise FieldError(
                "GF({}) is too large for exhaustive axiom checks".format(self.order),
                order=self.order
            )

        add, mul = self.add_table, self.mul_table
        codes = np.arange(self.order)
        a, b, c = np.meshgrid(codes, codes, codes, indexing="ij")
        violations = []

        if not np.array_equal(add, add.T):
            violations.append("additive commutativity")
        if not np.array_equal(mul, mul.T):
            violations.append("multiplicative commutativity")
        if not np.array_equal(add[add[a, b], c], add[a, add[b, c]]):
            violations.append("additive associativity")
        if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
            violations.append("multiplicative associativity")
        if not np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]]):
            violations.append("distributivity")
        if not np.array_equal(add[0], codes):
            violations.append("additive identity")
        if not np.array_equal(mul[1], codes):
            violations.append("multiplicative identity")
        if np.any(add[codes, self.neg_table] != 0):
            violations.append("additive inverse")
        if np.any(mul[codes[1:], self.inv_table[1:]] != 1):
            violations.append("multiplicative inverse")
        return violations


@lru_cache(maxsize=None)
def make_field(order: int) -> FieldSpec:
    """
    Return the field GF(order).

    :param order:
        2, 3, 4 or an odd prime not larger than 2**16.

    :raises FieldError:
        if the order is composite (other than 4) or too large.

    Example:
        from cyclocode.gf import make_field

        gf4 = make_field(4)
        gf4.mul(2, 2)   # u * u = u + 1, i.e. code 3
    """
    if not isinstance(order, int) or isinstance(order, bool):
        raise FieldError("unsupported field order {!r}".format(order), order=order)

    if order != 4 and not (isprime(order) and order <= MAX_PRIME_ORDER):
        raise FieldError(
            "unsupported field order {}: expected 4 or a prime <= {}".format(
                order, MAX_PRIME_ORDER
            ),
            order=order
        )

    field = FieldSpec(order)
    logger.debug("built %r", field)
    return field


def elem_op(field: FieldSpec, op: str, a: int, b: int = None) -> int:
    """
    Apply a single field operation to element codes.

    :raises FieldError:
        on invalid element codes, an unknown operation or inv(0).
    """
    a = field.validate(a)
    if op == Operation.NEG:
        return int(field.neg(a))
    if op == Operation.INV:
        return int(field.inv(a))

    if b is None:
        raise FieldError("operation {!r} needs two operands".format(op), order=field.order)
    b = field.validate(b)

    if op == Operation.ADD:
        return int(field.add(a, b))
    if op == Operation.MUL:
        return int(field.mul(a, b))
    raise FieldError("unknown operation {!r}".format(op), order=field.order)


def parse_element(field: FieldSpec, token: str) -> int:
    return field.parse(token)


def format_element(field: FieldSpec, a: int, style: str = TokenStyle.POLYNOMIAL) -> str:
    return field.format(a, style)


def all_vectors(field: FieldSpec, length: int):
    """
    Iterate over GF(l)^length in lexicographic order of element codes.
    """
    return product(field.elements(), repeat=length)
