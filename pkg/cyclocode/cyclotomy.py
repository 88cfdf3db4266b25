"""
Whiteman generalized cyclotomic classes of order two for n = pq.

For distinct odd primes p, q with gcd(p - 1, q - 1) = 2, the residues of Z_n
split into five parts:

    R  = {0}
    P  = {p, 2p, ..., (q - 1)p}
    Q  = {q, 2q, ..., (p - 1)q}
    C0 = {g^s mod n}            (s = 0, ..., e - 1)
    C1 = x * C0 mod n

where g is the smallest common primitive root of p and q, e = (p - 1)(q - 1)/2
and x is the least positive solution of x = g (mod p), x = 1 (mod q).

Direct counts over these sets are the ground truth; the closed forms below
are cross-checked against them and never trusted on their own.
"""

from dataclasses import dataclass
from logging import getLogger
from math import gcd
from typing import List, Tuple

import numpy as np
from sympy import isprime, n_order, primerange
from sympy.ntheory.modular import crt
from sympy.ntheory.residue_ntheory import is_primitive_root

from .exceptions import ContextError, HypothesisError
from .utils import constants

logger = getLogger(__name__)

MAX_MODULUS = 10 ** 6


@constants
class Label:
    R = "R"
    P = "P"
    Q = "Q"
    C0 = "C0"
    C1 = "C1"


# Index of each label; also the index of its coefficient in a mask vector.
LABELS: Tuple[str, ...] = (Label.R, Label.P, Label.Q, Label.C0, Label.C1)
LABEL_INDEX = {label: index for index, label in enumerate(LABELS)}


def _validate_primes(p: int, q: int) -> None:
    for name, value in (("p", p), ("q", q)):
        if not isinstance(value, int) or value < 3 or not isprime(value):
            raise ContextError("{} = {!r} is not an odd prime".format(name, value), p=p, q=q)
    if p == q:
        raise ContextError("p and q must be distinct, got p = q = {}".format(p), p=p, q=q)


def _validate_gcd(p: int, q: int) -> None:
    d = gcd(p - 1, q - 1)
    if d != 2:
        raise ContextError(
            "gcd(p-1, q-1) = {} != 2 for p = {}, q = {}".format(d, p, q),
            p=p, q=q, gcd=d
        )


def common_primitive_root(p: int, q: int) -> int:
    """
    Smallest g >= 2 that is a primitive root modulo both p and q.

    Examples:
        (3, 5) => 2
        (5, 7) => 3
        (3, 7) => 5
    """
    _validate_primes(p, q)

    g = 2
    while True:
        if g % p and g % q and is_primitive_root(g, p) and is_primitive_root(g, q):
            return g
        g += 1


@dataclass(frozen=True, eq=False)
class CyclotomicContext:
    p: int
    q: int
    n: int
    d: int
    e: int
    g: int
    x: int
    labels: np.ndarray
    classes: Tuple[Tuple[int, ...], ...]

    def __eq__(self, other):
        return isinstance(other, CyclotomicContext) and (other.p, other.q) == (self.p, self.q)

    def __hash__(self):
        return hash(("CyclotomicContext", self.p, self.q))

    def __repr__(self):
        return "CyclotomicContext(p={}, q={}, n={}, g={}, x={})".format(
            self.p, self.q, self.n, self.g, self.x
        )

    def members(self, label: str) -> Tuple[int, ...]:
        """Sorted residues carrying the given label."""
        return self.classes[LABEL_INDEX[label]]

    @property
    def is_mixed(self) -> bool:
        """True when p and q lie in different residue classes modulo 4."""
        return self.p % 4 != self.q % 4


def build_context(p: int, q: int) -> CyclotomicContext:
    """
    Build the cyclotomic context for n = pq.

    :raises ContextError:
        if p, q are not distinct odd primes, if gcd(p-1, q-1) != 2,
        or if pq exceeds the supported modulus.

    Example:
        from cyclocode.cyclotomy import build_context

        ctx = build_context(3, 5)
        ctx.members("C0")   # (1, 2, 4, 8)
    """
    _validate_primes(p, q)
    _validate_gcd(p, q)

    n = p * q
    if n > MAX_MODULUS:
        raise ContextError(
            "n = pq = {} exceeds the supported modulus {}".format(n, MAX_MODULUS),
            p=p, q=q
        )

    g = common_primitive_root(p, q)
    e = (p - 1) * (q - 1) // 2
    if n_order(g, n) != e:
        raise ContextError("ord_n(g) != lcm(p-1, q-1) for g = {}".format(g), p=p, q=q)

    solution = crt([p, q], [g, 1])
    x = int(solution[0]) % n

    c0 = np.empty(e, dtype=np.int64)
    power = 1
    for s in range(e):
        c0[s] = power
        power = power * g % n
    c1 = c0 * x % n

    labels = np.empty(n, dtype=np.int8)
    labels[0] = LABEL_INDEX[Label.R]
    labels[np.arange(p, n, p)] = LABEL_INDEX[Label.P]
    labels[np.arange(q, n, q)] = LABEL_INDEX[Label.Q]
    labels[c0] = LABEL_INDEX[Label.C0]
    labels[c1] = LABEL_INDEX[Label.C1]
    labels.setflags(write=False)

    classes = tuple(
        tuple(int(r) for r in np.flatnonzero(labels == index))
        for index in range(len(LABELS))
    )

    ctx = CyclotomicContext(
        p=p, q=q, n=n, d=2, e=e, g=g, x=x,
        labels=labels,
        classes=classes,
    )
    logger.debug("built %r", ctx)
    return ctx


def classify(ctx: CyclotomicContext, r: int) -> str:
    if not 0 <= r < ctx.n:
        raise ContextError(
            "residue {} is out of range 0..{}".format(r, ctx.n - 1),
            p=ctx.p, q=ctx.q
        )
    return LABELS[ctx.labels[r]]


def qualifying_pairs(limit: int) -> List[Tuple[int, int]]:
    """
    Ordered pairs (p, q) of distinct odd primes with gcd(p-1, q-1) = 2
    and pq <= limit.
    """
    primes = list(primerange(3, limit // 3 + 1))
    return [
        (p, q)
        for p in primes
        for q in primes
        if p != q and p * q <= limit and gcd(p - 1, q - 1) == 2
    ]


# Cyclotomic numbers.

def _check_pair(i: int, j: int) -> None:
    if i not in (0, 1) or j not in (0, 1):
        raise ContextError("cyclotomic number ({}, {}) is not defined; use 0 or 1".format(i, j))


def cyclotomic_number_direct(ctx: CyclotomicContext, i: int, j: int) -> int:
    """
    |(C_i + 1) & C_j|, counted over the members of C_i.
    """
    _check_pair(i, j)
    members = np.asarray(ctx.members(LABELS[3 + i]), dtype=np.int64)
    shifted = ctx.labels[(members + 1) % ctx.n]
    return int(np.count_nonzero(shifted == 3 + j))


def cyclotomic_number_closed_form(p: int, q: int, i: int, j: int) -> int:
    """
    Closed form of the cyclotomic number (i, j), branching on the parity
    of (p-1)(q-1)/4.
    """
    _validate_primes(p, q)
    _validate_gcd(p, q)
    _check_pair(i, j)

    t = (p - 2) * (q - 2)
    if (p - 1) * (q - 1) // 4 % 2 == 0:
        return (t - 3) // 4 if (i, j) == (0, 1) else (t + 1) // 4
    return (t + 3) // 4 if (i, j) == (0, 0) else (t - 1) // 4


def cyclotomic_numbers(ctx: CyclotomicContext) -> dict:
    """Direct values of all four cyclotomic numbers keyed by (i, j)."""
    return {
        (i, j): cyclotomic_number_direct(ctx, i, j)
        for i in (0, 1)
        for j in (0, 1)
    }


@dataclass(frozen=True)
class CyclotomicNumberRecord:
    i: int
    j: int
    direct: int
    closed_form: int

    @property
    def agrees(self) -> bool:
        return self.direct == self.closed_form


def cyclotomic_number_report(ctx: CyclotomicContext) -> List[CyclotomicNumberRecord]:
    records = [
        CyclotomicNumberRecord(
            i=i,
            j=j,
            direct=cyclotomic_number_direct(ctx, i, j),
            closed_form=cyclotomic_number_closed_form(ctx.p, ctx.q, i, j),
        )
        for i in (0, 1)
        for j in (0, 1)
    ]
    for record in records:
        if not record.agrees:
            logger.warning(
                "cyclotomic number (%d, %d) for %r: direct %d, closed form %d",
                record.i, record.j, ctx, record.direct, record.closed_form
            )
    return records


def row_sum_identity(ctx: CyclotomicContext, i: int) -> Tuple[int, int]:
    """
    (i, 0) + (i, 1) + |{c in C_i : c + 1 in P, Q or R}| together with e;
    the two values are equal for every context.
    """
    _check_pair(i, 0)
    members = np.asarray(ctx.members(LABELS[3 + i]), dtype=np.int64)
    shifted = ctx.labels[(members + 1) % ctx.n]
    outside = int(np.count_nonzero(shifted < 3))
    lhs = cyclotomic_number_direct(ctx, i, 0) + cyclotomic_number_direct(ctx, i, 1) + outside
    return lhs, ctx.e


# Class of -1.

@dataclass(frozen=True)
class MinusOneClass:
    label: str
    claimed: str

    @property
    def agrees(self) -> bool:
        return self.label == self.claimed


def minus_one_class(ctx: CyclotomicContext) -> MinusOneClass:
    """
    Directly computed class of -1 = n - 1, next to the published claim
    "-1 in C0 iff (p-1)(q-1)/4 is even".
    """
    label = classify(ctx, ctx.n - 1)
    claimed = Label.C0 if (ctx.p - 1) * (ctx.q - 1) // 4 % 2 == 0 else Label.C1
    result = MinusOneClass(label=label, claimed=claimed)
    if not result.agrees:
        logger.warning(
            "-1 lies in %s for %r, the published rule predicts %s",
            label, ctx, claimed
        )
    return result


# Parities of the cyclotomic numbers for mixed residues.

@dataclass(frozen=True)
class ParityPattern:
    omega_sum: int
    # parity shared by (0, 0), (1, 0) and (1, 1)
    shared: int
    # parity of (0, 1)
    cross: int

    def parity(self, i: int, j: int) -> int:
        _check_pair(i, j)
        return self.cross if (i, j) == (0, 1) else self.shared


def parity_pattern(p: int, q: int) -> ParityPattern:
    """
    Parities of the cyclotomic numbers when one of p, q is 1 mod 4 and the
    other 3 mod 4. With p = 4w + r, q = 4w' + r', the parity of w + w'
    decides: even gives (0,0) = (1,0) = (1,1) = 0 and (0,1) = 1 (mod 2),
    odd gives the complementary pattern.

    :raises HypothesisError:
        if p and q are congruent modulo 4.
    """
    _validate_primes(p, q)
    _validate_gcd(p, q)
    if p % 4 == q % 4:
        raise HypothesisError(
            "parity rule hypotheses not met: p = {} and q = {} are both {} mod 4".format(
                p, q, p % 4
            ),
            condition="p and q in distinct residue classes mod 4"
        )

    omega_sum = p // 4 + q // 4
    if omega_sum % 2 == 0:
        return ParityPattern(omega_sum=omega_sum, shared=0, cross=1)
    return ParityPattern(omega_sum=omega_sum, shared=1, cross=0)
