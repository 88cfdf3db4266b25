from dataclasses import dataclass
from logging import getLogger
from typing import List, Optional, Tuple

from ..circulant import (
    DCoefficients,
    MaskVector,
    d_coefficients_closed_form,
    d_coefficients_direct,
)
from ..codes.constants import CodeKind
from ..codes.linear import LinearCode, bordered_pdc, is_self_dual, pure_pdc
from ..cyclotomy import CyclotomicContext, build_context
from ..exceptions import ConstructionError, FormatError, HypothesisError
from ..gf import FieldSpec, make_field
from .constants import Family

logger = getLogger(__name__)


@dataclass(frozen=True)
class ConstructionRequest:
    p: int
    q: int
    field_order: int
    kind: str
    m: MaskVector
    alpha: Optional[int] = None

    def __post_init__(self):
        if self.kind not in CodeKind:
            raise FormatError("unknown code kind {!r}".format(self.kind))
        if self.kind == CodeKind.BORDERED and self.alpha is None:
            raise FormatError("a bordered construction needs alpha")
        if self.kind == CodeKind.PURE and self.alpha is not None:
            raise FormatError("a pure construction takes no alpha")

    @property
    def field(self) -> FieldSpec:
        return make_field(self.field_order)

    @property
    def context(self) -> CyclotomicContext:
        return build_context(self.p, self.q)

    def build(self) -> LinearCode:
        field = self.field
        if self.kind == CodeKind.PURE:
            return pure_pdc(self.context, field, self.m)
        return bordered_pdc(self.context, field, self.alpha, self.m)

    def describe(self) -> str:
        """
        Examples:
            pure (1,0,1,0,1) over GF(2), p=5, q=7
            bordered (0; 0,0,1,u+1,u) over GF(4), p=3, q=5
        """
        return "{} {} over GF({}), p={}, q={}".format(
            self.kind, self.m.with_alpha(self.alpha).format(self.field),
            self.field_order, self.p, self.q
        )

    def sort_key(self) -> Tuple:
        return (-1 if self.alpha is None else self.alpha,) + self.m.values


# Coefficient conditions for self-duality.

@dataclass(frozen=True)
class Condition:
    name: str
    expected: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class ConditionReport:
    kind: str
    coefficients: DCoefficients
    conditions: Tuple[Condition, ...]
    # None where the closed form does not apply
    closed_form_agrees: Optional[bool]

    @property
    def verdict(self) -> bool:
        return all(condition.passed for condition in self.conditions)

    @property
    def failures(self) -> List[Condition]:
        return [condition for condition in self.conditions if not condition.passed]


def border_sum(ctx: CyclotomicContext, field: FieldSpec, alpha: int, m: MaskVector) -> int:
    """
    S = -alpha + m0 + (p-1) m1 + (q-1) m2 + ((p-1)(q-1)/2)(m3 + m4),
    integer multipliers taken modulo the characteristic.
    """
    m0, m1, m2, m3, m4 = m.values
    terms = [
        field.neg(alpha),
        m0,
        field.mul(field.from_int(ctx.p - 1), m1),
        field.mul(field.from_int(ctx.q - 1), m2),
        field.mul(field.from_int(ctx.e), field.add(m3, m4)),
    ]
    total = 0
    for term in terms:
        total = int(field.add(total, term))
    return total


def self_duality_conditions(
    ctx: CyclotomicContext,
    field: FieldSpec,
    kind: str,
    m: MaskVector,
    alpha: int = None,
    coefficients: DCoefficients = None,
) -> ConditionReport:
    """
    Evaluate the coefficient criteria for self-duality of the pure or
    bordered code, each condition reported on its own.

    pure:      D0 = -1 and D1 = D2 = D3 = D4 = 0
    bordered:  alpha + n = -1, S = 0, D0 = -2 and D1 = D2 = D3 = D4 = -1

    The coefficients come from the direct product M M^T (pass them in to
    reuse a computation); in characteristic 2 on mixed-residue contexts they
    are cross-checked against the closed form.

    :raises DecompositionError:
        propagated from the direct expansion.
    """
    m.validate(field)
    if coefficients is None:
        coefficients = d_coefficients_direct(ctx, field, m)

    closed_form_agrees = None
    if ctx.is_mixed and field.characteristic == 2:
        closed = d_coefficients_closed_form(ctx, field, m)
        closed_form_agrees = closed == coefficients
        if not closed_form_agrees:
            logger.warning(
                "closed-form coefficients %s differ from direct %s for %r, mask %s",
                closed.values, coefficients.values, ctx, m.format(field)
            )

    minus_one = int(field.neg(1))
    minus_two = int(field.neg(field.from_int(2)))
    d = coefficients.values

    if kind == CodeKind.PURE:
        conditions = [Condition("D0 = -1", minus_one, d[0])]
        conditions += [Condition("D{} = 0".format(i), 0, d[i]) for i in range(1, 5)]
    elif kind == CodeKind.BORDERED:
        if alpha is None:
            raise FormatError("a bordered construction needs alpha")
        alpha = field.validate(alpha)
        conditions = [
            Condition("alpha + n = -1", minus_one, int(field.add(alpha, field.from_int(ctx.n)))),
            Condition("S = 0", 0, border_sum(ctx, field, alpha, m)),
            Condition("D0 = -2", minus_two, d[0]),
        ]
        conditions += [Condition("D{} = -1".format(i), minus_one, d[i]) for i in range(1, 5)]
    else:
        raise FormatError("unknown code kind {!r}".format(kind))

    return ConditionReport(
        kind=kind,
        coefficients=coefficients,
        conditions=tuple(conditions),
        closed_form_agrees=closed_form_agrees,
    )


# Families over GF(2) and GF(4).

# u = 2, u + 1 = 3
_FAMILY_MASKS = {
    (Family.BINARY, 1): {
        CodeKind.PURE: [(None, (1, 0, 1, 0, 1)), (None, (1, 0, 1, 1, 0))],
        CodeKind.BORDERED: [(0, (0, 1, 0, 1, 0)), (0, (0, 1, 0, 0, 1))],
    },
    (Family.BINARY, 3): {
        CodeKind.PURE: [(None, (1, 1, 0, 0, 1)), (None, (1, 1, 0, 1, 0))],
        CodeKind.BORDERED: [(0, (0, 0, 1, 1, 0)), (0, (0, 0, 1, 0, 1))],
    },
    (Family.QUATERNARY, 1): {
        CodeKind.PURE: [(None, (1, 0, 1, 3, 2)), (None, (1, 0, 1, 2, 3))],
        CodeKind.BORDERED: [(0, (0, 1, 0, 2, 3)), (0, (0, 1, 0, 3, 2))],
    },
    (Family.QUATERNARY, 3): {
        CodeKind.PURE: [(None, (1, 1, 0, 3, 2)), (None, (1, 1, 0, 2, 3))],
        CodeKind.BORDERED: [(0, (0, 0, 1, 3, 2)), (0, (0, 0, 1, 2, 3))],
    },
}

_FAMILY_FIELDS = {
    Family.BINARY: 2,
    Family.QUATERNARY: 4,
}


@dataclass(frozen=True)
class FamilyHypotheses:
    p: int
    q: int
    # (p-1)(q-1)/4
    product_quarter: int
    # p + q
    total: int

    @property
    def product_quarter_even(self) -> bool:
        return self.product_quarter % 2 == 0

    @property
    def sum_quarter(self) -> Optional[int]:
        """(p+q)/4 when it is an integer."""
        return self.total // 4 if self.total % 4 == 0 else None

    def violations(self, family: str) -> List[str]:
        """Failed hypotheses of `family`, in the order they are checked."""
        failed = []
        if not self.product_quarter_even:
            failed.append("(p-1)(q-1)/4 = {} is odd".format(self.product_quarter))
        if self.sum_quarter is None:
            failed.append("(p+q)/4 = {}/4 is not an integer".format(self.total))
        elif family == Family.BINARY and self.sum_quarter % 2 == 0:
            failed.append("(p+q)/4 = {} is even".format(self.sum_quarter))
        elif family == Family.QUATERNARY and self.sum_quarter % 2 == 1:
            failed.append("(p+q)/4 = {} is odd".format(self.sum_quarter))
        return failed

    def binding(self, family: str) -> List[str]:
        """
        Hypotheses that rule out this pair on their own; an evenness
        condition on (p-1)(q-1)/4 never binds when the parity of (p+q)/4
        is already decided.
        """
        return [
            violation for violation in self.violations(family)
            if not violation.startswith("(p-1)(q-1)/4") or self.sum_quarter is None
        ]


def family_hypotheses(p: int, q: int) -> FamilyHypotheses:
    build_context(p, q)
    return FamilyHypotheses(p=p, q=q, product_quarter=(p - 1) * (q - 1) // 4, total=p + q)


def family_requests(family: str, p: int, q: int) -> List[ConstructionRequest]:
    """
    The four masks of `family` for (p, q), pure codes first.

    :raises HypothesisError:
        naming the first violated hypothesis.
    """
    hypotheses = family_hypotheses(p, q)
    violations = hypotheses.violations(family)
    if violations:
        raise HypothesisError(
            "{} family hypotheses fail for p = {}, q = {}: {}".format(
                family, p, q, "; ".join(violations)
            ),
            condition=violations[0]
        )

    masks = _FAMILY_MASKS[family, p % 4]
    return [
        ConstructionRequest(
            p=p, q=q,
            field_order=_FAMILY_FIELDS[family],
            kind=kind,
            m=MaskVector(values),
            alpha=alpha,
        )
        for kind in (CodeKind.PURE, CodeKind.BORDERED)
        for alpha, values in masks[kind]
    ]


def _family_codes(family: str, p: int, q: int) -> List[Tuple[ConstructionRequest, LinearCode]]:
    result = []
    for request in family_requests(family, p, q):
        code = request.build()
        if not is_self_dual(code):
            raise ConstructionError(
                "{} is not self-dual".format(request.describe()),
                request=request
            )
        result.append((request, code))
    logger.info("%s family for p=%d, q=%d: %d self-dual codes", family, p, q, len(result))
    return result


def binary_family(p: int, q: int) -> List[Tuple[ConstructionRequest, LinearCode]]:
    """
    The four GF(2) codes for (p-1)(q-1)/4 even and (p+q)/4 odd: two pure of
    length 2pq and two bordered (alpha = 0) of length 2pq + 2, each checked
    with `is_self_dual` before it is returned.

    :raises HypothesisError:
        if a hypothesis fails.
    :raises ConstructionError:
        if a constructed code is not self-dual.

    Example:
        from cyclocode.constructions.theorems import binary_family

        for request, code in binary_family(5, 7):
            print(request.describe(), code.length, code.dimension)
    """
    return _family_codes(Family.BINARY, p, q)


def quaternary_family(p: int, q: int) -> List[Tuple[ConstructionRequest, LinearCode]]:
    """
    The four GF(4) codes for (p-1)(q-1)/4 even and (p+q)/4 even, each
    checked with `is_self_dual` before it is returned.

    :raises HypothesisError:
        if a hypothesis fails.
    :raises ConstructionError:
        if a constructed code is not self-dual.
    """
    return _family_codes(Family.QUATERNARY, p, q)
