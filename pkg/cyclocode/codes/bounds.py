from typing import NamedTuple

from ..exceptions import ParameterError
from .constants import BoundRule


class Bound(NamedTuple):
    bound: int
    rule: str


def self_dual_bound(field_order: int, length: int) -> Bound:
    """
    Upper bound on the minimum distance of a self-dual code of even length
    over GF(field_order):

        l = 2:  4 floor(N/24) + 4, or 4 floor(N/24) + 6 when N = 22 (mod 24)
        l = 3:  3 floor(N/12) + 3
        l = 4:  4 floor(N/12) + 4
        other:  floor(N/2) + 1

    A self-dual code meeting the bound is extremal.
    """
    if length < 2 or length % 2:
        raise ParameterError(
            "self-dual codes have even positive length, got {}".format(length), parameter="length"
        )
    if field_order < 2:
        raise ParameterError(
            "field order must be at least 2, got {}".format(field_order), parameter="field_order"
        )

    if field_order == 2:
        if length % 24 == 22:
            return Bound(4 * (length // 24) + 6, BoundRule.BINARY_22)
        return Bound(4 * (length // 24) + 4, BoundRule.BINARY)
    if field_order == 3:
        return Bound(3 * (length // 12) + 3, BoundRule.TERNARY)
    if field_order == 4:
        return Bound(4 * (length // 12) + 4, BoundRule.QUATERNARY)
    return Bound(length // 2 + 1, BoundRule.GENERAL)
