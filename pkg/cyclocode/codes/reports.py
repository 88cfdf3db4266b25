import json
from dataclasses import dataclass
from typing import Dict, Optional

from .. import utils
from .bounds import self_dual_bound
from .distance import DistanceResult
from .linear import LinearCode, is_self_dual


@dataclass(frozen=True)
class CodeReport:
    """
    One code with its provenance, parameters [N, k, d], self-duality
    verdict and distance bound.
    """
    p: Optional[int]
    q: Optional[int]
    l: int
    kind: Optional[str]
    alpha: Optional[str]
    m: Optional[str]
    N: int
    k: int
    d: Optional[int]
    method: Optional[str]
    self_dual: bool
    bound: Optional[int]
    bound_rule: Optional[str]
    elapsed_ms: Optional[int]

    @property
    def parameters(self) -> str:
        if self.d is None:
            return "[{}, {}]".format(self.N, self.k)
        return "[{}, {}, {}]".format(self.N, self.k, self.d)

    @property
    def extremal(self) -> Optional[bool]:
        if self.d is None or self.bound is None:
            return None
        return self.d == self.bound

    def as_record(self) -> Dict:
        """
        Flat record with the fields p, q, l, kind, alpha, m, N, k, d, method,
        self_dual, bound, extremal, elapsed_ms; unknown values are dropped.
        """
        return utils.clean_data({
            "p": self.p,
            "q": self.q,
            "l": self.l,
            "kind": self.kind,
            "alpha": self.alpha,
            "m": self.m,
            "N": self.N,
            "k": self.k,
            "d": self.d,
            "method": self.method,
            "self_dual": self.self_dual,
            "bound": self.bound,
            "extremal": self.extremal,
            "elapsed_ms": self.elapsed_ms,
        })

    def as_json(self) -> str:
        return json.dumps(self.as_record(), sort_keys=False, separators=(", ", ": "))


def build_report(
    code: LinearCode,
    request=None,
    distance: DistanceResult = None,
    include_elapsed: bool = True,
) -> CodeReport:
    """
    Summarize `code`. `request` is a ConstructionRequest or None for codes
    without cyclotomic provenance.
    """
    field = code.field
    self_dual = is_self_dual(code)
    distance = distance or code.distance_result

    bound = rule = None
    if self_dual:
        bound, rule = self_dual_bound(field.order, code.length)

    m = alpha = None
    if request is not None:
        m = ",".join(field.format(value) for value in request.m.values)
        if request.alpha is not None:
            alpha = field.format(request.alpha)

    return CodeReport(
        p=getattr(request, "p", None),
        q=getattr(request, "q", None),
        l=field.order,
        kind=getattr(request, "kind", None),
        alpha=alpha,
        m=m,
        N=code.length,
        k=code.dimension,
        d=distance.distance if distance else None,
        method=distance.method if distance else None,
        self_dual=self_dual,
        bound=bound,
        bound_rule=rule,
        elapsed_ms=distance.elapsed_ms if distance and include_elapsed else None,
    )
