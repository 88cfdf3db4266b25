"""
Exhaustive sweep of mask space for self-dual pure and bordered codes.

Every m in GF(l)^5 is scanned (and every alpha for bordered codes). The
direct self-duality check is the verdict; the coefficient criteria run next
to it and every candidate where the two disagree is reported.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from logging import getLogger
from typing import List, Optional, Tuple

from ..circulant import MaskVector, d_coefficients_direct
from ..codes.constants import CodeKind
from ..codes.distance import Budget, min_distance
from ..codes.linear import is_self_dual
from ..codes.reports import CodeReport, build_report
from ..cyclotomy import CyclotomicContext
from ..exceptions import DecompositionError, DistanceBudgetExceeded, HypothesisError
from ..gf import FieldSpec, all_vectors
from ..settings import Settings
from .constants import Family
from .theorems import ConstructionRequest, family_requests, self_duality_conditions

logger = getLogger(__name__)


@dataclass(frozen=True)
class SearchHit:
    request: ConstructionRequest
    report: CodeReport


@dataclass(frozen=True)
class Disagreement:
    request: ConstructionRequest
    criteria: bool
    self_dual: bool


@dataclass(frozen=True)
class FamilyComparison:
    family: str
    # family masks absent from the hits
    missing: Tuple[ConstructionRequest, ...]
    # hits outside the family
    extra: Tuple[ConstructionRequest, ...]

    @property
    def complete(self) -> bool:
        """Every family mask was found."""
        return not self.missing

    @property
    def exhaustive(self) -> bool:
        """The family masks are all the hits there are."""
        return not self.missing and not self.extra


@dataclass(frozen=True)
class SearchResult:
    p: int
    q: int
    field_order: int
    kind: str
    hits: Tuple[SearchHit, ...]
    scanned: int
    pruned: int
    disagreements: Tuple[Disagreement, ...]
    complete: bool
    family: Optional[FamilyComparison]

    @property
    def hit_count(self) -> int:
        return len(self.hits)

    @property
    def masks(self) -> List[MaskVector]:
        return [hit.request.m.with_alpha(hit.request.alpha) for hit in self.hits]

    @property
    def swap_closed(self) -> bool:
        """The hit set is closed under m3 <-> m4."""
        found = set(self.masks)
        return all(mask.swapped() in found for mask in found)


def border_corner(ctx: CyclotomicContext, field: FieldSpec, alpha: int) -> int:
    """
    Corner entry alpha^2 + n + 1 of G G^T for a bordered generator; a
    nonzero value rules the code out whatever the mask.
    """
    return int(field.add(field.add(field.mul(alpha, alpha), field.from_int(ctx.n)), 1))


def _alphas(ctx: CyclotomicContext, field: FieldSpec, kind: str) -> Tuple[list, list]:
    """Alphas to build and alphas ruled out by the corner entry."""
    if kind == CodeKind.PURE:
        return [None], []
    kept, pruned = [], []
    for alpha in field.elements():
        (kept if border_corner(ctx, field, alpha) == 0 else pruned).append(alpha)
    return kept, pruned


def _family_comparison(ctx, field, kind, hits) -> Optional[FamilyComparison]:
    family = {2: Family.BINARY, 4: Family.QUATERNARY}.get(field.order)
    if family is None:
        return None
    try:
        expected = [
            request for request in family_requests(family, ctx.p, ctx.q)
            if request.kind == kind
        ]
    except HypothesisError:
        return None

    found = {hit.request for hit in hits}
    return FamilyComparison(
        family=family,
        missing=tuple(request for request in expected if request not in found),
        extra=tuple(sorted(
            (request for request in found if request not in set(expected)),
            key=ConstructionRequest.sort_key
        )),
    )


def search_self_dual(
    ctx: CyclotomicContext,
    field: FieldSpec,
    kind: str,
    compute_distance: bool = False,
    budget: Budget = None,
    threads: int = None,
    settings: Settings = None,
) -> SearchResult:
    """
    Scan all masks (and alphas) for self-dual codes over `field`.

    Bordered candidates whose corner alpha^2 + n + 1 is nonzero are counted
    as pruned and never built. The coefficient criteria still run on them,
    and a pruned candidate that passes them is reported as a disagreement.
    Hits and disagreements come back sorted by (alpha, m).

    :param compute_distance:
        attach minimum distances to hits, only for lengths up to the
        configured limit (80 by default).
    :param budget:
        the wall-clock limit ends the scan early with `complete` unset; the
        budget is also handed to every distance computation.
    """
    settings = settings or Settings.from_env()
    budget = budget or Budget.from_settings(settings)
    threads = threads or settings.threads

    alphas, pruned_alphas = _alphas(ctx, field, kind)
    masks = [MaskVector(values) for values in all_vectors(field, 5)]
    started = time.monotonic()
    logger.debug(
        "searching %d masks x %d alphas for %s codes over GF(%d) on %r",
        len(masks), len(alphas), kind, field.order, ctx
    )

    def scan(chunk):
        outcomes = []
        for m in chunk:
            if time.monotonic() - started > budget.max_seconds:
                return outcomes, False
            try:
                coefficients = d_coefficients_direct(ctx, field, m)
            except DecompositionError:
                coefficients = None
            for alpha in alphas:
                request = ConstructionRequest(
                    p=ctx.p, q=ctx.q, field_order=field.order, kind=kind, m=m, alpha=alpha
                )
                criteria = coefficients is not None and self_duality_conditions(
                    ctx, field, kind, m, alpha=alpha, coefficients=coefficients
                ).verdict
                code = request.build()
                outcomes.append((request, code, criteria, is_self_dual(code)))
            if coefficients is None:
                continue
            for alpha in pruned_alphas:
                if self_duality_conditions(
                    ctx, field, kind, m, alpha=alpha, coefficients=coefficients
                ).verdict:
                    # a nonzero corner already rules out self-duality
                    request = ConstructionRequest(
                        p=ctx.p, q=ctx.q, field_order=field.order, kind=kind, m=m, alpha=alpha
                    )
                    outcomes.append((request, None, True, False))
        return outcomes, True

    workers = max(1, min(threads, len(masks)))
    chunks = [masks[i::workers] for i in range(workers)]
    if workers == 1:
        partials = [scan(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(scan, chunks))

    complete = all(finished for _, finished in partials)
    outcomes = sorted(
        (outcome for chunk, _ in partials for outcome in chunk),
        key=lambda outcome: outcome[0].sort_key()
    )

    hits, disagreements = [], []
    for request, code, criteria, self_dual in outcomes:
        if criteria != self_dual:
            logger.warning(
                "%s: coefficient criteria say %s, direct check says %s",
                request.describe(), criteria, self_dual
            )
            disagreements.append(Disagreement(request=request, criteria=criteria, self_dual=self_dual))
        if not self_dual:
            continue

        distance = None
        if compute_distance and code.length <= settings.search_distance_max_length:
            try:
                distance = min_distance(code, budget=budget, threads=threads, settings=settings)
            except DistanceBudgetExceeded as e:
                logger.warning("%s: no distance, %s", request.describe(), e)
        hits.append(SearchHit(
            request=request,
            report=build_report(code, request, distance=distance, include_elapsed=False),
        ))

    if not complete:
        logger.warning("search over %r stopped after %.0fs", ctx, budget.max_seconds)

    result = SearchResult(
        p=ctx.p,
        q=ctx.q,
        field_order=field.order,
        kind=kind,
        hits=tuple(hits),
        scanned=sum(1 for _, code, _, _ in outcomes if code is not None),
        pruned=len(pruned_alphas) * len(masks),
        disagreements=tuple(disagreements),
        complete=complete,
        family=_family_comparison(ctx, field, kind, hits),
    )
    logger.info(
        "%s codes over GF(%d) on %r: %d hits in %d candidates (%d pruned)",
        kind, field.order, ctx, result.hit_count, result.scanned, result.pruned
    )
    return result
