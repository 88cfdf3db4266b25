from dataclasses import dataclass
from logging import getLogger
from typing import List, Optional, Tuple

from ..circulant import MaskVector
from ..codes.constants import CodeKind, DistanceMethod
from ..codes.distance import Budget, min_distance
from ..codes.reports import CodeReport, build_report
from ..exceptions import DistanceBudgetExceeded
from ..settings import Settings
from .constants import Verdict
from .theorems import ConstructionRequest

logger = getLogger(__name__)


@dataclass(frozen=True)
class TableRow:
    label: str
    request: ConstructionRequest
    # published [N, k, d]
    parameters: Tuple[int, int, int]
    comment: str = ""


@dataclass(frozen=True)
class RowOutcome:
    row: TableRow
    report: Optional[CodeReport]
    verdict: str
    reason: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS


@dataclass(frozen=True)
class TableReport:
    outcomes: Tuple[RowOutcome, ...]

    @property
    def passed(self) -> bool:
        return all(outcome.passed for outcome in self.outcomes)

    @property
    def failures(self) -> List[RowOutcome]:
        return [outcome for outcome in self.outcomes if not outcome.passed]


def table_rows() -> List[TableRow]:
    """
    Published codes: three over GF(2) (the last an alternative with p and q
    exchanged) and two over GF(4), u = 2 and u + 1 = 3.
    """
    return [
        TableRow(
            label="GF(2) [70, 35, 10]",
            request=ConstructionRequest(
                p=5, q=7, field_order=2, kind=CodeKind.PURE, m=MaskVector((1, 0, 1, 0, 1))
            ),
            parameters=(70, 35, 10),
            comment="almost optimal",
        ),
        TableRow(
            label="GF(2) [72, 36, 12]",
            request=ConstructionRequest(
                p=5, q=7, field_order=2, kind=CodeKind.BORDERED, m=MaskVector((0, 1, 0, 1, 0)), alpha=0
            ),
            parameters=(72, 36, 12),
            comment="highest known",
        ),
        TableRow(
            label="GF(2) [72, 36, 12], p = 7, q = 5",
            request=ConstructionRequest(
                p=7, q=5, field_order=2, kind=CodeKind.BORDERED, m=MaskVector((0, 0, 1, 0, 1)), alpha=0
            ),
            parameters=(72, 36, 12),
            comment="alternative construction",
        ),
        TableRow(
            label="GF(4) [30, 15, 6]",
            request=ConstructionRequest(
                p=3, q=5, field_order=4, kind=CodeKind.PURE, m=MaskVector((1, 1, 0, 3, 2))
            ),
            parameters=(30, 15, 6),
        ),
        TableRow(
            label="GF(4) [32, 16, 8]",
            request=ConstructionRequest(
                p=3, q=5, field_order=4, kind=CodeKind.BORDERED, m=MaskVector((0, 0, 1, 3, 2)), alpha=0
            ),
            parameters=(32, 16, 8),
            comment="almost optimal",
        ),
    ]


def check_row(
    row: TableRow,
    method: str = DistanceMethod.INFOSET,
    budget: Budget = None,
    settings: Settings = None,
    include_elapsed: bool = False,
) -> RowOutcome:
    code = row.request.build()
    try:
        distance = min_distance(code, method=method, budget=budget, settings=settings)
    except DistanceBudgetExceeded as e:
        logger.warning("%s: %s", row.label, e)
        return RowOutcome(
            row=row,
            report=build_report(code, row.request, include_elapsed=include_elapsed),
            verdict=Verdict.FAIL,
            reason="distance budget exhausted, {} <= d <= {}".format(*e.interval),
        )

    report = build_report(code, row.request, distance=distance, include_elapsed=include_elapsed)
    computed = (report.N, report.k, report.d)

    reasons = []
    if computed != row.parameters:
        reasons.append("computed [{}, {}, {}], published [{}, {}, {}]".format(*computed, *row.parameters))
    if not report.self_dual:
        reasons.append("not self-dual")
    if report.bound is not None and report.d > report.bound:
        reasons.append("d = {} exceeds the bound {}".format(report.d, report.bound))

    verdict = Verdict.FAIL if reasons else Verdict.PASS
    log = logger.warning if reasons else logger.info
    log("%s: %s %s", row.label, report.parameters, verdict)
    return RowOutcome(row=row, report=report, verdict=verdict, reason="; ".join(reasons))


def reproduce_tables(
    method: str = DistanceMethod.INFOSET,
    budget: Budget = None,
    settings: Settings = None,
    include_elapsed: bool = False,
) -> TableReport:
    """
    Build every published code, compute [N, k, d] exactly and compare,
    with the self-dual distance bound attached to each row.
    """
    settings = settings or Settings.from_env()
    budget = budget or Budget.from_settings(settings)
    return TableReport(outcomes=tuple(
        check_row(row, method=method, budget=budget, settings=settings, include_elapsed=include_elapsed)
        for row in table_rows()
    ))
