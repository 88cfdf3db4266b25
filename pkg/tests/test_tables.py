import pytest

from cyclocode.codes.constants import CodeKind, DistanceMethod
from cyclocode.codes.distance import Budget
from cyclocode.constructions.constants import Verdict
from cyclocode.constructions.tables import TableRow, check_row, reproduce_tables, table_rows
from cyclocode.constructions.theorems import ConstructionRequest
from cyclocode.settings import Settings

from .samples import mask

SETTINGS = Settings(threads=2)

DOUBLED_IDENTITY = ConstructionRequest(
    p=3, q=5, field_order=2, kind=CodeKind.PURE, m=mask(1, 0, 0, 0, 0)
)


def test_table_rows():
    rows = table_rows()
    assert [row.parameters for row in rows] == [
        (70, 35, 10),
        (72, 36, 12),
        (72, 36, 12),
        (30, 15, 6),
        (32, 16, 8),
    ]
    assert rows[2].request.p == 7
    assert rows[2].request.m.values == (0, 0, 1, 0, 1)
    assert [row.request.build().length for row in rows] == [70, 72, 72, 30, 32]


def test_check_row_pass():
    outcome = check_row(
        TableRow(label="doubled identity", request=DOUBLED_IDENTITY, parameters=(30, 15, 2)),
        settings=SETTINGS,
    )
    assert outcome.passed
    assert outcome.verdict == Verdict.PASS
    assert outcome.report.bound == 8
    assert outcome.reason == ""


def test_check_row_mismatch():
    outcome = check_row(
        TableRow(label="doubled identity", request=DOUBLED_IDENTITY, parameters=(30, 15, 4)),
        method=DistanceMethod.EXHAUSTIVE,
        settings=SETTINGS,
    )
    assert not outcome.passed
    assert outcome.reason == "computed [30, 15, 2], published [30, 15, 4]"


def test_check_row_budget():
    row = table_rows()[0]
    outcome = check_row(row, budget=Budget(max_evaluations=50), settings=SETTINGS)
    assert outcome.verdict == Verdict.FAIL
    assert outcome.reason.startswith("distance budget exhausted")


@pytest.mark.slow
def test_reproduce_tables():
    report = reproduce_tables(settings=SETTINGS)
    assert report.passed, [(outcome.row.label, outcome.reason) for outcome in report.failures]
    assert [outcome.report.bound for outcome in report.outcomes] == [14, 16, 16, 12, 12]
    assert [outcome.report.parameters for outcome in report.outcomes] == [
        "[70, 35, 10]",
        "[72, 36, 12]",
        "[72, 36, 12]",
        "[30, 15, 6]",
        "[32, 16, 8]",
    ]
