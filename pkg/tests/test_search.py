import pytest

from cyclocode.codes.constants import CodeKind
from cyclocode.codes.distance import Budget
from cyclocode.constructions.constants import Family
from cyclocode.constructions.search import border_corner, search_self_dual
from cyclocode.constructions.theorems import self_duality_conditions
from cyclocode.settings import Settings

from .samples import GF2, GF3, GF4, GF5, ctx, mask

SETTINGS = Settings(threads=2)


def values_of(result):
    return [hit.request.m.values for hit in result.hits]


def test_search_pure_binary_5_7():
    result = search_self_dual(ctx(5, 7), GF2, CodeKind.PURE, settings=SETTINGS)
    assert values_of(result) == [(1, 0, 0, 0, 0), (1, 0, 1, 0, 1), (1, 0, 1, 1, 0)]
    assert result.scanned == 32
    assert result.pruned == 0
    assert result.disagreements == ()
    assert result.complete
    assert result.swap_closed
    assert all(hit.report.self_dual for hit in result.hits)


def test_search_compares_with_family():
    result = search_self_dual(ctx(5, 7), GF2, CodeKind.PURE, settings=SETTINGS)
    assert result.family.family == Family.BINARY
    assert result.family.complete
    assert not result.family.exhaustive
    assert [request.m.values for request in result.family.extra] == [(1, 0, 0, 0, 0)]


def test_search_bordered_binary_5_7():
    result = search_self_dual(ctx(5, 7), GF2, CodeKind.BORDERED, settings=SETTINGS)
    # alpha = 1 leaves 1 + 35 + 1 = 1 in the corner
    assert result.pruned == 32
    assert result.scanned == 32
    assert values_of(result) == [(0, 1, 0, 0, 1), (0, 1, 0, 1, 0), (0, 1, 1, 1, 1)]
    assert all(hit.request.alpha == 0 for hit in result.hits)
    assert result.disagreements == ()
    assert result.family.complete
    assert result.swap_closed


def test_search_is_independent_of_worker_count():
    one = search_self_dual(ctx(7, 5), GF2, CodeKind.BORDERED, threads=1, settings=SETTINGS)
    three = search_self_dual(ctx(7, 5), GF2, CodeKind.BORDERED, threads=3, settings=SETTINGS)
    assert values_of(one) == values_of(three)
    assert [hit.report for hit in one.hits] == [hit.report for hit in three.hits]


def test_search_pure_quaternary_3_5():
    result = search_self_dual(ctx(3, 5), GF4, CodeKind.PURE, settings=SETTINGS)
    found = values_of(result)
    assert (1, 1, 0, 3, 2) in found
    assert (1, 1, 0, 2, 3) in found
    assert result.scanned == 1024
    assert result.disagreements == ()
    assert result.swap_closed
    assert result.family.family == Family.QUATERNARY
    assert result.family.complete


def test_search_with_distances():
    result = search_self_dual(ctx(3, 5), GF2, CodeKind.PURE, compute_distance=True, settings=SETTINGS)
    assert result.hits
    for hit in result.hits:
        assert hit.report.d is not None
        assert hit.report.d <= hit.report.bound
        assert hit.report.d % 2 == 0


def test_search_without_family():
    result = search_self_dual(ctx(3, 5), GF3, CodeKind.PURE, settings=SETTINGS)
    assert result.family is None
    assert result.scanned == 243


def test_search_out_of_time():
    result = search_self_dual(
        ctx(5, 7), GF2, CodeKind.PURE, budget=Budget(max_seconds=-1), settings=SETTINGS
    )
    assert not result.complete
    assert result.hits == ()
    assert result.scanned == 0


def test_border_corner():
    assert border_corner(ctx(5, 7), GF2, 0) == 0
    assert border_corner(ctx(5, 7), GF2, 1) == 1
    # 1 + 15 + 1 = 2 in GF(3)
    assert border_corner(ctx(3, 5), GF3, 1) == 2


def test_printed_corner_passes_where_true_corner_fails():
    # n = 35 = 0 in GF(5): alpha + n = -1 holds for alpha = 4, but 16 + 0 + 1 = 2
    context = ctx(5, 7)
    assert border_corner(context, GF5, 4) == 2
    report = self_duality_conditions(context, GF5, CodeKind.BORDERED, mask(0, 4, 0, 0, 4), alpha=4)
    assert report.verdict


@pytest.mark.slow
def test_search_reports_pruned_candidates_passing_the_criteria():
    result = search_self_dual(ctx(5, 7), GF5, CodeKind.BORDERED, settings=SETTINGS)
    # alpha in {0, 1, 4} leaves a nonzero corner
    assert result.pruned == 3 * 5 ** 5
    assert result.scanned == 2 * 5 ** 5
    pruned = [
        disagreement for disagreement in result.disagreements
        if disagreement.request.alpha in (0, 1, 4)
    ]
    assert len(pruned) == 4
    assert all(d.criteria and not d.self_dual for d in pruned)
    found = {d.request.m.values for d in pruned}
    assert {(0, 4, 0, 0, 4), (0, 4, 0, 4, 0), (1, 0, 3, 2, 3)} <= found
    sort_keys = [d.request.sort_key() for d in result.disagreements]
    assert sort_keys == sorted(sort_keys)
