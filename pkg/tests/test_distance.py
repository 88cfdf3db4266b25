import numpy as np
import pytest

from cyclocode.circulant import GfMatrix
from cyclocode.codes.constants import DistanceMethod
from cyclocode.codes.distance import Budget, information_sets, min_distance
from cyclocode.codes.linear import LinearCode, bordered_pdc, pure_pdc
from cyclocode.codes.packing import BinaryPacker, QuaternaryPacker
from cyclocode.codes.reports import build_report
from cyclocode.constructions.tables import table_rows
from cyclocode.exceptions import DistanceBudgetExceeded, ParameterError
from cyclocode.gf import all_vectors
from cyclocode.settings import Settings

from .samples import GF2, GF3, GF4, HAMMING, code, ctx, doubled_identity, mask, random_codes

SETTINGS = Settings(threads=2)


def assert_certificate(sample, result):
    assert sample.contains(result.certificate)
    assert np.count_nonzero(result.certificate) == result.distance


def test_doubled_identity():
    sample = doubled_identity(GF2, 3)
    result = min_distance(sample, settings=SETTINGS)
    assert result.distance == 2
    assert result.method == DistanceMethod.EXHAUSTIVE
    # lexicographically smallest weight-2 word
    assert result.certificate.tolist() == [0, 0, 1, 0, 0, 1]
    assert sample.minimum_distance == 2


@pytest.mark.parametrize("method", [DistanceMethod.EXHAUSTIVE, DistanceMethod.INFOSET])
def test_hamming_code(method):
    sample = code(GF2, HAMMING)
    result = min_distance(sample, method=method, settings=SETTINGS)
    assert result.distance == 3
    assert_certificate(sample, result)


def test_repetition_code_gf3():
    sample = code(GF3, [[1, 2, 1, 1, 2]])
    result = min_distance(sample, method=DistanceMethod.INFOSET, settings=SETTINGS)
    assert result.distance == 5
    assert result.certificate.tolist() == [1, 2, 1, 1, 2]


@pytest.mark.parametrize("sample", random_codes(24), ids=lambda sample: sample.name)
def test_methods_agree(sample):
    exhaustive = min_distance(sample, method=DistanceMethod.EXHAUSTIVE, settings=SETTINGS)
    infoset = min_distance(sample, method=DistanceMethod.INFOSET, settings=SETTINGS)
    assert exhaustive.distance == infoset.distance
    assert_certificate(sample, exhaustive)
    assert_certificate(sample, infoset)


@pytest.mark.parametrize(
    "sample", [sample for sample in random_codes(24) if sample.field.order > 2],
    ids=lambda sample: sample.name
)
def test_projective_messages_match_full_enumeration(sample):
    field = sample.field
    weights, projective = [], []
    for message in all_vectors(field, sample.dimension):
        if not any(message):
            continue
        weight = int(np.count_nonzero(sample.encode(message)))
        weights.append(weight)
        if next(s for s in message if s) == 1:
            projective.append(weight)
    least = min(weights)
    assert min(projective) == least
    assert weights.count(least) == (field.order - 1) * projective.count(least)
    assert min_distance(sample, method=DistanceMethod.EXHAUSTIVE, settings=SETTINGS).distance == least


@pytest.mark.slow
@pytest.mark.parametrize("row", table_rows(), ids=lambda row: row.label)
def test_methods_agree_on_truncated_table_codes(row):
    full = row.request.build()
    field = full.field
    k = 1
    while field.order ** (k + 1) <= 2 ** 20:
        k += 1
    sample = LinearCode(GfMatrix(field, full.generator.entries[:k]), name=row.label)
    assert sample.dimension == k
    exhaustive = min_distance(sample, method=DistanceMethod.EXHAUSTIVE, settings=SETTINGS)
    infoset = min_distance(sample, method=DistanceMethod.INFOSET, settings=SETTINGS)
    assert exhaustive.distance == infoset.distance
    # a subcode keeps at least the distance of the full code
    assert exhaustive.distance >= row.parameters[2]
    assert_certificate(sample, exhaustive)
    assert_certificate(sample, infoset)


def test_exhaustive_is_independent_of_worker_count():
    sample = pure_pdc(ctx(3, 5), GF2, mask(1, 0, 0, 0, 0))
    one = min_distance(sample, method=DistanceMethod.EXHAUSTIVE, threads=1, settings=SETTINGS)
    four = min_distance(sample, method=DistanceMethod.EXHAUSTIVE, threads=4, settings=SETTINGS)
    assert one.distance == four.distance == 2
    assert one.certificate.tolist() == four.certificate.tolist()


def test_information_sets_cover_every_column():
    sample = pure_pdc(ctx(3, 5), GF4, mask(1, 1, 0, 3, 2))
    sets = information_sets(sample.basis, GF4)
    covered = set()
    for info in sets:
        assert len(info.columns) == sample.dimension
        assert info.generator[:, list(info.columns)].tolist() == np.eye(15, dtype=int).tolist()
        covered.update(info.columns)
    assert covered == set(range(30))
    assert sets[0].relative_rank == 15


def test_budget_exhausted():
    sample = pure_pdc(ctx(5, 7), GF2, mask(1, 0, 1, 0, 1))
    with pytest.raises(DistanceBudgetExceeded) as exc_info:
        min_distance(sample, method=DistanceMethod.INFOSET, budget=Budget(max_evaluations=100))
    lower, upper = exc_info.value.interval
    assert upper is not None
    assert lower <= upper
    assert sample.contains(exc_info.value.certificate)


def test_exhaustive_refuses_oversized_enumeration():
    sample = pure_pdc(ctx(5, 7), GF2, mask(1, 0, 1, 0, 1))
    with pytest.raises(DistanceBudgetExceeded):
        min_distance(sample, method=DistanceMethod.EXHAUSTIVE, budget=Budget(max_evaluations=1000))


def test_zero_code():
    with pytest.raises(ParameterError) as exc_info:
        min_distance(code(GF2, [[0, 0, 0]]), settings=SETTINGS)
    assert exc_info.value.parameter == "code"


def test_unknown_method():
    with pytest.raises(ParameterError) as exc_info:
        min_distance(code(GF2, HAMMING), method="guess", settings=SETTINGS)
    assert exc_info.value.parameter == "method"


def test_packers():
    binary = BinaryPacker(10)
    word = np.array([1, 0, 0, 1, 1, 0, 0, 0, 0, 1])
    assert binary.weight(binary.pack(word)) == 4
    assert binary.unpack(binary.pack(word)).tolist() == word.tolist()

    quaternary = QuaternaryPacker(5)
    row = np.array([0, 1, 2, 3, 1])
    packed = quaternary.pack(row)
    assert quaternary.weight(packed) == 4
    for scalar in (1, 2, 3):
        assert quaternary.unpack(quaternary.scale(scalar, packed)).tolist() == GF4.mul(scalar, row).tolist()


def test_report_of_doubled_identity():
    sample = doubled_identity(GF2, 12)
    report = build_report(sample, distance=min_distance(sample, settings=SETTINGS), include_elapsed=False)
    assert report.parameters == "[24, 12, 2]"
    assert report.bound == 8
    assert report.extremal is False
    assert report.as_record() == {
        "l": 2,
        "N": 24,
        "k": 12,
        "d": 2,
        "method": "exhaustive",
        "self_dual": True,
        "bound": 8,
        "extremal": False,
    }


def test_report_without_distance():
    record = build_report(pure_pdc(ctx(3, 5), GF3, mask(1, 0, 0, 0, 0))).as_record()
    assert "d" not in record
    assert "bound" not in record
    assert record["self_dual"] is False


@pytest.mark.slow
@pytest.mark.parametrize("p, q, field, kind, m, alpha, expected", [
    (5, 7, GF2, "pure", (1, 0, 1, 0, 1), None, 10),
    (5, 7, GF2, "bordered", (0, 1, 0, 1, 0), 0, 12),
    (7, 5, GF2, "bordered", (0, 0, 1, 0, 1), 0, 12),
    (3, 5, GF4, "pure", (1, 1, 0, 3, 2), None, 6),
    (3, 5, GF4, "bordered", (0, 0, 1, 3, 2), 0, 8),
])
def test_published_distances(p, q, field, kind, m, alpha, expected):
    context = ctx(p, q)
    if kind == "pure":
        sample = pure_pdc(context, field, mask(*m))
    else:
        sample = bordered_pdc(context, field, alpha, mask(*m))
    result = min_distance(sample, method=DistanceMethod.INFOSET, settings=SETTINGS)
    assert result.distance == expected
    assert_certificate(sample, result)
    if field.order == 2:
        assert result.distance % 2 == 0
