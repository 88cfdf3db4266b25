import pytest

from cyclocode.circulant import (
    BasisKind,
    GfMatrix,
    MaskVector,
    basis_matrix,
    d_coefficients_closed_form,
    d_coefficients_direct,
    decompose,
    dump_matrix,
    mask_matrix,
    parse_matrix,
    verify_algebra_identities,
)
from cyclocode.exceptions import DecompositionError, FieldError, FormatError, HypothesisError
from cyclocode.gf import TokenStyle, all_vectors

from .samples import GF2, GF3, GF4, GF5, ctx, mask


def test_matrix_arithmetic_gf4():
    a = GfMatrix(GF4, [[2]])
    assert (a @ a).tolist() == [[3]]
    assert (a + a).is_zero()
    assert (-a) == a


def test_matrix_product_prime_field():
    a = GfMatrix(GF5, [[1, 2], [3, 4]])
    b = GfMatrix(GF5, [[4, 0], [1, 1]])
    assert (a @ b).tolist() == [[1, 2], [1, 4]]
    assert (a - a).is_zero()
    assert a.scale(2).tolist() == [[2, 4], [1, 3]]


def test_matrix_fields_do_not_mix():
    with pytest.raises(FieldError):
        GfMatrix(GF2, [[1]]) @ GfMatrix(GF3, [[1]])


def test_matrix_rejects_values_outside_field():
    with pytest.raises(FieldError):
        GfMatrix(GF2, [[0, 2]])


def test_matrix_is_immutable():
    matrix = GfMatrix(GF2, [[0, 1]])
    with pytest.raises(ValueError):
        matrix.entries[0, 0] = 1


def test_stacking():
    left = GfMatrix.identity(GF3, 2)
    right = GfMatrix.ones(GF3, 2, 1)
    wide = GfMatrix.hstack([left, right])
    assert wide.shape == (2, 3)
    assert GfMatrix.vstack([wide, GfMatrix.zeros(GF3, 1, 3)]).tolist() == [
        [1, 0, 1],
        [0, 1, 1],
        [0, 0, 0],
    ]
    assert wide.take_columns([2]).tolist() == [[1], [1]]


def test_mask_matrix_is_circulant():
    context = ctx(3, 5)
    matrix = mask_matrix(context, GF4, mask(1, 1, 0, 3, 2)).entries
    for i in range(context.n):
        for j in range(context.n):
            assert matrix[i, j] == matrix[(i + 1) % context.n, (j + 1) % context.n]
    # labels of 0..4 are R, C0, C0, P, C0
    assert matrix[0, :5].tolist() == [1, 3, 3, 1, 3]


def test_basis_sums_to_all_ones():
    context = ctx(5, 7)
    total = basis_matrix(context, GF2, BasisKind.I)
    for kind in (BasisKind.P, BasisKind.Q, BasisKind.A1, BasisKind.A2):
        total = total + basis_matrix(context, GF2, kind)
    assert total == basis_matrix(context, GF2, BasisKind.J)


def test_transposes_on_mixed_context():
    context = ctx(5, 7)
    a1 = basis_matrix(context, GF2, BasisKind.A1)
    a2 = basis_matrix(context, GF2, BasisKind.A2)
    assert a1.T == a2


def test_decompose_mask_matrix():
    context = ctx(5, 7)
    assert decompose(context, mask_matrix(context, GF5, mask(4, 0, 1, 2, 3))) == (4, 0, 1, 2, 3)


def test_decompose_outside_span():
    context = ctx(3, 5)
    entries = [[0] * context.n for _ in range(context.n)]
    entries[0][1] = 1
    with pytest.raises(DecompositionError) as exc_info:
        decompose(context, GfMatrix(GF2, entries))
    assert exc_info.value.label == "C0"


def test_direct_coefficients_on_congruent_primes():
    assert d_coefficients_direct(ctx(3, 7), GF2, mask(1, 0, 0, 1, 1)).values == (1, 0, 0, 1, 1)


def test_closed_form_requires_mixed_residues():
    with pytest.raises(HypothesisError):
        d_coefficients_closed_form(ctx(3, 7), GF2, mask(1, 0, 0, 1, 1))


@pytest.mark.parametrize("p, q", [(3, 5), (5, 7)])
def test_closed_form_matches_direct_gf2(p, q):
    context = ctx(p, q)
    for values in all_vectors(GF2, 5):
        m = MaskVector(values)
        direct = d_coefficients_direct(context, GF2, m)
        assert direct == d_coefficients_closed_form(context, GF2, m)
        assert direct.d3 == direct.d4


def test_closed_form_matches_direct_gf4_3_5():
    context = ctx(3, 5)
    for values in all_vectors(GF4, 5):
        m = MaskVector(values)
        assert d_coefficients_direct(context, GF4, m) == d_coefficients_closed_form(context, GF4, m)


@pytest.mark.slow
def test_closed_form_matches_direct_gf4_5_7():
    context = ctx(5, 7)
    for values in all_vectors(GF4, 5):
        m = MaskVector(values)
        assert d_coefficients_direct(context, GF4, m) == d_coefficients_closed_form(context, GF4, m)


@pytest.mark.parametrize("p, q", [(5, 7), (3, 5), (7, 5), (5, 3)])
def test_algebra_identities(p, q):
    report = verify_algebra_identities(ctx(p, q), GF2)
    assert report.passed, report.failures
    assert len(report.checks) == 20


def test_algebra_identities_gf4():
    assert verify_algebra_identities(ctx(3, 5), GF4).passed


def test_algebra_identities_need_characteristic_two():
    with pytest.raises(HypothesisError):
        verify_algebra_identities(ctx(3, 5), GF3)


def test_algebra_identities_need_mixed_residues():
    with pytest.raises(HypothesisError):
        verify_algebra_identities(ctx(3, 7), GF2)


def test_mask_vector_parse_and_format():
    m = MaskVector.parse(GF4, "1,1,0,u+1,u")
    assert m.values == (1, 1, 0, 3, 2)
    assert m.format(GF4) == "(1,1,0,u+1,u)"
    assert m.with_alpha(0).format(GF4) == "(0; 1,1,0,u+1,u)"
    assert m.format(GF4, TokenStyle.COMPACT) == "(1,1,0,v,u)"
    assert m.swapped().values == (1, 1, 0, 2, 3)


@pytest.mark.parametrize("text", ["1,0,1", "1,0,1,0,1,0", "1,,0,1,0", "1,0,2,0,1"])
def test_mask_vector_parse_errors(text):
    with pytest.raises(FormatError):
        MaskVector.parse(GF2, text)


def test_mask_vector_validate():
    with pytest.raises(FieldError):
        mask(1, 0, 0, 0, 5).validate(GF4)


def test_dump_matrix():
    matrix = GfMatrix(GF4, [[0, 1, 2], [3, 2, 1]])
    assert dump_matrix(matrix) == "field=4 rows=2 cols=3\n0 1 u\nv u 1\n"
    assert parse_matrix(dump_matrix(matrix)) == matrix


def test_parse_matrix_accepts_polynomial_tokens():
    assert parse_matrix("field=4 rows=1 cols=2\nu+1 u\n").tolist() == [[3, 2]]


@pytest.mark.parametrize("text", [
    "",
    "field=2 rows=2\n0 1\n1 0\n",
    "field=2 rows=2 cols=2\n0 1\n",
    "field=2 rows=1 cols=2\n0 1 1\n",
    "field=2 rows=1 cols=2\n0 2\n",
    "field=6 rows=1 cols=1\n0\n",
])
def test_parse_matrix_errors(text):
    with pytest.raises((FormatError, FieldError)):
        parse_matrix(text)
