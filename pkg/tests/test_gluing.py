"""Graph-manifold volume values and the Dehn-filling estimates."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from repvol import (
    ERROR_ORDER_NOTE,
    CoveringParameters,
    FillingEstimate,
    GluingMatrix,
    HyperbolicPieceData,
    VolumeValue,
    additivity,
    case_ii_pipeline,
    dehn_filling_volume_estimate,
    filling_admissible,
    geodesic_length_leading,
    graph_volume_values,
)


# ---------------------------------------------------------------------------
# gluing matrices
# ---------------------------------------------------------------------------


def test_gluing_matrix_determinant_gate():
    GluingMatrix(0, 1, 1, 0)
    GluingMatrix(2, 3, 3, 4)  # det = 8 - 9 = -1
    with pytest.raises(ValueError, match="determinant"):
        GluingMatrix(1, 0, 0, 1)
    with pytest.raises(ValueError, match="determinant"):
        GluingMatrix(0, 1, -1, 0)


def test_gluing_matrix_inverse():
    M = GluingMatrix(2, 3, 3, 4)
    W = M.inverse()
    assert (W.a, W.b, W.c, W.d) == (-4, 3, 3, -2)
    # the inverse of a det -1 matrix again has det -1, and doubles back
    back = W.inverse()
    assert (back.a, back.b, back.c, back.d) == (2, 3, 3, 4)


# ---------------------------------------------------------------------------
# graph volume values, case by case
# ---------------------------------------------------------------------------


def coeffs(vals):
    return [(label, v.coefficient) for label, v in vals]


def test_graph_volume_case_i():
    vals = graph_volume_values(GluingMatrix(0, 1, 1, 0), CoveringParameters(1, 1))
    assert coeffs(vals) == [("i", Fraction(2))]


def test_graph_volume_cases_ii_and_iii_overlap():
    # a, c, d all nonzero: cases ii and iii both fire
    vals = graph_volume_values(GluingMatrix(1, 1, 2, 1), CoveringParameters(1, 1))
    assert coeffs(vals) == [("ii", Fraction(1, 2)), ("iii", Fraction(1, 2))]
    vals = graph_volume_values(GluingMatrix(1, 2, 1, 1), CoveringParameters(1, 1))
    assert coeffs(vals) == [("ii", Fraction(1)), ("iii", Fraction(1))]


def test_graph_volume_case_iv():
    vals = graph_volume_values(GluingMatrix(1, 2, 0, -1), CoveringParameters(1, 1))
    assert coeffs(vals) == [("iv", Fraction(1, 2))]


def test_graph_volume_case_ii_without_iii():
    # d = 0 and ac != 0: only case ii applies
    vals = graph_volume_values(GluingMatrix(3, 1, 1, 0), CoveringParameters(1, 1))
    assert coeffs(vals) == [("ii", Fraction(1, 3))]


def test_graph_volume_covering_scales_by_p():
    # n = 12, q = 2 gives p = 3
    vals = graph_volume_values(GluingMatrix(0, 1, 1, 0), CoveringParameters(12, 2))
    assert coeffs(vals) == [("i", Fraction(6))]
    vals = graph_volume_values(GluingMatrix(2, 3, 1, 1), CoveringParameters(3, 1))
    assert ("ii", Fraction(3, 2)) in coeffs(vals)


def test_graph_volume_rejects_b_zero():
    with pytest.raises(ValueError, match="graph manifold"):
        graph_volume_values(GluingMatrix(1, 0, 1, -1), CoveringParameters(1, 1))


def test_case_iii_equals_case_ii_of_inverse():
    for abcd in ((1, 1, 2, 1), (2, 3, 3, 4), (3, 2, 5, 3), (1, 2, 1, 1)):
        M = GluingMatrix(*abcd)
        cov = CoveringParameters(4, 2)
        mine = dict(coeffs(graph_volume_values(M, cov)))
        other = dict(coeffs(graph_volume_values(M.inverse(), cov)))
        assert mine["iii"] == other["ii"]


# ---------------------------------------------------------------------------
# the case (ii) pipeline oracle
# ---------------------------------------------------------------------------


def test_case_ii_pipeline_examples():
    assert case_ii_pipeline(1, 1, 1).coefficient == Fraction(1)
    assert case_ii_pipeline(2, 3, 6).coefficient == Fraction(1)
    assert case_ii_pipeline(-1, 1, 1).coefficient == Fraction(1)


def test_case_ii_pipeline_rejects_degenerate_input():
    with pytest.raises(ValueError, match="a\\*c != 0"):
        case_ii_pipeline(0, 1, 1)
    with pytest.raises(ValueError, match="positive integer"):
        case_ii_pipeline(1, 1, 0)


def test_case_ii_pipeline_matches_closed_form_on_grid():
    for a in (-3, -2, -1, 1, 2, 3):
        for c in (-3, -1, 1, 2):
            for p in (1, 2, 3, 5, 50):
                want = Fraction(p, abs(a * c))
                assert case_ii_pipeline(a, c, p).coefficient == want


# ---------------------------------------------------------------------------
# volume additivity
# ---------------------------------------------------------------------------


def test_additivity_exact():
    total = additivity(VolumeValue(Fraction(1, 2)), VolumeValue(Fraction(1, 3)))
    assert isinstance(total, VolumeValue)
    assert total.coefficient == Fraction(5, 6)


def test_additivity_identity_and_commutativity():
    u = VolumeValue(Fraction(7, 3))
    zero = VolumeValue(Fraction(0))
    assert additivity(u, zero) == u
    assert additivity(zero, u) == u
    v = VolumeValue(Fraction(1, 5))
    assert additivity(u, v) == additivity(v, u)


def test_additivity_mixed_floats():
    got = additivity(VolumeValue(Fraction(1, 2)), 3.25)
    want = float(Fraction(1, 2)) * 4 * math.pi**2 + 3.25
    assert got == pytest.approx(want, rel=1e-15)
    assert additivity(1.5, 2.5) == pytest.approx(4.0)


# ---------------------------------------------------------------------------
# covering parameters and hyperbolic piece data
# ---------------------------------------------------------------------------


def test_covering_parameters_p():
    assert CoveringParameters(4, 2).p == 1
    assert CoveringParameters(12, 2).p == 3
    assert CoveringParameters(7, 1).p == 7


def test_covering_parameters_validation():
    with pytest.raises(ValueError, match="n must equal p\\*q\\^2"):
        CoveringParameters(3, 2)
    with pytest.raises(ValueError, match="positive"):
        CoveringParameters(0, 1)
    with pytest.raises(ValueError, match="positive"):
        CoveringParameters(4, -2)
    with pytest.raises(ValueError, match="integers"):
        CoveringParameters(4.0, 2)


def test_hyperbolic_piece_data_validation():
    HyperbolicPieceData(2.0298832128193, 1j, 6.0)
    with pytest.raises(ValueError, match="volume"):
        HyperbolicPieceData(-1.0, 1j, 6.0)
    with pytest.raises(ValueError, match="imaginary part"):
        HyperbolicPieceData(1.0, 1.0 - 2.0j, 6.0)
    with pytest.raises(ValueError, match="threshold"):
        HyperbolicPieceData(1.0, 1j, 0.0)


def test_filling_estimate_validation():
    with pytest.raises(ValueError, match="length"):
        FillingEstimate(0.0, 1.0, 1.0)
    est = FillingEstimate(1.0, 2.0, 3.0)
    assert est.error_order_note == ERROR_ORDER_NOTE
    assert ERROR_ORDER_NOTE == "O(1/(a^4+c^4)) uncontrolled"


# ---------------------------------------------------------------------------
# geodesic length estimates
# ---------------------------------------------------------------------------


def test_geodesic_length_examples():
    # z0 = i, slope (10, 3): |10 + 3i|^2 = 109
    assert geodesic_length_leading(1j, 10, 3) == pytest.approx(2 * math.pi / 109, rel=1e-15)
    assert geodesic_length_leading(1j, 1, 0) == pytest.approx(2 * math.pi, rel=1e-15)
    assert geodesic_length_leading(2j, 0, 1) == pytest.approx(math.pi, rel=1e-15)


def test_geodesic_length_rejects_zero_slope():
    with pytest.raises(ValueError, match="slope"):
        geodesic_length_leading(1j, 0, 0)


def test_geodesic_length_decays_along_rays():
    z0 = 0.5 + 1.2j
    for da, dc in ((1, 0), (0, 1), (1, 1), (2, -3), (-5, 1)):
        lengths = [geodesic_length_leading(z0, k * da, k * dc) for k in (1, 2, 4, 8, 16)]
        assert all(x > y for x, y in zip(lengths, lengths[1:]))


def test_filling_admissible():
    assert filling_admissible(10, 3, 6.0) is True  # hypot ~ 10.44
    assert filling_admissible(4, 3, 6.0) is False  # hypot = 5
    assert filling_admissible(6, 1, 6.0) is True
    with pytest.raises(ValueError, match="threshold"):
        filling_admissible(1, 1, 0.0)


# ---------------------------------------------------------------------------
# the Dehn-filling volume estimate
# ---------------------------------------------------------------------------


def test_dehn_filling_estimate_desk_check():
    piece = HyperbolicPieceData(10.0, 1j, 6.0)
    est = dehn_filling_volume_estimate(piece, (10, 3), CoveringParameters(1, 1))
    assert est.length_gamma == pytest.approx(2 * math.pi / 109, rel=1e-14)
    assert est.filled_volume_leading == pytest.approx(10.0 - math.pi**2 / 109, rel=1e-14)
    assert est.total_volume_leading == pytest.approx(10.0 - math.pi**2 / 109, rel=1e-14)
    assert est.error_order_note == ERROR_ORDER_NOTE


def test_dehn_filling_estimate_covering_scaling():
    # n = 4, q = 2: the total is n * (V - pi^2 Im z0 / (q |a + c z0|^2))
    piece = HyperbolicPieceData(10.0, 1j, 6.0)
    est = dehn_filling_volume_estimate(piece, (10, 3), CoveringParameters(4, 2))
    assert est.total_volume_leading == pytest.approx(4 * (10.0 - math.pi**2 / 218), rel=1e-14)
    # the filled volume of the single piece does not see the covering
    assert est.filled_volume_leading == pytest.approx(10.0 - math.pi**2 / 109, rel=1e-14)


def test_dehn_filling_estimate_total_affine_in_volume():
    cov = CoveringParameters(9, 3)
    slope = (12, 5)
    totals = [
        dehn_filling_volume_estimate(HyperbolicPieceData(v, 1j, 6.0), slope, cov).total_volume_leading
        for v in (5.0, 9.0)
    ]
    assert totals[1] - totals[0] == pytest.approx(cov.n * 4.0, rel=1e-12)


def test_dehn_filling_estimate_rejects_short_slopes():
    piece = HyperbolicPieceData(10.0, 1j, 6.0)
    with pytest.raises(ValueError, match="threshold"):
        dehn_filling_volume_estimate(piece, (4, 3), CoveringParameters(1, 1))


@settings(max_examples=50)
@given(
    st.integers(-9, 9),
    st.integers(-9, 9),
    st.floats(0.1, 4.0),
    st.floats(-2.0, 2.0),
)
def test_geodesic_length_positive(a, c, im, re):
    if a == 0 and c == 0:
        return
    assert geodesic_length_leading(complex(re, im), a, c) > 0
