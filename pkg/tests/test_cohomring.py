import hypothesis.strategies as st
import pytest
from hypothesis import given

from flagcohom.cohomring import (
    DegreeTwoMatrix,
    GradedRingPresentation,
    PresentationError,
    flag_ring,
    graded_basis,
    hu_coefficients,
    hu_ring,
    is_isomorphism,
    leray_hirsch_dimensions,
    projective_space_ring,
    section_pullback,
    split_bundle_ring,
    verify_graded_hom,
)
from flagcohom.exactpoly import parse_polynomial
from flagcohom.exactpoly.printer import format_monomial

FLAG = flag_ring()


def names(ring, degree):
    return [format_monomial(m, ring.variables) for m in ring.graded_basis(degree)]


def test_flag_ring():
    assert FLAG.dimensions() == (1, 2, 2, 1)
    assert FLAG.reduce(FLAG.element("x1^3")).is_zero()
    assert FLAG.reduce(FLAG.element("x2^3")).is_zero()
    assert FLAG.reduce(FLAG.element("x1^2*x2^2")).is_zero()
    assert FLAG.graded_basis(0) == [(0, 0)]
    assert set(names(FLAG, 4)) == {"x1*x2", "x2^2"}
    assert names(FLAG, 8) == []
    assert graded_basis(FLAG, 4) == FLAG.graded_basis(4)


def test_projective_spaces():
    assert projective_space_ring(1).dimensions() == (1, 1)
    assert projective_space_ring(2).dimensions() == (1, 1, 1)
    cp3 = projective_space_ring(3)
    assert cp3.reduce(cp3.element("x^4")).is_zero()
    assert not cp3.reduce(cp3.element("x^3")).is_zero()


def test_hu_ring():
    ring = hu_ring((1, 0))
    assert ring.dimensions() == (1, 3, 4, 3, 1)
    assert ring.total_dimension() == 12
    assert set(names(ring, 4)) == {"x1*x2", "x2^2", "y*x1", "y*x2"}
    assert hu_ring((0, 0)).dimensions() == (1, 3, 4, 3, 1)
    assert hu_coefficients(hu_ring((2, -3))) == (2, -3)
    with pytest.raises(PresentationError):
        hu_ring("x1^2")


def test_hu_matches_split_bundle():
    u = FLAG.element("x1 + 2*x2")
    a, b = hu_ring(u), split_bundle_ring(FLAG, [0, u])
    assert all(a.graded_basis(d) == b.graded_basis(d) for d in range(9))
    assert a.same_presentation(b)


def test_cp2_bundle():
    ring = split_bundle_ring(projective_space_ring(2), [0, "3*x", "2*x"])
    sig = ring.signature
    assert ring.relations[-1] == parse_polynomial("y*(y + 3*x)*(y + 2*x)", sig)
    assert ring.relations[0] == parse_polynomial("x^3", sig)
    assert ring.dimensions() == (1, 2, 3, 2, 1)
    cp3 = split_bundle_ring(projective_space_ring(3), [0, "x", "2*x"])
    assert cp3.total_dimension() == 12


def test_leray_hirsch_law():
    for base, roots in [(FLAG, [0, "x1"]), (projective_space_ring(2), [0, "x", "-x"]),
                        (projective_space_ring(3), ["x", "2*x", "5*x"])]:
        ring = split_bundle_ring(base, roots)
        assert ring.dimensions() == leray_hirsch_dimensions(base, len(roots) - 1)
        dims = ring.dimensions()
        assert dims == dims[::-1]


def test_bundle_errors():
    with pytest.raises(PresentationError):
        split_bundle_ring(FLAG, [0])
    with pytest.raises(PresentationError):
        split_bundle_ring(FLAG, [0, "x1^2"])


def test_verify_graded_hom():
    ident = DegreeTwoMatrix.identity(2)
    assert verify_graded_hom(FLAG, FLAG, ident).ok
    swap = DegreeTwoMatrix(((0, 1), (1, 0)))
    assert verify_graded_hom(FLAG, FLAG, swap)
    kill = DegreeTwoMatrix(((1, 0), (0, 0)))
    check = verify_graded_hom(FLAG, FLAG, kill)
    assert not check
    assert check.normal_forms[0] == FLAG.element("-x1*x2 - x2^2")
    with pytest.raises(PresentationError):
        verify_graded_hom(FLAG, hu_ring((1, 0)), ident)


def test_is_isomorphism():
    assert is_isomorphism(FLAG, FLAG, DegreeTwoMatrix(((0, 1), (1, 0))))
    assert not is_isomorphism(FLAG, FLAG, DegreeTwoMatrix(((1, 1), (1, 1))))


def test_section_pullback():
    ring = hu_ring((1, 0))
    assert section_pullback(ring, ring.element("y")).is_zero()
    assert section_pullback(ring, ring.element("x1 + 2*y")) == FLAG.element("x1")
    assert section_pullback(ring, ring.element("y^2")).is_zero()


def test_json_round_trip():
    for ring in (FLAG, hu_ring((3, -1)), split_bundle_ring(projective_space_ring(2), [0, "x", "4*x"])):
        back = GradedRingPresentation.from_json(ring.to_json())
        assert back.same_presentation(ring)
        assert back.matrix_basis == ring.matrix_basis


def test_presentation_validation():
    sig = FLAG.signature
    with pytest.raises(PresentationError):
        GradedRingPresentation(sig, (2, 2), (parse_polynomial("x1^2 + x2", sig),))
    with pytest.raises(PresentationError):
        GradedRingPresentation(sig, (2, 2), (parse_polynomial("x1^2", sig),))
    with pytest.raises(PresentationError):
        GradedRingPresentation(sig, (2, 3), (parse_polynomial("x1^2", sig), parse_polynomial("x2^2", sig)))


@given(st.integers(-10, 10), st.integers(-10, 10), st.integers(0, 10_000))
def test_multiplication_well_defined(a, b, seed):
    ring = hu_ring((a, b))
    f = ring.element("x1*y + 2*x2 - y")
    g = ring.element("x2^2 - 3*y*x1")
    rel = ring.relations[seed % len(ring.relations)]
    assert ring.reduce(f * g) == ring.reduce((f + rel) * g)
