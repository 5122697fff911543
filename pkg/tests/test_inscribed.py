from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentagram.errors import DegenerateWindow, InvalidP
from pentagram.inscribed import (
    InscribedData,
    PCoordinates,
    corner_from_p,
    p_from_params,
    random_inscribed,
    random_p,
    reverse_p,
    veronese_point,
    veronese_polygon,
)
from pentagram.invariants import product_invariants
from pentagram.polygon import corner_invariants
from pentagram.projective import Mobius, ProjMap2, ProjPoint1, ProjPoint2

from conftest import p_vectors

seeds = st.integers(0, 10_000)


def test_equally_spaced_parameters():
    D = InscribedData(tuple(range(1, 8)), Mobius.translation(7))
    assert p_from_params(D).p == (Fraction(3, 4),) * 7


@given(seeds)
def test_p_is_mobius_invariant(seed):
    D = random_inscribed(7, seed)
    g = Mobius([[2, 1], [1, 1]])
    moved = InscribedData(tuple(g(t) for t in D.params), g @ D.mobius @ g.inverse())
    assert p_from_params(moved) == p_from_params(D)


def test_repeated_parameter_is_degenerate():
    D = InscribedData((1, 2, 1, 4, 5, 6), Mobius.translation(10))
    with pytest.raises(DegenerateWindow):
        p_from_params(D)


def test_p_must_avoid_zero_and_one():
    with pytest.raises(InvalidP):
        PCoordinates([Fraction(1, 2), 1, 3, 4, 5])
    with pytest.raises(InvalidP):
        PCoordinates([0, 2, 3, 4, 5])


def test_corner_from_p_uniform_values():
    half = corner_from_p(PCoordinates([Fraction(1, 2)] * 6))
    assert set(half.x) == set(half.y) == {1}
    three_q = corner_from_p(PCoordinates([Fraction(3, 4)] * 6))
    assert set(three_q.x) == set(three_q.y) == {Fraction(1, 3)}


def test_corner_from_p_alternating():
    p = PCoordinates([Fraction(1, 2), Fraction(1, 3)] * 3)
    c = corner_from_p(p)
    # x_i = (1 - p_i)/p_{i+1}
    assert c.x == (Fraction(3, 2), Fraction(4, 3)) * 3
    assert c.y == (Fraction(4, 3), Fraction(3, 2)) * 3


def test_veronese_points():
    assert veronese_point(ProjPoint1(0, 1)) == ProjPoint2(0, 0, 1)
    assert veronese_point(ProjPoint1(1, 0)) == ProjPoint2(1, 0, 0)
    assert veronese_point(ProjPoint1(1, 1)) == ProjPoint2(1, 1, 1)


def test_identity_mobius_gives_closed_polygon():
    D = random_inscribed(6, 1, closed=True)
    assert veronese_polygon(D).monodromy == ProjMap2.identity()


@given(seeds)
def test_geometric_corners_match_formula(seed):
    D = random_inscribed(6, seed)
    assert corner_invariants(veronese_polygon(D)) == corner_from_p(p_from_params(D))


def test_reverse_p_indexing():
    p = PCoordinates([2, 3, 4, 5, 6])
    assert reverse_p(p).p == (6, 5, 4, 3, 2)
    assert reverse_p(PCoordinates([7] * 5)).p == (7,) * 5


@given(p_vectors())
def test_reverse_p_is_an_involution(p):
    P = PCoordinates(p)
    assert reverse_p(reverse_p(P)) == P


@given(p_vectors())
def test_formula_is_dihedrally_equivariant(p):
    P = PCoordinates(p)
    assert corner_from_p(reverse_p(P)) == corner_from_p(P).sigma()


@given(p_vectors())
def test_products_agree(p):
    P = PCoordinates(p)
    expected = Fraction(1)
    for v in P.p:
        expected *= (1 - v) / v
    assert product_invariants(corner_from_p(P)) == (expected, expected)


def test_random_generators_are_deterministic():
    assert random_inscribed(8, 4) == random_inscribed(8, 4)
    assert random_p(8, 4) == random_p(8, 4)
    with pytest.raises(ValueError):
        random_inscribed(4, 0)
