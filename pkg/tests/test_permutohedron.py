import math
from fractions import Fraction
from itertools import combinations

import pytest

from orbitlab.common.common import InvalidFacet, InvalidSpectrum
from orbitlab.permutohedron import (
    FacetId,
    Spectrum,
    chain_is_face,
    facet_contains_vertex,
    facet_counts,
    facet_vertices,
    facets,
    facets_intersect,
    mirror_facet,
    polytope_csv,
    vertex_coordinates,
    vertex_facets,
    vertices,
)


def S(n, *members):
    return FacetId(n, tuple(members))


def test_spectrum_must_be_simple():
    with pytest.raises(InvalidSpectrum):
        Spectrum((1, 2, 2))


def test_spectrum_from_string():
    lam = Spectrum.from_string("1,2,7/2")
    assert lam.values == (Fraction(1), Fraction(2), Fraction(7, 2))
    with pytest.raises(InvalidSpectrum):
        Spectrum.from_string("1,a")


def test_identity_vertex():
    lam = Spectrum.default(4)
    assert vertex_coordinates((1, 2, 3, 4), lam) == lam.values


def test_vertex_coordinates_follow_permutation():
    lam = Spectrum((10, 20, 30))
    assert vertex_coordinates((3, 1, 2), lam) == (30, 10, 20)


def test_vertex_coordinates_reject_non_permutation():
    with pytest.raises(InvalidFacet):
        vertex_coordinates((1, 1, 2), Spectrum.default(3))


def test_hexagon():
    lam = Spectrum.default(3)
    points = [vertex_coordinates(s, lam) for s in vertices(3)]
    assert all(sum(p) == 6 for p in points)
    squared = [
        sum((a - b) ** 2 for a, b in zip(p, q)) for p, q in combinations(points, 2)
    ]
    # six sides of length sqrt(2), six short diagonals, three long diagonals
    assert sorted(squared).count(2) == 6
    assert sorted(squared).count(6) == 6
    assert sorted(squared).count(8) == 3


@pytest.mark.parametrize(
    "n, total, by_color",
    [(2, 2, {1: 2}), (4, 14, {1: 4, 2: 6, 3: 4}), (5, 30, {1: 5, 2: 10, 3: 10, 4: 5})],
)
def test_facet_counts(n, total, by_color):
    fs = facets(n)
    assert len(fs) == total == 2**n - 2
    assert facet_counts(n) == by_color
    for k, count in by_color.items():
        assert sum(1 for F in fs if F.color == k) == count


def test_facets_are_grouped_by_color():
    colors = [F.color for F in facets(5)]
    assert colors == sorted(colors)


@pytest.mark.parametrize("members", [(), (1, 2, 3, 4), (0, 1), (2, 2)])
def test_invalid_facets(members):
    with pytest.raises(InvalidFacet):
        FacetId(4, members)


def test_facet_contains_vertex():
    assert facet_contains_vertex(S(4, 1, 2, 3), (1, 2, 3, 4))
    assert not facet_contains_vertex(S(4, 1, 2, 3), (4, 1, 2, 3))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_facet_vertices_agree_with_predicate(n):
    for F in facets(n):
        expected = [s for s in vertices(n) if facet_contains_vertex(F, s)]
        assert facet_vertices(F) == expected
        assert len(expected) == math.factorial(F.color) * math.factorial(n - F.color)


def test_vertex_facets_are_prefix_chain():
    chain = vertex_facets((2, 4, 1, 3))
    assert chain == [S(4, 2), S(4, 2, 4), S(4, 1, 2, 4)]
    assert chain_is_face(chain)


@pytest.mark.parametrize(
    "F, G, expected",
    [
        (S(5, 1, 2, 3), S(5, 1, 2, 3, 4), True),
        (S(5, 1, 2, 3), S(5, 1, 2, 4), False),
        (S(5, 1), S(5, 2, 3, 4, 5), False),
        (S(5, 2), S(5, 1, 2), True),
    ],
)
def test_facets_intersect(F, G, expected):
    assert facets_intersect(F, G) is expected
    assert facets_intersect(G, F) is expected


@pytest.mark.parametrize("n", [3, 4])
def test_facets_intersect_matches_vertex_sets(n):
    for F, G in combinations(facets(n), 2):
        common = set(facet_vertices(F)) & set(facet_vertices(G))
        assert facets_intersect(F, G) == bool(common)


def test_chain_is_face():
    assert chain_is_face([S(5, 1), S(5, 1, 2), S(5, 1, 2, 3)])
    assert not chain_is_face([S(5, 1, 2), S(5, 2, 3)])
    assert chain_is_face([S(5, 4)])


@pytest.mark.parametrize("n", [3, 4])
def test_chain_is_face_matches_common_vertices(n):
    fs = facets(n)
    for size in (2, 3):
        for chain in combinations(fs, size):
            common = set.intersection(*(set(facet_vertices(F)) for F in chain))
            assert chain_is_face(chain) == bool(common)


def test_mirror_facet():
    assert mirror_facet(S(4, 1, 2, 3)) == S(4, 1)
    assert mirror_facet(S(5, 2)) == S(5, 1, 2, 3, 5)
    for F in facets(5):
        assert mirror_facet(mirror_facet(F)) == F
        assert mirror_facet(F).color == 5 - F.color


def test_facet_labels():
    F = S(4, 1, 2, 3)
    assert str(F) == "{1,2,3}"
    assert F.label == "S1-2-3"
    assert F.to_dict() == {"S": [1, 2, 3], "color": 3}


def test_polytope_csv():
    text = polytope_csv(3)
    lines = text.splitlines()
    assert lines[0] == "permutation,coord_1,coord_2,coord_3"
    assert lines[1] == "123,1,2,3"
    assert len(lines) == 7
    assert polytope_csv(3) == text
