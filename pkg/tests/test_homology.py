import json
import math
import random
from itertools import combinations
from pathlib import Path

import jsonschema
import pytest
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

from orbitlab.common.common import NotAComplex
from orbitlab.homology import (
    IntMatrix,
    SimplicialComplex,
    boundary_matrices,
    euler_characteristic,
    homology,
    rational_rank,
    reduced_homology,
    smith_normal_form,
)

SCHEMAS = Path(__file__).resolve().parent.parent / "src" / "orbitlab" / "schemas"


def det(rows):
    if not rows:
        return 1
    if len(rows) == 1:
        return rows[0][0]
    return sum(
        (-1) ** c * rows[0][c] * det([row[:c] + row[c + 1 :] for row in rows[1:]])
        for c in range(len(rows))
        if rows[0][c]
    )


def minors_oracle(rows, cols):
    """Invariant factors from gcds of k x k minors."""
    factors, previous = [], 1
    for k in range(1, min(len(rows), cols) + 1):
        d_k = 0
        for rs in combinations(range(len(rows)), k):
            for cs in combinations(range(cols), k):
                d_k = math.gcd(d_k, det([[rows[r][c] for c in cs] for r in rs]))
        if d_k == 0:
            break
        factors.append(d_k // previous)
        previous = d_k
    return tuple(factors)


def complex_of(*maximal):
    return SimplicialComplex.from_maximal(maximal)


def hollow(n):
    return complex_of(*combinations(range(n), 2))


def boundary_of_simplex(dim):
    return complex_of(*combinations(range(dim + 2), dim + 1))


def complete_graph(n):
    return complex_of(*combinations(range(n), 2))


@pytest.mark.parametrize(
    "rows, expected",
    [
        ([[2, 4], [6, 8]], (2, 4)),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], (1, 1, 1)),
        ([[0, 0], [0, 0]], ()),
        ([[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]], (1, 10, 30)),
        ([[2, 0], [0, 3]], (1, 6)),
        ([[-4]], (4,)),
    ],
)
def test_smith_normal_form_examples(rows, expected):
    assert smith_normal_form(IntMatrix.from_rows(rows)) == expected


def test_smith_normal_form_empty_shapes():
    assert smith_normal_form(IntMatrix.zeros(0, 5)) == ()
    assert smith_normal_form(IntMatrix.zeros(3, 0)) == ()


def test_smith_normal_form_matches_minors_oracle():
    rng = random.Random(20240518)
    for _ in range(1000):
        rows_n, cols_n = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-5, 5) for _ in range(cols_n)] for _ in range(rows_n)]
        assert smith_normal_form(IntMatrix.from_rows(rows)) == minors_oracle(rows, cols_n), rows


@pytest.mark.parametrize(
    "rows",
    [
        [[2, 4, 4], [-6, 6, 12], [10, -4, -16]],
        [[3, 1], [1, 3]],
        [[6, 0, 0], [0, 10, 0], [0, 0, 15]],
    ],
)
def test_smith_normal_form_matches_sympy(rows):
    expected = tuple(sorted(abs(int(f)) for f in invariant_factors(DM(rows, ZZ)) if f))
    assert smith_normal_form(IntMatrix.from_rows(rows)) == expected


def test_rank_agrees_with_rational_rank():
    rng = random.Random(7)
    for _ in range(200):
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(rng.randint(1, 5))]
        m = IntMatrix.from_rows(rows)
        assert m.rank() == rational_rank(m)


def test_matrix_product():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert (a @ IntMatrix.identity(2)) == a
    assert (a @ a).entries == ((7, 10), (15, 22))


def test_edge_boundary():
    d = boundary_matrices(complex_of((0, 1)))
    assert d[1].entries == ((-1,), (1,))


def test_hollow_triangle_boundary():
    d1 = boundary_matrices(hollow(3))[1]
    assert (d1.rows, d1.cols) == (3, 3)
    assert d1.rank() == 2


def test_complete_graph_boundary():
    d1 = boundary_matrices(complete_graph(5))[1]
    assert (d1.rows, d1.cols) == (5, 10)
    assert d1.rank() == 4


@pytest.mark.parametrize(
    "complex_",
    [hollow(3), boundary_of_simplex(2), boundary_of_simplex(3), complex_of((0, 1, 2, 3))],
)
def test_boundary_of_boundary_vanishes(complex_):
    d = boundary_matrices(complex_)
    for q in range(1, len(d) - 1):
        assert (d[q] @ d[q + 1]).is_zero()


def test_not_a_complex():
    with pytest.raises(NotAComplex):
        SimplicialComplex.from_simplices([("a",), ("a", "b")])


def test_sphere_homology():
    for dim in (1, 2, 3):
        groups = homology(boundary_of_simplex(dim))
        assert groups.betti_numbers() == [1] + [0] * (dim - 1) + [1]


def test_reduced_homology_of_points_and_empty():
    points = SimplicialComplex.from_simplices([(v,) for v in range(4)])
    assert reduced_homology(points)[0].rank == 3
    empty = SimplicialComplex.from_simplices([])
    assert reduced_homology(empty)[-1].rank == 1


def test_graph_homology():
    groups = homology(complete_graph(5))
    assert groups[0].describe() == "Z"
    assert groups[1].describe() == "Z^6"


def _projective_plane():
    # six-vertex triangulation
    return complex_of(
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
    )


def test_torsion():
    groups = homology(_projective_plane())
    assert groups.betti_numbers() == [1, 0, 0]
    assert groups[1].torsion == (2,)
    assert groups[1].describe() == "Z/2"


@pytest.mark.parametrize(
    "complex_",
    [hollow(4), boundary_of_simplex(3), complete_graph(6), _projective_plane()],
)
def test_betti_numbers_match_rational_elimination(complex_):
    d = boundary_matrices(complex_)
    ranks = [rational_rank(m) for m in d] + [0]
    expected = [m.cols - ranks[q] - ranks[q + 1] for q, m in enumerate(d)]
    assert homology(complex_).betti_numbers() == expected


@pytest.mark.parametrize(
    "complex_",
    [hollow(5), boundary_of_simplex(3), complete_graph(6), _projective_plane()],
)
def test_euler_characteristic(complex_):
    betti = homology(complex_).betti_numbers()
    assert euler_characteristic(complex_) == sum((-1) ** q * b for q, b in enumerate(betti))


def test_json_round_trip_and_schema():
    complex_ = hollow(3)
    payload = json.loads(complex_.to_json())
    schema = json.loads((SCHEMAS / "simplicial_complex.schema.json").read_text(encoding="utf-8"))
    jsonschema.validate(payload, schema)
    assert SimplicialComplex.from_json(complex_.to_json()) == complex_


def test_from_json_without_vertices():
    complex_ = SimplicialComplex.from_json('{"simplices": [[0], [1], [0, 1]]}')
    assert complex_.f_vector() == [2, 1]


def _relabelled(complex_, seed):
    rng = random.Random(seed)
    shuffled = rng.sample(complex_.vertices, len(complex_.vertices))
    names = {v: f"v{k}" for k, v in enumerate(shuffled)}
    order = list(names.values())
    rng.shuffle(order)
    return SimplicialComplex.from_simplices(
        ([names[v] for v in complex_.label(s)] for s in complex_.simplices), order
    )


@pytest.mark.parametrize(
    "complex_",
    [hollow(3), complete_graph(5), boundary_of_simplex(3), _projective_plane()],
)
def test_homology_ignores_vertex_labels(complex_):
    expected = homology(complex_).to_list()
    for seed in range(5):
        relabelled = _relabelled(complex_, seed)
        assert relabelled.f_vector() == complex_.f_vector()
        assert homology(relabelled).to_list() == expected
