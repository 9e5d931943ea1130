"""
GKM graph of M_h: fixed points joined by the invariant 2-spheres.

Vertices are the n! permutations. Each staircase slot (i, j) contributes the
perfect matching sigma -- sigma o (i j). Slots (i, i+1) give the edges of the
permutohedron; the remaining slots give admissible diagonals.
"""

import json
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import graphviz
import networkx as nx

from .common.common import EdgeClasses, InvalidSpectrum, Pair, Permutation, ReducibleInput
from .hessenberg import HFun, blocks, irreducible, support
from .permutohedron import (
    FacetId,
    Spectrum,
    facet_contains_vertex,
    permutation_word,
    vertex_coordinates,
    vertices,
)
from .weights import WeightVec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GkmEdge:
    """An invariant 2-sphere between two fixed points.
    Attributes:
        u: Lexicographically smaller endpoint.
        v: Larger endpoint.
        pair: Staircase slot (i, j) of the swapped positions.
        weight: Label e_i - e_j.
        edge_class: ``polytope`` or ``diagonal``.
    """

    u: Permutation
    v: Permutation
    pair: Pair
    weight: WeightVec
    edge_class: str


@dataclass(frozen=True, eq=False)
class GkmGraph:
    h: HFun
    spectrum: Spectrum
    vertices: tuple[Permutation, ...]
    coordinates: dict
    edges: tuple[GkmEdge, ...]

    @property
    def graph(self) -> nx.Graph:
        """The underlying simple graph, frozen."""
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for edge in self.edges:
            g.add_edge(edge.u, edge.v, pair=edge.pair, edge_class=edge.edge_class)
        return nx.freeze(g)

    def degree(self, sigma: Permutation) -> int:
        return sum(1 for e in self.edges if sigma in (e.u, e.v))


def edge_endpoint(sigma: Permutation, pair: Pair) -> Permutation:
    """Swap the values in positions i and j."""
    i, j = pair
    swapped = list(sigma)
    swapped[i - 1], swapped[j - 1] = sigma[j - 1], sigma[i - 1]
    return tuple(swapped)


def _edge_class(pair: Pair) -> str:
    return EdgeClasses.POLYTOPE if pair[1] == pair[0] + 1 else EdgeClasses.DIAGONAL


def build_gkm(h: HFun, lam: Optional[Spectrum] = None) -> GkmGraph:
    if not irreducible(h):
        parts = tuple(blocks(h))
        raise ReducibleInput(
            f"h={h} is reducible; decompose first into "
            + " x ".join(str(b) for b in parts)
            + ".",
            blocks=parts,
        )
    lam = lam or Spectrum.default(h.n)
    if len(lam) != h.n:
        raise InvalidSpectrum(f"Spectrum of length {len(lam)} for n = {h.n}.")
    slots = support(h)
    points = vertices(h.n)
    edges = []
    for sigma in points:
        for pair in slots:
            tau = edge_endpoint(sigma, pair)
            if sigma < tau:
                edges.append(
                    GkmEdge(
                        u=sigma,
                        v=tau,
                        pair=pair,
                        weight=WeightVec.basis(h.n, *pair),
                        edge_class=_edge_class(pair),
                    )
                )
    edges.sort(key=lambda e: (e.u, e.v))
    logger.debug("GKM graph of h=%s: %d vertices, %d edges", h, len(points), len(edges))
    return GkmGraph(
        h=h,
        spectrum=lam,
        vertices=tuple(points),
        coordinates={sigma: vertex_coordinates(sigma, lam) for sigma in points},
        edges=tuple(edges),
    )


def edge_families(g: GkmGraph) -> dict[Pair, int]:
    """Number of invariant 2-spheres per staircase slot."""
    return dict(sorted(Counter(e.pair for e in g.edges).items()))


def facet_subgraph(g: GkmGraph, F: FacetId) -> nx.Graph:
    """The GKM subgraph spanned by the fixed points over a facet."""
    return g.graph.subgraph(s for s in g.vertices if facet_contains_vertex(F, s))


def _drawing_point(sigma: Permutation, lam: Spectrum) -> tuple[Fraction, ...]:
    """Entry sigma(k) holds lambda_k, so (i, i+1) swaps are the hexagon sides."""
    point = [Fraction(0)] * len(sigma)
    for k, value in enumerate(sigma):
        point[value - 1] = lam.values[k]
    return tuple(point)


def _projected_position(coords: tuple[Fraction, ...]) -> str:
    n = len(coords)
    x = sum(float(c) * math.cos(2 * math.pi * k / n) for k, c in enumerate(coords))
    y = sum(float(c) * math.sin(2 * math.pi * k / n) for k, c in enumerate(coords))
    return f"{round(x, 3) + 0.0:.3f},{round(y, 3) + 0.0:.3f}!"


def export_dot(g: GkmGraph) -> str:
    """Deterministic DOT text; positions are embedded for n <= 4."""
    dot = graphviz.Graph(name=f"gkm_{g.h.word}", comment=f"GKM graph of h={g.h}")
    for sigma in g.vertices:
        attrs = {"label": permutation_word(sigma)}
        if g.h.n <= 4:
            attrs["pos"] = _projected_position(_drawing_point(sigma, g.spectrum))
        dot.node(permutation_word(sigma), **attrs)
    for e in g.edges:
        dot.edge(
            permutation_word(e.u),
            permutation_word(e.v),
            **{"class": e.edge_class, "pair": f"{e.pair[0]},{e.pair[1]}"},
        )
    return dot.source


def export_json(g: GkmGraph) -> str:
    payload = {
        "h": g.h.to_dict(),
        "spectrum": [str(v) for v in g.spectrum.values],
        "vertices": [
            {
                "id": permutation_word(sigma),
                "permutation": list(sigma),
                "coordinates": [str(c) for c in g.coordinates[sigma]],
            }
            for sigma in g.vertices
        ],
        "edges": [
            {
                "u": permutation_word(e.u),
                "v": permutation_word(e.v),
                "pair": list(e.pair),
                "class": e.edge_class,
                "weight": list(e.weight.coords),
            }
            for e in g.edges
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
