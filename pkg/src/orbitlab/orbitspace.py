"""
Orbit space model of M_h / T for the irreducible complexity-one profiles.

Over the interior of the permutohedron the orbital moment map has 2-sphere
fibers; over a special facet the fibers stay 2-spheres, elsewhere on the
boundary they collapse to points. With B_1, ..., B_l the connected components
of the union of special facets,

    Q = M_h / T  ~  S^{N+1} minus (U_1 + ... + U_l),   U_i = B_i x D^3 open.

All nonempty intersections of permutohedron facets are faces, hence
contractible, so B_i is homotopy equivalent to the nerve of its facets: the
simplicial complex of inclusion chains. Alexander duality in S^{N+1} then
gives H~^i(Q) = H~_{N-i}(nerve).
"""

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

import graphviz
import networkx as nx

from .common.common import (
    InvalidCut,
    InvalidSpectrum,
    Pair,
    ReducibleInput,
    UnsupportedComplexity,
    UnsupportedProfile,
)
from .hessenberg import (
    HFun,
    anti_diagonal_mirror,
    block_split,
    blocks,
    complexity,
    complexity_one_profile,
    irreducible,
    support,
)
from .homology import (
    HomologyGroup,
    HomologyGroups,
    SimplicialComplex,
    homology,
    reduced_homology,
)
from .permutohedron import FacetId, Spectrum, chain_is_face, facets, facets_intersect
from .weights import FixedPointClass, WeightVec, classify_fixed_point, weight_rank

logger = logging.getLogger(__name__)

_QUASITORIC = "orbit space is the permutohedron (quasitoric case); model out of scope"

# Profiles whose orbit space is identified explicitly, together with their mirrors.
_KNOWN_MODELS = {
    (3, 3, 3): ("S^4", "empty"),
    (3, 3, 4, 4): ("S^5 ∖ ⊔₄ D^5", "⊔₄ S^4"),
    (2, 4, 4, 4): ("S^5 ∖ ⊔₄ D^5", "⊔₄ S^4"),
    (3, 3, 4, 5, 5): ("S^6 ∖ (#_{K5} D^6)", "#_{K5} S^5"),
    (2, 3, 5, 5, 5): ("S^6 ∖ (#_{K5} D^6)", "#_{K5} S^5"),
    (2, 4, 4, 5, 5): ("S^6 ∖ (#_{K̃5,5} D^6)", "#_{K̃5,5} S^5"),
}


def require_profile(h: HFun) -> int:
    """Return i0, or raise the structured reason the model does not apply."""
    if not irreducible(h):
        parts = tuple(blocks(h))
        raise ReducibleInput(
            f"h={h} is reducible; decompose first into "
            + " x ".join(str(b) for b in parts)
            + ".",
            blocks=parts,
        )
    d = complexity(h)
    if d == 0:
        raise UnsupportedComplexity(f"complexity 0: {_QUASITORIC}", complexity=d)
    if d != 1:
        raise UnsupportedComplexity(
            f"complexity {d}: only complexity-one actions are modeled", complexity=d
        )
    i0 = complexity_one_profile(h)
    if i0 is None:
        raise UnsupportedProfile(f"h={h} is not an irreducible complexity-one profile.")
    return i0


def special_colors(h: HFun) -> list[int]:
    i0 = require_profile(h)
    return [k for k in range(1, h.n) if k not in (i0, i0 + 1)]


def special_facets(h: HFun) -> list[FacetId]:
    """Facets of colour k for k not in {i0, i0+1}."""
    colors = set(special_colors(h))
    return [F for F in facets(h.n) if F.color in colors]


def special_facet_oracle(h: HFun, F: FacetId) -> bool:
    """Decide specialness from the block structure over the facet.

    The facet preimage is the product of the two diagonal blocks. It keeps
    2-sphere fibers iff the cut is admissible and the product action still
    has complexity one.
    """
    require_profile(h)
    try:
        top, bottom = block_split(h, F.color)
    except InvalidCut:
        return False
    return complexity(top) + complexity(bottom) == 1


@dataclass(frozen=True)
class CodimOneElement:
    """Invariant element cut out by the single equation b_ij = 0.
    Attributes:
        pair: The vanishing slot (i, j).
        torus_rank: Rank of the torus acting effectively on the element.
        complexity: Complex dimension minus torus rank.
        color: Facet colour k when the equation splits the staircase at k, else None.
    """

    pair: Pair
    torus_rank: int
    complexity: int
    color: Optional[int]

    @property
    def special(self) -> bool:
        return self.color is not None and self.complexity == 1


def codim_one_elements(h: HFun) -> list[CodimOneElement]:
    """Classify the elements b_ij = 0 by the effective torus dimension they carry."""
    require_profile(h)
    slots = support(h)
    elements = []
    for pair in slots:
        rest = [WeightVec.basis(h.n, i, j) for i, j in slots if (i, j) != pair]
        rank = weight_rank(rest)
        color = None
        i, j = pair
        if j == i + 1:
            try:
                block_split(h, i)
                color = i
            except InvalidCut:
                pass
        elements.append(CodimOneElement(pair, rank, len(rest) - rank, color))
    return elements


def boundary_components(special: Sequence[FacetId]) -> list[list[FacetId]]:
    """Connected components of the intersection graph of the special facets."""
    graph = nx.Graph()
    graph.add_nodes_from(special)
    graph.add_edges_from((F, G) for F, G in combinations(special, 2) if facets_intersect(F, G))
    components = [sorted(c, key=FacetId.sort_key) for c in nx.connected_components(graph)]
    return sorted(components, key=lambda c: c[0].sort_key())


@dataclass(frozen=True)
class NerveComplex:
    """Nerve of a family of facets: simplices are inclusion chains.
    Attributes:
        vertices: The facets, ordered by colour then subset.
        complex: The abstract simplicial complex over those vertices.
    """

    vertices: tuple[FacetId, ...]
    complex: SimplicialComplex

    def simplices(self) -> list[tuple[FacetId, ...]]:
        return [self.complex.label(s) for s in self.complex.simplices]

    @property
    def dimension(self) -> int:
        return self.complex.dimension

    def is_empty(self) -> bool:
        return not self.vertices


def _chains(ordered: list[FacetId]) -> list[tuple[FacetId, ...]]:
    chains = []

    def extend(chain: tuple[FacetId, ...], start: int) -> None:
        chains.append(chain)
        for k in range(start, len(ordered)):
            if chain[-1].subset < ordered[k].subset:
                extend(chain + (ordered[k],), k + 1)

    for k, F in enumerate(ordered):
        extend((F,), k + 1)
    return chains


def nerve(special: Sequence[FacetId]) -> NerveComplex:
    ordered = sorted(set(special), key=FacetId.sort_key)
    chains = _chains(ordered)
    complex_ = SimplicialComplex.from_simplices(chains, ordered)
    logger.debug("nerve on %d facets: f-vector %s", len(ordered), complex_.f_vector())
    return NerveComplex(tuple(ordered), complex_)


def nerve_graph(nerve_: NerveComplex) -> nx.Graph:
    """The 1-skeleton of the nerve."""
    graph = nx.Graph()
    graph.add_nodes_from(nerve_.vertices)
    graph.add_edges_from(s for s in nerve_.simplices() if len(s) == 2)
    return graph


def export_nerve_dot(nerve_: NerveComplex) -> str:
    dot = graphviz.Graph(name="nerve", comment="Nerve of the special facets")
    for F in nerve_.vertices:
        dot.node(F.label, label=str(F), facet_color=str(F.color))
    for simplex in nerve_.simplices():
        if len(simplex) == 2:
            dot.edge(simplex[0].label, simplex[1].label)
    return dot.source


@dataclass(frozen=True)
class CohomologyGroup:
    """Reduced cohomology H~^i(Q) = Z^rank + torsion."""

    i: int
    rank: int
    torsion: tuple[int, ...] = ()

    def describe(self) -> str:
        return HomologyGroup(self.i, self.rank, self.torsion).describe()

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"i": self.i, "rank": self.rank, "torsion": list(self.torsion)}


def alexander_cohomology(nerve_: NerveComplex, N: int) -> list[CohomologyGroup]:
    """H~^i(Q), 0 <= i <= N+1, for Q the complement of the thickened nerve in S^{N+1}."""
    if nerve_.is_empty():
        return [CohomologyGroup(i, int(i == N + 1)) for i in range(N + 2)]
    reduced = reduced_homology(nerve_.complex)
    groups = []
    for i in range(N + 1):
        dual = reduced[N - i]
        groups.append(CohomologyGroup(i, dual.rank, dual.torsion))
    groups.append(CohomologyGroup(N + 1, 0))
    return groups


@dataclass(frozen=True)
class BoundaryComponent:
    """One boundary component (B_i x S^2)/~ of the orbit space.
    Attributes:
        index: 1-based component number.
        facets: Special facets in the component.
        nerve: Nerve of those facets.
        homology: Integral homology of the nerve, i.e. of B_i.
    """

    index: int
    facets: tuple[FacetId, ...]
    nerve: NerveComplex
    homology: HomologyGroups


@dataclass(frozen=True)
class OrbitReport:
    h: HFun
    spectrum: Spectrum
    i0: int
    fixed_points: FixedPointClass
    special_facets: tuple[FacetId, ...]
    nerve: NerveComplex
    components: tuple[BoundaryComponent, ...]
    cohomology: tuple[CohomologyGroup, ...]
    model: str
    boundary: str
    tags: tuple[str, ...] = field(default_factory=tuple)

    @property
    def N(self) -> int:
        return self.h.N

    @property
    def sphere_dim(self) -> int:
        return self.h.N + 1

    @property
    def boundary_count(self) -> int:
        return len(self.components)

    @property
    def euler_characteristic(self) -> int:
        """chi(Q) = 1 + sum (-1)^i rank H~^i(Q)."""
        return 1 + sum((-1) ** g.i * g.rank for g in self.cohomology)

    def special_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for F in self.special_facets:
            counts[F.color] = counts.get(F.color, 0) + 1
        return dict(sorted(counts.items()))

    def low_degrees_vanish(self) -> bool:
        """H~^0 = H~^1 = H~^2 = 0."""
        return all(g.is_zero() for g in self.cohomology if g.i <= 2)


def _model_description(h: HFun, l: int) -> str:
    if tuple(h.h) in _KNOWN_MODELS:
        return _KNOWN_MODELS[tuple(h.h)][0]
    if l == 0:
        return f"S^{h.N + 1}"
    return f"S^{h.N + 1} ∖ (U_1 ⊔ … ⊔ U_{l})"


def _boundary_text(h: HFun, components: Sequence[BoundaryComponent]) -> str:
    if tuple(h.h) in _KNOWN_MODELS:
        return _KNOWN_MODELS[tuple(h.h)][1]
    if not components:
        return "empty"
    # A contractible B_i thickens to a ball, so its boundary is a sphere.
    if all(
        c.homology.betti_numbers()[0] == 1
        and all(g.is_zero() for g in c.homology.groups[1:])
        for c in components
    ):
        return f"⊔_{len(components)} S^{h.N}"
    return "; ".join(
        f"B_{c.index}: "
        + ", ".join(f"H_{g.degree} = {g.describe()}" for g in c.homology.groups)
        for c in components
    )


def boundary_description(report: OrbitReport) -> str:
    """Descriptive name of the boundary of Q.

    Verified cases are named by their model (``⊔₄ S^4``, ``#_{K5} S^5``);
    otherwise contractible components give a disjoint union of spheres and
    anything else is listed with the homology of each B_i.
    """
    return _boundary_text(report.h, report.components)


def orbit_space_report(h: HFun, lam: Optional[Spectrum] = None) -> OrbitReport:
    i0 = require_profile(h)
    lam = lam or Spectrum.default(h.n)
    if len(lam) != h.n:
        raise InvalidSpectrum(f"Spectrum of length {len(lam)} for n = {h.n}.")
    special = special_facets(h)
    whole = nerve(special)
    components = []
    for index, group in enumerate(boundary_components(special), start=1):
        sub = nerve(group)
        components.append(BoundaryComponent(index, tuple(group), sub, homology(sub.complex)))
    model = _model_description(h, len(components))
    boundary = _boundary_text(h, components)
    tags = (model, boundary) if tuple(h.h) in _KNOWN_MODELS else ()
    logger.debug("h=%s: %d special facets, %d components", h, len(special), len(components))
    return OrbitReport(
        h=h,
        spectrum=lam,
        i0=i0,
        fixed_points=classify_fixed_point(h),
        special_facets=tuple(special),
        nerve=whole,
        components=tuple(components),
        cohomology=tuple(alexander_cohomology(whole, h.N)),
        model=model,
        boundary=boundary,
        tags=tags,
    )


def mirror_profile(h: HFun) -> HFun:
    """The profile related to h by the anti-diagonal symmetry (i0 -> n-1-i0)."""
    require_profile(h)
    return anti_diagonal_mirror(h)


def report_to_dict(report: OrbitReport) -> dict:
    signature = report.fixed_points.signature
    return {
        "h": report.h.to_dict(),
        "spectrum": [str(v) for v in report.spectrum.values],
        "i0": report.i0,
        "N": report.N,
        "sphere_dim": report.sphere_dim,
        "fixed_points": {
            "count": report.fixed_points.fixed_points,
            "interior": report.fixed_points.interior,
            "uniform": report.fixed_points.uniform,
            "relation": list(signature.relation) if signature else None,
            "corner": signature.describe() if signature else None,
        },
        "special_facets": [F.to_dict() for F in report.special_facets],
        "boundary_count": report.boundary_count,
        "components": [
            {
                "index": c.index,
                "facets": [F.to_dict() for F in c.facets],
                "nerve_f_vector": c.nerve.complex.f_vector(),
                "homology": c.homology.to_list(),
            }
            for c in report.components
        ],
        "nerve_f_vector": report.nerve.complex.f_vector(),
        "cohomology": [g.to_dict() for g in report.cohomology],
        "euler_characteristic": report.euler_characteristic,
        "model": report.model,
        "boundary": report.boundary,
        "tags": list(report.tags),
    }


def report_to_json(report: OrbitReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def nerve_is_chain_complex(nerve_: NerveComplex) -> bool:
    """Every simplex of the nerve is a face of the permutohedron."""
    return all(chain_is_face(s) for s in nerve_.simplices())
