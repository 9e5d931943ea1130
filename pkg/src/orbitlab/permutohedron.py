"""
The permutohedron Pe^{n-1} as the moment polytope of the torus action.

Vertices are permutations sigma, placed at (lambda_sigma(1), ..., lambda_sigma(n)).
A facet is named by the eigenvalue set S of the top |S| x |S| block, and gets
the colour |S|. Faces are never materialised; a set of facets meets in a face
iff their sets form a chain under inclusion.
"""

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Optional, Sequence

from .common.common import InvalidFacet, InvalidSpectrum, Permutation


@dataclass(frozen=True)
class Spectrum:
    """A simple spectrum; eigenvalues are pairwise distinct, not necessarily sorted.
    Attributes:
        values: Exact rational eigenvalues lambda_1, ..., lambda_n.
    """

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(set(self.values)) != len(self.values):
            raise InvalidSpectrum(f"Spectrum {self} has repeated eigenvalues.")

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"

    @classmethod
    def default(cls, n: int) -> "Spectrum":
        return cls(tuple(Fraction(i) for i in range(1, n + 1)))

    @classmethod
    def from_string(cls, text: str) -> "Spectrum":
        """Parse ``1,2,7/2,5``."""
        try:
            return cls(tuple(Fraction(p) for p in text.replace(" ", "").split(",") if p))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidSpectrum(f"Cannot read a spectrum from '{text}'.") from e


@dataclass(frozen=True, order=True)
class FacetId:
    """Facet Pe^{k-1} x Pe^{n-k} of Pe^{n-1}.
    Attributes:
        n: Size of the ambient permutations.
        S: Sorted eigenvalue indices of the top block.
    """

    n: int
    S: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(sorted(self.S)))
        if not 1 <= len(self.S) <= self.n - 1:
            raise InvalidFacet(f"{set(self.S)} is not a proper nonempty subset of [{self.n}].")
        if len(set(self.S)) != len(self.S) or not all(1 <= s <= self.n for s in self.S):
            raise InvalidFacet(f"{self.S} is not a subset of [{self.n}].")

    @property
    def color(self) -> int:
        return len(self.S)

    @property
    def subset(self) -> frozenset[int]:
        return frozenset(self.S)

    @property
    def label(self) -> str:
        return "S" + "-".join(str(s) for s in self.S)

    def sort_key(self) -> tuple:
        return (self.color, self.S)

    def to_dict(self) -> dict:
        return {"S": list(self.S), "color": self.color}

    def __str__(self) -> str:
        return "{" + ",".join(str(s) for s in self.S) + "}"


def permutation_word(sigma: Permutation) -> str:
    """One-line word, e.g. ``1324``; values are dash separated when n > 9."""
    if len(sigma) > 9:
        return "-".join(str(s) for s in sigma)
    return "".join(str(s) for s in sigma)


def vertices(n: int) -> list[Permutation]:
    return list(permutations(range(1, n + 1)))


def vertex_coordinates(sigma: Permutation, lam: Spectrum) -> tuple[Fraction, ...]:
    """The moment image (lambda_sigma(1), ..., lambda_sigma(n)) of a fixed point."""
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise InvalidFacet(f"{sigma} is not a permutation.")
    if len(lam) != len(sigma):
        raise InvalidSpectrum(f"Spectrum of length {len(lam)} for n = {len(sigma)}.")
    return tuple(lam.values[s - 1] for s in sigma)


def facets(n: int) -> list[FacetId]:
    """All 2^n - 2 facets, grouped by colour."""
    return [
        FacetId(n, combo)
        for k in range(1, n)
        for combo in combinations(range(1, n + 1), k)
    ]


def facet_contains_vertex(F: FacetId, sigma: Permutation) -> bool:
    return set(sigma[: F.color]) == F.subset


def facet_vertices(F: FacetId) -> list[Permutation]:
    """The k!(n-k)! vertices of a colour-k facet."""
    rest = sorted(set(range(1, F.n + 1)) - F.subset)
    return sorted(
        top + bottom for top, bottom in product(permutations(F.S), permutations(rest))
    )


def vertex_facets(sigma: Permutation) -> list[FacetId]:
    """The n - 1 facets through a vertex: the prefix sets of sigma."""
    n = len(sigma)
    return [FacetId(n, sigma[:k]) for k in range(1, n)]


def facets_intersect(F: FacetId, G: FacetId) -> bool:
    """True iff one facet set is a proper subset of the other."""
    return F.subset < G.subset or G.subset < F.subset


def chain_is_face(chain: Iterable[FacetId]) -> bool:
    """True iff the facet sets are totally ordered by strict inclusion."""
    ordered = sorted(chain, key=FacetId.sort_key)
    return all(a.subset < b.subset for a, b in zip(ordered, ordered[1:]))


def mirror_facet(F: FacetId) -> FacetId:
    """Relabeling induced by the anti-diagonal transpose: S -> {n+1-s : s not in S}."""
    return FacetId(F.n, tuple(F.n + 1 - s for s in range(1, F.n + 1) if s not in F.subset))


def facet_counts(n: int) -> dict[int, int]:
    return {k: math.comb(n, k) for k in range(1, n)}


def polytope_csv(n: int, lam: Optional[Spectrum] = None) -> str:
    """Vertex coordinate table ``permutation,coord_1..coord_n``."""
    lam = lam or Spectrum.default(n)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["permutation"] + [f"coord_{i}" for i in range(1, n + 1)])
    for sigma in vertices(n):
        writer.writerow(
            [permutation_word(sigma)] + [str(c) for c in vertex_coordinates(sigma, lam)]
        )
    return buffer.getvalue()


def facets_to_json(fs: Sequence[FacetId]) -> list[dict]:
    return [F.to_dict() for F in fs]
