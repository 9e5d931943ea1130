"""Common types and errors shared across orbitlab modules."""

from dataclasses import dataclass, fields
from typing import Optional

# One-line notation (sigma(1), ..., sigma(n)) of a permutation of [n].
Permutation = tuple[int, ...]

# A staircase slot (i, j) with i < j, 1-indexed.
Pair = tuple[int, int]


@dataclass
class EmitTargets:
    """Artifact files the command line can write.
    Attributes:
        REPORT_TXT: Human-readable orbit space report.
        REPORT_JSON: Orbit space report as JSON.
        GKM_DOT: GKM graph in DOT format.
        GKM_JSON: GKM graph as JSON.
        NERVE_DOT: Nerve of the special facets in DOT format.
        POLYTOPE_CSV: Vertex coordinate table of the permutohedron.
    """

    REPORT_TXT: str = "report.txt"
    REPORT_JSON: str = "report.json"
    GKM_DOT: str = "gkm.dot"
    GKM_JSON: str = "gkm.json"
    NERVE_DOT: str = "nerve.dot"
    POLYTOPE_CSV: str = "polytope.csv"

    @classmethod
    def all(cls) -> tuple[str, ...]:
        """Return every known target file name."""
        return tuple(f.default for f in fields(cls))


@dataclass
class EdgeClasses:
    """Classes of GKM graph edges.
    Attributes:
        POLYTOPE: Edge of the permutohedron, slot (i, i+1).
        DIAGONAL: Admissible 1-polytope that is not a polytope edge, slot (i, j) with j > i+1.
    """

    POLYTOPE: str = "polytope"
    DIAGONAL: str = "diagonal"


class OrbitLabError(ValueError):
    """Base class for structured orbitlab errors.
    Attributes:
        code: Machine-readable error code.
        message: Human-readable diagnostic.
    """

    code = "orbitlab_error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> dict:
        """Return the error as a ``{"code", "message"}`` mapping."""
        return {"code": self.code, "message": self.message}


class MonotonicityViolation(OrbitLabError):
    """h(i+1) < h(i) for some i."""

    code = "monotonicity_violation"


class BelowDiagonal(OrbitLabError):
    """h(i) < i for some i."""

    code = "below_diagonal"


class OutOfRange(OrbitLabError):
    """A value or size outside the admissible range."""

    code = "out_of_range"


class InvalidCut(OrbitLabError):
    """A staircase entry other than the tridiagonal step crosses a block cut."""

    code = "invalid_cut"

    def __init__(self, message: str, pair: Optional[Pair] = None):
        super().__init__(message)
        self.pair = pair


class InvalidWeight(OrbitLabError):
    """A weight vector outside the sum-zero sublattice."""

    code = "invalid_weight"


class InvalidSpectrum(OrbitLabError):
    """A spectrum with repeated eigenvalues or the wrong length."""

    code = "invalid_spectrum"


class InvalidFacet(OrbitLabError):
    """A subset that does not name a facet of the permutohedron."""

    code = "invalid_facet"


class RankDeficientAmbient(OrbitLabError):
    """The weights do not span a lattice of the requested rank."""

    code = "rank_deficient_ambient"


class KernelRankError(OrbitLabError):
    """The integer kernel of a weight list does not have rank one."""

    code = "kernel_rank_error"


class NotAComplex(OrbitLabError):
    """A simplex list that is not closed under taking faces."""

    code = "not_a_complex"


class UnsupportedProfile(OrbitLabError):
    """The orbit space model does not apply to this Hessenberg function."""

    code = "unsupported_profile"


class UnsupportedComplexity(UnsupportedProfile):
    """The torus action has complexity other than one."""

    code = "unsupported_complexity"

    def __init__(self, message: str, complexity: int):
        super().__init__(message)
        self.complexity = complexity


class ReducibleInput(UnsupportedProfile):
    """The staircase splits into blocks; analyze each block separately."""

    code = "reducible_input"

    def __init__(self, message: str, blocks: tuple = ()):
        super().__init__(message)
        self.blocks = blocks
