"""
Tangent weights at torus fixed points and the local corner structure they induce.

All rank and kernel computations are exact (sympy domain matrices over ZZ and QQ).
"""

import logging
import math
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Sequence

from sympy import Matrix
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from .common.common import (
    InvalidWeight,
    KernelRankError,
    Permutation,
    RankDeficientAmbient,
    ReducibleInput,
    UnsupportedComplexity,
)
from .hessenberg import HFun, blocks, complexity, irreducible, support

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeightVec:
    """A character of T^n that is trivial on the diagonal circle.
    Attributes:
        coords: Integer coordinates with zero sum.
    """

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if sum(self.coords) != 0:
            raise InvalidWeight(f"Weight {self.coords} does not have coordinate sum 0.")

    @classmethod
    def basis(cls, n: int, i: int, j: int) -> "WeightVec":
        """Return e_i - e_j in Z^n (1-indexed)."""
        coords = [0] * n
        coords[i - 1] += 1
        coords[j - 1] -= 1
        return cls(tuple(coords))

    def scaled(self, factor: int) -> "WeightVec":
        return WeightVec(tuple(factor * c for c in self.coords))

    def __len__(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class CornerSignature:
    """Local model R^{m+1} x R>=^{N-m} of the orbit space at a fixed point.
    Attributes:
        relation: Primitive integer relation c with sum c_t alpha_t = 0.
    """

    relation: tuple[int, ...]

    def __post_init__(self):
        nonzero = [c for c in self.relation if c]
        if len(nonzero) < 2:
            raise KernelRankError(f"Relation {self.relation} has fewer than two terms.")
        if math.gcd(*nonzero) != 1 or nonzero[0] < 0:
            raise KernelRankError(f"Relation {self.relation} is not normalized.")

    @property
    def N(self) -> int:
        return len(self.relation)

    @property
    def m(self) -> int:
        return sum(1 for c in self.relation if c)

    @property
    def free_dim(self) -> int:
        return self.m + 1

    @property
    def corner_dim(self) -> int:
        return self.N - self.m

    def describe(self) -> str:
        return f"R^{self.free_dim} x R>=^{self.corner_dim}"


@dataclass(frozen=True)
class FixedPointClass:
    """Classification of the image of a fixed point in the orbit space.
    Attributes:
        interior: True when the weights are in general position.
        signature: Corner signature for boundary points, None for interior points.
        uniform: True when every fixed point has the same classification.
        fixed_points: Number of fixed points the statement covers.
    """

    interior: bool
    signature: Optional[CornerSignature]
    uniform: bool
    fixed_points: int

    def describe(self) -> str:
        if self.interior:
            return "interior"
        return f"boundary, corner {self.signature.describe()}"


def tangent_weights(h: HFun, sigma: Optional[Permutation] = None) -> list[WeightVec]:
    """One weight e_i - e_j per staircase slot, in slot order.

    With ``sigma`` the weights are written in the coordinates of the fixed
    point diag(lambda_sigma(1), ..., lambda_sigma(n)), i.e. e_sigma(i) - e_sigma(j).
    """
    if sigma is None:
        return [WeightVec.basis(h.n, i, j) for i, j in support(h)]
    return [WeightVec.basis(h.n, sigma[i - 1], sigma[j - 1]) for i, j in support(h)]


def _domain_matrix(rows: Sequence[Sequence[int]], cols: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(x) for x in row] for row in rows], (len(rows), cols), ZZ)


def weight_rank(vs: Sequence[WeightVec]) -> int:
    """Exact rank of the span of the weights."""
    if not vs:
        return 0
    _, pivots = _domain_matrix([v.coords for v in vs], len(vs[0])).convert_to(QQ).rref()
    return len(pivots)


def is_general_position(vs: Sequence[WeightVec], r: int) -> bool:
    """True iff every r of the weights are linearly independent."""
    if weight_rank(vs) < r:
        raise RankDeficientAmbient(
            f"The {len(vs)} weights span a lattice of rank < {r}."
        )
    return all(weight_rank(subset) == r for subset in combinations(vs, r))


def primitive_relation(vs: Sequence[WeightVec]) -> CornerSignature:
    """Return the primitive integer relation among the weights.

    The kernel of the weight matrix must have rank one. The relation is scaled
    to coprime integers with the first nonzero coefficient positive.
    """
    columns = Matrix([list(v.coords) for v in vs]).T
    kernel = columns.nullspace()
    if len(kernel) != 1:
        raise KernelRankError(
            f"The integer kernel of {len(vs)} weights has rank {len(kernel)}, expected 1."
        )
    rational = list(kernel[0])
    scale = math.lcm(*(int(c.q) for c in rational))
    integral = [int(c * scale) for c in rational]
    divisor = math.gcd(*integral)
    integral = [c // divisor for c in integral]
    if next(c for c in integral if c) < 0:
        integral = [-c for c in integral]
    return CornerSignature(tuple(integral))


def _require_complexity_one(h: HFun) -> None:
    d = complexity(h)
    if d != 1:
        raise UnsupportedComplexity(
            f"h={h} has complexity {d}; fixed point corners are classified for complexity 1.",
            complexity=d,
        )
    if not irreducible(h):
        parts = tuple(blocks(h))
        raise ReducibleInput(
            f"h={h} is reducible; decompose first into "
            + " x ".join(str(b) for b in parts)
            + ".",
            blocks=parts,
        )


def _classify(vs: list[WeightVec], r: int) -> tuple[bool, Optional[CornerSignature]]:
    if is_general_position(vs, r):
        return True, None
    return False, primitive_relation(vs)


def classify_fixed_point(h: HFun) -> FixedPointClass:
    """Decide whether fixed points map to the interior or the boundary of M_h/T.

    The weights at diag(lambda_sigma) are the images of those at the identity
    under a coordinate permutation, which preserves ranks, so the answer is
    the same at all n! fixed points.
    """
    _require_complexity_one(h)
    interior, signature = _classify(tangent_weights(h), h.n - 1)
    logger.debug("h=%s: interior=%s signature=%s", h, interior, signature)
    return FixedPointClass(
        interior=interior,
        signature=signature,
        uniform=True,
        fixed_points=math.factorial(h.n),
    )


def classify_all_fixed_points(h: HFun) -> dict[Permutation, FixedPointClass]:
    """Classify every fixed point separately and check that they agree."""
    _require_complexity_one(h)
    results = {}
    for sigma in permutations(range(1, h.n + 1)):
        interior, signature = _classify(tangent_weights(h, sigma), h.n - 1)
        results[sigma] = (interior, signature)
    uniform = len(set(results.values())) == 1
    total = len(results)
    return {
        sigma: FixedPointClass(interior, signature, uniform, total)
        for sigma, (interior, signature) in results.items()
    }
