"""
Hessenberg functions and the staircase shapes they define.

A Hessenberg function h: [n] -> [n] is monotone with h(i) >= i. It fixes the
staircase of admissible entries a_ij (j <= h(i)) of an isospectral Hermitian
matrix. All indices in the public API are 1-based.

The complexity of the torus action is d = N - (n - 1), where N = sum(h(i) - i)
is half the real dimension and n - 1 the rank of the effective torus. The
worked examples ((3,3,4,4) and (3,3,3) both have complexity one) force the
``- (n - 1)`` normalisation.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from .common.common import (
    BelowDiagonal,
    InvalidCut,
    MonotonicityViolation,
    OutOfRange,
    Pair,
)

logger = logging.getLogger(__name__)


def _check_values(n: int, values: tuple[int, ...]) -> None:
    if not values:
        raise OutOfRange("A Hessenberg function needs at least one value.")
    if n != len(values):
        raise OutOfRange(f"Size n={n} does not match {len(values)} values.")
    for i, value in enumerate(values, start=1):
        if value > n:
            raise OutOfRange(f"h({i}) = {value} exceeds n = {n}.")
        if value < i:
            raise BelowDiagonal(f"h({i}) = {value} lies below the diagonal.")
    for i in range(1, n):
        if values[i] < values[i - 1]:
            raise MonotonicityViolation(
                f"h({i + 1}) = {values[i]} < h({i}) = {values[i - 1]}."
            )


@dataclass(frozen=True)
class HFun:
    """A validated Hessenberg function.
    Attributes:
        n: Matrix size.
        h: The values h(1), ..., h(n).
    """

    n: int
    h: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(v) for v in self.h))
        _check_values(self.n, self.h)

    def __call__(self, i: int) -> int:
        return self.h[i - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.h) + ")"

    @property
    def N(self) -> int:
        """Half the real dimension of M_h."""
        return sum(value - i for i, value in enumerate(self.h, start=1))

    @property
    def d(self) -> int:
        """Complexity of the effective torus action."""
        return complexity(self)

    @property
    def i0(self) -> Optional[int]:
        """Position of the double step of an irreducible complexity-one profile."""
        return complexity_one_profile(self)

    @property
    def word(self) -> str:
        """Compact name usable in file names, e.g. ``3-3-4-4``."""
        return "-".join(str(v) for v in self.h)

    def to_dict(self) -> dict:
        return {"n": self.n, "h": list(self.h)}

    @classmethod
    def from_dict(cls, data: dict) -> "HFun":
        try:
            n, values = int(data["n"]), tuple(int(v) for v in data["h"])
        except (KeyError, TypeError, ValueError) as e:
            raise OutOfRange(f"Cannot read a Hessenberg function from {data!r}.") from e
        return cls(n=n, h=values)

    @classmethod
    def from_string(cls, text: str) -> "HFun":
        """Parse the comma separated command line form ``3,3,4,5,5``."""
        try:
            values = [int(part) for part in text.replace(" ", "").split(",") if part]
        except ValueError as e:
            raise OutOfRange(f"Cannot read a Hessenberg function from '{text}'.") from e
        return validate(values)


def validate(values: list[int]) -> HFun:
    """Validate a list of values and return the Hessenberg function."""
    return HFun(n=len(values), h=tuple(values))


def support(h: HFun) -> list[Pair]:
    """Return the staircase slots (i, j), i < j <= h(i), in lexicographic order."""
    return [(i, j) for i in range(1, h.n + 1) for j in range(i + 1, h(i) + 1)]


def real_dimension(h: HFun) -> int:
    return 2 * h.N


def complexity(h: HFun) -> int:
    """Return d = N - (n - 1)."""
    return h.N - (h.n - 1)


def irreducible(h: HFun) -> bool:
    """True iff h(i) >= i + 1 for every i < n."""
    return all(h(i) >= i + 1 for i in range(1, h.n))


def is_tridiagonal(h: HFun) -> bool:
    return all(h(i) == min(i + 1, h.n) for i in range(1, h.n + 1))


def complexity_one_profile(h: HFun) -> Optional[int]:
    """Return i0 if h(i) = i + 1 for all i < n except h(i0) = i0 + 2, else None."""
    double_steps = []
    for i in range(1, h.n):
        if h(i) == i + 2:
            double_steps.append(i)
        elif h(i) != i + 1:
            return None
    if len(double_steps) != 1:
        return None
    return double_steps[0]


def block_split(h: HFun, k: int) -> tuple[HFun, HFun]:
    """Cut the staircase after row k.

    Only the tridiagonal entry (k, k+1) may cross the cut; it is set to zero.
    Returns the top k-block and the bottom (n-k)-block.
    """
    if not 1 <= k <= h.n - 1:
        raise InvalidCut(f"Cut position {k} outside 1..{h.n - 1}.")
    for i, j in support(h):
        if i <= k < j and (i, j) != (k, k + 1):
            raise InvalidCut(
                f"Entry ({i},{j}) of h={h} crosses the cut at {k}.", pair=(i, j)
            )
    top = HFun(n=k, h=tuple(min(h(i), k) for i in range(1, k + 1)))
    bottom = HFun(n=h.n - k, h=tuple(h(i) - k for i in range(k + 1, h.n + 1)))
    return top, bottom


def blocks(h: HFun) -> list[HFun]:
    """Split h into its irreducible diagonal blocks."""
    for k in range(1, h.n):
        if h(k) == k:
            top, bottom = block_split(h, k)
            return [top] + blocks(bottom)
    return [h]


def enumerate_complexity_one(n: int) -> list[HFun]:
    """Return the irreducible complexity-one profiles of size n, ordered by i0."""
    if n < 3:
        raise OutOfRange(f"Complexity-one profiles need n >= 3, got {n}.")
    profiles = []
    for i0 in range(1, n - 1):
        values = [min(i + 1, n) for i in range(1, n + 1)]
        values[i0 - 1] = i0 + 2
        profiles.append(validate(values))
    logger.debug("n=%d: %d complexity-one profiles", n, len(profiles))
    return profiles


def _monotone_tails(n: int, start: int, floor: int) -> Iterator[tuple[int, ...]]:
    if start > n:
        yield ()
        return
    for value in range(max(floor, start), n + 1):
        for tail in _monotone_tails(n, start + 1, value):
            yield (value,) + tail


def enumerate_hessenberg(n: int) -> list[HFun]:
    """Return all Hessenberg functions of size n in lexicographic order."""
    if n < 1:
        raise OutOfRange(f"Matrix size must be positive, got {n}.")
    return [HFun(n=n, h=values) for values in _monotone_tails(n, 1, 1)]


def anti_diagonal_mirror(h: HFun) -> HFun:
    """Transpose the staircase with respect to the anti-diagonal."""
    n = h.n
    values = list(range(1, n + 1))
    for i, j in support(h):
        row, col = n + 1 - j, n + 1 - i
        values[row - 1] = max(values[row - 1], col)
    return validate(values)
