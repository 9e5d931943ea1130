"""
Exact integral simplicial homology.

Boundary matrices are reduced to Smith normal form by integer row and column
operations, pivoting on an entry of least absolute value. Matrices are kept
sparse (dict of rows plus a column index) so that the nerves of the larger
profiles stay tractable; Python integers give arbitrary precision.
"""

import json
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Optional, Sequence

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from .common.common import NotAComplex, OutOfRange

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    """Integer matrix with arbitrary-precision entries.
    Attributes:
        rows: Number of rows.
        cols: Number of columns.
        entries: Row-major entries.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise OutOfRange(f"Entries do not form a {self.rows}x{self.cols} matrix.")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        width = cols if cols is not None else (len(entries[0]) if entries else 0)
        return cls(len(entries), width, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls(
            size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise OutOfRange(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}."
            )
        columns = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in columns)
                for row in self.entries
            ),
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def rank(self) -> int:
        return len(smith_normal_form(self))

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(
            [[ZZ(x) for x in row] for row in self.entries], (self.rows, self.cols), ZZ
        )


class _SparseMatrix:
    """Working copy for the elimination: rows as dicts, plus column supports."""

    def __init__(self, matrix: IntMatrix):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for i, row in enumerate(matrix.entries):
            for j, value in enumerate(row):
                if value:
                    self.rows.setdefault(i, {})[j] = value
                    self.cols.setdefault(j, set()).add(i)

    def _set(self, i: int, j: int, value: int) -> None:
        if value:
            self.rows.setdefault(i, {})[j] = value
            self.cols.setdefault(j, set()).add(i)
            return
        row = self.rows.get(i)
        if row and j in row:
            del row[j]
            if not row:
                del self.rows[i]
            self.cols[j].discard(i)
            if not self.cols[j]:
                del self.cols[j]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]"""
        for j, value in list(self.rows.get(source, {}).items()):
            self._set(target, j, self.rows.get(target, {}).get(j, 0) + factor * value)

    def add_col(self, target: int, source: int, factor: int) -> None:
        """col[target] += factor * col[source]"""
        for i in list(self.cols.get(source, ())):
            value = self.rows[i][source]
            self._set(i, target, self.rows.get(i, {}).get(target, 0) + factor * value)

    def remove(self, i: int, j: int) -> None:
        for col in list(self.rows.get(i, {})):
            self._set(i, col, 0)
        for row in list(self.cols.get(j, ())):
            self._set(row, j, 0)

    def pivot(self) -> Optional[tuple[int, int]]:
        """Entry of least absolute value; ties go to the sparsest row and column."""
        best, best_key = None, None
        for i, row in self.rows.items():
            for j, value in row.items():
                key = (abs(value), (len(row) - 1) * (len(self.cols[j]) - 1), i, j)
                if best_key is None or key < best_key:
                    best, best_key = (i, j), key
                    if key[0] == 1 and key[1] == 0:
                        return best
        return best


def _reduce_at(work: _SparseMatrix, i: int, j: int) -> Optional[tuple[int, int]]:
    """Clear row i and column j around the pivot (i, j).

    Returns None when the pivot is isolated and divides every remaining
    entry, otherwise the position of a smaller entry to pivot on next.
    """
    p = work.rows[i][j]
    for r in sorted(work.cols.get(j, ())):
        if r != i:
            work.add_row(r, i, -(work.rows[r][j] // p))
    for c in sorted(work.rows.get(i, {})):
        if c != j:
            work.add_col(c, j, -(work.rows[i][c] // p))
    leftovers = [(r, j) for r in work.cols.get(j, ()) if r != i]
    leftovers += [(i, c) for c in work.rows.get(i, {}) if c != j]
    if leftovers:
        return min(leftovers, key=lambda pos: (abs(work.rows[pos[0]][pos[1]]), pos))
    if abs(p) == 1:
        return None
    for r, row in work.rows.items():
        if r != i and any(value % p for value in row.values()):
            work.add_row(i, r, 1)
            return (i, j)
    return None


def smith_normal_form(matrix: IntMatrix) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix."""
    work = _SparseMatrix(matrix)
    factors = []
    while work.rows:
        i, j = work.pivot()
        while True:
            smaller = _reduce_at(work, i, j)
            if smaller is None:
                break
            i, j = smaller
        factors.append(abs(work.rows[i][j]))
        work.remove(i, j)
    return tuple(sorted(factors))


def rational_rank(matrix: IntMatrix) -> int:
    """Rank over Q by exact elimination."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    _, pivots = matrix.to_domain_matrix().convert_to(QQ).rref()
    return len(pivots)


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex over an ordered vertex set.
    Attributes:
        vertices: Vertex labels; their order fixes the orientation of simplices.
        simplices: Index tuples (increasing), sorted by dimension then lexicographically.
    """

    vertices: tuple
    simplices: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        present = set(self.simplices)
        for simplex in self.simplices:
            if not simplex or list(simplex) != sorted(set(simplex)):
                raise NotAComplex(f"Simplex {simplex} is not an increasing index tuple.")
            if any(not 0 <= v < len(self.vertices) for v in simplex):
                raise NotAComplex(f"Simplex {simplex} uses an unknown vertex.")
            if len(simplex) > 1:
                for face in combinations(simplex, len(simplex) - 1):
                    if face not in present:
                        raise NotAComplex(
                            f"Face {self.label(face)} of {self.label(simplex)} is missing."
                        )

    @classmethod
    def from_simplices(
        cls, simplices: Iterable[Iterable[Hashable]], vertices: Optional[Sequence] = None
    ) -> "SimplicialComplex":
        """Build from labelled simplices; every face must be listed."""
        simplices = [tuple(s) for s in simplices]
        if vertices is None:
            vertices = sorted({v for s in simplices for v in s})
        index = {v: k for k, v in enumerate(vertices)}
        try:
            encoded = {tuple(sorted(index[v] for v in s)) for s in simplices}
        except KeyError as e:
            raise NotAComplex(f"Vertex {e.args[0]!r} is not in the vertex list.") from e
        return cls(tuple(vertices), tuple(sorted(encoded, key=lambda s: (len(s), s))))

    @classmethod
    def from_maximal(
        cls, maximal: Iterable[Iterable[Hashable]], vertices: Optional[Sequence] = None
    ) -> "SimplicialComplex":
        """Build the downward closure of a list of simplices."""
        faces = set()
        for simplex in maximal:
            simplex = tuple(simplex)
            for size in range(1, len(simplex) + 1):
                faces.update(frozenset(f) for f in combinations(simplex, size))
        if vertices is None:
            vertices = sorted({v for f in faces for v in f})
        return cls.from_simplices((tuple(f) for f in faces), vertices)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        """Read the list-of-simplices format ``{"simplices": [[0], [1], [0, 1]]}``."""
        data = json.loads(text)
        return cls.from_simplices(data["simplices"], data.get("vertices"))

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": list(self.vertices),
                "simplices": [[self.vertices[v] for v in s] for s in self.simplices],
            },
            sort_keys=True,
        )

    def label(self, simplex: tuple[int, ...]) -> tuple:
        return tuple(self.vertices[v] for v in simplex)

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    def of_dim(self, q: int) -> list[tuple[int, ...]]:
        return [s for s in self.simplices if len(s) == q + 1]

    def f_vector(self) -> list[int]:
        return [len(self.of_dim(q)) for q in range(self.dimension + 1)]

    def is_empty(self) -> bool:
        return not self.simplices


def boundary_matrices(complex_: SimplicialComplex) -> list[IntMatrix]:
    """[d_0, d_1, ..., d_dim]; d_q maps q-chains to (q-1)-chains, d_0 is 0 x f_0."""
    by_dim = [complex_.of_dim(q) for q in range(complex_.dimension + 1)]
    if not by_dim:
        return []
    matrices = [IntMatrix.zeros(0, len(by_dim[0]))]
    for q in range(1, len(by_dim)):
        index = {face: r for r, face in enumerate(by_dim[q - 1])}
        rows = [[0] * len(by_dim[q]) for _ in by_dim[q - 1]]
        for c, simplex in enumerate(by_dim[q]):
            for t in range(len(simplex)):
                face = simplex[:t] + simplex[t + 1 :]
                rows[index[face]][c] = (-1) ** t
        matrices.append(IntMatrix(len(by_dim[q - 1]), len(by_dim[q]), tuple(map(tuple, rows))))
    return matrices


@dataclass(frozen=True)
class HomologyGroup:
    """H_q = Z^rank + Z/t_1 + ... + Z/t_s.
    Attributes:
        degree: q.
        rank: Free rank.
        torsion: Torsion coefficients > 1 in divisibility order.
    """

    degree: int
    rank: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def describe(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"degree": self.degree, "rank": self.rank, "torsion": list(self.torsion)}


@dataclass(frozen=True)
class HomologyGroups:
    groups: tuple[HomologyGroup, ...]
    reduced: bool = False

    def __getitem__(self, q: int) -> HomologyGroup:
        for group in self.groups:
            if group.degree == q:
                return group
        return HomologyGroup(q, 0, ())

    def betti_numbers(self) -> list[int]:
        return [g.rank for g in self.groups]

    def to_list(self) -> list[dict]:
        return [g.to_dict() for g in self.groups]


def homology(complex_: SimplicialComplex) -> HomologyGroups:
    """Integral homology H_0 .. H_dim."""
    boundaries = boundary_matrices(complex_)
    factors = [smith_normal_form(d) for d in boundaries]
    groups = []
    for q in range(len(boundaries)):
        cycles = boundaries[q].cols - len(factors[q])
        image = factors[q + 1] if q + 1 < len(factors) else ()
        groups.append(
            HomologyGroup(q, cycles - len(image), tuple(d for d in image if d > 1))
        )
    logger.debug("homology of complex with f-vector %s: %s", complex_.f_vector(), groups)
    return HomologyGroups(tuple(groups))


def reduced_homology(complex_: SimplicialComplex) -> HomologyGroups:
    """Reduced homology; the empty complex has H~_{-1} = Z."""
    if complex_.is_empty():
        return HomologyGroups((HomologyGroup(-1, 1, ()),), reduced=True)
    groups = list(homology(complex_).groups)
    groups[0] = HomologyGroup(0, groups[0].rank - 1, groups[0].torsion)
    return HomologyGroups(tuple(groups), reduced=True)


def euler_characteristic(complex_: SimplicialComplex) -> int:
    return sum((-1) ** q * count for q, count in enumerate(complex_.f_vector()))
