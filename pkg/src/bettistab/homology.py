"""Reduced simplicial homology over Q via exact ranks of integer boundary matrices."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Face = tuple[int, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ValueError(f"entries do not match the declared {self.rows}x{self.cols} shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(r) for r in rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntegerMatrix:
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(
            self.cols,
            self.rows,
            tuple(tuple(self.entries[r][c] for r in range(self.rows)) for c in range(self.cols)),
        )

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def rank_exact(M: IntegerMatrix | Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on Python integers."""
    a = M.tolist() if isinstance(M, IntegerMatrix) else [list(map(int, row)) for row in M]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        prow = a[rank]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[col]
            if f == 0:
                if p != prev:
                    a[r] = [(p * x) // prev for x in row]
                continue
            # exact division by the previous pivot is the Bareiss invariant
            a[r] = [(p * x - f * y) // prev for x, y in zip(row, prow)]
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


class SimplicialComplex:
    """A finite abstract simplicial complex on vertices ``0..vertex_count-1``.

    ``faces`` is closed under subsets; pass ``facets=True`` to generate the
    closure from maximal faces. The void complex has no faces at all, the
    irrelevant complex has only the empty face.
    """

    def __init__(self, vertex_count: int, faces: Iterable[Sequence[int]] = (), *, facets: bool = False):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        closed: set[Face] = set()
        for face in faces:
            f = tuple(sorted(set(face)))
            if len(f) != len(tuple(face)):
                raise ValueError(f"repeated vertex in face {tuple(face)}")
            if f and (f[0] < 0 or f[-1] >= vertex_count):
                raise ValueError(f"face {f} uses a vertex outside 0..{vertex_count - 1}")
            if facets:
                for k in range(len(f) + 1):
                    closed.update(combinations(f, k))
            else:
                closed.add(f)
        if not facets:
            for f in closed:
                for v in range(len(f)):
                    if f[:v] + f[v + 1:] not in closed:
                        raise ValueError(f"face set is not closed under subsets: {f} lacks a facet")
        self.vertex_count = vertex_count
        self.faces: frozenset[Face] = frozenset(closed)

    @classmethod
    def void(cls, vertex_count: int = 0) -> SimplicialComplex:
        return cls(vertex_count, ())

    @classmethod
    def irrelevant(cls, vertex_count: int = 0) -> SimplicialComplex:
        return cls(vertex_count, [()])

    @classmethod
    def simplex(cls, vertices: Sequence[int], vertex_count: int | None = None) -> SimplicialComplex:
        vertices = tuple(vertices)
        if vertex_count is None:
            vertex_count = max(vertices, default=-1) + 1
        return cls(vertex_count, [vertices], facets=True)

    def cone(self) -> SimplicialComplex:
        """Cone with apex the new vertex ``vertex_count``."""
        apex = self.vertex_count
        faces = set(self.faces) | {f + (apex,) for f in self.faces}
        return SimplicialComplex(apex + 1, faces)

    @property
    def dimension(self) -> int:
        """Largest face dimension; -1 for the irrelevant complex and -2 for the void one."""
        return max((len(f) - 1 for f in self.faces), default=-2)

    def faces_of_dim(self, i: int) -> list[Face]:
        return sorted(f for f in self.faces if len(f) == i + 1)

    def f_vector(self) -> list[int]:
        """Face counts indexed by dimension ``-1 .. dimension``."""
        return [len(self.faces_of_dim(i)) for i in range(-1, self.dimension + 1)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.faces == other.faces

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.faces))

    def __repr__(self) -> str:
        return f"SimplicialComplex({self.vertex_count}, {sorted(self.faces, key=lambda f: (len(f), f))})"


def boundary_matrix(K: SimplicialComplex, i: int) -> IntegerMatrix:
    """Matrix of the boundary from i-faces to (i-1)-faces, faces in lexicographic order.

    Removing the k-th vertex of a face carries the sign ``(-1)**k``; for
    ``i == 0`` this is the augmentation onto the empty face.
    """
    if i < 0:
        raise ValueError("boundary_matrix needs i >= 0")
    cols = K.faces_of_dim(i)
    rows = K.faces_of_dim(i - 1)
    index = {f: r for r, f in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for c, face in enumerate(cols):
        for k in range(len(face)):
            entries[index[face[:k] + face[k + 1:]]][c] = -1 if k % 2 else 1
    return IntegerMatrix(len(rows), len(cols), tuple(tuple(r) for r in entries))


def reduced_homology_dims(K: SimplicialComplex, max_dim: int) -> list[int]:
    """``dim H~_i(K; Q)`` for ``i = -1 .. max_dim`` (list index ``i + 1``)."""
    if max_dim < -1:
        raise ValueError("max_dim must be at least -1")
    counts = {i: len(K.faces_of_dim(i)) for i in range(-1, max_dim + 2)}
    ranks = {i: rank_exact(boundary_matrix(K, i)) if counts[i] and counts[i - 1] else 0
             for i in range(0, max_dim + 2)}
    ranks[-1] = 0
    return [counts[i] - ranks[i] - ranks[i + 1] for i in range(-1, max_dim + 1)]


def reduced_euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** i * n for i, n in enumerate(K.f_vector(), start=-1))


@lru_cache(maxsize=None)
def homology_of_face_mask(n: int, mask: int) -> tuple[int, ...]:
    """Reduced homology of the complex on ``n`` vertices whose faces are the set bits of ``mask``.

    Bit ``t`` of ``mask`` stands for the face whose vertex set is the binary
    expansion of ``t``. The result is indexed by dimension ``-1 .. n-1``.
    """
    faces = [tuple(v for v in range(n) if t >> v & 1) for t in range(1 << n) if mask >> t & 1]
    return tuple(reduced_homology_dims(SimplicialComplex(n, faces), n - 1))
