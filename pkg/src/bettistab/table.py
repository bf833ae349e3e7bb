"""Graded Betti tables: value type, Macaulay2-style rendering, shape keys."""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping

_ASCII = {"zero": ".", "sum": "++", "arrow": "->", "minus": "-"}
_TYPO = {"zero": "·", "sum": "⊕", "arrow": "→", "minus": "−"}


class BettiTable:
    """Nonzero graded Betti numbers ``beta[i, j]`` (homological degree i, internal degree j).

    Entry ``(i, j)`` sits in column ``i`` and row ``j - i`` of the rendered grid.
    """

    def __init__(self, entries: Mapping[tuple[int, int], int] | Iterable[tuple[int, int, int]]):
        if isinstance(entries, Mapping):
            items = [(i, j, m) for (i, j), m in entries.items()]
        else:
            items = [tuple(e) for e in entries]
        clean: dict[tuple[int, int], int] = {}
        for i, j, m in items:
            i, j, m = int(i), int(j), int(m)
            if i < 0 or j < 0:
                raise ValueError(f"negative index in Betti entry {(i, j)}")
            if m < 0:
                raise ValueError(f"negative multiplicity {m} at {(i, j)}")
            if m:
                clean[(i, j)] = clean.get((i, j), 0) + m
        if not clean:
            raise ValueError("a Betti table needs at least one nonzero entry")
        self._entries = dict(sorted(clean.items()))

    @property
    def entries(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType(self._entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self._entries.get(key, 0)

    def __iter__(self):
        return iter(self._entries.items())

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        return f"BettiTable({self._entries})"

    @property
    def max_i(self) -> int:
        return max(i for i, _ in self._entries)

    @property
    def max_j(self) -> int:
        return max(j for _, j in self._entries)

    def total(self, i: int) -> int:
        return sum(m for (k, _), m in self._entries.items() if k == i)

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.max_i + 1)]

    def row_range(self) -> tuple[int, int]:
        rows = [j - i for i, j in self._entries]
        return min(rows), max(rows)

    def support(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._entries)

    def to_json(self) -> dict:
        return {"entries": [[i, j, m] for (i, j), m in self._entries.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> BettiTable:
        return cls([tuple(e) for e in data["entries"]])


@dataclass(frozen=True)
class ShapeKey:
    """Support of a Betti table with internal degrees shifted down by ``r * d``."""

    offsets: frozenset[tuple[int, int]]
    shift_r: int
    power_d: int = field(compare=False)

    @property
    def row_offsets(self) -> frozenset[tuple[int, int]]:
        """The same support in grid coordinates: ``(column, row - r*d)``."""
        return frozenset((i, off - i) for i, off in self.offsets)


def shape_key(B: BettiTable, r: int, d: int) -> ShapeKey:
    if r < 1 or d < 1:
        raise ValueError("shift r and power d must be positive")
    shift = r * d
    return ShapeKey(frozenset((i, j - shift) for i, j in B.entries), r, d)


def same_shape(Bx: BettiTable, x: int, By: BettiTable, y: int, r: int) -> bool:
    return shape_key(Bx, r, x) == shape_key(By, r, y)


def render_m2(B: BettiTable, typographic: bool = False) -> str:
    """Render in the Macaulay2 ``betti`` layout.

    The label column and every entry column are right-aligned; columns are
    separated by one space; zero entries print as ``.``. Every row between the
    lowest and highest populated row is printed.
    """
    sym = _TYPO if typographic else _ASCII
    ncols = B.max_i + 1
    lo, hi = B.row_range()
    grid = [["-"] + [str(i) for i in range(ncols)], ["total:"] + [str(t) for t in B.totals()]]
    for row in range(lo, hi + 1):
        cells = [str(B[i, i + row]) if B[i, i + row] else sym["zero"] for i in range(ncols)]
        grid.append([f"{row}:"] + cells)
    widths = [max(len(line[c]) for line in grid) for c in range(ncols + 1)]
    return "\n".join(" ".join(cell.rjust(w) for cell, w in zip(line, widths)) for line in grid)


def resolution_skeleton(B: BettiTable, typographic: bool = False) -> str:
    """``0 -> F_p -> ... -> F_0 -> I -> 0`` with ``F_i`` the direct sum of shifted copies of R."""
    sym = _TYPO if typographic else _ASCII
    terms = ["0"]
    for i in range(B.max_i, -1, -1):
        parts = []
        for (k, j), m in B.entries.items():
            if k != i:
                continue
            power = "" if m == 1 else f"^{m}"
            parts.append(f"R{power}({sym['minus']}{j})")
        terms.append(f" {sym['sum']} ".join(parts) if parts else "0")
    terms += ["I", "0"]
    return f" {sym['arrow']} ".join(terms)
