"""Graded Betti numbers of monomial ideals.

The primary backend uses the multigraded formula

    beta_{i,b}(I) = dim H~_{i-1}(K_b; Q),
    K_b = { tau subset of the variables : x^(b - tau) in I },

where ``tau`` runs over 0/1 vectors. ``K_b`` lives on at most ``n`` vertices,
so each complex is a constant-size problem; its homology depends only on which
faces are present, and is memoized by that face bitmask.

Two routes enumerate the multidegrees ``b``:

* ``"lattice"`` walks the lcm lattice of the generators explicitly.
* ``"staircase"`` (default) never builds the lattice. Nonzero Betti numbers
  only occur at lattice points, so every coordinate of ``b`` equals some
  generator exponent. The first ``n-1`` coordinates range over those values
  on a compressed grid, where ``h[p]`` is the smallest last exponent of a
  generator dividing ``x^p``. If the last coordinate ``c`` avoids every
  threshold ``h[p - sigma]``, adding the last vertex to a face never changes
  membership, so ``K_b`` is a cone and acyclic. Only those thresholds are
  visited, and the whole sweep is vectorized.

The Taylor backend is an independent oracle. It takes the Taylor resolution
modulo the maximal ideal and reads off the homology of the resulting complex.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .errors import CapacityError
from .homology import IntegerMatrix, homology_of_face_mask, rank_exact
from .monomials import MonomialIdeal
from .table import BettiTable

TAYLOR_CAP = 14
INCLUSION_EXCLUSION_CAP = 20
MAX_STAIRCASE_VARS = 6
_INF = np.iinfo(np.int64).max // 4

Multidegree = tuple[int, ...]


@dataclass(frozen=True)
class LcmLattice:
    elements: frozenset[Multidegree]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, b) -> bool:
        return tuple(b) in self.elements

    def __iter__(self) -> Iterator[Multidegree]:
        return iter(sorted(self.elements, key=lambda b: (sum(b), b)))


@dataclass(frozen=True)
class MultigradedBetti:
    """Nonzero ``beta_{i,b}`` keyed by ``(i, b)``."""

    entries: Mapping[tuple[int, Multidegree], int]

    def graded(self) -> BettiTable:
        acc: dict[tuple[int, int], int] = defaultdict(int)
        for (i, b), m in self.entries.items():
            acc[i, sum(b)] += m
        return BettiTable(acc)

    def support(self) -> set[Multidegree]:
        return {b for _, b in self.entries}


def lcm_closure(I: MonomialIdeal) -> LcmLattice:
    """Join-closure of the generator multidegrees.

    Every lattice element is an lcm of generators, so joining the frontier
    with single generators until nothing new appears reaches the fixpoint.
    """
    gens = [tuple(g) for g in I.exponents.tolist()]
    seen = set(gens)
    frontier = list(seen)
    while frontier:
        fresh = set()
        for a in frontier:
            for g in gens:
                b = tuple(max(x, y) for x, y in zip(a, g))
                if b not in seen:
                    fresh.add(b)
        seen |= fresh
        frontier = list(fresh)
    return LcmLattice(frozenset(seen))


def _homology_rows(n: int, masks: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unique face masks and, per input mask, the row of its homology table."""
    uniq, inverse = np.unique(masks, return_inverse=True)
    table = np.array([homology_of_face_mask(n, int(m)) for m in uniq], dtype=np.int64)
    return table, inverse.reshape(-1)


def _staircase(exps: np.ndarray) -> dict[tuple[int, Multidegree], int]:
    m, n = exps.shape
    if n == 1:
        return {(0, (int(exps[0, 0]),)): 1}
    if n > MAX_STAIRCASE_VARS:
        raise CapacityError(f"staircase sweep supports at most {MAX_STAIRCASE_VARS} variables")
    p, last = exps[:, :-1], exps[:, -1]
    k = n - 1
    values = [np.unique(p[:, a]) for a in range(k)]
    shape = tuple(len(v) + 1 for v in values)
    # index 0 of every axis is a sentinel below all generator exponents
    h = np.full(shape, _INF, dtype=np.int64)
    np.minimum.at(h, tuple(np.searchsorted(values[a], p[:, a]) + 1 for a in range(k)), last)
    for a in range(k):
        h = np.minimum.accumulate(h, axis=a)

    inner = tuple(s - 1 for s in shape)
    shifted = []
    for sigma in range(1 << k):
        sl = tuple(slice(1 - (sigma >> a & 1), shape[a] - (sigma >> a & 1)) for a in range(k))
        shifted.append(h[sl].reshape(-1))
    shifted = np.stack(shifted, axis=1)  # (points, 2^k)

    # candidate last exponents: the distinct finite thresholds around each point
    ordered = np.sort(shifted, axis=1)
    fresh = np.ones(ordered.shape, dtype=bool)
    fresh[:, 1:] = ordered[:, 1:] != ordered[:, :-1]
    pt, slot = np.nonzero(fresh & (ordered < _INF))
    if pt.size == 0:
        return {}
    c = ordered[pt, slot]
    hs = shifted[pt]

    masks = np.zeros(len(pt), dtype=np.uint64)
    for sigma in range(1 << k):
        for t in (0, 1):
            tau = sigma | (t << k)
            present = (c - t) >= hs[:, sigma]
            masks |= present.astype(np.uint64) << np.uint64(tau)
    table, rows = _homology_rows(n, masks)
    hom = table[rows]  # column i holds beta_i at that multidegree
    hit = np.flatnonzero(hom.any(axis=1))

    coords = np.unravel_index(pt[hit], inner)
    bvals = np.stack([values[a][coords[a]] for a in range(k)] + [c[hit]], axis=1)
    out: dict[tuple[int, Multidegree], int] = {}
    for b, row in zip(bvals.tolist(), hom[hit].tolist()):
        for i, mult in enumerate(row):
            if mult:
                out[i, tuple(b)] = mult
    return out


def _lattice(I: MonomialIdeal) -> dict[tuple[int, Multidegree], int]:
    exps = I.exponents
    n = I.num_vars
    taus = np.array([[t >> v & 1 for v in range(n)] for t in range(1 << n)], dtype=np.int64)
    weights = np.uint64(1) << np.arange(1 << n, dtype=np.uint64)
    out: dict[tuple[int, Multidegree], int] = {}
    for b in lcm_closure(I):
        shifted = np.array(b, dtype=np.int64) - taus
        member = (shifted >= 0).all(axis=1) & (exps[None, :, :] <= shifted[:, None, :]).all(axis=2).any(axis=1)
        mask = int(np.bitwise_or.reduce(np.where(member, weights, np.uint64(0))))
        for i, mult in enumerate(homology_of_face_mask(n, mask)):
            if mult:
                out[i, b] = mult
    return out


def multigraded_betti(I: MonomialIdeal, method: str = "staircase") -> MultigradedBetti:
    if method == "staircase":
        if I.num_vars > MAX_STAIRCASE_VARS:
            return MultigradedBetti(_lattice(I))
        return MultigradedBetti(_staircase(I.exponents))
    if method == "lattice":
        return MultigradedBetti(_lattice(I))
    raise ValueError(f"unknown method {method!r}")


def betti_koszul(I: MonomialIdeal, method: str = "staircase") -> BettiTable:
    """Graded Betti table of ``I`` from the homology of the upper Koszul complexes ``K_b``."""
    return multigraded_betti(I, method).graded()


def taylor_multigraded(I: MonomialIdeal, cap: int = TAYLOR_CAP) -> MultigradedBetti:
    """Multigraded Betti numbers from the Taylor complex reduced modulo the maximal ideal.

    After tensoring with the residue field only the differential entries between
    subsets of equal lcm survive, so the complex splits by multidegree.
    """
    exps = I.exponents
    m, n = exps.shape
    if m > cap:
        raise CapacityError(f"Taylor oracle limited to {cap} generators, ideal has {m}")
    lcms = np.zeros((1 << m, n), dtype=np.int64)
    for k in range(m):
        lcms[1 << k: 2 << k] = np.maximum(lcms[: 1 << k], exps[k])
    groups: dict[Multidegree, list[int]] = defaultdict(list)
    for mask, row in enumerate(lcms.tolist()):
        if mask:
            groups[tuple(row)].append(mask)

    out: dict[tuple[int, Multidegree], int] = {}
    for b, masks in groups.items():
        by_pos: dict[int, list[int]] = defaultdict(list)
        for mask in masks:
            by_pos[bin(mask).count("1") - 1].append(mask)
        ranks = {}
        for pos in by_pos:
            if pos == 0 or pos - 1 not in by_pos:
                ranks[pos] = 0
                continue
            rows = {s: r for r, s in enumerate(by_pos[pos - 1])}
            mat = [[0] * len(by_pos[pos]) for _ in rows]
            for col, mask in enumerate(by_pos[pos]):
                members = [v for v in range(m) if mask >> v & 1]
                for place, v in enumerate(members):
                    r = rows.get(mask & ~(1 << v))
                    if r is not None:
                        mat[r][col] = -1 if place % 2 else 1
            ranks[pos] = rank_exact(IntegerMatrix.from_rows(mat, len(by_pos[pos])))
        for pos, basis in by_pos.items():
            mult = len(basis) - ranks[pos] - ranks.get(pos + 1, 0)
            if mult:
                out[pos, b] = mult
    return MultigradedBetti(out)


def betti_taylor(I: MonomialIdeal, cap: int = TAYLOR_CAP) -> BettiTable:
    return taylor_multigraded(I, cap).graded()


def _comb(top: int, k: int) -> int:
    return math.comb(top, k) if top >= k >= 0 else 0


def degree_counts(I: MonomialIdeal, j_max: int, method: str = "auto") -> list[int]:
    """Number of monomials of degree ``j`` lying in ``I``, for ``j = 0..j_max``.

    ``"enumerate"`` walks every monomial of degree at most ``j_max``, fibred
    along the last variable; ``"inclusion_exclusion"`` sums over all nonempty
    generator subsets.
    """
    n = I.num_vars
    if method == "auto":
        method = "enumerate" if n <= 4 or len(I) > INCLUSION_EXCLUSION_CAP else "inclusion_exclusion"
    if method == "enumerate":
        return _counts_by_enumeration(I.exponents, j_max)
    if method == "inclusion_exclusion":
        return _counts_by_inclusion_exclusion(I.exponents, j_max)
    raise ValueError(f"unknown method {method!r}")


def _counts_by_enumeration(exps: np.ndarray, j_max: int) -> list[int]:
    m, n = exps.shape
    if n == 1:
        low = int(exps[:, 0].min())
        return [int(j >= low) for j in range(j_max + 1)]
    k = n - 1
    side = j_max + 1
    if side**k > 60_000_000:
        raise CapacityError(f"enumerating {side}^{k} fibres is beyond the configured limit")
    # dense staircase on [0..top_a] per axis; beyond top_a nothing changes
    tops = [min(j_max, int(exps[:, a].max())) for a in range(k)]
    h = np.full(tuple(t + 1 for t in tops), _INF, dtype=np.int64)
    ok = (exps[:, :k] <= np.array(tops)).all(axis=1)
    if ok.any():
        np.minimum.at(h, tuple(exps[ok, a] for a in range(k)), exps[ok, k])
    for a in range(k):
        h = np.minimum.accumulate(h, axis=a)
    axes = [np.minimum(np.arange(side), tops[a]) for a in range(k)]
    full = h[np.ix_(*axes)]
    total = sum(np.arange(side).reshape(tuple(side if b == a else 1 for b in range(k))) for a in range(k))
    smallest = full + total  # lowest degree reached on each fibre
    hist = np.bincount(smallest[smallest <= j_max].ravel(), minlength=side)
    return [int(x) for x in np.cumsum(hist)]


def _counts_by_inclusion_exclusion(exps: np.ndarray, j_max: int) -> list[int]:
    m, n = exps.shape
    if m > INCLUSION_EXCLUSION_CAP:
        raise CapacityError(f"inclusion-exclusion limited to {INCLUSION_EXCLUSION_CAP} generators")
    lcms = np.zeros((1 << m, n), dtype=np.int64)
    sizes = np.zeros(1 << m, dtype=np.int64)
    for k in range(m):
        lcms[1 << k: 2 << k] = np.maximum(lcms[: 1 << k], exps[k])
        sizes[1 << k: 2 << k] = sizes[: 1 << k] + 1
    degs = lcms[1:].sum(axis=1)
    signs = np.where(sizes[1:] % 2 == 1, 1, -1)
    weight = np.zeros(j_max + 1, dtype=np.int64)
    small = degs <= j_max
    np.add.at(weight, degs[small], signs[small])
    return [sum(int(weight[l]) * _comb(j - l + n - 1, n - 1) for l in range(j + 1)) for j in range(j_max + 1)]


def betti_degree_counts(B: BettiTable, num_vars: int, j_max: int) -> list[int]:
    """Alternating sum ``sum (-1)^i beta_{i,l} C(j-l+n-1, n-1)`` for ``j = 0..j_max``."""
    n = num_vars
    return [
        sum((-1) ** i * m * _comb(j - l + n - 1, n - 1) for (i, l), m in B.entries.items())
        for j in range(j_max + 1)
    ]


def hilbert_consistency(I: MonomialIdeal, B: BettiTable, j_max: int | None = None,
                        method: str = "auto") -> bool:
    """Check a Betti table against the Hilbert function of ``I`` in every degree up to ``j_max``."""
    floor = B.max_j + I.num_vars
    if j_max is None:
        j_max = floor
    if j_max < floor:
        raise ValueError(f"j_max must be at least the largest shift plus n ({floor})")
    return degree_counts(I, j_max, method) == betti_degree_counts(B, I.num_vars, j_max)


def generator_degree_counts(I: MonomialIdeal) -> dict[int, int]:
    counts: dict[int, int] = defaultdict(int)
    for t in I.degrees:
        counts[t] += 1
    return dict(counts)


__all__ = [
    "LcmLattice", "MultigradedBetti", "lcm_closure", "multigraded_betti", "betti_koszul",
    "taylor_multigraded", "betti_taylor", "degree_counts", "betti_degree_counts",
    "hilbert_consistency", "generator_degree_counts", "TAYLOR_CAP",
]
