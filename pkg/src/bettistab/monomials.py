"""Monomials and monomial ideals over a polynomial ring in finitely many variables.

Ideals are stored by their unique minimal generating set in canonical order
(ascending total degree, ties broken by lexicographic order on exponent
vectors), so two ideals are equal exactly when their generator tuples are.
The exponent matrix of an ideal is kept as a read-only ``numpy`` array because
every heavy computation downstream is vectorized over it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapacityError, ContextError, DomainError

MAX_EXPONENT = 2**32
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class RingContext:
    """Ordered variable names of ``k[x_1, ..., x_n]``; the field is fixed to characteristic 0."""

    variable_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.variable_names)
        object.__setattr__(self, "variable_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _IDENTIFIER.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> RingContext:
        """``x1, ..., xn``."""
        return cls(tuple(f"{prefix}{k}" for k in range(1, n + 1)))

    @property
    def num_vars(self) -> int:
        return len(self.variable_names)

    def index(self, name: str) -> int:
        return self.variable_names.index(name)

    def __str__(self) -> str:
        return ",".join(self.variable_names)


@dataclass(frozen=True)
class Monomial:
    ring: RingContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.ring.num_vars:
            raise ContextError(
                f"monomial has {len(exps)} exponents but the ring has {self.ring.num_vars} variables"
            )
        for e in exps:
            if e < 0:
                raise DomainError(f"negative exponent {e} in {exps}")
            if e > MAX_EXPONENT:
                raise DomainError(f"exponent {e} exceeds the supported bound 2^32")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def sort_key(self) -> tuple:
        return (self.degree, self.exponents)

    def divides(self, other: Monomial) -> bool:
        return divides(self, other)

    def lcm(self, other: Monomial) -> Monomial:
        return lcm_pair(self, other)

    def __mul__(self, other: Monomial) -> Monomial:
        _check_same_ring(self, other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        factors = []
        for name, e in zip(self.ring.variable_names, self.exponents):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


def _check_same_ring(a: Monomial, b: Monomial) -> None:
    if a.ring != b.ring:
        raise ContextError(f"monomials live in different rings: ({a.ring}) vs ({b.ring})")


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``, i.e. every exponent of ``a`` is at most that of ``b``."""
    _check_same_ring(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def lcm_pair(a: Monomial, b: Monomial) -> Monomial:
    _check_same_ring(a, b)
    return Monomial(a.ring, tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def canonical_order(exps: np.ndarray) -> np.ndarray:
    """Row permutation sorting by total degree, then lexicographically."""
    n = exps.shape[1]
    keys = tuple(exps[:, k] for k in reversed(range(n))) + (exps.sum(axis=1),)
    return np.lexsort(keys)


def minimal_rows(exps: np.ndarray) -> np.ndarray:
    """Minimal generators of the ideal spanned by the rows of ``exps``, canonically ordered.

    A row of degree ``t`` can only be divided by a distinct row of strictly
    smaller degree, so each degree layer is checked against the minimal rows
    already kept from lower layers.
    """
    exps = np.asarray(exps, dtype=np.int64)
    if exps.ndim != 2 or exps.shape[0] == 0:
        raise ValueError("need a nonempty 2-d exponent array")
    exps = np.unique(exps, axis=0)
    exps = exps[canonical_order(exps)]
    deg = exps.sum(axis=1)
    if deg[0] == deg[-1]:
        return exps

    n = exps.shape[1]
    keep = np.ones(len(exps), dtype=bool)
    starts = np.flatnonzero(np.r_[True, deg[1:] != deg[:-1]])
    ends = np.r_[starts[1:], len(exps)]
    for start, end in zip(starts[1:], ends[1:]):
        lower = exps[:start][keep[:start]]
        step = max(1, 4_000_000 // (len(lower) * n))
        for lo in range(start, end, step):
            hi = min(end, lo + step)
            block = exps[lo:hi]
            divisible = (lower[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
            keep[lo:hi] = ~divisible
    return exps[keep]


def minimalize(gens: Sequence[Monomial]) -> list[Monomial]:
    """Minimal generating set of the ideal generated by ``gens``, deduplicated and canonically ordered."""
    gens = list(gens)
    if not gens:
        raise ValueError("minimalize needs at least one monomial")
    ring = gens[0].ring
    for g in gens[1:]:
        _check_same_ring(gens[0], g)
    rows = minimal_rows(np.array([g.exponents for g in gens], dtype=np.int64))
    return [Monomial(ring, tuple(row)) for row in rows.tolist()]


class MonomialIdeal:
    """A proper nonzero monomial ideal, held by its minimal generators.

    >>> R = RingContext(("x", "y"))
    >>> I = MonomialIdeal.from_exponents(R, [(2, 0), (3, 0), (1, 1)])
    >>> [str(g) for g in I.generators]
    ['x*y', 'x^2']
    """

    def __init__(self, ring: RingContext, generators: Iterable[Monomial]):
        gens = list(generators)
        for g in gens:
            if g.ring != ring:
                raise ContextError(f"generator {g} does not belong to the ring ({ring})")
        rows = [g.exponents for g in gens]
        self._init_rows(ring, np.array(rows, dtype=np.int64).reshape(len(rows), ring.num_vars))

    @classmethod
    def from_exponents(cls, ring: RingContext, exponents) -> MonomialIdeal:
        self = cls.__new__(cls)
        arr = np.asarray(exponents, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, ring.num_vars)
        self._init_rows(ring, arr)
        return self

    def _init_rows(self, ring: RingContext, arr: np.ndarray) -> None:
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise ValueError("the zero ideal (no generators) is not supported")
        if arr.shape[1] != ring.num_vars:
            raise ContextError(f"exponent rows have length {arr.shape[1]}, ring has {ring.num_vars} variables")
        if (arr < 0).any():
            raise DomainError("negative exponent in generator list")
        if (arr > MAX_EXPONENT).any():
            raise DomainError("exponent exceeds the supported bound 2^32")
        if (arr.sum(axis=1) == 0).any():
            raise DomainError("the unit ideal is not supported")
        rows = minimal_rows(arr)
        rows.setflags(write=False)
        self.ring = ring
        self._exps = rows

    @property
    def exponents(self) -> np.ndarray:
        """Read-only ``(num_gens, num_vars)`` exponent matrix in canonical order."""
        return self._exps

    @cached_property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(self.ring, tuple(row)) for row in self._exps.tolist())

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(t) for t in self._exps.sum(axis=1))

    @property
    def num_vars(self) -> int:
        return self.ring.num_vars

    def __len__(self) -> int:
        return self._exps.shape[0]

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        if m.ring != self.ring:
            raise ContextError("membership test across different rings")
        return bool((self._exps <= np.array(m.exponents)).all(axis=1).any())

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and np.array_equal(self._exps, other._exps)

    def __hash__(self) -> int:
        return hash((self.ring, self._exps.tobytes()))

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_product(self, other)

    def __pow__(self, d: int) -> MonomialIdeal:
        return power(self, d)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal[{self.ring}]{self}"


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.ring != J.ring:
        raise ContextError("product of ideals in different rings")
    a, b = I.exponents, J.exponents
    if int(a.max(initial=0)) + int(b.max(initial=0)) > MAX_EXPONENT:
        raise CapacityError("product exponents would exceed the supported bound 2^32")
    sums = (a[:, None, :] + b[None, :, :]).reshape(-1, I.num_vars)
    return MonomialIdeal.from_exponents(I.ring, sums)


def power(I: MonomialIdeal, d: int) -> MonomialIdeal:
    """``I^d``, built as ``I^(k-1) * I`` and minimalized at every step."""
    if int(d) != d or d < 1:
        raise DomainError(f"power must be a positive integer, got {d!r}")
    result = I
    for _ in range(int(d) - 1):
        result = ideal_product(result, I)
    return result


def powers(I: MonomialIdeal, max_power: int) -> Iterator[tuple[int, MonomialIdeal]]:
    """Yield ``(d, I^d)`` for ``d = 1..max_power`` incrementally."""
    current = I
    for d in range(1, max_power + 1):
        if d > 1:
            current = ideal_product(current, I)
        yield d, current


def is_equigenerated(I: MonomialIdeal) -> int | None:
    """The common generator degree, or ``None`` when the degrees differ."""
    degs = I.degrees
    return degs[0] if degs[0] == degs[-1] else None


def min_gen_degree(I: MonomialIdeal) -> int:
    return I.degrees[0]
