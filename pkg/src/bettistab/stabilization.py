"""Stabilization sequences of Betti table shapes across powers of an ideal.

``StabSeq(I)`` collects the powers ``d`` whose Betti table shape differs from
that of ``I^(d-1)``; 1 always belongs. Nothing certifies that the shape has
settled for good, so the stabilization index is only reported as an estimate,
and only after ``lookahead`` consecutive unchanged powers.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .betti import betti_koszul
from .errors import DomainError
from .monomials import MonomialIdeal, RingContext, is_equigenerated, min_gen_degree, powers
from .table import BettiTable, ShapeKey, shape_key

DEFAULT_LOOKAHEAD = 7


@dataclass
class StabReport:
    ideal: MonomialIdeal
    shift_r: int
    max_power: int
    stab_seq: tuple[int, ...]
    estimated_stab: int | None
    lookahead_used: int
    stable_run_length: int
    tables: dict[int, BettiTable] = field(default_factory=dict)
    shapes: dict[int, ShapeKey] = field(default_factory=dict, repr=False)
    equigenerated: bool = True
    # (d, e): the shape new at d already occurred at some e < d - 1
    recurrences: tuple[tuple[int, int], ...] = ()

    def sequence_text(self) -> str:
        return format_sequence(self.stab_seq)


def format_sequence(seq: Iterable[int]) -> str:
    return "{" + ", ".join(str(d) for d in seq) + "}"


def _graded_entries(exps: np.ndarray, names: tuple[str, ...]) -> dict:
    I = MonomialIdeal.from_exponents(RingContext(names), exps)
    return dict(betti_koszul(I).entries)


def power_tables(I: MonomialIdeal, max_power: int, workers: int = 1) -> list[BettiTable]:
    """Betti tables of ``I^1 .. I^max_power``; powers are built incrementally."""
    ideals = [P for _, P in powers(I, max_power)]
    if workers <= 1:
        return [betti_koszul(P) for P in ideals]
    names = I.ring.variable_names
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(_graded_entries, [P.exponents for P in ideals], [names] * len(ideals))
        return [BettiTable(e) for e in results]


def stab_seq(I: MonomialIdeal, max_power: int, lookahead: int = DEFAULT_LOOKAHEAD,
             keep_tables: bool = False, workers: int = 1) -> StabReport:
    """Stabilization sequence of ``I`` over the powers ``1..max_power``.

    The shift ``r`` is the least generator degree of ``I``. With
    ``keep_tables`` the report retains the table of every power in the
    sequence.
    """
    if max_power < 1:
        raise ValueError("max_power must be at least 1")
    if lookahead < 0:
        raise ValueError("lookahead must be nonnegative")
    r = min_gen_degree(I)
    tables = power_tables(I, max_power, workers)
    keys = {d: shape_key(B, r, d) for d, B in enumerate(tables, start=1)}

    seq = [1] + [d for d in range(2, max_power + 1) if keys[d] != keys[d - 1]]
    recurrences = []
    for d in seq[1:]:
        earlier = next((e for e in range(1, d - 1) if keys[e] == keys[d]), None)
        if earlier is not None:
            recurrences.append((d, earlier))

    last = seq[-1]
    run = max_power - last
    return StabReport(
        ideal=I,
        shift_r=r,
        max_power=max_power,
        stab_seq=tuple(seq),
        estimated_stab=last if run >= lookahead else None,
        lookahead_used=lookahead,
        stable_run_length=run,
        tables={d: tables[d - 1] for d in seq} if keep_tables else {},
        shapes=keys,
        equigenerated=is_equigenerated(I) is not None,
        recurrences=tuple(recurrences),
    )


@dataclass(frozen=True)
class LinearExponentFamily:
    """Monomial ideals ``I_n`` whose exponents are ``slope * n + offset`` with integer coefficients.

    ``generators[g][k]`` is the ``(slope, offset)`` pair of variable ``k`` in
    generator ``g``; slopes are nonnegative.
    """

    ring: RingContext
    generators: tuple[tuple[tuple[int, int], ...], ...]
    n_min: int = 1

    def __post_init__(self):
        gens = tuple(tuple((int(a), int(b)) for a, b in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a family needs at least one generator")
        for g in gens:
            if len(g) != self.ring.num_vars:
                raise ValueError(f"generator has {len(g)} exponent functions, ring has {self.ring.num_vars}")
            if any(a < 0 for a, _ in g):
                raise ValueError("exponent slopes must be nonnegative")

    @classmethod
    def constant(cls, I: MonomialIdeal) -> LinearExponentFamily:
        return cls(I.ring, tuple(tuple((0, e) for e in row) for row in I.exponents.tolist()))

    def evaluate(self, n: int) -> list[tuple[int, ...]]:
        return [tuple(a * n + b for a, b in g) for g in self.generators]

    def __str__(self) -> str:
        return ", ".join(_family_generator_text(self.ring, g) for g in self.generators)


def _linear_text(a: int, b: int) -> str:
    if a == 0:
        return str(b)
    head = "n" if a == 1 else f"{a}n"
    if b == 0:
        return head
    return f"{head}{'+' if b > 0 else '-'}{abs(b)}"


def _family_generator_text(ring: RingContext, g: Sequence[tuple[int, int]]) -> str:
    factors = []
    for name, (a, b) in zip(ring.variable_names, g):
        if a == 0:
            if b == 1:
                factors.append(name)
            elif b != 0:
                factors.append(f"{name}^{b}")
        else:
            factors.append(f"{name}^({_linear_text(a, b)})")
    return "*".join(factors) if factors else "1"


def instantiate(F: LinearExponentFamily, n: int) -> MonomialIdeal:
    if n < F.n_min:
        raise DomainError(f"n = {n} is below the family's n_min = {F.n_min}")
    rows = F.evaluate(n)
    for g, row in enumerate(rows):
        for k, e in enumerate(row):
            if e < 0:
                raise DomainError(
                    f"generator {g + 1} ({_family_generator_text(F.ring, F.generators[g])}) has exponent "
                    f"{e} in variable {F.ring.variable_names[k]} at n = {n}"
                )
    return MonomialIdeal.from_exponents(F.ring, rows)


@dataclass(frozen=True)
class LinearFit:
    """An exact line ``slope * n + intercept`` through every observed point."""

    slope: Fraction
    intercept: Fraction
    n_values: tuple[int, ...]

    def __call__(self, n: int) -> Fraction:
        return self.slope * n + self.intercept

    def formula(self, symbol: str = "n") -> str:
        def num(q: Fraction) -> str:
            return str(q.numerator) if q.denominator == 1 else f"({q})"

        if self.slope == 0:
            return num(self.intercept)
        head = symbol if self.slope == 1 else f"{num(self.slope)}{symbol}"
        if self.intercept == 0:
            return head
        sign = "+" if self.intercept > 0 else "-"
        return f"{head} {sign} {num(abs(self.intercept))}"

    def range_text(self) -> str:
        ns = self.n_values
        if list(ns) == list(range(ns[0], ns[-1] + 1)):
            return f"n={ns[0]}..{ns[-1]}"
        return "n=" + ",".join(str(n) for n in ns)


def exact_linear_fit(points: Sequence[tuple[int, int]]) -> LinearFit | None:
    """Line through the first two points, kept only if every point lies on it."""
    points = sorted(points)
    if len(points) < 2:
        return None
    (x0, y0), (x1, y1) = points[0], points[1]
    slope = Fraction(y1 - y0, x1 - x0)
    intercept = y0 - slope * x0
    if any(slope * x + intercept != y for x, y in points):
        return None
    return LinearFit(slope, intercept, tuple(x for x, _ in points))


@dataclass
class FamilySweepResult:
    family: LinearExponentFamily
    reports: dict[int, StabReport]
    stab_fit: LinearFit | None
    cardinality_fit: LinearFit | None


def family_sweep(F: LinearExponentFamily, n_range: tuple[int, int] | Sequence[int], max_power: int,
                 lookahead: int = DEFAULT_LOOKAHEAD, workers: int = 1,
                 fit_range: tuple[int, int] | None = None) -> FamilySweepResult:
    """Stabilization reports for every ``n`` in range plus exact linear fits.

    The fits use the members of ``fit_range`` (default: the whole range) that
    have an estimated stabilization index.
    """
    if isinstance(n_range, tuple) and len(n_range) == 2:
        ns = list(range(n_range[0], n_range[1] + 1))
    else:
        ns = sorted(set(n_range))
    if not ns:
        raise ValueError("empty n range")
    reports = {n: stab_seq(instantiate(F, n), max_power, lookahead, workers=workers) for n in ns}
    lo, hi = fit_range if fit_range is not None else (ns[0], ns[-1])
    usable = [n for n in ns if lo <= n <= hi and reports[n].estimated_stab is not None]
    stab_fit = exact_linear_fit([(n, reports[n].estimated_stab) for n in usable])
    card_fit = exact_linear_fit([(n, len(reports[n].stab_seq)) for n in usable])
    return FamilySweepResult(F, reports, stab_fit, card_fit)


def stab_seq_closed_form(n: int) -> tuple[int, ...]:
    """``{1,2,3,5,6}`` together with ``11 + 6m`` for ``0 <= m <= 2n - 4``.

    This matches the observed sequences of the family
    ``(a^(2n) b^(2n) c^(2n), b^(4n) c^(2n), a^(3n) c^(3n), a^(6n-1) b)`` for
    n >= 2: its largest element is ``12n - 13`` and it has ``2n + 2`` elements.
    """
    if n < 2:
        raise ValueError("the closed form applies for n >= 2")
    return (1, 2, 3, 5, 6) + tuple(11 + 6 * m for m in range(2 * n - 3))


def stab_seq_closed_form_check(n: int, observed: Iterable[int]) -> bool:
    return tuple(sorted(set(observed))) == stab_seq_closed_form(n)


I_N_FAMILY_TEXT = "a^(2n)*b^(2n)*c^(2n), b^(4n)*c^(2n), a^(3n)*c^(3n), a^(6n-1)*b"


def i_n_family() -> LinearExponentFamily:
    """The family ``I_n = (a^(2n) b^(2n) c^(2n), b^(4n) c^(2n), a^(3n) c^(3n), a^(6n-1) b)``."""
    ring = RingContext(("a", "b", "c"))
    return LinearExponentFamily(ring, (
        ((2, 0), (2, 0), (2, 0)),
        ((0, 0), (4, 0), (2, 0)),
        ((3, 0), (0, 0), (3, 0)),
        ((6, -1), (0, 1), (0, 0)),
    ))
