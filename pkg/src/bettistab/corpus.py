"""Seeded random ideals and the three-way backend check used by ``bettistab check``."""
from __future__ import annotations

import random
from typing import Iterator

from .betti import (TAYLOR_CAP, betti_koszul, generator_degree_counts, hilbert_consistency,
                    lcm_closure, multigraded_betti, taylor_multigraded)
from .monomials import MonomialIdeal, RingContext


def random_ideal(rng: random.Random, max_vars: int = 4, max_gens: int = 8, max_exp: int = 6) -> MonomialIdeal:
    n = rng.randint(1, max_vars)
    m = rng.randint(1, max_gens)
    rows = []
    while len(rows) < m:
        row = [rng.randint(0, max_exp) for _ in range(n)]
        if any(row):
            rows.append(row)
    return MonomialIdeal.from_exponents(RingContext.standard(n), rows)


def random_corpus(count: int, seed: int, max_vars: int = 4, max_gens: int = 8,
                  max_exp: int = 6) -> Iterator[MonomialIdeal]:
    rng = random.Random(seed)
    for _ in range(count):
        yield random_ideal(rng, max_vars, max_gens, max_exp)


def check_ideal(I: MonomialIdeal, taylor_cap: int = TAYLOR_CAP) -> list[str]:
    """Disagreements between the Koszul, Taylor and Hilbert-function views of ``I``; empty when consistent."""
    problems = []
    koszul = multigraded_betti(I)
    table = koszul.graded()
    taylor = taylor_multigraded(I, taylor_cap)
    if dict(koszul.entries) != dict(taylor.entries):
        problems.append(f"koszul {dict(koszul.graded().entries)} != taylor {dict(taylor.graded().entries)}")
    if not hilbert_consistency(I, table):
        problems.append("Hilbert function disagrees with the Betti table")
    if {j: m for (i, j), m in table.entries.items() if i == 0} != generator_degree_counts(I):
        problems.append("beta_0 does not count the minimal generators")
    if table.max_i >= I.num_vars:
        problems.append(f"projective dimension {table.max_i} exceeds n - 1 = {I.num_vars - 1}")
    lattice = lcm_closure(I)
    if not koszul.support() <= lattice.elements:
        problems.append("multigraded support leaves the lcm lattice")
    if betti_koszul(I, method="lattice") != table:
        problems.append("lattice route disagrees with the staircase route")
    return problems
