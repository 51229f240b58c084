"""Closed-form census of the theta graph over P^1(F_{3^n}).

Only integer arithmetic on 3^n - 1 is used here; no field element is ever
iterated. For every odd divisor d > 1 of 3^n - 1, the phi(d) points x whose
psi(x) has multiplicative order d lie on cycles of length ord_d(-2). The
point infinity is fixed and {1, -1} is a 2-cycle. Every other periodic point
roots a binary tree of depth e = v2(3^n - 1).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .numtheory import euler_phi, factorize, odd_divisors_gt1, ord_mod, two_adic_valuation

MAX_PREDICT_N = 40

SPECIAL_CYCLES = {1: 1, 2: 1}


@dataclass
class GraphPrediction:
    n: int
    cycle_census: dict  # length -> count, special cycles included
    component_count: int
    tree_depth: int
    level_populations: list
    periodic_point_count: int
    special_cycles: dict = field(default_factory=lambda: dict(SPECIAL_CYCLES))
    divisor_rows: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "cycle_census": [[k, v] for k, v in sorted(self.cycle_census.items())],
            "component_count": self.component_count,
            "tree_depth": self.tree_depth,
            "level_populations": list(self.level_populations),
            "periodic_point_count": self.periodic_point_count,
            "divisor_table": [list(r) for r in self.divisor_rows],
        }


def _check_budget(n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_PREDICT_N:
        raise BudgetExceeded(f"predict is limited to n <= {MAX_PREDICT_N}")


def divisor_table(n: int) -> list[tuple[int, int, int]]:
    """Rows ``(d, phi(d), ord_d(-2))`` for each odd divisor d > 1 of 3^n - 1."""
    _check_budget(n)
    return [(d, euler_phi(d), ord_mod(-2, d)) for d in odd_divisors_gt1(factorize(3 ** n - 1))]


def predict(n: int) -> GraphPrediction:
    rows = divisor_table(n)
    phi_by_length: dict[int, int] = defaultdict(int)
    for _, phi, length in rows:
        phi_by_length[length] += phi
    census = dict(SPECIAL_CYCLES)
    for length, total in sorted(phi_by_length.items()):
        count, rem = divmod(total, length)
        if rem or count <= 0:
            raise AssertionError(f"n={n}: {total} points do not split into cycles of length {length}")
        if length in census:
            raise AssertionError(f"n={n}: divisor cycle length {length} collides with a special cycle")
        census[length] = count
    census = dict(sorted(census.items()))
    e = two_adic_valuation(3 ** n - 1)
    return GraphPrediction(
        n=n,
        cycle_census=census,
        component_count=sum(census.values()),
        tree_depth=e,
        level_populations=[2 ** (k - 1) for k in range(1, e + 1)],
        periodic_point_count=sum(k * v for k, v in census.items()),
        divisor_rows=rows,
    )
