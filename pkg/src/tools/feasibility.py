"""Exact linear feasibility over the rationals.

A phase-one simplex on a dense ``Fraction`` tableau with Bland's rule, so it
terminates without tolerances: every answer is exact.
"""

import logging
from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)


class Constraint(BaseModel):
    """``sum(coefficients[x] * x) <sense> rhs`` over non-negative variables."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    coefficients: dict[str, Fraction] = Field(default_factory=dict)
    sense: Literal["==", ">="] = "=="
    rhs: Fraction = Fraction(0)
    label: str = ""


class RationalSimplex:
    """Phase-one simplex deciding ``{x >= 0 : constraints}`` non-empty."""

    def __init__(self, variables: list[str], constraints: list[Constraint]):
        self.variables = list(variables)
        self.columns = list(variables)
        rows: list[tuple[dict[str, Fraction], Fraction]] = []
        for position, constraint in enumerate(constraints):
            unknown = set(constraint.coefficients) - set(variables)
            if unknown:
                raise KeyError(f"constraint {constraint.label or position} uses unknown variables {sorted(unknown)}")
            coefficients = {k: Fraction(v) for k, v in constraint.coefficients.items() if v != 0}
            if constraint.sense == ">=":
                surplus = f"_surplus{position}"
                self.columns.append(surplus)
                coefficients[surplus] = Fraction(-1)
            rhs = Fraction(constraint.rhs)
            if rhs < 0:
                coefficients = {k: -v for k, v in coefficients.items()}
                rhs = -rhs
            rows.append((coefficients, rhs))

        self.m = len(rows)
        self.artificials = [f"_artificial{i}" for i in range(self.m)]
        self.columns.extend(self.artificials)
        self.n = len(self.columns)
        index = {name: j for j, name in enumerate(self.columns)}

        self.A = [[Fraction(0)] * self.n for _ in range(self.m)]
        self.b = [rhs for _, rhs in rows]
        for i, (coefficients, _) in enumerate(rows):
            for name, value in coefficients.items():
                self.A[i][index[name]] = value
            self.A[i][index[self.artificials[i]]] = Fraction(1)
        self.basis = [index[a] for a in self.artificials]

        # reduced costs of "minimise the sum of artificials"
        artificial_columns = set(self.basis)
        self.c = [
            Fraction(0) if j in artificial_columns else -sum((self.A[i][j] for i in range(self.m)), Fraction(0))
            for j in range(self.n)
        ]
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        piv = self.A[i][j]
        self.A[i] = [value / piv for value in self.A[i]]
        self.b[i] /= piv
        for k in range(self.m):
            if k != i and self.A[k][j] != 0:
                f = self.A[k][j]
                self.A[k] = [a - f * p for a, p in zip(self.A[k], self.A[i])]
                self.b[k] -= f * self.b[i]
        f = self.c[j]
        if f != 0:
            self.c = [c - f * p for c, p in zip(self.c, self.A[i])]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self) -> str:
        entering = [j for j in range(self.n) if self.c[j] < 0]
        if not entering:
            return "optimal"
        j = min(entering)
        candidates = [(self.b[i] / self.A[i][j], self.basis[i], i) for i in range(self.m) if self.A[i][j] > 0]
        if not candidates:
            # cannot happen in phase one: the objective is bounded below by zero
            return "unbounded"
        _, _, i = min(candidates)
        self.pivot(i, j)
        return "go_on"

    def solve(self) -> Optional[dict[str, Fraction]]:
        """A feasible point over ``variables``, or None when the system is infeasible."""
        while self.bland_step() == "go_on":
            pass
        basic_value = {column: self.b[i] for i, column in enumerate(self.basis)}
        infeasibility = sum(
            (basic_value.get(self.columns.index(a), Fraction(0)) for a in self.artificials), Fraction(0)
        )
        logger.debug("phase one finished after %d pivots, residual %s", self.pivots, infeasibility)
        if infeasibility != 0:
            return None
        return {name: basic_value.get(j, Fraction(0)) for j, name in enumerate(self.columns) if name in self.variables}


def find_feasible_point(variables: list[str], constraints: list[Constraint]) -> Optional[dict[str, Fraction]]:
    """Exact non-negative solution of ``constraints`` or None."""
    if not constraints:
        return {name: Fraction(0) for name in variables}
    return RationalSimplex(variables, constraints).solve()


def residuals(point: dict[str, Fraction], constraints: list[Constraint]) -> list[str]:
    """Labels of the constraints (or sign conditions) ``point`` violates; exact."""
    violated = [f"{name} < 0" for name, value in sorted(point.items()) if value < 0]
    for position, constraint in enumerate(constraints):
        lhs = sum((coefficient * point.get(name, Fraction(0)) for name, coefficient in constraint.coefficients.items()), Fraction(0))
        ok = lhs == constraint.rhs if constraint.sense == "==" else lhs >= constraint.rhs
        if not ok:
            violated.append(constraint.label or f"constraint {position}")
    return violated
