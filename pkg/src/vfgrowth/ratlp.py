"""Exact linear programming over the rationals.

Solves max c.x subject to A x = b, x >= 0 by two-phase simplex with
Bland's anti-cycling rule.  Everything is a Fraction; there is no floating
point and no tolerance.  Fraction keeps values gcd-reduced with positive
denominators, so coefficient growth stays under control without extra
normalization passes.

enumerate_vertices provides an independent check: it visits every basic
feasible solution by exhaustive basis enumeration, which is affordable at
the variable counts this package produces (capped at 24 by default).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import CapExceeded, InputError

VERTEX_ENUM_CAP = 24
_ITERATION_CAP = 100000


class RationalLP:
    """maximize objective . x  subject to  rows . x = rhs,  x >= 0."""

    def __init__(self):
        self.var_names = []
        self.objective = []
        self.rows = []
        self.rhs = []

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    @property
    def num_constraints(self) -> int:
        return len(self.rows)

    def add_var(self, name: str, objective=0) -> int:
        if name in self.var_names:
            raise InputError(f"duplicate variable {name!r}")
        self.var_names.append(name)
        self.objective.append(Fraction(objective))
        for row in self.rows:
            row.append(Fraction(0))
        return len(self.var_names) - 1

    def add_to_objective(self, index: int, coeff):
        self.objective[index] += Fraction(coeff)

    def add_constraint(self, coeffs, rhs):
        """coeffs: mapping from variable index to coefficient."""
        row = [Fraction(0)] * len(self.var_names)
        for idx, c in coeffs.items():
            row[idx] += Fraction(c)
        self.rows.append(row)
        self.rhs.append(Fraction(rhs))


@dataclass(frozen=True)
class LPSolution:
    status: str            # optimal | infeasible | unbounded
    value: Fraction
    point: tuple
    basis: tuple

    def __str__(self):
        if self.status != "optimal":
            return self.status
        return f"optimal value {self.value}"


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [x / piv for x in tableau[row]]
    for i, r in enumerate(tableau):
        if i != row and r[col]:
            f = r[col]
            tableau[i] = [a - f * b for a, b in zip(r, tableau[row])]
    basis[row] = col


def _simplex(tableau, basis, cost, ncols):
    """Run simplex to optimality on a tableau in canonical form.

    Bland's rule on both the entering and the leaving choice: the growth
    LPs are heavily degenerate, so anti-cycling is not optional.
    """
    for _ in range(_ITERATION_CAP):
        y = [cost[b] for b in basis]
        enter = -1
        for j in range(ncols):
            reduced = cost[j] - sum(y[i] * tableau[i][j]
                                    for i in range(len(tableau)) if y[i])
            if reduced > 0:
                enter = j
                break
        if enter < 0:
            return "optimal"
        leave = -1
        best = None
        for i, r in enumerate(tableau):
            if r[enter] > 0:
                ratio = r[-1] / r[enter]
                if best is None or ratio < best or \
                        (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave < 0:
            return "unbounded"
        _pivot(tableau, basis, leave, enter)
    raise AssertionError("simplex failed to terminate")  # unreachable with Bland


def solve_max(lp: RationalLP) -> LPSolution:
    m, n = lp.num_constraints, lp.num_vars
    tableau = []
    for row, b in zip(lp.rows, lp.rhs):
        full = [Fraction(x) for x in row] + [Fraction(b)]
        if full[-1] < 0:
            full = [-x for x in full]
        tableau.append(full)

    # Phase 1: one artificial variable per row, drive their sum to zero.
    for i in range(m):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        tableau[i] = tableau[i][:-1] + art + [tableau[i][-1]]
    basis = list(range(n, n + m))
    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    status = _simplex(tableau, basis, phase1, n + m)
    assert status == "optimal"  # phase 1 objective is bounded above by zero
    residue = sum(tableau[i][-1] for i in range(len(basis)) if basis[i] >= n)
    if residue != 0:
        return LPSolution("infeasible", None, None, None)

    # Pivot leftover artificials out of the basis; a row where no original
    # column can serve as pivot is redundant and gets dropped.
    i = 0
    while i < len(tableau):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is None:
                del tableau[i]
                del basis[i]
                continue
            _pivot(tableau, basis, i, col)
        i += 1
    tableau = [row[:n] + [row[-1]] for row in tableau]

    cost = [Fraction(c) for c in lp.objective]
    status = _simplex(tableau, basis, cost, n)
    if status == "unbounded":
        return LPSolution("unbounded", None, None, None)
    point = [Fraction(0)] * n
    for i, b in enumerate(basis):
        point[b] = tableau[i][-1]
    value = sum(c * x for c, x in zip(cost, point))
    return LPSolution("optimal", value, tuple(point), tuple(sorted(basis)))


def _rref(matrix, ncols):
    """Reduced row echelon form over the first ncols columns; drops zero
    rows, returns None if a row reads 0 = nonzero."""
    rows = [list(r) for r in matrix]
    lead = 0
    out = []
    for col in range(ncols):
        piv = next((i for i in range(lead, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        r = rows[lead]
        rows[lead] = [x / r[col] for x in r]
        for i in range(len(rows)):
            if i != lead and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[lead])]
        lead += 1
    for r in rows[lead:]:
        if r[-1] != 0:
            return None
    return rows[:lead]


def _solve_square(reduced, cols):
    """Solve the subsystem restricted to the given columns; None if singular."""
    k = len(reduced)
    mat = [[reduced[i][c] for c in cols] + [reduced[i][-1]] for i in range(k)]
    for col in range(k):
        piv = next((i for i in range(col, k) if mat[i][col]), None)
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        r = mat[col]
        mat[col] = [x / r[col] for x in r]
        for i in range(k):
            if i != col and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return [mat[i][-1] for i in range(k)]


def enumerate_vertices(lp: RationalLP, cap: int = VERTEX_ENUM_CAP):
    """All basic feasible solutions as (point, value) pairs, deduplicated.

    Exhaustive over column subsets of size rank(A); quadratic-ish in the
    binomial coefficient, hence the variable cap.
    """
    n = lp.num_vars
    if n > cap:
        raise CapExceeded(f"vertex enumeration capped at {cap} variables, got {n}")
    matrix = [[Fraction(x) for x in row] + [Fraction(b)]
              for row, b in zip(lp.rows, lp.rhs)]
    reduced = _rref(matrix, n)
    if reduced is None:
        return []
    rank = len(reduced)
    seen = {}
    for cols in combinations(range(n), rank):
        sol = _solve_square(reduced, cols)
        if sol is None or any(x < 0 for x in sol):
            continue
        point = [Fraction(0)] * n
        for c, x in zip(cols, sol):
            point[c] = x
        point = tuple(point)
        if point not in seen:
            seen[point] = sum(c * x for c, x in zip(lp.objective, point))
    return sorted(seen.items())


def dump_tsv(lp: RationalLP, solution: LPSolution = None) -> str:
    """Tab-separated dump of the program (and solution) for debugging."""
    lines = ["\t".join(["row"] + list(lp.var_names) + ["rhs"])]
    lines.append("\t".join(["objective"] + [str(c) for c in lp.objective] + [""]))
    for i, (row, b) in enumerate(zip(lp.rows, lp.rhs)):
        lines.append("\t".join([f"eq{i}"] + [str(x) for x in row] + [str(b)]))
    if solution is not None:
        lines.append(f"status\t{solution.status}")
        if solution.status == "optimal":
            lines.append("\t".join(["point"] + [str(x) for x in solution.point]
                                   + [str(solution.value)]))
    return "\n".join(lines) + "\n"
