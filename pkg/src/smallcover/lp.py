"""Exact rational linear programming for max-t feasibility tests.

Constraints are affine forms C(x) = sum(coeff * var) + bias with relation
'eq' (C = 0) or 'ge' (C >= 0).  The solver maximizes the designated variable
't' by exact two-phase simplex with Bland's rule; a basic-solution
enumeration mode exists for cross-checking, and rebase_to_basic implements
the tight-set descent onto a vertex without decreasing t.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class LPError(ValueError):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass(frozen=True)
class LinearConstraint:
    coefficients: tuple[tuple[str, Fraction], ...]  # sorted by variable
    bias: Fraction
    relation: str  # 'eq' | 'ge'

    def evaluate(self, assignment: dict[str, Fraction]) -> Fraction:
        return sum((c * assignment[v] for v, c in self.coefficients), self.bias)

    def satisfied(self, assignment: dict[str, Fraction]) -> bool:
        val = self.evaluate(assignment)
        return val == 0 if self.relation == "eq" else val >= 0

    def coeff_map(self) -> dict[str, Fraction]:
        return dict(self.coefficients)


def constraint(coeffs: dict[str, Fraction], bias, relation: str) -> LinearConstraint:
    items = tuple(sorted((v, Fraction(c)) for v, c in coeffs.items() if c != 0))
    return LinearConstraint(items, Fraction(bias), relation)


@dataclass(frozen=True)
class LPInstance:
    """Maximize t subject to the constraints; t is capped by t <= 1."""

    variables: tuple[str, ...]
    constraints: tuple[LinearConstraint, ...]

    def with_cap(self) -> "LPInstance":
        cap = constraint({"t": Fraction(-1)}, 1, "ge")  # 1 - t >= 0
        if cap in self.constraints:
            return self
        return LPInstance(self.variables, self.constraints + (cap,))

    def dump(self) -> str:
        lines = ["vars: " + " ".join(self.variables)]
        for c in self.constraints:
            terms = " + ".join("%s*%s" % (coef, v) for v, coef in c.coefficients)
            rel = "=" if c.relation == "eq" else ">="
            lines.append("%s + %s %s 0" % (terms if terms else "0", c.bias, rel))
        return "\n".join(lines) + "\n"


def make_lp(variables, constraints) -> LPInstance:
    variables = tuple(variables)
    if "t" not in variables:
        variables = variables + ("t",)
    return LPInstance(variables, tuple(constraints))


def _pivot(tab, basis, row, col):
    piv = tab[row][col]
    inv = ONE / piv
    tab[row] = [a * inv for a in tab[row]]
    for r in range(len(tab)):
        if r != row and tab[r][col] != 0:
            f = tab[r][col]
            tr, pr = tab[r], tab[row]
            tab[r] = [a - f * b for a, b in zip(tr, pr)]
    basis[row] = col


def _simplex_phase(tab, basis, cost, ncols):
    """Maximize cost over the tableau in place; returns False on unbounded."""
    m = len(tab)
    # reduced cost row: z_j - c_j style, maintained from scratch each pivot is
    # wasteful; keep an explicit objective row instead
    obj = list(cost) + [ZERO]
    for r in range(m):
        b = basis[r]
        if obj[b] != 0:
            f = obj[b]
            obj = [a - f * c for a, c in zip(obj, tab[r])]
    while True:
        col = next((j for j in range(ncols) if obj[j] > 0), None)
        if col is None:
            return True, obj
        best_row = None
        best_ratio = None
        for r in range(m):
            a = tab[r][col]
            if a > 0:
                ratio = tab[r][-1] / a
                if best_ratio is None or ratio < best_ratio or \
                        (ratio == best_ratio and basis[r] < basis[best_row]):
                    best_row, best_ratio = r, ratio
        if best_row is None:
            return False, obj
        _pivot(tab, basis, best_row, col)
        f = obj[col]
        obj = [a - f * c for a, c in zip(obj, tab[best_row])]


def simplex_max(A: list[list[Fraction]], b: list[Fraction], c: list[Fraction]):
    """max c.x s.t. A x = b, x >= 0 (exact).  Returns (status, value, x)."""
    m, n = len(A), len(c)
    tab = []
    for i in range(m):
        row = list(A[i]) + [b[i]]
        if row[-1] < 0:
            row = [-a for a in row]
        tab.append(row)
    # phase 1: artificial variables
    ncols = n + m
    for i in range(m):
        art = [ZERO] * m
        art[i] = ONE
        tab[i] = tab[i][:-1] + art + [tab[i][-1]]
    basis = [n + i for i in range(m)]
    cost1 = [ZERO] * n + [-ONE] * m
    ok, obj = _simplex_phase(tab, basis, cost1, ncols)
    if not ok:
        raise LPError("phase 1 unbounded")
    val1 = -obj[-1]
    if val1 != 0:
        return "infeasible", None, None
    # drive artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tab[r][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, r, col)
    # drop rows still basic in an artificial (redundant constraints)
    keep = [r for r in range(m) if basis[r] < n]
    tab = [tab[r][:n] + [tab[r][-1]] for r in keep]
    basis = [basis[r] for r in keep]
    ok, obj = _simplex_phase(tab, basis, list(c), n)
    if not ok:
        return "unbounded", None, None
    x = [ZERO] * n
    for r, bv in enumerate(basis):
        x[bv] = tab[r][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return "optimal", value, x


class _StandardForm:
    """Free-variable LP encoded as A x = b, x >= 0 via positive/negative parts."""

    def __init__(self, lp: LPInstance):
        self.lp = lp
        self.vars = list(lp.variables)
        self.index = {v: i for i, v in enumerate(self.vars)}
        self.n_split = 2 * len(self.vars)
        rows = []
        rhs = []
        self.slack_of_constraint = {}
        n_slack = sum(1 for c in lp.constraints if c.relation == "ge")
        si = 0
        for ci, c in enumerate(lp.constraints):
            row = [ZERO] * (self.n_split + n_slack)
            for v, coef in c.coefficients:
                i = self.index[v]
                row[2 * i] = coef
                row[2 * i + 1] = -coef
            if c.relation == "ge":
                # C >= 0  ->  C - s = 0, s >= 0
                row[self.n_split + si] = -ONE
                self.slack_of_constraint[ci] = self.n_split + si
                si += 1
            rows.append(row)
            rhs.append(-c.bias)
        self.A = rows
        self.b = rhs
        self.ncols = self.n_split + n_slack

    def objective(self, goal: dict[str, Fraction]) -> list[Fraction]:
        c = [ZERO] * self.ncols
        for v, coef in goal.items():
            i = self.index[v]
            c[2 * i] = coef
            c[2 * i + 1] = -coef
        return c

    def extract(self, x) -> dict[str, Fraction]:
        return {v: x[2 * i] - x[2 * i + 1] for v, i in self.index.items()}


def _solve_goal(lp: LPInstance, goal: dict[str, Fraction]):
    sf = _StandardForm(lp)
    status, value, x = simplex_max(sf.A, sf.b, sf.objective(goal))
    if status != "optimal":
        return status, None, None
    return status, value, sf.extract(x)


def solve_max_t(lp: LPInstance) -> dict:
    """Exact optimum of max t; among optimal vertices the assignment is the
    lexicographically least in variable order (t fixed first)."""
    lp = lp.with_cap()
    status, t_star, assignment = _solve_goal(lp, {"t": ONE})
    if status == "infeasible":
        return {"status": "infeasible", "t_star": None, "assignment": None}
    if status == "unbounded":
        raise Unbounded("t is capped; unbounded means a malformed instance")
    # lexicographic refinement: pin t, then minimize each variable in order
    pinned = list(lp.constraints)
    pinned.append(constraint({"t": ONE}, -t_star, "eq"))
    for v in lp.variables:
        if v == "t":
            continue
        sub = LPInstance(lp.variables, tuple(pinned))
        status, value, assignment2 = _solve_goal(sub, {v: -ONE})
        if status != "optimal":
            break  # unbounded in this direction; keep the current vertex
        assignment = assignment2
        pinned.append(constraint({v: ONE}, -assignment[v], "eq"))
    return {"status": "optimal", "t_star": t_star, "assignment": assignment}


def _solve_square(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Gaussian elimination; returns solution if the system has a unique one."""
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = ONE / aug[r][col]
        aug[r] = [a * inv for a in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_cols.append(col)
        r += 1
        if r == len(aug):
            break
    for i in range(r, len(aug)):
        if aug[i][-1] != 0:
            return None  # inconsistent
    if len(piv_cols) < n:
        return None  # underdetermined
    x = [ZERO] * n
    for i, col in enumerate(piv_cols):
        x[col] = aug[i][-1]
    return x


def solve_max_t_enumerate(lp: LPInstance) -> dict:
    """Verification mode: enumerate all basic solutions (tight n-subsets)."""
    lp = lp.with_cap()
    vars_ = list(lp.variables)
    n = len(vars_)
    eqs = [c for c in lp.constraints if c.relation == "eq"]
    ges = [c for c in lp.constraints if c.relation == "ge"]

    def row_of(c: LinearConstraint):
        m = c.coeff_map()
        return [m.get(v, ZERO) for v in vars_]

    best_key = None
    best_assignment = None
    need = max(0, n - len(eqs))
    for extra in itertools.combinations(range(len(ges)), need):
        rows = [row_of(c) for c in eqs] + [row_of(ges[i]) for i in extra]
        rhs = [-c.bias for c in eqs] + [-ges[i].bias for i in extra]
        x = _solve_square(rows, rhs)
        if x is None:
            continue
        assignment = dict(zip(vars_, x))
        if all(c.satisfied(assignment) for c in lp.constraints):
            key = (assignment["t"],) + tuple(-assignment[v] for v in vars_ if v != "t")
            if best_key is None or key > best_key:
                best_key = key
                best_assignment = assignment
    if best_assignment is None:
        # the bounded instances used here always have vertices when feasible
        return {"status": "infeasible", "t_star": None, "assignment": None}
    return {"status": "optimal", "t_star": best_key[0], "assignment": best_assignment}


def _nullspace_basis(rows: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    """Basis of the nullspace of the row space (exact)."""
    aug = [list(r) for r in rows]
    piv_of_col: dict[int, int] = {}
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = ONE / aug[r][col]
        aug[r] = [a * inv for a in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        piv_of_col[col] = r
        r += 1
    basis = []
    free_cols = [c for c in range(n) if c not in piv_of_col]
    for fc in free_cols:
        v = [ZERO] * n
        v[fc] = ONE
        for col, row in piv_of_col.items():
            v[col] = -aug[row][fc]
        basis.append(v)
    return basis


def rebase_to_basic(lp: LPInstance, feasible: dict[str, Fraction]) -> dict[str, Fraction]:
    """Walk a feasible point to a basic feasible solution without decreasing t.

    Repeatedly picks a direction in the nullspace of the tight constraints
    along which t does not decrease and moves until a new constraint becomes
    tight; the tight subspace dimension strictly decreases each round.
    """
    lp = lp.with_cap()
    vars_ = list(lp.variables)
    n = len(vars_)
    x = {v: Fraction(feasible[v]) for v in vars_}
    for c in lp.constraints:
        if not c.satisfied(x):
            raise Infeasible("rebase input violates %s" % (c,))
    t_index = vars_.index("t")
    while True:
        tight_rows = []
        for c in lp.constraints:
            if c.relation == "eq" or c.evaluate(x) == 0:
                m = c.coeff_map()
                tight_rows.append([m.get(v, ZERO) for v in vars_])
        basis = _nullspace_basis(tight_rows, n) if tight_rows else \
            [[ONE if j == i else ZERO for j in range(n)] for i in range(n)]
        if not basis:
            return x
        v = basis[0]
        for cand in basis:
            if cand[t_index] != 0:
                v = cand
                break
        if v[t_index] < 0:
            v = [-a for a in v]
        moved = _walk(lp, vars_, x, v)
        if not moved:
            v = [-a for a in v]
            if v[t_index] < 0:
                raise Unbounded("tight system admits an unbounded ray")
            if not _walk(lp, vars_, x, v):
                raise Unbounded("feasible set is unbounded along a line")


def _walk(lp: LPInstance, vars_, x: dict[str, Fraction], v: list[Fraction]) -> bool:
    """Move x along v until a new constraint tightens.  False if nothing stops."""
    step = None
    for c in lp.constraints:
        if c.relation == "eq":
            continue
        val = c.evaluate(x)
        if val == 0:
            continue
        m = c.coeff_map()
        dv = sum(m.get(var, ZERO) * v[i] for i, var in enumerate(vars_))
        if dv < 0:
            s = val / (-dv)
            if step is None or s < step:
                step = s
    if step is None:
        return False
    for i, var in enumerate(vars_):
        x[var] += step * v[i]
    return True
