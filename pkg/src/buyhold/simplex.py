"""Two-phase simplex on a dense tableau.

Solves   minimize c.x   subject to   A x (<= | >= | =) b,   x >= 0.

Phase one drives artificial variables out with the auxiliary objective,
phase two optimizes the real one.  Pivot selection follows Bland's rule
(lowest eligible column enters; ratio-test ties broken by the lowest
basic variable index), which excludes cycling, so the iteration cap is
a pure safety net.  Intended for the small dense programs that arise
from matrix games; no attempt is made at sparsity or scaling.
"""

import numpy as np

from .errors import Infeasible, NumericalFailure, Unbounded

LE = "<="
GE = ">="
EQ = "="

_FLIP = {LE: GE, GE: LE, EQ: EQ}


def solve_lp(c, A, b, senses, tol: float = 1e-9, max_iter: int | None = None):
    """Minimize ``c @ x`` over ``A @ x (senses) b``, ``x >= 0``.

    Returns ``(x, objective)``.  Raises Infeasible, Unbounded, or
    NumericalFailure (iteration cap, unreachable under Bland's rule
    for well-posed inputs).
    """
    c = np.asarray(c, dtype=float).ravel()
    A = np.atleast_2d(np.asarray(A, dtype=float)).copy()
    b = np.asarray(b, dtype=float).ravel().copy()
    senses = list(senses)
    m, nv = A.shape
    if b.shape[0] != m or len(senses) != m or c.shape[0] != nv:
        raise ValueError("inconsistent LP dimensions")

    for i in range(m):
        if b[i] < 0.0:
            A[i] = -A[i]
            b[i] = -b[i]
            senses[i] = _FLIP[senses[i]]

    # Append slack/surplus and artificial columns; record the starting basis.
    extra = []
    basis = np.empty(m, dtype=int)
    artificial = []
    col_index = nv
    for i, sense in enumerate(senses):
        unit = np.zeros(m)
        unit[i] = 1.0
        if sense == LE:
            extra.append(unit)
            basis[i] = col_index
            col_index += 1
        elif sense == GE:
            extra.append(-unit)
            col_index += 1
            extra.append(unit)
            basis[i] = col_index
            artificial.append(col_index)
            col_index += 1
        elif sense == EQ:
            extra.append(unit)
            basis[i] = col_index
            artificial.append(col_index)
            col_index += 1
        else:
            raise ValueError(f"unknown constraint sense {sense!r}")

    body = np.hstack([A, np.column_stack(extra)]) if extra else A
    total = body.shape[1]
    T = np.hstack([body, b[:, None]])
    if max_iter is None:
        max_iter = 200 * (m + total + 10)

    art_set = set(artificial)
    if artificial:
        cost1 = np.zeros(total)
        cost1[artificial] = 1.0
        T = np.vstack([T, _objective_row(T, basis, cost1)])
        _pivot_until_optimal(T, basis, tol, max_iter)
        if -T[-1, -1] > tol:
            raise Infeasible(f"phase-one optimum {-T[-1, -1]:.3e} is nonzero")
        T, basis = _drop_artificials(T, basis, art_set, nv, total, tol)
        total = T.shape[1] - 1
    else:
        T = np.vstack([T, np.zeros(total + 1)])

    cost2 = np.zeros(total)
    cost2[:nv] = c
    T[-1] = _objective_row(T[:-1], basis, cost2)
    _pivot_until_optimal(T, basis, tol, max_iter)

    x = np.zeros(total)
    x[basis] = T[: len(basis), -1]
    return np.maximum(x[:nv], 0.0), -T[-1, -1]


def _objective_row(rows, basis, cost):
    # Reduced costs plus negated objective value, given the current basis.
    row = np.append(cost, 0.0)
    for i, bi in enumerate(basis):
        if cost[bi] != 0.0:
            row -= cost[bi] * rows[i]
    return row


def _pivot(T, row, col):
    T[row] /= T[row, col]
    factors = T[:, col].copy()
    factors[row] = 0.0
    T -= np.outer(factors, T[row])
    T[:, col] = 0.0
    T[row, col] = 1.0


def _pivot_until_optimal(T, basis, tol, max_iter):
    m = T.shape[0] - 1
    for _ in range(max_iter):
        negative = np.flatnonzero(T[-1, :-1] < -tol)
        if negative.size == 0:
            return
        enter = int(negative[0])  # Bland: lowest eligible index
        col = T[:m, enter]
        blocking = col > tol
        if not blocking.any():
            raise Unbounded(f"entering column {enter} has no blocking row")
        ratios = np.full(m, np.inf)
        ratios[blocking] = T[:m, -1][blocking] / col[blocking]
        rmin = ratios.min()
        ties = np.flatnonzero(ratios <= rmin + tol * (1.0 + abs(rmin)))
        leave = int(ties[np.argmin(basis[ties])])  # Bland tie-break
        _pivot(T, leave, enter)
        basis[leave] = enter
    raise NumericalFailure(f"simplex did not terminate within {max_iter} pivots")


def _drop_artificials(T, basis, art_set, nv, total, tol):
    m = T.shape[0] - 1
    # Pivot basic artificials onto any genuine column with a nonzero entry.
    for i in range(m):
        if basis[i] in art_set:
            for j in range(total):
                if j not in art_set and abs(T[i, j]) > tol:
                    _pivot(T, i, j)
                    basis[i] = j
                    break
    # Rows still carried by an artificial are redundant (zero RHS after
    # phase one) and can be removed outright.
    keep_rows = [i for i in range(m) if basis[i] not in art_set]
    keep_cols = [j for j in range(total) if j not in art_set]
    remap = {old: new for new, old in enumerate(keep_cols)}
    T = T[np.array(keep_rows + [m]), :][:, np.array(keep_cols + [total])]
    basis = np.array([remap[basis[i]] for i in keep_rows], dtype=int)
    return T, basis
