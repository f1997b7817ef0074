"""Cauchon's deleting-derivations elimination and scaffolding extraction.

The Gamma version visits pivots in reverse-lexicographic order starting at
(m, n); the pivot (i, j) subtracts x[k,j] * x[i,j]^-1 * x[i,l] from x[k,l]
for all k < i, l < j.  The Le version visits pivots in column-major order
starting at (1, 1) and updates the region k > i, l > j.  On a totally
positive input every pivot is nonzero, every intermediate matrix stays
strictly positive, and the final matrix is the scaffolding whose path-sum
reconstruction returns the input.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from .matrix import Matrix, NotTotallyPositive, det, leading_contiguous, minor

__all__ = [
    "StepOrder",
    "ZeroPivot",
    "TraceStep",
    "CauchonTrace",
    "PartialTPResult",
    "gamma_scaffold",
    "le_scaffold",
    "gamma_intermediate",
    "le_intermediate",
    "cauchon_trace",
    "scaffold_entry_from_minors",
    "partial_tp_check",
    "PARTIAL_TP_MINOR_LIMIT",
]


class StepOrder(Enum):
    REVERSE_LEX = "reverse-lex"
    COL_MAJOR = "col-major"


class ZeroPivot(NotTotallyPositive):
    """A pivot entry vanished mid-elimination; carries the pivot position."""

    def __init__(self, position):
        super().__init__(f"zero pivot at {position}; input is not totally positive")
        self.position = position


def _gamma_pivots(m: int, n: int):
    # Effective pivots only: (i, 1) and (1, j) have empty update regions.
    for i in range(m, 1, -1):
        for j in range(n, 1, -1):
            yield (i, j)


def _le_pivots(m: int, n: int):
    for j in range(1, n):
        for i in range(1, m):
            yield (i, j)


def _apply_gamma(grid: list, i: int, j: int) -> bool:
    pivot = grid[i - 1][j - 1]
    if pivot == 0:
        raise ZeroPivot((i, j))
    changed = False
    for k in range(i - 1):
        factor = grid[k][j - 1] / pivot
        if factor == 0:
            continue
        row_i = grid[i - 1]
        for l in range(j - 1):
            delta = factor * row_i[l]
            if delta:
                grid[k][l] -= delta
                changed = True
    return changed


def _apply_le(grid: list, i: int, j: int, m: int, n: int) -> bool:
    pivot = grid[i - 1][j - 1]
    if pivot == 0:
        raise ZeroPivot((i, j))
    changed = False
    for k in range(i, m):
        factor = grid[k][j - 1] / pivot
        if factor == 0:
            continue
        row_i = grid[i - 1]
        for l in range(j, n):
            delta = factor * row_i[l]
            if delta:
                grid[k][l] -= delta
                changed = True
    return changed


def _check_positive_output(T: Matrix) -> Matrix:
    for i in range(1, T.rows + 1):
        for j in range(1, T.cols + 1):
            if T[i, j] <= 0:
                raise NotTotallyPositive(
                    f"scaffolding entry ({i},{j}) = {T[i, j]} is not positive; "
                    "input is not totally positive"
                )
    return T


def gamma_scaffold(X: Matrix) -> Matrix:
    """Run the Gamma elimination to completion and return the scaffolding.

    Raises NotTotallyPositive (or its ZeroPivot subclass) when the run
    proves the input is not TP: a vanishing pivot or a non-positive output
    entry.  Success certifies total positivity.
    """
    if X.rows == 0:
        raise ValueError("scaffolding is undefined for the empty matrix")
    grid = [list(row) for row in X.entries]
    for (i, j) in _gamma_pivots(X.rows, X.cols):
        _apply_gamma(grid, i, j)
    return _check_positive_output(Matrix(grid))


def le_scaffold(X: Matrix) -> Matrix:
    """Run the Le elimination to completion and return the Le scaffolding."""
    if X.rows == 0:
        raise ValueError("scaffolding is undefined for the empty matrix")
    m, n = X.rows, X.cols
    grid = [list(row) for row in X.entries]
    for (i, j) in _le_pivots(m, n):
        _apply_le(grid, i, j, m, n)
    return _check_positive_output(Matrix(grid))


def _gamma_precedes(p, q) -> bool:
    return p[0] > q[0] or (p[0] == q[0] and p[1] > q[1])


def _le_precedes(p, q) -> bool:
    return p[1] < q[1] or (p[1] == q[1] and p[0] < q[0])


def gamma_intermediate(X: Matrix, position) -> Matrix:
    """The elimination state with every pivot strictly before ``position``
    (in reverse-lex order) already applied."""
    i, j = position
    if not (1 <= i <= X.rows and 1 <= j <= X.cols):
        raise IndexError(f"position {position} outside {X.rows}x{X.cols} matrix")
    grid = [list(row) for row in X.entries]
    for piv in _gamma_pivots(X.rows, X.cols):
        if not _gamma_precedes(piv, (i, j)):
            break
        _apply_gamma(grid, *piv)
    return Matrix(grid)


def le_intermediate(X: Matrix, position) -> Matrix:
    """The elimination state with every pivot strictly before ``position``
    (in column-major order) already applied."""
    i, j = position
    m, n = X.rows, X.cols
    if not (1 <= i <= m and 1 <= j <= n):
        raise IndexError(f"position {position} outside {m}x{n} matrix")
    grid = [list(row) for row in X.entries]
    for piv in _le_pivots(m, n):
        if not _le_precedes(piv, (i, j)):
            break
        _apply_le(grid, *piv, m, n)
    return Matrix(grid)


@dataclass(frozen=True)
class TraceStep:
    """A recorded elimination state: ``matrix`` is the state once every
    pivot strictly before ``position`` has been applied."""

    position: tuple
    matrix: Matrix


@dataclass(frozen=True)
class CauchonTrace:
    order: StepOrder
    steps: tuple

    @property
    def initial(self) -> Matrix:
        return self.steps[0].matrix

    @property
    def final(self) -> Matrix:
        return self.steps[-1].matrix


def cauchon_trace(X: Matrix, order: StepOrder) -> CauchonTrace:
    """Record the elimination pass-through states.

    The first step is the input labeled with the first pivot position; each
    pivot that changes the matrix records the new state labeled with the
    pivot's successor in the step order.  No-op pivots are collapsed.
    """
    if X.rows == 0:
        raise ValueError("trace is undefined for the empty matrix")
    m, n = X.rows, X.cols
    grid = [list(row) for row in X.entries]
    if order is StepOrder.REVERSE_LEX:
        first = (m, n)
        pivots = _gamma_pivots(m, n)
    elif order is StepOrder.COL_MAJOR:
        first = (1, 1)
        pivots = _le_pivots(m, n)
    else:
        raise ValueError(f"unknown step order {order!r}")
    steps: List[TraceStep] = [TraceStep(first, X)]
    for (i, j) in pivots:
        if order is StepOrder.REVERSE_LEX:
            changed = _apply_gamma(grid, i, j)
            successor = (i, j - 1)  # effective pivots have j >= 2
        else:
            changed = _apply_le(grid, i, j, m, n)
            successor = (i + 1, j)  # effective pivots have i <= m-1
        if changed:
            steps.append(TraceStep(successor, Matrix(grid)))
    return CauchonTrace(order, tuple(steps))


def scaffold_entry_from_minors(X: Matrix, i: int, j: int) -> Fraction:
    """Gamma scaffolding entry (i, j) as the contiguous-minor ratio
    det X[{i..}, {j..}] / det X[{i+1..}, {j+1..}]."""
    if not (1 <= i <= X.rows and 1 <= j <= X.cols):
        raise IndexError(f"position ({i},{j}) outside {X.rows}x{X.cols} matrix")
    num = det(leading_contiguous(X, i, j))
    den = det(leading_contiguous(X, i + 1, j + 1))
    if den == 0:
        raise NotTotallyPositive(
            f"contiguous minor at ({i + 1},{j + 1}) vanishes; input is not totally positive"
        )
    return num / den


@dataclass(frozen=True)
class PartialTPResult:
    ok: bool
    step: Optional[tuple] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


PARTIAL_TP_MINOR_LIMIT = 5


def _region(order: StepOrder, label, m: int, n: int) -> set:
    i, j = label
    if order is StepOrder.REVERSE_LEX:
        return {
            (k, l)
            for k in range(1, m + 1)
            for l in range(1, n + 1)
            if k < i or (k == i and l <= j)
        }
    return {
        (k, l)
        for k in range(1, m + 1)
        for l in range(1, n + 1)
        if l > j or (l == j and k >= i)
    }


def partial_tp_check(trace: CauchonTrace) -> PartialTPResult:
    """Verify the partial total positivity of every trace state.

    Every recorded matrix must be entrywise positive, and (for matrices
    with min(m, n) <= 5) every square minor whose row-column rectangle lies
    inside the already-processed coordinate region of the step's label must
    be positive.  Returns the first violation found.
    """
    m, n = trace.initial.rows, trace.initial.cols
    enumerate_minors = min(m, n) <= PARTIAL_TP_MINOR_LIMIT
    for step in trace.steps:
        M = step.matrix
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if M[i, j] <= 0:
                    return PartialTPResult(
                        False, step.position, f"entry ({i},{j}) = {M[i, j]} is not positive"
                    )
        if not enumerate_minors:
            continue
        region = _region(trace.order, step.position, m, n)
        for k in range(2, min(m, n) + 1):
            for I in itertools.combinations(range(1, m + 1), k):
                for J in itertools.combinations(range(1, n + 1), k):
                    if all((a, b) in region for a in I for b in J):
                        v = minor(M, I, J)
                        if v <= 0:
                            return PartialTPResult(
                                False,
                                step.position,
                                f"minor[I={list(I)}; J={list(J)}] = {v} is not positive",
                            )
    return PartialTPResult(True)
