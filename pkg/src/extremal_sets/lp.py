"""Dense two-phase simplex over ``fractions.Fraction``.

Small and exact; Bland's rule guarantees termination.  Solves

    maximize c.x  subject to  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Number = int | Fraction


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: Optional[tuple[Fraction, ...]]
    value: Optional[Fraction]


def _pivot(tab: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tab[row][col]
    prow = [v / piv for v in tab[row]]
    tab[row] = prow
    for r, line in enumerate(tab):
        if r != row:
            f = line[col]
            if f:
                tab[r] = [a - f * b for a, b in zip(line, prow)]
    basis[row] = col


def _run(tab: list[list[Fraction]], basis: list[int], allowed: int) -> bool:
    """Maximize the objective stored in the last row as reduced costs (row = -c).

    Returns False if unbounded.  Only columns < ``allowed`` may enter.
    """
    m = len(tab) - 1
    obj = tab[m]
    while True:
        obj = tab[m]
        col = next((j for j in range(allowed) if obj[j] < 0), None)
        if col is None:
            return True
        best_row, best_ratio = None, None
        for r in range(m):
            a = tab[r][col]
            if a > 0:
                ratio = tab[r][-1] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[best_row])
                ):
                    best_row, best_ratio = r, ratio
        if best_row is None:
            return False
        _pivot(tab, basis, best_row, col)


def linprog_max(
    c: Sequence[Number],
    A_ub: Sequence[Sequence[Number]] = (),
    b_ub: Sequence[Number] = (),
    A_eq: Sequence[Sequence[Number]] = (),
    b_eq: Sequence[Number] = (),
) -> LPResult:
    nv = len(c)
    rows: list[tuple[list[Fraction], Fraction, bool]] = []
    for a, b in zip(A_ub, b_ub):
        rows.append(([Fraction(v) for v in a], Fraction(b), True))
    for a, b in zip(A_eq, b_eq):
        rows.append(([Fraction(v) for v in a], Fraction(b), False))
    m = len(rows)
    n_slack = sum(1 for _, _, ub in rows if ub)
    width = nv + n_slack + m  # originals, slacks, artificials
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    s = 0
    for r, (a, b, ub) in enumerate(rows):
        line = a + [Fraction(0)] * (n_slack + m) + [b]
        if ub:
            line[nv + s] = Fraction(1)
            s += 1
        if b < 0:
            line = [-v for v in line]
        line[nv + n_slack + r] = Fraction(1)
        tab.append(line)
        basis.append(nv + n_slack + r)

    # phase 1: maximize -(sum of artificials)
    obj = [Fraction(0)] * (width + 1)
    for j in range(nv + n_slack + m, width):
        obj[j] = Fraction(1)
    for line in tab:
        obj = [o - v for o, v in zip(obj, line)]
    tab.append(obj)
    _run(tab, basis, nv + n_slack)
    if tab[m][-1] != 0:
        return LPResult("infeasible", None, None)

    # drive remaining artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= nv + n_slack:
            col = next((j for j in range(nv + n_slack) if tab[r][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, r, col)

    # phase 2
    obj = [Fraction(0)] * (width + 1)
    for j in range(nv):
        obj[j] = -Fraction(c[j])
    for r in range(m):
        if basis[r] < nv and obj[basis[r]] != 0:
            f = obj[basis[r]]
            obj = [o - f * v for o, v in zip(obj, tab[r])]
    tab[m] = obj
    if not _run(tab, basis, nv + n_slack):
        return LPResult("unbounded", None, None)
    x = [Fraction(0)] * nv
    for r in range(m):
        if basis[r] < nv:
            x[basis[r]] = tab[r][-1]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult("optimal", tuple(x), value)


def feasible(A_eq: Sequence[Sequence[Number]], b_eq: Sequence[Number], nv: int) -> bool:
    """Is {x >= 0 : A_eq x = b_eq} nonempty?"""
    return linprog_max([0] * nv, A_eq=A_eq, b_eq=b_eq).status == "optimal"
