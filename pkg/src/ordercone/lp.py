"""Exact linear programming over the rationals.

Two-phase primal simplex with Bland's rule, so every run terminates and the
reported optimum is exact.  Problems are tiny here (tens of variables), which
makes dense tableaus over Fraction the right trade.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Mat, Vec, ZERO, dot, rank, transpose, vsub, zero_vec


@dataclass(frozen=True)
class Polyhedron:
    """{x in Q^n : A x >= b}, row i encoding A[i] . x >= b[i]."""

    A: Mat
    b: Vec
    n: int

    def __post_init__(self):
        if any(len(row) != self.n for row in self.A) or len(self.A) != len(self.b):
            raise ValueError("polyhedron shape mismatch")

    def contains(self, x: Vec) -> bool:
        return all(dot(row, x) >= bi for row, bi in zip(self.A, self.b))


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    point: Vec


@dataclass(frozen=True)
class Unbounded:
    pass


@dataclass(frozen=True)
class Infeasible:
    pass


LPResult = Optimal | Unbounded | Infeasible


def simplex_standard(A: Mat, b: Vec, c: Vec, basis: list[int]):
    """max c.x s.t. A x = b, x >= 0, warm-started from a feasible basis.

    The basis columns must be invertible and the corresponding basic solution
    nonnegative.  Returns ('optimal', value, x, basis) or ('unbounded',).
    """
    k = len(A)
    N = len(A[0]) if A else 0
    T = [list(row) + [bv] for row, bv in zip(A, b, strict=True)]
    basis = list(basis)

    # Reduce so that basis column i is the i-th identity column.
    for i, col in enumerate(basis):
        r = next(r for r in range(i, k) if T[r][col] != 0)
        T[i], T[r] = T[r], T[i]
        piv = T[i][col]
        if piv != 1:
            T[i] = [e / piv for e in T[i]]
        for r in range(k):
            if r != i and T[r][col] != 0:
                f = T[r][col]
                T[r] = [e - f * p for e, p in zip(T[r], T[i])]
    if any(T[i][N] < 0 for i in range(k)):
        raise ValueError("warm-start basis is not primal feasible")

    in_basis = set(basis)
    while True:
        cb = [c[j] for j in basis]
        entering = -1
        for j in range(N):  # Bland: smallest improving index enters
            if j in in_basis:
                continue
            red = c[j] - sum(cb[i] * T[i][j] for i in range(k) if T[i][j] != 0)
            if red > 0:
                entering = j
                break
        if entering < 0:
            x = list(zero_vec(N))
            for i, col in enumerate(basis):
                x[col] = T[i][N]
            value = sum((c[j] * x[j] for j in in_basis), start=ZERO)
            return ("optimal", value, tuple(x), basis)
        leave = -1
        best = None
        for i in range(k):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][N] / a
                # Bland again: break ratio ties on the smallest basic index.
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return ("unbounded",)
        piv = T[leave][entering]
        if piv != 1:
            T[leave] = [e / piv for e in T[leave]]
        for r in range(k):
            if r != leave and T[r][entering] != 0:
                f = T[r][entering]
                T[r] = [e - f * p for e, p in zip(T[r], T[leave])]
        in_basis.discard(basis[leave])
        in_basis.add(entering)
        basis[leave] = entering


def lp(objective: Vec, P: Polyhedron, sense: str = "max") -> LPResult:
    """Optimize an exact linear objective over {x : A x >= b}."""
    if sense not in ("max", "min"):
        raise ValueError(f"bad sense {sense!r}")
    c_obj = objective if sense == "max" else tuple(-e for e in objective)
    n = P.n
    k = len(P.A)
    if k == 0:
        if all(e == 0 for e in c_obj):
            return Optimal(ZERO, zero_vec(n))
        return Unbounded()

    # Variables: u(n), v(n) with x = u - v, one slack per row, artificials last.
    ns, na = 2 * n, 0
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    basis: list[int] = []
    art_rows: list[int] = []
    for i, (a, beta) in enumerate(zip(P.A, P.b, strict=True)):
        if beta <= 0:
            # Orient as (-a).u + a.v + s = -beta so the slack can start basic.
            row = [-e for e in a] + [e for e in a] + [ZERO] * k
            row[ns + i] = Fraction(1)
            rows.append(row)
            rhs.append(-beta)
            basis.append(ns + i)
        else:
            row = [e for e in a] + [-e for e in a] + [ZERO] * k
            row[ns + i] = Fraction(-1)
            rows.append(row)
            rhs.append(beta)
            art_rows.append(i)
            basis.append(-1)  # placeholder, artificial assigned below

    for row in rows:
        row.extend([ZERO] * len(art_rows))
    for t, i in enumerate(art_rows):
        rows[i][ns + k + t] = Fraction(1)
        basis[i] = ns + k + t
        na += 1

    A_std = tuple(tuple(r) for r in rows)
    b_std = tuple(rhs)

    if na:
        c1 = zero_vec(ns + k) + (Fraction(-1),) * na
        res = simplex_standard(A_std, b_std, c1, basis)
        assert res[0] == "optimal"  # -sum of artificials is bounded above by 0
        if res[1] != 0:
            return Infeasible()
        basis = res[3]
        # Pivot any degenerate artificial out of the basis before phase 2.
        A_std, b_std, basis = _purge_artificials(A_std, b_std, basis, ns + k)

    c2 = tuple(c_obj) + tuple(-e for e in c_obj) + zero_vec(len(A_std[0]) - ns)
    res = simplex_standard(A_std, b_std, c2, basis)
    if res[0] == "unbounded":
        return Unbounded()
    _, value, x, _ = res
    point = vsub(tuple(x[:n]), tuple(x[n : 2 * n]))
    return Optimal(value if sense == "max" else -value, point)


def _purge_artificials(A: Mat, b: Vec, basis: list[int], first_art: int):
    """Drop artificial columns; pivot out (or drop) rows still basic in one."""
    T = [list(row) + [bv] for row, bv in zip(A, b, strict=True)]
    k = len(T)
    # Re-reduce on the current basis so row i owns basis[i].
    for i, col in enumerate(basis):
        r = next(r for r in range(i, k) if T[r][col] != 0)
        T[i], T[r] = T[r], T[i]
        piv = T[i][col]
        if piv != 1:
            T[i] = [e / piv for e in T[i]]
        for r in range(k):
            if r != i and T[r][col] != 0:
                f = T[r][col]
                T[r] = [e - f * p for e, p in zip(T[r], T[i])]
        basis[i] = col
    keep_rows = []
    for i in range(k):
        if basis[i] < first_art:
            keep_rows.append(i)
            continue
        j = next((j for j in range(first_art) if T[i][j] != 0), None)
        if j is None:
            continue  # all-zero row: the constraint was redundant
        f = T[i][j]
        T[i] = [e / f for e in T[i]]
        for r in range(k):
            if r != i and T[r][j] != 0:
                g = T[r][j]
                T[r] = [e - g * p for e, p in zip(T[r], T[i])]
        basis[i] = j
        keep_rows.append(i)
    A2 = tuple(tuple(T[i][:first_art]) for i in keep_rows)
    b2 = tuple(T[i][-1] for i in keep_rows)
    basis2 = [basis[i] for i in keep_rows]
    return A2, b2, basis2


def feasible_point(P: Polyhedron) -> Vec | None:
    """A point of P, or None when P is empty."""
    res = lp(zero_vec(P.n), P)
    return res.point if isinstance(res, Optimal) else None


def upper_set_min(F: Mat, w: Vec, j: int) -> Fraction:
    """min{(F x)_j : F x >= w} for an injective F (0-based j).

    Solved through the dual max{w . lam : F^T lam = F[j], lam >= 0}, which the
    basis {j} (lam = e_j) makes feasible immediately, so no phase-1 runs.  The
    minimum exists because row j of the constraints bounds it below by w[j].
    """
    m = len(F)
    n = len(F[0])
    if m == n:
        return w[j]  # F bijective: the upper set maps onto {y : y >= w}
    Ft = transpose(F)
    basis = [j]
    staged: Mat = (F[j],)
    for col in range(m):
        if len(basis) == n:
            break
        if col == j:
            continue
        cand = staged + (F[col],)
        if rank(cand) > len(staged):
            basis.append(col)
            staged = cand
    if len(basis) < n:
        raise ValueError("functional matrix is not injective")
    res = simplex_standard(Ft, F[j], w, basis)
    assert res[0] == "optimal"  # bounded above by weak duality
    return res[1]


def upper_set_minima(F: Mat, w: Vec) -> Vec:
    """The tightened vector t(w): coordinatewise minima over {x : F x >= w}."""
    return tuple(upper_set_min(F, w, j) for j in range(len(F)))
