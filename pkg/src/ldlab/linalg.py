"""Exact integer linear algebra for small cocycle systems.

Everything runs on Python ints, so there is no overflow and no floating
point.  `kernel_basis` maintains a basis of a sublattice of Z^dim that
satisfies all constraints seen so far: a new constraint is pushed through
the current basis, the resulting weight vector is Euclidean-reduced to a
single nonzero entry by unimodular row operations, and that row is dropped.
The result is a saturated lattice (any integer solution of the constraint
system is an integer combination of the returned rows), which is what makes
reported ranks honest over Z rather than over Q.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DomainError


def _constraint_items(con, dim: int):
    if isinstance(con, dict):
        return [(j, c) for j, c in con.items() if c]
    if len(con) != dim:
        raise DomainError(f"constraint has length {len(con)}, expected {dim}")
    return [(j, c) for j, c in enumerate(con) if c]


def kernel_basis(constraints: Iterable, dim: int) -> List[Tuple[int, ...]]:
    """Basis of {v in Z^dim : con . v = 0 for all constraints}.

    Constraints are dense sequences or sparse {index: coeff} dicts.
    Deterministic: reduction always pivots on the entry of smallest
    absolute value, first index on ties.
    """
    if dim < 0:
        raise DomainError(f"dimension must be >= 0, got {dim}")
    basis = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    weights: List[int] = []
    for con in constraints:
        items = _constraint_items(con, dim)
        if not items:
            continue
        weights = [sum(row[j] * c for j, c in items) for row in basis]
        while True:
            nz = [i for i, w in enumerate(weights) if w]
            if not nz:
                break
            if len(nz) == 1:
                del basis[nz[0]]
                break
            piv = min(nz, key=lambda i: (abs(weights[i]), i))
            wp = weights[piv]
            rp = basis[piv]
            for i in nz:
                if i == piv:
                    continue
                q = weights[i] // wp
                if q:
                    weights[i] -= q * wp
                    ri = basis[i]
                    for j in range(dim):
                        ri[j] -= q * rp[j]
    return [tuple(row) for row in basis]


def _echelonize(rows: List[List[int]], dim: int):
    """In-place integer row echelon; returns [(row_index, pivot_col)].

    Only unimodular operations (swap, add integer multiple), so the row
    lattice is unchanged.
    """
    pivots = []
    r = 0
    for col in range(dim):
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][col]]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda i: (abs(rows[i][col]), i))
            vp = rows[piv][col]
            rp = rows[piv]
            for i in nz:
                if i == piv:
                    continue
                q = rows[i][col] // vp
                if q:
                    ri = rows[i]
                    for j in range(dim):
                        ri[j] -= q * rp[j]
        nz = [i for i in range(r, len(rows)) if rows[i][col]]
        if not nz:
            continue
        i0 = nz[0]
        rows[r], rows[i0] = rows[i0], rows[r]
        pivots.append((r, col))
        r += 1
    return pivots


def lattice_solve(rows: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[List[int]]:
    """Integer coefficients c with sum(c_i * rows_i) = target, or None.

    None means the target is not in the integer row span (it may still be
    in the rational span).
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [] if not any(target) else None
    dim = len(rows[0])
    if any(len(r) != dim for r in rows) or len(target) != dim:
        raise DomainError("row/target length mismatch")
    k = len(rows)
    track = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    # echelonize rows while tracking combinations of the original rows
    pivots = []
    r = 0
    for col in range(dim):
        while True:
            nz = [i for i in range(r, k) if rows[i][col]]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda i: (abs(rows[i][col]), i))
            vp = rows[piv][col]
            rp, tp = rows[piv], track[piv]
            for i in nz:
                if i == piv:
                    continue
                q = rows[i][col] // vp
                if q:
                    ri, ti = rows[i], track[i]
                    for j in range(dim):
                        ri[j] -= q * rp[j]
                    for j in range(k):
                        ti[j] -= q * tp[j]
        nz = [i for i in range(r, k) if rows[i][col]]
        if not nz:
            continue
        i0 = nz[0]
        rows[r], rows[i0] = rows[i0], rows[r]
        track[r], track[i0] = track[i0], track[r]
        pivots.append((r, col))
        r += 1
    t = list(target)
    coeffs = [0] * k
    for ri, col in pivots:
        if t[col] == 0:
            continue
        q, rem = divmod(t[col], rows[ri][col])
        if rem:
            return None
        for j in range(dim):
            t[j] -= q * rows[ri][j]
        for j in range(k):
            coeffs[j] += q * track[ri][j]
    if any(t):
        return None
    return coeffs


def lattice_contains(rows: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    return lattice_solve(rows, target) is not None


def lattices_equal(rows_a: Sequence[Sequence[int]], rows_b: Sequence[Sequence[int]]) -> bool:
    """Mutual membership of the two integer row spans."""
    return (all(lattice_contains(rows_a, v) for v in rows_b)
            and all(lattice_contains(rows_b, v) for v in rows_a))


def solve_columns(columns: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[List[int]]:
    """Integer x with sum(x_j * columns_j) = target: a matrix solve A x = t
    where columns_j are the columns of A."""
    return lattice_solve(columns, target)
