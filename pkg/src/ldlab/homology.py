"""Chain complexes of a finite binary system and the small cocycle spaces.

Chains in degree k are finite Z-combinations of k-tuples over {1, ..., m},
stored as {tuple: coefficient}; the degree-0 module is Z on the empty
tuple.  Two families of face maps act on tuple generators:

    d*_i (x_1, ..., x_k) = (x_1, ..., x_{i-1}, x_i*x_{i+1}, ..., x_i*x_k)
    d0_i (x_1, ..., x_k) = (x_1, ..., x_{i-1}, x_{i+1}, ..., x_k)

with alternating-sign boundaries del* = sum (-1)^(i-1) d*_i, del0 likewise,
and the two-term (rack) boundary delR = del* - del0.  In degree 2 this
gives delR(x, y) = (x*y) - (y), whose dual produces the usual 2-cocycle
rule f(x,z) + f(x*y, x*z) = f(y,z) + f(x, y*z).

Cochain spaces are handled exactly over Z: two_cocycle_space returns a
saturated basis of the kernel lattice, so its length is the honest rank.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import linalg
from .errors import DomainError, guard_alloc
from .magma import FiniteMagma, LawCheck

Chain = Dict[tuple, int]

_KINDS = ("*", "0")


def _check_tuple(M: FiniteMagma, tup: tuple) -> None:
    for x in tup:
        if not 1 <= x <= M.m:
            raise DomainError(f"entry {x} out of range 1..{M.m}")


def face_op(M: FiniteMagma, kind: str, i: int, tup: tuple) -> tuple:
    """The i-th face (1-based) of a k-tuple, kind '*' or '0'."""
    k = len(tup)
    if kind not in _KINDS:
        raise DomainError(f"face kind must be one of {_KINDS}, got {kind!r}")
    if not 1 <= i <= k:
        raise DomainError(f"face index {i} out of range 1..{k}")
    _check_tuple(M, tup)
    if kind == "0":
        return tup[:i - 1] + tup[i:]
    x = tup[i - 1]
    return tup[:i - 1] + tuple(M.mul(x, y) for y in tup[i:])


def _add(chain: Chain, tup: tuple, coeff: int) -> None:
    c = chain.get(tup, 0) + coeff
    if c:
        chain[tup] = c
    else:
        chain.pop(tup, None)


def _as_chain(arg) -> Chain:
    if isinstance(arg, tuple):
        return {arg: 1}
    return arg


def boundary(M: FiniteMagma, kind: str, arg) -> Chain:
    """Boundary of a chain (or a single tuple); kind '*', '0', or 'rack'."""
    if kind == "rack":
        out = boundary(M, "*", arg)
        for tup, c in boundary(M, "0", arg).items():
            _add(out, tup, -c)
        return out
    chain = _as_chain(arg)
    out: Chain = {}
    for tup, c in chain.items():
        for i in range(1, len(tup) + 1):
            sign = 1 if i % 2 == 1 else -1
            _add(out, face_op(M, kind, i, tup), sign * c)
    return out


def theta(M: FiniteMagma, arg) -> Chain:
    """Prepend the top element: theta(x_1..x_k) = (top, x_1..x_k).

    A contracting homotopy for del* whenever top*x = x for all x (true for
    the top row of a Laver table); theta(del*(c)) + del*(theta(c)) = c.
    """
    top = M.m
    chain = _as_chain(arg)
    out: Chain = {}
    for tup, c in chain.items():
        _add(out, (top,) + tup, c)
    return out


def theta_prime(M: FiniteMagma, arg) -> Chain:
    """Append the top element with sign (-1)^k: theta'(x_1..x_k) = (-1)^k (x_1..x_k, top).

    The companion homotopy for del*, using x*top = top for all x."""
    top = M.m
    chain = _as_chain(arg)
    out: Chain = {}
    for tup, c in chain.items():
        sign = 1 if len(tup) % 2 == 0 else -1
        _add(out, tup + (top,), sign * c)
    return out


def contracting_homotopy_check(M: FiniteMagma, kmax: int) -> bool:
    """theta del + del theta = id on every basis tuple of degree <= kmax,
    for both homotopies, del = del*."""
    from itertools import product

    for k in range(0, kmax + 1):
        tuples = [()] if k == 0 else product(range(1, M.m + 1), repeat=k)
        for tup in tuples:
            for h in (theta, theta_prime):
                total = h(M, boundary(M, "*", tup))
                for t2, c in boundary(M, "*", h(M, tup)).items():
                    _add(total, t2, c)
                if total != {tup: 1}:
                    return False
    return True


def _flat(m: int, tup: tuple) -> int:
    idx = 0
    for x in tup:
        idx = idx * m + (x - 1)
    return idx


def _unflat(m: int, k: int, idx: int) -> tuple:
    out = []
    for _ in range(k):
        out.append(idx % m + 1)
        idx //= m
    return tuple(reversed(out))


@dataclass(frozen=True)
class Cochain:
    """Z-valued function on k-tuples, stored flat with x_1 the slowest index."""

    m: int
    degree: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.m ** self.degree:
            raise DomainError(f"cochain needs {self.m ** self.degree} values, got {len(self.values)}")

    def __call__(self, *tup) -> int:
        if len(tup) != self.degree:
            raise DomainError(f"expected {self.degree} arguments, got {len(tup)}")
        for x in tup:
            if not 1 <= x <= self.m:
                raise DomainError(f"entry {x} out of range 1..{self.m}")
        return self.values[_flat(self.m, tup)]

    def grid(self) -> list:
        """Degree-2 cochain as a row-per-x matrix."""
        if self.degree != 2:
            raise DomainError("grid() is for degree-2 cochains")
        return [list(self.values[x * self.m:(x + 1) * self.m]) for x in range(self.m)]


def cochain_from_function(M: FiniteMagma, degree: int, fn) -> Cochain:
    from itertools import product

    guard_alloc(8 * M.m ** degree, f"degree-{degree} cochain on {M.m} elements")
    vals = [fn(*tup) for tup in product(range(1, M.m + 1), repeat=degree)]
    return Cochain(M.m, degree, tuple(vals))


def evaluate_on_chain(f: Cochain, chain: Chain) -> int:
    return sum(c * f(*tup) for tup, c in chain.items())


def coboundary_of(M: FiniteMagma, f: Cochain) -> Cochain:
    """(delta f)(x_vec) = f(delR(x_vec)): degree goes up by one."""
    from itertools import product

    k = f.degree + 1
    guard_alloc(8 * M.m ** k, f"degree-{k} cochain on {M.m} elements")
    vals = [evaluate_on_chain(f, boundary(M, "rack", tup))
            for tup in product(range(1, M.m + 1), repeat=k)]
    return Cochain(M.m, k, tuple(vals))


def is_two_cocycle(f: Cochain, M: FiniteMagma) -> LawCheck:
    """f(x,z) + f(x*y, x*z) = f(y,z) + f(x, y*z) on all triples."""
    if f.degree != 2 or f.m != M.m:
        raise DomainError("need a degree-2 cochain over the same carrier")
    for x in range(1, M.m + 1):
        for y in range(1, M.m + 1):
            xy = M.mul(x, y)
            for z in range(1, M.m + 1):
                if f(x, z) + f(xy, M.mul(x, z)) != f(y, z) + f(x, M.mul(y, z)):
                    return LawCheck(False, (x, y, z))
    return LawCheck(True, None)


def is_three_cocycle(f: Cochain, M: FiniteMagma) -> LawCheck:
    """f(x*y,x*z,x*t) + f(x,y,z*t) + f(x,z,t) = f(x,y*z,y*t) + f(y,z,t) + f(x,y,t)."""
    if f.degree != 3 or f.m != M.m:
        raise DomainError("need a degree-3 cochain over the same carrier")
    m = M.m
    for x in range(1, m + 1):
        for y in range(1, m + 1):
            xy = M.mul(x, y)
            yx_row = [M.mul(y, w) for w in range(1, m + 1)]
            x_row = [M.mul(x, w) for w in range(1, m + 1)]
            for z in range(1, m + 1):
                for t in range(1, m + 1):
                    lhs = (f(xy, x_row[z - 1], x_row[t - 1]) + f(x, y, M.mul(z, t))
                           + f(x, z, t))
                    rhs = (f(x, yx_row[z - 1], yx_row[t - 1]) + f(y, z, t)
                           + f(x, y, t))
                    if lhs != rhs:
                        return LawCheck(False, (x, y, z, t))
    return LawCheck(True, None)


def _cocycle_constraints(M: FiniteMagma, degree: int):
    """Sparse rows of the dual rack-boundary map on degree-`degree` cochains."""
    from itertools import product

    m = M.m
    for tup in product(range(1, m + 1), repeat=degree + 1):
        row: Dict[int, int] = {}
        for face, c in boundary(M, "rack", tup).items():
            j = _flat(m, face)
            v = row.get(j, 0) + c
            if v:
                row[j] = v
            else:
                row.pop(j, None)
        if row:
            yield row


def cocycle_space(M: FiniteMagma, degree: int) -> Tuple[int, List[Cochain]]:
    """Saturated Z-basis of the degree-`degree` rack cocycles."""
    dim = M.m ** degree
    guard_alloc(8 * dim * dim, f"cocycle kernel in dimension {dim}")
    basis = linalg.kernel_basis(_cocycle_constraints(M, degree), dim)
    return len(basis), [Cochain(M.m, degree, row) for row in basis]


def two_cocycle_space(M: FiniteMagma) -> Tuple[int, List[Cochain]]:
    return cocycle_space(M, 2)


def three_cocycle_rank(M: FiniteMagma) -> int:
    return cocycle_space(M, 3)[0]


def psi(q: int, n: int) -> Cochain:
    """The 0/1 cocycle marking columns where q appears but stops appearing
    after left translation: psi(x, y) = 1 iff q is a value in column y of
    A_n and not one in column x*y."""
    from .laver import build_laver_table

    table = build_laver_table(n)
    N = table.size
    if not 1 <= q < N:
        raise DomainError(f"q = {q} out of range 1..{N - 1}")
    in_col = [False] * (N + 1)  # in_col[y]: q appears in column y
    for y in range(1, N + 1):
        in_col[y] = any(table.op(p, y) == q for p in range(1, N + 1))
    vals = []
    for x in range(1, N + 1):
        for y in range(1, N + 1):
            vals.append(1 if in_col[y] and not in_col[table.op(x, y)] else 0)
    return Cochain(N, 2, tuple(vals))


def coboundary_preimage(M: FiniteMagma, f: Cochain) -> Optional[Cochain]:
    """A degree-(k-1) integral cochain g with delta(g) = f, when one exists."""
    from itertools import product

    k = f.degree
    low = k - 1
    dim_low = M.m ** low
    # column j of the coboundary matrix = delta(indicator of basis tuple j)
    columns = []
    for j in range(dim_low):
        g = Cochain(M.m, low, tuple(1 if i == j else 0 for i in range(dim_low)))
        columns.append(coboundary_of(M, g).values)
    coeffs = linalg.solve_columns(columns, f.values)
    if coeffs is None:
        return None
    return Cochain(M.m, low, tuple(coeffs))
