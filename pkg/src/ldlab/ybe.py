"""Set-theoretic Yang-Baxter solutions, birack laws, and 0/1 matrix export.

A solution is the dense pair map rho over {1..m} x {1..m}; rho(a, b) =
(a |> b, a <| b) names the two extracted operations.  Pseudo-solutions
(non-bijective pair maps) are first-class: invertibility is a reported
property, never a precondition.
"""

from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

from .errors import DomainError
from .magma import FiniteMagma, LawCheck


@dataclass(frozen=True)
class SetSolution:
    m: int
    pairs: tuple  # flat, index (a-1)*m + (b-1) holds (rho1(a,b), rho2(a,b))

    def __post_init__(self):
        if self.m < 1:
            raise DomainError(f"carrier size must be >= 1, got {self.m}")
        if len(self.pairs) != self.m * self.m:
            raise DomainError(f"pair map must have {self.m * self.m} entries, got {len(self.pairs)}")
        for entry in self.pairs:
            if len(entry) != 2:
                raise DomainError(f"pair map entry {entry!r} is not a pair")
            for v in entry:
                if not 1 <= v <= self.m:
                    raise DomainError(f"pair map value {v} out of range 1..{self.m}")

    def _check(self, a: int, b: int) -> None:
        if not (1 <= a <= self.m and 1 <= b <= self.m):
            raise DomainError(f"({a}, {b}) out of range 1..{self.m}")

    def rho(self, a: int, b: int) -> Tuple[int, int]:
        self._check(a, b)
        return self.pairs[(a - 1) * self.m + (b - 1)]

    def rho1(self, a: int, b: int) -> int:
        return self.rho(a, b)[0]

    def rho2(self, a: int, b: int) -> int:
        return self.rho(a, b)[1]

    def left_op(self) -> FiniteMagma:
        """The operation a |> b = rho1(a, b)."""
        rows = tuple(tuple(self.pairs[(a - 1) * self.m + (b - 1)][0]
                           for b in range(1, self.m + 1))
                     for a in range(1, self.m + 1))
        return FiniteMagma(self.m, rows)

    def right_op(self) -> FiniteMagma:
        """The operation a <| b = rho2(a, b)."""
        rows = tuple(tuple(self.pairs[(a - 1) * self.m + (b - 1)][1]
                           for b in range(1, self.m + 1))
                     for a in range(1, self.m + 1))
        return FiniteMagma(self.m, rows)


def rack_to_solution(M: FiniteMagma) -> SetSolution:
    """rho(a, b) = (a*b, a); the LD law is not verified here."""
    m = M.m
    pairs = tuple((M.op[a - 1][b - 1], a)
                  for a in range(1, m + 1) for b in range(1, m + 1))
    return SetSolution(m, pairs)


def ops_to_solution(op1: FiniteMagma, op2: FiniteMagma) -> SetSolution:
    """Reassemble rho(a, b) = (a op1 b, a op2 b) from the two operations."""
    if op1.m != op2.m:
        raise DomainError(f"carrier sizes differ: {op1.m} vs {op2.m}")
    m = op1.m
    pairs = tuple((op1.op[a - 1][b - 1], op2.op[a - 1][b - 1])
                  for a in range(1, m + 1) for b in range(1, m + 1))
    return SetSolution(m, pairs)


def solution_ops(rho: SetSolution) -> Tuple[FiniteMagma, FiniteMagma]:
    return rho.left_op(), rho.right_op()


def switch_solution(m: int) -> SetSolution:
    """rho(a, b) = (b, a)."""
    pairs = tuple((b, a) for a in range(1, m + 1) for b in range(1, m + 1))
    return SetSolution(m, pairs)


def identity_solution(m: int) -> SetSolution:
    pairs = tuple((a, b) for a in range(1, m + 1) for b in range(1, m + 1))
    return SetSolution(m, pairs)


def first_projection(m: int) -> FiniteMagma:
    """The trivial operation a op b = a."""
    rows = tuple(tuple(a for _ in range(m)) for a in range(1, m + 1))
    return FiniteMagma(m, rows, label="proj1")


def satisfies_braid_equation(rho: SetSolution) -> LawCheck:
    """rho^12 rho^23 rho^12 = rho^23 rho^12 rho^23 on every triple.

    rho^12 acts on the first two coordinates, rho^23 on the last two.
    The witness is the first triple (a, b, c) where the composites split.
    """
    m = rho.m
    P = rho.pairs

    def r12(t):
        u = P[(t[0] - 1) * m + (t[1] - 1)]
        return (u[0], u[1], t[2])

    def r23(t):
        u = P[(t[1] - 1) * m + (t[2] - 1)]
        return (t[0], u[0], u[1])

    for a in range(1, m + 1):
        for b in range(1, m + 1):
            for c in range(1, m + 1):
                t = (a, b, c)
                if r12(r23(r12(t))) != r23(r12(r23(t))):
                    return LawCheck(False, (a, b, c))
    return LawCheck(True, None)


def is_invertible(rho: SetSolution) -> bool:
    """The pair map is a bijection of the m^2 pairs."""
    return len(set(rho.pairs)) == rho.m * rho.m


class BirackCheck(NamedTuple):
    ok: bool
    failure: Optional[str]
    witness: Optional[tuple]

    def __bool__(self) -> bool:
        return self.ok


def birack_laws_check(op1: FiniteMagma, op2: FiniteMagma) -> BirackCheck:
    """The three exchange laws plus the two translation-bijectivity demands.

    op1 is |> (first output), op2 is <| (second output).  Exchange laws,
    each on all triples (x, y, z):

      1. (x|>y) |> ((x<|y) |> z)  =  x |> (y|>z)
      2. (x|>y) <| ((x<|y) |> z)  =  (x <| (y|>z)) |> (y<|z)
      3. (x<|y) <| z              =  (x <| (y|>z)) <| (y<|z)

    then every left translation of |> and every right translation of <|
    must be one-to-one.  The first failure is reported by name.
    """
    if op1.m != op2.m:
        raise DomainError(f"carrier sizes differ: {op1.m} vs {op2.m}")
    m = op1.m
    L = op1.op
    R = op2.op
    for x in range(1, m + 1):
        lx = L[x - 1]
        rx = R[x - 1]
        for y in range(1, m + 1):
            xy_l = lx[y - 1]
            xy_r = rx[y - 1]
            l_xyl = L[xy_l - 1]
            r_xyl = R[xy_l - 1]
            l_xyr = L[xy_r - 1]
            r_xyr = R[xy_r - 1]
            ly = L[y - 1]
            ry = R[y - 1]
            for z in range(1, m + 1):
                mid = l_xyr[z - 1]                      # (x<|y) |> z
                yl = ly[z - 1]                          # y|>z
                yr = ry[z - 1]                          # y<|z
                xl = rx[yl - 1]                         # x <| (y|>z)
                if l_xyl[mid - 1] != lx[yl - 1]:
                    return BirackCheck(False, "exchange-1", (x, y, z))
                if r_xyl[mid - 1] != L[xl - 1][yr - 1]:
                    return BirackCheck(False, "exchange-2", (x, y, z))
                if r_xyr[z - 1] != R[xl - 1][yr - 1]:
                    return BirackCheck(False, "exchange-3", (x, y, z))
    for x in range(1, m + 1):
        row = L[x - 1]
        if len(set(row)) != m:
            seen = {}
            for b, v in enumerate(row, start=1):
                if v in seen:
                    return BirackCheck(False, "left-translations", (x, seen[v], b))
                seen[v] = b
    for y in range(1, m + 1):
        col = [R[x - 1][y - 1] for x in range(1, m + 1)]
        if len(set(col)) != m:
            seen = {}
            for a, v in enumerate(col, start=1):
                if v in seen:
                    return BirackCheck(False, "right-translations", (seen[v], a, y))
                seen[v] = a
    return BirackCheck(True, None, None)


def exchange_laws_hold(op1: FiniteMagma, op2: FiniteMagma) -> bool:
    """The three exchange laws alone, without the bijectivity demands."""
    check = birack_laws_check(op1, op2)
    return check.ok or check.failure in ("left-translations", "right-translations")


def matrix_entries(rho: SetSolution) -> tuple:
    """(row, col) positions of the ones, 1-based, sorted by column.

    Pair (a, b) gets index (a-1)*m + b, first coordinate slowest; the
    column is the input pair, the row its image, so every column carries
    exactly one entry and the total count is m^2.
    """
    m = rho.m
    out = []
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            c, d = rho.pairs[(a - 1) * m + (b - 1)]
            out.append(((c - 1) * m + d, (a - 1) * m + b))
    out.sort(key=lambda e: (e[1], e[0]))
    return tuple(out)


def dense_matrix(rho: SetSolution) -> tuple:
    """The full m^2 x m^2 0/1 matrix as a tuple of row tuples."""
    size = rho.m * rho.m
    rows = [[0] * size for _ in range(size)]
    for r, c in matrix_entries(rho):
        rows[r - 1][c - 1] = 1
    return tuple(tuple(row) for row in rows)


def export_matrix(rho: SetSolution, fmt: str = "coo") -> str:
    """Render the matrix; "coo" gives lines "row col 1", "csv" dense rows."""
    if fmt == "coo":
        return "\n".join(f"{r} {c} 1" for r, c in matrix_entries(rho))
    if fmt == "csv":
        return "\n".join(",".join(str(v) for v in row) for row in dense_matrix(rho))
    raise DomainError(f"unknown matrix format {fmt!r}, expected coo or csv")
