"""Hurwitz actions on colour vectors, closure-colouring counts, cocycle sums,
and the symbolic presentations read off a braid diagram.

A colour vector lists strand colours bottom to top; sigma_i acts on positions
(i, i+1).  At a positive crossing the moving colour is multiplied by the
other strand's colour; at a negative crossing it is divided by it:

    (..., a, b, ...) . sigma_i      = (..., a*b, a, ...)
    (..., a, b, ...) . sigma_i^{-1} = (..., b, b \\ a, ...)

Dividing by the stationary colour is the only reading under which
sigma_i sigma_i^{-1} fixes every vector.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from . import braid, homology, laver
from .errors import DomainError
from .magma import (FiniteMagma, QuandleTerm, _gen_name, bar_term, gen,
                    is_ld, is_left_cancellative, is_rack, left_inverse_op,
                    op_term)


def _letters(w, m: int) -> Tuple[int, ...]:
    """Word letters validated against an m-strand diagram."""
    if isinstance(w, braid.BraidWord):
        letters = w.letters
    else:
        letters = tuple(w)
    for l in letters:
        if l == 0 or abs(l) > m - 1:
            raise DomainError(f"letter {l} out of range for {m} strands")
    return letters


def _check_colours(M: FiniteMagma, colours) -> list:
    vec = list(colours)
    for v in vec:
        if not 1 <= v <= M.m:
            raise DomainError(f"colour {v} out of range 1..{M.m}")
    return vec


def act_positive(M: FiniteMagma, colours, w, checked: bool = True) -> tuple:
    """Propagate colours through a positive word; needs the LD law only."""
    vec = _check_colours(M, colours)
    letters = _letters(w, len(vec))
    if checked and not is_ld(M):
        raise DomainError("operation table is not left self-distributive")
    for l in letters:
        if l < 0:
            raise DomainError(f"negative letter {l} in a positive-only action")
        a, b = vec[l - 1], vec[l]
        vec[l - 1], vec[l] = M.op[a - 1][b - 1], a
    return tuple(vec)


def act_full(M: FiniteMagma, colours, w, checked: bool = True) -> tuple:
    """The group action; defined for racks, where division never blocks."""
    if checked and not is_rack(M):
        raise DomainError("full action needs a rack (LD with bijective rows)")
    vec = _check_colours(M, colours)
    for l in _letters(w, len(vec)):
        if l > 0:
            a, b = vec[l - 1], vec[l]
            vec[l - 1], vec[l] = M.op[a - 1][b - 1], a
        else:
            i = -l
            a, b = vec[i - 1], vec[i]
            vec[i - 1], vec[i] = b, left_inverse_op(M, b, a)
    return tuple(vec)


class IntegerShiftRack:
    """x*y = y + 1 on the integers, optionally clipped to a window.

    Outside the window the operation is undefined (None), which is what makes
    the partial action partial.
    """

    def __init__(self, lo: Optional[int] = None, hi: Optional[int] = None):
        if lo is not None and hi is not None and lo > hi:
            raise DomainError(f"empty window {lo}..{hi}")
        self.lo = lo
        self.hi = hi

    def _clip(self, v: int) -> Optional[int]:
        if self.lo is not None and v < self.lo:
            return None
        if self.hi is not None and v > self.hi:
            return None
        return v

    def check_colour(self, v) -> bool:
        return isinstance(v, int) and self._clip(v) is not None

    def mul(self, a: int, b: int) -> Optional[int]:
        return self._clip(b + 1)

    def div(self, a: int, b: int) -> Optional[int]:
        """The c with a*c = b."""
        return self._clip(b - 1)


class FreeConjugationRack:
    """Colours are reduced words of a free group; x*y = x y x^{-1}.

    Words are tuples of nonzero signed generator indices.
    """

    def check_colour(self, v) -> bool:
        return isinstance(v, tuple) and v == free_reduce(v)

    def mul(self, a: tuple, b: tuple) -> tuple:
        return free_reduce(a + b + free_inverse(a))

    def div(self, a: tuple, b: tuple) -> tuple:
        """The c with a*c = b, namely a^{-1} b a."""
        return free_reduce(free_inverse(a) + b + a)


class _MagmaBackend:
    def __init__(self, M: FiniteMagma):
        self.M = M

    def check_colour(self, v) -> bool:
        return isinstance(v, int) and 1 <= v <= self.M.m

    def mul(self, a: int, b: int) -> int:
        return self.M.op[a - 1][b - 1]

    def div(self, a: int, b: int) -> Optional[int]:
        return left_inverse_op(self.M, a, b)


def act_partial(backend, colours, w) -> Optional[tuple]:
    """Propagate where defined; None as soon as a crossing is blocked."""
    if isinstance(backend, FiniteMagma):
        if not is_left_cancellative(backend):
            raise DomainError("partial action needs injective rows")
        backend = _MagmaBackend(backend)
    vec = list(colours)
    for v in vec:
        if not backend.check_colour(v):
            raise DomainError(f"colour {v!r} is not in the carrier")
    for l in _letters(w, len(vec)):
        if l > 0:
            a, b = vec[l - 1], vec[l]
            new = backend.mul(a, b)
            if new is None:
                return None
            vec[l - 1], vec[l] = new, a
        else:
            i = -l
            a, b = vec[i - 1], vec[i]
            new = backend.div(b, a)
            if new is None:
                return None
            vec[i - 1], vec[i] = b, new
    return tuple(vec)


def free_reduce(word: Sequence[int]) -> tuple:
    out = []
    for l in word:
        if l == 0:
            raise DomainError("free-group letters are nonzero integers")
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def free_inverse(word: Sequence[int]) -> tuple:
    return tuple(-l for l in reversed(word))


def render_free_word(word: Sequence[int], names: Optional[list] = None) -> str:
    if not word:
        return "1"
    parts = []
    for l in word:
        name = names[abs(l) - 1] if names is not None else _gen_name(abs(l))
        parts.append(name if l > 0 else f"{name}^-1")
    return " ".join(parts)


def count_closure_colourings(M: FiniteMagma, w, m: int) -> int:
    """Vectors fixed by the whole word: colourings of the closed diagram."""
    if m < 1:
        raise DomainError(f"strand count must be >= 1, got {m}")
    if not is_rack(M):
        raise DomainError("closure counting needs a rack")
    letters = _letters(w, m)
    count = 0
    vec = [1] * m
    while True:
        if tuple(vec) == act_full(M, vec, letters, checked=False):
            count += 1
        j = m - 1
        while j >= 0 and vec[j] == M.m:
            vec[j] = 1
            j -= 1
        if j < 0:
            return count
        vec[j] += 1


def cocycle_invariant(M: FiniteMagma, phi, w, colours, checked: bool = True) -> int:
    """Sum of phi over the crossings seen while propagating a positive word."""
    if not isinstance(phi, homology.Cochain) or phi.degree != 2 or phi.m != M.m:
        raise DomainError("phi must be a degree-2 cochain over the same carrier")
    if checked:
        if not is_ld(M):
            raise DomainError("operation table is not left self-distributive")
        if not homology.is_two_cocycle(phi, M):
            raise DomainError("phi fails the 2-cocycle law")
    vec = _check_colours(M, colours)
    total = 0
    for l in _letters(w, len(vec)):
        if l < 0:
            raise DomainError(f"negative letter {l} in a positive-only sum")
        a, b = vec[l - 1], vec[l]
        total += phi(a, b)
        vec[l - 1], vec[l] = M.op[a - 1][b - 1], a
    return total


@dataclass(frozen=True)
class QuandlePresentation:
    """Generators 1..m and relations equating pairs of terms."""

    m: int
    relations: Tuple[Tuple[QuandleTerm, QuandleTerm], ...]

    def __post_init__(self):
        for lhs, rhs in self.relations:
            for term in (lhs, rhs):
                if _max_gen(term) > self.m:
                    raise DomainError("relation uses a generator past the last one")

    def relation_texts(self) -> list:
        return [f"{_render_outer(lhs)} = {_render_outer(rhs)}"
                for lhs, rhs in self.relations]

    def render(self) -> str:
        gens = ", ".join(_gen_name(i) for i in range(1, self.m + 1))
        return f"<{gens} | {', '.join(self.relation_texts())}>"

    def colouring_count(self, M: FiniteMagma) -> int:
        """Assignments of carrier values to generators satisfying every relation."""
        count = 0
        values = [1] * self.m
        while True:
            if all(lhs.evaluate(M, values) == rhs.evaluate(M, values)
                   for lhs, rhs in self.relations):
                count += 1
            j = self.m - 1
            while j >= 0 and values[j] == M.m:
                values[j] = 1
                j -= 1
            if j < 0:
                return count
            values[j] += 1


def _max_gen(term: QuandleTerm) -> int:
    if term.kind == "gen":
        return term.gen
    return max(_max_gen(term.left), _max_gen(term.right))


def _render_outer(term: QuandleTerm) -> str:
    """Render without the outermost parentheses."""
    if term.kind == "gen":
        return term.render()
    sym = "*" if term.kind == "op" else "\\"
    return f"{term.left.render()} {sym} {term.right.render()}"


def fundamental_quandle(w, m: int) -> QuandlePresentation:
    """Propagate formal terms and equate each output with its input generator."""
    if m < 1:
        raise DomainError(f"strand count must be >= 1, got {m}")
    vec = [gen(i) for i in range(1, m + 1)]
    for l in _letters(w, m):
        if l > 0:
            a, b = vec[l - 1], vec[l]
            vec[l - 1], vec[l] = op_term(a, b), a
        else:
            i = -l
            a, b = vec[i - 1], vec[i]
            vec[i - 1], vec[i] = b, bar_term(b, a)
    relations = tuple((vec[i], gen(i + 1)) for i in range(m))
    return QuandlePresentation(m, relations)


def wirtinger_relations(w, m: int) -> Tuple[tuple, ...]:
    """Freely reduced words t_i g_i^{-1} from reading * as conjugation.

    The i-th output colour, with a*b read as a b a^{-1} and b \\ a as
    b^{-1} a b, is equated with the i-th generator.
    """
    if m < 1:
        raise DomainError(f"strand count must be >= 1, got {m}")
    rack = FreeConjugationRack()
    vec = act_partial(rack, tuple((i,) for i in range(1, m + 1)), _letters(w, m))
    return tuple(free_reduce(t + (-i,)) for i, t in enumerate(vec, start=1))


def wirtinger_group(w, m: int) -> str:
    """Presentation text of the closure's fundamental group."""
    if m < 1:
        raise DomainError(f"strand count must be >= 1, got {m}")
    rack = FreeConjugationRack()
    vec = act_partial(rack, tuple((i,) for i in range(1, m + 1)), _letters(w, m))
    gens = ", ".join(_gen_name(i) for i in range(1, m + 1))
    eqs = ", ".join(f"{render_free_word(t)} = {_gen_name(i)}"
                    for i, t in enumerate(vec, start=1))
    return f"<{gens} | {eqs}>"


def laver_fraction_colouring(n: int, w, mid, mode: str = "fraction") -> Tuple[tuple, tuple]:
    """Colour both halves of a fraction or Delta-form diagram from the middle.

    With w = beta_1^{-1} beta_2 the two propagated ends are (mid.beta_1,
    mid.beta_2); in delta mode, w = Delta^{-d} beta_0 gives (mid.Delta^d,
    mid.beta_0).  Both halves are positive, so the table only needs LD.
    """
    m = len(mid)
    if m < 2:
        raise DomainError(f"need at least 2 strands, got {m}")
    table = laver.build_laver_table(n).as_magma()
    word = braid.BraidWord(m, _letters(w, m))
    if mode == "fraction":
        b1, b2 = braid.fraction_decomposition(word)
        w1 = braid.to_word(b1).letters
        w2 = braid.to_word(b2).letters
    elif mode == "delta":
        d, b0 = braid.delta_decomposition(word)
        w1 = braid.delta_word(m) * d
        w2 = braid.to_word(b0).letters
    else:
        raise DomainError(f"unknown mode {mode!r}, expected fraction or delta")
    return (act_positive(table, mid, w1, checked=False),
            act_positive(table, mid, w2, checked=False))
