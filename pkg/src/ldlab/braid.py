"""Garside engine for Artin braid groups.

Braids are kept in left-weighted normal form over permutation braids:
``Delta^inf . f_1 ... f_k`` with every ``f_j`` a non-trivial simple
element distinct from Delta and every adjacent pair left-weighted.  All
values are immutable; equality of dataclasses is equality of braids.

Permutations are one-line tuples over 1..n.  ``perm_mul(p, q)`` composes
"p then q", matching left-to-right reading of braid words.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

from .errors import DomainError

Perm = Tuple[int, ...]


# ---------------------------------------------------------------------------
# permutation helpers

def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def w0_perm(n: int) -> Perm:
    """Longest element: the permutation of the half-twist Delta_n."""
    return tuple(range(n, 0, -1))


def perm_mul(p: Perm, q: Perm) -> Perm:
    """Composition "p then q" (apply p first)."""
    return tuple(q[v - 1] for v in p)


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for pos, val in enumerate(p):
        out[val - 1] = pos + 1
    return tuple(out)


def tau_perm(p: Perm, n: int) -> Perm:
    """Conjugation by Delta: tau(p) = w0 p w0, i.e. sigma_i -> sigma_{n-i}."""
    return tuple(n + 1 - p[n - 1 - i] for i in range(n))


def perm_len(p: Perm) -> int:
    """Inversion count: crossing number of the simple braid."""
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def left_descents(p: Perm) -> Tuple[int, ...]:
    """Indices i with sigma_i a left divisor of the simple braid of p."""
    return tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])


def right_descents(p: Perm) -> Tuple[int, ...]:
    return left_descents(perm_inv(p))


def _swap_values(p: Perm, i: int) -> Perm:
    """Right-multiply the simple braid by sigma_i."""
    sub = {i: i + 1, i + 1: i}
    return tuple(sub.get(v, v) for v in p)


def _swap_entries(p: Perm, i: int) -> Perm:
    """Left-multiply the simple braid by sigma_i."""
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _left_weighted_fix(a: Perm, b: Perm) -> Tuple[Perm, Perm]:
    """Slide crossings from b into a until the pair (a, b) is left-weighted."""
    while True:
        ra = set(right_descents(a))
        move = next((i for i in left_descents(b) if i not in ra), None)
        if move is None:
            return a, b
        a = _swap_values(a, move)
        b = _swap_entries(b, move)


# ---------------------------------------------------------------------------
# normal form

@dataclass(frozen=True)
class Braid:
    """A braid of B_n in left-weighted normal form Delta^inf . factors."""

    n: int
    inf: int
    factors: Tuple[Perm, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"strand count must be >= 2, got {self.n}")
        idp = identity_perm(self.n)
        w0 = w0_perm(self.n)
        for f in self.factors:
            if tuple(sorted(f)) != idp:
                raise DomainError(f"not a permutation of 1..{self.n}: {f}")
            if f == idp or f == w0:
                raise DomainError("normal-form factors exclude 1 and Delta")

    @property
    def is_trivial(self) -> bool:
        return self.inf == 0 and not self.factors

    def __mul__(self, other: "Braid") -> "Braid":
        return mul(self, other)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Braid(n={self.n}, word={list(to_word(self).letters)})"


@dataclass(frozen=True)
class BraidWord:
    """A word in the letters sigma_i^{+-1}, letter i standing for sigma_i."""

    n: int
    letters: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"strand count must be >= 2, got {self.n}")
        for l in self.letters:
            if l == 0 or abs(l) > self.n - 1:
                raise DomainError(f"letter {l} out of range for {self.n} strands")


def parse_word(text: str, n: int) -> BraidWord:
    """Parse whitespace-separated signed generator indices."""
    letters = []
    for tok in text.split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise DomainError(f"bad braid letter {tok!r}") from None
    return BraidWord(n, tuple(letters))


def render_word(w: BraidWord) -> str:
    return " ".join(str(l) for l in w.letters)


def _normalize(n: int, perms: Sequence[Perm]) -> Tuple[int, Tuple[Perm, ...]]:
    """Left-weighted form of a product of simples; returns (delta count, factors)."""
    idp = identity_perm(n)
    w0 = w0_perm(n)
    fs = [p for p in perms if p != idp]
    d = 0
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(fs):
            if fs[i] == idp:
                fs.pop(i)
                changed = True
            elif fs[i] == w0:
                fs.pop(i)
                d += 1
                for j in range(i):
                    fs[j] = tau_perm(fs[j], n)
                changed = True
            else:
                i += 1
        for j in range(len(fs) - 1):
            a, b = _left_weighted_fix(fs[j], fs[j + 1])
            if (a, b) != (fs[j], fs[j + 1]):
                fs[j], fs[j + 1] = a, b
                changed = True
    return d, tuple(fs)


def identity(n: int) -> Braid:
    return Braid(n, 0, ())


def sigma(n: int, i: int) -> Braid:
    if not 1 <= i <= n - 1:
        raise DomainError(f"sigma index {i} out of range for {n} strands")
    if n == 2:
        return Braid(2, 1, ())
    return Braid(n, 0, (_swap_entries(identity_perm(n), i),))


def delta(n: int, power: int = 1) -> Braid:
    return Braid(n, power, ())


def delta_word(n: int) -> Tuple[int, ...]:
    """Positive word for Delta_n: sigma_1 . sigma_2 sigma_1 . ... ."""
    out = []
    for i in range(1, n):
        out.extend(range(i, 0, -1))
    return tuple(out)


def mul(u: Braid, v: Braid) -> Braid:
    if u.n != v.n:
        raise DomainError(f"strand mismatch: {u.n} vs {v.n}")
    n = u.n
    uf = u.factors
    if v.inf % 2:
        uf = tuple(tau_perm(f, n) for f in uf)
    d, fs = _normalize(n, uf + v.factors)
    return Braid(n, u.inf + v.inf + d, fs)


def inverse(u: Braid) -> Braid:
    n = u.n
    w0 = w0_perm(n)
    out = identity(n)
    for f in reversed(u.factors):
        comp = perm_mul(perm_inv(f), w0)
        d, fs = _normalize(n, (tau_perm(comp, n),))
        out = mul(out, Braid(n, -1 + d, fs))
    return mul(out, Braid(n, -u.inf, ()))


def from_word(w: BraidWord) -> Braid:
    out = identity(w.n)
    for l in w.letters:
        g = sigma(w.n, abs(l))
        out = mul(out, g if l > 0 else inverse(g))
    return out


def normal_form(w: BraidWord) -> Braid:
    return from_word(w)


def to_word(b: Braid) -> BraidWord:
    letters = []
    dw = delta_word(b.n)
    if b.inf >= 0:
        letters.extend(dw * b.inf)
    else:
        letters.extend(tuple(-l for l in reversed(dw)) * (-b.inf))
    for f in b.factors:
        p = f
        while p != identity_perm(b.n):
            i = left_descents(p)[0]
            letters.append(i)
            p = _swap_entries(p, i)
    return BraidWord(b.n, tuple(letters))


def _lift(x) -> Braid:
    if isinstance(x, Braid):
        return x
    if isinstance(x, BraidWord):
        return from_word(x)
    raise DomainError(f"expected a braid or braid word, got {type(x).__name__}")


def equal(u, v) -> bool:
    bu, bv = _lift(u), _lift(v)
    if bu.n != bv.n:
        raise DomainError(f"strand mismatch: {bu.n} vs {bv.n}")
    return bu == bv


def is_positive(w) -> bool:
    return _lift(w).inf >= 0


def braid_length(b: Braid) -> int:
    """Crossing number; only meaningful for positive braids."""
    n = b.n
    return b.inf * (n * (n - 1) // 2) + sum(perm_len(f) for f in b.factors)


# ---------------------------------------------------------------------------
# divisibility lattice on the positive monoid

def _require_positive(b: Braid, what: str) -> None:
    if b.inf < 0:
        raise DomainError(f"{what} must be a positive braid")


def right_divides(a, b) -> bool:
    """Whether b = c a for some positive c."""
    ba, bb = _lift(a), _lift(b)
    _require_positive(ba, "divisor")
    _require_positive(bb, "dividend")
    return mul(bb, inverse(ba)).inf >= 0


def left_divides(a, b) -> bool:
    """Whether b = a c for some positive c."""
    ba, bb = _lift(a), _lift(b)
    _require_positive(ba, "divisor")
    _require_positive(bb, "dividend")
    return mul(inverse(ba), bb).inf >= 0


def _left_descent_set(b: Braid) -> Tuple[int, ...]:
    """Generators sigma_i left-dividing a positive braid."""
    if b.inf >= 1:
        return tuple(range(1, b.n))
    if b.factors:
        return left_descents(b.factors[0])
    return ()


def left_gcd(a, b) -> Braid:
    ba, bb = _lift(a), _lift(b)
    if ba.n != bb.n:
        raise DomainError(f"strand mismatch: {ba.n} vs {bb.n}")
    _require_positive(ba, "argument")
    _require_positive(bb, "argument")
    n = ba.n
    g = identity(n)
    while True:
        common = set(_left_descent_set(ba)) & set(_left_descent_set(bb))
        if not common:
            return g
        i = min(common)
        s_inv = inverse(sigma(n, i))
        g = mul(g, sigma(n, i))
        ba = mul(s_inv, ba)
        bb = mul(s_inv, bb)


def max_right_divisor_in_parabolic(b, k: int) -> Braid:
    """Largest right-divisor using only sigma_1 .. sigma_{k-1}."""
    bb = _lift(b)
    _require_positive(bb, "argument")
    if not 2 <= k <= bb.n:
        raise DomainError(f"parabolic rank {k} out of range for {bb.n} strands")
    n = bb.n
    div = identity(n)
    while True:
        found = None
        for i in range(1, k):
            if right_divides(sigma(n, i), bb):
                found = i
                break
        if found is None:
            return div
        bb = mul(bb, inverse(sigma(n, found)))
        div = mul(sigma(n, found), div)


# ---------------------------------------------------------------------------
# structural maps

def flip(b, n: Optional[int] = None) -> Braid:
    """The involutive automorphism sigma_i -> sigma_{n-i}."""
    bb = _lift(b)
    if n is not None and n != bb.n:
        raise DomainError(f"flip ambient {n} does not match braid on {bb.n} strands")
    m = bb.n
    return Braid(m, bb.inf, tuple(tau_perm(f, m) for f in bb.factors))


def _fraction_words(b: Braid) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Positive words (u, v) with b = u^{-1} v, supported on the true parabolic.

    The canonical word of a braid with negative inf spells out Delta_n and
    so mentions every generator; the irreducible fraction keeps both parts
    positive, whose words never leave the smallest standard parabolic
    containing the braid.
    """
    b1, b2 = fraction_decomposition(b)
    return to_word(b1).letters, to_word(b2).letters


def _remap(u: Tuple[int, ...], v: Tuple[int, ...], ambient: int, offset: int) -> Braid:
    num = from_word(BraidWord(ambient, tuple(l + offset for l in u)))
    den = from_word(BraidWord(ambient, tuple(l + offset for l in v)))
    return mul(inverse(num), den)


def shift(b, ambient: int) -> Braid:
    """The endomorphism sh: sigma_i -> sigma_{i+1}, into B_ambient."""
    u, v = _fraction_words(_lift(b))
    support = max(itertools.chain(u, v), default=0)
    if ambient < support + 2:
        raise DomainError(f"ambient {ambient} too small to hold the shifted braid")
    return _remap(u, v, ambient, 1)


def embed(b, ambient: int) -> Braid:
    """The same braid viewed in B_ambient (idle strands added on the right)."""
    bb = _lift(b)
    if ambient == bb.n:
        return bb
    u, v = _fraction_words(bb)
    support = max(itertools.chain(u, v), default=0)
    if ambient < max(support + 1, 2):
        raise DomainError(f"ambient {ambient} too small for this braid")
    return _remap(u, v, ambient, 0)


def shifted_conj(beta, gamma, ambient: int) -> Braid:
    """Shifted conjugation beta * gamma = beta sh(gamma) sigma_1 sh(beta)^{-1}."""
    bb, bg = _lift(beta), _lift(gamma)
    sh_b = shift(bb, ambient)
    out = mul(embed(bb, ambient), shift(bg, ambient))
    out = mul(out, sigma(ambient, 1))
    return mul(out, inverse(sh_b))


def fraction_decomposition(w) -> Tuple[Braid, Braid]:
    """Express a braid as beta_1^{-1} beta_2 with no common left-divisor."""
    b = _lift(w)
    n = b.n
    d = max(0, -b.inf)
    beta1 = delta(n, d)
    beta2 = mul(beta1, b)
    g_inv = inverse(left_gcd(beta1, beta2))
    return mul(g_inv, beta1), mul(g_inv, beta2)


def delta_decomposition(w) -> Tuple[int, Braid]:
    """Express a braid as Delta^{-d} beta0 with d >= 0 minimal."""
    b = _lift(w)
    d = max(0, -b.inf)
    return d, mul(delta(b.n, d), b)


# ---------------------------------------------------------------------------
# enumeration helper

def positive_braids_up_to(n: int, max_len: int) -> Iterator[Tuple[int, Braid]]:
    """Yield (crossing number, braid) for all positive braids of length <= max_len."""
    layer = {identity(n)}
    yield 0, identity(n)
    for length in range(1, max_len + 1):
        nxt = set()
        for b in layer:
            for i in range(1, n):
                nxt.add(mul(b, sigma(n, i)))
        for b in sorted(nxt, key=lambda x: to_word(x).letters):
            yield length, b
        layer = nxt


def all_simples(n: int) -> Iterator[Braid]:
    """All simple braids (divisors of Delta_n), the identity included."""
    for p in itertools.permutations(range(1, n + 1)):
        d, fs = _normalize(n, (p,))
        yield Braid(n, d, fs)
