"""Positive conjugacy classes in B_n and their D-least representatives.

A positive braid's conjugates that are again positive form a finite set;
closing under conjugation by every simple braid enumerates it.  The least
member in the D-order is the canonical representative mu_n; detecting the
braids fixed by mu and sweeping the mu(beta Delta^2) recursion over short
words are the two consumers of that enumeration.
"""

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Tuple

from . import braid as br
from .errors import DomainError, ResourceError
from .order import compare_flipped

DEFAULT_CLASS_BOUND = 10 ** 6


def _lift_positive(beta, n: Optional[int]) -> br.Braid:
    if isinstance(beta, str):
        if n is None:
            raise DomainError("a braid given as text needs an explicit strand count")
        beta = br.parse_word(beta, n)
    b = br._lift(beta)
    if n is not None and b.n != n:
        raise DomainError(f"braid lives in B_{b.n}, not B_{n}")
    if b.inf < 0:
        raise DomainError("conjugacy enumeration needs a positive braid")
    return b


def _word_key(b: br.Braid) -> Tuple[int, Tuple[int, ...]]:
    letters = br.to_word(b).letters
    return (len(letters), letters)


@dataclass(frozen=True)
class ConjClass:
    """The positive part of a conjugacy class, with BFS conjugator witnesses."""

    n: int
    root: br.Braid
    members: Tuple[br.Braid, ...]
    conjugators: Tuple[br.Braid, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[br.Braid]:
        return iter(self.members)

    def __contains__(self, beta) -> bool:
        return br._lift(beta) in set(self.members)

    def witness(self, member) -> br.Braid:
        """A conjugator u with u^-1 . root . u = member."""
        b = br._lift(member)
        for m, u in zip(self.members, self.conjugators):
            if m == b:
                return u
        raise DomainError("not a member of this class")


def positive_conjugates(beta, n: Optional[int] = None,
                        max_members: int = DEFAULT_CLASS_BOUND) -> ConjClass:
    """Close {beta} under conjugation by simple braids, keeping positives."""
    b = _lift_positive(beta, n)
    n = b.n
    simples = [s for s in br.all_simples(n) if not s.is_trivial]
    found = {b: br.identity(n)}
    frontier = [b]
    while frontier:
        fresh = []
        for x in frontier:
            for s in simples:
                y = br.mul(br.mul(br.inverse(s), x), s)
                if y.inf < 0 or y in found:
                    continue
                found[y] = br.mul(found[x], s)
                fresh.append(y)
                if len(found) > max_members:
                    raise ResourceError(
                        f"conjugacy class exceeds {max_members} members")
        frontier = fresh
    order = sorted(found, key=_word_key)
    return ConjClass(n=n, root=b, members=tuple(order),
                     conjugators=tuple(found[m] for m in order))


def mu(beta, n: Optional[int] = None,
       max_members: int = DEFAULT_CLASS_BOUND) -> br.Braid:
    """The least positive conjugate of beta in the flipped D-order.

    Conjugating by Delta flips a braid, so every class here is closed
    under the flip automorphism and its least members in the plain and
    flipped orders are flips of one another.  The flipped order is the
    one ranked by rank_bp3, which makes this representative the one
    with the least ordinal rank.
    """
    cls = positive_conjugates(beta, n, max_members)
    best = cls.members[0]
    for m in cls.members[1:]:
        if compare_flipped(m, best, cls.n) == "<":
            best = m
    return best


def is_conjugacy_min(beta, n: Optional[int] = None) -> bool:
    b = _lift_positive(beta, n)
    return br.equal(mu(b), b)


def conjecture_mu_delta(beta) -> bool:
    """Whether mu3(beta Delta^2) equals s1 s2^2 s1 . mu3(beta) . s1^2."""
    b = _lift_positive(beta, 3)
    lhs = mu(br.mul(b, br.delta(3, 2)))
    wrap_left = br.from_word(br.BraidWord(3, (1, 2, 2, 1)))
    wrap_right = br.from_word(br.BraidWord(3, (1, 1)))
    rhs = br.mul(br.mul(wrap_left, mu(b)), wrap_right)
    return br.equal(lhs, rhs)


class SweepRow(NamedTuple):
    word: Tuple[int, ...]
    mu_word: Tuple[int, ...]
    agrees: bool


def sweep_mu_delta(max_len: int) -> Tuple[SweepRow, ...]:
    """Evaluate the mu(beta Delta^2) prediction on every positive 3-braid."""
    rows = []
    for _, b in br.positive_braids_up_to(3, max_len):
        rows.append(SweepRow(br.to_word(b).letters,
                             br.to_word(mu(b)).letters,
                             conjecture_mu_delta(b)))
    return tuple(rows)
