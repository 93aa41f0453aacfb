"""Greedy deletion-ball packings in the symmetric group, with brute-force
decoders.

Stable deletions keep surviving values, so a radius-t ball is exactly the set
of subsequences of length >= n - t; unstable deletions rank-compress survivors
and yield smaller permutations.  Unstable-deletion codebooks are only built for
t <= 1.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterator

from .errors import Ambiguous, NotFound
from .guards import PERM_ENUM_CAP, check_enumerable
from .model import (
    DeletionPattern,
    Permutation,
    Word,
    apply_stable_deletions,
    apply_unstable_deletions,
)


@dataclass(frozen=True)
class PermCodeBook:
    """A permutation code with its deletion budget and enumeration-order tag."""

    n: int
    t: int
    codewords: tuple[Permutation, ...]
    order: str = "lex"

    def __post_init__(self):
        object.__setattr__(self, "codewords", tuple(self.codewords))
        if not 0 <= self.t <= self.n:
            raise ValueError(f"deletion budget t={self.t} outside [0, {self.n}]")
        for sigma in self.codewords:
            if len(sigma) != self.n:
                raise ValueError(f"codeword of length {len(sigma)} in a length-{self.n} book")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "codewords": [list(sigma.images) for sigma in self.codewords],
            "order": self.order,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PermCodeBook":
        return cls(
            data["n"],
            data["t"],
            tuple(Permutation(tuple(images)) for images in data["codewords"]),
            data.get("order", "lex"),
        )


def _patterns(n: int, t: int) -> Iterator[DeletionPattern]:
    for size in range(t + 1):
        for positions in combinations(range(1, n + 1), size):
            yield DeletionPattern(positions, n)


def stable_deletion_ball(sigma: Permutation, t: int) -> set[Word]:
    """Every word reachable from sigma by at most t stable deletions."""
    if not 0 <= t <= len(sigma):
        raise ValueError(f"radius t={t} outside [0, {len(sigma)}]")
    return {apply_stable_deletions(sigma, pat) for pat in _patterns(len(sigma), t)}


def unstable_deletion_ball(sigma: Permutation, t: int) -> set[Permutation]:
    """Every permutation reachable from sigma by at most t unstable deletions."""
    if not 0 <= t <= len(sigma):
        raise ValueError(f"radius t={t} outside [0, {len(sigma)}]")
    return {apply_unstable_deletions(sigma, pat) for pat in _patterns(len(sigma), t)}


def _greedy_scan(n: int, t: int, ball_keys) -> tuple[Permutation, ...]:
    # Admission only consults previously admitted balls, so the scan is sequential.
    check_enumerable(math.factorial(n), PERM_ENUM_CAP, "symmetric-group scan")
    taken: set = set()
    chosen: list[Permutation] = []
    for images in permutations(range(1, n + 1)):
        sigma = Permutation(images)
        ball = ball_keys(sigma)
        if taken.isdisjoint(ball):
            chosen.append(sigma)
            taken |= ball
    return tuple(chosen)


def greedy_sd_code(n: int, t: int) -> PermCodeBook:
    """First-fit scan of S_n in lexicographic order: admit a permutation iff its
    radius-t stable-deletion ball avoids every previously admitted ball."""
    if not 0 <= t <= n:
        raise ValueError(f"deletion budget t={t} outside [0, {n}]")
    keys = lambda sigma: {w.symbols for w in stable_deletion_ball(sigma, t)}
    return PermCodeBook(n, t, _greedy_scan(n, t, keys), "lex")


def greedy_ud_code(n: int, t: int = 1) -> PermCodeBook:
    """Same first-fit scan with unstable balls; only t <= 1 is supported because
    multiple-unstable-deletion codes are not constructed here."""
    if t not in (0, 1):
        raise ValueError("unstable-deletion codebooks are only built for t <= 1")
    keys = lambda sigma: {pi.images for pi in unstable_deletion_ball(sigma, t)}
    return PermCodeBook(n, t, _greedy_scan(n, t, keys), "lex")


def verify_sd_property(book: PermCodeBook) -> bool:
    """True iff the radius-t stable-deletion balls are pairwise disjoint."""
    seen: dict[tuple[int, ...], int] = {}
    for idx, sigma in enumerate(book.codewords):
        for w in stable_deletion_ball(sigma, book.t):
            if seen.setdefault(w.symbols, idx) != idx:
                return False
    return True


def verify_ud_property(book: PermCodeBook) -> bool:
    """True iff the radius-t unstable-deletion balls are pairwise disjoint."""
    seen: dict[tuple[int, ...], int] = {}
    for idx, sigma in enumerate(book.codewords):
        for pi in unstable_deletion_ball(sigma, book.t):
            if seen.setdefault(pi.images, idx) != idx:
                return False
    return True


def _is_subsequence(short: tuple[int, ...], long: tuple[int, ...]) -> bool:
    it = iter(long)
    return all(s in it for s in short)


def sd_decode(book: PermCodeBook, received: Word) -> Permutation:
    """The unique codeword whose radius-t stable-deletion ball contains the
    received word; ball membership is a subsequence test."""
    if len(received) < book.n - book.t:
        raise NotFound(f"received length {len(received)} is below n - t = {book.n - book.t}")
    hits = [s for s in book.codewords if _is_subsequence(received.symbols, s.images)]
    if not hits:
        raise NotFound("no codeword ball contains the received word")
    if len(hits) > 1:
        raise Ambiguous("multiple codeword balls contain the received word")
    return hits[0]


def ud_decode(book: PermCodeBook, received: Permutation) -> Permutation:
    """The unique codeword reaching the received permutation by <= t unstable deletions."""
    missing = book.n - len(received)
    if missing < 0 or missing > book.t:
        raise NotFound(f"received length {len(received)} is outside [n - t, n]")
    hits = []
    for sigma in book.codewords:
        if any(
            apply_unstable_deletions(sigma, DeletionPattern(positions, book.n)) == received
            for positions in combinations(range(1, book.n + 1), missing)
        ):
            hits.append(sigma)
    if not hits:
        raise NotFound("no codeword ball contains the received permutation")
    if len(hits) > 1:
        raise Ambiguous("multiple codeword balls contain the received permutation")
    return hits[0]


def reference_size_bound(n: int, t: int) -> Fraction:
    """Literature size target n!/(2n)^(3t-1) for stable-deletion permutation codes,
    reported for comparison only; the greedy scan makes no promise against it."""
    if t < 1:
        raise ValueError("the reference bound applies to t >= 1")
    return Fraction(math.factorial(n), (2 * n) ** (3 * t - 1))
