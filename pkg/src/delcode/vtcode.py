"""Constant-weight binary codes cut out by weighted power-sum syndromes, their
decoder for asymmetric 1->0 errors, and the bridge between symbol sets and
length-q bitwords.

Bit positions are 1-based to match the syndrome weights; alphabet symbol s sits
at position s + 1, so that symbol 0 stays visible to every syndrome row.
"""

import math
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import NoSolution, WeightTooLow
from .guards import CLASS_ENUM_CAP, check_enumerable
from .model import SymbolSet
from .modular import Modulus, locator_roots, power_sums_to_elementary

BitWord = tuple[int, ...]


@dataclass(frozen=True)
class SyndromeVector:
    """t weighted power sums, reduced mod p."""

    residues: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues", tuple(self.residues))

    def __len__(self) -> int:
        return len(self.residues)


@dataclass(frozen=True)
class VTParams:
    """Parameters of one syndrome class: block length q, weight n, error budget t,
    prime modulus p and the class label a."""

    q: int
    n: int
    t: int
    p: Modulus
    a: SyndromeVector

    def __post_init__(self):
        if not 0 <= self.n <= self.q:
            raise ValueError(f"need 0 <= n <= q, got n={self.n}, q={self.q}")
        if not self.q < self.p.p <= 2 * self.q:
            raise ValueError(f"need q < p <= 2q, got q={self.q}, p={self.p.p}")
        if self.t < 1:
            raise ValueError("error budget t must be at least 1")
        if len(self.a) != self.t:
            raise ValueError(f"syndrome vector has {len(self.a)} entries, expected t={self.t}")
        for r in self.a.residues:
            if not 0 <= r < self.p.p:
                raise ValueError(f"residue {r} outside [0, {self.p.p - 1}]")

    def to_json_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "t": self.t, "p": self.p.p, "a": list(self.a.residues)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "VTParams":
        return cls(
            data["q"], data["n"], data["t"], Modulus(data["p"]), SyndromeVector(tuple(data["a"]))
        )


def vt_syndrome(x: Sequence[int], t: int, p: Modulus) -> SyndromeVector:
    """Residue k is sum_i i^k x_i mod p, with 1-based positions."""
    if len(x) >= p.p:
        raise ValueError(f"modulus {p.p} must exceed the word length {len(x)}")
    ones = [i for i, bit in enumerate(x, start=1) if bit]
    return SyndromeVector(tuple(sum(pow(i, k, p.p) for i in ones) % p.p for k in range(1, t + 1)))


def is_codeword(x: Sequence[int], params: VTParams) -> bool:
    if len(x) != params.q:
        raise ValueError(f"word length {len(x)} differs from block length {params.q}")
    return sum(x) == params.n and vt_syndrome(x, params.t, params.p) == params.a


def decode_asymmetric(y: Sequence[int], params: VTParams) -> BitWord:
    """Restore up to t ones that were flipped to zero.

    The first e = n - wt(y) syndrome deficits are exactly the power sums of the
    lost positions.  Newton's identities convert them into elementary symmetric
    functions, and the locator polynomial built from those vanishes precisely at
    the lost positions, which are searched among the zero positions of y.  Any
    remaining syndrome rows act as a consistency check through the final
    membership test.
    """
    if len(y) != params.q:
        raise ValueError(f"word length {len(y)} differs from block length {params.q}")
    weight = sum(y)
    e = params.n - weight
    if e < 0:
        raise NoSolution(f"weight {weight} exceeds the code weight {params.n}")
    if e > params.t:
        raise WeightTooLow(f"weight {weight} is below n - t = {params.n - params.t}")
    if e == 0:
        if not is_codeword(y, params):
            raise NoSolution("full-weight word is not in the code")
        return tuple(y)

    p = params.p.p
    observed = vt_syndrome(y, params.t, params.p)
    deficits = [(a_k - s_k) % p for a_k, s_k in zip(params.a.residues, observed.residues)]
    elementary = power_sums_to_elementary(deficits[:e], params.p)
    candidates = [i for i, bit in enumerate(y, start=1) if not bit]
    roots = locator_roots(elementary, candidates, params.p)
    if len(roots) != e:
        raise NoSolution(f"locator polynomial has {len(roots)} roots among zeros, expected {e}")
    repaired = list(y)
    for i in roots:
        repaired[i - 1] = 1
    repaired_word = tuple(repaired)
    if not is_codeword(repaired_word, params):
        raise NoSolution("repaired word fails the full syndrome check")
    return repaired_word


def _positions_to_bitword(positions: Sequence[int], q: int) -> BitWord:
    bits = [0] * q
    for i in positions:
        bits[i - 1] = 1
    return tuple(bits)


def _pow_table(q: int, t: int, p: int) -> list[list[int]]:
    return [[pow(i, k, p) for i in range(q + 1)] for k in range(t + 1)]


def _weight_class(q: int, n: int) -> Iterator[tuple[int, ...]]:
    check_enumerable(math.comb(q, n), CLASS_ENUM_CAP, "weight-class enumeration")
    return combinations(range(1, q + 1), n)


def enumerate_class(q: int, n: int, t: int, p: Modulus, a: SyndromeVector) -> list[BitWord]:
    """All weight-n words of length q with syndrome a, in lexicographic order."""
    pows = _pow_table(q, t, p.p)
    target = tuple(a.residues)
    hits = []
    for positions in _weight_class(q, n):
        syn = tuple(sum(pows[k][i] for i in positions) % p.p for k in range(1, t + 1))
        if syn == target:
            hits.append(_positions_to_bitword(positions, q))
    hits.sort()
    return hits


def class_sizes(q: int, n: int, t: int, p: Modulus) -> dict[tuple[int, ...], int]:
    """Census of the syndrome partition: class label -> number of weight-n words."""
    pows = _pow_table(q, t, p.p)
    counts: Counter = Counter()
    for positions in _weight_class(q, n):
        counts[tuple(sum(pows[k][i] for i in positions) % p.p for k in range(1, t + 1))] += 1
    return dict(counts)


def best_class(q: int, n: int, t: int, p: Modulus) -> tuple[SyndromeVector, int]:
    """Largest syndrome class; ties go to the lexicographically smallest label."""
    counts = class_sizes(q, n, t, p)
    label, size = min(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    assert size >= -(-math.comb(q, n) // p.p**t)  # pigeonhole over p^t classes
    return SyndromeVector(label), size


def subset_to_bitword(subset: SymbolSet) -> BitWord:
    """Symbol s becomes a one at 1-based position s + 1."""
    return tuple(1 if subset.members >> i & 1 else 0 for i in range(subset.alphabet_size))


def bitword_to_subset(x: Sequence[int]) -> SymbolSet:
    mask = 0
    for i, bit in enumerate(x):
        if bit:
            mask |= 1 << i
    return SymbolSet(mask, len(x))


def set_decode(subset: SymbolSet, params: VTParams) -> SymbolSet:
    """Recover the unique codeword-set containing the survivors; element deletions
    are 1->0 flips under the bitword correspondence."""
    if subset.alphabet_size != params.q:
        raise ValueError(f"alphabet size {subset.alphabet_size} differs from q = {params.q}")
    return bitword_to_subset(decode_asymmetric(subset_to_bitword(subset), params))


def format_bitword(x: Sequence[int]) -> str:
    """One streamable line per word: 0/1 characters, position 1 leftmost."""
    return "".join("1" if bit else "0" for bit in x)


def parse_bitword(line: str) -> BitWord:
    stripped = line.strip()
    if stripped.strip("01"):
        raise ValueError(f"bitword line contains non-binary characters: {line!r}")
    return tuple(int(ch) for ch in stripped)


def write_bitwords(fh, words) -> int:
    """Stream words as one bitword line each; returns the count written."""
    count = 0
    for word in words:
        fh.write(format_bitword(word))
        fh.write("\n")
        count += 1
    return count


def read_bitwords(fh) -> Iterator[BitWord]:
    for line in fh:
        if line.strip():
            yield parse_bitword(line)
