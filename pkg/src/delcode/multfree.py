"""Multiplicity-free codewords as (symbol set, permutation) pairs: the
decomposition bijection, code assembly from a set code and a permutation code,
and the end-to-end deletion decoder.

Deleting symbols from a multiplicity-free word removes the same elements from
its symbol set and performs stable deletions on its rank permutation, so the
two component decoders can be run one after the other and the word reassembled.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import (
    Ambiguous,
    InputTooShort,
    NoSolution,
    NotFound,
    PermDecodeFailed,
    SetDecodeFailed,
    SymbolNotInSet,
    WeightTooLow,
)
from .model import Permutation, SymbolSet, Word
from .permcode import PermCodeBook, sd_decode, ud_decode
from .vtcode import VTParams, bitword_to_subset, enumerate_class, set_decode


def induced_set(x: Word) -> SymbolSet:
    """The symbols of x as a set; rejects repeated symbols."""
    return SymbolSet.from_symbols(x.symbols, x.alphabet_size)


def induced_permutation(x: Word) -> Permutation:
    """Rank sequence of x: entry k is the rank of x_k among x's symbols (1 = smallest)."""
    if len(set(x.symbols)) != len(x.symbols):
        raise ValueError("duplicate symbol in the input word")
    rank = {v: j for j, v in enumerate(sorted(x.symbols), start=1)}
    return Permutation(tuple(rank[v] for v in x.symbols))


def psi(subset: SymbolSet, sigma: Permutation) -> Word:
    """Reassemble the word whose k-th entry is the sigma_k-th smallest element of the set."""
    ordered = subset.symbols()
    if len(ordered) != len(sigma):
        raise ValueError(f"set of size {len(ordered)} paired with a length-{len(sigma)} permutation")
    return Word(tuple(ordered[s - 1] for s in sigma.images), subset.alphabet_size, True)


def symbol_ranks(subset: SymbolSet, y: Word) -> Word:
    """Rewrite y symbol-by-symbol as 1-based ranks inside the set.

    When the set is the decoded original and y the received word, this equals
    the stable deletion of the original word's rank permutation.
    """
    rank = {v: j for j, v in enumerate(subset.symbols(), start=1)}
    ranks = []
    for s in y.symbols:
        if s not in rank:
            raise SymbolNotInSet(f"received symbol {s} is not in the recovered set")
        ranks.append(rank[s])
    return Word(tuple(ranks), subset.cardinality + 1, multiplicity_free=True)


@dataclass(frozen=True)
class SetCode:
    """A deletion-correcting family of n-subsets: either one syndrome class
    (decoded algebraically) or an explicit list (decoded by unique-superset
    search).  Explicit lists are validated pairwise at construction."""

    q: int
    n: int
    t: int
    vt: VTParams | None = None
    sets: tuple[SymbolSet, ...] | None = None

    def __post_init__(self):
        if (self.vt is None) == (self.sets is None):
            raise ValueError("exactly one of vt params or an explicit set list is required")
        if self.vt is not None:
            if (self.vt.q, self.vt.n, self.vt.t) != (self.q, self.n, self.t):
                raise ValueError("vt params disagree with the set code's (q, n, t)")
        else:
            object.__setattr__(self, "sets", tuple(self.sets))
            for s in self.sets:
                if s.alphabet_size != self.q or s.cardinality != self.n:
                    raise ValueError("explicit set with the wrong alphabet or cardinality")
            members = [s.members for s in self.sets]
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    # sharing an (n - t)-subset would make some deletion ambiguous
                    if (a & b).bit_count() > self.n - self.t - 1:
                        raise ValueError("explicit sets too close to correct t deletions")

    @classmethod
    def from_vt(cls, params: VTParams) -> "SetCode":
        return cls(params.q, params.n, params.t, vt=params)

    @classmethod
    def explicit(cls, sets, t: int) -> "SetCode":
        sets = tuple(sets)
        if not sets:
            raise ValueError("explicit set code must be nonempty")
        return cls(sets[0].alphabet_size, sets[0].cardinality, t, sets=sets)

    def codewords(self) -> tuple[SymbolSet, ...]:
        return _materialize_sets(self)

    def decode(self, survivors: SymbolSet) -> SymbolSet:
        if survivors.alphabet_size != self.q:
            raise ValueError(f"alphabet size {survivors.alphabet_size} differs from q = {self.q}")
        if self.vt is not None:
            try:
                return set_decode(survivors, self.vt)
            except (NoSolution, WeightTooLow) as exc:
                raise SetDecodeFailed(str(exc)) from exc
        if survivors.cardinality < self.n - self.t:
            raise SetDecodeFailed(
                f"{survivors.cardinality} surviving elements is below n - t = {self.n - self.t}"
            )
        hits = [s for s in self.sets if survivors.issubset(s)]
        if len(hits) != 1:
            raise SetDecodeFailed(f"{len(hits)} candidate supersets, expected exactly one")
        return hits[0]

    def to_json_dict(self) -> dict:
        if self.vt is not None:
            return self.vt.to_json_dict()
        return {
            "q": self.q,
            "n": self.n,
            "t": self.t,
            "sets": [list(s.symbols()) for s in self.sets],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SetCode":
        if "sets" in data:
            sets = tuple(SymbolSet.from_symbols(s, data["q"]) for s in data["sets"])
            return cls(data["q"], data["n"], data["t"], sets=sets)
        return cls.from_vt(VTParams.from_json_dict(data))


@lru_cache(maxsize=None)
def _materialize_sets(code: SetCode) -> tuple[SymbolSet, ...]:
    if code.sets is not None:
        return tuple(sorted(code.sets, key=lambda s: s.symbols()))
    words = enumerate_class(code.q, code.n, code.t, code.vt.p, code.vt.a)
    return tuple(sorted((bitword_to_subset(w) for w in words), key=lambda s: s.symbols()))


@dataclass(frozen=True)
class MultFreeCodeSpec:
    """A composed multiplicity-free code: set code times permutation code."""

    q: int
    n: int
    t: int
    mode: str  # "stable" or "unstable"
    set_code: SetCode
    perm_code: PermCodeBook

    def __post_init__(self):
        if self.mode not in ("stable", "unstable"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.q < self.n:
            raise ValueError(f"alphabet size q={self.q} below code length n={self.n}")
        if (self.set_code.q, self.set_code.n, self.set_code.t) != (self.q, self.n, self.t):
            raise ValueError("set code disagrees with the spec's (q, n, t)")
        if (self.perm_code.n, self.perm_code.t) != (self.n, self.t):
            raise ValueError("permutation code disagrees with the spec's (n, t)")
        if self.mode == "unstable" and self.t != 1:
            raise ValueError("unstable mode only corrects a single deletion (t = 1)")

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "t": self.t,
            "mode": self.mode,
            "set_code": self.set_code.to_json_dict(),
            "perm_code": self.perm_code.to_json_dict(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MultFreeCodeSpec":
        return cls(
            data["q"],
            data["n"],
            data["t"],
            data["mode"],
            SetCode.from_json_dict(data["set_code"]),
            PermCodeBook.from_json_dict(data["perm_code"]),
        )


def save_spec(spec: MultFreeCodeSpec, path) -> None:
    with open(path, "w") as fh:
        json.dump(spec.to_json_dict(), fh, sort_keys=True)
        fh.write("\n")


def load_spec(path) -> MultFreeCodeSpec:
    with open(path) as fh:
        return MultFreeCodeSpec.from_json_dict(json.load(fh))


def set_codewords(spec: MultFreeCodeSpec) -> tuple[SymbolSet, ...]:
    return spec.set_code.codewords()


def perm_codewords(spec: MultFreeCodeSpec) -> tuple[Permutation, ...]:
    return tuple(sorted(spec.perm_code.codewords, key=lambda s: s.images))


def code_size(spec: MultFreeCodeSpec) -> int:
    return len(set_codewords(spec)) * len(perm_codewords(spec))


def build_code(spec: MultFreeCodeSpec) -> Iterator[Word]:
    """Yield every codeword, outer loop over sets and inner loop over
    permutations, both in lexicographic order."""
    perms = perm_codewords(spec)
    for subset in set_codewords(spec):
        for sigma in perms:
            yield psi(subset, sigma)


def encode_index(spec: MultFreeCodeSpec, index: int) -> Word:
    """Enumeration-order indexing: index = set_index * |perm code| + perm_index."""
    total = code_size(spec)
    if not 0 <= index < total:
        raise IndexError(f"index {index} outside [0, {total})")
    perms = perm_codewords(spec)
    i_set, i_perm = divmod(index, len(perms))
    return psi(set_codewords(spec)[i_set], perms[i_perm])


@dataclass(frozen=True)
class DecodeSteps:
    """Intermediate decoder state, kept for inspection and tests."""

    recovered_set: SymbolSet
    tau: Word | None
    reduced_perm: Permutation | None
    sigma: Permutation
    codeword: Word


def decode_steps(spec: MultFreeCodeSpec, y: Word) -> DecodeSteps:
    """Recover a codeword from at most t deletions, keeping intermediates.

    Stable mode: decode the surviving symbol set, rewrite the received word as
    ranks within the recovered set (the stable deletion of the original rank
    permutation), decode that in the permutation code, and reassemble.
    Unstable mode decodes the received word's own induced permutation instead.
    """
    if len(y) > spec.n:
        raise ValueError(f"received length {len(y)} exceeds the code length {spec.n}")
    if len(y) < spec.n - spec.t:
        raise InputTooShort(f"received length {len(y)} is below n - t = {spec.n - spec.t}")
    recovered = spec.set_code.decode(induced_set(y))
    if spec.mode == "stable":
        tau = symbol_ranks(recovered, y)
        try:
            sigma = sd_decode(spec.perm_code, tau)
        except (NotFound, Ambiguous) as exc:
            raise PermDecodeFailed(str(exc)) from exc
        return DecodeSteps(recovered, tau, None, sigma, psi(recovered, sigma))
    reduced = induced_permutation(y)
    try:
        sigma = ud_decode(spec.perm_code, reduced)
    except (NotFound, Ambiguous) as exc:
        raise PermDecodeFailed(str(exc)) from exc
    return DecodeSteps(recovered, None, reduced, sigma, psi(recovered, sigma))


def decode(spec: MultFreeCodeSpec, y: Word) -> Word:
    """Recover the unique codeword that y was obtained from by at most t deletions."""
    return decode_steps(spec, y).codeword
