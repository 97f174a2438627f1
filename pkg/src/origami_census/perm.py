"""Permutations on the letters 1..d and conjugacy-class utilities.

Internally a permutation is a word: a tuple ``w`` of length d with
``w[i]`` the 0-based image of the 0-based letter ``i``.  All I/O
(cycle strings, JSON records) is 1-based.

Composition convention: ``compose(p, q)`` applies ``q`` first, then
``p``.  Everything downstream (commutators, twist actions) relies on
this convention, so do not change it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class DegreeMismatchError(ValueError):
    """Raised when combining permutations of different degrees."""


@dataclass(frozen=True)
class Perm:
    """A permutation of {1..d}, stored as a 0-based word."""

    word: tuple[int, ...]

    def __post_init__(self):
        w = self.word
        if sorted(w) != list(range(len(w))):
            raise ValueError(f"not a permutation word: {w!r}")

    @property
    def degree(self) -> int:
        return len(self.word)

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return cls(tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Perm:
        """Build from a 1-based image sequence (images[i] = image of i+1)."""
        return cls(tuple(x - 1 for x in images))

    def images(self) -> tuple[int, ...]:
        """1-based image sequence."""
        return tuple(x + 1 for x in self.word)

    def __call__(self, letter: int) -> int:
        """Image of a 1-based letter."""
        return self.word[letter - 1] + 1

    def __mul__(self, other: Perm) -> Perm:
        return compose(self, other)

    def inverse(self) -> Perm:
        inv = [0] * len(self.word)
        for i, j in enumerate(self.word):
            inv[j] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.word))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles as 1-based tuples, fixed points included.

        Cycles are sorted by minimal element and rotated to start at it.
        """
        seen = [False] * len(self.word)
        out = []
        for i in range(len(self.word)):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self.word[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        return CycleType.from_parts(
            len(self.word), [len(c) for c in self.cycles()]
        )

    def __str__(self) -> str:
        return cycles_to_str(self.cycles())

    def __repr__(self) -> str:
        return f"Perm({str(self)!r})"


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths of a degree-d permutation, descending."""

    degree: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if sum(self.parts) != self.degree:
            raise ValueError(
                f"parts {self.parts} do not sum to degree {self.degree}"
            )
        if any(p < 1 for p in self.parts):
            raise ValueError(f"non-positive part in {self.parts}")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"parts not descending: {self.parts}")

    @classmethod
    def from_parts(cls, degree: int, parts: Iterable[int]) -> CycleType:
        return cls(degree, tuple(sorted(parts, reverse=True)))

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: the result maps i to p(q(i))."""
    if p.degree != q.degree:
        raise DegreeMismatchError(
            f"degree mismatch: {p.degree} vs {q.degree}"
        )
    qw = q.word
    pw = p.word
    return Perm(tuple(pw[qw[i]] for i in range(len(pw))))


def commutator(alpha: Perm, beta: Perm) -> Perm:
    """beta^-1 * alpha^-1 * beta * alpha (rightmost factor acts first)."""
    if alpha.degree != beta.degree:
        raise DegreeMismatchError(
            f"degree mismatch: {alpha.degree} vs {beta.degree}"
        )
    aw = alpha.word
    bw = beta.word
    ai = alpha.inverse().word
    bi = beta.inverse().word
    return Perm(tuple(bi[ai[bw[aw[i]]]] for i in range(len(aw))))


def is_transitive(alpha: Perm, beta: Perm) -> bool:
    """True iff <alpha, beta> has a single orbit on the letters."""
    if alpha.degree != beta.degree:
        raise DegreeMismatchError(
            f"degree mismatch: {alpha.degree} vs {beta.degree}"
        )
    d = alpha.degree
    if d == 0:
        return True
    parent = list(range(d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    n_components = d
    for w in (alpha.word, beta.word):
        for i in range(d):
            ri, rj = find(i), find(w[i])
            if ri != rj:
                parent[ri] = rj
                n_components -= 1
    return n_components == 1


def class_representative(t: CycleType) -> Perm:
    """Canonical member of a conjugacy class: consecutive letter blocks.

    [4,1] -> (1,2,3,4)(5), [3,2] -> (1,2,3)(4,5).
    """
    word = list(range(t.degree))
    start = 0
    for p in t.parts:
        for k in range(p - 1):
            word[start + k] = start + k + 1
        word[start + p - 1] = start
        start += p
    return Perm(tuple(word))


def centralizer_generators(p: Perm) -> list[Perm]:
    """A generating set of the centralizer of p in S_d.

    One rotation per cycle (the cycle itself) plus a pointwise swap of
    each adjacent pair of equal-length cycles.
    """
    d = p.degree
    by_length: dict[int, list[tuple[int, ...]]] = {}
    for cyc in p.cycles():
        by_length.setdefault(len(cyc), []).append(cyc)

    gens: list[Perm] = []
    for length in sorted(by_length):
        cycs = sorted(by_length[length])
        if length > 1:
            for cyc in cycs:
                word = list(range(d))
                for k in range(length):
                    word[cyc[k] - 1] = cyc[(k + 1) % length] - 1
                gens.append(Perm(tuple(word)))
        for c1, c2 in zip(cycs, cycs[1:]):
            word = list(range(d))
            for a, b in zip(c1, c2):
                word[a - 1] = b - 1
                word[b - 1] = a - 1
            gens.append(Perm(tuple(word)))
    return gens


def conjugate(p: Perm, tau: Perm) -> Perm:
    """tau * p * tau^-1."""
    if p.degree != tau.degree:
        raise DegreeMismatchError(
            f"degree mismatch: {p.degree} vs {tau.degree}"
        )
    tw = tau.word
    pw = p.word
    word = [0] * len(pw)
    for i in range(len(pw)):
        word[tw[i]] = tw[pw[i]]
    return Perm(tuple(word))


def cycles_to_str(cycles: Iterable[tuple[int, ...]]) -> str:
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


def perm_from_cycles(text: str) -> Perm:
    """Parse cycle notation like "(1,2,3,4)(5)".

    Every letter 1..d must appear exactly once; fixed points are
    written as singleton cycles.  Round-trips with str(Perm).
    """
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty cycle string")
    cycles: list[list[int]] = []
    seen: set[int] = set()
    pos = 0
    while pos < len(text):
        if text[pos] != "(":
            raise ValueError(f"expected '(' at position {pos} in {text!r}")
        end = text.find(")", pos)
        if end < 0:
            raise ValueError(f"unclosed cycle in {text!r}")
        body = text[pos + 1:end]
        if not body:
            raise ValueError(f"empty cycle in {text!r}")
        try:
            letters = [int(x) for x in body.split(",")]
        except ValueError:
            raise ValueError(f"bad letter in cycle {body!r}") from None
        for x in letters:
            if x < 1:
                raise ValueError(f"letters must be positive, got {x}")
            if x in seen:
                raise ValueError(f"letter {x} repeated in {text!r}")
            seen.add(x)
        cycles.append(letters)
        pos = end + 1
    degree = max(seen)
    if seen != set(range(1, degree + 1)):
        missing = sorted(set(range(1, degree + 1)) - seen)
        raise ValueError(
            f"letters {missing} missing; write fixed points as (i)"
        )
    word = list(range(degree))
    for cyc in cycles:
        for k in range(len(cyc)):
            word[cyc[k] - 1] = cyc[(k + 1) % len(cyc)] - 1
    return Perm(tuple(word))


def all_perms(degree: int) -> Iterator[Perm]:
    """All of S_d in lexicographic word order."""
    from itertools import permutations

    for w in permutations(range(degree)):
        yield Perm(w)
