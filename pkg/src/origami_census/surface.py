"""Square-tiled surfaces as monodromy pairs.

A surface is built from d unit squares: the right edge of square i is
glued to the left edge of square alpha(i), the top edge of square i to
the bottom edge of square beta(i).  The pair (alpha, beta) determines
the surface up to simultaneous relabeling of the squares, which is the
equivalence realized by :func:`canonical_key`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .perm import (
    CycleType,
    DegreeMismatchError,
    Perm,
    commutator,
    cycles_to_str,
    is_transitive,
)


class OrigamiError(ValueError):
    """Base class for invalid monodromy pairs."""


class DisconnectedCoverError(OrigamiError):
    """<alpha, beta> does not act transitively: the cover is disconnected."""


class TrivialStratumError(OrigamiError):
    """The branching profile has genus < 2 (nothing to study)."""


@dataclass(frozen=True)
class StratumSignature:
    """Zero multiplicities (m_1,...,m_k), descending, with sum 2g-2."""

    mu: tuple[int, ...]

    def __post_init__(self):
        if not self.mu:
            raise TrivialStratumError("empty zero profile (genus 1)")
        if any(m < 1 for m in self.mu):
            raise ValueError(f"zero orders must be positive: {self.mu}")
        if list(self.mu) != sorted(self.mu, reverse=True):
            raise ValueError(f"mu must be descending: {self.mu}")
        if sum(self.mu) % 2:
            raise ValueError(f"sum of mu must be even: {self.mu}")

    @classmethod
    def from_parts(cls, parts) -> StratumSignature:
        return cls(tuple(sorted(parts, reverse=True)))

    @property
    def genus(self) -> int:
        return sum(self.mu) // 2 + 1

    @property
    def kappa(self) -> Fraction:
        """The stratum constant (2g-2 + sum m/(m+1)) / 12."""
        total = Fraction(2 * self.genus - 2)
        for m in self.mu:
            total += Fraction(m, m + 1)
        return total / 12

    def all_even(self) -> bool:
        return all(m % 2 == 0 for m in self.mu)

    def __str__(self) -> str:
        return "(" + ",".join(str(m) for m in self.mu) + ")"


def genus_of(commutator_type: CycleType) -> int:
    """Genus of the cover whose branching has the given cycle type.

    Total ramification sum(c_j - 1) is even for genuine commutators.
    """
    ram = sum(c - 1 for c in commutator_type.parts)
    assert ram % 2 == 0, f"odd total ramification {ram}: not a commutator type"
    return ram // 2 + 1


def stratum_of(commutator_type: CycleType) -> StratumSignature:
    """Zero profile read off the commutator: parts c >= 2 give zeros c-1."""
    mu = tuple(c - 1 for c in commutator_type.parts if c >= 2)
    if not mu:
        raise TrivialStratumError(
            "commutator is trivial: the cover is unramified (genus 1)"
        )
    return StratumSignature(mu)


@dataclass(frozen=True)
class Origami:
    """A validated transitive pair with its derived invariants."""

    alpha: Perm
    beta: Perm
    commutator_type: CycleType
    stratum: StratumSignature

    @property
    def degree(self) -> int:
        return self.alpha.degree

    @property
    def genus(self) -> int:
        return self.stratum.genus

    @property
    def weight(self) -> Fraction:
        return weight_of(self.alpha)

    def __str__(self) -> str:
        return f"{self.alpha}\n{self.beta}"


def make_origami(alpha: Perm, beta: Perm) -> Origami:
    """Validate a monodromy pair and derive its stratum data."""
    if alpha.degree != beta.degree:
        raise DegreeMismatchError(
            f"degree mismatch: {alpha.degree} vs {beta.degree}"
        )
    if not is_transitive(alpha, beta):
        raise DisconnectedCoverError(
            "disconnected cover: <alpha, beta> is not transitive"
        )
    ctype = commutator(alpha, beta).cycle_type()
    stratum = stratum_of(ctype)
    return Origami(alpha, beta, ctype, stratum)


def horizontal_cylinders(o: Origami) -> list[tuple[int, int]]:
    """(width, height) of each maximal horizontal cylinder.

    Every cycle of alpha of length w is one cylinder of width w and
    height 1; widths sum to the degree.
    """
    return [(len(c), 1) for c in o.alpha.cycles()]


def weight_of(alpha: Perm) -> Fraction:
    """Sum of 1/width over the horizontal cylinders (cycles of alpha)."""
    total = Fraction(0)
    for c in alpha.cycles():
        total += Fraction(1, len(c))
    return total


def canonical_form(alpha: Perm, beta: Perm) -> tuple[Perm, Perm]:
    """Least relabeling of a transitive pair.

    For every start square s, relabel squares in first-discovery order
    of a breadth-first walk that follows alpha then beta from each
    square, and keep the lexicographically least relabeled pair.  The
    result is a class invariant: conjugate pairs give equal forms,
    distinct classes give distinct forms.
    """
    d = alpha.degree
    aw = alpha.word
    bw = beta.word
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for start in range(d):
        relabel = [-1] * d
        relabel[start] = 0
        order = [start]
        n_seen = 1
        for x in order:
            for y in (aw[x], bw[x]):
                if relabel[y] < 0:
                    relabel[y] = n_seen
                    n_seen += 1
                    order.append(y)
        if n_seen != d:
            raise DisconnectedCoverError(
                "disconnected cover: breadth-first walk did not reach "
                "every square"
            )
        na = [0] * d
        nb = [0] * d
        for x in range(d):
            na[relabel[x]] = relabel[aw[x]]
            nb[relabel[x]] = relabel[bw[x]]
        cand = (tuple(na), tuple(nb))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return Perm(best[0]), Perm(best[1])


def encode_pair(alpha: Perm, beta: Perm) -> bytes:
    """Raw byte encoding of a pair of words (no relabeling)."""
    if alpha.degree < 256:
        return bytes(alpha.word) + bytes(beta.word)
    out = bytearray()
    for x in alpha.word + beta.word:
        out += x.to_bytes(4, "big")
    return bytes(out)


def canonical_key(alpha: Perm, beta: Perm) -> bytes:
    """Byte key identifying the simultaneous-conjugation class."""
    a, b = canonical_form(alpha, beta)
    return encode_pair(a, b)


def origami_key(o: Origami) -> bytes:
    return canonical_key(o.alpha, o.beta)


def to_record(o: Origami) -> dict:
    """JSON-able record with 1-based cycles in canonical cycle order."""
    return {
        "degree": o.degree,
        "alpha": [list(c) for c in o.alpha.cycles()],
        "beta": [list(c) for c in o.beta.cycles()],
    }


def from_record(rec: dict) -> Origami:
    """Inverse of :func:`to_record`; validates the pair."""
    d = rec["degree"]
    perms = []
    for field in ("alpha", "beta"):
        word = list(range(d))
        seen: set[int] = set()
        for cyc in rec[field]:
            for x in cyc:
                if not isinstance(x, int) or x < 1 or x > d or x in seen:
                    raise ValueError(f"bad {field} cycles in record: {rec!r}")
                seen.add(x)
            for k in range(len(cyc)):
                word[cyc[k] - 1] = cyc[(k + 1) % len(cyc)] - 1
        if len(seen) != d:
            raise ValueError(f"{field} cycles do not cover 1..{d}: {rec!r}")
        perms.append(Perm(tuple(word)))
    return make_origami(perms[0], perms[1])


