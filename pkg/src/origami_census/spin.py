"""Spin-structure parity of a square-tiled surface (all zeros even).

The parity is the Arf invariant of the quadratic form q(c) = index(c)+1
on first homology over GF(2), where index is the turning number of a
smooth closed curve avoiding the zeros.  The computation runs on the
graph through square centers: one node per square, one edge per glued
square side.

* Homology generators are the fundamental cycles of a spanning tree.
  Such a cycle visits each square at most once, so its center path is
  embedded and q = turning/4 + 1 needs no self-crossing correction.
* The intersection number of two classes pairs the edge crossings of
  one center path against a homologous copy of the other pushed onto
  the square sides (a center step and the matching boundary step
  cobound a strip of half-squares).  Crossings then happen only at
  edge midpoints, one per shared coordinate.
* A greedy symplectic reduction over GF(2) extracts g hyperbolic
  pairs; the form values follow the quadratic law q(x+y)=q(x)+q(y)+x.y
  along the way.  Face boundaries (one per vertex of the surface) are
  checked to lie in the radical with q = 0, which is exactly the
  condition for q to descend to homology.
"""
from __future__ import annotations

from .surface import Origami

R, U, L, D = 0, 1, 2, 3
_OPPOSITE = {R: L, L: R, U: D, D: U}


class ParityUndefinedError(ValueError):
    """Spin parity is only defined when every zero has even order."""


def spin_parity(o: Origami) -> int:
    """Arf invariant of the surface: 0 = even, 1 = odd.

    Raises :class:`ParityUndefinedError` on strata with an odd zero.
    """
    if not o.stratum.all_even():
        raise ParityUndefinedError(
            f"parity undefined for this stratum: mu = {o.stratum} has an odd zero"
        )
    walks = _center_walks(o)
    q = [_walk_turning_q(w) for w in walks]
    cross = [_walk_cross(w, o) for w in walks]
    skel = [_walk_skeleton_copy(w, o) for w in walks]

    n = len(walks)
    pairing = [[_dot(cross[i], skel[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        assert pairing[i][i] == 0, "self-pairing must vanish on a surface"
        for j in range(i):
            assert pairing[i][j] == pairing[j][i], "pairing must be symmetric"

    _check_descends(o, walks, cross, pairing, q)
    return _arf(pairing, q, genus=o.genus)


def _center_walks(o: Origami) -> list[list[tuple[int, int]]]:
    """Fundamental cycles of a breadth-first spanning tree.

    Each walk is a closed list of (square, move) steps; squares along a
    walk are pairwise distinct.
    """
    d = o.degree
    aw, bw = o.alpha.word, o.beta.word
    ai, bi = o.alpha.inverse().word, o.beta.inverse().word

    def neighbors(x: int):
        # (move, target, edge id); edge ids: ("a", i) joins i to alpha(i),
        # ("b", i) joins i to beta(i)
        yield R, aw[x], ("a", x)
        yield U, bw[x], ("b", x)
        yield L, ai[x], ("a", ai[x])
        yield D, bi[x], ("b", bi[x])

    parent = [-1] * d
    parent_move = [-1] * d
    depth = [0] * d
    tree_edges: set[tuple[str, int]] = set()
    seen = [False] * d
    seen[0] = True
    queue = [0]
    for x in queue:
        for move, y, edge in neighbors(x):
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                parent_move[y] = move
                depth[y] = depth[x] + 1
                tree_edges.add(edge)
                queue.append(y)
    assert all(seen), "pair is not transitive"

    def tree_path(src: int, dst: int) -> list[tuple[int, int]]:
        """Moves walking from src to dst inside the tree."""
        up_src: list[tuple[int, int]] = []
        down_dst: list[tuple[int, int]] = []
        x, y = src, dst
        while depth[x] > depth[y]:
            up_src.append((x, _OPPOSITE[parent_move[x]]))
            x = parent[x]
        while depth[y] > depth[x]:
            down_dst.append((parent[y], parent_move[y]))
            y = parent[y]
        while x != y:
            up_src.append((x, _OPPOSITE[parent_move[x]]))
            x = parent[x]
            down_dst.append((parent[y], parent_move[y]))
            y = parent[y]
        return up_src + down_dst[::-1]

    walks = []
    for kind, i in [("a", i) for i in range(d)] + [("b", i) for i in range(d)]:
        if (kind, i) in tree_edges:
            continue
        if kind == "a":
            first, far = (i, R), aw[i]
        else:
            first, far = (i, U), bw[i]
        walks.append([first] + tree_path(far, i))
    assert len(walks) == d + 1
    return walks


def _walk_turning_q(walk: list[tuple[int, int]]) -> int:
    """q of an embedded closed center path: turning/4 + 1 mod 2."""
    turn = 0
    for (_, m1), (_, m2) in zip(walk, walk[1:] + walk[:1]):
        delta = (m2 - m1) % 4
        assert delta != 2, "backtracking step in a fundamental cycle"
        turn += 1 if delta == 1 else (-1 if delta == 3 else 0)
    assert turn % 4 == 0, f"turning {turn} of a closed path not divisible by 4"
    return (turn // 4 + 1) % 2


def _walk_cross(walk: list[tuple[int, int]], o: Origami) -> int:
    """Bitmask of square sides the center path crosses, mod 2.

    Bit i is the glued vertical side between i and alpha(i); bit d+i
    the glued horizontal side between i and beta(i).
    """
    d = o.degree
    ai, bi = o.alpha.inverse().word, o.beta.inverse().word
    mask = 0
    for x, move in walk:
        if move == R:
            mask ^= 1 << x
        elif move == L:
            mask ^= 1 << ai[x]
        elif move == U:
            mask ^= 1 << (d + x)
        else:
            mask ^= 1 << (d + bi[x])
    return mask


def _walk_skeleton_copy(walk: list[tuple[int, int]], o: Origami) -> int:
    """Sides traversed by the homologous copy pushed onto the skeleton.

    A step right from square x slides to the bottom side of x; a step
    up slides to the left side of x (and symmetrically for the inverse
    steps), keeping the endpoints pinned at lower-left vertices.
    """
    d = o.degree
    ai, bi = o.alpha.inverse().word, o.beta.inverse().word
    mask = 0
    for x, move in walk:
        if move == R:
            mask ^= 1 << (d + bi[x])
        elif move == L:
            mask ^= 1 << (d + bi[ai[x]])
        elif move == U:
            mask ^= 1 << ai[x]
        else:
            mask ^= 1 << ai[bi[x]]
    return mask


def _dot(mask_a: int, mask_b: int) -> int:
    return bin(mask_a & mask_b).count("1") % 2


def _vertex_classes(o: Origami) -> list[list[tuple[int, int]]]:
    """Orbits of square corners under the side gluings.

    Corners are (square, c) with c = 0 lower-left, 1 lower-right,
    2 upper-right, 3 upper-left.  One orbit per vertex of the surface.
    """
    d = o.degree
    aw, bw = o.alpha.word, o.beta.word
    parent = list(range(4 * d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    idx = lambda square, c: 4 * square + c
    for i in range(d):
        union(idx(i, 1), idx(aw[i], 0))  # right side of i = left side of alpha(i)
        union(idx(i, 2), idx(aw[i], 3))
        union(idx(i, 3), idx(bw[i], 0))  # top side of i = bottom side of beta(i)
        union(idx(i, 2), idx(bw[i], 1))
    classes: dict[int, list[tuple[int, int]]] = {}
    for i in range(d):
        for c in range(4):
            classes.setdefault(find(idx(i, c)), []).append((i, c))
    return list(classes.values())


def _face_masks(o: Origami) -> list[int]:
    """Boundary of the disk around each vertex, in crossing coordinates."""
    d = o.degree
    classes = _vertex_classes(o)
    corner_class = {}
    for ci, members in enumerate(classes):
        for m in members:
            corner_class[m] = ci
    masks = [0] * len(classes)
    for i in range(d):
        # vertical side between i and alpha(i): endpoints are the
        # vertices through the lower-right and upper-right corners of i
        lo, hi = corner_class[(i, 1)], corner_class[(i, 2)]
        if lo != hi:
            masks[lo] ^= 1 << i
            masks[hi] ^= 1 << i
        # horizontal side between i and beta(i)
        lo, hi = corner_class[(i, 3)], corner_class[(i, 2)]
        if lo != hi:
            masks[lo] ^= 1 << (d + i)
            masks[hi] ^= 1 << (d + i)
    return masks


def _check_descends(o, walks, cross, pairing, q) -> None:
    """Verify the form is well-defined on homology.

    Every vertex-face boundary must decompose over the fundamental
    cycles with induced q = 0 and zero pairing against everything;
    this pins the quadratic law q(x+y) = q(x)+q(y)+x.y on the quotient.
    """
    classes = _vertex_classes(o)
    from .perm import commutator

    n_vertices = len(commutator(o.alpha, o.beta).cycles())
    assert len(classes) == n_vertices, "corner orbits must match vertices"

    n = len(walks)
    d = o.degree
    cotree_bit = []
    for w in walks:
        x, move = w[0]
        cotree_bit.append(x if move == R else d + x)

    for face in _face_masks(o):
        coeffs = [(face >> cotree_bit[j]) & 1 for j in range(n)]
        combo = 0
        for j in range(n):
            if coeffs[j]:
                combo ^= cross[j]
        assert combo == face, "face boundary must be a cycle combination"
        q_face = sum(q[j] for j in range(n) if coeffs[j]) % 2
        for j in range(n):
            if not coeffs[j]:
                continue
            for k in range(j + 1, n):
                if coeffs[k]:
                    q_face = (q_face + pairing[j][k]) % 2
        assert q_face == 0, "face boundary must have q = 0 (even zeros)"
        for i in range(n):
            dot = sum(pairing[i][j] for j in range(n) if coeffs[j]) % 2
            assert dot == 0, "face boundary must pair to zero"


def _arf(pairing: list[list[int]], q: list[int], genus: int) -> int:
    """Greedy symplectic reduction; returns sum of q(a_i) q(b_i) mod 2."""
    n = len(q)
    b = [row[:] for row in pairing]
    qv = q[:]
    active = list(range(n))
    arf = 0
    pairs = 0

    def add(dst: int, src: int) -> None:
        qv[dst] ^= qv[src] ^ b[dst][src]
        for m in range(n):
            b[dst][m] ^= b[src][m]
        b[dst][dst] = 0  # the form is alternating
        for m in range(n):
            b[m][dst] = b[dst][m]

    while True:
        hit = None
        for ii, x in enumerate(active):
            for y in active[ii + 1:]:
                if b[x][y]:
                    hit = (x, y)
                    break
            if hit:
                break
        if hit is None:
            break
        x, y = hit
        arf ^= qv[x] & qv[y]
        pairs += 1
        active = [z for z in active if z not in (x, y)]
        for z in active:
            if b[z][y]:
                add(z, x)
            if b[z][x]:
                add(z, y)

    assert pairs == genus, f"found {pairs} hyperbolic pairs, expected {genus}"
    for z in active:
        assert all(b[z][m] == 0 for m in range(n)), "radical must pair to zero"
    return arf
