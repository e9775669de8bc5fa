"""Exact isomorphism testing and canonical forms for finite posets.

Both rely on colour refinement: a vertex's colour is repeatedly replaced by
its old colour together with the multisets of colours strictly below and
strictly above it, until the partition stops splitting.  Colours are ranked
by their signatures, so they never depend on the input labelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poset import FinitePoset, bits


@dataclass(frozen=True)
class IsoCertificate:
    mapping: tuple  # mapping[i] is the image in Q of element i of P
    verified: bool


def _refine(up: Sequence[int], down: Sequence[int], colors: list) -> list:
    n = len(colors)
    classes = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            below = sorted(colors[u] for u in bits(down[v] & ~(1 << v)))
            above = sorted(colors[u] for u in bits(up[v] & ~(1 << v)))
            sigs.append((colors[v], tuple(below), tuple(above)))
        ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        new_classes = len(ranks)
        if new_classes == classes:
            return new
        colors, classes = new, new_classes


def _initial_colors(P: FinitePoset) -> list:
    return [(P.down[v].bit_count(), P.up[v].bit_count()) for v in range(P.n)]


def refined_colors(P: FinitePoset) -> list:
    init = _initial_colors(P)
    ranks = {c: r for r, c in enumerate(sorted(set(init)))}
    return _refine(P.up, P.down, [ranks[c] for c in init])


def _encode(P: FinitePoset, order: Sequence[int]) -> int:
    """Relation matrix in the given vertex order, row-major, as an integer."""
    pos = [0] * P.n
    for k, v in enumerate(order):
        pos[v] = k
    code = 0
    n = P.n
    for k, v in enumerate(order):
        row = 0
        for u in bits(P.up[v]):
            row |= 1 << (n - 1 - pos[u])
        code = (code << n) | row
    return code


def canonical_labeling(P: FinitePoset) -> tuple:
    """Vertex order realising the canonical form.

    Individualisation-refinement: refine, split the first non-singleton
    colour class by each of its members in turn, and keep the leaf whose
    relation matrix is least.
    """
    if P.n == 0:
        return ()
    best = [None, None]

    def search(colors: list) -> None:
        colors = _refine(P.up, P.down, colors)
        counts: dict = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        split = [c for c in sorted(counts) if counts[c] > 1]
        if not split:
            order = sorted(range(P.n), key=lambda v: colors[v])
            code = _encode(P, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, tuple(order)
            return
        cell = split[0]
        for v in range(P.n):
            if colors[v] == cell:
                search([2 * c + (0 if u == v else 1) for u, c in enumerate(colors)])

    init = _initial_colors(P)
    ranks = {c: r for r, c in enumerate(sorted(set(init)))}
    search([ranks[c] for c in init])
    return best[1]


def canonical_form(P: FinitePoset) -> bytes:
    """Byte string equal for two posets iff they are isomorphic."""
    order = canonical_labeling(P)
    code = _encode(P, order) if P.n else 0
    nbytes = (P.n * P.n + 7) // 8
    return P.n.to_bytes(2, "big") + code.to_bytes(nbytes, "big")


def canonical_poset(P: FinitePoset) -> FinitePoset:
    order = canonical_labeling(P)
    perm = [0] * P.n
    for k, v in enumerate(order):
        perm[v] = k
    return P.relabel(perm)


def verify_mapping(P: FinitePoset, Q: FinitePoset, mapping: Sequence[int]) -> bool:
    if P.n != Q.n or sorted(mapping) != list(range(Q.n)):
        return False
    for i in range(P.n):
        img = 0
        for j in bits(P.up[i]):
            img |= 1 << mapping[j]
        if img != Q.up[mapping[i]]:
            return False
    return True


def poset_isomorphism(P: FinitePoset, Q: FinitePoset) -> IsoCertificate | None:
    """An order isomorphism ``P -> Q``, or None when none exists."""
    n = P.n
    if n != Q.n:
        return None
    if sorted(_initial_colors(P)) != sorted(_initial_colors(Q)):
        return None
    # refine both posets jointly so colours are comparable across them
    up = list(P.up) + [u << n for u in Q.up]
    down = list(P.down) + [d << n for d in Q.down]
    init = _initial_colors(P) + _initial_colors(Q)
    ranks = {c: r for r, c in enumerate(sorted(set(init)))}
    colors = _refine(up, down, [ranks[c] for c in init])
    cp, cq = colors[:n], colors[n:]
    if sorted(cp) != sorted(cq):
        return None

    order = sorted(range(n), key=lambda v: (cp[v], P.down[v].bit_count(), v))
    by_color: dict = {}
    for q in range(n):
        by_color.setdefault(cq[q], []).append(q)
    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        p = order[k]
        for q in by_color[cp[p]]:
            if used[q]:
                continue
            ok = True
            for pp in order[:k]:
                qq = mapping[pp]
                if ((P.up[p] >> pp) & 1) != ((Q.up[q] >> qq) & 1) or (
                    (P.up[pp] >> p) & 1
                ) != ((Q.up[qq] >> q) & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[p] = q
            used[q] = True
            if extend(k + 1):
                return True
            used[q] = False
            mapping[p] = -1
        return False

    if not extend(0):
        return None
    mapping_t = tuple(mapping)
    if not verify_mapping(P, Q, mapping_t):
        raise RuntimeError("isomorphism search produced an invalid certificate")
    return IsoCertificate(mapping_t, True)


def is_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    return poset_isomorphism(P, Q) is not None
