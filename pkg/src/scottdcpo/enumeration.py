"""All finite posets up to isomorphism, with an independent brute-force oracle."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import SizeLimit
from .isomorphism import canonical_form
from .poset import FinitePoset, bits, lower_set_masks

MAX_ENUMERATION = 7


def _extend(P: FinitePoset, below: int) -> FinitePoset:
    """``P`` plus a new maximal element whose strict down-set is ``below``."""
    n = P.n
    z = 1 << n
    up = [u | z if (below >> i) & 1 else u for i, u in enumerate(P.up)] + [z]
    return FinitePoset([str(i) for i in range(n + 1)], up, check=False)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple:
    if n == 0:
        return (FinitePoset([], []),)
    seen = {}
    for P in _classes(n - 1):
        for D in lower_set_masks(P):
            Q = _extend(P, D)
            key = canonical_form(Q)
            if key not in seen:
                seen[key] = Q
    return tuple(seen[k] for k in sorted(seen))


def enumerate_posets(n: int) -> Iterator[FinitePoset]:
    """One representative per isomorphism class of ``n``-element posets,
    ordered by canonical form.

    Built by adding a new maximal element below every lower set of each
    ``(n-1)``-element representative (every poset has a maximal element).
    """
    if n > MAX_ENUMERATION:
        raise SizeLimit(f"enumeration is capped at n={MAX_ENUMERATION}")
    if n < 1:
        raise ValueError("n must be at least 1")
    yield from _classes(n)


def labeled_posets(n: int, natural: bool = False) -> Iterator[FinitePoset]:
    """Every partial order on ``range(n)`` by backtracking over pairs.

    Each unordered pair is set to incomparable, ``i<j`` or ``j<i`` and the
    partial relation is kept transitive.  ``natural=True`` only allows
    ``i<j`` for ``i<j`` (every poset has such a labelling), which is far
    cheaper and still hits every isomorphism class.
    """
    pairs = [(i, j) for j in range(n) for i in range(j)]
    rel = [[i == j for j in range(n)] for i in range(n)]

    def consistent(k: int) -> bool:
        # transitivity and antisymmetry restricted to decided pairs 0..k
        decided = set()
        for i, j in pairs[: k + 1]:
            decided.add((i, j))
            decided.add((j, i))
        for a in range(n):
            for b in range(n):
                if a == b or not rel[a][b]:
                    continue
                for c in range(n):
                    if c == b or not rel[b][c]:
                        continue
                    if a == c:
                        return False
                    if (a, c) in decided and not rel[a][c]:
                        return False
        return True

    def walk(k: int) -> Iterator[FinitePoset]:
        if k == len(pairs):
            yield FinitePoset.from_matrix([str(i) for i in range(n)], rel)
            return
        i, j = pairs[k]
        options = ((False, False), (True, False)) if natural else ((False, False), (True, False), (False, True))
        for ij, ji in options:
            rel[i][j], rel[j][i] = ij, ji
            if consistent(k):
                yield from walk(k + 1)
        rel[i][j] = rel[j][i] = False

    yield from walk(0)


def brute_force_classes(n: int, natural: bool = False) -> dict:
    """Canonical form -> representative, from :func:`labeled_posets`."""
    out = {}
    for P in labeled_posets(n, natural=natural):
        out.setdefault(canonical_form(P), P)
    return out


def count_up_to(n: int) -> list:
    return [sum(1 for _ in enumerate_posets(k)) for k in range(1, n + 1)]
