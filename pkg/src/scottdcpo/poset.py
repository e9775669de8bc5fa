"""Finite posets and the order-theoretic primitives used everywhere else.

Elements are indexed ``0..n-1``; labels are only carried for I/O.  The order
is stored as full reachability bitmasks: ``up[i]`` has bit ``j`` set iff
``i <= j`` and ``down[i]`` has bit ``j`` set iff ``j <= i``.  Public functions
take subsets as iterables of indices and return frozensets; the ``*_mask``
variants work on integer bitmasks directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CycleDetected, NotAPartialOrder, NotDirected, SizeLimit, UnknownLabel

#: Largest carrier for which functions quantify over all subsets.
SUBSET_CAP = 16


def to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> frozenset:
    return frozenset(bits(mask))


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class FinitePoset:
    """An immutable finite partial order."""

    __slots__ = ("labels", "n", "up", "down", "_hash")

    def __init__(self, labels: Sequence, up: Sequence[int], *, check: bool = True):
        labels = tuple(labels)
        n = len(labels)
        if len(up) != n:
            raise NotAPartialOrder("label count and relation size differ")
        if check and len(set(labels)) != n:
            raise NotAPartialOrder("labels must be distinct")
        up = tuple(up)
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        self.labels = labels
        self.n = n
        self.up = up
        self.down = tuple(down)
        self._hash = None
        if check:
            self._validate()

    def _validate(self) -> None:
        full = (1 << self.n) - 1
        for i in range(self.n):
            if not (self.up[i] >> i) & 1:
                raise NotAPartialOrder(f"not reflexive at {self.labels[i]!r}")
            if self.up[i] & ~full:
                raise NotAPartialOrder("relation references unknown elements")
            both = self.up[i] & self.down[i] & ~(1 << i)
            if both:
                j = next(bits(both))
                raise CycleDetected(
                    f"{self.labels[i]!r} and {self.labels[j]!r} are mutually below each other"
                )
            for j in bits(self.up[i]):
                if self.up[j] & ~self.up[i]:
                    raise NotAPartialOrder(
                        f"not transitive through {self.labels[i]!r} <= {self.labels[j]!r}"
                    )

    # construction

    @classmethod
    def from_matrix(cls, labels: Sequence, leq: Sequence[Sequence[bool]]) -> "FinitePoset":
        up = [to_mask(j for j, v in enumerate(row) if v) for row in leq]
        return cls(labels, up)

    @classmethod
    def from_relation(cls, labels: Sequence, leq) -> "FinitePoset":
        """Build from a predicate ``leq(a, b)`` on labels."""
        labels = list(labels)
        up = [to_mask(j for j, b in enumerate(labels) if leq(a, b)) for a in labels]
        return cls(labels, up)

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"FinitePoset(n={self.n}, covers={self.cover_pairs()})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinitePoset)
            and self.labels == other.labels
            and self.up == other.up
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.labels, self.up))
        return self._hash

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def leq_matrix(self) -> list:
        return [[bool((self.up[i] >> j) & 1) for j in range(self.n)] for i in range(self.n)]

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def lower_covers(self, i: int) -> list:
        strict = self.down[i] & ~(1 << i)
        return [j for j in bits(strict) if self.up[j] & strict == 1 << j]

    def cover_pairs(self) -> list:
        """Pairs ``(i, j)`` with ``j`` covering ``i``, sorted."""
        return sorted((j, i) for i in range(self.n) for j in self.lower_covers(i))

    def lower_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def upper_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def upper_bounds_mask(self, mask: int) -> int:
        out = self.full
        for i in bits(mask):
            out &= self.up[i]
        return out

    def minimal_mask(self, mask: int) -> int:
        return to_mask(i for i in bits(mask) if self.down[i] & mask == 1 << i)

    def maximal_mask(self, mask: int) -> int:
        return to_mask(i for i in bits(mask) if self.up[i] & mask == 1 << i)

    def greatest_in(self, mask: int):
        """The greatest element of the subset, or None."""
        for i in bits(mask):
            if self.down[i] & mask == mask:
                return i
        return None

    def is_lower_mask(self, mask: int) -> bool:
        return self.lower_mask(mask) == mask

    def is_chain_mask(self, mask: int) -> bool:
        return all(mask & ~(self.up[i] | self.down[i]) == 0 for i in bits(mask))

    def is_directed_mask(self, mask: int) -> bool:
        """Nonempty, and every pair has an upper bound inside the set."""
        if not mask:
            return False
        idx = list(bits(mask))
        for a, i in enumerate(idx):
            for j in idx[a + 1:]:
                if not self.up[i] & self.up[j] & mask:
                    return False
        return True

    def sub_poset(self, mask: int) -> "FinitePoset":
        """Restriction of the order to ``mask``; new indices follow old order."""
        idx = list(bits(mask))
        pos = {old: new for new, old in enumerate(idx)}
        up = [to_mask(pos[j] for j in bits(self.up[i] & mask)) for i in idx]
        return FinitePoset([self.labels[i] for i in idx], up, check=False)

    def relabel(self, perm: Sequence[int]) -> "FinitePoset":
        """Poset whose element ``perm[i]`` is old element ``i``."""
        inv = [0] * self.n
        for old, new in enumerate(perm):
            inv[new] = old
        up = [to_mask(perm[j] for j in bits(self.up[inv[k]])) for k in range(self.n)]
        return FinitePoset([self.labels[inv[k]] for k in range(self.n)], up, check=False)


@dataclass(frozen=True)
class MReport:
    has_m: bool
    has_M: bool
    mub_always_finite: bool
    witness: tuple | None = None


def from_cover_relation(labels: Sequence, covers: Iterable[Sequence]) -> FinitePoset:
    """Poset generated by ``covers`` (pairs ``(a, b)`` meaning ``a < b``)."""
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise NotAPartialOrder("labels must be distinct")
    pos = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    succ = [1 << i for i in range(n)]
    for pair in covers:
        a, b = pair
        for lab in (a, b):
            if lab not in pos:
                raise UnknownLabel(f"cover references unknown element {lab!r}")
        succ[pos[a]] |= 1 << pos[b]
    # Warshall on bitmask rows
    for k in range(n):
        kbit = 1 << k
        for i in range(n):
            if succ[i] & kbit:
                succ[i] |= succ[k]
    return FinitePoset(labels, succ)


def chain(n: int) -> FinitePoset:
    return FinitePoset([str(i) for i in range(n)], [((1 << n) - 1) & ~((1 << i) - 1) for i in range(n)])


def antichain(n: int) -> FinitePoset:
    return FinitePoset([str(i) for i in range(n)], [1 << i for i in range(n)])


def lower_set(P: FinitePoset, S: Iterable[int]) -> frozenset:
    return members(P.lower_mask(to_mask(S)))


def upper_set(P: FinitePoset, S: Iterable[int]) -> frozenset:
    return members(P.upper_mask(to_mask(S)))


def is_directed(P: FinitePoset, D: Iterable[int]) -> bool:
    return P.is_directed_mask(to_mask(D))


def directed_sup(P: FinitePoset, D: Iterable[int]) -> int:
    """Supremum of a finite directed set, which is its greatest element."""
    mask = to_mask(D)
    if not mask:
        raise NotDirected("the empty set is not directed")
    if not P.is_directed_mask(mask):
        raise NotDirected("some pair has no upper bound inside the set")
    top = P.greatest_in(mask)
    # a finite directed set always has a greatest element
    assert top is not None
    return top


def minimal_upper_bounds(P: FinitePoset, A: Iterable[int]) -> frozenset:
    """``mub(A)``; for empty ``A`` these are the minimal elements of ``P``."""
    return members(P.minimal_mask(P.upper_bounds_mask(to_mask(A))))


def property_mM_report(P: FinitePoset) -> MReport:
    """Check property m over every subset ``A`` and every upper bound of it.

    ``mub(A)`` is finite on a finite carrier, so ``has_M == has_m``; the flags
    are kept apart because they are distinct properties in general.
    """
    if P.n > SUBSET_CAP:
        raise SizeLimit(f"property m check quantifies over 2^{P.n} subsets")
    for A in range(1 << P.n):
        ub = P.upper_bounds_mask(A)
        mub = P.minimal_mask(ub)
        covered = P.upper_mask(mub)
        missing = ub & ~covered
        if missing:
            x = next(bits(missing))
            return MReport(False, False, True, (members(A), x))
    return MReport(True, True, True, None)


def add_top(P: FinitePoset, label=None) -> FinitePoset:
    """``P`` with one new element above everything, appended at index ``n``."""
    if label is None:
        label = "top"
        while label in P.labels:
            label += "'"
    n = P.n
    up = [u | (1 << n) for u in P.up] + [1 << n]
    return FinitePoset(list(P.labels) + [label], up, check=False)


def remove_element(P: FinitePoset, i: int) -> FinitePoset:
    return P.sub_poset(P.full & ~(1 << i))


def lower_set_masks(P: FinitePoset) -> list:
    """All lower sets of ``P`` as masks, sorted by (size, mask)."""
    order = sorted(range(P.n), key=lambda i: P.down[i].bit_count())
    out = []

    def walk(k: int, chosen: int) -> None:
        if k == len(order):
            out.append(chosen)
            return
        i = order[k]
        walk(k + 1, chosen)
        # strict predecessors come earlier in ``order``, so this test is final
        if P.down[i] & ~(1 << i) & ~chosen == 0:
            walk(k + 1, chosen | (1 << i))

    walk(0, 0)
    out.sort(key=lambda m: (m.bit_count(), m))
    return out


def directed_subset_masks(P: FinitePoset) -> Iterator[int]:
    """Every directed subset, found by testing all nonempty subsets."""
    if P.n > SUBSET_CAP:
        raise SizeLimit(f"directed-set scan over 2^{P.n} subsets")
    for mask in range(1, 1 << P.n):
        if P.is_directed_mask(mask):
            yield mask
