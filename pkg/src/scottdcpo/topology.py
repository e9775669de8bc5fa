"""Finite spaces given by their closed sets, and the Scott space of a poset.

Every topology on a finite carrier is Alexandrov, so enumerating finite posets
already enumerates every finite T0 space up to homeomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAFamily, NotT0, SizeLimit
from .poset import FinitePoset, SUBSET_CAP, bits, directed_subset_masks, lower_set_masks, members, to_mask


class FiniteSpace:
    """A finite space; ``closed`` holds closed sets as sorted bitmasks."""

    __slots__ = ("labels", "m", "closed", "_closed_set", "_point_closures")

    def __init__(self, labels: Sequence, closed: Iterable[int], *, check: bool = True, require_t0: bool = True):
        self.labels = tuple(labels)
        self.m = len(self.labels)
        closed_set = frozenset(closed)
        self.closed = tuple(sorted(closed_set, key=lambda c: (c.bit_count(), c)))
        self._closed_set = closed_set
        if check:
            self._validate(require_t0)
        self._point_closures = tuple(self.closure_mask(1 << x) for x in range(self.m))
        if check and require_t0 and len(set(self._point_closures)) != self.m:
            raise NotT0("two points have the same closure")

    def _validate(self, require_t0: bool) -> None:
        full = (1 << self.m) - 1
        if len(set(self.labels)) != self.m:
            raise NotAFamily("point labels must be distinct")
        if 0 not in self._closed_set or full not in self._closed_set:
            raise NotAFamily("closed family must contain the empty set and the carrier")
        if any(c & ~full for c in self.closed):
            raise NotAFamily("closed set references unknown points")
        for a in self.closed:
            for b in self.closed:
                if a | b not in self._closed_set or a & b not in self._closed_set:
                    raise NotAFamily("closed family must be closed under union and intersection")

    @property
    def full(self) -> int:
        return (1 << self.m) - 1

    def is_closed_mask(self, mask: int) -> bool:
        return mask in self._closed_set

    def closure_mask(self, mask: int) -> int:
        out = self.full
        for c in self.closed:
            if c & mask == mask:
                out &= c
        return out

    def point_closure(self, x: int) -> int:
        return self._point_closures[x]

    def open_masks(self) -> list:
        return sorted((self.full & ~c for c in self.closed), key=lambda o: (o.bit_count(), o))

    def __repr__(self) -> str:
        return f"FiniteSpace(points={list(self.labels)}, closed={len(self.closed)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteSpace) and self.labels == other.labels and self._closed_set == other._closed_set

    def __hash__(self) -> int:
        return hash((self.labels, self._closed_set))


@dataclass(frozen=True)
class SpaceClassification:
    is_T0: bool
    is_TD: bool
    is_d_space: bool


def from_closed_family(labels: Sequence, family: Iterable[Iterable], *, require_t0: bool = True) -> FiniteSpace:
    """Validate a closed-set family given as collections of labels."""
    labels = list(labels)
    pos = {lab: i for i, lab in enumerate(labels)}
    masks = []
    for s in family:
        s = list(s)
        missing = [lab for lab in s if lab not in pos]
        if missing:
            raise NotAFamily(f"closed set references unknown points {missing!r}")
        masks.append(to_mask(pos[lab] for lab in s))
    return FiniteSpace(labels, masks, require_t0=require_t0)


def scott_space(P: FinitePoset) -> FiniteSpace:
    """ΣP.  Finite directed sets contain their suprema, so the Scott-closed
    sets are exactly the lower sets."""
    return FiniteSpace(P.labels, lower_set_masks(P), check=False)


def closure(X: FiniteSpace, S: Iterable[int]) -> frozenset:
    return members(X.closure_mask(to_mask(S)))


def specialization_order(X: FiniteSpace) -> FinitePoset:
    """``x <= y`` iff ``x`` lies in the closure of ``{y}``."""
    down = [X.point_closure(y) for y in range(X.m)]
    up = [0] * X.m
    for y in range(X.m):
        for x in bits(down[y]):
            up[x] |= 1 << y
    return FinitePoset(X.labels, up)


def is_t0(X: FiniteSpace) -> bool:
    return len({X.point_closure(x) for x in range(X.m)}) == X.m


def is_td(X: FiniteSpace) -> bool:
    """Every derived set ``cl({x}) - {x}`` is closed."""
    return all(X.is_closed_mask(X.point_closure(x) & ~(1 << x)) for x in range(X.m))


def classify_space(X: FiniteSpace) -> SpaceClassification:
    """T0, T_D and d-space flags; the latter two require T0.

    The d-space test scans every directed subset of the specialization order:
    it must have a supremum, and every open set containing that supremum must
    meet the subset (eventual membership of the net on a finite index set).
    """
    if not is_t0(X):
        return SpaceClassification(False, False, False)
    td = is_td(X)
    if X.m > SUBSET_CAP:
        raise SizeLimit(f"d-space check scans 2^{X.m} subsets")
    S = specialization_order(X)
    opens = X.open_masks()
    is_d = True
    for D in directed_subset_masks(S):
        top = S.greatest_in(D)
        if top is None:
            is_d = False
            break
        if any((U >> top) & 1 and not U & D for U in opens):
            is_d = False
            break
    return SpaceClassification(True, td, is_d)


def is_homeomorphism(X: FiniteSpace, Y: FiniteSpace, mapping: Sequence[int]) -> bool:
    """Whether ``mapping`` (point of X -> point of Y) is a homeomorphism."""
    if X.m != Y.m or sorted(mapping) != list(range(Y.m)):
        return False
    images = set()
    for c in X.closed:
        img = 0
        for x in bits(c):
            img |= 1 << mapping[x]
        images.add(img)
    return images == set(Y.closed)
