"""Subset lattices, abstract finite lattices, and their special elements.

On a finite lattice every Scott-closed set is the lower closure of its
maximal elements and ``⋁↓B = ⋁B``, so the beneath relation can quantify over
plain nonempty subsets ``B``.  Since the join is monotone, the worst ``B``
avoiding ``↑x`` is the whole complement of ``↑x``; :func:`beneath` uses that
single join, and :func:`beneath_bruteforce` / :func:`beneath_lowersets` keep
the subset and lower-set quantifications as cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotALattice, NotReconstructible, SizeLimit
from .isomorphism import poset_isomorphism
from .poset import FinitePoset, bits, lower_set_masks, members, to_mask
from .topology import FiniteSpace

#: Lattice size above which subset-quantifying brute force refuses to run.
BRUTE_FORCE_CAP = 24


class SubsetLattice:
    """A family of subsets of ``range(carrier_size)`` ordered by inclusion."""

    __slots__ = ("carrier_size", "members", "_index")

    def __init__(self, carrier_size: int, members_: Iterable[int]):
        self.carrier_size = carrier_size
        fam = frozenset(members_)
        self.members = tuple(sorted(fam, key=lambda s: (s.bit_count(), s)))
        self._index = {s: i for i, s in enumerate(self.members)}
        full = (1 << carrier_size) - 1
        if not self.members:
            raise NotALattice("empty family")
        top = self.members[-1]
        if any(s & ~top for s in self.members) or top & ~full:
            raise NotALattice("no greatest member inside the carrier")
        for a in self.members:
            for b in self.members:
                if a & b not in self._index:
                    raise NotALattice("family is not closed under intersection")

    def __len__(self) -> int:
        return len(self.members)

    def index(self, mask: int) -> int:
        return self._index[mask]

    def join(self, a: int, b: int) -> int:
        """Smallest member containing ``a | b``."""
        u = a | b
        best = None
        for s in self.members:
            if s & u == u and (best is None or s & best == s):
                best = s
        return best

    def meet(self, a: int, b: int) -> int:
        return a & b


def closed_set_lattice(X: FiniteSpace) -> SubsetLattice:
    """``C(X)``; for ``X = ΣP`` this is ``C_σ(P)``."""
    return SubsetLattice(X.m, X.closed)


def scott_closed_lattice(P: FinitePoset) -> SubsetLattice:
    return SubsetLattice(P.n, lower_set_masks(P))


class AbstractLattice(FinitePoset):
    """A finite lattice known only through its order."""

    __slots__ = ("bottom", "top")

    def __init__(self, labels: Sequence, up: Sequence[int], *, check: bool = True):
        super().__init__(labels, up, check=check)
        if self.n == 0:
            raise NotALattice("a lattice is nonempty")
        self.bottom = self.greatest_in_dual(self.full)
        self.top = self.greatest_in(self.full)
        if self.bottom is None or self.top is None:
            raise NotALattice("missing bottom or top")
        if check:
            for a in range(self.n):
                for b in range(a + 1, self.n):
                    if self.join_mask(1 << a | 1 << b) is None or self.meet_pair(a, b) is None:
                        raise NotALattice(f"{self.labels[a]!r} and {self.labels[b]!r} lack a join or meet")

    @classmethod
    def from_poset(cls, P: FinitePoset) -> "AbstractLattice":
        return cls(P.labels, P.up)

    def greatest_in_dual(self, mask: int):
        for i in bits(mask):
            if self.up[i] & mask == mask:
                return i
        return None

    def join_mask(self, mask: int):
        """Join of a set of elements; the join of the empty set is bottom."""
        ub = self.upper_bounds_mask(mask)
        for i in bits(ub):
            if self.up[i] & ub == ub:
                return i
        return None

    def join(self, a: int, b: int) -> int:
        return self.join_mask(1 << a | 1 << b)

    def meet_pair(self, a: int, b: int):
        lb = self.down[a] & self.down[b]
        for i in bits(lb):
            if self.down[i] & lb == lb:
                return i
        return None


def as_abstract(F: SubsetLattice) -> AbstractLattice:
    """Forget the sets; element ``i`` is ``F.members[i]``."""
    ms = F.members
    up = [to_mask(j for j, t in enumerate(ms) if s & t == s) for s in ms]
    return AbstractLattice([str(i) for i in range(len(ms))], up, check=False)


def boolean_lattice(k: int) -> AbstractLattice:
    return as_abstract(SubsetLattice(k, range(1 << k)))


def m3() -> AbstractLattice:
    labels = ["0", "a", "b", "c", "1"]
    up = [0b11111, 0b10010, 0b10100, 0b11000, 0b10000]
    return AbstractLattice(labels, up)


def n5() -> AbstractLattice:
    # 0 < a < c < 1, 0 < b < 1
    labels = ["0", "a", "b", "c", "1"]
    up = [0b11111, 0b11010, 0b10100, 0b11000, 0b10000]
    return AbstractLattice(labels, up)


@dataclass(frozen=True)
class Irreducibility:
    irreducible: bool
    strongly_irreducible: bool


def _strict_down(L: FinitePoset, a: int) -> int:
    return L.down[a] & ~(1 << a)


def is_strongly_irreducible(L: AbstractLattice, a: int) -> bool:
    """``a`` is not the join of any nonempty set of elements strictly below it."""
    strict = _strict_down(L, a)
    return strict == 0 or L.join_mask(strict) != a


def is_irreducible(L: AbstractLattice, a: int) -> bool:
    """``a`` is not a finite join of elements strictly below it.

    Computed from the closure of the strict down-set under binary joins.
    """
    strict = _strict_down(L, a)
    reach = set(bits(strict))
    frontier = list(reach)
    while frontier:
        new = []
        for x in frontier:
            for y in list(reach):
                j = L.join(x, y)
                if j not in reach:
                    reach.add(j)
                    new.append(j)
        frontier = new
    return a not in reach


def irreducibility_report(L: AbstractLattice) -> list:
    return [Irreducibility(is_irreducible(L, a), is_strongly_irreducible(L, a)) for a in range(L.n)]


def beneath(L: AbstractLattice, x: int, y: int) -> bool:
    avoid = L.full & ~L.up[x]
    if not avoid:
        return True
    return not L.leq(y, L.join_mask(avoid))


def beneath_bruteforce(L: AbstractLattice, x: int, y: int) -> bool:
    """Quantify over every nonempty subset ``B``: ``y <= ⋁B`` forces ``B ∩ ↑x ≠ ∅``."""
    if L.n > BRUTE_FORCE_CAP:
        raise SizeLimit(f"beneath brute force over 2^{L.n} subsets")
    for B in range(1, 1 << L.n):
        if L.leq(y, L.join_mask(B)) and not B & L.up[x]:
            return False
    return True


def beneath_lowersets(L: AbstractLattice, x: int, y: int) -> bool:
    """The defining quantification over nonempty Scott-closed (= lower) sets."""
    if L.n > BRUTE_FORCE_CAP:
        raise SizeLimit(f"lower-set scan on a lattice of {L.n} elements")
    for S in lower_set_masks(L):
        if S and L.leq(y, L.join_mask(S)) and not (S >> x) & 1:
            return False
    return True


def c_compact_elements(L: AbstractLattice) -> frozenset:
    """κ(L)."""
    return frozenset(x for x in range(L.n) if beneath(L, x, x))


def vee_irreducible_check(L: AbstractLattice, a: int) -> bool:
    for x in range(L.n):
        for y in range(x, L.n):
            if L.leq(a, L.join(x, y)) and not (L.leq(a, x) or L.leq(a, y)):
                return False
    return True


def join_irreducibles(L: AbstractLattice) -> int:
    """Mask of elements with exactly one lower cover."""
    return to_mask(a for a in range(L.n) if len(L.lower_covers(a)) == 1)


def reconstruct_poset(L: AbstractLattice) -> FinitePoset:
    """Recover ``P`` from ``L ≅ C_σ(P)`` as the poset of join-irreducibles.

    The map ``a -> {j join-irreducible : j <= a}`` must be an order
    isomorphism onto the lower sets of that poset, otherwise ``L`` is not a
    lattice of lower sets.
    """
    J = join_irreducibles(L)
    P = L.sub_poset(J)
    jidx = list(bits(J))
    images = []
    for a in range(L.n):
        below = L.down[a] & J
        images.append(to_mask(k for k, j in enumerate(jidx) if (below >> j) & 1))
    downsets = set(lower_set_masks(P))
    if len(downsets) != L.n or set(images) != downsets:
        raise NotReconstructible(
            f"join-irreducibles give {len(downsets)} lower sets for a lattice of {L.n} elements"
        )
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(a, b) != (images[a] & images[b] == images[a]):
                raise NotReconstructible("lower-set map is not an order embedding")
    return P


def lattice_isomorphism(L1: AbstractLattice, L2: AbstractLattice):
    """Direct isomorphism search between two lattices (as posets)."""
    return poset_isomorphism(L1, L2)


def member_sets(F: SubsetLattice) -> list:
    return [members(s) for s in F.members]
