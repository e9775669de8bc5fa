"""Irreducible closed sets, the hull-kernel sobrification, and sobriety tests."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import NotClosed
from .lattice import as_abstract, closed_set_lattice, is_strongly_irreducible
from .poset import FinitePoset, bits, lower_set_masks, to_mask
from .topology import FiniteSpace, is_homeomorphism, is_td, specialization_order

#: Above this many closed sets only the fast irreducibility test runs.
CROSS_CHECK_CAP = 256


def _irreducible_by_covers(X: FiniteSpace, A: int) -> bool:
    if not A:
        return False
    for i, f1 in enumerate(X.closed):
        for f2 in X.closed[i:]:
            if A & (f1 | f2) == A and A & f1 != A and A & f2 != A:
                return False
    return True


def _irreducible_by_split(X: FiniteSpace, A: int) -> bool:
    if not A:
        return False
    proper = [c for c in X.closed if c & A == c and c != A]
    for i, f1 in enumerate(proper):
        for f2 in proper[i:]:
            if f1 | f2 == A:
                return False
    return True


def is_irreducible_closed(X: FiniteSpace, A) -> bool:
    """Whether the closed set ``A`` (iterable of point indices, or a mask) is
    nonempty and irreducible."""
    mask = A if isinstance(A, int) else to_mask(A)
    if not X.is_closed_mask(mask):
        raise NotClosed("irreducibility is only decided for closed sets")
    fast = _irreducible_by_split(X, mask)
    if len(X.closed) <= CROSS_CHECK_CAP and fast != _irreducible_by_covers(X, mask):
        raise RuntimeError("irreducibility tests disagree")
    return fast


def set_label(X: FiniteSpace, mask: int) -> str:
    return "{" + ",".join(str(X.labels[i]) for i in bits(mask)) + "}"


@dataclass(frozen=True)
class IrrStructure:
    base: FiniteSpace
    irr_sets: tuple  # masks, sorted by (size, mask)
    poset: FinitePoset  # inclusion order; element k is irr_sets[k]
    unit: tuple  # unit[x] is the index of cl({x}) in irr_sets

    def index(self, mask: int) -> int:
        return self.irr_sets.index(mask)


def irr_structure(X: FiniteSpace) -> IrrStructure:
    irr = tuple(c for c in X.closed if is_irreducible_closed(X, c))
    up = [to_mask(j for j, t in enumerate(irr) if s & t == s) for s in irr]
    poset = FinitePoset([set_label(X, s) for s in irr], up, check=False)
    pos = {s: k for k, s in enumerate(irr)}
    unit = tuple(pos[X.point_closure(x)] for x in range(X.m))
    return IrrStructure(X, irr, poset, unit)


def irr_directed_sup_matches_closure(S: IrrStructure, family_mask: int) -> bool:
    """For a directed family of irreducible sets, its sup in the Irr poset is
    ``cl(⋃family)``."""
    top = S.poset.greatest_in(family_mask)
    union = 0
    for k in bits(family_mask):
        union |= S.irr_sets[k]
    return top is not None and S.irr_sets[top] == S.base.closure_mask(union)


@dataclass(frozen=True)
class SobrietyReport:
    is_sober: bool
    is_bounded_sober: bool
    witnesses: list = field(default_factory=list)  # non-point-closure irreducible sets


def sobriety_report(X: FiniteSpace, irr: IrrStructure | None = None) -> SobrietyReport:
    irr = irr or irr_structure(X)
    closures = {X.point_closure(x) for x in range(X.m)}
    generic = Counter(X.point_closure(x) for x in range(X.m))
    # sobriety needs a unique generic point; only non-T0 spaces can share one
    witnesses = sorted(
        (A for A in irr.irr_sets if generic[A] != 1),
        key=lambda A: (A.bit_count(), tuple(bits(A))),
    )
    # upper bounded in the specialization order means contained in some cl({y})
    bounded = [A for A in witnesses if any(A & c == A for c in closures)]
    return SobrietyReport(
        is_sober=not witnesses,
        is_bounded_sober=not bounded,
        witnesses=[frozenset(bits(A)) for A in witnesses],
    )


def hull_map(X: FiniteSpace, irr: IrrStructure | None = None) -> dict:
    """``h(A) = {F ∈ Irr(X) : F ⊆ A}`` for each closed ``A``, as index masks."""
    irr = irr or irr_structure(X)
    return {
        A: to_mask(k for k, F in enumerate(irr.irr_sets) if F & A == F) for A in X.closed
    }


def hull_kernel_sobrification(X: FiniteSpace, irr: IrrStructure | None = None) -> FiniteSpace:
    """The space ``Irr(X)`` whose closed sets are ``h(A)``.

    Sobriety of the result, injectivity of ``h`` and the lattice isomorphism
    ``C(X) ≅ C(Irr X)`` induced by ``h`` are checked before returning.
    """
    irr = irr or irr_structure(X)
    h = hull_map(X, irr)
    Y = FiniteSpace(irr.poset.labels, h.values())
    if len(set(h.values())) != len(X.closed):
        raise RuntimeError("hull map is not injective")
    for A in X.closed:
        for B in X.closed:
            if (A & B == A) != (h[A] & h[B] == h[A]):
                raise RuntimeError("hull map does not preserve and reflect inclusion")
    if not sobriety_report(Y).is_sober:
        raise RuntimeError("hull-kernel space is not sober")
    return Y


def eta_is_homeomorphism(X: FiniteSpace, Y: FiniteSpace, irr: IrrStructure) -> bool:
    return is_homeomorphism(X, Y, irr.unit)


def is_scott_sobrifiable(X: FiniteSpace, irr: IrrStructure | None = None) -> bool:
    """Every lower set of the Irr poset is ``h(A)`` for some closed ``A``."""
    irr = irr or irr_structure(X)
    hulls = set(hull_map(X, irr).values())
    return all(F in hulls for F in lower_set_masks(irr.poset))


@dataclass(frozen=True)
class Fact2Result:
    lhs: bool
    rhs: bool
    agree: bool


def fact2_check(X: FiniteSpace, irr: IrrStructure | None = None) -> Fact2Result:
    """(sober and T_D) versus (every irreducible closed set is strongly
    irreducible in ``C(X)``).  The two agree on T0 spaces; the indiscrete
    pair shows they need not agree otherwise."""
    irr = irr or irr_structure(X)
    lhs = sobriety_report(X, irr).is_sober and is_td(X)
    F = closed_set_lattice(X)
    L = as_abstract(F)
    rhs = all(is_strongly_irreducible(L, F.index(A)) for A in irr.irr_sets)
    return Fact2Result(lhs, rhs, lhs == rhs)


def specialization_is_inclusion(Y: FiniteSpace, irr: IrrStructure) -> bool:
    """The specialization order of the sobrification is set inclusion."""
    return specialization_order(Y).up == irr.poset.up
