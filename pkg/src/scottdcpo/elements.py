"""Down-linear and quasicontinuous elements, way-below for finite sets, and the
checks of the hypotheses used by the uniqueness results.

Every set here is finite, so ``F ≪ x`` reduces to ``↑x ⊆ ↑F``: a finite
directed set contains its supremum, and ``D = {x}`` is the strongest test.
The brute-force form over all directed subsets is kept for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotScottClosed, ScottError, SizeLimit
from .poset import FinitePoset, bits, directed_subset_masks, lower_set_masks, property_mM_report, submasks, to_mask
from .sobrification import irr_structure, sobriety_report
from .topology import scott_space

#: Largest candidate family searched for a directed subfamily.
SUBFAMILY_CAP = 20
#: Largest poset for which ``fin(x)`` is enumerated over all finite subsets.
RAW_FIN_CAP = 8


def is_down_linear(P: FinitePoset, a: int) -> bool:
    return P.is_chain_mask(P.down[a])


def down_linear_mask(P: FinitePoset) -> int:
    return to_mask(a for a in range(P.n) if is_down_linear(P, a))


def _way_below_reduced(P: FinitePoset, F: int, x: int) -> bool:
    return P.up[x] & ~P.upper_mask(F) == 0


def _way_below_bruteforce(P: FinitePoset, F: int, x: int) -> bool:
    upF = P.upper_mask(F)
    for D in directed_subset_masks(P):
        if P.leq(x, P.greatest_in(D)) and not D & upF:
            return False
    return True


def way_below_fin(P: FinitePoset, F, x: int, method: str = "reduced") -> bool:
    """Whether the finite set ``F`` is way below ``x``.

    ``method`` is ``"reduced"``, ``"bruteforce"`` or ``"both"`` (which raises
    if the two disagree).
    """
    mask = F if isinstance(F, int) else to_mask(F)
    if not mask:
        raise ScottError("way-below is only defined for nonempty F")
    if method == "reduced":
        return _way_below_reduced(P, mask, x)
    if method == "bruteforce":
        return _way_below_bruteforce(P, mask, x)
    if method == "both":
        a, b = _way_below_reduced(P, mask, x), _way_below_bruteforce(P, mask, x)
        if a != b:
            raise RuntimeError("way-below reduction disagrees with brute force")
        return a
    raise ValueError(f"unknown method {method!r}")


def fin_raw(P: FinitePoset, x: int) -> list:
    """Every nonempty ``F`` with ``F ≪ x``, as masks."""
    if P.n > RAW_FIN_CAP:
        raise SizeLimit(f"fin(x) enumeration over 2^{P.n} subsets")
    return [F for F in range(1, 1 << P.n) if _way_below_reduced(P, F, x)]


def fin_representatives(P: FinitePoset, x: int) -> list:
    """The ⊆-minimal upper sets ``↑F`` over ``F ∈ fin(x)``.

    ``{x}`` is in ``fin(x)`` and every member has ``↑F ⊇ ↑x``, so the
    antichain is the single set ``↑x``.
    """
    assert _way_below_reduced(P, 1 << x, x)
    return [P.up[x]]


def _fin_is_quasicontinuous(P: FinitePoset, x: int, ups: list) -> bool:
    """Directedness and separation of a family given by its sets ``↑F``."""
    for u1 in ups:
        for u2 in ups:
            # need F ∈ fin(x) with F ⊆ ↑F1 ∩ ↑F2, i.e. ↑F ⊆ ↑F1 ∩ ↑F2
            if not any(u & u1 & u2 == u for u in ups):
                return False
    for y in range(P.n):
        if not P.leq(x, y) and not any(not (u >> y) & 1 for u in ups):
            return False
    return True


@dataclass(frozen=True)
class QuasicontinuityReport:
    quasicontinuous: bool
    failing_element: int | None = None


def quasicontinuity_report(P: FinitePoset, method: str = "minimal") -> QuasicontinuityReport:
    """``method="minimal"`` tests the representative antichain of ``fin(x)``;
    ``method="raw"`` tests every finite subset."""
    for x in range(P.n):
        if method == "minimal":
            ups = fin_representatives(P, x)
        elif method == "raw":
            ups = [P.upper_mask(F) for F in fin_raw(P, x)]
        else:
            raise ValueError(f"unknown method {method!r}")
        if not _fin_is_quasicontinuous(P, x, ups):
            return QuasicontinuityReport(False, x)
    return QuasicontinuityReport(True)


def is_quasicontinuous_element(P: FinitePoset, x: int) -> bool:
    """Whether the principal ideal ``↓x`` is a quasicontinuous dcpo."""
    return quasicontinuity_report(P.sub_poset(P.down[x])).quasicontinuous


def quasicontinuous_mask(P: FinitePoset) -> int:
    return to_mask(x for x in range(P.n) if is_quasicontinuous_element(P, x))


def is_directed_sup_of(P: FinitePoset, x: int, W: int) -> bool:
    """Whether some nonempty directed ``D ⊆ W`` has supremum ``x``."""
    cand = W & P.down[x]
    if cand.bit_count() > SUBFAMILY_CAP:
        raise SizeLimit(f"directed subfamily search over 2^{cand.bit_count()} sets")
    for D in submasks(cand):
        if D and P.is_directed_mask(D) and P.greatest_in(D) == x:
            return True
    return False


@dataclass(frozen=True)
class HypothesisReport:
    dl_sup: bool
    dl_sup_via_points: bool
    bounded_sober: bool
    every_element_dl_sup: bool
    every_element_qc_sup: bool
    property_M: bool
    cor16_hypotheses: bool
    thm15_hypotheses: bool
    thm22_hypotheses: bool


def _dl_sup_irr(irr) -> bool:
    I = irr.poset
    W = down_linear_mask(I)
    full = irr.base.full
    for k, F in enumerate(irr.irr_sets):
        if F == full:
            continue
        if not ((W >> k) & 1 or is_directed_sup_of(I, k, W)):
            return False
    return True


def _dl_sup_points(P: FinitePoset, irr) -> bool:
    """Proper irreducible sets must be ``↓x`` with ``x`` reached as the sup of
    a maximal directed family of down-linear elements below it."""
    W = down_linear_mask(P)
    principal = {P.down[x]: x for x in range(P.n)}
    for F in irr.irr_sets:
        if F == P.full:
            continue
        x = principal.get(F)
        if x is None:
            return False
        below = W & P.down[x]
        reached = {P.greatest_in(P.down[g] & below) for g in bits(below)}
        if x not in reached:
            return False
    return True


def hypothesis_check(P: FinitePoset) -> HypothesisReport:
    X = scott_space(P)
    irr = irr_structure(X)
    dl = _dl_sup_irr(irr)
    dl_alt = _dl_sup_points(P, irr)
    if dl != dl_alt:
        raise RuntimeError("the two (DL-sup) computations disagree")
    bounded = sobriety_report(X, irr).is_bounded_sober
    W = down_linear_mask(P)
    Q = quasicontinuous_mask(P)
    dl_cond = all(is_directed_sup_of(P, a, W) for a in range(P.n))
    qc_cond = all(is_directed_sup_of(P, a, Q) for a in range(P.n))
    has_M = property_mM_report(P).has_M
    return HypothesisReport(
        dl_sup=dl,
        dl_sup_via_points=dl_alt,
        bounded_sober=bounded,
        every_element_dl_sup=dl_cond,
        every_element_qc_sup=qc_cond,
        property_M=has_M,
        cor16_hypotheses=bounded and dl_cond,
        thm15_hypotheses=bounded and qc_cond,
        thm22_hypotheses=has_M and dl_cond,
    )


def restriction_check(P: FinitePoset, A) -> bool:
    """Scott-closed subsets of the sub-dcpo ``A`` are exactly the Scott-closed
    subsets of ``P`` inside ``A``."""
    mask = A if isinstance(A, int) else to_mask(A)
    if not mask or not P.is_lower_mask(mask):
        raise NotScottClosed("restriction needs a nonempty Scott-closed set")
    idx = list(bits(mask))
    sub = P.sub_poset(mask)
    lifted = {to_mask(idx[k] for k in bits(B)) for B in lower_set_masks(sub)}
    inside = {B for B in lower_set_masks(P) if B & mask == B}
    return lifted == inside


@dataclass(frozen=True)
class ElementClassification:
    labels: tuple
    down_linear: tuple
    quasicontinuous_element: tuple
    quasicontinuous: bool
    dl_sup: bool
    thm15_hypotheses: bool
    cor16_hypotheses: bool
    thm22_hypotheses: bool

    def elements(self) -> list:
        return [
            {"label": lab, "down_linear": d, "quasicontinuous_element": q}
            for lab, d, q in zip(self.labels, self.down_linear, self.quasicontinuous_element)
        ]


def classify(P: FinitePoset, hyp: HypothesisReport | None = None) -> ElementClassification:
    hyp = hyp or hypothesis_check(P)
    return ElementClassification(
        labels=P.labels,
        down_linear=tuple(is_down_linear(P, a) for a in range(P.n)),
        quasicontinuous_element=tuple(is_quasicontinuous_element(P, a) for a in range(P.n)),
        quasicontinuous=quasicontinuity_report(P).quasicontinuous,
        dl_sup=hyp.dl_sup,
        thm15_hypotheses=hyp.thm15_hypotheses,
        cor16_hypotheses=hyp.cor16_hypotheses,
        thm22_hypotheses=hyp.thm22_hypotheses,
    )
