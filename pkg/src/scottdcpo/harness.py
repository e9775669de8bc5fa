"""Exhaustive verification suites over all small posets."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .elements import (
    RAW_FIN_CAP,
    fin_raw,
    fin_representatives,
    hypothesis_check,
    is_down_linear,
    is_quasicontinuous_element,
    quasicontinuity_report,
    restriction_check,
    way_below_fin,
)
from .enumeration import MAX_ENUMERATION, enumerate_posets
from .errors import NotScottClosed, SizeLimit, UnknownSuite
from .isomorphism import canonical_form, is_isomorphic
from .lattice import (
    as_abstract,
    beneath,
    beneath_lowersets,
    c_compact_elements,
    closed_set_lattice,
    irreducibility_report,
    lattice_isomorphism,
    reconstruct_poset,
    scott_closed_lattice,
    vee_irreducible_check,
)
from .poset import FinitePoset, add_top, bits, directed_subset_masks, lower_set_masks, property_mM_report, remove_element
from .sobrification import (
    eta_is_homeomorphism,
    fact2_check,
    hull_kernel_sobrification,
    irr_directed_sup_matches_closure,
    irr_structure,
    is_irreducible_closed,
    is_scott_sobrifiable,
    sobriety_report,
    specialization_is_inclusion,
)
from .topology import classify_space, scott_space, specialization_order

SUITES = (
    "uniqueness",
    "kappa",
    "fact2",
    "quasicontinuity",
    "restriction",
    "top-extension",
    "sobriety",
    "hypotheses",
)
#: Sizes above this need ``allow_large``.
DEFAULT_MAX_N = 5


@dataclass
class VerificationReport:
    suite: str
    n: int
    checked: int = 0
    failures: list = field(default_factory=list)  # [canonical hex, assertion id]
    elapsed_ms: int = 0
    status: str = "pass"
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass" and not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        """Fixed key order; ``timing=False`` drops the only nondeterministic field."""
        d = asdict(self)
        keys = ("suite", "n", "checked", "failures", "elapsed_ms", "status", "details")
        return {k: d[k] for k in keys if timing or k != "elapsed_ms"}


def _hex(P: FinitePoset) -> str:
    return canonical_form(P).hex()


# per-poset check functions return the ids of failed assertions


def check_reconstruction(P: FinitePoset) -> list:
    L = as_abstract(scott_closed_lattice(P))
    return [] if is_isomorphic(reconstruct_poset(L), P) else ["reconstruct"]


def check_kappa(P: FinitePoset) -> list:
    fails = []
    F = scott_closed_lattice(P)
    L = as_abstract(F)
    principal = {F.index(P.down[x]) for x in range(P.n)}
    kappa = c_compact_elements(L)
    # the empty set is the lattice bottom and is C-compact by definition
    bottom = F.index(0)
    if bottom not in kappa:
        fails.append("bottom_c_compact")
    kappa = kappa - {bottom}
    if kappa != principal:
        fails.append("kappa_is_principal_ideals")
    if not property_mM_report(P).has_M:
        fails.append("property_M")
    X = scott_space(P)
    irr = {F.index(A) for A in irr_structure(X).irr_sets}
    if not kappa <= irr:
        fails.append("c_compact_irreducible")
    if not all(vee_irreducible_check(L, a) for a in kappa):
        fails.append("c_compact_vee_irreducible")
    for x in range(L.n):
        for y in range(L.n):
            b = beneath(L, x, y)
            if b and not L.leq(x, y):
                fails.append("beneath_below")
            if L.n <= 12 and b != beneath_lowersets(L, x, y):
                fails.append("beneath_lowerset_crosscheck")
            if b:
                for x2 in bits(L.down[x]):
                    if not beneath(L, x2, y):
                        fails.append("beneath_lower_closed")
    return sorted(set(fails))


def check_fact2(P: FinitePoset) -> list:
    fails = []
    X = scott_space(P)
    r = fact2_check(X)
    if not r.agree:
        fails.append("fact2_agree")
    if not (r.lhs and r.rhs):
        fails.append("fact2_both_true")
    L = as_abstract(closed_set_lattice(X))
    if any(e.strongly_irreducible and not e.irreducible for e in irreducibility_report(L)):
        fails.append("strong_implies_irreducible")
    return fails


def check_quasicontinuity(P: FinitePoset) -> list:
    fails = []
    for x in range(P.n):
        for F in range(1, 1 << P.n):
            try:
                way_below_fin(P, F, x, method="both")
            except RuntimeError:
                fails.append("way_below_reduction")
                break
    if not quasicontinuity_report(P).quasicontinuous:
        fails.append("quasicontinuous")
    if P.n <= RAW_FIN_CAP:
        if not quasicontinuity_report(P, method="raw").quasicontinuous:
            fails.append("quasicontinuous_raw")
        for x in range(P.n):
            ups = {P.upper_mask(F) for F in fin_raw(P, x)}
            minimal = sorted(u for u in ups if not any(v != u and v & u == v for v in ups))
            if minimal != fin_representatives(P, x):
                fails.append("fin_representatives")
                break
    return sorted(set(fails))


def check_restriction(P: FinitePoset) -> list:
    fails = [] if all(restriction_check(P, A) for A in lower_set_masks(P) if A) else ["restriction"]
    try:
        restriction_check(P, 0)
        fails.append("empty_rejected")
    except NotScottClosed:
        pass
    return fails


def check_top_extension(P: FinitePoset) -> list:
    fails = []
    T = add_top(P)
    top = T.n - 1
    if not is_isomorphic(reconstruct_poset(as_abstract(scott_closed_lattice(T))), T):
        fails.append("reconstruct_extended")
    if len(scott_closed_lattice(T)) != len(scott_closed_lattice(P)) + 1:
        fails.append("one_new_closed_set")
    if not is_isomorphic(remove_element(T, top), P):
        fails.append("remove_top_round_trip")
    rep = sobriety_report(scott_space(T))
    if not (rep.is_sober and rep.is_bounded_sober):
        fails.append("extended_sober")
    if is_down_linear(T, top) != P.is_chain_mask(P.full):
        fails.append("top_down_linear_iff_chain")
    return fails


def check_sobriety(P: FinitePoset) -> list:
    fails = []
    X = scott_space(P)
    irr = irr_structure(X)
    rep = sobriety_report(X, irr)
    if not rep.is_sober:
        fails.append("sober")
    if rep.is_sober and not rep.is_bounded_sober:
        fails.append("sober_implies_bounded")
    if not all(is_irreducible_closed(X, X.point_closure(x)) for x in range(X.m)):
        fails.append("point_closure_irreducible")
    Y = hull_kernel_sobrification(X, irr)
    if not eta_is_homeomorphism(X, Y, irr):
        fails.append("eta_homeomorphism")
    if lattice_isomorphism(as_abstract(closed_set_lattice(Y)), as_abstract(closed_set_lattice(X))) is None:
        fails.append("closed_lattice_isomorphic")
    if is_scott_sobrifiable(X, irr) != rep.is_sober:
        fails.append("scott_sobrifiable_iff_sober")
    if not specialization_is_inclusion(Y, irr):
        fails.append("specialization_is_inclusion")
    if not is_isomorphic(specialization_order(X), P):
        fails.append("specialization_recovers_order")
    cls = classify_space(X)
    if not (cls.is_T0 and cls.is_TD and cls.is_d_space):
        fails.append("finite_T0_is_TD_and_d_space")
    I = irr.poset
    for D in directed_subset_masks(I):
        if not irr_directed_sup_matches_closure(irr, D):
            fails.append("directed_sup_is_closure_of_union")
            break
    S = specialization_order(X)
    for D in directed_subset_masks(S):
        top = S.greatest_in(D)
        fam = 0
        for x in bits(D):
            fam |= 1 << irr.unit[x]
        if I.greatest_in(fam) != irr.unit[top]:
            fails.append("sup_of_point_closures")
            break
    return fails


def check_hypotheses(P: FinitePoset) -> list:
    fails = []
    h = hypothesis_check(P)
    for a in range(P.n):
        if is_down_linear(P, a) and not is_quasicontinuous_element(P, a):
            fails.append("down_linear_implies_qc")
            break
    if h.cor16_hypotheses and not h.thm15_hypotheses:
        fails.append("cor16_implies_thm15")
    if (h.dl_sup or h.cor16_hypotheses or h.thm15_hypotheses or h.thm22_hypotheses) and check_reconstruction(P):
        fails.append("conclusion_holds")
    return fails


CHECKS = {
    "kappa": check_kappa,
    "fact2": check_fact2,
    "quasicontinuity": check_quasicontinuity,
    "restriction": check_restriction,
    "top-extension": check_top_extension,
    "sobriety": check_sobriety,
    "hypotheses": check_hypotheses,
}


def _run_check(args):
    suite, P = args
    return _hex(P), CHECKS[suite](P)


def _uniqueness_row(P: FinitePoset):
    L = as_abstract(scott_closed_lattice(P))
    R = reconstruct_poset(L)
    return canonical_form(P), canonical_form(R), L, is_isomorphic(R, P)


def _map(fn, items, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items, chunksize=8))
    return [fn(x) for x in items]


def _posets_up_to(n: int) -> list:
    return [P for k in range(1, n + 1) for P in enumerate_posets(k)]


def verify_uniqueness(n: int, jobs: int = 1) -> VerificationReport:
    """For every pair ``(P, Q)`` of posets with at most ``n`` elements:
    ``C_σ(P) ≅ C_σ(Q)`` iff ``P ≅ Q``, judged by comparing reconstructions and
    by direct lattice isomorphism search."""
    rep = VerificationReport("uniqueness", n)
    posets = _posets_up_to(n)
    rows = _map(_uniqueness_row, posets, jobs)
    for P, (cf, _, _, ok) in zip(posets, rows):
        if not ok:
            rep.failures.append([cf.hex(), "reconstruct"])
    pairs = 0
    for i in range(len(rows)):
        cf_i, rc_i, L_i, _ = rows[i]
        for j in range(i, len(rows)):
            cf_j, rc_j, L_j, _ = rows[j]
            pairs += 1
            same_poset = cf_i == cf_j
            by_reconstruction = rc_i == rc_j
            direct = L_i.n == L_j.n and lattice_isomorphism(L_i, L_j) is not None
            tag = f"{cf_i.hex()}|{cf_j.hex()}"
            if by_reconstruction != same_poset:
                rep.failures.append([tag, "reconstruction_oracle"])
            if direct != by_reconstruction:
                rep.failures.append([tag, "direct_lattice_crosscheck"])
    rep.checked = len(posets)
    top = sum(1 for P in posets if P.n == n)
    rep.details = {"pairs": pairs, "posets_at_n": top, "pairs_at_n": top * (top + 1) // 2}
    return rep


def verify(suite: str, n: int, jobs: int = 1, allow_large: bool = False):
    """Run ``suite`` over all posets with at most ``n`` elements.

    ``suite="all"`` returns a list of reports; anything else one report.
    """
    if suite == "all":
        return [verify(s, n, jobs, allow_large) for s in SUITES]
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    start = time.perf_counter()
    if n > MAX_ENUMERATION or (n > DEFAULT_MAX_N and not allow_large):
        rep = VerificationReport(suite, n, status="size_limit")
        rep.details = {"reason": f"n={n} needs allow_large (cap {MAX_ENUMERATION})"}
        return rep
    try:
        if suite == "uniqueness":
            rep = verify_uniqueness(n, jobs)
        else:
            rep = VerificationReport(suite, n)
            posets = _posets_up_to(n)
            for cf, fails in _map(_run_check, [(suite, P) for P in posets], jobs):
                rep.failures.extend([cf, f] for f in fails)
            rep.checked = len(posets)
    except SizeLimit as exc:
        rep = VerificationReport(suite, n, status="size_limit", details={"reason": str(exc)})
    rep.failures.sort()
    if rep.failures:
        rep.status = "fail"
    rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep


def verify_sobriety_suite(n: int, jobs: int = 1) -> VerificationReport:
    return verify("sobriety", n, jobs, allow_large=True)
