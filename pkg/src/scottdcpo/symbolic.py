"""Exact order oracles for two infinite non-sober dcpos.

``Johnstone``: ``N × (N ∪ {∞})`` with ``(m,n) <= (m',n')`` iff ``m = m'`` and
``n <= n'``, or ``n' = ∞`` and ``n <= m'``.

``Kou``: points ``x ∈ (0,1]`` and triples ``(k,a,b)`` with ``0<k<1`` and
``0<b<=a<=1``.  Distinct points are incomparable, triples are ordered by
``k`` on a fixed ``(a,b)``, and ``(k,a,b) ⊑ x`` iff ``a = x`` or
``kb <= x < b``.

Claims about suprema are decided by characterising *all* upper bounds through
a case split on element shapes; sampling is only used for the order axioms.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

from .elements import is_down_linear
from .errors import FormatError, ScottError
from .poset import FinitePoset


class Infinity(enum.Enum):
    INF = "inf"

    def __repr__(self) -> str:
        return "INF"


INF = Infinity.INF


class JohnstoneElement(NamedTuple):
    m: int
    n: Union[int, Infinity]

    def label(self) -> str:
        return f"({self.m},{'inf' if self.n is INF else self.n})"


def johnstone(m: int, n) -> JohnstoneElement:
    if not isinstance(m, int) or m < 1:
        raise ScottError(f"first coordinate must be a positive integer, got {m!r}")
    if n is not INF and (not isinstance(n, int) or n < 1):
        raise ScottError(f"second coordinate must be a positive integer or INF, got {n!r}")
    return JohnstoneElement(m, n)


def _le_ext(a, b) -> bool:
    """``<=`` on ``N ∪ {∞}``."""
    if b is INF:
        return True
    if a is INF:
        return False
    return a <= b


def johnstone_leq(u: JohnstoneElement, v: JohnstoneElement) -> bool:
    m, n = u
    m2, n2 = v
    if m == m2 and _le_ext(n, n2):
        return True
    return n2 is INF and _le_ext(n, m2)


def johnstone_truncate(M: int, N: int) -> FinitePoset:
    """Restriction to ``m <= M`` and ``n <= N`` or ``n = ∞``."""
    if M < 1 or N < 1:
        raise ScottError("truncation bounds must be positive")
    elems = [JohnstoneElement(m, n) for m in range(1, M + 1) for n in [*range(1, N + 1), INF]]
    P = FinitePoset.from_relation(elems, johnstone_leq)
    return FinitePoset([e.label() for e in elems], P.up)


def johnstone_truncation_elements(M: int, N: int) -> list:
    return [JohnstoneElement(m, n) for m in range(1, M + 1) for n in [*range(1, N + 1), INF]]


def johnstone_lower_set(u: JohnstoneElement) -> list:
    """Exact down-set of ``(m, n)`` for finite ``n``.

    Clause two needs ``n = ∞`` on the upper side, so only clause one applies:
    ``m' = m`` and ``n' <= n``, which also excludes ``n' = ∞``.
    """
    m, n = u
    if n is INF:
        raise ScottError("the down-set of (m, inf) is infinite")
    return [JohnstoneElement(m, k) for k in range(1, n + 1)]


def johnstone_row_threshold(m: int, v: JohnstoneElement):
    """Largest ``K`` with ``(m,k) <= v`` for all ``k <= K``, or INF.

    Both clauses define down-closed sets of ``k``: clause one is
    ``k <= n'`` when ``m' = m``, clause two ``k <= m'`` when ``n' = ∞``.
    """
    m2, n2 = v
    if m2 == m and n2 is INF:
        return INF
    k1 = n2 if m2 == m else 0
    k2 = m2 if n2 is INF else 0
    return max(k1, k2)


def johnstone_row_witness(m: int, v: JohnstoneElement):
    """A row index ``k`` with ``(m,k) ≰ v``, or None if ``v`` bounds the row."""
    K = johnstone_row_threshold(m, v)
    if K is INF:
        return None
    k = K + 1
    assert not johnstone_leq(JohnstoneElement(m, k), v)
    return k


def johnstone_row_upper_bounds(m: int) -> list:
    """All upper bounds of ``{(m,k) : k ∈ N}``.

    A candidate ``(m',n')`` bounds the row iff the ``k`` covered by the two
    clauses is unbounded.  Clause one covers ``k <= n'`` when ``m' = m``,
    clause two covers ``k <= m'`` when ``n' = ∞``.
    """
    out = []
    for same_row in (True, False):
        for n_inf in (True, False):
            # clause one: k <= n' on the same row, unbounded only when n' = ∞
            unbounded1 = same_row and n_inf
            # clause two: k <= m' when n' = ∞, bounded because m' is finite
            unbounded2 = False
            if unbounded1 or unbounded2:
                # same row and n' = ∞ fix the candidate completely
                out.append(JohnstoneElement(m, INF))
    return out


def johnstone_infinite_point_not_down_linear(m: int) -> tuple:
    """Two incomparable elements below ``(m, ∞)`` in the full space."""
    top = JohnstoneElement(m, INF)
    pair = (JohnstoneElement(1, 1), JohnstoneElement(m, 1)) if m >= 2 else (
        JohnstoneElement(1, 2), JohnstoneElement(2, 1))
    a, b = pair
    assert johnstone_leq(a, top) and johnstone_leq(b, top)
    assert not johnstone_leq(a, b) and not johnstone_leq(b, a)
    return pair


@dataclass
class ClaimsReport:
    name: str
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def record(self, key: str, ok: bool, detail=None) -> None:
        self.checks[key] = self.checks.get(key, 0) + 1
        if not ok:
            self.failures.append((key, detail))

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "checks": dict(sorted(self.checks.items())),
            "failures": [[k, repr(d)] for k, d in self.failures],
            "ok": self.ok,
        }


def johnstone_claims(M: int, N: int) -> ClaimsReport:
    rep = ClaimsReport("johnstone")
    elems = johnstone_truncation_elements(M, N)
    T = johnstone_truncate(M, N)
    pos = {e: i for i, e in enumerate(elems)}
    for e in elems:
        if e.n is INF:
            continue
        down = johnstone_lower_set(e)
        chain = all(johnstone_leq(a, b) or johnstone_leq(b, a) for a in down for b in down)
        rep.record("lower_set_is_chain", chain, e)
        in_trunc = {elems[j] for j in range(T.n) if T.leq(j, pos[e])}
        rep.record("lower_set_matches_truncation", in_trunc == set(down), e)
        rep.record("down_linear_in_truncation", is_down_linear(T, pos[e]), e)
    for m in range(1, M + 1):
        ub = johnstone_row_upper_bounds(m)
        rep.record("row_upper_bounds", ub == [JohnstoneElement(m, INF)], (m, ub))
        for v in elems:
            w = johnstone_row_witness(m, v)
            rep.record("row_witness", (w is None) == (v == JohnstoneElement(m, INF)), (m, v))
        johnstone_infinite_point_not_down_linear(m)
        rep.record("inf_point_not_down_linear", True, m)
        ti = pos[JohnstoneElement(m, INF)]
        rep.record("inf_point_truncation_chain_iff_M_is_1", is_down_linear(T, ti) == (M == 1), m)
    return rep


# Kou

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or an integer; decimals are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise FormatError(f"rational must be a 'p/q' string, got {text!r}")
    mt = _RATIONAL.match(text)
    if not mt:
        raise FormatError(f"not a rational literal: {text!r}")
    q = int(mt.group(2)) if mt.group(2) else 1
    if q == 0:
        raise FormatError("zero denominator")
    return Fraction(int(mt.group(1)), q)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Point:
    x: Fraction

    def __post_init__(self):
        x = parse_rational(self.x)
        object.__setattr__(self, "x", x)
        if not 0 < x <= 1:
            raise ScottError(f"point must lie in (0, 1], got {x}")


@dataclass(frozen=True)
class Triple:
    k: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        k, a, b = (parse_rational(v) for v in (self.k, self.a, self.b))
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not (0 < k < 1 and 0 < b <= a <= 1):
            raise ScottError(f"triple out of range: ({k}, {a}, {b})")


KouElement = Union[Point, Triple]


def kou_leq(u: KouElement, v: KouElement) -> bool:
    if isinstance(u, Point):
        return isinstance(v, Point) and u.x == v.x
    if isinstance(v, Triple):
        return u.k <= v.k and u.a == v.a and u.b == v.b
    return u.a == v.x or u.k * u.b <= v.x < u.b


@dataclass(frozen=True)
class TripleSegment:
    """``{(k, a, b) : 0 < k <= upper}``."""

    a: Fraction
    b: Fraction
    upper: Fraction

    def __contains__(self, u) -> bool:
        return isinstance(u, Triple) and u.a == self.a and u.b == self.b and u.k <= self.upper

    def is_chain(self) -> bool:
        # on fixed (a, b) the order compares the first coordinate, a total order
        return True


def kou_lower_set(u: Triple) -> TripleSegment:
    """Down-set of a triple: points are never below triples, and a triple
    ``(k,a',b')`` is below ``(h,a,b)`` iff ``a'=a``, ``b'=b``, ``k<=h``."""
    if not isinstance(u, Triple):
        raise ScottError("only the down-set of a triple is a segment")
    return TripleSegment(u.a, u.b, u.k)


def kou_chain_witness(x: Fraction, v: KouElement):
    """A ``k ∈ (0,1)`` with ``(k,x,x) ⋢ v``, or None if ``v`` bounds the chain."""
    x = parse_rational(x)
    if isinstance(v, Triple):
        if (v.a, v.b) != (x, x):
            k = Fraction(1, 2)
        else:
            # needs k <= h for every k < 1, but h < 1
            k = (v.k + 1) / 2
    elif v.x == x:
        return None
    elif v.x > x:
        # the second disjunct needs v.x < x
        k = Fraction(1, 2)
    else:
        # the second disjunct needs k*x <= v.x for all k < 1
        k = (v.x / x + 1) / 2
    assert 0 < k < 1 and not kou_leq(Triple(k, x, x), v)
    return k


def kou_chain_upper_bounds(x) -> list:
    """All upper bounds of ``{(k,x,x) : 0<k<1}``, by shape.

    Triples: need ``(a',b') = (x,x)`` and ``k <= h`` for all ``k < 1``; the sup
    of ``k`` over the open interval is 1 and ``h < 1``, so none.
    Points ``y``: ``y = x`` satisfies every ``k``; otherwise ``k*x <= y < x``
    for all ``k`` demands ``y >= sup k*x = x`` and ``y < x``, so none.
    """
    x = parse_rational(x)
    out = []
    # sup of k over the open interval (0, 1); not attained
    sup_k = Fraction(1)
    # triple (h, x, x): h >= sup_k and h < 1
    if _nonempty(sup_k, True, Fraction(1), False):
        raise AssertionError("a triple bounds the chain")
    # point y != x: sup_k * x <= y < x
    if _nonempty(sup_k * x, True, x, False):
        raise AssertionError("a point other than x bounds the chain")
    # point y == x: the first disjunct holds for every k
    out.append(Point(x))
    return out


def _nonempty(lo: Fraction, lo_closed: bool, hi: Fraction, hi_closed: bool) -> bool:
    return lo < hi or (lo == hi and lo_closed and hi_closed)


KOU_POOL = 12


def _random_rational(rng: random.Random, lo_open: bool = True, hi: int = 1, den: int = 1000) -> Fraction:
    while True:
        q = rng.randint(1, den)
        p = rng.randint(0, q * hi)
        v = Fraction(p, q)
        if v > 0 or not lo_open:
            return v


def random_kou_element(rng: random.Random, pool: list) -> KouElement:
    """Random element biased toward comparable configurations via ``pool``.

    Triples are only comparable when they share ``(a, b)``, so the pool of
    pairs stays small and the latest pair recurs.
    """
    r = rng.random()
    if pool and r < 0.5:
        # the most recent pair, so consecutive draws tend to be comparable
        a, b = pool[-1]
    elif len(pool) >= KOU_POOL or (pool and r < 0.8):
        a, b = pool.pop(rng.randrange(len(pool)))
        pool.append((a, b))
    else:
        a = _random_rational(rng)
        b = _random_rational(rng)
        if b > a:
            a, b = b, a
        pool.append((a, b))
    if rng.random() < 0.5:
        while True:
            k = _random_rational(rng)
            if k < 1:
                return Triple(k, a, b)
    r = rng.random()
    if r < 0.3:
        return Point(a)
    if r < 0.6:
        # lands in [k*b, b) for many k
        lo = b / 2
        return Point(lo + (b - lo) * Fraction(rng.randint(0, 999), 1000))
    return Point(_random_rational(rng))


def random_johnstone_element(rng: random.Random) -> JohnstoneElement:
    bound = 1000 if rng.random() < 0.3 else 6
    m = rng.randint(1, bound)
    n = INF if rng.random() < 0.3 else rng.randint(1, bound)
    return JohnstoneElement(m, n)


@dataclass
class AxiomReport:
    oracle: str
    seed: int
    trials: int
    violations: dict
    nontrivial: dict

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_dict(self) -> dict:
        return {
            "oracle": self.oracle,
            "seed": self.seed,
            "trials": self.trials,
            "violations": self.violations,
            "nontrivial": self.nontrivial,
            "ok": self.ok,
        }


def order_axioms_sample(oracle: str, seed: int, trials: int) -> AxiomReport:
    """Check reflexivity, antisymmetry and transitivity on ``trials`` random
    triples ``(u, v, w)``.  ``nontrivial`` counts premises that actually held."""
    if trials < 1:
        raise ScottError("trials must be at least 1")
    rng = random.Random(seed)
    if oracle == "johnstone":
        leq = johnstone_leq

        def draw():
            return random_johnstone_element(rng)

    elif oracle == "kou":
        leq = kou_leq
        pool: list = []

        def draw():
            return random_kou_element(rng, pool)

    else:
        raise ScottError(f"unknown oracle {oracle!r}")
    viol = {"reflexive": 0, "antisymmetric": 0, "transitive": 0}
    nontrivial = {"antisymmetric": 0, "transitive": 0}
    for _ in range(trials):
        u, v, w = draw(), draw(), draw()
        for e in (u, v, w):
            if not leq(e, e):
                viol["reflexive"] += 1
        for a, b in ((u, v), (v, w), (u, w)):
            if leq(a, b) and leq(b, a):
                nontrivial["antisymmetric"] += 1
                if a != b:
                    viol["antisymmetric"] += 1
        uv, vw = leq(u, v), leq(v, w)
        if uv and vw:
            nontrivial["transitive"] += 1
            if not leq(u, w):
                viol["transitive"] += 1
    return AxiomReport(oracle, seed, trials, viol, nontrivial)


def kou_claims(sample_seed: int, trials: int, xs: int = 20) -> ClaimsReport:
    if trials < 1:
        raise ScottError("trials must be at least 1")
    rng = random.Random(sample_seed)
    rep = ClaimsReport("kou")
    pool: list = []
    for _ in range(xs):
        x = _random_rational(rng)
        ub = kou_chain_upper_bounds(x)
        rep.record("chain_upper_bounds", ub == [Point(x)], x)
        for _ in range(50):
            v = random_kou_element(rng, pool + [(x, x)])
            w = kou_chain_witness(x, v)
            rep.record("chain_witness", (w is None) == (v == Point(x)), (x, v))
        for v in (Point(x), Triple(Fraction(1, 2), x, x), Triple(Fraction(999, 1000), x, x)):
            rep.record("chain_witness_edge", (kou_chain_witness(x, v) is None) == (v == Point(x)), (x, v))
    for _ in range(xs):
        u = random_kou_element(rng, pool)
        while not isinstance(u, Triple):
            u = random_kou_element(rng, pool)
        seg = kou_lower_set(u)
        rep.record("lower_set_shape", seg == TripleSegment(u.a, u.b, u.k) and seg.is_chain(), u)
        for _ in range(50):
            v = random_kou_element(rng, pool + [(u.a, u.b)])
            rep.record("lower_set_membership", (v in seg) == kou_leq(v, u), (v, u))
    axioms = order_axioms_sample("kou", sample_seed, trials)
    rep.record("order_axioms", axioms.ok, axioms.violations)
    return rep
