import pytest
from hypothesis import given, settings

from conftest import diamond, posets
from scottdcpo.enumeration import enumerate_posets
from scottdcpo.errors import CycleDetected, NotAPartialOrder, NotDirected, SizeLimit, UnknownLabel
from scottdcpo.isomorphism import is_isomorphic
from scottdcpo.poset import (
    FinitePoset,
    add_top,
    antichain,
    bits,
    chain,
    directed_subset_masks,
    directed_sup,
    from_cover_relation,
    is_directed,
    lower_set,
    lower_set_masks,
    members,
    minimal_upper_bounds,
    property_mM_report,
    remove_element,
    submasks,
    upper_set,
)


def small_posets(max_n=5):
    for n in range(1, max_n + 1):
        yield from enumerate_posets(n)


def test_cover_relation_chain():
    P = from_cover_relation(["a", "b"], [("a", "b")])
    assert P.leq(0, 1) and not P.leq(1, 0)
    assert P.cover_pairs() == [(0, 1)]


def test_singleton():
    P = from_cover_relation(["a"], [])
    assert P.n == 1 and P.leq(0, 0)


def test_cycle_rejected():
    with pytest.raises(CycleDetected):
        from_cover_relation(["a", "b"], [("a", "b"), ("b", "a")])


def test_longer_cycle_rejected():
    with pytest.raises(CycleDetected):
        from_cover_relation(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def test_self_loop_is_harmless():
    P = from_cover_relation(["a"], [("a", "a")])
    assert P.n == 1


def test_unknown_label():
    with pytest.raises(UnknownLabel):
        from_cover_relation(["a"], [("a", "b")])


def test_duplicate_labels():
    with pytest.raises(NotAPartialOrder):
        from_cover_relation(["a", "a"], [])


def test_matrix_must_be_transitive():
    with pytest.raises(NotAPartialOrder):
        FinitePoset.from_matrix("abc", [[1, 1, 0], [0, 1, 1], [0, 0, 1]])


def test_matrix_must_be_reflexive():
    with pytest.raises(NotAPartialOrder):
        FinitePoset.from_matrix("ab", [[0, 1], [0, 1]])


def test_transitive_closure_of_covers():
    P = from_cover_relation("abc", [("a", "b"), ("b", "c")])
    assert P.leq(0, 2)
    assert P.cover_pairs() == [(0, 1), (1, 2)]


def test_lower_and_upper_sets():
    assert lower_set(chain(2), [1]) == {0, 1}
    assert lower_set(antichain(2), [0]) == {0}
    D = diamond()
    x, top = D.index("x"), D.index("top")
    assert upper_set(D, [x]) == {x, top}
    assert lower_set(D, []) == frozenset()


def test_directed_sup():
    assert directed_sup(chain(3), [0, 1]) == 1
    with pytest.raises(NotDirected):
        directed_sup(antichain(2), [0, 1])
    D = diamond()
    assert directed_sup(D, [D.index("x"), D.index("top")]) == D.index("top")


def test_empty_set_not_directed():
    assert not is_directed(chain(2), [])
    with pytest.raises(NotDirected):
        directed_sup(chain(2), [])


def test_minimal_upper_bounds():
    D = diamond()
    assert minimal_upper_bounds(D, [D.index("x"), D.index("y")]) == {D.index("top")}
    assert minimal_upper_bounds(antichain(2), [0, 1]) == frozenset()
    P = from_cover_relation("abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    assert minimal_upper_bounds(P, [0, 1]) == {2, 3}


def test_mub_of_empty_set_is_minimal_elements():
    D = diamond()
    assert minimal_upper_bounds(D, []) == {D.index("bot")}
    assert minimal_upper_bounds(antichain(3), []) == {0, 1, 2}


def test_property_mM():
    assert property_mM_report(from_cover_relation("a", [])).has_M
    five = add_top(diamond())
    r = property_mM_report(five)
    assert r.has_m and r.has_M and r.witness is None


def test_property_mM_every_small_poset():
    for P in small_posets():
        r = property_mM_report(P)
        assert r.has_m and r.has_M


def test_property_mM_size_limit():
    with pytest.raises(SizeLimit):
        property_mM_report(antichain(17))


def test_add_top():
    T = add_top(antichain(2))
    assert T.n == 3 and T.greatest_in(T.full) == 2
    assert is_isomorphic(add_top(chain(1)), chain(2))
    for n in range(1, 6):
        assert is_isomorphic(add_top(chain(n)), chain(n + 1))


def test_add_top_label_collision():
    P = from_cover_relation(["top"], [])
    assert add_top(P).labels == ("top", "top'")


def test_add_top_round_trip():
    for P in small_posets(4):
        assert is_isomorphic(remove_element(add_top(P), P.n), P)


def test_closure_operators_exhaustive():
    for P in small_posets(4):
        for S in range(1 << P.n):
            for op in (P.lower_mask, P.upper_mask):
                c = op(S)
                assert c & S == S
                assert op(c) == c
                for T in submasks(S):
                    assert op(T) & c == op(T)


def test_directed_sup_exhaustive():
    for P in small_posets(5):
        for D in directed_subset_masks(P):
            s = directed_sup(P, bits(D))
            assert (D >> s) & 1
            assert D & P.down[s] == D


def test_lower_set_masks_against_brute_force():
    for P in small_posets(5):
        brute = sorted((m for m in range(1 << P.n) if P.is_lower_mask(m)), key=lambda m: (m.bit_count(), m))
        assert lower_set_masks(P) == brute


def test_sub_poset_and_relabel():
    D = diamond()
    S = D.sub_poset(D.full & ~(1 << D.index("top")))
    assert S.labels == ("bot", "x", "y")
    R = D.relabel([3, 2, 1, 0])
    assert is_isomorphic(R, D)


def test_members_helper():
    assert members(0b1011) == {0, 1, 3}


@settings(max_examples=60, deadline=None)
@given(posets(max_n=7))
def test_random_posets_are_partial_orders(P):
    M = P.leq_matrix
    for i in range(P.n):
        assert M[i][i]
        for j in range(P.n):
            if i != j:
                assert not (M[i][j] and M[j][i])
            for k in range(P.n):
                if M[i][j] and M[j][k]:
                    assert M[i][k]


@settings(max_examples=60, deadline=None)
@given(posets(max_n=7))
def test_cover_round_trip(P):
    Q = from_cover_relation(P.labels, [(P.labels[i], P.labels[j]) for i, j in P.cover_pairs()])
    assert Q == P
