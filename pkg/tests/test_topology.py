import pytest
from hypothesis import given, settings

from conftest import diamond, posets
from scottdcpo.enumeration import enumerate_posets
from scottdcpo.errors import NotAFamily, NotT0
from scottdcpo.isomorphism import is_isomorphic
from scottdcpo.poset import antichain, chain, submasks
from scottdcpo.topology import (
    FiniteSpace,
    classify_space,
    closure,
    from_closed_family,
    is_homeomorphism,
    is_t0,
    is_td,
    scott_space,
    specialization_order,
)


def sierpinski():
    return from_closed_family(["a", "b"], [[], ["a"], ["a", "b"]])


def closed_labels(X):
    return {frozenset(X.labels[i] for i in range(X.m) if (c >> i) & 1) for c in X.closed}


def test_scott_space_counts():
    assert closed_labels(scott_space(chain(2))) == {frozenset(), frozenset({"0"}), frozenset({"0", "1"})}
    assert len(scott_space(antichain(2)).closed) == 4
    X = scott_space(diamond())
    assert closed_labels(X) == {
        frozenset(),
        frozenset({"bot"}),
        frozenset({"bot", "x"}),
        frozenset({"bot", "y"}),
        frozenset({"bot", "x", "y"}),
        frozenset({"bot", "x", "y", "top"}),
    }


def test_chain_has_n_plus_one_closed_sets():
    for n in range(1, 8):
        assert len(scott_space(chain(n)).closed) == n + 1


def test_from_closed_family():
    X = from_closed_family(["a"], [[], ["a"]])
    assert X.m == 1
    assert sierpinski().m == 2
    with pytest.raises(NotT0):
        from_closed_family(["a", "b"], [[], ["a", "b"]])


def test_indiscrete_allowed_when_t0_not_required():
    X = from_closed_family(["a", "b"], [[], ["a", "b"]], require_t0=False)
    assert not is_t0(X)
    c = classify_space(X)
    assert (c.is_T0, c.is_TD, c.is_d_space) == (False, False, False)


def test_family_validation():
    with pytest.raises(NotAFamily):
        from_closed_family(["a", "b"], [["a"], ["a", "b"]])
    with pytest.raises(NotAFamily):
        from_closed_family(["a", "b"], [[], ["a"], ["b"]])
    with pytest.raises(NotAFamily):
        from_closed_family(["a", "b"], [[], ["a"], ["b"], ["a", "b"], ["c"]])
    with pytest.raises(NotAFamily):
        from_closed_family(["a", "b", "c"], [[], ["a"], ["b"], ["a", "b", "c"]])


def test_specialization_order():
    S = specialization_order(sierpinski())
    assert S.leq(0, 1) and not S.leq(1, 0)
    discrete = from_closed_family(["a", "b"], [[], ["a"], ["b"], ["a", "b"]])
    assert is_isomorphic(specialization_order(discrete), antichain(2))
    assert is_isomorphic(specialization_order(scott_space(diamond())), diamond())


def test_closure():
    X = sierpinski()
    assert closure(X, [1]) == {0, 1}
    assert closure(X, []) == frozenset()
    D = diamond()
    Y = scott_space(D)
    assert closure(Y, [D.index("x")]) == {D.index("bot"), D.index("x")}


def test_classify_every_small_space():
    for n in range(1, 6):
        for P in enumerate_posets(n):
            X = scott_space(P)
            c = classify_space(X)
            assert c.is_T0 and c.is_TD and c.is_d_space
            assert is_td(X)


def test_specialization_round_trip_and_closed_sets_are_lower():
    for n in range(1, 6):
        for P in enumerate_posets(n):
            X = scott_space(P)
            S = specialization_order(X)
            assert is_isomorphic(S, P)
            assert all(S.is_lower_mask(c) for c in X.closed)


def test_closure_operator_exhaustive():
    for n in range(1, 5):
        for P in enumerate_posets(n):
            X = scott_space(P)
            for A in range(1 << X.m):
                c = X.closure_mask(A)
                assert c & A == A and X.closure_mask(c) == c
                for B in submasks(A):
                    assert X.closure_mask(B) & c == X.closure_mask(B)


def test_homeomorphism():
    X = sierpinski()
    Y = FiniteSpace(["p", "q"], [0, 0b10, 0b11])
    assert is_homeomorphism(X, Y, [1, 0])
    assert not is_homeomorphism(X, Y, [0, 1])


def test_open_sets_are_complements():
    X = sierpinski()
    assert sorted(X.open_masks()) == [0, 0b10, 0b11]


@settings(max_examples=50, deadline=None)
@given(posets(max_n=7))
def test_random_scott_space_is_topology(P):
    X = scott_space(P)
    closed = set(X.closed)
    assert 0 in closed and X.full in closed
    for a in closed:
        for b in closed:
            assert a | b in closed and a & b in closed
    assert is_t0(X)
    assert is_isomorphic(specialization_order(X), P)
