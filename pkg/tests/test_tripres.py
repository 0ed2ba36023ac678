"""Triangle presentation axioms, enumeration, stabilizers, constructions."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigon.fgroup import FiniteGroup, make_cyclic, subgroup
from trigon.linkgraph import FSet, aut_full, aut_plus
from trigon.permgrp import Perm
from trigon.tripres import (
    IncompatiblePresentation,
    LambdaConditionFailed,
    OrbitNotInSubgroup,
    TrianglePresentation,
    Violation,
    act,
    build_T_kappa,
    build_from_lambda,
    classify,
    enumerate_all,
    format_table,
    generating_set,
    isomorphic_T,
    lambda_orbits,
    project_F,
    stabilizer_of_T,
    verify,
)

SQUARE_F = FSet.on_range(2, [(1, 1), (1, 2), (2, 1), (2, 2)])
SQUARE_T = TrianglePresentation((1, 2), frozenset({(1, 1, 2), (2, 2, 2)}))
ALT_F = FSet.on_range(
    4, [(i, j) for i in range(1, 5) for j in range(1, 5) if i != j]
)


def singer_f_q2():
    return FSet.on_range(
        7, [(x, (x + s) % 7) for x in range(7) for s in (1, 2, 4)], start=0
    )


def klein_group():
    return FiniteGroup(
        n=4,
        mul=lambda a, b: a ^ b,
        inv=lambda a: a,
        id=0,
        labels=("0", "1", "2", "3"),
        abelian=True,
    )


def exquad():
    g = make_cyclic(21)
    s = [7, 9, 14, 15, 18]
    lam = {x: (4 * x) % 21 for x in s}
    return g, s, lam


def test_rotation_closure_and_reps():
    t = TrianglePresentation((1, 2, 3), frozenset({(1, 2, 3)}))
    assert t.triples == {(1, 2, 3), (2, 3, 1), (3, 1, 2)}
    assert t.canonical_reps() == [(1, 2, 3)]
    with pytest.raises(ValueError):
        TrianglePresentation((1, 2), frozenset({(1, 2, 3)}))


def test_verify_square():
    assert verify(SQUARE_F, SQUARE_T) == []
    broken = TrianglePresentation((1, 2), frozenset({(1, 1, 2)}))
    bad = verify(SQUARE_F, broken)
    assert Violation(2, (2, 2)) in bad


def test_verify_projection_axiom():
    f = FSet.on_range(3, [(1, 2), (2, 3), (3, 1)])
    t = TrianglePresentation((1, 2, 3), frozenset({(1, 3, 2)}))
    bad = verify(f, t)
    assert any(v.axiom == 1 for v in bad)


def test_project_f():
    assert project_F(SQUARE_T) == SQUARE_F
    empty = TrianglePresentation((1, 2), frozenset())
    assert project_F(empty) == FSet.on_range(2, [])


def test_act_rho_fixes_square_t():
    assert act(SQUARE_T, Perm((0, 1)), use_rho=True).triples == SQUARE_T.triples


def test_enumerate_square():
    out = enumerate_all(SQUARE_F)
    assert len(out) == 2
    assert any(t.triples == SQUARE_T.triples for t in out)
    for t in out:
        assert verify(SQUARE_F, t) == []


def test_enumerate_alt():
    out = enumerate_all(ALT_F)
    assert len(out) == 2
    t1, t2 = out
    assert act(t1, Perm((0, 1, 3, 2))).triples == t2.triples


def test_enumerate_no_presentation():
    f = FSet.on_range(2, [(1, 1), (2, 1), (2, 2)])
    assert enumerate_all(f) == []
    assert classify(f) == []


def test_enumerate_singer_q2():
    out = enumerate_all(singer_f_q2())
    assert len(out) == 2
    cls = classify(singer_f_q2())
    assert [(c.orbit_size, c.aut_order) for c in cls] == [(2, 21)]


def test_most_constrained_toggle_is_invisible():
    for f in (SQUARE_F, ALT_F, singer_f_q2()):
        a = enumerate_all(f)
        b = enumerate_all(f, most_constrained=True)
        assert [t.triples for t in a] == [t.triples for t in b]


def test_stabilizer_alt():
    t1 = enumerate_all(ALT_F)[0]
    st = stabilizer_of_T(ALT_F, t1)
    assert st.plus.order() == 12
    assert st.rho_witness is not None
    assert st.rho_witness.images == (0, 1, 3, 2)
    assert st.order == 24


def test_stabilizer_rejects_incompatible():
    broken = TrianglePresentation((1, 2), frozenset({(1, 1, 2)}))
    with pytest.raises(IncompatiblePresentation):
        stabilizer_of_T(SQUARE_F, broken)


def test_classify_alt():
    cls = classify(ALT_F)
    assert [(c.orbit_size, c.aut_order) for c in cls] == [(2, 24)]
    assert aut_full(ALT_F).order == 48


def test_classify_square():
    cls = classify(SQUARE_F)
    assert [(c.orbit_size, c.aut_order) for c in cls] == [(2, 2)]


def test_isomorphic_alt_pair():
    t1, t2 = enumerate_all(ALT_F)
    w = isomorphic_T(ALT_F, t1, ALT_F, t2)
    assert w == (Perm((0, 1, 3, 2)), False)
    ident = isomorphic_T(ALT_F, t1, ALT_F, t1)
    assert ident == (Perm((0, 1, 2, 3)), False)


def test_build_from_lambda_z3():
    g = make_cyclic(3)
    t = build_from_lambda(g, [1, 2], {1: 1, 2: 2})
    assert t.triples == {
        (0, 1, 2), (1, 2, 0), (2, 0, 1),
        (0, 2, 1), (2, 1, 0), (1, 0, 2),
    }
    assert verify(project_F(t), t) == []


def test_build_from_lambda_empty():
    g = make_cyclic(3)
    t = build_from_lambda(g, [], {})
    assert t.triples == frozenset()
    assert project_F(t).pairs == frozenset()


def test_build_from_lambda_klein_matches_alt():
    g = klein_group()
    t = build_from_lambda(g, [1, 2, 3], {1: 2, 2: 3, 3: 1})
    f = project_F(t)
    assert f.position_pairs() == ALT_F.position_pairs()
    t1 = enumerate_all(ALT_F)[0]
    assert isomorphic_T(f, t, ALT_F, t1) is not None


def test_build_from_lambda_rejects_bad_map():
    g = make_cyclic(3)
    with pytest.raises(LambdaConditionFailed):
        build_from_lambda(g, [1, 2], {1: 2, 2: 1})
    with pytest.raises(LambdaConditionFailed):
        build_from_lambda(g, [1, 2], {1: 1})


def test_exquad_f_invariants():
    g, s, lam = exquad()
    t1 = build_from_lambda(g, s, lam)
    f = project_F(t1)
    assert len(f.pairs) == 105
    assert aut_plus(f).order() == 126
    af = aut_full(f)
    assert af.has_rho_part and af.order == 252


def test_lambda_orbits_exquad():
    _, s, lam = exquad()
    assert lambda_orbits(s, lam) == [(7,), (9, 15, 18), (14,)]


def test_build_t_kappa_all_plus_collapses():
    g, s, lam = exquad()
    h = subgroup(g, [3])
    t1 = build_from_lambda(g, s, lam)
    assert build_T_kappa(g, s, lam, h, {}).triples == t1.triples
    assert (
        build_T_kappa(g, s, lam, h, {(0, 9): 1, (1, 9): 1, (2, 9): 1}).triples
        == t1.triples
    )
    whole = subgroup(g, [1])
    assert build_T_kappa(g, s, lam, whole, {}).triples == t1.triples


def test_build_t_kappa_twist():
    g, s, lam = exquad()
    h = subgroup(g, [3])
    t1 = build_from_lambda(g, s, lam)
    t2 = build_T_kappa(g, s, lam, h, {(2, 9): -1})
    assert len(t1.triples ^ t2.triples) == 42
    coset2 = {x for x in range(21) if x % 3 == 2}
    for a, b, c in t1.triples - t2.triples:
        assert {a, b, c} <= coset2
    f = project_F(t1)
    assert verify(f, t2) == []
    st1 = stabilizer_of_T(f, t1)
    st2 = stabilizer_of_T(f, t2)
    assert st1.order == 126 and st1.rho_witness is None
    assert st2.order == 42 and st2.rho_witness is None
    assert isomorphic_T(f, t1, f, t2) is None


def test_exquad_classification():
    g, s, lam = exquad()
    f = project_F(build_from_lambda(g, s, lam))
    out = enumerate_all(f)
    assert len(out) == 8
    cls = classify(f)
    assert [(c.orbit_size, c.aut_order) for c in cls] == [(2, 126), (6, 42)]


def test_t_kappa_subgroup_invariance():
    g, s, lam = exquad()
    h = subgroup(g, [3])
    t2 = build_T_kappa(g, s, lam, h, {(2, 9): -1})
    shift3 = Perm(tuple((a + 3) % 21 for a in range(21)))
    shift1 = Perm(tuple((a + 1) % 21 for a in range(21)))
    assert act(t2, shift3).triples == t2.triples
    assert act(t2, shift1).triples != t2.triples


def test_t_kappa_validation():
    g, s, lam = exquad()
    h = subgroup(g, [3])
    with pytest.raises(OrbitNotInSubgroup):
        build_T_kappa(g, s, lam, h, {(0, 7): -1})
    small = subgroup(g, [7])
    with pytest.raises(OrbitNotInSubgroup):
        build_T_kappa(g, s, lam, small, {(0, 9): -1})
    with pytest.raises(ValueError):
        build_T_kappa(g, s, lam, h, {(5, 9): -1})
    with pytest.raises(ValueError):
        build_T_kappa(g, s, lam, h, {(2, 9): 0})


def test_generating_set():
    assert generating_set(make_cyclic(21)) == [1]
    assert generating_set(klein_group()) == [1, 2]


def test_format_table_square():
    assert format_table(SQUARE_T) == "(1,1,2) (1,2,1)\n(2,1,1) (2,2,2)\n"


def brute_presentations(f):
    """All compatible presentations by filtering rotation-orbit subsets."""
    n = f.n
    labels = f.labels
    orbits = set()
    for t in itertools.product(labels, repeat=3):
        i, j, k = t
        orbits.add(min((i, j, k), (j, k, i), (k, i, j)))
    orbits = sorted(orbits)
    found = []
    for mask in range(1 << len(orbits)):
        chosen = [orbits[b] for b in range(len(orbits)) if (mask >> b) & 1]
        t = TrianglePresentation(labels, frozenset(chosen))
        if verify(f, t) == []:
            found.append(t.triples)
    return sorted(found, key=sorted)


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_enumerate_matches_brute_force(data):
    n = data.draw(st.integers(min_value=1, max_value=2))
    pairs = data.draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=n),
                st.integers(min_value=1, max_value=n),
            ),
            max_size=4,
            unique=True,
        )
    )
    f = FSet.on_range(n, pairs)
    out = sorted((t.triples for t in enumerate_all(f)), key=sorted)
    assert out == brute_presentations(f)


@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_enumeration_closed_under_aut(data):
    f = singer_f_q2()
    out = enumerate_all(f)
    keys = {t.triples for t in out}
    af = aut_full(f)
    t = out[data.draw(st.integers(min_value=0, max_value=len(out) - 1))]
    for g in af.plus.generators:
        assert act(t, g).triples in keys
    if af.has_rho_part:
        assert act(t, af.witness, use_rho=True).triples in keys
