"""Subspace model, coset model, checklist, and twisted parabola families."""

import math

import pytest

from trigon.fgroup import abelian_type
from trigon.linkgraph import f_wreath_equivalent, from_F, metrics
from trigon.oppmodel import (
    BadCongruence,
    a2_graph,
    incidence_model_checks,
    opp_T_kappa,
    opp_datum,
    opp_family,
    opp_graph_building,
    opp_properties,
)
from trigon.ffield import multiplicative_order
from trigon.singer import murho_dual, singer_datum
from trigon.tripres import lambda_orbits, verify


def test_a2_graph_small_planes():
    m2 = a2_graph(2)
    met = metrics(m2.graph)
    assert 2 * m2.graph.n == 14
    assert len(m2.graph.edges()) == 21
    assert met.biregular == (3, 3)
    assert met.girth == 6 and met.diameter == 3
    m3 = a2_graph(3)
    met3 = metrics(m3.graph)
    assert 2 * m3.graph.n == 26
    assert len(m3.graph.edges()) == 52
    assert met3.biregular == (4, 4)
    assert met3.girth == 6


def test_a2_graph_matches_difference_set_plane():
    model = a2_graph(2)
    assert f_wreath_equivalent(model.fset(), singer_datum(2).F()) is not None


def test_building_opposition_subgraph():
    g2 = opp_graph_building(2)
    m2 = metrics(g2)
    # connected 2-regular on 8 vertices with girth 8 pins the 8-cycle
    assert 2 * g2.n == 8 and len(g2.edges()) == 8
    assert m2.biregular == (2, 2) and m2.girth == 8 and m2.connected
    g3 = opp_graph_building(3)
    m3 = metrics(g3)
    assert 2 * g3.n == 18 and len(g3.edges()) == 27
    assert m3.biregular == (3, 3) and m3.girth == 6 and m3.diameter == 4


def test_datum_parabola_and_group_type():
    expected = {
        2: ((0, 3), (4,)),
        3: ((0, 4, 7), (3, 3)),
        4: ((0, 5, 11, 14), (4, 4)),
        5: ((0, 6, 14, 19, 21), (5, 5)),
    }
    for q, (S, gtype) in expected.items():
        d = opp_datum(q)
        assert d.S == S
        assert abelian_type(d.G) == gtype
        # the identity sits on the parabola, so every loop pair is present
        pairs = d.F().pairs
        assert all((g, g) in pairs for g in range(d.G.n))


@pytest.mark.parametrize("q", [2, 3, 4])
def test_incidence_three_way_equivalence(q):
    assert incidence_model_checks(q)


@pytest.mark.parametrize("q,zuk", [(2, False), (3, False), (4, False), (5, True)])
def test_properties_checklist(q, zuk):
    r = opp_properties(q)
    assert r.ok
    assert len(r.rows) == 7
    assert r.zuk is zuk
    assert abs(r.gap - (1 - math.sqrt(q) / q)) <= 1e-6


def test_properties_rows_q2():
    r = opp_properties(2)
    by_name = {row[0]: row for row in r.rows}
    assert by_name["girth"][2] == 8
    assert by_name["diameter"][2] == 4
    assert by_name["2q^2 vertices, q^3 edges"][2] == (8, 8)


@pytest.mark.parametrize("q,count", [(4, 2), (7, 4), (13, 16)])
def test_twisted_family_counts(q, count):
    d = opp_datum(q)
    assert multiplicative_order(d.alpha3) == 3
    fam = opp_family(d)
    assert len(fam) == count
    assert len({T.triples for _, T in fam}) == count
    F = d.F()
    for _, T in fam[:4]:
        assert verify(F, T) == []


def test_congruence_guard():
    for q in (2, 3, 5):
        d = opp_datum(q)
        assert d.lam is None and d.alpha3 is None
        with pytest.raises(BadCongruence):
            opp_family(d)


def test_kappa_keys_checked():
    d = opp_datum(7)
    mins = [o[0] for o in lambda_orbits(d.S, d.lam) if len(o) == 3]
    with pytest.raises(ValueError):
        opp_T_kappa(d, {mins[0]: 1})
    good = opp_T_kappa(d, {m: 1 for m in mins})
    assert len(good.triples) == 7 ** 2 * 7


def test_inversion_duality_flips_signs():
    d = opp_datum(4)
    fam = {tuple(sorted(k.items())): T for k, T in opp_family(d)}
    for key, T in fam.items():
        neg = tuple(sorted((o, -s) for o, s in key))
        assert murho_dual(T, d.G).triples == fam[neg].triples
