"""Link graphs, their invariants, and F-equivalence searches."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trigon.linkgraph import (
    Disconnected,
    FSet,
    apply_diagonal,
    apply_rho,
    apply_wreath,
    aut_full,
    aut_plus,
    export_edge_list,
    f_equivalent,
    f_wreath_equivalent,
    from_F,
    graph_automorphisms,
    is_generalized_mgon,
    metrics,
    normalized_laplacian,
    spectral_gap,
)
from trigon.permgrp import Perm


def singer_f_q2():
    """Pairs (x, x+s) mod 7 with s in {1,2,4}; the Heawood graph."""
    return FSet.on_range(
        7, [(x, (x + s) % 7) for x in range(7) for s in (1, 2, 4)], start=0
    )


def square_f():
    return FSet.on_range(2, [(1, 1), (1, 2), (2, 1), (2, 2)])


def cycle8_f():
    return FSet.on_range(
        4, [(x, x) for x in range(4)] + [(x, (x + 1) % 4) for x in range(4)],
        start=0,
    )


def a2_subspace_model(p):
    """Incidence pairs of the projective plane over GF(p) from functionals."""
    norm = []
    for v in itertools.product(range(p), repeat=3):
        if any(v) and next(c for c in v if c) == 1:
            norm.append(v)
    pairs = [
        (i + 1, j + 1)
        for i, v in enumerate(norm)
        for j, f in enumerate(norm)
        if sum(a * b for a, b in zip(v, f)) % p == 0
    ]
    return FSet.on_range(len(norm), pairs)


def check_diag_witness(F1, F2, w):
    base = apply_rho(F1) if w.used_rho else F1
    assert apply_diagonal(base, w.sigma) == F2


def test_fset_validation():
    with pytest.raises(ValueError):
        FSet((1, 1, 2), frozenset())
    with pytest.raises(ValueError):
        FSet.on_range(2, [(1, 3)])
    f = square_f()
    assert f.n == 2
    assert f.sorted_pairs() == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_square_gives_four_cycle():
    g = from_F(square_f())
    met = metrics(g)
    assert met.connected and met.girth == 4 and met.diameter == 2
    assert met.biregular == (2, 2)
    assert graph_automorphisms(g).order() == 8
    assert not is_generalized_mgon(g, 3)


def test_empty_f():
    f = FSet.on_range(3, [])
    g = from_F(f)
    met = metrics(g)
    assert not met.connected
    assert met.girth == math.inf and met.diameter == math.inf
    assert aut_plus(f).order() == 6
    with pytest.raises(Disconnected):
        spectral_gap(g)


def test_single_edge():
    g = from_F(FSet.on_range(1, [(1, 1)]))
    met = metrics(g)
    assert met.connected and met.diameter == 1 and met.girth == math.inf
    assert spectral_gap(g) == pytest.approx(2.0, abs=1e-9)


def test_heawood_metrics_and_groups():
    f = singer_f_q2()
    g = from_F(f)
    met = metrics(g)
    assert met.connected and met.girth == 6 and met.diameter == 3
    assert met.degree_profile == ((3, 14),)
    assert is_generalized_mgon(g, 3)
    assert graph_automorphisms(g).order() == 336
    ap = aut_plus(f)
    assert ap.order() == 21
    assert ap.contains(Perm(tuple((i + 1) % 7 for i in range(7))))
    assert ap.contains(Perm(tuple((2 * i) % 7 for i in range(7))))
    assert spectral_gap(g) == pytest.approx(1 - math.sqrt(2) / 3, abs=1e-9)


def test_heawood_rho_part():
    f = singer_f_q2()
    af = aut_full(f)
    assert af.has_rho_part
    assert af.order == 42
    assert apply_diagonal(apply_rho(f), af.witness) == f


def test_aut_plus_generators_stabilize():
    f = singer_f_q2()
    for g in aut_plus(f).generators:
        assert apply_diagonal(f, g) == f


def test_cycle8():
    g = from_F(cycle8_f())
    met = metrics(g)
    assert met.connected and met.girth == 8 and met.diameter == 4
    assert met.biregular == (2, 2)
    assert graph_automorphisms(g).order() == 16
    assert spectral_gap(g) == pytest.approx(1 - math.sqrt(2) / 2, abs=1e-9)


def test_laplacian_zero_multiplicity_counts_components():
    f = FSet.on_range(2, [(1, 1), (2, 2)])
    ev = np.linalg.eigvalsh(normalized_laplacian(from_F(f)))
    assert sum(1 for x in ev if abs(x) < 1e-9) == 2


def test_a2_f3_is_generalized_3gon():
    f = a2_subspace_model(3)
    assert f.n == 13
    g = from_F(f)
    assert is_generalized_mgon(g, 3)
    met = metrics(g)
    assert met.biregular == (4, 4)


def test_rho_swaps_sides():
    f = singer_f_q2()
    g, gr = from_F(f), from_F(apply_rho(f))
    n = f.n
    for v, w in g.edges():
        assert (gr.adj[w - n] >> (v + n)) & 1
    assert spectral_gap(g) == pytest.approx(spectral_gap(gr), abs=1e-9)


def test_f_equivalent_self_is_identity():
    f = singer_f_q2()
    w = f_equivalent(f, f)
    assert w is not None and not w.used_rho
    assert w.sigma.is_identity()


def test_f_equivalent_after_relabelling():
    f = singer_f_q2()
    sigma = Perm((3, 0, 5, 1, 6, 2, 4))
    w = f_equivalent(f, apply_diagonal(f, sigma))
    assert w is not None
    check_diag_witness(f, apply_diagonal(f, sigma), w)
    wr = f_equivalent(f, apply_diagonal(apply_rho(f), sigma))
    assert wr is not None
    check_diag_witness(f, apply_diagonal(apply_rho(f), sigma), wr)


def test_f_equivalent_distinguishes():
    f = square_f()
    other = FSet.on_range(2, [(1, 1), (1, 2), (2, 1)])
    assert f_equivalent(f, other) is None
    assert f_wreath_equivalent(f, other) is None


def test_singer_vs_subspace_model_wreath():
    f = singer_f_q2()
    m = a2_subspace_model(2)
    w = f_wreath_equivalent(f, m)
    assert w is not None
    assert apply_wreath(f, w).position_pairs() == m.position_pairs()


def test_export_edge_list():
    text = export_edge_list(from_F(square_f()))
    assert text == "1 3\n1 4\n2 3\n2 4\n"
    assert export_edge_list(from_F(FSet.on_range(1, []))) == ""


@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_diagonal_action_composes(data):
    f = singer_f_q2()
    a = Perm(tuple(data.draw(st.permutations(range(7)))))
    b = Perm(tuple(data.draw(st.permutations(range(7)))))
    assert apply_diagonal(apply_diagonal(f, a), b) == apply_diagonal(f, a * b)


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_wreath_equivalence_of_random_relabellings(data):
    f = cycle8_f()
    alpha = Perm(tuple(data.draw(st.permutations(range(4)))))
    beta = Perm(tuple(data.draw(st.permutations(range(4)))))
    swapped = data.draw(st.booleans())
    from trigon.linkgraph import WreathWitness

    target = apply_wreath(f, WreathWitness(alpha, beta, swapped))
    w = f_wreath_equivalent(f, target)
    assert w is not None
    assert apply_wreath(f, w) == target
