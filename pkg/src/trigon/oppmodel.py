"""Opposition subcomplex of the order-q plane: subspace model, coset model,
property checklist, and the twisted parabola presentations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .ffield import factor_prime_power, make_field
from .fgroup import FiniteGroup, make_opp_group, subgroup
from .linkgraph import (
    FSet,
    LinkGraph,
    f_wreath_equivalent,
    from_F,
    metrics,
    spectral_gap,
)
from .tripres import build_T_kappa, lambda_orbits


class BadCongruence(Exception):
    """Raised when a construction needs q congruent to 1 mod 3."""


@dataclass(frozen=True, eq=False)
class A2Model:
    """Subspace model of the plane: points are lead-1 vectors, lines are
    lead-1 dual vectors, incidence is a vanishing dot product."""

    q: int
    graph: LinkGraph
    points: tuple
    lines: tuple

    def fset(self):
        n = len(self.points)
        pairs = frozenset((v, w - n) for v, w in self.graph.edges())
        return FSet(tuple(range(n)), pairs)


def _lead_one_vectors(gf):
    # one representative per projective point, in element enumeration order
    zero, one = gf.zero(), gf.one()
    out = []
    for vec in product(gf.elements(), repeat=3):
        lead = next((c for c in vec if c != zero), None)
        if lead == one:
            out.append(vec)
    return tuple(out)


def a2_graph(q):
    """Incidence graph of the proper subspaces of GF(q)^3."""
    p, e = factor_prime_power(q)
    gf = make_field(p, e)
    zero = gf.zero()
    pts = _lead_one_vectors(gf)
    n = len(pts)
    assert n == q * q + q + 1
    adj = [0] * (2 * n)
    for i, pt in enumerate(pts):
        for j, ln in enumerate(pts):
            s = pt[0] * ln[0] + pt[1] * ln[1] + pt[2] * ln[2]
            if s == zero:
                adj[i] |= 1 << (n + j)
                adj[n + j] |= 1 << i
    graph = LinkGraph(tuple(range(n)), tuple(adj))
    return A2Model(q=q, graph=graph, points=pts, lines=pts)


def _building_fset(q):
    # induced incidences on points off the base line and lines off the base
    # point, for the incident base pair ((1,0,0), (0,0,1))
    model = a2_graph(q)
    gf = make_field(*factor_prime_power(q))
    zero, one = gf.zero(), gf.one()
    n = len(model.points)
    v1 = model.points.index((one, zero, zero))
    v2 = model.lines.index((zero, zero, one))
    keep_p = [i for i in range(n) if not (model.graph.adj[i] >> (n + v2)) & 1]
    keep_l = [j for j in range(n) if not (model.graph.adj[v1] >> (n + j)) & 1]
    assert len(keep_p) == q * q and len(keep_l) == q * q
    pos_p = {v: k for k, v in enumerate(keep_p)}
    pos_l = {v: k for k, v in enumerate(keep_l)}
    pairs = set()
    for k, i in enumerate(keep_p):
        for j in keep_l:
            if (model.graph.adj[i] >> (n + j)) & 1:
                pairs.add((k, pos_l[j]))
    return FSet(tuple(range(q * q)), frozenset(pairs))


def opp_graph_building(q):
    """Subgraph of the plane on the vertices opposite the base point-line pair."""
    return from_F(_building_fset(q))


@dataclass(frozen=True, eq=False)
class OppDatum:
    """Coset model data: the Heisenberg-section group G of order q^2, the
    parabola subset S, and for q = 1 mod 3 the order-3 folding of S."""

    q: int
    G: FiniteGroup
    S: tuple
    lam: object
    alpha3: object

    def F(self):
        pairs = frozenset(
            (g, self.G.mul(g, s)) for g in range(self.G.n) for s in self.S
        )
        return FSet(tuple(range(self.G.n)), pairs)


def _parabola_index(y, q):
    return y.index * q + (y * y).index


def opp_datum(q):
    """Group-and-parabola datum whose pair graph is the opposition subgraph."""
    p, e = factor_prime_power(q)
    gf = make_field(p, e)
    G = make_opp_group(q)
    elems = gf.elements()
    S = tuple(sorted(_parabola_index(y, q) for y in elems))
    assert len(S) == q
    assert subgroup(G, S).order == q * q, "parabola must generate the group"
    lam = alpha = None
    if q % 3 == 1:
        alpha = gf.generator() ** ((q - 1) // 3)
        lam = {}
        for y in elems:
            ay = alpha * y
            lam[_parabola_index(y, q)] = _parabola_index(ay, q)
    datum = OppDatum(q=q, G=G, S=S, lam=lam, alpha3=alpha)
    if q <= 5:
        witness = f_wreath_equivalent(datum.F(), _building_fset(q))
        assert witness is not None, "coset model disagrees with the subspace model"
    return datum


@dataclass(frozen=True)
class PropertyReport:
    """Checklist of the opposition graph facts, one row per claim."""

    q: int
    rows: tuple
    gap: float
    zuk: bool

    @property
    def ok(self):
        return all(row[3] for row in self.rows)


def opp_properties(q):
    """Compute the opposition-graph checklist on the coset model."""
    d = opp_datum(q)
    g = from_F(d.F())
    met = metrics(g)
    gap = spectral_gap(g)
    want_gap = 1 - math.sqrt(q) / q
    bipartite = all(v < g.n <= w for v, w in g.edges())
    girth_want = 8 if q == 2 else 6
    rows = (
        ("2q^2 vertices, q^3 edges", (2 * q * q, q ** 3),
         (2 * g.n, len(g.edges())), (2 * g.n, len(g.edges())) == (2 * q * q, q ** 3)),
        ("regular of degree q", (q, q), met.biregular, met.biregular == (q, q)),
        ("bipartite", True, bipartite, bipartite),
        ("connected", True, met.connected, met.connected is True),
        ("girth", girth_want, met.girth, met.girth == girth_want),
        ("diameter", 4, met.diameter, met.diameter == 4),
        ("spectral gap 1-sqrt(q)/q", want_gap, gap, abs(gap - want_gap) <= 1e-6),
    )
    return PropertyReport(q=q, rows=rows, gap=gap, zuk=gap > 0.5)


def incidence_model_checks(q):
    """Brute three-way equivalence, over every pair of section representatives:
    the point and line cosets meet, the closed incidence formula vanishes, and
    g1^{-1} g2 lands in the parabola."""
    p, e = factor_prime_power(q)
    gf = make_field(p, e)
    elems = gf.elements()
    zero = gf.zero()
    G = make_opp_group(q)
    parabola = {_parabola_index(y, q) for y in elems}

    def mul(u, v):
        return (u[0] + v[0], u[1] + v[1], u[2] + v[2] + u[0] * v[1])

    u1 = [(x, zero, zero) for x in elems]
    u2 = [(zero, y, zero) for y in elems]
    reps = [(elems[a // q], elems[a // q], elems[a % q]) for a in range(q * q)]
    left = [frozenset(mul(g, u) for u in u1) for g in reps]
    right = [frozenset(mul(g, u) for u in u2) for g in reps]
    for a in range(q * q):
        y1, z1 = reps[a][1], reps[a][2]
        for b in range(q * q):
            y2, z2 = reps[b][1], reps[b][2]
            meets = not left[a].isdisjoint(right[b])
            formula = (-z1 + z2 - y2 * (-y1 + y2)) == zero
            member = G.mul(G.inv(a), b) in parabola
            if not (meets == formula == member):
                return False
    return True


def _three_orbit_minima(d):
    if d.lam is None:
        raise BadCongruence(f"q = {d.q} is not 1 mod 3")
    return [o[0] for o in lambda_orbits(d.S, d.lam) if len(o) == 3]


def opp_T_kappa(d, kappa):
    """Twisted parabola presentation; kappa maps every length-3 orbit minimum
    of the folding to a sign, and y = 0 always follows the folding branch."""
    mins = _three_orbit_minima(d)
    if set(kappa) != set(mins):
        raise ValueError(
            f"kappa keys {sorted(kappa)} do not cover orbit minima {sorted(mins)}"
        )
    whole = subgroup(d.G, d.S)
    lifted = {(0, omin): sign for omin, sign in kappa.items()}
    return build_T_kappa(d.G, d.S, d.lam, whole, lifted)


def opp_family(d):
    """All 2^((q-1)/3) twisted presentations, the all-plus choice first."""
    mins = _three_orbit_minima(d)
    out = []
    for signs in product((1, -1), repeat=len(mins)):
        kappa = dict(zip(mins, signs))
        out.append((kappa, opp_T_kappa(d, kappa)))
    return out
