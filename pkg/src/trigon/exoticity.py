"""Exoticness certificate: the induced neighborhood group Q0, the twist
permutation sigma, and the counting lower bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ffield import factor_prime_power
from .linkgraph import LinkGraph, from_F, graph_automorphisms
from .permgrp import Perm, PermGroup
from .singer import SingerDatum, r_of_q


class OrderMismatch(Exception):
    """Raised when the computed |Q0| disagrees with e(q-1)q(q+1)."""


@dataclass(frozen=True, eq=False)
class ExoticProbe:
    """Link-graph data around the base vertex: the point-side vertex 0, its
    neighborhood Lambda = line-side copies of S, and the group Q0 induced on
    Lambda by link automorphisms fixing the base vertex."""

    datum: SingerDatum
    link: LinkGraph
    v1: int
    lambda_set: tuple
    q0: PermGroup

    @property
    def q(self):
        return self.datum.q


def expected_q0_order(q):
    """e(q-1)q(q+1) for q = p^e."""
    _, e = factor_prime_power(q)
    return e * (q - 1) * q * (q + 1)


def build_probe(d: SingerDatum) -> ExoticProbe:
    """Compute Q0 from the link graph itself, then check its order."""
    link = from_F(d.F())
    n = link.n
    v1 = 0
    lam_set = tuple(n + s for s in d.S)
    mask = link.adj[v1]
    nbrs = []
    while mask:
        b = mask & -mask
        nbrs.append(b.bit_length() - 1)
        mask ^= b
    assert tuple(nbrs) == lam_set, "neighbors of the base vertex are not S"
    full = graph_automorphisms(link)
    stab = full.stabilizer(v1)
    # fixing a one-sided vertex rules out the side swap
    for g in stab.generators:
        assert all(g(v) < n for v in range(n)), "side swap fixed the base vertex"
    q0 = stab.restrict(lam_set)
    want = expected_q0_order(d.q)
    got = q0.order()
    if got != want:
        raise OrderMismatch(f"|Q0| = {got}, expected {want} for q = {d.q}")
    return ExoticProbe(datum=d, link=link, v1=v1, lambda_set=lam_set, q0=q0)


def sigma_kappa(probe: ExoticProbe, kappa) -> Perm:
    """The twist s -> lambda^{kappa(orbit of s)}(s) as a permutation of the
    neighborhood positions; folding fixed points stay put."""
    d = probe.datum
    want = {o[0] for o in d.O}
    if set(kappa) != want:
        raise ValueError(
            f"kappa keys {sorted(kappa)} do not cover orbit minima {sorted(want)}"
        )
    pos = {s: i for i, s in enumerate(d.S)}
    orbit_of = {s: o for o in d.O for s in o}
    images = [0] * len(d.S)
    for s in d.S:
        if s in orbit_of:
            step = d.lam[s] if kappa[orbit_of[s][0]] == 1 else d.lam[d.lam[s]]
        else:
            step = s
        images[pos[s]] = pos[step]
    return Perm(tuple(images))


@dataclass(frozen=True)
class Certificate:
    """Outcome of the sigma-in-Q0 membership test; the implication only ever
    certifies exoticness, never arithmeticity."""

    q: int
    kappa: tuple
    sigma: Perm
    member: bool

    @property
    def verdict(self):
        return "Inconclusive" if self.member else "Exotic"


def exotic_certificate(probe: ExoticProbe, kappa) -> Certificate:
    """Exotic iff the twist permutation falls outside Q0."""
    sigma = sigma_kappa(probe, kappa)
    member = probe.q0.contains(sigma)
    return Certificate(
        q=probe.datum.q,
        kappa=tuple(sorted(kappa.items())),
        sigma=sigma,
        member=member,
    )


@dataclass(frozen=True)
class Bounds:
    """Exact lower bounds on exotic sign choices and quasi-isometry classes."""

    q: int
    e: int
    exotic_kappa_lower: int
    qi_class_lower: Fraction
    vacuous: bool


def exotic_lower_bounds(q, e) -> Bounds:
    """Evaluate 2^R(q) - e(q-1)q(q+1) and its quasi-isometry companion
    exactly; a non-positive count makes both bounds vacuous."""
    p, e_found = factor_prime_power(q)
    if e_found != e:
        raise ValueError(f"q = {q} is {p}^{e_found}, not p^{e}")
    count = 2 ** r_of_q(q) - e * (q - 1) * q * (q + 1)
    qi = Fraction(count, 2 * e * (q - 1) ** 2 * q ** 3 * (q + 1))
    return Bounds(
        q=q, e=e, exotic_kappa_lower=count, qi_class_lower=qi,
        vacuous=count <= 0,
    )
