"""The bipartite link graph of a pair set F and its symmetry machinery."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .autosearch import arc_masks, automorphism_generators, find_isomorphism
from .permgrp import Perm, PermGroup, bsgs_build


class Disconnected(ValueError):
    """Raised when a spectral quantity is asked of a disconnected graph."""


@dataclass(frozen=True)
class FSet:
    """Ordered pairs over a fixed labeled index set.

    Abstract index sets use labels 1..n; group-indexed sets keep the group's
    own 0-based element numbering as labels.
    """

    labels: tuple
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(
            self, "pairs", frozenset((a, b) for a, b in self.pairs)
        )
        lab = set(self.labels)
        if len(lab) != len(self.labels):
            raise ValueError("duplicate labels")
        for a, b in self.pairs:
            if a not in lab or b not in lab:
                raise ValueError(f"pair ({a},{b}) uses unknown labels")

    @classmethod
    def on_range(cls, n, pairs, start=1):
        return cls(tuple(range(start, start + n)), frozenset(pairs))

    @property
    def n(self) -> int:
        return len(self.labels)

    def position(self) -> dict:
        return {a: i for i, a in enumerate(self.labels)}

    def sorted_pairs(self) -> list:
        pos = self.position()
        return sorted(self.pairs, key=lambda p: (pos[p[0]], pos[p[1]]))

    def position_pairs(self) -> frozenset:
        """The pairs rewritten in 0-based positions; label-independent."""
        pos = self.position()
        return frozenset((pos[a], pos[b]) for a, b in self.pairs)

    def __repr__(self):
        return f"FSet(n={self.n}, pairs={len(self.pairs)})"


def apply_rho(F: FSet) -> FSet:
    """The transpose set rho(F) = {(j,i)}."""
    return FSet(F.labels, frozenset((b, a) for a, b in F.pairs))


def apply_diagonal(F: FSet, sigma: Perm) -> FSet:
    """sigma F = {(sigma i, sigma j)}; sigma permutes label positions."""
    pos = F.position()
    lab = F.labels
    return FSet(
        lab,
        frozenset(
            (lab[sigma(pos[a])], lab[sigma(pos[b])]) for a, b in F.pairs
        ),
    )


@dataclass(frozen=True)
class DiagonalWitness:
    """sigma with F2 = sigma F1, or F2 = sigma rho F1 when used_rho."""

    sigma: Perm
    used_rho: bool


@dataclass(frozen=True)
class WreathWitness:
    """(alpha, beta, swap) with F2 = {(alpha i, beta j)} over (i,j) in F1,
    coordinates exchanged first when swapped."""

    alpha: Perm
    beta: Perm
    swapped: bool


def apply_wreath(F: FSet, w: WreathWitness) -> FSet:
    pos = F.position()
    lab = F.labels
    out = set()
    for a, b in F.pairs:
        if w.swapped:
            out.add((lab[w.alpha(pos[b])], lab[w.beta(pos[a])]))
        else:
            out.add((lab[w.alpha(pos[a])], lab[w.beta(pos[b])]))
    return FSet(lab, frozenset(out))


@dataclass(frozen=True, eq=False)
class LinkGraph:
    """Bipartite graph on {1..2n}: point i joined to line j+n iff (i,j) in F."""

    labels: tuple
    adj: tuple

    @property
    def n(self) -> int:
        return len(self.labels)

    def edges(self) -> list:
        out = []
        for v in range(self.n):
            m = self.adj[v]
            while m:
                b = m & -m
                out.append((v, b.bit_length() - 1))
                m ^= b
        return out

    def __repr__(self):
        return f"LinkGraph(n={self.n}, edges={len(self.edges())})"


def from_F(F: FSet) -> LinkGraph:
    n = F.n
    pos = F.position()
    adj = [0] * (2 * n)
    for a, b in F.pairs:
        i, j = pos[a], pos[b] + n
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return LinkGraph(F.labels, tuple(adj))


def _neighbors(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _bfs_dist(adj, src):
    dist = {src: 0}
    queue = [src]
    for v in queue:
        for w in _neighbors(adj[v]):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _girth(adj):
    # min over all roots of the shortest cycle seen from a BFS; exact on
    # simple graphs
    best = math.inf
    for r in range(len(adj)):
        dist = {r: 0}
        parent = {r: -1}
        queue = [r]
        for v in queue:
            if dist[v] * 2 >= best:
                break
            for w in _neighbors(adj[v]):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


@dataclass(frozen=True)
class GraphMetrics:
    connected: bool
    girth: object
    diameter: object
    degree_profile: tuple
    biregular: object


def metrics(g: LinkGraph) -> GraphMetrics:
    n = g.n
    degs = [m.bit_count() for m in g.adj]
    hist: dict[int, int] = {}
    for d in degs:
        hist[d] = hist.get(d, 0) + 1
    profile = tuple(sorted(hist.items()))
    pt, ln = set(degs[:n]), set(degs[n:])
    bireg = (min(pt), min(ln)) if len(pt) == 1 and len(ln) == 1 else None
    diam: object = 0
    connected = True
    for v in range(2 * n):
        dist = _bfs_dist(g.adj, v)
        if len(dist) < 2 * n:
            diam, connected = math.inf, False
            break
        diam = max(diam, max(dist.values()))
    return GraphMetrics(connected, _girth(g.adj), diam, profile, bireg)


def normalized_laplacian(g: LinkGraph) -> np.ndarray:
    """I - D^{-1/2} A D^{-1/2}, with zero rows at isolated vertices."""
    n2 = 2 * g.n
    a = np.zeros((n2, n2))
    for v in range(n2):
        for w in _neighbors(g.adj[v]):
            a[v, w] = 1.0
    d = a.sum(axis=1)
    s = np.zeros(n2)
    nz = d > 0
    s[nz] = 1.0 / np.sqrt(d[nz])
    lap = -(s[:, None] * a) * s[None, :]
    lap[nz, nz] = 1.0
    return lap


def spectral_gap(g: LinkGraph, tol: float = 1e-9) -> float:
    """Smallest nonzero eigenvalue of the normalized Laplacian."""
    if len(_bfs_dist(g.adj, 0)) < 2 * g.n:
        raise Disconnected("spectral gap needs a connected graph")
    ev = np.linalg.eigvalsh(normalized_laplacian(g))
    for x in ev:
        if x > tol:
            return float(x)
    raise Disconnected("no nonzero eigenvalue found")


def is_generalized_mgon(g: LinkGraph, m: int) -> bool:
    """Connected, biregular, girth 2m, diameter m."""
    met = metrics(g)
    return (
        met.connected
        and met.biregular is not None
        and met.girth == 2 * m
        and met.diameter == m
    )


def digraph_of(F: FSet):
    pos = F.position()
    return arc_masks(F.n, [(pos[a], pos[b]) for a, b in F.pairs])


def aut_plus(F: FSet) -> PermGroup:
    """Stabilizer of F in Sym(n) under the diagonal action, as a group of
    position permutations."""
    outm, inm = digraph_of(F)
    gens = automorphism_generators(F.n, outm, inm)
    return bsgs_build(F.n, gens)


@dataclass(frozen=True, eq=False)
class AutFull:
    """Aut(F) inside Sym(n) x Z/2: the diagonal part plus an optional
    coordinate-swapping coset."""

    plus: PermGroup
    has_rho_part: bool
    witness: Perm | None

    @property
    def order(self) -> int:
        return self.plus.order() * (2 if self.has_rho_part else 1)


def aut_full(F: FSet) -> AutFull:
    plus = aut_plus(F)
    o1, i1 = digraph_of(apply_rho(F))
    o2, i2 = digraph_of(F)
    w = find_isomorphism(F.n, o1, i1, o2, i2)
    return AutFull(plus=plus, has_rho_part=w is not None, witness=w)


def graph_automorphisms(g: LinkGraph, colors=None) -> PermGroup:
    """Full automorphism group of the bipartite graph on 2n vertices; maps
    exchanging the sides are allowed.  An optional vertex coloring restricts
    to the color-preserving subgroup, e.g. to pin down a vertex stabilizer."""
    gens = automorphism_generators(2 * g.n, g.adj, g.adj, colors)
    return bsgs_build(2 * g.n, gens)


def f_equivalent(F1: FSet, F2: FSet) -> DiagonalWitness | None:
    """A diagonal witness sigma with F2 = sigma F1 or F2 = sigma rho F1."""
    if F1.n != F2.n:
        return None
    o2, i2 = digraph_of(F2)
    o1, i1 = digraph_of(F1)
    w = find_isomorphism(F1.n, o1, i1, o2, i2)
    if w is not None:
        return DiagonalWitness(w, False)
    o1r, i1r = digraph_of(apply_rho(F1))
    w = find_isomorphism(F1.n, o1r, i1r, o2, i2)
    if w is not None:
        return DiagonalWitness(w, True)
    return None


def f_wreath_equivalent(F1: FSet, F2: FSet) -> WreathWitness | None:
    """A witness in Sym(n) wr Z/2, where the two sides may be permuted
    independently; weaker than diagonal equivalence."""
    if F1.n != F2.n:
        return None
    n = F1.n
    g1, g2 = from_F(F1), from_F(F2)
    side = [0] * n + [1] * n
    for swapped, side2 in ((False, side), (True, side[n:] + side[:n])):
        w = find_isomorphism(
            2 * n, g1.adj, g1.adj, g2.adj, g2.adj, side, side2
        )
        if w is None:
            continue
        if swapped:
            alpha = Perm(tuple(w(j + n) for j in range(n)))
            beta = Perm(tuple(w(i) - n for i in range(n)))
        else:
            alpha = Perm(tuple(w(i) for i in range(n)))
            beta = Perm(tuple(w(j + n) - n for j in range(n)))
        return WreathWitness(alpha=alpha, beta=beta, swapped=swapped)
    return None


def export_edge_list(g: LinkGraph) -> str:
    """One 'point line' pair per line, both 1-based, lines offset by n."""
    out = []
    for v, w in g.edges():
        out.append(f"{v + 1} {w + 1}")
    return "\n".join(out) + ("\n" if out else "")
