"""Explicit finite groups with indexed elements, subgroups, and cosets."""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Callable

from .ffield import factor_prime_power, make_field, prime_factors
from .permgrp import Perm


class NonAbelianGroup(ValueError):
    """Raised when an abelian group is required but the group is not."""


class UnknownDescriptor(ValueError):
    """Raised when a group descriptor names an unsupported kind."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group on indices 0..n-1 with explicit mul and inv maps."""

    n: int
    mul: Callable[[int, int], int]
    inv: Callable[[int], int]
    id: int
    labels: tuple[str, ...]
    kind: str | None = None
    params: tuple[tuple[str, int], ...] = ()
    abelian: bool | None = None

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = self.id
        while k:
            if k & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            k >>= 1
        return out

    def element_order(self, a: int) -> int:
        k, b = 1, a
        while b != self.id:
            b = self.mul(b, a)
            k += 1
        return k

    def is_abelian(self) -> bool:
        if self.abelian is not None:
            return self.abelian
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in range(self.n)
            for b in range(a + 1, self.n)
        )

    def __repr__(self):
        tag = self.kind or "table"
        return f"FiniteGroup({tag}, n={self.n})"


@dataclass(frozen=True, eq=False)
class SubgroupDatum:
    """A subgroup H of a parent group together with its left-coset partition."""

    parent: FiniteGroup
    members: tuple[int, ...]
    coset_index: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.n // len(self.members)

    @property
    def reps(self) -> tuple[int, ...]:
        """Minimum element of each left coset, indexed by coset id."""
        out: dict[int, int] = {}
        for a, cid in enumerate(self.coset_index):
            if cid not in out:
                out[cid] = a
        return tuple(out[cid] for cid in range(len(out)))

    def __contains__(self, a: int) -> bool:
        return self.coset_index[a] == self.coset_index[self.parent.id]

    def __repr__(self):
        return f"SubgroupDatum(order={self.order}, index={self.index})"


def make_cyclic(m: int) -> FiniteGroup:
    """The additive cyclic group Z/m on {0..m-1}."""
    if m < 1:
        raise ValueError("order must be positive")
    return FiniteGroup(
        n=m,
        mul=lambda a, b: (a + b) % m,
        inv=lambda a: (-a) % m,
        id=0,
        labels=tuple(str(i) for i in range(m)),
        kind="cyclic",
        params=(("m", m),),
        abelian=True,
    )


def make_opp_group(q: int) -> FiniteGroup:
    """The order-q^2 group of matrices [[1,y,z],[0,1,y],[0,0,1]] over GF(q).

    Product in coordinates: (y1,z1)(y2,z2) = (y1+y2, z1+z2+y1*y2).  Elements
    are indexed y.index*q + z.index; the multiplication table is precomputed.
    """
    p, e = factor_prime_power(q)
    gf = make_field(p, e)
    elems = gf.elements()
    n = q * q
    table = [[0] * n for _ in range(n)]
    invs = [0] * n
    for a in range(n):
        y1, z1 = elems[a // q], elems[a % q]
        for b in range(n):
            y2, z2 = elems[b // q], elems[b % q]
            y, z = y1 + y2, z1 + z2 + y1 * y2
            c = y.index * q + z.index
            table[a][b] = c
            if c == 0:
                invs[a] = b
    labels = tuple(f"({a // q},{a % q})" for a in range(n))
    return FiniteGroup(
        n=n,
        mul=lambda a, b: table[a][b],
        inv=lambda a: invs[a],
        id=0,
        labels=labels,
        kind="opp",
        params=(("q", q),),
        abelian=True,
    )


def subgroup(G: FiniteGroup, generators) -> SubgroupDatum:
    """Closure of the generators in G, with left cosets xH indexed by rank
    of their minimum element."""
    gens = list(generators)
    for g in gens:
        if not 0 <= g < G.n:
            raise ValueError(f"generator {g} outside 0..{G.n - 1}")
    members = {G.id}
    queue = [G.id]
    for a in queue:
        for g in gens:
            b = G.mul(a, g)
            if b not in members:
                members.add(b)
                queue.append(b)
    mem = tuple(sorted(members))
    coset_index = [-1] * G.n
    next_id = 0
    for x in range(G.n):
        if coset_index[x] >= 0:
            continue
        for h in mem:
            coset_index[G.mul(x, h)] = next_id
        next_id += 1
    return SubgroupDatum(parent=G, members=mem, coset_index=tuple(coset_index))


def left_cosets(H: SubgroupDatum) -> dict[int, int]:
    """Map each parent element to its left-coset id."""
    return {a: cid for a, cid in enumerate(H.coset_index)}


def mu_permutation(G: FiniteGroup) -> Perm:
    """The inversion map x -> x^{-1} as a permutation of element indices.

    Only an automorphism when G is abelian, and that is how callers use it,
    so nonabelian groups are rejected.
    """
    if not G.is_abelian():
        raise NonAbelianGroup("inversion is only an automorphism when abelian")
    return Perm(tuple(G.inv(a) for a in range(G.n)))


def abelian_type(G: FiniteGroup) -> tuple[int, ...]:
    """Primary decomposition of an abelian group as a sorted tuple of prime
    powers, e.g. (3, 7) for Z/21."""
    if not G.is_abelian():
        raise NonAbelianGroup("primary decomposition needs an abelian group")
    out = []
    for p in prime_factors(G.n):
        # counts[k] = number of elements killed by p^k; log_p of the ratio
        # counts[k]/counts[k-1] is the number of cyclic p-summands of order
        # at least p^k
        counts = [1]
        while True:
            pk = p ** len(counts)
            c = sum(1 for a in range(G.n) if G.power(a, pk) == G.id)
            if c == counts[-1]:
                break
            counts.append(c)
        ge = [
            _ilog(counts[k] // counts[k - 1], p)
            for k in range(1, len(counts))
        ]
        ge.append(0)
        for k in range(1, len(counts)):
            out.extend([p**k] * (ge[k - 1] - ge[k]))
    return tuple(sorted(out))


def _ilog(m: int, p: int) -> int:
    k = 0
    while m > 1:
        m //= p
        k += 1
    return k


def group_violations(G: FiniteGroup, seed: int = 0) -> list[str]:
    """Spot-check the group axioms; associativity is exhaustive for n <= 64
    and sampled on 500 random triples above."""
    bad = []
    if G.mul(G.id, G.id) != G.id:
        bad.append("identity is not idempotent")
    for a in range(G.n):
        if G.mul(G.id, a) != a or G.mul(a, G.id) != a:
            bad.append(f"identity fails on {a}")
        if G.mul(a, G.inv(a)) != G.id or G.inv(G.mul(a, G.inv(a))) != G.id:
            bad.append(f"inverse fails on {a}")
    if G.n <= 64:
        triples = (
            (a, b, c)
            for a in range(G.n)
            for b in range(G.n)
            for c in range(G.n)
        )
    else:
        rng = Random(seed)
        triples = (
            tuple(rng.randrange(G.n) for _ in range(3)) for _ in range(500)
        )
    for a, b, c in triples:
        if G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)):
            bad.append(f"associativity fails on ({a},{b},{c})")
            break
    return bad


def group_descriptor(G: FiniteGroup) -> dict:
    """JSON-ready descriptor for the built-in constructions."""
    if G.kind is None:
        raise UnknownDescriptor("table-backed group has no descriptor")
    return {"kind": G.kind, "params": dict(G.params)}


def group_from_descriptor(d: dict) -> FiniteGroup:
    kind = d.get("kind")
    params = d.get("params", {})
    if kind == "cyclic":
        return make_cyclic(int(params["m"]))
    if kind == "opp":
        return make_opp_group(int(params["q"]))
    raise UnknownDescriptor(f"unknown group kind {kind!r}")
