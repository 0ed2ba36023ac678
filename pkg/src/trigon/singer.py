"""Difference-set data on the Singer cycle of a projective plane."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .ffield import (
    FieldElement,
    NotPrimitive,
    factor_prime_power,
    make_field,
    trace_to_subfield,
)
from .fgroup import FiniteGroup, SubgroupDatum, make_cyclic, mu_permutation, subgroup
from .linkgraph import FSet
from .tripres import TrianglePresentation, act, build_T_kappa, lambda_orbits


def r_of_q(q):
    """Count of length-3 folding orbits on the order-q difference set."""
    factor_prime_power(q)
    rem = q % 3
    if rem == 2:
        return (q + 1) // 3
    if rem == 0:
        return q // 3
    return (q - 1) // 3


@dataclass(frozen=True, eq=False)
class SingerDatum:
    """Difference set of the plane of order q inside Z/(q^2+q+1), with the
    multiplication-by-q folding map and its orbit split."""

    q: int
    p: int
    e: int
    m: int
    G: FiniteGroup
    S: tuple
    alpha: FieldElement
    lam: dict
    orbits: tuple
    O: tuple
    fixed_points: tuple

    def F(self):
        """Pair set {(x, x+s)} whose graph is the plane's incidence graph."""
        pairs = frozenset(
            (x, (x + s) % self.m) for x in range(self.m) for s in self.S
        )
        return FSet(tuple(range(self.m)), pairs)


def _trace_zero_exponents(gf, q, m):
    # The trace to GF(q) is GF(p)-linear, so a table of basis traces turns
    # the scan over alpha^l into coefficient dot products.
    deg = gf.e
    p = gf.p
    basis = []
    for i in range(deg):
        coeffs = tuple(1 if j == i else 0 for j in range(deg))
        basis.append(trace_to_subfield(gf.element(coeffs), q).coeffs)
    out = []
    x = gf.one()
    alpha = gf.generator()
    for l in range(m):
        acc = [0] * deg
        for c, tvec in zip(x.coeffs, basis):
            if c:
                for j, t in enumerate(tvec):
                    if t:
                        acc[j] = (acc[j] + c * t) % p
        if not any(acc):
            out.append(l)
        x = x * alpha
    return tuple(out)


def singer_datum(q, modulus=None):
    """Difference set S = {l : Tr(alpha^l) = 0} for a primitive alpha of the
    cubic extension, folded by l -> q*l."""
    p, e = factor_prime_power(q)
    gf = make_field(p, 3 * e, modulus)
    if not gf.primitive:
        raise NotPrimitive("the cubic extension needs a primitive modulus")
    m = q * q + q + 1
    S = _trace_zero_exponents(gf, q, m)
    assert len(S) == q + 1, f"difference set size {len(S)} != q+1"
    lam = {s: (q * s) % m for s in S}
    assert set(lam.values()) == set(S)
    orbits = tuple(lambda_orbits(S, lam))
    threes = tuple(o for o in orbits if len(o) == 3)
    fixed = tuple(o[0] for o in orbits if len(o) == 1)
    assert len(threes) + len(fixed) == len(orbits)
    assert len(threes) == r_of_q(q)
    return SingerDatum(
        q=q,
        p=p,
        e=e,
        m=m,
        G=make_cyclic(m),
        S=S,
        alpha=gf.generator(),
        lam=lam,
        orbits=orbits,
        O=threes,
        fixed_points=fixed,
    )


def constant_kappa(d, sign=1):
    """The sign choice assigning the same sign to every length-3 orbit."""
    return {o[0]: sign for o in d.O}


def singer_T_kappa(d, kappa):
    """Sign-twisted translation-invariant presentation on Z/m.

    kappa must map the minimum of every length-3 orbit to +1 or -1."""
    want = {o[0] for o in d.O}
    if set(kappa) != want:
        raise ValueError(
            f"kappa keys {sorted(kappa)} do not cover orbit minima {sorted(want)}"
        )
    whole = subgroup(d.G, [1 % d.m])
    lifted = {(0, omin): sign for omin, sign in kappa.items()}
    return build_T_kappa(d.G, d.S, d.lam, whole, lifted)


def singer_family(d):
    """All 2^R sign-twisted presentations, the all-plus choice first."""
    mins = [o[0] for o in d.O]
    out = []
    for signs in product((1, -1), repeat=len(mins)):
        kappa = dict(zip(mins, signs))
        out.append((kappa, singer_T_kappa(d, kappa)))
    return out


def murho_dual(T, G):
    """Transpose the first two slots of every triple, then relabel each
    index by inversion in G; an involution that flips every kappa sign."""
    if len(T.labels) != G.n:
        raise ValueError("presentation labels do not match the group order")
    return act(T, mu_permutation(G), use_rho=True)


@dataclass(frozen=True, eq=False)
class QuadDatum:
    """Order-q^2 difference set together with the norm-image subgroup H of
    order q^2+q+1 inside Z/(q^4+q^2+1)."""

    q: int
    base: SingerDatum
    H: SubgroupDatum
    S_in_H: tuple
    O_in_H: tuple

    @property
    def G(self):
        return self.base.G

    @property
    def m(self):
        return self.base.m

    def F(self):
        return self.base.F()


def quad_datum(q, modulus=None):
    """Mark, inside the order-q^2 datum, the subgroup H of exponents divisible
    by q^2-q+1 and the folding orbits that land in it."""
    base = singer_datum(q * q, modulus)
    H = subgroup(base.G, [q * q - q + 1])
    assert H.order == q * q + q + 1
    s_in = tuple(s for s in base.S if s in H)
    assert len(s_in) == q + 1, f"|S meet H| = {len(s_in)} != q+1"
    o_in = tuple(o for o in base.O if all(s in H for s in o))
    assert len(o_in) == r_of_q(q)
    return QuadDatum(q=q, base=base, H=H, S_in_H=s_in, O_in_H=o_in)


def quad_T_kappa(dq, kappa):
    """Coset-twisted presentation; kappa keys are (coset representative,
    orbit minimum) over the orbits inside H, missing keys default to +1."""
    return build_T_kappa(dq.base.G, dq.base.S, dq.base.lam, dq.H, kappa)


def quad_family(dq):
    """All 2^([G:H]*R(q)) coset-twisted presentations, all-plus first."""
    keys = sorted((rep, o[0]) for rep in dq.H.reps for o in dq.O_in_H)
    out = []
    for signs in product((1, -1), repeat=len(keys)):
        kappa = dict(zip(keys, signs))
        out.append((kappa, quad_T_kappa(dq, kappa)))
    return out
