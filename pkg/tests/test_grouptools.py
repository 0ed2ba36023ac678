"""Presentation export, Smith normal form, and coset enumeration probes."""

from fractions import Fraction

import pytest

from trigon.catalog import table
from trigon.grouptools import (
    Abelianization,
    Exceeded,
    PresentationDoc,
    abelianization,
    exponent_sums_mod3,
    export_presentation,
    parse_presentation,
    presentation_doc,
    todd_coxeter,
)
from trigon.permgrp import Perm
from trigon.singer import constant_kappa, singer_T_kappa, singer_datum
from trigon.tripres import TrianglePresentation, act

SQUARE_T = TrianglePresentation((1, 2), frozenset({(1, 1, 2), (2, 2, 2)}))

GAP_SQUARE = "F := FreeGroup(2);\nG := F / [ F.1*F.1*F.2, F.2*F.2*F.2 ];\n"
MAGMA_SQUARE = "G<a1,a2> := Group< a1,a2 | a1*a1*a2, a2*a2*a2 >;\n"
JSON_SQUARE = '{"n": 2, "relators": [[1, 1, 2], [2, 2, 2]]}\n'


def relation_matrix(T):
    doc = presentation_doc(T)
    rows = []
    for i, j, k in doc.relators:
        row = [0] * doc.n
        for x in (i, j, k):
            row[x - 1] += 1
        rows.append(row)
    return rows


def determinant(rows):
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for cc in range(c, n):
                m[r][cc] -= f * m[c][cc]
    return det


def test_doc_one_relator_per_orbit():
    doc = presentation_doc(SQUARE_T)
    assert doc == PresentationDoc(n=2, relators=((1, 1, 2), (2, 2, 2)))
    assert len(doc.relators) == len(SQUARE_T.canonical_reps())
    fano = presentation_doc(table(3))
    assert fano.n == 7 and len(fano.relators) == 7
    assert fano.relators[0] == (1, 2, 4)


def test_doc_validates_relators():
    with pytest.raises(ValueError):
        PresentationDoc(n=2, relators=((1, 2, 3),))
    with pytest.raises(ValueError):
        PresentationDoc(n=2, relators=((1, 2),))


def test_export_byte_exact():
    assert export_presentation(SQUARE_T, "gap-like") == GAP_SQUARE
    assert export_presentation(SQUARE_T, "magma-like") == MAGMA_SQUARE
    assert export_presentation(SQUARE_T, "json") == JSON_SQUARE
    with pytest.raises(ValueError):
        export_presentation(SQUARE_T, "latex")


@pytest.mark.parametrize("fmt", ["gap-like", "magma-like", "json"])
@pytest.mark.parametrize("which", [3, 4])
def test_export_parse_round_trip(fmt, which):
    T = table(which)
    doc = presentation_doc(T)
    assert parse_presentation(export_presentation(T, fmt), fmt) == doc


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_presentation("nonsense", "gap-like")
    with pytest.raises(ValueError):
        parse_presentation("nonsense", "magma-like")
    with pytest.raises(ValueError):
        parse_presentation(GAP_SQUARE, "latex")


def test_exponent_sums_all_zero_mod_three():
    assert exponent_sums_mod3(SQUARE_T) == {0}
    assert exponent_sums_mod3(table(3)) == {0}
    empty = TrianglePresentation((1,), frozenset())
    assert exponent_sums_mod3(empty) <= {0}


def test_square_abelianization():
    # rows 2a+b and 3b; 2x2 determinant 6 matches the single factor
    ab = abelianization(SQUARE_T)
    assert ab == Abelianization(factors=(6,), free_rank=0)
    assert determinant(relation_matrix(SQUARE_T)) in (6, -6)


def test_free_ranks():
    assert abelianization(TrianglePresentation((1, 2), frozenset())) == (
        Abelianization(factors=(), free_rank=2)
    )
    assert abelianization(TrianglePresentation((1,), frozenset())).free_rank == 1


def test_fano_abelianization_baseline():
    ab = abelianization(table(3))
    assert ab == Abelianization(factors=(2, 2, 6), free_rank=0)
    product = 1
    for d in ab.factors:
        product *= d
    assert abs(determinant(relation_matrix(table(3)))) == product == 24


@pytest.mark.parametrize("sign", [1, -1])
def test_abelianization_invariant_under_translation(sign):
    d = singer_datum(2)
    T = singer_T_kappa(d, constant_kappa(d, sign))
    base = abelianization(T)
    for g in range(1, d.m):
        shift = Perm(tuple((i + g) % d.m for i in range(d.m)))
        assert abelianization(act(T, shift)) == base


def test_coset_enumeration_square():
    assert todd_coxeter(SQUARE_T, (), 1000) == 6
    assert todd_coxeter(SQUARE_T, ((1,),), 1000) == 1
    assert todd_coxeter(SQUARE_T, ((2,),), 1000) == 2
    # a1*a1 generates the same subgroup as a2 inverse
    assert todd_coxeter(SQUARE_T, ((1, 1),), 1000) == 2


def test_coset_enumeration_free_group():
    free1 = TrianglePresentation((1,), frozenset())
    assert todd_coxeter(free1, ((1,),), 10) == 1
    assert todd_coxeter(free1, (), 10) == Exceeded(10)


def test_coset_enumeration_infinite_lattice_exceeds():
    assert todd_coxeter(table(3), (), 10**5) == Exceeded(10**5)


def test_coset_enumeration_deterministic():
    runs = {todd_coxeter(table(3), ((1,), (2,)), 2000) for _ in range(2)}
    assert len(runs) == 1
