"""Seifert circles, the braiding reduction, and the Seifert matrix."""

import random

import pytest

from bandknot.braid import BraidWord, alexander_burau
from bandknot.diagram import parse_pd, braid_closure, DiagramError
from bandknot.morse import MorseBuilder
from bandknot.seifert import (seifert_circles, seifert_matrix,
                              seifert_matrix_of_braid, braided_form,
                              extract_braid, SplitDiagramError)
from bandknot.exactlinalg import int_det
from bandknot import invariants as inv

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIG8 = BraidWord(3, [1, -2, 1, -2])


def plat(a1, a2):
    mb = MorseBuilder()
    mb.cap(0)
    mb.cap(2)
    mb.twist(1, abs(a1), over="left" if a1 > 0 else "right")
    mb.twist(0, abs(a2), over="left" if a2 > 0 else "right")
    mb.cup(1)
    mb.cup(0)
    return mb.finish()


def test_circles_trefoil():
    data = seifert_circles(parse_pd(TREFOIL_PD))
    assert data.circle_count == 2
    assert data.genus == 1


def test_circles_unknot():
    data = seifert_circles(parse_pd("U"))
    assert data.circle_count == 0 or data.genus == 0
    assert data.genus == 0


def test_circles_figure_eight():
    data = seifert_circles(braid_closure(FIG8))
    assert data.circle_count == 3
    assert data.genus == 1


def test_split_diagram_rejected():
    with pytest.raises(SplitDiagramError):
        seifert_circles(parse_pd("U U"))
    with pytest.raises(SplitDiagramError):
        seifert_matrix(parse_pd(TREFOIL_PD + " U"))


def test_nonplanar_rejected():
    virtual = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,4,7,3] X[2,8,3,7]")
    with pytest.raises(DiagramError):
        seifert_circles(virtual)


def test_matrix_unknot_empty():
    v = seifert_matrix(parse_pd("U"))
    assert v.rank == 0
    assert inv.alexander_from_seifert(v) == 1


def test_matrix_trefoil_values():
    v = seifert_matrix(braid_closure(BraidWord(2, [1, 1, 1])))
    assert v.rank == 2
    assert inv.alexander_from_seifert(v) == alexander_burau(
        BraidWord(2, [1, 1, 1]))
    assert inv.signature(v) == -2


def test_unimodular_skew_part():
    words = [(2, [1, 1, 1]), (3, [1, -2, 1, -2]), (3, [1, 1, 2, -1, 2]),
             (3, [1, 1, 1, 2, 2, 2])]
    for s, w in words:
        b = BraidWord(s, w)
        if not b.is_knot():
            continue
        v = seifert_matrix_of_braid(b)
        n = v.rank
        skew = [[v.entries[i][j] - v.entries[j][i] for j in range(n)]
                for i in range(n)]
        assert int_det(skew) == 1


def test_braided_form_is_fixed_point_for_braids():
    d = braid_closure(FIG8)
    assert braided_form(d) == d


def test_extract_braid_roundtrip():
    for s, w in [(2, [1, 1, 1]), (3, [1, -2, 1, -2]), (3, [1, 2, 1, 2]),
                 (4, [1, 2, 3, 1, 2, 3])]:
        d = braid_closure(BraidWord(s, w))
        b = extract_braid(d)
        assert b.cycle_count() == d.component_count()
        assert b.writhe() == d.writhe()
        if b.is_knot():
            assert alexander_burau(b) == alexander_burau(BraidWord(s, w))


def test_pipeline_on_parsed_diagrams():
    v = seifert_matrix(parse_pd(TREFOIL_PD))
    assert inv.alexander_from_seifert(v) == alexander_burau(
        BraidWord(2, [1, 1, 1]))
    assert abs(inv.signature(v)) == 2


def test_twist_knot_table():
    """Plat diagrams of twist and 2-bridge knots against published values.

    These diagrams have incoherent twist regions, so they genuinely
    exercise the braiding reduction.
    """
    cases = {
        (1, -2): ({1: 1, 0: -1, -1: 1}, 3),        # trefoil
        (2, -2): ({1: -1, 0: 3, -1: -1}, 5),       # figure eight
        (3, -2): ({1: 2, 0: -3, -1: 2}, 7),        # 5_2
        (2, -4): ({1: -2, 0: 5, -1: -2}, 9),       # 6_1
        (1, -4): ({2: 1, 1: -1, 0: 1, -1: -1, -2: 1}, 5),   # 5_1
        (3, 4): ({2: -1, 1: 3, 0: -3, -1: 3, -2: -1}, 11),  # 6_2
    }
    from bandknot.laurent import LaurentPolynomial

    for (a1, a2), (coeffs, det) in cases.items():
        d = plat(a1, a2)
        v = seifert_matrix(d)
        delta = inv.alexander_from_seifert(v)
        assert delta == LaurentPolynomial(coeffs), (a1, a2, str(delta))
        assert inv.determinant(v) == det


def test_relabel_invariance():
    rng = random.Random(11)
    for s, w in [(3, [1, -2, 1, -2]), (2, [1, 1, 1]), (3, [2, 2, 1, -2, 1])]:
        b = BraidWord(s, w)
        if not b.is_knot():
            continue
        d = braid_closure(b)
        edges = sorted(d.edges())
        perm = edges[:]
        rng.shuffle(perm)
        mapping = dict(zip(edges, perm))
        r = d.relabeled(mapping)
        assert inv.alexander_from_seifert(seifert_matrix(r)) == \
            inv.alexander_from_seifert(seifert_matrix(d))


def test_mirror_negates_signature():
    for s, w in [(2, [1, 1, 1]), (3, [1, 1, 2, 2]), (3, [1, -2, 1, -2])]:
        b = BraidWord(s, w)
        if not b.is_knot():
            continue
        d = braid_closure(b)
        assert inv.signature(seifert_matrix(d.mirror())) == \
            -inv.signature(seifert_matrix(d))
