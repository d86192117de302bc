"""The invariant engine: spec'd values and cross-checks."""

import pytest

from bandknot.braid import BraidWord, alexander_burau
from bandknot.diagram import parse_pd, braid_closure
from bandknot.laurent import LaurentPolynomial
from bandknot.seifert import seifert_matrix
from bandknot.exactlinalg import smith_normal_form, signature_symmetric
from bandknot import invariants as inv


def lp(d, var="t"):
    return LaurentPolynomial(d, var)


TREFOIL = braid_closure(BraidWord(2, [1, 1, 1]))
FIG8 = braid_closure(BraidWord(3, [1, -2, 1, -2]))
UNKNOT = parse_pd("U")


def test_alexander_values():
    assert inv.alexander_from_seifert(seifert_matrix(TREFOIL)) == \
        lp({1: 1, 0: -1, -1: 1})
    assert inv.alexander_from_seifert(seifert_matrix(UNKNOT)) == 1
    assert inv.alexander_from_seifert(seifert_matrix(FIG8)) == \
        lp({1: -1, 0: 3, -1: -1})


def test_alexander_rejects_links():
    hopf = seifert_matrix(braid_closure(BraidWord(2, [1, 1])))
    with pytest.raises(ValueError):
        inv.alexander_from_seifert(hopf)


def test_conway_values():
    assert inv.conway_from_seifert(seifert_matrix(TREFOIL)) == \
        lp({2: 1, 0: 1}, "z")
    assert inv.conway_from_seifert(seifert_matrix(UNKNOT)) == \
        LaurentPolynomial.one("z")
    hopf = inv.conway_from_seifert(
        seifert_matrix(braid_closure(BraidWord(2, [1, 1]))))
    assert hopf in (lp({1: 1}, "z"), lp({1: -1}, "z"))


def test_conway_alexander_compatibility():
    for s, w in [(2, (1, 1, 1)), (3, (1, -2, 1, -2)), (3, (1, 1, 2, 2)),
                 (2, (1, 1, 1, 1, 1)), (3, (1, 1, 1, -2, 1, -2))]:
        b = BraidWord(s, w)
        if not b.is_knot():
            continue
        v = seifert_matrix(braid_closure(b))
        delta = inv.alexander_from_seifert(v)
        nabla = inv.conway_from_seifert(v)
        assert inv.alexander_to_conway(delta) == nabla


def test_signature_values():
    assert inv.signature(seifert_matrix(TREFOIL)) == -2
    assert inv.signature(seifert_matrix(UNKNOT)) == 0
    assert inv.signature(seifert_matrix(FIG8)) == 0


def test_determinant_values():
    assert inv.determinant(seifert_matrix(TREFOIL)) == 3
    assert inv.determinant(seifert_matrix(UNKNOT)) == 1
    assert inv.determinant(seifert_matrix(FIG8)) == 5


def test_smith_normal_form_examples():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    assert smith_normal_form([[6]]) == [6]
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]) == \
        smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])


def test_smith_divisibility_chain():
    import random
    rng = random.Random(3)
    for _ in range(40):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        d = smith_normal_form(m)
        assert len(d) == min(rows, cols)
        for a, b in zip(d, d[1:]):
            assert (a == 0 and b == 0) or (a >= 0 and b % a == 0 if a else b == 0)


def test_signature_symmetric_basics():
    assert signature_symmetric([[2, 0], [0, -3]]) == 0
    assert signature_symmetric([[-2, 1], [1, -2]]) == -2
    assert signature_symmetric([[0, 1], [1, 0]]) == 0
    assert signature_symmetric([[0, 3], [3, 2]]) == 0
    with pytest.raises(ValueError):
        signature_symmetric([[0, 1], [2, 0]])


def test_roots_of_unity_equal():
    tref = lp({1: 1, 0: -1, -1: 1})
    one = LaurentPolynomial.one()
    assert inv.roots_of_unity_equal(tref, tref, 5)
    assert not inv.roots_of_unity_equal(tref, one, 2)
    # t - 1 + 1/t equals 1 at every 1st root of unity (t = 1).
    assert inv.roots_of_unity_equal(tref, one, 1)
    with pytest.raises(ValueError):
        inv.roots_of_unity_equal(tref, one, 0)


def test_branched_covers_trefoil():
    v = seifert_matrix(TREFOIL)
    h2 = inv.branched_cover(v, 2)
    assert h2.invariant_factors == (3,)
    assert h2.order == 3
    h3 = inv.branched_cover(v, 3)
    assert h3.invariant_factors == (2, 2)
    assert h3.order == 4
    h6 = inv.branched_cover(v, 6)
    assert h6.order == 0  # Delta vanishes at primitive 6th roots


def test_branched_cover_unknot():
    v = seifert_matrix(UNKNOT)
    for n in (2, 3, 5):
        h = inv.branched_cover(v, n)
        assert h.invariant_factors == ()
        assert h.order == 1


def test_branched_cover_resultant_consistency():
    for s, w in [(2, (1, 1, 1)), (3, (1, -2, 1, -2)), (3, (1, 1, 2, 2)),
                 (2, (1, 1, 1, 1, 1))]:
        b = BraidWord(s, w)
        if not b.is_knot():
            continue
        v = seifert_matrix(braid_closure(b))
        for n in range(2, 7):
            inv.branched_cover(v, n)  # raises on SNF/resultant mismatch


def test_branched_cover_order_at_2_is_determinant():
    for s, w in [(2, (1, 1, 1)), (3, (1, -2, 1, -2)), (3, (1, 1, 2, 2))]:
        b = BraidWord(s, w)
        if not b.is_knot():
            continue
        v = seifert_matrix(braid_closure(b))
        assert inv.branched_cover(v, 2).order == inv.determinant(v)


def test_fox_milnor_trefoil_obstructed():
    tref = lp({1: 1, 0: -1, -1: 1})
    verdict = inv.fox_milnor(tref)
    assert verdict.status == inv.OBSTRUCTED_NEGATIVE_CONSTANT
    assert verdict.obstructed


def test_fox_milnor_figure_eight_no_factorization():
    fig8 = lp({1: -1, 0: 3, -1: -1})
    verdict = inv.fox_milnor(fig8)
    assert verdict.status == inv.OBSTRUCTED_NO_FACTORIZATION


def test_fox_milnor_factorization_found():
    # 3 - t^2 - 1/t^2 = F(t) F(1/t) with F = t^2 - t - 1.
    p = lp({0: 3, 2: -1, -2: -1})
    verdict = inv.fox_milnor(p)
    assert verdict.status == inv.FACTORIZATION_FOUND
    f = verdict.factor
    assert f * f.reverse() == p
    # The constant term equals the sum of squares of F's coefficients.
    assert sum(c * c for c in f.coeffs.values()) == p[0]


def test_fox_milnor_unknot():
    assert inv.fox_milnor(LaurentPolynomial.one()).status == \
        inv.FACTORIZATION_FOUND


def test_fox_milnor_square_knot():
    # (t - 1 + 1/t)^2 factors as F(t)F(1/t) with F = t^2 - t + 1.
    sq = lp({1: 1, 0: -1, -1: 1}) ** 2
    verdict = inv.fox_milnor(sq)
    assert verdict.status == inv.FACTORIZATION_FOUND


def test_fox_milnor_input_validation():
    with pytest.raises(ValueError):
        inv.fox_milnor(lp({1: 1}))
    with pytest.raises(ValueError):
        inv.fox_milnor(lp({1: 1, -1: 1}))


def test_knot_invariants_bundle():
    got = inv.knot_invariants(TREFOIL)
    assert got["alexander"] == lp({1: 1, 0: -1, -1: 1})
    assert got["signature"] == -2
    assert got["determinant"] == 3
    assert got["genus_bound"] == 1
    assert got["conway"] == lp({2: 1, 0: 1}, "z")
