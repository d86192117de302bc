"""Braid words and the Burau route to the Alexander polynomial."""

import pytest
from hypothesis import given, strategies as st

from bandknot.braid import (BraidWord, parse_braid, alexander_burau,
                            reduced_burau, burau_matrix, _mat_mul, _identity)
from bandknot.laurent import LaurentPolynomial


def test_braid_validation():
    with pytest.raises(ValueError):
        BraidWord(0, [])
    with pytest.raises(ValueError):
        BraidWord(2, [2])
    with pytest.raises(ValueError):
        BraidWord(2, [0])


def test_permutation_and_cycles():
    b = BraidWord(2, [1, 1, 1])
    assert b.permutation() == [1, 0]
    assert b.cycle_count() == 1 and b.is_knot()
    hopf = BraidWord(2, [1, 1])
    assert hopf.cycle_count() == 2 and not hopf.is_knot()
    assert BraidWord(1, []).is_knot()


def test_parse_braid():
    b = parse_braid("BR(3; 1 -2 1 -2)")
    assert b.strand_count == 3
    assert b.letters == (1, -2, 1, -2)
    assert parse_braid(str(b)) == b
    with pytest.raises(ValueError):
        parse_braid("BR(3: 1)")
    with pytest.raises(ValueError):
        parse_braid("braid 2 1")


def _eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def test_burau_braid_relations():
    s = 4
    for i in (1, 2, 3):
        assert _eq(_mat_mul(reduced_burau(i, s), reduced_burau(-i, s)),
                   _identity(s - 1))
    aba = _mat_mul(_mat_mul(reduced_burau(1, s), reduced_burau(2, s)),
                   reduced_burau(1, s))
    bab = _mat_mul(_mat_mul(reduced_burau(2, s), reduced_burau(1, s)),
                   reduced_burau(2, s))
    assert _eq(aba, bab)
    assert _eq(_mat_mul(reduced_burau(1, s), reduced_burau(3, s)),
               _mat_mul(reduced_burau(3, s), reduced_burau(1, s)))


def test_alexander_burau_anchors():
    trefoil = alexander_burau(BraidWord(2, [1, 1, 1]))
    assert trefoil == LaurentPolynomial({1: 1, 0: -1, -1: 1})
    fig8 = alexander_burau(BraidWord(3, [1, -2, 1, -2]))
    assert fig8 == LaurentPolynomial({1: -1, 0: 3, -1: -1})
    assert alexander_burau(BraidWord(1, [])) == LaurentPolynomial.one()


def test_alexander_burau_rejects_links():
    with pytest.raises(ValueError):
        alexander_burau(BraidWord(2, [1, 1]))


def test_alexander_normalized_invariants():
    # Normalization: symmetric with value 1 at t = 1, for assorted knots.
    words = [(2, (1, 1, 1, 1, 1)), (3, (1, 1, 2, 2)), (3, (1, -2, 1, 1, 1)),
             (4, (1, 2, 3, 1, -2, 3)), (2, (-1, -1, -1))]
    for s, w in words:
        b = BraidWord(s, w)
        if not b.is_knot():
            continue
        p = alexander_burau(b)
        assert p.is_symmetric()
        assert p.evaluate_unit(1) == 1


@given(st.integers(2, 4), st.lists(st.integers(-3, 3), max_size=8))
def test_alexander_mirror_invariance(s, letters):
    letters = [a for a in letters if a != 0 and abs(a) < s]
    b = BraidWord(s, letters)
    if not b.is_knot():
        return
    assert alexander_burau(b) == alexander_burau(b.mirror())
