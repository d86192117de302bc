"""PD codes: parsing, validation, braid closures, mirrors."""

import random

import pytest
from hypothesis import given, strategies as st

from bandknot.braid import BraidWord
from bandknot.diagram import (PlanarDiagram, DiagramError, parse_pd,
                              braid_closure)

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


def test_parse_standard_trefoil():
    d = parse_pd(TREFOIL_PD)
    assert d.crossing_count() == 3
    assert d.component_count() == 1
    assert d.writhe() == 3


def test_parse_unknot_token():
    d = parse_pd("U")
    assert d.stats() == {"writhe": 0, "components": 1, "crossings": 0}


def test_parse_malformed_edge():
    with pytest.raises(DiagramError):
        parse_pd("X[1,4,2,3]")


def test_parse_syntax_error_reports_position():
    with pytest.raises(DiagramError) as err:
        parse_pd("X[1,4,2,5] Y[3,6,4,1]")
    assert "position" in str(err.value)


def test_parse_wrong_arity():
    with pytest.raises(DiagramError):
        parse_pd("X[1,2,3]")


def test_orientation_inconsistency_detected():
    # Edge 1 would have to arrive as the under-strand at both crossings.
    with pytest.raises(DiagramError):
        parse_pd("X[1,2,3,4] X[1,3,2,4]")


def test_kink_pd_is_valid():
    d = parse_pd("X[1,2,2,1]")
    assert d.crossing_count() == 1
    assert d.component_count() == 1
    assert abs(d.writhe()) == 1


def test_roundtrip_through_text():
    d = parse_pd(TREFOIL_PD)
    assert parse_pd(d.to_text()) == d


def test_braid_closure_examples():
    t = braid_closure(BraidWord(2, [1, 1, 1]))
    assert t.stats() == {"writhe": 3, "components": 1, "crossings": 3}
    u = braid_closure(BraidWord(1, []))
    assert u.stats() == {"writhe": 0, "components": 1, "crossings": 0}
    hopf = braid_closure(BraidWord(2, [1, 1]))
    assert hopf.component_count() == 2
    assert hopf.writhe() == 2


def test_braid_closure_untouched_strands():
    d = braid_closure(BraidWord(3, [1]))
    assert d.component_count() == 2
    assert d.unknots == 1


def test_mirror_involution_and_writhe():
    d = parse_pd(TREFOIL_PD)
    m = d.mirror()
    assert m.writhe() == -3
    assert m.mirror() == d
    u = parse_pd("U")
    assert u.mirror() == u


def test_mirror_roundtrip_text():
    d = braid_closure(BraidWord(3, [1, -2, 1, -2]))
    m = d.mirror()
    assert parse_pd(m.to_text()) == m


def test_relabeled():
    d = parse_pd(TREFOIL_PD)
    mapping = {e: e + 10 for e in d.edges()}
    r = d.relabeled(mapping)
    assert r.component_count() == 1
    assert r.writhe() == d.writhe()


@given(st.integers(1, 4), st.lists(st.integers(-3, 3), max_size=10),
       st.randoms())
def test_closure_components_equal_cycle_count(s, letters, rng):
    letters = [a for a in letters if a != 0 and abs(a) < s]
    b = BraidWord(s, letters)
    d = braid_closure(b)
    assert d.component_count() == b.cycle_count()
    assert d.crossing_count() == len(letters)
    assert d.writhe() == b.writhe()


@given(st.integers(2, 3), st.lists(st.integers(-2, 2), min_size=1,
                                   max_size=8))
def test_closure_text_roundtrip(s, letters):
    letters = [a for a in letters if a != 0 and abs(a) < s]
    if not letters:
        return
    d = braid_closure(BraidWord(s, letters))
    assert parse_pd(d.to_text()) == d
