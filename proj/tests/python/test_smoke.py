"""Smoke tests for the python bindings: one touch per exposed area."""

import pytest

import loopforge as lf


def test_version():
    assert lf.__version__


def test_table_roundtrip():
    t1 = lf.builtin_table("table1")
    assert t1.size == 27
    assert t1.identity == 0
    text = lf.format_table(t1)
    assert lf.read_table_text(text) == t1


def test_from_rows_and_predicates():
    c3 = lf.LoopTable.from_rows([[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    assert lf.is_associative(c3)
    assert lf.is_commutative(c3)
    assert c3.element_order(1) == 3
    flags = lf.PropertyFlags.of(lf.builtin_table("table1"))
    assert flags.right_bol and not flags.left_bol
    assert flags.exponent == 3


def test_groups():
    t1 = lf.builtin_table("table1")
    m = lf.mlt(t1)
    assert m.order == 139968
    assert lf.derived_length(m) == 3
    assert lf.inn(t1).order == 5184
    assert lf.rmlt(t1).order == 243
    assert lf.is_elementary_abelian(lf.rinn(t1), 3)
    s = m.stabilizer(0)
    assert s.order * len(m.orbit(0)) == m.order


def test_structure():
    t1 = lf.builtin_table("table1")
    assert lf.nucleus_left(t1).members == list(range(9))
    assert lf.center_loop(t1).members == [0]
    assert lf.subloop_generated(t1, [1]).members == [0, 1, 2]
    assert len(lf.all_normal_subloops(t1)) == 3
    q = lf.quotient(t1, lf.SubloopSet(list(range(9))))
    assert q.size == 3 and lf.is_associative(q)


def test_isotopy():
    t1 = lf.builtin_table("table1")
    part = lf.isotopy_classes(t1)
    assert [c.representative for c in part.classes] == [0, 9]
    iso = lf.principal_isotope(t1, 9)
    assert lf.is_isomorphic(iso, lf.builtin_table("table2")) is not None
    assert lf.is_isomorphic(t1, lf.builtin_table("table2")) is None


def test_twisted():
    g = lf.GroupTable.certify(lf.builtin_table("g21"))
    q = lf.t_half_full(g)
    assert lf.is_bruck(q)
    assert not lf.is_associative(q)
    assert all(
        (q.mul(x, y) == q.mul(y, x)) == lf.thalf_commutes(g, x, y)
        for x in range(21)
        for y in range(21)
    )
    t = lf.twisted_subset(g, list(range(21)))
    assert lf.aschbacher_radical(g, t) == lf.derived_subloop(g.table).members


def test_analysis_report():
    rep = lf.analyze(lf.builtin_table("s3"))
    assert '"order": 6' in rep.json
    assert "order" in rep.text


def test_errors_are_typed():
    with pytest.raises(lf.LoopError, match="unknown_dataset"):
        lf.builtin_table("nope")
    with pytest.raises(lf.LoopError, match="not_associative"):
        lf.GroupTable.certify(lf.builtin_table("table1"))
    with pytest.raises(lf.LoopError, match="not_latin_square"):
        lf.LoopTable.from_rows([[0, 1], [0, 1]])
