import pytest

import morse_orbit


def test_group():
    g = morse_orbit.Group("Sym(4)")
    assert g.order == 24
    assert g.degree == 4
    assert g.elements()[0] == "()"
    assert len(set(g.elements())) == 24


def test_group_errors():
    with pytest.raises(morse_orbit.Error):
        morse_orbit.Group("Sym(4")
    with pytest.raises(morse_orbit.Error):
        morse_orbit.Group("Sym(8)")
    assert morse_orbit.Group("Sym(8)", max_order=50000).order == 40320


def test_analyze_single_cell():
    report = morse_orbit.analyze("Sym(3)", 2)
    assert report["cells_per_dimension"] == [1]
    assert report["euler_characteristic"] == 1
    assert report["status"] == "pass"


def test_analyze_sym4():
    report = morse_orbit.analyze("Sym(4)", 2, fusion=True, threads=2)
    assert report["cells_per_dimension"] == [6, 10, 5]
    assert report["critical_cell"] == "[<(0 1),(0 2)(1 3)>]"
    v = report["verdicts"]
    assert v["acyclic"] == "pass"
    assert v["single_critical"] == "pass"
    assert v["homology_trivial"] == "pass"
    assert v["fusion"] == "pass"
    assert v["height_ranking"] == "pass"


def test_sub_collection():
    report = morse_orbit.analyze("Sym(4)", 2, collection="above:(0 1 2 3)")
    assert report["cells_per_dimension"] == [2, 1]
    assert report["status"] == "pass"


def test_homology_and_dot():
    h = morse_orbit.homology("Alt(5)", 2)
    assert all(e["betti"] == 0 for e in h["homology"])
    dot = morse_orbit.export_dot("Sym(4)", 2)
    assert dot.startswith("digraph") and 'kind="match"' in dot


def test_fusion_compare():
    report = morse_orbit.fusion_compare("Sym(5)", 2)
    assert report["verdicts"]["fusion"] == "pass"


def test_smith_normal_form():
    assert morse_orbit.smith_normal_form([[2, 0], [0, 3]]) == (2, [1, 6])
    assert morse_orbit.smith_normal_form([[0, 0]]) == (0, [])
    big = 2**62
    assert morse_orbit.smith_normal_form([[big, 0], [0, big]]) == (2, [big, big])
    with pytest.raises(morse_orbit.Error):
        morse_orbit.smith_normal_form([[1, 2], [3]])
