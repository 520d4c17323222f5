import itertools

import pytest

import picture_hanging as ph


def test_two_nail_solution_falls_on_either_removal():
    w = ph.parse_word("x1 x2 X1 X2")
    assert ph.format_word(w) == "x1 x2 X1 X2"
    assert not ph.falls(w, [])
    assert ph.falls(w, [1])
    assert ph.falls(w, [2])


def test_reduce_and_remove():
    assert ph.reduce([1, 2, -2, -1, 3]) == [3]
    assert ph.remove_nails([1, 2, -1, -2], [2]) == []


def test_constructions_have_expected_lengths():
    assert ph.format_word(ph.build_s(3)) == "x1 x2 X1 X2 x3 x2 x1 X2 X1 X3"
    assert len(ph.build_e(4)) == 16
    assert len(ph.build_disjoint([[1, 2], [3]])) <= 2 * 2 * 3


def test_compiled_formula_matches_truth_table():
    report = ph.compile_formula("r1 & r2 | r3", 3)
    table = ph.fall_table(report["word"], 3)
    for mask, value in enumerate(table):
        r = [(mask >> i) & 1 for i in range(3)]
        assert value == bool((r[0] and r[1]) or r[2])
    assert report["verification"] == "verified"


def test_threshold_and_spectator():
    report = ph.build_k_of_n(2, 3)
    table = ph.fall_table(report["word"], 3)
    assert table == [bin(mask).count("1") >= 2 for mask in range(8)]
    assert len(ph.min_fell(report["word"], 3)) == 2
    assert len(ph.max_survive(report["word"], 3)) == 1


def test_fixtures_fall_as_stated():
    assert ph.fixture_ids() == list(range(1, 12))
    f = ph.fixture(2)
    assert f["n"] == 3
    for removed in itertools.combinations(range(1, 4), 2):
        assert ph.falls(f["word"], list(removed))


def test_render_text_mentions_every_letter():
    out = ph.render([1, -2], 2, "text")
    assert "2 letters" in out


def test_errors_map_to_python_exceptions():
    with pytest.raises(ph.ParseError):
        ph.parse_word("x0")
    with pytest.raises(ph.Unrealizable):
        ph.compile_formula("false", 2)
    with pytest.raises(ValueError):
        ph.compile_formula("r1 & (", 2)
