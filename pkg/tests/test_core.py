import math

import pytest
from hypothesis import given, strategies as st

from nonnesting.core import (
    ArcDiagram,
    CapExceeded,
    DyckPath,
    LOWER_RIGHT,
    Multipermutation,
    NotNonnestingError,
    Permutation,
    UPPER_LEFT,
    catalan,
    copy_subsequences,
    des,
    des_sigma,
    dy,
    enumerate_dyck,
    enumerate_nonnesting,
    enumerate_perms,
    format_word,
    grid_of,
    is_nonnesting,
    mat,
    parse_path,
    parse_word,
    path_from_peaks,
    path_from_valleys,
    pattern_occurs,
    peak_corners,
    peak_stats,
    pi_from,
    plat,
    s_of,
    statistics,
    valley_corners,
    wdes,
)

from conftest import all_words, dyck_paths, nonnesting_words, perms

PI = parse_word("228183175437954696")


def test_worked_word_statistics():
    st_ = statistics(PI)
    assert (st_.des, st_.plat, st_.wdes) == (9, 1, 10)
    assert s_of(PI) == (2, 8, 1, 3, 7, 5, 4, 9, 6)
    assert pi_from(s_of(PI), dy(PI)) == PI


def test_descent_conventions():
    assert des((2, 1)) == 1 and plat((1, 1)) == 1 and wdes((2, 2, 1)) == 2
    assert des(()) == 0 and wdes((1,)) == 0
    # last position never counts
    assert statistics((3, 1, 2)).descent_set == frozenset({1})


def test_word_format_roundtrip():
    assert format_word((1, 2, 10, 2)) == "1,2,10,2"
    assert parse_word("1,2,10,2") == (1, 2, 10, 2)
    assert parse_word(format_word(PI)) == PI


@pytest.mark.parametrize("text", ["12a3", "1,,2", "1,x"])
def test_parse_word_errors(text):
    with pytest.raises(ValueError):
        parse_word(text)


def test_parse_path_reports_position():
    with pytest.raises(ValueError, match="position"):
        parse_path("ENX")
    with pytest.raises(ValueError):
        parse_path("NE")


def test_constructors_validate():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    with pytest.raises(ValueError):
        Multipermutation((1, 1, 2))
    with pytest.raises(ValueError):
        DyckPath("EEN")


def test_permutation_helpers():
    p = Permutation((2, 4, 1, 3))
    assert p.inverse() == (3, 1, 4, 2)
    assert p.swap_values(1) == (1, 4, 2, 3)
    assert p.descent_set == frozenset({2}) and p.des == 1
    assert Permutation.decreasing(3) == (3, 2, 1)
    assert (1, 2) in p.noninversions() and (2, 1) not in p.noninversions()


def test_arc_diagram():
    a = ArcDiagram(4, ((1, 4), (2, 3)))
    assert a.has_nesting() and len(a.nestings()) == 1 and not a.crossings()
    b = ArcDiagram(4, ((1, 3), (2, 4)))
    assert not b.has_nesting() and len(b.crossings()) == 1
    with pytest.raises(ValueError):
        ArcDiagram(3, ((2, 2),))


def test_mat_and_nonnesting():
    assert not is_nonnesting((1, 2, 2, 1))
    assert is_nonnesting((1, 2, 1, 2))
    assert mat((1, 2, 1, 2)).arcs == ((1, 3), (2, 4))
    with pytest.raises(NotNonnestingError):
        s_of((1, 2, 2, 1))


@pytest.mark.parametrize("n", range(0, 5))
def test_three_nonnesting_characterisations_agree(n):
    for w in all_words(n, 2):
        arcs = is_nonnesting(w)
        patterns = not pattern_occurs(w, (1, 2, 2, 1)) and not pattern_occurs(w, (2, 1, 1, 2))
        a, b = copy_subsequences(w, 2)
        assert arcs == patterns == (a == b), w


@pytest.mark.parametrize("n", range(0, 6))
def test_enumeration_counts(n):
    paths = list(enumerate_dyck(n))
    assert len(paths) == len(set(paths)) == catalan(n)
    assert paths == sorted(paths)
    assert len(list(enumerate_perms(n))) == math.factorial(n)
    words = list(enumerate_nonnesting(n))
    assert len(set(words)) == math.factorial(n) * catalan(n)


@pytest.mark.parametrize("n", range(0, 5))
def test_enumeration_matches_brute_force(n):
    brute = {w for w in all_words(n, 2) if is_nonnesting(w)}
    assert set(enumerate_nonnesting(n)) == brute


def test_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_nonnesting(5, cap=100))
    assert len(list(enumerate_dyck(3, cap=5))) == 5


@given(nonnesting_words())
def test_pi_decomposition_roundtrip(w):
    assert is_nonnesting(w)
    assert pi_from(s_of(w), dy(w)) == w


@given(dyck_paths(min_n=1))
def test_peaks_and_valleys_determine_path(path):
    n = len(path) // 2
    assert path_from_peaks(peak_corners(path), n) == path
    assert path_from_valleys(valley_corners(path), n) == path
    ps = peak_stats(path)
    assert ps.pea == len(valley_corners(path)) + 1
    assert ps.lpea + ps.hpea == ps.pea >= 1


def test_grid_decorations():
    g = grid_of((2, 5, 3, 1, 6, 7, 4))
    assert g.vertical_red_lines == frozenset({2, 3, 6})
    assert g.notch(2, 1) == LOWER_RIGHT  # 2 < 5
    assert g.notch(3, 2) == UPPER_LEFT  # 5 > 3
    assert g.notch(1, 1) is None
    assert len(g.notches) == 21


@pytest.mark.parametrize("n", range(1, 5))
def test_grid_descent_count_matches_word(n):
    paths = list(enumerate_dyck(n))
    for sigma in enumerate_perms(n):
        g = grid_of(sigma)
        for d in paths:
            assert des_sigma(d, sigma, g) == des(pi_from(sigma, d))


@given(st.data())
def test_grid_descent_count_random(data):
    path = data.draw(dyck_paths(min_n=1, max_n=9))
    sigma = data.draw(perms(len(path) // 2))
    assert des_sigma(path, sigma) == des(pi_from(sigma, path))


def test_pi_from_size_mismatch():
    with pytest.raises(ValueError):
        pi_from((1, 2), "EN")
