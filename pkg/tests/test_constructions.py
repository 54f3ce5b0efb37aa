import pytest

from semitrans import (
    BadParameters,
    SemiTransitive,
    check_semi_transitive,
    circulant,
    complete,
    find_shortcut_oracle,
    toft,
)
from semitrans.constructions import (
    fig4_orientation,
    lemma8_orientation,
    toft_orientation,
)

FIG4_ARCS = {
    (1, 0), (2, 1), (2, 3), (2, 7), (2, 10), (3, 4), (3, 8), (3, 11),
    (4, 5), (4, 12), (5, 0), (6, 1), (6, 5), (6, 7), (6, 11), (7, 8),
    (7, 12), (8, 0), (9, 1), (9, 4), (9, 8), (9, 10), (10, 5), (10, 11),
    (11, 12), (12, 0),
}


def test_fig4_arcs_exact():
    o = fig4_orientation()
    assert set(o.arcs) == FIG4_ARCS
    assert len(o.arcs) == 26
    assert o.graph == circulant(13, [1, 5])


def test_fig4_semi_transitive():
    o = fig4_orientation()
    assert isinstance(check_semi_transitive(o), SemiTransitive)


def test_fig4_sources_and_sink():
    o = fig4_orientation()
    assert o.in_neighbors(0) == (1, 5, 8, 12) and o.out_neighbors(0) == ()
    for s in (2, 6, 9):
        assert o.in_neighbors(s) == ()


def test_lemma8_rejects_small():
    for n in (0, 3, 4):
        with pytest.raises(BadParameters):
            lemma8_orientation(n)


def test_lemma8_structure():
    o = lemma8_orientation(9)
    assert o.graph == circulant(9, [1, 2])
    # interior edges run low -> high
    for i in range(6):
        assert o.has_arc(i, i + 1)
        if i + 2 <= 6:
            assert o.has_arc(i, i + 2)
    for t, h in [(1, 8), (0, 8), (0, 7), (7, 5), (7, 6), (7, 8), (8, 6)]:
        assert o.has_arc(t, h)


def test_lemma8_n5_transitive_tournament():
    o = lemma8_orientation(5)
    assert o.graph == complete(5)
    # every triangle transitively closed
    for a in range(5):
        for b in range(5):
            for c in range(5):
                if o.has_arc(a, b) and o.has_arc(b, c):
                    assert o.has_arc(a, c)


@pytest.mark.parametrize("n", [5, 6, 7, 12, 25, 40])
def test_lemma8_semi_transitive(n):
    o = lemma8_orientation(n)
    assert isinstance(check_semi_transitive(o), SemiTransitive)
    if len(o.graph.edges) <= 22:
        assert find_shortcut_oracle(o) is None


@pytest.mark.parametrize("n", [3, 4, 6])
def test_toft_orientation_rejects(n):
    with pytest.raises(BadParameters):
        toft_orientation(n)


def test_toft_orientation_structure():
    n = 5
    o = toft_orientation(n)
    assert o.graph == toft(n)
    # the two cycles: directed paths of lengths n-2 and 2 from one source
    for base in (0, 3 * n):
        for i in range(n - 2):
            assert o.has_arc(base + i, base + i + 1)
        assert o.has_arc(base, base + n - 1)
        assert o.has_arc(base + n - 1, base + n - 2)
    # all inter-layer arcs point toward the higher layer
    for i in range(n):
        assert o.has_arc(i, n + i)
        assert o.has_arc(2 * n + i, 3 * n + i)
        for j in range(n):
            assert o.has_arc(n + i, 2 * n + j)


@pytest.mark.parametrize("n", [5, 7, 9])
def test_toft_orientation_semi_transitive(n):
    assert isinstance(check_semi_transitive(toft_orientation(n)), SemiTransitive)
