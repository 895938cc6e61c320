import pytest

from cambrian.projections import (
    cambrian_lattice,
    pi_down,
    pi_up,
    projection_table,
    theta_congruence,
)
from cambrian.sortable import coxeter_elements, enumerate_sortables, is_sortable
from cambrian.verify import pi_up_recursive
from cambrian.weak_order import lattice_of

from conftest import ctx_of, el, group

A3_C = (1, 0, 2)


def test_pi_down_examples():
    c = ctx_of("B2", (0, 1))
    s1 = el("B2", (1,))
    assert pi_down(c, 0) == 0
    assert pi_down(c, el("B2", (1, 0))) == s1
    assert pi_down(c, el("B2", (1, 0, 1))) == s1
    for w in enumerate_sortables(c):
        assert pi_down(c, w) == w


def test_pi_up_examples():
    c = ctx_of("B2", (0, 1))
    B2 = c.system
    assert pi_up(c, B2.longest_index) == B2.longest_index
    assert pi_up(c, el("B2", (1,))) == el("B2", (1, 0, 1))
    for w in range(B2.order):
        assert pi_up(c, pi_down(c, w)) == pi_up(c, w)


@pytest.mark.parametrize("name", ["B2", "A3", "H3", "D4"])
def test_pi_down_is_max_sortable_below(name):
    sys = group(name)
    L = lattice_of(sys)
    for ctx in coxeter_elements(sys):
        sortable = [w for w in range(sys.order) if is_sortable(ctx, w)]
        table = projection_table(ctx)
        for w in range(sys.order):
            below = [x for x in sortable if L.leq(x, w)]
            top = [x for x in below if all(L.leq(y, x) for y in below)]
            assert top == [table.down[w]]


@pytest.mark.parametrize("name", ["B2", "A3", "B3"])
def test_pi_up_formula_matches_recursion(name):
    sys = group(name)
    for ctx in coxeter_elements(sys):
        table = projection_table(ctx)
        assert all(pi_up_recursive(ctx, w) == table.up[w] for w in range(sys.order))


def test_theta_examples():
    c = ctx_of("B2", (0, 1))
    theta = theta_congruence(c)
    assert len(theta) == 6
    assert theta.nontrivial_classes() == [tuple(sorted(el("B2", w) for w in [(1,), (1, 0), (1, 0, 1)]))]
    assert len(theta_congruence(ctx_of("A3", A3_C))) == 14
    a1 = theta_congruence(ctx_of("A1", (0,)))
    assert a1.classes == ((0,), (1,))


def test_cambrian_lattice_b2():
    lat = cambrian_lattice(ctx_of("B2", (0, 1)))
    words = [lat.context.system.reduced_word(w) for w in lat.elements]
    assert words == [(), (0,), (1,), (0, 1), (0, 1, 0), (0, 1, 0, 1)]
    # a hexagon: 1 < s0 < s0s1 < s0s1s0 < w0 and 1 < s1 < w0
    edges = {(words[a], words[b]) for a, b in lat.cover_pairs()}
    assert edges == {
        ((), (0,)),
        ((), (1,)),
        ((0,), (0, 1)),
        ((0, 1), (0, 1, 0)),
        ((0, 1, 0), (0, 1, 0, 1)),
        ((1,), (0, 1, 0, 1)),
    }
    assert cambrian_lattice(ctx_of("A1", (0,))).cover_pairs() == [(0, 1)]


def test_cambrian_lattice_a3_anti_isomorphism():
    c = ctx_of("A3", A3_C)
    lat = cambrian_lattice(c)
    dual = cambrian_lattice(c.inverse())
    L = lattice_of(c.system)
    assert lat.order == dual.order == 14
    # w -> w w0 sends the class tops (c-antisortables) onto the c^-1-sortables
    theta = theta_congruence(c)
    image = [L.times_w0(t) for t in theta.tops]
    assert sorted(image) == list(dual.elements)
    for a in range(len(theta)):
        for b in range(len(theta)):
            below = L.leq(theta.bottoms[a], theta.bottoms[b])
            assert below == L.leq(image[b], image[a])


def test_pi_down_requires_parabolic_membership():
    c = ctx_of("A3", A3_C).without(0)
    with pytest.raises(ValueError):
        pi_down(c, el("A3", (0,)))
