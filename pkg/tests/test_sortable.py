import itertools

import pytest

from cambrian.coxeter import build_system, CoxeterMatrix
from cambrian.sortable import (
    NotACoxeterWord,
    SortingWord,
    c_sorting_word,
    coxeter_elements,
    enumerate_sortables,
    is_sortable,
    is_sortable_recursive,
    make_coxeter_element,
    parse_word,
)
from cambrian.weak_order import generator_subset

from conftest import ctx_of, el, group

# The 1-based A3 Coxeter element s2 s1 s3, in 0-based letters.
A3_C = (1, 0, 2)


def test_contexts():
    c = ctx_of("B2", (0, 1))
    assert c.initial_letters == 0b01 and c.final_letters == 0b10
    c = ctx_of("A3", A3_C)
    assert c.initial_letters == generator_subset(1)
    assert c.final_letters == generator_subset(0, 2)
    commuting = build_system(CoxeterMatrix.from_rows([[1, 2], [2, 1]]))
    c = make_coxeter_element(commuting, (0, 1))
    assert c.initial_letters == c.final_letters == 0b11


def test_rotate_and_restrict():
    assert ctx_of("B2", (0, 1)).rotate(0).word == (1, 0)
    c = ctx_of("A3", A3_C)
    assert c.rotate(1).word == (0, 2, 1)
    assert c.restrict(c.J) is c
    assert c.restrict(generator_subset(0, 2)).word == (0, 2)
    assert c.restrict(0).word == ()


def test_bad_coxeter_words():
    with pytest.raises(NotACoxeterWord):
        ctx_of("A3", (0, 1))
    with pytest.raises(NotACoxeterWord):
        ctx_of("A3", (0, 1, 1))


def test_sorting_word_examples():
    c = ctx_of("B2", (0, 1))
    B2 = c.system
    assert c_sorting_word(c, 0).blocks == ()
    assert c_sorting_word(c, B2.longest_index).render() == "s0 s1 | s0 s1"
    assert c_sorting_word(c, el("B2", (1, 0))).render() == "s1 | s0"
    a = ctx_of("A3", A3_C)
    assert c_sorting_word(a, el("A3", (0,))).blocks == ((0,),)


def test_sortable_examples():
    c = ctx_of("B2", (0, 1))
    assert is_sortable(c, 0)
    assert not is_sortable(c, el("B2", (1, 0)))
    assert is_sortable(c, el("B2", (0, 1, 0)))
    assert is_sortable_recursive(c, 0)
    assert not is_sortable_recursive(c, el("B2", (1, 0, 1)))
    assert enumerate_sortables(c) == sorted(el("B2", w) for w in [(), (0,), (1,), (0, 1), (0, 1, 0), (0, 1, 0, 1)])
    assert len(enumerate_sortables(ctx_of("A3", A3_C))) == 14
    assert enumerate_sortables(ctx_of("A1", (0,))) == [0, 1]


def _first_subword_blocks(sys, word, w):
    """Lexicographically first reduced subword of word^k for w, by brute force over positions."""
    L = sys.length(w)
    n = len(word)
    letters = word * max(L, 1)
    for positions in itertools.combinations(range(len(letters)), L):
        if sys.from_word(letters[p] for p in positions) == w:
            blocks = {}
            for p in positions:
                blocks.setdefault(p // n, []).append(letters[p])
            # an element may skip a whole copy of c only if it is the identity
            return tuple(tuple(blocks.get(k, ())) for k in range(max(blocks, default=-1) + 1))
    raise AssertionError("no subword found")


@pytest.mark.parametrize("name", ["B2", "A3", "I2(5)"])
def test_sorting_word_against_subword_search(name):
    sys = group(name)
    for ctx in coxeter_elements(sys):
        for w in range(sys.order):
            assert c_sorting_word(ctx, w).blocks == _first_subword_blocks(sys, ctx.word, w)


@pytest.mark.parametrize(
    "name, count",
    [("A1", 1), ("A2", 2), ("B2", 2), ("A3", 4), ("B3", 4), ("H3", 4), ("A4", 8), ("D4", 8), ("I2(7)", 2)],
)
def test_coxeter_element_count(name, count):
    sys = group(name)
    ctxs = coxeter_elements(sys)
    assert len(ctxs) == count
    # brute force: distinct products over all permutations of the generators
    products = {sys.from_word(p) for p in itertools.permutations(range(sys.rank))}
    assert {c.element for c in ctxs} == products


def test_sorting_word_views():
    sw = SortingWord(((0, 1), (0,)))
    assert sw.letters == (0, 1, 0)
    assert sw.divider_positions == (2,)
    assert sw.is_decreasing()
    assert sw.render(compact=True) == "01|0"
    assert not SortingWord(((1,), (0,))).is_decreasing()


@pytest.mark.parametrize(
    "text, word",
    [("s0,s1,s0", (0, 1, 0)), ("0,1", (0, 1)), ("s0 s1 | s0", (0, 1, 0)), ("01|0", (0, 1, 0)), ("", ()), ("e", ()), ("1", (1,))],
)
def test_parse_word(text, word):
    assert parse_word(text) == word


def test_parse_word_rejects_junk():
    with pytest.raises(ValueError):
        parse_word("s0,x1")
