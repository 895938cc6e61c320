"""Coxeter elements, c-sorting words and c-sortable elements.

A Coxeter element is always carried as a word; the context also records the
parabolic subgroup W_J it lives in (J = the letters of the word), so restricting
``c`` to ``W_J`` simply drops letters.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Sequence

from .coxeter import CoxeterError, CoxeterSystem
from .weak_order import bits, generator_subset

__all__ = [
    "NotACoxeterWord",
    "NotInitial",
    "CoxeterElementContext",
    "SortingWord",
    "make_coxeter_element",
    "coxeter_elements",
    "c_sorting_word",
    "is_sortable",
    "is_sortable_recursive",
    "enumerate_sortables",
    "parse_word",
    "format_word",
]


class NotACoxeterWord(CoxeterError, ValueError):
    pass


class NotInitial(CoxeterError, ValueError):
    pass


@dataclass(frozen=True)
class CoxeterElementContext:
    system: CoxeterSystem = field(repr=False, compare=False)
    word: tuple[int, ...]

    @cached_property
    def J(self) -> int:
        return generator_subset(*self.word)

    @cached_property
    def key(self) -> tuple[int, tuple[int, ...]]:
        return self.J, self.word

    @cached_property
    def element(self) -> int:
        return self.system.from_word(self.word)

    def _commutes(self, s: int, t: int) -> bool:
        return self.system.matrix.m(s, t) == 2

    @cached_property
    def initial_letters(self) -> int:
        out = 0
        for i, s in enumerate(self.word):
            if all(self._commutes(s, a) for a in self.word[:i]):
                out |= 1 << s
        return out

    @cached_property
    def final_letters(self) -> int:
        out = 0
        for i, s in enumerate(self.word):
            if all(self._commutes(s, a) for a in self.word[i + 1:]):
                out |= 1 << s
        return out

    @cached_property
    def orientation(self) -> frozenset[tuple[int, int]]:
        """Directed diagram edges (s, t) meaning s -> t, i.e. s precedes t in c."""
        edges = set()
        for i, s in enumerate(self.word):
            for t in self.word[i + 1:]:
                if not self._commutes(s, t):
                    edges.add((s, t))
        return frozenset(edges)

    def is_initial(self, s: int) -> bool:
        return bool(self.initial_letters >> s & 1)

    def is_final(self, s: int) -> bool:
        return bool(self.final_letters >> s & 1)

    def rotate(self, s: int) -> "CoxeterElementContext":
        """The context of scs for an initial letter s."""
        if not self.is_initial(s):
            raise NotInitial(f"s{s} is not an initial letter of {format_word(self.word)}")
        return _context(self.system, tuple(a for a in self.word if a != s) + (s,))

    def rotate_final(self, s: int) -> "CoxeterElementContext":
        """The context of scs for a final letter s (s becomes initial)."""
        if not self.is_final(s):
            raise NotInitial(f"s{s} is not a final letter of {format_word(self.word)}")
        return _context(self.system, (s,) + tuple(a for a in self.word if a != s))

    def restrict(self, J: int) -> "CoxeterElementContext":
        return _context(self.system, tuple(a for a in self.word if J >> a & 1))

    def without(self, s: int) -> "CoxeterElementContext":
        return self.restrict(self.J & ~(1 << s))

    def inverse(self) -> "CoxeterElementContext":
        return _context(self.system, tuple(reversed(self.word)))

    @cached_property
    def longest(self) -> int:
        """(w0)_J, the top of W_J."""
        return self.system.parabolic_longest(self.J)

    def contains(self, w: int) -> bool:
        return self.system.in_parabolic(w, self.J)

    def __str__(self):
        return format_word(self.word)


def _context(system: CoxeterSystem, word: tuple[int, ...]) -> CoxeterElementContext:
    # interned per system: the recursions revisit the same (J, word) pairs constantly
    cache = system.__dict__.setdefault("_contexts", {})
    ctx = cache.get(word)
    if ctx is None:
        ctx = cache[word] = CoxeterElementContext(system, word)
    return ctx


def make_coxeter_element(system: CoxeterSystem, word: Sequence[int]) -> CoxeterElementContext:
    word = tuple(int(a) for a in word)
    if sorted(word) != list(range(system.rank)):
        raise NotACoxeterWord(
            f"{format_word(word)} must use each of s0..s{system.rank - 1} exactly once"
        )
    return _context(system, word)


def coxeter_elements(system: CoxeterSystem) -> list[CoxeterElementContext]:
    """One context per Coxeter element of W, via acyclic orientations of the diagram.

    Each orientation is linearized by always taking the lowest-index available
    source; results are deduplicated by group element and sorted by word.
    """
    n = system.rank
    m = system.matrix
    edges = [(s, t) for s in range(n) for t in range(s + 1, n) if m.m(s, t) > 2]
    seen = {}
    for flips in itertools.product((False, True), repeat=len(edges)):
        preds = {s: set() for s in range(n)}
        for (s, t), flip in zip(edges, flips):
            a, b = (t, s) if flip else (s, t)
            preds[b].add(a)
        word = []
        placed: set[int] = set()
        while len(word) < n:
            ready = [s for s in range(n) if s not in placed and preds[s] <= placed]
            if not ready:
                break  # cyclic orientation
            word.append(ready[0])
            placed.add(ready[0])
        if len(word) < n:
            continue
        ctx = make_coxeter_element(system, word)
        seen.setdefault(ctx.element, ctx)
    return sorted(seen.values(), key=lambda c: c.word)


@dataclass(frozen=True)
class SortingWord:
    blocks: tuple[tuple[int, ...], ...]

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(a for b in self.blocks for a in b)

    @property
    def divider_positions(self) -> tuple[int, ...]:
        """Offsets into ``letters`` where a divider falls (after each non-final block)."""
        out, pos = [], 0
        for b in self.blocks[:-1]:
            pos += len(b)
            out.append(pos)
        return tuple(out)

    @property
    def block_sets(self) -> tuple[int, ...]:
        return tuple(generator_subset(*b) for b in self.blocks)

    def is_decreasing(self) -> bool:
        sets = self.block_sets
        return all(nxt & ~cur == 0 for cur, nxt in zip(sets, sets[1:]))

    def render(self, compact: bool = False) -> str:
        if compact:
            return "|".join("".join(str(a) for a in b) for b in self.blocks)
        return " | ".join(" ".join(f"s{a}" for a in b) for b in self.blocks)

    def __str__(self):
        return self.render()


def c_sorting_word(ctx: CoxeterElementContext, w: int) -> SortingWord:
    """Greedy lexicographically-first reduced subword of c^∞ for w."""
    sys = ctx.system
    if not ctx.contains(w):
        raise ValueError(f"element {w} is not in the parabolic subgroup of {ctx}")
    blocks = []
    r = w
    while r != 0:
        block = []
        for a in ctx.word:
            if sys.inversions[r] >> a & 1:
                block.append(a)
                r = int(sys.left_mult[a, r])
        blocks.append(tuple(block))
    return SortingWord(tuple(blocks))


def is_sortable(ctx: CoxeterElementContext, w: int) -> bool:
    return c_sorting_word(ctx, w).is_decreasing()


def _lowest_initial(ctx: CoxeterElementContext, w: int) -> int:
    return next(bits(ctx.initial_letters))


def is_sortable_recursive(
    ctx: CoxeterElementContext,
    w: int,
    choose: Callable[[CoxeterElementContext, int], int] = _lowest_initial,
) -> bool:
    """Sortability via the initial-letter recursion.

    ``choose(ctx, w)`` picks the initial letter used at each step; the answer
    does not depend on it.
    """
    sys = ctx.system
    while True:
        if w == 0:
            return True
        if not ctx.word:
            return False
        s = choose(ctx, w)
        if sys.inversions[w] >> s & 1:
            w = int(sys.left_mult[s, w])
            ctx = ctx.rotate(s)
        else:
            ctx = ctx.without(s)
            if not ctx.contains(w):
                return False


def enumerate_sortables(ctx: CoxeterElementContext) -> list[int]:
    return [w for w in range(ctx.system.order) if ctx.contains(w) and is_sortable(ctx, w)]


def parse_word(text: str) -> tuple[int, ...]:
    """Parse "s0,s1,s0", "0,1,0", "s0 s1 | s0" or the compact "01|0"."""
    text = text.strip()
    if not text or text in ("∅", "e"):
        return ()
    if "," in text or "s" in text.lower():
        tokens = text.replace("|", " ").replace(",", " ").split()
    else:
        tokens = [ch for ch in text if not ch.isspace() and ch != "|"]
    out = []
    for tok in tokens:
        name = tok[1:] if tok[:1] in ("s", "S") else tok
        if not name.isdigit():
            raise ValueError(f"bad generator name {tok!r}")
        out.append(int(name))
    return tuple(out)


def format_word(word: Sequence[int], sep: str = "") -> str:
    return sep.join(f"s{a}" for a in word)
