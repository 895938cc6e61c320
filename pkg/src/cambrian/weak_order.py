"""Right weak order on a finite Coxeter group.

``u <= v`` iff ``I(u) ⊆ I(v)``.  Element indices are sorted by length, which is a
linear extension of the order, so the join of ``x`` and ``y`` is the
lowest-index element of ``up(x) ∩ up(y)`` and the meet the highest-index element
of ``down(x) ∩ down(y)``.  Up- and down-sets are kept as Python-int bitsets over
element indices.

Generator subsets ``J`` are ints used as bitsets over S.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .coxeter import CoxeterSystem, popcount

__all__ = ["WeakOrderLattice", "build_lattice", "lattice_of", "generator_subset", "bits"]

TABLE_LIMIT = 2000


def generator_subset(*gens: int) -> int:
    J = 0
    for s in gens:
        J |= 1 << s
    return J


def bits(mask: int):
    """Yield the indices of set bits in increasing order."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


class WeakOrderLattice:
    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.order = system.order
        n, N = system.rank, system.order
        up: list[list[int]] = [[] for _ in range(N)]
        down: list[list[int]] = [[] for _ in range(N)]
        for w in range(N):
            lw = system.lengths[w]
            for s in range(n):
                v = int(system.right_mult[s, w])
                if system.lengths[v] > lw:
                    up[w].append(v)
                    down[v].append(w)
        self.covers_up: list[tuple[int, ...]] = [tuple(sorted(c)) for c in up]
        self.covers_down: list[tuple[int, ...]] = [tuple(sorted(c)) for c in down]

        upsets = [0] * N
        for w in reversed(range(N)):
            acc = 1 << w
            for v in self.covers_up[w]:
                acc |= upsets[v]
            upsets[w] = acc
        downsets = [0] * N
        for w in range(N):
            acc = 1 << w
            for v in self.covers_down[w]:
                acc |= downsets[v]
            downsets[w] = acc
        self.upsets = upsets
        self.downsets = downsets

    def __repr__(self):
        return f"WeakOrderLattice({self.system!r})"

    def __len__(self):
        return self.order

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.system.longest_index

    def leq(self, u: int, v: int) -> bool:
        iu = self.system.inversions[u]
        return iu & self.system.inversions[v] == iu

    def join(self, x: int, y: int) -> int:
        common = self.upsets[x] & self.upsets[y]
        return (common & -common).bit_length() - 1

    def meet(self, x: int, y: int) -> int:
        return (self.downsets[x] & self.downsets[y]).bit_length() - 1

    def join_all(self, elements) -> int:
        acc = self.bottom
        for x in elements:
            acc = self.join(acc, x)
        return acc

    def meet_all(self, elements) -> int:
        acc = self.top
        for x in elements:
            acc = self.meet(acc, x)
        return acc

    @cached_property
    def join_table(self) -> np.ndarray:
        return self._table(self.join)

    @cached_property
    def meet_table(self) -> np.ndarray:
        return self._table(self.meet)

    def _table(self, op) -> np.ndarray:
        N = self.order
        if N > TABLE_LIMIT:
            raise MemoryError(f"refusing to tabulate lattice operations for {N} elements")
        table = np.empty((N, N), dtype=np.int32)
        for x in range(N):
            table[x, x] = x
            for y in range(x + 1, N):
                table[x, y] = table[y, x] = op(x, y)
        return table

    def cover_pairs(self):
        """All cover relations (lo, hi), sorted."""
        return [(w, v) for w in range(self.order) for v in self.covers_up[w]]

    def interval(self, lo: int, hi: int) -> int:
        """Bitset of elements in [lo, hi] (empty if lo is not below hi)."""
        return self.upsets[lo] & self.downsets[hi]

    def times_w0(self, w: int) -> int:
        sys = self.system
        return sys.index_of[sys.all_reflections ^ sys.inversions[w]]

    def parabolic_factorization(self, w: int, J: int) -> tuple[int, int]:
        sys = self.system
        wJ = sys.parabolic_part(w, J)
        return wJ, sys.multiply(sys.inverse(wJ), w)

    def parabolic_projection(self, w: int, J: int) -> int:
        return self.system.parabolic_part(w, J)

    def cover_reflections(self, w: int) -> int:
        """cov(w) as a bitset over reflections (root indices)."""
        sys = self.system
        cov = 0
        for v in self.covers_down[w]:
            cov |= sys.inversions[w] ^ sys.inversions[v]
        return cov

    @cached_property
    def join_irreducibles(self) -> dict[int, int]:
        """Map each join-irreducible j to its unique lower cover j_*."""
        return {w: c[0] for w, c in enumerate(self.covers_down) if len(c) == 1}

    def degree(self, j: int) -> int:
        """Size of the smallest J with j in W_J: the letters of any reduced word."""
        return popcount(generator_subset(*self.system.reduced_word(j)))


def build_lattice(system: CoxeterSystem) -> WeakOrderLattice:
    return WeakOrderLattice(system)


def lattice_of(system: CoxeterSystem) -> WeakOrderLattice:
    """The (cached) weak-order lattice of ``system``."""
    L = system.__dict__.get("_lattice")
    if L is None:
        L = system.__dict__["_lattice"] = WeakOrderLattice(system)
    return L
