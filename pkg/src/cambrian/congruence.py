"""Congruences of a finite lattice, specialised to the weak order.

The engine only needs a lattice object exposing ``order``, ``join``, ``meet``,
``leq``, ``cover_pairs()`` and ``join_irreducibles``; :class:`WeakOrderLattice`
provides all of these (plus ``join_table``/``meet_table`` for fast closure).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .coxeter import CoxeterError
from .sortable import CoxeterElementContext, is_sortable
from .weak_order import bits, lattice_of

__all__ = [
    "NotJoinIrreducible",
    "NotACongruence",
    "CongruencePartition",
    "Verdict",
    "ForcingPoset",
    "QuotientLattice",
    "smallest_congruence",
    "is_lattice_congruence",
    "cg",
    "contracted_join_irreducibles",
    "forcing_leq",
    "forcing_poset",
    "cambrian_pairs",
    "cambrian_congruence",
    "degree_two_congruence",
    "partition_from_contracted",
    "quotient_lattice",
]


class NotJoinIrreducible(CoxeterError, ValueError):
    pass


class NotACongruence(CoxeterError, ValueError):
    pass


@dataclass(frozen=True)
class CongruencePartition:
    """A partition of the lattice elements; classes ordered by their least index.

    ``bottoms[k]``/``tops[k]`` are the meet/join of class ``k``; for a genuine
    congruence these are its minimum and maximum.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    bottoms: tuple[int, ...]
    tops: tuple[int, ...]

    @classmethod
    def from_labels(cls, lattice, labels: Sequence) -> "CongruencePartition":
        groups: dict = {}
        for w, lab in enumerate(labels):
            groups.setdefault(lab, []).append(w)
        classes = sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])
        class_of = [0] * len(labels)
        for k, members in enumerate(classes):
            for w in members:
                class_of[w] = k
        bottoms = tuple(_fold(lattice.meet, members) for members in classes)
        tops = tuple(_fold(lattice.join, members) for members in classes)
        return cls(tuple(class_of), tuple(classes), bottoms, tops)

    @classmethod
    def identity(cls, lattice) -> "CongruencePartition":
        return cls.from_labels(lattice, range(lattice.order))

    def __len__(self):
        return len(self.classes)

    def equivalent(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def bottom_of(self, w: int) -> int:
        return self.bottoms[self.class_of[w]]

    def top_of(self, w: int) -> int:
        return self.tops[self.class_of[w]]

    def refines(self, other: "CongruencePartition") -> bool:
        """True if every class of ``self`` lies inside a class of ``other``."""
        return all(
            len({other.class_of[w] for w in members}) == 1 for members in self.classes
        )

    def nontrivial_classes(self) -> list[tuple[int, ...]]:
        return [c for c in self.classes if len(c) > 1]

    def to_json(self) -> dict:
        return {
            "classes": [list(c) for c in self.classes],
            "bottoms": list(self.bottoms),
            "tops": list(self.tops),
        }


def _fold(op, items):
    it = iter(items)
    acc = next(it)
    for x in it:
        acc = op(acc, x)
    return acc


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violation: str | None = None

    def __bool__(self):
        return self.ok


def smallest_congruence(lattice, pairs: Iterable[tuple[int, int]]) -> CongruencePartition:
    """Finest congruence identifying each pair, by union-find closure.

    Every pair that actually merges two classes is translated by all z
    (joins and meets); the equivalence generated by those merges is then closed
    under both operations.
    """
    N = lattice.order
    ds = DisjointSet(range(N))
    queue = deque((int(a), int(b)) for a, b in pairs)
    try:
        jt, mt = lattice.join_table, lattice.meet_table
    except (AttributeError, MemoryError):
        jt = mt = None
    everything = range(N)
    while queue:
        a, b = queue.popleft()
        if not ds.merge(a, b):
            continue
        if jt is not None:
            for ra, rb in ((jt[a], jt[b]), (mt[a], mt[b])):
                differ = np.flatnonzero(ra != rb)
                queue.extend(zip(ra[differ].tolist(), rb[differ].tolist()))
        else:
            for z in everything:
                queue.append((lattice.join(a, z), lattice.join(b, z)))
                queue.append((lattice.meet(a, z), lattice.meet(b, z)))
    return CongruencePartition.from_labels(lattice, [ds[w] for w in range(N)])


def is_lattice_congruence(lattice, partition: CongruencePartition) -> Verdict:
    """Order-theoretic congruence test: interval classes, monotone bottom and top maps."""
    if len(partition.class_of) != lattice.order:
        return Verdict(False, "partition does not cover the lattice")
    for k, members in enumerate(partition.classes):
        lo, hi = partition.bottoms[k], partition.tops[k]
        interval = [w for w in range(lattice.order) if lattice.leq(lo, w) and lattice.leq(w, hi)]
        if sorted(members) != interval:
            return Verdict(False, f"(i) class {k} {list(members)} is not an interval")
    for x, y in lattice.cover_pairs():
        if not lattice.leq(partition.bottom_of(x), partition.bottom_of(y)):
            return Verdict(False, f"(ii) bottom projection not order-preserving on {x} < {y}")
        if not lattice.leq(partition.top_of(x), partition.top_of(y)):
            return Verdict(False, f"(iii) top projection not order-preserving on {x} < {y}")
    return Verdict(True)


def _cg_cache(lattice) -> dict:
    return lattice.__dict__.setdefault("_cg_cache", {})


def cg(lattice, j: int) -> CongruencePartition:
    """Cg(j): the smallest congruence contracting j_* ⋖ j."""
    lower = lattice.join_irreducibles.get(j)
    if lower is None:
        raise NotJoinIrreducible(f"element {j} is not join-irreducible")
    cache = _cg_cache(lattice)
    if j not in cache:
        cache[j] = smallest_congruence(lattice, [(lower, j)])
    return cache[j]


def contracted_join_irreducibles(lattice, partition: CongruencePartition) -> frozenset[int]:
    return frozenset(
        j for j, lower in lattice.join_irreducibles.items() if partition.equivalent(j, lower)
    )


def forcing_leq(lattice, j2: int, j1: int) -> bool:
    """j2 <=Con j1: every congruence contracting j1 also contracts j2."""
    if j2 not in lattice.join_irreducibles:
        raise NotJoinIrreducible(f"element {j2} is not join-irreducible")
    part = cg(lattice, j1)
    return part.equivalent(j2, lattice.join_irreducibles[j2])


@dataclass(frozen=True)
class ForcingPoset:
    """Join-irreducibles under <=Con; ``leq[a][b]`` means ``ji[a] <=Con ji[b]``."""

    ji: tuple[tuple[int, int], ...]
    leq: np.ndarray

    def index(self, j: int) -> int:
        return [x for x, _ in self.ji].index(j)

    def order_ideals(self):
        """Yield every order ideal as a frozenset of join-irreducible elements."""
        n = len(self.ji)
        below = [sum(1 << a for a in range(n) if self.leq[a, b] and a != b) for b in range(n)]
        # fewer strict predecessors first: a linear extension when <=Con is antisymmetric
        order = sorted(range(n), key=lambda b: bin(below[b]).count("1"))

        def extend(pos: int, chosen: int):
            if pos == n:
                yield frozenset(self.ji[a][0] for a in bits(chosen))
                return
            b = order[pos]
            yield from extend(pos + 1, chosen)
            if below[b] & ~chosen == 0:
                yield from extend(pos + 1, chosen | 1 << b)

        yield from extend(0, 0)

    def to_json(self) -> dict:
        return {
            "ji": [{"element": j, "lower_cover": lo} for j, lo in self.ji],
            "leq": [[bool(x) for x in row] for row in self.leq],
        }


def forcing_poset(lattice) -> ForcingPoset:
    ji = tuple(sorted(lattice.join_irreducibles.items()))
    n = len(ji)
    leq = np.zeros((n, n), dtype=bool)
    for b, (j1, _) in enumerate(ji):
        part = cg(lattice, j1)
        for a, (j2, lower) in enumerate(ji):
            leq[a, b] = part.equivalent(j2, lower)
    return ForcingPoset(ji, leq)


def _alternating_word(s: int, t: int, length: int) -> list[int]:
    return [t if i % 2 == 0 else s for i in range(length)]


def cambrian_pairs(ctx: CoxeterElementContext) -> list[tuple[int, int]]:
    """Generating pairs (t, tsts… of length m(s,t)-1) for each oriented edge s -> t."""
    sys = ctx.system
    pairs = []
    for s, t in sorted(ctx.orientation):
        m = sys.matrix.m(s, t)
        pairs.append((sys.generator(t), sys.from_word(_alternating_word(s, t, m - 1))))
    return pairs


def cambrian_congruence(ctx: CoxeterElementContext) -> CongruencePartition:
    return smallest_congruence(lattice_of(ctx.system), cambrian_pairs(ctx))


def degree_two_congruence(ctx: CoxeterElementContext) -> CongruencePartition:
    """Smallest congruence contracting every non-c-sortable join-irreducible of degree 2."""
    L = lattice_of(ctx.system)
    pairs = [
        (lower, j)
        for j, lower in sorted(L.join_irreducibles.items())
        if L.degree(j) == 2 and not is_sortable(ctx, j)
    ]
    return smallest_congruence(L, pairs)


def partition_from_contracted(lattice, contracted: Iterable[int]) -> CongruencePartition:
    """Candidate partition determined by a set of contracted join-irreducibles.

    Each element y is sent to the join of the uncontracted join-irreducibles
    below it (the would-be bottom of its class).  Independent of the closure
    algorithm; the result is a congruence exactly when ``contracted`` is an
    order ideal of the forcing order.
    """
    contracted = set(contracted)
    keep = [j for j in lattice.join_irreducibles if j not in contracted]
    labels = []
    for y in range(lattice.order):
        acc = lattice.bottom
        for j in keep:
            if lattice.leq(j, y):
                acc = lattice.join(acc, j)
        labels.append(acc)
    return CongruencePartition.from_labels(lattice, labels)


class QuotientLattice:
    """L / Θ on class ids (ordered by bottom element index)."""

    def __init__(self, lattice, partition: CongruencePartition):
        verdict = is_lattice_congruence(lattice, partition)
        if not verdict:
            raise NotACongruence(verdict.violation)
        self.lattice = lattice
        self.partition = partition
        self.order = len(partition)
        self.bottoms = partition.bottoms
        k = self.order
        self._join = [[0] * k for _ in range(k)]
        self._meet = [[0] * k for _ in range(k)]
        for a in range(k):
            for b in range(k):
                x, y = self.bottoms[a], self.bottoms[b]
                self._join[a][b] = partition.class_of[lattice.join(x, y)]
                self._meet[a][b] = partition.class_of[lattice.meet(x, y)]
        self.covers_up = [
            tuple(
                b for b in range(k)
                if b != a and self.leq(a, b)
                and not any(c not in (a, b) and self.leq(a, c) and self.leq(c, b) for c in range(k))
            )
            for a in range(k)
        ]

    def join(self, a: int, b: int) -> int:
        return self._join[a][b]

    def meet(self, a: int, b: int) -> int:
        return self._meet[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self._join[a][b] == b

    def cover_pairs(self):
        return [(a, b) for a in range(self.order) for b in self.covers_up[a]]

    def matches_bottom_subposet(self) -> bool:
        """Quotient order agrees with the weak order restricted to class bottoms."""
        L = self.lattice
        return all(
            self.leq(a, b) == L.leq(self.bottoms[a], self.bottoms[b])
            for a in range(self.order)
            for b in range(self.order)
        )


def quotient_lattice(lattice, partition: CongruencePartition) -> QuotientLattice:
    return QuotientLattice(lattice, partition)
