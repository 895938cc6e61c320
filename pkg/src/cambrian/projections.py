"""Projections onto c-sortable / c-antisortable elements and the congruence Θ_c."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .congruence import CongruencePartition, is_lattice_congruence, quotient_lattice
from .coxeter import CoxeterError
from .sortable import CoxeterElementContext, enumerate_sortables, is_sortable
from .weak_order import bits, lattice_of

__all__ = [
    "InternalInvariantViolation",
    "ProjectionTable",
    "CambrianLattice",
    "pi_down",
    "pi_up",
    "times_longest",
    "projection_table",
    "theta_congruence",
    "cambrian_lattice",
]


class InternalInvariantViolation(CoxeterError, AssertionError):
    """A computed object failed a property the theory guarantees: an implementation bug."""


def times_longest(ctx: CoxeterElementContext, w: int) -> int:
    """w · (w0)_J for w in W_J."""
    sys = ctx.system
    return sys.index_of[sys.parabolic_reflections(ctx.J) ^ sys.inversions[w]]


def pi_down(ctx: CoxeterElementContext, w: int, first_letter: int | None = None) -> int:
    """The largest c-sortable element weakly below w (w must lie in W_J of ``ctx``).

    Unwinds the initial-letter recursion iteratively: each step either peels
    an initial letter s off the left of w (rotating c to scs) or drops s from
    the parabolic subgroup (replacing w by w_⟨s⟩).  ``first_letter`` overrides
    the initial letter used at the first step.
    """
    sys = ctx.system
    if not ctx.contains(w):
        raise ValueError(f"element {w} is not in the parabolic subgroup of {ctx}")
    peeled = []
    s = first_letter
    while w != 0:
        if s is None:
            s = next(bits(ctx.initial_letters))
        elif not ctx.is_initial(s):
            raise ValueError(f"s{s} is not initial in {ctx}")
        if sys.inversions[w] >> s & 1:
            peeled.append(s)
            w = int(sys.left_mult[s, w])
            ctx = ctx.rotate(s)
        else:
            ctx = ctx.without(s)
            w = sys.parabolic_part(w, ctx.J)
        s = None
    result = 0
    for s in reversed(peeled):
        result = int(sys.left_mult[s, result])
    return result


def pi_up(ctx: CoxeterElementContext, w: int) -> int:
    """The smallest c-antisortable element weakly above w: (π↓^{c⁻¹}(w·w0)) · w0."""
    return times_longest(ctx, pi_down(ctx.inverse(), times_longest(ctx, w)))


@dataclass(frozen=True)
class ProjectionTable:
    context: CoxeterElementContext
    down: tuple[int, ...]
    up: tuple[int, ...]


def projection_table(ctx: CoxeterElementContext) -> ProjectionTable:
    if ctx.J != ctx.system.full_set():
        raise ValueError("projection tables are built for Coxeter elements of the whole group")
    cache = ctx.system.__dict__.setdefault("_projection_tables", {})
    table = cache.get(ctx.word)
    if table is None:
        N = ctx.system.order
        table = ProjectionTable(
            ctx,
            tuple(pi_down(ctx, w) for w in range(N)),
            tuple(pi_up(ctx, w) for w in range(N)),
        )
        cache[ctx.word] = table
    return table


def theta_congruence(ctx: CoxeterElementContext) -> CongruencePartition:
    """Θ_c: the fibers of π↓^c, checked to be the intervals [π↓, π↑] of a congruence."""
    L = lattice_of(ctx.system)
    table = projection_table(ctx)
    part = CongruencePartition.from_labels(L, table.down)
    for members, lo, hi in zip(part.classes, part.bottoms, part.tops):
        w = members[0]
        if lo != table.down[w] or hi != table.up[w]:
            raise InternalInvariantViolation(
                f"class of {w} is not [π↓, π↑] = [{table.down[w]}, {table.up[w]}]"
            )
        if any(table.up[x] != hi for x in members):
            raise InternalInvariantViolation(f"π↑ is not constant on the class of {w}")
    verdict = is_lattice_congruence(L, part)
    if not verdict:
        raise InternalInvariantViolation(f"fibers of π↓ are not a congruence: {verdict.violation}")
    if list(part.bottoms) != [w for w in range(L.order) if is_sortable(ctx, w)]:
        raise InternalInvariantViolation("class bottoms differ from the c-sortable elements")
    return part


class CambrianLattice:
    """The weak order restricted to c-sortable elements.

    Vertices are numbered by increasing element index; covers are recomputed
    inside the induced subposet.
    """

    def __init__(self, ctx: CoxeterElementContext):
        self.context = ctx
        L = lattice_of(ctx.system)
        self.weak_order = L
        self.elements: tuple[int, ...] = tuple(enumerate_sortables(ctx))
        self.order = len(self.elements)
        self.position = {w: i for i, w in enumerate(self.elements)}
        mask = sum(1 << w for w in self.elements)
        covers = []
        for i, x in enumerate(self.elements):
            above = L.upsets[x] & mask & ~(1 << x)
            for y in bits(above):
                between = L.upsets[x] & L.downsets[y] & mask & ~(1 << x) & ~(1 << y)
                if not between:
                    covers.append((i, self.position[y]))
        self.covers: tuple[tuple[int, int], ...] = tuple(sorted(covers))

    def leq(self, a: int, b: int) -> bool:
        return self.weak_order.leq(self.elements[a], self.elements[b])

    def join(self, a: int, b: int) -> int:
        return self.position[self.weak_order.join(self.elements[a], self.elements[b])]

    def meet(self, a: int, b: int) -> int:
        return self.position[self.weak_order.meet(self.elements[a], self.elements[b])]

    def cover_pairs(self):
        return list(self.covers)

    @cached_property
    def join_irreducibles(self) -> dict[int, int]:
        lower: dict[int, list[int]] = {}
        for a, b in self.covers:
            lower.setdefault(b, []).append(a)
        return {b: lo[0] for b, lo in lower.items() if len(lo) == 1}

    @property
    def bottom(self) -> int:
        return 0

    def certify(self) -> None:
        """Check the isomorphism with the quotient of the weak order by Θ_c."""
        theta = theta_congruence(self.context)
        quotient = quotient_lattice(self.weak_order, theta)
        if tuple(theta.bottoms) != self.elements:
            raise InternalInvariantViolation("quotient classes do not match the sortable elements")
        for a in range(self.order):
            for b in range(self.order):
                if quotient.leq(a, b) != self.leq(a, b):
                    raise InternalInvariantViolation(
                        f"quotient order differs from the induced order at ({a}, {b})"
                    )
        if sorted(quotient.cover_pairs()) != list(self.covers):
            raise InternalInvariantViolation("quotient covers differ from the induced covers")


def cambrian_lattice(ctx: CoxeterElementContext, certify: bool = True) -> CambrianLattice:
    lat = CambrianLattice(ctx)
    if certify:
        lat.certify()
    return lat
