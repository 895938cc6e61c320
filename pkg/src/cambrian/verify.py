"""Exhaustive property checks over one finite Coxeter group.

Every check returns a list of counterexamples (tuples of element indices, or
short descriptions); an empty list means the property holds.  ``verify_suite``
runs them all and collects a :class:`Report`.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .congruence import (
    cambrian_congruence,
    contracted_join_irreducibles,
    degree_two_congruence,
    forcing_poset,
    is_lattice_congruence,
)
from .coxeter import CoxeterSystem, build_system, popcount
from .groups import catalan_formula, group_order_formula
from .projections import (
    InternalInvariantViolation,
    pi_down,
    pi_up,
    projection_table,
    theta_congruence,
)
from .sortable import (
    CoxeterElementContext,
    c_sorting_word,
    coxeter_elements,
    enumerate_sortables,
    is_sortable,
    is_sortable_recursive,
    make_coxeter_element,
)
from .weak_order import bits, lattice_of

__all__ = [
    "PropertyResult",
    "Report",
    "verify_suite",
    "group_checks",
    "context_checks",
    "pi_up_recursive",
    "sortable_all_choices",
]

MAX_EXAMPLES = 5
EXHAUSTIVE_AXIOM_LIMIT = 60
RANDOM_TRIPLES = 10_000


@dataclass
class PropertyResult:
    name: str
    counterexamples: list = field(default_factory=list)
    cases: int = 0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  {self.name}"
        if not self.passed:
            text += f"  counterexamples: {self.counterexamples[:MAX_EXAMPLES]}"
        return text


@dataclass
class Report:
    group: str
    order: int
    contexts: list[str]
    results: list[PropertyResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        head = f"group {self.group}: |W| = {self.order}, Coxeter elements: {', '.join(self.contexts)}"
        tail = f"{sum(r.passed for r in self.results)}/{len(self.results)} properties passed"
        return [head] + [r.line() for r in self.results] + [tail]

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "order": self.order,
            "contexts": self.contexts,
            "passed": self.passed,
            "results": [
                {"name": r.name, "passed": r.passed, "counterexamples": [list(map(str, c)) if isinstance(c, tuple) else str(c) for c in r.counterexamples[:MAX_EXAMPLES]]}
                for r in self.results
            ],
        }


# ---------------------------------------------------------------- oracles


def pi_up_recursive(ctx: CoxeterElementContext, w: int) -> int:
    """π↑ through the final-letter recursion, independent of the w0 formula."""
    sys = ctx.system
    if not ctx.word:
        return 0
    s = next(bits(ctx.final_letters))
    if not sys.inversions[w] >> s & 1:
        return int(sys.left_mult[s, pi_up_recursive(ctx.rotate_final(s), int(sys.left_mult[s, w]))])
    sub = ctx.without(s)
    x = pi_up_recursive(sub, sys.parabolic_part(w, sub.J))
    return sys.multiply(x, _coset_of_longest(ctx, sub))


def _coset_of_longest(ctx: CoxeterElementContext, sub: CoxeterElementContext) -> int:
    """((w0)_K)^{-1} (w0)_J: the K-reduced factor of the longest element of W_J."""
    sys = ctx.system
    return sys.multiply(sys.inverse(sub.longest), ctx.longest)


def sortable_all_choices(ctx: CoxeterElementContext, w: int, memo: dict | None = None) -> set[bool]:
    """Outcomes of the recursive sortability test over every choice of initial letters."""
    if memo is None:
        memo = {}
    key = (ctx.word, w)
    if key in memo:
        return memo[key]
    sys = ctx.system
    if w == 0:
        out = {True}
    elif not ctx.word:
        out = {False}
    else:
        out = set()
        for s in bits(ctx.initial_letters):
            if sys.inversions[w] >> s & 1:
                out |= sortable_all_choices(ctx.rotate(s), int(sys.left_mult[s, w]), memo)
            else:
                sub = ctx.without(s)
                out |= sortable_all_choices(sub, w, memo) if sub.contains(w) else {False}
    memo[key] = out
    return out


# ---------------------------------------------------------------- group-level


def group_checks(system: CoxeterSystem) -> Iterable[tuple[str, Callable[[], list]]]:
    sys = system
    L = lattice_of(sys)
    N, n = sys.order, sys.rank
    w0 = sys.longest_index
    T = sys.all_reflections

    def length_parity():
        bad = []
        for w in range(N):
            for s in range(n):
                for v in (sys.left_mult[s, w], sys.right_mult[s, w]):
                    if abs(int(sys.lengths[v]) - int(sys.lengths[w])) != 1:
                        bad.append((w, s))
        return bad

    def inversion_injective():
        return [] if len(set(sys.inversions)) == N else ["duplicate inversion sets"]

    def reduced_words():
        bad = []
        for w in range(N):
            word = sys.reduced_word(w)
            if sys.from_word(word) != w or len(word) != sys.length(w):
                bad.append((w,))
        return bad

    def complement_w0():
        return [(w,) for w in range(N) if sys.inversions[sys.multiply(w, w0)] != T ^ sys.inversions[w]]

    def root_action():
        bad = []
        for w in range(N):
            winv = sys.inverse(w)
            for t in range(sys.num_reflections):
                if bool(sys.inversions[w] >> t & 1) != (sys.root_action[winv, t] < 0):
                    bad.append((w, t))
        return bad

    def leq_matches_hasse():
        bad = []
        for u in range(N):
            for v in range(N):
                if bool(L.upsets[u] >> v & 1) != L.leq(u, v):
                    bad.append((u, v))
        return bad

    def join_meet_bounds():
        # least upper bound / greatest lower bound by direct inversion-set scan
        if N > EXHAUSTIVE_AXIOM_LIMIT:
            pairs = _sample_pairs(N)
        else:
            pairs = itertools.product(range(N), repeat=2)
        bad = []
        for x, y in pairs:
            need = sys.inversions[x] | sys.inversions[y]
            upper = [u for u in range(N) if sys.inversions[u] & need == need]
            if L.join(x, y) != min(upper, key=lambda u: sys.lengths[u]) or not all(
                L.leq(L.join(x, y), u) for u in upper
            ):
                bad.append(("join", x, y))
            lower = [u for u in range(N) if L.leq(u, x) and L.leq(u, y)]
            if not all(L.leq(u, L.meet(x, y)) for u in lower) or L.meet(x, y) not in lower:
                bad.append(("meet", x, y))
        return bad

    def lattice_axioms():
        bad = []
        if N <= EXHAUSTIVE_AXIOM_LIMIT:
            triples = itertools.product(range(N), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(N), rng.randrange(N), rng.randrange(N)) for _ in range(RANDOM_TRIPLES))
        J, M = L.join, L.meet
        for x, y, z in triples:
            if J(x, J(y, z)) != J(J(x, y), z) or M(x, M(y, z)) != M(M(x, y), z):
                bad.append(("assoc", x, y, z))
            if J(x, y) != J(y, x) or M(x, y) != M(y, x) or J(x, x) != x:
                bad.append(("comm/idem", x, y))
            if J(x, M(x, y)) != x or M(x, J(x, y)) != x:
                bad.append(("absorb", x, y))
        return bad

    def parabolic_homomorphism():
        bad = []
        for s in range(n):
            K = sys.full_set() & ~(1 << s)
            p = [sys.parabolic_part(w, K) for w in range(N)]
            for x in range(N):
                for y in range(x, N):
                    if p[L.join(x, y)] != L.join(p[x], p[y]) or p[L.meet(x, y)] != L.meet(p[x], p[y]):
                        bad.append((s, x, y))
        return bad

    def parabolic_factorization():
        bad = []
        for s in range(n):
            K = sys.full_set() & ~(1 << s)
            TK = sys.parabolic_reflections(K)
            for w in range(N):
                wK, rest = L.parabolic_factorization(w, K)
                ok = (
                    sys.multiply(wK, rest) == w
                    and sys.in_parabolic(wK, K)
                    and all(not sys.is_left_descent(a, rest) for a in bits(K))
                    and sys.inversions[wK] == sys.inversions[w] & TK
                    and sys.parabolic_part(L.times_w0(w), K)
                    == sys.multiply(wK, sys.parabolic_longest(K))
                )
                if not ok:
                    bad.append((s, w))
        return bad

    def parabolic_lower_interval():
        bad = []
        for s in range(n):
            K = sys.full_set() & ~(1 << s)
            top = sys.parabolic_longest(K)
            members = [w for w in range(N) if sys.in_parabolic(w, K)]
            if members != [w for w in range(N) if L.leq(w, top)]:
                bad.append((s,))
        return bad

    def interval_shift():
        # w -> sw maps covers of [u, v] (u, v with left descent s) to covers
        bad = []
        for x, y in L.cover_pairs():
            for s in range(n):
                if sys.is_left_descent(s, x):
                    sx, sy = int(sys.left_mult[s, x]), int(sys.left_mult[s, y])
                    if sy not in L.covers_up[sx]:
                        bad.append((s, x, y))
        return bad

    def cover_reflection_count():
        bad = []
        for w in range(N):
            cov = L.cover_reflections(w)
            if popcount(cov) != popcount(sys.right_descents(w)):
                bad.append((w,))
            for t in bits(cov):
                tw = sys.multiply(sys.reflection_elements[t], w)
                if sys.inversions[w] ^ sys.inversions[tw] != 1 << t or sys.length(tw) != sys.length(w) - 1:
                    bad.append((w, t))
        return bad

    def join_irreducibles():
        return [
            (w,) for w in range(N)
            if (w in L.join_irreducibles) != (popcount(sys.right_descents(w)) == 1)
        ]

    def s_join_w():
        bad = []
        for w in range(N):
            cov = L.cover_reflections(w)
            for s in bits(cov & sys.full_set()):
                K = sys.full_set() & ~(1 << s)
                if cov & ~(1 << s) & ~sys.parabolic_reflections(K) == 0:
                    if w != L.join(sys.generator(s), sys.parabolic_part(w, K)):
                        bad.append((w, s))
        return bad

    def cov_w():
        bad = []
        for s in range(n):
            K = sys.full_set() & ~(1 << s)
            for x in range(N):
                if sys.in_parabolic(x, K):
                    if L.cover_reflections(L.join(sys.generator(s), x)) != L.cover_reflections(x) | 1 << s:
                        bad.append((s, x))
        return bad

    def times_w0_antiautomorphism():
        bad = []
        for w in range(N):
            if L.times_w0(L.times_w0(w)) != w:
                bad.append((w,))
        for x, y in L.cover_pairs():
            if L.times_w0(x) not in L.covers_up[L.times_w0(y)]:
                bad.append((x, y))
        return bad

    return [
        ("core: l(sw) = l(w) ± 1 on both sides", length_parity),
        ("core: inversion sets identify elements", inversion_injective),
        ("core: reduced words evaluate back with length l(w)", reduced_words),
        ("core: I(w w0) = T - I(w)", complement_w0),
        ("core: t in I(w) iff w^-1 sends the root of t negative", root_action),
        ("weak-order: leq agrees with Hasse reachability", leq_matches_hasse),
        ("weak-order: join/meet are least/greatest bounds", join_meet_bounds),
        ("weak-order: lattice axioms", lattice_axioms),
        ("weak-order: w -> w_<s> is a lattice homomorphism", parabolic_homomorphism),
        ("weak-order: parabolic factorization and (ww0)_J = w_J (w0)_J", parabolic_factorization),
        ("weak-order: W_<s> is the lower interval below (w0)_<s>", parabolic_lower_interval),
        ("weak-order: w -> sw is an interval isomorphism", interval_shift),
        ("weak-order: w -> w w0 is an antiautomorphism", times_w0_antiautomorphism),
        ("weak-order: cover reflections", cover_reflection_count),
        ("weak-order: join-irreducibles have one right descent", join_irreducibles),
        ("weak-order: s in cov(w), cov(w)-s in W_<s> => w = s v w_<s>", s_join_w),
        ("weak-order: cov(s v x) = cov(x) + s for x in W_<s>", cov_w),
    ]


def _sample_pairs(N: int, count: int = 2000):
    rng = random.Random(1)
    return [(rng.randrange(N), rng.randrange(N)) for _ in range(count)]


# ---------------------------------------------------------------- per Coxeter element


def _reduced_words_of(ctx: CoxeterElementContext) -> list[tuple[int, ...]]:
    sys = ctx.system
    return [p for p in itertools.permutations(ctx.word) if sys.from_word(p) == ctx.element]


def context_checks(ctx: CoxeterElementContext) -> Iterable[tuple[str, Callable[[], list]]]:
    sys = ctx.system
    L = lattice_of(sys)
    N, n = sys.order, sys.rank
    S = sys.full_set()
    sortable = [is_sortable(ctx, w) for w in range(N)]
    sortables = [w for w in range(N) if sortable[w]]

    def recursive_agrees():
        return [(w,) for w in range(N) if is_sortable_recursive(ctx, w) != sortable[w]]

    def recursive_letter_free():
        memo: dict = {}
        return [(w,) for w in range(N) if sortable_all_choices(ctx, w, memo) != {sortable[w]}]

    def sorting_word_invariant():
        bad = []
        words = _reduced_words_of(ctx)
        for word in words[1:]:
            other = make_coxeter_element(sys, word)
            for w in range(N):
                if c_sorting_word(other, w).block_sets != c_sorting_word(ctx, w).block_sets:
                    bad.append((word, w))
        return bad

    def sorting_word_reduced():
        bad = []
        for w in range(N):
            sw = c_sorting_word(ctx, w)
            if sys.from_word(sw.letters) != w or len(sw.letters) != sys.length(w):
                bad.append((w,))
        return bad

    def sort_para():
        bad = []
        for s in range(n):
            sub = ctx.without(s)
            for w in sortables:
                if not is_sortable(sub, sys.parabolic_part(w, sub.J)):
                    bad.append((s, w))
        return bad

    def sort_para_easy():
        bad = []
        for s in range(n):
            sub = ctx.without(s)
            for w in enumerate_sortables(sub):
                if not sortable[w]:
                    bad.append((s, w))
        return bad

    def nc_cov():
        seen: dict = {}
        bad = []
        for w in sortables:
            cov = L.cover_reflections(w)
            if cov in seen:
                bad.append((seen[cov], w))
            seen[cov] = w
        return bad

    def s_cov():
        bad = []
        for s in bits(ctx.initial_letters):
            sub = ctx.without(s)
            for x in enumerate_sortables(sub):
                w = L.join(sys.generator(s), x)
                if not sortable[w] or L.cover_reflections(w) != L.cover_reflections(x) | 1 << s:
                    bad.append((s, x))
        return bad

    def s_join_2():
        bad = []
        for s in bits(ctx.final_letters):
            K = S & ~(1 << s)
            for w in sortables:
                if sys.is_left_descent(s, w):
                    if w != L.join(sys.parabolic_part(w, K), sys.generator(s)):
                        bad.append((s, w))
        return bad

    def remark_bijection():
        bad = []
        for s in bits(ctx.initial_letters):
            K = S & ~(1 << s)
            rotated = ctx.rotate(s)
            A = [w for w in sortables if not sys.is_left_descent(s, w)]
            B = [x for x in enumerate_sortables(rotated) if sys.is_left_descent(s, x)]
            image = sorted(L.join(sys.generator(s), w) for w in A)
            if image != B:
                bad.append((s, "image"))
            for w in A:
                if sys.parabolic_part(L.join(sys.generator(s), w), K) != w:
                    bad.append((s, w))
            for x in B:
                if L.join(sys.generator(s), sys.parabolic_part(x, K)) != x:
                    bad.append((s, x))
        return bad

    table = projection_table(ctx)
    down, up = table.down, table.up
    sortable_mask = sum(1 << w for w in sortables)

    def pidown_fixed_points():
        return [(w,) for w in range(N) if (down[w] == w) != sortable[w]]

    def pidown_maximal():
        bad = []
        for w in range(N):
            below = sortable_mask & L.downsets[w]
            if not below >> down[w] & 1 or below & ~L.downsets[down[w]]:
                bad.append((w,))
        return bad

    def pidown_idempotent():
        return [(w,) for w in range(N) if down[down[w]] != down[w] or not L.leq(down[w], w)]

    def pidown_monotone():
        return [(x, y) for x, y in L.cover_pairs() if not L.leq(down[x], down[y])]

    def pidown_letter_free():
        bad = []
        for s in bits(ctx.initial_letters):
            for w in range(N):
                if pi_down(ctx, w, first_letter=s) != down[w]:
                    bad.append((s, w))
        return bad

    def piup_properties():
        bad = []
        anti = ctx.inverse()
        for w in range(N):
            if up[up[w]] != up[w] or not L.leq(w, up[w]):
                bad.append(("idem", w))
            if (up[w] == w) != is_sortable(anti, L.times_w0(w)):
                bad.append(("antisortable", w))
        bad += [("monotone", x, y) for x, y in L.cover_pairs() if not L.leq(up[x], up[y])]
        return bad

    def piup_recursion():
        return [(w,) for w in range(N) if pi_up_recursive(ctx, w) != up[w]]

    def sublattice():
        bad = []
        for i, x in enumerate(sortables):
            for y in sortables[i + 1:]:
                if not sortable[L.join(x, y)] or not sortable[L.meet(x, y)]:
                    bad.append((x, y))
        return bad

    def fibers_agree():
        bad = []
        for x in range(N):
            for y in range(x + 1, N):
                if (down[x] == down[y]) != (up[x] == up[y]):
                    bad.append((x, y))
        bad += [(w,) for w in range(N) if up[down[w]] != up[w] or down[up[w]] != down[w]]
        return bad

    def pidown_alt():
        bad = []
        for s in bits(ctx.final_letters):
            sub = ctx.without(s)
            for w in range(N):
                if sys.is_left_descent(s, w):
                    rhs = L.join(sys.generator(s), pi_down(sub, sys.parabolic_part(w, sub.J)))
                    if down[w] != rhs:
                        bad.append((s, w))
        return bad

    def piup_alt():
        bad = []
        for s in bits(ctx.initial_letters):
            sub = ctx.without(s)
            coset = _coset_of_longest(ctx, sub)
            sw0 = int(sys.left_mult[s, sys.longest_index])
            for w in range(N):
                if not sys.is_left_descent(s, w):
                    rhs = L.meet(sw0, sys.multiply(pi_up(sub, sys.parabolic_part(w, sub.J)), coset))
                    if up[w] != rhs:
                        bad.append((s, w))
        return bad

    def pidown_same():
        bad = []
        for s in bits(ctx.initial_letters):
            rotated = ctx.rotate(s)
            for y in range(N):
                if not sys.is_left_descent(s, y):
                    continue
                sy = int(sys.left_mult[s, y])
                for x in L.covers_down[y]:
                    if x == sy:
                        continue
                    sx = int(sys.left_mult[s, x])
                    lhs = down[x] == down[y]
                    rhs = pi_down(rotated, sx) == pi_down(rotated, sy)
                    if lhs != rhs:
                        bad.append((s, x, y))
        return bad

    theta_holder: dict = {}

    def theta_intervals():
        try:
            theta = theta_congruence(ctx)
        except InternalInvariantViolation as exc:
            return [str(exc)]
        theta_holder["theta"] = theta
        bad = []
        if list(theta.bottoms) != sortables:
            bad.append("bottoms != sortables")
        for members, lo, hi in zip(theta.classes, theta.bottoms, theta.tops):
            interval = [w for w in range(N) if L.leq(lo, w) and L.leq(w, hi)]
            if list(members) != interval or lo != down[members[0]] or hi != up[members[0]]:
                bad.append(tuple(members))
        verdict = is_lattice_congruence(L, theta)
        if not verdict:
            bad.append(verdict.violation)
        return bad

    def cambrian_equals_theta():
        theta = theta_holder.get("theta") or theta_congruence(ctx)
        camb = cambrian_congruence(ctx)
        if camb == theta:
            return []
        return [
            (w,) for w in range(N) if camb.bottom_of(w) != theta.bottom_of(w)
        ] or ["partitions differ"]

    def longest_anti_isomorphism():
        theta = theta_holder.get("theta") or theta_congruence(ctx)
        anti = theta_congruence(ctx.inverse())
        mapped = sorted(tuple(sorted(L.times_w0(w) for w in members)) for members in theta.classes)
        if mapped != sorted(anti.classes):
            return ["w -> w w0 does not carry classes onto classes"]
        return []

    def cong_cor_and_assertion():
        camb = cambrian_congruence(ctx)
        contracted = contracted_join_irreducibles(L, camb)
        bad = []
        for j in L.join_irreducibles:
            if sortable[j] == (j in contracted):
                bad.append(("sortable" if sortable[j] else "non-sortable", j))
        return bad

    def camb_para():
        camb = cambrian_congruence(ctx)
        contracted = contracted_join_irreducibles(L, camb)
        bad = []
        for s in bits(ctx.initial_letters):
            K = S & ~(1 << s)
            for j in L.join_irreducibles:
                if not sys.is_left_descent(s, j) and not sys.in_parabolic(j, K) and j not in contracted:
                    bad.append((s, j))
        return bad

    def camb_restrict():
        camb = cambrian_congruence(ctx)
        contracted = contracted_join_irreducibles(L, camb)
        bad = []
        for s in range(n):
            if n == 1:
                break
            gens = [a for a in range(n) if a != s]
            sub_sys = build_system(sys.matrix.restrict(gens))
            rename = {a: i for i, a in enumerate(gens)}
            sub_ctx = make_coxeter_element(sub_sys, [rename[a] for a in ctx.word if a != s])
            sub_L = lattice_of(sub_sys)
            sub_contracted = contracted_join_irreducibles(sub_L, cambrian_congruence(sub_ctx))
            K = S & ~(1 << s)
            for j in L.join_irreducibles:
                if sys.in_parabolic(j, K):
                    image = sub_sys.from_word(rename[a] for a in sys.reduced_word(j))
                    if image not in sub_L.join_irreducibles:
                        bad.append((s, j, "not JI in W_J"))
                    elif (j in contracted) != (image in sub_contracted):
                        bad.append((s, j))
        return bad

    def degree_two():
        if degree_two_congruence(ctx) != cambrian_congruence(ctx):
            return ["degree-2 congruence differs from the Cambrian congruence"]
        return []

    return [
        ("sortable: sorting word is a reduced word", sorting_word_reduced),
        ("sortable: block sets independent of the reduced word of c", sorting_word_invariant),
        ("sortable: recursive test agrees with sorting-word test", recursive_agrees),
        ("sortable: recursive test independent of initial-letter choices", recursive_letter_free),
        ("sortable: w c-sortable => w_<s> sortable for the restriction", sort_para),
        ("sortable: c'-sortable in W_<s> => c-sortable", sort_para_easy),
        ("sortable: cov determines c-sortables", nc_cov),
        ("sortable: s v x c-sortable with cov = cov(x) + s (s initial)", s_cov),
        ("sortable: s final, l(sw) < l(w) => w = w_<s> v s", s_join_2),
        ("sortable: w -> s v w bijection with inverse x -> x_<s>", remark_bijection),
        ("projections: fixed points of pi_down are the c-sortables", pidown_fixed_points),
        ("projections: pi_down(w) <= w, idempotent", pidown_idempotent),
        ("projections: pi_down(w) is the largest c-sortable below w", pidown_maximal),
        ("projections: pi_down is order-preserving", pidown_monotone),
        ("projections: pi_down independent of the initial letter", pidown_letter_free),
        ("projections: pi_up idempotent, increasing, monotone, fixes antisortables", piup_properties),
        ("projections: pi_up formula agrees with final-letter recursion", piup_recursion),
        ("projections: c-sortables form a sublattice", sublattice),
        ("projections: fibers of pi_down and pi_up coincide; compositions", fibers_agree),
        ("projections: s final => pi_down(w) = s v pi_down^{cs}(w_<s>)", pidown_alt),
        ("projections: s initial => pi_up(w) = s w0 ^ pi_up^{sc}(w_<s>) . (w0)^<s>", piup_alt),
        ("projections: cover-pair fibers transfer under left multiplication by s", pidown_same),
        ("theorem: Theta_c classes are [pi_down, pi_up] with sortable bottoms", theta_intervals),
        ("theorem: Theta_c equals the Cambrian congruence", cambrian_equals_theta),
        ("theorem: w -> w w0 maps Theta_c onto Theta_{c^-1}", longest_anti_isomorphism),
        ("congruence: Cambrian contracts exactly the non-sortable join-irreducibles", cong_cor_and_assertion),
        ("congruence: s initial, l(sj) > l(j), j not in W_<s> => contracted", camb_para),
        ("congruence: contraction agrees with the restricted Cambrian congruence", camb_restrict),
        ("congruence: generated by non-sortable degree-2 join-irreducibles", degree_two),
    ]


def _forcing_degree_check(system: CoxeterSystem) -> list:
    L = lattice_of(system)
    poset = forcing_poset(L)
    bad = []
    for a, (j2, _) in enumerate(poset.ji):
        for b, (j1, _) in enumerate(poset.ji):
            if poset.leq[a, b] and L.degree(j1) > L.degree(j2):
                bad.append((j2, j1))
    n = len(poset.ji)
    for a in range(n):
        for b in range(n):
            if a != b and poset.leq[a, b] and poset.leq[b, a]:
                bad.append(("not antisymmetric", poset.ji[a][0], poset.ji[b][0]))
    return bad


def verify_suite(
    system: CoxeterSystem,
    contexts: list[CoxeterElementContext] | None = None,
    name: str | None = None,
    forcing: bool = True,
) -> Report:
    """Run every exhaustive property for ``system`` and the given Coxeter elements.

    With ``contexts=None`` all Coxeter elements are checked.  ``name`` (a named
    type) enables the order and W-Catalan formula checks.
    """
    if contexts is None:
        contexts = coxeter_elements(system)
    results: list[PropertyResult] = []

    for label, check in group_checks(system):
        results.append(PropertyResult(label, list(check()), 1))

    merged: dict[str, PropertyResult] = {}
    for ctx in contexts:
        for label, check in context_checks(ctx):
            res = merged.setdefault(label, PropertyResult(label))
            res.cases += 1
            res.counterexamples += [(str(ctx),) + (c if isinstance(c, tuple) else (c,)) for c in check()]
    results += merged.values()

    counts = {str(ctx): len(enumerate_sortables(ctx)) for ctx in contexts}
    res = PropertyResult("sortable: count independent of c", [], len(contexts))
    if len(set(counts.values())) > 1:
        res.counterexamples.append(tuple(sorted(counts.items())))
    results.append(res)

    if forcing:
        results.append(
            PropertyResult("congruence: forcing order antisymmetric, degree-monotone", _forcing_degree_check(system), 1)
        )

    if name is not None:
        expected_order = group_order_formula(name)
        results.append(
            PropertyResult(
                f"group order equals product of degrees ({expected_order})",
                [] if system.order == expected_order else [(system.order,)],
                1,
            )
        )
        cat = catalan_formula(name)
        results.append(
            PropertyResult(
                f"c-sortable count equals W-Catalan number ({cat})",
                [(c, k) for c, k in counts.items() if k != cat],
                len(contexts),
            )
        )

    return Report(name or f"rank-{system.rank} matrix", system.order, [str(c) for c in contexts], results)

