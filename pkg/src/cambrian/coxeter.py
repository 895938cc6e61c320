"""Finite Coxeter groups built from a Coxeter matrix.

Elements are plain integer indices into the system's element table.  Index 0 is
the identity and indices follow shortlex order of the lexicographically smallest
reduced word, so element numbering is stable across runs.  Inversion sets are
stored as Python ints used as bitsets over the positive roots (equivalently,
over the reflections T); bit ``s`` for a generator index ``s`` is the simple
reflection ``s`` itself.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "CoxeterError",
    "BadMatrix",
    "RootClosureDiverged",
    "OrderCapExceeded",
    "InvalidLetter",
    "CoxeterMatrix",
    "CoxeterSystem",
    "Element",
    "build_system",
    "element_from_word",
    "apply_generator",
    "inversion_set",
    "reduced_word",
    "inverse",
    "longest_element",
    "popcount",
]

ROOT_TOL = 1e-8
INFINITY_SENTINELS = (0, -1, None, "inf", "infinity", "∞")


class CoxeterError(Exception):
    """Base class for errors raised while building or using a Coxeter system."""


class BadMatrix(CoxeterError):
    pass


class RootClosureDiverged(CoxeterError):
    pass


class OrderCapExceeded(CoxeterError):
    pass


class InvalidLetter(CoxeterError, ValueError):
    pass


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def _is_infinite(entry) -> bool:
    if isinstance(entry, str):
        return entry.strip().lower() in INFINITY_SENTINELS
    if isinstance(entry, float) and math.isinf(entry):
        return True
    return entry in INFINITY_SENTINELS


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of the orders m(s, t); diagonal ones, off-diagonal >= 2."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise BadMatrix("Coxeter matrix must have rank >= 1")
        rows = []
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise BadMatrix(f"row {i} has length {len(row)}, expected {n}")
            clean = []
            for j, m in enumerate(row):
                if _is_infinite(m):
                    raise BadMatrix(
                        f"entry ({i},{j}) is infinite; only finite Coxeter groups are supported"
                    )
                if isinstance(m, bool) or int(m) != m:
                    raise BadMatrix(f"entry ({i},{j}) = {m!r} is not an integer")
                clean.append(int(m))
            rows.append(tuple(clean))
        for i in range(n):
            if rows[i][i] != 1:
                raise BadMatrix(f"diagonal entry ({i},{i}) must be 1, got {rows[i][i]}")
            for j in range(n):
                if rows[i][j] != rows[j][i]:
                    raise BadMatrix(f"matrix is not symmetric at ({i},{j})")
                if i != j and rows[i][j] < 2:
                    raise BadMatrix(f"off-diagonal entry ({i},{j}) must be >= 2")
        object.__setattr__(self, "entries", tuple(rows))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def m(self, s: int, t: int) -> int:
        return self.entries[s][t]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "CoxeterMatrix":
        try:
            return cls(tuple(tuple(r) for r in rows))
        except TypeError as exc:
            raise BadMatrix(f"malformed matrix: {exc}") from None

    @classmethod
    def from_json(cls, data) -> "CoxeterMatrix":
        """Parse ``{"rank": n, "m": [[...], ...]}``."""
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        if not isinstance(data, dict) or "m" not in data:
            raise BadMatrix('matrix JSON must be an object with key "m"')
        matrix = cls.from_rows(data["m"])
        if "rank" in data and data["rank"] != matrix.rank:
            raise BadMatrix(f"declared rank {data['rank']} does not match matrix size {matrix.rank}")
        return matrix

    @classmethod
    def from_file(cls, path) -> "CoxeterMatrix":
        return cls.from_json(Path(path).read_text())

    def to_json(self) -> dict:
        return {"rank": self.rank, "m": [list(r) for r in self.entries]}

    def restrict(self, J: Sequence[int]) -> "CoxeterMatrix":
        """Matrix of the standard parabolic subgroup on the generators ``J`` (in order)."""
        return CoxeterMatrix(tuple(tuple(self.entries[a][b] for b in J) for a in J))


@dataclass(frozen=True)
class Element:
    """Read-only view of one group element."""

    index: int
    length: int
    inversions: int
    left_descents: int
    right_descents: int


def _bilinear_form(matrix: CoxeterMatrix) -> np.ndarray:
    n = matrix.rank
    B = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            B[i, j] = -math.cos(math.pi / matrix.m(i, j))
    return B


def _find_root(roots: list[np.ndarray], v: np.ndarray) -> int:
    for k, r in enumerate(roots):
        if np.all(np.abs(r - v) <= ROOT_TOL):
            return k
    return -1


def _positive_roots(matrix: CoxeterMatrix) -> np.ndarray:
    n = matrix.rank
    B = _bilinear_form(matrix)
    cap = 10 * n * n
    roots = [np.eye(n)[i] for i in range(n)]
    queue = deque(range(n))
    while queue:
        v = roots[queue.popleft()]
        for s in range(n):
            w = v - 2.0 * (v @ B[:, s]) * np.eye(n)[s]
            if np.all(w >= -ROOT_TOL):
                pass
            elif np.all(w <= ROOT_TOL):
                continue  # negative root; its positive partner is already v
            else:
                raise RootClosureDiverged(
                    "root of mixed sign encountered; the form is not of finite type"
                )
            w[np.abs(w) <= ROOT_TOL] = 0.0
            if _find_root(roots, w) < 0:
                roots.append(w)
                if len(roots) > cap:
                    raise RootClosureDiverged(
                        f"more than {cap} positive roots; the group is infinite or degenerate"
                    )
                queue.append(len(roots) - 1)
    return np.array(roots)


class CoxeterSystem:
    """A finite Coxeter system with its full element table.

    Built by :func:`build_system`; immutable afterwards.

    Attributes
    ----------
    matrix : CoxeterMatrix
    positive_roots : ndarray, shape (N, n)
        Root coordinates in the simple-root basis; rows 0..n-1 are the simple roots.
    root_action : ndarray, shape (|W|, N)
        Signed permutation of positive roots: ``root_action[w, i] = ±(j + 1)``
        when ``w(β_i) = ±β_j``.
    inversions : list[int]
        Inversion bitset of each element.
    lengths : ndarray
    right_mult, left_mult : ndarray, shape (n, |W|)
        ``right_mult[s, w]`` is the index of ``ws``; ``left_mult[s, w]`` of ``sw``.
    """

    def __init__(self, matrix, roots, inversions, right_mult, left_mult, parents, root_action):
        self.matrix: CoxeterMatrix = matrix
        self.rank: int = matrix.rank
        self.positive_roots: np.ndarray = roots
        self.inversions: list[int] = inversions
        self.lengths = np.array([popcount(b) for b in inversions], dtype=np.int64)
        self.right_mult: np.ndarray = right_mult
        self.left_mult: np.ndarray = left_mult
        self.root_action: np.ndarray = root_action
        self._parents = parents
        self.index_of: dict[int, int] = {b: i for i, b in enumerate(inversions)}
        self.order = len(inversions)
        self.num_reflections = len(roots)
        self.all_reflections = (1 << self.num_reflections) - 1
        self.identity = 0
        self.longest_index = self.index_of[self.all_reflections]
        self._root_support = [
            sum(1 << i for i in range(self.rank) if abs(r[i]) > ROOT_TOL) for r in roots
        ]
        self._parabolic_reflections: dict[int, int] = {}

    def __repr__(self):
        return f"CoxeterSystem(rank={self.rank}, order={self.order})"

    def __len__(self):
        return self.order

    @property
    def generators(self) -> range:
        return range(self.rank)

    def element(self, w: int) -> Element:
        return Element(
            index=w,
            length=int(self.lengths[w]),
            inversions=self.inversions[w],
            left_descents=self.left_descents(w),
            right_descents=self.right_descents(w),
        )

    def length(self, w: int) -> int:
        return int(self.lengths[w])

    def generator(self, s: int) -> int:
        self._check_letter(s)
        return int(self.right_mult[s, 0])

    def _check_letter(self, s) -> None:
        if not isinstance(s, (int, np.integer)) or not 0 <= s < self.rank:
            raise InvalidLetter(f"{s!r} is not a generator index in 0..{self.rank - 1}")

    def left_descents(self, w: int) -> int:
        return self.inversions[w] & ((1 << self.rank) - 1)

    def right_descents(self, w: int) -> int:
        lw = self.lengths[w]
        return sum(1 << s for s in range(self.rank) if self.lengths[self.right_mult[s, w]] < lw)

    def is_left_descent(self, s: int, w: int) -> bool:
        return bool(self.inversions[w] >> s & 1)

    def is_right_descent(self, s: int, w: int) -> bool:
        return self.lengths[self.right_mult[s, w]] < self.lengths[w]

    def reduced_word(self, w: int) -> tuple[int, ...]:
        word = []
        while w != 0:
            parent, s = self._parents[w]
            word.append(s)
            w = parent
        return tuple(reversed(word))

    def from_word(self, word: Iterable[int]) -> int:
        w = 0
        for s in word:
            self._check_letter(s)
            w = int(self.right_mult[s, w])
        return w

    def multiply(self, u: int, v: int) -> int:
        for s in self.reduced_word(v):
            u = int(self.right_mult[s, u])
        return u

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.zeros(self.order, dtype=np.int64)
        for w in range(1, self.order):
            parent, s = self._parents[w]
            inv[w] = self.left_mult[s, inv[parent]]
        return inv

    def inverse(self, w: int) -> int:
        return int(self.inverses[w])

    @cached_property
    def reflection_elements(self) -> list[int]:
        """Element index of the reflection for each positive root."""
        refl = [-1] * self.num_reflections
        for w in range(self.order):
            for s in range(self.rank):
                a = self.root_action[w, s]
                if a > 0 and refl[a - 1] < 0:
                    refl[a - 1] = self.multiply(int(self.right_mult[s, w]), self.inverse(w))
        return refl

    def reflection_index(self, t: int) -> int:
        """Root index of the reflection element ``t``; raises if ``t`` is not a reflection."""
        try:
            return self._reflection_lookup[t]
        except KeyError:
            raise ValueError(f"element {t} is not a reflection") from None

    @cached_property
    def _reflection_lookup(self) -> dict[int, int]:
        return {t: i for i, t in enumerate(self.reflection_elements)}

    def parabolic_reflections(self, J: int) -> int:
        """Bitset of reflections lying in W_J (roots supported on ``J``)."""
        cached = self._parabolic_reflections.get(J)
        if cached is None:
            cached = sum(1 << i for i, sup in enumerate(self._root_support) if sup & ~J == 0)
            self._parabolic_reflections[J] = cached
        return cached

    def in_parabolic(self, w: int, J: int) -> bool:
        return self.inversions[w] & ~self.parabolic_reflections(J) == 0

    def parabolic_part(self, w: int, J: int) -> int:
        """The factor w_J of the factorization w = w_J · (J-reduced remainder)."""
        return self.index_of[self.inversions[w] & self.parabolic_reflections(J)]

    def parabolic_longest(self, J: int) -> int:
        return self.index_of[self.parabolic_reflections(J)]

    def support(self, w: int) -> int:
        """Bitset of generators occurring in (any) reduced word of w."""
        sup = 0
        for i in range(self.num_reflections):
            if self.inversions[w] >> i & 1:
                sup |= self._root_support[i]
        return sup

    def full_set(self) -> int:
        return (1 << self.rank) - 1


def build_system(matrix: CoxeterMatrix, max_order: int = 20000) -> CoxeterSystem:
    """Enumerate a finite Coxeter group by breadth-first search.

    Raises RootClosureDiverged for infinite (or numerically degenerate) input and
    OrderCapExceeded when the group has more than ``max_order`` elements.
    """
    if not isinstance(matrix, CoxeterMatrix):
        matrix = CoxeterMatrix.from_rows(matrix)
    n = matrix.rank
    roots = _positive_roots(matrix)
    N = len(roots)
    B = _bilinear_form(matrix)

    # signed permutation of the positive roots for each simple reflection
    gen_perm = np.zeros((n, N), dtype=np.int64)
    for s in range(n):
        for i, r in enumerate(roots):
            v = r - 2.0 * (r @ B[:, s]) * np.eye(n)[s]
            j = _find_root(list(roots), v)
            if j >= 0:
                gen_perm[s, i] = j + 1
            else:
                j = _find_root(list(roots), -v)
                if j < 0:
                    raise RootClosureDiverged("root system is not closed under reflections")
                gen_perm[s, i] = -(j + 1)
    gen_idx = np.abs(gen_perm) - 1
    gen_sign = np.sign(gen_perm)

    identity_action = np.arange(1, N + 1, dtype=np.int64)
    inversions = [0]
    actions = [identity_action]
    parents: list[tuple[int, int] | None] = [None]
    index_of = {0: 0}
    right: list[list[int]] = [[] for _ in range(n)]
    w = 0
    while w < len(inversions):
        act = actions[w]
        for s in range(n):
            image = act[s]  # w(α_s) = ±β
            if image > 0:
                bits = inversions[w] | (1 << (image - 1))
            else:
                bits = inversions[w] & ~(1 << (-image - 1))
            v = index_of.get(bits)
            if v is None:
                v = len(inversions)
                if v >= max_order:
                    raise OrderCapExceeded(f"group order exceeds max_order={max_order}")
                index_of[bits] = v
                inversions.append(bits)
                actions.append(gen_sign[s] * act[gen_idx[s]])
                parents.append((w, s))
            right[s].append(v)
        w += 1

    order = len(inversions)
    right_mult = np.array(right, dtype=np.int64).reshape(n, order)
    left_mult = np.zeros((n, order), dtype=np.int64)
    for s in range(n):
        left_mult[s, 0] = right_mult[s, 0]
    for v in range(1, order):
        parent, t = parents[v]
        for s in range(n):
            left_mult[s, v] = right_mult[t, left_mult[s, parent]]
    return CoxeterSystem(
        matrix, roots, inversions, right_mult, left_mult, parents, np.array(actions)
    )


# Functional surface mirroring the method API.

def element_from_word(sys: CoxeterSystem, word: Iterable[int]) -> int:
    return sys.from_word(word)


def apply_generator(sys: CoxeterSystem, w: int, s: int, side: str = "right") -> int:
    sys._check_letter(s)
    if side == "right":
        return int(sys.right_mult[s, w])
    if side == "left":
        return int(sys.left_mult[s, w])
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def inversion_set(sys: CoxeterSystem, w: int) -> int:
    return sys.inversions[w]


def reduced_word(sys: CoxeterSystem, w: int) -> tuple[int, ...]:
    return sys.reduced_word(w)


def inverse(sys: CoxeterSystem, w: int) -> int:
    return sys.inverse(w)


def longest_element(sys: CoxeterSystem) -> int:
    return sys.longest_index
