"""Named finite Coxeter types, with 0-based generator numbering."""
from __future__ import annotations

import re
from fractions import Fraction
from math import prod
from pathlib import Path

from .coxeter import CoxeterError, CoxeterMatrix

__all__ = [
    "ParseError",
    "UnsupportedRank",
    "parse_group_spec",
    "named_matrix",
    "degrees",
    "group_order_formula",
    "catalan_formula",
]

_GRAMMAR = re.compile(r"^(?:([ABD])([0-9]+)|(H)([34])|(F)(4)|(E)([678])|I2\(([0-9]+)\))$")


class ParseError(CoxeterError, ValueError):
    pass


class UnsupportedRank(CoxeterError, ValueError):
    pass


def _path(n: int, labels: dict[tuple[int, int], int] | None = None) -> list[list[int]]:
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        m[i][i + 1] = m[i + 1][i] = 3
    for (i, j), v in (labels or {}).items():
        m[i][j] = m[j][i] = v
    return m


def _split(name: str) -> tuple[str, int]:
    match = _GRAMMAR.match(name.strip())
    if not match:
        raise ParseError(
            f"cannot parse group spec {name!r}; expected A<n>, B<n>, D<n>, H3, H4, F4, "
            "E6, E7, E8, I2(<m>) or --matrix <path>"
        )
    groups = [g for g in match.groups() if g is not None]
    if len(groups) == 1:
        return "I", int(groups[0])
    return groups[0], int(groups[1])


def named_matrix(name: str) -> CoxeterMatrix:
    kind, n = _split(name)
    if kind == "A":
        if n < 1:
            raise UnsupportedRank("A<n> needs n >= 1")
        rows = _path(n)
    elif kind == "B":
        if n < 2:
            raise UnsupportedRank("B<n> needs n >= 2")
        rows = _path(n, {(0, 1): 4})
    elif kind == "D":
        if n < 4:
            raise UnsupportedRank("D<n> needs n >= 4")
        rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for i, j in [(0, 2), (1, 2)] + [(k, k + 1) for k in range(2, n - 1)]:
            rows[i][j] = rows[j][i] = 3
    elif kind == "E":
        rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
        for i, j in [(0, 2), (1, 3)] + [(k, k + 1) for k in range(2, n - 1)]:
            rows[i][j] = rows[j][i] = 3
    elif kind == "F":
        rows = _path(4, {(1, 2): 4})
    elif kind == "H":
        rows = _path(n, {(0, 1): 5})
    else:
        if n < 3:
            raise UnsupportedRank("I2(m) needs m >= 3")
        rows = [[1, n], [n, 1]]
    return CoxeterMatrix.from_rows(rows)


def parse_group_spec(text: str | None = None, matrix_path=None) -> CoxeterMatrix:
    """A named type, or a JSON matrix file ``{"rank": n, "m": [[...]]}``."""
    if matrix_path is not None:
        return CoxeterMatrix.from_file(Path(matrix_path))
    if text is None:
        raise ParseError("no group given")
    return named_matrix(text)


_EXCEPTIONAL_DEGREES = {
    ("E", 6): [2, 5, 6, 8, 9, 12],
    ("E", 7): [2, 6, 8, 10, 12, 14, 18],
    ("E", 8): [2, 8, 12, 14, 18, 20, 24, 30],
    ("F", 4): [2, 6, 8, 12],
    ("H", 3): [2, 6, 10],
    ("H", 4): [2, 12, 20, 30],
}


def degrees(name: str) -> list[int]:
    """Degrees of the basic invariants of a named irreducible type."""
    kind, n = _split(name)
    named_matrix(name)  # rank validation
    if kind == "A":
        return list(range(2, n + 2))
    if kind == "B":
        return [2 * i for i in range(1, n + 1)]
    if kind == "D":
        return sorted([2 * i for i in range(1, n)] + [n])
    if kind == "I":
        return [2, n]
    return list(_EXCEPTIONAL_DEGREES[kind, n])


def group_order_formula(name: str) -> int:
    return prod(degrees(name))


def catalan_formula(name: str) -> int:
    """W-Catalan number: product of (d + h) / d over the degrees, h the largest degree."""
    ds = degrees(name)
    h = max(ds)
    value = prod(Fraction(d + h, d) for d in ds)
    assert value.denominator == 1
    return int(value)
