"""Integer normal matrices for the built-in arrangement families.

An arrangement is stored as an m x n integer matrix S whose column j is the
normal vector of the hyperplane {x : x . s_j = 0}; counting later reads the
columns modulo q.  This module builds the four reflection families in the
orthonormal basis

    A_m : e_i - e_j                      (1 <= i < j <= m)
    B_m : e_i, e_i - e_j, e_i + e_j
    C_m : 2 e_i, e_i - e_j, e_i + e_j
    D_m : e_i - e_j, e_i + e_j

and their diagonal deformations A_m(s) and D_m(s), obtained by prepending
the columns s_1 e_1, ..., s_t e_t subject to the divisibility chain
s_t | s_{t-1} | ... | s_1 (for type D additionally the parity split:
s_1, ..., s_r even and s_{r+1}, ..., s_t odd).

Column order is canonical: diagonal columns first in index order, then for
each pair i < j in lexicographic order the column e_i - e_j followed, where
the family has it, by e_i + e_j.  Counting results never depend on column
order; fixing one keeps text output byte-stable.

The module also owns the shared plain-text matrix format:

    line 1:        "<m> <n>"
    lines 2..m+1:  n space-separated integers (one matrix row each)

Blank lines and lines starting with '#' are ignored when parsing.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyArrangement, InvalidChain, InvalidParity

COXETER_FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major; column j is one hyperplane normal.

    Invariants enforced at construction: at least one row and one column,
    rectangular shape, integer entries, and no zero column (a zero normal
    would describe the degenerate hyperplane 0 = 0).
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(
            tuple(operator.index(v) for v in row) for row in self.entries
        )
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("matrix rows must all have the same length")
        for j in range(width):
            if all(row[j] == 0 for row in rows):
                raise ValueError(f"column {j + 1} is zero")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[int]]) -> "IntMatrix":
        cols = [tuple(c) for c in cols]
        if not cols:
            raise ValueError("need at least one column")
        return cls(tuple(zip(*cols)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def column(self, j: int) -> tuple[int, ...]:
        """Column at 0-based position j."""
        return tuple(row[j] for row in self.entries)

    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.entries))


@dataclass(frozen=True)
class DeformSpec:
    """Deformation data: ambient dimension m, diagonal tuple s, even-prefix r.

    The tuple s = (s_1, ..., s_t) must satisfy t <= m, s_i >= 1 and the
    divisibility chain s_t | ... | s_1.  r is the number of leading even
    entries and is only meaningful for type-D use; r=None means the parity
    split is not declared (type-A use).  When r is given, s_1, ..., s_r must
    be even and s_{r+1}, ..., s_t odd.
    """

    m: int
    s: tuple[int, ...] = ()
    r: int | None = None

    def __post_init__(self) -> None:
        m = operator.index(self.m)
        s = tuple(operator.index(v) for v in self.s)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "s", s)
        if m < 1:
            raise ValueError("dimension m must be >= 1")
        if len(s) > m:
            raise ValueError(f"tuple length t = {len(s)} exceeds m = {m}")
        if any(v < 1 for v in s):
            raise ValueError("diagonal entries must be positive")
        for a, b in zip(s, s[1:]):
            if a % b:
                raise InvalidChain(
                    f"divisibility chain broken: {b} does not divide {a}"
                )
        if self.r is not None:
            r = operator.index(self.r)
            object.__setattr__(self, "r", r)
            if r < 0 or r > len(s):
                raise ValueError(f"need 0 <= r <= t, got r = {r}")
            for i in range(r):
                if s[i] % 2:
                    raise InvalidParity(f"s_{i + 1} = {s[i]} must be even")
            for i in range(r, len(s)):
                if s[i] % 2 == 0:
                    raise InvalidParity(f"s_{i + 1} = {s[i]} must be odd")

    @property
    def t(self) -> int:
        return len(self.s)


def _diagonal_columns(m: int, values: Sequence[int]) -> list[tuple[int, ...]]:
    cols = []
    for i, v in enumerate(values):
        col = [0] * m
        col[i] = v
        cols.append(tuple(col))
    return cols


def _pair_columns(m: int, with_plus: bool) -> list[tuple[int, ...]]:
    cols = []
    for i in range(m):
        for j in range(i + 1, m):
            minus = [0] * m
            minus[i], minus[j] = 1, -1
            cols.append(tuple(minus))
            if with_plus:
                plus = [0] * m
                plus[i], plus[j] = 1, 1
                cols.append(tuple(plus))
    return cols


def gen_coxeter(family: str, m: int) -> IntMatrix:
    """Normal matrix of the reflection arrangement of the given family.

    Raises EmptyArrangement when the combination has no hyperplanes
    (A with m = 1, D with m = 1).
    """
    if family not in COXETER_FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of A B C D")
    m = operator.index(m)
    if m < 1:
        raise ValueError("dimension m must be >= 1")
    cols: list[tuple[int, ...]] = []
    if family == "B":
        cols += _diagonal_columns(m, [1] * m)
    elif family == "C":
        cols += _diagonal_columns(m, [2] * m)
    cols += _pair_columns(m, with_plus=family != "A")
    if not cols:
        raise EmptyArrangement(
            f"empty arrangement: {family}_{m} has no hyperplanes"
        )
    return IntMatrix.from_columns(cols)


def gen_deform_a(spec: DeformSpec) -> IntMatrix:
    """Normal matrix of A_m(s): columns s_i e_i, then the A_m pairs.

    The parity field r is ignored.  With t = 0 this is exactly
    gen_coxeter("A", m), including the empty-arrangement error for m = 1.
    """
    cols = _diagonal_columns(spec.m, spec.s)
    cols += _pair_columns(spec.m, with_plus=False)
    if not cols:
        raise EmptyArrangement(
            "empty arrangement: A_1 with t = 0 has no hyperplanes"
        )
    return IntMatrix.from_columns(cols)


def gen_deform_d(spec: DeformSpec) -> IntMatrix:
    """Normal matrix of D_m(s): columns s_i e_i, then the D_m pairs.

    Requires the parity split r to be declared on the spec and m >= 2 (the
    e_i +- e_j part of type D is empty below dimension 2).
    """
    if spec.r is None:
        raise InvalidParity(
            "type-D deformation needs the even-prefix length r"
        )
    if spec.m < 2:
        raise EmptyArrangement(
            "empty arrangement: type-D deformation needs m >= 2"
        )
    cols = _diagonal_columns(spec.m, spec.s)
    cols += _pair_columns(spec.m, with_plus=True)
    return IntMatrix.from_columns(cols)


def format_matrix(mat: IntMatrix) -> str:
    """Render a matrix in the shared plain-text format (trailing newline)."""
    lines = [f"{mat.rows} {mat.cols}"]
    for row in mat.entries:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> IntMatrix:
    """Parse the shared plain-text format; inverse of format_matrix.

    Raises ValueError for malformed input (bad header, wrong row count or
    width, non-integer tokens, zero columns).
    """
    lines = [
        line
        for line in (raw.strip() for raw in text.splitlines())
        if line and not line.startswith("#")
    ]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("header must be two integers: '<rows> <cols>'")
    try:
        m, n = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError("header must be two integers: '<rows> <cols>'") from None
    if m < 1 or n < 1:
        raise ValueError("matrix needs at least one row and one column")
    if len(lines) != m + 1:
        raise ValueError(f"expected {m} data rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        try:
            vals = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"non-integer entry in row: {line!r}") from None
        if len(vals) != n:
            raise ValueError(f"expected {n} entries per row, found {len(vals)}")
        rows.append(tuple(vals))
    return IntMatrix(tuple(rows))
