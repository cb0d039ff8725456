"""Exact integer linear algebra: elementary divisors and lcm periods.

All arithmetic uses Python integers, so nothing here overflows or rounds.
Elementary divisors are computed by gcd-driven row and column elimination
(smallest-absolute-value pivot), which keeps intermediate entries small,
followed by a pairwise gcd/lcm pass that restores the divisibility chain;
diag(a, b) and diag(gcd(a, b), lcm(a, b)) are equivalent under unimodular
operations, so that pass preserves the divisor multiset.

The lcm period of a normal matrix S is

    rho_S = lcm over all nonempty column subsets J of e_{J, l(J)},

the last elementary divisor of each column submatrix.  Full enumeration
walks the subset tree depth-first and prunes every subtree rooted at a
subset whose rank already equals rank(S) with all divisors 1: determinantal
divisors of a submatrix divide those of any supermatrix, so every superset
in such a subtree also has all divisors 1 and contributes nothing.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .arrangements import DeformSpec, IntMatrix
from .errors import IndexOutOfRange, InvalidParity, TooManyColumns

# 2^24 subsets is the largest full enumeration accepted without an explicit cap.
FULL_ENUMERATION_LIMIT = 24


@dataclass(frozen=True)
class ElementaryDivisors:
    """Positive elementary divisors e_1 | e_2 | ... | e_rank of a matrix."""

    divisors: tuple[int, ...]

    def __post_init__(self) -> None:
        divs = tuple(operator.index(v) for v in self.divisors)
        object.__setattr__(self, "divisors", divs)
        if any(v < 1 for v in divs):
            raise ValueError("elementary divisors must be positive")
        for a, b in zip(divs, divs[1:]):
            if b % a:
                raise ValueError("elementary divisors must form a chain")

    @property
    def rank(self) -> int:
        return len(self.divisors)


class PeriodResult(NamedTuple):
    """lcm-period value; exact=False marks a capped run (lower bound only)."""

    value: int
    exact: bool


def _diagonalize(rows: list[list[int]]) -> list[int]:
    """Reduce to an equivalent diagonal in place; return the nonzero diagonal.

    The diagonal entries are positive but not yet chained.
    """
    m, n = len(rows), len(rows[0])
    stop = min(m, n)
    diag: list[int] = []
    p = 0
    while p < stop:
        # Smallest nonzero absolute value in the active block becomes pivot.
        best, bi, bj = 0, -1, -1
        for i in range(p, m):
            row = rows[i]
            for j in range(p, n):
                v = row[j]
                if v:
                    if v < 0:
                        v = -v
                    if best == 0 or v < best:
                        best, bi, bj = v, i, j
                        if v == 1:
                            break
            if best == 1:
                break
        if bi < 0:
            break
        if bi != p:
            rows[p], rows[bi] = rows[bi], rows[p]
        if bj != p:
            for row in rows:
                row[p], row[bj] = row[bj], row[p]
        if rows[p][p] < 0:
            rp = rows[p]
            for j in range(p, n):
                rp[j] = -rp[j]
        while True:
            restart = False
            rp = rows[p]
            a = rp[p]
            for i in range(p + 1, m):
                ri = rows[i]
                v = ri[p]
                if not v:
                    continue
                k = v // a
                if k:
                    for j in range(p, n):
                        ri[j] -= k * rp[j]
                if ri[p]:
                    # 0 < remainder < a: promote it to the pivot and redo.
                    rows[p], rows[i] = ri, rp
                    restart = True
                    break
            if restart:
                continue
            rp = rows[p]
            a = rp[p]
            for j in range(p + 1, n):
                w = rp[j]
                if not w:
                    continue
                k = w // a
                if k:
                    for ri in rows:
                        ri[j] -= k * ri[p]
                if rp[j]:
                    for ri in rows:
                        ri[p], ri[j] = ri[j], ri[p]
                    restart = True
                    break
            if restart:
                continue
            break
        diag.append(rows[p][p])
        p += 1
    return diag


def _chain_fix(diag: Iterable[int]) -> list[int]:
    """Turn a positive diagonal into the chained elementary divisors.

    Each pairwise replacement (a, b) -> (gcd, lcm) preserves equivalence;
    once every entry divides all later ones the list is the divisor chain.
    """
    d = sorted(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            if d[j] % d[i]:
                g = math.gcd(d[i], d[j])
                d[i], d[j] = g, d[i] // g * d[j]
    return d


def _divisors_of_columns(cols: Sequence[Sequence[int]], m: int) -> list[int]:
    rows = [[col[i] for col in cols] for i in range(m)]
    return _chain_fix(_diagonalize(rows))


def smith_divisors(mat: IntMatrix) -> ElementaryDivisors:
    """Elementary divisors e_1 | ... | e_rank of an integer matrix."""
    rows = [list(row) for row in mat.entries]
    return ElementaryDivisors(tuple(_chain_fix(_diagonalize(rows))))


def column_submatrix(mat: IntMatrix, indices: Iterable[int]) -> IntMatrix:
    """Submatrix of the 1-based columns J, in increasing index order.

    Raises IndexOutOfRange when an index falls outside 1..n and ValueError
    for an empty index set.
    """
    J = sorted({operator.index(j) for j in indices})
    if not J:
        raise ValueError("column index set must be nonempty")
    if J[0] < 1 or J[-1] > mat.cols:
        raise IndexOutOfRange(
            f"column indices must lie in 1..{mat.cols}, got {J[0] if J[0] < 1 else J[-1]}"
        )
    return IntMatrix(tuple(tuple(row[j - 1] for j in J) for row in mat.entries))


@lru_cache(maxsize=64)
def _exact_lcm_period(mat: IntMatrix) -> int:
    cols = mat.columns()
    m, n = mat.rows, mat.cols
    full_rank = len(_divisors_of_columns(cols, m))
    acc = 1

    def extend(chosen: tuple[tuple[int, ...], ...], start: int) -> None:
        nonlocal acc
        for j in range(start, n):
            sub = chosen + (cols[j],)
            divs = _divisors_of_columns(sub, m)
            last = divs[-1]
            if last > 1 and acc % last:
                acc = math.lcm(acc, last)
            # Supersets of a full-rank subset with unit divisors also have
            # unit divisors; skip the whole subtree.
            if len(divs) < full_rank or last > 1:
                extend(sub, j + 1)

    extend((), 0)
    return acc


def lcm_period(mat: IntMatrix, max_subset_size: int | None = None) -> PeriodResult:
    """lcm of the last elementary divisor over column subsets of the matrix.

    Without a cap this enumerates all nonempty subsets and is exact; it
    refuses matrices with more than FULL_ENUMERATION_LIMIT columns.  With
    max_subset_size = c the enumeration runs over subsets of size <= c in
    increasing size and the result is only a lower bound (a divisor of the
    true period) unless c >= n.
    """
    n = mat.cols
    if max_subset_size is None:
        if n > FULL_ENUMERATION_LIMIT:
            raise TooManyColumns(
                f"too many columns for full enumeration: {n} > "
                f"{FULL_ENUMERATION_LIMIT}; pass max_subset_size for a lower bound"
            )
        return PeriodResult(_exact_lcm_period(mat), True)
    cap = operator.index(max_subset_size)
    if cap < 1:
        raise ValueError("max_subset_size must be >= 1")
    if cap >= n:
        if n <= FULL_ENUMERATION_LIMIT:
            return PeriodResult(_exact_lcm_period(mat), True)
        cap = n
    cols = mat.columns()
    m = mat.rows
    acc = 1
    for size in range(1, cap + 1):
        for sub in combinations(cols, size):
            last = _divisors_of_columns(sub, m)[-1]
            if last > 1 and acc % last:
                acc = math.lcm(acc, last)
    return PeriodResult(acc, cap >= n)


def known_period(spec: DeformSpec, family: str) -> int:
    """Minimum period of a deformation family, by formula.

    Adeform: s_1 for t >= 1, else 1.  Ddeform: lcm(s_1, 2) for t >= 1,
    else 2; requires the parity split r to be declared.
    """
    if family == "Adeform":
        return spec.s[0] if spec.t else 1
    if family == "Ddeform":
        if spec.r is None:
            raise InvalidParity(
                "type-D deformation needs the even-prefix length r"
            )
        return math.lcm(spec.s[0], 2) if spec.t else 2
    raise ValueError(f"unknown deformation family {family!r}")
