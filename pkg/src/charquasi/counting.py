"""Counting lattice points off the hyperplanes, three independent ways.

For an m x n normal matrix S and a modulus q >= 1 the object counted is

    M_S(q) = {x in (Z/q)^m : x . s_j is nonzero mod q for every column s_j},

whose size is a monic quasi-polynomial in q of degree m.  This module holds
the two generic counters plus exact interpolation:

  * brute_force_count: literal enumeration of all q^m points.  Fast path
    uses 64-bit vectorized arithmetic when products cannot overflow a
    machine word; otherwise a plain-integer loop with per-point short
    circuit takes over, so results are exact for any entry size.
  * snf_count: inclusion-exclusion over column subsets J,
        |M_S(q)| = sum_J (-1)^|J| q^(m - l(J)) prod_i gcd(e_{J,i}, q),
    where e_{J,i} are the elementary divisors of the column submatrix and
    l(J) its rank; the empty subset contributes q^m.
  * interpolate_quasi: exact Lagrange interpolation (Fraction arithmetic)
    of one degree-m constituent per residue class mod a given period, from
    m + 1 counted samples per class.

Polynomial and QuasiPolynomial are the exact result types shared with the
closed-form module.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .arrangements import IntMatrix
from .errors import BudgetExceeded, NotIntegral, NotMonic, TooManyColumns
from .intlinalg import FULL_ENUMERATION_LIMIT, _divisors_of_columns

DEFAULT_POINT_BUDGET = 10**8
_CHUNK = 1 << 16
# Keep x . s_j comfortably inside int64: m * (q-1) * max|entry| < 2^62.
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class Polynomial:
    """Integer-coefficient polynomial; coeffs[i] multiplies q^i.

    Trailing zero coefficients are stripped, so the zero polynomial has
    coeffs == () and degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = [operator.index(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_roots(cls, roots) -> "Polynomial":
        """The monic product of (q - r) over the given integer roots."""
        out = [1]
        for r in roots:
            r = operator.index(r)
            out = [0] + out
            for i in range(len(out) - 1):
                out[i] -= r * out[i + 1]
        return cls(tuple(out))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, q: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __add__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        for i, c in enumerate(b):
            merged[i] += c
        return Polynomial(tuple(merged))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __str__(self) -> str:
        """Canonical text: descending powers, explicit signs, '*' products."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for p in range(self.degree, -1, -1):
            c = self.coeffs[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = str(mag)
            elif p == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{p}" if mag == 1 else f"{mag}*q^{p}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class QuasiPolynomial:
    """One monic degree-m constituent per residue class modulo the period.

    constituents[k-1] applies to q = k (mod period), where the residue index
    runs over 1..period and index period covers q = 0 (mod period).
    """

    period: int
    constituents: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        period = operator.index(self.period)
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "constituents", tuple(self.constituents))
        if period < 1:
            raise ValueError("period must be >= 1")
        if len(self.constituents) != period:
            raise ValueError(
                f"need exactly {period} constituents, got {len(self.constituents)}"
            )
        degs = {p.degree for p in self.constituents}
        if len(degs) != 1:
            raise ValueError("constituents must share one degree")
        if not all(p.is_monic for p in self.constituents):
            raise ValueError("constituents must be monic")

    @property
    def degree(self) -> int:
        return self.constituents[0].degree

    def constituent(self, k: int) -> Polynomial:
        """Constituent of the residue class of k (any positive integer)."""
        k = operator.index(k)
        if k < 1:
            raise ValueError("residue index must be >= 1")
        return self.constituents[(k - 1) % self.period]

    def __call__(self, q: int) -> int:
        return self.constituent(q)(q)


def _count_numpy(mat: IntMatrix, q: int) -> int:
    S = np.array(mat.entries, dtype=np.int64)
    m = mat.rows
    total = q**m
    strides = q ** np.arange(m - 1, -1, -1, dtype=np.int64)
    count = 0
    for lo in range(0, total, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, total), dtype=np.int64)
        points = (idx[:, None] // strides) % q
        residues = (points @ S) % q
        count += int((residues != 0).all(axis=1).sum())
    return count


def _count_python(mat: IntMatrix, q: int) -> int:
    cols = mat.columns()
    count = 0
    for x in product(range(q), repeat=mat.rows):
        for col in cols:
            if sum(a * b for a, b in zip(x, col)) % q == 0:
                break
        else:
            count += 1
    return count


def brute_force_count(mat: IntMatrix, q: int, budget: int = DEFAULT_POINT_BUDGET) -> int:
    """|M_S(q)| by enumerating all q^m points.

    Raises BudgetExceeded when q^m exceeds the point budget.  q = 1 always
    gives 0: every product is 0 mod 1 and the matrix has at least one column.
    """
    q = operator.index(q)
    if q < 1:
        raise ValueError("modulus q must be >= 1")
    points = q**mat.rows
    if points > budget:
        raise BudgetExceeded(
            f"{q}^{mat.rows} = {points} points exceed the budget of {budget}"
        )
    if q == 1:
        return 0
    max_entry = max(abs(v) for row in mat.entries for v in row)
    if mat.rows * (q - 1) * max_entry < _INT64_SAFE:
        return _count_numpy(mat, q)
    return _count_python(mat, q)


@lru_cache(maxsize=8)
def _subset_divisor_table(mat: IntMatrix) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """(|J|, elementary divisors of S_J) for every nonempty column subset J."""
    cols = mat.columns()
    m = mat.rows
    table = []
    for size in range(1, len(cols) + 1):
        for sub in combinations(cols, size):
            table.append((size, tuple(_divisors_of_columns(sub, m))))
    return tuple(table)


def snf_count(
    mat: IntMatrix, q: int, column_limit: int = FULL_ENUMERATION_LIMIT
) -> int:
    """|M_S(q)| by inclusion-exclusion over the elementary divisor data.

    Needs 2^n subset terms; matrices wider than column_limit are refused.
    Agreement with brute_force_count for all q is the core cross-check of
    the package.
    """
    q = operator.index(q)
    if q < 1:
        raise ValueError("modulus q must be >= 1")
    if mat.cols > column_limit:
        raise TooManyColumns(
            f"too many columns for inclusion-exclusion: {mat.cols} > {column_limit}"
        )
    m = mat.rows
    total = q**m
    for size, divs in _subset_divisor_table(mat):
        term = q ** (m - len(divs))
        for e in divs:
            term *= math.gcd(e, q)
        total += -term if size % 2 else term
    return total


def _lagrange_integer_poly(xs: list[int], ys: list[int]) -> Polynomial:
    """Exact interpolating polynomial through (xs[i], ys[i]); must be integral."""
    k = len(xs)
    acc = [Fraction(0)] * k
    for i in range(k):
        if ys[i] == 0:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j in range(k):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xs[j] * basis[d + 1]
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i], denom)
        for d, c in enumerate(basis):
            acc[d] += scale * c
    for d, c in enumerate(acc):
        if c.denominator != 1:
            raise NotIntegral(f"coefficient of q^{d} interpolates to {c}")
    return Polynomial(tuple(int(c) for c in acc))


def interpolate_quasi(
    mat: IntMatrix,
    period: int,
    counter: str = "brute",
    budget: int = DEFAULT_POINT_BUDGET,
) -> QuasiPolynomial:
    """Interpolate the quasi-polynomial of the matrix for a given period.

    Per residue class k in 1..period the first m + 1 sample moduli
    q = k + period*j with q >= 2 are counted (counter: "brute" or "snf")
    and interpolated exactly.  A wrong period surfaces as NotIntegral or
    NotMonic, never as a silently wrong result.
    """
    period = operator.index(period)
    if period < 1:
        raise ValueError("period must be >= 1")
    if counter == "brute":
        def count(q: int) -> int:
            return brute_force_count(mat, q, budget)
    elif counter == "snf":
        def count(q: int) -> int:
            return snf_count(mat, q)
    else:
        raise ValueError(f"unknown counter {counter!r}, expected 'brute' or 'snf'")
    m = mat.rows
    constituents = []
    for k in range(1, period + 1):
        # Smallest sample modulus >= 2 in the class, then m more steps of rho.
        first = k if k >= 2 else 1 + period
        xs = [first + period * j for j in range(m + 1)]
        ys = [count(x) for x in xs]
        poly = _lagrange_integer_poly(xs, ys)
        if poly.degree != m or not poly.is_monic:
            raise NotMonic(
                f"residue class {k} interpolates to {poly}, "
                f"not monic of degree {m}"
            )
        constituents.append(poly)
    return QuasiPolynomial(period, tuple(constituents))


def verify_minimum_period(qp: QuasiPolynomial) -> bool:
    """True when no proper divisor of the period also works as a period."""
    rho = qp.period
    for d in range(1, rho):
        if rho % d:
            continue
        if all(
            qp.constituents[k] == qp.constituents[k % d] for k in range(rho)
        ):
            return False
    return True


def check_gcd_property(qp: QuasiPolynomial) -> bool:
    """True when constituents depend only on gcd(period, k)."""
    rho = qp.period
    seen: dict[int, Polynomial] = {}
    for k in range(1, rho + 1):
        g = math.gcd(rho, k)
        if g in seen:
            if seen[g] != qp.constituents[k - 1]:
                return False
        else:
            seen[g] = qp.constituents[k - 1]
    return True
