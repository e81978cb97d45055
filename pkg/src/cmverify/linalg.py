"""Exact rank and kernel computations over Q.

Rows are scaled to primitive integer vectors (which changes neither the rank
nor the right kernel) and then reduced with Bareiss fraction-free
elimination, so every intermediate entry is an integer minor.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .exact import lcm


def _int_row(row) -> list[int]:
    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    out = [int(Fraction(x) * den) for x in row]
    g = 0
    for x in out:
        g = gcd(g, x)
    return [x // g for x in out] if g > 1 else out


def bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns the nonzero echelon rows and their pivot columns.  The input is
    not modified.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        top = m[r]
        p = top[c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, ncols):
                val, rem = divmod(p * row[j] - f * top[j], prev)
                assert rem == 0, "Bareiss division not exact"
                row[j] = val
            row[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return m[:r], pivots


class RationalMatrix:
    """Dense matrix of rationals with exact rank and kernel."""

    def __init__(self, rows):
        self.rows = [[Fraction(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def from_columns(cls, columns, height: int | None = None) -> "RationalMatrix":
        columns = [list(c) for c in columns]
        if not columns:
            return cls([[] for _ in range(height or 0)])
        h = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(h)])

    def _echelon(self):
        return bareiss_echelon([_int_row(r) for r in self.rows if any(r)])

    def rank(self) -> int:
        if not self.ncols:
            return 0
        return len(self._echelon()[1])

    def rank_permuted(self, seed: int = 0) -> int:
        """Rank after a random row and column permutation (independent check)."""
        rng = random.Random(seed)
        ri = list(range(self.nrows))
        ci = list(range(self.ncols))
        rng.shuffle(ri)
        rng.shuffle(ci)
        return RationalMatrix([[self.rows[i][j] for j in ci] for i in ri]).rank()

    def kernel(self) -> list[list[Fraction]]:
        """Basis of {x : M x = 0}, each vector scaled to primitive integers
        with a positive leading entry."""
        if not self.ncols:
            return []
        ech, pivots = self._echelon()
        # back-substitute to reduced form over Q
        red = [[Fraction(x) for x in r] for r in ech]
        for i in range(len(red) - 1, -1, -1):
            c = pivots[i]
            p = red[i][c]
            red[i] = [x / p for x in red[i]]
            for k in range(i):
                f = red[k][c]
                if f:
                    red[k] = [a - f * b for a, b in zip(red[k], red[i])]
        basis = []
        free = [c for c in range(self.ncols) if c not in pivots]
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for i, c in enumerate(pivots):
                v[c] = -red[i][f]
            ints = _int_row(v)
            lead = next(x for x in ints if x)
            if lead < 0:
                ints = [-x for x in ints]
            basis.append([Fraction(x) for x in ints])
        return basis

    def apply(self, v) -> list[Fraction]:
        return [sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows]


def rank_of_columns(columns) -> int:
    return RationalMatrix.from_columns(columns).rank()


def solve_columns(columns, target) -> list[Fraction]:
    """Solve sum_j x_j * columns[j] = target exactly (unique solution expected)."""
    cols = [list(c) for c in columns]
    h = len(target)
    aug = [[Fraction(cols[j][i]) for j in range(len(cols))] + [Fraction(target[i])] for i in range(h)]
    n = len(cols)
    r = 0
    where = [-1] * n
    for c in range(n):
        piv = next((i for i in range(r, h) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(h):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        where[c] = r
        r += 1
    if any(aug[i][n] for i in range(r, h)):
        raise ValueError("system is inconsistent")
    if -1 in where:
        raise ValueError("solution is not unique")
    return [aug[where[c]][n] for c in range(n)]
