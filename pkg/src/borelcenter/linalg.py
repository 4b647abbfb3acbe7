"""Exact dense kernels over ℚ and 𝔽_p.

Over ℚ rows are cleared to integers and eliminated fraction-free
(Bareiss), with a rational back-substitution for the kernel; over 𝔽_p a
plain modular reduction suffices.  No floating point anywhere; results
are deterministic given the row order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _clear_row(row: list) -> list[int]:
    denom = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * denom) for x in row]


def _echelon_bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns pivot rows and pivot columns."""
    work = [row[:] for row in rows if any(row)]
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_at = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_at = i
                break
        if pivot_at is None:
            continue
        work[r], work[pivot_at] = work[pivot_at], work[r]
        piv = work[r][c]
        for i in range(r + 1, len(work)):
            coeff = work[i][c]
            row = work[i]
            prow = work[r]
            for j in range(c, ncols):
                row[j] = (piv * row[j] - coeff * prow[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[: len(pivots)], pivots


def _normalize_rational(vec: list[Fraction]) -> list[Fraction]:
    denom = lcm(*(x.denominator for x in vec))
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return [Fraction(x) for x in ints]


def nullspace_rational(rows: list[list], ncols: int) -> list[list[Fraction]]:
    """Kernel basis of an exact rational matrix, one vector per free column."""
    cleared = [_clear_row(row) for row in rows]
    echelon, pivots = _echelon_bareiss(cleared, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            acc = Fraction(0)
            for j in range(c + 1, ncols):
                if vec[j]:
                    acc += echelon[r][j] * vec[j]
            vec[c] = -acc / echelon[r][c]
        basis.append(_normalize_rational(vec))
    return basis


def nullspace_modp(rows: list[list[int]], ncols: int, p: int) -> list[list[int]]:
    """Kernel basis over 𝔽_p via reduced row echelon form."""
    work = []
    for row in rows:
        reduced = [x % p for x in row]
        if any(reduced):
            work.append(reduced)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_at = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_at = i
                break
        if pivot_at is None:
            continue
        work[r], work[pivot_at] = work[pivot_at], work[r]
        inv = pow(work[r][c], -1, p)
        work[r] = [(x * inv) % p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                coeff = work[i][c]
                work[i] = [
                    (x - coeff * y) % p for x, y in zip(work[i], work[r])
                ]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for row_idx, c in enumerate(pivots):
            vec[c] = (-work[row_idx][free]) % p
        basis.append(vec)
    return basis


def nullspace(rows: list[list], ncols: int, char: int) -> list[list]:
    if char:
        return nullspace_modp(rows, ncols, char)
    return nullspace_rational(rows, ncols)


def rank(rows: list[list], ncols: int, char: int) -> int:
    if char:
        work = [[x % char for x in row] for row in rows]
        reduced = nullspace_modp(work, ncols, char)
        return ncols - len(reduced)
    cleared = [_clear_row(row) for row in rows]
    _, pivots = _echelon_bareiss(cleared, ncols)
    return len(pivots)


def in_span(vectors: list[list], target: list, char: int) -> bool:
    """True iff the target is a linear combination of the vectors."""
    ncols = len(target)
    base = rank(vectors, ncols, char)
    return rank(vectors + [target], ncols, char) == base
