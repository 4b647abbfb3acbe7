"""Closed-form generators of the Poisson center and semi-center.

Constructs, inside the polynomial ring on matrix positions:

* the trace element (degree 1, central for the whole matrix algebra),
* corner minors: determinants of the k-th top-right block,
* row/column-replaced corner minors,
* the mixing term pairing middle-block entries with replaced minors,
* the degree-(k+1) companion ``augmented_minor = corner*flank_diag + mix``,
* the characteristic-p center generators ``corner^(p-l) * augmented^l``,
* and the trace-zero (sl) variants obtained by splitting off the trace.

Index conventions, with ``half = n // 2`` and ``h = (n - 1) // 2``:
corner minors exist for ``1 <= k <= half``; the flank diagonal, the mixing
term and the center products for ``1 <= k <= h``.  The augmented minor is
defined to be zero at ``k = n/2`` for even n so sweeps over ``k <= half``
stay uniform.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .exactalg import Mono, Poly, Scalar, det, is_prime, mono_key
from .liealg import LieElem


class NMustBeInvertible(ValueError):
    """Raised when the matrix size is not invertible in the field."""


def half_index(n: int) -> int:
    return n // 2


def mid_index(n: int) -> int:
    """Largest k with a nonzero augmented minor."""
    return (n - 1) // 2


def trace_poly(n: int, char: int) -> Poly:
    """Sum of the diagonal positions; generates the center of the Borel."""
    out = Poly.zero(char)
    for i in range(1, n + 1):
        out = out + Poly.variable(i, i, char)
    return out


def _corner_block(n: int, k: int, char: int) -> list[list[Poly]]:
    """The k-th top-right block: rows 1..k, columns n-k+1..n."""
    return [
        [Poly.variable(r, n - k + c, char) for c in range(1, k + 1)]
        for r in range(1, k + 1)
    ]


def corner_minor(n: int, k: int, char: int) -> Poly:
    """Determinant of the k-th top-right block; homogeneous of degree k."""
    if not 1 <= k <= half_index(n):
        raise ValueError(f"corner index k={k} out of range for n={n}")
    return det(_corner_block(n, k, char), char)


def row_replaced_minor(n: int, k: int, i: int, j: int, char: int) -> Poly:
    """Corner minor with row i replaced by the last k-tuple of row j.

    Requires ``1 <= i <= k`` and ``k+1 <= j <= n-k``; the replacement row
    is ``e(j, n-k+1) .. e(j, n)``.
    """
    if not (1 <= k <= half_index(n) and 1 <= i <= k and k + 1 <= j <= n - k):
        raise ValueError(f"row-replaced minor indices (k={k}, i={i}, j={j}) invalid")
    block = _corner_block(n, k, char)
    block[i - 1] = [Poly.variable(j, n - k + c, char) for c in range(1, k + 1)]
    return det(block, char)


def col_replaced_minor(n: int, k: int, i: int, j: int, char: int) -> Poly:
    """Corner minor with column i replaced by the first k-tuple of row n-j+1.

    Requires ``1 <= i <= k`` and ``k <= j <= n-k``; the replacement column
    ``e(n-j+1, 1) .. e(n-j+1, k)`` sits below the diagonal.
    """
    if not (1 <= k <= half_index(n) and 1 <= i <= k and k <= j <= n - k):
        raise ValueError(f"col-replaced minor indices (k={k}, i={i}, j={j}) invalid")
    block = _corner_block(n, k, char)
    for r in range(1, k + 1):
        block[r - 1][i - 1] = Poly.variable(n - j + 1, r, char)
    return det(block, char)


def flank_diagonal(n: int, k: int, char: int) -> LieElem:
    """Diagonal element marking the first k and last k diagonal slots."""
    if not 1 <= k <= mid_index(n):
        raise ValueError(f"flank index k={k} out of range for n={n}")
    out = LieElem(n, char)
    for i in range(1, k + 1):
        out = out + LieElem.unit(n, i, i, char)
        out = out + LieElem.unit(n, n - i + 1, n - i + 1, char)
    return out


def minor_mix(n: int, k: int, char: int) -> Poly:
    """Sum of e(i,j) times the row-replaced minor, over the middle block.

    Homogeneous of degree k+1; for even n this has an empty index range at
    k = n/2 and the sum is zero.
    """
    if not 1 <= k <= half_index(n):
        raise ValueError(f"mix index k={k} out of range for n={n}")
    out = Poly.zero(char)
    for i in range(1, k + 1):
        for j in range(k + 1, n - k + 1):
            out = out + Poly.variable(i, j, char) * row_replaced_minor(
                n, k, i, j, char
            )
    return out


def augmented_minor(n: int, k: int, char: int) -> Poly:
    """corner_minor * flank_diagonal + minor_mix; zero at k = n/2 (even n)."""
    if not 1 <= k <= half_index(n):
        raise ValueError(f"augmented-minor index k={k} out of range for n={n}")
    if n % 2 == 0 and k == n // 2:
        return Poly.zero(char)
    return corner_minor(n, k, char) * flank_diagonal(n, k, char).as_poly() + minor_mix(
        n, k, char
    )


def carry_split(i: int, j: int, p: int) -> tuple[int, int]:
    """The unique (s, r) with i + j = p*s + r, 0 <= s <= 1, 0 <= r < p."""
    if not (0 <= i <= p - 1 and 0 <= j <= p - 1):
        raise ValueError(f"exponents ({i},{j}) out of range for p={p}")
    s, r = divmod(i + j, p)
    return s, r


def center_product(n: int, k: int, l: int, p: int) -> Poly:
    """The center generator corner^(p-l) * augmented^l over 𝔽_p.

    Homogeneous of degree k*p + l.
    """
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if not 1 <= k <= mid_index(n):
        raise ValueError(f"index k={k} out of range for n={n}")
    if not 0 <= l <= p - 1:
        raise ValueError(f"index l={l} out of range for p={p}")
    return _power_product(corner_minor(n, k, p), augmented_minor(n, k, p), l, p)


def _power_product(c: Poly, m: Poly, l: int, p: int) -> Poly:
    return c ** (p - l) * m**l


@dataclass(frozen=True)
class RelationResult:
    """Outcome of a product-relation check, with the first differing term."""

    ok: bool
    first_diff: Optional[tuple[Mono, Scalar, Scalar]] = None

    def __bool__(self) -> bool:
        return self.ok


def _compare(lhs: Poly, rhs: Poly) -> RelationResult:
    if lhs == rhs:
        return RelationResult(True)
    diff = lhs - rhs
    m = min(diff.terms, key=mono_key)
    return RelationResult(False, (m, lhs.coefficient(m), rhs.coefficient(m)))


def product_relation(n: int, k: int, i: int, j: int, p: int) -> RelationResult:
    """Check c(k,i)c(k,j) = c(k,r) * corner^(p(1-s)) * augmented^(ps)."""
    s, r = carry_split(i, j, p)
    c = corner_minor(n, k, p)
    m = augmented_minor(n, k, p)
    lhs = _power_product(c, m, i, p) * _power_product(c, m, j, p)
    rhs = _power_product(c, m, r, p) * c ** (p * (1 - s)) * m ** (p * s)
    return _compare(lhs, rhs)


def split_off_trace(x: LieElem) -> tuple[LieElem, Scalar]:
    """Unique decomposition x = x0 + alpha * trace_element with x0 trace-zero.

    Needs the matrix size invertible in the field.
    """
    n = x.n
    if x.char and n % x.char == 0:
        raise NMustBeInvertible(f"n={n} is divisible by the characteristic {x.char}")
    alpha = x.trace() / Scalar.of(n, x.char)
    c0 = LieElem(n, x.char, {(i, i): Scalar.one(x.char) for i in range(1, n + 1)})
    return x - c0.scale(alpha), alpha


def flank_diagonal_sl(n: int, k: int, char: int) -> LieElem:
    """Trace-zero part of the flank diagonal; lies in the sl Borel."""
    x0, _ = split_off_trace(flank_diagonal(n, k, char))
    return x0


def flank_trace_coefficient(n: int, k: int, char: int) -> Scalar:
    """The trace coefficient 2k/n split off the flank diagonal."""
    _, alpha = split_off_trace(flank_diagonal(n, k, char))
    return alpha


def augmented_minor_sl(n: int, k: int, char: int) -> Poly:
    """corner * flank_sl + mix == augmented - (2k/n) * corner * trace."""
    if char and n % char == 0:
        raise NMustBeInvertible(f"n={n} is divisible by the characteristic {char}")
    if not 1 <= k <= mid_index(n):
        raise ValueError(f"index k={k} out of range for n={n}")
    return corner_minor(n, k, char) * flank_diagonal_sl(n, k, char).as_poly() + (
        minor_mix(n, k, char)
    )


def center_product_sl(n: int, k: int, l: int, p: int) -> Poly:
    """The sl-side center generator corner^(p-l) * augmented_sl^l over 𝔽_p."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if n % p == 0:
        raise NMustBeInvertible(f"n={n} is divisible by the characteristic {p}")
    if not (1 <= k <= mid_index(n) and 0 <= l <= p - 1):
        raise ValueError(f"indices (k={k}, l={l}) out of range")
    return _power_product(
        corner_minor(n, k, p), augmented_minor_sl(n, k, p), l, p
    )


def trace_expansion_check(n: int, k: int, l: int, p: int) -> RelationResult:
    """Expand c(k,l) over powers of the trace with sl coefficients.

    Checks ``c(k,l) = sum_i alpha^(l-i) * binom(l,i) * c_sl(k,i) * trace^(l-i)``
    where alpha is the split-off trace coefficient of the flank diagonal.
    """
    alpha = flank_trace_coefficient(n, k, p)
    c0 = trace_poly(n, p)
    rhs = Poly.zero(p)
    for i in range(l + 1):
        term = center_product_sl(n, k, i, p) * c0 ** (l - i)
        rhs = rhs + term.scale(alpha ** (l - i) * Scalar.of(comb(l, i), p))
    return _compare(center_product(n, k, l, p), rhs)


# -- generator catalog ---------------------------------------------------

GENERATOR_KINDS = (
    "trace",
    "corner-minor",
    "flank-diagonal",
    "row-replaced-minor",
    "col-replaced-minor",
    "minor-mix",
    "augmented-minor",
    "center-product",
    "flank-diagonal-sl",
    "augmented-minor-sl",
    "center-product-sl",
)


@dataclass(frozen=True)
class GeneratorId:
    """Names one generator of the catalog, with its indices."""

    kind: str
    k: int = 0
    l: int = 0
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")


def build_generator(gid: GeneratorId, n: int, char: int) -> Poly:
    """Construct any catalog generator as a polynomial."""
    kind = gid.kind
    if kind == "trace":
        return trace_poly(n, char)
    if kind == "corner-minor":
        return corner_minor(n, gid.k, char)
    if kind == "flank-diagonal":
        return flank_diagonal(n, gid.k, char).as_poly()
    if kind == "row-replaced-minor":
        return row_replaced_minor(n, gid.k, gid.i, gid.j, char)
    if kind == "col-replaced-minor":
        return col_replaced_minor(n, gid.k, gid.i, gid.j, char)
    if kind == "minor-mix":
        return minor_mix(n, gid.k, char)
    if kind == "augmented-minor":
        return augmented_minor(n, gid.k, char)
    if kind == "center-product":
        return center_product(n, gid.k, gid.l, char)
    if kind == "flank-diagonal-sl":
        return flank_diagonal_sl(n, gid.k, char).as_poly()
    if kind == "augmented-minor-sl":
        return augmented_minor_sl(n, gid.k, char)
    if kind == "center-product-sl":
        return center_product_sl(n, gid.k, gid.l, char)
    raise ValueError(f"unknown generator kind {kind!r}")
