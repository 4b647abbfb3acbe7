"""Exact coefficient arithmetic and sparse multivariate polynomials.

Coefficients live in ℚ (characteristic 0, represented by ``Fraction``) or in
𝔽_p (characteristic p, represented by a residue in ``[0, p)``).  The
characteristic is carried on every value and checked at operation
boundaries, so one process can sweep mixed (n, p) grids.

Polynomials are sparse maps from monomials to nonzero scalars.  Variables
are matrix positions ``(row, col)`` with ``row, col >= 1``; rows ``<= 0``
are reserved for auxiliary adjoined variables (used by the Jacobian
machinery).  A monomial is a tuple of ``(row, col, exp)`` triples sorted by
position, with no zero exponents.

The canonical term order is graded lexicographic: monomials compare first
by total degree, then by exponents read along positions in row-major
order, larger exponent on the earlier position first.  Serialization and
leading-term extraction both use this order.

All values are immutable after construction and safe to share across
threads; no operation mutates its inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping

import json

Var = tuple[int, int]
Mono = tuple[tuple[int, int, int], ...]

ONE_MONO: Mono = ()


class NotAPthPower(ValueError):
    """Raised when a polynomial is not in the subring of p-th powers."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Scalar:
    """An exact field element: a rational (char 0) or a residue mod p.

    >>> Scalar.of(Fraction(2, 3), 0) + Scalar.of(1, 0)
    Scalar(5/3, char=0)
    >>> Scalar.of(5, 3) * Scalar.of(2, 3)
    Scalar(1, char=3)
    """

    __slots__ = ("char", "val")

    def __init__(self, char: int, val):
        self.char = char
        self.val = val

    @staticmethod
    def of(value, char: int) -> "Scalar":
        if isinstance(value, Scalar):
            if value.char != char:
                raise ValueError(
                    f"characteristic mismatch: {value.char} vs {char}"
                )
            return value
        if char == 0:
            return Scalar(0, Fraction(value))
        if isinstance(value, Fraction):
            den = value.denominator % char
            if den == 0:
                raise ZeroDivisionError(
                    f"denominator of {value} is divisible by {char}"
                )
            return Scalar(char, value.numerator * pow(den, -1, char) % char)
        return Scalar(char, int(value) % char)

    @staticmethod
    def zero(char: int) -> "Scalar":
        return Scalar.of(0, char)

    @staticmethod
    def one(char: int) -> "Scalar":
        return Scalar.of(1, char)

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.char != self.char:
                raise ValueError(
                    f"characteristic mismatch: {self.char} vs {other.char}"
                )
            return other
        return Scalar.of(other, self.char)

    def __add__(self, other) -> "Scalar":
        other = self._coerce(other)
        v = self.val + other.val
        return Scalar(self.char, v % self.char if self.char else v)

    def __sub__(self, other) -> "Scalar":
        other = self._coerce(other)
        v = self.val - other.val
        return Scalar(self.char, v % self.char if self.char else v)

    def __mul__(self, other) -> "Scalar":
        other = self._coerce(other)
        v = self.val * other.val
        return Scalar(self.char, v % self.char if self.char else v)

    def __truediv__(self, other) -> "Scalar":
        other = self._coerce(other)
        return self * other.inverse()

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other) -> "Scalar":
        return self._coerce(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(self.char, -self.val % self.char if self.char else -self.val)

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.char:
            return Scalar(self.char, pow(self.val, -1, self.char))
        return Scalar(0, 1 / self.val)

    def __pow__(self, m: int) -> "Scalar":
        if m < 0:
            return self.inverse() ** (-m)
        if self.char:
            return Scalar(self.char, pow(self.val, m, self.char))
        return Scalar(0, self.val**m)

    def __bool__(self) -> bool:
        return self.val != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.char == other.char and self.val == other.val
        if isinstance(other, (int, Fraction)):
            return self == Scalar.of(other, self.char)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.char, self.val))

    def to_str(self) -> str:
        """Serialize as an integer string or ``a/b``."""
        return str(self.val)

    @staticmethod
    def from_str(s: str, char: int) -> "Scalar":
        return Scalar.of(Fraction(s), char)

    def __repr__(self) -> str:
        return f"Scalar({self.val}, char={self.char})"


def mono_mul(a: Mono, b: Mono) -> Mono:
    """Merge two sorted exponent tuples."""
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        ra, ca, ea = a[i]
        rb, cb, eb = b[j]
        if (ra, ca) == (rb, cb):
            out.append((ra, ca, ea + eb))
            i += 1
            j += 1
        elif (ra, ca) < (rb, cb):
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_deg(m: Mono) -> int:
    return sum(e for _, _, e in m)


def mono_vars(m: Mono) -> Iterator[Var]:
    for r, c, _ in m:
        yield (r, c)


def mono_key(m: Mono):
    """Sort key realizing the canonical graded-lex order, biggest term first."""
    return (-mono_deg(m), tuple((r, c, -e) for r, c, e in m))


def mono_divides(a: Mono, b: Mono) -> bool:
    """True if monomial ``a`` divides ``b`` componentwise."""
    exps = {(r, c): e for r, c, e in b}
    return all(exps.get((r, c), 0) >= e for r, c, e in a)


def mono_quotient(b: Mono, a: Mono) -> Mono:
    exps = {(r, c): e for r, c, e in b}
    for r, c, e in a:
        exps[(r, c)] -= e
    return tuple((r, c, e) for (r, c), e in sorted(exps.items()) if e)


def mono_str(m: Mono) -> str:
    if not m:
        return "1"
    parts = []
    for r, c, e in m:
        name = f"e({r},{c})" if r >= 1 else f"t({c})"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


class Poly:
    """A sparse multivariate polynomial with exact coefficients.

    ``terms`` maps monomials to nonzero scalars; two polynomials are equal
    iff the maps are equal.  Instances are immutable by convention.
    """

    __slots__ = ("terms", "char")

    def __init__(self, char: int, terms: Mapping[Mono, Scalar] | None = None):
        self.char = char
        self.terms: dict[Mono, Scalar] = dict(terms) if terms else {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(char: int) -> "Poly":
        return Poly(char)

    @staticmethod
    def const(value, char: int) -> "Poly":
        s = Scalar.of(value, char)
        return Poly(char, {ONE_MONO: s}) if s else Poly(char)

    @staticmethod
    def variable(r: int, c: int, char: int) -> "Poly":
        return Poly(char, {((r, c, 1),): Scalar.one(char)})

    @staticmethod
    def one(char: int) -> "Poly":
        return Poly.const(1, char)

    # -- ring structure -----------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.char != other.char:
            raise ValueError(
                f"characteristic mismatch: {self.char} vs {other.char}"
            )

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(other, self.char)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m)
            s = c if acc is None else acc + c
            if s:
                terms[m] = s
            elif acc is not None:
                del terms[m]
        return Poly(self.char, terms)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __neg__(self) -> "Poly":
        return Poly(self.char, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        other = self._coerce(other)
        terms: dict[Mono, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                c = c1 * c2
                acc = terms.get(m)
                s = c if acc is None else acc + c
                if s:
                    terms[m] = s
                elif acc is not None:
                    del terms[m]
        return Poly(self.char, terms)

    def __rmul__(self, other) -> "Poly":
        return self.scale(other)

    def __radd__(self, other) -> "Poly":
        return self + other

    def __rsub__(self, other) -> "Poly":
        return -(self - other)

    def scale(self, value) -> "Poly":
        s = value if isinstance(value, Scalar) else Scalar.of(value, self.char)
        if s.char != self.char:
            raise ValueError("characteristic mismatch")
        if not s:
            return Poly(self.char)
        return Poly(self.char, {m: c * s for m, c in self.terms.items()})

    def __pow__(self, m: int) -> "Poly":
        if m < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.char)
        base = self
        while m:
            if m & 1:
                result = result * base
            base_needed = m >> 1
            if base_needed:
                base = base * base
            m = base_needed
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.const(other, self.char)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.char == other.char and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.char, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(
            self.char, {m: c for m, c in self.terms.items() if mono_deg(m) == d}
        )

    def variables(self) -> set[Var]:
        out: set[Var] = set()
        for m in self.terms:
            out.update(mono_vars(m))
        return out

    def coefficient(self, m: Mono) -> Scalar:
        return self.terms.get(m, Scalar.zero(self.char))

    def sorted_terms(self) -> list[tuple[Mono, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: mono_key(kv[0]))

    def leading_term(self) -> tuple[Mono, Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = min(self.terms, key=mono_key)
        return m, self.terms[m]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"{c.to_str()}*{mono_str(m)}" for m, c in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"Poly({self})"

    # -- calculus ------------------------------------------------------

    def partial(self, var: Var) -> "Poly":
        """Formal partial derivative with respect to one variable."""
        r0, c0 = var
        terms: dict[Mono, Scalar] = {}
        for m, c in self.terms.items():
            for idx, (r, ccol, e) in enumerate(m):
                if (r, ccol) != (r0, c0):
                    continue
                coeff = c * e
                if not coeff:
                    break
                rest = m[:idx] + ((r, ccol, e - 1),) * (e > 1) + m[idx + 1 :]
                acc = terms.get(rest)
                s = coeff if acc is None else acc + coeff
                if s:
                    terms[rest] = s
                elif acc is not None:
                    del terms[rest]
                break
        return Poly(self.char, terms)


def poly_sum(polys: Iterable[Poly], char: int) -> Poly:
    total = Poly.zero(char)
    for p in polys:
        total = total + p
    return total


def apply_derivation(images: Mapping[Var, Poly], f: Poly) -> Poly:
    """Extend ``var -> images[var]`` to ``f`` by the Leibniz rule.

    Every variable occurring in ``f`` must have an image.
    """
    result = Poly.zero(f.char)
    for m, c in f.terms.items():
        for idx, (r, ccol, e) in enumerate(m):
            try:
                img = images[(r, ccol)]
            except KeyError:
                raise ValueError(f"derivation has no image for variable ({r},{ccol})")
            if img.is_zero():
                continue
            rest = m[:idx] + ((r, ccol, e - 1),) * (e > 1) + m[idx + 1 :]
            coeff = c * e
            if not coeff:
                continue
            result = result + (img * Poly(f.char, {rest: coeff}))
    return result


def det(matrix: list[list[Poly]], char: int | None = None) -> Poly:
    """Determinant of a square matrix of polynomials.

    Cofactor expansion along the first remaining row, memoized on the
    surviving column set; entries here are low-degree and blocks small, so
    this beats fraction-free elimination.
    """
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if char is None:
        if k == 0:
            raise ValueError("empty determinant needs an explicit characteristic")
        char = matrix[0][0].char
    if k == 0:
        return Poly.one(char)
    for row in matrix:
        for entry in row:
            if entry.char != char:
                raise ValueError("characteristic mismatch inside matrix")

    cache: dict[tuple[int, ...], Poly] = {}

    def minor(cols: tuple[int, ...]) -> Poly:
        if not cols:
            return Poly.one(char)
        got = cache.get(cols)
        if got is not None:
            return got
        i = k - len(cols)
        acc = Poly.zero(char)
        for pos, j in enumerate(cols):
            entry = matrix[i][j]
            if entry.is_zero():
                continue
            sub = minor(cols[:pos] + cols[pos + 1 :])
            piece = entry * sub
            acc = acc + (piece if pos % 2 == 0 else -piece)
        cache[cols] = acc
        return acc

    return minor(tuple(range(k)))


def det_leibniz(matrix: list[list[Poly]], char: int) -> Poly:
    """Plain permanent-style Leibniz expansion; the independent oracle for det."""
    from itertools import permutations

    k = len(matrix)
    acc = Poly.zero(char)
    for perm in permutations(range(k)):
        sign = 1
        seen = list(perm)
        for i in range(k):
            for j in range(i + 1, k):
                if seen[i] > seen[j]:
                    sign = -sign
        prod = Poly.const(sign, char)
        for i in range(k):
            prod = prod * matrix[i][perm[i]]
        acc = acc + prod
    return acc


def frobenius_coords(f: Poly, p: int) -> Poly:
    """Rewrite a polynomial of p-th powers in compressed coordinates.

    Every exponent of every monomial must be divisible by ``p``; exponents
    are divided by ``p`` and coefficients kept (valid over 𝔽_p, where the
    Frobenius fixes scalars).  The positions now stand for the p-th powers
    of the original variables.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.char != p:
        raise ValueError(f"polynomial has characteristic {f.char}, expected {p}")
    terms: dict[Mono, Scalar] = {}
    for m, c in f.terms.items():
        for r, ccol, e in m:
            if e % p:
                raise NotAPthPower(
                    f"exponent {e} of variable ({r},{ccol}) is not divisible by {p}"
                )
        terms[tuple((r, ccol, e // p) for r, ccol, e in m)] = c
    return Poly(f.char, terms)


def substitute(f: Poly, images: Mapping[Var, Poly]) -> Poly:
    """Ring homomorphism sending each mapped variable to its image.

    Unmapped variables are sent to themselves.
    """
    result = Poly.zero(f.char)
    for m, c in f.terms.items():
        prod = Poly.const(c, f.char)
        for r, ccol, e in m:
            img = images.get((r, ccol))
            if img is None:
                prod = prod * Poly(f.char, {((r, ccol, e),): Scalar.one(f.char)})
            else:
                prod = prod * img**e
        result = result + prod
    return result


def divmod_single(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Multivariate division by a single divisor under the canonical order.

    Returns ``(q, r)`` with ``f = q*g + r`` and no term of ``r`` divisible
    by the leading term of ``g``.  For a single divisor the remainder is
    zero exactly when ``g`` divides ``f``.
    """
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    f._check(g)
    lg, cg = g.leading_term()
    q = Poly.zero(f.char)
    r = Poly.zero(f.char)
    work = f
    while not work.is_zero():
        lm, lc = work.leading_term()
        if mono_divides(lg, lm):
            t = Poly(f.char, {mono_quotient(lm, lg): lc / cg})
            q = q + t
            work = work - t * g
        else:
            piece = Poly(f.char, {lm: lc})
            r = r + piece
            work = work - piece
    return q, r


def divides(g: Poly, f: Poly) -> bool:
    """True iff ``g`` divides ``f`` exactly."""
    if f.is_zero():
        return True
    q, r = divmod_single(f, g)
    return r.is_zero() and q * g == f


# -- serialization -----------------------------------------------------


def poly_to_obj(f: Poly) -> dict:
    return {
        "char": f.char,
        "terms": [
            {"coeff": c.to_str(), "vars": [[r, cc, e] for r, cc, e in m]}
            for m, c in f.sorted_terms()
        ],
    }


def poly_from_obj(obj: dict) -> Poly:
    char = obj["char"]
    terms: dict[Mono, Scalar] = {}
    for t in obj["terms"]:
        m = tuple(sorted((r, c, e) for r, c, e in t["vars"]))
        s = Scalar.from_str(t["coeff"], char)
        if s:
            terms[m] = s
    return Poly(char, terms)


def poly_dumps(f: Poly) -> str:
    return json.dumps(poly_to_obj(f), sort_keys=True, separators=(",", ":"))


def poly_loads(s: str) -> Poly:
    return poly_from_obj(json.loads(s))
