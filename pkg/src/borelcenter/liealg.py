"""Matrix Lie algebras and their action on polynomials.

Models gl_n with its standard basis ``e(i,j)``, the Borel subalgebra of
upper-triangular matrices, and the trace-zero Borel subalgebra of sl_n
whose Cartan part is spanned by ``eps(i) = e(i,i) - e(n,n)``.

Structure constants: ``[e(a,b), e(c,d)] = delta(b,c) e(a,d) - delta(d,a) e(c,b)``.
The adjoint action of ``x`` on a polynomial is the derivation extending
``v -> [x, v]``; for polynomial arguments ``ad f`` means the Poisson
bracket ``{f, .}`` with the same orientation, so ``{x, f} = ad x(f)`` for
degree-one ``x``.  Under this convention both printed sign facts hold:
``{e(s,s), C} = +C`` for a corner minor and ``s`` in the top rows, and
``{C, e(k,k)} = -C``.

Everything here is stateless over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Mapping

from .exactalg import Poly, Scalar, Var


class NotSemiInvariant(ValueError):
    """Raised when a polynomial fails the semi-invariant eigen equation."""


def bracket_vars(a: Var, b: Var) -> list[tuple[Var, int]]:
    """Structure constants of gl_n on basis positions."""
    (r1, c1), (r2, c2) = a, b
    out: list[tuple[Var, int]] = []
    if c1 == r2:
        out.append(((r1, c2), 1))
    if c2 == r1:
        out.append(((r2, c1), -1))
    if len(out) == 2 and out[0][0] == out[1][0]:
        return []
    return out


class LieElem:
    """A finite linear combination of matrix units e(i,j)."""

    __slots__ = ("n", "char", "coeffs")

    def __init__(self, n: int, char: int, coeffs: Mapping[Var, Scalar] | None = None):
        self.n = n
        self.char = char
        self.coeffs: dict[Var, Scalar] = {
            v: c for v, c in (coeffs or {}).items() if c
        }

    @staticmethod
    def unit(n: int, r: int, c: int, char: int) -> "LieElem":
        if not (1 <= r <= n and 1 <= c <= n):
            raise ValueError(f"position ({r},{c}) outside a {n}x{n} matrix")
        return LieElem(n, char, {(r, c): Scalar.one(char)})

    @staticmethod
    def eps(n: int, i: int, char: int) -> "LieElem":
        """Cartan basis element e(i,i) - e(n,n) of the sl_n Borel, 1 <= i <= n-1."""
        if not 1 <= i <= n - 1:
            raise ValueError(f"eps index {i} out of range for n={n}")
        one = Scalar.one(char)
        return LieElem(n, char, {(i, i): one, (n, n): -one})

    def _check(self, other: "LieElem") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        if self.char != other.char:
            raise ValueError("characteristic mismatch")

    def __add__(self, other: "LieElem") -> "LieElem":
        self._check(other)
        coeffs = dict(self.coeffs)
        for v, c in other.coeffs.items():
            s = coeffs.get(v, Scalar.zero(self.char)) + c
            if s:
                coeffs[v] = s
            else:
                coeffs.pop(v, None)
        return LieElem(self.n, self.char, coeffs)

    def __sub__(self, other: "LieElem") -> "LieElem":
        return self + (-other)

    def __neg__(self) -> "LieElem":
        return LieElem(self.n, self.char, {v: -c for v, c in self.coeffs.items()})

    def scale(self, value) -> "LieElem":
        s = value if isinstance(value, Scalar) else Scalar.of(value, self.char)
        return LieElem(self.n, self.char, {v: c * s for v, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElem):
            return NotImplemented
        return (
            self.n == other.n
            and self.char == other.char
            and self.coeffs == other.coeffs
        )

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def trace(self) -> Scalar:
        t = Scalar.zero(self.char)
        for (r, c), s in self.coeffs.items():
            if r == c:
                t = t + s
        return t

    def in_upper_borel(self) -> bool:
        """True if supported on positions with row <= col."""
        return all(r <= c for r, c in self.coeffs)

    def in_sl_borel(self) -> bool:
        """True if upper-triangular with trace zero."""
        return self.in_upper_borel() and not self.trace()

    def as_poly(self) -> Poly:
        return Poly(
            self.char, {((r, c, 1),): s for (r, c), s in self.coeffs.items()}
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return "LieElem(0)"
        body = " + ".join(
            f"{c.to_str()}*e({r},{cc})"
            for (r, cc), c in sorted(self.coeffs.items())
        )
        return f"LieElem({body})"


def bracket(a: LieElem, b: LieElem) -> LieElem:
    """Lie bracket on gl_n; bilinear, antisymmetric, satisfies Jacobi."""
    a._check(b)
    coeffs: dict[Var, Scalar] = {}
    for va, ca in a.coeffs.items():
        for vb, cb in b.coeffs.items():
            for v, sign in bracket_vars(va, vb):
                s = coeffs.get(v, Scalar.zero(a.char)) + ca * cb * sign
                if s:
                    coeffs[v] = s
                else:
                    coeffs.pop(v, None)
    return LieElem(a.n, a.char, coeffs)


def adjoint_apply(x: LieElem, f: Poly) -> Poly:
    """The derivation of the polynomial ring extending ``v -> [x, v]``."""
    if x.char != f.char:
        raise ValueError("characteristic mismatch")
    char = f.char
    images: dict[Var, Poly] = {}
    for var in f.variables():
        img: dict[tuple[tuple[int, int, int], ...], Scalar] = {}
        for vx, cx in x.coeffs.items():
            for v, sign in bracket_vars(vx, var):
                key = ((v[0], v[1], 1),)
                s = img.get(key, Scalar.zero(char)) + cx * sign
                if s:
                    img[key] = s
                else:
                    img.pop(key, None)
        images[var] = Poly(char, img)
    result = Poly.zero(char)
    for m, c in f.terms.items():
        for idx, (r, cc, e) in enumerate(m):
            img = images[(r, cc)]
            if img.is_zero():
                continue
            coeff = c * e
            if not coeff:
                continue
            rest = m[:idx] + ((r, cc, e - 1),) * (e > 1) + m[idx + 1 :]
            result = result + img * Poly(char, {rest: coeff})
    return result


def poisson(f: Poly, g: Poly) -> Poly:
    """Poisson bracket on S(gl_n), the biderivation extending the bracket.

    ``poisson(x, f) == adjoint_apply(x, f)`` for degree-one ``x``.
    """
    f._check(g)
    char = f.char
    result = Poly.zero(char)
    fvars = f.variables()
    gvars = g.variables()
    partials_f = {v: f.partial(v) for v in fvars}
    partials_g = {w: g.partial(w) for w in gvars}
    for v in fvars:
        df = partials_f[v]
        if df.is_zero():
            continue
        for w in gvars:
            pairs = bracket_vars(v, w)
            if not pairs:
                continue
            dg = partials_g[w]
            if dg.is_zero():
                continue
            lin = Poly(
                char,
                {
                    ((u[0], u[1], 1),): Scalar.of(sign, char)
                    for u, sign in pairs
                },
            )
            result = result + df * dg * lin
    return result


@dataclass(frozen=True)
class Weight:
    """A weight of the diagonal action.

    For the gl Borel the values are over ``e(s,s)``, s = 1..n; for the
    sl Borel over ``eps(i)``, i = 1..n-1.
    """

    algebra: Literal["g", "b"]
    values: tuple[Scalar, ...]

    def __add__(self, other: "Weight") -> "Weight":
        if self.algebra != other.algebra or len(self.values) != len(other.values):
            raise ValueError("incompatible weights")
        return Weight(
            self.algebra, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def is_zero(self) -> bool:
        return not any(self.values)

    @staticmethod
    def zero(algebra: str, size: int, char: int) -> "Weight":
        return Weight(algebra, tuple(Scalar.zero(char) for _ in range(size)))


def _eigenvalue(g: Poly, f: Poly) -> Scalar:
    """The scalar with g = c*f, or raise NotSemiInvariant."""
    if g.is_zero():
        return Scalar.zero(f.char)
    lm, lc = f.leading_term()
    gc = g.terms.get(lm)
    if gc is None:
        raise NotSemiInvariant("eigen equation fails: image has foreign support")
    lam = gc / lc
    if g != f.scale(lam):
        raise NotSemiInvariant("eigen equation fails: image is not a multiple")
    return lam


def weight_of(f: Poly, n: int, algebra: Literal["g", "b"] = "g") -> Weight:
    """Weight of a semi-invariant under the chosen Borel, or raise.

    Checks invariance under every strictly-upper basis element and the
    simultaneous eigen equation on the diagonal part.  Weight zero iff the
    argument is an invariant.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no weight")
    char = f.char
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if adjoint_apply(LieElem.unit(n, i, j, char), f):
                raise NotSemiInvariant(
                    f"not killed by the nilpotent part: e({i},{j})"
                )
    values = []
    if algebra == "g":
        diag = [LieElem.unit(n, s, s, char) for s in range(1, n + 1)]
    else:
        diag = [LieElem.eps(n, i, char) for i in range(1, n)]
    for x in diag:
        values.append(_eigenvalue(adjoint_apply(x, f), f))
    return Weight(algebra, tuple(values))


# -- ordered bases with integer structure constants ---------------------


class LieBasis:
    """An ordered basis with an integer structure-constant table.

    Used for PBW normal forms and for the oracle's coordinate rings; the
    constants are integers (they reduce mod p uniformly), so one table
    serves every characteristic.

    Basis order: the gl Borel lists ``e(i,j)`` row-major over i <= j; the
    sl Borel lists ``eps(1)..eps(n-1)`` first, then ``e(i,j)`` row-major
    over i < j.  In polynomial coordinates letter ``eps(i)`` is written on
    position ``(i,i)``.
    """

    def __init__(self, algebra: Literal["g", "b"], n: int):
        if algebra not in ("g", "b"):
            raise ValueError(f"unknown algebra tag {algebra!r}")
        self.algebra = algebra
        self.n = n
        if algebra == "g":
            self.labels: tuple[tuple, ...] = tuple(
                ("e", i, j) for i in range(1, n + 1) for j in range(i, n + 1)
            )
        else:
            self.labels = tuple(("eps", i) for i in range(1, n)) + tuple(
                ("e", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
            )
        self.index = {lab: k for k, lab in enumerate(self.labels)}
        self._bracket_cache: dict[tuple[int, int], tuple[tuple[int, int], ...]] = {}
        self.nf_cache: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}

    def __len__(self) -> int:
        return len(self.labels)

    def var_of(self, idx: int) -> Var:
        lab = self.labels[idx]
        return (lab[1], lab[1]) if lab[0] == "eps" else (lab[1], lab[2])

    def elem_of(self, idx: int, char: int) -> LieElem:
        lab = self.labels[idx]
        if lab[0] == "eps":
            return LieElem.eps(self.n, lab[1], char)
        return LieElem.unit(self.n, lab[1], lab[2], char)

    def _expand(self, combo: dict[Var, int]) -> tuple[tuple[int, int], ...]:
        """Rewrite a gl combination in this basis; integer coefficients."""
        out: dict[int, int] = {}
        if self.algebra == "b":
            diag = {v: c for v, c in combo.items() if v[0] == v[1]}
            total = sum(diag.values())
            if total != 0:
                raise ValueError("bracket left the trace-zero subalgebra")
            for (i, _), c in diag.items():
                if i == self.n:
                    continue
                if c:
                    out[self.index[("eps", i)]] = c
        for (i, j), c in combo.items():
            if i == j:
                if self.algebra == "g":
                    if c:
                        out[self.index[("e", i, j)]] = c
                continue
            if c:
                out[self.index[("e", i, j)]] = c
        return tuple(sorted(out.items()))

    def _label_vars(self, lab: tuple) -> list[tuple[Var, int]]:
        if lab[0] == "eps":
            i = lab[1]
            return [((i, i), 1), ((self.n, self.n), -1)]
        return [((lab[1], lab[2]), 1)]

    def bracket(self, a: int, b: int) -> tuple[tuple[int, int], ...]:
        """[basis_a, basis_b] expanded in the basis, as (index, int) pairs."""
        key = (a, b)
        got = self._bracket_cache.get(key)
        if got is not None:
            return got
        combo: dict[Var, int] = {}
        for va, ca in self._label_vars(self.labels[a]):
            for vb, cb in self._label_vars(self.labels[b]):
                for v, sign in bracket_vars(va, vb):
                    combo[v] = combo.get(v, 0) + ca * cb * sign
        result = self._expand({v: c for v, c in combo.items() if c})
        self._bracket_cache[key] = result
        return result

    def diag_weight(self, idx: int) -> tuple[int, ...]:
        """Integer eigenvalues of the commuting diagonal family on a letter.

        For the gl Borel the family is ``ad e(s,s)``; for the sl Borel it
        is ``ad eps(i)``.  Diagonal/Cartan letters have weight zero.
        """
        lab = self.labels[idx]
        if self.algebra == "g":
            if lab[1] == lab[2]:
                return (0,) * self.n
            _, a, b = lab
            return tuple(
                (1 if s == a else 0) - (1 if s == b else 0)
                for s in range(1, self.n + 1)
            )
        if lab[0] == "eps":
            return (0,) * (self.n - 1)
        _, a, b = lab
        return tuple(
            (1 if i == a else 0) - (1 if i == b else 0) + (1 if b == self.n else 0)
            for i in range(1, self.n)
        )


@lru_cache(maxsize=None)
def lie_basis(algebra: Literal["g", "b"], n: int) -> LieBasis:
    """Shared basis instances; their rewrite caches persist per (algebra, n)."""
    return LieBasis(algebra, n)


def weight_of_pattern(n: int, k: int, char: int) -> Weight:
    """The +1 / 0 / -1 diagonal weight carried by the k-th corner minor."""
    vals = []
    for s in range(1, n + 1):
        if s <= k:
            vals.append(Scalar.one(char))
        elif s >= n - k + 1:
            vals.append(-Scalar.one(char))
        else:
            vals.append(Scalar.zero(char))
    return Weight("g", tuple(vals))
