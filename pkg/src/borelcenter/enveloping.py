"""Enveloping algebras with PBW normal forms.

Elements are sparse maps from nondecreasing words over an ordered basis
(see ``liealg.LieBasis``) to nonzero scalars.  Products rewrite adjacent
out-of-order letters ``x*y -> y*x + [x,y]`` until every word is sorted;
the rewrite is confluent, and the cache of word rewrites lives on the
shared basis object with integer coefficients, so one table serves every
characteristic.

The filtration degree of an element is its longest word; ``gr_map`` reads
the top layer as a commutative polynomial.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import json

from .exactalg import Mono, Poly, Scalar, is_prime, mono_mul
from .invariants import (
    NMustBeInvertible,
    RelationResult,
    carry_split,
    flank_diagonal_sl,
    half_index,
    mid_index,
)
from .liealg import LieBasis, Weight, lie_basis

Word = tuple[int, ...]


class NotSemiCentral(ValueError):
    """Raised when an element fails the semi-central eigen equation."""


def _normal_form(basis: LieBasis, word: Word) -> dict[Word, int]:
    """Rewrites of one word into sorted words, with integer coefficients."""
    cache = basis.nf_cache
    got = cache.get(word)
    if got is not None:
        return got
    pos = -1
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            pos = i
            break
    if pos < 0:
        result = {word: 1}
        cache[word] = result
        return result
    a, b = word[pos], word[pos + 1]
    out: dict[Word, int] = {}
    for w, c in _normal_form(basis, word[:pos] + (b, a) + word[pos + 2 :]).items():
        out[w] = out.get(w, 0) + c
    for idx, coeff in basis.bracket(a, b):
        mid = word[:pos] + (idx,) + word[pos + 2 :]
        for w, c in _normal_form(basis, mid).items():
            s = out.get(w, 0) + coeff * c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    out = {w: c for w, c in out.items() if c}
    cache[word] = out
    return out


class EnvElem:
    """An element of the enveloping algebra in PBW normal form."""

    __slots__ = ("basis", "char", "terms")

    def __init__(
        self,
        basis: LieBasis,
        char: int,
        terms: Mapping[Word, Scalar] | None = None,
    ):
        self.basis = basis
        self.char = char
        self.terms: dict[Word, Scalar] = dict(terms) if terms else {}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(basis: LieBasis, char: int) -> "EnvElem":
        return EnvElem(basis, char)

    @staticmethod
    def one(basis: LieBasis, char: int) -> "EnvElem":
        return EnvElem(basis, char, {(): Scalar.one(char)})

    @staticmethod
    def const(value, basis: LieBasis, char: int) -> "EnvElem":
        s = Scalar.of(value, char)
        return EnvElem(basis, char, {(): s} if s else {})

    @staticmethod
    def letter(basis: LieBasis, idx: int, char: int) -> "EnvElem":
        return EnvElem(basis, char, {(idx,): Scalar.one(char)})

    @staticmethod
    def from_word(basis: LieBasis, word: Iterable[int], char: int, coeff=1) -> "EnvElem":
        """Normalize an arbitrary word times a coefficient."""
        c = Scalar.of(coeff, char)
        out: dict[Word, Scalar] = {}
        for w, f in _normal_form(basis, tuple(word)).items():
            s = c * f
            if s:
                out[w] = s
        return EnvElem(basis, char, out)

    # -- algebra ----------------------------------------------------------

    def _check(self, other: "EnvElem") -> None:
        if self.basis is not other.basis:
            raise ValueError("algebra mismatch")
        if self.char != other.char:
            raise ValueError("characteristic mismatch")

    def _coerce(self, other) -> "EnvElem":
        if isinstance(other, EnvElem):
            self._check(other)
            return other
        return EnvElem.const(other, self.basis, self.char)

    def __add__(self, other) -> "EnvElem":
        other = self._coerce(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w)
            s = c if acc is None else acc + c
            if s:
                terms[w] = s
            elif acc is not None:
                del terms[w]
        return EnvElem(self.basis, self.char, terms)

    def __sub__(self, other) -> "EnvElem":
        return self + (-self._coerce(other))

    def __neg__(self) -> "EnvElem":
        return EnvElem(self.basis, self.char, {w: -c for w, c in self.terms.items()})

    def scale(self, value) -> "EnvElem":
        s = value if isinstance(value, Scalar) else Scalar.of(value, self.char)
        if not s:
            return EnvElem(self.basis, self.char)
        return EnvElem(self.basis, self.char, {w: c * s for w, c in self.terms.items()})

    def __mul__(self, other) -> "EnvElem":
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        other = self._coerce(other)
        terms: dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                c = c1 * c2
                for w, f in _normal_form(self.basis, w1 + w2).items():
                    s = c * f
                    acc = terms.get(w)
                    s = s if acc is None else acc + s
                    if s:
                        terms[w] = s
                    elif acc is not None:
                        del terms[w]
        return EnvElem(self.basis, self.char, terms)

    def __rmul__(self, other) -> "EnvElem":
        return self.scale(other)

    def __pow__(self, m: int) -> "EnvElem":
        if m < 0:
            raise ValueError("negative power")
        result = EnvElem.one(self.basis, self.char)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Scalar)):
            other = EnvElem.const(other, self.basis, self.char)
        if not isinstance(other, EnvElem):
            return NotImplemented
        return (
            self.basis is other.basis
            and self.char == other.char
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def filtration_degree(self) -> int:
        if not self.terms:
            return -1
        return max(len(w) for w in self.terms)

    def commutator(self, other: "EnvElem") -> "EnvElem":
        return self * other - other * self

    def sorted_terms(self) -> list[tuple[Word, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self) -> str:
        if not self.terms:
            return "EnvElem(0)"
        names = []
        for w, c in self.sorted_terms()[:8]:
            word = "*".join(str(self.basis.labels[i]) for i in w) or "1"
            names.append(f"{c.to_str()}*{word}")
        more = "..." if len(self.terms) > 8 else ""
        return f"EnvElem({' + '.join(names)}{more})"


def gr_map(u: EnvElem) -> Poly:
    """Top filtration layer read as a commutative polynomial.

    Each sorted word maps to the product of its letters' positions;
    multiplicative whenever the top layers do not cancel, and compatible
    with p-th powers.
    """
    if u.is_zero():
        raise ValueError("the zero element has no grading")
    top = u.filtration_degree()
    terms: dict[Mono, Scalar] = {}
    for w, c in u.terms.items():
        if len(w) != top:
            continue
        mono: Mono = ()
        for idx in w:
            r, ccol = u.basis.var_of(idx)
            mono = mono_mul(mono, ((r, ccol, 1),))
        acc = terms.get(mono)
        s = c if acc is None else acc + c
        if s:
            terms[mono] = s
        elif acc is not None:
            del terms[mono]
    return Poly(u.char, terms)


def is_central(u: EnvElem) -> bool:
    """Exact commutator test against every basis letter."""
    if u.is_zero():
        raise ValueError("centrality of the zero element is vacuous")
    for idx in range(len(u.basis)):
        if EnvElem.letter(u.basis, idx, u.char).commutator(u):
            return False
    return True


def semicentral_weight(u: EnvElem) -> Weight:
    """Weight of a semi-central element, or raise NotSemiCentral.

    The eigen equation ``[x, u] = weight(x) * u`` must hold for every
    basis letter; weight zero iff the element is central.
    """
    if u.is_zero():
        raise ValueError("the zero element has no weight")
    basis = u.basis
    char = u.char
    if basis.algebra == "g":
        diag = [basis.index[("e", s, s)] for s in range(1, basis.n + 1)]
    else:
        diag = [basis.index[("eps", i)] for i in range(1, basis.n)]
    diag_set = set(diag)
    values: dict[int, Scalar] = {}
    ref_word, ref_coeff = min(
        u.terms.items(), key=lambda kv: (len(kv[0]), kv[0])
    )
    for idx in range(len(basis)):
        comm = EnvElem.letter(basis, idx, char).commutator(u)
        if comm.is_zero():
            lam = Scalar.zero(char)
        else:
            got = comm.terms.get(ref_word)
            if got is None:
                raise NotSemiCentral(
                    f"eigen equation fails on {basis.labels[idx]}"
                )
            lam = got / ref_coeff
            if comm != u.scale(lam):
                raise NotSemiCentral(
                    f"eigen equation fails on {basis.labels[idx]}"
                )
        if idx in diag_set:
            values[idx] = lam
        elif lam:
            raise NotSemiCentral(
                f"nonzero weight on non-Cartan letter {basis.labels[idx]}"
            )
    return Weight(basis.algebra, tuple(values[i] for i in diag))


# -- lifted generators ---------------------------------------------------


def env_det(basis: LieBasis, entries: list[list[EnvElem]], char: int) -> EnvElem:
    """Leibniz determinant with factors multiplied in row order."""
    from itertools import permutations

    k = len(entries)
    acc = EnvElem.zero(basis, char)
    for perm in permutations(range(k)):
        sign = 1
        for a in range(k):
            for b in range(a + 1, k):
                if perm[a] > perm[b]:
                    sign = -sign
        prod = EnvElem.const(sign, basis, char)
        for r in range(k):
            prod = prod * entries[r][perm[r]]
        acc = acc + prod
    return acc


def _unit(basis: LieBasis, i: int, j: int, char: int) -> EnvElem:
    return EnvElem.letter(basis, basis.index[("e", i, j)], char)


def trace_u(basis: LieBasis, char: int) -> EnvElem:
    """Lift of the trace element; only defined on the gl Borel."""
    if basis.algebra != "g":
        raise ValueError("the trace element lives in the gl Borel")
    out = EnvElem.zero(basis, char)
    for i in range(1, basis.n + 1):
        out = out + _unit(basis, i, i, char)
    return out


def corner_minor_u(basis: LieBasis, k: int, char: int) -> EnvElem:
    n = basis.n
    if not 1 <= k <= half_index(n):
        raise ValueError(f"corner index k={k} out of range for n={n}")
    entries = [
        [_unit(basis, r, n - k + c, char) for c in range(1, k + 1)]
        for r in range(1, k + 1)
    ]
    return env_det(basis, entries, char)


def row_replaced_minor_u(
    basis: LieBasis, k: int, i: int, j: int, char: int
) -> EnvElem:
    n = basis.n
    entries = [
        [_unit(basis, r, n - k + c, char) for c in range(1, k + 1)]
        for r in range(1, k + 1)
    ]
    entries[i - 1] = [_unit(basis, j, n - k + c, char) for c in range(1, k + 1)]
    return env_det(basis, entries, char)


def minor_mix_u(basis: LieBasis, k: int, char: int) -> EnvElem:
    n = basis.n
    out = EnvElem.zero(basis, char)
    for i in range(1, k + 1):
        for j in range(k + 1, n - k + 1):
            out = out + _unit(basis, i, j, char) * row_replaced_minor_u(
                basis, k, i, j, char
            )
    return out


def flank_diagonal_u(basis: LieBasis, k: int, char: int) -> EnvElem:
    if basis.algebra != "g":
        raise ValueError("the flank diagonal lives in the gl Borel")
    out = EnvElem.zero(basis, char)
    for i in range(1, k + 1):
        out = out + _unit(basis, i, i, char)
        out = out + _unit(basis, basis.n - i + 1, basis.n - i + 1, char)
    return out


def augmented_minor_u(basis: LieBasis, k: int, char: int) -> EnvElem:
    n = basis.n
    if n % 2 == 0 and k == n // 2:
        return EnvElem.zero(basis, char)
    return corner_minor_u(basis, k, char) * flank_diagonal_u(
        basis, k, char
    ) + minor_mix_u(basis, k, char)


def center_product_u(basis: LieBasis, k: int, l: int, p: int) -> EnvElem:
    """The enveloping center generator corner^(p-l) * augmented^l."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if not (1 <= k <= mid_index(basis.n) and 0 <= l <= p - 1):
        raise ValueError(f"indices (k={k}, l={l}) out of range")
    return corner_minor_u(basis, k, p) ** (p - l) * augmented_minor_u(
        basis, k, p
    ) ** l


def flank_diagonal_sl_u(basis: LieBasis, k: int, char: int) -> EnvElem:
    """Trace-zero flank diagonal written in the eps letters of the sl Borel."""
    if basis.algebra != "b":
        raise ValueError("expected the sl Borel basis")
    n = basis.n
    x0 = flank_diagonal_sl(n, k, char)
    out = EnvElem.zero(basis, char)
    for i in range(1, n):
        c = x0.coeffs.get((i, i))
        if c:
            out = out + EnvElem.letter(basis, basis.index[("eps", i)], char).scale(c)
    return out


def augmented_minor_sl_u(basis: LieBasis, k: int, char: int) -> EnvElem:
    if char and basis.n % char == 0:
        raise NMustBeInvertible(
            f"n={basis.n} is divisible by the characteristic {char}"
        )
    return corner_minor_u(basis, k, char) * flank_diagonal_sl_u(
        basis, k, char
    ) + minor_mix_u(basis, k, char)


def center_product_sl_u(basis: LieBasis, k: int, l: int, p: int) -> EnvElem:
    """The sl-side enveloping center generator; lies in U of the sl Borel."""
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if basis.n % p == 0:
        raise NMustBeInvertible(f"n={basis.n} is divisible by {p}")
    if not (1 <= k <= mid_index(basis.n) and 0 <= l <= p - 1):
        raise ValueError(f"indices (k={k}, l={l}) out of range")
    return corner_minor_u(basis, k, p) ** (p - l) * augmented_minor_sl_u(
        basis, k, p
    ) ** l


def p_center_generators(basis: LieBasis, p: int) -> list[EnvElem]:
    """The p-th power central family: x^p - x on Cartan letters, x^p off it."""
    if p <= 0:
        raise ValueError("the p-center needs positive characteristic")
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    out = []
    for idx, lab in enumerate(basis.labels):
        x = EnvElem.letter(basis, idx, p)
        cartan = lab[0] == "eps" or (lab[0] == "e" and lab[1] == lab[2])
        out.append(x**p - x if cartan else x**p)
    return out


def product_relation_u(n: int, k: int, i: int, j: int, p: int) -> RelationResult:
    """Check z(k,i)z(k,j) = z(k,r) * corner^(p(1-s)) * augmented^(ps) in U."""
    basis = lie_basis("g", n)
    s, r = carry_split(i, j, p)
    c = corner_minor_u(basis, k, p)
    m = augmented_minor_u(basis, k, p)
    z = lambda l: c ** (p - l) * m**l
    lhs = z(i) * z(j)
    rhs = z(r) * c ** (p * (1 - s)) * m ** (p * s)
    if lhs == rhs:
        return RelationResult(True)
    diff = lhs - rhs
    w = min(diff.terms, key=lambda word: (len(word), word))
    mono: Mono = ()
    for idx in w:
        r, ccol = basis.var_of(idx)
        mono = mono_mul(mono, ((r, ccol, 1),))
    return RelationResult(
        False,
        (mono, lhs.terms.get(w, Scalar.zero(p)), rhs.terms.get(w, Scalar.zero(p))),
    )


def lift_generator(gid, n: int, char: int) -> EnvElem:
    """Lift a catalog generator into the enveloping algebra.

    sl-flavored kinds land in U of the sl Borel, everything else in U of
    the gl Borel.
    """
    kind = gid.kind
    if kind in ("flank-diagonal-sl", "augmented-minor-sl", "center-product-sl"):
        basis = lie_basis("b", n)
        if kind == "flank-diagonal-sl":
            return flank_diagonal_sl_u(basis, gid.k, char)
        if kind == "augmented-minor-sl":
            return augmented_minor_sl_u(basis, gid.k, char)
        return center_product_sl_u(basis, gid.k, gid.l, char)
    basis = lie_basis("g", n)
    if kind == "trace":
        return trace_u(basis, char)
    if kind == "corner-minor":
        return corner_minor_u(basis, gid.k, char)
    if kind == "flank-diagonal":
        return flank_diagonal_u(basis, gid.k, char)
    if kind == "row-replaced-minor":
        return row_replaced_minor_u(basis, gid.k, gid.i, gid.j, char)
    if kind == "col-replaced-minor":
        raise ValueError("column-replaced minors leave the Borel; no lift")
    if kind == "minor-mix":
        return minor_mix_u(basis, gid.k, char)
    if kind == "augmented-minor":
        return augmented_minor_u(basis, gid.k, char)
    if kind == "center-product":
        return center_product_u(basis, gid.k, gid.l, char)
    raise ValueError(f"unknown generator kind {kind!r}")


# -- serialization -------------------------------------------------------


def env_to_obj(u: EnvElem) -> dict:
    words = []
    for w, c in u.sorted_terms():
        letters = []
        for idx in w:
            r, ccol = u.basis.var_of(idx)
            letters.append([r, ccol])
        words.append({"coeff": c.to_str(), "word": letters})
    return {
        "algebra": u.basis.algebra,
        "n": u.basis.n,
        "char": u.char,
        "terms": words,
    }


def env_from_obj(obj: dict) -> EnvElem:
    basis = lie_basis(obj["algebra"], obj["n"])
    char = obj["char"]
    terms: dict[Word, Scalar] = {}
    for t in obj["terms"]:
        word = []
        for r, c in t["word"]:
            if basis.algebra == "b" and r == c:
                word.append(basis.index[("eps", r)])
            else:
                word.append(basis.index[("e", r, c)])
        s = Scalar.from_str(t["coeff"], char)
        if s:
            terms[tuple(word)] = s
    return EnvElem(basis, char, terms)


def env_dumps(u: EnvElem) -> str:
    return json.dumps(env_to_obj(u), sort_keys=True, separators=(",", ":"))


def env_loads(s: str) -> EnvElem:
    return env_from_obj(json.loads(s))
