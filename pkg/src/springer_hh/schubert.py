"""Cohomology of G/B as the coinvariant algebra, with the Schubert basis.

Polynomials live in Q[x_1, ..., x_r] where x_i is the fundamental weight
omega_i.  Schubert representatives come from the top class
``prod(alpha) / |W|`` by divided differences, and a polynomial of degree l
is expanded in the Schubert basis by ``c_w = d_w(f)`` for length(w) = l,
where ``d_w = d_{i1} o ... o d_{il}`` for the reduced word (i1, ..., il).
No reduction modulo the invariant ideal is ever needed.

Degree convention: X_w has cohomological degree 2 * length(w); the
Hodge-type index ``H^i(Omega^i)`` is i = length(w).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .rootdata import RootSystem, WeylElement, WeylGroup, weyl_group

MIXED = "mixed"


class CoinvariantPoly:
    """Polynomial in the fundamental-weight variables with Fraction coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = Fraction(c)

    @classmethod
    def constant(cls, nvars: int, c) -> CoinvariantPoly:
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def linear(cls, coeffs: Iterable[int]) -> CoinvariantPoly:
        """The linear form sum c_i x_i, e.g. a weight in fundamental coordinates."""
        coeffs = tuple(coeffs)
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): Fraction(c) for i, c in enumerate(coeffs) if c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> CoinvariantPoly:
        return cls(nvars, {tuple(int(i == j) for j in range(nvars)): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | str | None:
        """Homogeneous degree, MIXED, or None for the zero polynomial."""
        degs = {sum(e) for e in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            return MIXED
        return degs.pop()

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def __add__(self, other: CoinvariantPoly) -> CoinvariantPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CoinvariantPoly(self.nvars, out)

    def __neg__(self) -> CoinvariantPoly:
        return CoinvariantPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: CoinvariantPoly) -> CoinvariantPoly:
        return self + (-other)

    def __mul__(self, other) -> CoinvariantPoly:
        if not isinstance(other, CoinvariantPoly):
            c = Fraction(other)
            return CoinvariantPoly(self.nvars, {e: v * c for e, v in self.terms.items()})
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CoinvariantPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CoinvariantPoly:
        out = CoinvariantPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CoinvariantPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == CoinvariantPoly.constant(self.nvars, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}" for i, k in enumerate(e) if k)
            c = self.terms[e]
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def root_form(alpha: Iterable[int]) -> CoinvariantPoly:
    return CoinvariantPoly.linear(alpha)


def reflect_poly(rs: RootSystem, i: int, f: CoinvariantPoly) -> CoinvariantPoly:
    """s_i acting on polynomials: x_i -> x_i - alpha_i, other variables fixed."""
    n = rs.rank
    image = _reflected_variable(rs, i)
    out = CoinvariantPoly(n)
    for e, c in f.terms.items():
        rest = list(e)
        rest[i] = 0
        out = out + CoinvariantPoly(n, {tuple(rest): c}) * image ** e[i]
    return out


def _reflected_variable(rs: RootSystem, i: int) -> CoinvariantPoly:
    return CoinvariantPoly.variable(rs.rank, i) - root_form(rs.cartan_matrix[i])


@lru_cache(maxsize=None)
def _dd_power(rs: RootSystem, i: int, k: int) -> CoinvariantPoly:
    # d_i(x_i^k) = sum_{t<k} x_i^(k-1-t) (s_i x_i)^t, from x^k - y^k = (x - y) * sum x^a y^b
    n = rs.rank
    x = CoinvariantPoly.variable(n, i)
    y = _reflected_variable(rs, i)
    out = CoinvariantPoly(n)
    for t in range(k):
        out = out + x ** (k - 1 - t) * y**t
    return out


def divided_difference(i: int, f: CoinvariantPoly, rs: RootSystem) -> CoinvariantPoly:
    """d_i f = (f - s_i f) / alpha_i, computed without polynomial division.

    Monomials factor as x_i^k * m with s_i m = m, and d_i(x_i^k m) = d_i(x_i^k) m.
    """
    n = rs.rank
    out: dict[tuple[int, ...], Fraction] = {}
    for e, c in f.terms.items():
        k = e[i]
        if k == 0:
            continue
        for e2, c2 in _dd_power(rs, i, k).terms.items():
            key = tuple(a + (b if j != i else 0) for j, (a, b) in enumerate(zip(e2, e)))
            out[key] = out.get(key, 0) + c * c2
    return CoinvariantPoly(n, out)


def apply_word(word: Iterable[int], f: CoinvariantPoly, rs: RootSystem) -> CoinvariantPoly:
    """d_{i1} o ... o d_{il} f; the last letter acts first."""
    for i in reversed(tuple(word)):
        if f.is_zero():
            break
        f = divided_difference(i, f, rs)
    return f


@dataclass
class SchubertVector:
    """Element of H(G/B) in the Schubert basis."""

    coeffs: dict[WeylElement, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.coeffs = {w: Fraction(c) for w, c in self.coeffs.items() if c}

    @property
    def degree(self) -> int | str | None:
        degs = {2 * w.length for w in self.coeffs}
        if not degs:
            return None
        return degs.pop() if len(degs) == 1 else MIXED

    def __add__(self, other: SchubertVector) -> SchubertVector:
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return SchubertVector(out)

    def scaled(self, c) -> SchubertVector:
        return SchubertVector({w: v * c for w, v in self.coeffs.items()})

    def __getitem__(self, w: WeylElement) -> Fraction:
        return self.coeffs.get(w, Fraction(0))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SchubertVector) and self.coeffs == other.coeffs

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())


class SchubertCalculus:
    """Schubert representatives and structure constants for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.group: WeylGroup = weyl_group(rs)
        self._reps: dict[WeylElement, CoinvariantPoly] = {}
        self._products: dict[tuple[WeylElement, WeylElement], SchubertVector] = {}
        self._build_representatives()

    def _build_representatives(self) -> None:
        g, rs = self.group, self.rs
        top = CoinvariantPoly.constant(rs.rank, Fraction(1, len(g)))
        for alpha in rs.positive_roots:
            top = top * root_form(alpha)
        self._reps[g.longest] = top
        for w in sorted(g.elements, key=lambda v: -v.length):
            if w in self._reps:
                continue
            # some s_i lengthens w; then P_w = d_i P_{w s_i}
            for i in range(rs.rank):
                ws = g.multiply(w, g.simple(i))
                if ws.length == w.length + 1:
                    self._reps[w] = divided_difference(i, self._reps[ws], rs)
                    break

    def representative(self, w: WeylElement) -> CoinvariantPoly:
        return self._reps[w]

    def expand(self, f: CoinvariantPoly) -> SchubertVector:
        """Schubert-basis coefficients of a homogeneous polynomial, modulo invariants."""
        deg = f.degree
        if deg is None:
            return SchubertVector()
        if deg == MIXED:
            raise ValueError("expand() needs a homogeneous polynomial")
        out = {}
        memo: dict[tuple[int, ...], CoinvariantPoly] = {(): f}

        def reduce_suffix(word: tuple[int, ...]) -> CoinvariantPoly:
            # apply d over a suffix of the word, sharing prefixes of the application order
            if word in memo:
                return memo[word]
            g = divided_difference(word[0], reduce_suffix(word[1:]), self.rs)
            memo[word] = g
            return g

        for w in self.group.by_length(deg):
            c = reduce_suffix(w.word).constant_term()
            if c:
                out[w] = c
        return SchubertVector(out)

    def product(self, u: WeylElement, v: WeylElement) -> SchubertVector:
        key = (u, v) if u.sort_key() <= v.sort_key() else (v, u)
        if key not in self._products:
            if u.length + v.length > self.rs.num_positive_roots:
                self._products[key] = SchubertVector()
            else:
                self._products[key] = self.expand(self._reps[u] * self._reps[v])
        return self._products[key]

    def multiply(self, x: SchubertVector, y: SchubertVector) -> SchubertVector:
        out = SchubertVector()
        for u, a in x.coeffs.items():
            for v, b in y.coeffs.items():
                out = out + self.product(u, v).scaled(a * b)
        return out


_CALCULI: dict[RootSystem, SchubertCalculus] = {}


def schubert_calculus(rs: RootSystem) -> SchubertCalculus:
    calc = _CALCULI.get(rs)
    if calc is None:
        calc = _CALCULI[rs] = SchubertCalculus(rs)
    return calc


def schubert_representative(w: WeylElement, rs: RootSystem) -> CoinvariantPoly:
    return schubert_calculus(rs).representative(w)


def schubert_product(u: WeylElement, v: WeylElement, rs: RootSystem) -> SchubertVector:
    return schubert_calculus(rs).product(u, v)


def schubert_class(w: WeylElement) -> SchubertVector:
    return SchubertVector({w: Fraction(1)})


def poincare_polynomial(rs: RootSystem) -> list[int]:
    """Coefficients of the Poincare polynomial of G/B in t (index = power of t)."""
    g = weyl_group(rs)
    coeffs = [0] * (2 * rs.num_positive_roots + 1)
    for w in g:
        coeffs[2 * w.length] += 1
    return coeffs


def augmentation(x: SchubertVector) -> Fraction:
    """Coefficient of the unit class X_e."""
    for w, c in x.coeffs.items():
        if w.length == 0:
            return c
    return Fraction(0)
