"""The commutative algebra (H(G/B) + H(G/B)) / k(omega, -1) of dimension 2|W| - 1.

Multiplication on pairs is ``(h1, h2)(h1', h2') = (h1 h1', eps(h1) h2' + eps(h1') h2)``
with eps the augmentation.  In the quotient the class (0, X_e) equals
(X_{w0}, 0); canonical forms never carry a (0, X_e) coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import ParameterError
from .linalg import row_echelon
from .rootdata import RootSystem, WeylElement, weyl_group
from .schubert import SchubertVector, augmentation, schubert_calculus

FIRST, SECOND = 0, 1


@dataclass
class FrakHElement:
    rs: RootSystem
    first: dict[WeylElement, Fraction] = field(default_factory=dict)
    second: dict[WeylElement, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        g = weyl_group(self.rs)
        first = {w: Fraction(c) for w, c in self.first.items() if c}
        second = {w: Fraction(c) for w, c in self.second.items() if c}
        # (0, X_e) == (X_{w0}, 0) modulo (omega, -1)
        c = second.pop(g.identity, 0)
        if c:
            first[g.longest] = first.get(g.longest, 0) + c
            if not first[g.longest]:
                del first[g.longest]
        self.first, self.second = first, second

    def __add__(self, other: FrakHElement) -> FrakHElement:
        _same_system(self, other)
        f = dict(self.first)
        for w, c in other.first.items():
            f[w] = f.get(w, 0) + c
        s = dict(self.second)
        for w, c in other.second.items():
            s[w] = s.get(w, 0) + c
        return FrakHElement(self.rs, f, s)

    def scaled(self, c) -> FrakHElement:
        return FrakHElement(
            self.rs,
            {w: v * c for w, v in self.first.items()},
            {w: v * c for w, v in self.second.items()},
        )

    def __sub__(self, other: FrakHElement) -> FrakHElement:
        return self + other.scaled(-1)

    def __mul__(self, other: FrakHElement) -> FrakHElement:
        return frakh_multiply(self, other)

    def is_zero(self) -> bool:
        return not self.first and not self.second

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FrakHElement):
            return NotImplemented
        return self.rs == other.rs and self.first == other.first and self.second == other.second

    def augmentation(self) -> Fraction:
        return augmentation(SchubertVector(self.first))


def _same_system(x: FrakHElement, y: FrakHElement) -> None:
    if x.rs != y.rs:
        raise ParameterError(f"elements of different algebras ({x.rs.name} vs {y.rs.name})")


def frakh_multiply(x: FrakHElement, y: FrakHElement) -> FrakHElement:
    _same_system(x, y)
    calc = schubert_calculus(x.rs)
    h1, h2 = SchubertVector(x.first), SchubertVector(x.second)
    k1, k2 = SchubertVector(y.first), SchubertVector(y.second)
    first = calc.multiply(h1, k1)
    second = k2.scaled(augmentation(h1)) + h2.scaled(augmentation(k1))
    return FrakHElement(x.rs, first.coeffs, second.coeffs)


def frakh_dimension(rs: RootSystem) -> int:
    return 2 * len(weyl_group(rs)) - 1


def basis_elements(rs: RootSystem) -> list[tuple[int, WeylElement]]:
    """(copy, w) labels: all of the first copy, then the second copy without X_e.

    Each copy is ordered by (length, word).
    """
    g = weyl_group(rs)
    return [(FIRST, w) for w in g] + [(SECOND, w) for w in g if w.length > 0]


def basis_vector(rs: RootSystem, label: tuple[int, WeylElement]) -> FrakHElement:
    copy, w = label
    if copy == FIRST:
        return FrakHElement(rs, {w: 1})
    return FrakHElement(rs, {}, {w: 1})


def unit(rs: RootSystem) -> FrakHElement:
    return FrakHElement(rs, {weyl_group(rs).identity: 1})


def omega_relation(rs: RootSystem) -> tuple[dict, dict]:
    """Raw (first, second) coefficient maps of (omega, -1), before canonicalisation."""
    g = weyl_group(rs)
    return {g.longest: Fraction(1)}, {g.identity: Fraction(-1)}


@dataclass
class FrakHTable:
    rs: RootSystem
    basis: list[tuple[int, WeylElement]]
    products: list[list[dict[int, Fraction]]]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def element(self, coords: dict[int, Fraction]) -> FrakHElement:
        out = FrakHElement(self.rs)
        for idx, c in coords.items():
            out = out + basis_vector(self.rs, self.basis[idx]).scaled(c)
        return out

    def to_json(self) -> dict:
        return {
            "type": self.rs.name,
            "dimension": self.dimension,
            "basis": [basis_label(b) for b in self.basis],
            "products": [
                [[[k, _num(v)] for k, v in sorted(cell.items())] for cell in row]
                for row in self.products
            ],
        }


def basis_label(label: tuple[int, WeylElement]) -> str:
    copy, w = label
    return f"(X_{w.label()},0)" if copy == FIRST else f"(0,X_{w.label()})"


def _num(c: Fraction):
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def coordinates(rs: RootSystem, x: FrakHElement, basis=None) -> dict[int, Fraction]:
    basis = basis or basis_elements(rs)
    index = {b: i for i, b in enumerate(basis)}
    out = {index[(FIRST, w)]: c for w, c in x.first.items()}
    out.update({index[(SECOND, w)]: c for w, c in x.second.items()})
    return out


_TABLES: dict[RootSystem, FrakHTable] = {}


def build_frakh(rs: RootSystem) -> FrakHTable:
    """Full structure-constant table on the canonical basis (cached per system)."""
    table = _TABLES.get(rs)
    if table is not None:
        return table
    basis = basis_elements(rs)
    vecs = [basis_vector(rs, b) for b in basis]
    n = len(basis)
    products: list[list[dict[int, Fraction]]] = [[{} for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            coords = coordinates(rs, frakh_multiply(vecs[i], vecs[j]), basis)
            products[i][j] = coords
            products[j][i] = coords
    table = FrakHTable(rs, basis, products)
    _TABLES[rs] = table
    return table


# -- algebra laws ---------------------------------------------------------------


@dataclass
class LawResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class NilradicalReport:
    rs: RootSystem
    laws: list[LawResult]

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def __iter__(self) -> Iterator[LawResult]:
        return iter(self.laws)


def _mul_coords(table: FrakHTable, x: dict[int, Fraction], y: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in table.products[i][j].items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def second_copy_image(table: FrakHTable) -> list[int]:
    """Basis indices spanning the image of the second copy: (0, X_w), w != e, and (X_{w0}, 0)."""
    g = weyl_group(table.rs)
    return [
        i
        for i, (copy, w) in enumerate(table.basis)
        if copy == SECOND or w == g.longest
    ]


def nilradical_annihilation_check(rs: RootSystem) -> NilradicalReport:
    """Check the maximal ideal, annihilation and zero-multiplication laws on the table."""
    table = build_frakh(rs)
    n = table.dimension
    unit_idx = table.basis.index((FIRST, weyl_group(rs).identity))
    m_idx = [i for i in range(n) if i != unit_idx]
    laws = []

    # (a) m is an ideal, the complement of the unit, and nilpotent (so every element is).
    witness = None
    for i in range(n):
        for j in m_idx:
            if table.products[i][j].get(unit_idx):
                witness = f"{basis_label(table.basis[i])}*{basis_label(table.basis[j])} leaves m"
                break
        if witness:
            break
    if witness is None:
        power = [{i: Fraction(1)} for i in m_idx]
        steps = 0
        while power:
            steps += 1
            if steps > n + 1:
                witness = "powers of m do not vanish"
                break
            nxt = [_mul_coords(table, p, {j: Fraction(1)}) for p in power for j in m_idx]
            echelon = row_echelon([[v.get(k, 0) for k in range(n)] for v in nxt if v])
            power = [{k: c for k, c in enumerate(row) if c} for row in echelon]
    laws.append(LawResult("maximal_ideal_nilpotent", witness is None, witness))

    # (b) m * (second copy) = 0
    second = second_copy_image(table)
    witness = None
    for i in m_idx:
        for j in second:
            if table.products[i][j]:
                witness = f"{basis_label(table.basis[i])}*{basis_label(table.basis[j])} != 0"
                break
        if witness:
            break
    laws.append(LawResult("nilradical_annihilates_second_copy", witness is None, witness))

    # (c) second copy is an ideal with zero multiplication
    witness = None
    second_set = set(second)
    for j in second:
        for i in range(n):
            prod = table.products[i][j]
            if not set(prod) <= second_set:
                witness = f"{basis_label(table.basis[i])}*{basis_label(table.basis[j])} leaves the second copy"
                break
            if i in second_set and prod:
                witness = f"{basis_label(table.basis[i])}*{basis_label(table.basis[j])} != 0"
                break
        if witness:
            break
    laws.append(LawResult("second_copy_zero_multiplication_ideal", witness is None, witness))
    return NilradicalReport(rs, laws)
