"""Finite root systems, weight-lattice arithmetic and Weyl groups.

Weights are integer tuples in the fundamental-weight basis, so that the
i-th coordinate of a weight is its pairing with the simple coroot i.
The Cartan matrix follows ``a_ij = <alpha_i, alpha_j^vee>``; with this
convention the simple root alpha_i is row i of the matrix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ParameterError, ResourceError
from .linalg import row_echelon

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_WEYL_BOUND = 10**6

_VALID_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def scale(c: int, a: Weight) -> Weight:
    return tuple(c * x for x in a)


def zero(rank: int) -> Weight:
    return (0,) * rank


def _gram_matrix(type_label: str, n: int) -> list[list[int]]:
    """Gram matrix (alpha_i, alpha_j) of the simple roots, short roots of length 2.

    Bourbaki numbering throughout.
    """
    g = [[0] * n for _ in range(n)]

    def link(i: int, j: int, value: int) -> None:
        g[i][j] = g[j][i] = value

    if type_label == "A":
        lengths = [2] * n
        edges = [(i, i + 1) for i in range(n - 1)]
    elif type_label == "B":
        lengths = [4] * (n - 1) + [2]
        edges = [(i, i + 1) for i in range(n - 1)]
    elif type_label == "C":
        lengths = [2] * (n - 1) + [4]
        edges = [(i, i + 1) for i in range(n - 1)]
    elif type_label == "D":
        lengths = [2] * n
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif type_label == "E":
        lengths = [2] * n
        # 1-3-4-5-6-..., with node 2 attached to node 4
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
    elif type_label == "F":
        lengths = [4, 4, 2, 2]
        edges = [(0, 1), (1, 2), (2, 3)]
    else:  # G
        lengths = [2, 6]
        edges = [(0, 1)]

    for i, length in enumerate(lengths):
        g[i][i] = length
    for i, j in edges:
        # (short, long) = <short, long^vee> (long, long) / 2 = -(long, long) / 2
        link(i, j, -max(lengths[i], lengths[j]) // 2)
    return g


def check_type(type_label: str, rank: int) -> None:
    ok = False
    if type_label in _VALID_MIN_RANK:
        ok = isinstance(rank, int) and rank >= _VALID_MIN_RANK[type_label]
    elif type_label in _EXCEPTIONAL_RANKS:
        ok = rank in _EXCEPTIONAL_RANKS[type_label]
    if not ok:
        raise ParameterError(f"invalid root system type/rank pair ({type_label!r}, {rank!r})")


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    cartan_matrix: Matrix
    gram: Matrix
    positive_roots_simple: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    positive_coroots: tuple[Weight, ...]
    symmetrizers: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return self.cartan_matrix

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def two_rho(self) -> Weight:
        return (2,) * self.rank

    @property
    def num_positive_roots(self) -> int:
        """d = dim G/B."""
        return len(self.positive_roots)

    def pairing(self, weight: Weight, root_index: int) -> int:
        """<weight, alpha^vee> for the positive root with the given index."""
        return sum(c * x for c, x in zip(self.positive_coroots[root_index], weight))

    def is_dominant(self, weight: Weight) -> bool:
        return all(x >= 0 for x in weight)

    def in_root_lattice(self, weight: Weight) -> bool:
        """Whether ``weight`` lies in the Z-span of the simple roots."""
        # solve n . A = weight for n
        n = self.rank
        aug = [[self.cartan_matrix[i][j] for i in range(n)] + [weight[j]] for j in range(n)]
        red = row_echelon(aug)
        coeffs = [row[-1] for row in red]
        return all(Fraction(c).denominator == 1 for c in coeffs)

    def inner(self, a_simple: Sequence[int], b_simple: Sequence[int]) -> int:
        """Invariant form of two vectors given in simple-root coordinates."""
        return sum(
            a_simple[i] * self.gram[i][j] * b_simple[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"


def _reflect_simple(coords: Weight, i: int, cartan: Matrix) -> Weight:
    # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, in simple-root coordinates
    c = sum(n * cartan[j][i] for j, n in enumerate(coords))
    out = list(coords)
    out[i] -= c
    return tuple(out)


def _root_closure(cartan: Matrix) -> list[Weight]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            gamma = _reflect_simple(beta, i, cartan)
            if gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
    return [r for r in seen if all(x >= 0 for x in r)]


@lru_cache(maxsize=None)
def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Root system of the given finite type, e.g. ``build_root_system("B", 2)``."""
    type_label = str(type_label).upper()
    check_type(type_label, rank)
    gram = _gram_matrix(type_label, rank)
    cartan = tuple(
        tuple(2 * gram[i][j] // gram[j][j] for j in range(rank)) for i in range(rank)
    )
    pos_simple = sorted(_root_closure(cartan), key=lambda r: (sum(r), tuple(-x for x in r)))
    pos_fund = [
        tuple(sum(r[i] * cartan[i][j] for i in range(rank)) for j in range(rank))
        for r in pos_simple
    ]
    sym = tuple(gram[i][i] // 2 for i in range(rank))
    coroots = []
    for r in pos_simple:
        half_len = sum(r[i] * gram[i][j] * r[j] for i in range(rank) for j in range(rank)) // 2
        coroots.append(tuple(r[i] * sym[i] // half_len for i in range(rank)))
    return RootSystem(
        type_label=type_label,
        rank=rank,
        cartan_matrix=cartan,
        gram=tuple(tuple(row) for row in gram),
        positive_roots_simple=tuple(pos_simple),
        positive_roots=tuple(pos_fund),
        positive_coroots=tuple(coroots),
        symmetrizers=sym,
    )


def parse_type(name: str) -> RootSystem:
    """``"A2"`` -> build_root_system("A", 2)."""
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise ParameterError(f"cannot parse root system name {name!r}")
    return build_root_system(name[0].upper(), int(name[1:]))


# -- Weyl group ---------------------------------------------------------------


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def mat_apply(m: Matrix, v: Weight) -> Weight:
    return tuple(sum(row[k] * v[k] for k in range(len(v))) for row in m)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def simple_reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    """Matrix of s_i on fundamental-weight coordinates: s_i(l) = l - l_i alpha_i."""
    n = rs.rank
    a = rs.cartan_matrix
    return tuple(
        tuple(int(r == c) - (a[i][r] if c == i else 0) for c in range(n)) for r in range(n)
    )


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element; equality and hashing go through the action matrix."""

    word: tuple[int, ...]
    matrix: Matrix

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.word), self.word)

    def label(self) -> str:
        if not self.word:
            return "e"
        return "s" + "s".join(str(i + 1) for i in self.word)

    def __repr__(self) -> str:
        return f"WeylElement({self.label()})"


@dataclass
class WeylGroup:
    rs: RootSystem
    elements: list[WeylElement]
    _index: dict[Matrix, WeylElement] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.elements = sorted(self.elements, key=WeylElement.sort_key)
        self._index = {w.matrix: w for w in self.elements}
        self.generators = [simple_reflection_matrix(self.rs, i) for i in range(self.rs.rank)]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def lookup(self, matrix: Matrix) -> WeylElement:
        return self._index[matrix]

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return self._index[mat_mul(u.matrix, v.matrix)]

    def inverse(self, w: WeylElement) -> WeylElement:
        m = identity_matrix(self.rs.rank)
        for i in reversed(w.word):
            m = mat_mul(m, self.generators[i])
        return self._index[m]

    def simple(self, i: int) -> WeylElement:
        return self._index[self.generators[i]]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        m = identity_matrix(self.rs.rank)
        for i in word:
            m = mat_mul(m, self.generators[i])
        return self._index[m]

    def by_length(self, length: int) -> list[WeylElement]:
        return [w for w in self.elements if w.length == length]


def weyl_order(rs: RootSystem) -> int:
    """|W| = prod (e_i + 1), with exponents e_i read off from root heights."""
    heights = [sum(r) for r in rs.positive_roots_simple]
    count = [heights.count(h) for h in range(1, max(heights) + 2)]
    # exponent h occurs count[h-1] - count[h] times
    order = 1
    for h in range(1, len(count)):
        order *= (h + 1) ** (count[h - 1] - count[h])
    return order


def _times_simple(m: Matrix, i: int, cartan: Matrix) -> Matrix:
    # right multiplication by s_i only replaces column i
    n = len(m)
    a = cartan[i]
    col = [m[r][i] - sum(m[r][j] * a[j] for j in range(n)) for r in range(n)]
    return tuple(row[:i] + (col[r],) + row[i + 1 :] for r, row in enumerate(m))


def enumerate_weyl(rs: RootSystem, bound: int = DEFAULT_WEYL_BOUND) -> list[WeylElement]:
    """All elements of W, each with its lexicographically least reduced word.

    Breadth-first over right multiplication by simple reflections. Elements
    at each level are expanded in order of their words, so the first word
    to reach an element is its least reduced word.
    """
    n = rs.rank
    expected = weyl_order(rs)
    if expected > bound:
        raise ResourceError(
            f"Weyl group of {rs.name} has order {expected}, above the bound {bound} "
            "(enumerated 0 elements)",
            partial_count=0,
        )
    e = WeylElement((), identity_matrix(n))
    seen = {e.matrix}
    out = [e]
    level = [e]
    while level:
        nxt = []
        for w in level:
            for i in range(n):
                m = _times_simple(w.matrix, i, rs.cartan_matrix)
                if m in seen:
                    continue
                seen.add(m)
                v = WeylElement(w.word + (i,), m)
                nxt.append(v)
                out.append(v)
                if len(out) > bound:
                    raise ResourceError(
                        f"Weyl group of {rs.name} exceeds bound {bound} "
                        f"(enumerated {len(out)} elements so far)",
                        partial_count=len(out),
                    )
        level = nxt
    return out


_GROUPS: dict[RootSystem, WeylGroup] = {}


def weyl_group(rs: RootSystem, bound: int = DEFAULT_WEYL_BOUND) -> WeylGroup:
    """Memoised WeylGroup for ``rs``."""
    g = _GROUPS.get(rs)
    if g is None:
        g = WeylGroup(rs, enumerate_weyl(rs, bound))
        _GROUPS[rs] = g
    return g


def install_weyl_group(group: WeylGroup) -> None:
    """Seed the memo table, e.g. with an enumeration loaded from disk."""
    _GROUPS[group.rs] = group


def _check_rank(w: WeylElement, weight: Weight) -> None:
    if len(weight) != len(w.matrix):
        raise ParameterError(
            f"rank mismatch: weight has {len(weight)} coordinates, "
            f"Weyl element acts on rank {len(w.matrix)}"
        )


def weyl_action(w: WeylElement, weight: Weight) -> Weight:
    _check_rank(w, weight)
    return mat_apply(w.matrix, tuple(weight))


def dot_action(w: WeylElement, weight: Weight) -> Weight:
    """w . l = w(l + rho) - rho."""
    _check_rank(w, weight)
    rho = (1,) * len(weight)
    return sub(mat_apply(w.matrix, add(tuple(weight), rho)), rho)


def inversion_count(rs: RootSystem, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots by w."""
    positive = set(rs.positive_roots)
    count = 0
    for alpha in rs.positive_roots:
        image = mat_apply(w.matrix, alpha)
        if image not in positive:
            count += 1
    return count


def length_generating_function(elements: Iterable[WeylElement]) -> list[int]:
    """Coefficients of sum_w t^length(w)."""
    counts: list[int] = []
    for w in elements:
        while len(counts) <= w.length:
            counts.append(0)
        counts[w.length] += 1
    return counts
