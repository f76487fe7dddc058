"""T x C*-weights of the associated graded of the polyvector sheaves on T*(G/B).

Conventions: b = h + n with n spanned by the positive root spaces.  The
tangent space of G/B at the base point is g/b (weights -alpha), the fiber
of the Springer resolution is n (weights alpha).  The C*-action scales the
fiber by t^2, so vertical tangent vectors have degree -2 and linear
functions on the fiber (n*, weights -alpha) have degree +2.

The filtration from ``0 -> T^vert -> T -> T^hor -> 0`` gives

    gr Lambda^j T^k = sum over a + b = j, 2m - 2a = k of
        Lambda^a(vertical) (x) Lambda^b(horizontal) (x) Sym^m(n*)

as B-modules.  Weights here are weights of B-modules (fibers at the base
point), not line-bundle labels; see ``bott.bundle_euler`` for the switch.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import ParameterError
from .rootdata import RootSystem, Weight, add, neg, zero


@dataclass
class GradedWeightMultiset:
    """Multiset of (weight, internal degree) pairs."""

    entries: dict[tuple[Weight, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.entries = {key: m for key, m in self.entries.items() if m}
        for (_, k), m in self.entries.items():
            if m < 0:
                raise ValueError("multiplicities must be positive")

    def __len__(self) -> int:
        """Total size counted with multiplicity."""
        return sum(self.entries.values())

    def __iter__(self) -> Iterator[tuple[Weight, int, int]]:
        for (w, k), m in sorted(self.entries.items()):
            yield w, k, m

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GradedWeightMultiset) and self.entries == other.entries

    def is_empty(self) -> bool:
        return not self.entries

    def degrees(self) -> set[int]:
        return {k for (_, k) in self.entries}

    def weights(self) -> Counter:
        """Weight multiset with the internal degree forgotten."""
        out: Counter = Counter()
        for (w, _), m in self.entries.items():
            out[w] += m
        return out

    def __add__(self, other: GradedWeightMultiset) -> GradedWeightMultiset:
        out = Counter(self.entries)
        out.update(other.entries)
        return GradedWeightMultiset(dict(out))

    def to_json(self) -> list[dict]:
        return [{"weight": list(w), "k": k, "mult": m} for w, k, m in self]


def _graded(weights: Counter, k: int) -> GradedWeightMultiset:
    return GradedWeightMultiset({(w, k): m for w, m in weights.items()})


def tangent_weights(rs: RootSystem) -> tuple[GradedWeightMultiset, GradedWeightMultiset]:
    """(vertical, horizontal) weights of the tangent bundle's two pieces."""
    vertical = GradedWeightMultiset()
    horizontal = GradedWeightMultiset()
    for alpha in rs.positive_roots:
        vertical = vertical + GradedWeightMultiset({(alpha, -2): 1})
        horizontal = horizontal + GradedWeightMultiset({(neg(alpha), 0): 1})
    return vertical, horizontal


def _convolve(x: Counter, y: Counter) -> Counter:
    out: Counter = Counter()
    for a, m in x.items():
        for b, n in y.items():
            out[add(a, b)] += m * n
    return out


@lru_cache(maxsize=None)
def exterior_power(rs: RootSystem, a: int) -> Counter:
    """Weights of Lambda^a(n): sums of a distinct positive roots."""
    d = rs.num_positive_roots
    if a < 0 or a > d:
        return Counter()
    # levels[c] = weights of c-subsets of the roots seen so far
    levels = [Counter({zero(rs.rank): 1})] + [Counter() for _ in range(a)]
    for alpha in rs.positive_roots:
        for c in range(a, 0, -1):
            for w, m in levels[c - 1].items():
                levels[c][add(w, alpha)] += m
    return levels[a]


@lru_cache(maxsize=None)
def symmetric_power(rs: RootSystem, m: int) -> Counter:
    """Weights of Sym^m(n*): sums of m-multisets of negative roots."""
    if m < 0:
        return Counter()
    levels = [Counter({zero(rs.rank): 1})] + [Counter() for _ in range(m)]
    for alpha in rs.positive_roots:
        beta = neg(alpha)
        for c in range(1, m + 1):
            for w, mult in levels[c - 1].items():
                levels[c][add(w, beta)] += mult
    return levels[m]


def koszul_components(j: int, k: int, rs: RootSystem) -> list[tuple[int, int, int]]:
    """All (a, b, m) with a + b = j, 2m - 2a = k, 0 <= a, b <= d, m >= 0."""
    d = rs.num_positive_roots
    out = []
    if k % 2:
        return out
    for a in range(0, min(j, d) + 1):
        b = j - a
        m2 = k + 2 * a
        if b > d or m2 < 0:
            continue
        out.append((a, b, m2 // 2))
    return out


@lru_cache(maxsize=None)
def koszul_piece(a: int, b: int, m: int, rs: RootSystem) -> Counter:
    """Weights of Lambda^a(vertical) (x) Lambda^b(horizontal) (x) Sym^m(n*)."""
    horizontal = Counter({neg(w): c for w, c in exterior_power(rs, b).items()})
    return _convolve(_convolve(exterior_power(rs, a), horizontal), symmetric_power(rs, m))


def _check_j(j: int, rs: RootSystem) -> None:
    d = rs.num_positive_roots
    if not isinstance(j, int) or not 0 <= j <= 2 * d:
        raise ParameterError(f"polyvector degree j={j!r} outside [0, {2 * d}] for {rs.name}")


def polyvector_gr_weights(j: int, k: int, rs: RootSystem) -> GradedWeightMultiset:
    """Weights of gr Lambda^j T(N~)^k.  Empty for odd k and for k < -2 min(j, d)."""
    _check_j(j, rs)
    if not isinstance(k, int):
        raise ParameterError(f"internal degree k={k!r} must be an integer")
    total: Counter = Counter()
    for a, b, m in koszul_components(j, k, rs):
        total.update(koszul_piece(a, b, m, rs))
    return _graded(total, k)


def omega_weights(i: int, rs: RootSystem) -> GradedWeightMultiset:
    """Weights of Omega^i_{G/B} at the base point, placed at internal degree 0."""
    d = rs.num_positive_roots
    if not isinstance(i, int) or not 0 <= i <= d:
        raise ParameterError(f"form degree i={i!r} outside [0, {d}] for {rs.name}")
    return _graded(exterior_power(rs, i), 0)


@dataclass
class DualityReport:
    i: int
    passed: bool
    mismatch: Weight | None = None
    detail: str = ""


def _first_mismatch(x: Counter, y: Counter) -> Weight | None:
    for w in sorted(set(x) | set(y)):
        if x[w] != y[w]:
            return w
    return None


def verify_duality(i: int, rs: RootSystem) -> DualityReport:
    """Compare Lambda^i T^{-2i}, Omega^i and Lambda^{2d-i} T^{-2d} as weight multisets."""
    d = rs.num_positive_roots
    if not isinstance(i, int) or not 0 <= i <= d:
        raise ParameterError(f"i={i!r} outside [0, {d}] for {rs.name}")
    low = polyvector_gr_weights(i, -2 * i, rs).weights()
    forms = omega_weights(i, rs).weights()
    high = polyvector_gr_weights(2 * d - i, -2 * d, rs).weights()
    w = _first_mismatch(low, forms)
    if w is not None:
        return DualityReport(i, False, w, f"Lambda^{i} T^{-2 * i} vs Omega^{i}")
    w = _first_mismatch(forms, high)
    if w is not None:
        return DualityReport(i, False, w, f"Omega^{i} vs Lambda^{2 * d - i} T^{-2 * d}")
    return DualityReport(i, True)
