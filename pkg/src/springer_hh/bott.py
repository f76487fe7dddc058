"""Borel-Weil-Bott for line bundles on G/B, and Euler characteristics.

Line bundles are labelled so that O(l) has H^0 = V(l) for dominant l; on
P^1 the weight n is O(n).  A homogeneous bundle whose fiber at the base
point is a B-module of weight nu is the line bundle O(-nu).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bundles import GradedWeightMultiset
from .errors import ParameterError
from .rootdata import RootSystem, Weight, add, neg, sub

REGULAR = "regular"
SINGULAR = "singular"


@dataclass(frozen=True)
class BottResolution:
    status: str
    degree: int | None = None
    dominant_weight: Weight | None = None
    word: tuple[int, ...] | None = None

    @property
    def regular(self) -> bool:
        return self.status == REGULAR


@lru_cache(maxsize=None)
def bott_resolve(weight: Weight, rs: RootSystem) -> BottResolution:
    """Move weight + rho into the dominant chamber by simple reflections.

    Each reflection across a wall with negative pairing raises the length
    by one, so the step count is the cohomological degree.
    """
    weight = tuple(weight)
    if len(weight) != rs.rank:
        raise ParameterError(f"weight {weight} has wrong rank for {rs.name}")
    v = list(add(weight, rs.rho))
    word = []
    while True:
        i = next((i for i, x in enumerate(v) if x < 0), None)
        if i is None:
            break
        c = v[i]
        row = rs.cartan_matrix[i]
        for j in range(rs.rank):
            v[j] -= c * row[j]
        word.append(i)
    if any(x == 0 for x in v):
        return BottResolution(SINGULAR)
    # word lists reflections in the order applied, so w = s_{last} ... s_{first}
    return BottResolution(REGULAR, len(word), sub(tuple(v), rs.rho), tuple(reversed(word)))


def weyl_dimension(weight: Weight, rs: RootSystem) -> int:
    """prod over positive roots of <mu + rho, coroot> / <rho, coroot>."""
    weight = tuple(weight)
    if len(weight) != rs.rank:
        raise ParameterError(f"weight {weight} has wrong rank for {rs.name}")
    if not rs.is_dominant(weight):
        raise ParameterError(f"weight {weight} is not dominant")
    shifted = add(weight, rs.rho)
    num = Fraction(1)
    for idx in range(len(rs.positive_roots)):
        num *= Fraction(rs.pairing(shifted, idx), rs.pairing(rs.rho, idx))
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=None)
def line_bundle_euler(weight: Weight, rs: RootSystem) -> int:
    res = bott_resolve(tuple(weight), rs)
    if not res.regular:
        return 0
    return (-1) ** res.degree * weyl_dimension(res.dominant_weight, rs)


def bundle_euler(ws: GradedWeightMultiset, rs: RootSystem) -> dict[int, int]:
    """Euler characteristic of each internal-degree piece of a weight multiset.

    The multiset holds B-module weights nu; each contributes chi(O(-nu)).
    """
    out: dict[int, int] = defaultdict(int)
    for w, k, m in ws:
        out[k] += m * line_bundle_euler(neg(w), rs)
    return dict(out)
