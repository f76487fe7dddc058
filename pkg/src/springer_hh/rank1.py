"""Exact Cech cohomology of polyvector fields on T*P^1 (the A1 Springer resolution).

Charts.  Chart 0 has coordinates (u, y), chart 1 has (v, y') with
v = 1/u and y' = u^2 y, so the fiber coordinate is that of the degree -2
line bundle.  By the chain rule

    d/dv  = -u^2 d/du + 2 u y d/dy
    d/dy' = u^-2 d/dy
    d/dv ^ d/dy' = -(d/du ^ d/dy)

Gradings.  The C*-degree of the function y (and y') is +2, of d/dy (and
d/dy') is -2; u, v, d/du, d/dv have degree 0.  A second grading by the
torus of PGL2 (u: +1, y: -1, v: -1, y': +1, d/du: -1, d/dy: +1,
d/dv: +1, d/dy': -1) makes every transition formula homogeneous, so the
two-term Cech complex splits into finite pieces indexed by (j, k, wt).
Cohomology is the rational rank count on each piece.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParameterError
from .hhtable import EXACT, CohomologyTable
from .linalg import rank
from .rootdata import build_root_system

# basis polyvector -> (C*-degree, torus weight)
_CHART0 = {0: [("1", 0, 0)], 1: [("du", 0, -1), ("dy", -2, 1)], 2: [("du^dy", -2, 0)]}
_CHART1 = {0: [("1", 0, 0)], 1: [("dv", 0, 1), ("dy'", -2, -1)], 2: [("dv^dy'", -2, 0)]}

# chart-1 basis -> {(shift of u exponent, shift of y exponent, chart-0 basis): coefficient}
_TRANSITION = {
    "1": {(0, 0, "1"): 1},
    "dv": {(2, 0, "du"): -1, (1, 1, "dy"): 2},
    "dy'": {(-2, 0, "dy"): 1},
    "dv^dy'": {(0, 0, "du^dy"): -1},
}

Monomial = tuple[int, int, str]  # (exponent of u or v, exponent of y or y', basis polyvector)


@dataclass
class CechComplex:
    j: int
    k: int
    wt: int
    chart0: list[Monomial] = field(default_factory=list)
    chart1: list[Monomial] = field(default_factory=list)
    overlap: list[Monomial] = field(default_factory=list)
    differential: list[list[int]] = field(default_factory=list)

    def cohomology(self) -> tuple[int, int]:
        r = rank(self.differential) if self.differential else 0
        return len(self.chart0) + len(self.chart1) - r, len(self.overlap) - r


def _check(j: int, k: int) -> None:
    if j not in (0, 1, 2):
        raise ParameterError(f"j={j!r} must be 0, 1 or 2 on T*P^1")
    if not isinstance(k, int) or k % 2:
        raise ParameterError(f"k={k!r} must be an even integer")


def cech_complex(j: int, k: int, wt: int) -> CechComplex:
    """The (j, k, wt) piece of the Cech complex C^0 -> C^1, differential s1 - s0."""
    _check(j, k)
    cx = CechComplex(j, k, wt)
    for name, kdeg, bw in _CHART0[j]:
        if (k - kdeg) % 2 or k < kdeg:
            continue
        q = (k - kdeg) // 2
        p = wt + q - bw
        cx.overlap.append((p, q, name))
        if p >= 0:
            cx.chart0.append((p, q, name))
    for name, kdeg, bw in _CHART1[j]:
        if (k - kdeg) % 2 or k < kdeg:
            continue
        q = (k - kdeg) // 2
        p1 = q + bw - wt
        if p1 >= 0:
            cx.chart1.append((p1, q, name))

    row = {mono: r for r, mono in enumerate(cx.overlap)}
    columns = []
    for mono in cx.chart0:
        col = [0] * len(cx.overlap)
        col[row[mono]] = -1
        columns.append(col)
    for p1, q, name in cx.chart1:
        col = [0] * len(cx.overlap)
        # v^p1 y'^q = u^(2q - p1) y^q
        for (du, dy, target), c in _TRANSITION[name].items():
            col[row[(2 * q - p1 + du, q + dy, target)]] += c
        columns.append(col)
    cx.differential = [list(r) for r in zip(*columns)] if columns else []
    return cx


def _wt_window(k: int) -> range:
    # outside |wt| <= q_max + 1 one chart restricts isomorphically onto the overlap
    q_max = max(0, (k + 2) // 2)
    return range(-q_max - 2, q_max + 3)


def rank1_cohomology(j: int, k: int) -> tuple[int, int]:
    """(h^0, h^1) of Lambda^j T(T*P^1) in C*-degree k."""
    _check(j, k)
    h0 = h1 = 0
    for wt in _wt_window(k):
        a, b = cech_complex(j, k, wt).cohomology()
        h0 += a
        h1 += b
    return h0, h1


def rank1_exact_table(k_min: int, k_max: int) -> CohomologyTable:
    """Nonzero h^{i,j,k} for j in 0..2 and even k in [k_min, k_max]."""
    if k_min % 2 or k_max % 2 or k_min > k_max:
        raise ParameterError(f"need even k_min <= k_max (got {k_min}, {k_max})")
    entries = {}
    for j in range(3):
        for k in range(k_min, k_max + 1, 2):
            for i, h in enumerate(rank1_cohomology(j, k)):
                if h:
                    entries[(i, j, k)] = h
    return CohomologyTable(build_root_system("A", 1), EXACT, entries, {"k_min": k_min, "k_max": k_max})


def rank1_hh_cells(s: int, k_max: int | None = None) -> dict[tuple[int, int, int], int]:
    """Nonzero h^{i,j,k} with i + j + k = s (and k <= k_max when given)."""
    cells = {}
    for i in (0, 1):
        for j in (0, 1, 2):
            k = s - i - j
            if k % 2 or k < -2 * j or (k_max is not None and k > k_max):
                continue
            h = rank1_cohomology(j, k)[i]
            if h:
                cells[(i, j, k)] = h
    return cells


@dataclass
class RankOneHH:
    dims: dict[int, int]
    k_max: int
    safe_s_max: int

    @property
    def complete(self) -> bool:
        """Whether the k-truncation leaves every reported s untouched."""
        return max(self.dims, default=0) <= self.safe_s_max

    def to_json(self) -> dict:
        return {
            "hh": [{"s": s, "dim": d} for s, d in sorted(self.dims.items())],
            "k_max": self.k_max,
            "complete": self.complete,
            "safe_s_max": self.safe_s_max,
        }


def rank1_hh_table(s_max: int, k_max: int) -> RankOneHH:
    """dim HH^s(u_0) for A1 and 0 <= s <= s_max, from cells with k <= k_max.

    A cell of degree s has k = s - i - j <= s, so the truncation is exact
    for every s <= k_max.
    """
    if not isinstance(s_max, int) or s_max < 0:
        raise ParameterError(f"s_max={s_max!r} must be a non-negative integer")
    if k_max % 2:
        raise ParameterError(f"k_max={k_max} must be even")
    dims = {s: sum(rank1_hh_cells(s, k_max).values()) for s in range(s_max + 1)}
    return RankOneHH(dims, k_max, k_max)


def rank1_center_dimension() -> int:
    return rank1_hh_table(0, 0).dims[0]
