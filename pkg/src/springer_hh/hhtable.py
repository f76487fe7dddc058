"""Bigraded Euler characteristics of the polyvector sheaves on T*(G/B).

``euler_table`` gives E(j, k) = sum_i (-1)^i dim H^i(Lambda^j T^k); the
Hochschild degree of a cell is s = i + j + k, so only rank-one systems
(where an exact backend exists) resolve individual s.  Higher-rank
output carries Euler data only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bott import bundle_euler
from .bundles import polyvector_gr_weights
from .errors import ParameterError
from .rootdata import RootSystem, weyl_group

EULER = "euler"
EXACT = "exact"


@dataclass
class CohomologyTable:
    rs: RootSystem
    kind: str
    entries: dict[tuple[int, ...], int]
    truncation: dict = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, ...]) -> int:
        return self.entries.get(key, 0)

    def to_json(self) -> dict:
        rows = []
        for key in sorted(self.entries):
            if self.kind == EULER:
                j, k = key
                rows.append({"j": j, "k": k, "value": self.entries[key]})
            else:
                i, j, k = key
                rows.append({"i": i, "j": j, "k": k, "value": self.entries[key]})
        out = {
            "type": self.rs.name,
            "kind": self.kind,
            "truncation": dict(self.truncation),
            "entries": rows,
        }
        if self.kind == EULER:
            out["note"] = "Euler characteristics sum_i (-1)^i h^{i,j,k}; individual h^{i,j,k} not determined"
        return out


def default_k_min(rs: RootSystem) -> int:
    """-2 dim N~ = -4d."""
    return -4 * rs.num_positive_roots


def euler_entry(j: int, k: int, rs: RootSystem) -> int:
    ws = polyvector_gr_weights(j, k, rs)
    return bundle_euler(ws, rs).get(k, 0)


def euler_table(rs: RootSystem, j_max: int, k_min: int, k_max: int) -> CohomologyTable:
    d = rs.num_positive_roots
    if not isinstance(j_max, int) or not 0 <= j_max <= 2 * d:
        raise ParameterError(f"j_max={j_max!r} outside [0, {2 * d}] for {rs.name}")
    if k_min % 2 or k_max % 2:
        raise ParameterError(f"k bounds must be even (got k_min={k_min}, k_max={k_max})")
    if k_min > k_max:
        raise ParameterError(f"k_min={k_min} exceeds k_max={k_max}")
    entries = {}
    for j in range(j_max + 1):
        for k in range(k_min, k_max + 1, 2):
            value = euler_entry(j, k, rs)
            if value:
                entries[(j, k)] = value
    return CohomologyTable(rs, EULER, entries, {"j_max": j_max, "k_min": k_min, "k_max": k_max})


def hh_euler_total(rs: RootSystem, k_max: int) -> int:
    """Truncated alternating sum sum_{j + k <= k_max} (-1)^j E(j, k).

    k is always even, so (-1)^(j + k) = (-1)^j.  Nonzero cells satisfy
    k >= -2 min(j, d); the sum grows without bound as k_max does.
    """
    d = rs.num_positive_roots
    total = 0
    for j in range(2 * d + 1):
        k_lo = -2 * min(j, d)
        for k in range(k_lo, k_max - j + 1, 2):
            total += (-1) ** j * euler_entry(j, k, rs)
    return total


def center_lower_bound(rs: RootSystem) -> int:
    """2|W| - 1: a lower bound for the dimension of the principal-block center."""
    return 2 * len(weyl_group(rs)) - 1
