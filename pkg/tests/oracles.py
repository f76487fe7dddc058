"""Independent reference computations used only by the tests.

None of these share code paths with the library beyond reading Cartan
data: Euclidean root models, set-closure group generation, sympy
division, the Chevalley formula and Freudenthal's recursion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

import sympy

from springer_hh.rootdata import RootSystem


# -- Euclidean models of classical root systems --------------------------------


def euclidean_roots(type_label: str, n: int) -> set[tuple[int, ...]]:
    """All roots (both signs) of a classical or G2 system as integer vectors."""
    roots = set()
    if type_label == "A":
        for i, j in product(range(n + 1), repeat=2):
            if i != j:
                v = [0] * (n + 1)
                v[i], v[j] = 1, -1
                roots.add(tuple(v))
        return roots
    if type_label == "G":
        # inside the plane x+y+z = 0
        short = {(1, -1, 0), (-1, 1, 0), (1, 0, -1), (-1, 0, 1), (0, 1, -1), (0, -1, 1)}
        long = {(2, -1, -1), (-2, 1, 1), (-1, 2, -1), (1, -2, 1), (-1, -1, 2), (1, 1, -2)}
        return short | long
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [0] * n
            v[i], v[j] = si, sj
            roots.add(tuple(v))
    if type_label in "BC":
        c = 1 if type_label == "B" else 2
        for i in range(n):
            for s in (1, -1):
                v = [0] * n
                v[i] = s * c
                roots.add(tuple(v))
    return roots


# -- Weyl group by closure of generator matrices ----------------------------------


def _mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def reflection_matrices(rs: RootSystem):
    """s_i on fundamental coordinates, built from l -> l - <l, a_i^vee> a_i directly."""
    n = rs.rank
    gens = []
    for i in range(n):
        alpha = rs.cartan_matrix[i]
        m = [[int(r == c) for c in range(n)] for r in range(n)]
        for r in range(n):
            m[r][i] -= alpha[r]
        gens.append(tuple(tuple(row) for row in m))
    return gens


def closure_group(rs: RootSystem) -> set:
    gens = reflection_matrices(rs)
    e = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
    group = {e}
    frontier = [e]
    while frontier:
        new = []
        for g in frontier:
            for s in gens:
                h = _mul(s, g)
                if h not in group:
                    group.add(h)
                    new.append(h)
        frontier = new
    return group


def inversions(rs: RootSystem, matrix) -> int:
    pos = set(rs.positive_roots)
    count = 0
    for a in rs.positive_roots:
        img = tuple(sum(matrix[r][k] * a[k] for k in range(rs.rank)) for r in range(rs.rank))
        count += img not in pos
    return count


# -- symbolic divided differences ---------------------------------------------


def sympy_vars(rank: int):
    return sympy.symbols(f"x1:{rank + 1}")


def sympy_divided_difference(rs: RootSystem, i: int, expr):
    xs = sympy_vars(rs.rank)
    alpha = sum(c * x for c, x in zip(rs.cartan_matrix[i], xs))
    reflected = expr.subs(xs[i], xs[i] - alpha, simultaneous=True)
    q, r = sympy.div(sympy.expand(expr - reflected), alpha, *xs)
    assert r == 0
    return sympy.expand(q)


def poly_to_sympy(f):
    xs = sympy_vars(f.nvars)
    return sympy.expand(
        sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([x**e for x, e in zip(xs, exps)]) for exps, c in f.terms.items())
    )


# -- Chevalley formula -------------------------------------------------------------


def chevalley_product(rs: RootSystem, group, j: int, w):
    """X_{s_j} * X_w = sum <omega_j, beta^vee> X_{w s_beta} over length-raising beta."""
    out = {}
    n = rs.rank
    for beta, coroot in zip(rs.positive_roots, rs.positive_coroots):
        # s_beta(l) = l - <l, beta^vee> beta
        m = tuple(tuple(int(r == c) - beta[r] * coroot[c] for c in range(n)) for r in range(n))
        v = group.lookup(_mul(w.matrix, m))
        if v.length == w.length + 1 and coroot[j]:
            out[v] = out.get(v, 0) + coroot[j]
    return out


# -- Freudenthal multiplicities ---------------------------------------------------


@lru_cache(maxsize=None)
def _inverse_cartan(rs: RootSystem):
    inv = sympy.Matrix(rs.cartan_matrix).T.inv()
    return [[Fraction(int(x.p), int(x.q)) for x in inv.row(r)] for r in range(rs.rank)]


def _simple_coords(rs: RootSystem, weight) -> list[Fraction]:
    inv = _inverse_cartan(rs)
    return [sum(inv[r][c] * weight[c] for c in range(rs.rank)) for r in range(rs.rank)]


def form(rs: RootSystem, a, b) -> Fraction:
    """(a, b) for weights in fundamental coordinates, short roots of length 2."""
    c = _simple_coords(rs, b)
    return sum(c[j] * a[j] * rs.symmetrizers[j] for j in range(rs.rank))


def freudenthal_dimension(rs: RootSystem, highest) -> int:
    highest = tuple(highest)
    lr = tuple(x + 1 for x in highest)
    norm_top = form(rs, lr, lr)
    mult = {highest: 1}
    level = [highest]
    simple = rs.cartan_matrix
    reach = 2 * sum(highest) + 4  # longer than any root string through the weights
    while level:
        candidates = sorted({tuple(x - y for x, y in zip(mu, simple[i])) for mu in level for i in range(rs.rank)})
        nxt = []
        for mu in candidates:
            mr = tuple(x + 1 for x in mu)
            denom = norm_top - form(rs, mr, mr)
            if denom == 0:
                continue
            total = Fraction(0)
            for alpha in rs.positive_roots:
                for k in range(1, reach + 1):
                    nu = tuple(x + k * a for x, a in zip(mu, alpha))
                    if nu in mult:
                        total += mult[nu] * form(rs, nu, alpha)
            m = 2 * total / denom
            assert m.denominator == 1
            if m:
                mult[mu] = int(m)
                nxt.append(mu)
        level = nxt
    return sum(mult.values())
