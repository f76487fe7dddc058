"""Invariant suite behind ``springer-hh --self-test``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable

from . import bott, bundles, frakh, hhtable, rank1, rootdata, schubert
from .rootdata import build_root_system, dot_action, weyl_action, weyl_group

SMALL_TYPES = [("A", 1), ("A", 2), ("B", 2), ("G", 2)]
RANK3_TYPES = [("A", 3), ("B", 3), ("C", 3)]


@dataclass
class CheckResult:
    module: str
    name: str
    passed: bool
    detail: str = ""


def _random_weight(rng: random.Random, rank: int, span: int = 4) -> tuple[int, ...]:
    return tuple(rng.randint(-span, span) for _ in range(rank))


def check_rootdata(rng: random.Random) -> list[tuple[str, bool]]:
    out = []
    for t, r in SMALL_TYPES + RANK3_TYPES:
        rs = build_root_system(t, r)
        a = rs.cartan_matrix
        cartan_ok = all(
            a[i][i] == 2 and (i == j or (a[i][j] <= 0 and (a[i][j] == 0) == (a[j][i] == 0)))
            for i in range(r)
            for j in range(r)
        )
        rho_ok = all(rs.pairing(rs.rho, idx) == 1 for idx in range(r))
        g = weyl_group(rs)
        lengths_ok = all(rootdata.inversion_count(rs, w) == w.length for w in g)
        gf = rootdata.length_generating_function(g)
        palin_ok = gf == gf[::-1] and gf[-1] == 1
        w0_ok = weyl_action(g.longest, rs.rho) == rootdata.neg(rs.rho)
        action_ok = True
        for _ in range(20):
            w = rng.choice(g.elements)
            u, v = rng.choice(g.elements), rng.choice(g.elements)
            lam = _random_weight(rng, r)
            action_ok &= weyl_action(g.inverse(w), weyl_action(w, lam)) == lam
            action_ok &= dot_action(u, dot_action(v, lam)) == dot_action(g.multiply(u, v), lam)
        out += [
            (f"{rs.name} cartan axioms", cartan_ok),
            (f"{rs.name} rho pairs to 1 with simple coroots", rho_ok),
            (f"{rs.name} word length = inversion count", lengths_ok),
            (f"{rs.name} length polynomial palindromic", palin_ok),
            (f"{rs.name} w0 rho = -rho", w0_ok),
            (f"{rs.name} action laws (sampled)", action_ok),
        ]
    return out


def check_schubert(rng: random.Random) -> list[tuple[str, bool]]:
    out = []
    for t, r in SMALL_TYPES:
        rs = build_root_system(t, r)
        calc = schubert.schubert_calculus(rs)
        g = calc.group
        els = g.elements
        ints = all(
            c.denominator == 1 and c > 0 for u in els for v in els for c in calc.product(u, v).coeffs.values()
        )
        comm = all(calc.product(u, v) == calc.product(v, u) for u in els for v in els)
        assoc = True
        for u, v, w in product(els, repeat=3) if len(els) <= 8 else [
            (rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(200)
        ]:
            xu, xv, xw = (schubert.schubert_class(x) for x in (u, v, w))
            assoc &= calc.multiply(calc.multiply(xu, xv), xw) == calc.multiply(xu, calc.multiply(xv, xw))
        d = rs.num_positive_roots
        perm = True
        for u in els:
            row = [calc.product(u, v)[g.longest] for v in els if u.length + v.length == d]
            perm &= sorted(row) == [0] * (len(row) - 1) + [1]
        out += [
            (f"{rs.name} structure constants are non-negative integers", ints),
            (f"{rs.name} Schubert product commutative", comm),
            (f"{rs.name} Schubert product associative", assoc),
            (f"{rs.name} Poincare duality pairing is a permutation", perm),
        ]
    return out


def check_frakh(rng: random.Random) -> list[tuple[str, bool]]:
    out = []
    for t, r in SMALL_TYPES:
        rs = build_root_system(t, r)
        table = frakh.build_frakh(rs)
        n = table.dimension
        idx = range(n)
        triples = product(idx, repeat=3) if n <= 15 else (
            (rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(2000)
        )
        assoc = True
        for i, j, k in triples:
            ij = frakh._mul_coords(table, table.products[i][j], {k: Fraction(1)})
            jk = frakh._mul_coords(table, {i: Fraction(1)}, table.products[j][k])
            assoc &= ij == jk
        first, second = frakh.omega_relation(rs)
        relation_ok = True
        for b in table.basis:
            x = frakh.basis_vector(rs, b)
            # x * (omega, -1) computed on raw pairs equals eps(x) (omega, -1)
            h1, h2 = schubert.SchubertVector(x.first), schubert.SchubertVector(x.second)
            omega, minus_one = schubert.SchubertVector(first), schubert.SchubertVector(second)
            eps = x.augmentation()
            prod_first = schubert.schubert_calculus(rs).multiply(h1, omega)
            prod_second = minus_one.scaled(eps) + h2.scaled(schubert.augmentation(omega))
            relation_ok &= prod_first == schubert.SchubertVector(first).scaled(eps)
            relation_ok &= prod_second == schubert.SchubertVector(second).scaled(eps)
        report = frakh.nilradical_annihilation_check(rs)
        out += [
            (f"{rs.name} frakh dimension 2|W|-1", n == 2 * len(weyl_group(rs)) - 1),
            (f"{rs.name} frakh associative", assoc),
            (f"{rs.name} (omega,-1) spans an ideal", relation_ok),
            (f"{rs.name} nilradical laws", report.passed),
        ]
    return out


def check_bundles(rng: random.Random) -> list[tuple[str, bool]]:
    out = []
    for t, r in SMALL_TYPES:
        rs = build_root_system(t, r)
        d = rs.num_positive_roots
        odd_empty = all(
            bundles.polyvector_gr_weights(j, k, rs).is_empty()
            for j in range(2 * d + 1)
            for k in range(-4 * d - 1, 12, 2)
        )
        duality = all(bundles.verify_duality(i, rs).passed for i in range(d + 1))
        ranks = all(
            sum(
                sum(bundles.koszul_piece(a, b, m, rs).values())
                for k in range(-2 * d, 1, 2)
                for a, b, m in bundles.koszul_components(j, k, rs)
                if m == 0
            )
            == comb(2 * d, j)
            for j in range(2 * d + 1)
        )
        out += [
            (f"{rs.name} odd k pieces empty", odd_empty),
            (f"{rs.name} sheaf isomorphisms at weight level", duality),
            (f"{rs.name} m=0 ranks are binomial(2d, j)", ranks),
        ]
    return out


def check_bott(rng: random.Random) -> list[tuple[str, bool]]:
    out = []
    for t, r in SMALL_TYPES:
        rs = build_root_system(t, r)
        g = weyl_group(rs)
        d = rs.num_positive_roots
        orbit = serre = True
        for _ in range(50):
            lam = _random_weight(rng, r, 6)
            w = rng.choice(g.elements)
            chi = bott.line_bundle_euler(lam, rs)
            orbit &= bott.line_bundle_euler(dot_action(w, lam), rs) == (-1) ** w.length * chi
            dual = rootdata.sub(rootdata.neg(lam), rs.two_rho)
            serre &= chi == (-1) ** d * bott.line_bundle_euler(dual, rs)
        out += [
            (f"{rs.name} Euler characteristic alternates along dot orbits", orbit),
            (f"{rs.name} Serre duality on Euler characteristics", serre),
        ]
    return out


def check_tables(rng: random.Random) -> list[tuple[str, bool]]:
    a1 = build_root_system("A", 1)
    table = hhtable.euler_table(a1, 2, -4, 20)
    cross = all(
        table[(j, k)] == (lambda h: h[0] - h[1])(rank1.rank1_cohomology(j, k))
        for j in range(3)
        for k in range(-4, 21, 2)
    )
    out = [
        ("A1 Cech oracle matches Euler table", cross),
        ("A1 center dimension 3", rank1.rank1_center_dimension() == 3 == hhtable.center_lower_bound(a1)),
    ]
    for t, r in SMALL_TYPES:
        rs = build_root_system(t, r)
        d = rs.num_positive_roots
        echo = all(
            hhtable.euler_entry(i, -2 * i, rs) == hhtable.euler_entry(2 * d - i, -2 * d, rs)
            for i in range(d + 1)
        )
        strip = all(
            hhtable.euler_entry(j, k, rs) == 0
            for j in range(2 * d + 1)
            for k in range(-4 * d, -2 * min(j, d), 2)
        )
        out += [(f"{rs.name} duality echo in Euler table", echo), (f"{rs.name} vanishing strip", strip)]
    return out


CHECKS: dict[str, Callable[[random.Random], list[tuple[str, bool]]]] = {
    "rootdata": check_rootdata,
    "schubert": check_schubert,
    "frakh": check_frakh,
    "bundles": check_bundles,
    "bott": check_bott,
    "hhtable": check_tables,
}


def run_self_test(seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    results = []
    for module, fn in CHECKS.items():
        try:
            for name, passed in fn(rng):
                results.append(CheckResult(module, name, bool(passed)))
        except Exception as exc:  # a crash is a failed check, reported not raised
            results.append(CheckResult(module, "suite raised", False, repr(exc)))
    return results
