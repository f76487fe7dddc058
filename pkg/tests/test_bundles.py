from collections import Counter
from itertools import combinations, combinations_with_replacement

import pytest

from springer_hh import ParameterError, build_root_system, omega_weights, polyvector_gr_weights, tangent_weights, verify_duality
from springer_hh.bundles import GradedWeightMultiset


def _sum(rank, vectors):
    out = (0,) * rank
    for v in vectors:
        out = tuple(x + y for x, y in zip(out, v))
    return out


def brute_polyvector(rs, j, k):
    """Pick a vertical, b horizontal tangent directions and m fiber coordinates directly."""
    pos = list(rs.positive_roots)
    neg = [tuple(-x for x in a) for a in pos]
    out = Counter()
    for a in range(j + 1):
        b = j - a
        if (k + 2 * a) % 2 or k + 2 * a < 0:
            continue
        m = (k + 2 * a) // 2
        for A in combinations(pos, a):
            for B in combinations(neg, b):
                for M in combinations_with_replacement(neg, m):
                    out[_sum(rs.rank, A + B + M)] += 1
    return out


@pytest.mark.parametrize("name", ["A1", "A2", "B2"])
def test_polyvector_weights_match_brute_force(name):
    rs = build_root_system(name[0], int(name[1]))
    d = rs.num_positive_roots
    for j in range(2 * d + 1):
        for k in range(-2 * d, 7, 2):
            got = polyvector_gr_weights(j, k, rs)
            assert got.weights() == brute_polyvector(rs, j, k)
            assert got.degrees() <= {k}


def test_tangent_weights(small_rs):
    vert, hor = tangent_weights(small_rs)
    d = small_rs.num_positive_roots
    assert len(vert) == len(hor) == d
    assert vert.degrees() == {-2} and hor.degrees() == {0}
    assert sum(vert.weights().values()) == d


def test_odd_k_empty(small_rs):
    d = small_rs.num_positive_roots
    for j in range(2 * d + 1):
        for k in range(-4 * d - 1, 4 * d + 2, 2):
            assert polyvector_gr_weights(j, k, small_rs).is_empty()


def test_vanishing_below_strip(small_rs):
    d = small_rs.num_positive_roots
    for j in range(2 * d + 1):
        for k in range(-4 * d, -2 * min(j, d), 2):
            assert polyvector_gr_weights(j, k, small_rs).is_empty()


def test_top_polyvectors_trivial(small_rs):
    # Lambda^{2d} T is the anticanonical bundle, trivial on a symplectic variety
    d = small_rs.num_positive_roots
    ws = polyvector_gr_weights(2 * d, -2 * d, small_rs)
    assert ws.weights() == Counter({(0,) * small_rs.rank: 1})


def test_duality(small_rs):
    for i in range(small_rs.num_positive_roots + 1):
        rep = verify_duality(i, small_rs)
        assert rep.passed and rep.mismatch is None


def test_omega_weights(a1):
    assert omega_weights(1, a1).weights() == Counter({(2,): 1})
    with pytest.raises(ParameterError):
        omega_weights(2, a1)


def test_bad_degrees(a1):
    with pytest.raises(ParameterError):
        polyvector_gr_weights(3, 0, a1)
    with pytest.raises(ParameterError):
        polyvector_gr_weights(1, 0.5, a1)
    with pytest.raises(ParameterError):
        verify_duality(-1, a1)


def test_multiset_basics():
    x = GradedWeightMultiset({((1,), 0): 2, ((0,), 0): 0})
    y = GradedWeightMultiset({((1,), 0): 1, ((-1,), 2): 1})
    z = x + y
    assert len(z) == 4 and z.degrees() == {0, 2}
    assert z.to_json() == [{"weight": [-1], "k": 2, "mult": 1}, {"weight": [1], "k": 0, "mult": 3}]
    with pytest.raises(ValueError):
        GradedWeightMultiset({((1,), 0): -1})
