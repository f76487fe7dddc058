import pytest

from springer_hh import ParameterError, build_root_system, center_lower_bound, euler_table, hh_euler_total
from springer_hh.hhtable import EULER, default_k_min, euler_entry


def test_a1_euler_values(a1):
    t = euler_table(a1, 2, -4, 6)
    # functions on the sl2 nilpotent cone: degree k = 2m has dimension 2m + 1
    for m in range(4):
        assert t[(0, 2 * m)] == 2 * m + 1
    assert t[(2, -2)] == 1
    assert t.kind == EULER


def test_json_note_and_truncation(a1):
    data = euler_table(a1, 2, -4, 4).to_json()
    assert data["truncation"] == {"j_max": 2, "k_min": -4, "k_max": 4}
    assert "note" in data and data["kind"] == "euler"
    assert all(set(row) == {"j", "k", "value"} for row in data["entries"])


def test_bad_ranges(a1):
    with pytest.raises(ParameterError):
        euler_table(a1, 3, -4, 4)
    with pytest.raises(ParameterError):
        euler_table(a1, 2, -3, 4)
    with pytest.raises(ParameterError):
        euler_table(a1, 2, 4, -4)


def test_duality_echo(small_rs):
    d = small_rs.num_positive_roots
    for i in range(d + 1):
        assert euler_entry(i, -2 * i, small_rs) == euler_entry(2 * d - i, -2 * d, small_rs)


def test_functions_on_nilcone_a2():
    # C[N] for sl3 is Sym(sl3) modulo invariants of degree 2 and 3
    rs = build_root_system("A", 2)
    assert euler_entry(0, 0, rs) == 1
    assert euler_entry(0, 2, rs) == 8  # the adjoint representation
    assert euler_entry(0, 4, rs) == 35  # Sym^2 sl3 = 1 + 8 + 27, minus the quadratic Casimir


def test_total_and_bounds(a1):
    assert default_k_min(a1) == -4
    assert center_lower_bound(a1) == 3
    assert center_lower_bound(build_root_system("A", 2)) == 11
    # s = j + k <= 0 region of A1: cells (0,0), (1,-2), (2,-2)
    assert hh_euler_total(a1, 0) == euler_entry(0, 0, a1) - euler_entry(1, -2, a1) + euler_entry(2, -2, a1)


def test_total_worked_values(a1):
    assert hh_euler_total(a1, 0) == 3
    assert hh_euler_total(a1, -6) == 0
    # truncation dependence: the total keeps changing as k_max grows
    assert len({hh_euler_total(a1, k) for k in range(0, 12, 2)}) > 1
