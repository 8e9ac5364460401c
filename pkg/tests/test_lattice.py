import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticepoly import partitions as pt
from latticepoly.algebra import ONE, Q, ZERO, parse_expression, var
from latticepoly.errors import WidthTooSmall
from latticepoly.families import spin1_branching
from latticepoly.identities import run_instances, dual_lattice_instances, brute_force_instances
from latticepoly.lattice import (Columns, Row, RowKind, apply_row, brute_force_partition_function, c_lambda,
                                 partition_function, skew_g, skew_g_dual, skew_j, skew_j_dual)
from latticepoly.weights import evaluate, fused, spin1

x1, x2, x3 = var("x1"), var("x2"), var("x3")
u1, v1 = var("u1"), var("v1")
ZERO_COLS = Columns.make(0, 0)


def test_fused_row_at_zero_is_identity():
    state = {(2, 0, 1): x1 + 1, (0, 3, 0): Q, (1, 1, 1): ONE}
    assert apply_row(state, Row(RowKind.FUSED, ZERO), Columns()) == state


def test_spin1_row_on_single_particle():
    out = apply_row({(1,): ONE}, Row(RowKind.SPIN1, x1), Columns())
    assert set(out) == {(1,), (0,)}
    assert out[(1,)] == evaluate(spin1(x1, u1, v1), (1, 0, 1, 0)) == (1 + u1 * x1 * Q) / (1 + u1 * x1)
    assert out[(0,)] == evaluate(spin1(x1, u1, v1), (1, 0, 0, 1)) == (1 - Q) * x1 / (1 + u1 * x1)


@pytest.mark.parametrize("kind", [RowKind.SPIN1, RowKind.FUSED, RowKind.SPIN1_DUAL])
def test_empty_state_is_fixed(kind):
    out = apply_row({(0, 0, 0): ONE}, Row(kind, x1), Columns(), max_particles=0)
    assert out == {(0, 0, 0): ONE}


def test_skew_j_examples():
    assert skew_j((1,), (), [x1]) == (1 - Q) * x1 / (1 + u1 * x1)
    assert skew_j((2, 1), (2, 1), []) == ONE
    assert skew_j((1,), (), [x1], ZERO_COLS) == (1 - Q) * x1


def test_skew_g_examples():
    assert skew_g((2,), (), [x1, x2], ZERO_COLS) == x1 ** 2 + (1 + Q) * x1 * x2 + x2 ** 2
    assert skew_g((3, 1), (3, 1), []) == ONE
    assert skew_g((3, 1), (3, 1), [0]) == ONE
    g22 = skew_g((2, 2), (), [x1, x2], Columns.make(0, 1))
    assert g22 == (x1 ** 2 * x2 ** 2 + (1 + Q) * x1 ** 2 * x2 + (1 + Q) * x1 * x2 ** 2 + x1 ** 2
                   + (1 + Q) * x1 * x2 + x2 ** 2)


def test_dual_examples():
    assert skew_j_dual((2, 1), (2, 1), []) == ONE
    assert skew_g_dual((2, 1), (2, 1), []) == ONE
    expected = c_lambda((1,)) / c_lambda(()) * (1 - Q) * x1 / (1 + v1 * x1)
    assert skew_j_dual((1,), (), [x1]) == expected


def test_dual_lattices_match_gauge_transform():
    report = run_instances("dual-lattice", dual_lattice_instances(max_size=4, max_n=2))
    assert report.passed, report.failures[:3]


def test_brute_force_single_vertex():
    # one column, one row: the weight of the single vertex with free right exit
    for a, c in [(2, 1), (1, 1), (0, 0), (3, 2)]:
        value = brute_force_partition_function((a,), (c,), [Row(RowKind.FUSED, x1)], Columns())
        assert value == evaluate(fused(x1, u1, v1), (a, 0, c, a - c))


def test_brute_force_matches_transfer_matrix():
    report = run_instances("brute-force", brute_force_instances(max_size=3, max_n=2))
    assert report.passed, report.failures[:3]


def test_width_too_small():
    with pytest.raises(WidthTooSmall):
        skew_j((3,), (), [x1], width=2)
    with pytest.raises(WidthTooSmall):
        skew_g((1, 1, 1), (), [x1], width=2)


partitions_st = st.lists(st.integers(1, 3), max_size=3).map(lambda p: tuple(sorted(p, reverse=True)))


@settings(max_examples=20, deadline=None)
@given(partitions_st, st.data(), st.integers(1, 3))
def test_width_independence(lam, data, extra):
    mu = data.draw(st.sampled_from(sorted(pt.sub_partitions(lam))))
    xs = [x1, x2]
    assert skew_j(lam, mu, xs, width=pt.part(lam, 1) + extra) == skew_j(lam, mu, xs)
    assert skew_g(lam, mu, xs, width=len(lam) + extra) == skew_g(lam, mu, xs)
    assert skew_j(lam, mu, xs, width=pt.part(lam, 1)) == skew_j(lam, mu, xs)


def test_one_row_vanishes_off_strips():
    for lam in pt.partitions_up_to(5):
        for mu in pt.sub_partitions(lam):
            if not pt.interlaces(lam, mu):
                assert skew_j(lam, mu, [x1]) == ZERO


def test_one_row_agrees_with_branching_formula():
    for lam in pt.partitions_up_to(8, max_part=5):
        for mu in pt.interlacing_below(lam):
            assert skew_j(lam, mu, [x1]) == spin1_branching(lam, mu, x1), (lam, mu)


def test_reversed_rows_need_a_cap():
    with pytest.raises(ValueError):
        apply_row({(0, 1): ONE}, Row(RowKind.FUSED_DUAL, x1), Columns())


# values frozen from the chain sum of the closed one-row formula

J21_UNIFORM = parse_expression(
    "(q^3*x1^2*x2^2*u1 + q^3*x1^2*x2*u1*v1 + q^3*x1*x2^2*u1*v1 + q^3*x1*x2*v1 - q^2*x1^2*x2^2*u1"
    " - 2*q^2*x1^2*x2*u1*v1 + q^2*x1^2*x2 - 2*q^2*x1*x2^2*u1*v1 + q^2*x1*x2^2 - q^2*x1*x2*v1"
    " - q*x1^2*x2^2*u1 + q*x1^2*x2*u1*v1 - 2*q*x1^2*x2 + q*x1*x2^2*u1*v1 - 2*q*x1*x2^2 - q*x1*x2*v1"
    " + x1^2*x2^2*u1 + x1^2*x2 + x1*x2^2 + x1*x2*v1)"
    "/ (1 + u1*x1)^2 / (1 + u1*x2)^2")

J2_OVER_1 = parse_expression(
    "(q^2*x1^2*x2*u1^2*u2*v1 - q^2*x1^2*x2*u1*u2 + q^2*x1*x2^2*u1^2*u2*v1 - q^2*x1*x2^2*u1*u2"
    " + q^2*x1*x2*u1^2*v1 + q^2*x1*x2*u1*u2*v1 - q^2*x1*x2*u1 - q^2*x1*x2*u2 - q*x1^2*x2*u1^2*u2*v1"
    " + q*x1^2*x2*u1*u2 - q*x1*x2^2*u1^2*u2*v1 + q*x1*x2^2*u1*u2 + q*x1*u1*v1 - q*x1 + q*x2*u1*v1"
    " - q*x2 - x1*x2*u1^2*v1 - x1*x2*u1*u2*v1 + x1*x2*u1 + x1*x2*u2 - x1*u1*v1 + x1 - x2*u1*v1 + x2)"
    "/ ((1 + u1*x1)*(1 + u2*x1)*(1 + u1*x2)*(1 + u2*x2))")


def test_golden_j_values():
    assert skew_j((2, 1), (), [x1, x2], Columns.make(u1, v1)) == J21_UNIFORM
    assert skew_j((2,), (1,), [x1, x2]) == J2_OVER_1
