from fractions import Fraction

import pytest

from latticepoly import partitions as pt
from latticepoly.algebra import ONE, Q, ZERO, parse_expression, var
from latticepoly.families import (FamilyParams, FamilyTag, branching_one_var, lattice_degeneration, multivar_oracle,
                                  schur_bialternant)

x1, x2, x3 = var("x1"), var("x2"), var("x3")
beta = var("w1")


def test_branching_examples():
    assert branching_one_var(FamilyTag.HALL_LITTLEWOOD_Q, (1,), (), x1) == (1 - Q) * x1
    assert branching_one_var(FamilyTag.Q_WHITTAKER, (2,), (1,), x1) == (1 + Q) * x1
    assert branching_one_var(FamilyTag.GROTHENDIECK_G, (1,), (), x1) == x1
    for lam in [(), (1,), (3, 1)]:
        assert branching_one_var(FamilyTag.SCHUR, lam, lam, x1) == ONE


def test_multivar_examples():
    assert multivar_oracle(FamilyTag.SCHUR, (1,), (), [x1, x2]) == x1 + x2
    assert multivar_oracle(FamilyTag.Q_WHITTAKER, (2,), (), [x1, x2]) == x1 ** 2 + (1 + Q) * x1 * x2 + x2 ** 2
    f20 = multivar_oracle(FamilyTag.INHOM_Q_WHITTAKER_F, (2,), (), [x1, x2], FamilyParams(u=1))
    assert f20 == x1 ** 2 + (1 + Q) * x1 * x2 * (1 - x1) + x2 ** 2 * (1 - x1) * (1 - Q * x1)


def test_degeneration_examples():
    for tag in (FamilyTag.SCHUR, FamilyTag.DUAL_GROTHENDIECK_g):
        assert lattice_degeneration(tag, (2, 1), (), [x1, x2]) == multivar_oracle(tag, (2, 1), (), [x1, x2])
    for lam in pt.partitions_up_to(5):
        assert (lattice_degeneration(FamilyTag.Q_WHITTAKER, lam, (), [x1, x2])
                == multivar_oracle(FamilyTag.Q_WHITTAKER, lam, (), [x1, x2]))


@pytest.mark.parametrize("tag", list(FamilyTag))
def test_lattice_matches_oracle_small_skew(tag):
    for lam in pt.partitions_up_to(3):
        for mu in [(), (1,)]:
            if not pt.contains(lam, mu):
                continue
            for n in (1, 2):
                xs = [x1, x2][:n]
                assert lattice_degeneration(tag, lam, mu, xs) == multivar_oracle(tag, lam, mu, xs), (lam, mu, n)


def test_numeric_parameters():
    params = FamilyParams(param=Fraction(1, 2))
    for tag in (FamilyTag.GROTHENDIECK_G, FamilyTag.WEAK_DUAL_j):
        assert (lattice_degeneration(tag, (2, 1), (), [x1, x2], params)
                == multivar_oracle(tag, (2, 1), (), [x1, x2], params))


def test_weak_dual_needs_horizontal_strips():
    # the lattice has no configuration for a vertical domino in one row
    assert lattice_degeneration(FamilyTag.WEAK_DUAL_j, (1, 1), (), [x1]) == ZERO
    assert branching_one_var(FamilyTag.WEAK_DUAL_j, (1, 1), (), x1) == ZERO


def test_schur_bialternant_agrees_with_lattice():
    for lam in pt.partitions_up_to(4):
        poly = lattice_degeneration(FamilyTag.SCHUR, lam, (), [x1, x2, x3])
        for pts in [(2, 3, 5), (Fraction(1, 2), -1, 4)]:
            value = poly.substitute({f"x{i + 1}": p for i, p in enumerate(pts)})
            assert value.to_fraction() == schur_bialternant(lam, pts)


# values frozen from the chain oracles

GOLDEN = {
    (FamilyTag.HALL_LITTLEWOOD_Q, (2, 1)): "(1-q)^2*x1*x2*(x1+x2)",
    (FamilyTag.GROTHENDIECK_G, (2, 1)): "x1^2*x2 + x1*x2^2 - w1*x1^2*x2^2",
    (FamilyTag.INHOM_Q_WHITTAKER_F, (2, 1)): "x1^2*x2 + x1*x2^2 - u1*x1^2*x2^2",
    (FamilyTag.DUAL_INHOM_G, (1, 1)): "x1*x2 + x1 + x2",
}


@pytest.mark.parametrize("key", list(GOLDEN))
def test_golden_family_values(key):
    tag, lam = key
    expected = parse_expression(GOLDEN[key])
    assert multivar_oracle(tag, lam, (), [x1, x2]) == expected
    assert lattice_degeneration(tag, lam, (), [x1, x2]) == expected
