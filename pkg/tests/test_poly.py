import pytest

from autbound.cyclo import Cyc, QQ, rational, zeta
from autbound.matrix import CycloMatrix
from autbound.poly import (
    HomogPoly,
    act,
    avoids_variables,
    collapse_blocks,
    is_invariant,
    semi_invariant_character,
    smoothness_necessary,
)


def fermat(nvars, d):
    return HomogPoly(nvars, d, {tuple(d if i == j else 0 for i in range(nvars)): 1 for j in range(nvars)})


def klein_quartic():
    return HomogPoly(3, 4, {(3, 1, 0): 1, (0, 3, 1): 1, (1, 0, 3): 1})


def perm_matrix(perm, m=1):
    n = len(perm)
    return CycloMatrix(
        [[rational(1, m) if perm[j] == i else Cyc.zero(m) for j in range(n)] for i in range(n)]
    )


def test_homog_poly_validation():
    with pytest.raises(ValueError):
        HomogPoly(2, 3, {(1, 1): 1})  # degree mismatch
    with pytest.raises(ValueError):
        HomogPoly(2, 2, {(2, 0): 0})  # all coefficients zero
    f = HomogPoly(2, 2, {(2, 0): 1, (1, 1): 0, (0, 2): QQ(1, 2)})
    assert set(f.terms) == {(2, 0), (0, 2)}


def test_act_identity_and_scalar():
    f = klein_quartic()
    assert act(CycloMatrix.identity(3), f) == f
    c = zeta(12)
    scaled = act(CycloMatrix.scalar(3, c), f)
    assert scaled == f.scaled(c.inverse() ** 4)


def test_act_is_left_action():
    import random

    rng = random.Random(31)
    f = klein_quartic()
    mats = [
        perm_matrix((1, 2, 0)),
        CycloMatrix([[rational(1), rational(1), Cyc.zero(1)], [Cyc.zero(1), rational(1), Cyc.zero(1)], [Cyc.zero(1), Cyc.zero(1), rational(1)]]),
        CycloMatrix.scalar(3, zeta(4)),
    ]
    for _ in range(12):
        g = mats[rng.randrange(3)]
        h = mats[rng.randrange(3)]
        assert act(g, act(h, f)) == act(g @ h, f)


def test_klein_quartic_cyclic_invariance():
    # the 3-cycle x0 -> x1 -> x2 -> x0 permutes the three terms
    m2 = perm_matrix((1, 2, 0))
    assert is_invariant([m2], klein_quartic())


def test_semi_invariant_character_examples():
    # x^5 y - x y^5 under diag(zeta8, zeta8^-1) picks up zeta8^-4 = -1
    f = HomogPoly(2, 6, {(5, 1): 1, (1, 5): -1})
    g = CycloMatrix([[zeta(8), Cyc.zero(8)], [Cyc.zero(8), zeta(8, 7)]])
    chars = semi_invariant_character([g], f)
    assert chars is not None and chars[0] == rational(-1)

    # x0 x1 under the swap
    h = HomogPoly(2, 2, {(1, 1): 1})
    swap = perm_matrix((1, 0))
    assert semi_invariant_character([swap], h) == [rational(1)]

    # non-proportional image reports failure
    f2 = HomogPoly(2, 2, {(2, 0): 1})
    assert semi_invariant_character([swap], f2) is None


def test_invariant_consistency_with_character():
    f = klein_quartic()
    m2 = perm_matrix((1, 2, 0))
    chars = semi_invariant_character([m2], f)
    assert chars == [rational(1)]
    assert is_invariant([m2], f)


def test_klein_diagonal_generator_character_is_one():
    # i * diag(e^4, e^2, e) for a primitive 7th root: the scalar i
    # contributes i^-4 = 1 on quartics
    from autbound.catalog import get_example

    rec = get_example("ex-1-4")
    chars = semi_invariant_character([rec.group.generators[0]], rec.polynomial)
    assert chars == [rational(1)]


def test_smoothness_necessary():
    assert smoothness_necessary(fermat(4, 5)).ok
    rep = smoothness_necessary(klein_quartic())
    assert rep.ok
    assert rep.witness(0) == (3, 1, 0)
    bad = HomogPoly(2, 3, {(3, 0): 1})
    rep = smoothness_necessary(bad)
    assert not rep.ok and rep.witness(1) is None and rep.witness(0) == (3, 0)


def test_avoids_variables():
    # two-block dodecic: each summand avoids the other pair of variables
    f = HomogPoly(
        4,
        12,
        {
            (11, 1, 0, 0): 1,
            (6, 6, 0, 0): 11,
            (1, 11, 0, 0): -1,
            (0, 0, 11, 1): 1,
            (0, 0, 6, 6): 11,
            (0, 0, 1, 11): -1,
        },
    )
    assert avoids_variables(f, 1)
    assert not avoids_variables(f, 2)  # {x0, x2} meets every monomial
    g = HomogPoly(3, 3, {(1, 2, 0): 1, (1, 0, 2): 1})  # everything divisible by x0
    assert not avoids_variables(g, 1)
    with pytest.raises(ValueError):
        avoids_variables(g, 0)
    with pytest.raises(ValueError):
        avoids_variables(g, 3)


def test_collapse_blocks():
    f = fermat(4, 3)
    ones = [Cyc.one(1)] * 4
    g = collapse_blocks(f, [[0, 1], [2, 3]], ones)
    assert g.nvars == 2 and g.terms == {(3, 0): rational(2), (0, 3): rational(2)}
    # cancellation: x0^3 - x1^3 collapses to zero with equal constants
    h = HomogPoly(2, 3, {(3, 0): 1, (0, 3): -1})
    with pytest.raises(ValueError):
        collapse_blocks(h, [[0, 1]], [Cyc.one(1), Cyc.one(1)])


def test_json_roundtrip():
    f = HomogPoly(3, 4, {(3, 1, 0): zeta(7) + zeta(7, 2), (0, 3, 1): QQ(1, 3), (1, 0, 3): -1})
    data = f.to_json()
    assert HomogPoly.from_json(data) == f
