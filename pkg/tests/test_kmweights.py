import itertools
import random

import pytest

from affgrass.afweyl import AffineRoot, affine_weyl
from affgrass.components import component_indices, omega_coweight
from affgrass.kmweights import (
    AffineWeight,
    DualAffineRoot,
    affine_act,
    affine_weight_json,
    basic_weight,
    component_weight,
    delta_weight,
    demazure_shift_check,
    dual_act,
    dual_simple_pairings,
    eta,
    eta_inverse,
    format_affine_weight,
    is_dual_dominant,
    project,
    varpi,
)
from affgrass.psi import psi_infinity
from affgrass.rootsys import NotApplicableError, root_system


A1 = root_system("A1")
A2 = root_system("A2")
B2 = root_system("B2")
G2 = root_system("G2")


def random_affine_elements(rs, count, seed):
    """Sample affine Weyl elements as short random words times translations."""
    rng = random.Random(seed)
    aw = affine_weyl(rs)
    out = []
    for _ in range(count):
        word = [rng.randrange(rs.rank + 1) for _ in range(rng.randrange(6))]
        trans = tuple(rng.randrange(-3, 4) for _ in range(rs.rank))
        x = aw.from_word(word)
        out.append(aw.multiply(aw.translation(trans), x))
    return out


def real_affine_roots(rs, k_range=2):
    for beta in rs.positive_roots:
        for k in range(-k_range, k_range + 1):
            yield AffineRoot(beta.vec, k)
            yield AffineRoot(tuple(-c for c in beta.vec), k)


def test_basis_weights():
    assert basic_weight(A2) == AffineWeight(1, (0, 0), 0)
    assert delta_weight(A2) == AffineWeight(0, (0, 0), 1)
    assert component_weight(A2, 1) == AffineWeight(1, (1, 0), 0)
    assert component_weight(B2, 0) == basic_weight(B2)


def test_affine_act_frozen():
    aw = affine_weyl(A1)
    moved = affine_act(A1, aw.translation((-4,)), basic_weight(A1))
    assert moved == AffineWeight(1, (-4,), -4)
    # the positive translation matches the level-one weight of -2*coroot
    moved = affine_act(A1, aw.translation((4,)), basic_weight(A1))
    assert moved == AffineWeight(1, (4,), -4)
    assert moved == varpi(A1, (-4,))

    aw2 = affine_weyl(A2)
    s0 = affine_act(A2, aw2.simple_reflection(0), basic_weight(A2))
    assert s0 == AffineWeight(1, (1, 1), -1)


def test_affine_act_preserves_level_and_is_an_action():
    aw = affine_weyl(B2)
    elements = random_affine_elements(B2, 25, seed=7)
    weights = [basic_weight(B2), component_weight(B2, 1),
               AffineWeight(1, (2, -1), 3)]
    for x in elements:
        for h in weights:
            assert affine_act(B2, x, h).level == h.level
    for x in elements[:10]:
        for y in elements[:10]:
            xy = aw.multiply(x, y)
            for h in weights:
                assert affine_act(B2, xy, h) == affine_act(
                    B2, x, affine_act(B2, y, h))


def test_varpi_frozen():
    assert varpi(A1, (-4,)) == AffineWeight(1, (4,), -4)
    assert varpi(A2, (-1, -1)) == AffineWeight(1, (1, 1), -1)
    assert varpi(B2, (0, 1)) == AffineWeight(1, (0, -1), -1)
    assert varpi(B2, (2, 0)) == AffineWeight(1, (-2, 0), -2)


def test_varpi_classical_part_is_minus_lambda():
    for lam in itertools.product(range(-3, 4), repeat=2):
        assert varpi(A2, lam).classical == tuple(-c for c in lam)


def test_varpi_sends_minus_omega_to_the_component_weight():
    for name in ["A2", "B2", "C3", "D4"]:
        rs = root_system(name)
        for kappa in component_indices(rs):
            omega = omega_coweight(rs, kappa)
            minus = tuple(-c for c in omega)
            assert varpi(rs, minus) == component_weight(rs, kappa)


def test_project_inverts_varpi():
    for name in ["A2", "B2"]:
        rs = root_system(name)
        for lam in itertools.product(range(-3, 4), repeat=2):
            assert project(rs, varpi(rs, lam)) == lam


def test_project_requires_level_one():
    with pytest.raises(ValueError):
        project(A2, delta_weight(A2))
    with pytest.raises(ValueError):
        project(A2, AffineWeight(2, (0, 0), 0))


def test_eta_frozen():
    assert eta(A2, AffineRoot((1, 1), 1)) == DualAffineRoot((1, 1), 1)
    assert eta(B2, AffineRoot((0, 1), 1)) == DualAffineRoot((-2, 2), 2)
    assert eta(G2, AffineRoot((1, 0), 1)) == DualAffineRoot((2, -3), 3)
    assert eta(A1, AffineRoot((-1,), 1)) == DualAffineRoot((-2,), 1)
    assert eta(B2, AffineRoot((0, -1), 2)) == DualAffineRoot((2, -2), 4)


def test_eta_rejects_imaginary_roots():
    with pytest.raises(ValueError):
        eta(A2, AffineRoot((0, 0), 1))


def test_eta_inverse_roundtrip():
    for rs in (A2, B2, G2):
        for r in real_affine_roots(rs):
            assert eta_inverse(rs, eta(rs, r)) == r


def test_eta_intertwines_the_two_actions():
    # transport through eta agrees with the level-zero weight action
    for rs, seed in [(A2, 11), (B2, 12)]:
        aw = affine_weyl(rs)
        elements = random_affine_elements(rs, 20, seed=seed)
        roots = list(real_affine_roots(rs, k_range=1))
        for x in elements:
            for r in roots[:30]:
                d = eta(rs, r)
                embedded = AffineWeight(0, d.classical_coroot, d.k_delta)
                moved = affine_act(rs, x, embedded)
                image = eta(rs, aw.act_on_affine_root(x, r))
                assert moved == AffineWeight(0, image.classical_coroot,
                                             image.k_delta)


def test_dual_act_is_an_action():
    aw = affine_weyl(B2)
    elements = random_affine_elements(B2, 12, seed=3)
    duals = [eta(B2, r) for r in real_affine_roots(B2, k_range=1)]
    for x in elements[:6]:
        for y in elements[:6]:
            xy = aw.multiply(x, y)
            for d in duals[:10]:
                assert dual_act(B2, xy, d) == dual_act(
                    B2, x, dual_act(B2, y, d))


def test_dual_simple_pairings_frozen():
    assert dual_simple_pairings(A2, basic_weight(A2)) == (1, 0, 0)
    assert dual_simple_pairings(A2, varpi(A2, (-1, -1))) == (-1, 1, 1)


def test_stabilizer_of_component_weights():
    for name in ["A2", "B2"]:
        rs = root_system(name)
        aw = affine_weyl(rs)
        for kappa in component_indices(rs):
            h = component_weight(rs, kappa)
            fixing = {
                i for i in range(rs.rank + 1)
                if affine_act(rs, aw.simple_reflection(i), h) == h
            }
            assert fixing == set(range(rs.rank + 1)) - {kappa}


def test_dual_dominance_box_frozen():
    box = {
        lam
        for lam in itertools.product(range(-4, 5), repeat=2)
        if is_dual_dominant(A2, varpi(A2, lam))
    }
    assert box == {(0, 0), (-1, 0), (0, -1)}
    boxb = {
        lam
        for lam in itertools.product(range(-4, 5), repeat=2)
        if is_dual_dominant(B2, varpi(B2, lam))
    }
    assert boxb == {(0, 0), (-1, 0)}


def test_demazure_shift_check_frozen():
    alpha = (1,)
    for k in (1, 2, 3):
        assert demazure_shift_check(A1, (-4,), alpha, k)
    for k in (1, 2, 3, 4):
        assert demazure_shift_check(A1, (4,), alpha, k)
    assert demazure_shift_check(A2, (-6, 3), (1, 1), 2)


def test_demazure_shift_check_not_applicable_cases():
    alpha = (1,)
    with pytest.raises(NotApplicableError):
        demazure_shift_check(A1, (4,), alpha, 0)
    with pytest.raises(NotApplicableError):
        demazure_shift_check(A1, (4,), alpha, 5)
    with pytest.raises(NotApplicableError):
        demazure_shift_check(A1, (-4,), alpha, 4)
    with pytest.raises(NotApplicableError):
        demazure_shift_check(A1, (0,), alpha, 1)
    with pytest.raises(NotApplicableError):
        demazure_shift_check(A1, (-1,), alpha, 1)


def test_demazure_shift_targets_are_psi_members():
    members = psi_infinity(A2, (-6, 3)).members
    assert (-6, 3) in members
    # the checked shift of the base weight projects into the orbit set
    assert demazure_shift_check(A2, (-6, 3), (1, 1), 2) is True


def test_format_affine_weight():
    assert format_affine_weight(basic_weight(A2)) == "L0"
    assert format_affine_weight(component_weight(A2, 1)) == "L0 + [1, 0]"
    assert format_affine_weight(delta_weight(A2)) == "1*delta"
    assert format_affine_weight(varpi(A1, (-4,))) == "L0 + [4] - 4*delta"


def test_affine_weight_json():
    data = affine_weight_json(varpi(A1, (-4,)))
    assert data == {"level": 1, "classical": [4], "delta": "-4"}
    data = affine_weight_json(delta_weight(A2))
    assert data == {"level": 0, "classical": [0, 0], "delta": "1"}
