import pytest

from siegel2.cyclotomic import ONE, root_of_unity
from siegel2.sp4 import _pair_eigenvalues
from siegel2.strata import (
    MAT_NEG_ID,
    MAT_U,
    StabilizerError,
    _param_poly,
    all_strata,
    derive_multiplier,
    diag,
    elliptic_pair_strata,
    enumerate_elements,
    genus2_strata,
    perm_compose,
    perm_cycle_type,
    perm_from_cycles,
)

M2_ORDERS = {"C2": 4, "C4": 8, "Q8": 16, "Q12": 24, "O": 96, "Q24": 48, "C10": 20}
A11_ORDERS = {
    "C2xC2": 4,
    "C2wrS2": 8,
    "C2xC4": 8,
    "C2xC6": 12,
    "C4wrS2": 32,
    "C4xC6": 24,
    "C6wrS2": 72,
}


def test_permutation_helpers():
    p = perm_from_cycles((1, 2, 3), (4, 5, 6))
    q = perm_from_cycles((1, 4), (2, 6), (3, 5))
    assert perm_cycle_type(p) == (3, 3)
    assert perm_cycle_type(q) == (2, 2, 2)
    assert perm_cycle_type(perm_compose(p, p)) == (3, 3)
    assert perm_cycle_type(perm_compose(p, q)) in ((6,), (2, 2, 2))


def test_derive_multiplier_examples():
    e10 = root_of_unity(10)
    e12 = root_of_unity(12)
    # x^6 - 1 with diag(e12, 1/e12): each root is rotated; u^2 = -1
    f = _param_poly({6: 1, 0: -1})
    assert derive_multiplier(f, diag(e12, e12.inverse())) == -ONE
    # x^6 - x with diag(e10, 1/e10): u^2 = e10^6
    g = _param_poly({6: 1, 1: -1})
    assert derive_multiplier(g, diag(e10, e10.inverse())) == e10**6
    # -id acts trivially on any family
    assert derive_multiplier(f, MAT_NEG_ID) == ONE
    # x(x^4 + alpha x^2 + 1) with the Weierstrass involution x -> -1/x
    h = _param_poly({5: 1, 3: "alpha", 1: 1})
    assert derive_multiplier(h, MAT_U) == -ONE


def test_derive_multiplier_rejects_non_stabilizer():
    e10 = root_of_unity(10)
    f = _param_poly({6: 1, 0: -1})
    with pytest.raises(StabilizerError):
        derive_multiplier(f, diag(e10, e10.inverse()))


def test_derived_multipliers_vs_tabulated():
    # the derivation is authoritative; exactly two tabulated values disagree
    mismatches = set()
    for spec in genus2_strata():
        pairs = [("S", spec.S, spec.rho_S_tabulated)]
        if spec.U is not None:
            pairs.append(("U", spec.U, spec.rho_U_tabulated))
        for gen, mat, tabulated in pairs:
            if derive_multiplier(spec.f, mat) != tabulated:
                mismatches.add((spec.name, gen))
    assert mismatches == {("O", "S"), ("Q24", "U")}


def test_genus2_group_orders():
    for spec in genus2_strata():
        enum = enumerate_elements(spec)
        assert enum.group_order == M2_ORDERS[spec.name]
        assert enum.group_order == 2 * spec.gamma_order
        assert len(enum.elements) == enum.group_order


def test_elliptic_pair_group_orders():
    for spec in elliptic_pair_strata():
        enum = enumerate_elements(spec)
        assert enum.group_order == A11_ORDERS[spec.name]


def test_total_euler_numbers():
    assert sum(s.euler for s in genus2_strata()) == 1
    assert sum(s.euler for s in elliptic_pair_strata()) == 1


def test_element_invariants():
    for spec in all_strata():
        enum = enumerate_elements(spec)
        for el in enum.elements:
            # symplectic eigenvalues: closed under inversion, determinant 1
            x, y = _pair_eigenvalues(el.eigs)
            prod = el.eigs[0]
            for e in el.eigs[1:]:
                prod = prod * e
            assert prod == ONE
            assert sum(el.cycle_type) == 6


def test_identity_and_center():
    for spec in all_strata():
        enum = enumerate_elements(spec)
        trivial = [
            el
            for el in enum.elements
            if all(e == ONE for e in el.eigs)
        ]
        # in the multiplier extension both (id, 1) and (-id, -1) act
        # trivially on cohomology
        want = 2 if spec.space == "M2" else 1
        assert len(trivial) == want
        assert all(el.cycle_type == (1,) * 6 for el in trivial)
        if spec.space == "M2":
            # the hyperelliptic involution acts by -1 on H^1 and fixes every
            # Weierstrass point; it appears as (id, -1) and (-id, 1)
            central = [
                el
                for el in enum.elements
                if all(e == -ONE for e in el.eigs)
            ]
            assert len(central) == 2
            assert all(el.cycle_type == (1,) * 6 for el in central)


def test_c2_stratum_elements():
    spec = next(s for s in genus2_strata() if s.name == "C2")
    enum = enumerate_elements(spec)
    assert all(el.cycle_type == (1,) * 6 for el in enum.elements)
    signs = sorted(
        tuple(1 if e == ONE else -1 for e in el.eigs) for el in enum.elements
    )
    assert signs == [(-1,) * 4, (-1,) * 4, (1,) * 4, (1,) * 4]


def test_q12_cycle_type_census():
    spec = next(s for s in genus2_strata() if s.name == "Q12")
    enum = enumerate_elements(spec)
    census = {}
    for el in enum.elements:
        census[el.cycle_type] = census.get(el.cycle_type, 0) + 1
    assert census == {(1,) * 6: 4, (3, 3): 8, (2, 2, 2): 12}
