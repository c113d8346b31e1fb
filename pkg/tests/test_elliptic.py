import pytest

from siegel2.elliptic import (
    cusp_gamma2_s3,
    dim_cusp,
    dim_new,
    dim_new_fricke,
)

LEVEL1_DIMS = {12: 1, 14: 0, 16: 1, 18: 1, 20: 1, 22: 1, 24: 2, 26: 1, 28: 2}


def test_level1_dimensions():
    for k in range(0, 12):
        assert dim_cusp(1, k) == 0
    for k, d in LEVEL1_DIMS.items():
        assert dim_cusp(1, k) == d


def test_level2_and_4_dimensions():
    assert dim_cusp(2, 8) == 1
    assert dim_cusp(2, 6) == 0
    assert dim_cusp(4, 6) == 1
    assert dim_cusp(4, 4) == 0
    assert dim_cusp(2, 4) == 0


def test_odd_weights_vanish():
    for level in (1, 2, 4):
        for k in (1, 3, 5, 7, 11):
            assert dim_cusp(level, k) == 0
            assert dim_new(level, k) == 0
    assert dim_new_fricke(+1, 9) == 0


def test_unsupported_level():
    with pytest.raises(ValueError):
        dim_cusp(3, 12)
    with pytest.raises(ValueError):
        dim_new(5, 12)
    with pytest.raises(ValueError):
        dim_new_fricke(0, 12)


def test_oldform_inversion_identities():
    # dim S_k(Gamma_0(N)) = sum over divisors M of N of sigma_0(N/M) d_new(M, k)
    for k in range(0, 201, 2):
        assert dim_cusp(2, k) == 2 * dim_new(1, k) + dim_new(2, k)
        assert dim_cusp(4, k) == (
            3 * dim_new(1, k) + 2 * dim_new(2, k) + dim_new(4, k)
        )


def test_newform_closed_forms():
    # closed forms at weights divisible by 4
    for kk in range(1, 51):
        assert dim_new(2, 4 * kk) == kk - 1 - 2 * (kk // 3)
        assert dim_new(4, 4 * kk) == kk // 3


def test_fricke_split():
    for k in range(4, 201, 2):
        dp = dim_new_fricke(+1, k)
        dm = dim_new_fricke(-1, k)
        assert dp >= 0 and dm >= 0
        assert dp + dm == dim_new(2, k)
    # first level-2 newform (weight 8) has Fricke eigenvalue +1
    assert dim_new_fricke(+1, 8) == 1
    assert dim_new_fricke(-1, 8) == 0
    # weight 10: eigenvalue -1
    assert dim_new_fricke(+1, 10) == 0
    assert dim_new_fricke(-1, 10) == 1


def test_gamma2_decomposition():
    # the full level-2 cusp space has the same dimension as level Gamma_0(4)
    for k in range(0, 201, 2):
        assert cusp_gamma2_s3(k).dimension() == dim_cusp(4, k)
    d8 = cusp_gamma2_s3(8)
    assert d8[(3,)] == 0 and d8[(2, 1)] == 1 and d8[(1, 1, 1)] == 0
    d12 = cusp_gamma2_s3(12)
    assert d12[(3,)] == 1 and d12[(2, 1)] == 1 and d12[(1, 1, 1)] == 1
