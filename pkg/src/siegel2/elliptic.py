"""Dimensions of elliptic cusp-form spaces at levels 1, 2 and 4.

Closed formulas only: these are the only levels the Siegel packet formulas
ever consume.  Every function returns 0 for odd weights and for weights
below the first cusp form (spaces with trivial character), which is the
load-bearing convention for the Eisenstein Euler characteristic where odd
arguments occur.  The level-1 value -1 at weight 2 is deliberately NOT
implemented here; the one place that needs it applies it locally.
"""

from __future__ import annotations

from .repring import IsoDecomp

SUPPORTED_LEVELS = (1, 2, 4)


def dim_cusp(level, weight):
    """dim S_k(Gamma_0(N)) for N in {1, 2, 4}."""
    if level not in SUPPORTED_LEVELS:
        raise ValueError(f"unsupported level {level}")
    k = weight
    if k % 2 != 0 or k < 4:
        return 0
    if level == 1:
        return k // 12 - (1 if k % 12 == 2 else 0)
    if level == 2:
        return k // 4 - 1
    return max(k // 2 - 2, 0)


def dim_new(level, weight):
    """Newform dimension d_{N,k}, by inverting the old/new divisor multiplicities."""
    if level not in SUPPORTED_LEVELS:
        raise ValueError(f"unsupported level {level}")
    if level == 1:
        return dim_cusp(1, weight)
    if level == 2:
        return dim_cusp(2, weight) - 2 * dim_new(1, weight)
    return dim_cusp(4, weight) - 2 * dim_new(2, weight) - 3 * dim_new(1, weight)


def dim_new_fricke(sign, weight):
    """Fricke-split newform dimension d^{+-}_{2,k} (Martin's cases by k mod 8)."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    k = weight
    if k % 2 != 0 or k <= 2:
        return 0
    d = dim_new(2, k)
    r = k % 8
    if r == 0:
        return (d + sign) // 2
    if r == 2:
        return (d - sign) // 2
    assert d % 2 == 0
    return d // 2


def cusp_gamma2_s3(weight):
    """S3-isotypical decomposition of S_k(Gamma(2)) for even weight k."""
    d1 = dim_new(1, weight)
    d2 = dim_new(2, weight)
    d4 = dim_new(4, weight)
    return IsoDecomp.from_dict(
        3, {(3,): d1, (2, 1): d1 + d2, (1, 1, 1): d4}
    )
