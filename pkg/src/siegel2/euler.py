"""Equivariant Euler characteristics of local systems on the level-2 moduli
space, as virtual S6 representations.

The computation runs over the fourteen strata: each group element contributes
the symplectic character value at its eigenvalue multiset, weighted by the
stratum Euler characteristic over the group order, attached to the power sum
indexed by its Weierstrass cycle type.  Aggregation over elements happens
once; per highest weight only one character evaluation per distinct
eigenvalue pair is needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .cyclotomic import log_root_of_unity
from .repring import power_sum_to_schur
from .sp4 import character_polynomial, evaluate_at_root_exponents, _pair_eigenvalues
from .strata import all_strata, enumerate_elements


@cache
def _aggregated():
    """{cycle type: {(ex, ey): total rational weight}} over all strata,
    with eigenvalue pairs recorded as zeta_120 exponents."""
    table = {}
    for spec in all_strata():
        enum = enumerate_elements(spec)
        weight = Fraction(enum.euler, enum.group_order)
        for el in enum.elements:
            x, y = _pair_eigenvalues(el.eigs)
            key = (log_root_of_unity(x), log_root_of_unity(y))
            row = table.setdefault(el.cycle_type, {})
            row[key] = row.get(key, Fraction(0)) + weight
    return table


@cache
def euler_characteristic(l, m):
    """E_c of the local system of highest weight (l, m), in the Schur basis.

    Every per-class coefficient is asserted rational and the assembled class
    function is asserted to be a virtual character (integral multiplicities).
    """
    char = character_polynomial(l, m)
    coeffs = {}
    for cycle_type, row in _aggregated().items():
        total = None
        for (ex, ey), w in row.items():
            val = evaluate_at_root_exponents(char, ex, ey)
            term = w * val
            total = term if total is None else total + term
        coeffs[cycle_type] = total.as_rational()
    return power_sum_to_schur(coeffs, n=6)
