"""Symplectic Schur polynomials for Sp(4).

The character of the irreducible Sp(4) representation of highest weight
(l, m) is kept as a fully expanded two-variable integer Laurent polynomial,
obtained once by exact division in the Weyl character formula.  Storing the
expanded polynomial removes every singular-denominator case at torsion
points (the all-(-1) eigenvalue multiset occurs in every stratum).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache

from .cyclotomic import CONDUCTOR, CycNum, ONE, log_root_of_unity, zeta_pow


class EigenvaluePairingError(ValueError):
    """The eigenvalue multiset is not closed under inversion."""


@dataclass(frozen=True)
class LaurentChar:
    """An Sp(4) character as a sparse Laurent polynomial in two variables."""

    weight: tuple
    terms: dict = field(hash=False, compare=False)


def dimension(l, m):
    """Weyl dimension (l-m+1)(m+1)(l+2)(l+m+3)/6 of the (l, m) irreducible."""
    _check_weight(l, m)
    num = (l - m + 1) * (m + 1) * (l + 2) * (l + m + 3)
    assert num % 6 == 0
    return num // 6


def _check_weight(l, m):
    if not (isinstance(l, int) and isinstance(m, int)) or l < m or m < 0:
        raise ValueError(f"invalid Sp(4) highest weight ({l}, {m})")


def _odd_geometric(a):
    """(v^a - v^-a)/(v - v^-1) as exponent list [a-1, a-3, ..., -(a-1)]."""
    return list(range(a - 1, -a, -2))


def _alternant_reduced(l, m):
    """det[f_{l+2}, f_{m+1}] with one factor (x - 1/x)(y - 1/y) cancelled."""
    gx_l = _odd_geometric(l + 2)
    gx_m = _odd_geometric(m + 1)
    terms = {}
    for a in gx_l:
        for b in gx_m:
            terms[(a, b)] = terms.get((a, b), 0) + 1
            terms[(b, a)] = terms.get((b, a), 0) - 1
    return {k: v for k, v in terms.items() if v}


def _divide_core(terms):
    """Exact division by x + 1/x - y - 1/y, as polynomials in x over Z[y, 1/y].

    The divisor is monic in x, so plain long division terminates; a nonzero
    remainder is an internal error.
    """
    # organize as {x_exp: {y_exp: coeff}}
    num = {}
    for (a, b), c in terms.items():
        num.setdefault(a, {})[b] = num.setdefault(a, {}).get(b, 0) + c
    quotient = {}
    while num:
        top = max(num)
        lead = num.pop(top)
        qx = top - 1
        for b, c in lead.items():
            if c:
                quotient[(qx, b)] = quotient.get((qx, b), 0) + c
        # subtract lead * x^(top-1) * (x + 1/x - y - 1/y) minus the leading
        # block already removed: remaining pieces are x^(top-2), and the
        # -y, -1/y shifts at x^(top-1)
        for xs, ys in (((top - 2), 0), ((top - 1), 1), ((top - 1), -1)):
            sgn = 1 if ys == 0 else -1
            row = num.setdefault(xs, {})
            for b, c in lead.items():
                if c:
                    row[b + ys] = row.get(b + ys, 0) - sgn * c
        num = {
            x: {b: c for b, c in row.items() if c}
            for x, row in num.items()
        }
        num = {x: row for x, row in num.items() if row}
        if num and max(num) >= top:
            raise ArithmeticError("Laurent division did not reduce the degree")
    return quotient


@cache
def character_polynomial(l, m):
    """The expanded character of the Sp(4) irreducible of highest weight (l, m)."""
    _check_weight(l, m)
    quotient = _divide_core(_alternant_reduced(l, m))
    char = LaurentChar(weight=(l, m), terms=quotient)
    assert sum(quotient.values()) == dimension(l, m)
    return char


def _pair_eigenvalues(eigs):
    """Split a 4-multiset closed under inversion into (x, y)."""
    eigs = list(eigs)
    if len(eigs) != 4:
        raise EigenvaluePairingError("expected exactly four eigenvalues")
    x = eigs[0]
    for i in range(1, 4):
        if eigs[i] * x == ONE:
            rest = [eigs[j] for j in range(1, 4) if j != i]
            if rest[0] * rest[1] == ONE:
                return x, rest[0]
    raise EigenvaluePairingError(f"multiset not closed under inversion: {eigs!r}")


def evaluate(char, eigs):
    """Value of the character at a 4-multiset of cyclotomic eigenvalues."""
    x, y = _pair_eigenvalues(eigs)
    ex, ey = log_root_of_unity(x), log_root_of_unity(y)
    if ex is not None and ey is not None:
        return evaluate_at_root_exponents(char, ex, ey)
    xpow = _power_table(x, char)
    ypow = _power_table(y, char)
    total = CycNum.from_rational(0)
    for (a, b), c in char.terms.items():
        total = total + c * (xpow[a] * ypow[b])
    return total


def _power_table(v, char):
    exps = {a for (a, b) in char.terms} | {b for (a, b) in char.terms}
    table = {0: ONE}
    vinv = v.inverse()
    for e in sorted(exps):
        if e not in table:
            base = v if e > 0 else vinv
            table[e] = base ** abs(e)
    return table


def evaluate_at_root_exponents(char, ex, ey):
    """Fast path: x = zeta^ex, y = zeta^ey.  Accumulates integer coefficients
    on zeta-exponents and reduces into the field once."""
    acc = [0] * CONDUCTOR
    for (a, b), c in char.terms.items():
        acc[(a * ex + b * ey) % CONDUCTOR] += c
    return CycNum._from_power_coeffs(acc)
