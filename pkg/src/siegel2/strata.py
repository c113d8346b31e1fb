"""Strata of the level-2 moduli space by automorphism group.

Two families feed the Euler-characteristic sum: seven strata of smooth
genus-2 curves (automorphism data given by a subgroup of SL(2, C) plus a
multiplier character) and seven strata of unordered pairs of elliptic
curves (products and wreath products of cyclic groups of order 2, 4, 6).

Multipliers are never read off the printed data: they are derived
symbolically from the invariance identity
    u^2 f(x) = (c x + d)^6 f((a x + b)/(c x + d)),
with the family parameters alpha, beta carried as formal indeterminates.
The tabulated values act only as cross-checks; discrepancies are surfaced
by the test suite, not silently patched.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .cyclotomic import (
    CycNum,
    ONE,
    ZERO,
    root_of_unity,
    sqrt_of_root_of_unity,
    zeta_pow,
)

MAX_GROUP_ORDER = 200


class StabilizerError(ValueError):
    """The matrix does not stabilize the stratum's family of curves."""


class InconsistentClosureError(RuntimeError):
    """The same group element was reached with conflicting permutation data."""


# ---------------------------------------------------------------------------
# permutations on six letters (0-based images)

IDENTITY_PERM = tuple(range(6))


def perm_from_cycles(*cycles):
    perm = list(range(6))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            perm[a - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(perm)


def perm_compose(p, q):
    """p after q: (p o q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(6))


def perm_cycle_type(p):
    seen, lengths = [False] * 6, []
    for i in range(6):
        if not seen[i]:
            n, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


# ---------------------------------------------------------------------------
# 2x2 matrices over Q(zeta_120), as (a, b, c, d)

MAT_ID = (ONE, ZERO, ZERO, ONE)
MAT_NEG_ID = (-ONE, ZERO, ZERO, -ONE)
MAT_U = (ZERO, ONE, -ONE, ZERO)


def mat_mul(m, n):
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_order(m, limit=48):
    p, k = m, 1
    while p != MAT_ID:
        p = mat_mul(p, m)
        k += 1
        if k > limit:
            raise ArithmeticError("matrix order exceeds expected bound")
    return k


def diag(a, b):
    return (a, ZERO, ZERO, b)


# ---------------------------------------------------------------------------
# polynomials in x with coefficients in Q(zeta_120)[alpha, beta]
# representation: {x_degree: {(alpha_exp, beta_exp): CycNum}}


def _param_poly(monomials):
    """Build from {x_degree: coefficient}, coefficient a CycNum/int for a
    parameter-free entry or the strings 'alpha'/'beta'."""
    f = {}
    for deg, coeff in monomials.items():
        if coeff == "alpha":
            f[deg] = {(1, 0): ONE}
        elif coeff == "beta":
            f[deg] = {(0, 1): ONE}
        else:
            c = coeff if isinstance(coeff, CycNum) else CycNum.from_rational(coeff)
            if not c.is_zero():
                f[deg] = {(0, 0): c}
    return f


def _binomial_power(u, v, n):
    """Coefficient list of (u x + v)^n over CycNum."""
    return [comb(n, i) * (u**i) * (v ** (n - i)) for i in range(n + 1)]


def derive_multiplier(f, gamma):
    """The forced multiplier u^2 for gamma acting on the family f.

    Expands (c x + d)^6 f((a x + b)/(c x + d)) symbolically and requires it
    to be a parameter-free scalar multiple of f.
    """
    a, b, c, d = gamma
    g = {}
    for deg, coeffs in f.items():
        top = _binomial_power(a, b, deg)
        bottom = _binomial_power(c, d, 6 - deg)
        for i, ti in enumerate(top):
            if ti.is_zero():
                continue
            for j, bj in enumerate(bottom):
                if bj.is_zero():
                    continue
                row = g.setdefault(i + j, {})
                for pe, coeff in coeffs.items():
                    row[pe] = row.get(pe, ZERO) + coeff * ti * bj
    g = {
        deg: {pe: v for pe, v in row.items() if not v.is_zero()}
        for deg, row in g.items()
    }
    g = {deg: row for deg, row in g.items() if row}

    top_deg = max(f)
    lead = f[top_deg]
    if set(lead) != {(0, 0)}:
        raise ValueError("family polynomial must have a parameter-free leading term")
    ratio = g.get(top_deg, {}).get((0, 0), ZERO) / lead[(0, 0)]
    for deg in set(f) | set(g):
        frow = f.get(deg, {})
        grow = g.get(deg, {})
        for pe in set(frow) | set(grow):
            if grow.get(pe, ZERO) != ratio * frow.get(pe, ZERO):
                raise StabilizerError("matrix does not stabilize the stratum family")
    return ratio


# ---------------------------------------------------------------------------
# stratum records


@dataclass(frozen=True)
class StratumSpec:
    name: str
    space: str  # "M2" or "A11"
    euler: int
    # M2 data
    S: tuple = None
    U: tuple = None
    sigma_S: tuple = None
    sigma_U: tuple = None
    f: dict = None
    rho_S_tabulated: CycNum = None
    rho_U_tabulated: CycNum = None
    gamma_order: int = None
    # A11 data
    factors: tuple = None
    wreath: bool = False


@dataclass(frozen=True)
class GroupElementData:
    eigs: tuple  # 4-multiset of CycNum
    cycle_type: tuple


@dataclass(frozen=True)
class StratumEnumeration:
    name: str
    elements: tuple
    group_order: int
    euler: int


def genus2_strata():
    """The seven genus-2 strata with their generator and multiplier data."""
    e4 = root_of_unity(4)
    e6 = root_of_unity(6)
    e8 = root_of_unity(8)
    e10 = root_of_unity(10)
    e12 = root_of_unity(12)
    sqrt2 = e8 + e8.inverse()
    return [
        StratumSpec(
            name="C2",
            space="M2",
            euler=-1,
            S=MAT_NEG_ID,
            sigma_S=IDENTITY_PERM,
            # generic curve: any squarefree sextic; -id acts trivially on x
            f=_param_poly({6: 1, 4: "alpha", 3: "beta", 0: 1}),
            rho_S_tabulated=ONE,
            gamma_order=2,
        ),
        StratumSpec(
            name="C4",
            space="M2",
            euler=3,
            S=diag(e4, e4.inverse()),
            sigma_S=perm_from_cycles((1, 2), (3, 4), (5, 6)),
            f=_param_poly({6: 1, 4: "alpha", 2: "beta", 0: 1}),
            rho_S_tabulated=-ONE,
            gamma_order=4,
        ),
        StratumSpec(
            name="Q8",
            space="M2",
            euler=-2,
            S=diag(e4, e4.inverse()),
            U=MAT_U,
            sigma_S=perm_from_cycles((2, 3), (4, 5)),
            sigma_U=perm_from_cycles((1, 6), (2, 4), (3, 5)),
            f=_param_poly({5: 1, 3: "alpha", 1: 1}),
            rho_S_tabulated=ONE,
            rho_U_tabulated=-ONE,
            gamma_order=8,
        ),
        StratumSpec(
            name="Q12",
            space="M2",
            euler=-2,
            S=diag(e6, e6.inverse()),
            U=MAT_U,
            sigma_S=perm_from_cycles((1, 2, 3), (4, 5, 6)),
            # the roots form two triples {a, e3*a, e3^2*a} and {b, e3*b,
            # e3^2*b} with b = -1/a; x -> -1/x then sends e3^i*a to
            # e3^(-i)*b, so the second triple is traversed in reverse
            sigma_U=perm_from_cycles((1, 4), (2, 6), (3, 5)),
            f=_param_poly({6: 1, 3: "alpha", 0: -1}),
            rho_S_tabulated=ONE,
            rho_U_tabulated=-ONE,
            gamma_order=12,
        ),
        StratumSpec(
            name="O",
            space="M2",
            euler=1,
            S=(-ONE / sqrt2, -e8 / sqrt2, -(e8**3) / sqrt2, -ONE / sqrt2),
            U=MAT_U,
            sigma_S=perm_from_cycles((1, 2, 6, 4)),
            sigma_U=perm_from_cycles((1, 6), (2, 3), (4, 5)),
            f=_param_poly({5: 1, 1: 1}),
            rho_S_tabulated=e8**3,
            rho_U_tabulated=-ONE,
            gamma_order=48,
        ),
        StratumSpec(
            name="Q24",
            space="M2",
            euler=1,
            S=diag(e12, e12.inverse()),
            U=MAT_U,
            sigma_S=perm_from_cycles((1, 2, 3, 4, 5, 6)),
            sigma_U=perm_from_cycles((1, 6), (2, 5), (3, 4)),
            f=_param_poly({6: 1, 0: -1}),
            rho_S_tabulated=-ONE,
            rho_U_tabulated=ONE,
            gamma_order=24,
        ),
        StratumSpec(
            name="C10",
            space="M2",
            euler=1,
            S=diag(e10, e10.inverse()),
            sigma_S=perm_from_cycles((2, 3, 4, 5, 6)),
            f=_param_poly({6: 1, 1: -1}),
            rho_S_tabulated=e10**6,
            gamma_order=10,
        ),
    ]


# elliptic factor data: cyclic order -> (zeta_120 exponent of the generator's
# H^1 eigenvalue, generator permutation on the curve's three finite
# Weierstrass points)
_ELLIPTIC_FACTORS = {
    2: (60, (0, 1, 2)),
    4: (30, (1, 0, 2)),
    6: (20, (1, 2, 0)),
}


def elliptic_pair_strata():
    """The seven product/wreath strata of pairs of elliptic curves."""
    data = [
        ("C2xC2", (2, 2), False, 1),
        ("C2wrS2", (2, 2), True, -1),
        ("C2xC4", (2, 4), False, -1),
        ("C2xC6", (2, 6), False, -1),
        ("C4wrS2", (4, 4), True, 1),
        ("C4xC6", (4, 6), False, 1),
        ("C6wrS2", (6, 6), True, 1),
    ]
    return [
        StratumSpec(name=n, space="A11", euler=e, factors=f, wreath=w)
        for n, f, w, e in data
    ]


def enumerate_elements(spec):
    if spec.space == "M2":
        return _enumerate_m2(spec)
    return _enumerate_a11(spec)


def _enumerate_m2(spec):
    """Close the generator set into the full multiplier extension of order
    2*|Gamma| and emit per-element eigenvalues and Weierstrass cycle types."""
    gens = []

    def add_generator(mat, perm):
        mult = derive_multiplier(spec.f, mat)
        u = sqrt_of_root_of_unity(mult)
        gens.append((mat, u, perm))
        gens.append((mat, -u, perm))

    add_generator(spec.S, spec.sigma_S)
    if spec.U is not None:
        add_generator(spec.U, spec.sigma_U)
    add_generator(MAT_NEG_ID, IDENTITY_PERM)

    seen = {(MAT_ID, ONE): IDENTITY_PERM}
    frontier = [(MAT_ID, ONE, IDENTITY_PERM)]
    while frontier:
        mat, u, perm = frontier.pop()
        for gmat, gu, gperm in gens:
            nmat = mat_mul(mat, gmat)
            nu = u * gu
            nperm = perm_compose(perm, gperm)
            key = (nmat, nu)
            if key in seen:
                if seen[key] != nperm:
                    raise InconsistentClosureError(
                        f"{spec.name}: element reached with two permutations"
                    )
            else:
                seen[key] = nperm
                frontier.append((nmat, nu, nperm))
                if len(seen) > MAX_GROUP_ORDER:
                    raise InconsistentClosureError(
                        f"{spec.name}: closure exceeds {MAX_GROUP_ORDER} elements"
                    )

    elements = []
    lam_cache = {}
    for (mat, u), perm in seen.items():
        if mat not in lam_cache:
            lam_cache[mat] = _matrix_eigenvalue(mat)
        lam = lam_cache[mat]
        uinv = u.inverse()
        linv = lam.inverse()
        eigs = (lam * uinv, linv * uinv, linv * u, lam * u)
        elements.append(GroupElementData(eigs=eigs, cycle_type=perm_cycle_type(perm)))
    if len(elements) != 2 * spec.gamma_order:
        raise InconsistentClosureError(
            f"{spec.name}: expected {2 * spec.gamma_order} elements, got {len(elements)}"
        )
    return StratumEnumeration(
        name=spec.name,
        elements=tuple(elements),
        group_order=len(elements),
        euler=spec.euler,
    )


def _matrix_eigenvalue(mat):
    """One eigenvalue of a finite-order SL(2) matrix, located exactly by
    matching lambda + 1/lambda against the trace among order-d candidates."""
    d = mat_order(mat)
    trace = mat[0] + mat[3]
    for a in range(d):
        lam = root_of_unity(d, a)
        if lam + lam.inverse() == trace:
            return lam
    raise ArithmeticError("no cyclotomic eigenvalue matches the trace")


def _factor_elements(n):
    """Elements of the order-n elliptic automorphism group as
    (eigenvalue exponent pair, permutation of the three finite points)."""
    ze, gen = _ELLIPTIC_FACTORS[n]
    out = []
    perm = (0, 1, 2)
    for j in range(n):
        out.append(((ze * j) % 120, (-ze * j) % 120, perm))
        perm = tuple(gen[perm[i]] for i in range(3))
    # close the loop: gen^n must be the identity
    assert perm == (0, 1, 2)
    return out


def _enumerate_a11(spec):
    n1, n2 = spec.factors
    f1 = _factor_elements(n1)
    f2 = _factor_elements(n2)
    elements = []
    for e1p, e1m, p1 in f1:
        for e2p, e2m, p2 in f2:
            eigs = tuple(zeta_pow(e) for e in (e1p, e1m, e2p, e2m))
            perm = tuple(p1) + tuple(3 + i for i in p2)
            elements.append(
                GroupElementData(eigs=eigs, cycle_type=perm_cycle_type(perm))
            )
    if spec.wreath:
        assert n1 == n2
        half = 60 // n1  # exponent step so that s^2 = zeta_n1^(j1+j2)
        for j1 in range(n1):
            for j2 in range(n1):
                s = (half * (j1 + j2)) % 120
                eigs = tuple(
                    zeta_pow(e) for e in (s, s + 60, (-s) % 120, (-s + 60) % 120)
                )
                p1 = f1[j1][2]
                p2 = f1[j2][2]
                perm = tuple(3 + p1[i] for i in range(3)) + tuple(
                    p2[i] for i in range(3)
                )
                elements.append(
                    GroupElementData(eigs=eigs, cycle_type=perm_cycle_type(perm))
                )
    order = n1 * n2 * (2 if spec.wreath else 1)
    assert len(elements) == order
    return StratumEnumeration(
        name=spec.name,
        elements=tuple(elements),
        group_order=order,
        euler=spec.euler,
    )


def all_strata():
    return genus2_strata() + elliptic_pair_strata()
