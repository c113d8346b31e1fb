"""Arthur-packet decompositions of spaces of degree-2 Siegel modular forms
at level 2.

Scalar route (j = 0): the total space comes from the classical plethysm
formula, Eisenstein and Saito-Kurokawa parts from closed formulas, and the
general part by subtraction (its effectivity is a consistency check of the
whole scalar pipeline).

Vector route (j > 0): the Klingen-Eisenstein and Yoshida parts come from
closed formulas; the general part from the Euler-characteristic identity
  S^G = -1/4 (E_c - E_eis - E_endo + 2 Y)
with l = j+k-3, m = k-3.  The k = 3 case relies on a conjectural boundary
convention (a single d-value set to -1) and is flagged as such.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .elliptic import cusp_gamma2_s3, dim_new, dim_new_fricke
from .euler import euler_characteristic
from .repring import PARTITIONS, IsoDecomp, induce_from_H


class UnsupportedWeightError(ValueError):
    """Raised for the k = 2 vector-valued case, which has no proven
    dimension formula and is deliberately not implemented."""


def _s6(*partitions):
    out = IsoDecomp.zero(6)
    for p in partitions:
        out = out + IsoDecomp.irreducible(6, p)
    return out


# fixed combinations used by the Eisenstein and endoscopic formulas
A = _s6((6,), (5, 1), (4, 2))
A_PRIME = _s6((6,), (4, 2), (2, 2, 2))
B = _s6((4, 2), (3, 2, 1), (2, 2, 2))
B_PRIME = _s6((5, 1), (4, 2), (3, 2, 1))
C = _s6((3, 1, 1, 1), (2, 1, 1, 1, 1))
C_PRIME = _s6((4, 1, 1), (3, 3))

_S2CUBED = IsoDecomp.irreducible(6, (2, 2, 2))


def _check_j(j):
    if j % 2 != 0 or j < 0:
        raise ValueError(f"j must be even and non-negative, got {j}")


@cache
def scalar_total(k):
    """Isotypical decomposition of M_k for scalar weight k."""
    if k < 0:
        return IsoDecomp.zero(6)
    if k % 2 == 1:
        # odd-weight forms are chi_5 times forms of weight k - 5, and chi_5
        # spans the alternating representation
        return scalar_total(k - 5).sign_twist()
    total = _S2CUBED.symmetric_power(k // 2)
    if k >= 8:
        total = total - _S2CUBED.symmetric_power(k // 2 - 4)
    return total


def eisenstein_F(k, j=0):
    """Siegel-Eisenstein part E^F; nonzero only for scalar even weights."""
    _check_j(j)
    if j > 0 or k % 2 == 1 or k < 0:
        return IsoDecomp.zero(6)
    if k == 0:
        return _s6((6,))
    if k == 2:
        return _s6((2, 2, 2))
    return A_PRIME


def eisenstein_Q(k, j=0):
    """Klingen-Eisenstein part E^Q, induced from cusp forms of weight k+j
    at level 2; zero for odd k and for k <= 2."""
    _check_j(j)
    if k % 2 == 1 or k <= 2:
        return IsoDecomp.zero(6)
    return induce_from_H(cusp_gamma2_s3(k + j))


def saito_kurokawa(k, j=0):
    """Saito-Kurokawa part S^P: scalar-valued only, built from newform
    dimensions at elliptic weight 2k-2."""
    _check_j(j)
    if j > 0 or k < 0:
        return IsoDecomp.zero(6)
    w = 2 * k - 2
    if k % 2 == 1:
        return IsoDecomp.from_dict(
            6,
            {
                (5, 1): dim_new_fricke(-1, w),
                (3, 3): dim_new(4, w),
                (1, 1, 1, 1, 1, 1): dim_new_fricke(+1, w),
            },
        )
    return IsoDecomp.from_dict(
        6,
        {
            (6,): dim_new(1, w),
            (4, 2): dim_new(1, w) + dim_new_fricke(+1, w),
            (2, 2, 2): dim_new(1, w) + dim_new_fricke(-1, w),
        },
    )


def yoshida(k, j):
    """Yoshida part S^Y for vector-valued weights (k >= 3, j > 0)."""
    _check_j(j)
    if j == 0 or k < 3:
        return IsoDecomp.zero(6)
    wa, wb = j + 2 * k - 2, j + 2
    mu1 = dim_new_fricke(+1, wa) * dim_new_fricke(+1, wb) + dim_new_fricke(
        -1, wa
    ) * dim_new_fricke(-1, wb)
    mu2 = dim_new(4, wa) * dim_new(4, wb)
    mu3 = dim_new_fricke(+1, wa) * dim_new_fricke(-1, wb) + dim_new_fricke(
        -1, wa
    ) * dim_new_fricke(+1, wb)
    return IsoDecomp.from_dict(
        6, {(2, 2, 2): mu1, (2, 1, 1, 1, 1): mu2, (1, 1, 1, 1, 1, 1): mu3}
    )


def _check_lm(l, m):
    if not (l >= m >= 0):
        raise ValueError(f"need l >= m >= 0, got ({l}, {m})")
    if (l + m) % 2 != 0:
        raise ValueError(f"need l + m even, got ({l}, {m})")
    if (l, m) == (0, 0):
        raise ValueError("(0, 0) is outside the Eisenstein/endoscopic formulas")


def euler_eis(l, m):
    """Eisenstein part of the Euler characteristic for highest weight (l, m).

    Returns (decomposition, conjectural): for m = 0 the boundary convention
    replaces the d-value at elliptic weight 2 by -1, which is conjectural.
    """
    _check_lm(l, m)
    n, np = l + m + 4, l - m + 2
    d1, d2, d4 = (
        lambda w: dim_new(1, w),
        lambda w: dim_new(2, w),
        lambda w: dim_new(4, w),
    )
    # boundary convention at m = 0: the weight-2 newform values are taken
    # from the virtual motives S[Gamma_0(N), 2] = -L - 1 (genus-zero modular
    # curves), whose old/new inversion yields -1, +1, 0 at levels 1, 2, 4
    d1_m2 = -1 if m == 0 else d1(m + 2)
    d2_m2 = +1 if m == 0 else d2(m + 2)
    out = (
        (d1(np) - d1(n)) * (A_PRIME + B_PRIME)
        + (d2(np) - d2(n)) * B_PRIME
        + (d4(np) - d4(n)) * C_PRIME
        + (1 if m % 2 == 0 else 0) * (A + B)
        + 2
        * (
            (d1_m2 - d1(l + 3)) * (A + B)
            + (d2_m2 - d2(l + 3)) * B
            + (d4(m + 2) - d4(l + 3)) * C
        )
    )
    return out, m == 0


def euler_endo(l, m):
    """Endoscopic part of the Euler characteristic for highest weight (l, m)."""
    _check_lm(l, m)
    n, np = l + m + 4, l - m + 2
    d1n, d2n, d4n = dim_new(1, n), dim_new(2, n), dim_new(4, n)
    dpn, dmn = dim_new_fricke(+1, n), dim_new_fricke(-1, n)
    inner = (
        dim_new(4, np)
        * IsoDecomp.from_dict(
            6, {(3, 1, 1, 1): d4n, (3, 3): d1n, (4, 1, 1): d1n + d2n}
        )
        + dim_new(2, np)
        * IsoDecomp.from_dict(
            6,
            {(3, 2, 1): d1n + d2n, (4, 1, 1): d4n, (4, 2): d1n, (5, 1): d1n},
        )
        + dim_new_fricke(+1, np)
        * IsoDecomp.from_dict(6, {(4, 2): dpn, (5, 1): dmn})
        + dim_new_fricke(-1, np)
        * IsoDecomp.from_dict(6, {(4, 2): dmn, (5, 1): dpn})
        + dim_new(1, np)
        * (d1n * (A_PRIME + B_PRIME) + d2n * B_PRIME + d4n * C_PRIME)
    )
    return -2 * inner


def general_type(k, j):
    """General-type part S^G.

    Vector route (j > 0, k >= 3): the Euler-characteristic identity; the
    quarter-integrality and effectivity of the result are asserted.  Scalar
    route (j = 0): subtraction of all other parts from the total.
    Returns (decomposition, conjectural).
    """
    _check_j(j)
    if j == 0:
        total = scalar_total(k)
        g = total - eisenstein_F(k) - eisenstein_Q(k) - saito_kurokawa(k)
        assert g.is_effective(), f"negative scalar S^G at k={k}: {g}"
        return g, False
    if k <= 1:
        return IsoDecomp.zero(6), False
    if k == 2:
        raise UnsupportedWeightError(
            "unsupported: k=2 vector-valued case is conjectural and not implemented"
        )
    l, m = j + k - 3, k - 3
    eis, conjectural = euler_eis(l, m)
    combo = (
        euler_characteristic(l, m) - eis - euler_endo(l, m) + 2 * yoshida(k, j)
    )
    mult = []
    for c in combo.mult:
        assert c % 4 == 0, f"S^G combination not divisible by 4 at (k,j)=({k},{j})"
        mult.append(-c // 4)
    g = IsoDecomp(6, tuple(mult))
    assert g.is_effective(), f"negative S^G at (k,j)=({k},{j}): {g}"
    return g, conjectural


def tsushima_dim(k, j):
    """Closed dimension formula: dim S_{k,j} for odd k >= 3, dim M_{k,j} for
    even k >= 4 (j >= 2 even)."""
    _check_j(j)
    if j < 2 or k < 3:
        raise ValueError(f"closed formula needs k >= 3 and even j >= 2, got ({k}, {j})")
    if k % 2 == 1:
        num = (
            2 * (j + 1) * k**3
            + 3 * (j**2 - 2 * j - 8) * k**2
            + (j**3 - 9 * j**2 - 42 * j + 118) * k
            - 2 * j**3
            - 9 * j**2
            + 152 * j
            - 216
        )
    else:
        if k < 4:
            raise ValueError("even-weight formula needs k >= 4")
        num = (
            2 * (j + 1) * k**3
            + 3 * (j**2 - 2 * j + 2) * k**2
            + (j**3 - 9 * j**2 - 12 * j + 28) * k
            - 2 * j**3
            - 9 * j**2
            + 182 * j
            - 336
        )
    assert num % 24 == 0
    return num // 24


def dim_s3j(j):
    """dim S_{3,j}, the specialization of the odd-weight formula at k = 3."""
    _check_j(j)
    if j < 2:
        raise ValueError("needs even j >= 2")
    num = (j - 2) * (j - 3) * (j - 4)
    assert num % 24 == 0
    return num // 24


PART_LABELS = ("M", "E", "S", "F", "Q", "P", "Y", "G")


@dataclass(frozen=True)
class PacketDecomposition:
    k: int
    j: int
    parts: dict  # label -> IsoDecomp for each of PART_LABELS
    conjectural: bool

    def __getitem__(self, label):
        return self.parts[label]


@cache
def decompose(k, j=0):
    """Full packet decomposition of M_{k,j}; see the module docstring for
    the two assembly routes."""
    _check_j(j)
    if j > 0 and k == 2:
        raise UnsupportedWeightError(
            "unsupported: k=2 vector-valued case is conjectural and not implemented"
        )
    zero = IsoDecomp.zero(6)
    if k < 0 or (j > 0 and k <= 1):
        f = q = p = y = g = zero
        conjectural = False
    elif j == 0:
        f = eisenstein_F(k)
        q = eisenstein_Q(k)
        p = saito_kurokawa(k)
        y = zero
        g, conjectural = general_type(k, 0)
    else:
        f = zero
        p = zero
        q = eisenstein_Q(k, j)
        y = yoshida(k, j)
        g, conjectural = general_type(k, j)
    e = f + q
    s = p + y + g
    m = e + s
    for label, part in (("F", f), ("Q", q), ("P", p), ("Y", y), ("G", g)):
        assert part.is_effective(), f"negative {label} part at ({k},{j})"
    return PacketDecomposition(
        k=k,
        j=j,
        parts={"M": m, "E": e, "S": s, "F": f, "Q": q, "P": p, "Y": y, "G": g},
        conjectural=conjectural,
    )


RESTRICTION_TARGETS = ("gamma1", "gamma0", "sp4z", "sp4z-eps")


def restrict_level(d, target):
    """Restrict a level-2 S6 decomposition to a larger group in the tower:
    gamma1 -> an S3 decomposition, gamma0 / sp4z / sp4z-eps -> dimensions."""
    m = d.__getitem__
    if target == "gamma1":
        return IsoDecomp.from_dict(
            3,
            {
                (3,): m((6,)) + m((4, 2)) + m((2, 2, 2)),
                (2, 1): m((5, 1)) + m((4, 2)) + m((3, 2, 1)),
                (1, 1, 1): m((4, 1, 1)) + m((3, 3)),
            },
        )
    if target == "gamma0":
        return m((6,)) + m((4, 2)) + m((2, 2, 2))
    if target == "sp4z":
        return m((6,))
    if target == "sp4z-eps":
        return m((1, 1, 1, 1, 1, 1))
    raise ValueError(f"unknown restriction target {target!r}")
