"""Representation rings of the symmetric groups S6 and S3.

Irreducible characters are computed on demand by the Murnaghan-Nakayama rule
(via beta-sets) and memoized; nothing is transcribed from printed character
tables, so orthogonality checks in the test suite verify the whole table.
Virtual representations (negative multiplicities) are first class, since
Euler characteristics live in the representation ring rather than in the
effective cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, gcd

# canonical irrep/class ordering; for n = 6 this fixes the column order of
# every table and serialized output
PARTITIONS = {
    6: (
        (6,),
        (5, 1),
        (4, 2),
        (4, 1, 1),
        (3, 3),
        (3, 2, 1),
        (3, 1, 1, 1),
        (2, 2, 2),
        (2, 2, 1, 1),
        (2, 1, 1, 1, 1),
        (1, 1, 1, 1, 1, 1),
    ),
    3: ((3,), (2, 1), (1, 1, 1)),
}

PART_INDEX = {n: {p: i for i, p in enumerate(ps)} for n, ps in PARTITIONS.items()}


class NonIntegralMultiplicityError(ArithmeticError):
    """A class function expected to be a virtual character was not one."""


def _beta_set(partition, length):
    parts = list(partition) + [0] * (length - len(partition))
    return tuple(sorted(parts[i] + (length - 1 - i) for i in range(length)))


@cache
def _mn(beta, mu):
    # Murnaghan-Nakayama on beta-sets: removing a border strip of size r
    # corresponds to replacing some b in beta by b - r, with sign given by
    # the number of beta entries jumped over.
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    bset = set(beta)
    blist = sorted(beta)
    for b in blist:
        t = b - r
        if t >= 0 and t not in bset:
            height = sum(1 for c in blist if t < c < b)
            new = tuple(sorted(bset - {b} | {t}))
            total += (-1) ** height * _mn(new, rest)
    return total


def character_value(irrep, conj_class):
    """chi^irrep evaluated on the conjugacy class with the given cycle type."""
    irrep, conj_class = tuple(irrep), tuple(conj_class)
    n = sum(irrep)
    if sum(conj_class) != n:
        raise ValueError(f"partitions of different sizes: {irrep} vs {conj_class}")
    return _mn(_beta_set(irrep, n), tuple(sorted(conj_class, reverse=True)))


@cache
def centralizer_order(mu):
    z = 1
    for j in set(mu):
        m = mu.count(j)
        z *= j**m * factorial(m)
    return z


def class_size(mu):
    return factorial(sum(mu)) // centralizer_order(mu)


@cache
def power_cycle_type(mu, r):
    """Cycle type of g^r for g of cycle type mu (a j-cycle splits into
    gcd(j, r) cycles of length j // gcd(j, r))."""
    parts = []
    for j in mu:
        g = gcd(j, r)
        parts.extend([j // g] * g)
    return tuple(sorted(parts, reverse=True))


@dataclass(frozen=True)
class IsoDecomp:
    """A virtual S_n representation as multiplicities in the Schur basis."""

    n: int
    mult: tuple

    def __post_init__(self):
        if len(self.mult) != len(PARTITIONS[self.n]):
            raise ValueError("wrong multiplicity vector length")

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * len(PARTITIONS[n]))

    @classmethod
    def irreducible(cls, n, partition):
        i = PART_INDEX[n][tuple(partition)]
        mult = [0] * len(PARTITIONS[n])
        mult[i] = 1
        return cls(n, tuple(mult))

    @classmethod
    def from_dict(cls, n, d):
        mult = [0] * len(PARTITIONS[n])
        for p, m in d.items():
            mult[PART_INDEX[n][tuple(p)]] = m
        return cls(n, tuple(mult))

    def __getitem__(self, partition):
        return self.mult[PART_INDEX[self.n][tuple(partition)]]

    def __add__(self, other):
        self._check(other)
        return IsoDecomp(self.n, tuple(a + b for a, b in zip(self.mult, other.mult)))

    def __sub__(self, other):
        self._check(other)
        return IsoDecomp(self.n, tuple(a - b for a, b in zip(self.mult, other.mult)))

    def __neg__(self):
        return IsoDecomp(self.n, tuple(-a for a in self.mult))

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return IsoDecomp(self.n, tuple(scalar * a for a in self.mult))

    def _check(self, other):
        if not isinstance(other, IsoDecomp) or other.n != self.n:
            raise ValueError("mixed symmetric groups")

    def is_zero(self):
        return not any(self.mult)

    def is_effective(self):
        return all(m >= 0 for m in self.mult)

    def dimension(self):
        return sum(
            m * character_value(p, (1,) * self.n)
            for m, p in zip(self.mult, PARTITIONS[self.n])
        )

    def character(self, conj_class):
        return sum(
            m * character_value(p, conj_class)
            for m, p in zip(self.mult, PARTITIONS[self.n])
        )

    def character_vector(self):
        return tuple(self.character(mu) for mu in PARTITIONS[self.n])

    def tensor(self, other):
        self._check(other)
        chi = [
            a * b
            for a, b in zip(self.character_vector(), other.character_vector())
        ]
        return _from_character_vector(self.n, chi)

    def sign_twist(self):
        sign = PARTITIONS[self.n][-1]
        return self.tensor(IsoDecomp.irreducible(self.n, sign))

    def symmetric_power(self, power):
        """The power-th symmetric power, via the Newton-style character
        recursion chi_{Sym^n}(g) = (1/n) sum_r chi(g^r) chi_{Sym^(n-r)}(g)."""
        chi = _sym_power_character(self.n, self.mult, power)
        return _from_character_vector(self.n, chi)

    def __str__(self):
        terms = []
        for m, p in zip(self.mult, PARTITIONS[self.n]):
            if m:
                name = "s" + format_partition(p)
                terms.append(name if m == 1 else f"{m}*{name}" if m > 0 else f"({m})*{name}")
        return " + ".join(terms) if terms else "0"


def format_partition(p):
    """Exponent-style partition label, e.g. [2^3] or [3,1^3]."""
    pieces = []
    for v in sorted(set(p), reverse=True):
        c = p.count(v)
        pieces.append(f"{v}^{c}" if c > 1 else f"{v}")
    return "[" + ",".join(pieces) + "]"


@cache
def _sym_power_character(n, mult, power):
    base = IsoDecomp(n, mult)
    if power == 0:
        return tuple(1 for _ in PARTITIONS[n])
    if power == 1:
        return base.character_vector()
    classes = PARTITIONS[n]
    prev = {r: _sym_power_character(n, mult, power - r) for r in range(1, power + 1)}
    chi = []
    for ci, mu in enumerate(classes):
        total = Fraction(0)
        for r in range(1, power + 1):
            val = base.character(power_cycle_type(mu, r))
            total += Fraction(val) * prev[r][ci]
        chi.append(total / power)
    return tuple(chi)


def _from_character_vector(n, chi):
    """Schur multiplicities of a class function given by its values; errors
    if the result is not integral."""
    order = factorial(n)
    mult = []
    for p in PARTITIONS[n]:
        m = Fraction(0)
        for mu, v in zip(PARTITIONS[n], chi):
            m += Fraction(class_size(mu)) * Fraction(v) * character_value(p, mu)
        m /= order
        if m.denominator != 1:
            raise NonIntegralMultiplicityError(
                f"non-integral multiplicity {m} for s{format_partition(p)}"
            )
        mult.append(int(m))
    return IsoDecomp(n, tuple(mult))


def power_sum_to_schur(coeffs, n=6):
    """Convert power-sum coordinates (a map cycle type -> rational) to Schur
    multiplicities: m_pi = sum_mu c_mu chi^pi(mu)."""
    mult = []
    for p in PARTITIONS[n]:
        m = Fraction(0)
        for mu, c in coeffs.items():
            m += Fraction(c) * character_value(p, tuple(mu))
        if m.denominator != 1:
            raise NonIntegralMultiplicityError(
                f"non-integral multiplicity {m} for s{format_partition(p)}"
            )
        mult.append(int(m))
    return IsoDecomp(n, tuple(mult))


# induction table from the order-48 stabilizer H of a 1-dimensional boundary
# component: linear extension over the three S3 irreducibles
_INDUCTION = {
    (3,): (((6,), 1), ((5, 1), 1), ((4, 2), 1)),
    (2, 1): (((4, 2), 1), ((3, 2, 1), 1), ((2, 2, 2), 1)),
    (1, 1, 1): (((3, 1, 1, 1), 1), ((2, 1, 1, 1, 1), 1)),
}


def induce_from_H(decomp):
    """Induction of an S3 virtual representation up to S6 through H."""
    if decomp.n != 3:
        raise ValueError("induce_from_H expects an S3 decomposition")
    out = IsoDecomp.zero(6)
    for p3, m in zip(PARTITIONS[3], decomp.mult):
        if m:
            for p6, c in _INDUCTION[p3]:
                out = out + (m * c) * IsoDecomp.irreducible(6, p6)
    return out
