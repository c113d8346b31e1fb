"""Exact arithmetic in the cyclotomic field Q(zeta_120).

Every eigenvalue, multiplier and character value occurring in the level-2
computation is a root of unity whose order divides 120, so this single fixed
field is the universal home for all of them.  Elements are stored as dense
coordinate vectors in the power basis {zeta^0, ..., zeta^31} modulo the 120th
cyclotomic polynomial (phi(120) = 32).  All arithmetic is exact; there is no
floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

CONDUCTOR = 120
DEGREE = 32


class NotRationalError(ValueError):
    """Raised when a value expected to lie in Q has a nonzero cyclotomic part."""

    def __init__(self, element):
        super().__init__(f"element is not rational: {element!r}")
        self.element = element


class NotRootOfUnityError(ValueError):
    pass


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(a, b):
    # exact division of integer polynomials, leading coefficient of b = +-1
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] -= c * y
    assert not any(a), "non-exact polynomial division"
    return q


def _cyclotomic_polynomial(n):
    """Phi_n(x) via the Moebius product over divisors of n."""
    def mobius(m):
        result, p = 1, 2
        while p * p <= m:
            if m % p == 0:
                m //= p
                if m % p == 0:
                    return 0
                result = -result
            p += 1
        return -result if m > 1 else result

    num, den = [1], [1]
    for d in range(1, n + 1):
        if n % d == 0:
            mu = mobius(n // d)
            factor = [-1] + [0] * (d - 1) + [1]  # x^d - 1
            if mu == 1:
                num = _poly_mul(num, factor)
            elif mu == -1:
                den = _poly_mul(den, factor)
    return _poly_divexact(num, den)


_PHI = _cyclotomic_polynomial(CONDUCTOR)
assert len(_PHI) == DEGREE + 1 and _PHI[-1] == 1

# _XPOW[e] = coordinates of x^e modulo Phi_120, for e up to 2*(DEGREE-1)
# (the largest exponent produced by multiplying two reduced elements) and
# beyond CONDUCTOR so that zeta^e is available for any e mod 120.
_XPOW = []
for _e in range(max(2 * DEGREE, CONDUCTOR)):
    if _e < DEGREE:
        _v = [0] * DEGREE
        _v[_e] = 1
    else:
        _prev = _XPOW[_e - 1]
        _v = [0] + _prev[: DEGREE - 1]
        _top = _prev[DEGREE - 1]
        if _top:
            for _i in range(DEGREE):
                _v[_i] -= _top * _PHI[_i]
    _XPOW.append(_v)


class CycNum:
    """An element of Q(zeta_120), canonically reduced; immutable and hashable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if len(self.coeffs) != DEGREE:
            raise ValueError("coefficient vector must have length 32")

    @classmethod
    def from_rational(cls, q):
        return cls((Fraction(q),) + (Fraction(0),) * (DEGREE - 1))

    @classmethod
    def _from_power_coeffs(cls, coeffs):
        """Reduce a coefficient list on powers zeta^0..zeta^(len-1) of any length."""
        out = [Fraction(0)] * DEGREE
        for e, c in enumerate(coeffs):
            if c:
                row = _XPOW[e % CONDUCTOR] if e >= len(_XPOW) else _XPOW[e]
                for i in range(DEGREE):
                    if row[i]:
                        out[i] += c * row[i]
        return cls(out)

    def __add__(self, other):
        other = _coerce(other)
        return CycNum(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return CycNum(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return CycNum(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = _coerce(other)
        conv = [Fraction(0)] * (2 * DEGREE - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        conv[i + j] += a * b
        return CycNum._from_power_coeffs(conv)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_120."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero in Q(zeta_120)")
        # work with polynomials as coefficient lists of Fractions
        a = [Fraction(c) for c in _PHI]
        b = list(self.coeffs)
        s_a, s_b = [Fraction(0)], [Fraction(1)]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        while deg(b) > 0:
            da, db = deg(a), deg(b)
            if da < db:
                a, b, s_a, s_b = b, a, s_b, s_a
                da, db = db, da
            c = a[da] / b[db]
            shift = da - db
            for i in range(db + 1):
                a[i + shift] -= c * b[i]
            s_b_sh = [Fraction(0)] * shift + s_b
            s_a = s_a + [Fraction(0)] * (len(s_b_sh) - len(s_a))
            s_b_sh = s_b_sh + [Fraction(0)] * (len(s_a) - len(s_b_sh))
            s_a = [x - c * y for x, y in zip(s_a, s_b_sh)]
        assert deg(b) == 0, "Phi_120 is irreducible so the gcd must be constant"
        lead = b[0]
        inv = [c / lead for c in s_b]
        return CycNum._from_power_coeffs(inv)

    def is_zero(self):
        return not any(self.coeffs)

    def as_rational(self):
        """The value as an exact rational, if the element lies in Q."""
        if any(self.coeffs[1:]):
            raise NotRationalError(self)
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum.from_rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*z^{e}" if e else str(c))
        return "CycNum(" + (" + ".join(terms) if terms else "0") + ")"


def _coerce(x):
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycNum.from_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into Q(zeta_120)")


ZERO = CycNum.from_rational(0)
ONE = CycNum.from_rational(1)

# all 120th roots of unity, indexed by exponent
ZETA = tuple(CycNum._from_power_coeffs([0] * e + [1]) for e in range(CONDUCTOR))
_ZETA_INDEX = {z: e for e, z in enumerate(ZETA)}


def zeta_pow(e):
    """zeta_120 raised to the integer power e."""
    return ZETA[e % CONDUCTOR]


def root_of_unity(n, a=1):
    """epsilon_n^a = exp(2*pi*i*a/n), for n dividing 120."""
    if n <= 0 or CONDUCTOR % n != 0:
        raise ValueError(f"order {n} does not divide {CONDUCTOR}")
    return ZETA[(CONDUCTOR // n) * a % CONDUCTOR]


def log_root_of_unity(a):
    """The exponent e with a = zeta_120^e, or None if a is not such a root."""
    return _ZETA_INDEX.get(a)


def sqrt_of_root_of_unity(a):
    """Some s with s*s == a, for a a root of unity whose order d has 2d | 120.

    Callers use both s and -s symmetrically, so the branch choice is free.
    """
    e = log_root_of_unity(a)
    if e is None:
        raise NotRootOfUnityError(f"not a root of unity in Q(zeta_120): {a!r}")
    d = CONDUCTOR // _gcd(e, CONDUCTOR)
    if CONDUCTOR % (2 * d) != 0:
        raise NotRootOfUnityError(f"order {d} inadmissible: 2*{d} does not divide 120")
    # admissible orders force e even, so halving the exponent stays integral
    assert e % 2 == 0
    return ZETA[e // 2]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
