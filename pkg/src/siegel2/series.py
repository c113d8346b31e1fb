"""Generating-series oracles for the scalar-weight decompositions.

Every rational generating function for a multiplicity or dimension series is
transcribed here as literal numerator/denominator data and never feeds any
computation: the single consumer is `verify_tables`, which expands each
series exactly and compares coefficient-by-coefficient against the computed
pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .packets import (
    decompose,
    eisenstein_F,
    eisenstein_Q,
    restrict_level,
    saito_kurokawa,
    scalar_total,
)

P6 = {
    "6": (6,),
    "51": (5, 1),
    "42": (4, 2),
    "411": (4, 1, 1),
    "33": (3, 3),
    "321": (3, 2, 1),
    "3111": (3, 1, 1, 1),
    "222": (2, 2, 2),
    "2211": (2, 2, 1, 1),
    "21111": (2, 1, 1, 1, 1),
    "111111": (1, 1, 1, 1, 1, 1),
}


@dataclass(frozen=True)
class SeriesSpec:
    label: str
    family: str
    partition: tuple  # partition of 6, or None for a dimension series
    num: tuple  # numerator coefficients, constant term first
    den: tuple  # tuple of factor coefficient tuples
    parity: str  # 'even', 'odd' or 'all' weight support


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _g(a):
    """Factor 1 - t^a."""
    return tuple([1] + [0] * (a - 1) + [-1])


def _p(*monomials):
    """Sparse polynomial from (exponent, coefficient) pairs."""
    top = max(e for e, _ in monomials)
    out = [0] * (top + 1)
    for e, c in monomials:
        out[e] += c
    return tuple(out)


def _shift(e, poly):
    return tuple([0] * e + list(poly))


def expand(spec, order):
    """Exact power-series coefficients of num/den up to t^order."""
    den = [1]
    for f in spec.den:
        den = _poly_mul(den, f)
    if den[0] == 0:
        raise ValueError("denominator has zero constant term")
    assert den[0] == 1
    num = list(spec.num) + [0] * max(0, order + 1 - len(spec.num))
    out = []
    for n in range(order + 1):
        c = num[n] if n < len(num) else 0
        for i in range(1, min(n, len(den) - 1) + 1):
            c -= den[i] * out[n - i]
        out.append(c)
    return out


def _mk(label, family, parity, part_key, num, *den_orders, den_extra=()):
    return SeriesSpec(
        label=label,
        family=family,
        partition=P6[part_key] if part_key else None,
        num=tuple(num),
        den=tuple(_g(a) for a in den_orders) + tuple(den_extra),
        parity=parity,
    )


def _family(family, parity, rows):
    return [
        _mk(f"{family}/{key or 'dim'}", family, parity, key, num, *den)
        for key, num, den in rows
    ]


ONE_PLUS_T2 = (1, 0, 1)

ALL_SERIES = (
    # total spaces, every weight
    _family(
        "M",
        "all",
        [
            ("6", _p((0, 1), (35, 1)), (4, 6, 10, 12)),
            ("51", _shift(11, (1, 1)), (4, 6, 4, 6)),
            ("42", _p((4, 1), (19, 1)), (2, 4, 4, 10)),
            ("411", _p((11, 1), (15, 1)), (1, 4, 6, 12)),
            ("33", _p((7, 1), (20, 1)), (2, 4, 6, 12)),
            ("321", _p((8, 1), (16, -1)), (2, 2, 5, 6, 6)),
            ("3111", _p((6, 1), (10, 1), (17, 1), (21, 1)), (2, 4, 6, 12)),
            ("222", _p((2, 1), (25, 1)), (2, 4, 6, 12)),
            ("2211", _p((9, 1)), (2, 4, 4, 5)),
            ("21111", _p((6, 1), (17, 1)), (4, 6, 4, 6)),
            ("111111", _p((5, 1), (30, 1)), (4, 6, 10, 12)),
            (None, _poly_mul(_poly_mul((1, 0, 1), (1, 0, 0, 0, 1)), (1, 0, 0, 0, 0, 1)), (2, 2, 2, 2)),
        ],
    )
    # cusp forms of odd weight
    + _family(
        "S_odd",
        "odd",
        [
            ("6", _p((35, 1)), (4, 6, 10, 12)),
            ("51", _p((11, 1)), (4, 4, 6, 6)),
            ("42", _p((19, 1)), (2, 4, 4, 10)),
            ("411", _p((11, 1), (15, 1)), (2, 4, 6, 12)),
            ("33", _p((7, 1)), (2, 4, 6, 12)),
            ("321", _p((13, 1), (15, 1), (17, 1), (19, 1)), (2, 6, 6, 10)),
            ("3111", _p((17, 1), (21, 1)), (2, 4, 6, 12)),
            ("222", _p((25, 1)), (2, 4, 6, 12)),
            ("2211", _p((9, 1)), (2, 4, 4, 5)),
            ("21111", _p((17, 1)), (4, 4, 6, 6)),
            ("111111", _p((5, 1)), (4, 6, 10, 12)),
            (None, _p((5, 1), (7, 1), (9, 1), (11, 1)), (2, 2, 2, 2)),
        ],
    )
    # Saito-Kurokawa and general type, odd weight
    + _family(
        "P_odd",
        "odd",
        [
            ("51", _p((11, 1)), (4, 6)),
            ("33", _p((7, 1)), (2, 6)),
            ("111111", _p((5, 1)), (4, 6)),
            (None, _p((5, 1), (7, 5), (9, 5), (11, 5)), (4, 6)),
        ],
    )
    + [
        _mk("G_odd/51", "G_odd", "odd", "51", _p((15, 1), (17, 1), (21, -1)), 4, 4, 6, 6),
        _mk("G_odd/33", "G_odd", "odd", "33", _p((11, 1), (19, 1), (23, -1)), 2, 4, 6, 12),
        _mk(
            "G_odd/111111",
            "G_odd",
            "odd",
            "111111",
            _p((15, 1), (17, 1), (27, -1)),
            4, 6, 10, 12,
        ),
        _mk(
            "G_odd/dim",
            "G_odd",
            "odd",
            None,
            _p((9, 9), (11, 6), (13, 10), (15, -2), (17, 1)),
            2, 2, 2, 6,
            den_extra=(ONE_PLUS_T2,),
        ),
    ]
    # total spaces of even weight
    + _family(
        "M_even",
        "even",
        [
            ("6", (1,), (4, 6, 10, 12)),
            ("51", _p((12, 1)), (4, 4, 6, 6)),
            ("42", _p((4, 1)), (2, 4, 4, 10)),
            ("411", _p((12, 1), (16, 1)), (2, 4, 6, 12)),
            ("33", _p((20, 1)), (2, 4, 6, 12)),
            # numerator corrected from a printed t^8 to t^6: the t^8 variant
            # contradicts both the explicit weight-14 table row (6, not 5)
            # and the sum of the Eisenstein and cusp series for this irrep
            ("321", _p((8, 1), (10, 1), (12, 1), (14, 1)), (2, 6, 6, 10)),
            ("3111", _p((6, 1), (10, 1)), (2, 4, 6, 12)),
            ("222", _p((2, 1)), (2, 4, 6, 12)),
            ("2211", _p((14, 1)), (2, 4, 4, 10)),
            ("21111", _p((6, 1)), (4, 4, 6, 6)),
            ("111111", _p((30, 1)), (4, 6, 10, 12)),
            (None, _poly_mul((1, 0, 1), (1, 0, 0, 0, 1)), (2, 2, 2, 2)),
        ],
    )
    + [
        _mk("M_gamma0/dim", "M_gamma0", "even", None, _p((0, 1), (19, 1)), 2, 4, 4, 6),
    ]
    # Eisenstein parts, even weight
    + _family(
        "EF",
        "even",
        [
            ("6", _p((0, 1), (2, -1), (4, 1)), (2,)),
            ("51", (0,), ()),
            ("42", _p((4, 1)), (2,)),
            ("321", (0,), ()),
            ("3111", (0,), ()),
            ("222", _p((2, 1)), (2,)),
            ("21111", (0,), ()),
        ],
    )
    + _family(
        "EQ",
        "even",
        [
            ("6", _p((12, 1)), (4, 6)),
            ("51", _p((12, 1)), (4, 6)),
            ("42", _p((8, 1)), (2, 4)),
            ("321", _p((8, 1)), (2, 6)),
            ("3111", _p((6, 1)), (4, 6)),
            ("222", _p((8, 1)), (2, 6)),
            ("21111", _p((6, 1)), (4, 6)),
            (None, _p((6, 15)), (2, 2)),
        ],
    )
    # cusp forms of even weight
    + _family(
        "S_even",
        "even",
        [
            ("6", _p((10, 1), (12, 1), (22, -1)), (4, 6, 10, 12)),
            ("51", _p((16, 1), (18, 1), (22, -1)), (4, 4, 6, 6)),
            ("42", _p((8, 1), (14, 1), (18, -1)), (2, 4, 4, 10)),
            ("411", _p((12, 1), (16, 1)), (2, 4, 6, 12)),
            ("33", _p((20, 1)), (2, 4, 6, 12)),
            ("321", _p((10, 1), (12, 1), (14, 2), (18, 1), (24, -1)), (2, 6, 6, 10)),
            ("3111", _p((8, 1), (10, 1), (18, 1), (20, -1)), (2, 4, 6, 12)),
            ("222", _p((6, 1), (14, 1), (18, -1)), (2, 4, 6, 12)),
            ("2211", _p((14, 1)), (2, 4, 4, 10)),
            ("21111", _p((10, 1), (12, 1), (16, -1)), (4, 4, 6, 6)),
            ("111111", _p((30, 1)), (4, 6, 10, 12)),
            (None, _p((6, 5), (8, 4), (10, -5)), (2, 2, 2, 2)),
        ],
    )
    # Saito-Kurokawa and general type, even weight
    + _family(
        "P_even",
        "even",
        [
            ("6", _p((10, 1)), (2, 6)),
            ("42", _p((8, 1)), (2, 4)),
            ("222", _p((6, 1)), (2, 4)),
            (None, _p((6, 5), (8, 14), (10, 15), (12, 10)), (4, 6)),
        ],
    )
    + _family(
        "G_even",
        "even",
        [
            ("6", _p((20, 1), (22, 1), (24, 1), (32, -1), (34, -1)), (4, 6, 10, 12)),
            ("42", _p((12, 1), (14, 1), (22, -1)), (2, 4, 4, 10)),
            ("222", _p((12, 1), (14, 1), (24, -1)), (2, 4, 6, 12)),
            (None, _p((8, 10), (10, 21), (12, 9), (14, -1), (16, -15)), (2, 2, 4, 6)),
        ],
    )
)


def _computed(family, k, partition):
    """Pipeline value compared against a series coefficient."""
    if family == "M" or family == "M_even":
        value = scalar_total(k)
    elif family == "M_gamma0":
        return restrict_level(scalar_total(k), "gamma0")
    elif family == "EF":
        value = eisenstein_F(k)
    elif family == "EQ":
        value = eisenstein_Q(k)
    elif family in ("P_odd", "P_even"):
        value = saito_kurokawa(k)
    elif family in ("S_odd", "S_even"):
        value = decompose(k)["S"]
    elif family in ("G_odd", "G_even"):
        value = decompose(k)["G"]
    else:
        raise ValueError(f"unknown series family {family!r}")
    return value[partition] if partition is not None else value.dimension()


@dataclass(frozen=True)
class SeriesResult:
    label: str
    checked: int
    first_mismatch: tuple  # (weight, expected, got) or None

    @property
    def ok(self):
        return self.first_mismatch is None


@dataclass(frozen=True)
class VerifyReport:
    max_order: int
    results: tuple

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    @property
    def failures(self):
        return tuple(r for r in self.results if not r.ok)


def verify_tables(max_order=60):
    """Compare every transcribed series against the computed pipeline."""
    results = []
    for spec in ALL_SERIES:
        coeffs = expand(spec, max_order)
        first_bad = None
        checked = 0
        for k in range(max_order + 1):
            if spec.parity == "even" and k % 2 == 1:
                continue
            if spec.parity == "odd" and k % 2 == 0:
                continue
            got = _computed(spec.family, k, spec.partition)
            checked += 1
            if got != coeffs[k]:
                first_bad = (k, coeffs[k], got)
                break
        results.append(
            SeriesResult(label=spec.label, checked=checked, first_mismatch=first_bad)
        )
    return VerifyReport(max_order=max_order, results=tuple(results))
