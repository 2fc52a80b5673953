"""Brute-force ground truth by direct enumeration over Z_p.

Everything here is definitionally simple on purpose: these counts are the
oracles the closed forms are checked against, so they avoid the identities
the closed forms rely on.  numpy keeps the O(p) scans fast enough for
exhaustive sweeps into the thousands.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _tables
from .errors import EmptyDomain, ZeroArgument

__all__ = [
    "CountResult",
    "Domain",
    "RationalMap",
    "discriminant_cubic",
    "jacobsthal_brute",
    "np_cubic_roots",
    "vp_brute",
]


class Domain(Enum):
    """Range of x for a residue count: all of Z_p, or the units only."""

    ALL = "all"
    NONZERO = "nonzero"


@dataclass(frozen=True)
class RationalMap:
    """A rational function given by coefficient tuples, ascending powers.

    Coefficients are arbitrary ints (reduced mod p at evaluation time);
    leading zeros are permitted and evaluation is plain Horner on the lists
    as given.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...] = (1,)

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(self.numerator))
        object.__setattr__(self, "denominator", tuple(self.denominator))
        if not self.numerator or not self.denominator:
            raise ValueError("coefficient tuples must be non-empty")

    @classmethod
    def from_poly(cls, coeffs) -> "RationalMap":
        return cls(tuple(coeffs), (1,))

    @classmethod
    def x2_plus_a_over_x(cls, a: int) -> "RationalMap":
        """x^2 + a/x, written as (x^3 + a) / x."""
        return cls((a, 0, 0, 1), (0, 1))

    @classmethod
    def x_plus_a_over_2x2(cls, a: int) -> "RationalMap":
        """x + a/(2x^2), written as (2x^3 + a) / (2x^2)."""
        return cls((a, 0, 0, 2), (0, 0, 2))

    @classmethod
    def cubic(cls, a1: int, a2: int, a3: int) -> "RationalMap":
        """The polynomial x^3 + a1 x^2 + a2 x + a3."""
        return cls((a3, a2, a1, 1), (1,))


@dataclass(frozen=True)
class CountResult:
    """Number of attained residues, plus the attainment bitmap on request."""

    v: int
    attained: np.ndarray | None = None


def _eval_poly(coeffs: tuple[int, ...], xs: np.ndarray, p: int) -> np.ndarray:
    acc = np.full(xs.shape, coeffs[-1] % p, dtype=np.int64)
    for c in coeffs[-2::-1]:
        acc = (acc * xs + c % p) % p
    return acc


def vp_brute(f: RationalMap, p: int, domain: Domain, want_bitmap: bool = False) -> CountResult:
    """Count distinct values of f over the domain, by enumeration.

    Denominator zeros are skipped; if every point is one, EmptyDomain is
    raised.  O(p) time and memory.  The modulus is capped where int64
    products stop being exact (~3.0e9); enumeration is impractical long
    before that.
    """
    xs = _tables.xs_all(p) if domain is Domain.ALL else _tables.xs_nonzero(p)
    num = _eval_poly(f.numerator, xs, p)
    den = _eval_poly(f.denominator, xs, p)
    ok = den != 0
    if not ok.all():
        if not ok.any():
            raise EmptyDomain(f"denominator vanishes on the whole domain mod {p}")
        num = num[ok]
        den = den[ok]
    vals = num * _tables.inv_table(p)[den] % p
    seen = np.zeros(p, dtype=bool)
    seen[vals] = True
    v = int(np.count_nonzero(seen))
    return CountResult(v, seen if want_bitmap else None)


def discriminant_cubic(a1: int, a2: int, a3: int) -> int:
    """Discriminant of x^3 + a1 x^2 + a2 x + a3, as an exact integer.

    D = a1^2 a2^2 - 4 a2^3 - 4 a1^3 a3 - 27 a3^2 + 18 a1 a2 a3.
    """
    return (
        a1 * a1 * a2 * a2
        - 4 * a2**3
        - 4 * a1**3 * a3
        - 27 * a3 * a3
        + 18 * a1 * a2 * a3
    )


def np_cubic_roots(a1: int, a2: int, a3: int, p: int) -> int:
    """Number of distinct roots of x^3 + a1 x^2 + a2 x + a3 mod p (0..3)."""
    vals = _eval_poly((a3, a2, a1, 1), _tables.xs_all(p), p)
    return int(np.count_nonzero(vals == 0))


def jacobsthal_brute(m: int, p: int) -> int:
    """The cubic Jacobsthal sum (m/p) * sum_{y=1}^{p-1} ((y^3 + m)/p).

    Straight from the definition via the quadratic-residue table.  Equals
    -1 for every nonzero m when p = 2 (mod 3), and is bounded by
    2*sqrt(p) + 1 in absolute value.
    """
    m %= p
    if m == 0:
        raise ZeroArgument("m must be nonzero mod p")
    qr = _tables.qr_table(p)
    vals = (_tables.cubes_nonzero(p) + m) % p
    return int(qr[m]) * int(qr[vals].sum())
