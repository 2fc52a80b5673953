"""Cubic residue classes and the curve-membership test behind them.

For p = 1 (mod 3) the cubes form an index-3 subgroup of the units; the
class of a is the value a^((p-1)/3), which is 1 or one of the two primitive
cube roots of unity (-1 +- A/B)/2.  The tags PLUS / MINUS follow the sign
inside that expression, with the (A, B) convention pinned by quadform.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

import numpy as np

from . import _tables
from .errors import BadK, SingularPoint, WrongResidueClass, ZeroArgument
from .modarith import as_residue, inv_mod
from .quadform import QuadRep, class_value_targets

__all__ = [
    "CubicClass",
    "count_t_preimages",
    "cubic_class",
    "h_set",
    "in_c0",
    "is_cubic_residue",
    "k_map",
    "t_map",
]


class CubicClass(Enum):
    """Which cube root of unity a^((p-1)/3) equals."""

    UNIT = "unit"
    PLUS = "plus"
    MINUS = "minus"


def cubic_class(a: int, p: int, rep: QuadRep) -> CubicClass:
    """Classify a nonzero residue a by the value of a^((p-1)/3) mod p.

    The QuadRep argument fixes which root of -3 is called A/B, hence which
    non-unit class is PLUS.  Only defined for p = 1 (mod 3).
    """
    if p % 3 != 1:
        raise WrongResidueClass(f"p = {p} is not 1 (mod 3)")
    a %= p
    if a == 0:
        raise ZeroArgument("0 has no cubic class")
    c = pow(a, (p - 1) // 3, p)
    if c == 1:
        return CubicClass.UNIT
    t_plus, t_minus = class_value_targets(p, rep)
    if c == t_plus:
        return CubicClass.PLUS
    if c == t_minus:
        return CubicClass.MINUS
    raise WrongResidueClass(
        f"{a}^((p-1)/3) mod {p} = {c} is not a cube root of unity; is p prime?"
    )


def is_cubic_residue(a: int, p: int) -> bool:
    """Whether a is a cube mod p.  Every unit is a cube when p = 2 (mod 3)."""
    a %= p
    if a == 0:
        raise ZeroArgument("0 is excluded from cubic residue tests")
    if p % 3 == 2:
        return True
    return pow(a, (p - 1) // 3, p) == 1


def k_map(x: int, p: int) -> int:
    """(x^3 - 9x) / (3x^2 - 3) mod p; undefined at x^2 = 1."""
    x %= p
    den = (3 * x * x - 3) % p
    if den == 0:
        raise SingularPoint(f"k_map undefined at x = {x} (x^2 = 1 mod {p})")
    return (x * x * x - 9 * x) % p * inv_mod(den, p) % p


def t_map(x: int, p: int) -> int:
    """(x^2 + 3)^3 / (x^2 - 1)^2 mod p; undefined at x^2 = 1."""
    x %= p
    d = (x * x - 1) % p
    if d == 0:
        raise SingularPoint(f"t_map undefined at x = {x} (x^2 = 1 mod {p})")
    u = (x * x + 3) % p
    return u * u % p * u % p * inv_mod(d * d, p) % p


def h_set(p: int) -> np.ndarray:
    """The half-range fundamental domain of t_map, ascending and read-only.

    Members are {0, 2, 3, ..., (p-1)/2} minus any x with x^2 = -3 (mod p);
    at most one such x lies in the range, and only when p = 1 (mod 3).
    """
    half = (p - 1) // 2
    xs = np.concatenate(
        [np.zeros(1, dtype=np.int64), np.arange(2, half + 1, dtype=np.int64)]
    )
    keep = (xs * xs + 3) % p != 0
    out = xs[keep]
    out.flags.writeable = False
    return out


@lru_cache(maxsize=8)
def _tmap_values(p: int) -> tuple[np.ndarray, np.ndarray]:
    """(members, t_map over members) for the fundamental domain, cached."""
    xs = h_set(p)
    s = xs * xs % p
    u = (s + 3) % p
    num = u * u % p * u % p
    d = (s - 1) % p
    tv = num * _tables.inv_table(p)[d * d % p] % p
    tv.flags.writeable = False
    return xs, tv


def count_t_preimages(t: int, p: int) -> int:
    """How many x in the fundamental domain have t_map(x) = t (mod p).

    The count is 0 or 3 for t != 27, and exactly 2 for t = 27 (mod p).
    t = 0 is outside the map's image and rejected.
    """
    t %= p
    if t == 0:
        raise ZeroArgument("t = 0 is not in the image of t_map")
    _, tv = _tmap_values(p)
    return int(np.count_nonzero(tv == t))


def in_c0(k, p: int) -> bool:
    """Whether the depressed parameter k is covered by the fundamental domain.

    k may be an int or a Fraction; it is reduced mod p first.  Membership
    is decided by whether t = 9(k^2 + 3) has a t_map preimage.  Values with
    k^2 = -3 (mod p) sit outside the test's domain.
    """
    k = as_residue(k, p)
    if (k * k + 3) % p == 0:
        raise BadK(f"k = {k} has k^2 = -3 (mod {p})")
    t = 9 * (k * k + 3) % p
    return count_t_preimages(t, p) > 0
