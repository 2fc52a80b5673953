"""Closed-form residue counts for x^2 + a/x and their companion identities.

Let V_p(f) be the number of residues attained by f(x) as x runs over the
units mod p.  For p = 2 (mod 3) the count is (2p - 1)/3 regardless of a.
For p = 1 (mod 3), write p = A^2 + 3B^2 with A = 1 (mod 3) and B > 0; the
count is decided by the cubic class of 2a^2, and the companion families
x^2 + 2a/x and x + a/(2x^2) by the class of a itself.  All case numerators
are divisible by 3; that divisibility is asserted, never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cubicres import CubicClass, cubic_class
from .errors import (
    InternalInconsistency,
    MissingRep,
    NonIntegerResult,
    WrongResidueClass,
    ZeroArgument,
)
from .modarith import as_residue, inv_mod
from .oracle import jacobsthal_brute
from .quadform import QuadRep, _cached_a3b, represent_l27m

__all__ = [
    "VpBreakdown",
    "a_from_count",
    "binom_mod",
    "chi3",
    "jacobi_check",
    "jacobsthal_closed",
    "l_from_count",
    "von_sterneck_value",
    "vp_2a",
    "vp_closed",
    "vp_closed_via_26",
    "vp_cor24",
    "vp_half_x2",
]


@dataclass(frozen=True)
class VpBreakdown:
    """A closed-form count together with the case that produced it.

    path_case is "2mod3" when p = 2 (mod 3) and the class tag otherwise;
    key_class is the cubic class of the keyed quantity (2a^2 for the main
    family, a itself for the 2a family).  A and B are None for p = 2 (mod 3).
    """

    v: int
    path_case: str
    p: int
    a: int
    A: int | None = None
    B: int | None = None
    key_class: CubicClass | None = None


def _div3(num: int) -> int:
    q, r = divmod(num, 3)
    if r:
        raise NonIntegerResult(f"{num} is not divisible by 3")
    return q


def chi3(n: int) -> int:
    """The character (n/3): +1 for n = 1 (mod 3), -1 for n = 2 (mod 3)."""
    r = n % 3
    if r == 0:
        raise WrongResidueClass(f"{n} is divisible by 3")
    return 1 if r == 1 else -1


def _nonzero_residue(a, p: int) -> int:
    a = as_residue(a, p)
    if a == 0:
        raise ZeroArgument("a must be nonzero mod p")
    return a


def vp_closed(a, p: int) -> VpBreakdown:
    """Closed-form count of distinct values of x^2 + a/x over the units.

    For p = 1 (mod 3) the case is keyed on c = (2a^2)^((p-1)/3) mod p:

        c = 1             ->  (2p - 1 + 2A) / 3
        c = (-1 + A/B)/2  ->  (2p - 1 - A + 3B) / 3
        c = (-1 - A/B)/2  ->  (2p - 1 - A - 3B) / 3

    a may be an int or a Fraction and is reduced mod p first.
    """
    a = _nonzero_residue(a, p)
    if p % 3 == 2:
        return VpBreakdown(_div3(2 * p - 1), "2mod3", p, a)
    rep = _cached_a3b(p)
    c = cubic_class(2 * a * a % p, p, rep)
    if c is CubicClass.UNIT:
        num = 2 * p - 1 + 2 * rep.A
    elif c is CubicClass.PLUS:
        num = 2 * p - 1 - rep.A + 3 * rep.B
    else:
        num = 2 * p - 1 - rep.A - 3 * rep.B
    return VpBreakdown(_div3(num), c.value, p, a, rep.A, rep.B, c)


def vp_closed_via_26(a, p: int) -> int:
    """The same count through the character-sum route, for cross-checking.

    With x3 = chi3(p) and Phi the Jacobsthal sum at 2a^2,

        6 V = 4(p - x3) + (x3 - 1) + (1 - 3 x3) Phi,

    and the right side is divisible by 6 exactly.
    """
    a = _nonzero_residue(a, p)
    x3 = chi3(p)
    # (2a^2/p) = (2/p) since a is a unit, so the brute sum needs no extra factor.
    phi = jacobsthal_brute(2 * a * a % p, p)
    v6 = 4 * (p - x3) + (x3 - 1) + (1 - 3 * x3) * phi
    q, r = divmod(v6, 6)
    if r:
        raise NonIntegerResult(f"{v6} is not divisible by 6")
    return q


def jacobsthal_closed(m, p: int, rep: QuadRep | None = None) -> int:
    """Jacobsthal sum at m in closed form.

    -1 for every nonzero m when p = 2 (mod 3).  For p = 1 (mod 3) the rep
    is required and the value is keyed on the cubic class of m:

        m cube            ->  -1 - 2A
        m^((p-1)/3) = (-1 + A/B)/2  ->  -1 + A - 3B
        m^((p-1)/3) = (-1 - A/B)/2  ->  -1 + A + 3B
    """
    m = _nonzero_residue(m, p)
    if p % 3 == 2:
        return -1
    if rep is None:
        raise MissingRep("a QuadRep of p is required when p = 1 (mod 3)")
    c = cubic_class(m, p, rep)
    if c is CubicClass.UNIT:
        return -1 - 2 * rep.A
    if c is CubicClass.PLUS:
        return -1 + rep.A - 3 * rep.B
    return -1 + rep.A + 3 * rep.B


def vp_2a(a, p: int) -> VpBreakdown:
    """Closed-form count for the companion family x^2 + 2a/x, p = 1 (mod 3).

    Keyed on the class of a itself, with the non-unit cases swapped
    relative to vp_closed:

        a cube  ->  (2p - 1 + 2A) / 3        (iff a is a cubic residue)
        PLUS    ->  (2p - 1 - A - 3B) / 3
        MINUS   ->  (2p - 1 - A + 3B) / 3

    Always equals vp_closed(2a mod p, p).v.
    """
    if p % 3 != 1:
        raise WrongResidueClass(f"p = {p} is not 1 (mod 3)")
    a = _nonzero_residue(a, p)
    rep = _cached_a3b(p)
    c = cubic_class(a, p, rep)
    if c is CubicClass.UNIT:
        num = 2 * p - 1 + 2 * rep.A
    elif c is CubicClass.PLUS:
        num = 2 * p - 1 - rep.A - 3 * rep.B
    else:
        num = 2 * p - 1 - rep.A + 3 * rep.B
    return VpBreakdown(_div3(num), c.value, p, a, rep.A, rep.B, c)


def vp_half_x2(a, p: int) -> int:
    """Closed-form count for x + a/(2x^2) over the units.

    (2p - 1)/3 when p = 2 (mod 3); otherwise keyed on the class of a with
    the same orientation as vp_closed:

        a cube  ->  (2p - 1 + 2A) / 3
        PLUS    ->  (2p - 1 - A + 3B) / 3
        MINUS   ->  (2p - 1 - A - 3B) / 3

    Substituting x -> 1/x and rescaling shows this family attains exactly
    as many values as x^2 + (2/a)/x, so the result also equals
    vp_closed(2 * inv(a), p).v.
    """
    a = _nonzero_residue(a, p)
    if p % 3 == 2:
        return _div3(2 * p - 1)
    rep = _cached_a3b(p)
    c = cubic_class(a, p, rep)
    if c is CubicClass.UNIT:
        num = 2 * p - 1 + 2 * rep.A
    elif c is CubicClass.PLUS:
        num = 2 * p - 1 - rep.A + 3 * rep.B
    else:
        num = 2 * p - 1 - rep.A - 3 * rep.B
    return _div3(num)


def a_from_count(p: int, v2: int) -> int:
    """Invert the count of x^2 + 2/x: A = (3 v2 + 1)/2 - p."""
    if p % 3 != 1:
        raise WrongResidueClass(f"p = {p} is not 1 (mod 3)")
    t = 3 * v2 + 1
    if t % 2:
        raise NonIntegerResult(f"(3*{v2} + 1)/2 is not an integer")
    return t // 2 - p


def l_from_count(p: int, v1: int) -> int:
    """Invert the count of x^2 + 1/x: L = 2p - 1 - 3 v1."""
    if p % 3 != 1:
        raise WrongResidueClass(f"p = {p} is not 1 (mod 3)")
    return 2 * p - 1 - 3 * v1


def _cor24_value(p: int, rep: QuadRep) -> int:
    """The count shared by x^2 + 4/x and x + 2/x^2, straight off (A, B)."""
    if rep.B % 3 == 0:
        return _div3(2 * p - 1 + 2 * rep.A)
    return _div3(2 * p - 1 - rep.A + 3 * chi3(rep.B) * rep.B)


def vp_cor24(p: int) -> tuple[int, int]:
    """Counts of x^2 + 4/x and x + 2/x^2 for p = 1 (mod 3).

    Both equal (2p - 1 + 2A)/3 when 3 | B and (2p - 1 - A + 3(B/3)B)/3
    otherwise, with (B/3) the character of B mod 3.  The two family
    evaluations are computed independently and must agree with the
    formula; a mismatch raises.
    """
    if p % 3 != 1:
        raise WrongResidueClass(f"p = {p} is not 1 (mod 3)")
    rep = _cached_a3b(p)
    want = _cor24_value(p, rep)
    via_x2 = vp_closed(4 % p, p).v
    via_half = vp_half_x2(4, p)  # x + 4/(2x^2) is x + 2/x^2
    if not (want == via_x2 == via_half):
        raise InternalInconsistency(
            f"count mismatch at p = {p}: formula {want}, "
            f"x^2+4/x {via_x2}, x+2/x^2 {via_half}"
        )
    return via_x2, via_half


def von_sterneck_value(p: int) -> int:
    """Distinct values of a nondegenerate cubic x^3 + a1 x^2 + a2 x + a3.

    Whenever a1^2 - 3 a2 is nonzero mod p the count over all of Z_p is
    (2p + (p/3))/3, independent of the coefficients (von Sterneck).
    """
    return _div3(2 * p + chi3(p))


def binom_mod(n: int, k: int, p: int) -> int:
    """Binomial coefficient C(n, k) mod p for 0 <= k <= n < p.

    Multiplicative O(k) evaluation: the rising product over the numerator
    against k! in the denominator, both mod p.
    """
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(1, k + 1):
        num = num * ((n - k + i) % p) % p
        den = den * i % p
    return num * inv_mod(den, p) % p


def jacobi_check(p: int) -> tuple[bool, bool]:
    """Verify Jacobi's binomial congruences for A and L at a prime p = 1 (mod 3).

        A = (1/2) C((p-1)/2, (p-1)/6)   (mod p)
        L = -C(2(p-1)/3, (p-1)/3)       (mod p)

    Returns (A holds, L holds).
    """
    if p % 3 != 1:
        raise WrongResidueClass(f"p = {p} is not 1 (mod 3)")
    rep = _cached_a3b(p)
    eis = represent_l27m(p)
    k = (p - 1) // 3
    half_binom = binom_mod((p - 1) // 2, (p - 1) // 6, p) * ((p + 1) // 2) % p
    ok_a = rep.A % p == half_binom
    ok_l = eis.L % p == (p - binom_mod(2 * k, k, p)) % p
    return ok_a, ok_l
