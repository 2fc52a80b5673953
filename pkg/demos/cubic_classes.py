"""Walk through the three cubic classes mod a prime p = 1 (mod 3).

The units mod p split into three equal classes by the value of
a^((p-1)/3): the cubes (value 1) and two conjugate classes whose key
values are (-1 +- A/B)/2.  The residue count of x^2 + a/x, the Jacobsthal
sum, and cubic residuosity are all constant on each class; this script
tabulates everything for one small prime so the structure is visible.
"""

import argparse
from collections import Counter

from cubecount import (
    CubicClass,
    Domain,
    RationalMap,
    class_value_targets,
    cubic_class,
    jacobsthal_brute,
    represent_a3b,
    von_sterneck_value,
    vp_brute,
    vp_closed,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=13, help="prime = 1 (mod 3)")
    args = parser.parse_args()
    p = args.p

    rep = represent_a3b(p)
    t_plus, t_minus = class_value_targets(p, rep)
    print(f"p = {p} = {rep.A}^2 + 3*{rep.B}^2 (A = {rep.A}, B = {rep.B})")
    print(f"key values: unit -> 1, plus -> {t_plus}, minus -> {t_minus}")
    print()

    print(" a   a^((p-1)/3)  class  V(x^2+a/x)  Phi(a)")
    tally = Counter()
    for a in range(1, p):
        c = cubic_class(a, p, rep)
        tally[c] += 1
        v = vp_closed(a, p).v
        phi = jacobsthal_brute(a, p)
        print(f"{a:>2d}   {pow(a, (p - 1) // 3, p):<12d} {c.value:<6s} {v:<11d} {phi:>3d}")
    print()

    sizes = {c.value: tally[c] for c in CubicClass}
    print(f"class sizes: {sizes} (each (p-1)/3 = {(p - 1) // 3})")

    counts = sorted({vp_closed(a, p).v for a in range(1, p)})
    print(f"V takes {len(counts)} distinct values on the units: {counts}")

    cubic = RationalMap.cubic(1, 2, 3)
    v3 = vp_brute(cubic, p, Domain.ALL).v
    print(
        f"and a nondegenerate cubic (here x^3 + x^2 + 2x + 3) attains "
        f"{v3} = (2p + (p/3))/3 = {von_sterneck_value(p)} values"
    )


if __name__ == "__main__":
    main()
