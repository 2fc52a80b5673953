"""Read the quadratic partitions of p off two residue counts.

For p = 1 (mod 3) the prime has essentially one representation p = A^2 + 3B^2
and one 4p = L^2 + 27M^2 (signs pinned by A, L = 1 mod 3 and B, M > 0).
Counting the values of x^2 + 1/x recovers L, and counting x^2 + 2/x
recovers A, no quadratic-form machinery involved; the script then checks
both against the Cornacchia-style descent and against Jacobi's binomial
congruences mod p.
"""

from cubecount import (
    Domain,
    RationalMap,
    a_from_count,
    jacobi_check,
    l_from_count,
    primes_between,
    represent_a3b,
    represent_l27m,
    vp_brute,
)


def main():
    print("p        V(x^2+1/x)  V(x^2+2/x)   L(count) L(desc)   A(count) A(desc)  jacobi")
    for p in primes_between(5, 200):
        if p % 3 != 1:
            continue
        v1 = vp_brute(RationalMap.x2_plus_a_over_x(1), p, Domain.NONZERO).v
        v2 = vp_brute(RationalMap.x2_plus_a_over_x(2), p, Domain.NONZERO).v
        quad = represent_a3b(p)
        eis = represent_l27m(p)
        a_rec = a_from_count(p, v2)
        l_rec = l_from_count(p, v1)
        ok_a, ok_l = jacobi_check(p)
        jac = "ok" if ok_a and ok_l else "FAIL"
        print(
            f"{p:<8d} {v1:<11d} {v2:<12d} {l_rec:<8d} {eis.L:<9d} "
            f"{a_rec:<8d} {quad.A:<8d} {jac}"
        )
        assert (a_rec, l_rec) == (quad.A, eis.L)

    print()
    p = 97
    quad = represent_a3b(p)
    eis = represent_l27m(p)
    print(f"spelled out for p = {p}:")
    print(f"  {p} = {quad.A}^2 + 3*{quad.B}^2 and {4 * p} = {eis.L}^2 + 27*{eis.M}^2")
    v1 = vp_brute(RationalMap.x2_plus_a_over_x(1), p, Domain.NONZERO).v
    v2 = vp_brute(RationalMap.x2_plus_a_over_x(2), p, Domain.NONZERO).v
    print(f"  V(x^2+1/x) = {v1}, so L = 2p - 1 - 3*{v1} = {2 * p - 1 - 3 * v1}")
    print(f"  V(x^2+2/x) = {v2}, so A = (3*{v2} + 1)/2 - p = {(3 * v2 + 1) // 2 - p}")


if __name__ == "__main__":
    main()
