"""
Quaternion factorization identities over Q(sqrt(3))
===================================================

Exact verification of three factorizations of 1 - 2i + k inside the order
with Z[sqrt(3)] coordinates in the basis 1, i, (sqrt(3) i + j)/2,
(sqrt(3) + k)/2.  Everything is rational arithmetic; nothing is numeric.
"""

from nufact.quatcheck import (
    format_quat,
    format_sqrtrat,
    hmul,
    in_order,
    parse_quat,
    qnorm,
    verify_identity,
)

target = parse_quat("1-2i+k")
print("target:", format_quat(target), "  norm:", format_sqrtrat(qnorm(target)))

factorizations = [
    ["i+j", "-1-i-k"],
    ["-1-j+k", "i+j"],
    ["(1/2)-i+((r3-2)/2)k", "((r3+2)/2)-j+(1/2)k"],
]

for texts in factorizations:
    factors = [parse_quat(t) for t in texts]
    ok = verify_identity(factors, target)
    product = factors[0]
    for f in factors[1:]:
        product = hmul(product, f)
    print("\n  " + "  *  ".join(format_quat(f) for f in factors))
    print("    product:", format_quat(product))
    print("    factor norms:", [format_sqrtrat(qnorm(f)) for f in factors])
    print("    verified (product and order membership):", ok)

# Membership in the order is a strict condition: the quaternion 1/2 has
# rational coordinates but falls outside the lattice.
print("\nin_order(1/2) =", in_order(parse_quat("1/2")))
print("in_order(i+j) =", in_order(parse_quat("i+j")))

# Every factorization above has exactly two factors, whose norms multiply to
# 6 in Z[sqrt(3)] -- as (2)(3) or as (3-r3)(3+r3).  Seeing only length-2
# factorizations is the half-factorial behavior of this order.
