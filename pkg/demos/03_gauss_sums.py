# Closed-form Gauss sums against direct numerical evaluation.
#
# For a multiplicative character chi of order N over F_q, the Gauss sum
# g(chi) = sum over x != 0 of psi(x) chi(x) usually has no closed form.
# Two situations are the exception, and both drive the strongly regular
# graph constructions here.
#
# Semi-primitive case: some power of p is -1 modulo N.  Then g(chi) is
# a signed power of p, real, with an explicit sign rule.
#
# Index-2 case: the subgroup generated by p has index 2 in (Z/N)^* and
# -1 is not a power of p.  Then g(chi) = ((b + c sqrt(-delta))/2) p^h0
# where b, c solve the quadratic equation b^2 + delta c^2 = 4 p^h, h is
# the class number of Q(sqrt(-delta)), and a congruence pins b.

from cyclosrg import (
    build_field,
    class_number,
    classify_index2,
    gauss_sum_numeric,
    index2_gauss_prime_power,
    index2_gauss_two_primes,
    semiprimitive_gauss,
)

# Semi-primitive: N = 5 over F_256.  2^2 = 4 = -1 mod 5, so every
# order-5 character of F_256 has g(chi) = -16.

g = semiprimitive_gauss(2, 5, 8)
print("semi-primitive g over F_256, N = 5:", g.value())
fld = build_field(2, 8)
for j in (51, 102, 153, 204):  # the four characters of exact order 5
    num = gauss_sum_numeric(fld, 255, j)
    print(f"  numeric at character {j}: {num.value:.6f}")
    assert abs(num.value - g.value()) < 1e-6

# Index-2 with N a prime: N = 7, p = 2.  The class number of
# Q(sqrt(-7)) is 1, and b^2 + 7c^2 = 8 forces b = +-1, c = +-1;
# the congruence picks b = -1.

print("\nclass number of Q(sqrt(-7)):", class_number(7))
case = classify_index2(2, 7)
print("classification of (p, N) = (2, 7):", case.tag.value)
g2 = index2_gauss_prime_power(2, 7, 1)
print(f"g = (({g2.b} + c sqrt(-7))/2) * 2^{g2.h0} with |c| = {g2.c_abs}")

# The two sign choices of c are complex conjugates; a numeric sum must
# land on one of them.

plus, minus = g2.conjugate_values()
fld = build_field(2, 3)
for j in range(1, 7):
    num = gauss_sum_numeric(fld, 7, j).value
    err = min(abs(num - plus), abs(num - minus))
    assert err < 1e-6
print("all six order-7 characters match a conjugate within 1e-6")

# Index-2 with N = p1 p2: the N = 15 case over F_16 behind the q = 4096
# example.  Here delta = 15, h = 2, and the certificate is
# g = (1 + sqrt(-15))/2 * 2.

g3 = index2_gauss_two_primes(2, 3, 5, 1)
print(f"\nN = 15 certificate: b = {g3.b}, |c| = {g3.c_abs}, h = {g3.h}, h0 = {g3.h0}")

# |g(chi)|^2 = q holds for every nontrivial character, closed form or
# not; it is the cheapest global sanity check on the numerics.

fld = build_field(2, 4)
for j in range(1, 15):
    num = gauss_sum_numeric(fld, 15, j).value
    assert abs(abs(num) ** 2 - 16) < 1e-9
print("|g|^2 = q verified for all nontrivial characters of F_16")

print("\nGauss sum checks passed")
