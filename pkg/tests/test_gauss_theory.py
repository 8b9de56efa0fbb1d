"""Orders, index-2 classification, class numbers, and exact Gauss sums."""

import math

import pytest

from cyclosrg.gauss_theory import (
    Index2Kind,
    class_number,
    classify_index2,
    gauss_sum_numeric,
    index2_gauss_prime_power,
    index2_gauss_two_primes,
    mult_order,
    semiprimitive_gauss,
)

from conftest import get_field


# ---------------------------------------------------------------------------
# multiplicative order


def test_mult_order_known_values():
    assert mult_order(2, 49) == 21
    assert mult_order(2, 15) == 4
    assert mult_order(5, 361) == 171
    assert mult_order(3, 35) == 12
    assert mult_order(2, 7) == 3


def test_mult_order_matches_brute_force():
    for n in range(2, 80):
        for a in range(1, n):
            if math.gcd(a, n) != 1:
                continue
            e = 1
            x = a % n
            while x != 1:
                x = x * a % n
                e += 1
            assert mult_order(a, n) == e, (a, n)


def test_mult_order_errors():
    with pytest.raises(ValueError, match="coprime"):
        mult_order(6, 15)
    with pytest.raises(ValueError, match=">= 2"):
        mult_order(2, 1)


# ---------------------------------------------------------------------------
# index-2 classification


def test_classify_prime_power():
    case = classify_index2(2, 49)
    assert case.tag is Index2Kind.PRIME_POWER
    assert (case.p1, case.m) == (7, 2)
    assert case.order == 21


def test_classify_two_primes_mix():
    case = classify_index2(2, 15)
    assert case.tag is Index2Kind.TWO_PRIMES_SEMIPRIMITIVE_MIX
    assert (case.p1, case.m, case.p2, case.n) == (3, 1, 5, 1)
    case = classify_index2(2, 45)
    assert (case.p1, case.m, case.p2, case.n) == (3, 2, 5, 1)
    case = classify_index2(2, 75)
    assert (case.p1, case.m, case.p2, case.n) == (5, 2, 3, 1)
    case = classify_index2(3, 35)
    assert (case.p1, case.m, case.p2, case.n) == (5, 1, 7, 1)


def test_classify_half_order():
    # ord_3(2) = 2 is full, ord_7(2) = 3 = phi(7)/2, and overall index is 2
    case = classify_index2(2, 21)
    assert case.tag is Index2Kind.TWO_PRIMES_HALF_ORDER
    assert (case.p1, case.m, case.p2, case.n) == (3, 1, 7, 1)


def test_classify_not_index2():
    assert classify_index2(2, 11).tag is Index2Kind.NOT_INDEX2  # full order
    assert classify_index2(2, 17).tag is Index2Kind.NOT_INDEX2  # -1 in <2>
    assert classify_index2(4, 15).tag is Index2Kind.NOT_INDEX2  # index 4


def test_classify_index2_subgroup_property():
    # when classified index 2, <p> really has index 2 and misses -1
    from cyclosrg.ntheory import euler_phi

    for p, N in [(2, 49), (2, 15), (2, 45), (3, 35), (2, 21), (2, 75), (3, 323)]:
        case = classify_index2(p, N)
        assert case.tag is not Index2Kind.NOT_INDEX2
        subgroup = {pow(p, k, N) for k in range(case.order)}
        assert len(subgroup) == euler_phi(N) // 2
        assert N - 1 not in subgroup


def test_classify_errors():
    with pytest.raises(ValueError, match="odd"):
        classify_index2(3, 16)
    with pytest.raises(ValueError, match="coprime"):
        classify_index2(3, 9)


# ---------------------------------------------------------------------------
# class numbers


KNOWN_CLASS_NUMBERS = {1: 1, 2: 1, 3: 1, 5: 2, 7: 1, 11: 1, 15: 2, 19: 1, 21: 4, 35: 2, 67: 1, 107: 3, 163: 1, 323: 4, 499: 3}


def test_class_number_known_values():
    for d, h in KNOWN_CLASS_NUMBERS.items():
        assert class_number(d) == h, d


def test_class_number_independent_recount():
    # same reduced-form count, enumerated b-outer instead of a-outer
    def recount(d: int) -> int:
        disc = -d if d % 4 == 3 else -4 * d
        h = 0
        b = 0
        while b * b <= -disc // 3:
            for sb in ({0} if b == 0 else {b, -b}):
                if (sb - disc) % 2:
                    continue
                num = sb * sb - disc
                a = max(abs(sb), 1)
                while 4 * a * a <= num:
                    if num % (4 * a) == 0:
                        c = num // (4 * a)
                        if c >= a >= abs(sb) and not (sb < 0 and (sb == -a or a == c)):
                            if math.gcd(math.gcd(a, abs(sb)), c) == 1:
                                h += 1
                    a += 1
            b += 1
        return h

    for d in sorted(KNOWN_CLASS_NUMBERS):
        assert class_number(d) == recount(d), d


def test_class_number_errors():
    with pytest.raises(ValueError, match="squarefree"):
        class_number(12)
    with pytest.raises(ValueError, match=">= 1"):
        class_number(0)


# ---------------------------------------------------------------------------
# semi-primitive evaluation


def test_semiprimitive_known_values():
    g = semiprimitive_gauss(2, 3, 2)
    assert (g.t, g.s, g.sign, g.value()) == (1, 1, 1, 2)
    g = semiprimitive_gauss(3, 4, 2)
    assert (g.t, g.s, g.sign, g.value()) == (1, 1, -1, -3)
    g = semiprimitive_gauss(2, 5, 8)
    assert (g.t, g.s, g.sign, g.value()) == (2, 2, -1, -16)
    g = semiprimitive_gauss(2, 9, 6)
    assert g.value() == 2**3 * g.sign


def test_semiprimitive_matches_numeric():
    cases = [(2, 2, 3, 2), (3, 2, 4, 2), (2, 8, 5, 8), (2, 6, 9, 6), (5, 2, 3, 2), (2, 4, 5, 4), (3, 4, 5, 4), (7, 2, 4, 2)]
    for p, f, N, r in cases:
        assert f == r
        fld = get_field(p, f)
        exact = semiprimitive_gauss(p, N, r).value()
        for j in range(1, N):
            if math.gcd(j, N) != 1:
                continue  # chi_j must have full order N
            num = gauss_sum_numeric(fld, N, j)
            assert abs(num.value - exact) < 1e-6, (p, N, j)


def test_semiprimitive_errors():
    with pytest.raises(ValueError, match="no power"):
        semiprimitive_gauss(2, 7, 6)
    with pytest.raises(ValueError, match="multiple"):
        semiprimitive_gauss(2, 5, 6)


# ---------------------------------------------------------------------------
# index-2 exact evaluations


def test_prime_power_gauss_small():
    g = index2_gauss_prime_power(2, 7, 1)
    assert (g.f, g.h, g.h0, g.b, g.c_abs) == (3, 1, 1, -1, 1)
    g = index2_gauss_prime_power(2, 7, 2)
    assert (g.f, g.h, g.h0, g.b, g.c_abs) == (21, 1, 10, -1, 1)
    g = index2_gauss_prime_power(5, 19, 2)
    assert (g.f, g.h, g.h0, g.b, g.c_abs) == (171, 1, 85, 1, 1)
    g = index2_gauss_prime_power(3, 107, 1)
    assert (g.h, g.b) == (3, 1)
    assert g.b**2 + 107 * g.c_abs**2 == 4 * 3**3


def test_prime_power_b_sign_matches_mod8_rule():
    # p1 = 3 mod 8 forces b = 1, p1 = 7 mod 8 forces b = -1 (when 1+p1 = 4p^h)
    for p, p1 in [(2, 7), (3, 107), (5, 19), (5, 499), (17, 67), (41, 163)]:
        g = index2_gauss_prime_power(p, p1, 1)
        assert g.b == (1 if p1 % 8 == 3 else -1), (p, p1)


def test_prime_power_gauss_matches_numeric_f8():
    fld = get_field(2, 3)
    g = index2_gauss_prime_power(2, 7, 1)
    plus, minus = g.conjugate_values()
    num = gauss_sum_numeric(fld, 7, 1).value
    assert min(abs(num - plus), abs(num - minus)) < 1e-9
    assert abs(abs(num) ** 2 - 8) < 1e-9


def test_two_primes_gauss_small():
    g = index2_gauss_two_primes(2, 3, 5, 1)
    assert (g.f, g.h, g.h0, g.b, g.c_abs) == (4, 2, 1, 1, 1)
    g = index2_gauss_two_primes(2, 3, 5, 2)
    assert (g.f, g.h, g.h0, g.b, g.c_abs) == (12, 2, 5, 1, 1)
    g = index2_gauss_two_primes(2, 5, 3, 2)
    assert (g.f, g.h, g.h0, g.b, g.c_abs) == (20, 2, 9, 1, 1)
    g = index2_gauss_two_primes(3, 5, 7, 1)
    assert (g.f, g.h, g.h0, g.b, g.c_abs) == (12, 2, 5, -1, 1)
    g = index2_gauss_two_primes(3, 17, 19, 1)
    assert (g.f, g.h, g.h0, g.b, g.c_abs) == (144, 4, 70, -1, 1)


def test_two_primes_gauss_matches_numeric_f16():
    fld = get_field(2, 4)
    g = index2_gauss_two_primes(2, 3, 5, 1)
    plus, minus = g.conjugate_values()
    num = gauss_sum_numeric(fld, 15, 1).value
    assert min(abs(num - plus), abs(num - minus)) < 1e-9
    # and the conjugate character lands on the other root
    num2 = gauss_sum_numeric(fld, 15, 14).value
    assert min(abs(num2 - plus), abs(num2 - minus)) < 1e-9
    assert abs(num * num2 - 16) < 1e-9


def test_index2_magnitude_identity():
    # |g|^2 = q: b^2 + delta c^2 = 4 p^h forces |(b + c sqrt(-delta))/2|^2 p^{2 h0} = p^f
    for g in [
        index2_gauss_prime_power(2, 7, 2),
        index2_gauss_prime_power(3, 107, 1),
        index2_gauss_two_primes(2, 3, 5, 2),
        index2_gauss_two_primes(3, 17, 19, 1),
    ]:
        assert (g.b**2 + g.delta * g.c_abs**2) * g.p ** (2 * g.h0) == 4 * g.p**g.f


def test_index2_domain_errors():
    with pytest.raises(ValueError, match="exceed 3"):
        index2_gauss_prime_power(2, 3, 1)
    with pytest.raises(ValueError, match="3 mod 4"):
        index2_gauss_prime_power(2, 5, 1)
    with pytest.raises(ValueError, match="index 2"):
        index2_gauss_prime_power(2, 11, 1)
    with pytest.raises(ValueError, match="prime"):
        index2_gauss_prime_power(4, 7, 1)
    with pytest.raises(ValueError, match="1 mod 4"):
        index2_gauss_two_primes(2, 3, 7, 1)
    with pytest.raises(ValueError, match="distinct"):
        index2_gauss_two_primes(2, 5, 5, 1)
    with pytest.raises(ValueError, match="two-prime index-2"):
        index2_gauss_two_primes(2, 13, 7, 1)  # gcd(phi) too large, index 6


# ---------------------------------------------------------------------------
# numeric reference


def test_numeric_trivial_character():
    fld = get_field(2, 4)
    num = gauss_sum_numeric(fld, 15, 0)
    assert abs(num.value - (-1)) < 1e-9


def test_numeric_error_bound_and_caps():
    fld = get_field(3, 2)
    num = gauss_sum_numeric(fld, 8, 1)
    assert num.error_bound < 1e-10
    with pytest.raises(ValueError, match="divide"):
        gauss_sum_numeric(fld, 7, 1)
    with pytest.raises(ValueError, match="lie in"):
        gauss_sum_numeric(fld, 8, 8)
