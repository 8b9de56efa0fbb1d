"""Exact evaluation of Gauss sums whose character has a small decomposition.

For a multiplicative character chi of order N on F_q, q = p^f, the Gauss sum
is g(chi) = sum over a in F_q* of chi(a) psi(a).  Two families admit closed
forms used here:

* semi-primitive: some power p^t is -1 mod N; then p^{-r/2} g(chi) = +-1
  with an explicit sign, for any r = 2ts.

* index 2: the subgroup <p> has index 2 in (Z/NZ)* and -1 is not in <p>.
  For N odd this forces N = p1^m or N = p1^m p2^n.  The sum then lives in
  the imaginary quadratic field Q(sqrt(-p1)) or Q(sqrt(-p1 p2)) and equals
  ((b + c sqrt(-delta)) / 2) * p^{h0}, where b, c solve

      b^2 + delta c^2 = 4 p^h,   p does not divide b*c,

  h is the class number of Q(sqrt(-delta)), h0 = (f - h)/2, the sign of b
  is pinned by an explicit congruence, and only the sign of c is ambiguous
  (it depends on the choice of sqrt(-delta)).

Everything here is exact integer arithmetic; gauss_sum_numeric provides an
independent floating point evaluation for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .finite_field import FieldTable
from .ntheory import euler_phi, factorize, is_prime, is_squarefree

_NUMERIC_CAP = 1 << 16


class Index2Kind(str, Enum):
    PRIME_POWER = "PRIME_POWER"
    TWO_PRIMES_SEMIPRIMITIVE_MIX = "TWO_PRIMES_SEMIPRIMITIVE_MIX"
    TWO_PRIMES_HALF_ORDER = "TWO_PRIMES_HALF_ORDER"
    NOT_INDEX2 = "NOT_INDEX2"


@dataclass(frozen=True)
class Index2Case:
    """Shape of (Z/NZ)* / <p> for odd N: which index-2 case applies, if any."""

    tag: Index2Kind
    order: int
    p1: int | None = None
    m: int | None = None
    p2: int | None = None
    n: int | None = None


@dataclass(frozen=True)
class SemiprimitiveGauss:
    """g(chi) = sign * p^{r/2} for a semi-primitive character of order N."""

    p: int
    N: int
    r: int
    t: int
    s: int
    sign: int

    def value(self) -> int:
        return self.sign * self.p ** (self.r // 2)


@dataclass(frozen=True)
class QuadraticGaussValue:
    """g(chi) = ((b + c sqrt(-delta)) / 2) * p^{h0}, c determined up to sign.

    b is None when the sign could not be resolved (odd class number in the
    two-prime case); c_abs is |c|.
    """

    p: int
    delta: int
    f: int
    h: int
    h0: int
    b: int | None
    c_abs: int | None

    def __post_init__(self):
        if self.b is not None:
            if self.b**2 + self.delta * self.c_abs**2 != 4 * self.p**self.h:
                raise ValueError("quadratic certificate fails b^2 + delta c^2 = 4 p^h")
            if self.b % self.p == 0 or self.c_abs % self.p == 0:
                raise ValueError("b and c must be prime to p")

    @property
    def resolved(self) -> bool:
        return self.b is not None

    def conjugate_values(self) -> tuple[complex, complex]:
        """The two numeric candidates (c > 0 and c < 0)."""
        if not self.resolved:
            raise ValueError("sign of b is unresolved")
        root = complex(0.0, math.sqrt(self.delta))
        scale = float(self.p**self.h0)
        plus = (self.b + self.c_abs * root) / 2 * scale
        return plus, plus.conjugate()


class GaussSumNumeric(NamedTuple):
    value: complex
    error_bound: float


# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def mult_order(a: int, n: int) -> int:
    """Multiplicative order of a modulo n."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} and {n} are not coprime")
    order = euler_phi(n)
    for prime in factorize(order):
        while order % prime == 0 and pow(a, order // prime, n) == 1:
            order //= prime
    return order


def classify_index2(p: int, N: int) -> Index2Case:
    """Decide whether <p> has index 2 in (Z/NZ)* without containing -1."""
    if N <= 1 or N % 2 == 0:
        raise ValueError(f"N must be an odd integer >= 3, got {N}")
    if math.gcd(p, N) != 1:
        raise ValueError(f"p = {p} and N = {N} are not coprime")
    order = mult_order(p, N)
    phi = euler_phi(N)
    minus_one_in = order % 2 == 0 and pow(p, order // 2, N) == N - 1
    if 2 * order != phi or minus_one_in:
        return Index2Case(Index2Kind.NOT_INDEX2, order)
    fac = sorted(factorize(N).items())
    if len(fac) == 1:
        (p1, m), = fac
        return Index2Case(Index2Kind.PRIME_POWER, order, p1=p1, m=m)
    if len(fac) != 2:
        raise AssertionError("index 2 with three or more odd primes is impossible")
    (l1, e1), (l2, e2) = fac
    full1 = mult_order(p, l1**e1) == euler_phi(l1**e1)
    full2 = mult_order(p, l2**e2) == euler_phi(l2**e2)
    if full1 and full2:
        # the repeated prime plays the structural role; ties break small
        if (-e1, l1) <= (-e2, l2):
            p1, m, p2, n = l1, e1, l2, e2
        else:
            p1, m, p2, n = l2, e2, l1, e1
        return Index2Case(Index2Kind.TWO_PRIMES_SEMIPRIMITIVE_MIX, order, p1=p1, m=m, p2=p2, n=n)
    half1 = 2 * mult_order(p, l1**e1) == euler_phi(l1**e1)
    half2 = 2 * mult_order(p, l2**e2) == euler_phi(l2**e2)
    if full1 and half2:
        return Index2Case(Index2Kind.TWO_PRIMES_HALF_ORDER, order, p1=l1, m=e1, p2=l2, n=e2)
    if full2 and half1:
        return Index2Case(Index2Kind.TWO_PRIMES_HALF_ORDER, order, p1=l2, m=e2, p2=l1, n=e1)
    raise AssertionError("index 2 component orders do not fit any known case")


@lru_cache(maxsize=None)
def class_number(d: int) -> int:
    """Class number of Q(sqrt(-d)) for squarefree d >= 1, by form counting.

    Counts reduced primitive binary quadratic forms (a, b, c) of discriminant
    -d (d = 3 mod 4) or -4d (otherwise): b^2 - 4ac = disc, |b| <= a <= c,
    gcd(a, b, c) = 1, and b >= 0 whenever |b| = a or a = c.
    """
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not is_squarefree(d):
        raise ValueError(f"d must be squarefree, got {d}")
    disc = -d if d % 4 == 3 else -4 * d
    h = 0
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (b == -a or a == c):
                continue
            if math.gcd(math.gcd(a, abs(b)), c) != 1:
                continue
            h += 1
        a += 1
    return h


def semiprimitive_gauss(p: int, N: int, r: int) -> SemiprimitiveGauss:
    """Evaluate g(chi) over F_{p^r} for chi of order N in the semi-primitive case.

    Requires the least t with p^t = -1 mod N to exist and r = 2ts.  Then
    p^{-r/2} g(chi) is (-1)^{s-1} for p = 2 and (-1)^{s-1 + (p^t+1)s/N}
    for odd p.
    """
    if N <= 2:
        raise ValueError(f"N must be at least 3, got {N}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if math.gcd(p, N) != 1:
        raise ValueError(f"p = {p} and N = {N} are not coprime")
    order = mult_order(p, N)
    if order % 2 or pow(p, order // 2, N) != N - 1:
        raise ValueError(f"no power of {p} is -1 modulo {N}")
    t = order // 2
    if r % (2 * t):
        raise ValueError(f"r = {r} is not a multiple of 2t = {2 * t}")
    s = r // (2 * t)
    if p == 2:
        exponent = s - 1
    else:
        exponent = (s - 1) + (p**t + 1) // N * s
    return SemiprimitiveGauss(p, N, r, t, s, -1 if exponent % 2 else 1)


def _solve_quadratic_form(p: int, delta: int, h: int) -> list[tuple[int, int]]:
    """All (|b|, |c|) with b^2 + delta c^2 = 4 p^h and p dividing neither."""
    target = 4 * p**h
    out = []
    c = 1
    while delta * c * c < target:
        bb = target - delta * c * c
        b = math.isqrt(bb)
        if b * b == bb and b >= 1 and b % p and c % p:
            out.append((b, c))
        c += 1
    return out


def index2_gauss_prime_power(p: int, p1: int, m: int) -> QuadraticGaussValue:
    """Exact Gauss sum for chi of order N = p1^m, p1 = 3 mod 4, p1 > 3.

    f = phi(N)/2, h = h(Q(sqrt(-p1))), h0 = (f-h)/2, and b is pinned by
    b * p^{h0} = -2 mod p1.
    """
    if not is_prime(p) or not is_prime(p1):
        raise ValueError("p and p1 must be prime")
    if p1 <= 3:
        raise ValueError(f"p1 must exceed 3, got {p1}")
    if p1 % 4 != 3:
        raise ValueError(f"p1 must be 3 mod 4, got {p1}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    case = classify_index2(p, p1**m)
    if case.tag is not Index2Kind.PRIME_POWER:
        raise ValueError(f"<{p}> does not have index 2 without -1 modulo {p1}**{m} (got {case.tag.value})")
    f = euler_phi(p1**m) // 2
    h = class_number(p1)
    if (f - h) % 2:
        raise ValueError("f - h is odd, no integral h0 exists")
    h0 = (f - h) // 2
    candidates = _solve_quadratic_form(p, p1, h)
    ph0 = pow(p, h0, p1)
    resolved = [
        (sb * b, c)
        for b, c in candidates
        for sb in (1, -1)
        if (sb * b * ph0 + 2) % p1 == 0
    ]
    if len(resolved) != 1:
        raise ArithmeticError(f"sign resolution found {len(resolved)} candidates, expected exactly 1")
    b, c = resolved[0]
    return QuadraticGaussValue(p=p, delta=p1, f=f, h=h, h0=h0, b=b, c_abs=c)


def index2_gauss_two_primes(p: int, p1: int, p2: int, m: int) -> QuadraticGaussValue:
    """Exact Gauss sum for chi of order N = p1^m p2 with both components full.

    Requires {p1 mod 4, p2 mod 4} = {1, 3}, ord of p maximal modulo p1^m and
    modulo p2, and overall index 2.  With h = h(Q(sqrt(-p1 p2))) even, b is
    pinned by b = 2 p^{h/2} modulo whichever of p1, p2 is 3 mod 4.
    """
    if not (is_prime(p) and is_prime(p1) and is_prime(p2)):
        raise ValueError("p, p1, p2 must all be prime")
    if p1 == p2:
        raise ValueError("p1 and p2 must be distinct")
    if {p1 % 4, p2 % 4} != {1, 3}:
        raise ValueError(f"need one prime 1 mod 4 and one 3 mod 4, got {p1}, {p2}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    N = p1**m * p2
    case = classify_index2(p, N)
    if case.tag is not Index2Kind.TWO_PRIMES_SEMIPRIMITIVE_MIX:
        raise ValueError(f"<{p}> modulo {N} is not the two-prime index-2 case (got {case.tag.value})")
    if mult_order(p, p1**m) != euler_phi(p1**m) or mult_order(p, p2) != p2 - 1:
        raise ValueError("p must have full order modulo p1^m and modulo p2")
    delta = p1 * p2
    f = euler_phi(N) // 2
    h = class_number(delta)
    if (f - h) % 2:
        raise ValueError("f - h is odd, no integral h0 exists")
    h0 = (f - h) // 2
    if h % 2:
        # sign of b is not pinned by the congruence when h is odd
        return QuadraticGaussValue(p=p, delta=delta, f=f, h=h, h0=h0, b=None, c_abs=None)
    candidates = _solve_quadratic_form(p, delta, h)
    ell = p1 if p1 % 4 == 3 else p2
    want = 2 * pow(p, h // 2, ell) % ell
    resolved = [
        (sb * b, c)
        for b, c in candidates
        for sb in (1, -1)
        if (sb * b - want) % ell == 0
    ]
    if len(resolved) != 1:
        raise ArithmeticError(f"sign resolution found {len(resolved)} candidates, expected exactly 1")
    b, c = resolved[0]
    return QuadraticGaussValue(p=p, delta=delta, f=f, h=h, h0=h0, b=b, c_abs=c)


def gauss_sum_numeric(field: FieldTable, N: int, j: int) -> GaussSumNumeric:
    """Direct numeric g(chi_j), chi_j(gamma^k) = exp(2 pi i j k / N).

    Exact-arithmetic results should match within the returned error bound.
    Limited to q <= 2^16 to keep the direct sum cheap and accurate.
    """
    q = field.q
    if q > _NUMERIC_CAP:
        raise ValueError(f"numeric Gauss sums are limited to q <= {_NUMERIC_CAP}")
    if (q - 1) % N:
        raise ValueError(f"N = {N} does not divide q - 1 = {q - 1}")
    if not 0 <= j < N:
        raise ValueError(f"character index j must lie in [0, {N})")
    k = np.arange(q - 1, dtype=np.int64)
    mult_phase = (j * k) % N
    add_phase = field.trace[field.antilog]
    z = np.exp(2j * np.pi * (mult_phase / N + add_phase / field.p))
    return GaussSumNumeric(complex(z.sum()), q * 2.0**-50)
