"""Strongly regular graph certification for cyclotomic Cayley graphs.

Cay(F_q, D) with D a union of cyclotomic classes closed under negation is
k-regular with k = |D|, and its restricted eigenvalues are exactly the
connection sums psi(gamma^a D).  The graph is strongly regular iff those
sums take exactly two distinct values r > s, in which case

    mu = k + r*s,   lambda = mu + r + s,

and the multiplicities follow from trace identities.  Three independent
routes are implemented:

* srg_from_spectrum: exact eigenvalues -> certificate (or None),
* difference_count_oracle: brute-force difference counting, no character
  theory at all,
* predicted_spectrum_*: closed-form eigenvalue candidates straight from the
  quadratic Gauss sum certificate (b, c, h0).

A conference-graph spectrum (two conjugate irrational eigenvalues) is
accepted when r+s and r*s are rational integers; r, s, mult_r, mult_s stay
None in that case and the irrational flag is set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomy import ClassMap, CyclotomicInteger
from .gauss_theory import (
    QuadraticGaussValue,
    class_number,
    index2_gauss_prime_power,
    index2_gauss_two_primes,
    mult_order,
)
from .ntheory import euler_phi, is_prime

PAIR_BUDGET = 1 << 26

# reason codes for family criterion rejections
REASON_NOT_PRIME = "NOT_PRIME"
REASON_NOT_COPRIME = "NOT_COPRIME"
REASON_P1_TOO_SMALL = "P1_TOO_SMALL"
REASON_MOD4_PATTERN = "MOD4_PATTERN"
REASON_NOT_INDEX2 = "NOT_INDEX2"
REASON_DIOPHANTINE_FAIL = "DIOPHANTINE_FAIL"
REASON_CLASS_NUMBER_ODD = "CLASS_NUMBER_ODD"
REASON_PRIME_EQUATIONS_FAIL = "PRIME_EQUATIONS_FAIL"


@dataclass(frozen=True)
class SrgCertificate:
    """Parameters and restricted spectrum of a strongly regular graph.

    r, s, mult_r, mult_s are None exactly when the two restricted
    eigenvalues are conjugate irrationals (conference graphs); then both
    multiplicities equal (v-1)/2.  degenerate marks mu = 0.
    """

    v: int
    k: int
    lam: int
    mu: int
    r: int | None
    s: int | None
    mult_r: int | None
    mult_s: int | None
    source: str
    degenerate: bool
    irrational: bool

    def __post_init__(self):
        v, k, lam, mu = self.v, self.k, self.lam, self.mu
        if not 1 <= k <= v - 1:
            raise ValueError("k out of range")
        if not 0 <= lam <= k - 1 or mu < 0:
            raise ValueError("lambda or mu out of range")
        if k * (k - lam - 1) != (v - k - 1) * mu:
            raise ValueError("parameter identity k(k-lam-1) = (v-k-1)mu fails")
        if self.degenerate != (mu == 0):
            raise ValueError("degenerate flag inconsistent with mu")
        if self.irrational:
            if self.r is not None or self.s is not None:
                raise ValueError("irrational certificates carry no integer eigenvalues")
            if self.mult_r != (v - 1) // 2 or self.mult_s != (v - 1) // 2:
                raise ValueError("conference multiplicities must be (v-1)/2")
        else:
            r, s, mr, ms = self.r, self.s, self.mult_r, self.mult_s
            if None in (r, s, mr, ms):
                raise ValueError("rational certificates need r, s and multiplicities")
            if not r > s:
                raise ValueError("need r > s")
            if mu != k + r * s or lam != mu + r + s:
                raise ValueError("eigenvalue identities fail")
            if mr + ms != v - 1 or k + mr * r + ms * s != 0:
                raise ValueError("multiplicity identities fail")

    def parameters(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)

    def same_graph_data(self, other: "SrgCertificate") -> bool:
        """Equality ignoring which route produced the certificate."""
        return (
            self.parameters() == other.parameters()
            and (self.r, self.s, self.mult_r, self.mult_s) == (other.r, other.s, other.mult_r, other.mult_s)
            and (self.degenerate, self.irrational) == (other.degenerate, other.irrational)
        )

    def to_json_dict(self, inputs: dict | None = None) -> dict:
        out = {
            "source": self.source,
            "v": self.v,
            "k": self.k,
            "lambda": self.lam,
            "mu": self.mu,
            "r": self.r,
            "s": self.s,
            "mult_r": self.mult_r,
            "mult_s": self.mult_s,
            "degenerate_flag": self.degenerate,
            "irrational_eigenvalues": self.irrational,
        }
        if inputs is not None:
            out["inputs"] = inputs
        return out


def _as_exact_pair(values) -> tuple[object, object]:
    seen = []
    for v in values:
        if isinstance(v, (int, np.integer)):
            v = int(v)
        elif not isinstance(v, CyclotomicInteger):
            raise ValueError(f"eigenvalues must be integers or cyclotomic integers, got {type(v)!r}")
        if isinstance(v, CyclotomicInteger) and v.is_rational_integer:
            v = v.to_int()
        if v not in seen:
            seen.append(v)
    return tuple(seen)


def srg_from_spectrum(v: int, k: int, values, source: str = "SPECTRUM") -> SrgCertificate | None:
    """Certificate from the exact multiset of restricted eigenvalues.

    values: the distinct connection sums (CyclotomicInteger or int).  Returns
    None unless there are exactly two distinct values whose sum and product
    are rational integers and every integrality and feasibility identity
    holds.
    """
    if not 1 <= k <= v - 1:
        raise ValueError(f"valency k = {k} must lie in [1, v-1] for v = {v}")
    distinct = _as_exact_pair(values)
    if len(distinct) != 2:
        return None
    x, y = distinct
    if isinstance(x, int) and isinstance(y, int):
        r, s = max(x, y), min(x, y)
        e1, e2 = r + s, r * s
        irrational = False
    else:
        p = x.p if isinstance(x, CyclotomicInteger) else y.p
        cx = x if isinstance(x, CyclotomicInteger) else CyclotomicInteger.from_int(p, x)
        cy = y if isinstance(y, CyclotomicInteger) else CyclotomicInteger.from_int(p, y)
        e1z, e2z = cx + cy, cx * cy
        if not (e1z.is_rational_integer and e2z.is_rational_integer):
            return None
        e1, e2 = e1z.to_int(), e2z.to_int()
        irrational = True
    mu = k + e2
    lam = mu + e1
    if lam < 0 or lam > k - 1 or mu < 0:
        return None
    if k * (k - lam - 1) != (v - k - 1) * mu:
        return None
    if irrational:
        if 2 * k + (v - 1) * e1 != 0 or (v - 1) % 2:
            return None
        half = (v - 1) // 2
        return SrgCertificate(v, k, lam, mu, None, None, half, half, source, mu == 0, True)
    num = -k - s * (v - 1)
    den = r - s
    if num % den:
        return None
    mult_r = num // den
    mult_s = v - 1 - mult_r
    if mult_r < 1 or mult_s < 1:
        return None
    return SrgCertificate(v, k, lam, mu, r, s, mult_r, mult_s, source, mu == 0, False)


def difference_count_oracle(cm: ClassMap, D) -> SrgCertificate | None:
    """Brute-force SRG check of Cay(F_q, D) by counting difference pairs.

    Counts r(d) = #{(x, y) in D^2 : x - y = d} for every d; the graph is
    strongly regular iff r is constant on D (lambda) and constant off
    D u {0} (mu).  Uses only field arithmetic, no characters.
    """
    field = cm.field
    q = field.q
    if not cm.is_symmetric(D):
        raise ValueError("connection set is not symmetric (-D != D); the graph would be directed")
    elems = cm.connection_set_elements(D)
    k = int(elems.size)
    if k * k > PAIR_BUDGET:
        raise ValueError(f"difference pair budget exceeded: k^2 = {k * k} > {PAIR_BUDGET}")
    if k == q - 1:
        return None  # complete graph
    counts = np.zeros(q, dtype=np.int64)
    chunk = max(1, (1 << 21) // k)
    for i in range(0, k, chunk):
        block = field.sub_vec(elems[None, :], elems[i : i + chunk, None])
        counts += np.bincount(block.ravel(), minlength=q)
    assert counts[0] == k and int(counts.sum()) == k * k
    lam_vals = counts[elems]
    off_mask = np.ones(q, dtype=bool)
    off_mask[elems] = False
    off_mask[0] = False
    mu_vals = counts[off_mask]
    if lam_vals.min() != lam_vals.max() or mu_vals.min() != mu_vals.max():
        return None
    lam, mu = int(lam_vals[0]), int(mu_vals[0])
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    sd = math.isqrt(disc)
    if sd * sd == disc and (lam - mu + sd) % 2 == 0:
        r = (lam - mu + sd) // 2
        s = (lam - mu - sd) // 2
        num = -k - s * (q - 1)
        assert num % (r - s) == 0, "trace identity failed on oracle output"
        mult_r = num // (r - s)
        return SrgCertificate(q, k, lam, mu, r, s, mult_r, q - 1 - mult_r, "ORACLE", mu == 0, False)
    # two irrational eigenvalues force the conference condition
    assert 2 * k + (q - 1) * (lam - mu) == 0 and (q - 1) % 2 == 0, "spectral integrality violated"
    half = (q - 1) // 2
    return SrgCertificate(q, k, lam, mu, None, None, half, half, "ORACLE", mu == 0, True)


# ---------------------------------------------------------------------------
# closed-form predictions


@dataclass(frozen=True)
class PredictedSpectrum:
    """Eigenvalue candidates of the cyclotomic Cayley graph, by closed form.

    values are (tag, exact value) pairs; tags name the candidate branch.
    v and k are the graph order and valency; gauss is the quadratic
    certificate the formulas were built from.
    """

    p: int
    p1: int
    m: int
    p2: int | None
    N: int
    v: int
    k: int
    gauss: QuadraticGaussValue
    values: tuple[tuple[str, Fraction], ...]

    def distinct_values(self) -> list[Fraction]:
        return sorted(set(val for _, val in self.values), reverse=True)

    @property
    def two_valued(self) -> bool:
        return len(self.distinct_values()) == 2

    @property
    def integral(self) -> bool:
        return all(val.denominator == 1 for _, val in self.values)

    def integer_values(self) -> list[int]:
        if not self.integral:
            raise ValueError("spectrum has non-integral candidates")
        return [int(val) for val in self.distinct_values()]

    def collapse_holds(self) -> bool:
        """For two-prime spectra: candidates c1, c2, c3 fall onto c+ or c-."""
        named = dict(self.values)
        if "c_one" not in named:
            return self.two_valued
        pm = {named["c_plus"], named["c_minus"]}
        return all(named[t] in pm for t in ("c_one", "c_two", "c_three"))

    def certificate(self, source: str = "PREDICTED") -> SrgCertificate | None:
        """Certificate from the predicted values, when they are integral."""
        if not self.integral:
            return None
        return srg_from_spectrum(self.v, self.k, self.integer_values(), source=source)


def predicted_spectrum_prime_power(p: int, p1: int, m: int) -> PredictedSpectrum:
    """Eigenvalues of Cay(F_{p^f}, C_0 u ... u C_{p1^{m-1}-1}), N = p1^m.

    With g(chi) = ((b + c sqrt(-p1))/2) p^{h0} the three candidate values
    (over the three Legendre-symbol branches of the character argument) are

        zero branch:   b p^{h0} / 2 - b p^{h0} / (2 p1) - 1/p1
        +- branches: +-c p^{h0} / 2 - b p^{h0} / (2 p1) - 1/p1
    """
    gauss = index2_gauss_prime_power(p, p1, m)
    b, c, h0 = gauss.b, gauss.c_abs, gauss.h0
    ph0 = p**h0
    base = -Fraction(b * ph0, 2 * p1) - Fraction(1, p1)
    values = (
        ("c_zero", Fraction(b * ph0, 2) + base),
        ("c_plus", Fraction(c * ph0, 2) + base),
        ("c_minus", -Fraction(c * ph0, 2) + base),
    )
    N = p1**m
    f = euler_phi(N) // 2
    v = p**f
    k = (v - 1) // p1
    return PredictedSpectrum(p, p1, m, None, N, v, k, gauss, values)


def predicted_spectrum_two_primes(p: int, p1: int, p2: int, m: int) -> PredictedSpectrum:
    """Eigenvalues of Cay(F_{p^f}, union of C_{i p2}), N = p1^m p2.

    Five candidates c_plus, c_minus, c_one, c_two, c_three; strong regularity
    is exactly the collapse of the last three onto the first two.
    """
    gauss = index2_gauss_two_primes(p, p1, p2, m)
    if not gauss.resolved:
        raise ValueError("Gauss sum sign unresolved (odd class number), no prediction possible")
    b, c, h0 = gauss.b, gauss.c_abs, gauss.h0
    N = p1**m * p2
    f = euler_phi(N) // 2
    if f % 2:
        raise AssertionError("f is even whenever the mod-4 pattern is {1, 3}")
    sq = p ** (f // 2)
    ph0 = p**h0
    P = p1 ** (m - 1)
    sign1 = -1 if p1 % 4 == 3 else 1
    sign2 = -1 if p2 % 4 == 3 else 1
    c_plus = -P + Fraction(b * ph0 * P, 2) + Fraction(c * ph0 * P * p1 * p2, 2)
    c_minus = -P + Fraction(b * ph0 * P, 2) - Fraction(c * ph0 * P * p1 * p2, 2)
    c_one = -P - sign1 * P * p2 * sq - sign2 * p1 * P * sq + Fraction(b * ph0 * P * (p1 - 1) * (p2 - 1), 2)
    c_two = -P - sign1 * P * p2 * sq - Fraction(b * ph0 * P * (p2 - 1), 2)
    c_three = -P - sign2 * p1 * P * sq - Fraction(b * ph0 * P * (p1 - 1), 2)
    values = tuple(
        (tag, val / N)
        for tag, val in (
            ("c_plus", c_plus),
            ("c_minus", c_minus),
            ("c_one", c_one),
            ("c_two", c_two),
            ("c_three", c_three),
        )
    )
    v = p**f
    k = (v - 1) // (p1 * p2)
    return PredictedSpectrum(p, p1, m, p2, N, v, k, gauss, values)


# ---------------------------------------------------------------------------
# family criteria


@dataclass(frozen=True)
class FamilyCheck:
    """Outcome of the pair/triple family criterion with a full witness.

    reasons lists every failing check (empty iff ok).  For passing
    candidates the witness carries the class number h, the pinned sign b,
    and the predicted integer eigenvalues at m = 1 and m = 2; m > 2 members
    are certified by order lifting (full order modulo p1^2 lifts to p1^m).
    """

    p: int
    p1: int
    p2: int | None
    ok: bool
    reasons: tuple[str, ...]
    h: int | None = None
    b: int | None = None
    f1: int | None = None
    r1: int | None = None
    s1: int | None = None
    r2: int | None = None
    s2: int | None = None
    r_formula: str | None = None
    s_formula: str | None = None

    def to_json_dict(self) -> dict:
        out = {
            "p": self.p,
            "p1": self.p1,
            "ok": self.ok,
            "reasons": list(self.reasons),
            "h": self.h,
            "b": self.b,
            "f_m1": self.f1,
            "r_m1": self.r1,
            "s_m1": self.s1,
            "r_m2": self.r2,
            "s_m2": self.s2,
            "r_formula": self.r_formula,
            "s_formula": self.s_formula,
        }
        if self.p2 is not None:
            out["p2"] = self.p2
        return out


def pair_family_check(p: int, p1: int) -> FamilyCheck:
    """Does (p, p1) generate the prime-power SRG family for every m >= 1?

    True iff p, p1 prime, p1 = 3 mod 4, p1 > 3, p has half order modulo p1
    and modulo p1^2 (so modulo every p1^m), and 1 + p1 = 4 p^h with
    h = h(Q(sqrt(-p1))).  Then b, c = +-1 and the spectrum is two-valued
    for every m.
    """
    reasons: list[str] = []
    if not (is_prime(p) and is_prime(p1)):
        return FamilyCheck(p, p1, None, False, (REASON_NOT_PRIME,))
    if p == p1:
        return FamilyCheck(p, p1, None, False, (REASON_NOT_COPRIME,))
    if p1 <= 3:
        reasons.append(REASON_P1_TOO_SMALL)
    if p1 % 4 != 3:
        reasons.append(REASON_MOD4_PATTERN)
    if p1 % 2:
        if mult_order(p, p1) != (p1 - 1) // 2 or mult_order(p, p1**2) != p1 * (p1 - 1) // 2:
            reasons.append(REASON_NOT_INDEX2)
    else:
        reasons.append(REASON_NOT_INDEX2)
    h = class_number(p1)
    if 1 + p1 != 4 * p**h:
        reasons.append(REASON_DIOPHANTINE_FAIL)
    if reasons:
        return FamilyCheck(p, p1, None, False, tuple(reasons), h=h)
    b = 1 if p1 % 8 == 3 else -1
    sp1 = predicted_spectrum_prime_power(p, p1, 1)
    sp2 = predicted_spectrum_prime_power(p, p1, 2)
    assert sp1.gauss.b == b and sp2.gauss.b == b, "mod-8 rule disagrees with congruence resolution"
    r1, s1 = max(sp1.integer_values()), min(sp1.integer_values())
    r2, s2 = max(sp2.integer_values()), min(sp2.integer_values())
    a_r = (p1 - 1) // 2 if b == 1 else (p1 + 1) // 2
    a_s = -((p1 + 1) // 2) if b == 1 else -((p1 - 1) // 2)
    return FamilyCheck(
        p, p1, None, True, (), h=h, b=b, f1=(p1 - 1) // 2,
        r1=r1, s1=s1, r2=r2, s2=s2,
        r_formula=f"({a_r}*{p}^h0-1)/{p1}", s_formula=f"({a_s}*{p}^h0-1)/{p1}",
    )


def triple_family_check(p: int, p1: int, p2: int) -> FamilyCheck:
    """Does (p, p1, p2) generate the two-prime SRG family for every m >= 1?

    True iff all prime, {p1, p2} = {1, 3} mod 4, p has full order modulo
    p1, p1^2 and p2 with overall index 2 modulo p1 p2, h = h(Q(sqrt(-p1 p2)))
    is even, 1 + p1 p2 = 4 p^h, and the primes satisfy
    p1 = 2 p^{h/2} + e b, p2 = 2 p^{h/2} - e b with e = (-1)^{(p1-1)/2}.
    """
    reasons: list[str] = []
    if not (is_prime(p) and is_prime(p1) and is_prime(p2)):
        return FamilyCheck(p, p1, p2, False, (REASON_NOT_PRIME,))
    if p in (p1, p2) or p1 == p2:
        return FamilyCheck(p, p1, p2, False, (REASON_NOT_COPRIME,))
    if {p1 % 4, p2 % 4} != {1, 3}:
        reasons.append(REASON_MOD4_PATTERN)
    full_orders = (
        mult_order(p, p1) == p1 - 1
        and mult_order(p, p1**2) == p1 * (p1 - 1)
        and mult_order(p, p2) == p2 - 1
    )
    index2_overall = 2 * mult_order(p, p1 * p2) == euler_phi(p1 * p2)
    if not (full_orders and index2_overall):
        reasons.append(REASON_NOT_INDEX2)
    h = class_number(p1 * p2)
    if h % 2:
        reasons.append(REASON_CLASS_NUMBER_ODD)
        diophantine = False
    else:
        diophantine = 1 + p1 * p2 == 4 * p**h
    if not diophantine:
        reasons.append(REASON_DIOPHANTINE_FAIL)
    if diophantine:
        e = -1 if p1 % 4 == 3 else 1
        root = 2 * p ** (h // 2)
        b = 1 if p1 == root + e else (-1 if p1 == root - e else None)
        if b is None or p2 != root - e * b:
            reasons.append(REASON_PRIME_EQUATIONS_FAIL)
            b = None
    else:
        b = None
    if reasons:
        return FamilyCheck(p, p1, p2, False, tuple(reasons), h=h)
    sp1 = predicted_spectrum_two_primes(p, p1, p2, 1)
    sp2 = predicted_spectrum_two_primes(p, p1, p2, 2)
    assert sp1.gauss.b == b and sp2.gauss.b == b, "prime equations disagree with congruence resolution"
    r1, s1 = max(sp1.integer_values()), min(sp1.integer_values())
    r2, s2 = max(sp2.integer_values()), min(sp2.integer_values())
    a_r = (b + p1 * p2) // 2
    a_s = (b - p1 * p2) // 2
    return FamilyCheck(
        p, p1, p2, True, (), h=h, b=b, f1=euler_phi(p1 * p2) // 2,
        r1=r1, s1=s1, r2=r2, s2=s2,
        r_formula=f"({a_r}*{p}^h0-1)/{p1 * p2}", s_formula=f"({a_s}*{p}^h0-1)/{p1 * p2}",
    )
