"""Finite fields F_{p^f} as dense lookup tables.

An element is encoded as the integer sum(c_i * p**i) where (c_0, ..., c_{f-1})
is the coefficient vector of its residue polynomial modulo a fixed monic
irreducible polynomial of degree f over Z/pZ.  Encodings run over
{0, ..., q-1} with 0 the zero element and 1 the one element.

Construction is deterministic: the modulus is the lexicographically smallest
monic irreducible (coefficients compared low degree first) and the generator
gamma is the smallest encoding that is primitive.  After construction all
arithmetic is table driven:

    antilog[i] = encoding of gamma**i          (length q-1)
    log[x]     = i with antilog[i] == x        (length q, log[0] == -1)
    trace[x]   = absolute trace as int in [0, p)

Tables are numpy int64 arrays marked read only.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from .ntheory import is_prime, prime_factors

SIZE_CAP = 1 << 22

# ---------------------------------------------------------------------------
# scalar polynomial arithmetic over Z/pZ, used only during construction
# coefficient tuples are low degree first; residues have length f


def _poly_mul_mod(a: tuple[int, ...], b: tuple[int, ...], mod_low: tuple[int, ...], p: int) -> tuple[int, ...]:
    f = len(mod_low)
    prod = [0] * (2 * f - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for deg in range(2 * f - 2, f - 1, -1):
        t = prod[deg] % p
        if t:
            for i in range(f):
                prod[deg - f + i] -= t * mod_low[i]
        prod[deg] = 0
    return tuple(v % p for v in prod[:f])


def _poly_pow_mod(a: tuple[int, ...], e: int, mod_low: tuple[int, ...], p: int) -> tuple[int, ...]:
    f = len(mod_low)
    result = tuple([1] + [0] * (f - 1))
    base = a
    while e:
        if e & 1:
            result = _poly_mul_mod(result, base, mod_low, p)
        base = _poly_mul_mod(base, base, mod_low, p)
        e >>= 1
    return result


def _poly_gcd_is_unit(a: list[int], b: list[int], p: int) -> bool:
    """gcd of two coefficient lists over Z/pZ is a nonzero constant."""

    def deg(u: list[int]) -> int:
        for i in range(len(u) - 1, -1, -1):
            if u[i] % p:
                return i
        return -1

    a = [v % p for v in a]
    b = [v % p for v in b]
    while True:
        da, db = deg(a), deg(b)
        if db < 0:
            return da == 0
        if da < db:
            a, b = b, a
            continue
        inv = pow(b[db], p - 2, p) if p > 2 else 1
        # kill the leading term of a with a shifted multiple of b
        coef = a[da] * inv % p
        shift = da - db
        for i in range(db + 1):
            a[i + shift] = (a[i + shift] - coef * b[i]) % p


def _x_poly(f: int) -> tuple[int, ...]:
    return tuple([0, 1] + [0] * (f - 2)) if f >= 2 else (0,)


def _frobenius_power(mod_low: tuple[int, ...], p: int, k: int) -> tuple[int, ...]:
    """x**(p**k) reduced modulo the monic polynomial with low part mod_low."""
    cur = _x_poly(len(mod_low))
    for _ in range(k):
        cur = _poly_pow_mod(cur, p, mod_low, p)
    return cur


def _is_irreducible(mod_low: tuple[int, ...], p: int) -> bool:
    """Rabin test for the monic degree-f polynomial x^f + mod_low."""
    f = len(mod_low)
    if f == 1:
        return True
    x = _x_poly(f)
    g_full = list(mod_low) + [1]
    for ell in prime_factors(f):
        h = _frobenius_power(mod_low, p, f // ell)
        diff = [(hi - xi) % p for hi, xi in zip(h, x)]
        if not _poly_gcd_is_unit(diff, g_full, p):
            return False
    return _frobenius_power(mod_low, p, f) == x


def _smallest_irreducible(p: int, f: int) -> tuple[int, ...]:
    """Lex-smallest monic irreducible of degree f, low degree compared first."""
    if f == 1:
        return (0, 1)
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=f - 1):
            mod_low = (c0,) + rest
            if _is_irreducible(mod_low, p):
                return mod_low + (1,)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# encoding helpers


def _digits(x: int, p: int, f: int) -> tuple[int, ...]:
    out = []
    for _ in range(f):
        out.append(x % p)
        x //= p
    return tuple(out)


def _pack(digits: tuple[int, ...], p: int) -> int:
    x = 0
    for d in reversed(digits):
        x = x * p + d
    return x


# ---------------------------------------------------------------------------
# vectorized table construction


def _antilog_table(p: int, f: int, q: int, mod_low: tuple[int, ...], gamma: int) -> np.ndarray:
    if q == 2:
        return np.array([1], dtype=np.int64)
    if f == 1:
        antilog = np.empty(q - 1, dtype=np.int64)
        antilog[0] = 1
        size = 1
        while size < q - 1:
            step = min(size, q - 1 - size)
            const = int(antilog[size - 1]) * gamma % p
            antilog[size : size + step] = antilog[:step] * const % p
            size += step
        return antilog
    if p == 2:
        return _antilog_gf2(f, q, mod_low, gamma)
    return _antilog_odd(p, f, q, mod_low, gamma)


def _antilog_gf2(f: int, q: int, mod_low: tuple[int, ...], gamma: int) -> np.ndarray:
    mod_int = _pack(mod_low, 2) | (1 << f)
    antilog = np.zeros(q - 1, dtype=np.int64)
    antilog[0] = 1
    size = 1
    while size < q - 1:
        step = min(size, q - 1 - size)
        g_dig = _digits(gamma, 2, f)
        const = _pack(_poly_mul_mod(_digits(int(antilog[size - 1]), 2, f), g_dig, mod_low, 2), 2)
        chunk = antilog[:step]
        acc = np.zeros(step, dtype=np.int64)
        bit = 0
        c = const
        while c:
            if c & 1:
                acc ^= chunk << bit
            c >>= 1
            bit += 1
        for deg in range(2 * f - 2, f - 1, -1):
            mask = (acc >> deg) & 1
            acc ^= mask * (mod_int << (deg - f))
        antilog[size : size + step] = acc
        size += step
    return antilog


def _antilog_odd(p: int, f: int, q: int, mod_low: tuple[int, ...], gamma: int) -> np.ndarray:
    mod_arr = np.array(mod_low, dtype=np.int64)
    digits = np.zeros((q - 1, f), dtype=np.int64)
    digits[0, 0] = 1
    prev_enc = 1
    size = 1
    while size < q - 1:
        step = min(size, q - 1 - size)
        g_dig = _digits(gamma, p, f)
        const = _poly_mul_mod(_digits(prev_enc, p, f), g_dig, mod_low, p)
        block = digits[:step]
        acc = np.zeros((step, 2 * f - 1), dtype=np.int64)
        for j, cj in enumerate(const):
            if cj:
                acc[:, j : j + f] += cj * block
        acc %= p
        for deg in range(2 * f - 2, f - 1, -1):
            coef = acc[:, deg]
            acc[:, deg - f : deg] -= coef[:, None] * mod_arr[None, :]
            acc[:, deg - f : deg] %= p
            acc[:, deg] = 0
        digits[size : size + step] = acc[:, :f]
        size += step
        # prev_enc must track gamma**size for the next round
        prev_enc = _pack(tuple(int(v) for v in digits[size - 1]), p)
    powers = p ** np.arange(f, dtype=np.int64)
    return digits @ powers


def _basis_traces(p: int, f: int, mod_low: tuple[int, ...]) -> list[int]:
    """Power sums s_k = Tr(alpha**k) of the modulus root, via Newton's identities."""
    s = [f % p] + [0] * (f - 1)
    for k in range(1, f):
        acc = k * mod_low[f - k]
        for i in range(1, k):
            acc += mod_low[f - i] * s[k - i]
        s[k] = (-acc) % p
    return s


def _trace_table(p: int, f: int, q: int, s: list[int]) -> np.ndarray:
    x = np.arange(q, dtype=np.int64)
    tr = np.zeros(q, dtype=np.int64)
    for i in range(f):
        if s[i]:
            tr += (x % p) * s[i]
        x //= p
    return tr % p


# ---------------------------------------------------------------------------


class FieldTable:
    """Immutable table model of F_{p^f}; build with build_field."""

    __slots__ = ("p", "f", "q", "modulus", "antilog", "log", "trace", "_neg")

    def __init__(self, p: int, f: int, modulus: tuple[int, ...], antilog: np.ndarray, log: np.ndarray, trace: np.ndarray):
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = modulus
        self.antilog = antilog
        self.log = log
        self.trace = trace
        self._neg: np.ndarray | None = None
        for arr in (antilog, log, trace):
            arr.setflags(write=False)

    def __repr__(self) -> str:
        return f"FieldTable(p={self.p}, f={self.f}, q={self.q}, modulus={self.modulus})"

    @property
    def gamma(self) -> int:
        return int(self.antilog[1]) if self.q > 2 else 1

    def dlog(self, x: int) -> int:
        if not 1 <= x < self.q:
            raise ValueError(f"dlog needs a nonzero field element, got {x}")
        return int(self.log[x])

    def trace_of(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise ValueError(f"element out of range: {x}")
        return int(self.trace[x])

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.antilog[(self.dlog(x) + self.dlog(y)) % (self.q - 1)])

    def pow_element(self, x: int, e: int) -> int:
        if x == 0:
            if e <= 0:
                raise ValueError("0 cannot be raised to a nonpositive power")
            return 0
        return int(self.antilog[self.dlog(x) * e % (self.q - 1)])

    def inv(self, x: int) -> int:
        return self.pow_element(x, -1)

    def neg(self, x: int) -> int:
        if self.p == 2 or x == 0:
            return x
        half = (self.q - 1) // 2
        return int(self.antilog[(self.dlog(x) + half) % (self.q - 1)])

    def add(self, x: int, y: int) -> int:
        return int(self.add_vec(np.int64(x), np.int64(y)))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    # vectorized arithmetic on encoded arrays (broadcasting allowed)

    def add_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self.f == 1:
            return (a + b) % self.p
        res = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.f):
            res += ((a // pw + b // pw) % self.p) * pw
            pw *= self.p
        return res

    def sub_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self.f == 1:
            return (a - b) % self.p
        res = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        pw = 1
        for _ in range(self.f):
            res += ((a // pw - b // pw) % self.p) * pw
            pw *= self.p
        return res

    def neg_table(self) -> np.ndarray:
        """neg_table()[x] is the encoding of -x."""
        if self._neg is None:
            if self.p == 2:
                neg = np.arange(self.q, dtype=np.int64)
            else:
                neg = np.zeros(self.q, dtype=np.int64)
                half = (self.q - 1) // 2
                idx = (np.arange(self.q - 1) + half) % (self.q - 1)
                neg[self.antilog] = self.antilog[idx]
            neg.setflags(write=False)
            self._neg = neg
        return self._neg


def _find_generator(p: int, f: int, q: int, mod_low: tuple[int, ...]) -> int:
    if q <= 3:
        return q - 1
    ell_list = [(q - 1) // ell for ell in prime_factors(q - 1)]
    if f == 1:
        for e in range(2, q):
            if all(pow(e, t, p) != 1 for t in ell_list):
                return e
    else:
        one = tuple([1] + [0] * (f - 1))
        for e in range(2, q):
            dig = _digits(e, p, f)
            if all(_poly_pow_mod(dig, t, mod_low, p) != one for t in ell_list):
                return e
    raise AssertionError("no generator found")  # unreachable for a true field


def build_field(p: int, f: int, modulus: tuple[int, ...] | None = None) -> FieldTable:
    """Construct F_{p^f} with the deterministic modulus and generator.

    An explicit monic irreducible modulus (length f+1 coefficient tuple,
    low degree first) may be supplied; it is validated.  The default is
    the lexicographically smallest one, so repeated builds are identical.
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if f < 1:
        raise ValueError(f"f must be >= 1, got {f}")
    q = p**f
    if q > SIZE_CAP:
        raise ValueError(f"field size {q} exceeds the cap {SIZE_CAP}")
    if modulus is None:
        modulus = _smallest_irreducible(p, f)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != f + 1 or modulus[f] != 1:
            raise ValueError("modulus must be monic of degree f")
        if not _is_irreducible(modulus[:f], p):
            raise ValueError("modulus is reducible")
    mod_low = modulus[:f]
    gamma = _find_generator(p, f, q, mod_low)
    antilog = _antilog_table(p, f, q, mod_low, gamma)
    log = np.full(q, -1, dtype=np.int64)
    log[antilog] = np.arange(q - 1, dtype=np.int64)
    trace = _trace_table(p, f, q, _basis_traces(p, f, mod_low))
    # construction sanity: powers of gamma enumerate the q-1 nonzero elements
    counts = np.bincount(antilog, minlength=q)
    if counts[0] != 0 or counts.max() != 1:
        raise AssertionError("antilog table is not a bijection onto F_q*")
    return FieldTable(p, f, modulus, antilog, log, trace)
