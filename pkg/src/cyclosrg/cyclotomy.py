"""Cyclotomic classes of F_q* and exact character sums in Z[xi_p].

For N | q-1 the classes are C_i = gamma^i <gamma^N>, i = 0..N-1, each of
size (q-1)/N.  The additive character is psi(x) = xi_p^{Tr(x)} with
xi_p = exp(2*pi*i/p), and the Gauss periods are

    eta_a = sum over x in C_a of psi(x),

exact elements of Z[xi_p].  A period is represented by the tally of traces
over a class, folded into the power basis {1, xi, ..., xi^{p-2}} using
1 + xi + ... + xi^{p-1} = 0.
"""

from __future__ import annotations

import numpy as np

from .finite_field import FieldTable

_TALLY_CELL_CAP = 1 << 25


class CyclotomicInteger:
    """Exact element of Z[xi_p] in the power basis {xi^0, ..., xi^{p-2}}.

    For p = 2 this degenerates to a plain integer (basis {1}).
    Instances are immutable and hashable.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: tuple[int, ...]):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} coefficients for p = {p}")
        self.p = p
        self.coeffs = tuple(int(c) for c in coeffs)

    # construction helpers

    @classmethod
    def from_exponent_counts(cls, p: int, counts) -> "CyclotomicInteger":
        """Fold sum(counts[j] * xi^j, j = 0..p-1) into the power basis."""
        counts = [int(c) for c in counts]
        if len(counts) != p:
            raise ValueError(f"need {p} exponent counts for p = {p}")
        top = counts[p - 1]
        return cls(p, tuple(counts[j] - top for j in range(p - 1)))

    @classmethod
    def from_int(cls, p: int, n: int) -> "CyclotomicInteger":
        return cls(p, (int(n),) + (0,) * (p - 2))

    # ring structure

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CyclotomicInteger(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.p
        if p == 2:
            return CyclotomicInteger(2, (self.coeffs[0] * other.coeffs[0],))
        a = self.coeffs
        b = other.coeffs
        bound = max(1, max(map(abs, a))) * max(1, max(map(abs, b))) * (p - 1)
        if bound < 2**62:
            conv = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
            counts = [0] * p
            for m, v in enumerate(conv.tolist()):
                counts[m % p] += v
        else:  # exact fallback, only reachable with huge coefficients
            counts = [0] * p
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        counts[(i + j) % p] += ai * bj
        return CyclotomicInteger.from_exponent_counts(p, counts)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, CyclotomicInteger):
            if other.p != self.p:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, int):
            return CyclotomicInteger.from_int(self.p, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational_integer and self.coeffs[0] == other
        if isinstance(other, CyclotomicInteger):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        if self.is_rational_integer:
            return f"CyclotomicInteger(p={self.p}, {self.coeffs[0]})"
        return f"CyclotomicInteger(p={self.p}, coeffs={self.coeffs})"

    # structure queries

    @property
    def is_rational_integer(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational_integer:
            raise ValueError(f"not a rational integer: {self!r}")
        return self.coeffs[0]

    def conjugate(self) -> "CyclotomicInteger":
        """Complex conjugation xi -> xi^{-1}."""
        p = self.p
        counts = [0] * p
        for j, c in enumerate(self.coeffs):
            counts[(-j) % p] += c
        return CyclotomicInteger.from_exponent_counts(p, counts)

    def complex_embedding(self) -> complex:
        """Numeric value under xi_p = exp(2*pi*i/p); for cross-checks only."""
        xs = np.exp(2j * np.pi * np.arange(self.p - 1) / self.p)
        return complex(np.dot(np.array(self.coeffs, dtype=np.float64), xs))


class ClassMap:
    """Cyclotomic classes of order N inside a built field; see classify()."""

    __slots__ = ("field", "N", "class_size", "class_of", "_tally")

    def __init__(self, field: FieldTable, N: int):
        q = field.q
        if N <= 1:
            raise ValueError(f"N must be at least 2, got {N}")
        if (q - 1) % N:
            raise ValueError(f"N = {N} does not divide q - 1 = {q - 1}")
        self.field = field
        self.N = N
        self.class_size = (q - 1) // N
        class_of = np.full(q, -1, dtype=np.int64)
        class_of[field.antilog] = np.arange(q - 1, dtype=np.int64) % N
        class_of.setflags(write=False)
        self.class_of = class_of
        self._tally: np.ndarray | None = None

    def __repr__(self):
        return f"ClassMap(q={self.field.q}, N={self.N}, class_size={self.class_size})"

    @property
    def tally(self) -> np.ndarray:
        """tally[a, t] = #{x in C_a : Tr(x) = t}, shape (N, p)."""
        if self._tally is None:
            p = self.field.p
            if self.N * p > _TALLY_CELL_CAP:
                raise ValueError(f"period tally table would need {self.N * p} cells, cap is {_TALLY_CELL_CAP}")
            q = self.field.q
            cls = np.arange(q - 1, dtype=np.int64) % self.N
            tr = self.field.trace[self.field.antilog]
            flat = cls * p + tr
            tally = np.bincount(flat, minlength=self.N * p).reshape(self.N, p)
            tally.setflags(write=False)
            self._tally = tally
        return self._tally

    def period_tally(self, a: int) -> np.ndarray:
        """Trace tally over class a alone, length p, without the full table."""
        if not 0 <= a < self.N:
            raise ValueError(f"class index out of range: {a}")
        elems = self.field.antilog[a :: self.N]
        return np.bincount(self.field.trace[elems], minlength=self.field.p)

    def period(self, a: int) -> CyclotomicInteger:
        """Gauss period eta_a as an exact cyclotomic integer."""
        return CyclotomicInteger.from_exponent_counts(self.field.p, self.period_tally(a))

    def periods(self) -> list[CyclotomicInteger]:
        return [CyclotomicInteger.from_exponent_counts(self.field.p, row) for row in self.tally]

    @property
    def negation_shift(self) -> int:
        """t with -C_a = C_{a+t}; 0 exactly when every class is symmetric."""
        if self.field.p == 2:
            return 0
        return ((self.field.q - 1) // 2) % self.N

    def is_symmetric(self, D) -> bool:
        """Whether the union of classes D is closed under negation."""
        d = self._check_classes(D)
        t = self.negation_shift
        return all((i + t) % self.N in d for i in d)

    def connection_sums(self, D) -> list[CyclotomicInteger]:
        """psi(gamma^a D) = sum over i in D of eta_{(a+i) mod N}, for a = 0..N-1."""
        d = sorted(self._check_classes(D))
        acc = np.zeros((self.N, self.field.p), dtype=np.int64)
        for i in d:
            acc += np.roll(self.tally, -i, axis=0)
        return [CyclotomicInteger.from_exponent_counts(self.field.p, row) for row in acc]

    def connection_set_elements(self, D) -> np.ndarray:
        """Encodings of all field elements lying in the classes D."""
        d = sorted(self._check_classes(D))
        q = self.field.q
        cls = np.arange(q - 1, dtype=np.int64) % self.N
        mask = np.isin(cls, np.array(d, dtype=np.int64))
        return self.field.antilog[mask]

    def _check_classes(self, D) -> set[int]:
        d = set(int(i) for i in D)
        if not d:
            raise ValueError("connection set must be a nonempty set of classes")
        if not all(0 <= i < self.N for i in d):
            raise ValueError(f"class indices must lie in [0, {self.N})")
        return d


def classify(field: FieldTable, N: int) -> ClassMap:
    """Partition F_q* into the N cyclotomic classes C_i = gamma^i <gamma^N>."""
    return ClassMap(field, N)
