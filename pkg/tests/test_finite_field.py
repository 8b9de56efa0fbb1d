"""Field table construction, arithmetic, and determinism."""

import numpy as np
import pytest

from cyclosrg.finite_field import SIZE_CAP, FieldTable, build_field
from cyclosrg.ntheory import prime_factors

from conftest import get_field


def test_f4_modulus_and_gamma():
    fld = get_field(2, 2)
    assert fld.modulus == (1, 1, 1)  # x^2 + x + 1
    assert fld.gamma == 2
    # gamma^2 = gamma + 1 under x^2 = x + 1
    assert fld.mul(2, 2) == 3


def test_f5_generator_is_2():
    fld = get_field(5, 1)
    assert fld.gamma == 2
    assert list(fld.antilog) == [1, 2, 4, 3]


def test_f2_edge_case():
    fld = get_field(2, 1)
    assert fld.q == 2
    assert list(fld.antilog) == [1]
    assert fld.gamma == 1
    assert fld.trace_of(1) == 1


def test_gamma_order_in_f4096():
    fld = get_field(2, 12)
    q1 = fld.q - 1
    assert q1 == 4095
    # gamma's power at every maximal proper divisor of 4095 is not 1
    for ell in prime_factors(q1):  # {3, 5, 7, 13}
        assert fld.pow_element(fld.gamma, q1 // ell) != 1
    assert fld.pow_element(fld.gamma, q1) == 1


def test_trace_tables_f4_f9():
    f4 = get_field(2, 2)
    assert [f4.trace_of(x) for x in range(4)] == [0, 0, 1, 1]
    # explicit modulus x^2 + x + 2 over F_3; trace(x) = x + x^3
    f9 = build_field(3, 2, modulus=(2, 1, 1))
    for x in range(9):
        expected = f9.add(x, f9.pow_element(x, 3) if x else 0)
        assert f9.trace_of(x) == expected
    # trace fibers all have size q/p
    counts = np.bincount(f9.trace, minlength=3)
    assert list(counts) == [3, 3, 3]


def test_trace_fibers_balanced_across_fields():
    for p, f in [(2, 4), (3, 3), (5, 2), (7, 2), (2, 8), (13, 1)]:
        fld = get_field(p, f)
        counts = np.bincount(fld.trace, minlength=p)
        assert counts.min() == counts.max() == fld.q // p


def test_trace_additive_and_frobenius_invariant():
    for p, f in [(2, 6), (3, 4), (5, 3)]:
        fld = get_field(p, f)
        rng = np.random.default_rng(7)
        xs = rng.integers(0, fld.q, size=40)
        ys = rng.integers(0, fld.q, size=40)
        for x, y in zip(xs.tolist(), ys.tolist()):
            assert fld.trace_of(fld.add(x, y)) == (fld.trace_of(x) + fld.trace_of(y)) % p
            if x:
                assert fld.trace_of(fld.pow_element(x, p)) == fld.trace_of(x)


def test_dlog_round_trip_and_addition():
    for p, f in [(2, 5), (3, 3), (7, 2), (11, 1)]:
        fld = get_field(p, f)
        q1 = fld.q - 1
        for i in range(q1):
            assert fld.dlog(int(fld.antilog[i])) == i
        # dlog turns multiplication into addition mod q-1
        for x in range(1, min(fld.q, 30)):
            for y in (1, 2, fld.q - 1):
                assert fld.dlog(fld.mul(x, y)) == (fld.dlog(x) + fld.dlog(y)) % q1


def test_vector_arithmetic_matches_scalar():
    for p, f in [(2, 6), (3, 4), (5, 3)]:
        fld = get_field(p, f)
        rng = np.random.default_rng(11)
        a = rng.integers(0, fld.q, size=200)
        b = rng.integers(0, fld.q, size=200)
        added = fld.add_vec(a, b)
        subbed = fld.sub_vec(a, b)
        for i in range(0, 200, 17):
            assert int(added[i]) == fld.add(int(a[i]), int(b[i]))
            assert int(subbed[i]) == fld.sub(int(a[i]), int(b[i]))
        neg = fld.neg_table()
        for x in range(fld.q):
            assert fld.add(x, int(neg[x])) == 0


def test_field_axioms_sampled():
    fld = get_field(3, 3)
    elems = list(range(fld.q))
    for x in elems:
        assert fld.add(x, 0) == x
        assert fld.mul(x, 1) == x
        if x:
            assert fld.mul(x, fld.inv(x)) == 1
    # distributivity on a sample grid
    for x in range(0, fld.q, 5):
        for y in range(0, fld.q, 7):
            for z in (1, 2, 13):
                lhs = fld.mul(fld.add(x, y), z)
                rhs = fld.add(fld.mul(x, z), fld.mul(y, z))
                assert lhs == rhs


def test_determinism_rebuild():
    a = build_field(3, 4)
    b = build_field(3, 4)
    assert a.modulus == b.modulus
    assert a.gamma == b.gamma
    assert np.array_equal(a.antilog, b.antilog)
    assert np.array_equal(a.log, b.log)
    assert np.array_equal(a.trace, b.trace)


def test_explicit_modulus_validation():
    with pytest.raises(ValueError, match="reducible"):
        build_field(2, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x+1)^2
    with pytest.raises(ValueError, match="monic"):
        build_field(3, 2, modulus=(1, 1, 2))


def test_domain_errors():
    with pytest.raises(ValueError, match="prime"):
        build_field(4, 2)
    with pytest.raises(ValueError, match=">= 1"):
        build_field(2, 0)
    with pytest.raises(ValueError, match="cap"):
        build_field(2, 23)
    fld = get_field(2, 2)
    with pytest.raises(ValueError, match="nonzero"):
        fld.dlog(0)
    with pytest.raises(ValueError, match="range"):
        fld.trace_of(4)
    assert SIZE_CAP == 1 << 22


def test_tables_are_read_only():
    fld = get_field(2, 3)
    with pytest.raises(ValueError):
        fld.antilog[0] = 5
