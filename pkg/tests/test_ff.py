"""Finite field layer: canonical model choice, exact scalar arithmetic,
and the vectorised packed representation."""

import random

import numpy as np
import pytest

from motivic import ff
from motivic.errors import (
    BudgetExceededError,
    ContextMismatchError,
    DegreeOutOfRangeError,
    DivisionByZeroError,
    NotPrimeError,
)

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 4),
                (5, 1), (5, 2), (7, 1), (11, 1), (13, 2)]


def test_canonical_moduli():
    # x^2+x+1 over F_2 and x^2+1 over F_3: first irreducibles in the scan
    assert ff.build_extension(2, 2).modulus == (1, 1, 1)
    assert ff.build_extension(3, 2).modulus == (1, 0, 1)
    assert ff.build_extension(2, 1).modulus == (0, 1)
    # determinism: repeated calls give the identical context
    assert ff.build_extension(2, 8) is ff.build_extension(2, 8)


def test_modulus_is_least_irreducible():
    # every monic polynomial lexicographically before the modulus is
    # reducible: it has a root or a low-degree monic divisor
    import itertools
    for p, n in [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]:
        ctx = ff.build_extension(p, n)
        for tail in itertools.product(range(p), repeat=n):
            cand = tail + (1,)
            if cand == ctx.modulus:
                break
            assert not _irreducible_oracle(cand, p)


def _irreducible_oracle(poly, p):
    """Reducibility by exhaustive divisor scan, independent of ff's."""
    import itertools
    n = len(poly) - 1
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            div = tail + (1,)
            if not _polymod_oracle(poly, div, p):
                return False
    return True


def _polymod_oracle(a, b, p):
    a = list(a)
    while len(a) >= len(b):
        if a[-1]:
            f = a[-1] * pow(b[-1], -1, p) % p
            for i in range(len(b)):
                a[len(a) - len(b) + i] = (a[len(a) - len(b) + i] - f * b[i]) % p
        a.pop()
        while a and a[-1] == 0 and len(a) >= len(b):
            a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def test_mul_inv_examples():
    F4 = ff.build_extension(2, 2)
    x = ff.elem(F4, (0, 1))
    x1 = ff.elem(F4, (1, 1))
    assert ff.ff_mul(F4, x, x1) == ff.one(F4)
    F9 = ff.build_extension(3, 2)
    y = ff.elem(F9, (0, 1))
    assert ff.ff_inv(F9, y) == ff.elem(F9, (0, 2))


@pytest.mark.parametrize("p,n", SMALL_FIELDS)
def test_field_axioms_random(p, n):
    ctx = ff.build_extension(p, n)
    rng = random.Random(1000 * p + n)
    size = ctx.size

    def rand_elem():
        return ff.unpack(ctx, rng.randrange(size))

    for _ in range(60):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert ff.ff_add(ctx, a, b) == ff.ff_add(ctx, b, a)
        assert ff.ff_mul(ctx, a, b) == ff.ff_mul(ctx, b, a)
        assert ff.ff_mul(ctx, a, ff.ff_mul(ctx, b, c)) == ff.ff_mul(
            ctx, ff.ff_mul(ctx, a, b), c
        )
        # distributivity
        assert ff.ff_mul(ctx, a, ff.ff_add(ctx, b, c)) == ff.ff_add(
            ctx, ff.ff_mul(ctx, a, b), ff.ff_mul(ctx, a, c)
        )
        assert ff.ff_add(ctx, a, ff.ff_neg(ctx, a)) == ff.zero(ctx)
        assert ff.ff_sub(ctx, a, b) == ff.ff_add(ctx, a, ff.ff_neg(ctx, b))
        if any(a.coeffs):
            assert ff.ff_mul(ctx, a, ff.ff_inv(ctx, a)) == ff.one(ctx)


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1)])
def test_lagrange_exhaustive(p, n):
    # x ** (q - 1) == 1 for every nonzero x, and x ** q == x
    ctx = ff.build_extension(p, n)
    q = ctx.size
    for e in ff.enumerate_field(ctx):
        assert ff.ff_pow(ctx, e, q) == e
        if any(e.coeffs):
            assert ff.ff_pow(ctx, e, q - 1) == ff.one(ctx)
        else:
            with pytest.raises(DivisionByZeroError):
                ff.ff_inv(ctx, e)


def test_pow_conventions():
    ctx = ff.build_extension(3, 2)
    assert ff.ff_pow(ctx, ff.zero(ctx), 0) == ff.one(ctx)
    assert ff.ff_pow(ctx, ff.zero(ctx), 5) == ff.zero(ctx)
    a = ff.elem(ctx, (1, 2))
    assert ff.ff_mul(ctx, ff.ff_pow(ctx, a, -3), ff.ff_pow(ctx, a, 3)) == ff.one(ctx)


def test_frobenius_is_automorphism_and_fixed_fields():
    for p, n in [(2, 4), (2, 6), (3, 4), (5, 2)]:
        ctx = ff.build_extension(p, n)
        elems = ff.enumerate_field(ctx)
        for _ in range(50):
            rng = random.Random(p * n)
            a = elems[rng.randrange(len(elems))]
            b = elems[rng.randrange(len(elems))]
            assert ff.frobenius(ctx, ff.ff_add(ctx, a, b)) == ff.ff_add(
                ctx, ff.frobenius(ctx, a), ff.frobenius(ctx, b)
            )
            assert ff.frobenius(ctx, ff.ff_mul(ctx, a, b)) == ff.ff_mul(
                ctx, ff.frobenius(ctx, a), ff.frobenius(ctx, b)
            )
        # fixed points of frob^k form the subfield of size p^k for k | n
        for k in range(1, n + 1):
            if n % k:
                continue
            fixed = 0
            for a in elems:
                b = a
                for _ in range(k):
                    b = ff.frobenius(ctx, b)
                fixed += b == a
            assert fixed == p**k


def test_enumeration_order():
    ctx = ff.build_extension(2, 2)
    elems = ff.enumerate_field(ctx)
    assert [e.coeffs for e in elems] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert all(ff.pack(e) == i for i, e in enumerate(elems))
    ctx3 = ff.build_extension(3, 2)
    elems3 = ff.enumerate_field(ctx3)
    assert len(elems3) == 9
    assert [ff.pack(e) for e in elems3] == list(range(9))
    assert all(ff.unpack(ctx3, i) == e for i, e in enumerate(elems3))


def test_errors():
    with pytest.raises(NotPrimeError):
        ff.build_extension(6, 2)
    with pytest.raises(NotPrimeError):
        ff.build_extension(1, 1)
    with pytest.raises(DegreeOutOfRangeError):
        ff.build_extension(2, 0)
    with pytest.raises(DegreeOutOfRangeError):
        ff.build_extension(2, 25)
    F4 = ff.build_extension(2, 2)
    F9 = ff.build_extension(3, 2)
    with pytest.raises(ContextMismatchError):
        ff.ff_add(F4, ff.one(F4), ff.one(F9))
    with pytest.raises(ValueError):
        ff.ff_op(F4, "quux", ff.one(F4))


def test_budget_guard(monkeypatch):
    monkeypatch.setenv("MOTIVIC_BUDGET", "100")
    with pytest.raises(BudgetExceededError):
        ff.enumerate_field(ff.build_extension(2, 7))
    # 2^6 = 64 <= 100 still fine
    assert len(ff.enumerate_field(ff.build_extension(2, 6))) == 64


@pytest.mark.parametrize("p,n", [(2, 1), (2, 2), (2, 5), (3, 1), (3, 3), (5, 2), (7, 1), (13, 1)])
def test_packed_field_matches_scalar(p, n):
    packed = ff.PackedField(ff.build_extension(p, n))
    ctx = packed.ctx
    size = ctx.size
    rng = random.Random(97 * p + n)
    a = np.array([rng.randrange(size) for _ in range(300)], dtype=np.int64)
    b = np.array([rng.randrange(size) for _ in range(300)], dtype=np.int64)
    mul = packed.mul(a, b)
    add = packed.add(a, b)
    for i in range(len(a)):
        ea, eb = ff.unpack(ctx, int(a[i])), ff.unpack(ctx, int(b[i]))
        assert int(mul[i]) == ff.pack(ff.ff_mul(ctx, ea, eb))
        assert int(add[i]) == ff.pack(ff.ff_add(ctx, ea, eb))
    for k in (0, 1, 2, 3, 7):
        pw = packed.pow_const(a, k)
        for i in range(0, len(a), 17):
            ea = ff.unpack(ctx, int(a[i]))
            assert int(pw[i]) == ff.pack(ff.ff_pow(ctx, ea, k))


def test_packed_field_exp_log_consistency():
    packed = ff.packed_field(3, 4)
    # exp enumerates the full multiplicative group exactly once
    assert len(set(packed.exp.tolist())) == packed.order
    assert 0 not in packed.exp
    assert ff.packed_field(3, 4) is packed
