"""Class arithmetic and the two measures (counts and zeta series)."""

import random

import pytest

from motivic import witt
from motivic.errors import InvalidComplementError, ValidationError
from motivic.k0 import (
    k0_add,
    k0_class,
    k0_mul,
    k0_neg,
    k0_sub,
    k0_zero,
    lefschetz,
    measure_counts,
    measure_zeta,
    verify_scissor,
)
from motivic.varieties import parse_variety


def cls(text):
    return k0_class(parse_variety(text))


def test_terms_merge_and_cancel():
    a = cls("P(1) over 3")
    b = cls("union(P(1),P(1)) over 3")
    # [P1] + [P1] has one canonical term of coefficient 2... and the
    # union class is a distinct presentation with its own single term
    two = k0_add(a, a)
    assert len(two.terms) == 1 and two.terms[0][1] == 2
    assert k0_sub(a, a) == k0_zero(3)
    assert len(b.terms) == 1
    # union classes and sums of classes agree under both measures
    assert measure_counts(b, 5) == measure_counts(two, 5)
    assert measure_zeta(b, 8) == measure_zeta(two, 8)


def test_mixed_fields_rejected():
    with pytest.raises(ValidationError):
        k0_add(cls("point over 2"), cls("point over 3"))
    with pytest.raises(ValidationError):
        k0_mul(cls("point over 2"), cls("point over 3"))


def test_measure_counts_examples():
    assert measure_counts(cls("P(2) over 2"), 3) == (7, 21, 73)
    # [P1] - [A1] - [point] is the basic scissor relation
    diff = k0_sub(cls("P(1) over 3"), k0_add(cls("A(1) over 3"), cls("point over 3")))
    assert measure_counts(diff, 6) == (0,) * 6
    assert measure_zeta(diff, 8) == witt.witt_zero(8)


def test_lefschetz_powers():
    q = 5
    L = lefschetz(q)
    L2 = k0_mul(L, L)
    assert measure_counts(L2, 3) == (25, 625, 15625)
    # [P2] = 1 + L + L^2 under both measures
    p2 = cls("P(2) over 5")
    rhs = k0_add(cls("point over 5"), k0_add(L, L2))
    assert measure_counts(p2, 4) == measure_counts(rhs, 4)
    assert measure_zeta(p2, 8) == measure_zeta(rhs, 8)


def test_measures_commute_with_ghost():
    # ghost(measure_zeta(c)) == measure_counts(c): the two measures are
    # computed along different routes, so this is a genuine cross-check
    rng = random.Random(3)
    atoms = [
        "point over 3",
        "A(1) over 3",
        "A(2) over 3",
        "P(1) over 3",
        "P(2) over 3",
        "T(1) over 3",
        "product(P(1),P(1)) over 3",
    ]
    for _ in range(30):
        c = k0_zero(3)
        for _ in range(rng.randint(1, 4)):
            coeff = rng.randint(-3, 3)
            term = k0_class(parse_variety(rng.choice(atoms)))
            c = k0_add(c, _scale(term, coeff))
        n = rng.randint(1, 8)
        assert witt.ghost(measure_zeta(c, n)).ghosts == measure_counts(c, n)


def _scale(c, n):
    out = k0_zero(c.q)
    step = c if n >= 0 else k0_neg(c)
    for _ in range(abs(n)):
        out = k0_add(out, step)
    return out


def test_mul_distributes_under_measures():
    a = cls("P(1) over 2")
    b = cls("T(1) over 2")
    c = cls("A(2) over 2")
    lhs = k0_mul(a, k0_add(b, c))
    rhs = k0_add(k0_mul(a, b), k0_mul(a, c))
    assert measure_counts(lhs, 5) == measure_counts(rhs, 5)
    assert measure_zeta(lhs, 6) == measure_zeta(rhs, 6)
    # product with reversed factors is the same canonical class
    assert k0_mul(a, b) == k0_mul(b, a)


def test_verify_scissor_pass():
    amb = parse_variety("P(1) over 3")
    closed = parse_variety("point over 3")
    report = verify_scissor(amb, closed, m_upto=6, precision=10)
    assert report.passed
    assert report.counts_residual == (0,) * 6
    assert report.zeta_residual == (0,) * 10
    # A1 minus origin over F5: complement counts 5^m - 1
    amb2 = parse_variety("A(1) over 5")
    closed2 = parse_variety("affine over 5 vars x : x")
    report2 = verify_scissor(amb2, closed2, m_upto=4, precision=6)
    assert report2.passed


def test_verify_scissor_rejects_invalid_pair():
    with pytest.raises(InvalidComplementError):
        verify_scissor(
            parse_variety("T(1) over 3"), parse_variety("point over 3")
        )
