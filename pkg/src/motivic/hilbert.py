"""Quadratic Hilbert symbols over Q_2 and Q_p, and their use as the
target of an eigenvalue-pair product.

Z/2 is written additively throughout: 0 is the trivial symbol (+1 in
multiplicative notation), 1 the nontrivial one (-1).  Inputs are
nonzero rationals; every eigenvalue this package produces is rational,
so no p-adic approximation layer exists.

Two independent routes to the same bit are kept side by side:

* isotropic_2adic / isotropic_odd decide whether z^2 = a x^2 + b y^2
  has a nontrivial p-adic solution by brute-force search for primitive
  solutions modulo 2^8 (resp. p^3).  With a, b normalised to have
  p-valuation 0 or 1, a primitive solution modulo 2^8 has some
  coordinate whose partial derivative has valuation at most 2, so a
  single-variable Hensel lift applies (2^8 > 2^(2*2+1)); for odd p the
  derivative 2z (or 2ax) has valuation at most 1 and p^3 suffices.
  Conversely any p-adic solution scales to a primitive one and reduces.

* hilbert2 / hilbert_odd evaluate the closed unit/valuation formulas.

The formulas are the library's working route; the searches exist to
check them and are exercised over all square classes by the tests and
the verify suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import is_prime
from .errors import NotOddPrimeError, ZeroInputError

Rational = int | Fraction


# ---------------------------------------------------------------------------
# solvability oracles (independent of the formulas below)


def _squarefree_at(value: Rational, p: int) -> int:
    """An integer in the square class of value whose p-valuation is
    0 or 1.  Multiplying by squares does not change solvability of
    z^2 = a x^2 + b y^2 (rescale a coordinate)."""
    f = Fraction(value)
    if f == 0:
        raise ZeroInputError("square class of zero is undefined")
    n = f.numerator * f.denominator  # value times denominator^2
    while n % (p * p) == 0:
        n //= p * p
    return n


@lru_cache(maxsize=None)
def _square_tables(modulus: int):
    """Boolean tables over residues r mod modulus: is r a square of an
    odd (resp. arbitrary) element."""
    r = np.arange(modulus, dtype=np.int64)
    sq = (r * r) % modulus
    any_z = np.zeros(modulus, dtype=bool)
    odd_z = np.zeros(modulus, dtype=bool)
    any_z[sq] = True
    odd_z[sq[r % 2 == 1]] = True
    return any_z, odd_z


def _isotropic_mod(a: int, b: int, p: int, k: int) -> bool:
    """Primitive solution of z^2 = a x^2 + b y^2 modulo p^k?"""
    modulus = p**k
    r = np.arange(modulus, dtype=np.int64)
    x = r[:, None]
    y = r[None, :]
    rhs = (a % modulus * x * x + b % modulus * y * y) % modulus
    any_z, odd_z = _square_tables(modulus)
    unit = (r % p) != 0
    xy_primitive = unit[:, None] | unit[None, :]
    if bool(np.any(any_z[rhs[xy_primitive]])):
        return True
    # x, y both divisible by p: primitivity must come from z
    return bool(np.any(odd_z[rhs[~xy_primitive]])) if p == 2 else bool(
        np.any((any_z & unit)[rhs[~xy_primitive]])
    )


def isotropic_2adic(a: Rational, b: Rational) -> bool:
    """Does z^2 = a x^2 + b y^2 have a nontrivial solution over Q_2?"""
    return _isotropic_mod(_squarefree_at(a, 2), _squarefree_at(b, 2), 2, 8)


def isotropic_odd(a: Rational, b: Rational, p: int) -> bool:
    """Does z^2 = a x^2 + b y^2 have a nontrivial solution over Q_p?"""
    _require_odd_prime(p)
    return _isotropic_mod(_squarefree_at(a, p), _squarefree_at(b, p), p, 3)


# ---------------------------------------------------------------------------
# valuation/unit decompositions and the symbol formulas


@dataclass(frozen=True)
class UnitDecomp:
    """value = p**alpha * u with u a p-adic unit."""

    value: Fraction
    p: int
    alpha: int
    u: Fraction


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def decompose(value: Rational, p: int = 2) -> UnitDecomp:
    f = Fraction(value)
    if f == 0:
        raise ZeroInputError("cannot decompose zero")
    alpha = _valuation(f.numerator, p) - _valuation(f.denominator, p)
    u = f / Fraction(p) ** alpha
    return UnitDecomp(value=f, p=p, alpha=alpha, u=u)


def _unit_residue(u: Fraction, modulus: int) -> int:
    """u mod modulus for a unit fraction (odd/“coprime” denominator)."""
    return u.numerator * pow(u.denominator, -1, modulus) % modulus


def _eps(u: Fraction) -> int:
    """(u - 1)/2 mod 2, read off the residue of u mod 4."""
    return (_unit_residue(u, 4) - 1) // 2 % 2


def _omega(u: Fraction) -> int:
    """(u^2 - 1)/8 mod 2, read off the residue of u mod 8."""
    r = _unit_residue(u, 8)
    return (r * r - 1) // 8 % 2


def hilbert2(a: Rational, b: Rational) -> int:
    """2-adic Hilbert symbol of two nonzero rationals, additively:
    0 when z^2 = a x^2 + b y^2 is solvable over Q_2, else 1."""
    da, db = decompose(a, 2), decompose(b, 2)
    return (
        _eps(da.u) * _eps(db.u)
        + da.alpha * _omega(db.u)
        + db.alpha * _omega(da.u)
    ) % 2


def _require_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise NotOddPrimeError(f"{p} is not an odd prime")


def _chi(u: Fraction, p: int) -> int:
    """Quadratic-residue character mod p, additively: 0 on residues."""
    r = _unit_residue(u, p)
    return 0 if pow(r, (p - 1) // 2, p) == 1 else 1


def hilbert_odd(a: Rational, b: Rational, p: int) -> int:
    """Tame Hilbert symbol at an odd prime p, additively."""
    _require_odd_prime(p)
    da, db = decompose(a, p), decompose(b, p)
    eps_p = (p - 1) // 2 % 2
    return (
        da.alpha * db.alpha * eps_p
        + db.alpha * _chi(da.u, p)
        + da.alpha * _chi(db.u, p)
    ) % 2


_CLASS_BY_RESIDUE = {1: 1, 3: -5, 5: 5, 7: -1}


def square_class_rep(a: Rational) -> int:
    """Representative of a's class in Q_2*/(Q_2*)^2, one of
    {1, -1, 2, -2, 5, -5, 10, -10}."""
    d = decompose(a, 2)
    unit = _CLASS_BY_RESIDUE[_unit_residue(d.u, 8)]
    return unit * (2 if d.alpha % 2 else 1)


SQUARE_CLASSES = (1, -1, 2, -2, 5, -5, 10, -10)


# ---------------------------------------------------------------------------
# eigenvalue pairs and their symbol product


@dataclass(frozen=True)
class CommutingPair:
    """Joint-eigenvalue data of two commuting operators: summands
    (lambda, mu, multiplicity), multiplicity possibly negative."""

    summands: tuple[tuple[Fraction, Fraction, int], ...]

    def __post_init__(self):
        for lam, mu, _ in self.summands:
            if lam == 0 or mu == 0:
                raise ZeroInputError("eigenvalues must be nonzero")


@dataclass(frozen=True)
class SteinbergProduct:
    """Formal product of symbols {a, b}^exponent."""

    factors: tuple[tuple[Fraction, Fraction, int], ...]

    def __post_init__(self):
        for a, b, _ in self.factors:
            if a == 0 or b == 0:
                raise ZeroInputError("symbol arguments must be nonzero")


def commuting_pair(summands) -> CommutingPair:
    return CommutingPair(
        tuple((Fraction(l), Fraction(m), int(k)) for l, m, k in summands)
    )


def sigma2(pair: CommutingPair, drop_trivial: bool = True) -> SteinbergProduct:
    """Image of an eigenvalue pair as a product of symbols: each
    summand (lambda, mu, m) contributes {lambda^-1, mu}^m.  With
    drop_trivial, factors with lambda = 1 or mu = 1 are omitted
    ({1, x} is the trivial symbol); the flag exists so that identity
    is itself testable."""
    factors = []
    for lam, mu, mult in pair.summands:
        if drop_trivial and (lam == 1 or mu == 1):
            continue
        factors.append((1 / Fraction(lam), Fraction(mu), mult))
    return SteinbergProduct(tuple(factors))


def moore_h2(s: SteinbergProduct, prime: int = 2) -> int:
    """Value of a symbol product in Z/2 via the Hilbert symbol at the
    given prime: sum of exponent * (a, b)_prime."""
    total = 0
    for a, b, k in s.factors:
        sym = hilbert2(a, b) if prime == 2 else hilbert_odd(a, b, prime)
        total += k * sym
    return total % 2


__all__ = [
    "CommutingPair",
    "SQUARE_CLASSES",
    "SteinbergProduct",
    "UnitDecomp",
    "commuting_pair",
    "decompose",
    "hilbert2",
    "hilbert_odd",
    "isotropic_2adic",
    "isotropic_odd",
    "moore_h2",
    "sigma2",
    "square_class_rep",
]
