"""Finite fields F_{p^n} with a deterministic choice of model.

Elements are polynomials in F_p[x] reduced modulo a monic irreducible
modulus of degree n.  Coefficient tuples are stored low degree first,
so (c0, c1, ..., c_{n-1}) means c0 + c1*x + ... .  The modulus is the
lexicographically least monic irreducible polynomial of degree n, least
in the low-degree-first coefficient order, so every run of the library
builds the same field model.

Two element representations coexist:

* FieldElem — one element, exact, used for scalar work;
* PackedField — the whole field on integer codes sum(c_i * p**i), with
  discrete-log tables for vectorised bulk arithmetic.  This is the
  engine behind exhaustive point counting.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import budget
from .arith import is_prime, prime_factors
from .errors import (
    ContextMismatchError,
    DegreeOutOfRangeError,
    DivisionByZeroError,
    NotPrimeError,
)

MAX_DEGREE = 24


@dataclass(frozen=True)
class FieldCtx:
    """A concrete model of F_{p^n}: characteristic, degree and modulus.

    For n = 1 the modulus is x itself, so arithmetic degenerates to
    integers mod p.
    """

    p: int
    n: int
    modulus: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.p**self.n

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, n={self.n})"


@dataclass(frozen=True)
class FieldElem:
    """An element of the field described by `ctx`.

    coeffs always has length ctx.n with entries in range(ctx.p).
    """

    ctx: FieldCtx
    coeffs: tuple[int, ...]


def _poly_mod(a: list[int], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo b in F_p[x]; b monic.  a is consumed."""
    db = len(b) - 1
    da = len(a) - 1
    while da >= 0 and a[da] == 0:
        da -= 1
    while da >= db:
        c = a[da]
        if c:
            for i in range(db + 1):
                a[da - db + i] = (a[da - db + i] - c * b[i]) % p
        da -= 1
        while da >= 0 and a[da] == 0:
            da -= 1
    return tuple(a[: da + 1])


def _poly_eval(poly, x: int, p: int) -> int:
    v = 0
    for c in reversed(poly):
        v = (v * x + c) % p
    return v


@lru_cache(maxsize=None)
def _monic_irreducibles(p: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All monic irreducible polynomials of degree d over F_p, as
    coefficient tuples low degree first, in lexicographic order."""
    out = []
    for tail in itertools.product(range(p), repeat=d):
        cand = tail + (1,)
        if _is_irreducible(cand, p):
            out.append(cand)
    return tuple(out)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    d = len(poly) - 1
    if d == 1:
        return True
    if poly[0] == 0:
        return False
    for x in range(p):
        if _poly_eval(poly, x, p) == 0:
            return False
    for e in range(2, d // 2 + 1):
        for div in _monic_irreducibles(p, e):
            if not _poly_mod(list(poly), div, p):
                return False
    return True


@lru_cache(maxsize=None)
def build_extension(p: int, n: int) -> FieldCtx:
    """Construct the canonical model of F_{p^n}.

    The modulus is the first irreducible polynomial in a scan of monic
    degree-n candidates ordered lexicographically by their coefficient
    tuple (c0, ..., c_{n-1}), constant coefficient most significant.
    For example (p=2, n=2) gives x^2+x+1 and (p=3, n=2) gives x^2+1.
    """
    if not is_prime(p):
        raise NotPrimeError(f"characteristic {p} is not prime")
    if not 1 <= n <= MAX_DEGREE:
        raise DegreeOutOfRangeError(
            f"extension degree must be in 1..{MAX_DEGREE}, got {n}"
        )
    if n == 1:
        return FieldCtx(p, 1, (0, 1))
    for tail in itertools.product(range(p), repeat=n):
        cand = tail + (1,)
        if _is_irreducible(cand, p):
            return FieldCtx(p, n, cand)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def elem(ctx: FieldCtx, coeffs) -> FieldElem:
    """Build an element from any iterable of integer coefficients (low
    degree first); reduced mod p and padded to length n."""
    cs = [c % ctx.p for c in coeffs]
    while len(cs) > ctx.n and cs[-1] == 0:
        cs.pop()
    if len(cs) > ctx.n:
        raise DegreeOutOfRangeError(
            f"degree-{len(cs) - 1} polynomial is not reduced in a "
            f"degree-{ctx.n} extension"
        )
    cs += [0] * (ctx.n - len(cs))
    return FieldElem(ctx, tuple(cs))


def zero(ctx: FieldCtx) -> FieldElem:
    return elem(ctx, ())


def one(ctx: FieldCtx) -> FieldElem:
    return elem(ctx, (1,))


def scalar(ctx: FieldCtx, c: int) -> FieldElem:
    """Image of the integer c under Z -> F_{p^n}."""
    return elem(ctx, (c,))


def _check(ctx: FieldCtx, *elems: FieldElem) -> None:
    for e in elems:
        if e.ctx != ctx:
            raise ContextMismatchError(
                f"element of {e.ctx} used in {ctx}"
            )


def ff_add(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    _check(ctx, a, b)
    return FieldElem(
        ctx, tuple((x + y) % ctx.p for x, y in zip(a.coeffs, b.coeffs))
    )


def ff_sub(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    _check(ctx, a, b)
    return FieldElem(
        ctx, tuple((x - y) % ctx.p for x, y in zip(a.coeffs, b.coeffs))
    )


def ff_neg(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    _check(ctx, a)
    return FieldElem(ctx, tuple(-x % ctx.p for x in a.coeffs))


def ff_mul(ctx: FieldCtx, a: FieldElem, b: FieldElem) -> FieldElem:
    _check(ctx, a, b)
    p, n = ctx.p, ctx.n
    conv = [0] * (2 * n - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                conv[i + j] = (conv[i + j] + x * y) % p
    r = _poly_mod(conv, ctx.modulus, p)
    return FieldElem(ctx, tuple(r) + (0,) * (n - len(r)))


def ff_inv(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    """Multiplicative inverse via the extended Euclidean algorithm."""
    _check(ctx, a)
    if not any(a.coeffs):
        raise DivisionByZeroError("inverse of zero")
    p = ctx.p
    # invariants: s * a == r (mod modulus), s2 * a == r2 (mod modulus)
    r, r2 = list(ctx.modulus), list(a.coeffs)
    s, s2 = [0], [1]

    def deg(v):
        d = len(v) - 1
        while d >= 0 and v[d] == 0:
            d -= 1
        return d

    while deg(r2) > 0:
        dr, dr2 = deg(r), deg(r2)
        if dr < dr2:
            r, r2, s, s2 = r2, r, s2, s
            continue
        f = r[dr] * pow(r2[dr2], -1, p) % p
        shift = dr - dr2
        for i in range(dr2 + 1):
            r[shift + i] = (r[shift + i] - f * r2[i]) % p
        s += [0] * (shift + len(s2) - len(s) + 1)
        for i in range(len(s2)):
            s[shift + i] = (s[shift + i] - f * s2[i]) % p
    d2 = deg(r2)
    if d2 < 0:
        raise DivisionByZeroError("inverse of zero")  # gcd degenerate
    c = pow(r2[0], -1, p)
    out = [(c * x) % p for x in s2]
    out = list(_poly_mod(out, ctx.modulus, p))
    return elem(ctx, out)


def ff_pow(ctx: FieldCtx, a: FieldElem, k: int) -> FieldElem:
    """a**k by square and multiply; k may be negative, and 0**0 == 1."""
    _check(ctx, a)
    if k < 0:
        a = ff_inv(ctx, a)
        k = -k
    result = one(ctx)
    base = a
    while k:
        if k & 1:
            result = ff_mul(ctx, result, base)
        base = ff_mul(ctx, base, base)
        k >>= 1
    return result


_OPS = {
    "add": ff_add,
    "sub": ff_sub,
    "mul": ff_mul,
    "neg": ff_neg,
    "inv": ff_inv,
}


def ff_op(ctx: FieldCtx, op: str, a: FieldElem, b: FieldElem | None = None):
    """Dispatch by name: add, sub, mul (binary), neg, inv (unary)."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown field operation {op!r}") from None
    if op in ("neg", "inv"):
        if b is not None:
            raise ValueError(f"{op} is unary")
        return fn(ctx, a)
    if b is None:
        raise ValueError(f"{op} needs two operands")
    return fn(ctx, a, b)


def frobenius(ctx: FieldCtx, a: FieldElem) -> FieldElem:
    """The p-power map, a field automorphism generating Gal(F_{p^n}/F_p)."""
    return ff_pow(ctx, a, ctx.p)


def enumerate_field(ctx: FieldCtx) -> list[FieldElem]:
    """All p**n elements, in the canonical order: the element with
    coefficients (c0, ..., c_{n-1}) sits at index sum(c_i * p**i), so
    low-degree coordinates vary fastest."""
    budget.charge(ctx.size, f"enumerating F_{{{ctx.p}^{ctx.n}}}")
    p, n = ctx.p, ctx.n
    out = []
    for code in range(ctx.size):
        cs = []
        v = code
        for _ in range(n):
            cs.append(v % p)
            v //= p
        out.append(FieldElem(ctx, tuple(cs)))
    return out


def pack(e: FieldElem) -> int:
    """Integer code of an element: sum(c_i * p**i)."""
    code = 0
    for c in reversed(e.coeffs):
        code = code * e.ctx.p + c
    return code


def unpack(ctx: FieldCtx, code: int) -> FieldElem:
    cs = []
    for _ in range(ctx.n):
        cs.append(code % ctx.p)
        code //= ctx.p
    return FieldElem(ctx, tuple(cs))


def multiplicative_generator(ctx: FieldCtx) -> FieldElem:
    """Smallest-code generator of the cyclic group F_{p^n}^*."""
    order = ctx.size - 1
    if order == 1:
        return one(ctx)
    checks = [order // ell for ell in prime_factors(order)]
    for code in range(2, ctx.size):
        g = unpack(ctx, code)
        if all(ff_pow(ctx, g, c) != one(ctx) for c in checks):
            return g
    raise AssertionError("no generator found")  # unreachable


class PackedField:
    """Bulk arithmetic on integer codes via discrete-log tables.

    exp[i] = code of g**i for a fixed generator g, log its inverse.
    All binary operations accept numpy int64 arrays of codes and are
    fully vectorised; zero is handled by masking since log(0) does not
    exist.
    """

    _BLOCK = 4096

    def __init__(self, ctx: FieldCtx):
        budget.charge(ctx.size, f"multiplication tables for F_{{{ctx.p}^{ctx.n}}}")
        self.ctx = ctx
        self.p = ctx.p
        self.n = ctx.n
        self.size = ctx.size
        self.order = ctx.size - 1
        self._powers_of_p = np.array(
            [ctx.p**i for i in range(ctx.n)], dtype=np.int64
        )
        self.exp = self._build_exp()
        self.log = np.zeros(self.size, dtype=np.int64)
        self.log[self.exp] = np.arange(self.order, dtype=np.int64)

    def _build_exp(self) -> np.ndarray:
        ctx = self.ctx
        order = self.order
        if order == 1:
            return np.array([1], dtype=np.int64)
        g = multiplicative_generator(ctx)
        block = min(order, self._BLOCK)
        # first block of powers, scalar arithmetic
        digits = np.empty((block, ctx.n), dtype=np.int64)
        cur = one(ctx)
        for i in range(block):
            digits[i] = cur.coeffs
            cur = ff_mul(ctx, cur, g)
        exp = np.empty(order, dtype=np.int64)
        exp[:block] = digits @ self._powers_of_p
        if block == order:
            return exp
        # multiplication by g**block is F_p-linear; apply it blockwise
        g_block = ff_pow(ctx, g, block)
        mat = np.empty((ctx.n, ctx.n), dtype=np.int64)
        basis = one(ctx)
        shift = elem(ctx, (0, 1)) if ctx.n > 1 else one(ctx)
        for j in range(ctx.n):
            mat[j] = ff_mul(ctx, basis, g_block).coeffs
            basis = ff_mul(ctx, basis, shift)
        produced = block
        while produced < order:
            digits = (digits @ mat) % ctx.p
            take = min(block, order - produced)
            exp[produced : produced + take] = digits[:take] @ self._powers_of_p
            produced += take
        return exp

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        nonzero = (a != 0) & (b != 0)
        out = self.exp[(self.log[a] + self.log[b]) % self.order]
        return np.where(nonzero, out, 0)

    def pow_const(self, a: np.ndarray, k: int) -> np.ndarray:
        """a**k elementwise for a fixed exponent k >= 0; 0**0 == 1."""
        if k < 0:
            raise ValueError("pow_const needs k >= 0")
        if k == 0:
            return np.ones_like(a)
        out = self.exp[(self.log[a] * k) % self.order]
        return np.where(a != 0, out, 0)

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        if self.n == 1:
            return (a + b) % self.p
        out = np.zeros_like(a)
        for i in range(self.n):
            pi = self._powers_of_p[i]
            da = (a // pi) % self.p
            db = (b // pi) % self.p
            out += ((da + db) % self.p) * pi
        return out

    def scalar_code(self, c: int) -> int:
        return c % self.p


@lru_cache(maxsize=8)
def packed_field(p: int, n: int) -> PackedField:
    """Cached PackedField for the canonical model of F_{p^n}."""
    return PackedField(build_extension(p, n))
