"""Truncated big Witt vectors over the integers.

A Witt vector of precision N is the power series
1 + a_1 t + a_2 t^2 + ... + a_N t^N (mod t^{N+1}), stored as the
coefficient tuple (a_1, ..., a_N); the leading 1 is implicit.  Ring
structure: addition is multiplication of series, the additive zero is
the series 1, multiplication is determined by pointwise multiplication
of ghost components.  Zeta functions of varieties live here: the m-th
ghost component of the zeta series of X is the number of points of X
over the degree-m extension.

Ghost components are read off the logarithmic derivative,
t f'(t)/f(t) = sum g_m t^m, giving the integer recurrence

    g_m = m a_m - sum_{i=1}^{m-1} g_i a_{m-i}.

All arithmetic is exact; coefficients are arbitrary-precision integers
and the rational mode of the ghost inverse uses Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NonIntegralSeriesError,
    PrecisionMismatchError,
)

DEFAULT_PRECISION = 16


@dataclass(frozen=True)
class WittVector:
    """Coefficients (a_1, ..., a_N) of 1 + a_1 t + ... + a_N t^N."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not all(isinstance(c, int) for c in self.coeffs):
            raise NonIntegralSeriesError(
                "Witt vector coefficients must be integers"
            )

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def series(self) -> list[int]:
        """Coefficient list of the underlying series, degree 0 first."""
        return [1, *self.coeffs]


@dataclass(frozen=True)
class GhostSeq:
    """Ghost components (g_1, ..., g_N)."""

    ghosts: tuple[int, ...]

    @property
    def precision(self) -> int:
        return len(self.ghosts)


def witt_vector(coeffs) -> WittVector:
    return WittVector(tuple(int(c) for c in coeffs))


def witt_zero(precision: int = DEFAULT_PRECISION) -> WittVector:
    """The additive zero: the series 1."""
    return WittVector((0,) * precision)


def _check_precision(*items) -> int:
    ps = {it.precision for it in items}
    if len(ps) != 1:
        raise PrecisionMismatchError(
            f"mixed precisions {sorted(ps)}; truncate explicitly first"
        )
    return ps.pop()


def truncate(w: WittVector, precision: int) -> WittVector:
    if precision > w.precision:
        raise PrecisionMismatchError(
            f"cannot extend precision {w.precision} to {precision}"
        )
    return WittVector(w.coeffs[:precision])


def ghost(w: WittVector) -> GhostSeq:
    """Ghost components of w; g_m equals the m-th power-sum of the
    inverse roots of the series."""
    a = w.series()
    g = [0] * (w.precision + 1)
    for m in range(1, w.precision + 1):
        acc = m * a[m]
        for i in range(1, m):
            acc -= g[i] * a[m - i]
        g[m] = acc
    return GhostSeq(tuple(g[1:]))


def _ghost_inverse_fractions(ghosts) -> list[Fraction]:
    a = [Fraction(1)]
    for m in range(1, len(ghosts) + 1):
        acc = Fraction(ghosts[m - 1])
        for i in range(1, m):
            acc += Fraction(ghosts[i - 1]) * a[m - i]
        a.append(acc / m)
    return a[1:]


def ghost_inverse(g: GhostSeq) -> WittVector:
    """The unique Witt vector with the given ghosts; raises
    NonIntegralSeriesError when no integral preimage exists."""
    frac = _ghost_inverse_fractions(g.ghosts)
    bad = [m + 1 for m, c in enumerate(frac) if c.denominator != 1]
    if bad:
        raise NonIntegralSeriesError(
            f"ghost components have no integral preimage: coefficient "
            f"a_{bad[0]} is not an integer"
        )
    return WittVector(tuple(int(c) for c in frac))


def ghost_inverse_rational(g: GhostSeq) -> tuple[Fraction, ...]:
    """Rational mode: the series coefficients over Q, no integrality
    requirement."""
    return tuple(_ghost_inverse_fractions(g.ghosts))


def _series_mul(a: list[int], b: list[int], upto: int) -> list[int]:
    out = [0] * (upto + 1)
    for i, x in enumerate(a):
        if i > upto or x == 0:
            continue
        for j, y in enumerate(b):
            if i + j > upto:
                break
            out[i + j] += x * y
    return out


def _series_inverse(a: list[int], upto: int) -> list[int]:
    # a[0] == 1
    b = [0] * (upto + 1)
    b[0] = 1
    for k in range(1, upto + 1):
        acc = 0
        for i in range(1, min(k, len(a) - 1) + 1):
            acc += a[i] * b[k - i]
        b[k] = -acc
    return b


def witt_add(u: WittVector, v: WittVector) -> WittVector:
    n = _check_precision(u, v)
    prod = _series_mul(u.series(), v.series(), n)
    return WittVector(tuple(prod[1:]))


def witt_neg(u: WittVector) -> WittVector:
    inv = _series_inverse(u.series(), u.precision)
    return WittVector(tuple(inv[1:]))


def witt_sub(u: WittVector, v: WittVector) -> WittVector:
    return witt_add(u, witt_neg(v))


def witt_mul(u: WittVector, v: WittVector) -> WittVector:
    """Ring multiplication: pointwise on ghosts.  The product of
    integral vectors is integral, so a NonIntegralSeriesError here
    signals an internal bug."""
    _check_precision(u, v)
    gu, gv = ghost(u).ghosts, ghost(v).ghosts
    return ghost_inverse(GhostSeq(tuple(x * y for x, y in zip(gu, gv))))


def teichmuller(c: int, precision: int = DEFAULT_PRECISION) -> WittVector:
    """The multiplicative lift of the integer c: the series 1/(1 - c t),
    whose ghosts are (c, c^2, c^3, ...)."""
    return WittVector(tuple(c**m for m in range(1, precision + 1)))


def from_pointcounts(counts) -> WittVector:
    """The Witt vector whose ghosts are the given point counts
    (N_1, N_2, ...).  For honest counts of a variety this is its zeta
    series; fabricated counts raise NonIntegralSeriesError."""
    return ghost_inverse(GhostSeq(tuple(int(c) for c in counts)))


def euler_product(profile, precision: int = DEFAULT_PRECISION) -> WittVector:
    """prod_d (1 - t^d)^(-a_d) for a closed-point profile (a_1, ..., a_D).

    Entries may be any integers; nonnegative ones are the geometric
    case of one factor per closed point of degree d.
    """
    series = [1] + [0] * precision
    for d, mult in enumerate(profile, start=1):
        if mult == 0 or d > precision:
            continue
        factor = [0] * (precision + 1)
        for k in range(0, precision // d + 1):
            if mult > 0:
                factor[d * k] = math.comb(mult + k - 1, k)
            else:
                factor[d * k] = (-1) ** k * math.comb(-mult, k) if k <= -mult else 0
        series = _series_mul(series, factor, precision)
    return WittVector(tuple(series[1:]))


def to_json(w: WittVector) -> dict:
    """JSON form; coefficients as decimal strings since they outgrow
    doubles quickly."""
    return {"precision": w.precision, "coeffs": [str(c) for c in w.coeffs]}


def from_json(obj: dict) -> WittVector:
    coeffs = tuple(int(c) for c in obj["coeffs"])
    if obj.get("precision", len(coeffs)) != len(coeffs):
        raise PrecisionMismatchError(
            "precision field disagrees with coefficient count"
        )
    return WittVector(coeffs)
