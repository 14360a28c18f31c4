"""Rational forms of zeta series and the classical curve checks.

Polynomials are coefficient tuples, constant term first.  All linear
algebra is exact over Fraction; floating point appears in exactly one
place, the root-modulus check of weil_validate, with a stated
tolerance.

A zeta series with integer coefficients that is rational at all can be
written P/Q with integer coefficients and P(0) = Q(0) = 1; when the
window-fit produces a fraction that cannot be cleared, the input was
not a zeta series and NonIntegralCoefficientsError says so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    InsufficientDataError,
    NonIntegralCoefficientsError,
)
from .witt import WittVector


# ---------------------------------------------------------------------------
# exact polynomial helpers (constant term first)


def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def poly_degree(p) -> int:
    return len(poly_trim(p)) - 1


def _poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in poly_trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(poly_trim(a)) >= len(b):
        a = list(poly_trim(a))
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i in range(len(b)):
            a[shift + i] -= f * b[i]
        a = list(poly_trim(a))
        if not a:
            break
    return poly_trim(q), poly_trim(a)


def poly_gcd(a, b):
    """Monic gcd over Q."""
    a, b = poly_trim(a), poly_trim(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return ()
    lead = Fraction(a[-1])
    return tuple(Fraction(x) / lead for x in a)


def series_of_ratio(num, den, upto: int) -> list[Fraction]:
    """Coefficients 0..upto of num/den as a power series; den[0] != 0."""
    num = [Fraction(x) for x in num]
    den = [Fraction(x) for x in den]
    if not den or den[0] == 0:
        raise ZeroDivisionError("denominator has zero constant term")
    out = []
    for m in range(upto + 1):
        acc = num[m] if m < len(num) else Fraction(0)
        for j in range(1, min(m, len(den) - 1) + 1):
            acc -= den[j] * out[m - j]
        out.append(acc / den[0])
    return out


def _solve_exact(rows, rhs):
    """One exact solution of rows * x = rhs over Q, or None if the
    system is inconsistent.  Free variables are set to zero."""
    m = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][col]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(m)):
        if m[i][-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = m[i][-1]
    return x


# ---------------------------------------------------------------------------
# linear recurrences


@dataclass(frozen=True)
class Recurrence:
    """a_m = sum_{j=1..order} coeffs[j-1] * a_{m-j} for all positions
    m >= order inside the fitted window."""

    order: int
    coeffs: tuple[Fraction, ...]


def min_recurrence(seq, max_order: int | None = None) -> Recurrence | None:
    """Minimal-order linear recurrence fitting the whole sequence.

    A returned order r is only trusted when the window shows at least
    r + 2 consecutive instances of the recurrence, i.e. len(seq) must
    be at least 2r + 2; the search is capped accordingly (and by
    max_order if given).  Returns None when nothing fits.
    """
    seq = [Fraction(x) for x in seq]
    d = len(seq)
    if d < 2:
        raise InsufficientDataError(
            "need at least two terms to fit a recurrence"
        )
    cap = (d - 2) // 2
    if max_order is not None:
        cap = min(cap, max_order)
    for r in range(0, cap + 1):
        if r == 0:
            if all(x == 0 for x in seq):
                return Recurrence(0, ())
            continue
        rows = []
        rhs = []
        for m in range(r, d):
            rows.append([seq[m - j] for j in range(1, r + 1)])
            rhs.append(seq[m])
        sol = _solve_exact(rows, rhs)
        if sol is None:
            continue
        if all(
            seq[m] == sum(sol[j - 1] * seq[m - j] for j in range(1, r + 1))
            for m in range(r, d)
        ):
            return Recurrence(r, tuple(sol))
    return None


# ---------------------------------------------------------------------------
# rational forms


@dataclass(frozen=True)
class RationalFn:
    """numerator/denominator with integer coefficients, both with
    constant term 1 and no common factor."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        for poly in (self.numerator, self.denominator):
            if not poly or poly[0] != 1:
                raise NonIntegralCoefficientsError(
                    "rational forms are normalised to constant term 1"
                )


def to_rational(w: WittVector, max_degree: int) -> RationalFn | None:
    """Smallest rational function P/Q, deg <= max_degree on both sides,
    whose expansion matches every available coefficient of w.  Needs
    precision >= 2*max_degree (with the implicit constant term that is
    the usual 2*max_degree + 1 coefficients determining a Pade
    interpolant); returns None if nothing fits.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    n = w.precision
    if n < 2 * max_degree:
        raise InsufficientDataError(
            f"precision {n} too small for degree {max_degree}: need "
            f"{2 * max_degree}"
        )
    a = [1, *w.coeffs]
    for k in range(0, max_degree + 1):
        # q_0 = 1; solve sum_{j=0..k} q_j a_{m-j} = 0 for m > max_degree
        rows = []
        rhs = []
        for m in range(max_degree + 1, n + 1):
            rows.append([a[m - j] for j in range(1, k + 1)])
            rhs.append(-a[m])
        if k == 0:
            if any(x != 0 for x in rhs):
                continue
            sol = []
        else:
            sol = _solve_exact(rows, rhs)
            if sol is None:
                continue
        den = [Fraction(1), *sol]
        # numerator = truncation of a * den; verify the tail vanishes
        conv = [
            sum(den[j] * a[m - j] for j in range(0, min(m, k) + 1))
            for m in range(n + 1)
        ]
        if any(conv[m] != 0 for m in range(max_degree + 1, n + 1)):
            continue
        num = conv[: max_degree + 1]
        return _normalise(num, den)
    return None


def _normalise(num, den) -> RationalFn:
    num = poly_trim(num)
    den = poly_trim(den)
    g = poly_gcd(num, den)
    if poly_degree(g) > 0:
        num, _ = _poly_divmod(num, g)
        den, _ = _poly_divmod(den, g)
    num = [Fraction(x) for x in poly_trim(num)] or [Fraction(1)]
    den = [Fraction(x) for x in poly_trim(den)] or [Fraction(1)]
    # constant terms are 1 before reduction, so rescale by den[0]
    if num[0] == 0 or den[0] == 0:
        raise NonIntegralCoefficientsError("vanishing constant term")
    num = [x / num[0] for x in num]
    den = [x / den[0] for x in den]
    if any(x.denominator != 1 for x in [*num, *den]):
        raise NonIntegralCoefficientsError(
            "matched a rational function over Q that cannot be cleared "
            "to integer coefficients; not a zeta series"
        )
    return RationalFn(tuple(int(x) for x in num), tuple(int(x) for x in den))


def rational_to_json(f: RationalFn) -> dict:
    return {
        "numerator": [str(c) for c in f.numerator],
        "denominator": [str(c) for c in f.denominator],
    }


def rational_from_json(obj: dict) -> RationalFn:
    return RationalFn(
        tuple(int(c) for c in obj["numerator"]),
        tuple(int(c) for c in obj["denominator"]),
    )


def expand_rational(f: RationalFn, upto: int) -> list[int]:
    """Series coefficients 0..upto of f; integral by construction."""
    out = series_of_ratio(f.numerator, f.denominator, upto)
    assert all(x.denominator == 1 for x in out)
    return [int(x) for x in out]


# ---------------------------------------------------------------------------
# curve checks


@dataclass(frozen=True)
class WeilReport:
    """Checks a curve zeta must satisfy: denominator (1-t)(1-qt),
    numerator of even degree 2g with the functional-equation symmetry
    b_i = q^{g-i} b_{2g-i}, and all inverse roots of modulus sqrt(q)
    (checked numerically to 1e-9, the single floating-point step in
    the package)."""

    q: int
    genus: int | None
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


ROOT_TOLERANCE = 1e-9


def weil_validate(f: RationalFn, q: int) -> WeilReport:
    checks = []
    expected_den = (1, -(q + 1), q)  # (1-t)(1-qt)
    den_ok = f.denominator == expected_den
    checks.append(
        (
            "denominator",
            den_ok,
            f"expected (1-t)(1-{q}t), got {list(f.denominator)}",
        )
    )
    num = poly_trim(f.numerator) or (1,)
    deg = len(num) - 1
    even_ok = deg % 2 == 0
    checks.append(("even-degree", even_ok, f"numerator degree {deg}"))
    genus = deg // 2 if even_ok else None
    if even_ok:
        g = genus
        sym_ok = all(
            num[2 * g - i] == q ** (g - i) * num[i] for i in range(0, g + 1)
        )
        checks.append(
            ("functional-equation", sym_ok, f"b_(2g-i) = q^(g-i) b_i, g={g}")
        )
    else:
        checks.append(("functional-equation", False, "odd degree"))
    if deg == 0:
        checks.append(("root-modulus", True, "no roots"))
    else:
        roots = np.roots(list(reversed(num)))
        want = math.sqrt(q)
        worst = 0.0
        for r in roots:
            alpha = 1.0 / complex(r)
            worst = max(worst, abs(abs(alpha) - want))
        checks.append(
            (
                "root-modulus",
                bool(worst <= ROOT_TOLERANCE),
                f"max | |alpha| - sqrt(q) | = {worst:.3e}",
            )
        )
    return WeilReport(q=q, genus=genus, checks=tuple(checks))
