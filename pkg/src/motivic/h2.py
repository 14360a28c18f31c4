"""Eigenvalue bookkeeping for automorphisms of simple spaces and the
resulting Z/2 invariant of (space, automorphism, Galois) scenarios.

The cohomology of the supported spaces is hard-coded as a catalog of
(degree, twist, multiplicity) rows for compactly-supported cohomology
— nothing is computed from first principles here.  Under a Frobenius
over F_q the twist-w rows carry eigenvalue q^w (geometric Frobenius:
eigenvalue q^w in degree 2w of cellular spaces, so that alternating
traces reproduce point counts; the arithmetic convention q^{-w} would
not).  Under complex conjugation they carry (-1)^w.

A scenario is a catalog space made of identical components, a
permutation of those components, and a Galois element.  Permutation
cycles of length 1 or 2 split, per cohomology row, into rational
automorphism eigenvalues +1 / -1; longer cycles would need
non-rational roots of unity and are rejected.  Odd cohomological
degree enters the K-class with a sign, carried here as a negative
exponent.  The invariant is the Hilbert-symbol value of the resulting
product of (automorphism-eigenvalue, Galois-eigenvalue) symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import is_prime_power
from .errors import (
    UnsupportedCycleLengthError,
    UnsupportedScenarioError,
    UnsupportedSpaceError,
    ValidationError,
)
from .hilbert import CommutingPair, moore_h2, sigma2
from .rat import RationalFn
from .varieties import (
    Affine,
    DisjointUnion,
    Point,
    Product,
    Projective,
    Torus,
    VarietyExpr,
    canonicalize,
    point_count,
    variety_to_text,
)

# ---------------------------------------------------------------------------
# Galois elements


@dataclass(frozen=True)
class Frobenius:
    """Frobenius of F_q; rows of twist w get eigenvalue q^w."""

    q: int

    def __post_init__(self):
        if not is_prime_power(self.q):
            raise ValidationError(f"{self.q} is not a prime power")


@dataclass(frozen=True)
class Conjugation:
    """Complex conjugation; rows of twist w get eigenvalue (-1)^w."""


Galois = Frobenius | Conjugation


# ---------------------------------------------------------------------------
# the cohomology catalog


def twist_table(space: VarietyExpr) -> tuple[tuple[int, int, int], ...]:
    """Rows (degree, twist, multiplicity) of compactly-supported
    cohomology, merged and sorted.  Unions concatenate; products
    convolve (degrees and twists add, multiplicities multiply)."""
    acc: dict[tuple[int, int], int] = {}
    _accumulate(space, acc)
    return tuple(
        (d, w, m) for (d, w), m in sorted(acc.items()) if m
    )


def _accumulate(space: VarietyExpr, acc) -> None:
    if isinstance(space, Point):
        rows = [(0, 0, 1)]
    elif isinstance(space, Affine):
        rows = [(2 * space.n, space.n, 1)]
    elif isinstance(space, Projective):
        rows = [(2 * i, i, 1) for i in range(space.n + 1)]
    elif isinstance(space, Torus):
        n = space.n
        rows = [(n + j, j, comb(n, j)) for j in range(n + 1)]
    elif isinstance(space, DisjointUnion):
        for part in space.parts:
            _accumulate(part, acc)
        return
    elif isinstance(space, Product):
        left: dict[tuple[int, int], int] = {}
        right: dict[tuple[int, int], int] = {}
        _accumulate(space.left, left)
        _accumulate(space.right, right)
        for (d1, w1), m1 in left.items():
            for (d2, w2), m2 in right.items():
                key = (d1 + d2, w1 + w2)
                acc[key] = acc.get(key, 0) + m1 * m2
        return
    else:
        raise UnsupportedSpaceError(
            f"no cohomology table for {type(space).__name__}"
        )
    for d, w, m in rows:
        acc[(d, w)] = acc.get((d, w), 0) + m


def cohomology_table(
    space: VarietyExpr, galois: Galois
) -> tuple[tuple[int, int, int], ...]:
    """Rows (degree, galois-eigenvalue, multiplicity) for the space."""
    if isinstance(galois, Frobenius):
        if galois.q != space.q:
            raise ValidationError(
                f"space over F_{space.q} but Frobenius of F_{galois.q}"
            )
        base = galois.q
    else:
        base = -1
    return tuple((d, base**w, m) for d, w, m in twist_table(space))


# ---------------------------------------------------------------------------
# scenarios


def _base_shape_ok(expr: VarietyExpr) -> bool:
    if isinstance(expr, (Point, Affine)):
        return True
    if isinstance(expr, Projective) and expr.n == 1:
        return True
    if isinstance(expr, Torus) and expr.n == 1:
        return True
    return False


@dataclass(frozen=True)
class Scenario:
    """Identical components, a permutation of them (image form,
    0-based), and a Galois element."""

    space: VarietyExpr
    permutation: tuple[int, ...]
    galois: Galois

    def __post_init__(self):
        parts = self.components
        first = canonicalize(parts[0])
        if any(canonicalize(p) != first for p in parts[1:]):
            raise UnsupportedSpaceError(
                "scenario components must be identical copies"
            )
        if not _base_shape_ok(first):
            raise UnsupportedSpaceError(
                "component must be one of point, P(1), A(n), T(1); got "
                + variety_to_text(first)
            )
        if sorted(self.permutation) != list(range(len(parts))):
            raise ValidationError(
                f"permutation {self.permutation} is not a bijection on "
                f"{len(parts)} components"
            )
        if isinstance(self.galois, Frobenius):
            if self.galois.q != self.space.q:
                raise ValidationError(
                    f"space over F_{self.space.q} but Frobenius of "
                    f"F_{self.galois.q}"
                )
            if self.galois.q % 2 == 0:
                raise UnsupportedScenarioError(
                    "Frobenius scenarios need odd q"
                )

    @property
    def components(self) -> tuple[VarietyExpr, ...]:
        if isinstance(self.space, DisjointUnion):
            return self.space.parts
        return (self.space,)


def _cycle_lengths(perm: tuple[int, ...]) -> list[int]:
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        out.append(length)
    return out


@dataclass(frozen=True)
class CohSummand:
    """A joint eigenspace: cohomological degree, Galois eigenvalue,
    automorphism eigenvalue, and its (positive) multiplicity."""

    degree: int
    frob_eigenvalue: int
    alpha_eigenvalue: int
    multiplicity: int

    def __post_init__(self):
        if self.degree < 0 or self.multiplicity < 1:
            raise ValidationError("bad summand")
        if self.frob_eigenvalue == 0 or self.alpha_eigenvalue == 0:
            raise ValidationError("eigenvalues must be nonzero")


def scenario_summands(s: Scenario) -> tuple[CohSummand, ...]:
    """Joint eigenspaces of (automorphism, Galois) on the cohomology
    of the whole space.  A cycle of length c permutes c copies of each
    row cyclically, so the automorphism eigenvalues are the c-th roots
    of unity; only c <= 2 keeps them rational."""
    lengths = _cycle_lengths(s.permutation)
    too_long = [c for c in lengths if c > 2]
    if too_long:
        raise UnsupportedCycleLengthError(
            f"cycle of length {too_long[0]}: automorphism eigenvalues "
            "would be irrational roots of unity"
        )
    fixed = sum(1 for c in lengths if c == 1)
    swaps = sum(1 for c in lengths if c == 2)
    table = cohomology_table(s.components[0], s.galois)
    out = []
    for degree, eig, mult in table:
        if fixed + swaps:
            out.append(CohSummand(degree, eig, 1, (fixed + swaps) * mult))
        if swaps:
            out.append(CohSummand(degree, eig, -1, swaps * mult))
    return tuple(out)


def scenario_pairs(s: Scenario) -> CommutingPair:
    """The commuting (automorphism, Galois) eigenvalue data, with odd
    cohomological degree contributing negative exponents."""
    summands = []
    for c in scenario_summands(s):
        sign = -1 if c.degree % 2 else 1
        summands.append(
            (
                Fraction(c.alpha_eigenvalue),
                Fraction(c.frob_eigenvalue),
                sign * c.multiplicity,
            )
        )
    return CommutingPair(tuple(summands))


def h2_eval(s: Scenario, ell: int = 2) -> int:
    """Value in Z/2 of the scenario's class under the symbol map at
    the prime ell.  For odd ell the Galois eigenvalues must be
    ell-adic units, so Frobenius scenarios require ell not dividing q."""
    if ell != 2:
        if isinstance(s.galois, Frobenius) and s.galois.q % ell == 0:
            raise UnsupportedScenarioError(
                f"symbol at {ell} needs {ell} coprime to q={s.galois.q}"
            )
    return moore_h2(sigma2(scenario_pairs(s)), prime=ell)


# ---------------------------------------------------------------------------
# catalog cross-checks against point counts


@dataclass(frozen=True)
class LefschetzReport:
    """Alternating eigenvalue traces minus point counts, per m."""

    space: str
    q: int
    residuals: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not any(self.residuals)


def lefschetz_check(space: VarietyExpr, m_upto: int) -> LefschetzReport:
    """Check sum_i (-1)^i tr(Frob^m | H^i_c) == #X(F_{q^m}) for
    m <= m_upto, exactly, using the catalog table."""
    q = space.q
    table = twist_table(space)
    residuals = []
    for m in range(1, m_upto + 1):
        trace = sum(
            (-1) ** d * q ** (w * m) * mult for d, w, mult in table
        )
        residuals.append(trace - point_count(space, m))
    return LefschetzReport(
        space=variety_to_text(space), q=q, residuals=tuple(residuals)
    )


def catalog_zeta_rational(space: VarietyExpr) -> RationalFn:
    """The alternating product of det(1 - Frob t | H^i_c) as a reduced
    rational function: odd degrees to the numerator, even to the
    denominator.  All factors are (1 - q^w t), so reduction is exact
    cancellation of repeated twists."""
    q = space.q
    net: dict[int, int] = {}
    for d, w, mult in twist_table(space):
        net[w] = net.get(w, 0) + (mult if d % 2 == 0 else -mult)
    num: tuple[int, ...] = (1,)
    den: tuple[int, ...] = (1,)
    for w in sorted(net):
        for _ in range(abs(net[w])):
            factor = (1, -(q**w))
            if net[w] < 0:
                num = _poly_mul_int(num, factor)
            else:
                den = _poly_mul_int(den, factor)
    return RationalFn(num, den)


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


__all__ = [
    "CohSummand",
    "Conjugation",
    "Frobenius",
    "Galois",
    "LefschetzReport",
    "Scenario",
    "catalog_zeta_rational",
    "cohomology_table",
    "h2_eval",
    "lefschetz_check",
    "scenario_pairs",
    "scenario_summands",
    "twist_table",
]
