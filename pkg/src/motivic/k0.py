"""Scissor arithmetic on classes of varieties.

A class is a formal integer combination of variety expressions over a
fixed F_q, with the relation [X] = [Z] + [X - Z] for a closed Z in X
imposed by how complements count points, not by rewriting.  Addition
and multiplication work on presentations (disjoint unions become sums,
products become products); deciding equality of two presentations in
general is not attempted.  What is decidable is equality under a
measure, up to a chosen depth: both measures here take values in rings
where comparison is trivial, point counts in Z^depth and zeta series in
the Witt ring.

measure_zeta is computed by genuine Witt-ring operations on the zeta
series of each term, not by assembling ghost components, so the
compatibility ghost(measure_zeta(c)) == measure_counts(c) is a real
cross-check of two routes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import witt
from .errors import InvalidComplementError, ValidationError
from .varieties import (
    Affine,
    Complement,
    Product,
    VarietyExpr,
    canonicalize,
    point_count,
    structural_key,
    validate_closed,
    variety_to_text,
)


@dataclass(frozen=True)
class K0Class:
    """sum of coeff * [expr]; terms canonicalized, sorted and nonzero."""

    q: int
    terms: tuple[tuple[VarietyExpr, int], ...]

    def __post_init__(self):
        for expr, coeff in self.terms:
            if expr.q != self.q:
                raise ValidationError("class mixes base fields")
            if coeff == 0:
                raise ValidationError("zero coefficient in canonical terms")


def _merge(q: int, pairs) -> K0Class:
    acc: dict[VarietyExpr, int] = {}
    for expr, coeff in pairs:
        if expr.q != q:
            raise ValidationError("class mixes base fields")
        key = canonicalize(expr)
        acc[key] = acc.get(key, 0) + coeff
    terms = [(e, c) for e, c in acc.items() if c]
    terms.sort(key=lambda t: structural_key(t[0]))
    return K0Class(q, tuple(terms))


def k0_class(expr: VarietyExpr) -> K0Class:
    """The class [X] of a single variety."""
    return _merge(expr.q, [(expr, 1)])


def k0_zero(q: int) -> K0Class:
    return K0Class(q, ())


def k0_add(a: K0Class, b: K0Class) -> K0Class:
    if a.q != b.q:
        raise ValidationError("classes over different base fields")
    return _merge(a.q, [*a.terms, *b.terms])


def k0_neg(a: K0Class) -> K0Class:
    return K0Class(a.q, tuple((e, -c) for e, c in a.terms))


def k0_sub(a: K0Class, b: K0Class) -> K0Class:
    return k0_add(a, k0_neg(b))


def k0_mul(a: K0Class, b: K0Class) -> K0Class:
    """Presentation-level product: bilinear extension of
    [X] * [Y] = [X x Y].  Factor order is normalised away."""
    if a.q != b.q:
        raise ValidationError("classes over different base fields")
    pairs = []
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            pairs.append((Product(ea, eb, q=a.q), ca * cb))
    return _merge(a.q, pairs)


def lefschetz(q: int) -> K0Class:
    """The class of the affine line."""
    return k0_class(Affine(1, q=q))


def measure_counts(cls: K0Class, upto: int) -> tuple[int, ...]:
    """Point counts of the class over F_{q^m}, m = 1..upto."""
    out = []
    for m in range(1, upto + 1):
        out.append(sum(c * point_count(e, m) for e, c in cls.terms))
    return tuple(out)


def _int_witt(c: int, precision: int) -> witt.WittVector:
    # image of c under the unique ring map Z -> W(Z); ghosts (c, c, ...)
    return witt.euler_product((c,), precision)


def measure_zeta(cls: K0Class, precision: int) -> witt.WittVector:
    """Zeta series of the class as a Witt vector, built with Witt-ring
    addition and multiplication term by term."""
    acc = witt.witt_zero(precision)
    for expr, coeff in cls.terms:
        counts = [point_count(expr, m) for m in range(1, precision + 1)]
        zx = witt.from_pointcounts(counts)
        acc = witt.witt_add(acc, witt.witt_mul(_int_witt(coeff, precision), zx))
    return acc


@dataclass(frozen=True)
class ScissorReport:
    """Outcome of checking [X] = [Z] + [X - Z] under both measures."""

    ambient: str
    closed: str
    counts_residual: tuple[int, ...]
    zeta_residual: tuple[int, ...]

    @property
    def counts_ok(self) -> bool:
        return not any(self.counts_residual)

    @property
    def zeta_ok(self) -> bool:
        return not any(self.zeta_residual)

    @property
    def passed(self) -> bool:
        return self.counts_ok and self.zeta_ok


def verify_scissor(
    ambient: VarietyExpr,
    closed: VarietyExpr,
    m_upto: int = 6,
    precision: int = 10,
) -> ScissorReport:
    """Check the scissor relation for a validated closed inclusion:
    the class [ambient] - [closed] - [ambient minus closed] must vanish
    under the counting measure up to m_upto and under the zeta measure
    at the given precision."""
    report = validate_closed(ambient, closed)
    if not report.accepted:
        raise InvalidComplementError(report.reason)
    complement = Complement(ambient, closed, q=ambient.q)
    diff = k0_sub(
        k0_class(ambient),
        k0_add(k0_class(closed), k0_class(complement)),
    )
    counts = measure_counts(diff, m_upto)
    zeta = measure_zeta(diff, precision)
    return ScissorReport(
        ambient=variety_to_text(ambient),
        closed=variety_to_text(closed),
        counts_residual=counts,
        zeta_residual=zeta.coeffs,
    )


def k0_from_text_terms(q: int, pairs) -> K0Class:
    """Convenience: build a class from (expr, coeff) pairs."""
    return _merge(q, pairs)


__all__ = [
    "K0Class",
    "ScissorReport",
    "k0_class",
    "k0_zero",
    "k0_add",
    "k0_neg",
    "k0_sub",
    "k0_mul",
    "lefschetz",
    "measure_counts",
    "measure_zeta",
    "verify_scissor",
    "k0_from_text_terms",
]
