"""Self-contained property suites behind the `verify` CLI command.

Each suite runs a fixed corpus (seeded where randomness is involved)
and returns a SuiteResult; nothing here raises on a mere check
failure — failures are collected and reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import witt
from .corpus import catalog_varieties, scissor_corpus
from .h2 import lefschetz_check
from .hilbert import SQUARE_CLASSES, hilbert2, isotropic_2adic
from .k0 import verify_scissor

SUITE_NAMES = ("scissor", "witt-ring", "lefschetz", "hilbert-oracle")


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checks: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def suite_scissor(m_upto: int = 6, precision: int = 10) -> SuiteResult:
    failures = []
    pairs = scissor_corpus()
    for ambient, closed in pairs:
        report = verify_scissor(ambient, closed, m_upto, precision)
        if not report.passed:
            failures.append(
                f"({report.ambient}) minus ({report.closed}): "
                f"counts residual {report.counts_residual}, "
                f"zeta residual {report.zeta_residual}"
            )
    return SuiteResult("scissor", len(pairs), tuple(failures))


def suite_witt_ring(
    seed: int = 0, pairs: int = 500, precision: int = 12
) -> SuiteResult:
    rng = random.Random(seed)
    failures = []
    checks = 0

    def rand_vec():
        return witt.witt_vector(
            tuple(rng.randint(-9, 9) for _ in range(precision))
        )

    for _ in range(pairs):
        u, v = rand_vec(), rand_vec()
        gu, gv = witt.ghost(u).ghosts, witt.ghost(v).ghosts
        checks += 1
        if witt.ghost(witt.witt_add(u, v)).ghosts != tuple(
            a + b for a, b in zip(gu, gv)
        ):
            failures.append(f"ghost not additive on {u.coeffs} + {v.coeffs}")
        if witt.ghost(witt.witt_mul(u, v)).ghosts != tuple(
            a * b for a, b in zip(gu, gv)
        ):
            failures.append(
                f"ghost not multiplicative on {u.coeffs} * {v.coeffs}"
            )
        if witt.ghost_inverse(witt.ghost(u)) != u:
            failures.append(f"ghost not invertible on {u.coeffs}")
    for m in range(-20, 21):
        for n in range(-20, 21):
            checks += 1
            lhs = witt.witt_mul(
                witt.teichmuller(m, precision), witt.teichmuller(n, precision)
            )
            if lhs != witt.teichmuller(m * n, precision):
                failures.append(f"teichmuller not multiplicative at {m},{n}")
    return SuiteResult("witt-ring", checks, tuple(failures))


def suite_lefschetz(qs=(3, 5, 7, 9), m_upto: int = 5) -> SuiteResult:
    failures = []
    checks = 0
    for q in qs:
        for name, expr in catalog_varieties(q):
            checks += 1
            report = lefschetz_check(expr, m_upto)
            if not report.passed:
                failures.append(
                    f"{name} over F_{q}: residuals {report.residuals}"
                )
    return SuiteResult("lefschetz", checks, tuple(failures))


def suite_hilbert_oracle(seed: int = 0, samples: int = 200) -> SuiteResult:
    failures = []
    checks = 0
    for a in SQUARE_CLASSES:
        for b in SQUARE_CLASSES:
            checks += 1
            if (hilbert2(a, b) == 0) != isotropic_2adic(a, b):
                failures.append(f"formula and search disagree at ({a},{b})")
    rng = random.Random(seed)
    done = 0
    while done < samples:
        num = rng.randint(-60, 60)
        den = rng.randint(1, 60)
        if num == 0:
            continue
        a = Fraction(num, den)
        done += 1
        checks += 1
        if hilbert2(a, -a) != 0:
            failures.append(f"(a,-a) nonzero at a={a}")
        if a != 1 and hilbert2(a, 1 - a) != 0:
            failures.append(f"(a,1-a) nonzero at a={a}")
    return SuiteResult("hilbert-oracle", checks, tuple(failures))


def run_suite(name: str, seed: int = 0) -> SuiteResult:
    if name == "scissor":
        return suite_scissor()
    if name == "witt-ring":
        return suite_witt_ring(seed=seed)
    if name == "lefschetz":
        return suite_lefschetz()
    if name == "hilbert-oracle":
        return suite_hilbert_oracle(seed=seed)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
