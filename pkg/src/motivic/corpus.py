"""Built-in varieties and (ambient, closed) pairs used by the verify
suites and the acceptance tests.

The scissor pairs are chosen so that every base field in {2, 3, 5, 7}
appears and every closed-inclusion pattern is exercised, while keeping
all point counts needed at Witt precision 10 inside the enumeration
budget: nonlinear systems appear with two variables only over F_2
((2^10)^2 points at m = 10), with one variable over F_3 and F_5, and
not at all over F_7, where (7^10)^d already exceeds the budget — the
F_7 pairs stay linear/cellular on purpose.
"""

from __future__ import annotations

from .varieties import VarietyExpr, parse_variety

# the varieties whose cohomology the catalog knows; names are CLI-stable
CATALOG_NAMES: tuple[tuple[str, str], ...] = (
    ("point", "point"),
    ("A1", "A(1)"),
    ("A2", "A(2)"),
    ("P1", "P(1)"),
    ("P2", "P(2)"),
    ("Gm", "T(1)"),
    ("P1xP1", "product(P(1),P(1))"),
)


def catalog_varieties(q: int) -> tuple[tuple[str, VarietyExpr], ...]:
    """The named catalog spaces over F_q."""
    return tuple(
        (name, parse_variety(f"{text} over {q}"))
        for name, text in CATALOG_NAMES
    )


# 23 (ambient, closed) pairs; see the module docstring for the sizing
SCISSOR_PAIRS: tuple[tuple[str, str], ...] = (
    # --- F_2 ---
    ("A(1) over 2", "affine over 2 vars x : x"),
    ("P(1) over 2", "point over 2"),
    ("P(2) over 2", "proj over 2 vars x,y,z : z"),
    ("A(2) over 2", "affine over 2 vars x,y : x ; y"),
    (
        "affine over 2 vars x,y : 0",
        "affine over 2 vars x,y : 0 ; x*y",
    ),
    (
        "affine over 2 vars x,y : y^2+y+x^3",
        "affine over 2 vars x,y : y^2+y+x^3 ; x",
    ),
    ("union(P(1),P(1)) over 2", "union(point,point) over 2"),
    ("proj over 2 vars x,y : x*y", "proj over 2 vars x,y : x*y ; x"),
    # --- F_3 ---
    ("A(1) over 3", "affine over 3 vars x : x"),
    ("P(1) over 3", "point over 3"),
    ("P(2) over 3", "proj over 3 vars x,y,z : z"),
    (
        "affine over 3 vars x : x^3+2*x",
        "affine over 3 vars x : x^3+2*x ; x",
    ),
    (
        "union(A(1),A(1)) over 3",
        "union(affine over 3 vars x : x, affine over 3 vars x : x+2) over 3",
    ),
    ("affine over 3 vars x : 0", "affine over 3 vars x : 0 ; x^3+2*x"),
    # --- F_5 ---
    ("A(1) over 5", "affine over 5 vars x : x"),
    ("P(1) over 5", "point over 5"),
    (
        "affine over 5 vars x : x^5+4*x",
        "affine over 5 vars x : x^5+4*x ; x",
    ),
    ("P(2) over 5", "proj over 5 vars x,y,z : x+y"),
    # --- F_7 (linear/cellular only: enumeration would blow the budget) ---
    ("A(1) over 7", "affine over 7 vars x : x"),
    ("P(1) over 7", "point over 7"),
    ("P(2) over 7", "proj over 7 vars x,y,z : z"),
    ("A(2) over 7", "affine over 7 vars x,y : x+y ; x+6*y"),
    (
        "union(P(2),P(2)) over 7",
        "union(proj over 7 vars x,y,z : z, proj over 7 vars x,y,z : y) over 7",
    ),
)


def scissor_corpus() -> tuple[tuple[VarietyExpr, VarietyExpr], ...]:
    """The parsed corpus pairs."""
    return tuple(
        (parse_variety(a), parse_variety(c)) for a, c in SCISSOR_PAIRS
    )


# the two concrete curves with frozen brute-force counts (see tests):
# a supersingular cubic over F_2 and an ordinary one over F_3, both
# presented as affine chart plus the point at infinity
CURVE_E2 = "union(affine vars x,y : y^2 + y + x^3, point) over 2"
CURVE_E3 = "union(affine vars x,y : 2*y^2 + x^3 + x^2 + 1, point) over 3"
