"""Variety grammar, closed-inclusion validation, and exact counting."""

import random

import pytest

from motivic import ff
from motivic.errors import (
    BudgetExceededError,
    InvalidComplementError,
    NonIntegralProfileError,
    ValidationError,
    VarietySyntaxError,
)
from motivic.varieties import (
    Affine,
    Complement,
    Concrete,
    DisjointUnion,
    Point,
    PolySystem,
    Product,
    Projective,
    Torus,
    _count_system_enum,
    canonicalize,
    closed_point_profile,
    make_poly,
    parse_variety,
    point_count,
    profile_from_counts,
    validate_closed,
    variety_to_text,
)

# frozen by an independent scalar brute-force scan (no shared code with
# the package): projective counts of the two reference curves
E2_PROJ_COUNTS = [3, 9, 9, 9, 33, 81]
E3_PROJ_COUNTS = [6, 12, 18, 96, 246, 684]

E2_TEXT = "union(affine vars x,y : y^2 + y + x^3, point) over 2"
E3_TEXT = "union(affine vars x,y : 2*y^2 + x^3 + x^2 + 1, point) over 3"


# ---------------------------------------------------------------------------
# parsing


def test_parse_atoms():
    assert parse_variety("point over 5") == Point(q=5)
    assert parse_variety("A(3) over 2") == Affine(3, q=2)
    assert parse_variety("P(2) over 9") == Projective(2, q=9)
    assert parse_variety("T(1) over 7") == Torus(1, q=7)


def test_parse_whitespace_insensitive():
    a = parse_variety("union(P(1),P(1)) over 3")
    b = parse_variety("  union ( P( 1 ) ,P(1))over 3  ")
    assert a == b


def test_parse_compound():
    e = parse_variety("complement( P(2), proj vars x,y,z : z ) over 3")
    assert isinstance(e, Complement)
    assert e.ambient == Projective(2, q=3)
    # a complement of a line in the plane counts like A(2)
    for m in (1, 2, 3):
        assert point_count(e, m) == point_count(Affine(2, q=3), m)
    # inner and outer tags must agree
    with pytest.raises(ValidationError):
        parse_variety("union(P(1) over 3, P(1)) over 4")
    with pytest.raises(ValidationError):
        parse_variety("P(1)")
    assert parse_variety("P(1)", default_q=3) == Projective(1, q=3)


def test_parse_concrete():
    e = parse_variety("affine over 2 vars x,y : y^2 + y + x^3")
    assert isinstance(e, Concrete)
    sys_ = e.system
    assert sys_.flavor == "affine"
    assert sys_.varnames == ("x", "y")
    assert sys_.polys == (make_poly({(3, 0): 1, (0, 1): 1, (0, 2): 1}, 2),)
    # coefficient arithmetic happens mod p: 3*x == x over 2, 4*x == 0
    e2 = parse_variety("affine over 2 vars x : 3*x")
    assert e2.system.polys == (make_poly({(1,): 1}, 2),)
    e3 = parse_variety("affine over 2 vars x : 4*x")
    assert e3.system.polys == ((),)


def test_parse_concrete_multi_poly_and_juxtaposition():
    e = parse_variety("proj over 5 vars x,y,z : x*z - y^2 ; x + 4z")
    assert len(e.system.polys) == 2
    a = parse_variety("affine over 7 vars u,v : 2u^2v - 3", default_q=None)
    assert a.system.polys == (make_poly({(2, 1): 2, (0, 0): -3}, 7),)


def test_parse_errors_carry_position():
    with pytest.raises(VarietySyntaxError) as info:
        parse_variety("union(P(1), ) over 2")
    assert info.value.position == 12
    with pytest.raises(VarietySyntaxError):
        parse_variety("prod(P(1),P(1)) over 2")
    with pytest.raises(VarietySyntaxError):
        parse_variety("affine over 2 vars x,x : x")
    with pytest.raises(VarietySyntaxError):
        parse_variety("affine over 2 vars x : x + y")
    with pytest.raises(VarietySyntaxError):
        parse_variety("A(1) over 2 junk")


def test_parse_validation_errors():
    # non-homogeneous projective system
    with pytest.raises(ValidationError):
        parse_variety("proj over 3 vars x,y : x^2 + y")
    # concrete over a prime power
    with pytest.raises(ValidationError):
        parse_variety("affine over 4 vars x : x")
    # non-prime-power tag
    with pytest.raises(ValidationError):
        parse_variety("point over 6")
    # union parts inherit the single tag
    e = parse_variety("union(point, A(1)) over 3")
    assert all(p.q == 3 for p in e.parts)


def test_print_parse_roundtrip():
    texts = [
        "point over 2",
        "A(2) over 3",
        "P(3) over 25",
        "T(2) over 7",
        "union(P(1),P(1),point) over 3",
        "product(P(1),T(1)) over 5",
        "complement(P(2),proj vars x,y,z : z) over 3",
        E2_TEXT,
        "proj over 3 vars x,y,z : x*z + 2*y^2 ; x^3 + y^3 + z^3",
    ]
    for text in texts:
        e = parse_variety(text)
        assert parse_variety(variety_to_text(e)) == e


# ---------------------------------------------------------------------------
# closed inclusions


def line_in_p2(q):
    return parse_variety(f"proj over {q} vars x,y,z : x", default_q=q)


def test_validate_closed_patterns():
    # concrete superset of equations
    amb = parse_variety("affine over 2 vars x,y : y^2 + y + x^3")
    closed = parse_variety("affine over 2 vars x,y : y^2 + y + x^3 ; x")
    assert validate_closed(amb, closed).accepted
    assert not validate_closed(closed, amb).accepted
    # point and linear subspaces in cells
    assert validate_closed(Projective(1, q=3), Point(q=3)).accepted
    assert validate_closed(Projective(2, q=3), line_in_p2(3)).accepted
    assert validate_closed(
        Affine(1, q=2), parse_variety("affine over 2 vars x : x")
    ).accepted
    # degree too high for a cell
    assert not validate_closed(
        Affine(1, q=2), parse_variety("affine over 2 vars x : x^2 + x")
    ).accepted
    # wrong variable count
    assert not validate_closed(
        Projective(2, q=3),
        parse_variety("proj over 3 vars x,y : x", default_q=3),
    ).accepted
    # componentwise unions
    amb_u = parse_variety("union(P(1),P(1)) over 3")
    clo_u = parse_variety("union(point,point) over 3")
    assert validate_closed(amb_u, clo_u).accepted
    assert not validate_closed(amb_u, DisjointUnion((Point(q=3),), q=3)).accepted
    # base field mismatch
    assert not validate_closed(Projective(1, q=3), Point(q=5)).accepted
    # not a recognised pattern
    assert not validate_closed(Torus(1, q=3), Point(q=3)).accepted


def test_complement_constructor_validates():
    with pytest.raises(InvalidComplementError):
        Complement(Torus(1, q=3), Point(q=3), q=3)
    with pytest.raises(InvalidComplementError):
        parse_variety("complement(T(1), point) over 3")
    ok = parse_variety("complement(P(1), point) over 3")
    assert point_count(ok, 1) == 3


# ---------------------------------------------------------------------------
# counting: closed formulas


def test_counts_cellular():
    assert point_count(Point(q=7), 3) == 1
    assert point_count(Affine(2, q=3), 2) == 81
    assert [point_count(Projective(2, q=2), m) for m in (1, 2, 3)] == [7, 21, 73]
    assert point_count(Projective(1, q=5), 2) == 26
    assert point_count(Torus(1, q=4), 2) == 15
    assert point_count(Torus(3, q=2), 1) == 1
    assert point_count(Affine(0, q=3), 5) == 1
    assert point_count(Projective(0, q=3), 2) == 1


def test_counts_compound():
    q = 3
    p1 = Projective(1, q=q)
    assert point_count(DisjointUnion((p1, p1), q=q), 2) == 2 * (9 + 1)
    assert point_count(Product(p1, p1, q=q), 2) == (9 + 1) ** 2
    c = Complement(p1, Point(q=q), q=q)
    assert [point_count(c, m) for m in (1, 2, 3)] == [3, 9, 27]


def test_cell_decompositions():
    # P(n) = point + A(1) + ... + A(n) and T(1) = A(1) - point,
    # checked through the counting measure
    for q in (2, 3, 5, 7, 9):
        for n in range(0, 5):
            for m in (1, 2, 3):
                total = sum(point_count(Affine(i, q=q), m) for i in range(n + 1))
                assert point_count(Projective(n, q=q), m) == total
        for m in (1, 2, 3):
            assert (
                point_count(Torus(1, q=q), m)
                == point_count(Affine(1, q=q), m) - 1
            )


# ---------------------------------------------------------------------------
# counting: concrete systems


def scalar_count_oracle(system: PolySystem, m: int) -> int:
    """Plain FieldElem evaluation over all tuples; independent of the
    packed tables and of the linear fast path."""
    ctx = ff.build_extension(system.p, m)
    elems = ff.enumerate_field(ctx)
    d = system.nvars
    count = 0
    stack = [()]
    for tup_idx in range(len(elems) ** d):
        coords = []
        v = tup_idx
        for _ in range(d):
            coords.append(elems[v % len(elems)])
            v //= len(elems)
        ok = True
        for poly in system.polys:
            acc = ff.zero(ctx)
            for exps, c in poly:
                term = ff.scalar(ctx, c)
                for j, e in enumerate(exps):
                    term = ff.ff_mul(ctx, term, ff.ff_pow(ctx, coords[j], e))
                acc = ff.ff_add(ctx, acc, term)
            if acc != ff.zero(ctx):
                ok = False
                break
        count += ok
    if system.flavor == "affine":
        return count
    zero_ok = all(all(any(exps) for exps, _ in poly) for poly in system.polys)
    nonzero = count - (1 if zero_ok else 0)
    return nonzero // (len(elems) - 1) if nonzero else 0


CONCRETE_SAMPLES = [
    ("affine over 2 vars x,y : y^2 + y + x^3", [1, 2]),
    ("affine over 3 vars x : x^3 + 2*x", [1, 2, 3]),
    ("proj over 3 vars x,y,z : x^3 + x^2*z + 2*y^2*z + z^3", [1, 2]),
    ("proj over 2 vars x,y,z : x*z + y^2", [1, 2]),
    ("affine over 5 vars x,y : x*y + 1", [1]),
    ("proj over 2 vars x,y : x", [1, 2, 3]),
    ("affine over 2 vars x,y : x + y + 1 ; x + y", [1, 2]),
    ("affine over 7 vars x : 3", [1]),
    ("proj over 3 vars x,y,z : x ; y ; z", [1, 2]),
]


@pytest.mark.parametrize("text,ms", CONCRETE_SAMPLES)
def test_concrete_counts_match_scalar_oracle(text, ms):
    expr = parse_variety(text)
    for m in ms:
        got = point_count(expr, m)
        assert got == scalar_count_oracle(expr.system, m)
        # and the vectorised enumerator agrees with the fast path
        assert got == _count_system_enum(expr.system, m)


def test_linear_fast_path_matches_enumeration():
    rng = random.Random(5)
    for p in (2, 3, 5):
        for _ in range(8):
            d = rng.randint(1, 3)
            npolys = rng.randint(1, 3)
            polys = []
            for _ in range(npolys):
                terms = {}
                for j in range(d):
                    terms[tuple(1 if i == j else 0 for i in range(d))] = (
                        rng.randrange(p)
                    )
                terms[(0,) * d] = rng.randrange(p)
                polys.append(make_poly(terms, p))
            system = PolySystem("affine", p, tuple(f"x{i}" for i in range(d)),
                                tuple(polys))
            for m in (1, 2):
                expr = Concrete(system, q=p)
                assert point_count(expr, m) == _count_system_enum(system, m)


def test_curve_counts_frozen():
    e2 = parse_variety(E2_TEXT)
    assert [point_count(e2, m) for m in range(1, 7)] == E2_PROJ_COUNTS
    e3 = parse_variety(E3_TEXT)
    assert [point_count(e3, m) for m in range(1, 7)] == E3_PROJ_COUNTS
    # same curves presented projectively, over the extensions that fit
    # the default budget
    e2p = parse_variety("proj over 2 vars x,y,z : x^3 + y^2*z + y*z^2")
    assert [point_count(e2p, m) for m in range(1, 5)] == E2_PROJ_COUNTS[:4]
    e3p = parse_variety("proj over 3 vars x,y,z : x^3 + x^2*z + 2*y^2*z + z^3")
    assert [point_count(e3p, m) for m in range(1, 4)] == E3_PROJ_COUNTS[:3]


def test_budget_guard(monkeypatch):
    monkeypatch.setenv("MOTIVIC_BUDGET", "1000")
    expr = parse_variety("affine over 2 vars x,y : x*y + 1")
    with pytest.raises(BudgetExceededError):
        point_count(expr, 5)  # 4^10 tuples
    # linear systems are immune: no enumeration happens
    lin = parse_variety("affine over 2 vars x,y : x + y + 1")
    assert point_count(lin, 20) == 2**20


def test_product_union_consistency_random():
    rng = random.Random(23)
    atoms = [
        Point(q=3),
        Affine(1, q=3),
        Projective(1, q=3),
        Torus(1, q=3),
        Projective(2, q=3),
    ]
    for _ in range(40):
        a, b = rng.choice(atoms), rng.choice(atoms)
        m = rng.randint(1, 3)
        assert point_count(Product(a, b, q=3), m) == point_count(
            a, m
        ) * point_count(b, m)
        assert point_count(DisjointUnion((a, b), q=3), m) == point_count(
            a, m
        ) + point_count(b, m)


# ---------------------------------------------------------------------------
# canonical forms


def test_canonicalize_unions_and_products():
    q = 3
    a = DisjointUnion(
        (Projective(1, q=q), DisjointUnion((Point(q=q), Torus(1, q=q)), q=q)),
        q=q,
    )
    b = DisjointUnion(
        (Point(q=q), Torus(1, q=q), Projective(1, q=q)), q=q
    )
    assert canonicalize(a) == canonicalize(b)
    p = Product(Projective(1, q=q), Point(q=q), q=q)
    r = Product(Point(q=q), Projective(1, q=q), q=q)
    assert canonicalize(p) == canonicalize(r)
    assert canonicalize(DisjointUnion((Point(q=q),), q=q)) == Point(q=q)


# ---------------------------------------------------------------------------
# closed point profiles


def necklace_oracle(p, d):
    """Monic irreducibles of degree d over F_p by the Moebius-style
    inclusion-exclusion, implemented from scratch."""
    def mu(n):
        if n == 1:
            return 1
        out = 1
        for prime in range(2, n + 1):
            if n % prime == 0:
                if n % (prime * prime) == 0:
                    return 0
                out = -out
                while n % prime == 0:
                    n //= prime
        return out

    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += mu(d // e) * p**e
    return total // d


def test_profiles_affine_projective_line():
    a1 = Affine(1, q=2)
    assert closed_point_profile(a1, 4) == (2, 1, 2, 3)
    assert closed_point_profile(a1, 8) == tuple(
        necklace_oracle(2, d) for d in range(1, 9)
    )
    assert closed_point_profile(Affine(1, q=3), 6) == tuple(
        necklace_oracle(3, d) for d in range(1, 7)
    )
    assert closed_point_profile(Projective(1, q=2), 3) == (3, 1, 2)


def test_profiles_are_nonnegative_for_varieties():
    exprs = [
        parse_variety("P(2) over 3"),
        parse_variety("T(2) over 2"),
        parse_variety("product(P(1),P(1)) over 5"),
        parse_variety(E2_TEXT),
        parse_variety(E3_TEXT),
    ]
    for e in exprs:
        profile = closed_point_profile(e, 6)
        assert all(x >= 0 for x in profile)


def test_profile_rejects_fabricated_counts():
    with pytest.raises(NonIntegralProfileError):
        profile_from_counts([1, 4])  # a_2 = 1/2
    with pytest.raises(NonIntegralProfileError):
        profile_from_counts([2, 1])  # 2a_2 = N_2 - N_1 < 0
