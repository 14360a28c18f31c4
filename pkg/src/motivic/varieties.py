"""Variety expressions over finite fields and exact point counting.

An expression is a tree built from the atoms

    point                 one rational point
    A(n), P(n), T(n)      affine space, projective space, split torus
    affine / proj systems  concrete vanishing loci of polynomial systems

by disjoint union, product and complement, tagged with a base field
F_q.  The text grammar (whitespace-insensitive):

    variety    :=  expr [ 'over' INT ]
    expr       :=  'point' | 'A(' INT ')' | 'P(' INT ')' | 'T(' INT ')'
                |  'union(' expr (',' expr)* ')'
                |  'product(' expr ',' expr ')'
                |  'complement(' expr ',' expr ')'
                |  concrete
    concrete   :=  ('affine'|'proj') ['over' INT] 'vars' NAME (',' NAME)*
                   ':' poly (';' poly)*
    poly       :=  ['+'|'-'] term (('+'|'-') term)*
    term       :=  factor ('*'? factor)*        # juxtaposition allowed
    factor     :=  INT ['^' INT] | NAME ['^' INT]

The 'over' tag may appear after any subexpression and inline in a
concrete system; all occurrences must agree, and exactly one value must
be derivable.  Concrete systems require a prime base field (the
coefficients live in F_p); 'proj' systems must be homogeneous and with
d variables describe a locus in P^{d-1}.

Polynomials are stored canonically as sorted tuples of
(exponent_tuple, coefficient) with coefficients reduced to 1..p-1, so
structural equality of expressions is meaningful and parse/print
round-trips.

Counting is exact.  Cellular atoms and their combinations use closed
formulas; concrete systems use a linear-algebra fast path when every
polynomial has total degree at most one (the rank of a matrix over F_p
does not change under field extension), and otherwise exhaustive
evaluation over F_{p^m}^d, vectorised through the packed field tables
and guarded by the enumeration budget.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import budget, ff
from .arith import is_prime_power, prime_power_split
from .errors import (
    InternalCountError,
    InvalidComplementError,
    NonIntegralProfileError,
    ValidationError,
    VarietySyntaxError,
)

# ---------------------------------------------------------------------------
# polynomial systems

Poly = tuple[tuple[tuple[int, ...], int], ...]
"""Sorted ((exponents, coefficient), ...); the zero polynomial is ()."""


def make_poly(terms: dict[tuple[int, ...], int], p: int) -> Poly:
    """Canonical form of a polynomial given as exponent->coefficient."""
    out = []
    for exps, c in terms.items():
        c %= p
        if c:
            out.append((tuple(exps), c))
    return tuple(sorted(out))


def poly_degree(poly: Poly) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(exps) for exps, _ in poly), default=-1)


def is_homogeneous(poly: Poly) -> bool:
    degrees = {sum(exps) for exps, _ in poly}
    return len(degrees) <= 1


@dataclass(frozen=True)
class PolySystem:
    """A finite set of polynomial equations over F_p.

    flavor 'affine' cuts a locus in A^d, flavor 'projective' in P^{d-1}
    (and every polynomial must be homogeneous).
    """

    flavor: str
    p: int
    varnames: tuple[str, ...]
    polys: tuple[Poly, ...]

    def __post_init__(self):
        if self.flavor not in ("affine", "projective"):
            raise ValidationError(f"unknown system flavor {self.flavor!r}")
        if prime_power_split(self.p)[1] != 1:
            raise ValidationError(
                f"concrete systems need a prime base field, got {self.p}"
            )
        if not self.varnames:
            raise ValidationError("a system needs at least one variable")
        if len(set(self.varnames)) != len(self.varnames):
            raise ValidationError("duplicate variable names")
        d = len(self.varnames)
        for poly in self.polys:
            for exps, c in poly:
                if len(exps) != d:
                    raise ValidationError("exponent tuple of wrong length")
                if any(e < 0 for e in exps):
                    raise ValidationError("negative exponent")
                if not 1 <= c < self.p:
                    raise ValidationError(
                        f"coefficient {c} not reduced mod {self.p}"
                    )
            if tuple(sorted(poly)) != poly:
                raise ValidationError("polynomial terms not in canonical order")
            if self.flavor == "projective" and not is_homogeneous(poly):
                raise ValidationError(
                    "projective systems must be homogeneous: "
                    + poly_to_text(poly, self.varnames)
                )

    @property
    def nvars(self) -> int:
        return len(self.varnames)


# ---------------------------------------------------------------------------
# expression types


@dataclass(frozen=True)
class VarietyExpr:
    """Base class; q is the size of the base field and is shared by all
    subexpressions of a tree."""

    q: int = field(kw_only=True)

    def __post_init__(self):
        if not is_prime_power(self.q):
            raise ValidationError(f"base field size {self.q} is not a prime power")


@dataclass(frozen=True)
class Point(VarietyExpr):
    pass


@dataclass(frozen=True)
class Affine(VarietyExpr):
    n: int

    def __post_init__(self):
        super().__post_init__()
        if self.n < 0:
            raise ValidationError("negative dimension")


@dataclass(frozen=True)
class Projective(VarietyExpr):
    n: int

    def __post_init__(self):
        super().__post_init__()
        if self.n < 0:
            raise ValidationError("negative dimension")


@dataclass(frozen=True)
class Torus(VarietyExpr):
    n: int

    def __post_init__(self):
        super().__post_init__()
        if self.n < 0:
            raise ValidationError("negative dimension")


@dataclass(frozen=True)
class Concrete(VarietyExpr):
    system: PolySystem

    def __post_init__(self):
        super().__post_init__()
        if self.q != self.system.p:
            raise ValidationError(
                f"system over F_{self.system.p} tagged with q={self.q}"
            )


@dataclass(frozen=True)
class DisjointUnion(VarietyExpr):
    parts: tuple[VarietyExpr, ...]

    def __post_init__(self):
        super().__post_init__()
        if not self.parts:
            raise ValidationError("empty union")
        for part in self.parts:
            if part.q != self.q:
                raise ValidationError("union parts over different base fields")


@dataclass(frozen=True)
class Product(VarietyExpr):
    left: VarietyExpr
    right: VarietyExpr

    def __post_init__(self):
        super().__post_init__()
        if self.left.q != self.q or self.right.q != self.q:
            raise ValidationError("product factors over different base fields")


@dataclass(frozen=True)
class Complement(VarietyExpr):
    ambient: VarietyExpr
    closed: VarietyExpr

    def __post_init__(self):
        super().__post_init__()
        report = validate_closed(self.ambient, self.closed)
        if not report.accepted:
            raise InvalidComplementError(
                f"closed part not recognised inside ambient: {report.reason}"
            )


# ---------------------------------------------------------------------------
# closed inclusions


@dataclass(frozen=True)
class ClosedReport:
    accepted: bool
    reason: str


def validate_closed(ambient: VarietyExpr, closed: VarietyExpr) -> ClosedReport:
    """Decide, syntactically, whether `closed` is presented as a closed
    subvariety of `ambient`.  Recognised patterns:

    * concrete in concrete: same flavor, field and variables, and the
      ambient equations are a subset of the closed ones (more equations
      cut a smaller, closed, locus);
    * a literal point, or a concrete system of total degree <= 1 in
      matching variables/flavor, inside A(n) or P(n);
    * disjoint unions of the same length, componentwise.

    Everything else is rejected; the report says why.
    """
    if ambient.q != closed.q:
        return ClosedReport(False, "different base fields")
    if isinstance(ambient, Concrete) and isinstance(closed, Concrete):
        a, c = ambient.system, closed.system
        if a.flavor != c.flavor:
            return ClosedReport(False, "flavor mismatch")
        if a.varnames != c.varnames:
            return ClosedReport(False, "different variables")
        if not set(a.polys) <= set(c.polys):
            return ClosedReport(
                False, "ambient equations are not a subset of the closed ones"
            )
        return ClosedReport(True, "concrete superset of equations")
    if isinstance(ambient, (Affine, Projective)):
        if isinstance(closed, Point):
            return ClosedReport(True, "rational point in a cellular space")
        if isinstance(closed, Concrete):
            sys_ = closed.system
            want_flavor = "affine" if isinstance(ambient, Affine) else "projective"
            want_vars = ambient.n if want_flavor == "affine" else ambient.n + 1
            if sys_.flavor != want_flavor:
                return ClosedReport(False, "flavor mismatch with ambient")
            if sys_.nvars != want_vars:
                return ClosedReport(
                    False,
                    f"system in {sys_.nvars} variables cannot sit in "
                    f"{_shape_text(ambient)}",
                )
            if any(poly_degree(p) > 1 for p in sys_.polys):
                return ClosedReport(
                    False, "only linear subspaces are recognised here"
                )
            return ClosedReport(True, "linear subspace of a cellular space")
        return ClosedReport(False, "closed part not recognised in this ambient")
    if isinstance(ambient, DisjointUnion) and isinstance(closed, DisjointUnion):
        if len(ambient.parts) != len(closed.parts):
            return ClosedReport(False, "unions of different lengths")
        for i, (ap, cp) in enumerate(zip(ambient.parts, closed.parts)):
            sub = validate_closed(ap, cp)
            if not sub.accepted:
                return ClosedReport(False, f"component {i}: {sub.reason}")
        return ClosedReport(True, "componentwise closed inclusion")
    return ClosedReport(False, "not a supported closed-inclusion pattern")


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.)")

_KEYWORDS = {"point", "union", "product", "complement", "affine", "proj",
             "over", "vars"}


@dataclass(frozen=True)
class _Token:
    kind: str  # INT, NAME, SYM, EOF
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if not m:
            break
        if m.group(1) is not None:
            out.append(_Token("INT", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(_Token("NAME", m.group(2), m.start(2)))
        else:
            sym = m.group(3)
            if sym not in "()+-*^,;:":
                raise VarietySyntaxError(f"unexpected character {sym!r}", m.start(3))
            out.append(_Token("SYM", sym, m.start(3)))
        i = m.end()
    out.append(_Token("EOF", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0
        self.tags: list[int] = []

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def next(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> _Token:
        tok = self.next()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            raise VarietySyntaxError(
                f"expected {want!r}, found {tok.text or 'end of input'!r}", tok.pos
            )
        return tok

    def at_keyword(self, word: str) -> bool:
        tok = self.peek()
        return tok.kind == "NAME" and tok.text == word

    def parse(self):
        ast = self.parse_expr()
        tok = self.peek()
        if tok.kind != "EOF":
            raise VarietySyntaxError(f"trailing input {tok.text!r}", tok.pos)
        return ast

    def parse_expr(self):
        ast = self.parse_primary()
        if self.at_keyword("over"):
            self.next()
            tok = self.expect("INT")
            self.tags.append(int(tok.text))
        return ast

    def parse_primary(self):
        tok = self.peek()
        if tok.kind == "NAME":
            word = tok.text
            if word == "point":
                self.next()
                return ("point",)
            if word in ("A", "P", "T"):
                self.next()
                self.expect("SYM", "(")
                n = int(self.expect("INT").text)
                self.expect("SYM", ")")
                return ("cell", word, n)
            if word == "union":
                self.next()
                self.expect("SYM", "(")
                parts = [self.parse_expr()]
                while self.peek().text == ",":
                    self.next()
                    parts.append(self.parse_expr())
                self.expect("SYM", ")")
                return ("union", parts)
            if word in ("product", "complement"):
                self.next()
                self.expect("SYM", "(")
                a = self.parse_expr()
                self.expect("SYM", ",")
                b = self.parse_expr()
                self.expect("SYM", ")")
                return (word, a, b)
            if word in ("affine", "proj"):
                return self.parse_concrete()
        raise VarietySyntaxError(
            f"expected a variety, found {tok.text or 'end of input'!r}", tok.pos
        )

    def parse_concrete(self):
        flavor_tok = self.next()
        flavor = "affine" if flavor_tok.text == "affine" else "projective"
        if self.at_keyword("over"):
            self.next()
            tok = self.expect("INT")
            self.tags.append(int(tok.text))
        self_pos = self.peek()
        if not self.at_keyword("vars"):
            raise VarietySyntaxError("expected 'vars'", self_pos.pos)
        self.next()
        names = [self.expect("NAME").text]
        while self.peek().text == ",":
            self.next()
            names.append(self.expect("NAME").text)
        if len(set(names)) != len(names):
            raise VarietySyntaxError("duplicate variable name", self_pos.pos)
        for name in names:
            if name in _KEYWORDS:
                raise VarietySyntaxError(
                    f"{name!r} is a keyword, not a variable", self_pos.pos
                )
        self.expect("SYM", ":")
        index = {name: j for j, name in enumerate(names)}
        polys = [self.parse_poly(index)]
        while self.peek().text == ";":
            self.next()
            polys.append(self.parse_poly(index))
        return ("concrete", flavor, tuple(names), polys)

    def parse_poly(self, index: dict[str, int]):
        terms: dict[tuple[int, ...], int] = {}
        sign = 1
        tok = self.peek()
        if tok.text in ("+", "-"):
            self.next()
            sign = -1 if tok.text == "-" else 1
        while True:
            exps, coeff = self.parse_term(index)
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + sign * coeff
            tok = self.peek()
            if tok.text == "+":
                self.next()
                sign = 1
            elif tok.text == "-":
                self.next()
                sign = -1
            else:
                break
        return terms

    def parse_term(self, index: dict[str, int]):
        exps = [0] * len(index)
        coeff = 1
        saw = False
        while True:
            tok = self.peek()
            if tok.kind == "INT":
                self.next()
                base = int(tok.text)
                e = self.parse_exponent()
                coeff *= base**e
                saw = True
            elif tok.kind == "NAME" and tok.text not in _KEYWORDS:
                self.next()
                if tok.text not in index:
                    raise VarietySyntaxError(
                        f"unknown variable {tok.text!r}", tok.pos
                    )
                exps[index[tok.text]] += self.parse_exponent()
                saw = True
            elif tok.text == "*" and saw:
                self.next()
                continue
            else:
                break
        if not saw:
            raise VarietySyntaxError(
                f"expected a term, found {tok.text or 'end of input'!r}", tok.pos
            )
        return exps, coeff

    def parse_exponent(self) -> int:
        if self.peek().text == "^":
            self.next()
            tok = self.expect("INT")
            return int(tok.text)
        return 1


def parse_variety(text: str, default_q: int | None = None) -> VarietyExpr:
    """Parse the grammar above into a validated expression tree.

    Raises VarietySyntaxError (with position) for malformed text and
    ValidationError for well-formed text with bad semantics (missing or
    conflicting base field, non-homogeneous projective system, ...).
    """
    parser = _Parser(text)
    ast = parser.parse()
    tags = set(parser.tags)
    if len(tags) > 1:
        raise ValidationError(
            f"conflicting base fields {sorted(tags)} in one expression"
        )
    if tags:
        q = tags.pop()
    elif default_q is not None:
        q = default_q
    else:
        raise ValidationError("no base field: add 'over q'")
    return _build(ast, q)


def _build(ast, q: int) -> VarietyExpr:
    head = ast[0]
    if head == "point":
        return Point(q=q)
    if head == "cell":
        _, kind, n = ast
        cls = {"A": Affine, "P": Projective, "T": Torus}[kind]
        return cls(n, q=q)
    if head == "union":
        return DisjointUnion(tuple(_build(c, q) for c in ast[1]), q=q)
    if head == "product":
        return Product(_build(ast[1], q), _build(ast[2], q), q=q)
    if head == "complement":
        return Complement(_build(ast[1], q), _build(ast[2], q), q=q)
    if head == "concrete":
        _, flavor, names, raw_polys = ast
        if not is_prime_power(q) or prime_power_split(q)[1] != 1:
            raise ValidationError(
                f"concrete systems need a prime base field, got {q}"
            )
        polys = tuple(make_poly(t, q) for t in raw_polys)
        system = PolySystem(flavor, q, names, polys)
        return Concrete(system, q=q)
    raise AssertionError(head)  # unreachable


# ---------------------------------------------------------------------------
# printing

def poly_to_text(poly: Poly, names: tuple[str, ...]) -> str:
    if not poly:
        return "0"
    ordered = sorted(poly, key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
    parts = []
    for exps, c in ordered:
        factors = []
        for name, e in zip(names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append("*".join([str(c), *factors]))
    return " + ".join(parts)


def _shape_text(expr: VarietyExpr) -> str:
    if isinstance(expr, Point):
        return "point"
    if isinstance(expr, Affine):
        return f"A({expr.n})"
    if isinstance(expr, Projective):
        return f"P({expr.n})"
    if isinstance(expr, Torus):
        return f"T({expr.n})"
    if isinstance(expr, DisjointUnion):
        return f"union({','.join(_shape_text(p) for p in expr.parts)})"
    if isinstance(expr, Product):
        return f"product({_shape_text(expr.left)},{_shape_text(expr.right)})"
    if isinstance(expr, Complement):
        return (
            f"complement({_shape_text(expr.ambient)},{_shape_text(expr.closed)})"
        )
    if isinstance(expr, Concrete):
        sys_ = expr.system
        kw = "affine" if sys_.flavor == "affine" else "proj"
        polys = " ; ".join(poly_to_text(p, sys_.varnames) for p in sys_.polys)
        return f"{kw} vars {','.join(sys_.varnames)} : {polys}"
    raise AssertionError(type(expr))


def variety_to_text(expr: VarietyExpr) -> str:
    """Canonical text; parse_variety(variety_to_text(e)) == e."""
    return f"{_shape_text(expr)} over {expr.q}"


# ---------------------------------------------------------------------------
# canonical form

_RANK = {Point: 0, Affine: 1, Projective: 2, Torus: 3, Concrete: 4,
         DisjointUnion: 5, Product: 6, Complement: 7}


def structural_key(expr: VarietyExpr):
    """Total order on expressions with a common base field."""
    rank = _RANK[type(expr)]
    if isinstance(expr, Point):
        return (rank,)
    if isinstance(expr, (Affine, Projective, Torus)):
        return (rank, expr.n)
    if isinstance(expr, Concrete):
        s = expr.system
        return (rank, s.flavor, s.varnames, s.polys)
    if isinstance(expr, DisjointUnion):
        return (rank, tuple(structural_key(p) for p in expr.parts))
    if isinstance(expr, Product):
        return (rank, structural_key(expr.left), structural_key(expr.right))
    return (rank, structural_key(expr.ambient), structural_key(expr.closed))


def canonicalize(expr: VarietyExpr) -> VarietyExpr:
    """Flatten and sort unions, sort product factors.  Two expressions
    that differ only by such reshuffling get equal canonical forms."""
    if isinstance(expr, DisjointUnion):
        flat: list[VarietyExpr] = []
        for part in expr.parts:
            c = canonicalize(part)
            if isinstance(c, DisjointUnion):
                flat.extend(c.parts)
            else:
                flat.append(c)
        flat.sort(key=structural_key)
        if len(flat) == 1:
            return flat[0]
        return DisjointUnion(tuple(flat), q=expr.q)
    if isinstance(expr, Product):
        a, b = canonicalize(expr.left), canonicalize(expr.right)
        if structural_key(b) < structural_key(a):
            a, b = b, a
        return Product(a, b, q=expr.q)
    if isinstance(expr, Complement):
        return Complement(
            canonicalize(expr.ambient), canonicalize(expr.closed), q=expr.q
        )
    return expr


# ---------------------------------------------------------------------------
# point counting

_CHUNK = 1 << 18


def point_count(expr: VarietyExpr, m: int) -> int:
    """Number of F_{q^m}-points.  Exact; exhaustive work is bounded by
    the enumeration budget."""
    if m < 1:
        raise ValueError("extension degree m must be >= 1")
    return _point_count(expr, m)


@lru_cache(maxsize=None)
def _point_count(expr: VarietyExpr, m: int) -> int:
    Q = expr.q**m
    if isinstance(expr, Point):
        return 1
    if isinstance(expr, Affine):
        return Q**expr.n
    if isinstance(expr, Projective):
        return (Q ** (expr.n + 1) - 1) // (Q - 1)
    if isinstance(expr, Torus):
        return (Q - 1) ** expr.n
    if isinstance(expr, DisjointUnion):
        return sum(_point_count(p, m) for p in expr.parts)
    if isinstance(expr, Product):
        return _point_count(expr.left, m) * _point_count(expr.right, m)
    if isinstance(expr, Complement):
        return _point_count(expr.ambient, m) - _point_count(expr.closed, m)
    if isinstance(expr, Concrete):
        return _count_system(expr.system, m)
    raise AssertionError(type(expr))


def _linear_data(system: PolySystem):
    """Rows (coefficient vector, constant) when every polynomial has
    total degree <= 1, else None."""
    rows = []
    for poly in system.polys:
        vec = [0] * system.nvars
        const = 0
        for exps, c in poly:
            t = sum(exps)
            if t == 0:
                const = c
            elif t == 1:
                vec[exps.index(1)] = c
            else:
                return None
        rows.append((vec, const))
    return rows


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [r[:] for r in rows]
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col] % p:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _count_linear(system: PolySystem, m: int) -> int:
    """Linear systems: the rank over F_p equals the rank over any
    extension, so no enumeration is needed."""
    p = system.p
    Q = p**m
    data = _linear_data(system)
    assert data is not None
    if system.flavor == "affine":
        a_rows = [vec for vec, _ in data]
        aug = [vec + [(-const) % p] for vec, const in data]
        r = _rank_mod_p(a_rows, p)
        if _rank_mod_p(aug, p) > r:
            return 0
        return Q ** (system.nvars - r)
    # projective: a homogeneous polynomial of degree <= 1 is either a
    # linear form or a constant; a nonzero constant kills everything
    rows = []
    for vec, const in data:
        if const:
            return 0
        if any(vec):
            rows.append(vec)
    r = _rank_mod_p(rows, p) if rows else 0
    return (Q ** (system.nvars - r) - 1) // (Q - 1)


def _count_system(system: PolySystem, m: int) -> int:
    if _linear_data(system) is not None:
        return _count_linear(system, m)
    return _count_system_enum(system, m)


def _count_system_enum(system: PolySystem, m: int) -> int:
    """Exhaustive count over F_{p^m}^d; the reference path for every
    concrete system."""
    p, d = system.p, system.nvars
    Q = p**m
    total = Q**d
    budget.charge(total, f"counting a {d}-variable system over F_{{{p}^{m}}}")
    F = ff.packed_field(p, m)
    pre = [
        [(c, [(j, e) for j, e in enumerate(exps) if e]) for exps, c in poly]
        for poly in system.polys
    ]
    matches = 0
    for start in range(0, total, _CHUNK):
        n = min(_CHUNK, total - start)
        idx = np.arange(start, start + n, dtype=np.int64)
        coords = [(idx // Q**j) % Q for j in range(d)]
        ok = np.ones(n, dtype=bool)
        for terms in pre:
            val = np.zeros(n, dtype=np.int64)
            for coeff, factors in terms:
                term = np.full(n, coeff % p, dtype=np.int64)
                for j, e in factors:
                    term = F.mul(term, F.pow_const(coords[j], e))
                val = F.add(val, term)
            ok &= val == 0
            if not ok.any():
                break
        matches += int(ok.sum())
    if system.flavor == "affine":
        return matches
    zero_ok = all(
        all(any(exps) for exps, _ in poly) for poly in system.polys
    )
    nonzero = matches - (1 if zero_ok else 0)
    if nonzero == 0:
        return 0
    if nonzero % (Q - 1):
        raise InternalCountError(
            f"projective solution count {nonzero} not divisible by {Q - 1}"
        )
    return nonzero // (Q - 1)


# ---------------------------------------------------------------------------
# closed point profiles


def profile_from_counts(counts) -> tuple[int, ...]:
    """Multiplicities (a_1, ..., a_D) of closed points of each degree,
    from the extension point counts N_m = sum_{d | m} d a_d.  Counts
    that violate nonnegativity or integrality of some a_d do not come
    from a variety and raise NonIntegralProfileError."""
    counts = [int(c) for c in counts]
    a: list[int] = []
    for d in range(1, len(counts) + 1):
        s = counts[d - 1]
        for e in range(1, d):
            if d % e == 0:
                s -= e * a[e - 1]
        if s < 0 or s % d:
            raise NonIntegralProfileError(
                f"degree-{d} multiplicity would be {s}/{d}"
            )
        a.append(s // d)
    return tuple(a)


def closed_point_profile(expr: VarietyExpr, depth: int) -> tuple[int, ...]:
    """Closed points of degree 1..depth on the variety."""
    counts = [point_count(expr, m) for m in range(1, depth + 1)]
    return profile_from_counts(counts)
