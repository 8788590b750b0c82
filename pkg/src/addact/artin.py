"""Finite-dimensional local algebras presented as quotients of polynomial rings.

An algebra is built from a :class:`Presentation` (generator names plus
relation polynomials) by linear algebra on degree-truncated polynomial spaces.
For growing ``D`` we row-reduce the span of all ``monomial * relation``
products inside the polynomials of degree ``< D``; once the quotient
dimension stops growing (``dim_D == dim_{D+1}``) the ideal contains every
monomial of degree ``D`` locally, so the truncated quotient *is* the algebra.

Elimination prefers pivots of low degree, and among equal degree the
lexicographically smaller monomial.  The surviving monomials form the basis,
listed by ascending degree and descending lex order, e.g. ``1, x, y, x^2,
x*y, x^3`` for ``K[x,y]/(x^4, x^2*y, x^3 - y^2)``.

Element coordinates may be Fractions or :class:`~addact.exactpoly.Poly`
values, so the same multiplication table serves numeric and symbolic work.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    DimensionMismatch,
    InternalInvariantViolation,
    NonzeroConstantTerm,
    NotAnIdeal,
    NotInMaximalIdeal,
    NotNilpotent,
    QuotientIsZero,
    TruncationCapExceeded,
    UnitPartNotOne,
    VariableMismatch,
)
from .exactpoly import Poly, monomials_below, monomials_of_degree, parse_poly

DEFAULT_CAP = 32


class LinearRelationWarning(UserWarning):
    """A relation has a nonzero linear part (handled, but never needed in practice)."""


def pivot_key(mono):
    # elimination order: low degree first, then lex-smaller first
    return (sum(mono), mono)


def basis_key(mono):
    # listing order: low degree first, then lex-larger first
    return (sum(mono), tuple(-e for e in mono))


@dataclass(frozen=True)
class Presentation:
    gens: tuple
    relations: tuple
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "relations", tuple(self.relations))
        if not self.gens:
            raise ValueError("a presentation needs at least one generator")
        if self.cap < 1:
            raise ValueError("truncation cap must be positive")
        for r in self.relations:
            if r.vars != self.gens:
                raise VariableMismatch(f"relation {r} is over {r.vars}, expected {self.gens}")
            if r.constant_term():
                raise NonzeroConstantTerm(f"relation {r} has a nonzero constant term")

    @classmethod
    def parse(cls, gens: Sequence[str], relations: Iterable[str], cap: int = DEFAULT_CAP):
        gens = tuple(gens)
        return cls(gens, tuple(parse_poly(r, gens) for r in relations), cap)

    def has_linear_relations(self) -> bool:
        return any(r.order() == 1 for r in self.relations)

    def __str__(self):
        rels = ", ".join(str(r) for r in self.relations)
        return f"K[{', '.join(self.gens)}]/({rels})"


# ---------------------------------------------------------------- subspaces

class Subspace:
    """Subspace of K^n stored as its reduced row echelon basis.

    Two subspaces are equal exactly when their row matrices are equal.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple):
        self.n = n
        self.rows = rows

    @classmethod
    def span(cls, n: int, vectors: Iterable) -> "Subspace":
        return cls(n, linalg.rref((_vec(v) for v in vectors), n))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls.span(n, _unit_vectors(n))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def pivots(self) -> tuple:
        return tuple(next(i for i, x in enumerate(r) if x) for r in self.rows)

    def contains(self, v) -> bool:
        v = _vec(v)
        return linalg.rank(self.rows + (v,)) == self.dim

    __contains__ = contains

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.n, self.rows + other.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def _unit_vectors(n):
    for i in range(n):
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        yield tuple(v)


def _vec(v) -> tuple:
    if isinstance(v, Element):
        return v.vector()
    return tuple(Fraction(x) for x in v)


# ---------------------------------------------------------------- algebras

class LocalAlgebra:
    """Local algebra with a monomial basis and a sparse multiplication table.

    ``table[i][j]`` is a dict ``k -> coefficient`` giving the product of basis
    elements ``i`` and ``j``.  ``basis[0]`` is always the monomial 1.
    """

    def __init__(self, presentation: Presentation, basis: Sequence[tuple],
                 table, nf_table: dict, stab_degree: int):
        self.presentation = presentation
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.table = table
        self.nf_table = nf_table
        self.stab_degree = stab_degree
        self._powers = None
        self._gen_images = None

    @property
    def gens(self) -> tuple:
        return self.presentation.gens

    def basis_names(self) -> list:
        names = []
        for mono in self.basis:
            s = str(Poly.monomial(self.gens, mono))
            names.append(s)
        return names

    def one(self) -> "Element":
        return self.basis_element(0)

    def zero(self) -> "Element":
        return Element(self, (Fraction(0),) * self.dim)

    def basis_element(self, i: int) -> "Element":
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return Element(self, tuple(v))

    def element(self, coords: Sequence) -> "Element":
        return Element(self, tuple(coords))

    def __call__(self, f) -> "Element":
        """Class of a polynomial (or polynomial text) in the algebra."""
        if isinstance(f, str):
            f = parse_poly(f, self.gens)
        return normal_form(self, f)

    def monomial_nf(self, mono: tuple) -> dict:
        if sum(mono) >= self.stab_degree:
            return {}
        return self.nf_table[tuple(mono)]

    def generator_images(self) -> list:
        if self._gen_images is None:
            k = len(self.gens)
            imgs = []
            for i in range(k):
                e = [0] * k
                e[i] = 1
                imgs.append(self.monomial_nf(tuple(e)))
            self._gen_images = imgs
        return self._gen_images

    @property
    def powers(self) -> list:
        """Subspaces m^0, m^1, ..., ending with the first zero power."""
        if self._powers is None:
            n = self.dim
            powers = [Subspace.whole(n)]
            m = Subspace.span(n, list(_unit_vectors(n))[1:])
            powers.append(m)
            while powers[-1].dim:
                prev = powers[-1]
                prods = [_mul_vec(self, r, self.basis_element(k).coords)
                         for r in prev.rows for k in range(1, n)]
                powers.append(Subspace.span(n, prods))
            self._powers = powers
        return self._powers

    @property
    def nilpotency_degree(self) -> int:
        return len(self.powers) - 2

    @property
    def maximal_ideal(self) -> Subspace:
        return self.powers[1] if len(self.powers) > 1 else Subspace.zero(self.dim)

    def format(self, x: "Element") -> str:
        names = self.basis_names()
        parts = []
        for c, name in zip(x.coords, names):
            if not c:
                continue
            cs = str(c)
            if name == "1":
                parts.append(f"({cs})" if isinstance(c, Poly) and len(c) > 1 else cs)
            elif c == 1:
                parts.append(name)
            else:
                parts.append(f"({cs})*{name}" if isinstance(c, Poly) or c < 0 else f"{cs}*{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"LocalAlgebra({self.presentation}, dim={self.dim})"


class Element:
    """Vector of coordinates over an algebra's basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: LocalAlgebra, coords: tuple):
        if len(coords) != algebra.dim:
            raise DimensionMismatch(f"{len(coords)} coordinates for an algebra of dim {algebra.dim}")
        self.algebra = algebra
        self.coords = tuple(coords)

    def vector(self) -> tuple:
        return tuple(Fraction(c) for c in self.coords)

    def is_nilpotent(self) -> bool:
        return not self.coords[0]

    def _check(self, other):
        if not isinstance(other, Element):
            return False
        if other.algebra.dim != self.algebra.dim:
            raise DimensionMismatch("elements of algebras of different dimension")
        return True

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = self.algebra.one() * other
        self._check(other)
        return Element(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul_elements(self.algebra, self, other)
        if isinstance(other, (int, Fraction, Poly)):
            return Element(self.algebra, tuple(a * other if a else a for a in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = self.algebra.one()
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.coords == other.coords or all(a == b for a, b in zip(self.coords, other.coords))

    __hash__ = None

    def __repr__(self):
        return f"Element({self.algebra.format(self)})"


def _mul_vec(A: LocalAlgebra, a: Sequence, b: Sequence) -> tuple:
    res = [0] * A.dim
    table = A.table
    for i, x in enumerate(a):
        if not x:
            continue
        row = table[i]
        for j, y in enumerate(b):
            if not y:
                continue
            entry = row[j]
            if not entry:
                continue
            p = x * y
            for k, c in entry.items():
                res[k] = res[k] + c * p
    return tuple(Fraction(r) if isinstance(r, int) else r for r in res)


def _sparse_mul(A: LocalAlgebra, a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            for k, c in A.table[i][j].items():
                s = out.get(k, 0) + c * x * y
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
    return out


def mul_elements(A: LocalAlgebra, a: Element, b: Element) -> Element:
    if a.algebra.dim != A.dim or b.algebra.dim != A.dim:
        raise DimensionMismatch("element dimension does not match algebra")
    return Element(A, _mul_vec(A, a.coords, b.coords))


# ---------------------------------------------------------------- building

def _truncated_span(relations: Sequence[Poly], nvars: int, bound: int) -> linalg.Echelon:
    """Echelon basis of (I + m^bound) / m^bound inside polynomials of degree < bound."""
    ech = linalg.Echelon(rank=pivot_key)
    for f in relations:
        if not f:
            continue
        low = f.order()
        items = list(f.terms.items())
        for deg in range(0, bound - low):
            for mu in monomials_of_degree(nvars, deg):
                row = {}
                for m, c in items:
                    if sum(m) + deg < bound:
                        row[tuple(a + b for a, b in zip(m, mu))] = c
                if row:
                    ech.add(row)
    return ech


def truncated_dimension(relations: Sequence[Poly], nvars: int, bound: int) -> int:
    """dim K[x]/(I + m^bound)."""
    total = len(monomials_below(nvars, bound))
    return total - len(_truncated_span(relations, nvars, bound))


def stabilization(relations: Sequence[Poly], nvars: int, cap: int = DEFAULT_CAP):
    """First ``D`` with ``dim_D == dim_{D+1}`` and the echelon form at ``D``."""
    prev_dim = None
    prev_ech = None
    for bound in range(1, cap + 1):
        ech = _truncated_span(relations, nvars, bound)
        dim = len(monomials_below(nvars, bound)) - len(ech)
        if prev_dim is not None and dim == prev_dim:
            return bound - 1, prev_ech
        prev_dim, prev_ech = dim, ech
    raise TruncationCapExceeded(
        f"quotient dimensions still growing at truncation degree {cap} "
        f"(last dim {prev_dim}); the ideal is not primary to the origin")


def build_algebra(p: Presentation, verify: bool = True) -> LocalAlgebra:
    if p.has_linear_relations():
        warnings.warn(f"presentation {p} has relations with linear terms",
                      LinearRelationWarning, stacklevel=2)
    n = len(p.gens)
    stab, ech = stabilization(p.relations, n, p.cap)
    pivots = set(ech.rows)
    monos = monomials_below(n, stab)
    basis = sorted((m for m in monos if m not in pivots), key=basis_key)
    index = {m: i for i, m in enumerate(basis)}
    if not basis or basis[0] != (0,) * n:
        raise InternalInvariantViolation("the unit monomial is not a basis element")

    nf_table = {}
    for m in monos:
        if m in index:
            nf_table[m] = {index[m]: Fraction(1)}
        else:
            row = ech.rows[m]
            nf_table[m] = {index[c]: -v for c, v in row.items() if c != m}

    N = len(basis)
    table = tuple(
        tuple(_product_nf(nf_table, basis[i], basis[j], stab) for j in range(N))
        for i in range(N))
    A = LocalAlgebra(p, basis, table, nf_table, stab)
    if verify:
        check_structure_constants(A)
    return A


def _product_nf(nf_table, a, b, stab):
    m = tuple(x + y for x, y in zip(a, b))
    if sum(m) >= stab:
        return {}
    return nf_table[m]


def check_structure_constants(A: LocalAlgebra) -> None:
    """Exhaustive commutativity and associativity check of the multiplication table."""
    N = A.dim
    T = A.table
    for i in range(N):
        for j in range(N):
            if T[i][j] != T[j][i]:
                raise InternalInvariantViolation(f"table not commutative at ({i},{j})")
    for i in range(N):
        for j in range(N):
            for k in range(N):
                left = _sparse_mul(A, T[i][j], {k: Fraction(1)})
                right = _sparse_mul(A, {i: Fraction(1)}, T[j][k])
                if left != right:
                    raise InternalInvariantViolation(f"table not associative at ({i},{j},{k})")


def normal_form(A: LocalAlgebra, f: Poly) -> Element:
    if f.vars != A.gens:
        raise VariableMismatch(f"polynomial over {f.vars}, algebra generated by {A.gens}")
    res = [Fraction(0)] * A.dim
    for m, c in f.terms.items():
        for k, v in A.monomial_nf(m).items():
            res[k] += c * v
    return Element(A, tuple(res))


def lift(A: LocalAlgebra, x: Element) -> Poly:
    """Polynomial in the generators whose class is ``x`` (combination of basis monomials)."""
    terms = {}
    for c, mono in zip(x.vector(), A.basis):
        if c:
            terms[mono] = c
    return Poly(A.gens, terms)


def presents_same_algebra(A: LocalAlgebra, B: LocalAlgebra) -> bool:
    """True when both are quotients of the same polynomial ring by the same local ideal."""
    if A.gens != B.gens or A.dim != B.dim:
        return False
    return (all(normal_form(A, r).vector() == A.zero().vector() for r in B.presentation.relations)
            and all(normal_form(B, r).vector() == B.zero().vector() for r in A.presentation.relations))


# ---------------------------------------------------------------- ideal calculus

def m_power(A: LocalAlgebra, j: int) -> Subspace:
    if j < 0:
        raise ValueError("power must be non-negative")
    powers = A.powers
    return powers[j] if j < len(powers) else Subspace.zero(A.dim)


def _left_mult_matrix(A: LocalAlgebra, s: Sequence) -> list:
    """Matrix of a -> a*s (rows indexed by output coordinate)."""
    N = A.dim
    M = [[Fraction(0)] * N for _ in range(N)]
    for j in range(N):
        for l, sl in enumerate(s):
            if not sl:
                continue
            for k, c in A.table[j][l].items():
                M[k][j] += c * sl
    return M


def multiplication_matrix(A: LocalAlgebra, x: Element) -> list:
    """Matrix of multiplication by ``x``; entries follow the coordinate ring of ``x``."""
    N = A.dim
    M = [[0] * N for _ in range(N)]
    for j in range(N):
        for l, xl in enumerate(x.coords):
            if not xl:
                continue
            for k, c in A.table[j][l].items():
                M[k][j] = M[k][j] + c * xl
    return M


def annihilator(A: LocalAlgebra, S: Subspace) -> Subspace:
    rows = []
    for s in S.rows:
        rows.extend(_left_mult_matrix(A, s))
    return Subspace.span(A.dim, linalg.nullspace(rows, A.dim))


def socle(A: LocalAlgebra) -> Subspace:
    return annihilator(A, A.maximal_ideal)


def is_gorenstein(A: LocalAlgebra) -> bool:
    return socle(A).dim == 1


def embedding_dimension(A: LocalAlgebra) -> int:
    return m_power(A, 1).dim - m_power(A, 2).dim


def is_ideal(A: LocalAlgebra, S: Subspace) -> bool:
    for s in S.rows:
        for k in range(1, A.dim):
            if not S.contains(_mul_vec(A, s, A.basis_element(k).coords)):
                return False
    return True


def _check_in_m(S: Subspace):
    if any(r[0] for r in S.rows):
        raise NotInMaximalIdeal("subspace is not contained in the maximal ideal")


def largest_ideal_in(A: LocalAlgebra, U: Subspace) -> Subspace:
    """Largest ideal J of A with J contained in U: all a with a*b in U for every basis b."""
    _check_in_m(U)
    N = A.dim
    functionals = linalg.nullspace(U.rows, N)
    rows = []
    for i in range(N):
        for phi in functionals:
            row = [Fraction(0)] * N
            for j in range(N):
                acc = Fraction(0)
                for k, c in A.table[j][i].items():
                    acc += phi[k] * c
                row[j] = acc
            rows.append(row)
    return Subspace.span(N, linalg.nullspace(rows, N))


def generates_algebra(A: LocalAlgebra, S: Subspace) -> bool:
    V = Subspace.span(A.dim, (A.one().coords,) + S.rows)
    while True:
        prods = [_mul_vec(A, v, s) for v in V.rows for s in S.rows]
        W = Subspace.span(A.dim, V.rows + tuple(prods))
        if W.dim == V.dim:
            return V.dim == A.dim
        V = W


def hilbert_function(A: LocalAlgebra) -> list:
    d = A.nilpotency_degree
    return [m_power(A, j).dim - m_power(A, j + 1).dim for j in range(d + 1)]


def exp_nilpotent(A: LocalAlgebra, u: Element) -> Element:
    if not u.is_nilpotent():
        raise NotNilpotent("exp is only defined here for nilpotent elements")
    total = A.one()
    power = A.one()
    for i in range(1, A.nilpotency_degree + 1):
        power = power * u
        total = total + power * Fraction(1, factorial(i))
    return total


def log_unipotent(A: LocalAlgebra, u: Element) -> Element:
    if not u.coords[0] == 1:
        raise UnitPartNotOne("log needs an element with unit part exactly 1")
    v = u - A.one()
    total = A.zero()
    power = A.one()
    for i in range(1, A.nilpotency_degree + 1):
        power = power * v
        total = total + power * Fraction((-1) ** (i + 1), i)
    return total


# ---------------------------------------------------------------- quotients

@dataclass(eq=False)
class Projection:
    """Linear surjection between algebras; ``matrix`` has target-dim rows."""

    source: LocalAlgebra
    target: LocalAlgebra
    matrix: tuple = field(repr=False)

    def vector(self, v: Sequence) -> tuple:
        return tuple(sum((row[i] * v[i] for i in range(len(v)) if v[i]), Fraction(0))
                     for row in self.matrix)

    def __call__(self, x) -> Element:
        v = x.vector() if isinstance(x, Element) else tuple(Fraction(c) for c in x)
        return Element(self.target, self.vector(v))

    def image(self, S: Subspace) -> Subspace:
        return Subspace.span(self.target.dim, (self.vector(r) for r in S.rows))

    def kernel(self) -> Subspace:
        return Subspace.span(self.source.dim, linalg.nullspace(self.matrix, self.source.dim))


def _identity_projection(A: LocalAlgebra) -> Projection:
    return Projection(A, A, tuple(_unit_vectors(A.dim)))


def quotient_by_ideal(A: LocalAlgebra, J: Subspace):
    """The algebra A/J and the projection A -> A/J.

    The quotient keeps A's generators and gains the lifts of J's basis as
    relations.  If that makes some generator redundant (J meets m outside
    m^2), redundant generators are eliminated so the result is presented on
    a minimal generating set.
    """
    if J.n != A.dim:
        raise DimensionMismatch("subspace does not live in this algebra")
    if J.dim == A.dim:
        raise QuotientIsZero("cannot take the quotient by the whole algebra")
    if not is_ideal(A, J):
        raise NotAnIdeal("subspace is not closed under multiplication by the algebra")
    if J.dim == 0:
        return A, _identity_projection(A)

    keys = [pivot_key(m) for m in A.basis]
    ech = linalg.Echelon(rank=lambda i: keys[i])
    for r in J.rows:
        ech.add(linalg.dense_to_sparse(r))
    pivots = set(ech.rows)
    keep = [i for i in range(A.dim) if i not in pivots]
    pos = {i: t for t, i in enumerate(keep)}

    # image of each source basis vector as a sparse dict on the kept indices
    images = []
    for i in range(A.dim):
        if i in pos:
            images.append({pos[i]: Fraction(1)})
        else:
            images.append({pos[c]: -v for c, v in ech.rows[i].items() if c != i})

    def proj(d: dict) -> dict:
        out: dict = {}
        for i, c in d.items():
            for t, v in images[i].items():
                s = out.get(t, 0) + c * v
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return out

    lifts = []
    for p in sorted(pivots, key=lambda i: keys[i]):
        row = ech.rows[p]
        lifts.append(Poly(A.gens, {A.basis[c]: v for c, v in row.items()}))
    pres = Presentation(A.gens, A.presentation.relations + tuple(lifts), A.presentation.cap)

    table = tuple(tuple(proj(A.table[a][b]) for b in keep) for a in keep)
    nf_table = {m: proj(v) for m, v in A.nf_table.items()}
    Q = LocalAlgebra(pres, [A.basis[i] for i in keep], table, nf_table, A.stab_degree)
    matrix = tuple(
        tuple(images[i].get(t, Fraction(0)) for i in range(A.dim)) for t in range(len(keep)))

    if embedding_dimension(Q) == len(A.gens):
        return Q, Projection(A, Q, matrix)

    pres2, subst = minimal_presentation(Q)
    B = build_algebra(pres2)
    if B.dim != Q.dim:
        raise InternalInvariantViolation("minimal re-presentation changed the dimension")
    cols = [normal_form(B, Poly.monomial(A.gens, m).substitute(subst, pres2.gens)).vector()
            for m in A.basis]
    matrix = tuple(tuple(cols[i][t] for i in range(A.dim)) for t in range(B.dim))
    return B, Projection(A, B, matrix)


def minimal_presentation(A: LocalAlgebra):
    """Presentation on generators whose classes form a basis of m/m^2.

    Returns ``(presentation, substitution)`` where ``substitution[i]`` expresses
    the old generator ``i`` as a polynomial in the kept generators.  When the
    current presentation is already minimal it is returned unchanged.
    """
    gens = A.gens
    images = A.generator_images()
    ech = linalg.Echelon()
    for r in m_power(A, 2).rows:
        ech.add(linalg.dense_to_sparse(r))
    kept = [i for i, img in enumerate(images) if ech.add(dict(img))]
    if len(kept) == len(gens):
        return A.presentation, [Poly.var(gens, i) for i in range(len(gens))]

    new_gens = tuple(gens[i] for i in kept)
    k = len(kept)
    d = A.nilpotency_degree
    monos = [m for m in monomials_below(k, d + 1) if sum(m)]
    kept_images = [images[i] for i in kept]
    values = []
    for mono in monos:
        v = {0: Fraction(1)}
        for g, e in zip(kept_images, mono):
            for _ in range(e):
                v = _sparse_mul(A, v, g)
        values.append(linalg.sparse_to_dense(v, A.dim))

    subst = []
    for i in range(len(gens)):
        if i in kept:
            subst.append(Poly.var(new_gens, kept.index(i)))
            continue
        target = linalg.sparse_to_dense(images[i], A.dim)
        coeffs = linalg.solve(values, target)
        if coeffs is None:
            raise InternalInvariantViolation("kept generators do not generate the algebra")
        subst.append(Poly(new_gens, {m: c for m, c in zip(monos, coeffs) if c}))

    relations = []
    for r in A.presentation.relations:
        s = r.substitute(subst, new_gens)
        if s and s not in relations:
            relations.append(s)
    return Presentation(new_gens, tuple(relations), A.presentation.cap), subst
