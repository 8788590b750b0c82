"""H-pairs: a local algebra A with a generating hyperplane U of its maximal ideal.

Projective coordinates follow the basis ``(1, u_1, ..., u_{N-2}, e)``: ``z0`` is
the unit, ``z1..z_{N-2}`` follow the given U basis and ``z_{N-1}`` is the
complement ``e``.  The projection m -> m/U is scaled so that e maps to 1,
which makes ``z0^(D-1)*z_{N-1}`` appear with coefficient 1 in every equation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .artin import (
    Element,
    LocalAlgebra,
    Projection,
    Subspace,
    annihilator,
    embedding_dimension,
    exp_nilpotent,
    generates_algebra,
    hilbert_function,
    is_ideal,
    largest_ideal_in,
    log_unipotent,
    multiplication_matrix,
    normal_form,
    quotient_by_ideal,
    socle,
)
from .errors import (
    ComplementInU,
    DoesNotGenerate,
    IdealNotInsideU,
    InternalInvariantViolation,
    NotAnIdeal,
    NotInMaximalIdeal,
    WrongCodimension,
)
from .exactpoly import Poly, grlex_key, linear_form, variables


@dataclass(eq=False)
class HPair:
    algebra: LocalAlgebra
    U: Subspace
    u_basis: tuple
    complement: Element
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def coordinate_basis(self) -> list:
        """Vectors (in the monomial basis) of 1, u_1, ..., u_{N-2}, e."""
        return ([self.algebra.one().vector()] + [u.vector() for u in self.u_basis]
                + [self.complement.vector()])

    def change_of_basis(self):
        """``(P, P_inv)``: P has the coordinate basis vectors as columns."""
        if "P" not in self._cache:
            cols = self.coordinate_basis()
            N = self.dim
            P = [[cols[j][i] for j in range(N)] for i in range(N)]
            self._cache["P"] = (P, linalg.inverse(P))
        return self._cache["P"]

    def coordinates(self, x) -> tuple:
        """Projective coordinates (z0, ..., z_{N-1}) of an algebra element."""
        _, Pinv = self.change_of_basis()
        v = x.vector() if isinstance(x, Element) else tuple(x)
        return tuple(sum((row[i] * v[i] for i in range(len(v)) if v[i]), Fraction(0))
                     for row in Pinv)

    def __repr__(self):
        A = self.algebra
        us = ", ".join(A.format(u) for u in self.u_basis)
        return f"HPair({A.presentation}, U=<{us}>, e={A.format(self.complement)})"


def _as_element(A: LocalAlgebra, x) -> Element:
    if isinstance(x, Element):
        return x
    if isinstance(x, (Poly, str)):
        return A(x)
    return A.element(tuple(Fraction(c) for c in x))


def _default_complement(A: LocalAlgebra, U: Subspace) -> Element:
    base = U + Subspace.span(A.dim, [A.one()])
    candidates = [i for i in range(1, A.dim)
                  if not base.contains(A.basis_element(i))]
    if not candidates:
        raise WrongCodimension("U already spans the maximal ideal")
    best = max(candidates, key=lambda i: grlex_key(A.basis[i]))
    return A.basis_element(best)


def make_hpair(A: LocalAlgebra, U, complement=None) -> HPair:
    """Validate ``(A, U)`` and fix coordinates.

    ``U`` is a :class:`Subspace` (its echelon rows become the U basis) or a
    sequence of elements, polynomials or coordinate vectors taken in the
    given order.
    """
    N = A.dim
    if isinstance(U, Subspace):
        basis = [A.element(r) for r in U.rows]
        space = U
    else:
        basis = [_as_element(A, u) for u in U]
        space = Subspace.span(N, basis)
        if space.dim != len(basis):
            raise WrongCodimension("the given U vectors are linearly dependent")
    if space.dim != N - 2:
        raise WrongCodimension(f"U has dimension {space.dim}, expected {N - 2}")
    if any(r[0] for r in space.rows):
        raise NotInMaximalIdeal("U is not contained in the maximal ideal")
    if not generates_algebra(A, space):
        raise DoesNotGenerate("U does not generate the algebra")
    if complement is None:
        e = _default_complement(A, space)
    else:
        e = _as_element(A, complement)
        if e.coords[0]:
            raise NotInMaximalIdeal("complement is not in the maximal ideal")
        if space.contains(e):
            raise ComplementInU("complement lies in U")
    return HPair(A, space, tuple(basis), e)


# ---------------------------------------------------------------- synthesis

def _pi_row(H: HPair) -> list:
    _, Pinv = H.change_of_basis()
    return Pinv[-1]


def hypersurface_equation(H: HPair) -> Poly:
    """Homogeneous equation z0^D * pi(ln(1 + z/z0)) of the hypersurface."""
    if "equation" in H._cache:
        return H._cache["equation"]
    A = H.algebra
    N = A.dim
    zs = variables("z", N)
    P, _ = H.change_of_basis()
    # w = z1*u1 + ... + z_{N-1}*e with polynomial coordinates
    w = A.element(tuple(linear_form(zs, [0] + P[k][1:]) for k in range(N)))
    L = log_unipotent(A, w + 1)
    pi = _pi_row(H)
    f = Poly.zero(zs)
    for k, c in enumerate(pi):
        if c and L.coords[k]:
            f = f + L.coords[k] * c
    degree = f.degree()
    f = f.homogenize(0, degree)

    J = largest_ideal_in(A, H.U)
    expected = A.nilpotency_degree if J.is_zero() else quotient_by_ideal(A, J)[0].nilpotency_degree
    if degree != expected:
        raise InternalInvariantViolation(
            f"equation degree {degree} differs from the nilpotency degree {expected} of A/J")
    anchor = [0] * N
    anchor[0] = degree - 1
    anchor[N - 1] += 1
    if f.coefficient(tuple(anchor)) != 1:
        raise InternalInvariantViolation("missing monic z0^(D-1)*z_{N-1} term")
    H._cache["equation"] = f
    return f


class ActionMatrix:
    """Unipotent matrix with polynomial entries in t1..t_{N-2}.

    Row ``i`` gives the new coordinate ``z_i`` as a linear form in the old ones.
    """

    def __init__(self, rows, params: tuple):
        self.rows = tuple(tuple(r) for r in rows)
        self.params = params
        self.size = len(self.rows)

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def at(self, values: Sequence) -> list:
        return [[e.evaluate(values) for e in row] for row in self.rows]

    def row_form(self, i: int, zvars: Sequence[str] | None = None) -> Poly:
        """Row ``i`` as a polynomial in the parameters and the z variables."""
        if zvars is None:
            zvars = variables("z", self.size)
        ring = tuple(self.params) + tuple(zvars)
        total = Poly.zero(ring)
        for j, e in enumerate(self.rows[i]):
            if e:
                total = total + e.embed(ring) * Poly.var(ring, len(self.params) + j)
        return total

    def format_row(self, i: int) -> str:
        """Human form grouped by coordinate, highest index first: ``z4 + t1*z1 + (t4 + 1/2*t1^2)*z0``."""
        parts = []
        for j in range(self.size - 1, -1, -1):
            e = self.rows[i][j]
            if not e:
                continue
            z = f"z{j}"
            if e == 1:
                parts.append(("+", z))
            elif len(e) == 1:
                (m, c), = e.terms.items()
                neg = c < 0
                mono = str(-e if neg else e)
                parts.append(("-" if neg else "+", f"{mono}*{z}"))
            else:
                parts.append(("+", f"({e})*{z}"))
        if not parts:
            return "0"
        out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __mul__(self, other: "ActionMatrix") -> list:
        return linalg.matmul(self.rows, other.rows)


def action_matrix(H: HPair) -> ActionMatrix:
    """Matrix of multiplication by exp(t1*u1 + ... + t_{N-2}*u_{N-2}) in z coordinates."""
    if "action" in H._cache:
        return H._cache["action"]
    A = H.algebra
    N = A.dim
    ts = variables("t", N - 2, start=1)
    gen = A.zero()
    for j, u in enumerate(H.u_basis):
        gen = gen + u * Poly.var(ts, j)
    g = exp_nilpotent(A, gen)
    M = multiplication_matrix(A, g)
    P, Pinv = H.change_of_basis()
    R = linalg.matmul(linalg.matmul(Pinv, M), P)
    rows = [[e if isinstance(e, Poly) else Poly.const(ts, e) for e in row] for row in R]
    result = ActionMatrix(rows, ts)
    H._cache["action"] = result
    return result


def fixed_locus(H: HPair) -> Subspace:
    """Subspace of A whose projectivization is the fixed-point set of the action."""
    return annihilator(H.algebra, H.U)


def fixed_locus_coordinates(H: HPair) -> Subspace:
    """The fixed locus expressed in z coordinates."""
    F = fixed_locus(H)
    return Subspace.span(H.dim, (H.coordinates(r) for r in F.rows))


# ---------------------------------------------------------------- degeneracy

def is_nondegenerate(H: HPair) -> bool:
    return largest_ideal_in(H.algebra, H.U).is_zero()


@dataclass(frozen=True)
class UniquenessReport:
    nondegenerate: bool
    unique_action: bool
    ideal_dim: int
    message: str


def uniqueness_report(H: HPair) -> UniquenessReport:
    A = H.algebra
    J = largest_ideal_in(A, H.U)
    if J.is_zero():
        soc = socle(A)
        if soc.dim != 1:
            raise InternalInvariantViolation("non-degenerate pair over a non-Gorenstein algebra")
        if (H.U + soc).dim != A.dim - 1:
            raise InternalInvariantViolation("U is not complementary to the socle")
        return UniquenessReport(True, True, 0, "action is unique")
    return UniquenessReport(False, False, J.dim,
                            "at least two non-equivalent actions exist")


@dataclass(eq=False)
class Reduction:
    pair: HPair
    ideal: Subspace
    projection: Projection
    kept: tuple  # surviving coordinate indices of the original pair


def reduction(H: HPair, J: Subspace | None = None) -> Reduction:
    """Pass to ``(A/J, U/J)``; by default J is the largest ideal inside U."""
    A = H.algebra
    if J is None:
        J = largest_ideal_in(A, H.U)
    else:
        if not H.U.contains_subspace(J):
            raise IdealNotInsideU("J is not contained in U")
        if not is_ideal(A, J):
            raise NotAnIdeal("J is not an ideal")
    if J.is_zero():
        proj = Projection(A, A, tuple(A.basis_element(i).vector() for i in range(A.dim)))
        return Reduction(H, J, proj, tuple(range(A.dim)))
    Q, proj = quotient_by_ideal(A, J)
    images = []
    kept = [0]
    span = Subspace.zero(Q.dim)
    for i, u in enumerate(H.u_basis):
        img = proj(u)
        bigger = span + Subspace.span(Q.dim, [img])
        if bigger.dim > span.dim:
            images.append(img)
            kept.append(i + 1)
            span = bigger
    e = proj(H.complement)
    if span.contains(e):
        raise InternalInvariantViolation("complement fell into the image of U")
    kept.append(A.dim - 1)
    return Reduction(make_hpair(Q, images, e), J, proj, tuple(kept))


def reduce_hpair(H: HPair, J: Subspace | None = None) -> HPair:
    return reduction(H, J).pair


# ---------------------------------------------------------------- invariants

@dataclass(frozen=True)
class InvariantVector:
    dim: int
    hilbert: tuple
    socle_dim: int
    embedding_dim: int
    nilpotency_degree: int
    gorenstein: bool


def invariant_vector(x) -> InvariantVector:
    A = x.algebra if isinstance(x, HPair) else x
    soc = socle(A).dim
    return InvariantVector(
        dim=A.dim,
        hilbert=tuple(hilbert_function(A)),
        socle_dim=soc,
        embedding_dim=embedding_dimension(A),
        nilpotency_degree=A.nilpotency_degree,
        gorenstein=soc == 1,
    )


@dataclass(frozen=True)
class Certificate:
    verdict: str  # "non-equivalent" or "inconclusive"
    reason: str


def compare_invariants(a, b) -> Certificate:
    """Necessary-condition comparison: differing invariants certify non-equivalence."""
    va, vb = invariant_vector(a), invariant_vector(b)
    if va == vb:
        return Certificate("inconclusive", "identical invariant vectors")
    diffs = [f"{name} {getattr(va, name)} vs {getattr(vb, name)}"
             for name in va.__dataclass_fields__ if getattr(va, name) != getattr(vb, name)]
    return Certificate("non-equivalent", "; ".join(diffs))


def proxy_equal(H1: HPair, H2: HPair) -> bool:
    """Same invariant vector and the same synthesized equation."""
    return (invariant_vector(H1) == invariant_vector(H2)
            and hypersurface_equation(H1) == hypersurface_equation(H2))
