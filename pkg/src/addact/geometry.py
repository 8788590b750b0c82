"""Checks on the synthesized hypersurfaces: degeneracy, singular loci, invariance, cones."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DimensionMismatch, IndexOutOfRange, ZeroPolynomial
from .exactpoly import Poly, variables
from .hpair import ActionMatrix


def essential_variables(f: Poly) -> int:
    """Least number of variables f can be written in after a linear change of coordinates.

    Equals the dimension of the span of the first partial derivatives.
    """
    if not f:
        raise ZeroPolynomial("the zero polynomial has no essential variables")
    ech = linalg.Echelon()
    for i in range(len(f.vars)):
        ech.add(dict(f.derivative(i).terms))
    return len(ech)


@dataclass(frozen=True)
class LinearSubspace:
    """Projective linear subspace given by a parametrization z = M s (M of full column rank)."""

    matrix: tuple  # nvars rows, r columns

    def __post_init__(self):
        m = tuple(tuple(Fraction(c) for c in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        widths = {len(row) for row in m}
        if len(widths) > 1:
            raise DimensionMismatch("ragged parametrization matrix")
        r = widths.pop() if widths else 0
        cols = [[row[j] for row in m] for j in range(r)]
        if linalg.rank(cols) != r:
            raise ValueError("parametrization matrix does not have full column rank")

    @property
    def nvars(self) -> int:
        return len(self.matrix)

    @property
    def rank(self) -> int:
        return len(self.matrix[0]) if self.matrix else 0

    @classmethod
    def coordinate(cls, nvars: int, zeros: Sequence[int]) -> "LinearSubspace":
        """The subspace {z_i = 0 for i in zeros}."""
        zeros = set(zeros)
        if any(not 0 <= i < nvars for i in zeros):
            raise IndexOutOfRange(f"coordinate index outside 0..{nvars - 1}")
        free = [i for i in range(nvars) if i not in zeros]
        return cls(tuple(tuple(int(i == j) for j in free) for i in range(nvars)))

    @classmethod
    def point(cls, coords: Sequence) -> "LinearSubspace":
        return cls(tuple((c,) for c in coords))

    def forms(self, params: Sequence[str]) -> list:
        """Each coordinate z_i as a linear form in the parameters."""
        return [Poly(params, {tuple(int(k == j) for k in range(self.rank)): c
                              for j, c in enumerate(row) if c})
                for row in self.matrix]

    def contains(self, point: Sequence) -> bool:
        cols = [[row[j] for row in self.matrix] for j in range(self.rank)]
        return linalg.solve(cols, list(point)) is not None


@dataclass(frozen=True)
class SingularityReport:
    all_vanish: bool
    nonvanishing: tuple  # indices of partials that do not vanish on L
    codimension: int     # codimension of L inside the hypersurface
    samples: int
    sample_failures: int  # sampled points off L with zero gradient
    sampling_note: str
    exhaustive: bool
    verdict: str


def _sample_points(f: Poly, L: LinearSubspace, count: int, seed: int):
    """Rational points of {f = 0} with z0 != 0, solved for the last coordinate.

    Requires f to be linear in the last variable; yields nothing otherwise.
    """
    N = len(f.vars)
    last = N - 1
    if f.degree_in(last) != 1:
        return
    lead = Poly(f.vars, {m[:last] + (0,): c for m, c in f.terms.items() if m[last] == 1})
    rest = Poly(f.vars, {m: c for m, c in f.terms.items() if m[last] == 0})
    rng = random.Random(seed)
    found = tries = 0
    while found < count and tries < 50 * count:
        tries += 1
        z = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(last)] + [Fraction(0)]
        if not z[0]:
            z[0] = Fraction(1)
        a = lead.evaluate(z)
        if not a:
            continue
        z[last] = -rest.evaluate(z) / a
        if L.nvars == N and L.rank and L.contains(z):
            continue
        found += 1
        yield tuple(z)


def verify_singular_subspace(f: Poly, L: LinearSubspace | None, *, exhaustive: bool = False,
                             samples: int = 100, seed: int = 0) -> SingularityReport:
    """Check that every partial of f vanishes on L and sample for other singular points.

    ``exhaustive`` asserts (from outside knowledge) that L is the whole singular
    locus; only then is a normality verdict drawn from the codimension.
    ``L=None`` states that the hypersurface is smooth.
    """
    N = len(f.vars)
    n = N - 1
    partials = [f.derivative(i) for i in range(N)]

    if L is None:
        r = 0
        nonvanishing = ()
    else:
        if L.nvars != N:
            raise DimensionMismatch(f"subspace in {L.nvars} coordinates, polynomial in {N}")
        r = L.rank
        params = variables("s", r, start=1)
        forms = L.forms(params)
        nonvanishing = tuple(i for i, p in enumerate(partials) if p and p.substitute(forms, params))
    all_vanish = not nonvanishing
    codim = n - r if r else n  # an empty locus counts as codimension dim X + 1 = n

    failures = taken = 0
    L_for_samples = L if L is not None else LinearSubspace(())
    for z in _sample_points(f, L_for_samples, samples, seed):
        taken += 1
        if all(not p.evaluate(z) for p in partials):
            failures += 1
    note = (f"{taken} points sampled with z0 != 0, seed {seed}" if taken
            else "not sampled: the equation is not linear in the last coordinate")

    if L is None:
        smooth = f.degree() == 2 and essential_variables(f) == N
        verdict = "normal-smooth" if smooth and not failures else "codimension of verified locus"
    elif not all_vanish:
        verdict = "not singular"
    elif exhaustive and not failures:
        verdict = "normal" if codim >= 2 else "not normal"
    else:
        verdict = "codimension of verified locus"
    return SingularityReport(all_vanish, nonvanishing, codim, taken, failures, note,
                             exhaustive, verdict)


def check_invariance(f: Poly, M: ActionMatrix) -> bool:
    """Whether f(M(t) z) == f(z) identically in t and z."""
    N = len(f.vars)
    if M.size != N:
        raise DimensionMismatch(f"matrix of size {M.size}, polynomial in {N} variables")
    ring = tuple(M.params) + tuple(f.vars)
    moved = f.substitute([M.row_form(i, f.vars) for i in range(N)], ring)
    return moved == f.embed(ring)


def check_cone(f_big: Poly, f_small: Poly, kept: Sequence[int]) -> bool:
    """Whether f_big only uses the coordinates ``kept`` and equals f_small on them."""
    kept = tuple(kept)
    nbig = len(f_big.vars)
    if len(kept) != len(f_small.vars):
        raise IndexOutOfRange(f"{len(kept)} indices for {len(f_small.vars)} variables")
    if any(not 0 <= i < nbig for i in kept):
        raise IndexOutOfRange(f"kept index outside 0..{nbig - 1}")
    if len(set(kept)) != len(kept):
        raise IndexOutOfRange("kept indices repeat")
    if not set(f_big.used_variables()) <= set(kept):
        return False
    return f_big == f_small.embed(f_big.vars, kept)
