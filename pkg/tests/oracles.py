"""Independent reference computations used only by the tests.

Nothing here calls the package's echelon or truncation code: products are
taken element by element, linear algebra goes through sympy matrices, and
ideal questions through sympy Groebner bases.
"""
from fractions import Fraction
from itertools import combinations_with_replacement

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from addact.artin import mul_elements
from addact.exactpoly import Poly, monomials_below


def to_sympy(f: Poly, syms):
    expr = sympy.Integer(0)
    for m, c in f.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, e in zip(syms, m):
            term *= s ** e
        expr += term
    return expr


def from_sympy(expr, vars):
    syms = sympy.symbols(vars)
    p = sympy.Poly(sympy.expand(expr), *syms)
    return Poly(vars, {m: Fraction(int(c.p), int(c.q)) for m, c in p.terms()})


def _dm(vectors, n):
    rows = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in v] for v in vectors]
    return DomainMatrix(rows, (len(rows), n), QQ)


def span_dim(vectors, n):
    vectors = list(vectors)
    if not vectors:
        return 0
    return _dm(vectors, n).rank()


def _rat(x):
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def matrix(rows):
    return sympy.Matrix([[_rat(x) for x in r] for r in rows])


def same_span(rows_a, rows_b, n):
    a, b = list(rows_a), list(rows_b)
    ra, rb = span_dim(a, n), span_dim(b, n)
    return ra == rb == span_dim(a + b, n)


# ---------------------------------------------------------------- algebra

def power_products(A, j):
    """Vectors of all j-fold products of basis elements of m."""
    if j == 0:
        return [A.basis_element(i).vector() for i in range(A.dim)]
    m_basis = [A.basis_element(i) for i in range(1, A.dim)]
    out = []
    for combo in combinations_with_replacement(m_basis, j):
        p = combo[0]
        for q in combo[1:]:
            p = mul_elements(A, p, q)
        out.append(p.vector())
    return out


def m_power_dim(A, j):
    return span_dim(power_products(A, j), A.dim)


def hilbert(A):
    dims = []
    j = 0
    while True:
        dims.append(m_power_dim(A, j))
        if dims[-1] == 0:
            break
        j += 1
    return [dims[i] - dims[i + 1] for i in range(len(dims) - 1)]


def largest_ideal(A, U_rows):
    """Fixed point J <- {a in J : a*b in J for every basis b}, starting from J = U."""
    N = A.dim
    J = [list(r) for r in U_rows]
    while J:
        basis_J = matrix(J).T  # N x r, columns span J
        funcs = matrix(J).nullspace()  # functionals vanishing on J
        rows = []
        for k in range(N):
            b = A.basis_element(k)
            M = matrix([mul_elements(A, A.element(tuple(r)), b).vector() for r in J]).T
            rows.extend(phi.T * M for phi in funcs)
        if not rows:
            return J
        ker = sympy.Matrix.vstack(*rows).nullspace()
        if len(ker) == len(J):
            return J
        J = [[Fraction(int(x.p), int(x.q)) for x in basis_J * c] for c in ker]
    return []


# ---------------------------------------------------------------- ideals

def groebner(relations, vars):
    syms = sympy.symbols(vars)
    G = sympy.groebner([to_sympy(r, syms) for r in relations], *syms, order="grevlex", domain=QQ)
    return G, syms


class GroebnerOracle:
    def __init__(self, relations, vars):
        self.G, self.syms = groebner(relations, vars)

    def __contains__(self, f: Poly) -> bool:
        return self.G.contains(to_sympy(f, self.syms))


def in_radical(f: Poly, relations, vars) -> bool:
    """f lies in the radical iff 1 is in (relations, 1 - y*f) for a fresh y."""
    syms = sympy.symbols(vars)
    y = sympy.Symbol("rabinowitsch_y")
    gens = [to_sympy(r, syms) for r in relations] + [1 - y * to_sympy(f, syms)]
    G = sympy.groebner(gens, *syms, y, order="grevlex", domain=QQ)
    return G.exprs == [1]


def in_ideal(f: Poly, relations, vars):
    return f in GroebnerOracle(relations, vars)


def quotient_dim(relations, vars, bound=40):
    """Number of standard monomials; assumes the ideal contains a power of m."""
    G, syms = groebner(relations, vars)
    leads = [sympy.Poly(g, *syms).monoms(order="grevlex")[0] for g in G.exprs]
    count = 0
    for mono in monomials_below(len(vars), bound):
        if not any(all(a >= b for a, b in zip(mono, lm)) for lm in leads):
            count += 1
    return count


class SpanOracle:
    """span{mu*f_i} + span{monomials of degree >= stab}, all up to a generous degree.

    The row space is reduced once by sympy; each query is one rank comparison.
    """

    def __init__(self, relations, stab: int, max_degree: int = 0):
        n = len(relations[0].vars)
        B = max([max_degree, stab] + [stab + r.degree() for r in relations])
        monos = monomials_below(n, B + 1)
        self.index = {m: i for i, m in enumerate(monos)}
        self.width = len(monos)
        rows = []
        for r in relations:
            for mu in monomials_below(n, B + 1 - r.order()):
                shifted = {tuple(a + b for a, b in zip(m, mu)): c for m, c in r.terms.items()}
                if all(m in self.index for m in shifted):
                    row = [0] * self.width
                    for m, c in shifted.items():
                        row[self.index[m]] = c
                    rows.append(row)
        for m in monos:
            if sum(m) >= stab:
                row = [0] * self.width
                row[self.index[m]] = 1
                rows.append(row)
        rref, pivots = _dm(rows, self.width).rref()
        rows = rref.to_Matrix().tolist()
        self.basis = [(p, [Fraction(int(x.p), int(x.q)) for x in rows[i]])
                      for i, p in enumerate(pivots)]

    def __contains__(self, f: Poly) -> bool:
        target = [Fraction(0)] * self.width
        for m, c in f.terms.items():
            target[self.index[m]] = Fraction(c)
        # rows are in reduced echelon form, so one sweep over the pivots suffices
        for p, row in self.basis:
            c = target[p]
            if c:
                target = [a - c * b for a, b in zip(target, row)]
        return not any(target)


def span_member(f: Poly, relations, stab: int) -> bool:
    return f in SpanOracle(relations, stab, f.degree())


# ---------------------------------------------------------------- equation

def equation_via_series(vars, relations, u_polys, e_poly):
    """Homogenized pi(ln(1 + w/z0)) with w = z1*u1 + ... + z_{N-1}*e, via sympy.

    Structure constants come from Groebner normal forms over the standard
    monomials; coordinates carry symbolic z's.
    """
    G, syms = groebner(relations, vars)
    leads = [sympy.Poly(g, *syms).monoms(order="grevlex")[0] for g in G.exprs]
    std = [m for m in monomials_below(len(vars), 40)
           if not any(all(a >= b for a, b in zip(m, lm)) for lm in leads)]
    index = {m: i for i, m in enumerate(std)}
    n = len(std)

    def nf(expr):
        r = G.reduce(sympy.expand(expr))[1]
        out = [sympy.Integer(0)] * n
        if r != 0:
            for m, c in sympy.Poly(r, *syms).terms():
                out[index[m]] = c
        return out

    mono = [sympy.Mul(*[s ** e for s, e in zip(syms, m)]) for m in std]
    table = [[nf(mono[i] * mono[j]) for j in range(n)] for i in range(n)]

    def mul(a, b):
        out = [sympy.Integer(0)] * n
        for i in range(n):
            if a[i] == 0:
                continue
            for j in range(n):
                if b[j] == 0:
                    continue
                c = a[i] * b[j]
                for k in range(n):
                    if table[i][j][k]:
                        out[k] += c * table[i][j][k]
        return [sympy.expand(x) for x in out]

    coords = [nf(1)] + [nf(to_sympy(u, syms)) for u in u_polys] + [nf(to_sympy(e_poly, syms))]
    N = len(coords)
    assert N == n
    zs = sympy.symbols(f"z0:{N}")
    w = [sum(zs[i] * coords[i][k] for i in range(1, N)) for k in range(n)]

    series = [sympy.Integer(0)] * n
    power = coords[0]
    k = 1
    while True:
        power = mul(power, w)
        if all(x == 0 for x in power):
            break
        series = [s + sympy.Rational((-1) ** (k + 1), k) * p / zs[0] ** k
                  for s, p in zip(series, power)]
        k += 1
    D = k - 1
    P = sympy.Matrix(coords).T  # column i holds coordinate basis vector i
    z = P.inv() * sympy.Matrix(series)
    return sympy.expand(sympy.cancel(z[N - 1] * zs[0] ** D)), zs
