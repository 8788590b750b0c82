"""Exact sparse multivariate polynomials over the rationals.

Scalars are :class:`fractions.Fraction`.  A monomial is a tuple of
non-negative exponents, one per variable of the ambient variable list.
A :class:`Poly` is a map from monomials to nonzero scalars together with
its ambient variable names.

Text form::

    expr   := term (('+'|'-') term)*
    term   := ['-'] factor ('*' factor)*
    factor := rational | ident ['^' nat] | '(' expr ')' ['^' nat]
    rational := int ['/' nat]

Printing lists terms in descending graded-lex order, e.g.
``z0^2*z5 - z0*z1*z3 - 1/2*z0*z2^2 + 1/3*z1^3``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    IndexOutOfRange,
    NegativeExponent,
    PolySyntaxError,
    UnknownVariable,
    VariableMismatch,
)

Scalar = Fraction
Monomial = tuple


def as_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not an exact scalar: {c!r}")


def format_scalar(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def grlex_key(mono: Monomial):
    """Sort key: graded first, ties broken lexicographically (first variable biggest)."""
    return (sum(mono), mono)


def monomials_of_degree(nvars: int, deg: int):
    """All exponent tuples of total degree ``deg``, in descending lex order."""
    if nvars == 0:
        if deg == 0:
            yield ()
        return
    if nvars == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in monomials_of_degree(nvars - 1, deg - first):
            yield (first,) + rest


def monomials_below(nvars: int, bound: int) -> list:
    """All monomials of total degree < ``bound``."""
    out = []
    for deg in range(bound):
        out.extend(monomials_of_degree(nvars, deg))
    return out


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, object] | None = None):
        self.vars = tuple(vars)
        clean = {}
        if terms:
            n = len(self.vars)
            for mono, c in terms.items():
                if len(mono) != n:
                    raise VariableMismatch(f"monomial {mono} has wrong length for {self.vars}")
                c = as_scalar(c)
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars: tuple, terms: dict) -> "Poly":
        # terms already clean; skips validation on hot paths
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # constructors
    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls._raw(tuple(vars), {})

    @classmethod
    def const(cls, vars: Sequence[str], c) -> "Poly":
        vars = tuple(vars)
        c = as_scalar(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, vars: Sequence[str], which) -> "Poly":
        vars = tuple(vars)
        i = vars.index(which) if isinstance(which, str) else which
        if not 0 <= i < len(vars):
            raise IndexOutOfRange(f"variable index {i} out of range")
        e = [0] * len(vars)
        e[i] = 1
        return cls._raw(vars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, vars: Sequence[str], exps: Monomial, c=1) -> "Poly":
        return cls(vars, {tuple(exps): c})

    @classmethod
    def gens(cls, vars: Sequence[str]) -> list:
        return [cls.var(vars, i) for i in range(len(vars))]

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term; -1 for the zero polynomial."""
        return min((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * len(self.vars))

    def used_variables(self) -> tuple:
        """Indices of variables that occur in some term."""
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(sorted(used))

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def homogeneous_part(self, deg: int) -> "Poly":
        return Poly._raw(self.vars, {m: c for m, c in self.terms.items() if sum(m) == deg})

    def sorted_terms(self) -> list:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda mc: grlex_key(mc[0]), reverse=True)

    # arithmetic
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise VariableMismatch(f"{self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Poly":
        c = as_scalar(c)
        if not c:
            return Poly.zero(self.vars)
        return Poly._raw(self.vars, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(self.vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / as_scalar(other))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            raise NegativeExponent(f"negative power {e}")
        result = Poly.const(self.vars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            other = as_scalar(other)
            if not other:
                return not self.terms
            return self.terms == {(0,) * len(self.vars): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # calculus and structure
    def derivative(self, i: int) -> "Poly":
        if not 0 <= i < len(self.vars):
            raise IndexOutOfRange(f"variable index {i} out of range for {self.vars}")
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                out[tuple(mm)] = c * e
        return Poly._raw(self.vars, out)

    def truncate(self, bound: int) -> "Poly":
        """Drop every term of total degree >= ``bound``."""
        return Poly._raw(self.vars, {m: c for m, c in self.terms.items() if sum(m) < bound})

    def substitute(self, assignment: Sequence["Poly"], vars: Sequence[str] | None = None) -> "Poly":
        """Replace variable ``i`` by ``assignment[i]``; result lives over the assignment's ring."""
        if len(assignment) != len(self.vars):
            raise VariableMismatch(
                f"need {len(self.vars)} substitutions, got {len(assignment)}")
        if vars is None:
            if not assignment:
                raise VariableMismatch("cannot infer target variables from an empty assignment")
            vars = assignment[0].vars
        vars = tuple(vars)
        for a in assignment:
            if a.vars != vars:
                raise VariableMismatch(f"assignment over {a.vars}, expected {vars}")
        powers = [dict() for _ in assignment]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = assignment[i] ** e
            return cache[e]

        total = Poly.zero(vars)
        for m, c in self.terms.items():
            term = Poly.const(vars, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
                    if not term.terms:
                        break
            total = total + term
        return total

    def embed(self, vars: Sequence[str], positions: Sequence[int] | None = None) -> "Poly":
        """Re-express over a larger variable list.

        ``positions[i]`` is the index in ``vars`` of this polynomial's variable ``i``;
        by default variables are matched by name.
        """
        vars = tuple(vars)
        if positions is None:
            try:
                positions = [vars.index(v) for v in self.vars]
            except ValueError as exc:
                raise VariableMismatch(f"{self.vars} not contained in {vars}") from exc
        n = len(vars)
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                if k:
                    e[positions[i]] += k
            out[tuple(e)] = c
        return Poly(vars, out)

    def restrict(self, keep: Sequence[int], vars: Sequence[str] | None = None) -> "Poly":
        """Inverse of :meth:`embed`: keep only the variables at indices ``keep``.

        Raises VariableMismatch if a dropped variable occurs.
        """
        keep = tuple(keep)
        dropped = set(range(len(self.vars))) - set(keep)
        if vars is None:
            vars = tuple(self.vars[i] for i in keep)
        out = {}
        for m, c in self.terms.items():
            if any(m[i] for i in dropped):
                raise VariableMismatch("polynomial uses a dropped variable")
            out[tuple(m[i] for i in keep)] = c
        return Poly(vars, out)

    def homogenize(self, index: int = 0, degree: int | None = None) -> "Poly":
        """Multiply each term of degree i by variable ``index`` to the power ``degree - i``.

        The homogenizing variable must not occur in the polynomial.
        """
        if any(m[index] for m in self.terms):
            raise VariableMismatch("homogenizing variable already occurs")
        if degree is None:
            degree = self.degree()
        out = {}
        for m, c in self.terms.items():
            mm = list(m)
            mm[index] = degree - sum(m)
            if mm[index] < 0:
                raise ValueError("homogenizing degree below polynomial degree")
            out[tuple(mm)] = c
        return Poly._raw(self.vars, out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return total

    # printing
    def _mono_str(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.vars, m):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            mono = self._mono_str(m)
            if not mono:
                body = format_scalar(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_scalar(a)}*{mono}"
            if k == 0:
                chunks.append(("-" if neg else "") + body)
            else:
                chunks.append((" - " if neg else " + ") + body)
        return "".join(chunks)

    def __repr__(self):
        return f"Poly({str(self)!r}, vars={self.vars})"


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num), m.start(1)))
        elif ident is not None:
            tokens.append(("id", ident, m.start(2)))
        else:
            if op not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {op!r} at {m.start(3)}")
            tokens.append((op, op, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: tuple):
        self.text = text
        self.vars = vars
        self.index = {v: i for i, v in enumerate(vars)}
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}")
        self.pos += 1
        return tok

    def fail(self, msg):
        tok = self.tokens[self.pos]
        where = tok[2]
        raise PolySyntaxError(f"{msg} at position {where} in {self.text!r}")

    def parse(self) -> Poly:
        if self.peek() == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek() != "end":
            self.fail("trailing input")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        p = self.factor()
        while self.peek() == "*":
            self.take()
            p = p * self.factor()
        return -p if neg else p

    def exponent(self) -> int:
        if self.peek() == "-":
            raise NegativeExponent(f"negative exponent in {self.text!r}")
        return self.take("num")[1]

    def factor(self) -> Poly:
        kind = self.peek()
        if kind == "num":
            num = self.take()[1]
            if self.peek() == "/":
                self.take()
                if self.peek() != "num":
                    self.fail("expected denominator")
                den = self.take()[1]
                if den == 0:
                    self.fail("zero denominator")
                return Poly.const(self.vars, Fraction(num, den))
            return Poly.const(self.vars, num)
        if kind == "id":
            name = self.take()[1]
            if name not in self.index:
                raise UnknownVariable(f"unknown variable {name!r}; expected one of {self.vars}")
            p = Poly.var(self.vars, self.index[name])
            if self.peek() == "^":
                self.take()
                p = p ** self.exponent()
            return p
        if kind == "(":
            self.take()
            p = self.expr()
            self.take(")")
            if self.peek() == "^":
                self.take()
                p = p ** self.exponent()
            return p
        self.fail("expected a number, variable or '('")


def parse_poly(text: str, vars: Sequence[str]) -> Poly:
    """Parse ``text`` as a polynomial over the ordered variable names ``vars``."""
    return _Parser(text, tuple(vars)).parse()


# ------------------------------------------------- functional spellings

def arith(op: str, a: Poly, b) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        if isinstance(b, Poly) and b.vars != a.vars:
            raise VariableMismatch(f"{a.vars} vs {b.vars}")
        return a * b
    if op == "scale":
        return a.scale(b)
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(f: Poly, index: int) -> Poly:
    return f.derivative(index)


def substitute(f: Poly, assignment: Sequence[Poly]) -> Poly:
    return f.substitute(assignment)


def truncate_at_degree(f: Poly, bound: int) -> Poly:
    return f.truncate(bound)


def variables(prefix: str, count: int, start: int = 0) -> tuple:
    """Names like ``z0, z1, ...``."""
    return tuple(f"{prefix}{i}" for i in range(start, start + count))


def linear_form(vars: Sequence[str], coeffs: Iterable) -> Poly:
    vars = tuple(vars)
    terms = {}
    n = len(vars)
    for i, c in enumerate(coeffs):
        if c:
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
    return Poly(vars, terms)
