"""Exact Gaussian elimination over the rationals, sparse rows.

A row is a dict ``column -> Fraction`` with no zero entries.  Columns can be
any hashable; the caller fixes their elimination order through ``rank``
(smaller rank = earlier column = preferred pivot).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Every stored row has a pivot entry equal to 1 and no entry in any other
    row's pivot column.
    """

    def __init__(self, rank: Callable[[Hashable], object] | None = None):
        self.rank = rank if rank is not None else (lambda c: c)
        self.rows: dict = {}  # pivot column -> row

    def __len__(self):
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        """Remainder of ``row`` after eliminating every pivot column."""
        out = dict(row)
        for col in [c for c in row if c in self.rows]:
            a = out.pop(col, 0)
            if not a:
                continue
            for c, v in self.rows[col].items():
                if c == col:
                    continue
                s = out.get(c, 0) - a * v
                if s:
                    out[c] = s
                else:
                    out.pop(c, None)
        return out

    def add(self, row: dict) -> bool:
        """Insert ``row``; return True if it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        pivot = min(r, key=self.rank)
        inv = 1 / Fraction(r[pivot])
        r = {c: v * inv for c, v in r.items()}
        for p, other in self.rows.items():
            a = other.get(pivot)
            if a:
                for c, v in r.items():
                    s = other.get(c, 0) - a * v
                    if s:
                        other[c] = s
                    else:
                        other.pop(c, None)
        self.rows[pivot] = r
        return True

    def extend(self, rows: Iterable[dict]):
        for r in rows:
            self.add(r)
        return self

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def pivots(self) -> list:
        return sorted(self.rows, key=self.rank)


def dense_to_sparse(vec: Sequence) -> dict:
    return {i: Fraction(v) for i, v in enumerate(vec) if v}


def sparse_to_dense(row: dict, n: int) -> tuple:
    return tuple(Fraction(row.get(i, 0)) for i in range(n))


def rref(vectors: Iterable[Sequence], n: int) -> tuple:
    """Canonical reduced row echelon basis (dense rows, pivots increasing)."""
    ech = Echelon()
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"vector of length {len(v)}, expected {n}")
        ech.add(dense_to_sparse(v))
    return tuple(sparse_to_dense(ech.rows[p], n) for p in ech.pivots())


def rank(vectors: Iterable[Sequence]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(dense_to_sparse(v))
    return len(ech)


def nullspace(rows: Iterable[Sequence], n: int) -> list:
    """Basis of {x : r . x = 0 for every row r}, as dense tuples."""
    ech = Echelon()
    for r in rows:
        ech.add(dense_to_sparse(r))
    pivots = set(ech.rows)
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        x = [Fraction(0)] * n
        x[free] = Fraction(1)
        for p, row in ech.rows.items():
            x[p] = -row.get(free, Fraction(0))
        basis.append(tuple(x))
    return basis


def solve(columns: Sequence[Sequence], target: Sequence) -> tuple | None:
    """Some x with sum_j x_j * columns[j] == target, or None."""
    n = len(target)
    m = len(columns)
    # eliminate on the augmented system; unknown j lives in column j, rhs in column m
    ech = Echelon()
    for i in range(n):
        row = {j: Fraction(columns[j][i]) for j in range(m) if columns[j][i]}
        if target[i]:
            row[m] = Fraction(target[i])
        ech.add(row)
    if m in ech.rows:
        return None
    x = [Fraction(0)] * m
    for p, row in ech.rows.items():
        x[p] = row.get(m, Fraction(0))
    return tuple(x)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    """Product of dense matrices whose entries may be Fractions or polynomials."""
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = 0
            for k in range(inner):
                x = row[k]
                if isinstance(x, (int, Fraction)) and not x:
                    continue
                y = b[k][j]
                if isinstance(y, (int, Fraction)) and not y:
                    continue
                acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def inverse(matrix: Sequence[Sequence]) -> list:
    n = len(matrix)
    ech = Echelon()
    for i in range(n):
        row = {j: Fraction(matrix[i][j]) for j in range(n) if matrix[i][j]}
        row[n + i] = Fraction(1)
        ech.add(row)
    if any(p >= n for p in ech.rows) or len(ech) != n:
        raise ValueError("matrix is singular")
    return [[ech.rows[i].get(n + j, Fraction(0)) for j in range(n)] for i in range(n)]
