"""Two non-equivalent H-pairs over a degenerate base.

Given a degenerate pair, reduce it to its non-degenerate core ``(A0, U0)``
and lift the core back up by one dimension in two ways:

* add a new variable ``w`` killed by every generator (embedding dimension +1);
* shrink the relation ideal: pick a relation ``f`` whose replacement by
  ``x_1*f, ..., x_k*f`` gives a strictly smaller ideal, and put ``f`` into U
  (embedding dimension unchanged).

Both lifts reduce back to the core, and their embedding dimensions differ,
so they are never equivalent.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .artin import (
    DEFAULT_CAP,
    LocalAlgebra,
    Presentation,
    _truncated_span,
    build_algebra,
    embedding_dimension,
    lift,
    m_power,
    minimal_presentation,
    normal_form,
    stabilization,
)
from .errors import (
    InternalInvariantViolation,
    InvalidOrder,
    NondegenerateInput,
    ShrinkPassLimit,
    ZeroIdeal,
)
from .exactpoly import Poly
from .hpair import (
    Certificate,
    HPair,
    compare_invariants,
    is_nondegenerate,
    make_hpair,
    reduction,
)


def _member_at(f: Poly, relations: Sequence[Poly], bound: int) -> bool:
    ech = _truncated_span(relations, len(f.vars), bound)
    row = dict(f.truncate(bound).terms)
    return ech.contains(row)


def stabilization_degree(relations: Sequence[Poly], cap: int = DEFAULT_CAP) -> int:
    if not relations:
        raise ZeroIdeal("no relations")
    return stabilization(relations, len(relations[0].vars), cap)[0]


def ideal_membership(f: Poly, relations: Sequence[Poly], *, degree: int | None = None,
                     cap: int = DEFAULT_CAP) -> bool:
    """Whether ``f`` lies in the (local) ideal generated by ``relations``.

    The test is a truncated span check at degree ``degree``; by default one
    more than the stabilization degree of the ideal, where it is exact.
    """
    if degree is None:
        degree = stabilization_degree(relations, cap) + 1
    return _member_at(f, relations, degree)


def same_ideal(a: Sequence[Poly], b: Sequence[Poly], cap: int = DEFAULT_CAP) -> bool:
    da = stabilization_degree(a, cap) + 1
    db = stabilization_degree(b, cap) + 1
    return (all(_member_at(f, b, db) for f in a)
            and all(_member_at(f, a, da) for f in b))


@dataclass(frozen=True)
class ShrinkResult:
    gens: tuple
    system: tuple          # f_1 .. f_l with the distinguished generator last
    distinguished: Poly
    shrunk: tuple          # f_1 .. f_{l-1}, x_1*f_l, .., x_k*f_l
    certificate_degree: int
    dropped: tuple         # redundant relations removed before shrinking
    order: tuple
    passes: int
    base_dim: int
    shrunk_dim: int


def _drop_redundant(system: list, bound: int) -> tuple:
    kept = list(system)
    dropped = []
    for i in range(len(kept) - 1, -1, -1):
        if len(kept) == 1:
            break
        others = kept[:i] + kept[i + 1:]
        if _member_at(kept[i], others, bound):
            dropped.append(kept[i])
            del kept[i]
    return kept, tuple(reversed(dropped))


def shrink_generators(relations: Sequence[Poly], gens: Sequence[str] | None = None, *,
                      order: Sequence[int] | None = None, max_passes: int = 64,
                      cap: int = DEFAULT_CAP) -> ShrinkResult:
    """Find a generator f with (others, x_1*f, ..., x_k*f) strictly smaller than the ideal.

    Redundant relations are dropped first; ``order`` then permutes the
    remaining irredundant system.  Candidates are tried from the last
    generator to the first.  A non-strict replacement is kept and the walk continues, as
    in the existence argument; passes repeat until a strict shrink appears.
    """
    rels = [r for r in relations if r]
    if not rels:
        raise ZeroIdeal("the relation ideal is zero")
    if gens is None:
        gens = rels[0].vars
    gens = tuple(gens)

    stab = stabilization_degree(rels, cap)
    bound = stab + 1
    base_dim = build_algebra(Presentation(gens, tuple(rels), cap), verify=False).dim
    system, dropped = _drop_redundant(rels, bound)
    if order is None:
        order = tuple(range(len(system)))
    else:
        order = tuple(order)
        if sorted(order) != list(range(len(system))):
            raise InvalidOrder(f"order {order} is not a permutation of 0..{len(system) - 1} "
                             f"(irredundant generators: {', '.join(map(str, system))})")
        system = [system[i] for i in order]
    xs = Poly.gens(gens)

    for npass in range(1, max_passes + 1):
        for i in range(len(system) - 1, -1, -1):
            cand = system[i]
            others = system[:i] + system[i + 1:]
            multiples = [x * cand for x in xs]
            tilde = others + multiples
            if not _member_at(cand, tilde, bound):
                shrunk_dim = build_algebra(Presentation(gens, tuple(tilde), cap), verify=False).dim
                if shrunk_dim != base_dim + 1:
                    raise InternalInvariantViolation(
                        f"shrinking changed the dimension from {base_dim} to {shrunk_dim}")
                return ShrinkResult(gens, tuple(others) + (cand,), cand, tuple(tilde), bound,
                                    dropped, order, npass, base_dim, shrunk_dim)
            system = system[:i] + multiples + system[i + 1:]
    raise ShrinkPassLimit(f"no strict shrink after {max_passes} passes")


# ---------------------------------------------------------------- pairs

def _fresh_name(taken: Sequence[str]) -> str:
    if "w" not in taken:
        return "w"
    i = 2
    while f"w{i}" in taken:
        i += 1
    return f"w{i}"


def minimal_pair(H: HPair) -> HPair:
    """The same pair over a minimal generating set and an irredundant relation list."""
    A = H.algebra
    pres, subst = minimal_presentation(A)
    rels, _ = _drop_redundant(list(pres.relations),
                              stabilization_degree(pres.relations, pres.cap) + 1)
    if pres is A.presentation and len(rels) == len(pres.relations):
        return H
    B = build_algebra(Presentation(pres.gens, tuple(rels), pres.cap))

    def move(x):
        return normal_form(B, lift(A, x).substitute(subst, pres.gens))

    return make_hpair(B, [move(u) for u in H.u_basis], move(H.complement))


def _order_one(A: LocalAlgebra, x) -> bool:
    return not m_power(A, 2).contains(x)


def add_variable_pair(base: HPair, name: str | None = None) -> HPair:
    """Adjoin a generator w with x_i*w = 0 and w^2 = 0; U grows by w."""
    H0 = minimal_pair(base)
    A0 = H0.algebra
    gens = A0.gens
    name = name or _fresh_name(gens)
    new_gens = gens + (name,)
    w = Poly.var(new_gens, len(gens))
    rels = [r.embed(new_gens) for r in A0.presentation.relations]
    rels += [Poly.var(new_gens, i) * w for i in range(len(gens))] + [w * w]
    A1 = build_algebra(Presentation(new_gens, tuple(rels), A0.presentation.cap))
    if A1.dim != A0.dim + 1:
        raise InternalInvariantViolation("adding a variable did not add one dimension")

    def move(x):
        return normal_form(A1, lift(A0, x).embed(new_gens))

    us = [move(u) for u in H0.u_basis]
    # w goes right after the last order-one vector of U
    last = max((i for i, u in enumerate(H0.u_basis) if _order_one(A0, u)), default=-1)
    us.insert(last + 1, normal_form(A1, w))
    return make_hpair(A1, us, move(H0.complement))


def shrunk_pair(base: HPair, order: Sequence[int] | None = None) -> HPair:
    """Replace the relation ideal I by the strictly smaller ideal from :func:`shrink_generators`."""
    return shrunk_pair_with_result(base, order)[0]


def shrunk_pair_with_result(base: HPair, order: Sequence[int] | None = None):
    H0 = minimal_pair(base)
    A0 = H0.algebra
    pres = A0.presentation
    result = shrink_generators(pres.relations, pres.gens, order=order, cap=pres.cap)
    A2 = build_algebra(Presentation(pres.gens, result.shrunk, pres.cap))
    if A2.dim != A0.dim + 1:
        raise InternalInvariantViolation("shrunk algebra does not have one more dimension")

    def move(x):
        return normal_form(A2, lift(A0, x))

    us = [move(u) for u in H0.u_basis] + [normal_form(A2, result.distinguished)]
    return make_hpair(A2, us, move(H0.complement)), result


@dataclass(eq=False)
class TwoActions:
    core: HPair
    first: HPair
    second: HPair
    certificate: Certificate
    steps: int


def two_actions(H: HPair, order: Sequence[int] | None = None) -> TwoActions:
    """Two non-equivalent pairs with the same reduction as ``H``."""
    if is_nondegenerate(H):
        raise NondegenerateInput("the pair is non-degenerate; its action is unique")
    core = reduction(H).pair
    r = H.dim - core.dim
    first = core
    for _ in range(r):
        first = add_variable_pair(first)
    second = shrunk_pair(core, order)
    for _ in range(r - 1):
        second = add_variable_pair(second)
    gap = embedding_dimension(first.algebra) - embedding_dimension(second.algebra)
    if gap != 1:
        raise InternalInvariantViolation(f"embedding dimensions differ by {gap}, expected 1")
    return TwoActions(core, first, second, compare_invariants(first, second), r)
