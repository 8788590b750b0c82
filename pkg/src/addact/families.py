"""Non-degenerate hypersurfaces of every degree 2 <= d <= n in P^n, and the dimension-6 census.

The family algebras are Gorenstein of dimension n+1 with socle m^d:

* chain (d = n):  K[x]/(x^{n+1});
* even gap (n-d = 2k > 0):  generators S1..S_{2k+1}, all products S_i*S_j
  zero except S1*S2 = S3*S4 = ... = S_{2k-1}*S_{2k} = S_{2k+1}^{n-2k};
* odd gap (n-d = 2k-1):  generators S1..S_{2k}, all products zero except
  S1*S2 = ... = S_{2k-3}*S_{2k-2} = S_{2k-1}^2 = S_{2k}^{n-2k+1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .artin import DEFAULT_CAP, Presentation, build_algebra, socle
from .errors import InternalInvariantViolation, InvalidRange
from .exactpoly import Poly, parse_poly
from .fileformat import PresentationFile, parse_text
from .hpair import HPair, make_hpair


@dataclass(frozen=True)
class FamilySpec:
    n: int
    d: int
    branch: str  # "chain", "even" or "odd"
    k: int

    @property
    def gens(self) -> tuple:
        if self.branch == "chain":
            return ("x",)
        count = 2 * self.k + 1 if self.branch == "even" else 2 * self.k
        return tuple(f"S{i}" for i in range(1, count + 1))


def family_spec(n: int, d: int) -> FamilySpec:
    if not 2 <= d <= n:
        raise InvalidRange(f"need 2 <= d <= n, got n={n}, d={d}")
    gap = n - d
    if gap == 0:
        return FamilySpec(n, d, "chain", 0)
    if gap % 2 == 0:
        return FamilySpec(n, d, "even", gap // 2)
    return FamilySpec(n, d, "odd", (gap + 1) // 2)


def family_presentation(n: int, d: int, cap: int = DEFAULT_CAP) -> Presentation:
    spec = family_spec(n, d)
    gens = spec.gens
    S = Poly.gens(gens)
    if spec.branch == "chain":
        return Presentation(gens, (S[0] ** (n + 1),), cap)

    m = len(gens)
    k = spec.k
    if spec.branch == "even":
        top = S[-1] ** (n - 2 * k)
        linked = [(2 * i, 2 * i + 1) for i in range(k)]
    else:
        top = S[-1] ** (n - 2 * k + 1)
        linked = [(2 * i, 2 * i + 1) for i in range(k - 1)] + [(2 * k - 2, 2 * k - 2)]
    free = linked + [(m - 1, m - 1)]  # products that are not forced to vanish

    rels = [S[i] * S[j] - top for i, j in linked]
    rels += [S[i] * S[j] for i in range(m) for j in range(i, m) if (i, j) not in free]
    return Presentation(gens, tuple(rels), cap)


def family_pair(n: int, d: int, cap: int = DEFAULT_CAP) -> HPair:
    """Pair with U spanned by all basis monomials of m except the socle one."""
    A = build_algebra(family_presentation(n, d, cap))
    soc = socle(A)
    if soc.dim != 1:
        raise InternalInvariantViolation(f"family algebra ({n}, {d}) has socle of dimension {soc.dim}")
    top = max(range(1, A.dim), key=lambda i: sum(A.basis[i]))
    U = [A.basis_element(i) for i in range(1, A.dim) if i != top]
    return make_hpair(A, U, A.basis_element(top))


# ---------------------------------------------------------------- census

@dataclass(frozen=True)
class CensusEntry:
    name: str
    source: PresentationFile
    equation: str
    degree: int
    singular: tuple  # indices i with z_i = 0 on the stated locus; empty when smooth
    normal: bool

    def presentation(self, cap: int = DEFAULT_CAP) -> Presentation:
        return self.source.presentation(cap)

    def pair(self, cap: int = DEFAULT_CAP) -> HPair:
        return self.source.hpair(cap=cap)

    def expected_equation(self) -> Poly:
        n = 1 + len(self.source.U) + 1
        return parse_poly(self.equation, [f"z{i}" for i in range(n)])


def parse_singular(text: str) -> tuple:
    text = text.strip()
    if text in ("", "empty"):
        return ()
    out = []
    for item in text.split(","):
        item = item.strip()
        if not (item.startswith("z") and item[1:].isdigit()):
            raise ValueError(f"bad coordinate {item!r} in singular locus")
        out.append(int(item[1:]))
    return tuple(out)


def census_entry(doc: PresentationFile) -> CensusEntry:
    e = doc.expect
    return CensusEntry(
        name=doc.name or "",
        source=doc,
        equation=e["expect_equation"],
        degree=int(e["expect_degree"]),
        singular=parse_singular(e.get("expect_singular", "")),
        normal=e.get("expect_normal", "no").strip().lower() == "yes",
    )


def data_text(name: str) -> str:
    return resources.files("addact").joinpath("data").joinpath(name).read_text(encoding="utf-8")


def catalog6() -> list:
    return [census_entry(doc) for doc in parse_text(data_text("census6.alg"))]
