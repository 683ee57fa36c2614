"""Submodule lattice enumeration and the covering census.

Submodules of an isotypic component with multiplicity m over the endomorphism
field E = F_{p^s} correspond to E-subspaces of E^m; the full lattice is the
set of direct sums of one choice per component.  Each submodule L yields a
covering descriptor: codimension, effective branch set, map type, genus,
the character of Q/L, and regularity under the reflection.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .decompose import IsotypicComponent, decompose_module
from .homology import HomologyModule, Subspace, build_homology
from .linalg import mat_mul, zeros
from .maps import MapFamily, build_group, build_map, parse_family

# enumerating E-subspaces of E^m touches all q = p^s field elements; every
# multiplicity >= 2 component in scope has a tiny endomorphism field
_FIELD_CAP = 1 << 14


def gaussian_binomial(m: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^m."""
    if k < 0 or k > m:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def subspace_count(m: int, q: int) -> int:
    return sum(gaussian_binomial(m, k, q) for k in range(m + 1))


@dataclass
class ComponentChoice:
    component: IsotypicComponent
    k: int
    rows: tuple  # RREF rows over E, each a tuple of coordinate vectors
    lam: str | None  # projective label for a line in a multiplicity-2 component

    @property
    def label(self) -> str:
        return self.component.label


@dataclass
class CoveringDescriptor:
    family: MapFamily
    branch_classes: tuple[str, ...]
    p: int
    L: Subspace
    c: int
    effective_branch: tuple[str, ...]
    cover_type: tuple[int, int, int]
    genus: int
    character: dict[str, int]
    regular: bool
    choices: tuple[ComponentChoice, ...]
    mate_key: tuple | None = None
    mate_index: int | None = None

    @property
    def type_string(self) -> str:
        x_ord, y_ord, z_ord = self.cover_type
        if y_ord == 2:
            return "{%d,%d}" % (z_ord, x_ord)
        return "(%d,%d,%d)" % (x_ord, y_ord, z_ord)

    @property
    def character_string(self) -> str:
        parts = []
        for label, mult in sorted(self.character.items()):
            parts.append(label if mult == 1 else f"{mult}*{label}")
        return "+".join(parts) if parts else "0"

    def sort_key(self) -> tuple:
        return (self.c, self.genus, self.character_string, self.L.key())


def _field_elements(s: int, p: int):
    """Coordinate vectors of F_{p^s} in lexicographic order, zero first."""
    return list(itertools.product(range(p), repeat=s))


def _coord_matrix(coords, commutant, p: int) -> np.ndarray:
    d = commutant[0].shape[0]
    out = zeros((d, d), p)
    for c, t in zip(coords, commutant):
        if c:
            out = (out + c * t) % p
    return out


def e_subspaces(m: int, s: int, p: int):
    """All E-subspaces of E^m as canonical RREF row tuples over E.

    Each row is an m-tuple of coordinate vectors of length s; pivot entries
    are the field identity, entries above pivots vanish.
    """
    q = p**s
    one = tuple([1] + [0] * (s - 1))
    zero = tuple([0] * s)
    if m == 1:
        # only the zero subspace and the full line; no field enumeration,
        # which matters when E is large
        return [(0, ()), (1, ((one,),))]
    assert q <= _FIELD_CAP, "endomorphism field too large to enumerate"
    elements = _field_elements(s, p)
    out = [(0, ())]
    for k in range(1, m + 1):
        for pivots in itertools.combinations(range(m), k):
            free = [
                (i, j)
                for i in range(k)
                for j in range(m)
                if j > pivots[i] and j not in pivots
            ]
            for assignment in itertools.product(elements, repeat=len(free)):
                rows = [[zero] * m for _ in range(k)]
                for i in range(k):
                    rows[i][pivots[i]] = one
                for (i, j), val in zip(free, assignment):
                    rows[i][j] = val
                out.append((k, tuple(tuple(r) for r in rows)))
    assert len(out) == subspace_count(m, q)
    return out


def _lambda_label(rows, s: int) -> str | None:
    """Projective parameter of a line in E^2, with the first hom basis
    element at infinity."""
    if len(rows) != 1:
        return None
    row = rows[0]
    one = tuple([1] + [0] * (s - 1))
    if row[0] == one:
        lam = row[1]
    else:
        assert row[0] == tuple([0] * s)
        return "inf"
    if s == 1:
        return str(lam[0])
    return "(" + ",".join(map(str, lam)) + ")"


def component_choices(comp: IsotypicComponent, module: HomologyModule) -> list[ComponentChoice]:
    p = module.p
    out = []
    for k, rows in e_subspaces(comp.multiplicity, comp.endo_degree, p):
        lam = _lambda_label(rows, comp.endo_degree) if comp.multiplicity == 2 else None
        out.append(ComponentChoice(comp, k, rows, lam))
    return out


def _choice_matrix(choice: ComponentChoice, module: HomologyModule) -> np.ndarray | None:
    """Stacked basis rows of the submodule picked inside one component."""
    if choice.k == 0:
        return None
    comp = choice.component
    p = module.p
    blocks = []
    for row in choice.rows:
        psi = zeros(comp.hom_basis[0].shape, p)
        for coords, x in zip(row, comp.hom_basis):
            if any(coords):
                psi = (psi + mat_mul(_coord_matrix(coords, comp.commutant, p), x, p)) % p
        blocks.append(psi)
    return np.vstack(blocks)


def enumerate_submodules(
    components: list[IsotypicComponent], module: HomologyModule
) -> list[tuple[Subspace, tuple[ComponentChoice, ...]]]:
    """Every G-invariant submodule of Q, with its per-component coordinates."""
    p = module.p
    menu = [component_choices(comp, module) for comp in components]
    blocks_of = [
        [_choice_matrix(ch, module) for ch in choices] for choices in menu
    ]

    # the full choice in every component must rebuild the component exactly
    for comp, choices, blocks in zip(components, menu, blocks_of):
        full = Subspace(blocks[-1], p, module.dim)
        assert choices[-1].k == comp.multiplicity
        assert full == comp.subspace, comp.labels

    out = []
    seen = set()
    for picks in itertools.product(*(range(len(ch)) for ch in menu)):
        combo = tuple(menu[i][j] for i, j in enumerate(picks))
        blocks = [b for i, j in enumerate(picks) if (b := blocks_of[i][j]) is not None]
        if blocks:
            L = Subspace(np.vstack(blocks), p, module.dim)
        else:
            L = Subspace.zero(p, module.dim)
        expected_dim = sum(ch.k * ch.component.irreducible_dim for ch in combo)
        assert L.dim == expected_dim
        assert module.invariant_under_group(L)
        key = L.key()
        assert key not in seen, "submodule enumerated twice"
        seen.add(key)
        out.append((L, combo))
    assert len(out) == _expected_count(components, p)
    return out


def _expected_count(components: list[IsotypicComponent], p: int) -> int:
    total = 1
    for comp in components:
        total *= subspace_count(comp.multiplicity, p**comp.endo_degree)
    return total


def describe_covering(
    L: Subspace,
    module: HomologyModule,
    choices: tuple[ComponentChoice, ...] = (),
) -> CoveringDescriptor:
    group = module.group
    p = module.p
    assert L.dim < module.dim, "the full module is not a proper submodule"

    effective = []
    B = 0
    for bc in module.branch_classes:
        rows = [
            module.puncture_class(i)
            for i, (cls, _) in enumerate(module.punctures)
            if cls == bc
        ]
        inside = [L.contains(r) for r in rows]
        assert len(set(inside)) == 1, "branch effectiveness must be constant on an orbit"
        if not inside[0]:
            effective.append(bc)
            B += len(rows)

    c = module.dim - L.dim
    genus = 1 - p**c + (p - 1) * p ** (c - 1) * B // 2
    assert genus >= 0

    dm = group.map
    cover_type = (
        dm.m * (p if "vertices" in effective else 1),
        2 * (p if "edges" in effective else 1),
        dm.n * (p if "faces" in effective else 1),
    )

    character = {}
    for ch in choices:
        rem = ch.component.multiplicity - ch.k
        if rem:
            character[ch.component.label] = rem

    mirrored = L.image(module.reflection_matrix)
    regular = mirrored == L

    return CoveringDescriptor(
        family=dm.family,
        branch_classes=module.branch_classes,
        p=p,
        L=L,
        c=c,
        effective_branch=tuple(effective),
        cover_type=cover_type,
        genus=genus,
        character=character,
        regular=regular,
        choices=choices,
        mate_key=None if regular else mirrored.key(),
    )


@dataclass
class Census:
    family: MapFamily
    branch_classes: tuple[str, ...]
    p: int
    coverings: list[CoveringDescriptor]
    components: list[IsotypicComponent]
    module: HomologyModule = field(repr=False)

    @property
    def total(self) -> int:
        return len(self.coverings)

    @property
    def regular_count(self) -> int:
        return sum(1 for d in self.coverings if d.regular)

    @property
    def chiral_count(self) -> int:
        return sum(1 for d in self.coverings if not d.regular)

    @property
    def dimension_multiset(self) -> list[int]:
        return sorted(d.c for d in self.coverings)

    def summary(self) -> dict:
        return {
            "total": self.total,
            "regular": self.regular_count,
            "chiral": self.chiral_count,
            "dimensions": self.dimension_multiset,
        }


def census(fam: MapFamily | str, branch_classes, p: int) -> Census:
    if isinstance(fam, str):
        fam = parse_family(fam)
    group = build_group(build_map(fam))
    module = build_homology(group, branch_classes, p)
    components = decompose_module(module)
    submodules = enumerate_submodules(components, module)

    coverings = []
    for L, combo in submodules:
        if L.dim == module.dim:
            continue
        coverings.append(describe_covering(L, module, combo))
    coverings.sort(key=lambda d: d.sort_key())

    index_of = {d.L.key(): i for i, d in enumerate(coverings)}
    for i, d in enumerate(coverings):
        if d.regular:
            continue
        j = index_of[d.mate_key]
        mate = coverings[j]
        assert j != i and mate.mate_key == d.L.key(), "chirality must be an involution"
        assert (mate.c, mate.genus, mate.cover_type) == (d.c, d.genus, d.cover_type)
        d.mate_index = j

    return Census(
        family=fam,
        branch_classes=module.branch_classes,
        p=p,
        coverings=coverings,
        components=components,
        module=module,
    )
