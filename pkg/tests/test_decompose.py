"""Isotypic decomposition against independently known module structures."""

from fractions import Fraction

from platocover.chartab import CharacterTable, QuadValue, table_for_group
from platocover.decompose import (
    decompose_dihedral,
    decompose_idempotent,
    decompose_module,
)
from platocover.homology import Subspace, build_homology, named_submodules
from platocover.linalg import mat_mul
from platocover.maps import build_group, build_map, family


def module_for(tag, branch, p, param=None):
    group = build_group(build_map(family(tag, param)))
    return build_homology(group, branch, p), group


def by_label(comps):
    return {c.label: c for c in comps}


def profile(comps):
    return sorted((c.label, c.irreducible_dim, c.multiplicity, c.endo_degree) for c in comps)


def test_octahedron_faces_components():
    mod, group = module_for("octahedron", ["faces"], 5)
    comps = by_label(decompose_module(mod))
    assert profile(comps.values()) == [
        ("chi2", 1, 1, 1),
        ("chi4", 3, 1, 1),
        ("chi5", 3, 1, 1),
    ]
    named = named_submodules(mod, group)
    assert comps["chi2"].subspace == named["Qb"]
    assert {comps["chi4"].subspace, comps["chi5"].subspace} == {
        named["Qa"],
        named["Qa'&Qb'"],
    }


def test_tetrahedron_faces_single_component():
    mod, _ = module_for("tetrahedron", ["faces"], 5)
    comps = decompose_module(mod)
    assert profile(comps) == [("chi4", 3, 1, 1)]
    assert comps[0].subspace.dim == mod.dim


def test_icosahedron_faces_split_prime():
    mod, _ = module_for("icosahedron", ["faces"], 11)
    assert profile(decompose_module(mod)) == [
        ("chi2", 3, 1, 1),
        ("chi3", 3, 1, 1),
        ("chi4", 4, 2, 1),
        ("chi5", 5, 1, 1),
    ]


def test_icosahedron_faces_inert_prime():
    mod, _ = module_for("icosahedron", ["faces"], 7)
    assert profile(decompose_module(mod)) == [
        ("chi2+chi3", 6, 1, 2),
        ("chi4", 4, 2, 1),
        ("chi5", 5, 1, 1),
    ]


def test_dodecahedron_faces_both_prime_kinds():
    mod, _ = module_for("dodecahedron", ["faces"], 7)
    assert profile(decompose_module(mod)) == [
        ("chi2+chi3", 6, 1, 2),
        ("chi5", 5, 1, 1),
    ]
    mod, _ = module_for("dodecahedron", ["faces"], 11)
    assert profile(decompose_module(mod)) == [
        ("chi2", 3, 1, 1),
        ("chi3", 3, 1, 1),
        ("chi5", 5, 1, 1),
    ]


def test_tetrahedron_edges_split_and_merged():
    mod, _ = module_for("tetrahedron", ["edges"], 7)
    assert profile(decompose_module(mod)) == [
        ("chi2", 1, 1, 1),
        ("chi3", 1, 1, 1),
        ("chi4", 3, 1, 1),
    ]
    mod, _ = module_for("tetrahedron", ["edges"], 5)
    assert profile(decompose_module(mod)) == [
        ("chi2+chi3", 2, 1, 2),
        ("chi4", 3, 1, 1),
    ]


def test_mixed_branch_multiplicities():
    mod, _ = module_for("tetrahedron", ["vertices", "faces"], 5)
    assert profile(decompose_module(mod)) == [
        ("chi1", 1, 1, 1),
        ("chi4", 3, 2, 1),
    ]
    mod, _ = module_for("tetrahedron", ["vertices", "edges", "faces"], 7)
    assert profile(decompose_module(mod)) == [
        ("chi1", 1, 2, 1),
        ("chi2", 1, 1, 1),
        ("chi3", 1, 1, 1),
        ("chi4", 3, 3, 1),
    ]


def test_cube_vertices_faces():
    mod, _ = module_for("cube", ["vertices", "faces"], 5)
    assert profile(decompose_module(mod)) == [
        ("chi1", 1, 1, 1),
        ("chi2", 1, 1, 1),
        ("chi3", 2, 1, 1),
        ("chi4", 3, 1, 1),
        ("chi5", 3, 2, 1),
    ]


def test_dodecahedron_vertices_faces():
    mod, _ = module_for("dodecahedron", ["vertices", "faces"], 7)
    assert profile(decompose_module(mod)) == [
        ("chi1", 1, 1, 1),
        ("chi2+chi3", 6, 2, 2),
        ("chi4", 4, 2, 1),
        ("chi5", 5, 2, 1),
    ]


def test_hosohedron_small():
    mod, _ = module_for("hosohedron", ["faces"], 5, 3)
    assert profile(decompose_module(mod)) == [("xi1", 2, 1, 1)]
    mod, _ = module_for("hosohedron", ["faces"], 5, 4)
    assert profile(decompose_module(mod)) == [
        ("chi3", 1, 1, 1),
        ("xi1", 2, 1, 1),
    ]


def test_hosohedron_95():
    mod, _ = module_for("hosohedron", ["faces"], 7, 95)
    comps = decompose_module(mod)
    dims = sorted(c.subspace.dim for c in comps)
    assert dims == [4, 6, 6, 6, 24, 24, 24]
    assert sorted(c.endo_degree for c in comps) == [2, 3, 3, 3, 12, 12, 12]
    assert all(c.multiplicity == 1 for c in comps)
    firsts = sorted(c.labels[0] for c in comps)
    assert firsts == ["xi1", "xi10", "xi19", "xi2", "xi20", "xi4", "xi5"]


def test_hosohedron_self_paired_multiplicity_two():
    # ord_5(3) = 4 and -1 lies in <3> mod 5, so xi1 and xi2 merge into one
    # self-paired component; vertices+edges+faces gives it multiplicity 2
    mod, _ = module_for("hosohedron", ["vertices", "edges", "faces"], 3, 5)
    assert profile(decompose_module(mod)) == [
        ("chi1", 1, 2, 1),
        ("chi2", 1, 1, 1),
        ("xi1+xi2", 4, 2, 2),
    ]


def test_dihedron_faces():
    mod, _ = module_for("dihedron", ["faces"], 5, 3)
    assert profile(decompose_module(mod)) == [("chi2", 1, 1, 1)]


def test_components_are_independent_and_fill():
    for tag, branch, p, param in [
        ("cube", ["vertices", "faces"], 5, None),
        ("icosahedron", ["faces"], 7, None),
        ("hosohedron", ["vertices", "faces"], 5, 4),
    ]:
        mod, _ = module_for(tag, branch, p, param)
        comps = decompose_module(mod)
        total = Subspace.zero(p, mod.dim)
        for c in comps:
            assert total.intersect(c.subspace).dim == 0
            total = total.add(c.subspace)
        assert total.dim == mod.dim


def test_seeds_are_irreducible_copies():
    mod, _ = module_for("dodecahedron", ["vertices", "faces"], 11)
    for c in decompose_module(mod):
        assert c.seed.dim == c.irreducible_dim
        assert c.subspace.contains_space(c.seed)
        assert mod.invariant_under_group(c.seed)
        assert len(c.hom_basis) == c.multiplicity


def test_adapted_hom_basis_uses_central_element():
    mod, _ = module_for("icosahedron", ["faces"], 11)
    comps = by_label(decompose_module(mod))
    c = comps["chi4"]
    expected = mat_mul(c.hom_basis[0], mod.central_matrix, mod.p)
    assert c.hom_basis[1].tolist() == expected.tolist()


def _d3_table() -> CharacterTable:
    q = lambda x: QuadValue(Fraction(x), Fraction(0), 1)
    return CharacterTable(
        name="D3-by-hand",
        kind="dihedral",
        col_labels=("e", "a", "b"),
        col_sizes=(1, 2, 3),
        col_orders=(1, 3, 2),
        row_names=("chi1", "chi2", "xi1"),
        rows=(
            (q(1), q(1), q(1)),
            (q(1), q(1), q(-1)),
            (q(2), q(-1), q(0)),
        ),
        galois_pairs=(),
        param=3,
        col_spec=(("rot", 0), ("rot", 1), ("refl", 0)),
    )


def test_dihedral_backend_matches_idempotents():
    # hosohedron(3) has group D3; the generic idempotent path with a
    # hand-entered table must produce the same components
    group = build_group(build_map(family("hosohedron", 3)))
    mod = build_homology(group, ["vertices", "edges", "faces"], 5)
    from_kernels = decompose_dihedral(mod, group, 3)
    from_idempotents = decompose_idempotent(mod, group, _d3_table())
    key = lambda comps: {
        c.subspace.key(): (c.label, c.irreducible_dim, c.multiplicity, c.endo_degree)
        for c in comps
    }
    assert key(from_kernels) == key(from_idempotents)


def test_dispatch_picks_backend():
    mod, group = module_for("cube", ["faces"], 7)
    table = table_for_group(group)
    assert profile(decompose_module(mod)) == profile(decompose_idempotent(mod, group, table))
