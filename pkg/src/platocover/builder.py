"""Derived covering maps from voltage assignments.

For a face-branched covering given by a submodule L, darts of the base map
are labeled with vectors in K = Q/L so that each face boundary sums to the
face's monodromy image.  The derived map on darts (d, k) then realizes the
covering combinatorially, and its Euler characteristic recomputes the genus
independently of the Riemann-Hurwitz bookkeeping in the census.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .homology import HomologyModule, Subspace
from .linalg import joint_orbit_count, permutation_orbit_count, reduce_rows, rref, zeros
from .maps import DartMap


@dataclass
class VoltageAssignment:
    dart_map: DartMap
    p: int
    c: int
    beta: np.ndarray  # (n_darts, c), with beta[alpha[d]] = -beta[d]
    monodromy: np.ndarray  # (F, c), image of each face's puncture class in K


def _k_projection(module: HomologyModule, L: Subspace):
    """Coordinates on K = Q/L: residue against L's echelon basis, restricted
    to the non-pivot positions."""
    free = [j for j in range(module.dim) if j not in L.pivots]

    def project(vec) -> np.ndarray:
        residue = reduce_rows(L.basis, L.pivots, vec, module.p)
        return residue[0, free]

    return free, project


def _darts_at_vertex(dm: DartMap, v: int) -> list[int]:
    start = dm.vertex_dart[v]
    out = [start]
    d = dm.sigma[start]
    while d != start:
        out.append(d)
        d = dm.sigma[d]
    return out


def _spanning_tree_edges(dm: DartMap) -> set[int]:
    seen = {0}
    tree = set()
    queue = [0]
    while queue:
        v = queue.pop(0)
        for d in _darts_at_vertex(dm, v):
            w = dm.vertex_of[dm.alpha[d]]
            if w not in seen:
                seen.add(w)
                tree.add(dm.edge_of[d])
                queue.append(w)
    assert len(seen) == dm.V and len(tree) == dm.V - 1
    return tree


def _face_boundary(dm: DartMap, f: int) -> list[int]:
    start = dm.face_dart[f]
    out = [start]
    d = dm.phi(start)
    while d != start:
        out.append(d)
        d = dm.phi(d)
    return out


def solve_voltages(module: HomologyModule, L: Subspace) -> VoltageAssignment:
    assert module.branch_classes == ("faces",), "voltage construction is face-branched"
    assert L.dim < module.dim
    group = module.group
    dm = group.map
    p = module.p
    c = module.dim - L.dim
    free, project = _k_projection(module, L)

    tree = _spanning_tree_edges(dm)
    cotree = [e for e in range(dm.E) if e not in tree]
    assert len(cotree) == dm.F - 1

    unknown_of = {e: i for i, e in enumerate(cotree)}
    rows = zeros((dm.F, len(cotree)), p)
    rhs = zeros((dm.F, c), p)
    for f in range(dm.F):
        rhs[f] = project(module.puncture_class(f))
        for d in _face_boundary(dm, f):
            e = dm.edge_of[d]
            if e not in unknown_of:
                continue
            sign = 1 if d == dm.edge_dart[e] else -1
            rows[f, unknown_of[e]] = (rows[f, unknown_of[e]] + sign) % p

    # the sphere makes the F-1 retained equations independent; the dropped
    # one is forced because the monodromies sum to zero
    aug = np.concatenate([rows, rhs], axis=1)
    reduced, pivots = rref(aug, p)
    assert pivots == list(range(len(cotree))), "voltage system must be uniquely solvable"
    solution = reduced[:, len(cotree):]

    beta = zeros((dm.n_darts, c), p)
    for e, i in unknown_of.items():
        rep = dm.edge_dart[e]
        beta[rep] = solution[i]
        beta[dm.alpha[rep]] = (-solution[i]) % p

    for f in range(dm.F):
        total = zeros((c,), p)
        for d in _face_boundary(dm, f):
            total = (total + beta[d]) % p
        assert total.tolist() == rhs[f].tolist(), f

    return VoltageAssignment(dart_map=dm, p=p, c=c, beta=beta, monodromy=rhs)


def _cycle_labels(perm: np.ndarray) -> np.ndarray:
    labels = np.arange(perm.shape[0], dtype=np.int64)
    nxt = perm.astype(np.int64)
    steps = 1
    while steps < perm.shape[0]:
        labels = np.minimum(labels, labels[nxt])
        nxt = nxt[nxt]
        steps *= 2
    return labels


def k_encoding(p: int, c: int):
    """Row i of the returned table is the vector whose digit expansion against
    powers = (1, p, ..., p^(c-1)) equals i."""
    powers = np.array([p**j for j in range(c)], dtype=np.int64)
    k_vectors = np.array(list(itertools.product(range(p), repeat=c)), dtype=np.int64)
    if c:
        k_vectors = k_vectors[np.argsort(k_vectors @ powers)]
    else:
        k_vectors = k_vectors.reshape(1, 0)
    return k_vectors, powers


def derived_permutations(va: VoltageAssignment):
    """sigma' and alpha' on the darts (d, k), indexed d * |K| + index(k)."""
    dm = va.dart_map
    p, c = va.p, va.c
    size = p**c
    k_vectors, powers = k_encoding(p, c)

    sigma = np.asarray(dm.sigma, dtype=np.int64)
    alpha = np.asarray(dm.alpha, dtype=np.int64)
    ks = np.arange(size, dtype=np.int64)

    sigma_big = (sigma[:, None] * size + ks[None, :]).ravel()
    beta = np.asarray(va.beta, dtype=np.int64)
    shifted = ((k_vectors[None, :, :] + beta[:, None, :]) % p) @ powers
    alpha_big = (alpha[:, None] * size + shifted).ravel()
    return sigma_big, alpha_big


def euler_verify(va: VoltageAssignment, budget: int = 10**6):
    """(V', E', F', genus) of the derived map, with the covering counts and
    branching orders asserted along the way."""
    dm = va.dart_map
    p, c = va.p, va.c
    size = p**c
    total = dm.n_darts * size
    if total > budget:
        raise ValueError(f"derived map needs {total} darts, budget {budget}")

    sigma_big, alpha_big = derived_permutations(va)
    phi_big = sigma_big[alpha_big]

    v_count = permutation_orbit_count(sigma_big)
    e_count = permutation_orbit_count(alpha_big)
    face_labels = _cycle_labels(phi_big)
    uniq, lengths = np.unique(face_labels, return_counts=True)
    f_count = int(uniq.size)

    assert v_count == dm.V * size
    assert e_count == dm.E * size
    assert f_count * p == dm.F * size, "face fibres must merge in groups of p"
    assert all(int(n) == dm.n * p for n in lengths), "every derived face has length n*p"
    assert joint_orbit_count(sigma_big, alpha_big) == 1, "derived map must be connected"

    euler = v_count - e_count + f_count
    assert euler % 2 == 0 and euler <= 2
    return v_count, e_count, f_count, (2 - euler) // 2
