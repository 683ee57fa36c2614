"""Exhaustive submodule enumeration for small modules.

Every invariant subspace is the sum of the cyclic submodules it contains, so
spinning vectors and closing under pairwise sums finds them all.  Spinning is
constant on orbits under the group action and under scalars, which cuts the
p^dim vector sweep down to one spin per orbit.  Cost still grows like p^dim,
hence the budget guard; this cross-checks the structured enumeration on small
cases rather than replacing it.
"""

from __future__ import annotations

import numpy as np

from .decompose import spin
from .gf import primitive_root
from .homology import HomologyModule, Subspace

_CHUNK = 1 << 18


def _all_digits(size: int, dim: int, p: int) -> np.ndarray:
    digits = np.empty((size, dim), dtype=np.int8)
    tmp = np.arange(size, dtype=np.int64)
    for j in range(dim):
        digits[:, j] = tmp % p
        tmp //= p
    return digits


def _linear_permutation(digits: np.ndarray, matrix: np.ndarray, p: int) -> np.ndarray:
    powers = np.array([p**j for j in range(matrix.shape[0])], dtype=np.int64)
    mat = (np.asarray(matrix, dtype=np.int64) % p).astype(np.int32)
    out = np.empty(digits.shape[0], dtype=np.int64)
    for start in range(0, digits.shape[0], _CHUNK):
        block = digits[start : start + _CHUNK].astype(np.int32)
        out[start : start + _CHUNK] = ((block @ mat) % p).astype(np.int64) @ powers
    return out


def _orbit_labels(perms: list[np.ndarray]) -> np.ndarray:
    labels = np.arange(perms[0].shape[0], dtype=np.int64)
    while True:
        relabeled = labels
        for perm in perms:
            relabeled = np.minimum(relabeled, relabeled[perm])
        if np.array_equal(relabeled, labels):
            return labels
        labels = relabeled


def brute_force_submodules(module: HomologyModule, budget: int = 10**7) -> list[Subspace]:
    p, dim = module.p, module.dim
    size = p**dim
    if size > budget and dim > 5:
        raise ValueError(f"brute force over {p}^{dim} vectors exceeds budget {budget}")

    group = module.group
    digits = _all_digits(size, dim, p)
    scalar = np.eye(dim, dtype=np.int64) * primitive_root(p)
    perms = [
        _linear_permutation(digits, module.matrices[group.gen_x], p),
        _linear_permutation(digits, module.matrices[group.gen_z], p),
        _linear_permutation(digits, scalar, p),
    ]
    reps = np.unique(_orbit_labels(perms))

    found: dict[tuple, Subspace] = {}
    zero = Subspace.zero(p, dim)
    found[zero.key()] = zero
    for r in reps:
        if r == 0:
            continue
        space = spin(module, digits[r].astype(np.int64))
        found.setdefault(space.key(), space)

    # close under sums
    frontier = list(found.values())
    while frontier:
        fresh = []
        current = list(found.values())
        for a in frontier:
            for b in current:
                s = a.add(b)
                if s.key() not in found:
                    found[s.key()] = s
                    fresh.append(s)
        frontier = fresh

    out = sorted(found.values(), key=lambda s: (s.dim, s.key()))
    assert all(module.invariant_under_group(s) for s in out)
    return out
