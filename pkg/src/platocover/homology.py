"""The mod-p first homology of the punctured sphere as a G-module.

Punctures are the chosen branch points, ordered vertices, then edges, then
faces.  P is the permutation module on punctures and Q = P/P_1 its quotient
by the span of the all-ones vector, realized in coordinates by dropping the
last puncture: the deleted basis vector maps to minus the sum of the others.
Vectors are rows and matrices act on the right, so A_g A_h represents g*h
under the group's left-to-right composition.
"""

from __future__ import annotations

import numpy as np

from .errors import EvenPrimeUnsupported, ModularCaseUnsupported
from .gf import is_prime
from .linalg import as_matrix, dtype_for, left_kernel, mat_mul, reduce_rows, rref, zeros
from .maps import GroupData

BRANCH_ORDER = ("vertices", "edges", "faces")


class Subspace:
    """A subspace of F_p^ambient held in reduced row echelon form.

    The RREF basis is canonical, so key() identifies the subspace exactly.
    """

    __slots__ = ("p", "ambient", "basis", "pivots")

    def __init__(self, basis: np.ndarray, p: int, ambient: int, _reduced: bool = False):
        self.p = p
        self.ambient = ambient
        if not _reduced:
            basis, pivots = rref(as_matrix(basis, p, width=ambient), p)
        else:
            pivots = tuple(int(np.argmax(row != 0)) for row in basis)
        self.basis = basis
        self.pivots = pivots
        assert self.basis.shape[1] == ambient

    @staticmethod
    def zero(p: int, ambient: int) -> "Subspace":
        return Subspace(np.zeros((0, ambient), dtype=dtype_for(p)), p, ambient, _reduced=True)

    @staticmethod
    def full(p: int, ambient: int) -> "Subspace":
        return Subspace(np.eye(ambient, dtype=dtype_for(p)), p, ambient, _reduced=True)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def key(self) -> tuple:
        return (self.ambient, tuple(map(tuple, self.basis.tolist())))

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def contains(self, vector) -> bool:
        v = as_matrix(vector, self.p, width=self.ambient)
        residue = reduce_rows(self.basis, self.pivots, v, self.p)
        return not residue.any()

    def contains_space(self, other: "Subspace") -> bool:
        if other.dim == 0:
            return True
        residue = reduce_rows(self.basis, self.pivots, other.basis, self.p)
        return not residue.any()

    def add(self, other: "Subspace") -> "Subspace":
        assert self.ambient == other.ambient
        stacked = np.vstack([self.basis, other.basis])
        return Subspace(stacked, self.p, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Left-kernel construction: pairs (a, b) with a·U + b·W = 0 give
        intersection vectors a·U."""
        assert self.ambient == other.ambient
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.p, self.ambient)
        stacked = np.vstack([self.basis, other.basis])
        kern = left_kernel(stacked, self.p)
        if kern.shape[0] == 0:
            return Subspace.zero(self.p, self.ambient)
        vecs = mat_mul(kern[:, : self.dim], self.basis, self.p)
        out = Subspace(vecs, self.p, self.ambient)
        assert out.dim == self.dim + other.dim - self.add(other).dim
        return out

    def image(self, matrix: np.ndarray) -> "Subspace":
        """Row space of basis @ matrix; matrix maps this ambient to its
        column count."""
        if self.dim == 0:
            return Subspace.zero(self.p, matrix.shape[1])
        return Subspace(mat_mul(self.basis, matrix, self.p), self.p, matrix.shape[1])

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"


class HomologyModule:
    """Q = P/P_1 with the full matrix action of G, the reflection, and the
    central orientation-reversing element when the map has one."""

    def __init__(self, group: GroupData, branch_classes, p: int):
        branch_classes = tuple(bc for bc in BRANCH_ORDER if bc in branch_classes)
        assert branch_classes, "at least one branch class required"
        assert all(bc in BRANCH_ORDER for bc in branch_classes)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise EvenPrimeUnsupported("p = 2 divides every rotation group order")
        if group.order % p == 0:
            raise ModularCaseUnsupported(
                f"p = {p} divides |G| = {group.order} for {group.map.family.name}"
            )

        self.group = group
        self.p = p
        self.branch_classes = branch_classes
        self.punctures = [
            (bc, i) for bc in branch_classes for i in range(len(group.class_perms(bc)[0]))
        ]
        self.N = len(self.punctures)
        self.dim = self.N - 1
        self.dtype = dtype_for(p)

        self._block_offsets = {}
        offset = 0
        for bc in branch_classes:
            count = len(group.class_perms(bc)[0])
            self._block_offsets[bc] = offset
            offset += count

        self.matrices = [self._matrix(self.puncture_permutation(g)) for g in range(group.order)]
        self.reflection_matrix = self._matrix(self._reflection_permutation())
        if group.central_reversing is not None:
            self.central_matrix = self._matrix(self._central_permutation())
        else:
            self.central_matrix = None

        self._verify_presentation()

    # -- puncture bookkeeping -------------------------------------------------

    def puncture_permutation(self, g: int) -> list[int]:
        out = []
        for bc in self.branch_classes:
            base = self._block_offsets[bc]
            out.extend(base + t for t in self.group.class_perms(bc)[g])
        return out

    def _reflection_permutation(self) -> list[int]:
        out = []
        for bc in self.branch_classes:
            base = self._block_offsets[bc]
            out.extend(base + t for t in self.group.reflection_class_perm(bc))
        return out

    def _central_permutation(self) -> list[int]:
        out = []
        for bc in self.branch_classes:
            base = self._block_offsets[bc]
            out.extend(base + t for t in self.group.central_reversing[bc])
        return out

    def _matrix(self, tau) -> np.ndarray:
        n = self.dim
        out = zeros((n, n), self.p)
        for i in range(n):
            t = tau[i]
            if t < n:
                out[i, t] = 1
            else:
                out[i, :] = self.p - 1
        return out

    def puncture_class(self, i: int) -> np.ndarray:
        v = zeros((self.dim,), self.p)
        if i < self.dim:
            v[i] = 1
        else:
            v[:] = self.p - 1
        return v

    def class_vector(self, bc: str) -> np.ndarray:
        """Image in Q of the sum of all punctures in one branch class."""
        assert bc in self.branch_classes
        base = self._block_offsets[bc]
        count = len(self.group.class_perms(bc)[0])
        v = zeros((self.dim,), self.p)
        for i in range(base, base + count):
            v = (v + self.puncture_class(i)) % self.p
        return v

    def projection_matrix(self) -> np.ndarray:
        """The quotient map P -> Q as an N x (N-1) matrix of row images."""
        out = zeros((self.N, self.dim), self.p)
        for i in range(self.N):
            out[i, :] = self.puncture_class(i)
        return out

    # -- sanity ---------------------------------------------------------------

    def _verify_presentation(self) -> None:
        g = self.group
        dm = g.map
        x, z = self.matrices[g.gen_x], self.matrices[g.gen_z]
        ident = np.eye(self.dim, dtype=self.dtype)
        assert self._power(x, dm.m).tolist() == ident.tolist()
        assert self._power(z, dm.n).tolist() == ident.tolist()
        xz = mat_mul(x, z, self.p)
        assert mat_mul(xz, xz, self.p).tolist() == ident.tolist()
        for gen in (g.gen_x, g.gen_z):
            tau = self.puncture_permutation(gen)
            A = self.matrices[gen]
            for i in range(self.N):
                img = mat_mul(self.puncture_class(i).reshape(1, -1), A, self.p)[0]
                assert img.tolist() == self.puncture_class(tau[i]).tolist()

    def _power(self, A: np.ndarray, k: int) -> np.ndarray:
        out = np.eye(self.dim, dtype=self.dtype)
        for _ in range(k):
            out = mat_mul(out, A, self.p)
        return out

    def invariant_under_group(self, space: Subspace) -> bool:
        for gen in (self.group.gen_x, self.group.gen_z):
            if space.image(self.matrices[gen]) != space:
                return False
        return True


def build_homology(group: GroupData, branch_classes, p: int) -> HomologyModule:
    return HomologyModule(group, branch_classes, p)


def _face_two_coloring(group: GroupData) -> list[int] | None:
    """Proper 2-coloring of faces under edge-adjacency, or None."""
    dm = group.map
    adj: list[set[int]] = [set() for _ in range(dm.F)]
    for d in range(dm.n_darts):
        f1, f2 = dm.face_of[d], dm.face_of[dm.alpha[d]]
        if f1 != f2:
            adj[f1].add(f2)
            adj[f2].add(f1)
    color = [-1] * dm.F
    color[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for nb in adj[f]:
            if color[nb] == -1:
                color[nb] = 1 - color[f]
                stack.append(nb)
            elif color[nb] == color[f]:
                return None
    return color


def named_submodules(module: HomologyModule, group: GroupData) -> dict[str, Subspace]:
    """The combinatorially defined submodules: the sum-zero image when it is
    proper, antipodal sum/difference modules, and the octahedron's bipartite
    family."""
    p, N = module.p, module.N
    proj = module.projection_matrix()
    out: dict[str, Subspace] = {}

    def image_of_rows(rows) -> Subspace:
        return Subspace(mat_mul(as_matrix(rows, p, width=N), proj, p), p, module.dim)

    if N % p == 0:
        sum_zero = [[0] * i + [1, p - 1] + [0] * (N - 2 - i) for i in range(N - 1)]
        out["Q1"] = image_of_rows(sum_zero)
        assert out["Q1"].dim == N - 2

    if group.central_reversing is not None and len(module.branch_classes) == 1:
        bc = module.branch_classes[0]
        pairing = group.central_reversing[bc]
        if all(pairing[pairing[i]] == i and pairing[i] != i for i in range(N)):
            sums, diffs = [], []
            for i in range(N):
                if i < pairing[i]:
                    row = [0] * N
                    row[i] = 1
                    row[pairing[i]] = 1
                    sums.append(row)
                    row = [0] * N
                    row[i] = 1
                    row[pairing[i]] = p - 1
                    diffs.append(row)
            out["Qa"] = image_of_rows(sums)
            out["Qa'"] = image_of_rows(diffs)
            assert out["Qa"].dim == N // 2 - 1
            assert out["Qa'"].dim == N // 2
            assert out["Qa"].intersect(out["Qa'"]).dim == 0
            assert out["Qa"].add(out["Qa'"]).dim == module.dim

    if (
        group.map.family.tag == "octahedron"
        and module.branch_classes == ("faces",)
    ):
        color = _face_two_coloring(group)
        assert color is not None
        white = [1 if color[i] == 0 else 0 for i in range(N)]
        black = [1 if color[i] == 1 else 0 for i in range(N)]
        out["Qb"] = image_of_rows([white, black])
        assert out["Qb"].dim == 1
        # elements with equal monochrome coordinate sums: kernel of the
        # signed-color functional
        functional = as_matrix(
            [[1 if color[i] == 0 else p - 1 for i in range(N)]], p
        )
        basis = left_kernel(functional.T, p)
        out["Qb'"] = image_of_rows(basis)
        assert out["Qb'"].dim == N - 2
        out["Qa'&Qb'"] = out["Qa'"].intersect(out["Qb'"])
        assert out["Qa'&Qb'"].dim == 3

    for space in out.values():
        assert module.invariant_under_group(space)
    return out
