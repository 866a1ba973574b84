"""
Exterior Powers and Hom Modules
===============================

Integer matrices of the induced actions of GL(n, Z) on Lambda^d H and on
Hom(H, Lambda^2 H), the symplectic form on H = Z^2g, the contraction
Lambda^3 H -> H, and generating sets for SL(n, Z) and Sp(2g, Z).

Symplectic bases are ordered e_1..e_g, f_1..f_g with pairing matrix
J = [[0, I], [-I, 0]], so omega(e_i, f_i) = 1.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from ..errors import DimensionError
from .freegroup import Automorphism, abelianize, apply, generator
from .intlattice import IntMatrix, Vector

logger = logging.getLogger(__name__)


# =============================================================================
# Bases
# =============================================================================


@lru_cache(maxsize=None)
def wedge_basis(rank: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Increasing 1-based index tuples, lexicographic."""
    return tuple(itertools.combinations(range(1, rank + 1), degree))


@lru_cache(maxsize=None)
def hom_basis(rank: int) -> tuple[tuple[int, tuple[int, int]], ...]:
    """Basis (i, (j, k)) of Hom(H, Lambda^2 H): a_i* tensor a_j^a_k, i-major."""
    return tuple((i, pair) for i in range(1, rank + 1) for pair in wedge_basis(rank, 2))


@dataclass(frozen=True)
class ExtBasis:
    rank: int
    degree: int

    def __post_init__(self):
        if not 1 <= self.degree <= self.rank:
            raise DimensionError(f"Lambda^{self.degree} of rank {self.rank}")

    @property
    def tuples(self) -> tuple[tuple[int, ...], ...]:
        return wedge_basis(self.rank, self.degree)

    def __len__(self) -> int:
        return len(self.tuples)

    def index(self, indices: Sequence[int]) -> int:
        return self.tuples.index(tuple(indices))


@dataclass(frozen=True)
class ExtVector:
    basis: ExtBasis
    coords: Vector

    def __post_init__(self):
        if len(self.coords) != len(self.basis):
            raise DimensionError(f"{len(self.coords)} coordinates for a basis of {len(self.basis)}")

    @classmethod
    def zero(cls, basis: ExtBasis) -> "ExtVector":
        return cls(basis, (0,) * len(basis))

    def __add__(self, other: "ExtVector") -> "ExtVector":
        if self.basis != other.basis:
            raise DimensionError("adding exterior vectors over different bases")
        return ExtVector(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def terms(self, genus: int | None = None) -> dict[str, int]:
        """Nonzero coordinates keyed ``e1^f1^e2`` (symplectic) or ``a1^a2^a3``."""
        out = {}
        for t, c in zip(self.basis.tuples, self.coords):
            if c:
                out["^".join(basis_label(i, genus) for i in t)] = c
        return out


def basis_label(index: int, genus: int | None = None) -> str:
    if genus is None:
        return f"a{index}"
    return f"e{index}" if index <= genus else f"f{index - genus}"


def wedge(vectors: Sequence[Sequence[int]]) -> ExtVector:
    """v_1 ^ ... ^ v_d in Lambda^d Z^n; the coordinate at I is the minor on columns I."""
    if not vectors:
        raise DimensionError("wedge of no vectors")
    n = len(vectors[0])
    basis = ExtBasis(n, len(vectors))
    m = IntMatrix.from_rows(vectors)
    coords = tuple(_minor(m, tuple(range(basis.degree)), tuple(c - 1 for c in t)) for t in basis.tuples)
    return ExtVector(basis, coords)


def _minor(m: IntMatrix, rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    if len(rows) == 1:
        return m.rows[rows[0]][cols[0]]
    return int(m.to_domain().extract(list(rows), list(cols)).det())


# =============================================================================
# Induced actions
# =============================================================================


def wedge_action(m: IntMatrix, degree: int) -> IntMatrix:
    """Matrix of Lambda^degree m: e_J maps to sum over I of det(m[I, J]) e_I."""
    if not m.is_square:
        raise DimensionError(f"wedge action of non-square {m.shape} matrix")
    basis = ExtBasis(m.nrows, degree)
    zero_based = [tuple(i - 1 for i in t) for t in basis.tuples]
    dm = m.to_domain()
    rows = []
    for rows_idx in zero_based:
        row = []
        for cols_idx in zero_based:
            if degree == 1:
                row.append(m.rows[rows_idx[0]][cols_idx[0]])
            else:
                row.append(int(dm.extract(list(rows_idx), list(cols_idx)).det()))
        rows.append(row)
    return IntMatrix.from_rows(rows)


def hom_action(m: IntMatrix) -> IntMatrix:
    """Action on Hom(H, Lambda^2 H): (m^-T on H*) tensor (Lambda^2 m), i-major."""
    dual = m.inverse().transpose()
    w2 = wedge_action(m, 2)
    kron = np.kron(np.array(dual.rows, dtype=object), np.array(w2.rows, dtype=object))
    return IntMatrix.from_rows(kron.tolist())


def abelian_matrix(f: Automorphism) -> IntMatrix:
    """Action of f on H = Z^n; column j is the exponent-sum vector of f(a_j)."""
    cols = [abelianize(apply(f, generator(f.rank, j))) for j in range(1, f.rank + 1)]
    return IntMatrix.from_columns(cols)


# =============================================================================
# Symplectic structure
# =============================================================================


@dataclass(frozen=True)
class SymplecticForm:
    genus: int

    def __post_init__(self):
        if self.genus < 1:
            raise DimensionError(f"genus must be positive, got {self.genus}")

    @property
    def dim(self) -> int:
        return 2 * self.genus

    @property
    def matrix(self) -> IntMatrix:
        g = self.genus
        rows = [[0] * (2 * g) for _ in range(2 * g)]
        for i in range(g):
            rows[i][g + i] = 1
            rows[g + i][i] = -1
        return IntMatrix.from_rows(rows)

    def e(self, i: int) -> Vector:
        return tuple(int(k == i - 1) for k in range(self.dim))

    def f(self, i: int) -> Vector:
        return tuple(int(k == self.genus + i - 1) for k in range(self.dim))

    def pair(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(x, self.matrix.matvec(y)))

    def preserves(self, m: IntMatrix) -> bool:
        j = self.matrix
        return m.transpose() @ j @ m == j

    def transvection(self, v: Sequence[int]) -> IntMatrix:
        """x -> x + omega(x, v) v, i.e. I - v v^T J."""
        j = self.matrix
        n = self.dim
        vjt = [sum(v[k] * j.rows[k][c] for k in range(n)) for c in range(n)]
        rows = [[int(r == c) - v[r] * vjt[c] for c in range(n)] for r in range(n)]
        return IntMatrix.from_rows(rows)


def contraction(v: ExtVector, form: SymplecticForm) -> Vector:
    """Linear extension of x^y^z -> omega(x,y) z + omega(y,z) x + omega(z,x) y."""
    if v.basis.degree != 3:
        raise DimensionError("contraction is defined on Lambda^3")
    if v.basis.rank % 2:
        raise DimensionError(f"contraction needs even rank, got {v.basis.rank}")
    if v.basis.rank != form.dim:
        raise DimensionError(f"Lambda^3 of rank {v.basis.rank} against genus {form.genus}")
    j = form.matrix.rows
    out = [0] * form.dim
    for (a, b, c), x in zip(v.basis.tuples, v.coords):
        if not x:
            continue
        a, b, c = a - 1, b - 1, c - 1
        out[c] += x * j[a][b]
        out[a] += x * j[b][c]
        out[b] += x * j[c][a]
    return tuple(out)


def contraction_matrix(form: SymplecticForm) -> IntMatrix:
    """2g x C(2g, 3) matrix of the contraction."""
    basis = ExtBasis(form.dim, 3)
    cols = []
    for k in range(len(basis)):
        unit = tuple(int(i == k) for i in range(len(basis)))
        cols.append(contraction(ExtVector(basis, unit), form))
    return IntMatrix.from_columns(cols)


def hom_contraction_matrix(rank: int) -> IntMatrix:
    """n x n*C(n,2) matrix of H* (x) Lambda^2 H -> H, a_i* (x) a_j^a_k -> d_ij a_k - d_ik a_j.

    GL(n, Z)-equivariant; Johnson classes of IA-automorphisms built from
    commutator moves lie in its kernel.
    """
    cols = []
    for i, (j, k) in hom_basis(rank):
        col = [0] * rank
        if i == j:
            col[k - 1] += 1
        if i == k:
            col[j - 1] -= 1
        cols.append(col)
    return IntMatrix.from_columns(cols, nrows=rank)


def embed_h(x: Sequence[int], form: SymplecticForm) -> ExtVector:
    """x -> sum_i e_i ^ f_i ^ x."""
    total = ExtVector.zero(ExtBasis(form.dim, 3))
    for i in range(1, form.genus + 1):
        total = total + wedge([form.e(i), form.f(i), x])
    return total


# =============================================================================
# Generating sets
# =============================================================================


def sl_generators(n: int) -> list[IntMatrix]:
    """Elementary transvections I + E_ij, i != j."""
    if n < 2:
        raise DimensionError(f"SL generators need n >= 2, got {n}")
    return [
        IntMatrix.elementary(n, i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ]


def sp_generators(g: int) -> list[IntMatrix]:
    """Symplectic transvections along e_i, f_i and e_i + e_(i+1)."""
    if g < 2:
        raise DimensionError(f"Sp generators need g >= 2, got {g}")
    form = SymplecticForm(g)
    directions = [form.e(i) for i in range(1, g + 1)]
    directions += [form.f(i) for i in range(1, g + 1)]
    directions += [
        tuple(a + b for a, b in zip(form.e(i), form.e(i + 1))) for i in range(1, g)
    ]
    gens = [form.transvection(v) for v in directions]
    for m in gens:
        if not form.preserves(m):
            raise ArithmeticError("transvection does not preserve the symplectic form")
    return gens


def group_order_mod(gens: Sequence[IntMatrix], p: int) -> int:
    """Order of the subgroup of GL(n, p) generated by the reductions of gens.

    Computed as a permutation group on the p^n vectors of (Z/p)^n.
    """
    if not gens:
        return 1
    n = gens[0].nrows
    points = list(itertools.product(range(p), repeat=n))
    index = {v: k for k, v in enumerate(points)}
    perms = []
    for g in gens:
        reduced = g.mod(p)
        perms.append(Permutation([index[tuple(x % p for x in reduced.matvec(v))] for v in points]))
    return int(PermutationGroup(perms).order())
