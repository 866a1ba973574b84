"""
Integer Lattices
================

Exact integer matrices, Smith normal form, sublattices kept in Hermite
echelon form, orbit-span saturation and congruence depth.

Matrix arithmetic that benefits from a real backend (products, determinants,
inverses, SNF, ranks mod p) goes through sympy's ``DomainMatrix``; vector
bookkeeping stays in plain Python integers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from sympy import multiplicity
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.matrices import DM, DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from ..config import get_settings
from ..errors import DimensionError, NotUnimodularError, SaturationLimitError

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Rectangular integer matrix stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]
    ncols: int = -1

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        ncols = len(rows[0]) if rows else max(self.ncols, 0)
        if any(len(r) != ncols for r in rows):
            raise DimensionError("matrix rows have different lengths")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], nrows: int | None = None) -> "IntMatrix":
        if not cols:
            return cls((), 0) if not nrows else cls(tuple(() for _ in range(nrows)), 0)
        return cls(tuple(zip(*cols)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def diag(cls, *entries: int) -> "IntMatrix":
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)), n)

    @classmethod
    def elementary(cls, n: int, i: int, j: int, k: int = 1) -> "IntMatrix":
        """I + k*E_ij with 1-based indices."""
        rows = [list(r) for r in cls.identity(n).rows]
        rows[i - 1][j - 1] += k
        return cls.from_rows(rows)

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> "IntMatrix":
        nrows, ncols = dm.shape
        return cls(tuple(tuple(int(x) for x in r) for r in dm.to_list()), ncols)

    # -- shape ----------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    # -- arithmetic -----------------------------------------------------------

    def to_domain(self) -> DomainMatrix:
        return DM([list(r) for r in self.rows], ZZ)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        if not self.nrows or not other.ncols or not self.ncols:
            return IntMatrix.zeros(self.nrows, other.ncols)
        return IntMatrix.from_domain(self.to_domain() * other.to_domain())

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(k * a for a in r) for r in self.rows), self.ncols)

    def _check_same_shape(self, other: "IntMatrix"):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")

    def matvec(self, v: Sequence[int]) -> Vector:
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} against {self.ncols} columns")
        return tuple(sum(a * b for a, b in zip(r, v) if b) for r in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)), self.nrows) if self.rows else IntMatrix.zeros(self.ncols, 0)

    def det(self) -> int:
        if not self.is_square:
            raise DimensionError(f"determinant of non-square {self.shape} matrix")
        if not self.nrows:
            return 1
        return int(self.to_domain().det())

    def inverse(self) -> "IntMatrix":
        """Integral inverse; raises NotUnimodularError unless det = +-1."""
        d = self.det()
        if d not in (1, -1):
            raise NotUnimodularError(f"determinant {d} is not a unit")
        if not self.nrows:
            return self
        inv = self.to_domain().convert_to(QQ).inv()
        return IntMatrix(tuple(tuple(int(QQ.numer(x)) for x in r) for r in inv.to_list()), self.ncols)

    def is_identity(self) -> bool:
        return self.is_square and self == IntMatrix.identity(self.nrows)

    def mod(self, p: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(a % p for a in r) for r in self.rows), self.ncols)

    def rank_mod(self, p: int) -> int:
        if not self.nrows or not self.ncols:
            return 0
        return self.to_domain().convert_to(GF(p)).rank()

    def rank(self) -> int:
        if not self.nrows or not self.ncols:
            return 0
        return self.to_domain().convert_to(QQ).rank()

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def is_unimodular(m: IntMatrix) -> bool:
    return m.is_square and m.det() in (1, -1)


# =============================================================================
# Smith normal form
# =============================================================================


@dataclass(frozen=True)
class SNFResult:
    """U @ A @ V == D with D diagonal, nonnegative, each entry dividing the next."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D.rows[i][i] for i in range(min(self.D.shape)))

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d)


def snf(a: IntMatrix) -> SNFResult:
    if not a.nrows or not a.ncols:
        return SNFResult(a, IntMatrix.identity(a.nrows), IntMatrix.identity(a.ncols))
    d, u, v = smith_normal_decomp(a.to_domain())
    D, U, V = IntMatrix.from_domain(d), IntMatrix.from_domain(u), IntMatrix.from_domain(v)
    # flip rows of U so the diagonal comes out nonnegative
    negative = [i for i in range(min(D.shape)) if D.rows[i][i] < 0]
    if negative:
        flip = IntMatrix.diag(*[-1 if i in negative else 1 for i in range(D.nrows)])
        U, D = flip @ U, flip @ D
    logger.debug("snf %s -> %s", a.shape, [D.rows[i][i] for i in range(min(D.shape))])
    return SNFResult(D, U, V)


def is_smith_form(res: SNFResult) -> bool:
    d = res.diagonal
    off = any(x for i, r in enumerate(res.D.rows) for j, x in enumerate(r) if i != j)
    if off or any(x < 0 for x in d):
        return False
    for a, b in zip(d, d[1:]):
        if a == 0 and b != 0:
            return False
        if a and b % a:
            return False
    return True


# =============================================================================
# Sublattices
# =============================================================================


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(x, y, g) with x*a + y*b == g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


class Sublattice:
    """Sublattice of Z^ambient with a basis kept in Hermite normal form.

    Pivots are strictly increasing, positive, and every entry above a pivot is
    reduced into [0, pivot). Two sublattices are equal iff their bases are.
    """

    __slots__ = ("ambient", "_rows", "_pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence[int]] = ()):
        self.ambient = ambient
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def _check(self, vec: Sequence[int]):
        if len(vec) != self.ambient:
            raise DimensionError(f"vector of length {len(vec)} in Z^{self.ambient}")

    def __contains__(self, vec: Sequence[int]) -> bool:
        self._check(vec)
        work = list(vec)
        for row, j in zip(self._rows, self._pivots):
            for c in range(j):
                if work[c]:
                    return False
            if work[j] % row[j]:
                return False
            q = work[j] // row[j]
            if q:
                for c in range(j, self.ambient):
                    work[c] -= q * row[c]
        return not any(work)

    def add(self, vec: Sequence[int]) -> bool:
        """Insert a vector; returns True when the lattice grew."""
        self._check(vec)
        if vec in self:
            return False
        work = list(vec)
        while any(work):
            j = next(c for c, x in enumerate(work) if x)
            if j not in self._pivots:
                where = sum(1 for p in self._pivots if p < j)
                self._rows.insert(where, work)
                self._pivots.insert(where, j)
                break
            row = self._rows[self._pivots.index(j)]
            a, b = row[j], work[j]
            if b % a == 0:
                q = b // a
                for c in range(j, self.ambient):
                    work[c] -= q * row[c]
            else:
                x, y, g = xgcd(a, b)
                ag, mbg = a // g, -b // g
                for c in range(j, self.ambient):
                    ra, wb = row[c], work[c]
                    row[c] = x * ra + y * wb
                    work[c] = mbg * ra + ag * wb
        self._normalize()
        return True

    def _normalize(self):
        for i, j in enumerate(self._pivots):
            row = self._rows[i]
            if row[j] < 0:
                self._rows[i] = row = [-x for x in row]
            for k in range(i):
                upper = self._rows[k]
                q = upper[j] // row[j]
                if q:
                    for c in range(j, self.ambient):
                        upper[c] -= q * row[c]

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivots)

    def basis(self) -> tuple[Vector, ...]:
        return tuple(tuple(r) for r in self._rows)

    def basis_matrix(self) -> IntMatrix:
        return IntMatrix(self.basis(), self.ambient)

    def copy(self) -> "Sublattice":
        other = Sublattice(self.ambient)
        other._rows = [list(r) for r in self._rows]
        other._pivots = list(self._pivots)
        return other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Sublattice):
            return NotImplemented
        return self.ambient == other.ambient and self._rows == other._rows

    def __repr__(self):
        return f"Sublattice(ambient={self.ambient}, rank={self.rank})"


def lattice_index(lattice: Sublattice) -> int | None:
    """[Z^r : L], or None when L has lower rank (infinite index)."""
    if lattice.rank < lattice.ambient:
        return None
    if not lattice.ambient:
        return 1
    result = snf(lattice.basis_matrix())
    index = prod(result.diagonal)
    pivot_product = prod(r[j] for r, j in zip(lattice.basis(), lattice.pivots))
    if index != pivot_product:
        raise ArithmeticError(f"snf index {index} disagrees with echelon pivots {pivot_product}")
    return index


def snf_diagonal(lattice: Sublattice) -> tuple[int, ...]:
    if not lattice.rank:
        return ()
    return snf(lattice.basis_matrix()).diagonal


# =============================================================================
# Orbit spans
# =============================================================================


def _checked_actions(dim: int, gens: Sequence[IntMatrix]) -> list[IntMatrix]:
    actions = []
    for g in gens:
        if g.shape != (dim, dim):
            raise DimensionError(f"generator of shape {g.shape} on Z^{dim}")
        actions.append(g)
    actions.extend(g.inverse() for g in gens)
    return actions


def orbit_span(
    seed: Sequence[int],
    gens: Sequence[IntMatrix],
    *,
    pass_limit: int | None = None,
) -> Sublattice:
    """Smallest sublattice containing seed, stable under gens and their inverses.

    Each pass applies every action to every current basis vector; saturation
    stops after a pass that adds nothing.
    """
    dim = len(seed)
    if not any(seed):
        raise ValueError("seed vector must be nonzero")
    limit = pass_limit or get_settings().pass_limit
    actions = _checked_actions(dim, gens)
    lattice = Sublattice(dim, [seed])

    passes = 0
    while True:
        if passes >= limit:
            raise SaturationLimitError(
                f"orbit span not saturated after {passes} passes (rank {lattice.rank})",
                passes=passes,
                rank=lattice.rank,
            )
        passes += 1
        grew = False
        for v in lattice.basis():
            for a in actions:
                if lattice.add(a.matvec(v)):
                    grew = True
        logger.debug("saturation pass %d: rank %d", passes, lattice.rank)
        if not grew:
            break

    logger.info("orbit span saturated in %d passes, rank %d of %d", passes, lattice.rank, dim)
    return lattice


def orbit_span_mod_p(seed: Sequence[int], gens: Sequence[IntMatrix], p: int) -> int:
    """GF(p)-dimension of the smallest gens-stable subspace containing seed."""
    dim = len(seed)
    for g in gens:
        if g.shape != (dim, dim):
            raise DimensionError(f"generator of shape {g.shape} on GF({p})^{dim}")
    reduced = [g.mod(p) for g in gens]
    echelon: dict[int, list[int]] = {}

    def insert(vec: Sequence[int]) -> bool:
        work = [x % p for x in vec]
        for j in sorted(echelon):
            if work[j]:
                row = echelon[j]
                q = work[j]
                work = [(w - q * r) % p for w, r in zip(work, row)]
        lead = next((c for c, x in enumerate(work) if x), None)
        if lead is None:
            return False
        inv = pow(work[lead], -1, p)
        work = [(x * inv) % p for x in work]
        for j, row in echelon.items():
            if row[lead]:
                q = row[lead]
                echelon[j] = [(r - q * w) % p for r, w in zip(row, work)]
        echelon[lead] = work
        return True

    frontier = [tuple(x % p for x in seed)] if insert(seed) else []
    while frontier:
        v = frontier.pop()
        for g in reduced:
            w = g.matvec(v)
            if insert(w):
                frontier.append(tuple(x % p for x in w))
    return len(echelon)


# =============================================================================
# Congruence depth
# =============================================================================


def congruence_depth(m: IntMatrix, p: int, cap: int) -> int:
    """Largest i <= cap with m congruent to the identity mod p**i."""
    if not m.is_square:
        raise DimensionError(f"congruence depth of non-square {m.shape} matrix")
    diff = m - IntMatrix.identity(m.nrows)
    entries = [abs(x) for r in diff.rows for x in r if x]
    if not entries:
        return cap
    return min(cap, min(multiplicity(p, x) for x in entries))
