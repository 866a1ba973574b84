"""
Magnus Expansions and Johnson Depth
===================================

Truncated Magnus expansions a_i -> 1 + X_i, lower central series depth of
words, Johnson filtration depth of automorphisms, the degree-2 Johnson
homomorphism in Hom(H, Lambda^2 H) coordinates, and a Frattini-style
generation check on unitriangular groups over Z/p.

Series are sparse dicts keyed by index tuples; the empty tuple is the
constant term.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..config import get_settings
from ..errors import DegreeCapError, NotInTorelliError, NotUnitriangularError, RankError
from .extrep import hom_basis
from .freegroup import Automorphism, Word, apply, generator, invert, multiply
from .intlattice import IntMatrix

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


def check_degree_cap(cap: int, minimum: int = 1) -> int:
    limit = get_settings().max_degree_cap
    if not minimum <= cap <= limit:
        raise DegreeCapError(f"degree cap {cap} outside {minimum}..{limit}")
    return cap


# =============================================================================
# Truncated series
# =============================================================================


@dataclass(frozen=True)
class TruncatedSeries:
    """Noncommutative integer polynomial in X_1..X_rank, truncated at degree_cap."""

    rank: int
    degree_cap: int
    terms: dict[Monomial, int] = field(default_factory=dict, hash=False)

    def __post_init__(self):
        clean = {}
        for mono, coeff in self.terms.items():
            if len(mono) > self.degree_cap or not coeff:
                continue
            if any(not 1 <= x <= self.rank for x in mono):
                raise RankError(f"monomial {mono} outside rank {self.rank}")
            clean[tuple(mono)] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, rank: int, degree_cap: int) -> "TruncatedSeries":
        return cls(rank, degree_cap, {(): 1})

    def coefficient(self, mono: Sequence[int]) -> int:
        return self.terms.get(tuple(mono), 0)

    def homogeneous(self, degree: int) -> dict[Monomial, int]:
        return {m: c for m, c in self.terms.items() if len(m) == degree}

    def min_degree(self) -> int | None:
        """Smallest degree of a nonconstant term, or None if there is none."""
        degrees = [len(m) for m in self.terms if m]
        return min(degrees) if degrees else None

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")
        cap = min(self.degree_cap, other.degree_cap)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if len(m1) + len(m2) <= cap:
                    key = m1 + m2
                    out[key] = out.get(key, 0) + c1 * c2
        return TruncatedSeries(self.rank, cap, out)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return TruncatedSeries(self.rank, min(self.degree_cap, other.degree_cap), out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            coeff = self.terms[mono]
            body = "".join(f"X{i}" for i in mono)
            mag = abs(coeff)
            if not mono:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}·{body}"
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts)


def _times_letter(terms: dict[Monomial, int], code: int, cap: int) -> dict[Monomial, int]:
    i = abs(code)
    out = dict(terms)
    for mono, coeff in terms.items():
        room = cap - len(mono)
        if code > 0:
            if room >= 1:
                key = mono + (i,)
                out[key] = out.get(key, 0) + coeff
        else:
            # (1 + X_i)^-1 = 1 - X_i + X_i^2 - ...
            for t in range(1, room + 1):
                key = mono + (i,) * t
                out[key] = out.get(key, 0) + (-1) ** t * coeff
    return {m: c for m, c in out.items() if c}


def expand(w: Word, cap: int) -> TruncatedSeries:
    """Magnus expansion of w truncated at degree ``cap``."""
    check_degree_cap(cap)
    terms: dict[Monomial, int] = {(): 1}
    for code in w.letters:
        terms = _times_letter(terms, code, cap)
    return TruncatedSeries(w.rank, cap, terms)


# =============================================================================
# Depth
# =============================================================================


@dataclass(frozen=True, order=True)
class Depth:
    """Filtration depth; ``capped`` means at least ``value``."""

    value: int
    capped: bool = False

    def at_least(self, k: int) -> bool:
        return self.value >= k

    def __str__(self):
        return f">={self.value}" if self.capped else str(self.value)

    def to_json(self) -> dict:
        return {"value": self.value, "at_least_cap": self.capped}


def lcs_depth(w: Word, cap: int | None = None) -> Depth:
    """k with w in L_k (L_1 = [F, F]) read off the lowest nonconstant degree."""
    cap = check_degree_cap(cap or get_settings().degree_cap, minimum=2)
    lowest = expand(w, cap).min_degree()
    if lowest is None:
        return Depth(cap, capped=True)
    return Depth(lowest - 1)


def displacement(f: Automorphism, i: int) -> Word:
    """a_i^-1 f(a_i)."""
    a = generator(f.rank, i)
    return multiply(invert(a), apply(f, a))


def johnson_depth(f: Automorphism, cap: int | None = None) -> Depth:
    """Minimum over generators of lcs_depth(a_i^-1 f(a_i))."""
    cap = check_degree_cap(cap or get_settings().degree_cap, minimum=2)
    depth = min(lcs_depth(displacement(f, i), cap) for i in range(1, f.rank + 1))
    logger.debug("johnson depth of %s: %s", f.name or "<map>", depth)
    return depth


# =============================================================================
# Johnson homomorphism
# =============================================================================


@dataclass(frozen=True)
class HomVector:
    """Element of Hom(H, Lambda^2 H) on the basis (i, j^k), i-major, j < k."""

    rank: int
    coords: tuple[int, ...]

    def __post_init__(self):
        expected = len(hom_basis(self.rank))
        if len(self.coords) != expected:
            raise RankError(f"Hom vector needs {expected} coordinates, got {len(self.coords)}")

    @classmethod
    def zero(cls, rank: int) -> "HomVector":
        return cls(rank, (0,) * len(hom_basis(rank)))

    def coordinate(self, i: int, j: int, k: int) -> int:
        sign = 1
        if j > k:
            j, k, sign = k, j, -1
        if j == k:
            return 0
        return sign * self.coords[hom_basis(self.rank).index((i, (j, k)))]

    def __add__(self, other: "HomVector") -> "HomVector":
        if self.rank != other.rank:
            raise RankError(f"rank mismatch: {self.rank} vs {other.rank}")
        return HomVector(self.rank, tuple(a + b for a, b in zip(self.coords, other.coords)))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def nonzero_terms(self) -> dict[str, int]:
        return {
            f"a{i}*(a{j}^a{k})": c
            for (i, (j, k)), c in zip(hom_basis(self.rank), self.coords)
            if c
        }


def tau(f: Automorphism) -> HomVector:
    """Degree-2 Johnson class: coefficient of X_j X_k in a_i^-1 f(a_i), j < k."""
    coords = []
    for i in range(1, f.rank + 1):
        series = expand(displacement(f, i), 2)
        if series.homogeneous(1):
            raise NotInTorelliError(f"{f.name or 'automorphism'} moves a{i} in homology")
        for j, k in itertools.combinations(range(1, f.rank + 1), 2):
            coords.append(series.coefficient((j, k)))
    return HomVector(f.rank, tuple(coords))


# =============================================================================
# Unitriangular groups mod p
# =============================================================================


@dataclass(frozen=True)
class UnitriangularElement:
    """Upper unitriangular k x k matrix over Z/p."""

    size: int
    modulus: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) % self.modulus for x in r) for r in self.entries)
        if len(rows) != self.size or any(len(r) != self.size for r in rows):
            raise NotUnitriangularError(f"expected a {self.size}x{self.size} matrix")
        for i, r in enumerate(rows):
            if r[i] != 1 or any(r[j] for j in range(i)):
                raise NotUnitriangularError(f"row {i} is not unitriangular mod {self.modulus}")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, k: int, p: int) -> "UnitriangularElement":
        return cls(k, p, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))

    @classmethod
    def elementary(cls, k: int, p: int, i: int, j: int, a: int = 1) -> "UnitriangularElement":
        """I + a*E_ij, 1-based, i < j."""
        if not 1 <= i < j <= k:
            raise NotUnitriangularError(f"E_{i}{j} is not strictly upper triangular")
        arr = np.eye(k, dtype=np.int64)
        arr[i - 1, j - 1] = a
        return cls.from_array(arr, p)

    @classmethod
    def from_array(cls, arr: np.ndarray, p: int) -> "UnitriangularElement":
        return cls(arr.shape[0], p, tuple(tuple(int(x) for x in r) for r in arr))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def __mul__(self, other: "UnitriangularElement") -> "UnitriangularElement":
        return UnitriangularElement.from_array((self.array @ other.array) % self.modulus, self.modulus)

    def abelianized(self) -> tuple[int, ...]:
        """Superdiagonal, the image in the abelianization (Z/p)^(k-1)."""
        return tuple(self.entries[i][i + 1] for i in range(self.size - 1))


def ut_order(k: int, p: int) -> int:
    return p ** (k * (k - 1) // 2)


def ut_elements(k: int, p: int) -> list[UnitriangularElement]:
    """Every element of UT(k, p)."""
    slots = [(i, j) for i in range(k) for j in range(i + 1, k)]
    elements = []
    for values in itertools.product(range(p), repeat=len(slots)):
        arr = np.eye(k, dtype=np.int64)
        for (i, j), v in zip(slots, values):
            arr[i, j] = v
        elements.append(UnitriangularElement.from_array(arr, p))
    return elements


def _closure_size(k: int, p: int, gens: Sequence[UnitriangularElement], limit: int) -> int:
    identity = np.eye(k, dtype=np.int64)
    seen = {identity.tobytes()}
    frontier = [identity]
    arrays = [g.array for g in gens]
    while frontier and len(seen) < limit:
        nxt = []
        for x in frontier:
            for g in arrays:
                y = (x @ g) % p
                key = y.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def frattini_index_check(k: int, p: int, subgroup_gens: Sequence[UnitriangularElement]) -> bool:
    """True iff the generated subgroup is all of UT(k, p)."""
    for g in subgroup_gens:
        if g.size != k or g.modulus != p:
            raise NotUnitriangularError(f"element of UT({g.size},{g.modulus}) in UT({k},{p}) check")
    order = ut_order(k, p)
    return _closure_size(k, p, subgroup_gens, order + 1) == order


def abelianized_images_span(k: int, p: int, gens: Sequence[UnitriangularElement]) -> bool:
    """Whether the superdiagonals of gens span (Z/p)^(k-1)."""
    if k == 1:
        return True
    if not gens:
        return False
    return IntMatrix.from_rows([g.abelianized() for g in gens]).rank_mod(p) == k - 1


@dataclass
class SweepResult:
    k: int
    p: int
    checked: int = 0
    spanning: int = 0
    generating: int = 0
    mismatches: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def agreed(self) -> bool:
        return not self.mismatches


def frattini_sweep(k: int, p: int, max_size: int | None = None) -> SweepResult:
    """Compare generation with abelianized spanning over subsets of UT(k, p).

    Subsets are drawn from the non-identity elements, up to ``max_size``
    elements each (all subsets when None).
    """
    pool = [g for g in ut_elements(k, p) if g != UnitriangularElement.identity(k, p)]
    top = len(pool) if max_size is None else min(max_size, len(pool))
    result = SweepResult(k, p)
    for size in range(top + 1):
        for combo in itertools.combinations(range(len(pool)), size):
            gens = [pool[i] for i in combo]
            spans = abelianized_images_span(k, p, gens)
            generates = frattini_index_check(k, p, gens)
            result.checked += 1
            result.spanning += spans
            result.generating += generates
            if spans != generates:
                result.mismatches.append(combo)
    logger.info(
        "UT(%d,%d) sweep: %d subsets, %d spanning, %d mismatches",
        k, p, result.checked, result.spanning, len(result.mismatches),
    )
    return result


def heisenberg_coefficient(w: Word, j: int, k: int) -> int:
    """Coefficient of X_j X_k in the Magnus expansion of w, j != k.

    Read off the (1, 3) entry of w under a_j -> I + E_12, a_k -> I + E_23,
    every other generator -> I. Independent of ``expand``.
    """
    if j == k:
        raise RankError("heisenberg coefficient needs distinct indices")
    images = {
        j: IntMatrix.elementary(3, 1, 2),
        k: IntMatrix.elementary(3, 2, 3),
    }
    inverses = {i: m.inverse() for i, m in images.items()}
    acc = IntMatrix.identity(3)
    for code in w.letters:
        i = abs(code)
        if i in images:
            acc = acc @ (images[i] if code > 0 else inverses[i])
    return acc.rows[0][2]
