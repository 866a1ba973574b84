"""
Surface Push Maps at the Homology Level
=======================================

Homology actions of point and curve pushing maps from their class data,
the cyclic generation criterion, and the Johnson class of a curve push.

Pairings are applied as i(a, b) = a^T P b. Degenerate directions of P model
puncture loop classes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from ..errors import DimensionError, PushDataError
from ..models.push import LiftCriterionInput, PushDatum, PushKind
from .extrep import ExtBasis, ExtVector, SymplecticForm, wedge
from .intlattice import IntMatrix, Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyModel:
    """H_1 with a skew-symmetric, possibly degenerate, integer pairing."""

    pairing: IntMatrix
    genus: int | None = None

    def __post_init__(self):
        p = self.pairing
        if not p.is_square or p.transpose() != p.scale(-1):
            raise DimensionError("pairing matrix must be square and skew-symmetric")

    @property
    def rank(self) -> int:
        return self.pairing.nrows

    def pair(self, a: Sequence[int], b: Sequence[int]) -> int:
        return sum(x * y for x, y in zip(a, self.pairing.matvec(b)))

    def unit(self, k: int) -> Vector:
        return tuple(int(i == k) for i in range(self.rank))


def closed_surface_model(g: int, punctures: int = 0) -> HomologyModel:
    """Symplectic block for genus g followed by ``punctures`` degenerate directions."""
    form = SymplecticForm(g).matrix
    n = 2 * g + punctures
    rows = [[0] * n for _ in range(n)]
    for i, row in enumerate(form.rows):
        rows[i][: 2 * g] = list(row)
    return HomologyModel(IntMatrix.from_rows(rows), genus=g)


def _outer(u: Sequence[int], v: Sequence[int]) -> IntMatrix:
    return IntMatrix.from_rows([[a * b for b in v] for a in u])


def _check(model: HomologyModel, data: Sequence[PushDatum], kind: PushKind):
    for datum in data:
        if datum.kind != kind:
            raise PushDataError(f"expected {kind.value} data, got {datum.kind.value}")
        if len(datum.c) != model.rank:
            raise PushDataError(f"vectors of length {len(datum.c)} in a rank-{model.rank} model")


def point_push_matrix(model: HomologyModel, data: Sequence[PushDatum]) -> IntMatrix:
    """a -> a + sum_i i(a, c_i) d_i."""
    _check(model, data, PushKind.POINT)
    m = IntMatrix.identity(model.rank)
    for datum in data:
        m = m + _outer(datum.d, model.pairing.matvec(datum.c))
    return m


def curve_push_matrix(model: HomologyModel, data: Sequence[PushDatum]) -> IntMatrix:
    """a -> a + sum_j i(a, c_j) d_j + i(a, d_j)(c_j + I_j d_j)."""
    _check(model, data, PushKind.CURVE)
    m = IntMatrix.identity(model.rank)
    for datum in data:
        shifted = [x + datum.i_gamma * y for x, y in zip(datum.c, datum.d)]
        m = m + _outer(datum.d, model.pairing.matvec(datum.c))
        m = m + _outer(shifted, model.pairing.matvec(datum.d))
    return m


def pairing_defect(model: HomologyModel, m: IntMatrix) -> IntMatrix:
    """m^T P m - P; zero exactly when m preserves the pairing."""
    return m.transpose() @ model.pairing @ m - model.pairing


def i_gamma_total(local_signs: Sequence[int]) -> int:
    for s in local_signs:
        if s not in (1, -1):
            raise PushDataError(f"local intersection signs are +1 or -1, got {s}")
    return sum(local_signs)


def cyclic_criterion(data: LiftCriterionInput) -> bool:
    """j generates Z/s."""
    return gcd(data.j, data.s) == 1


def separating_lift_configuration(
    c: Sequence[int], partial_ds: Sequence[Sequence[int]], i_gamma: int = 0
) -> list[PushDatum]:
    """Curve data sharing c and I_gamma, with a final d making the d's sum to zero."""
    if not partial_ds:
        raise PushDataError("need at least one d vector")
    closing = [-sum(col) for col in zip(*partial_ds)]
    return [
        PushDatum(kind=PushKind.CURVE, c=list(c), d=list(d), i_gamma=i_gamma)
        for d in [*partial_ds, closing]
    ]


# =============================================================================
# Johnson class of the curve push
# =============================================================================


def johnson_class_curve_push(g: int, j: int, c: Sequence[int]) -> ExtVector:
    """sum_{i<=j} e_i ^ f_i ^ c in Lambda^3 H."""
    if not 1 <= j < g:
        raise PushDataError(f"subsurface genus j={j} must satisfy 1 <= j < {g}")
    if len(c) != 2 * g:
        raise PushDataError(f"class of length {len(c)} in genus {g}")
    if not any(c):
        raise PushDataError("curve class c must be nonzero")
    form = SymplecticForm(g)
    total = ExtVector.zero(ExtBasis(form.dim, 3))
    for i in range(1, j + 1):
        total = total + wedge([form.e(i), form.f(i), c])
    if total.is_zero:
        logger.warning("johnson class vanishes: c lies in the span of the first %d handles", j)
    return total


def johnson_class_contraction(g: int, j: int, c: Sequence[int]) -> Vector:
    """Contraction of the curve-push class by direct expansion: j*c - sum_{i<=j} (c_i e_i + c_(g+i) f_i)."""
    out = [j * x for x in c]
    for i in range(j):
        out[i] -= c[i]
        out[g + i] -= c[g + i]
    return tuple(out)
