"""Push map experiments - homology action of point and curve pushes."""
import logging
import random
from typing import Sequence

from ..config import get_settings
from ..errors import PushDataError
from ..models.push import PushDatum, PushKind
from ..models.report import ExperimentReport
from ..tools.intlattice import IntMatrix
from ..tools.surface import (
    HomologyModel,
    closed_surface_model,
    curve_push_matrix,
    pairing_defect,
    point_push_matrix,
    separating_lift_configuration,
)
from .runner import experiment

logger = logging.getLogger(__name__)


def _data_kind(data: Sequence[PushDatum]) -> PushKind:
    kinds = {d.kind for d in data}
    if len(kinds) > 1:
        raise PushDataError("push data mixes point and curve kinds")
    return kinds.pop() if kinds else PushKind.POINT


def push_matrix(model: HomologyModel, data: Sequence[PushDatum]) -> IntMatrix:
    if _data_kind(data) == PushKind.POINT:
        return point_push_matrix(model, data)
    return curve_push_matrix(model, data)


def _is_unipotent(m: IntMatrix) -> bool:
    n = m - IntMatrix.identity(m.nrows)
    return not any(any(r) for r in (n @ n).rows)


def push_act(
    model: HomologyModel,
    data: Sequence[PushDatum],
    expect_identity: bool | None = None,
    label: str = "",
) -> ExperimentReport:
    """
    Homology action of a point or curve push.

    Args:
        model: Homology with its (possibly degenerate) pairing
        data: Push data, all of one kind
        expect_identity: Verify the action is (or is not) trivial
        label: Model name for the report

    Returns:
        Report with the matrix and its pairing defect
    """
    with experiment(
        "push-act",
        model=label or f"rank {model.rank}",
        data=[d.model_dump(mode="json") for d in data],
    ) as report:
        kind = _data_kind(data)
        m = push_matrix(model, data)
        defect = pairing_defect(model, m)
        report.outputs["kind"] = kind.value
        report.outputs["matrix"] = m.to_json()
        report.outputs["identity"] = m.is_identity()
        report.outputs["unipotent"] = _is_unipotent(m)
        report.outputs["preserves_pairing"] = not any(any(r) for r in defect.rows)
        if report.outputs["preserves_pairing"] is False:
            report.outputs["pairing_defect"] = defect.to_json()
            logger.info("push matrix does not preserve the pairing")
        if expect_identity is not None:
            report.check("action is the identity", expect_identity, m.is_identity())
    return report


def _random_vector(rng: random.Random, n: int, bound: int = 3) -> list[int]:
    while True:
        v = [rng.randint(-bound, bound) for _ in range(n)]
        if any(v):
            return v


def push_vanishing_sweep(samples: int = 50, seed: int | None = None) -> ExperimentReport:
    """
    Randomized push configurations on homology of ranks 6 to 10.

    Curve pushes sharing c with d's summing to zero act trivially; point
    pushes with puncture-supported d's are unipotent and compose additively.
    One configuration with nonzero I_gamma is reported without a verdict.
    """
    seed = get_settings().random_seed if seed is None else seed
    with experiment("push-vanishing-sweep", samples=samples, seed=seed) as report:
        rng = random.Random(seed)
        curve_trivial = 0
        point_unipotent = 0
        point_additive = 0
        single_preserving = 0
        single_orthogonal = 0
        single_agreeing = 0

        for _ in range(samples):
            r = rng.randint(6, 10)
            model = closed_surface_model(r // 2, r % 2)
            c = _random_vector(rng, r)
            partial = [_random_vector(rng, r) for _ in range(rng.randint(1, 3))]
            config = separating_lift_configuration(c, partial)
            if curve_push_matrix(model, config).is_identity():
                curve_trivial += 1

            single = [PushDatum(kind=PushKind.CURVE, c=c, d=partial[0], i_gamma=rng.randint(-1, 1))]
            preserved = not any(any(row) for row in pairing_defect(model, curve_push_matrix(model, single)).rows)
            orthogonal = model.pair(c, partial[0]) == 0
            single_preserving += preserved
            single_orthogonal += orthogonal
            single_agreeing += preserved == orthogonal

            punctures = 2 if r % 2 == 0 else 1
            punctured = closed_surface_model((r - punctures) // 2, punctures)
            first, second = _point_data(rng, r, punctures), _point_data(rng, r, punctures)
            m = point_push_matrix(punctured, first + second)
            if _is_unipotent(m):
                point_unipotent += 1
            if m == point_push_matrix(punctured, first) @ point_push_matrix(punctured, second):
                point_additive += 1

        report.outputs["single_curve_pairing_preserved"] = single_preserving
        report.outputs["single_curve_orthogonal"] = single_orthogonal
        report.check("a single curve push preserves the pairing iff i(c, d) = 0", samples, single_agreeing)
        report.check("separating curve configurations act trivially", samples, curve_trivial)
        report.check("point pushes are unipotent", samples, point_unipotent)
        report.check("point pushes compose additively", samples, point_additive)

        model = closed_surface_model(3)
        c = [0, 1, 0, 0, 0, 0]
        twisted = separating_lift_configuration(c, [[1, 0, 0, 0, 0, 0]], i_gamma=1)
        m = curve_push_matrix(model, twisted)
        report.outputs["nonzero_i_gamma"] = {
            "c": c,
            "d": [d.d for d in twisted],
            "i_gamma": 1,
            "identity": m.is_identity(),
            "matrix": m.to_json(),
        }
    return report


def _point_data(rng: random.Random, r: int, punctures: int) -> list[PushDatum]:
    data = []
    for _ in range(rng.randint(1, 3)):
        d = [0] * r
        while not any(d):
            d = [0] * (r - punctures) + [rng.randint(-2, 2) for _ in range(punctures)]
        data.append(PushDatum(kind=PushKind.POINT, c=_random_vector(rng, r), d=d))
    return data
