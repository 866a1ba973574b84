"""Point and curve pushes on homology, and the Johnson class of a curve push."""
import pytest
from pydantic import ValidationError

from johnson_sep.errors import DimensionError, PushDataError
from johnson_sep.models import LiftCriterionInput, PushDatum, PushKind
from johnson_sep.tools.extrep import SymplecticForm, contraction, wedge
from johnson_sep.tools.intlattice import IntMatrix
from johnson_sep.tools.surface import (
    HomologyModel,
    closed_surface_model,
    curve_push_matrix,
    cyclic_criterion,
    i_gamma_total,
    johnson_class_contraction,
    johnson_class_curve_push,
    pairing_defect,
    point_push_matrix,
    separating_lift_configuration,
)


def point(c, d):
    return PushDatum(kind=PushKind.POINT, c=c, d=d)


def curve(c, d, i_gamma=0):
    return PushDatum(kind=PushKind.CURVE, c=c, d=d, i_gamma=i_gamma)


def test_closed_surface_model():
    model = closed_surface_model(2, 1)
    assert model.rank == 5
    assert model.pair(model.unit(0), model.unit(2)) == 1
    assert model.pair(model.unit(4), model.unit(0)) == 0
    with pytest.raises(DimensionError):
        HomologyModel(IntMatrix.from_rows([[0, 1], [1, 0]]))


def test_point_push_examples():
    model = closed_surface_model(1, 1)
    assert point_push_matrix(model, []).is_identity()
    m = point_push_matrix(model, [point([1, 0, 0], [0, 0, 1])])
    assert m.matvec((0, 1, 0)) == (0, 1, -1)
    assert m.matvec((1, 0, 0)) == (1, 0, 0)
    opposite = [point([1, 0, 0], [0, 0, 1]), point([-1, 0, 0], [0, 0, 1])]
    assert point_push_matrix(model, opposite).is_identity()


def test_curve_push_examples():
    model = closed_surface_model(2)
    assert curve_push_matrix(model, [curve([1, 0, 0, 0], [0, 0, 0, 0])]).is_identity()
    m = curve_push_matrix(model, [curve([0, 1, 0, 0], [1, 0, 0, 0], i_gamma=1)])
    assert m.matvec((0, 0, 1, 0)) == (-1, -1, 1, 0)


def test_separating_configurations_act_trivially(rng):
    for _ in range(50):
        g = rng.randint(3, 5)
        model = closed_surface_model(g)
        c = [rng.randint(-3, 3) for _ in range(2 * g)]
        partial = [[rng.randint(-3, 3) for _ in range(2 * g)] for _ in range(rng.randint(1, 3))]
        config = separating_lift_configuration(c, partial)
        assert [sum(col) for col in zip(*(d.d for d in config))] == [0] * (2 * g)
        assert curve_push_matrix(model, config).is_identity()


def test_nonzero_i_gamma_breaks_triviality():
    model = closed_surface_model(3)
    config = separating_lift_configuration([0, 1, 0, 0, 0, 0], [[1, 0, 0, 0, 0, 0]], i_gamma=1)
    assert not curve_push_matrix(model, config).is_identity()


def test_pushes_reject_wrong_data():
    model = closed_surface_model(2)
    with pytest.raises(PushDataError):
        point_push_matrix(model, [curve([1, 0, 0, 0], [0, 1, 0, 0])])
    with pytest.raises(PushDataError):
        curve_push_matrix(model, [curve([1, 0, 0], [0, 1, 0])])
    with pytest.raises(PushDataError):
        separating_lift_configuration([1, 0, 0, 0], [])


def test_symplectic_pushes_have_no_pairing_defect():
    model = closed_surface_model(2)
    t = SymplecticForm(2).transvection((1, 0, 0, 0))
    assert not any(any(r) for r in pairing_defect(model, t).rows)


def test_single_curve_push_preserves_the_pairing_iff_c_and_d_are_orthogonal(rng):
    model = closed_surface_model(2)
    twisted = curve_push_matrix(model, [curve([1, 0, 0, 0], [0, 0, 1, 0], i_gamma=1)])
    assert any(any(r) for r in pairing_defect(model, twisted).rows)
    flat = curve_push_matrix(model, [curve([1, 0, 0, 0], [0, 1, 0, 0], i_gamma=1)])
    assert not any(any(r) for r in pairing_defect(model, flat).rows)

    for _ in range(50):
        model = closed_surface_model(rng.randint(2, 4), rng.randint(0, 2))
        c = [rng.randint(-2, 2) for _ in range(model.rank)]
        d = [rng.randint(-2, 2) for _ in range(model.rank)]
        m = curve_push_matrix(model, [curve(c, d, i_gamma=rng.randint(-1, 1))])
        preserved = not any(any(r) for r in pairing_defect(model, m).rows)
        assert preserved == (model.pair(c, d) == 0)


def test_i_gamma_total():
    assert i_gamma_total([1, 1, -1]) == 1
    assert i_gamma_total([]) == 0
    with pytest.raises(PushDataError):
        i_gamma_total([1, 2])


def test_push_datum_validation():
    with pytest.raises(PushDataError):
        PushDatum(kind=PushKind.POINT, c=[1, 0], d=[0, 1], i_gamma=1)
    with pytest.raises(PushDataError):
        PushDatum(kind=PushKind.CURVE, c=[1, 0], d=[0, 1, 0])


def test_cyclic_criterion():
    assert cyclic_criterion(LiftCriterionInput(s=5, j=2))
    assert not cyclic_criterion(LiftCriterionInput(s=4, j=2))
    assert not cyclic_criterion(LiftCriterionInput(s=4, j=0))
    assert cyclic_criterion(LiftCriterionInput(s=1, j=0))
    with pytest.raises(ValidationError):
        LiftCriterionInput(s=4, j=4)


def test_johnson_class_examples():
    form = SymplecticForm(3)
    v = johnson_class_curve_push(3, 1, form.e(2))
    assert v == wedge([form.e(1), form.f(1), form.e(2)])
    assert v.terms(3) == {"e1^e2^f1": -1}
    w = johnson_class_curve_push(3, 2, form.e(3))
    expected = wedge([form.e(1), form.f(1), form.e(3)]) + wedge([form.e(2), form.f(2), form.e(3)])
    assert w == expected
    assert johnson_class_curve_push(3, 1, form.f(1)).is_zero


def test_johnson_class_validation():
    with pytest.raises(PushDataError):
        johnson_class_curve_push(3, 3, (1, 0, 0, 0, 0, 0))
    with pytest.raises(PushDataError):
        johnson_class_curve_push(3, 1, (0,) * 6)
    with pytest.raises(PushDataError):
        johnson_class_curve_push(3, 1, (1, 0, 0))


@pytest.mark.parametrize("genus", [3, 4])
def test_johnson_class_contraction(genus, rng):
    form = SymplecticForm(genus)
    for _ in range(20):
        j = rng.randint(1, genus - 1)
        c = [rng.randint(-3, 3) for _ in range(form.dim)]
        if not any(c):
            continue
        assert contraction(johnson_class_curve_push(genus, j, c), form) == johnson_class_contraction(genus, j, c)
        outside = any(c[i] for i in range(j, genus)) or any(c[genus + i] for i in range(j, genus))
        if outside:
            assert not johnson_class_curve_push(genus, j, c).is_zero
