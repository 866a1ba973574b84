"""End-to-end experiment reports."""
import json

import pytest

from johnson_sep.experiments import (
    OrbitGroup,
    OrbitModule,
    OrbitSeed,
    claim2_depths,
    congruence_scan,
    deck_normalization,
    experiment,
    frattini_report,
    johnson_depth_report,
    non_faithful,
    orbit_index,
    push_act,
    push_vanishing_sweep,
    rho_report,
    snf_report,
    verify_claim1,
)
from johnson_sep.errors import PreconditionError
from johnson_sep.experiments.orbits import build_seed
from johnson_sep.models import PushDatum, PushKind, QuotientSpec, ReportStatus, load_quotient_spec
from johnson_sep.services import render_report, write_report_json
from johnson_sep.tools.freegroup import commutator, conjugation_move, generator, identity_automorphism, phi_automorphism
from johnson_sep.tools.intlattice import IntMatrix
from johnson_sep.tools.surface import closed_surface_model, separating_lift_configuration


def verdicts(report):
    return {v.name: v.passed for v in report.verdicts}


def test_experiment_runner_statuses():
    with experiment("demo", x=1) as report:
        report.check("one equals one", 1, 1)
    assert report.status == ReportStatus.PASS
    assert report.inputs == {"x": 1}

    with experiment("demo") as report:
        report.check("one equals two", 1, 2)
    assert report.status == ReportStatus.FAIL

    with experiment("demo") as report:
        raise PreconditionError("missing")
    assert report.status == ReportStatus.ERROR
    assert report.message == "PreconditionError: missing"


def test_canonical_json_excludes_timing():
    with experiment("demo", b=2, a=1) as report:
        report.outputs["value"] = [1, 2]
    data = json.loads(report.canonical_json())
    assert "duration_seconds" not in data
    assert data["inputs"] == {"a": 1, "b": 2}
    assert data["status"] == "pass"


def test_verify_claim1_small_covers():
    report = verify_claim1(QuotientSpec.abelian_mod_q(3, 2), 2)
    assert report.passed
    assert report.outputs["h1_rank"] == 17
    assert report.outputs["identity"] is True

    report = verify_claim1(QuotientSpec.abelian_mod_q(3, 3), 3)
    assert report.passed
    assert report.outputs["h1_rank"] == 55


def test_verify_claim1_precondition():
    report = verify_claim1(QuotientSpec.abelian_mod_q(3, 2), 1)
    assert report.status == ReportStatus.ERROR
    assert report.message.startswith("PreconditionError")


def test_johnson_depth_reports():
    report = johnson_depth_report(phi_automorphism(3, 2), 4, expected=1)
    assert report.passed
    assert report.outputs["tau"] == {"a1*(a2^a3)": 4}

    report = johnson_depth_report(identity_automorphism(3), 4)
    assert report.outputs["depth_text"] == ">=4"

    report = johnson_depth_report(identity_automorphism(3), 4, expected=4)
    assert report.status == ReportStatus.FAIL

    a2, a3 = generator(3, 2), generator(3, 3)
    report = johnson_depth_report(commutator(a2, a3), 2, expected=1)
    assert report.passed
    assert report.outputs["expansion"] == "1 + X2X3 - X3X2"

    assert johnson_depth_report(conjugation_move(3, 1, 2), 4, expected=1).passed


def test_claim2_depths():
    report = claim2_depths()
    assert report.passed
    assert report.outputs["phi"]["3"]["oracle"] == 9


def test_non_faithful():
    report = non_faithful()
    assert report.passed
    assert report.outputs["tau"] == {"a1*(a2^a3)": 144}
    assert report.outputs["tested"] == ["AbelianModQ(3,2)", "AbelianModQ(3,3)", "Quaternion(3)"]
    assert report.outputs["skipped"] == []


def test_non_faithful_skips_covers_missing_the_powers():
    report = non_faithful(2, [QuotientSpec.abelian_mod_q(3, 2), QuotientSpec.abelian_mod_q(3, 3)])
    assert report.passed
    assert report.outputs["skipped"] == ["AbelianModQ(3,3)"]


def test_frattini_report():
    report = frattini_report()
    assert report.passed
    assert report.outputs["UT(3,2)"]["checked"] == 128
    assert report.outputs["UT(3,3)"]["checked"] == 1 + 26 + 325 + 2600 + 14950
    assert report.outputs["UT(4,2)"]["checked"] == 2017


def test_rho_report():
    report = rho_report(QuotientSpec.abelian_mod_q(3, 2), conjugation_move(3, 1, 2))
    assert report.passed
    assert report.outputs["identity"] is False
    assert report.outputs["determinant"] in (1, -1)


def test_rho_report_on_non_invariant_kernel():
    report = rho_report(QuotientSpec.quaternion(3), conjugation_move(3, 1, 2))
    assert report.status == ReportStatus.ERROR
    assert report.message.startswith("NotInvariantError")


def test_deck_normalization():
    report = deck_normalization(QuotientSpec.abelian_mod_q(2, 2), samples=100)
    assert report.passed
    assert report.outputs["deck_order"] == 4
    assert report.outputs["non_normalizing_witness"] is not None


def test_congruence_scan_samples():
    report = congruence_scan(QuotientSpec.abelian_mod_q(3, 2), 2, 6, samples=10)
    assert report.passed, report.verdicts
    checks = verdicts(report)
    assert checks["some IA-generator has depth 0"]
    assert checks["fold-2 rho matches direct computation"]
    assert checks["fold-5 commutators act trivially mod 2"]
    assert set(report.outputs["profile"]) == {"2", "5"}
    assert len(report.outputs["profile"]["2"]["depths"]) == 10


def test_congruence_scan_on_unlabeled_elementary_two_cover(tmp_path):
    path = tmp_path / "z2cubed.json"
    path.write_text(json.dumps({"rank": 3, "degree": 8, "perms": QuotientSpec.abelian_mod_q(3, 2).perms}))
    spec = load_quotient_spec(path)
    assert spec.label == ""
    report = congruence_scan(spec, 2, 6, samples=3, folds=[5])
    assert report.passed, report.verdicts
    assert verdicts(report)["fold-5 commutators act trivially mod 2"]


def test_congruence_scan_mod_3_has_no_elementary_two_verdict():
    report = congruence_scan(QuotientSpec.abelian_mod_q(2, 3), 3, 4, samples=2, folds=[4])
    assert "fold-4 commutators act trivially mod 2" not in verdicts(report)


def test_congruence_scan_single_element():
    report = congruence_scan(QuotientSpec.abelian_mod_q(3, 2), 2, 6, element=phi_automorphism(3, 2), expect_min=1)
    assert report.passed
    assert report.outputs["congruence_depth"] == 6
    assert report.outputs["johnson_depth"] == "1"


def test_congruence_scan_is_deterministic():
    spec = QuotientSpec.abelian_mod_q(3, 2)
    first = congruence_scan(spec, 2, 6, samples=3, folds=[2], seed=7)
    second = congruence_scan(spec, 2, 6, samples=3, folds=[2], seed=7)
    assert first.canonical_json() == second.canonical_json()


def test_orbit_johnson_class_has_full_rank():
    report = orbit_index(OrbitGroup.SP, OrbitModule.WEDGE3, OrbitSeed.JOHNSON_CLASS, 3)
    assert report.passed
    assert report.outputs["rank"] == 20
    assert report.outputs["index"] == 1
    assert report.outputs["snf_diagonal"] == [1] * 20
    assert report.outputs["mod_p_dim"] == 20


def test_orbit_tau_phi_spans_the_contraction_kernel():
    report = orbit_index(OrbitGroup.SL, OrbitModule.HOM, OrbitSeed.TAU_PHI, 3)
    assert report.passed
    assert report.outputs["rank"] == 6
    assert report.outputs["index"] is None
    assert report.outputs["contraction_kernel_rank"] == 6
    assert report.outputs["in_contraction_kernel"] is True
    assert report.outputs["index_in_contraction_kernel"] == report.outputs["saturation_index"]


def test_orbit_embedded_h():
    report = orbit_index(OrbitGroup.SP, OrbitModule.WEDGE3, OrbitSeed.EMBEDDED_H, 3)
    assert report.passed
    assert report.outputs["rank"] == 6
    assert report.outputs["index_in_embedded_h"] == 1
    assert report.outputs["contraction_of_embedding"] == 2


def test_orbit_vector_seed_and_pass_limit():
    report = orbit_index(OrbitGroup.SL, OrbitModule.WEDGE2, OrbitSeed.VECTOR, 3, vector=[1, 0, 0])
    assert report.passed
    assert report.outputs["index"] == 1

    report = orbit_index(OrbitGroup.SL, OrbitModule.WEDGE2, OrbitSeed.VECTOR, 3, vector=[1, 0, 0], pass_limit=1)
    assert report.status == ReportStatus.INCONCLUSIVE
    assert report.outputs["saturation"]["passes"] == 1


def test_orbit_seed_errors():
    report = orbit_index(OrbitGroup.SL, OrbitModule.WEDGE2, OrbitSeed.VECTOR, 3, vector=[0, 0, 0])
    assert report.status == ReportStatus.ERROR
    report = orbit_index(OrbitGroup.SL, OrbitModule.WEDGE3, OrbitSeed.TAU_PHI, 3)
    assert report.status == ReportStatus.ERROR
    report = orbit_index(OrbitGroup.SP, OrbitModule.WEDGE3, OrbitSeed.JOHNSON_CLASS, 3, c=[1, 0, 0, 0, 0, 0])
    assert report.status == ReportStatus.ERROR


def test_build_seed_defaults():
    seed = build_seed(OrbitSeed.JOHNSON_CLASS, OrbitGroup.SP, OrbitModule.WEDGE3, 3)
    assert len(seed) == 20
    assert sum(abs(x) for x in seed) == 1
    tau_seed = build_seed(OrbitSeed.TAU_PHI, OrbitGroup.SL, OrbitModule.HOM, 3, e=3)
    assert sorted(tau_seed) == [0] * 8 + [9]


def test_snf_report():
    report = snf_report(IntMatrix.from_rows([[2, 1], [0, 3]]), verbose=True)
    assert report.passed
    assert report.outputs["diagonal"] == [1, 6]
    assert "U" in report.outputs and "V" in report.outputs
    assert "U" not in snf_report(IntMatrix.diag(2, 4)).outputs


def test_push_act_reports():
    model = closed_surface_model(3)
    config = separating_lift_configuration([0, 1, 0, 0, 0, 0], [[1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])
    report = push_act(model, config, expect_identity=True)
    assert report.passed
    assert report.outputs["kind"] == "curve"

    single = [PushDatum(kind=PushKind.CURVE, c=[0, 1, 0, 0, 0, 0], d=[1, 0, 0, 0, 0, 0])]
    report = push_act(model, single, expect_identity=False)
    assert report.passed

    punctured = closed_surface_model(2, 1)
    point = [PushDatum(kind=PushKind.POINT, c=[1, 0, 0, 0, 0], d=[0, 0, 0, 0, 1])]
    report = push_act(punctured, point)
    assert report.outputs["unipotent"] is True


def test_push_act_rejects_mixed_kinds():
    model = closed_surface_model(2)
    mixed = [
        PushDatum(kind=PushKind.CURVE, c=[1, 0, 0, 0], d=[0, 1, 0, 0]),
        PushDatum(kind=PushKind.POINT, c=[1, 0, 0, 0], d=[0, 1, 0, 0]),
    ]
    report = push_act(model, mixed)
    assert report.status == ReportStatus.ERROR
    assert report.message.startswith("PushDataError")


def test_push_vanishing_sweep():
    report = push_vanishing_sweep(samples=50)
    assert report.passed
    assert verdicts(report)["a single curve push preserves the pairing iff i(c, d) = 0"]
    assert report.outputs["single_curve_pairing_preserved"] == report.outputs["single_curve_orthogonal"]
    assert report.outputs["nonzero_i_gamma"]["identity"] is False


@pytest.mark.parametrize("status", [ReportStatus.PASS, ReportStatus.FAIL])
def test_report_writer(tmp_path, status):
    with experiment("demo") as report:
        report.check("check", 1, 1 if status == ReportStatus.PASS else 2)
        report.outputs["matrix"] = [[0] * 40 for _ in range(3)]
    path = write_report_json(report, tmp_path / "nested" / "report.json")
    assert path.read_text() == report.canonical_json() + "\n"
    assert json.loads(path.read_text())["status"] == status.value
    render_report(report)
