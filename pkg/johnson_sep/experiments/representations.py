"""Homological representation experiments - rho, deck normalization, congruence depth."""
import itertools
import logging
import random
from typing import Sequence

from ..config import get_settings
from ..models.quotient import QuotientSpec
from ..models.report import ExperimentReport
from ..tools.cover import CoverGraph, build_cover, deck_matrices, normalizes_deck, rho, vertex_product
from ..tools.freegroup import Automorphism, ia_generators, nested_commutator, random_nielsen_product
from ..tools.intlattice import IntMatrix, congruence_depth
from ..tools.nilpotent import johnson_depth
from .runner import experiment

logger = logging.getLogger(__name__)


def rho_report(spec: QuotientSpec, f: Automorphism) -> ExperimentReport:
    """
    Matrix of f on H_1(K).

    Args:
        spec: Regular quotient defining K
        f: Automorphism preserving K

    Returns:
        Report with the matrix, its determinant and the deck normalization check
    """
    with experiment("rho", spec=spec.label or "custom", automorphism=f.name or "custom") as report:
        cover = build_cover(spec)
        m = rho(cover, f)
        report.outputs["h1_rank"] = cover.h1_rank
        report.outputs["determinant"] = m.det()
        report.outputs["identity"] = m.is_identity()
        report.outputs["matrix"] = m.to_json()
        report.check("determinant is a unit", True, m.det() in (1, -1))
        if cover.degree <= get_settings().deck_enumeration_limit:
            report.check("rho normalizes the deck group", True, normalizes_deck(cover, m))
    return report


def _non_normalizing_witness(
    cover: CoverGraph, decks: list[IntMatrix], rng: random.Random, attempts: int = 200
) -> IntMatrix | None:
    r = cover.h1_rank
    candidates = (
        IntMatrix.elementary(r, i, j) for i in range(1, r + 1) for j in range(1, r + 1) if i != j
    )
    for m in candidates:
        if not normalizes_deck(cover, m, decks):
            return m
    for _ in range(attempts):
        m = IntMatrix.identity(r)
        for _ in range(4):
            i, j = rng.sample(range(1, r + 1), 2)
            m = m @ IntMatrix.elementary(r, i, j, rng.choice((-1, 1)))
        if not normalizes_deck(cover, m, decks):
            return m
    return None


def deck_normalization(
    spec: QuotientSpec, samples: int = 100, length: int = 6, seed: int | None = None
) -> ExperimentReport:
    """
    rho of random Nielsen products normalizes the deck group, and some
    unimodular matrix does not.
    """
    seed = get_settings().random_seed if seed is None else seed
    with experiment(
        "deck", spec=spec.label or "custom", samples=samples, length=length, seed=seed
    ) as report:
        rng = random.Random(seed)
        cover = build_cover(spec)
        decks = deck_matrices(cover)
        distinct = len(set(decks))
        report.outputs["h1_rank"] = cover.h1_rank
        report.outputs["deck_order"] = distinct
        report.check("deck matrices are distinct", cover.degree, distinct)
        report.check("identity element acts trivially", True, decks[0].is_identity())

        pairs = list(itertools.product(range(cover.degree), repeat=2))
        if len(pairs) > 256:
            pairs = rng.sample(pairs, 256)
        products_ok = all(
            decks[q] @ decks[q2] == decks[vertex_product(cover, q, q2)] for q, q2 in pairs
        )
        report.check("deck matrices multiply like the group", True, products_ok)

        normalizing = 0
        for _ in range(samples):
            f = random_nielsen_product(cover.rank, length, rng)
            if normalizes_deck(cover, rho(cover, f), decks):
                normalizing += 1
        report.outputs["normalizing"] = normalizing
        report.check("every sampled rho normalizes the deck group", samples, normalizing)

        witness = _non_normalizing_witness(cover, decks, rng)
        report.outputs["non_normalizing_witness"] = witness.to_json() if witness else None
        report.check("a non-normalizing matrix exists", True, witness is not None)
    return report


def _matrix_commutator(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return a @ b @ a.inverse() @ b.inverse()


def congruence_scan(
    spec: QuotientSpec,
    p: int,
    cap: int,
    *,
    element: Automorphism | None = None,
    expect_min: int | None = None,
    samples: int = 10,
    folds: Sequence[int] | None = None,
    seed: int | None = None,
    direct_fold_limit: int = 2,
    johnson_fold_limit: int = 3,
) -> ExperimentReport:
    """
    Congruence depth of rho on IA-elements.

    With ``element`` the single automorphism is measured. Otherwise every
    IA-generator is measured, then ``samples`` left-normed commutators of
    random IA-generators per fold. rho of a commutator is formed from the
    generators' matrices; folds up to ``direct_fold_limit`` are recomputed
    directly as a cross-check.

    Args:
        spec: Regular quotient defining K
        p: Prime for the congruence filtration
        cap: Largest depth reported
        element: Single automorphism to measure
        expect_min: Lower bound to verify for ``element``
        samples: Commutators per fold
        folds: Commutator folds to sample (default 2 and rank + 2)
        seed: Sampling seed

    Returns:
        Report with per-fold depth profiles
    """
    seed = get_settings().random_seed if seed is None else seed
    n = spec.rank
    folds = list(folds) if folds is not None else [2, n + 2]
    with experiment(
        "congruence-scan",
        spec=spec.label or "custom",
        prime=p,
        cap=cap,
        element=element.name if element else None,
        samples=samples,
        folds=folds,
        seed=seed,
    ) as report:
        cover = build_cover(spec)
        report.outputs["h1_rank"] = cover.h1_rank

        if element is None:
            _scan_samples(report, cover, p, cap, samples, folds, seed, direct_fold_limit, johnson_fold_limit)
        else:
            depth = congruence_depth(rho(cover, element), p, cap)
            report.outputs["congruence_depth"] = depth
            report.outputs["johnson_depth"] = str(johnson_depth(element))
            if expect_min is not None:
                report.check(
                    "congruence depth lower bound", f">={expect_min}", depth, passed=depth >= expect_min
                )
    return report


def _scan_samples(
    report: ExperimentReport,
    cover: CoverGraph,
    p: int,
    cap: int,
    samples: int,
    folds: list[int],
    seed: int,
    direct_fold_limit: int,
    johnson_fold_limit: int,
) -> None:
    rng = random.Random(seed)
    n = cover.rank
    gens = ia_generators(n)
    gen_rho = [rho(cover, g) for g in gens]
    level_one = {g.name: congruence_depth(m, p, cap) for g, m in zip(gens, gen_rho)}
    report.outputs["generator_depths"] = level_one
    report.check("some IA-generator has depth 0", True, min(level_one.values()) == 0)

    elementary_two = p == 2 and cover.spec.is_elementary_abelian_two()
    profile = {}
    for fold in folds:
        depths, jdepths = [], []
        direct_ok = True
        for _ in range(samples):
            picks = [rng.randrange(len(gens)) for _ in range(fold)]
            m = gen_rho[picks[0]]
            for k in picks[1:]:
                m = _matrix_commutator(m, gen_rho[k])
            depths.append(congruence_depth(m, p, cap))
            if fold <= max(direct_fold_limit, johnson_fold_limit):
                g = nested_commutator([gens[k] for k in picks]) if fold > 1 else gens[picks[0]]
                if fold <= direct_fold_limit and rho(cover, g) != m:
                    direct_ok = False
                if fold <= johnson_fold_limit:
                    jdepths.append(johnson_depth(g).value)
        profile[str(fold)] = {"depths": depths, "johnson_depths": jdepths}
        logger.info("fold %d congruence depths: %s", fold, depths)

        if fold <= direct_fold_limit:
            report.check(f"fold-{fold} rho matches direct computation", True, direct_ok)
        if jdepths:
            report.check(
                f"fold-{fold} commutators reach Johnson depth {fold}",
                f">={fold}",
                min(jdepths),
                passed=min(jdepths) >= fold,
            )
        if elementary_two and fold >= n + 2:
            report.check(
                f"fold-{fold} commutators act trivially mod 2",
                ">=1",
                min(depths),
                passed=min(depths) >= 1,
            )
    report.outputs["profile"] = profile
