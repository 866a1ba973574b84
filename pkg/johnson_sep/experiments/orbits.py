"""Orbit-span and Smith normal form experiments."""
import logging
from enum import Enum
from math import prod
from typing import Sequence

from ..config import get_settings
from ..errors import DimensionError, PreconditionError
from ..models.report import ExperimentReport
from ..tools.extrep import (
    ExtBasis,
    SymplecticForm,
    contraction_matrix,
    embed_h,
    hom_action,
    hom_basis,
    hom_contraction_matrix,
    sl_generators,
    sp_generators,
    wedge_action,
)
from ..tools.freegroup import phi_automorphism
from ..tools.intlattice import (
    IntMatrix,
    Sublattice,
    is_smith_form,
    lattice_index,
    orbit_span,
    orbit_span_mod_p,
    snf,
    snf_diagonal,
)
from ..tools.nilpotent import tau
from ..tools.surface import johnson_class_curve_push
from .runner import experiment

logger = logging.getLogger(__name__)


class OrbitGroup(str, Enum):
    SL = "sl"
    SP = "sp"


class OrbitModule(str, Enum):
    WEDGE2 = "wedge2"
    WEDGE3 = "wedge3"
    HOM = "hom"


class OrbitSeed(str, Enum):
    TAU_PHI = "tau-phi"
    JOHNSON_CLASS = "johnson-class"
    EMBEDDED_H = "embedded-h"
    VECTOR = "vector"


def _h_dim(group: OrbitGroup, size: int) -> int:
    return size if group == OrbitGroup.SL else 2 * size


def module_dim(module: OrbitModule, h_dim: int) -> int:
    if module == OrbitModule.HOM:
        return len(hom_basis(h_dim))
    return len(ExtBasis(h_dim, 2 if module == OrbitModule.WEDGE2 else 3))


def module_generators(group: OrbitGroup, module: OrbitModule, size: int) -> list[IntMatrix]:
    """Generators of SL(size, Z) or Sp(2*size, Z) acting on the chosen module."""
    base = sl_generators(size) if group == OrbitGroup.SL else sp_generators(size)
    if module == OrbitModule.HOM:
        return [hom_action(m) for m in base]
    degree = 2 if module == OrbitModule.WEDGE2 else 3
    return [wedge_action(m, degree) for m in base]


def build_seed(
    seed: OrbitSeed,
    group: OrbitGroup,
    module: OrbitModule,
    size: int,
    *,
    e: int = 2,
    j: int = 1,
    c: Sequence[int] | None = None,
    vector: Sequence[int] | None = None,
) -> tuple[int, ...]:
    """
    Seed vector in the module's coordinates.

    Args:
        seed: Which seed to build
        group: Acting group, fixes dim H
        module: Target module
        size: n for sl, genus g for sp
        e: Exponent for the tau-phi seed
        j: Subsurface genus for the johnson-class seed
        c: H vector for the johnson-class and embedded-h seeds
        vector: Explicit coordinates for the vector seed

    Returns:
        Integer coordinates of the seed
    """
    h_dim = _h_dim(group, size)
    if seed == OrbitSeed.VECTOR:
        if vector is None:
            raise DimensionError("vector seed needs explicit coordinates")
        coords = tuple(vector)
    elif seed == OrbitSeed.TAU_PHI:
        if module != OrbitModule.HOM:
            raise DimensionError("tau-phi seeds live in the hom module")
        coords = tau(phi_automorphism(h_dim, e)).coords
    else:
        if group != OrbitGroup.SP or module != OrbitModule.WEDGE3:
            raise DimensionError(f"{seed.value} seeds need the sp group on wedge3")
        form = SymplecticForm(size)
        if seed == OrbitSeed.JOHNSON_CLASS:
            c = form.e(j + 1) if c is None else c
            coords = johnson_class_curve_push(size, j, c).coords
        else:
            c = form.e(1) if c is None else c
            coords = embed_h(c, form).coords
    expected = module_dim(module, h_dim)
    if len(coords) != expected:
        raise DimensionError(f"seed of length {len(coords)} in a module of dimension {expected}")
    if not any(coords):
        raise PreconditionError(f"{seed.value} seed is the zero vector")
    return coords


def orbit_index(
    group: OrbitGroup,
    module: OrbitModule,
    seed: OrbitSeed,
    size: int,
    *,
    e: int = 2,
    j: int = 1,
    c: Sequence[int] | None = None,
    vector: Sequence[int] | None = None,
    pass_limit: int | None = None,
    prime: int | None = None,
) -> ExperimentReport:
    """
    Saturate the orbit span of a seed and measure its rank and index.

    The GF(prime) closure of the seed is computed independently and must have
    the dimension of the saturated lattice reduced mod prime.
    """
    prime = prime or get_settings().oracle_prime
    with experiment(
        "orbit-index",
        group=group.value,
        module=module.value,
        seed=seed.value,
        size=size,
        exp=e,
        j=j,
        c=list(c) if c is not None else None,
        prime=prime,
    ) as report:
        h_dim = _h_dim(group, size)
        v = build_seed(seed, group, module, size, e=e, j=j, c=c, vector=vector)
        gens = module_generators(group, module, size)
        lattice = orbit_span(v, gens, pass_limit=pass_limit)
        index = lattice_index(lattice)
        diagonal = snf_diagonal(lattice)

        report.outputs["seed"] = list(v)
        report.outputs["ambient_dim"] = lattice.ambient
        report.outputs["rank"] = lattice.rank
        report.outputs["index"] = index
        report.outputs["snf_diagonal"] = list(diagonal)
        report.outputs["saturation_index"] = prod(diagonal)

        mod_p = orbit_span_mod_p(v, gens, prime)
        report.outputs["mod_p_dim"] = mod_p
        report.check(
            f"GF({prime}) orbit closure matches the lattice mod {prime}",
            lattice.basis_matrix().rank_mod(prime),
            mod_p,
        )

        if module == OrbitModule.HOM:
            _hom_summand(report, lattice, h_dim)
        if seed == OrbitSeed.EMBEDDED_H:
            _embedded_summand(report, lattice, size)

        if group == OrbitGroup.SP and module == OrbitModule.WEDGE3 and seed == OrbitSeed.JOHNSON_CLASS:
            if size == 3 and c is None:
                report.check("orbit rank", 20, lattice.rank)
            report.check("orbit has finite index", True, index is not None)
        if seed == OrbitSeed.TAU_PHI and h_dim == 3:
            report.check("orbit rank", 6, lattice.rank)
        logger.info(
            "orbit-index %s/%s/%s: rank %d index %s", group.value, module.value, seed.value, lattice.rank, index
        )
    return report


def _hom_summand(report: ExperimentReport, lattice: Sublattice, h_dim: int) -> None:
    """Rank and index of the orbit span inside the kernel of the Hom contraction."""
    contract = hom_contraction_matrix(h_dim)
    inside = all(not any(contract.matvec(b)) for b in lattice.basis())
    kernel_rank = lattice.ambient - contract.rank()
    report.outputs["contraction_kernel_rank"] = kernel_rank
    report.outputs["in_contraction_kernel"] = inside
    if inside and lattice.rank == kernel_rank:
        # the kernel is saturated, so its index over the orbit span is the saturation index
        report.outputs["index_in_contraction_kernel"] = report.outputs["saturation_index"]
    else:
        report.outputs["index_in_contraction_kernel"] = None


def _embedded_summand(report: ExperimentReport, lattice: Sublattice, genus: int) -> None:
    form = SymplecticForm(genus)
    units = [tuple(int(i == k) for i in range(form.dim)) for k in range(form.dim)]
    summand = Sublattice(lattice.ambient, [embed_h(u, form).coords for u in units])
    report.check("orbit rank equals dim H", form.dim, lattice.rank)
    report.check("orbit lies in the embedded H summand", True, all(b in summand for b in lattice.basis()))
    if lattice.rank == summand.rank:
        report.outputs["index_in_embedded_h"] = prod(snf_diagonal(lattice)) // prod(snf_diagonal(summand))
    contraction = contraction_matrix(form)
    scaled = all(
        contraction.matvec(embed_h(u, form).coords) == tuple((genus - 1) * x for x in u) for u in units
    )
    report.outputs["contraction_of_embedding"] = genus - 1
    report.check("contraction after embedding is multiplication by g-1", True, scaled)


def snf_report(matrix: IntMatrix, verbose: bool = False) -> ExperimentReport:
    """Smith normal form with the reconstruction U A V = D checked exactly."""
    with experiment("snf", shape=list(matrix.shape), matrix=matrix.to_json()) as report:
        result = snf(matrix)
        report.outputs["diagonal"] = list(result.diagonal)
        report.outputs["invariant_factors"] = list(result.invariant_factors)
        report.outputs["rank"] = len(result.invariant_factors)
        report.outputs["D"] = result.D.to_json()
        if verbose:
            report.outputs["U"] = result.U.to_json()
            report.outputs["V"] = result.V.to_json()
        report.check("U A V reconstructs D", True, result.U @ matrix @ result.V == result.D)
        report.check("diagonal forms a divisibility chain", True, is_smith_form(result))
        report.check("U and V are unimodular", True, abs(result.U.det()) == 1 and abs(result.V.det()) == 1)
    return report
