"""
Johnson Sep Command Line
========================

One subcommand per experiment. Every command prints a rich summary, can
write the canonical JSON report with ``--json``, and exits 0 exactly when
the report status is ``pass``.

Usage:
    johnson-sep verify-claim1 --rank 3 --mod 2 --exp 2
    johnson-sep orbit-index --group sp --module wedge3 --seed-kind johnson-class --size 3
"""

import json
import logging
from pathlib import Path
from typing import Callable, Optional, TypeVar

import typer
from pydantic import ValidationError
from rich.console import Console

from .config import get_settings
from .errors import JohnsonSepError
from .experiments import (
    OrbitGroup,
    OrbitModule,
    OrbitSeed,
    claim2_depths,
    congruence_scan,
    deck_normalization,
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
from .models import ExperimentReport, QuotientSpec, load_quotient_spec
from .services import render_report, write_report_json
from .tools.freegroup import Automorphism, parse_word
from .tools.intlattice import IntMatrix
from .tools.surface import closed_surface_model
from .utils import load_automorphism, load_homology_model, load_push_data, parse_recipe, setup_logging

logger = logging.getLogger(__name__)

app = typer.Typer(
    name="johnson-sep",
    help="Exact checks of Johnson filtration depth against homological representations of Aut(F_n).",
    no_args_is_help=True,
)
console = Console()

T = TypeVar("T")


# =============================================================================
# Shared option handling
# =============================================================================

SPEC_OPTION = typer.Option(None, "--spec", help="QuotientSpec JSON file")
RANK_OPTION = typer.Option(3, "--rank", help="Free group rank n")
MOD_OPTION = typer.Option(2, "--mod", help="Modulus q for AbelianModQ(n, q) when no --spec is given")
JSON_OPTION = typer.Option(None, "--json", help="Write the canonical JSON report here")
VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Log progress")


@app.callback()
def main() -> None:
    setup_logging(get_settings().log_level)


def _load(what: str, loader: Callable[[], T]) -> T:
    """Run an input loader; bad input exits with status 2 before any experiment starts."""
    try:
        return loader()
    except (JohnsonSepError, ValidationError, OSError, TypeError, ValueError) as e:
        console.print(f"[bold red]invalid {what}:[/bold red] {e}")
        raise typer.Exit(code=2)


def _spec(spec: Optional[Path], rank: int, mod: int) -> QuotientSpec:
    if spec is not None:
        return _load("quotient spec", lambda: load_quotient_spec(spec))
    return _load("quotient spec", lambda: QuotientSpec.abelian_mod_q(rank, mod))


def _automorphism(recipe: Optional[str], path: Optional[Path], rank: int, default: str) -> Automorphism:
    if path is not None:
        return _load("automorphism file", lambda: load_automorphism(path))
    return _load("recipe", lambda: parse_recipe(recipe or default, rank))


def _int_list(text: Optional[str]) -> Optional[list[int]]:
    if text is None:
        return None
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        console.print(f"[bold red]invalid integer list:[/bold red] {text!r}")
        raise typer.Exit(code=2)


def _finish(report: ExperimentReport, json_path: Optional[Path]) -> None:
    render_report(report, console)
    if json_path is not None:
        write_report_json(report, json_path)
    raise typer.Exit(code=0 if report.passed else 1)


def _verbosity(verbose: bool) -> None:
    if verbose:
        setup_logging("DEBUG")


# =============================================================================
# Kernel automorphism
# =============================================================================


@app.command("verify-claim1")
def verify_claim1_cmd(
    spec: Optional[Path] = SPEC_OPTION,
    rank: int = RANK_OPTION,
    mod: int = MOD_OPTION,
    exp: Optional[int] = typer.Option(None, "--exp", min=1, help="Exponent e of phi (default: q, or the cover degree)"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """rho(phi) is the identity on H_1 of the cover."""
    _verbosity(verbose)
    quotient = _spec(spec, rank, mod)
    e = exp if exp is not None else (mod if spec is None else quotient.degree)
    _finish(verify_claim1(quotient, e), json_path)


@app.command("johnson-depth")
def johnson_depth_cmd(
    word: Optional[str] = typer.Option(None, "--word", help="Word such as 'a1 A2 a3'"),
    recipe: Optional[str] = typer.Option(None, "--recipe", help="Automorphism recipe such as 'phi(2)'"),
    automorphism: Optional[Path] = typer.Option(None, "--automorphism", help="Automorphism JSON file"),
    rank: int = RANK_OPTION,
    cap: Optional[int] = typer.Option(None, "--cap", help="Magnus degree cap"),
    expect: Optional[int] = typer.Option(None, "--expect", help="Depth to verify"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Lower central series depth of a word or Johnson depth of an automorphism."""
    _verbosity(verbose)
    cap = cap or get_settings().degree_cap
    if word is not None:
        target = _load("word", lambda: parse_word(word, rank))
    else:
        target = _automorphism(recipe, automorphism, rank, default="phi(2)")
    _finish(johnson_depth_report(target, cap, expect), json_path)


@app.command("claim2")
def claim2_cmd(
    exps: list[int] = typer.Option([1, 2, 3], "--exp", help="Exponents of phi"),
    cap: Optional[int] = typer.Option(None, "--cap"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """phi(3, e) has Johnson depth 1 and tau = e^2."""
    _verbosity(verbose)
    if any(e < 1 for e in exps):
        console.print(f"[bold red]exponents must be positive:[/bold red] {exps}")
        raise typer.Exit(code=2)
    _finish(claim2_depths(exps, cap or get_settings().degree_cap), json_path)


@app.command("non-faithful")
def non_faithful_cmd(
    exp: int = typer.Option(12, "--exp", min=1),
    specs: Optional[list[Path]] = typer.Option(None, "--spec", help="QuotientSpec files (repeatable)"),
    cap: Optional[int] = typer.Option(None, "--cap"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """phi is nontrivial in the Johnson filtration yet trivial on every tested cover."""
    _verbosity(verbose)
    quotients = [_load("quotient spec", lambda p=p: load_quotient_spec(p)) for p in specs] if specs else None
    _finish(non_faithful(exp, quotients, cap or get_settings().degree_cap), json_path)


@app.command("frattini-sweep")
def frattini_sweep_cmd(
    max_size: int = typer.Option(4, "--max-size", help="Largest generator subset for UT(3,3)"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Generation of UT(k, p) versus spanning of its abelianization."""
    _verbosity(verbose)
    _finish(frattini_report(((3, 2, None), (3, 3, max_size), (4, 2, 2))), json_path)


# =============================================================================
# Representations
# =============================================================================


@app.command("rho")
def rho_cmd(
    spec: Optional[Path] = SPEC_OPTION,
    rank: int = RANK_OPTION,
    mod: int = MOD_OPTION,
    recipe: Optional[str] = typer.Option(None, "--recipe", help="Automorphism recipe (default phi(q))"),
    automorphism: Optional[Path] = typer.Option(None, "--automorphism", help="Automorphism JSON file"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Matrix of an automorphism on H_1 of the cover."""
    _verbosity(verbose)
    quotient = _spec(spec, rank, mod)
    exponent = mod if spec is None else quotient.degree
    f = _automorphism(recipe, automorphism, quotient.rank, default=f"phi({exponent})")
    _finish(rho_report(quotient, f), json_path)


@app.command("deck")
def deck_cmd(
    spec: Optional[Path] = SPEC_OPTION,
    rank: int = typer.Option(2, "--rank"),
    mod: int = MOD_OPTION,
    samples: int = typer.Option(100, "--samples"),
    length: int = typer.Option(6, "--length", help="Nielsen moves per sampled automorphism"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """rho of random Nielsen products normalizes the deck group."""
    _verbosity(verbose)
    _finish(deck_normalization(_spec(spec, rank, mod), samples, length, seed), json_path)


@app.command("congruence-scan")
def congruence_scan_cmd(
    spec: Optional[Path] = SPEC_OPTION,
    rank: int = RANK_OPTION,
    mod: int = MOD_OPTION,
    prime: int = typer.Option(2, "--prime"),
    cap: int = typer.Option(6, "--cap"),
    recipe: Optional[str] = typer.Option(None, "--recipe", help="Measure a single element instead of sampling"),
    expect_min: Optional[int] = typer.Option(None, "--expect-min"),
    samples: int = typer.Option(10, "--samples"),
    folds: Optional[list[int]] = typer.Option(None, "--fold", help="Commutator folds to sample (repeatable)"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Congruence depth of rho on IA-elements."""
    _verbosity(verbose)
    quotient = _spec(spec, rank, mod)
    element = _load("recipe", lambda: parse_recipe(recipe, quotient.rank)) if recipe else None
    report = congruence_scan(
        quotient,
        prime,
        cap,
        element=element,
        expect_min=expect_min,
        samples=samples,
        folds=folds or None,
        seed=seed,
    )
    _finish(report, json_path)


# =============================================================================
# Lattices
# =============================================================================


@app.command("orbit-index")
def orbit_index_cmd(
    group: OrbitGroup = typer.Option(OrbitGroup.SP, "--group"),
    module: OrbitModule = typer.Option(OrbitModule.WEDGE3, "--module"),
    seed_kind: OrbitSeed = typer.Option(OrbitSeed.JOHNSON_CLASS, "--seed-kind"),
    size: int = typer.Option(3, "--size", help="n for sl, genus g for sp"),
    exp: int = typer.Option(2, "--exp", min=1, help="Exponent for the tau-phi seed"),
    j: int = typer.Option(1, "--j", help="Subsurface genus for the johnson-class seed"),
    c: Optional[str] = typer.Option(None, "--c", help="H vector, e.g. '0,1,0,0,0,0'"),
    vector: Optional[str] = typer.Option(None, "--vector", help="Explicit seed coordinates"),
    pass_limit: Optional[int] = typer.Option(None, "--pass-limit"),
    prime: Optional[int] = typer.Option(None, "--prime", help="Prime for the mod-p oracle"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Rank and index of the orbit span of a seed vector."""
    _verbosity(verbose)
    report = orbit_index(
        group,
        module,
        seed_kind,
        size,
        e=exp,
        j=j,
        c=_int_list(c),
        vector=_int_list(vector),
        pass_limit=pass_limit,
        prime=prime,
    )
    _finish(report, json_path)


@app.command("snf")
def snf_cmd(
    matrix: Optional[str] = typer.Option(None, "--matrix", help="JSON rows, e.g. '[[2,1],[0,3]]'"),
    file: Optional[Path] = typer.Option(None, "--file", help="JSON file of rows"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Include U and V"),
) -> None:
    """Smith normal form of an integer matrix."""
    _verbosity(verbose)
    if matrix is None and file is None:
        console.print("[bold red]give --matrix or --file[/bold red]")
        raise typer.Exit(code=2)
    rows = _load("matrix", lambda: json.loads(matrix) if matrix is not None else json.loads(file.read_text()))
    m = _load("matrix", lambda: IntMatrix.from_rows(rows))
    _finish(snf_report(m, verbose), json_path)


# =============================================================================
# Pushes
# =============================================================================


@app.command("push-act")
def push_act_cmd(
    data: Path = typer.Option(..., "--data", help="Push data JSON list"),
    model: Optional[Path] = typer.Option(None, "--model", help="Homology model JSON file"),
    genus: int = typer.Option(2, "--genus", help="Closed surface genus when no --model is given"),
    punctures: int = typer.Option(0, "--punctures"),
    expect_identity: Optional[bool] = typer.Option(None, "--expect-identity/--expect-nontrivial"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Homology action of point or curve pushes."""
    _verbosity(verbose)
    if model is not None:
        homology = _load("homology model", lambda: load_homology_model(model))
        label = model.stem
    else:
        homology = _load("homology model", lambda: closed_surface_model(genus, punctures))
        label = f"genus {genus}, {punctures} punctures"
    push_data = _load("push data", lambda: load_push_data(data))
    _finish(push_act(homology, push_data, expect_identity, label), json_path)


@app.command("push-vanishing-sweep")
def push_vanishing_sweep_cmd(
    samples: int = typer.Option(50, "--samples"),
    seed: Optional[int] = typer.Option(None, "--seed"),
    json_path: Optional[Path] = JSON_OPTION,
    verbose: bool = VERBOSE_OPTION,
) -> None:
    """Randomized separating curve and point push configurations."""
    _verbosity(verbose)
    _finish(push_vanishing_sweep(samples, seed), json_path)


if __name__ == "__main__":
    app()
