"""Coset graphs, H_1 bookkeeping, rho and the deck group."""
import pytest

from johnson_sep.config import get_settings
from johnson_sep.errors import (
    DeckEnumerationError,
    NotInSubgroupError,
    NotInvariantError,
    PreconditionError,
    RankError,
)
from johnson_sep.models import QuotientSpec
from johnson_sep.tools.cover import (
    basis_loop_word,
    build_cover,
    deck_matrices,
    deck_matrix,
    element_order,
    endpoint,
    h1_class,
    lift_criterion_input,
    member,
    normalizes_deck,
    rho,
    vertex_product,
)
from johnson_sep.tools.freegroup import (
    NielsenKind,
    NielsenMove,
    Word,
    commutator,
    compose,
    generator,
    ia_generators,
    identity_automorphism,
    nielsen,
    phi_automorphism,
    power,
    random_nielsen_product,
)
from johnson_sep.tools.intlattice import IntMatrix
from johnson_sep.tools.surface import cyclic_criterion


def test_cover_sizes(cover_2_2, cover_3_2):
    assert cover_3_2.degree == 8
    assert cover_3_2.h1_rank == 17
    assert len(cover_3_2.tree_edges) == 7
    assert cover_2_2.h1_rank == 5
    cyclic = build_cover(QuotientSpec.cyclic(5))
    assert cyclic.h1_rank == 1
    assert basis_loop_word(cyclic, 0) == power(generator(1, 1), 5)


def test_h1_rank_formula():
    for spec in (QuotientSpec.abelian_mod_q(3, 3), QuotientSpec.quaternion(3), QuotientSpec.abelian_mod_q(4, 2)):
        cover = build_cover(spec)
        assert cover.h1_rank == spec.degree * (spec.rank - 1) + 1
    assert build_cover(QuotientSpec.abelian_mod_q(3, 3)).h1_rank == 55


def test_membership(cover_3_2):
    a1, a2 = generator(3, 1), generator(3, 2)
    assert member(cover_3_2, power(a2, 2))
    assert member(cover_3_2, commutator(a1, a2))
    assert not member(cover_3_2, a2)
    with pytest.raises(RankError):
        member(cover_3_2, generator(2, 1))


def test_basis_loops_give_unit_classes(cover_3_2):
    for e in range(cover_3_2.h1_rank):
        loop = basis_loop_word(cover_3_2, e)
        assert member(cover_3_2, loop)
        assert h1_class(cover_3_2, loop) == tuple(int(k == e) for k in range(cover_3_2.h1_rank))
    assert not any(h1_class(cover_3_2, Word(3)))


def test_h1_class_is_additive(cover_3_2, rng):
    r = cover_3_2.h1_rank
    loops = [basis_loop_word(cover_3_2, e) for e in range(r)]
    for _ in range(50):
        u = rng.choice(loops) * rng.choice(loops) ** -1
        v = rng.choice(loops) ** 2
        total = h1_class(cover_3_2, u * v)
        assert total == tuple(a + b for a, b in zip(h1_class(cover_3_2, u), h1_class(cover_3_2, v)))


def test_h1_class_outside_k(cover_3_2):
    with pytest.raises(NotInSubgroupError):
        h1_class(cover_3_2, generator(3, 2))


def test_rho_of_identity_and_phi(cover_3_2):
    assert rho(cover_3_2, identity_automorphism(3)).is_identity()
    assert rho(cover_3_2, phi_automorphism(3, 2)).is_identity()


@pytest.mark.parametrize(
    "spec, e",
    [
        (QuotientSpec.abelian_mod_q(3, 3), 3),
        (QuotientSpec.quaternion(3), 4),
        (QuotientSpec.abelian_mod_q(4, 2), 2),
    ],
)
def test_rho_of_phi_is_trivial(spec, e):
    assert rho(build_cover(spec), phi_automorphism(spec.rank, e)).is_identity()


def test_rho_is_a_homomorphism(cover_2_2, cover_3_2, rng):
    for cover, samples in ((cover_2_2, 100), (cover_3_2, 100)):
        for _ in range(samples):
            f = random_nielsen_product(cover.rank, 3, rng)
            g = random_nielsen_product(cover.rank, 3, rng)
            assert rho(cover, compose(f, g)) == rho(cover, f) @ rho(cover, g)
            assert rho(cover, f).det() in (1, -1)


def test_rho_rejects_non_invariant_subgroup():
    spec = QuotientSpec(rank=2, degree=2, perms=[[1, 0], [0, 1]])
    swap = nielsen(2, NielsenMove(NielsenKind.SWAP, 1, 2))
    with pytest.raises(NotInvariantError):
        rho(build_cover(spec), swap)


def test_ia_moves_do_not_preserve_the_quaternion_kernel():
    cover = build_cover(QuotientSpec.quaternion(3))
    with pytest.raises(NotInvariantError):
        for g in ia_generators(3):
            rho(cover, g)


def test_deck_group(cover_2_2):
    decks = deck_matrices(cover_2_2)
    assert len(set(decks)) == 4
    assert decks[0].is_identity()
    for q in range(4):
        for q2 in range(4):
            assert decks[q] @ decks[q2] == decks[vertex_product(cover_2_2, q, q2)]
        assert (decks[q] @ decks[q]).is_identity()


def test_deck_group_of_the_quaternion_cover():
    cover = build_cover(QuotientSpec.quaternion(2))
    decks = deck_matrices(cover)
    assert len(set(decks)) == 8
    for q in range(8):
        for q2 in range(8):
            assert decks[q] @ decks[q2] == decks[vertex_product(cover, q, q2)]


def test_conjugation_acts_through_the_deck_group(cover_3_2, rng, random_word):
    loops = [basis_loop_word(cover_3_2, e) for e in range(cover_3_2.h1_rank)]
    for _ in range(30):
        w = random_word(3, 5)
        k = rng.choice(loops)
        q = endpoint(cover_3_2, 0, w)
        moved = h1_class(cover_3_2, w * k * w ** -1)
        assert moved == deck_matrix(cover_3_2, q).matvec(h1_class(cover_3_2, k))


def test_rho_normalizes_the_deck_group(cover_2_2, rng):
    decks = deck_matrices(cover_2_2)
    for _ in range(100):
        f = random_nielsen_product(2, 5, rng)
        assert normalizes_deck(cover_2_2, rho(cover_2_2, f), decks)
    r = cover_2_2.h1_rank
    elementary = [IntMatrix.elementary(r, i, j) for i in range(1, r + 1) for j in range(1, r + 1) if i != j]
    assert any(not normalizes_deck(cover_2_2, m, decks) for m in elementary)


def test_deck_enumeration_limit(cover_3_2, monkeypatch):
    monkeypatch.setattr(get_settings(), "deck_enumeration_limit", 4)
    with pytest.raises(DeckEnumerationError):
        deck_matrices(cover_3_2)


def test_lift_criterion_input():
    a1 = generator(1, 1)
    five = build_cover(QuotientSpec.cyclic(5))
    data = lift_criterion_input(five, a1, power(a1, 2))
    assert (data.s, data.j) == (5, 2)
    assert cyclic_criterion(data)
    four = build_cover(QuotientSpec.cyclic(4))
    data = lift_criterion_input(four, a1, power(a1, 2))
    assert (data.s, data.j) == (4, 2)
    assert not cyclic_criterion(data)
    assert element_order(four, power(a1, 2)) == 2


def test_lift_criterion_needs_a_coset_of_delta(cover_2_2):
    with pytest.raises(PreconditionError):
        lift_criterion_input(cover_2_2, generator(2, 1), generator(2, 2))
