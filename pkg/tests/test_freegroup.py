"""Free group words, automorphisms and Nielsen moves."""
import pytest

from johnson_sep.errors import AutomorphismError, RankError, WordLengthError, WordParseError
from johnson_sep.tools import freegroup
from johnson_sep.tools.freegroup import (
    Automorphism,
    Letter,
    NielsenKind,
    NielsenMove,
    Word,
    abelianize,
    apply,
    commutator,
    commutator_move,
    compose,
    compose_all,
    conjugation_move,
    format_word,
    generator,
    ia_generators,
    identity_automorphism,
    invert,
    multiply,
    nested_commutator,
    nielsen,
    parse_word,
    phi_automorphism,
    phi_nielsen_factors,
    power,
    random_nielsen_product,
    reduce,
    verify_automorphism,
)


def test_reduce_cancels_adjacent_inverses():
    assert reduce([1, -1, 2], 3).letters == (2,)
    assert reduce([1, 2, -2, 1], 3).letters == (1, 1)
    assert reduce([], 3).is_identity
    assert reduce([Letter(2), Letter(2, -1), Letter(3)], 3).letters == (3,)


def test_reduce_rejects_letters_outside_rank():
    with pytest.raises(RankError):
        reduce([4], 3)
    with pytest.raises(RankError):
        reduce([0], 3)


def test_reduce_is_idempotent(random_word):
    for _ in range(200):
        w = random_word(3, 12)
        assert Word(3, w.letters) == w


def test_word_times_inverse_is_identity(random_word):
    for _ in range(500):
        u = random_word(3, 10)
        assert multiply(u, invert(u)).is_identity
        assert (u * ~u).is_identity


def test_power_and_commutator():
    a1, a2 = generator(3, 1), generator(3, 2)
    assert power(a1, 3).letters == (1, 1, 1)
    assert power(a1, -2).letters == (-1, -1)
    assert power(a1, 0).is_identity
    assert commutator(a1, a2).letters == (1, 2, -1, -2)
    assert commutator(a1, a1).is_identity


def test_power_by_squaring_matches_repetition(random_word):
    for _ in range(20):
        u = random_word(3, 6)
        assert power(u, 100, squaring_threshold=4) == power(u, 100, squaring_threshold=1000)
        assert power(u, -37, squaring_threshold=2) == invert(power(u, 37, squaring_threshold=1000))


def test_zero_squaring_threshold_is_not_the_default(monkeypatch):
    calls = []
    original = freegroup.multiply
    monkeypatch.setattr(freegroup, "multiply", lambda u, v: calls.append(1) or original(u, v))
    a1 = generator(2, 1)
    assert power(a1, 5).letters == (1,) * 5
    assert not calls
    assert power(a1, 5, squaring_threshold=0).letters == (1,) * 5
    assert calls


def test_abelianize():
    assert abelianize(parse_word("a1 a2 A1 a3 a3", 3)) == (0, 1, 2)


def test_parse_and_format_words():
    w = parse_word("a1 A2 a3", 3)
    assert w.letters == (1, -2, 3)
    assert format_word(w) == "a1 A2 a3"
    assert format_word(parse_word("a1 A1", 3)) == "1"
    assert parse_word("1", 2).is_identity


@pytest.mark.parametrize("text", ["a0", "a4", "b1", "a1 x"])
def test_parse_word_rejects_bad_tokens(text):
    with pytest.raises(WordParseError):
        parse_word(text, 3)


def test_phi_images():
    a1, a2, a3 = (generator(3, i) for i in (1, 2, 3))
    phi = phi_automorphism(3, 2)
    assert apply(phi, a1).letters == (1, 2, 2, 3, 3, -2, -2, -3, -3)
    assert apply(phi, a2) == a2
    assert apply(phi, a3) == a3
    assert apply(phi_automorphism(3, 1), a1).letters == (1, 2, 3, -2, -3)
    assert verify_automorphism(phi)


def test_phi_preconditions():
    with pytest.raises(RankError):
        phi_automorphism(2, 1)
    with pytest.raises(ValueError):
        phi_automorphism(3, 0)


def test_phi_times_inverse_is_identity():
    for e in (1, 2, 5):
        phi = phi_automorphism(4, e)
        both = compose(phi, phi.inverse)
        assert both.forward == identity_automorphism(4).forward


@pytest.mark.parametrize("rank", [3, 4])
@pytest.mark.parametrize("e", [1, 2, 3])
def test_nielsen_factorization_of_phi(rank, e):
    factors = phi_nielsen_factors(rank, e)
    assert len(factors) == 4 * e
    assert compose_all(factors).forward == phi_automorphism(rank, e).forward


def test_nielsen_moves():
    a1 = generator(3, 1)
    right = nielsen(3, NielsenMove(NielsenKind.RIGHT_TRANSVECTION, 1, 2))
    assert right.name == "R1_2"
    assert apply(right, a1).letters == (1, 2)
    assert apply(compose(right, right), a1).letters == (1, 2, 2)
    assert apply(right.inverse, a1).letters == (1, -2)
    left = nielsen(3, NielsenMove(NielsenKind.LEFT_TRANSVECTION, 1, 3))
    assert apply(left, a1).letters == (3, 1)
    swap = nielsen(3, NielsenMove(NielsenKind.SWAP, 1, 2))
    assert apply(swap, a1) == generator(3, 2)
    inversion = nielsen(3, NielsenMove(NielsenKind.INVERSION, 2))
    assert apply(inversion, generator(3, 2)).letters == (-2,)


def test_nielsen_move_validation():
    with pytest.raises(RankError):
        NielsenMove(NielsenKind.SWAP, 1, 1)
    with pytest.raises(RankError):
        nielsen(3, NielsenMove(NielsenKind.RIGHT_TRANSVECTION, 1, 4))


def test_composition_law_on_random_products(rng, random_word):
    for _ in range(30):
        f = random_nielsen_product(3, 4, rng)
        g = random_nielsen_product(3, 4, rng)
        fg = compose(f, g)
        assert verify_automorphism(fg)
        for _ in range(5):
            w = random_word(3, 6)
            assert apply(fg, w) == apply(f, apply(g, w))


def test_apply_is_a_homomorphism(rng, random_word):
    f = random_nielsen_product(3, 5, rng)
    for _ in range(50):
        u, v = random_word(3), random_word(3)
        assert apply(f, u * v) == apply(f, u) * apply(f, v)


def test_compose_rejects_non_inverse_pair():
    right = nielsen(3, NielsenMove(NielsenKind.RIGHT_TRANSVECTION, 1, 2))
    bogus = Automorphism(right.forward, right.forward, "bogus")
    assert not verify_automorphism(bogus)
    with pytest.raises(AutomorphismError):
        compose(bogus, identity_automorphism(3))


def test_apply_length_guard():
    with pytest.raises(WordLengthError):
        apply(phi_automorphism(3, 2), power(generator(3, 1), 10), limit=5)


def test_ia_generators():
    gens = ia_generators(3)
    names = [g.name for g in gens]
    assert len(gens) == 9
    assert sum(n.startswith("K") for n in names) == 6
    assert [n for n in names if n.startswith("C")] == ["C1_2_3", "C2_1_3", "C3_1_2"]
    assert all(verify_automorphism(g) for g in gens)
    assert len(ia_generators(4)) == 12 + 12


def test_conjugation_and_commutator_moves():
    a1 = generator(3, 1)
    assert apply(conjugation_move(3, 1, 2), a1).letters == (-2, 1, 2)
    assert commutator_move(3, 1, 2, 3).forward == phi_automorphism(3, 1).forward
    with pytest.raises(RankError):
        conjugation_move(3, 2, 2)
    with pytest.raises(RankError):
        commutator_move(3, 1, 1, 2)


def test_nested_commutator_of_commuting_maps_is_trivial():
    k12 = conjugation_move(3, 1, 2)
    assert nested_commutator([k12, k12]).forward == identity_automorphism(3).forward
    with pytest.raises(ValueError):
        nested_commutator([k12])
