"""Shared fixtures: seeded randomness and small covers."""
import random
from typing import Callable

import pytest

from johnson_sep.models import QuotientSpec
from johnson_sep.tools.cover import CoverGraph, build_cover
from johnson_sep.tools.freegroup import Word


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture
def random_word(rng: random.Random) -> Callable[..., Word]:
    def make(rank: int, max_length: int = 8, min_length: int = 0) -> Word:
        size = rng.randint(min_length, max_length)
        return Word(rank, tuple(rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(size)))

    return make


@pytest.fixture(scope="session")
def cover_2_2() -> CoverGraph:
    return build_cover(QuotientSpec.abelian_mod_q(2, 2))


@pytest.fixture(scope="session")
def cover_3_2() -> CoverGraph:
    return build_cover(QuotientSpec.abelian_mod_q(3, 2))
