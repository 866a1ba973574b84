"""
Free Group Words and Automorphisms
==================================

Words in F_n are flat tuples of signed generator indices (``+i`` for a_i,
``-i`` for its inverse), freely reduced on construction. Endomorphisms are
lists of generator images; automorphisms carry an explicit inverse so the
inverse problem never has to be solved.

Commutator convention: [u, v] = u v u^-1 v^-1.
"""

from __future__ import annotations

import functools
import logging
import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from ..config import get_settings
from ..errors import AutomorphismError, RankError, WordLengthError, WordParseError

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"^([aA])(\d+)$")


def _free_reduce(codes: Iterable[int], rank: int) -> tuple[int, ...]:
    stack: list[int] = []
    for c in codes:
        if c == 0 or abs(c) > rank:
            raise RankError(f"letter {c} outside rank {rank}")
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


@dataclass(frozen=True)
class Letter:
    """A generator a_index raised to sign (+1 or -1)."""

    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise RankError(f"generator index must be positive, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def code(self) -> int:
        return self.sign * self.index

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(abs(code), 1 if code > 0 else -1)

    def __str__(self):
        return f"a{self.index}" if self.sign > 0 else f"A{self.index}"


@dataclass(frozen=True)
class Word:
    """Freely reduced element of F_rank."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise RankError(f"rank must be positive, got {self.rank}")
        object.__setattr__(self, "letters", _free_reduce(self.letters, self.rank))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, e: int) -> "Word":
        return power(self, e)

    def __str__(self):
        return format_word(self)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def as_letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.from_code(c) for c in self.letters)


# =============================================================================
# Group operations
# =============================================================================


def _same_rank(u: Word, v: Word) -> int:
    if u.rank != v.rank:
        raise RankError(f"rank mismatch: {u.rank} vs {v.rank}")
    return u.rank


def reduce(letters: Iterable[int | Letter], rank: int) -> Word:
    """Freely reduce a raw letter sequence (signed codes or Letter objects)."""
    codes = [x.code if isinstance(x, Letter) else int(x) for x in letters]
    return Word(rank, tuple(codes))


def identity_word(rank: int) -> Word:
    return Word(rank)


def generator(rank: int, i: int) -> Word:
    return Word(rank, (i,))


def multiply(u: Word, v: Word) -> Word:
    return Word(_same_rank(u, v), u.letters + v.letters)


def invert(u: Word) -> Word:
    return Word(u.rank, tuple(-c for c in reversed(u.letters)))


def power(u: Word, e: int, *, squaring_threshold: int | None = None) -> Word:
    """u**e; repeated squaring only for exponents above the threshold."""
    if e < 0:
        return power(invert(u), -e, squaring_threshold=squaring_threshold)
    if e == 0:
        return identity_word(u.rank)
    threshold = get_settings().power_squaring_threshold if squaring_threshold is None else squaring_threshold
    if e <= threshold:
        return Word(u.rank, u.letters * e)
    half = power(u, e // 2, squaring_threshold=threshold)
    result = multiply(half, half)
    return multiply(result, u) if e % 2 else result


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    rank = _same_rank(u, v)
    return Word(rank, u.letters + v.letters + invert(u).letters + invert(v).letters)


def abelianize(w: Word) -> tuple[int, ...]:
    """Exponent sum of each generator."""
    sums = [0] * w.rank
    for c in w.letters:
        sums[abs(c) - 1] += 1 if c > 0 else -1
    return tuple(sums)


# =============================================================================
# Text format
# =============================================================================


def parse_word(text: str, rank: int) -> Word:
    """Parse whitespace-separated ``a<k>`` / ``A<k>`` tokens (``A`` = inverse)."""
    codes = []
    for token in text.split():
        if token == "1":
            continue
        match = _TOKEN.match(token)
        if not match:
            raise WordParseError(f"bad token {token!r} in {text!r}")
        index = int(match.group(2))
        if index < 1 or index > rank:
            raise WordParseError(f"generator index {index} outside 1..{rank}")
        codes.append(index if match.group(1) == "a" else -index)
    return Word(rank, tuple(codes))


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return " ".join(str(Letter.from_code(c)) for c in w.letters)


# =============================================================================
# Endomorphisms and automorphisms
# =============================================================================


@dataclass(frozen=True)
class Endomorphism:
    """Endomorphism of F_rank given by the images of the generators."""

    rank: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise RankError(f"expected {self.rank} images, got {len(self.images)}")
        for img in self.images:
            if img.rank != self.rank:
                raise RankError(f"image of rank {img.rank} in rank-{self.rank} map")

    @classmethod
    def identity(cls, rank: int) -> "Endomorphism":
        return cls(rank, tuple(generator(rank, i) for i in range(1, rank + 1)))

    @classmethod
    def with_images(cls, rank: int, changes: dict[int, Word]) -> "Endomorphism":
        """Identity except for the generators listed in ``changes`` (1-based)."""
        images = [changes.get(i, generator(rank, i)) for i in range(1, rank + 1)]
        return cls(rank, tuple(images))


@dataclass(frozen=True)
class Automorphism:
    """Automorphism with an explicit inverse; ``name`` is informational."""

    forward: Endomorphism
    backward: Endomorphism
    name: str = ""

    def __post_init__(self):
        if self.forward.rank != self.backward.rank:
            raise RankError("forward and backward ranks differ")

    @property
    def rank(self) -> int:
        return self.forward.rank

    @property
    def inverse(self) -> "Automorphism":
        name = f"inv({self.name})" if self.name else ""
        return Automorphism(self.backward, self.forward, name)

    def image(self, i: int) -> Word:
        return self.forward.images[i - 1]

    def __call__(self, w: Word) -> Word:
        return apply(self, w)


def apply(f: Endomorphism | Automorphism, w: Word, *, limit: int | None = None) -> Word:
    """Substitute generator images into w and reduce."""
    endo = f.forward if isinstance(f, Automorphism) else f
    if endo.rank != w.rank:
        raise RankError(f"rank mismatch: map {endo.rank} vs word {w.rank}")
    out: list[int] = []
    for c in w.letters:
        img = endo.images[abs(c) - 1].letters
        if c > 0:
            out.extend(img)
        else:
            out.extend(-x for x in reversed(img))
        if limit is not None and len(out) > limit:
            raise WordLengthError(f"image exceeds {limit} letters")
    return Word(w.rank, tuple(out))


def compose_endomorphisms(f: Endomorphism, g: Endomorphism) -> Endomorphism:
    """f after g."""
    if f.rank != g.rank:
        raise RankError(f"rank mismatch: {f.rank} vs {g.rank}")
    return Endomorphism(f.rank, tuple(apply(f, img) for img in g.images))


def verify_automorphism(f: Automorphism) -> bool:
    """Both composites of forward and backward fix every generator."""
    for i in range(1, f.rank + 1):
        a = generator(f.rank, i)
        if apply(f.forward, apply(f.backward, a)) != a:
            return False
        if apply(f.backward, apply(f.forward, a)) != a:
            return False
    return True


def compose(f: Automorphism, g: Automorphism) -> Automorphism:
    """f after g, so that apply(compose(f, g), w) == apply(f, apply(g, w))."""
    h = Automorphism(
        compose_endomorphisms(f.forward, g.forward),
        compose_endomorphisms(g.backward, f.backward),
    )
    if not verify_automorphism(h):
        raise AutomorphismError(f"composite of {f.name or '?'} and {g.name or '?'} is not invertible")
    return h


def compose_all(maps: Sequence[Automorphism]) -> Automorphism:
    """maps[0] after maps[1] after ... ; identity for an empty list is not defined."""
    if not maps:
        raise ValueError("compose_all needs at least one automorphism")
    return functools.reduce(compose, maps)


def identity_automorphism(rank: int) -> Automorphism:
    ident = Endomorphism.identity(rank)
    return Automorphism(ident, ident, "id")


def automorphism_commutator(f: Automorphism, g: Automorphism) -> Automorphism:
    """[f, g] = f g f^-1 g^-1 in Aut(F_n)."""
    h = compose_all([f, g, f.inverse, g.inverse])
    name = f"comm({f.name},{g.name})" if f.name and g.name else ""
    return Automorphism(h.forward, h.backward, name)


def automorphism_power(f: Automorphism, e: int) -> Automorphism:
    if e == 0:
        return identity_automorphism(f.rank)
    base = f if e > 0 else f.inverse
    return compose_all([base] * abs(e))


# =============================================================================
# Nielsen moves
# =============================================================================


class NielsenKind(str, Enum):
    """Elementary Nielsen transformation."""
    RIGHT_TRANSVECTION = "right"  # a_i -> a_i a_j
    LEFT_TRANSVECTION = "left"  # a_i -> a_j a_i
    INVERSION = "inversion"  # a_i -> a_i^-1
    SWAP = "swap"  # a_i <-> a_j


@dataclass(frozen=True)
class NielsenMove:
    kind: NielsenKind
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind != NielsenKind.INVERSION and self.i == self.j:
            raise RankError(f"{self.kind.value} move needs distinct indices, got {self.i}")


def nielsen(rank: int, move: NielsenMove) -> Automorphism:
    """Automorphism of a Nielsen move together with its inverse."""
    i, j = move.i, move.j
    for idx in (i, j) if move.kind != NielsenKind.INVERSION else (i,):
        if not 1 <= idx <= rank:
            raise RankError(f"index {idx} outside 1..{rank}")
    ai = generator(rank, i)

    if move.kind == NielsenKind.INVERSION:
        endo = Endomorphism.with_images(rank, {i: invert(ai)})
        return Automorphism(endo, endo, f"I{i}")

    aj = generator(rank, j)
    if move.kind == NielsenKind.SWAP:
        endo = Endomorphism.with_images(rank, {i: aj, j: ai})
        return Automorphism(endo, endo, f"S{i}_{j}")
    if move.kind == NielsenKind.RIGHT_TRANSVECTION:
        fwd = Endomorphism.with_images(rank, {i: ai * aj})
        bwd = Endomorphism.with_images(rank, {i: ai * invert(aj)})
        return Automorphism(fwd, bwd, f"R{i}_{j}")
    fwd = Endomorphism.with_images(rank, {i: aj * ai})
    bwd = Endomorphism.with_images(rank, {i: invert(aj) * ai})
    return Automorphism(fwd, bwd, f"L{i}_{j}")


def all_nielsen_moves(rank: int) -> list[NielsenMove]:
    moves = [NielsenMove(NielsenKind.INVERSION, i) for i in range(1, rank + 1)]
    for i in range(1, rank + 1):
        for j in range(1, rank + 1):
            if i == j:
                continue
            moves.append(NielsenMove(NielsenKind.RIGHT_TRANSVECTION, i, j))
            moves.append(NielsenMove(NielsenKind.LEFT_TRANSVECTION, i, j))
            if i < j:
                moves.append(NielsenMove(NielsenKind.SWAP, i, j))
    return moves


def random_nielsen_product(rank: int, length: int, rng: random.Random) -> Automorphism:
    """Composite of ``length`` uniformly chosen Nielsen moves."""
    moves = all_nielsen_moves(rank)
    if length <= 0:
        return identity_automorphism(rank)
    factors = [nielsen(rank, rng.choice(moves)) for _ in range(length)]
    return compose_all(factors)


# =============================================================================
# Kernel automorphism and IA-generators
# =============================================================================


def phi_automorphism(rank: int, e: int) -> Automorphism:
    """a_1 -> a_1 [a_2^e, a_3^e], other generators fixed."""
    if rank < 3:
        raise RankError(f"phi needs rank >= 3, got {rank}")
    if e < 1:
        raise ValueError(f"exponent must be positive, got {e}")
    a1, a2, a3 = (generator(rank, i) for i in (1, 2, 3))
    c = commutator(power(a2, e), power(a3, e))
    fwd = Endomorphism.with_images(rank, {1: a1 * c})
    bwd = Endomorphism.with_images(rank, {1: a1 * invert(c)})
    return Automorphism(fwd, bwd, f"phi({e})")


def phi_nielsen_factors(rank: int, e: int) -> list[Automorphism]:
    """Right transvections of a_1 whose composite equals phi_automorphism(rank, e)."""
    if rank < 3:
        raise RankError(f"phi needs rank >= 3, got {rank}")
    r2 = nielsen(rank, NielsenMove(NielsenKind.RIGHT_TRANSVECTION, 1, 2))
    r3 = nielsen(rank, NielsenMove(NielsenKind.RIGHT_TRANSVECTION, 1, 3))
    # compose(T_x, T_y) sends a_1 to a_1 x y, so factors read left to right
    return [r2] * e + [r3] * e + [r2.inverse] * e + [r3.inverse] * e


def conjugation_move(rank: int, i: int, j: int) -> Automorphism:
    """a_i -> a_j^-1 a_i a_j."""
    if i == j:
        raise RankError("conjugation move needs i != j")
    ai, aj = generator(rank, i), generator(rank, j)
    fwd = Endomorphism.with_images(rank, {i: invert(aj) * ai * aj})
    bwd = Endomorphism.with_images(rank, {i: aj * ai * invert(aj)})
    return Automorphism(fwd, bwd, f"K{i}_{j}")


def commutator_move(rank: int, i: int, j: int, k: int) -> Automorphism:
    """a_i -> a_i [a_j, a_k]."""
    if len({i, j, k}) != 3:
        raise RankError("commutator move needs distinct i, j, k")
    ai, aj, ak = generator(rank, i), generator(rank, j), generator(rank, k)
    fwd = Endomorphism.with_images(rank, {i: ai * commutator(aj, ak)})
    bwd = Endomorphism.with_images(rank, {i: ai * commutator(ak, aj)})
    return Automorphism(fwd, bwd, f"C{i}_{j}_{k}")


def ia_generators(rank: int) -> list[Automorphism]:
    """Magnus generators of IA_n: conjugation moves then commutator moves (j < k)."""
    if rank < 3:
        raise RankError(f"IA generators are built for rank >= 3, got {rank}")
    gens = [
        conjugation_move(rank, i, j)
        for i in range(1, rank + 1)
        for j in range(1, rank + 1)
        if i != j
    ]
    for i in range(1, rank + 1):
        for j in range(1, rank + 1):
            for k in range(j + 1, rank + 1):
                if i not in (j, k):
                    gens.append(commutator_move(rank, i, j, k))
    return gens


def nested_commutator(factors: Sequence[Automorphism]) -> Automorphism:
    """Left-normed commutator [[[f1, f2], f3], ...]."""
    if len(factors) < 2:
        raise ValueError("need at least two factors")
    acc = factors[0]
    for f in factors[1:]:
        acc = automorphism_commutator(acc, f)
    return acc
