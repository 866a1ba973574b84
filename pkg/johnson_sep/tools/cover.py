"""
Finite Regular Covers
=====================

The coset graph of a finite regular quotient of F_n, its spanning-tree basis
of H_1, the homological representation rho_K of Aut(F_n), and the deck
group acting on H_1.

Vertices are the group elements 0..m-1 (0 is the identity coset). The
directed edge (v, i) runs from v to perms[i-1][v]. Non-tree edges are
indexed 0..r-1 in (v, i) order.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from ..config import get_settings
from ..errors import (
    DeckEnumerationError,
    NotInSubgroupError,
    NotInvariantError,
    NotUnimodularError,
    PreconditionError,
    RankError,
)
from ..models.push import LiftCriterionInput
from ..models.quotient import QuotientSpec
from .freegroup import Automorphism, Word, apply, generator, identity_word, invert
from .intlattice import IntMatrix, Vector

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


@dataclass(frozen=True)
class CoverGraph:
    spec: QuotientSpec
    perms: tuple[tuple[int, ...], ...]
    inverse_perms: tuple[tuple[int, ...], ...]
    tree_edges: frozenset[Edge]
    non_tree_edges: tuple[Edge, ...]
    tree_words: tuple[Word, ...]
    edge_index: dict[Edge, int] = field(hash=False, compare=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def degree(self) -> int:
        return self.spec.degree

    @property
    def h1_rank(self) -> int:
        return len(self.non_tree_edges)

    def head(self, edge: Edge) -> int:
        v, i = edge
        return self.perms[i - 1][v]


def build_cover(spec: QuotientSpec) -> CoverGraph:
    """BFS spanning tree from 0, lowest generator first, positive direction first."""
    n, m = spec.rank, spec.degree
    perms = tuple(tuple(p) for p in spec.perms)
    inverse = []
    for p in perms:
        inv = [0] * m
        for v, u in enumerate(p):
            inv[u] = v
        inverse.append(tuple(inv))

    words: list[Word | None] = [None] * m
    words[0] = identity_word(n)
    tree: set[Edge] = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for i in range(1, n + 1):
            u = perms[i - 1][v]
            if words[u] is None:
                words[u] = words[v] * generator(n, i)
                tree.add((v, i))
                queue.append(u)
            u = inverse[i - 1][v]
            if words[u] is None:
                words[u] = words[v] * invert(generator(n, i))
                tree.add((u, i))
                queue.append(u)

    non_tree = tuple((v, i) for v in range(m) for i in range(1, n + 1) if (v, i) not in tree)
    expected = m * (n - 1) + 1
    if len(tree) != m - 1 or len(non_tree) != expected:
        raise ArithmeticError(f"cover has {len(non_tree)} non-tree edges, expected {expected}")

    cover = CoverGraph(
        spec=spec,
        perms=perms,
        inverse_perms=tuple(inverse),
        tree_edges=frozenset(tree),
        non_tree_edges=non_tree,
        tree_words=tuple(w for w in words if w is not None),
        edge_index={e: k for k, e in enumerate(non_tree)},
    )
    logger.debug("built cover %s: m=%d, r=%d", spec.label or "<spec>", m, cover.h1_rank)
    return cover


# =============================================================================
# Traversal bookkeeping
# =============================================================================


def trace(cover: CoverGraph, start: int, w: Word) -> tuple[int, list[int]]:
    """Walk w from ``start``; returns the end vertex and signed non-tree counts."""
    if w.rank != cover.rank:
        raise RankError(f"word of rank {w.rank} in a rank-{cover.rank} cover")
    counts = [0] * cover.h1_rank
    index = cover.edge_index
    v = start
    for code in w.letters:
        i = abs(code)
        if code > 0:
            e = index.get((v, i))
            if e is not None:
                counts[e] += 1
            v = cover.perms[i - 1][v]
        else:
            u = cover.inverse_perms[i - 1][v]
            e = index.get((u, i))
            if e is not None:
                counts[e] -= 1
            v = u
    return v, counts


def endpoint(cover: CoverGraph, start: int, w: Word) -> int:
    v = start
    for code in w.letters:
        if code > 0:
            v = cover.perms[code - 1][v]
        else:
            v = cover.inverse_perms[-code - 1][v]
    return v


def member(cover: CoverGraph, w: Word) -> bool:
    """w lies in K, the kernel of F_n onto the quotient."""
    if w.rank != cover.rank:
        raise RankError(f"word of rank {w.rank} in a rank-{cover.rank} cover")
    return endpoint(cover, 0, w) == 0


def h1_class(cover: CoverGraph, w: Word) -> Vector:
    end, counts = trace(cover, 0, w)
    if end != 0:
        raise NotInSubgroupError(f"word ends at vertex {end}, not at the base point")
    return tuple(counts)


def basis_loop_word(cover: CoverGraph, e: int) -> Word:
    """tree path to the tail, the edge, tree path back from the head."""
    v, i = cover.non_tree_edges[e]
    return cover.tree_words[v] * generator(cover.rank, i) * invert(cover.tree_words[cover.head((v, i))])


# =============================================================================
# Homological representation
# =============================================================================


def rho(cover: CoverGraph, f: Automorphism, *, length_limit: int | None = None) -> IntMatrix:
    """Matrix of f on H_1(K); column e is the class of f(loop_e)."""
    if f.rank != cover.rank:
        raise RankError(f"rank-{f.rank} automorphism on a rank-{cover.rank} cover")
    limit = length_limit or get_settings().word_length_limit
    columns = []
    for e in range(cover.h1_rank):
        image = apply(f, basis_loop_word(cover, e), limit=limit)
        if not member(cover, image):
            raise NotInvariantError(f"{f.name or 'automorphism'} moves basis loop {e} out of K")
        columns.append(h1_class(cover, image))
    matrix = IntMatrix.from_columns(columns)
    det = matrix.det()
    if det not in (1, -1):
        raise NotUnimodularError(f"rho has determinant {det}")
    logger.debug("rho(%s) on %s computed", f.name or "<map>", cover.spec.label or "<spec>")
    return matrix


# =============================================================================
# Deck group
# =============================================================================


def vertex_product(cover: CoverGraph, q: int, q2: int) -> int:
    """Group product q * q2 on vertex labels."""
    return endpoint(cover, q, cover.tree_words[q2])


def deck_matrix(cover: CoverGraph, q: int) -> IntMatrix:
    """Action on H_1 of the deck translation carrying 0 to q."""
    columns = []
    for e in range(cover.h1_rank):
        end, counts = trace(cover, q, basis_loop_word(cover, e))
        if end != q:
            raise ArithmeticError(f"translated loop {e} does not close at {q}")
        columns.append(tuple(counts))
    return IntMatrix.from_columns(columns)


def deck_matrices(cover: CoverGraph) -> list[IntMatrix]:
    limit = get_settings().deck_enumeration_limit
    if cover.degree > limit:
        raise DeckEnumerationError(f"deck group of order {cover.degree} above limit {limit}")
    return [deck_matrix(cover, q) for q in range(cover.degree)]


def normalizes_deck(cover: CoverGraph, m: IntMatrix, decks: list[IntMatrix] | None = None) -> bool:
    """m D m^-1 == D as sets of matrices."""
    group = decks if decks is not None else deck_matrices(cover)
    members = set(group)
    m_inv = m.inverse()
    return all(m @ d @ m_inv in members for d in group) and all(
        m_inv @ d @ m in members for d in group
    )


def element_order(cover: CoverGraph, w: Word) -> int:
    """Order of the image of w in the quotient."""
    s, v = 1, endpoint(cover, 0, w)
    while v != 0:
        v = endpoint(cover, v, w)
        s += 1
    return s


def lift_criterion_input(cover: CoverGraph, delta: Word, gamma: Word) -> LiftCriterionInput:
    """(s, j) with s the order of delta and gamma delta^-j in K, 0 <= j < s."""
    s = element_order(cover, delta)
    target = endpoint(cover, 0, gamma)
    v = 0
    for j in range(s):
        if v == target:
            return LiftCriterionInput(s=s, j=j)
        v = endpoint(cover, v, delta)
    raise PreconditionError("gamma does not lie in the coset of any power of delta")
