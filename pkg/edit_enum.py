"""Força bruta sobre conjuntos de edição de grafos pequenos.

Um conjunto de pares F sobre n vértices é codificado como máscara sobre o
universo de pares combinations(range(n), 2), em ordem lexicográfica. Para
n <= 6 a bicluster-idade de todo grafo rotulado fica numa tabela numpy e os
conjuntos de edição de G são exatamente as máscaras F com tabela[G ^ F].
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

import numpy as np

import config
from graph_core import EditSet, Graph, GraphInputError, VertexPair, is_bicluster, symmetric_difference

logger = logging.getLogger(__name__)

# 2^15 grafos rotulados em 6 vértices; acima disso a tabela não compensa
TABLE_MAX_VERTICES = 6


@dataclass(frozen=True)
class MinimalEditFamily:
    graph_size: int
    members: tuple[EditSet, ...]

    def __iter__(self) -> Iterator[EditSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.members)


# -----------------------
# CODIFICAÇÃO EM MÁSCARAS
# -----------------------
@lru_cache(maxsize=None)
def pair_universe(n: int) -> tuple[VertexPair, ...]:
    return tuple(combinations(range(n), 2))


def graph_mask(g: Graph) -> int:
    mask = 0
    for i, (u, v) in enumerate(pair_universe(g.n)):
        if g.has_edge(u, v):
            mask |= 1 << i
    return mask


def mask_to_edit_set(n: int, mask: int) -> EditSet:
    pairs = pair_universe(n)
    return frozenset(pairs[i] for i in range(len(pairs)) if (mask >> i) & 1)


def mask_to_graph(n: int, mask: int) -> Graph:
    adj = [0] * n
    for i, (u, v) in enumerate(pair_universe(n)):
        if (mask >> i) & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _canonical_key(f: EditSet) -> tuple[int, tuple[VertexPair, ...]]:
    return len(f), tuple(sorted(f))


@lru_cache(maxsize=None)
def _popcounts(m: int) -> np.ndarray:
    counts = np.zeros(1 << m, dtype=np.uint8)
    values = np.arange(1 << m, dtype=np.int64)
    for bit in range(m):
        counts += ((values >> bit) & 1).astype(np.uint8)
    return counts


@lru_cache(maxsize=None)
def bicluster_table(n: int) -> np.ndarray:
    """tabela[mask] == True sse o grafo rotulado codificado por mask é bicluster."""
    if n > TABLE_MAX_VERTICES:
        raise GraphInputError(f"Tabela só é construída até {TABLE_MAX_VERTICES} vértices (pedido: {n})")
    m = len(pair_universe(n))
    table = np.fromiter((is_bicluster(mask_to_graph(n, mask)) for mask in range(1 << m)), dtype=bool, count=1 << m)
    logger.debug("Tabela de biclusters para n=%d: %d de %d grafos", n, int(table.sum()), table.size)
    return table


def _editing_masks(n: int, gmask: int) -> np.ndarray:
    table = bicluster_table(n)
    return np.flatnonzero(table[np.arange(table.size) ^ gmask])


def _check_bound(g: Graph, bound: int, what: str):
    if g.n > bound:
        raise GraphInputError(f"{what}: grafo com {g.n} vértices excede o limite configurado ({bound})")


def is_editing_set(g: Graph, f: EditSet) -> bool:
    return is_bicluster(symmetric_difference(g, f))


# -----------------------
# FMIN
# -----------------------
@lru_cache(maxsize=None)
def _minimal_masks_table(n: int, gmask: int) -> tuple[int, ...]:
    editing = _editing_masks(n, gmask)
    sizes = _popcounts(len(pair_universe(n)))[editing]
    editing = editing[np.argsort(sizes, kind="stable")]
    alive = np.ones(editing.size, dtype=bool)
    kept = []
    while alive.any():
        f = int(editing[np.argmax(alive)])
        kept.append(f)
        alive &= (editing & f) != f
    return tuple(kept)


def _minimal_sets_scan(g: Graph) -> list[EditSet]:
    """Varredura por tamanho crescente; descarta superconjuntos de membros já aceitos."""
    pairs = pair_universe(g.n)
    kept: list[int] = []
    for size in range(len(pairs) + 1):
        for combo in combinations(range(len(pairs)), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(mask & k == k for k in kept):
                continue
            if is_editing_set(g, [pairs[i] for i in combo]):
                kept.append(mask)
    return [mask_to_edit_set(g.n, mask) for mask in kept]


@lru_cache(maxsize=65536)
def _minimal_family(g: Graph) -> MinimalEditFamily:
    if g.n <= TABLE_MAX_VERTICES:
        members = [mask_to_edit_set(g.n, mask) for mask in _minimal_masks_table(g.n, graph_mask(g))]
    else:
        members = _minimal_sets_scan(g)
    return MinimalEditFamily(g.n, tuple(sorted(members, key=_canonical_key)))


def minimal_editing_sets(g: Graph, max_vertices: Optional[int] = None) -> MinimalEditFamily:
    """Fmin(G): todos os conjuntos de edição minimais por inclusão."""
    _check_bound(g, config.FMIN_MAX_VERTICES if max_vertices is None else max_vertices, "Fmin")
    return _minimal_family(g)


# -----------------------
# MÍNIMO
# -----------------------
@lru_cache(maxsize=65536)
def _minimum(g: Graph) -> EditSet:
    pairs = pair_universe(g.n)
    if g.n <= TABLE_MAX_VERTICES:
        editing = _editing_masks(g.n, graph_mask(g))
        sizes = _popcounts(len(pairs))[editing]
        smallest = editing[sizes == sizes.min()]
        best = min(tuple(i for i in range(len(pairs)) if (int(mask) >> i) & 1) for mask in smallest)
        return frozenset(pairs[i] for i in best)

    for size in range(len(pairs) + 1):
        for combo in combinations(pairs, size):
            if is_editing_set(g, combo):
                return frozenset(combo)
    raise AssertionError("O conjunto de todos os pares sempre admite um conjunto de edição")


def minimum_editing_set(g: Graph, max_vertices: Optional[int] = None) -> EditSet:
    """Conjunto de edição de tamanho mínimo; empates resolvidos pela menor codificação lexicográfica."""
    _check_bound(g, config.MINIMUM_MAX_VERTICES if max_vertices is None else max_vertices, "Mínimo")
    return _minimum(g)
