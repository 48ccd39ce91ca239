"""Grafos simples não direcionados, edição por diferença simétrica e detecção de estruturas.

Os vértices são inteiros 0..n-1. A adjacência de cada vértice é guardada como
máscara de bits (bit u ligado em adj[v] <=> aresta (u, v)), o que deixa as
varreduras de triângulos e P4 induzidos baratas dentro da árvore de busca.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional

import networkx as nx

VertexPair = tuple[int, int]
EditSet = frozenset  # frozenset[VertexPair], pares sempre canônicos (u < v)


class GraphInputError(ValueError):
    """Entrada inválida: vértice fora do intervalo, laço, P4 inválido, limite excedido."""


# -----------------------
# UTILITÁRIOS DE BITS
# -----------------------
def iter_bits(mask: int) -> Iterator[int]:
    """Índices dos bits ligados, em ordem crescente."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def make_pair(u: int, v: int) -> VertexPair:
    if u == v:
        raise GraphInputError(f"Par com vértices iguais: ({u}, {v})")
    return (u, v) if u < v else (v, u)


def edit_set(pairs: Iterable[tuple[int, int]]) -> EditSet:
    """Constrói um EditSet com pares em ordem canônica."""
    return frozenset(make_pair(u, v) for u, v in pairs)


# -----------------------
# TIPOS
# -----------------------
@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphInputError(f"Número de vértices negativo: {self.n}")
        if len(self.adj) != self.n:
            raise GraphInputError(f"Adjacência com {len(self.adj)} entradas para n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if nbrs >> self.n:
                raise GraphInputError(f"Vértice {v} tem vizinho fora de 0..{self.n - 1}")
            if (nbrs >> v) & 1:
                raise GraphInputError(f"Laço no vértice {v}")
            for u in iter_bits(nbrs):
                if not (self.adj[u] >> v) & 1:
                    raise GraphInputError(f"Adjacência não simétrica entre {u} e {v}")

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise GraphInputError(f"Laço no vértice {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edges(self) -> tuple[VertexPair, ...]:
        return tuple(
            (u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
        )

    @property
    def edge_count(self) -> int:
        return sum(nbrs.bit_count() for nbrs in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()


class P4Occurrence(NamedTuple):
    a1: int
    a2: int
    a3: int
    a4: int

    @property
    def mask(self) -> int:
        return mask_of(self)


def _check_vertex(n: int, v: int):
    if not 0 <= v < n:
        raise GraphInputError(f"Vértice {v} fora do intervalo 0..{n - 1}")


# -----------------------
# EDIÇÃO E SUBGRAFOS
# -----------------------
def symmetric_difference(g: Graph, f: Iterable[VertexPair]) -> Graph:
    """G △ F: pares de F presentes são removidos, ausentes são adicionados."""
    adj = list(g.adj)
    for u, v in f:
        _check_vertex(g.n, u)
        _check_vertex(g.n, v)
        if u == v:
            raise GraphInputError(f"Par com vértices iguais: ({u}, {v})")
        adj[u] ^= 1 << v
        adj[v] ^= 1 << u
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """G[S] e o mapeamento vértice-do-resultado -> vértice original.

    Conjuntos são ordenados; sequências mantêm a ordem dada (as regras de
    ramificação dependem disso para rotular a1..a4, p, p').
    """
    if isinstance(vertices, (set, frozenset)):
        order = tuple(sorted(vertices))
    else:
        order = tuple(vertices)
    for v in order:
        _check_vertex(g.n, v)
    if len(set(order)) != len(order):
        raise GraphInputError(f"Vértices repetidos em {order}")

    adj = []
    for v in order:
        nbrs = g.adj[v]
        local = 0
        for i, u in enumerate(order):
            if (nbrs >> u) & 1:
                local |= 1 << i
        adj.append(local)
    return Graph(len(order), tuple(adj)), order


def to_networkx(g: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(g.edges)
    return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """Rotula os nós do grafo networkx como 0..n-1 na ordem de iteração."""
    index = {node: i for i, node in enumerate(nxg.nodes)}
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in nxg.edges))


# -----------------------
# COMPONENTES E BICLIQUES
# -----------------------
def component_masks(g: Graph) -> list[int]:
    seen = 0
    blocks = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        block = 1 << start
        frontier = block
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= g.adj[v]
            frontier = reached & ~block
            block |= frontier
        seen |= block
        blocks.append(block)
    return blocks


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Componentes conexas, ordenadas pelo menor vértice de cada uma."""
    return [tuple(iter_bits(block)) for block in component_masks(g)]


def _biclique_sides(g: Graph, block: int) -> Optional[tuple[int, int]]:
    """Bipartição (V1, V2) de um bloco conexo se ele for uma biclique."""
    if block.bit_count() < 2:
        return None
    start = (block & -block).bit_length() - 1
    sides = [1 << start, 0]
    frontier, side = 1 << start, 0
    while frontier:
        reached = 0
        for v in iter_bits(frontier):
            reached |= g.adj[v]
        reached &= block
        if reached & sides[side]:
            return None
        side ^= 1
        frontier = reached & ~sides[side]
        sides[side] |= frontier
    v1, v2 = sides
    if (v1 | v2) != block:
        return None
    edges = sum((g.adj[v] & block).bit_count() for v in iter_bits(block)) // 2
    if edges != v1.bit_count() * v2.bit_count():
        return None
    return v1, v2


def biclique_sides(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    sides = _biclique_sides(g, (1 << g.n) - 1)
    if sides is None:
        return None
    return tuple(iter_bits(sides[0])), tuple(iter_bits(sides[1]))


def is_biclique(g: Graph) -> bool:
    return _biclique_sides(g, (1 << g.n) - 1) is not None


def is_bicluster(g: Graph) -> bool:
    """Toda componente com pelo menos dois vértices é uma biclique."""
    return all(
        block.bit_count() < 2 or _biclique_sides(g, block) is not None
        for block in component_masks(g)
    )


def is_bicluster_by_characterization(g: Graph) -> bool:
    """Bipartido e sem P4 induzido; recognizer independente de is_bicluster."""
    return nx.is_bipartite(to_networkx(g)) and find_induced_p4(g) is None


# -----------------------
# ESTRUTURAS PROIBIDAS
# -----------------------
def find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    """Menor triângulo (u < v < w) em ordem lexicográfica."""
    for u in range(g.n):
        later_u = g.adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(later_u):
            common = g.adj[u] & g.adj[v] >> (v + 1) << (v + 1)
            if common:
                return u, v, (common & -common).bit_length() - 1
    return None


def find_odd_cycle(g: Graph) -> Optional[tuple[int, ...]]:
    """Um ciclo ímpar (testemunha de não bipartição) ou None."""
    depth = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if depth[u] < 0:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif depth[u] == depth[v]:
                    left, right = [v], [u]
                    while left[-1] != right[-1]:
                        left.append(parent[left[-1]])
                        right.append(parent[right[-1]])
                    return tuple(left + right[-2::-1])
    return None


def is_induced_p4(g: Graph, a: P4Occurrence) -> bool:
    if len(set(a)) != 4 or any(not 0 <= v < g.n for v in a):
        return False
    a1, a2, a3, a4 = a
    return (
        g.has_edge(a1, a2) and g.has_edge(a2, a3) and g.has_edge(a3, a4)
        and not g.has_edge(a1, a3) and not g.has_edge(a1, a4) and not g.has_edge(a2, a4)
    )


def iter_induced_p4s(g: Graph) -> Iterator[P4Occurrence]:
    """Todos os P4 induzidos com a1 < a4, em ordem lexicográfica de (a1, a2, a3, a4)."""
    adj = g.adj
    for a1 in range(g.n):
        n1 = adj[a1] | (1 << a1)
        for a2 in iter_bits(adj[a1]):
            for a3 in iter_bits(adj[a2] & ~n1):
                closed = n1 | adj[a2] | (1 << a2)
                for a4 in iter_bits(adj[a3] & ~closed >> (a1 + 1) << (a1 + 1)):
                    yield P4Occurrence(a1, a2, a3, a4)


def find_induced_p4(g: Graph) -> Optional[P4Occurrence]:
    return next(iter_induced_p4s(g), None)


def periphery_masks(g: Graph, a: P4Occurrence) -> tuple[int, int]:
    amask = a.mask
    outside = ((1 << g.n) - 1) & ~amask
    periphery = 0
    for v in iter_bits(outside):
        if g.adj[v] & amask:
            periphery |= 1 << v
    return periphery, outside & ~periphery


def partition_periphery(g: Graph, a: P4Occurrence) -> tuple[frozenset[int], frozenset[int]]:
    """(P(A), I(A)): vizinhança aberta, vértices fora de A com/sem vizinho em A."""
    a = P4Occurrence(*a)
    if not is_induced_p4(g, a):
        raise GraphInputError(f"{tuple(a)} não induz um P4")
    periphery, independent = periphery_masks(g, a)
    return frozenset(iter_bits(periphery)), frozenset(iter_bits(independent))
