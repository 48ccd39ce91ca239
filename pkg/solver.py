"""Árvore de busca limitada para Bicluster Editing.

Regras, na ordem em que são tentadas:
  B1  triângulo X: uma filha por aresta de G[X] removida (vetor (1,1,1)).
  B2  P4 induzido A com |P(A)| >= 2: uma filha por F em Fmin(G[A + {p, p'}]).
  B3  P4 induzido A e p em P(A) adjacente a i em I(A): uma filha por F em Fmin(G[A + {p, i}]).
Quando nenhuma se aplica, toda componente com 6 ou mais vértices já é uma
biclique e as menores são resolvidas por força bruta.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import count, islice
from typing import Callable, Optional

import config
from edit_enum import minimal_editing_sets, minimum_editing_set
from graph_core import (
    EditSet,
    Graph,
    GraphInputError,
    P4Occurrence,
    component_masks,
    edit_set,
    find_triangle,
    induced_subgraph,
    is_biclique,
    is_bicluster,
    is_induced_p4,
    iter_bits,
    iter_induced_p4s,
    make_pair,
    partition_periphery,
    periphery_masks,
    symmetric_difference,
)

logger = logging.getLogger(__name__)

# Componentes até este tamanho vão para a força bruta no caso base
BASE_CASE_MAX_COMPONENT = 5
BRANCH_SUBGRAPH_SIZE = 6


class RuleMisapplication(RuntimeError):
    """Regra de ramificação chamada com a pré-condição violada."""


class InvariantViolation(RuntimeError):
    """Resultado que contradiz a estrutura garantida no caso base ou a verificação final."""


@dataclass(frozen=True)
class Instance:
    graph: Graph
    budget: int
    applied: EditSet = frozenset()  # F aplicado pelo pai para chegar aqui


@dataclass(frozen=True)
class Solution:
    edits: EditSet
    optimal: bool = False

    @property
    def size(self) -> int:
        return len(self.edits)


@dataclass
class SearchStats:
    nodes: int = 0
    base_cases: int = 0
    pruned: int = 0
    rules: dict = field(default_factory=lambda: {"B1": 0, "B2": 0, "B3": 0})

    def summary(self) -> str:
        applied = ", ".join(f"{rule}={n}" for rule, n in self.rules.items())
        return f"nós={self.nodes} folhas-base={self.base_cases} podas={self.pruned} ({applied})"


# -----------------------
# REGRAS DE RAMIFICAÇÃO
# -----------------------
def branch_rule_b1(inst: Instance, x: tuple[int, int, int]) -> list[Instance]:
    u, v, w = sorted(x)
    g = inst.graph
    if len({u, v, w}) != 3 or not (g.has_edge(u, v) and g.has_edge(u, w) and g.has_edge(v, w)):
        raise RuleMisapplication(f"B1: {x} não é um triângulo")
    children = []
    for e in ((u, v), (u, w), (v, w)):
        f = frozenset([e])
        children.append(Instance(symmetric_difference(g, f), inst.budget - 1, f))
    return children


def _branch_on_subgraph(inst: Instance, order: tuple[int, ...], rule: str) -> list[Instance]:
    g = inst.graph
    sub, mapping = induced_subgraph(g, order)
    children = []
    for f in minimal_editing_sets(sub, max_vertices=BRANCH_SUBGRAPH_SIZE):
        if not f:
            raise RuleMisapplication(f"{rule}: G[{order}] já é bicluster, Fmin contém o conjunto vazio")
        translated = edit_set((mapping[a], mapping[b]) for a, b in f)
        children.append(Instance(symmetric_difference(g, translated), inst.budget - len(translated), translated))
    return children


def branch_rule_b2(inst: Instance, a: P4Occurrence, p: int, p2: int) -> list[Instance]:
    g = inst.graph
    a = P4Occurrence(*a)
    if not is_induced_p4(g, a):
        raise RuleMisapplication(f"B2: {tuple(a)} não induz um P4")
    periphery, _ = periphery_masks(g, a)
    if p == p2 or not ((periphery >> p) & 1 and (periphery >> p2) & 1):
        raise RuleMisapplication(f"B2: {p} e {p2} precisam ser vértices distintos de P(A)")
    return _branch_on_subgraph(inst, (*a, p, p2), "B2")


def branch_rule_b3(inst: Instance, a: P4Occurrence, p: int, i: int) -> list[Instance]:
    g = inst.graph
    a = P4Occurrence(*a)
    if not is_induced_p4(g, a):
        raise RuleMisapplication(f"B3: {tuple(a)} não induz um P4")
    periphery, independent = periphery_masks(g, a)
    if not ((periphery >> p) & 1 and (independent >> i) & 1 and g.has_edge(p, i)):
        raise RuleMisapplication(f"B3: precisa de p={p} em P(A), i={i} em I(A) e a aresta (p, i)")
    return _branch_on_subgraph(inst, (*a, p, i), "B3")


RULES: dict[str, Callable[..., list[Instance]]] = {
    "B1": branch_rule_b1,
    "B2": branch_rule_b2,
    "B3": branch_rule_b3,
}


def find_branching_structure(g: Graph) -> Optional[tuple[str, tuple]]:
    """Primeira regra aplicável (B1, B2, B3) e seus argumentos, ou None."""
    triangle = find_triangle(g)
    if triangle is not None:
        return "B1", (triangle,)

    for a in iter_induced_p4s(g):
        periphery, _ = periphery_masks(g, a)
        if periphery.bit_count() >= 2:
            p, p2 = islice(iter_bits(periphery), 2)
            return "B2", (a, p, p2)

    for a in iter_induced_p4s(g):
        periphery, independent = periphery_masks(g, a)
        for p in iter_bits(periphery):
            links = g.adj[p] & independent
            if links:
                return "B3", (a, p, (links & -links).bit_length() - 1)
    return None


def assert_rules_exhausted(g: Graph):
    """Confere, pelas definições, que nenhuma regra se aplica a g."""
    if find_triangle(g) is not None:
        raise InvariantViolation("Caso base com triângulo")
    for a in iter_induced_p4s(g):
        periphery, independent = partition_periphery(g, a)
        if len(periphery) > 1:
            raise InvariantViolation(f"Caso base com |P(A)| > 1 para A={tuple(a)}")
        if any(g.has_edge(p, i) for p in periphery for i in independent):
            raise InvariantViolation(f"Caso base com aresta entre P(A) e I(A) para A={tuple(a)}")


# -----------------------
# CASO BASE
# -----------------------
def _base_case(g: Graph) -> EditSet:
    edits = set()
    for block in component_masks(g):
        vertices = tuple(iter_bits(block))
        sub, mapping = induced_subgraph(g, vertices)
        if len(vertices) > BASE_CASE_MAX_COMPONENT:
            if not is_biclique(sub):
                raise InvariantViolation(
                    f"Componente com {len(vertices)} vértices não é biclique sem regras aplicáveis: {vertices}"
                )
            continue
        f = minimum_editing_set(sub, max_vertices=BASE_CASE_MAX_COMPONENT)
        edits.update(make_pair(mapping[u], mapping[v]) for u, v in f)
    return frozenset(edits)


def base_case_solve(g: Graph) -> EditSet:
    """Conjunto de edição mínimo de um grafo onde B1, B2 e B3 não se aplicam."""
    structure = find_branching_structure(g)
    if structure is not None:
        raise GraphInputError(f"Regra {structure[0]} ainda se aplica; caso base não pode ser usado")
    return _base_case(g)


# -----------------------
# BUSCA
# -----------------------
class _Search:
    def __init__(self, stats: SearchStats):
        self.stats = stats

    def run(self, g: Graph, budget: int) -> Optional[EditSet]:
        self.stats.nodes += 1
        structure = find_branching_structure(g)

        if structure is None:
            self.stats.base_cases += 1
            if config.CHECK_BASE_CASE:
                assert_rules_exhausted(g)
            base = _base_case(g)
            return base if len(base) <= budget else None

        rule, args = structure
        if budget < 1:
            self.stats.pruned += 1
            return None

        self.stats.rules[rule] += 1
        logger.debug("%s em %s com orçamento %d", rule, args, budget)
        for child in RULES[rule](Instance(g, budget), *args):
            if child.budget < 0:
                self.stats.pruned += 1
                continue
            found = self.run(child.graph, child.budget)
            if found is not None:
                # pares editados duas vezes se cancelam
                return child.applied ^ found
        return None


def solve_decision(g: Graph, k: int, stats: Optional[SearchStats] = None) -> tuple[bool, Optional[EditSet]]:
    if k < 0:
        return False, None
    stats = stats if stats is not None else SearchStats()
    found = _Search(stats).run(g, k)
    logger.info("Decisão k=%d: %s | %s", k, "sim" if found is not None else "não", stats.summary())
    if found is None:
        return False, None
    if len(found) > k or not is_bicluster(symmetric_difference(g, found)):
        raise InvariantViolation(f"Conjunto devolvido não verifica para k={k}: {sorted(found)}")
    return True, found


def decide(g: Graph, k: int) -> Optional[EditSet]:
    if k < 0:
        raise GraphInputError(f"Orçamento negativo: {k}")
    _, edits = solve_decision(g, k)
    return edits


def check_component_locality(g: Graph, edits: EditSet):
    owner = {}
    for index, block in enumerate(component_masks(g)):
        for v in iter_bits(block):
            owner[v] = index
    crossing = [(u, v) for u, v in edits if owner[u] != owner[v]]
    if crossing:
        raise InvariantViolation(f"Conjunto mínimo com pares entre componentes: {sorted(crossing)}")


def solve_minimum(g: Graph, stats: Optional[SearchStats] = None) -> Solution:
    """Aumenta k a partir de 0 até a decisão responder sim."""
    for k in count():
        found, edits = solve_decision(g, k, stats)
        if found:
            check_component_locality(g, edits)
            return Solution(edits, optimal=True)
