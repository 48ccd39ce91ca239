"""Análise dos números de ramificação das regras B1, B2 e B3.

Cada caso fixa um P4 a1-a2-a3-a4 (vértices 0..3), um vértice p (4) com
vizinhos em A e um segundo vértice (5): p' para B2, com vizinhos em A ∪ {p}
que tocam A; i para B3, adjacente só a p. O vetor de ramificação de um caso
é o multiconjunto dos tamanhos dos membros de Fmin do grafo de 6 vértices.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
import pandas as pd
from scipy.optimize import bisect

import config
from edit_enum import minimal_editing_sets
from graph_core import Graph, iter_bits

logger = logging.getLogger(__name__)

A_MASK = 0b1111
P_BIT = 1 << 4
P_VERTEX, SECOND_VERTEX = 4, 5
P4_EDGES = ((0, 1), (1, 2), (2, 3))


class BranchingVerificationError(RuntimeError):
    """Algum caso tem número de ramificação acima do limite."""


def mask_label(mask: int, width: int) -> str:
    """Bits na ordem a1, a2, a3, a4[, p]."""
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(width))


# -----------------------
# CASOS
# -----------------------
@dataclass(frozen=True)
class BranchCase:
    rule: str
    p_neighbors: int
    second_neighbors: int

    def __post_init__(self):
        if self.rule not in ("B2", "B3"):
            raise ValueError(f"Regra desconhecida: {self.rule}")
        if not 0 < self.p_neighbors <= A_MASK:
            raise ValueError(f"p precisa de vizinhos em A: {self.p_neighbors:#b}")
        if self.rule == "B2" and not (0 <= self.second_neighbors < 2 * P_BIT and self.second_neighbors & A_MASK):
            raise ValueError(f"p' precisa de vizinhos em A: {self.second_neighbors:#b}")
        if self.rule == "B3" and self.second_neighbors != P_BIT:
            raise ValueError("Em B3 o vértice i é adjacente apenas a p")

    @property
    def case_id(self) -> str:
        return f"{self.rule}-{mask_label(self.p_neighbors, 4)}-{mask_label(self.second_neighbors, 5)}"


def _reverse_path(mask: int) -> int:
    reversed_a = 0
    for i in iter_bits(mask & A_MASK):
        reversed_a |= 1 << (3 - i)
    return reversed_a | (mask & ~A_MASK)


def mirror_case(c: BranchCase) -> BranchCase:
    """Mesmo caso lido com o caminho invertido (a1<->a4, a2<->a3)."""
    return BranchCase(c.rule, _reverse_path(c.p_neighbors), _reverse_path(c.second_neighbors))


def _mirror_filter(cases: list[BranchCase]) -> list[BranchCase]:
    def key(c: BranchCase) -> tuple[int, int]:
        return c.p_neighbors, c.second_neighbors

    return [c for c in cases if key(c) <= key(mirror_case(c))]


def enumerate_b2_cases(mirror_reduce: bool = False) -> list[BranchCase]:
    cases = [
        BranchCase("B2", p_mask, q_mask)
        for p_mask in range(1, A_MASK + 1)
        for q_mask in range(2 * P_BIT)
        if q_mask & A_MASK
    ]
    return _mirror_filter(cases) if mirror_reduce else cases


def enumerate_b3_cases(mirror_reduce: bool = False) -> list[BranchCase]:
    cases = [BranchCase("B3", p_mask, P_BIT) for p_mask in range(1, A_MASK + 1)]
    return _mirror_filter(cases) if mirror_reduce else cases


def case_to_graph(c: BranchCase) -> Graph:
    edges = list(P4_EDGES)
    edges += [(a, P_VERTEX) for a in iter_bits(c.p_neighbors)]
    edges += [(v, SECOND_VERTEX) for v in iter_bits(c.second_neighbors)]
    return Graph.from_edges(6, edges)


# -----------------------
# VETORES E NÚMEROS
# -----------------------
@dataclass(frozen=True)
class BranchingVector:
    decrements: tuple[int, ...]

    def __post_init__(self):
        if not self.decrements:
            raise ValueError("Vetor de ramificação vazio")
        if min(self.decrements) < 1:
            raise ValueError(f"Decrementos precisam ser >= 1: {self.decrements}")
        object.__setattr__(self, "decrements", tuple(sorted(self.decrements)))

    def __len__(self) -> int:
        return len(self.decrements)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.decrements)) + ")"


B1_VECTOR = BranchingVector((1, 1, 1))


def branching_vector_of(c: BranchCase) -> BranchingVector:
    family = minimal_editing_sets(case_to_graph(c), max_vertices=6)
    return BranchingVector(family.sizes)


def characteristic_residual(v: BranchingVector, x: float) -> float:
    return float(np.power(x, -np.asarray(v.decrements, dtype=float)).sum() - 1.0)


def branching_number(v: BranchingVector, tolerance: Optional[float] = None) -> float:
    """Raiz x >= 1 de sum(x^-d) = 1, por bisseção em [1, 1 + len(v)]."""
    if not isinstance(v, BranchingVector):
        v = BranchingVector(tuple(v))
    if len(v) == 1:
        return 1.0
    tolerance = config.ROOT_TOLERANCE if tolerance is None else tolerance
    # a soma é estritamente decrescente: positiva em 1, negativa acima de len(v)
    return float(bisect(lambda x: characteristic_residual(v, x), 1.0, 1.0 + len(v), xtol=tolerance / 1000))


# -----------------------
# RELATÓRIO
# -----------------------
@dataclass(frozen=True)
class CaseResult:
    rule: str
    case: Optional[BranchCase]
    vector: BranchingVector
    number: float

    @property
    def case_id(self) -> str:
        return self.case.case_id if self.case is not None else "B1-triangle"

    def line(self) -> str:
        if self.case is None:
            masks = "triangle"
        else:
            masks = f"p={mask_label(self.case.p_neighbors, 4)} q={mask_label(self.case.second_neighbors, 5)}"
        return f"{self.rule} {masks} vector={self.vector} root={self.number:.6f}"


@dataclass(frozen=True)
class BranchingReport:
    results: tuple[CaseResult, ...]
    raw_counts: dict
    reduced_counts: dict
    bound: float
    slack: float

    @property
    def maximum(self) -> float:
        return max(r.number for r in self.results)

    @property
    def argmax(self) -> tuple[str, ...]:
        top = self.maximum
        return tuple(r.case_id for r in self.results if top - r.number <= 1e-9)

    @property
    def passed(self) -> bool:
        return self.maximum <= self.bound + self.slack

    def rule_maximum(self, rule: str) -> float:
        return max(r.number for r in self.results if r.rule == rule)

    def lines(self) -> list[str]:
        out = [r.line() for r in self.results]
        raw = " ".join(f"{rule}={n}" for rule, n in self.raw_counts.items())
        reduced = " ".join(f"{rule}={n}" for rule, n in self.reduced_counts.items())
        out.append(f"CASES raw {raw} mirror-reduced {reduced}")
        out.append(f"MAX {self.maximum:.6f} CASE {self.argmax[0]}")
        return out

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "rule": [r.rule for r in self.results],
                "case": [r.case_id for r in self.results],
                "p_mask": [mask_label(r.case.p_neighbors, 4) if r.case else "" for r in self.results],
                "q_mask": [mask_label(r.case.second_neighbors, 5) if r.case else "" for r in self.results],
                "vector": [str(r.vector) for r in self.results],
                "size": [len(r.vector) for r in self.results],
                "branching_number": [r.number for r in self.results],
            }
        )

    def assert_bound(self):
        if not self.passed:
            raise BranchingVerificationError(
                f"Número de ramificação {self.maximum:.6f} acima de {self.bound} (casos: {', '.join(self.argmax)})"
            )


def evaluate_case(c: BranchCase) -> CaseResult:
    vector = branching_vector_of(c)
    return CaseResult(c.rule, c, vector, branching_number(vector))


def verify_all(
    rules: Iterable[str] = ("b1", "b2", "b3"),
    mirror_reduce: bool = False,
    strict: bool = True,
) -> BranchingReport:
    rules = [r.upper() for r in rules]
    results = []
    raw_counts, reduced_counts = {}, {}
    if "B1" in rules:
        results.append(CaseResult("B1", None, B1_VECTOR, branching_number(B1_VECTOR)))
        raw_counts["B1"] = reduced_counts["B1"] = 1
    for rule, enumerate_cases in (("B2", enumerate_b2_cases), ("B3", enumerate_b3_cases)):
        if rule not in rules:
            continue
        raw_counts[rule] = len(enumerate_cases())
        reduced_counts[rule] = len(enumerate_cases(mirror_reduce=True))
        results.extend(evaluate_case(c) for c in enumerate_cases(mirror_reduce=mirror_reduce))
    if not results:
        raise ValueError(f"Nenhuma regra válida em {rules}")

    report = BranchingReport(tuple(results), raw_counts, reduced_counts, config.BRANCHING_BOUND, config.BRANCHING_SLACK)
    logger.info("Casos avaliados: %d | máximo %.6f em %s", len(results), report.maximum, report.argmax[0])
    if strict:
        report.assert_bound()
    return report
