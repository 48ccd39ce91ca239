"""Linha de comando: decide, solve, recognize, min-edits, verify-branching, gen.

Formato do grafo: primeira linha não comentada "n m", depois exatamente m
linhas "u v" (0 <= u, v < n, u != v, cada par no máximo uma vez). Linhas
iniciadas por '#' e linhas em branco são ignoradas.

Códigos de saída: 0 sucesso/sim, 1 não/verificação negativa, 2 uso ou erro de leitura.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Iterable, Optional, TextIO

import networkx as nx
import numpy as np

import config
from branch_analysis import verify_all
from edit_enum import minimal_editing_sets, minimum_editing_set, pair_universe
from graph_core import (
    EditSet,
    Graph,
    GraphInputError,
    find_induced_p4,
    find_odd_cycle,
    find_triangle,
    from_networkx,
    is_bicluster,
    make_pair,
    symmetric_difference,
)
from solver import decide, solve_minimum

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class GraphParseError(GraphInputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"linha {line}: {message}")
        self.line = line


# -----------------------
# LEITURA E ESCRITA
# -----------------------
def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _two_ints(number: int, line: str, what: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphParseError(number, f"esperado '{what}', encontrado {line!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(number, f"esperado '{what}' com inteiros, encontrado {line!r}") from None


def parse_graph(text: str) -> Graph:
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise GraphParseError(1, "cabeçalho 'n m' ausente")
    number, line = header
    n, m = _two_ints(number, line, "n m")
    if n < 0 or m < 0:
        raise GraphParseError(number, f"n e m precisam ser não negativos: {line!r}")

    seen: set[tuple[int, int]] = set()
    last = number
    for number, line in lines:
        last = number
        if len(seen) == m:
            raise GraphParseError(number, f"mais arestas que as {m} declaradas")
        u, v = _two_ints(number, line, "u v")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(number, f"vértice fora de 0..{n - 1}: {line!r}")
        if u == v:
            raise GraphParseError(number, f"laço no vértice {u}")
        pair = make_pair(u, v)
        if pair in seen:
            raise GraphParseError(number, f"aresta repetida {pair}")
        seen.add(pair)
    if len(seen) != m:
        raise GraphParseError(last, f"{len(seen)} arestas encontradas, {m} declaradas")
    return Graph.from_edges(n, seen)


def format_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.edge_count}")
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_edit_script(g: Graph, edits: EditSet) -> str:
    lines = [f"k {len(edits)}"]
    lines += [f"{'del' if g.has_edge(u, v) else 'add'} {u} {v}" for u, v in sorted(edits)]
    return "\n".join(lines) + "\n"


def decode_graph_bytes(data: bytes) -> str:
    """UTF-8 com ou sem BOM; byte inválido vira erro com o número da linha."""
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        raise GraphParseError(line, f"byte inválido em UTF-8 na posição {e.start}") from None


def read_graph(path: str) -> Graph:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return parse_graph(decode_graph_bytes(data))


# -----------------------
# COMANDOS
# -----------------------
def cmd_decide(path: str, k: int, out: Optional[TextIO] = None) -> int:
    if k < 0:
        raise GraphInputError(f"k precisa ser não negativo: {k}")
    g = read_graph(path)
    edits = decide(g, k)
    if edits is None:
        print("NO", file=out)
        return EXIT_NO
    print(format_edit_script(g, edits), end="", file=out)
    return EXIT_OK


def cmd_solve(path: str, out: Optional[TextIO] = None) -> int:
    g = read_graph(path)
    solution = solve_minimum(g)
    if not is_bicluster(symmetric_difference(g, solution.edits)):
        raise RuntimeError("Script calculado não produz um grafo bicluster")
    print(format_edit_script(g, solution.edits), end="", file=out)
    return EXIT_OK


def cmd_recognize(path: str, out: Optional[TextIO] = None) -> int:
    g = read_graph(path)
    if is_bicluster(g):
        print("BICLUSTER", file=out)
        return EXIT_OK

    print("NOT-BICLUSTER", file=out)
    triangle = find_triangle(g)
    cycle = find_odd_cycle(g) if triangle is None else None
    p4 = find_induced_p4(g) if triangle is None and cycle is None else None
    if triangle is not None:
        print("TRIANGLE " + " ".join(map(str, triangle)), file=out)
    elif cycle is not None:
        print("ODD-CYCLE " + " ".join(map(str, cycle)), file=out)
    elif p4 is not None:
        print("P4 " + " ".join(map(str, p4)), file=out)
    return EXIT_NO


def cmd_min_edits(path: str, out: Optional[TextIO] = None) -> int:
    g = read_graph(path)
    family = minimal_editing_sets(g)
    print(f"FMIN {len(family)}", file=out)
    for f in family:
        ops = ", ".join(f"{'del' if g.has_edge(u, v) else 'add'} {u} {v}" for u, v in sorted(f)) or "-"
        print(f"F {len(f)}: {ops}", file=out)
    print(f"MIN {len(minimum_editing_set(g))}", file=out)
    return EXIT_OK


def cmd_verify_branching(
    rule: Optional[str] = None,
    mirror_reduce: bool = False,
    output: Optional[str] = None,
    out: Optional[TextIO] = None,
) -> int:
    rules = (rule,) if rule else ("b1", "b2", "b3")
    report = verify_all(rules, mirror_reduce=mirror_reduce, strict=False)
    text = "\n".join(report.lines()) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        print(text, end="", file=out)
    if not report.passed:
        logger.error("Máximo %.6f acima do limite %s", report.maximum, report.bound)
        return EXIT_NO
    return EXIT_OK


def planted_graph(n: int, budget: int, seed: int) -> Graph:
    """Grafo bicluster aleatório em n vértices com `budget` pares trocados."""
    if n < 1 or budget < 0:
        raise GraphInputError(f"Parâmetros inválidos: n={n}, budget={budget}")
    pairs = pair_universe(n)
    if budget > len(pairs):
        raise GraphInputError(f"budget={budget} maior que o número de pares ({len(pairs)})")

    rng = np.random.default_rng(seed)
    groups = int(rng.integers(1, max(1, n // 3) + 1))
    labels = rng.integers(0, groups, size=n)
    planted = nx.empty_graph(n)
    for group in range(groups):
        members = [int(v) for v in rng.permutation(np.flatnonzero(labels == group))]
        if len(members) < 2:
            continue
        cut = int(rng.integers(1, len(members)))
        block = nx.complete_bipartite_graph(cut, len(members) - cut)
        planted = nx.compose(planted, nx.relabel_nodes(block, dict(enumerate(members))))

    toggles = [pairs[int(i)] for i in rng.choice(len(pairs), size=budget, replace=False)]
    return symmetric_difference(from_networkx(planted), toggles)


def cmd_gen(n: int, budget: int, seed: int, out: Optional[TextIO] = None) -> int:
    g = planted_graph(n, budget, seed)
    print(format_graph(g, [f"gen n={n} seed={seed}", f"planted budget {budget}"]), end="", file=out)
    return EXIT_OK


# -----------------------
# ARGPARSE
# -----------------------
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bicluster", description="Bicluster Editing exato por árvore de busca limitada")
    parser.add_argument("-v", "--verbose", action="store_true", help="logs em nível DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="existe conjunto de edição com até k pares?")
    p.add_argument("file")
    p.add_argument("k", type=int)

    p = sub.add_parser("solve", help="conjunto de edição mínimo")
    p.add_argument("file")

    p = sub.add_parser("recognize", help="classifica o grafo como bicluster ou não")
    p.add_argument("file")

    p = sub.add_parser("min-edits", help="lista Fmin de um grafo pequeno")
    p.add_argument("file")

    p = sub.add_parser("verify-branching", help="recalcula os números de ramificação")
    p.add_argument("--rule", choices=("b1", "b2", "b3"))
    p.add_argument("--mirror-reduce", action="store_true", help="remove casos espelhados pela inversão do P4")
    p.add_argument("--output", help="grava o relatório num arquivo em vez da saída padrão")

    p = sub.add_parser("gen", help="grafo bicluster perturbado por trocas aleatórias")
    p.add_argument("n", type=int)
    p.add_argument("budget", type=int)
    p.add_argument("seed", type=int)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    try:
        config.validate()
        level = logging.DEBUG if args.verbose else config.LOG_LEVEL
        logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr)
        logging.getLogger().setLevel(level)

        if args.command == "decide":
            return cmd_decide(args.file, args.k)
        if args.command == "solve":
            return cmd_solve(args.file)
        if args.command == "recognize":
            return cmd_recognize(args.file)
        if args.command == "min-edits":
            return cmd_min_edits(args.file)
        if args.command == "verify-branching":
            return cmd_verify_branching(args.rule, args.mirror_reduce, args.output)
        return cmd_gen(args.n, args.budget, args.seed)
    except (GraphInputError, config.ConfigError, OSError) as e:
        print(f"erro: {e}", file=sys.stderr)
        return EXIT_ERROR
    except Exception:
        logger.exception("Falha inesperada em '%s'", args.command)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
