import random
from itertools import combinations
from typing import Iterator

from cli import GraphParseError
from graph_core import EditSet, Graph, make_pair


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int, offset: int = 0, n: int = 0) -> Graph:
    n = max(n, offset + a + b)
    return Graph.from_edges(n, [(offset + i, offset + a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.n
    return Graph.from_edges(offset, edges)


def all_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _script_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if parts and not parts[0].startswith("#"):
            yield number, parts


def parse_edit_script(text: str) -> tuple[int, EditSet]:
    """(tamanho declarado, pares) de um script 'k <size>' + linhas add/del."""
    lines = _script_lines(text)
    number, header = next(lines, (1, []))
    if len(header) != 2 or header[0] != "k":
        raise GraphParseError(number, f"esperado cabeçalho 'k <size>', encontrado {' '.join(header)!r}")
    try:
        size = int(header[1])
    except ValueError:
        raise GraphParseError(number, f"tamanho não inteiro: {header[1]!r}") from None

    pairs = set()
    for number, parts in lines:
        if len(parts) != 3 or parts[0] not in ("add", "del"):
            raise GraphParseError(number, f"esperado 'add u v' ou 'del u v', encontrado {' '.join(parts)!r}")
        try:
            pair = make_pair(int(parts[1]), int(parts[2]))
        except ValueError:
            raise GraphParseError(number, f"par inválido {' '.join(parts[1:])!r}") from None
        if pair in pairs:
            raise GraphParseError(number, f"par repetido {pair}")
        pairs.add(pair)
    return size, frozenset(pairs)
