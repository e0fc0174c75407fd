"""Simple undirected graphs, path decompositions and the two graph families.

Vertices are dense ids ``0 .. vertex_count - 1``.  The ladder and clique
chain constructors also return a small metadata record that maps the
1-based logical names (``x_i``, ``y_i``, ``V_i``) onto those ids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import EnumerationOverflowError, InvalidInputError

DEFAULT_PATH_CAP = 10**7


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidInputError("vertex_count must be non-negative")
        normalised = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidInputError(f"edge ({u}, {v}) has an endpoint out of range")
            e = (min(u, v), max(u, v))
            if e in normalised:
                raise InvalidInputError(f"duplicate edge {e}")
            normalised.add(e)
        object.__setattr__(self, "edges", tuple(sorted(normalised)))

    @cached_property
    def adjacency(self) -> tuple:
        """Sorted neighbour tuple for every vertex."""
        adj = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "edges": [list(e) for e in self.edges],
            "meta": dict(self.meta) or {"family": "custom"},
        }

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        try:
            return cls(int(data["vertex_count"]),
                       tuple((int(u), int(v)) for u, v in data["edges"]),
                       dict(data.get("meta") or {"family": "custom"}))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed graph JSON: {exc}") from exc


@dataclass(frozen=True)
class LadderMeta:
    n: int

    def x(self, i: int) -> int:
        return 2 * (i - 1)

    def y(self, i: int) -> int:
        return 2 * (i - 1) + 1


@dataclass(frozen=True)
class CliqueChainMeta:
    n: int
    k: int

    def clique(self, i: int) -> range:
        """Vertex ids of ``V_i`` (1-based)."""
        return range((i - 1) * self.k, i * self.k)


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def to_json(self) -> dict:
        return {"bags": [sorted(b) for b in self.bags]}

    @classmethod
    def from_json(cls, data: dict) -> "PathDecomposition":
        try:
            return cls(tuple(frozenset(int(v) for v in bag) for bag in data["bags"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed decomposition JSON: {exc}") from exc


@dataclass
class DecompositionReport:
    width: int | None
    violations: list

    @property
    def valid(self) -> bool:
        return not self.violations


def build_ladder(n: int) -> tuple[Graph, LadderMeta]:
    """2n-vertex ladder: rungs, rails and both diagonals between columns."""
    if n < 1:
        raise InvalidInputError("ladder needs n >= 1")
    m = LadderMeta(n)
    edges = [(m.x(i), m.y(i)) for i in range(1, n + 1)]
    for i in range(1, n):
        edges += [(m.x(i), m.x(i + 1)), (m.y(i), m.y(i + 1)),
                  (m.x(i), m.y(i + 1)), (m.x(i + 1), m.y(i))]
    return Graph(2 * n, tuple(edges), {"family": "ladder", "n": n}), m


def ladder_decomposition(n: int) -> PathDecomposition:
    if n < 2:
        raise InvalidInputError("ladder decomposition needs n >= 2")
    m = LadderMeta(n)
    return PathDecomposition(tuple(
        {m.x(i), m.y(i), m.x(i + 1), m.y(i + 1)} for i in range(1, n)))


def build_clique_chain(n: int, k: int) -> tuple[Graph, CliqueChainMeta]:
    """n cliques of size k, each completely joined to the next."""
    if n < 1:
        raise InvalidInputError("clique chain needs n >= 1")
    if k < 3:
        raise InvalidInputError("clique chain needs k >= 3")
    m = CliqueChainMeta(n, k)
    edges = []
    for i in range(1, n + 1):
        block = m.clique(i)
        edges += [(u, v) for u in block for v in block if u < v]
        if i < n:
            edges += [(u, v) for u in block for v in m.clique(i + 1)]
    return Graph(k * n, tuple(edges), {"family": "clique_chain", "n": n, "k": k}), m


def clique_chain_decomposition(n: int, k: int) -> PathDecomposition:
    if n < 2:
        raise InvalidInputError("clique chain decomposition needs n >= 2")
    m = CliqueChainMeta(n, k)
    return PathDecomposition(tuple(
        set(m.clique(i)) | set(m.clique(i + 1)) for i in range(1, n)))


def build_path_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidInputError("path graph needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), {"family": "path", "n": n})


def path_graph_decomposition(n: int) -> PathDecomposition:
    """Bags ``{i, i+1}``; a single bag ``{0}`` when n == 1."""
    if n < 1:
        raise InvalidInputError("path graph needs n >= 1")
    if n == 1:
        return PathDecomposition(({0},))
    return PathDecomposition(tuple({i, i + 1} for i in range(n - 1)))


def validate_decomposition(g: Graph, d: PathDecomposition) -> DecompositionReport:
    """Check coverage of vertices and edges and contiguity of every vertex's
    bag run.  Violations are reported as strings, never raised."""
    violations = []
    occurrences = [[] for _ in range(g.vertex_count)]
    for idx, bag in enumerate(d.bags):
        for v in bag:
            if not 0 <= v < g.vertex_count:
                violations.append(f"bag {idx} contains unknown vertex {v}")
            else:
                occurrences[v].append(idx)
    for v, occ in enumerate(occurrences):
        if not occ:
            violations.append(f"vertex {v} is in no bag")
        elif occ[-1] - occ[0] + 1 != len(occ):
            violations.append(f"vertex {v} occurs in non-contiguous bags {occ}")
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in d.bags):
            violations.append(f"edge ({u}, {v}) is in no bag")
    return DecompositionReport(None if violations else d.width, violations)


def enumerate_simple_paths(g: Graph, cap: int = DEFAULT_PATH_CAP) -> Iterator[tuple]:
    """Yield every simple path with at least two vertices exactly once.

    Paths are oriented so the first vertex id is below the last.  Order is
    depth-first from ascending start vertices through ascending neighbours,
    a path being yielded when it is first reached.  Raises
    :class:`EnumerationOverflowError` before yielding path number ``cap + 1``.
    """
    adj = g.adjacency
    on_path = [False] * g.vertex_count
    produced = 0
    for start in range(g.vertex_count):
        path = [start]
        on_path[start] = True
        stack = [iter(adj[start])]
        while stack:
            for w in stack[-1]:
                if not on_path[w]:
                    break
            else:
                stack.pop()
                on_path[path.pop()] = False
                continue
            path.append(w)
            on_path[w] = True
            stack.append(iter(adj[w]))
            if w > start:
                produced += 1
                if produced > cap:
                    raise EnumerationOverflowError(cap)
                yield tuple(path)


def is_simple_path(g: Graph, path: Iterable[int]) -> bool:
    """True iff `path` is a simple path (distinct vertices, consecutive ones adjacent)."""
    path = list(path)
    if len(set(path)) != len(path):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
