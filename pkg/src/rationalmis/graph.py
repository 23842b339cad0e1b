"""Network topologies and MIS-checking helpers.

Graphs are undirected, simple, with dense node ids 0..n-1.  Adjacency lists
are stored sorted so every neighbor iteration in the simulator is
deterministic.  Graphs are immutable after construction and safe to share
across parallel trials.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


class ParameterError(ValueError):
    """Infeasible graph-family parameters."""


class FormatError(ValueError):
    """Malformed edge-list input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"node count must be >= 1, got {self.n}")
        if len(self.adjacency) != self.n:
            raise ParameterError("adjacency length does not match node count")
        seen = set()
        for i, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ParameterError(f"adjacency of node {i} is not sorted/deduplicated")
            for j in nbrs:
                if not 0 <= j < self.n:
                    raise ParameterError(f"neighbor {j} of node {i} out of range")
                if j == i:
                    raise ParameterError(f"self-loop at node {i}")
                seen.add((i, j))
        for i, j in seen:
            if (j, i) not in seen:
                raise ParameterError(f"asymmetric edge {i}->{j}")

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as sorted (u, v) pairs with u < v."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2


def _from_edge_set(n: int, edges: set[tuple[int, int]], name: str = "") -> Graph:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(tuple(sorted(set(a))) for a in adj), name=name)


def make_family(kind: str, n: int, seed: int = 0, d: int | None = None, p: float | None = None) -> Graph:
    """Build a named test topology, deterministic in (kind, n, seed, params).

    Kinds: path, cycle, complete, star, random_regular (needs d),
    erdos_renyi (needs p).
    """
    if n < 1:
        raise ParameterError(f"node count must be >= 1, got {n}")
    edges: set[tuple[int, int]] = set()
    if kind == "path":
        edges = {(i, i + 1) for i in range(n - 1)}
    elif kind == "cycle":
        if n < 3:
            raise ParameterError("cycle needs n >= 3")
        edges = {(i, (i + 1) % n) for i in range(n)}
        edges = {(min(u, v), max(u, v)) for u, v in edges}
    elif kind == "complete":
        edges = {(i, j) for i in range(n) for j in range(i + 1, n)}
    elif kind == "star":
        edges = {(0, i) for i in range(1, n)}
    elif kind == "random_regular":
        if d is None:
            raise ParameterError("random_regular needs degree d")
        return _random_regular(n, d, seed)
    elif kind == "erdos_renyi":
        if p is None:
            raise ParameterError("erdos_renyi needs edge probability p")
        if not 0.0 <= p <= 1.0:
            raise ParameterError(f"edge probability must be in [0,1], got {p}")
        rng = random.Random(f"er:{n}:{seed}")
        edges = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    else:
        raise ParameterError(f"unknown family {kind!r}")
    return _from_edge_set(n, edges, name=f"{kind}:{n}")


def _random_regular(n: int, d: int, seed: int) -> Graph:
    """Configuration-model d-regular graph, resampled until simple."""
    if d < 0 or d >= n:
        raise ParameterError(f"regular degree must satisfy 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2 != 0:
        raise ParameterError(f"n*d must be even for a d-regular graph (n={n}, d={d})")
    if d == 0:
        return _from_edge_set(n, set(), name=f"random_regular({d}):{n}")
    rng = random.Random(f"regular:{n}:{d}:{seed}")
    for _ in range(1000):
        stubs = [i for i in range(n) for _ in range(d)]
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        ok = True
        for k in range(0, len(stubs), 2):
            u, v = stubs[k], stubs[k + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return _from_edge_set(n, edges, name=f"random_regular({d}):{n}")
    raise ParameterError(f"could not sample a simple {d}-regular graph on {n} nodes")


def load_edge_list(text: str) -> Graph:
    """Parse a line-oriented edge list: one "u v" pair per line, '#' comments.

    Node count is max id + 1; duplicate edges are deduplicated; self-loops
    and non-integer tokens are format errors.
    """
    edges: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two tokens, got {len(parts)}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer token in {line!r}") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative node id")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at node {u}")
        edges.add((min(u, v), max(u, v)))
        max_id = max(max_id, u, v)
    if max_id < 0:
        raise FormatError("edge list is empty")
    return _from_edge_set(max_id + 1, edges, name="edge-list")


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def is_independent_set(g: Graph, s) -> bool:
    s = set(s)
    return all(v not in s for u in s for v in g.adjacency[u])


def is_maximal_independent_set(g: Graph, s) -> bool:
    s = set(s)
    if not is_independent_set(g, s):
        return False
    return all(i in s or any(j in s for j in g.adjacency[i]) for i in range(g.n))
