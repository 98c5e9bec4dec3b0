"""Seeded generators for sparse connected benchmark graphs.

Five families: Erdos-Renyi (uniform over m-edge graphs), Watts-Strogatz
(rewired ring lattice), Eppstein-Wang (steady-state edge-rewiring process
with a preferential endpoint choice, giving right-skewed degrees), random
planar (random stacked triangulation thinned by edge deletion), and a small
set of hand-coded classics.

Connectivity is obtained by rejection: a model is resampled from the same
seeded stream until the draw is connected, which preserves the model's
conditional distribution. Every generated graph is simple and satisfies
|E| <= 3|V|. The random-planar family is a generated substitute corpus and
its specs are labeled as such in output metadata.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph, GraphError, make_graph

MODELS = ("erdos_renyi", "watts_strogatz", "eppstein_wang", "random_planar", "classic")

CLASSIC_NAMES = ("cycle", "path", "star", "tree", "dodecahedron", "icosahedron",
                 "triangulated_triangle")

PLANAR_SUBSTITUTE_NOTE = "generated substitute for external planar benchmark sets"


@dataclass(frozen=True)
class GenSpec:
    """A reproducible graph recipe: model, size, model parameters, seed."""

    model: str
    n: int
    seed: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {MODELS}")

    def to_dict(self) -> dict:
        d = {"model": self.model, "n": self.n, "seed": self.seed,
             "params": dict(self.params)}
        if self.model == "random_planar":
            d["note"] = PLANAR_SUBSTITUTE_NOTE
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GenSpec":
        return cls(model=d["model"], n=d["n"], seed=d["seed"],
                   params=dict(d.get("params", {})))


def _connected(n: int, edges) -> bool:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def gen_erdos_renyi(n: int, m: int, seed: int) -> Graph:
    """Uniform random connected graph with exactly m edges.

    Draws uniform m-subsets of all vertex pairs and rejects disconnected
    ones, so the result is uniform over connected m-edge graphs.
    Requires n-1 <= m <= min(3n, C(n,2)).
    """
    max_m = n * (n - 1) // 2
    if m < n - 1:
        raise GraphError(f"m={m} cannot connect {n} vertices (need at least {n - 1})")
    if m > 3 * n or m > max_m:
        raise GraphError(f"m={m} exceeds the sparsity bound min(3n={3 * n}, C(n,2)={max_m})")
    rng = random.Random(seed)
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    while True:
        edges = rng.sample(all_pairs, m)
        if _connected(n, edges):
            return make_graph(n, edges)


def gen_watts_strogatz(n: int, k: int = 4, p: float = 0.1, seed: int = 0) -> Graph:
    """Small-world graph: ring lattice with k neighbors, each edge rewired
    with probability p (avoiding self-loops and duplicates), resampled until
    connected. k must be even and < n; |E| is always n*k/2.
    """
    if k % 2 != 0 or k <= 0:
        raise GraphError(f"ring degree k must be a positive even number, got {k}")
    if k >= n:
        raise GraphError(f"ring degree k={k} must be smaller than n={n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"rewiring probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    while True:
        edges = set()
        for j in range(1, k // 2 + 1):
            for i in range(n):
                edges.add(tuple(sorted((i, (i + j) % n))))
        neighbors = {i: set() for i in range(n)}
        for u, v in edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        for j in range(1, k // 2 + 1):
            for i in range(n):
                old = tuple(sorted((i, (i + j) % n)))
                if rng.random() >= p or old not in edges:
                    continue
                if len(neighbors[i]) >= n - 1:
                    continue  # i already adjacent to everyone else
                w = rng.randrange(n)
                while w == i or w in neighbors[i]:
                    w = rng.randrange(n)
                edges.remove(old)
                neighbors[old[0]].discard(old[1])
                neighbors[old[1]].discard(old[0])
                edges.add(tuple(sorted((i, w))))
                neighbors[i].add(w)
                neighbors[w].add(i)
        if _connected(n, edges):
            return make_graph(n, edges)


def gen_eppstein_wang(n: int, steps: int | None = None, seed: int = 0,
                      m: int | None = None) -> Graph:
    """Steady-state rewiring process with preferential endpoint choice.

    Starts from a random connected graph with m edges, then repeatedly
    deletes a uniformly random edge and inserts an edge from a uniformly
    random vertex to a vertex chosen with probability proportional to its
    degree (a random endpoint of a random edge). Vertex and edge counts stay
    fixed and the stationary degrees are right-skewed. A rewiring step that
    would disconnect the graph is rejected, restricting the process to
    connected graphs (plain end-of-run rejection almost never terminates for
    tree-like m). Defaults: steps = 10*n, m drawn uniformly from
    [n-1, min(3n, C(n,2))].
    """
    if n < 2:
        raise GraphError(f"need at least 2 vertices, got {n}")
    rng = random.Random(seed)
    max_m = n * (n - 1) // 2
    if m is None:
        m = rng.randint(n - 1, min(3 * n, max_m))
    if not n - 1 <= m <= min(3 * n, max_m):
        raise GraphError(f"m={m} outside [{n - 1}, {min(3 * n, max_m)}]")
    if steps is None:
        steps = 10 * n
    edges = set()
    for v in range(1, n):
        edges.add(tuple(sorted((rng.randrange(v), v))))
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.add(tuple(sorted((u, v))))
    edge_list = sorted(edges)
    for _ in range(steps):
        kill_idx = rng.randrange(len(edge_list))
        dead = edge_list[kill_idx]
        v = rng.randrange(n)
        pick = edge_list[rng.randrange(len(edge_list))]
        w = pick[rng.randrange(2)]
        if v == w:
            continue
        new = tuple(sorted((v, w)))
        if new in edges or new == dead:
            continue
        replacement = (edges - {dead}) | {new}
        if not _connected(n, replacement):
            continue
        edges = replacement
        edge_list[kill_idx] = new
    return make_graph(n, edges)


def gen_random_planar(n: int, m: int, seed: int) -> Graph:
    """Connected planar graph with exactly m edges.

    Builds a random maximal planar graph (incremental vertex insertion into
    random triangular faces), then deletes uniformly random non-bridge edges
    until m remain, preserving connectivity and planarity throughout.
    Requires n >= 3 and n-1 <= m <= 3n-6.
    """
    if n < 3:
        raise GraphError(f"planar generator needs n >= 3, got {n}")
    if not n - 1 <= m <= 3 * n - 6:
        raise GraphError(f"m={m} outside the planar range [{n - 1}, {3 * n - 6}]")
    rng = random.Random(seed)
    edges = {(0, 1), (0, 2), (1, 2)}
    faces = [(0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges.add(tuple(sorted((v, a))))
        edges.add(tuple(sorted((v, b))))
        edges.add(tuple(sorted((v, c))))
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    while len(edges) > m:
        candidates = sorted(edges)
        e = candidates[rng.randrange(len(candidates))]
        rest = edges - {e}
        if _connected(n, rest):
            edges = rest
    return make_graph(n, edges)


def _classic_edges(name: str, size: int | None):
    if name == "cycle":
        k = 6 if size is None else size
        if k < 3:
            raise GraphError("cycle needs at least 3 vertices")
        return k, [(i, (i + 1) % k) for i in range(k)]
    if name == "path":
        k = 6 if size is None else size
        if k < 2:
            raise GraphError("path needs at least 2 vertices")
        return k, [(i, i + 1) for i in range(k - 1)]
    if name == "star":
        k = 4 if size is None else size
        if k < 2:
            raise GraphError("star needs at least 2 vertices")
        return k, [(0, i) for i in range(1, k)]
    if name == "tree":
        k = 15 if size is None else size
        if k < 2:
            raise GraphError("tree needs at least 2 vertices")
        return k, [((i - 1) // 2, i) for i in range(1, k)]
    if name == "dodecahedron":
        # Generalized Petersen construction GP(10, 2): outer 10-cycle 0..9,
        # inner vertices 10..19 joined with skip 2, plus spokes.
        edges = [(i, (i + 1) % 10) for i in range(10)]
        edges += [(i, 10 + i) for i in range(10)]
        edges += [(10 + i, 10 + (i + 2) % 10) for i in range(10)]
        return 20, edges
    if name == "icosahedron":
        # Pole 0, upper ring 1..5, lower ring 6..10, pole 11.
        edges = [(0, i) for i in range(1, 6)]
        edges += [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
        edges += [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
        edges += [(1 + i, 6 + i) for i in range(5)]
        edges += [(1 + i, 6 + (i + 4) % 5) for i in range(5)]
        edges += [(11, 6 + i) for i in range(5)]
        return 12, edges
    if name == "triangulated_triangle":
        # Triangular grid with `size` vertices on each side.
        side = 4 if size is None else size
        if side < 2:
            raise GraphError("triangulated triangle needs side >= 2")
        rows = []
        nxt = 0
        for r in range(side):
            rows.append(list(range(nxt, nxt + r + 1)))
            nxt += r + 1
        edges = []
        for r in range(side):
            for i in range(r):
                edges.append((rows[r][i], rows[r][i + 1]))
            if r + 1 < side:
                for i in range(r + 1):
                    edges.append((rows[r][i], rows[r + 1][i]))
                    edges.append((rows[r][i], rows[r + 1][i + 1]))
        return nxt, edges
    raise GraphError(f"unknown classic graph {name!r}; expected one of {CLASSIC_NAMES}")


def classic(name: str, size: int | None = None) -> Graph:
    """Hand-coded classic graphs by name.

    cycle/path/star/tree/triangulated_triangle take an optional size; the
    dodecahedron (20 vertices, 30 edges, 3-regular) and icosahedron
    (12 vertices, 30 edges, 5-regular) are fixed.
    """
    n, edges = _classic_edges(name, size)
    return make_graph(n, edges)


def generate(spec: GenSpec) -> Graph:
    """Materialize a GenSpec into a Graph."""
    p = spec.params
    if spec.model == "erdos_renyi":
        return gen_erdos_renyi(spec.n, p["m"], spec.seed)
    if spec.model == "watts_strogatz":
        return gen_watts_strogatz(spec.n, p.get("k", 4), p.get("p", 0.1), spec.seed)
    if spec.model == "eppstein_wang":
        return gen_eppstein_wang(spec.n, p.get("steps"), spec.seed, p.get("m"))
    if spec.model == "random_planar":
        return gen_random_planar(spec.n, p["m"], spec.seed)
    return classic(p["name"], p.get("size"))
