"""Simple graphs: G(S), blocks, claw-freeness, and line graphs of trees.

Two recognizers of "claw-free block graph" live here on purpose and share
no logic: :func:`is_claw_free_block_graph` works from the block
decomposition, while :func:`reconstruct_root_tree` rebuilds a root tree
from maximal cliques and verifies it edge by edge.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

import networkx as nx

from .f2core import SymplecticSpace, VectorSet, vec_to_str

ISOMORPHISM_CAP = 10


class NotATreeError(ValueError):
    pass


class SimpleGraph:
    """Undirected graph without loops or parallel edges.

    Vertices are arbitrary hashable labels; their insertion order is kept
    for deterministic output.
    """

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices: Iterable[Hashable], edges: Iterable[Iterable[Hashable]] = ()):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        adj: dict = {v: set() for v in self.vertices}
        es = set()
        for e in edges:
            a, b = tuple(e)
            if a == b:
                raise ValueError(f"self-loop at {a!r}")
            if a not in adj or b not in adj:
                raise ValueError(f"edge ({a!r}, {b!r}) has an unknown endpoint")
            adj[a].add(b)
            adj[b].add(a)
            es.add(frozenset((a, b)))
        self.edges = frozenset(es)
        self._adj = {v: frozenset(n) for v, n in adj.items()}

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and set(self.vertices) == set(other.vertices)
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((frozenset(self.vertices), self.edges))

    def __repr__(self):
        es = sorted(tuple(sorted(map(repr, e))) for e in self.edges)
        return f"SimpleGraph({list(self.vertices)!r}, {es})"

    def neighbors(self, v) -> frozenset:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, a, b) -> bool:
        return b in self._adj[a]

    def subgraph(self, keep: Iterable[Hashable]) -> "SimpleGraph":
        keep = set(keep)
        vs = [v for v in self.vertices if v in keep]
        return SimpleGraph(vs, (e for e in self.edges if e <= keep))

    def relabel(self, mapping: Mapping) -> "SimpleGraph":
        return SimpleGraph(
            (mapping[v] for v in self.vertices),
            ((mapping[a] for a in e) for e in self.edges),
        )

    def components(self) -> list[list]:
        seen = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.is_connected() and len(self.edges) == len(self.vertices) - 1

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    # -- constructors -------------------------------------------------------

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(range(n), ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> "SimpleGraph":
        return cls(range(leaves + 1), ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(range(n), itertools.combinations(range(n), 2))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "SimpleGraph":
        """Graph on 0..n-1 whose edges are the set bits of ``mask`` in
        ``itertools.combinations(range(n), 2)`` order."""
        pairs = itertools.combinations(range(n), 2)
        return cls(range(n), (p for k, p in enumerate(pairs) if (mask >> k) & 1))


def is_path_graph(g: SimpleGraph) -> bool:
    """Connected with degrees {1, 1, 2, ..., 2}; one vertex or one edge count."""
    n = len(g)
    if n == 0:
        return False
    if n == 1:
        return True
    if len(g.edges) != n - 1:
        return False
    degs = sorted(g.degree(v) for v in g.vertices)
    if degs[:2] != [1, 1] or any(d != 2 for d in degs[2:]):
        return False
    return g.is_connected()


def graph_of_set(space: SymplecticSpace, vs: VectorSet) -> SimpleGraph:
    """G(S) on member indices 0..|S|-1; i ~ j iff B(S_i, S_j) = 1."""
    m = vs.members
    form = space.form
    edges = [
        (i, j)
        for i in range(len(m))
        for j in range(i + 1, len(m))
        if form(m[i], m[j])
    ]
    return SimpleGraph(range(len(m)), edges)


def vector_graph(space: SymplecticSpace, vectors: Iterable[int]) -> SimpleGraph:
    """G(S) with the vectors themselves as vertex labels."""
    vs = list(vectors)
    form = space.form
    return SimpleGraph(
        vs,
        ((a, b) for a, b in itertools.combinations(vs, 2) if form(a, b)),
    )


# -- blocks -----------------------------------------------------------------


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset, ...]
    cut_vertices: frozenset


def block_decomposition(g: SimpleGraph) -> BlockDecomposition:
    """Blocks (biconnected components, bridges, isolated vertices) and cut
    vertices."""
    h = g.to_networkx()
    blocks = [frozenset(b) for b in nx.biconnected_components(h)]
    covered = set().union(*blocks) if blocks else set()
    blocks.extend(frozenset([v]) for v in g.vertices if v not in covered)
    order = {v: i for i, v in enumerate(g.vertices)}
    blocks.sort(key=lambda b: sorted(order[v] for v in b))
    return BlockDecomposition(tuple(blocks), frozenset(nx.articulation_points(h)))


def is_claw_free(g: SimpleGraph) -> bool:
    """No vertex has three pairwise non-adjacent neighbours."""
    for v in g.vertices:
        nb = list(g.neighbors(v))
        if len(nb) < 3:
            continue
        for a, b, c in itertools.combinations(nb, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


def _is_clique(g: SimpleGraph, vs) -> bool:
    return all(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2))


def is_block_graph(g: SimpleGraph) -> bool:
    """Connected, and every block induces a complete subgraph."""
    if not g.is_connected():
        return False
    return all(_is_clique(g, b) for b in block_decomposition(g).blocks)


def is_claw_free_block_graph(g: SimpleGraph) -> bool:
    return is_block_graph(g) and is_claw_free(g)


@dataclass(frozen=True)
class ClassicalConditions:
    connected: bool
    at_most_two_components: bool
    blocks_complete: bool
    block_intersection_tree: bool

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (
            self.connected,
            self.at_most_two_components,
            self.blocks_complete,
            self.block_intersection_tree,
        )


def classical_conditions(g: SimpleGraph) -> ClassicalConditions:
    """The four graph conditions of the classical characterization.

    (i) connected; (ii) deleting any one vertex leaves at most two
    components; (iii) every block is complete; (iv) the graph H on the
    blocks, adjacent when they intersect, is a tree.
    """
    c1 = g.is_connected()
    c2 = all(
        len(g.subgraph(set(g.vertices) - {v}).components()) <= 2 for v in g.vertices
    )
    blocks = block_decomposition(g).blocks
    c3 = all(_is_clique(g, b) for b in blocks)
    h = SimpleGraph(
        range(len(blocks)),
        (
            (i, j)
            for i, j in itertools.combinations(range(len(blocks)), 2)
            if blocks[i] & blocks[j]
        ),
    )
    return ClassicalConditions(c1, c2, c3, h.is_tree())


# -- line graphs and root trees ---------------------------------------------


@dataclass(frozen=True)
class EdgeLabeledTree:
    """A tree whose edges carry distinct labels (vectors, or the vertices
    of the graph the tree is a root of)."""

    tree: SimpleGraph
    labels: Mapping  # frozenset edge -> label

    def __post_init__(self):
        if not self.tree.is_tree():
            raise NotATreeError("underlying graph is not a tree")
        if set(self.labels) != set(self.tree.edges):
            raise ValueError("labels must cover exactly the tree's edges")
        if len(set(self.labels.values())) != len(self.labels):
            raise ValueError("edge labels are not distinct")

    def edge_of(self, label) -> frozenset:
        for e, lab in self.labels.items():
            if lab == label:
                return e
        raise KeyError(label)

    def incident_labels(self, u) -> list:
        return [self.labels[frozenset((u, x))] for x in self.tree.neighbors(u)]

    def pendant_labels(self) -> list:
        return [lab for e, lab in self.labels.items() if any(self.tree.degree(x) == 1 for x in e)]

    def line_graph(self) -> SimpleGraph:
        return line_graph(self.tree, self.labels)


def line_graph(tree: SimpleGraph, labels: Mapping | None = None) -> SimpleGraph:
    """Vertices are the tree's edges (or their labels); adjacent when they
    share an endpoint."""
    if not tree.is_tree():
        raise NotATreeError("line_graph expects a tree")
    if labels is None:
        labels = {e: e for e in tree.edges}
    order = {v: i for i, v in enumerate(tree.vertices)}
    edges = sorted(tree.edges, key=lambda e: sorted(order[x] for x in e))
    lg_edges = []
    for v in tree.vertices:
        inc = [labels[frozenset((v, x))] for x in tree.neighbors(v)]
        lg_edges.extend(itertools.combinations(inc, 2))
    return SimpleGraph((labels[e] for e in edges), lg_edges)


def maximal_cliques(g: SimpleGraph) -> list[frozenset]:
    """Bron-Kerbosch with pivoting."""
    out: list[frozenset] = []

    def expand(r: set, p: set, x: set):
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(g.neighbors(u) & p))
        for v in list(p - g.neighbors(pivot)):
            nb = g.neighbors(v)
            expand(r | {v}, p & nb, x & nb)
            p.discard(v)
            x.add(v)

    expand(set(), set(g.vertices), set())
    return out


def reconstruct_root_tree(g: SimpleGraph) -> EdgeLabeledTree | None:
    """Find a tree whose line graph is ``g``, edges labelled by g's vertices.

    In the line graph of a tree the maximal cliques are exactly the stars
    at tree vertices of degree >= 2, so each vertex of ``g`` must sit in
    one or two of them.  Tree vertices are the maximal cliques plus one
    leaf for every g-vertex lying in a single clique.  The candidate is
    accepted only if it is a tree whose labelled line graph equals ``g``.
    """
    n = len(g)
    if n == 0:
        return None
    if n == 1:
        (v,) = g.vertices
        return EdgeLabeledTree(SimpleGraph([0, 1], [(0, 1)]), {frozenset((0, 1)): v})
    cliques = maximal_cliques(g)
    cliques.sort(key=lambda c: sorted(g.vertices.index(v) for v in c))
    member_of: dict = {v: [] for v in g.vertices}
    for k, c in enumerate(cliques):
        if len(c) < 2:
            return None  # isolated vertex in a graph with > 1 vertex
        for v in c:
            member_of[v].append(k)
    tree_vertices: list = [("clique", k) for k in range(len(cliques))]
    labels = {}
    for v in g.vertices:
        ks = member_of[v]
        if len(ks) == 2:
            a, b = ("clique", ks[0]), ("clique", ks[1])
        elif len(ks) == 1:
            a, b = ("clique", ks[0]), ("leaf", v)
            tree_vertices.append(b)
        else:
            return None
        e = frozenset((a, b))
        if e in labels:
            return None
        labels[e] = v
    # Relabel tree vertices 0..m-1 for a tidy result.
    index = {tv: i for i, tv in enumerate(tree_vertices)}
    tree = SimpleGraph(range(len(tree_vertices)), (tuple(index[x] for x in e) for e in labels))
    if not tree.is_tree():
        return None
    labels = {frozenset(index[x] for x in e): v for e, v in labels.items()}
    candidate = EdgeLabeledTree(tree, labels)
    if candidate.line_graph() != g:
        return None
    return candidate


def graph_isomorphic(g1: SimpleGraph, g2: SimpleGraph, cap: int = ISOMORPHISM_CAP) -> bool:
    """Brute-force isomorphism test with degree-class pruning."""
    if len(g1) > cap or len(g2) > cap:
        raise ValueError(f"graph larger than isomorphism cap {cap}")
    if len(g1) != len(g2) or len(g1.edges) != len(g2.edges):
        return False
    d1 = sorted(g1.degree(v) for v in g1.vertices)
    d2 = sorted(g2.degree(v) for v in g2.vertices)
    if d1 != d2:
        return False
    vs1 = sorted(g1.vertices, key=lambda v: -g1.degree(v))
    by_deg: dict[int, list] = {}
    for v in g2.vertices:
        by_deg.setdefault(g2.degree(v), []).append(v)
    mapping: dict = {}
    used: set = set()

    def extend(i: int) -> bool:
        if i == len(vs1):
            return True
        v = vs1[i]
        for w in by_deg[g1.degree(v)]:
            if w in used:
                continue
            if all(g1.has_edge(v, u) == g2.has_edge(w, mapping[u]) for u in vs1[:i]):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)


# -- enumeration ------------------------------------------------------------


def all_graphs(n: int, connected_only: bool = False):
    """Every labelled graph on vertices 0..n-1."""
    m = n * (n - 1) // 2
    for mask in range(1 << m):
        g = SimpleGraph.from_mask(n, mask)
        if connected_only and not g.is_connected():
            continue
        yield g


# -- serialization ----------------------------------------------------------


def _label_str(v, dim: int | None) -> str:
    if dim is not None and isinstance(v, int):
        return vec_to_str(v, dim)
    return str(v)


def to_dot(
    g: SimpleGraph,
    name: str = "G",
    dim: int | None = None,
    labels: Mapping | None = None,
    edge_labels: Mapping | None = None,
) -> str:
    """DOT text for ``g``.  Integer vertices are written as bitstrings when
    ``dim`` is given; ``labels`` overrides the displayed text per vertex and
    ``edge_labels`` (keyed by frozenset edge) adds text to edges."""
    ids = {v: f"n{i}" for i, v in enumerate(g.vertices)}
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        text = labels[v] if labels and v in labels else _label_str(v, dim)
        lines.append(f'  {ids[v]} [label="{text}"];')
    order = {v: i for i, v in enumerate(g.vertices)}
    for e in sorted(g.edges, key=lambda e: sorted(order[x] for x in e)):
        a, b = sorted(e, key=order.__getitem__)
        attr = f' [label="{edge_labels[e]}"]' if edge_labels and e in edge_labels else ""
        lines.append(f"  {ids[a]} -- {ids[b]}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_adjacency_json(g: SimpleGraph, dim: int | None = None) -> str:
    names = {v: _label_str(v, dim) for v in g.vertices}
    adj = {names[v]: sorted(names[u] for u in g.neighbors(v)) for v in g.vertices}
    return json.dumps({"vertices": [names[v] for v in g.vertices], "adjacency": adj})


def from_adjacency_json(text: str) -> SimpleGraph:
    data = json.loads(text)
    vs = data["vertices"]
    edges = set()
    for v, nbs in data["adjacency"].items():
        for u in nbs:
            edges.add(frozenset((v, u)))
    for e in edges:
        a, b = tuple(e)
        if b not in data["adjacency"].get(a, ()) or a not in data["adjacency"].get(b, ()):
            raise ValueError(f"adjacency not symmetric at ({a}, {b})")
    return SimpleGraph(vs, edges)
