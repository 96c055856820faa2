"""Pendant-edge extensions of edge-labelled trees and the dual maps
theta, lambda, mu used to characterise when they exist.

Linear maps are lists of bit rows, one row per domain basis vector
holding its image (the same convention as :class:`BitMatrix`).  For a tree
with vertices u_0..u_{m-1} and edge basis alpha_0..alpha_{n-1}:

* theta: V -> V*, row i has bit j = B(alpha_i, alpha_j)
* lambda: U -> V*, row k has bit j = [u_k incident to alpha_j]
* mu: V -> U, row i has bits at the two endpoints of alpha_i
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .f2core import SymplecticSpace, VectorSet, apply_map, kernel_of_map, rank, solve, solve_multi
from .graphs import (
    EdgeLabeledTree,
    SimpleGraph,
    is_claw_free_block_graph,
    reconstruct_root_tree,
    vector_graph,
)


class ConstructionError(ValueError):
    pass


class DegenerateExtensionError(ConstructionError):
    """The requested pendant vector already lies in the basis.

    Happens exactly for a 2-dimensional space with u a leaf: the
    extension is then the basis itself, which is independent.
    """


# -- trees ------------------------------------------------------------------


def tree_from_prufer(code: Sequence[int]) -> SimpleGraph:
    """Labelled tree on 0..len(code)+1 decoded from a Pruefer sequence."""
    m = len(code) + 2
    degree = [1] * m
    for x in code:
        if not 0 <= x < m:
            raise ValueError(f"Pruefer entry {x} outside 0..{m - 1}")
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(i for i in range(m) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(m) if degree[i] == 1)
    edges.append((u, v))
    return SimpleGraph(range(m), edges)


def all_labeled_trees(m: int):
    """Every labelled tree on vertices 0..m-1 (m^(m-2) of them)."""
    if m == 1:
        yield SimpleGraph([0])
        return
    for code in itertools.product(range(m), repeat=m - 2):
        yield tree_from_prufer(code)


def tree_from_parents(parents: Sequence[int | None]) -> SimpleGraph:
    """Tree on 0..len-1; exactly one entry (the root) is None or -1."""
    roots = [i for i, p in enumerate(parents) if p is None or p == -1]
    if len(roots) != 1:
        raise ValueError("parent array needs exactly one root")
    return SimpleGraph(range(len(parents)), ((i, p) for i, p in enumerate(parents) if i not in roots))


def sorted_edges(tree: SimpleGraph) -> list[frozenset]:
    order = {v: i for i, v in enumerate(tree.vertices)}
    return sorted(tree.edges, key=lambda e: sorted(order[x] for x in e))


def edge_basis_instance(tree: SimpleGraph) -> tuple[SymplecticSpace, EdgeLabeledTree]:
    """Space with one basis vector per tree edge, B = 1 on edges sharing a
    vertex.  G(I) is then the line graph of the tree by construction."""
    edges = sorted_edges(tree)
    n = len(edges)
    if n == 0:
        raise ConstructionError("tree has no edges")
    rows = [0] * n
    for i, j in itertools.combinations(range(n), 2):
        if edges[i] & edges[j]:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    space = SymplecticSpace(n, rows)
    return space, EdgeLabeledTree(tree, {e: 1 << i for i, e in enumerate(edges)})


def check_basis_tree(space: SymplecticSpace, t: EdgeLabeledTree) -> list[int]:
    """Validate that the labels form a basis I with G(I) = L(T); return I
    in sorted-edge order."""
    labels = [t.labels[e] for e in sorted_edges(t.tree)]
    space.check(*labels)
    if len(labels) != space.dim or rank(labels) != space.dim:
        raise ConstructionError("edge labels are not a basis of V")
    if t.line_graph() != vector_graph(space, labels):
        raise ConstructionError("G(labels) is not the line graph of the tree")
    return labels


# -- the pendant vector -----------------------------------------------------


def pendant_solutions(space: SymplecticSpace, t: EdgeLabeledTree, u: Hashable) -> list[int]:
    """All beta in V with B(alpha, beta) = [u incident to alpha] for every
    edge label alpha."""
    labels = check_basis_tree(space, t)
    if u not in set(t.tree.vertices):
        raise ConstructionError(f"{u!r} is not a tree vertex")
    return _solve_pendant(space, labels, set(t.incident_labels(u)))


def _solve_pendant(space: SymplecticSpace, labels: list[int], incident: set) -> list[int]:
    eqs = [space.dual(a) for a in labels]
    rhs = [1 if a in incident else 0 for a in labels]
    sol = solve(eqs, rhs, space.dim)
    if sol is None:
        return []
    base, kernel = sol
    out = []
    for mask in range(1 << len(kernel)):
        x = base
        for k, v in enumerate(kernel):
            if (mask >> k) & 1:
                x ^= v
        out.append(x)
    return sorted(out)


def pendant_vector(space: SymplecticSpace, t: EdgeLabeledTree, u: Hashable) -> int | None:
    """The unique beta with B(alpha, beta) = 1 exactly for the edges at u,
    or None when no such vector exists."""
    sols = pendant_solutions(space, t, u)
    if not sols:
        return None
    if len(sols) > 1:
        raise ConstructionError(f"pendant vector not unique ({len(sols)} solutions); radical is nonzero")
    return sols[0]


@dataclass(frozen=True)
class PendantExtension:
    set: VectorSet
    tree: EdgeLabeledTree
    leaf: Hashable


def extend_with_pendant(
    space: SymplecticSpace,
    t: EdgeLabeledTree,
    u: Hashable,
    beta: int | None = None,
    leaf: Hashable | None = None,
) -> PendantExtension:
    """Add a pendant edge labelled beta at u; S = I plus beta.

    ``beta`` defaults to :func:`pendant_vector`.  Raises
    :class:`DegenerateExtensionError` if beta is already an edge label.
    """
    labels = check_basis_tree(space, t)
    expected = pendant_vector(space, t, u)
    if expected is None:
        raise ConstructionError(f"no pendant vector exists at vertex {u!r}")
    if beta is None:
        beta = expected
    elif beta != expected:
        raise ConstructionError("beta does not satisfy the pendant conditions at u")
    if beta in labels:
        raise DegenerateExtensionError(
            "pendant vector coincides with an edge label (dimension 2, u a leaf); "
            "the extended set is the independent basis itself"
        )
    if leaf is None:
        leaf = ("pendant", u)
    if leaf in set(t.tree.vertices):
        raise ConstructionError(f"leaf name {leaf!r} already used")
    tree = SimpleGraph(t.tree.vertices + (leaf,), [tuple(e) for e in t.tree.edges] + [(u, leaf)])
    new_labels = dict(t.labels)
    new_labels[frozenset((u, leaf))] = beta
    upsilon = EdgeLabeledTree(tree, new_labels)
    s = VectorSet(space, labels + [beta])
    if upsilon.line_graph() != vector_graph(space, s.members):
        raise ConstructionError("extended set's graph is not the line graph of the extended tree")
    return PendantExtension(s, upsilon, leaf)


# -- dual maps --------------------------------------------------------------


@dataclass(frozen=True)
class DualData:
    vertices: tuple
    edge_labels: tuple
    theta: tuple
    lambda_map: tuple
    mu: tuple
    w: int

    def lambda_after_mu(self) -> tuple:
        return tuple(apply_map(self.lambda_map, m) for m in self.mu)

    def lambda_kernel(self) -> list[int]:
        return kernel_of_map(self.lambda_map)

    def mu_image_rank(self) -> int:
        return rank(self.mu)


def dual_data(space: SymplecticSpace, t: EdgeLabeledTree) -> DualData:
    labels = check_basis_tree(space, t)
    verts = t.tree.vertices
    vindex = {v: k for k, v in enumerate(verts)}
    edges = sorted_edges(t.tree)
    theta = tuple(
        sum(1 << j for j, b in enumerate(labels) if space.form(a, b)) for a in labels
    )
    lam = []
    for v in verts:
        row = 0
        for j, e in enumerate(edges):
            if v in e:
                row |= 1 << j
        lam.append(row)
    mu = tuple(sum(1 << vindex[x] for x in e) for e in edges)
    return DualData(tuple(verts), tuple(labels), theta, tuple(lam), mu, (1 << len(verts)) - 1)


# -- checks on edge-basis trees ---------------------------------------------


@dataclass(frozen=True)
class EvenTreeWitnesses:
    radical_zero: bool
    dim_even: bool
    some_u_has_beta: bool
    all_u_unique_beta: bool

    def as_tuple(self):
        return (self.radical_zero, self.dim_even, self.some_u_has_beta, self.all_u_unique_beta)


def even_tree_witnesses(space: SymplecticSpace, t: EdgeLabeledTree) -> EvenTreeWitnesses:
    """Evaluate the four conditions independently of one another."""
    labels = check_basis_tree(space, t)
    columns = []
    for u in t.tree.vertices:
        inc = set(t.incident_labels(u))
        columns.append([1 if a in inc else 0 for a in labels])
    particulars, kernel = solve_multi([space.dual(a) for a in labels], columns, space.dim)
    counts = [0 if p is None else 1 << len(kernel) for p in particulars]
    return EvenTreeWitnesses(
        radical_zero=not space.radical(),
        dim_even=space.dim % 2 == 0,
        some_u_has_beta=any(c > 0 for c in counts),
        all_u_unique_beta=all(c == 1 for c in counts),
    )


def extras_form_line_graph(space: SymplecticSpace, basis_set: VectorSet, extras: Iterable[int]) -> bool:
    """Whether G(I plus extras) is a claw-free block graph (equivalently a
    line graph of a tree).  Expected to be False; this only measures."""
    extras = list(extras)
    if not basis_set.spans() or not basis_set.is_independent():
        raise ConstructionError("basis_set is not a basis")
    if not vector_graph(space, basis_set.members).is_connected():
        raise ConstructionError("G(basis_set) is not connected")
    if space.radical():
        raise ConstructionError("radical of V is nonzero")
    if len(extras) < 2 or len(set(extras)) != len(extras):
        raise ConstructionError("need at least two distinct extra vectors")
    if any(x in basis_set for x in extras):
        raise ConstructionError("extra vector lies in the basis")
    space.check(*extras)
    return is_claw_free_block_graph(vector_graph(space, list(basis_set.members) + extras))


@dataclass(frozen=True)
class PendantBasisResult:
    radical_zero: bool
    dim_even: bool
    every_pendant_removal_is_basis: bool
    pendant_count: int = 0

    def all_true(self) -> bool:
        return self.radical_zero and self.dim_even and self.every_pendant_removal_is_basis


def check_pendant_bases(space: SymplecticSpace, vs: VectorSet) -> PendantBasisResult:
    """Evaluate the three conclusions for a dependent spanning set whose
    graph is the line graph of a tree."""
    if vs.is_independent():
        raise ConstructionError("set is linearly independent")
    if not vs.spans():
        raise ConstructionError("set does not span V")
    root = reconstruct_root_tree(vector_graph(space, vs.members))
    if root is None:
        raise ConstructionError("G(S) is not the line graph of a tree")
    pendants = root.pendant_labels()
    ok = all(
        rank([v for v in vs.members if v != p]) == space.dim == len(vs) - 1 for p in pendants
    )
    return PendantBasisResult(
        radical_zero=not space.radical(),
        dim_even=space.dim % 2 == 0,
        every_pendant_removal_is_basis=ok,
        pendant_count=len(pendants),
    )


def random_basis_tree_instance(tree: SimpleGraph, rng: random.Random):
    """Edge-basis instance in disguise: relabel by a random invertible
    change of basis so labels are not the standard vectors."""
    space0, t0 = edge_basis_instance(tree)
    n = space0.dim
    while True:
        cols = [rng.getrandbits(n) for _ in range(n)]
        if rank(cols) == n:
            break
    # Labels become P e_i; the new form satisfies B'(P x, P y) = B(x, y).
    inv = _invert(cols, n)
    rows = []
    for i in range(n):
        r = 0
        for j in range(n):
            if space0.form(apply_map(inv, 1 << i), apply_map(inv, 1 << j)):
                r |= 1 << j
        rows.append(r)
    space = SymplecticSpace(n, rows)
    labels = {e: apply_map(cols, v) for e, v in t0.labels.items()}
    return space, EdgeLabeledTree(tree, labels)


def _invert(images: Sequence[int], n: int) -> list[int]:
    out = []
    for i in range(n):
        sol = solve([sum(((images[j] >> r) & 1) << j for j in range(n)) for r in range(n)],
                    [(1 << i >> r) & 1 for r in range(n)], n)
        assert sol is not None
        out.append(sol[0])
    return out
