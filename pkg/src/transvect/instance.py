"""Instance files.

Format (bit-exact; character k of every string is coordinate k+1)::

    {"dim": 3,
     "gram": ["010", "101", "010"],
     "set": ["100", "010", "001", "110"],
     "tree": {"parent": [null, 0, 1, 2]},      # or {"prufer": [...]}
     "labels": ["100", "010", "001"]}          # one per tree edge

``tree`` and ``labels`` are optional.  Tree edges are ordered by their
sorted endpoint indices; labels follow that order.  When ``gram`` is
missing but a tree is given, the edge-basis form of the tree is used
(labels default to the standard basis).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .constructor import edge_basis_instance, sorted_edges, tree_from_parents, tree_from_prufer
from .f2core import MAX_DIM, DimensionError, SymplecticSpace, VectorSet, vec_from_str, vec_to_str
from .graphs import EdgeLabeledTree

BIT_ORDER_NOTE = "bitstrings: leftmost character is coordinate 1"


class InstanceError(ValueError):
    pass


@dataclass
class Instance:
    space: SymplecticSpace
    set: VectorSet | None = None
    tree: EdgeLabeledTree | None = None


def _vec(s: Any, dim: int) -> int:
    if not isinstance(s, str) or len(s) != dim or set(s) - {"0", "1"}:
        raise InstanceError(f"expected a {dim}-character 0/1 string, got {s!r}")
    return vec_from_str(s)


def parse_instance(data: dict, max_dim: int = MAX_DIM) -> Instance:
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    tree_graph = None
    if "tree" in data:
        tree_block = data["tree"]
        try:
            if "parent" in tree_block:
                tree_graph = tree_from_parents(tree_block["parent"])
            elif "prufer" in tree_block:
                tree_graph = tree_from_prufer(tree_block["prufer"])
            else:
                raise InstanceError("tree needs 'parent' or 'prufer'")
        except ValueError as exc:
            raise InstanceError(str(exc)) from exc
    if "gram" in data:
        dim = data.get("dim", len(data["gram"]))
        if not isinstance(dim, int) or dim < 1:
            raise InstanceError(f"bad dim {dim!r}")
        if dim > max_dim:
            raise InstanceError(f"dimension {dim} exceeds cap {max_dim}")
        if len(data["gram"]) != dim:
            raise InstanceError("gram row count differs from dim")
        try:
            space = SymplecticSpace(dim, [_vec(r, dim) for r in data["gram"]])
        except (ValueError, DimensionError) as exc:
            raise InstanceError(str(exc)) from exc
        tree = None
        if tree_graph is not None:
            edges = sorted_edges(tree_graph)
            labels = data.get("labels")
            if labels is None or len(labels) != len(edges):
                raise InstanceError("labels must give one vector per tree edge")
            try:
                tree = EdgeLabeledTree(tree_graph, {e: _vec(s, dim) for e, s in zip(edges, labels)})
            except ValueError as exc:
                raise InstanceError(str(exc)) from exc
    elif tree_graph is not None:
        try:
            space, tree = edge_basis_instance(tree_graph)
        except ValueError as exc:
            raise InstanceError(str(exc)) from exc
        if space.dim > max_dim:
            raise InstanceError(f"dimension {space.dim} exceeds cap {max_dim}")
    else:
        raise InstanceError("instance needs 'gram' or 'tree'")
    vs = None
    if "set" in data:
        try:
            vs = VectorSet(
                space,
                [_vec(s, space.dim) for s in data["set"]],
                allow_zero=bool(data.get("allow_zero", False)),
            )
        except ValueError as exc:
            raise InstanceError(str(exc)) from exc
    return Instance(space, vs, tree)


def load_instance(path: str, max_dim: int = MAX_DIM) -> Instance:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    return parse_instance(data, max_dim)


def dump_instance(space: SymplecticSpace, vs: VectorSet | None = None, tree: EdgeLabeledTree | None = None) -> dict:
    out: dict = {"dim": space.dim, "gram": space.gram_strings()}
    if vs is not None:
        out["set"] = vs.to_strings()
    if tree is not None:
        index = {v: i for i, v in enumerate(tree.tree.vertices)}
        edges = sorted(tree.tree.edges, key=lambda e: sorted(index[x] for x in e))
        # Parent array rooted at vertex 0.
        parent: list = [None] * len(index)
        root = tree.tree.vertices[0]
        seen = {root}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in tree.tree.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    parent[index[y]] = index[x]
                    stack.append(y)
        out["tree"] = {"parent": parent}
        # Relabelled vertex indices keep the same sorted-edge order.
        out["labels"] = [vec_to_str(tree.labels[e], space.dim) for e in edges]
    return out
