"""Mutation moves S -> (S minus beta) plus tau_alpha(beta), and the
equivalence classes they generate.

Two modes:

``"T"``
    any subset of V.  A move may collide with an existing member and
    shrink the set; the equivalence relation then also contains the
    inverse "grow" move, which adds tau_alpha(gamma) for alpha, gamma in S.
``"I"``
    linearly independent sets only.  Moves never shrink or break
    independence there, since tau_alpha(beta) is beta or beta + alpha.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .f2core import SymplecticSpace, VectorSet, vec_from_str, vec_to_str

DEFAULT_MAX_SETS = int(os.environ.get("TRANSVECT_MAX_SETS", 200_000))
DEFAULT_MAX_MOVES = int(os.environ.get("TRANSVECT_MAX_MOVES", 10_000_000))

MODES = ("T", "I")


class MutationError(ValueError):
    pass


class RadicalElementError(ValueError):
    """A member of S lies in rad V, outside the hypotheses of the
    mutation criterion."""


@dataclass(frozen=True)
class Move:
    """Replace ``beta`` by tau_alpha(beta).  With ``grow=True`` the move is
    the inverse of a shrinking replacement: tau_alpha(beta) is added and
    ``beta`` stays."""

    alpha: int
    beta: int
    grow: bool = False

    def to_json(self, dim: int) -> list:
        out = [vec_to_str(self.alpha, dim), vec_to_str(self.beta, dim)]
        if self.grow:
            out.append("grow")
        return out

    @classmethod
    def from_json(cls, item: Sequence) -> "Move":
        grow = len(item) > 2 and item[2] == "grow"
        return cls(vec_from_str(item[0]), vec_from_str(item[1]), grow)


@dataclass
class MutationClassReport:
    class_size: int
    path_representative: tuple | None
    move_trace: list | None
    truncated: bool
    mode: str
    moves_evaluated: int = 0
    shrink_moves: int = 0
    grow_moves: int = 0
    members: frozenset | None = None


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def mutate(space: SymplecticSpace, vs: VectorSet, alpha: int, beta: int, mode: str = "T") -> VectorSet:
    """Change ``beta`` to tau_alpha(beta), keeping member order."""
    _check_mode(mode)
    if alpha not in vs or beta not in vs:
        raise MutationError("alpha and beta must both be members of the set")
    if mode == "I" and not vs.is_independent():
        raise MutationError("independent mode requires an independent set")
    new = space.transvect(alpha, beta)
    if new == beta:
        return vs
    if new in vs:
        if mode == "I":
            raise MutationError("move would shrink the set")
        return VectorSet(space, (v for v in vs.members if v != beta), allow_zero=True)
    out = VectorSet(space, (new if v == beta else v for v in vs.members), allow_zero=True)
    if mode == "I" and not out.is_independent():
        raise MutationError("move would break independence")
    return out


def apply_move(space: SymplecticSpace, vs: VectorSet, move: Move, mode: str = "T") -> VectorSet:
    if not move.grow:
        return mutate(space, vs, move.alpha, move.beta, mode)
    if mode == "I":
        raise MutationError("grow moves only exist in T mode")
    if move.alpha not in vs or move.beta not in vs:
        raise MutationError("alpha and beta must both be members of the set")
    new = space.transvect(move.alpha, move.beta)
    if new in vs:
        raise MutationError("grow move adds a vector already present")
    return VectorSet(space, vs.members + (new,), allow_zero=True)


def replay(space: SymplecticSpace, vs: VectorSet, trace: Iterable[Move], mode: str = "T") -> VectorSet:
    for mv in trace:
        vs = apply_move(space, vs, mv, mode)
    return vs


def _is_path(space: SymplecticSpace, vecs: tuple) -> bool:
    n = len(vecs)
    if n == 0:
        return False
    if n == 1:
        return True
    form = space.form
    adj = [[j for j in range(n) if j != i and form(vecs[i], vecs[j])] for i in range(n)]
    degs = sorted(len(a) for a in adj)
    if degs[0] != 1 or degs[1] != 1 or any(d != 2 for d in degs[2:]):
        return False
    # Degree pattern fits; rule out path + disjoint cycles.
    seen = {0}
    stack = [0]
    while stack:
        for j in adj[stack.pop()]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return len(seen) == n


def _neighbours(space: SymplecticSpace, canon: tuple, mode: str):
    """Yield (move, canonical result, kind) for every effective move."""
    members = set(canon)
    dual = space.dual
    for a in canon:
        da = dual(a)
        if not da:
            continue
        for b in canon:
            if b == a or not (da & b).bit_count() & 1:
                continue
            nb = a ^ b
            if nb in members:
                if mode == "T":
                    yield Move(a, b), tuple(sorted(members - {b})), "shrink"
                continue
            yield Move(a, b), tuple(sorted((members - {b}) | {nb})), "swap"
            if mode == "T":
                yield Move(a, b, grow=True), tuple(sorted(members | {nb})), "grow"


def equivalence_class_bfs(
    space: SymplecticSpace,
    vs: VectorSet,
    mode: str = "I",
    max_sets: int = DEFAULT_MAX_SETS,
    max_moves: int = DEFAULT_MAX_MOVES,
    stop_at_path: bool = False,
    keep_members: bool = False,
) -> MutationClassReport:
    """Breadth-first search of the mutation class of ``vs``.

    Records the first member (in BFS order) whose graph is a path, with a
    move trace from ``vs`` to it.  With ``stop_at_path`` the search ends
    there and ``class_size`` counts only what was visited.
    """
    _check_mode(mode)
    if mode == "I" and not vs.is_independent():
        raise MutationError("independent mode requires an independent set")
    start = vs.canonical()
    parent: dict[tuple, tuple | None] = {start: None}
    queue = deque([start])
    moves = shrinks = grows = 0
    truncated = False
    found = start if _is_path(space, start) else None
    if not (found is not None and stop_at_path):
        while queue:
            cur = queue.popleft()
            for move, nxt, kind in _neighbours(space, cur, mode):
                moves += 1
                if kind == "shrink":
                    shrinks += 1
                elif kind == "grow":
                    grows += 1
                if nxt in parent:
                    continue
                parent[nxt] = (cur, move)
                if found is None and _is_path(space, nxt):
                    found = nxt
                    if stop_at_path:
                        break
                queue.append(nxt)
                if len(parent) >= max_sets or moves >= max_moves:
                    truncated = True
                    break
            if truncated or (found is not None and stop_at_path):
                break
    trace = None
    if found is not None:
        trace = []
        node = found
        while parent[node] is not None:
            prev, mv = parent[node]
            trace.append(mv)
            node = prev
        trace.reverse()
    complete = not truncated and not (stop_at_path and found is not None)
    return MutationClassReport(
        class_size=len(parent),
        path_representative=found,
        move_trace=trace,
        truncated=truncated,
        mode=mode,
        moves_evaluated=moves,
        shrink_moves=shrinks,
        grow_moves=grows,
        members=frozenset(parent) if keep_members and complete else None,
    )


def decide_symmetric_via_mutation(
    space: SymplecticSpace,
    vs: VectorSet,
    mode: str = "I",
    max_sets: int = DEFAULT_MAX_SETS,
    max_moves: int = DEFAULT_MAX_MOVES,
) -> bool | None:
    """True if some set in the class has a path graph, False if the whole
    class was exhausted without one, None if the search was truncated."""
    if vs.radical_members():
        raise RadicalElementError("set has a member in the radical of V")
    rep = equivalence_class_bfs(space, vs, mode, max_sets, max_moves, stop_at_path=True)
    if rep.path_representative is not None:
        return True
    return None if rep.truncated else False
