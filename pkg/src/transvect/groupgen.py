"""Enumerate Tv(S) and decide whether it is a symmetric group.

Elements are :class:`BitMatrix` rows.  The symmetric-group decision is
exact: a group of order k! is isomorphic to Sym(k) exactly when it holds
involutions t_1..t_{k-1} with (t_i t_{i+1})^3 = 1, (t_i t_j)^2 = 1 for
|i - j| >= 2, that generate it.  Such a system makes the group a quotient
of Sym(k) of full order; conversely adjacent transpositions are one.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Sequence

from .f2core import BitMatrix, SymplecticSpace, VectorSet, rank

DEFAULT_CAP = int(os.environ.get("TRANSVECT_GROUP_CAP", 5_000_000))
DEFAULT_SEARCH_BUDGET = int(os.environ.get("TRANSVECT_SEARCH_BUDGET", 2_000_000))


class GroupCapped(RuntimeError):
    """Operation needs a complete enumeration but the closure was capped."""


class SearchBudgetExceeded(RuntimeError):
    """The Coxeter-system search gave up before proving either answer."""


@dataclass(frozen=True)
class GroupEnumeration:
    dim: int
    elements: frozenset
    generators: tuple
    capped: bool = False

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, m) -> bool:
        return m in self.elements


@dataclass(frozen=True)
class SymmetricGroupCertificate:
    k: int
    coxeter_generators: tuple = field(default=())


def _left_transvect(dual_alpha: int, alpha: int, rows: tuple) -> BitMatrix:
    # tau_alpha composed after the element: tau_alpha applied to every row.
    return BitMatrix(r ^ alpha if (dual_alpha & r).bit_count() & 1 else r for r in rows)


def generate_group(space: SymplecticSpace, vs: VectorSet | Sequence[int], cap: int = DEFAULT_CAP) -> GroupEnumeration:
    """Closure BFS from the identity under left multiplication by the
    transvections tau_alpha, alpha in S."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    members = list(vs.members if isinstance(vs, VectorSet) else vs)
    space.check(*members)
    ident = BitMatrix.identity(space.dim)
    gens = []
    seen_dirs = set()
    for a in members:
        d = space.dual(a)
        if d == 0 or a in seen_dirs:
            continue  # identity transvection
        seen_dirs.add(a)
        gens.append((d, a))
    elements = {ident}
    frontier = [ident]
    capped = False
    while frontier and not capped:
        nxt = []
        for x in frontier:
            for d, a in gens:
                y = _left_transvect(d, a, x)
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        capped = True
                        break
            if capped:
                break
        frontier = nxt
    generators = tuple(space.transvection_matrix(a) for a in members)
    return GroupEnumeration(space.dim, frozenset(elements), generators, capped)


def generate_from_matrices(gens: Sequence[BitMatrix], dim: int, cap: int = DEFAULT_CAP) -> GroupEnumeration:
    """Closure BFS for arbitrary invertible generators."""
    ident = BitMatrix.identity(dim)
    elements = {ident}
    frontier = [ident]
    capped = False
    while frontier and not capped:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g @ x
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > cap:
                        capped = True
                        break
            if capped:
                break
        frontier = nxt
    return GroupEnumeration(dim, frozenset(elements), tuple(gens), capped)


def factorial_index(order: int) -> int | None:
    """k with k! == order (k = 1 for order 1), else None."""
    k, f = 1, 1
    while f < order:
        k += 1
        f *= k
    return k if f == order else None


def _fixed_dim(m: BitMatrix) -> int:
    return len(m) - rank(r ^ (1 << i) for i, r in enumerate(m))


def _involution_classes(g: GroupEnumeration, involutions: list) -> list[list]:
    """Partition involutions into conjugacy classes (orbits under
    conjugation by the generators)."""
    gens = [x for x in g.generators if not x.is_identity()]
    inverses = [_inverse(x) for x in gens]
    remaining = set(involutions)
    classes = []
    for t in involutions:
        if t not in remaining:
            continue
        orbit = {t}
        stack = [t]
        while stack:
            x = stack.pop()
            for h, hi in zip(gens, inverses):
                y = h @ x @ hi
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        remaining -= orbit
        classes.append(sorted(orbit, key=BitMatrix.encode))
    return classes


def _inverse(m: BitMatrix) -> BitMatrix:
    n = len(m)
    # Gauss-Jordan on [m | I] with rows as images.
    rows = [(r, 1 << i) for i, r in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if (rows[i][0] >> col) & 1)
        rows[col], rows[piv] = rows[piv], rows[col]
        for i in range(n):
            if i != col and (rows[i][0] >> col) & 1:
                rows[i] = (rows[i][0] ^ rows[col][0], rows[i][1] ^ rows[col][1])
    # rows[i] = (e_i, combination c_i) means sum_{j in c_i} m(e_j) = e_i.
    return BitMatrix(r[1] for r in rows)


def is_symmetric_group(
    g: GroupEnumeration, budget: int = DEFAULT_SEARCH_BUDGET
) -> SymmetricGroupCertificate | None:
    """Exact decision of ``g`` being isomorphic to a symmetric group.

    Returns a certificate (k and a type-A Coxeter system) or ``None``.
    Raises :class:`SearchBudgetExceeded` when the search gives up.
    """
    if g.capped:
        raise GroupCapped("group enumeration was capped")
    k = factorial_index(g.order)
    if k is None:
        return None
    if k == 1:
        return SymmetricGroupCertificate(1, ())
    involutions = [x for x in g.elements if not x.is_identity() and (x @ x).is_identity()]
    # Largest fixed space first: transvections are tried before anything else.
    involutions.sort(key=lambda x: (-_fixed_dim(x), x.encode()))
    if k == 2:
        return SymmetricGroupCertificate(2, (involutions[0],))
    first_choices = [c[0] for c in _involution_classes(g, involutions)]
    first_choices.sort(key=lambda x: (-_fixed_dim(x), x.encode()))

    steps = 0
    chain: list[BitMatrix] = []

    def order3(a, b):
        p = a @ b
        return not p.is_identity() and (p @ p @ p).is_identity()

    def commute(a, b):
        return a @ b == b @ a

    def search() -> bool:
        nonlocal steps
        if len(chain) == k - 1:
            return generate_from_matrices(chain, g.dim, cap=g.order).order == g.order
        last = chain[-1]
        for t in involutions:
            steps += 1
            if steps > budget:
                raise SearchBudgetExceeded(f"Coxeter search exceeded {budget} steps")
            if t in chain or not order3(last, t):
                continue
            if not all(commute(s, t) for s in chain[:-1]):
                continue
            chain.append(t)
            if search():
                return True
            chain.pop()
        return False

    for t1 in first_choices:
        chain[:] = [t1]
        if search():
            return SymmetricGroupCertificate(k, tuple(chain))
    return None


def verify_certificate(g: GroupEnumeration, cert: SymmetricGroupCertificate) -> bool:
    """Re-check every property a certificate claims."""
    gens = list(cert.coxeter_generators)
    if len(gens) != cert.k - 1 or g.order != math.factorial(cert.k):
        return False
    for i, t in enumerate(gens):
        if t not in g.elements or t.is_identity() or not (t @ t).is_identity():
            return False
        for j in range(i + 1, len(gens)):
            p = t @ gens[j]
            if j == i + 1:
                if p.is_identity() or not (p @ p @ p).is_identity():
                    return False
            elif not (p @ p).is_identity():
                return False
    return generate_from_matrices(gens, g.dim, cap=g.order).order == g.order


def groups_equal(g1: GroupEnumeration, g2: GroupEnumeration) -> bool:
    if g1.capped or g2.capped:
        raise GroupCapped("cannot compare capped enumerations")
    return g1.dim == g2.dim and g1.elements == g2.elements


def preserves_form(space: SymplecticSpace, m: BitMatrix) -> bool:
    n = space.dim
    return all(
        space.form(m[i], m[j]) == space.form(1 << i, 1 << j)
        for i in range(n)
        for j in range(i + 1, n)
    )


def conjugate(g: GroupEnumeration, p: BitMatrix) -> GroupEnumeration:
    """The enumeration p g p^-1."""
    pi = _inverse(p)
    return GroupEnumeration(
        g.dim,
        frozenset(p @ x @ pi for x in g.elements),
        tuple(p @ x @ pi for x in g.generators),
        g.capped,
    )


def symplectic_group_order(space: SymplecticSpace) -> int | None:
    """|Sp(V, B)| for nondegenerate B (dim 2m): 2^(m^2) prod (4^i - 1)."""
    if space.radical():
        return None
    m = space.dim // 2
    out = 2 ** (m * m)
    for i in range(1, m + 1):
        out *= 4**i - 1
    return out


__all__ = [
    "GroupEnumeration",
    "SymmetricGroupCertificate",
    "GroupCapped",
    "SearchBudgetExceeded",
    "generate_group",
    "generate_from_matrices",
    "is_symmetric_group",
    "verify_certificate",
    "groups_equal",
    "factorial_index",
    "conjugate",
    "preserves_form",
    "symplectic_group_order",
]
