"""Brute-force oracles shared by the tests.

They evaluate the form straight from the Gram rows, bit by bit, and never
touch the package's elimination or matrix code, so they can stand in as
an independent reference for small dimensions.
"""

import itertools

import pytest


def form_bits(gram, u, v):
    """B(u, v) = sum over i, j of u_i g_ij v_j, evaluated coordinatewise."""
    n = len(gram)
    total = 0
    for i in range(n):
        if not (u >> i) & 1:
            continue
        for j in range(n):
            if (v >> j) & 1 and (gram[i] >> j) & 1:
                total ^= 1
    return total


def brute_radical(gram):
    n = len(gram)
    return sorted(v for v in range(1 << n) if all(form_bits(gram, v, w) == 0 for w in range(1 << n)))


def brute_transvect(gram, alpha, beta):
    return beta ^ alpha if form_bits(gram, beta, alpha) else beta


def brute_group_order(gram, generators, cap=200_000):
    """Order of the permutation group that the transvections induce on
    F2^n, by closure over tuples of images."""
    n = len(gram)
    points = range(1 << n)
    gens = [tuple(brute_transvect(gram, a, x) for x in points) for a in generators]
    ident = tuple(points)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > cap:
                        raise RuntimeError("oracle cap")
        frontier = nxt
    return len(seen)


def brute_rank(vectors):
    """Size of the span, as a log2, by listing every subset sum."""
    span = {0}
    for v in vectors:
        span |= {x ^ v for x in span}
    return len(span).bit_length() - 1


def brute_claw_free(vertices, edges):
    adj = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    for v in vertices:
        for a, b, c in itertools.combinations(sorted(adj[v], key=repr), 3):
            if b not in adj[a] and c not in adj[a] and c not in adj[b]:
                return False
    return True


@pytest.fixture
def oracle():
    class _O:
        form = staticmethod(form_bits)
        radical = staticmethod(brute_radical)
        transvect = staticmethod(brute_transvect)
        group_order = staticmethod(brute_group_order)
        rank = staticmethod(brute_rank)
        claw_free = staticmethod(brute_claw_free)

    return _O
