"""Exhaustive verification suites.

Each suite returns a :class:`VerificationReport`.  ``checked`` counts
instances inside the hypotheses of the statement being verified; every
such instance ends up as an agreement, a discrepancy (with a replayable
instance dump), or a truncation.  Instances outside the hypotheses and
measured quantities the statements do not cover go to ``findings``.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import asdict, dataclass, field

import networkx as nx

from .constructor import (
    ConstructionError,
    DegenerateExtensionError,
    all_labeled_trees,
    extras_form_line_graph,
    check_pendant_bases,
    pendant_solutions,
    dual_data,
    edge_basis_instance,
    extend_with_pendant,
    even_tree_witnesses,
)
from .f2core import SymplecticSpace, VectorSet, rank
from .graphs import (
    SimpleGraph,
    all_graphs,
    graph_isomorphic,
    graph_of_set,
    is_block_graph,
    is_claw_free,
    is_claw_free_block_graph,
    line_graph,
    reconstruct_root_tree,
    classical_conditions,
    vector_graph,
)
from .groupgen import (
    DEFAULT_CAP,
    DEFAULT_SEARCH_BUDGET,
    GroupEnumeration,
    SearchBudgetExceeded,
    generate_group,
    groups_equal,
    is_symmetric_group,
)
from .instance import dump_instance
from .mutation import DEFAULT_MAX_MOVES, DEFAULT_MAX_SETS, equivalence_class_bfs, mutate

SUITES = ("characterization", "counterexample", "letter-count", "graphs", "trees", "mutation")


@dataclass
class VerificationReport:
    suite: str
    checked: int = 0
    agreements: int = 0
    discrepancies: list = field(default_factory=list)
    truncations: int = 0
    wall_time: float = 0.0
    findings: list = field(default_factory=list)
    counters: dict = field(default_factory=dict)

    def record(self, ok: bool, dump: dict | None = None) -> None:
        self.checked += 1
        if ok:
            self.agreements += 1
        else:
            self.discrepancies.append(dump or {})

    def truncated(self) -> None:
        self.checked += 1
        self.truncations += 1

    def bump(self, key: str, by: int = 1) -> None:
        self.counters[key] = self.counters.get(key, 0) + by

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"suite {self.suite}: {'OK' if self.ok else 'DISCREPANCIES'}",
            f"  checked={self.checked} agreements={self.agreements} "
            f"discrepancies={len(self.discrepancies)} truncations={self.truncations} "
            f"wall={self.wall_time:.2f}s",
        ]
        for k in sorted(self.counters):
            lines.append(f"  {k}: {self.counters[k]}")
        if self.findings:
            lines.append("  findings:")
            for f in self.findings:
                lines.append(f"    - {json.dumps(f, sort_keys=True)}")
        for d in self.discrepancies[:20]:
            lines.append(f"  DISCREPANCY {json.dumps(d, sort_keys=True)}")
        return "\n".join(lines)


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.wall_time = time.perf_counter() - self.t0
        return False


# -- instance families ------------------------------------------------------


def form_family(max_dim: int, n_random: int = 24, seed: int = 0, min_dim: int = 1) -> list[tuple[str, SymplecticSpace]]:
    """Path forms, hyperbolic sums (plus a radical line in odd dims) and
    seeded random alternating forms, deduplicated by Gram matrix."""
    out: list[tuple[str, SymplecticSpace]] = []
    seen = set()

    def add(name, sp):
        if sp.gram not in seen:
            seen.add(sp.gram)
            out.append((name, sp))

    for d in range(min_dim, max_dim + 1):
        add(f"path{d}", SymplecticSpace.path_form(d))
        if d >= 2:
            add(f"hyp{d}", SymplecticSpace.hyperbolic(d // 2, d % 2))
    rng = random.Random(seed)
    # Small dims have few alternating forms; draw mostly from the largest.
    dims = list(range(max(2, min_dim), max_dim + 1))
    weights = [2**d for d in dims]
    made = tries = 0
    while made < n_random and tries < 100 * max(n_random, 1):
        tries += 1
        d = rng.choices(dims, weights)[0]
        before = len(out)
        add(f"random{d}#{made}", SymplecticSpace.random(d, rng))
        made += len(out) - before
    return out


def independent_sets(space: SymplecticSpace, radical_free: bool = True, min_size: int = 1):
    """Every independent set of nonzero vectors, as increasing tuples,
    built by extending with larger vectors and pruning on rank."""
    candidates = [v for v in range(1, 1 << space.dim) if not (radical_free and space.in_radical(v))]

    def extend(start: int, chosen: list, basis: dict):
        if len(chosen) >= min_size:
            yield tuple(chosen)
        for idx in range(start, len(candidates)):
            v = candidates[idx]
            r = v
            while r:
                top = r.bit_length() - 1
                if top not in basis:
                    break
                r ^= basis[top]
            if not r:
                continue
            basis[r.bit_length() - 1] = r
            chosen.append(v)
            yield from extend(idx + 1, chosen, basis)
            chosen.pop()
            del basis[r.bit_length() - 1]

    yield from extend(0, [], {})


class _SymmetricDecider:
    """is_symmetric_group memoised on the element set."""

    def __init__(self, budget: int):
        self.budget = budget
        self.cache: dict = {}

    def __call__(self, g: GroupEnumeration):
        key = g.elements
        if key not in self.cache:
            self.cache[key] = is_symmetric_group(g, self.budget)
        return self.cache[key]


class _PathClassOracle:
    """Whether the I-class of a set holds a path-graph member, memoised per
    class: one BFS answers every member of the class it explores."""

    def __init__(self, space, max_sets, max_moves):
        self.space = space
        self.max_sets = max_sets
        self.max_moves = max_moves
        self.cache: dict = {}
        self.class_sizes: list = []

    def __call__(self, vs: VectorSet) -> bool | None:
        key = vs.canonical()
        if key in self.cache:
            return self.cache[key]
        rep = equivalence_class_bfs(self.space, vs, "I", self.max_sets, self.max_moves, keep_members=True)
        if rep.truncated:
            self.cache[key] = None
            return None
        ans = rep.path_representative is not None
        for m in rep.members:
            self.cache[m] = ans
        self.class_sizes.append(rep.class_size)
        return ans


# -- characterization -------------------------------------------------------


def evaluate_characterization(space: SymplecticSpace, vs: VectorSet, decider=None, path_oracle=None, cap: int = DEFAULT_CAP) -> dict:
    """Four independent decisions plus the measured group order."""
    decider = decider or (lambda g: is_symmetric_group(g))
    g = generate_group(space, vs, cap)
    out: dict = {"order": g.order, "capped": g.capped}
    cert = None
    if g.capped:
        out["symmetric"] = None
    else:
        try:
            cert = decider(g)
            out["symmetric"] = cert is not None
        except SearchBudgetExceeded:
            out["symmetric"] = None
    out["k"] = cert.k if cert else None
    graph = graph_of_set(space, vs)
    out["claw_free_block"] = is_claw_free_block_graph(graph)
    out["root_tree"] = reconstruct_root_tree(graph) is not None
    if path_oracle is None:
        rep = equivalence_class_bfs(space, vs, "I", stop_at_path=True)
        out["path_in_class"] = True if rep.path_representative is not None else (None if rep.truncated else False)
    else:
        out["path_in_class"] = path_oracle(vs)
    return out


def verify_characterization(
    max_dim: int = 4,
    n_random: int = 24,
    seed: int = 0,
    group_cap: int = DEFAULT_CAP,
    max_sets: int = DEFAULT_MAX_SETS,
    max_moves: int = DEFAULT_MAX_MOVES,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    include_radical: bool = False,
) -> VerificationReport:
    if max_dim > 5:
        raise ValueError("max_dim above 5 is not supported")
    report = VerificationReport("characterization")
    with _Timer(report):
        decider = _SymmetricDecider(search_budget)
        for name, space in form_family(max_dim, n_random, seed):
            report.bump("forms")
            if name.startswith("random"):
                report.bump("random_forms")
            oracle = _PathClassOracle(space, max_sets, max_moves)
            for members in independent_sets(space, radical_free=not include_radical):
                vs = VectorSet(space, members)
                if vs.radical_members():
                    _record_out_of_hypothesis(report, space, vs, name)
                    continue
                c = evaluate_characterization(space, vs, decider, oracle, group_cap)
                vals = (c["symmetric"], c["claw_free_block"], c["root_tree"], c["path_in_class"])
                if None in vals:
                    report.truncated()
                    continue
                agree = len(set(vals)) == 1
                letters = (not c["claw_free_block"]) or (
                    c["order"] == math.factorial(len(vs) + 1) and c["k"] == len(vs) + 1
                )
                if c["symmetric"]:
                    report.bump("symmetric")
                report.record(agree and letters, {"form": name, **dump_instance(space, vs), "conditions": c})
    return report


def _record_out_of_hypothesis(report, space, vs, form_name):
    g = generate_group(space, vs)
    cert = is_symmetric_group(g)
    graph = graph_of_set(space, vs)
    report.bump("out_of_hypothesis")
    sym, cfbg = cert is not None, is_claw_free_block_graph(graph)
    if sym != cfbg and len(report.findings) < 50:
        report.findings.append(
            {
                "kind": "out_of_hypothesis",
                "reason": "member in rad V",
                "form": form_name,
                **dump_instance(space, vs),
                "order": g.order,
                "symmetric_k": cert.k if cert else None,
                "claw_free_block": cfbg,
            }
        )


# -- counterexample ---------------------------------------------------------


def counterexample_instance(n: int) -> tuple[SymplecticSpace, VectorSet]:
    """Path form on F2^n with S = {e1, ..., en, e1 + e2}."""
    space = SymplecticSpace.path_form(n)
    return space, VectorSet(space, [1 << i for i in range(n)] + [0b11])


def reproduce_counterexample(n: int) -> VerificationReport:
    if not 3 <= n <= 7:
        raise ValueError("n must be in 3..7")
    report = VerificationReport(f"counterexample(n={n})")
    with _Timer(report):
        space, s = counterexample_instance(n)
        basis = VectorSet.standard_basis(space)
        dump = dump_instance(space, s)

        def check(name, ok, **info):
            report.record(bool(ok), {"check": name, **dump, **info})

        check("spans", s.spans())
        check("dependent", not s.is_independent())
        moved = mutate(space, s, 0b01, 0b11, mode="T")
        check("one move reaches basis", moved == basis, result=moved.to_strings())
        g = generate_group(space, s)
        check("order", g.order == math.factorial(n + 1), order=g.order)
        cert = is_symmetric_group(g)
        check("symmetric k", cert is not None and cert.k == n + 1, k=cert.k if cert else None)
        graph = graph_of_set(space, s)
        check("connected", graph.is_connected())
        check("claw-free", is_claw_free(graph))
        check("not block graph", not is_block_graph(graph))
        conds = classical_conditions(graph).as_tuple()
        check("conditions", conds == (True, True, False, True), conditions=conds)
        # Control: the basis alone behaves as the classical statement says.
        gb = generate_group(space, basis)
        cb = is_symmetric_group(gb)
        check("control basis", is_claw_free_block_graph(graph_of_set(space, basis)) and cb is not None and cb.k == n + 1)
        check("same group as basis", groups_equal(g, gb))
        report.findings.append({"kind": "counterexample", "n": n, "order": g.order, "k": cert.k if cert else None, "classical_conditions": conds})
    return report


# -- letter count -----------------------------------------------------------


def verify_letter_count(
    max_dim: int = 4, n_random: int = 24, seed: int = 0, exploratory: bool = True, exploratory_max_dim: int = 4
) -> VerificationReport:
    """|Tv(S)| = (|S|+1)! for independent radical-free S with a claw-free
    block graph.  Radical singletons and dependent sets are measured and
    reported as findings, never asserted."""
    report = VerificationReport("letter-count")
    with _Timer(report):
        decider = _SymmetricDecider(DEFAULT_SEARCH_BUDGET)
        for name, space in form_family(max_dim, n_random, seed):
            for members in independent_sets(space, radical_free=False):
                vs = VectorSet(space, members)
                if not is_claw_free_block_graph(graph_of_set(space, vs)):
                    continue
                g = generate_group(space, vs)
                cert = decider(g)
                n = len(vs)
                if vs.radical_members():
                    report.bump("radical_singletons")
                    if g.order != math.factorial(n + 1) and report.counters["radical_singletons"] <= 3:
                        report.findings.append(
                            {
                                "kind": "radical_letter_count",
                                "hypothesis": "member in rad V",
                                "form": name,
                                **dump_instance(space, vs),
                                "order": g.order,
                                "stated_order": math.factorial(n + 1),
                            }
                        )
                    continue
                ok = g.order == math.factorial(n + 1) and cert is not None and cert.k == n + 1
                report.record(ok, {"form": name, **dump_instance(space, vs), "order": g.order})
        if exploratory:
            _explore_dependent(report, min(exploratory_max_dim, max_dim), decider)
    return report


def _components_claw_free_block(space: SymplecticSpace, members) -> bool:
    g = vector_graph(space, members)
    return all(is_claw_free_block_graph(g.subgraph(c)) for c in g.components())


def dependent_claw_free_block_sets(space: SymplecticSpace):
    """Every dependent spanning set of nonzero vectors whose graph is a
    claw-free block graph.

    Having every component a claw-free block graph is inherited by
    subsets, so the subset search prunes on it.
    """
    nonzero = list(range(1, 1 << space.dim))

    def extend(start, chosen):
        if len(chosen) > space.dim and rank(chosen) == space.dim:
            if vector_graph(space, chosen).is_connected():
                yield tuple(chosen)
        for idx in range(start, len(nonzero)):
            chosen.append(nonzero[idx])
            if _components_claw_free_block(space, chosen):
                yield from extend(idx + 1, chosen)
            chosen.pop()

    yield from extend(0, [])


def _explore_dependent(report: VerificationReport, max_dim: int, decider) -> None:
    spaces = [(f"path{d}", SymplecticSpace.path_form(d)) for d in range(2, max_dim + 1)]
    spaces += [(f"hyp{d}", SymplecticSpace.hyperbolic(d // 2, d % 2)) for d in range(2, max_dim + 1)]
    seen = set()
    shown_matching = 0
    for name, space in spaces:
        if space.gram in seen:
            continue
        seen.add(space.gram)
        for members in dependent_claw_free_block_sets(space):
            vs = VectorSet(space, members)
            g = generate_group(space, vs)
            cert = decider(g)
            size = len(vs)
            expected = math.factorial(size + 1)
            report.bump("dependent_claw_free_block_sets")
            report.bump(f"dependent_size{size}_order{g.order}")
            entry = {
                "kind": "dependent_letter_count",
                "hypothesis": "outside independence hypothesis",
                "form": name,
                **dump_instance(space, vs),
                "size": size,
                "order": g.order,
                "symmetric_k": cert.k if cert else None,
                "stated_order": expected,
                "matches_stated": g.order == expected,
            }
            if g.order != expected:
                report.bump("dependent_order_differs_from_stated")
                report.findings.append(entry)
            else:
                report.bump("dependent_order_matches_stated")
                if shown_matching < 3:
                    shown_matching += 1
                    report.findings.append(entry)


def dependent_triangle_finding() -> dict:
    """The dependent set {e1, e2, e1+e2} in the hyperbolic plane."""
    space = SymplecticSpace.hyperbolic(1)
    vs = VectorSet(space, [0b01, 0b10, 0b11])
    g = generate_group(space, vs)
    cert = is_symmetric_group(g)
    graph = graph_of_set(space, vs)
    return {
        "kind": "dependent_letter_count",
        **dump_instance(space, vs),
        "independent": vs.is_independent(),
        "hypothesis": "outside independence hypothesis",
        "claw_free_block": is_claw_free_block_graph(graph),
        "graph_order": len(graph),
        "order": g.order,
        "symmetric_k": cert.k if cert else None,
        "stated_order": math.factorial(len(vs) + 1),
    }


# -- graph recognizers ------------------------------------------------------


def verify_graph_recognizers(max_vertices: int = 6) -> VerificationReport:
    report = VerificationReport("graphs")
    with _Timer(report):
        for n in range(1, max_vertices + 1):
            for g in all_graphs(n):
                conds = classical_conditions(g)
                cfbg = is_claw_free_block_graph(g)
                c1, c2, c3, c4 = conds.as_tuple()
                ok = (c1 and c2 and c3) == cfbg
                ok &= not (c1 and c2) or c4
                dump = {"n": n, "edges": sorted(sorted(e) for e in g.edges), "conditions": conds.as_tuple(), "claw_free_block": cfbg}
                if c1:
                    report.bump("connected")
                    root = reconstruct_root_tree(g)
                    ok &= (root is not None) == cfbg
                    if root is not None:
                        report.bump("line_graphs_of_trees")
                        ok &= len(root.tree.edges) == n and len(root.tree) == n + 1
                        ok &= graph_isomorphic(line_graph(root.tree), g)
                        ok &= root.line_graph() == g
                report.record(ok, dump)
    return report


# -- tree constructions -----------------------------------------------------


def verify_tree_constructions(max_tree_vertices: int = 8, dim6_samples: int = 300, seed: int = 0, max_pendant_dim: int = 6) -> VerificationReport:
    report = VerificationReport("trees")
    with _Timer(report):
        _even_tree_suite(report, max_tree_vertices)
        _extras_suite(report, dim6_samples, seed)
        _pendant_basis_suite(report, max_pendant_dim)
    return report


def _even_tree_suite(report: VerificationReport, max_tree_vertices: int) -> None:
    for m in range(2, max_tree_vertices + 1):
        for tree in all_labeled_trees(m):
            space, t = edge_basis_instance(tree)
            wit = even_tree_witnesses(space, t).as_tuple()
            even = (m - 1) % 2 == 0
            ok = wit == (even,) * 4
            dd = dual_data(space, t)
            ok &= dd.lambda_after_mu() == dd.theta
            ok &= dd.lambda_kernel() == [dd.w]
            ok &= all(x.bit_count() == 2 for x in dd.mu) and dd.mu_image_rank() == m - 1
            report.bump("even_tree_checks")
            report.record(ok, {"check": "even tree", "edges": sorted(sorted(e) for e in tree.edges), "witnesses": wit})


def _extras_instances(dim6_samples: int, seed: int):
    sp4 = SymplecticSpace.path_form(4)
    basis4 = VectorSet.standard_basis(sp4)
    rest = [v for v in range(1, 16) if v not in basis4]
    for k in (2, 3):
        for extras in itertools.combinations(rest, k):
            yield "path4", sp4, basis4, extras
    for tree in nx.nonisomorphic_trees(5):
        g = SimpleGraph(tree.nodes, tree.edges)
        space, t = edge_basis_instance(g)
        basis = VectorSet.standard_basis(space)
        rest = [v for v in range(1, 16) if v not in basis]
        for extras in itertools.combinations(rest, 2):
            yield "tree4", space, basis, extras
    sp6 = SymplecticSpace.path_form(6)
    basis6 = VectorSet.standard_basis(sp6)
    rest6 = [v for v in range(1, 64) if v not in basis6]
    rng = random.Random(seed)
    for _ in range(dim6_samples):
        yield "path6", sp6, basis6, tuple(rng.sample(rest6, 2))


def _extras_suite(report: VerificationReport, dim6_samples: int, seed: int) -> None:
    for name, space, basis, extras in _extras_instances(dim6_samples, seed):
        recognized = extras_form_line_graph(space, basis, extras)
        report.bump(f"extras_{name}")
        report.record(not recognized, {"check": "extras", "form": name, **dump_instance(space, VectorSet(space, list(basis) + list(extras)))})


def _pendant_basis_suite(report: VerificationReport, max_dim: int) -> None:
    for d in range(2, max_dim + 1):
        for tree in nx.nonisomorphic_trees(d + 1):
            g = SimpleGraph(sorted(tree.nodes), tree.edges)
            space, t = edge_basis_instance(g)
            for u in g.vertices:
                if d % 2:
                    # odd dimension: no pendant vector anywhere
                    report.bump("odd_dim_no_pendant_vector")
                    report.record(not pendant_solutions(space, t, u), {"check": "odd-dim pendant", **dump_instance(space, tree=t), "u": u})
                    continue
                try:
                    ext = extend_with_pendant(space, t, u)
                except DegenerateExtensionError:
                    report.bump("degenerate_dim2_leaf")
                    ok = d == 2 and g.degree(u) == 1
                    report.record(ok, {"check": "degenerate extension", **dump_instance(space, tree=t), "u": u})
                    continue
                dump = {"check": "pendant bases", **dump_instance(space, ext.set), "u": u}
                try:
                    res = check_pendant_bases(space, ext.set)
                except ConstructionError as exc:
                    report.record(False, {**dump, "error": str(exc)})
                    continue
                report.bump(f"pendant_bases_dim{d}")
                report.record(res.all_true() and res.pendant_count >= 2, dump)


# -- mutation invariants ----------------------------------------------------


def verify_mutation_invariants(max_dim: int = 4, n_random: int = 6, seed: int = 0, conj_samples: int = 10_000) -> VerificationReport:
    """Independence-preserving moves keep independence, size, span and
    Tv(S), the conjugation identity holds exactly, and claw-free block
    graphs persist through whole I-classes."""
    report = VerificationReport("mutation")
    with _Timer(report):
        for name, space in form_family(max_dim, n_random, seed):
            groups: dict = {}

            def group_of(members):
                key = tuple(sorted(members))
                if key not in groups:
                    groups[key] = generate_group(space, key)
                return groups[key]

            for members in independent_sets(space, radical_free=False):
                vs = VectorSet(space, members)
                g0 = group_of(members)
                span0 = rank(members)
                for a, b in itertools.permutations(members, 2):
                    out = mutate(space, vs, a, b, mode="I")
                    ok = out.is_independent() and len(out) == len(vs)
                    ok &= rank(list(members) + list(out.members)) == span0
                    ok &= groups_equal(g0, group_of(out.members))
                    report.bump("moves")
                    report.record(ok, {"check": "move", "form": name, **dump_instance(space, vs), "alpha": a, "beta": b})
            _class_persistence(report, name, space)
        _conjugation_suite(report, conj_samples, seed)
    return report


def _class_persistence(report, name, space):
    done: set = set()
    for members in independent_sets(space, radical_free=False):
        if members in done:
            continue
        vs = VectorSet(space, members)
        if not is_claw_free_block_graph(graph_of_set(space, vs)):
            continue
        rep = equivalence_class_bfs(space, vs, "I", keep_members=True)
        if rep.truncated:
            report.truncated()
            continue
        bad = [m for m in rep.members if not is_claw_free_block_graph(graph_of_set(space, VectorSet(space, m)))]
        done.update(rep.members)
        report.bump("persistence_classes")
        report.bump("persistence_sets", len(rep.members))
        report.record(not bad, {"check": "class persistence", "form": name, **dump_instance(space, vs), "violations": [list(b) for b in bad[:5]]})


def _conjugation_suite(report, samples, seed):
    rng = random.Random(seed + 1)
    for _ in range(samples):
        d = rng.randint(2, 8)
        space = SymplecticSpace.random(d, rng)
        a = rng.randrange(1, 1 << d)
        b = rng.randrange(1, 1 << d)
        ma, mb = space.transvection_matrix(a), space.transvection_matrix(b)
        ok = space.transvection_matrix(space.transvect(a, b)) == ma @ mb @ ma
        report.bump("conjugation_triples")
        report.record(ok, {"check": "conjugation", "gram": space.gram_strings(), "alpha": a, "beta": b})


def run_suite(name: str, max_dim: int = 4, seed: int = 0, n_random: int = 24, max_vertices: int = 6, max_tree_vertices: int = 8) -> list[VerificationReport]:
    if name == "characterization":
        return [verify_characterization(max_dim, n_random, seed)]
    if name == "counterexample":
        return [reproduce_counterexample(n) for n in range(3, 7)]
    if name == "letter-count":
        rep = verify_letter_count(max_dim, n_random, seed)
        rep.findings.insert(0, dependent_triangle_finding())
        return [rep]
    if name == "graphs":
        return [verify_graph_recognizers(max_vertices)]
    if name == "trees":
        return [verify_tree_constructions(max_tree_vertices, seed=seed)]
    if name == "mutation":
        return [verify_mutation_invariants(max_dim, seed=seed)]
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, max_dim, seed, n_random, max_vertices, max_tree_vertices))
        return out
    raise ValueError(f"unknown suite {name!r}")
