"""``transvect`` command line.

Exit codes: 0 success, 1 discrepancy found by ``verify``, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import constructor, graphs, groupgen, harness, mutation
from .f2core import vec_from_str, vec_to_str
from .instance import BIT_ORDER_NOTE, dump_instance, load_instance, parse_instance

DIM_CAP = int(os.environ.get("TRANSVECT_DIM_CAP", 16))


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        print(json.dumps({"bit_order": BIT_ORDER_NOTE, **payload}, sort_keys=True))
    else:
        print(f"# {BIT_ORDER_NOTE}")
        for line in text_lines:
            print(line)


def _need_set(inst):
    if inst.set is None:
        raise UsageError("instance has no 'set'")
    return inst.set


def _vector_arg(s: str, dim: int) -> int:
    if len(s) != dim or set(s) - {"0", "1"}:
        raise UsageError(f"expected a {dim}-character bitstring, got {s!r}")
    return vec_from_str(s)


# -- subcommands ------------------------------------------------------------


def classify_instance(space, vs) -> dict:
    g = graphs.graph_of_set(space, vs)
    conds = graphs.classical_conditions(g)
    root = graphs.reconstruct_root_tree(g)
    dim = space.dim
    out = {
        "instance": dump_instance(space, vs),
        "independent": vs.is_independent(),
        "rank": vs.rank(),
        "spans": vs.spans(),
        "radical_members": [vec_to_str(v, dim) for v in vs.radical_members()],
        "connected": g.is_connected(),
        "claw_free": graphs.is_claw_free(g),
        "block_graph": graphs.is_block_graph(g),
        "claw_free_block_graph": graphs.is_claw_free_block_graph(g),
        "classical_conditions": list(conds.as_tuple()),
        "edges": sorted([vec_to_str(vs.members[a], dim), vec_to_str(vs.members[b], dim)] for a, b in (sorted(e) for e in g.edges)),
        "root_tree": None,
    }
    if root is not None:
        out["root_tree"] = {
            "edges": sorted(
                [sorted(e), vec_to_str(vs.members[label], dim)] for e, label in root.labels.items()
            )
        }
    return out


def cmd_classify(args) -> int:
    with open(args.instance) as fh:
        data = json.load(fh)
    if "instance" in data:  # a previous classify --json output
        data = data["instance"]
    inst = parse_instance(data, DIM_CAP)
    vs = _need_set(inst)
    res = classify_instance(inst.space, vs)
    c = res["classical_conditions"]
    _emit(
        args,
        res,
        [
            f"set: {' '.join(vs.to_strings())}",
            f"independent={res['independent']} rank={res['rank']} spans={res['spans']}",
            f"connected={res['connected']} claw_free={res['claw_free']} block_graph={res['block_graph']}",
            f"claw_free_block_graph={res['claw_free_block_graph']}",
            "conditions (i)-(iv): " + " ".join("T" if x else "F" for x in c),
            f"root_tree={'yes' if res['root_tree'] else 'none'}",
        ],
    )
    return 0


def cmd_group(args) -> int:
    inst = load_instance(args.instance, DIM_CAP)
    vs = _need_set(inst)
    g = groupgen.generate_group(inst.space, vs, cap=args.cap)
    payload: dict = {"instance": dump_instance(inst.space, vs), "order": g.order, "capped": g.capped, "symmetric": None}
    lines = [f"order={g.order}" + (" (capped)" if g.capped else "")]
    if not g.capped:
        try:
            cert = groupgen.is_symmetric_group(g, budget=args.budget)
        except groupgen.SearchBudgetExceeded:
            payload["symmetric"] = "inconclusive"
            lines.append("symmetric=inconclusive (search budget exceeded)")
        else:
            if cert is None:
                payload["symmetric"] = False
                lines.append("symmetric=no")
            else:
                payload["symmetric"] = True
                payload["k"] = cert.k
                payload["coxeter_generators"] = [m.to_strings() for m in cert.coxeter_generators]
                lines.append(f"symmetric=k{cert.k}")
                for i, m in enumerate(cert.coxeter_generators, 1):
                    lines.append(f"t{i}: {' '.join(m.to_strings())}")
    _emit(args, payload, lines)
    return 0


def _load_trace(path: str) -> list:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("move_trace") or []
    return [mutation.Move.from_json(item) for item in data]


def cmd_mutate(args) -> int:
    inst = load_instance(args.instance, DIM_CAP)
    space, vs = inst.space, _need_set(inst)
    dim = space.dim
    if args.replay:
        out = mutation.replay(space, vs, _load_trace(args.replay), args.mode)
        res = {"instance": dump_instance(space, out), "graph_is_path": graphs.is_path_graph(graphs.graph_of_set(space, out))}
        _emit(args, res, [f"set: {' '.join(out.to_strings())}", f"graph_is_path={res['graph_is_path']}"])
        return 0
    if args.alpha is not None or args.beta is not None:
        if args.alpha is None or args.beta is None:
            raise UsageError("--alpha and --beta go together")
        a, b = _vector_arg(args.alpha, dim), _vector_arg(args.beta, dim)
        out = mutation.mutate(space, vs, a, b, args.mode)
        shrunk = len(out) < len(vs)
        res = {"instance": dump_instance(space, out), "shrunk": shrunk}
        _emit(args, res, [f"set: {' '.join(out.to_strings())}"] + (["(cardinality shrank)"] if shrunk else []))
        return 0
    rep = mutation.equivalence_class_bfs(space, vs, args.mode, args.max_sets, args.max_moves)
    res = {
        "instance": dump_instance(space, vs),
        "mode": rep.mode,
        "class_size": rep.class_size,
        "truncated": rep.truncated,
        "path_representative": [vec_to_str(v, dim) for v in rep.path_representative] if rep.path_representative else None,
        "move_trace": [m.to_json(dim) for m in rep.move_trace] if rep.move_trace is not None else None,
        "shrink_moves": rep.shrink_moves,
        "grow_moves": rep.grow_moves,
    }
    lines = [f"mode={rep.mode} class_size={rep.class_size} truncated={rep.truncated}"]
    if rep.path_representative is not None:
        lines.append(f"path representative: {' '.join(res['path_representative'])}")
        for m in res["move_trace"]:
            lines.append("  move " + " ".join(m))
    else:
        lines.append("path representative: none" + (" within caps" if rep.truncated else ""))
    if rep.shrink_moves:
        lines.append(f"shrinking moves seen: {rep.shrink_moves}")
    _emit(args, res, lines)
    return 0


def cmd_construct(args) -> int:
    inst = load_instance(args.tree, DIM_CAP)
    if inst.tree is None:
        raise UsageError("construct needs an instance with a 'tree' block")
    verts = inst.tree.tree.vertices
    try:
        u = verts[int(args.vertex)]
    except (ValueError, IndexError):
        raise UsageError(f"vertex must be an index in 0..{len(verts) - 1}")
    ext = constructor.extend_with_pendant(inst.space, inst.tree, u)
    payload = dump_instance(inst.space, ext.set, ext.tree)
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"# {BIT_ORDER_NOTE}")
        print(json.dumps(payload, indent=2))
    return 0


def cmd_export_dot(args) -> int:
    inst = load_instance(args.instance, DIM_CAP)
    print(f"// {BIT_ORDER_NOTE}")
    if args.tree:
        if inst.tree is None:
            raise UsageError("instance has no tree")
        tr = inst.tree.tree
        edge_text = {e: vec_to_str(lab, inst.space.dim) for e, lab in inst.tree.labels.items()}
        sys.stdout.write(graphs.to_dot(tr, name="T", edge_labels=edge_text))
        return 0
    vs = _need_set(inst)
    g = graphs.vector_graph(inst.space, vs.members)
    sys.stdout.write(graphs.to_dot(g, name="G", dim=inst.space.dim))
    return 0


def cmd_verify(args) -> int:
    reports = harness.run_suite(
        args.suite,
        max_dim=args.max_dim,
        seed=args.seed,
        n_random=args.random_forms,
        max_vertices=args.max_vertices,
        max_tree_vertices=args.max_tree_vertices,
    )
    if args.json:
        print(json.dumps({"bit_order": BIT_ORDER_NOTE, "reports": [r.to_dict() for r in reports]}, sort_keys=True))
    else:
        print(f"# {BIT_ORDER_NOTE}")
        for r in reports:
            print(r.to_text())
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="transvect", description="Transvection groups over F2 and their graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("classify", cmd_classify, "graph predicates and the four classical conditions")
    sp.add_argument("instance")

    sp = add("group", cmd_group, "order of Tv(S) and the symmetric-group decision")
    sp.add_argument("instance")
    sp.add_argument("--cap", type=int, default=groupgen.DEFAULT_CAP)
    sp.add_argument("--budget", type=int, default=groupgen.DEFAULT_SEARCH_BUDGET)

    sp = add("mutate", cmd_mutate, "single move, class search, or trace replay")
    sp.add_argument("instance")
    sp.add_argument("--mode", choices=mutation.MODES, default="T")
    sp.add_argument("--alpha")
    sp.add_argument("--beta")
    sp.add_argument("--replay", metavar="TRACE", help="JSON list of [alpha, beta] moves")
    sp.add_argument("--max-sets", type=int, default=mutation.DEFAULT_MAX_SETS)
    sp.add_argument("--max-moves", type=int, default=mutation.DEFAULT_MAX_MOVES)

    sp = add("construct", cmd_construct, "extend an edge-labelled tree by a pendant edge")
    sp.add_argument("--tree", required=True, help="instance file with a tree block")
    sp.add_argument("--vertex", required=True, help="tree vertex index")

    sp = add("verify", cmd_verify, "run verification suites")
    sp.add_argument("--suite", choices=harness.SUITES + ("all",), default="all")
    sp.add_argument("--max-dim", type=int, default=4)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--random-forms", type=int, default=24)
    sp.add_argument("--max-vertices", type=int, default=6)
    sp.add_argument("--max-tree-vertices", type=int, default=8)

    sp = add("export-dot", cmd_export_dot, "DOT for G(S), or for the tree with --tree")
    sp.add_argument("instance")
    sp.add_argument("--tree", action="store_true")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"transvect: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
