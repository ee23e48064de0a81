"""``omega-trees``: JSON in, JSON out.

Tree, automaton, order and map arguments accept a file path, ``-`` for
standard input, or an inline JSON literal.  Exit status is 0 on success,
1 for malformed input and 2 when a domain contract fails.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import cbmeasure, kborder, linorders, presets, seqcode, space
from .errors import ContractError, OmegaTreesError, UsageError
from .serialize import (
    automaton_from_json,
    map_from_json,
    map_to_json,
    order_from_json,
    point_from_json,
    tree_from_json,
)
from .trees import AttTree, FiniteTree, ProductTree, ShiftClosure, SubTree, SumTree, section_report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(arg: str):
    try:
        if arg == "-":
            return json.load(sys.stdin)
        if os.path.exists(arg):
            with open(arg, encoding="utf-8") as fh:
                return json.load(fh)
        return json.loads(arg)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{arg!r} is neither a readable file nor valid JSON: {exc}") from None


def _tree(arg):
    return tree_from_json(_load(arg))


def _aut(arg):
    return automaton_from_json(_load(arg))


def _seq(text):
    try:
        return seqcode.parse_seq(text)
    except ValueError as exc:
        raise UsageError(f"bad sequence {text!r}: {exc}") from None


def _point_json(x, budget):
    if isinstance(x, space.Node):
        return x.to_json()
    return {"branch_prefix": list(x.prefix(budget))}


# -- verbs --------------------------------------------------------------------


def seq_encode(a):
    return {"code": seqcode.encode(_seq(a.seq))}


def seq_decode(a):
    return {"seq": list(seqcode.decode(a.code))}


def kb_cmp(a):
    return {"leq": kborder.kb_cmp(_seq(a.u), _seq(a.v)) != kborder.KbComparison.GreaterEq}


def kb_sort(a):
    tree = _tree(a.tree)
    if not isinstance(tree, FiniteTree):
        nodes = list(tree.nodes(a.depth))
    else:
        nodes = tree.sorted_nodes()
    return {"nodes": [list(u) for u in kborder.kb_sort(nodes)]}


def tree_member(a):
    tree = _tree(a.tree)
    u = _seq(a.node)
    out = {"member": tree.member(u)}
    if isinstance(tree, ProductTree) and not out["member"]:
        out["reason"] = tree.explain(u)
    return out


def tree_sum(a):
    return SumTree(_tree(a.left), _tree(a.right)).to_json()


def tree_product(a):
    return ProductTree(_tree(a.left), _tree(a.right)).to_json()


def tree_att(a):
    att = AttTree(_tree(a.tree), a.node_depth)
    if a.depth is None:
        return att.to_json()
    return {"nodes": [list(w) for w in att.nodes(a.depth)]}


def tree_subtree(a):
    return SubTree(_tree(a.tree), _seq(a.node)).to_json()


def tree_shift(a):
    return ShiftClosure(_tree(a.tree)).to_json()


def space_dist(a):
    tree = _tree(a.tree)
    x, y = point_from_json(_load(a.x)), point_from_json(_load(a.y))
    return space.dist(tree, x, y, a.budget).to_json()


def space_rho(a):
    tree = _tree(a.tree)
    x = point_from_json(_load(a.x))
    return {"branch_prefix": list(space.rho(tree, x).prefix(a.budget))}


def space_presentation(a):
    return space.presentation(_tree(a.tree), a.index).to_json()


def space_prodiso(a):
    left, right = _tree(a.left), _tree(a.right)
    if a.z is not None:
        x, y = space.prod_iso_inv(left, right, point_from_json(_load(a.z)), a.budget)
        return {"left": _point_json(x, a.budget), "right": _point_json(y, a.budget)}
    if a.x is None or a.y is None:
        raise UsageError("prodiso needs --x and --y, or --z for the inverse")
    z = space.prod_iso(left, right, point_from_json(_load(a.x)), point_from_json(_load(a.y)))
    return _point_json(z, a.budget)


def cb_kernel(a):
    kernel = cbmeasure.perfect_kernel(_aut(a.automaton))
    if a.dot:
        return cbmeasure.to_dot(kernel, "kernel")
    return kernel.to_json()


def cb_measure(a):
    return cbmeasure.measure_body(_aut(a.automaton), a.depth).to_json(full=a.full)


def cb_split(a):
    left, right = cbmeasure.splitting_witness(_aut(a.automaton), _seq(a.node))
    return {"left": list(left), "right": list(right)}


def cb_classify(a):
    aut = _aut(a.automaton)
    if a.dot:
        return cbmeasure.to_dot(aut)
    if a.node is not None:
        return cbmeasure.scat_member(aut, _seq(a.node)).to_json()
    return {
        "states": [
            {"state": q, "live": c.live, "uncountable": c.uncountable, "positive": c.positive}
            for q, c in cbmeasure.classify_states(aut).items()
        ]
    }


def _orders(a):
    return order_from_json(_load(a.lin)), order_from_json(_load(a.wo))


def adm_solve(a):
    lin, wo = _orders(a)
    return {"map": map_to_json(linorders.solve_strongly_admissible(lin, wo))}


def adm_check(a):
    lin, wo = _orders(a)
    f = map_from_json(_load(a.map))
    v = linorders.admissible_violation(f, lin, wo)
    return {
        "admissible": v is None,
        "strongly_admissible": linorders.strongly_admissible_check(f, lin, wo),
        "violated_condition": v,
    }


def adm_brute(a):
    lin, wo = _orders(a)
    return {"maps": [map_to_json(f) for f in linorders.brute_force_strongly_admissible(lin, wo)]}


_BUILD_DEFAULTS = {
    "elementwise": "elementwise_evens",
    "chain": "chain_lt",
    "sg": "sg_toy_even",
    "bar": "bar_length",
    "unfold": "unfold_true",
}


def build(a):
    name = a.preset or _BUILD_DEFAULTS[a.kind]
    if name not in presets.TREES:
        raise UsageError(f"unknown preset {name!r}")
    params = _load(a.params) if a.params else {}
    tree = presets.tree(name, params)
    out = {"tree": tree.to_json()}
    if a.depth is not None:
        out["nodes"] = [list(u) for u in tree.nodes(a.depth)]
        if a.kind == "sg":
            out["sections"] = {str(n): c for n, c in section_report(tree, a.depth).items()}
    return out


# -- parser -------------------------------------------------------------------


def _parser() -> _Parser:
    p = _Parser(prog="omega-trees", description="Computable tree calculus on the naturals.")
    groups = p.add_subparsers(dest="group", required=True)

    def verbs(name):
        g = groups.add_parser(name)
        return g.add_subparsers(dest="verb", required=True)

    def verb(sub, name, fn, *args):
        v = sub.add_parser(name)
        v.set_defaults(fn=fn)
        for a in args:
            a(v)
        return v

    def pos(*names):
        return lambda v: [v.add_argument(n) for n in names]

    def opt(flag, **kw):
        return lambda v: v.add_argument(flag, **kw)

    budget = opt("--budget", type=int, default=64)

    s = verbs("seq")
    verb(s, "encode", seq_encode, opt("--seq", required=True))
    verb(s, "decode", seq_decode, opt("--code", type=int, required=True))

    k = verbs("kb")
    verb(k, "cmp", kb_cmp, opt("--u", required=True), opt("--v", required=True))
    verb(k, "sort", kb_sort, pos("tree"), opt("--depth", type=int, default=4))

    t = verbs("tree")
    verb(t, "member", tree_member, pos("tree"), opt("--node", required=True))
    verb(t, "sum", tree_sum, pos("left", "right"))
    verb(t, "product", tree_product, pos("left", "right"))
    verb(t, "att", tree_att, pos("tree"), opt("--node-depth", type=int, default=6),
         opt("--depth", type=int, default=None))
    verb(t, "subtree", tree_subtree, pos("tree"), opt("--node", required=True))
    verb(t, "shift", tree_shift, pos("tree"))

    sp = verbs("space")
    verb(sp, "dist", space_dist, pos("tree"), opt("--x", required=True), opt("--y", required=True), budget)
    verb(sp, "rho", space_rho, pos("tree"), opt("--x", required=True), budget)
    verb(sp, "presentation", space_presentation, pos("tree"), opt("--index", type=int, required=True))
    verb(sp, "prodiso", space_prodiso, pos("left", "right"), opt("--x"), opt("--y"), opt("--z"), budget)

    c = verbs("cb")
    verb(c, "kernel", cb_kernel, opt("--automaton", required=True), opt("--dot", action="store_true"))
    verb(c, "measure", cb_measure, opt("--automaton", required=True), opt("--depth", type=int, default=20),
         opt("--full", action="store_true"))
    verb(c, "split", cb_split, opt("--automaton", required=True), opt("--node", default=""))
    verb(c, "classify", cb_classify, opt("--automaton", required=True), opt("--node"),
         opt("--dot", action="store_true"))

    ad = verbs("adm")
    orders = (opt("--lin", required=True), opt("--wo", required=True))
    verb(ad, "solve", adm_solve, *orders)
    verb(ad, "check", adm_check, *orders, opt("--map", required=True))
    verb(ad, "brute", adm_brute, *orders)

    b = verbs("build")
    for kind in _BUILD_DEFAULTS:
        verb(b, kind, build, opt("--preset"), opt("--params"), opt("--depth", type=int)).set_defaults(kind=kind)
    return p


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
        result = args.fn(args)
    except OmegaTreesError as exc:
        stderr.write(_dumps({"error": {"code": exc.code, "message": str(exc)}}))
        return 2 if isinstance(exc, ContractError) else 1
    except (ValueError, TypeError, KeyError) as exc:
        stderr.write(_dumps({"error": {"code": "MalformedInput", "message": str(exc)}}))
        return 1
    stdout.write(result if isinstance(result, str) else _dumps(result))
    return 0


def main(argv=None) -> int:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
