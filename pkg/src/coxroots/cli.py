"""Command-line surface.

Exit codes: 0 success, 1 check failed, 2 inconclusive (a depth cap was hit
or an iteration bound was reached), 3 usage error.  Every value that is a
field scalar is printed both exactly (power-basis polynomial in t, where
t = 2*cos(pi/N)) and as a 12-digit decimal.  All iteration orders are
fixed, so output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .automaton import get_automaton, small_roots
from .depth import (
    Coideal,
    coideal_length,
    dominance_depth,
    dominance_set,
    parse_coideal,
)
from .dihedral import (
    CapExceeded,
    check_balanced,
    check_bipodal,
    check_heart,
    plane_subsystem,
)
from .garside import garside_closure, low_elements, verify_garside
from .order import join, meet, realize_cone, root_bruhat_steps, root_weak_covers
from .roots import IDENTITY, RootSystem, parse_root
from .system import preset, system_from_json

PASS, FAIL, INCONCLUSIVE, USAGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        print(f"usage error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _add_group_args(sub):
    sub.add_argument("--group", help="preset name, e.g. Atilde2, rank3:7,3")
    sub.add_argument("--group-file", help="path to JSON {\"rank\": r, \"m\": [[...]]}, 0 = infinity")


def _load_system(args) -> RootSystem:
    if bool(args.group) == bool(args.group_file):
        raise SystemExit(_usage("exactly one of --group / --group-file is required"))
    if args.group:
        return RootSystem(preset(args.group))
    with open(args.group_file) as fh:
        return RootSystem(system_from_json(fh.read()))


def _usage(message: str) -> int:
    print(f"usage error: {message}", file=sys.stderr)
    return USAGE


def _scalar_str(x) -> str:
    return f"{x.exact_str()} ({x.decimal_str()})"


def _root_line(rs, r) -> str:
    return (f"{r.id}\tdepth={r.depth}\tdpinf={dominance_depth(rs, r.id)}\t"
            f"coords={rs.coords_str(r.coords)}\t({rs.coords_decimal(r.coords)})")


def _sorted_elems(elems):
    return sorted(elems, key=lambda e: e.sort_key())


# ---------------------------------------------------------------------------
# commands

def cmd_roots(rs, args):
    for r in rs.roots_to_depth(args.depth):
        print(_root_line(rs, r))
    return PASS


def cmd_small(rs, args):
    sm = small_roots(rs, args.n)
    print(f"small roots (threshold {args.n}): {len(sm.ids)}")
    for rid in sm.ids:
        print(_root_line(rs, rs.roots[rid]))
    return PASS


def cmd_automaton(rs, args):
    auto = get_automaton(rs, args.n)
    if args.dot:
        print(auto.to_dot())
    elif args.json:
        print(json.dumps(auto.to_json(), indent=2, sort_keys=True))
    else:
        print(f"states: {auto.state_count()}")
        print(f"transitions: {sum(len(t) for t in auto.transitions)}")
        for i in range(auto.state_count()):
            ids = ",".join(str(r) for r in sorted(auto.state_ids(i)))
            arrows = " ".join(f"{s + 1}->q{t}" for s, t in sorted(auto.transitions[i].items()))
            print(f"q{i} {{{ids}}} {arrows}")
    return PASS


def cmd_growth(rs, args):
    auto = get_automaton(rs, args.n)
    counts = auto.count_elements_by_length(args.max_len)
    for length, count in enumerate(counts):
        print(f"{length}\t{count}")
    return PASS


def cmd_low(rs, args):
    report = low_elements(rs, args.n)
    if args.json:
        print(json.dumps({
            "n": report.n,
            "elements": [str(e) for e in report.elements],
            "realized_states": list(report.realized_states),
            "unrealized_states": list(report.unrealized_states),
            "missed_states": list(report.missed_states),
            "bijection_holds": report.bijection_holds,
        }, indent=2, sort_keys=True))
    else:
        print(f"low elements (threshold {args.n}): {len(report.elements)}")
        for e in report.elements:
            print(str(e))
        print(f"states: {report.state_count}  unrealized: {list(report.unrealized_states)}"
              f"  bijection_holds: {report.bijection_holds}")
    return PASS


def cmd_shadow(rs, args):
    seed = None
    if args.seed:
        seed = {IDENTITY} | {rs.element((s,)) for s in range(rs.rank)}
        seed |= {rs.element_from_str(w) for w in args.seed}
    report = garside_closure(rs, seed=seed, max_iter=args.max_iter)
    for e in report.elements:
        print(str(e))
    print(f"iterations: {report.iterations}  converged: {report.converged}")
    return PASS if report.converged else INCONCLUSIVE


def cmd_verify_garside(rs, args):
    with open(args.file) as fh:
        data = json.load(fh)
    elems = {rs.element_from_str(w) for w in data["elements"]}
    check = verify_garside(rs, elems)
    if check.ok:
        print("garside axioms: pass")
        return PASS
    print("garside axioms: fail")
    for s in check.missing_generators:
        print(f"missing generator: {s + 1}")
    for w, v in check.suffix_witnesses:
        print(f"suffix escapes: {w} -> {v}")
    for u, v, z in check.join_witnesses:
        print(f"join escapes: ({u}) v ({v}) = {z}")
    return FAIL


def cmd_join(rs, args):
    u = rs.element_from_str(args.left)
    v = rs.element_from_str(args.right)
    out = join(rs, u, v)
    print(str(out.element) if out.exists else "unbounded")
    return PASS


def cmd_meet(rs, args):
    u = rs.element_from_str(args.left)
    v = rs.element_from_str(args.right)
    print(str(meet(rs, u, v)))
    return PASS


def cmd_suffixes(rs, args):
    w = rs.element_from_str(args.word)
    for e in _sorted_elems(rs.suffixes(w)):
        print(str(e))
    return PASS


def cmd_realize(rs, args):
    rids = [rs.root_id(parse_root(rs, t)) for t in args.roots]
    out = realize_cone(rs, rids)
    if out.element is not None:
        print(str(out.element))
        return PASS
    print("unbounded" if not out.bounded else "bounded but not an inversion cone")
    return PASS


def cmd_rootposet(rs, args):
    edges = []
    for r in rs.roots_to_depth(args.cap):
        for source in (r.coords, tuple(-c for c in r.coords)):
            if args.bruhat:
                edges.extend(root_bruhat_steps(rs, source, args.cap))
            else:
                edges.extend(root_weak_covers(rs, source))
    edges.sort(key=lambda e: (rs.coord_key(e.source), rs.coord_key(e.mediator)))
    if args.dot:
        print("digraph rootposet {")
        for e in edges:
            print(f'  "{rs.coords_str(e.source)}" -> "{rs.coords_str(e.target)}"'
                  f' [label="{rs.coords_str(e.mediator)}"];')
        print("}")
    else:
        for e in edges:
            print(f"{rs.coords_str(e.source)} -> {rs.coords_str(e.target)}"
                  f"  via {rs.coords_str(e.mediator)}  c={_scalar_str(e.coefficient)}")
    return PASS


def cmd_dpinf(rs, args):
    rid = rs.root_id(parse_root(rs, args.root))
    print(dominance_depth(rs, rid))
    return PASS


def cmd_dom(rs, args):
    rid = rs.root_id(parse_root(rs, args.root))
    for gid in sorted(dominance_set(rs, rid)):
        print(_root_line(rs, rs.roots[gid]))
    return PASS


def cmd_dlen(rs, args):
    coideal = parse_coideal(rs, args.X)
    vec = parse_root(rs, args.root)
    print(coideal_length(rs, vec, coideal))
    return PASS


def cmd_check(rs, args):
    if args.kind == "bipodal":
        reports = [check_bipodal(rs, small_roots(rs, n).ids, args.cap) for n in args.n]
    elif args.kind == "balanced":
        reports = [check_balanced(rs, small_roots(rs, n).ids, args.cap) for n in args.n]
    else:
        if args.n != [0]:
            return _usage("the heart condition is defined at threshold 0")
        reports = [check_heart(rs, args.cap)]
    worst = PASS
    for n, report in zip(args.n, reports):
        print(f"{report.name} n={n}: {report.status}")
        for w in report.witnesses:
            print(f"  witness: {json.dumps(w, default=str, sort_keys=True)}")
        for c in report.caps_hit:
            print(f"  cap hit: {json.dumps(c, default=str, sort_keys=True)}")
        worst = max(worst, report.exit_code())
    return worst


def cmd_dihedral(rs, args):
    v1 = parse_root(rs, args.root1)
    v2 = parse_root(rs, args.root2)
    try:
        sub = plane_subsystem(rs, v1, v2, args.cap)
    except CapExceeded as exc:
        print(f"inconclusive: {exc}")
        return INCONCLUSIVE
    d1, d2 = sub.simples
    print(f"simples: {rs.coords_str(d1)} | {rs.coords_str(d2)}")
    print(f"pair value: {_scalar_str(sub.gram_simples)}")
    print(f"finite: {sub.finite}" + (f"  positive roots: {sub.size}" if sub.finite else ""))
    return PASS


def cmd_project(rs, args):
    print("id,depth,dpinf," + ",".join(f"x{i + 1}" for i in range(rs.rank)) + ",exact")
    for r in rs.roots_to_depth(args.depth):
        total = r.coords[0]
        for c in r.coords[1:]:
            total = total + c
        normalized = [c / total for c in r.coords]
        cells = ",".join(x.decimal_str() for x in normalized)
        print(f"{r.id},{r.depth},{dominance_depth(rs, r.id)},{cells},"
              f"\"{rs.coords_str(r.coords)}\"")
    return PASS


def cmd_dashboard(rs, args):
    for n in range(args.max_n + 1):
        sm = small_roots(rs, n)
        report = low_elements(rs, n)
        bip = check_bipodal(rs, sm.ids, args.cap)
        print(f"n={n}: small_roots={len(sm.ids)} states={report.state_count} "
              f"low_elements={len(report.elements)} "
              f"state_map_bijective={report.bijection_holds} bipodal={bip.status}")
        if report.missed_states:
            print(f"  states outside the low-element image: {list(report.missed_states)}")
        for w in bip.witnesses:
            print(f"  bipodality witness: {json.dumps(w, default=str, sort_keys=True)}")
        for c in bip.caps_hit:
            print(f"  cap hit: {json.dumps(c, default=str, sort_keys=True)}")
    return PASS


# ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="coxroots", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    def sub(name, fn, **kwargs):
        p = subs.add_parser(name, **kwargs)
        _add_group_args(p)
        p.set_defaults(fn=fn)
        return p

    p = sub("roots", cmd_roots, help="list roots by depth")
    p.add_argument("--depth", type=int, default=4)

    p = sub("small", cmd_small, help="list the n-small roots")
    p.add_argument("--n", type=int, default=0)

    p = sub("automaton", cmd_automaton, help="reduced-word automaton")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub("growth", cmd_growth, help="element counts by length")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--max-len", type=int, default=8)

    p = sub("low", cmd_low, help="enumerate low elements")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = sub("shadow", cmd_shadow, help="closure under suffixes and joins")
    p.add_argument("--seed", nargs="*", help="extra seed words, 1-based")
    p.add_argument("--max-iter", type=int, default=30)

    p = sub("verify-garside", cmd_verify_garside, help="check the axioms on a set")
    p.add_argument("--file", required=True, help='JSON {"elements": ["3 1 2 1", ...]}')

    p = sub("join", cmd_join, help="join of two elements")
    p.add_argument("left")
    p.add_argument("right")

    p = sub("meet", cmd_meet, help="meet of two elements")
    p.add_argument("left")
    p.add_argument("right")

    p = sub("suffixes", cmd_suffixes, help="all suffixes of an element")
    p.add_argument("word")

    p = sub("realize", cmd_realize, help="element with inversion cone over given roots")
    p.add_argument("roots", nargs="+")

    p = sub("rootposet", cmd_rootposet, help="weak or Bruhat order edges on roots")
    p.add_argument("--weak", action="store_true")
    p.add_argument("--bruhat", action="store_true")
    p.add_argument("--cap", type=int, default=6)
    p.add_argument("--dot", action="store_true")

    p = sub("dpinf", cmd_dpinf, help="dominance depth of a root")
    p.add_argument("root")

    p = sub("dom", cmd_dom, help="roots strictly dominated by a root")
    p.add_argument("root")

    p = sub("dlen", cmd_dlen, help="coideal length of a root")
    p.add_argument("root")
    p.add_argument("--X", default="all", help="all | empty | ge:a | gt:a")

    p = sub("check", cmd_check, help="bipodal / balanced / heart probes")
    p.add_argument("kind", choices=["bipodal", "balanced", "heart"])
    p.add_argument("--n", type=lambda s: [int(x) for x in s.split(",")], default=[0])
    p.add_argument("--cap", type=int)

    p = sub("dihedral", cmd_dihedral, help="maximal dihedral subsystem of a plane")
    p.add_argument("root1")
    p.add_argument("root2")
    p.add_argument("--cap", type=int)

    p = sub("project", cmd_project, help="normalized root coordinates as CSV")
    p.add_argument("--depth", type=int, default=6)

    p = sub("dashboard", cmd_dashboard, help="conjecture status per threshold")
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--cap", type=int)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        rs = _load_system(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    except (OSError, ValueError, KeyError) as exc:
        return _usage(str(exc))
    try:
        return args.fn(rs, args)
    except CapExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return INCONCLUSIVE
    except ValueError as exc:
        return _usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
