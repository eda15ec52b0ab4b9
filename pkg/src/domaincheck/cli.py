"""Command line entry points.

Subcommands cover the whole workbench: running verification suites,
listing the poset corpus, classifying a poset, tabulating the way-below
relation, printing a topology, checking a single convergence instance,
and extracting a directed transversal from a family of sets.

Exit codes: 0 on success, 1 when a verification suite reports failures,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import convergence as cv
from . import corpus as cp
from . import rudin as rd
from . import suites
from . import topology as tp
from . import waybelow as wb
from . import sidenat as sn
from .errors import DomainCheckError, UnknownElement
from .order import FinitePoset, bits, poset_from_json
from .sidenat import SIDE_NAT, A, TOP, SideNat

Backend = FinitePoset | SideNat


def _resolve_backend(spec: str) -> Backend:
    """A poset argument is ``side_nat``, a corpus name, or a JSON file."""
    if spec == "side_nat":
        return SIDE_NAT
    if spec.endswith(".json") or os.path.sep in spec:
        path = Path(spec)
        if not path.exists():
            raise UnknownElement(f"poset file {spec!r} does not exist")
        return poset_from_json(path.read_text())
    return cp.resolve_poset(spec)


def _require_finite(p: Backend, what: str) -> FinitePoset:
    if isinstance(p, SideNat):
        raise DomainCheckError(f"{what} needs a finite poset; the side-point dcpo is infinite")
    return p


def _opens_as_lists(p: FinitePoset, opens) -> list[list]:
    rendered = [sorted(p.ids_of(u)) for u in opens]
    rendered.sort(key=lambda ids: (len(ids), ids))
    return rendered


def _parse_point(p: Backend, raw: str):
    if isinstance(p, SideNat):
        return sn.parse_side_element(raw)
    if raw not in p.elements:
        raise UnknownElement(f"{raw!r} is not an element of {p.name!r}")
    return raw


def _parse_side_members(raw_sets: list[list]) -> list[tuple]:
    return [tuple(sn.parse_side_element(str(e)) for e in s) for s in raw_sets]


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _cmd_verify(args: argparse.Namespace) -> int:
    report = suites.run_suite(args.suite, max_size=args.max_size, seed=args.seed)
    sys.stdout.write(suites.emit_report(report, args.format).decode())
    return 0 if report.ok else 1


def _cmd_corpus(args: argparse.Namespace) -> int:
    if args.action == "list":
        for name, p in cp.all_corpus(args.max_size).items():
            sys.stdout.write(f"{name} {p.n}\n")
        return 0
    raise DomainCheckError(f"unknown corpus action {args.action!r}")


def _cmd_classify(args: argparse.Namespace) -> int:
    p = _resolve_backend(args.poset)
    _emit(wb.classify(p).to_dict())
    return 0


def _cmd_waybelow(args: argparse.Namespace) -> int:
    p = _resolve_backend(args.poset)
    if isinstance(p, SideNat):
        points = [0, 1, 2, 3, 4, 5, A, TOP]
        out = {
            "poset": "side_nat",
            "note": f"naturals shown up to {points[-3]}",
            "points": [
                [sn.format_side_element(x), sn.format_side_element(y)]
                for x in points
                for y in points
                if wb.point_way_below(p, x, y)
            ],
        }
        if args.sets:
            chains = list(sn.iter_antichains_upto(4))
            out["sets"] = [
                [[sn.format_side_element(e) for e in g], [sn.format_side_element(e) for e in h]]
                for g in chains
                for h in chains
                if wb.set_way_below(p, g, h)
            ]
        _emit(out)
        return 0
    out = {
        "poset": p.name,
        "points": [
            [x, y] for x in p.elements for y in p.elements if wb.point_way_below(p, x, y)
        ],
    }
    if args.sets:
        chains = list(p.iter_antichain_masks())
        out["sets"] = [
            [sorted(p.ids_of(g)), sorted(p.ids_of(h))]
            for g in chains
            for h in chains
            if wb.set_way_below(p, g, h)
        ]
    _emit(out)
    return 0


def _cmd_topology(args: argparse.Namespace) -> int:
    p = _require_finite(_resolve_backend(args.poset), "the topology table")
    if args.kind == "glim":
        topo = tp.family_liminf_topology(p, method="reduced")
    else:
        topo = tp.finite_topology(p, args.kind)
    _emit({"poset": p.name, "kind": args.kind, "opens": _opens_as_lists(p, topo.opens)})
    return 0


def _cmd_converge(args: argparse.Namespace) -> int:
    p = _resolve_backend(args.poset)
    net = cv.net_from_json(Path(args.net).read_text())
    ideal_spec = json.loads(Path(args.ideal).read_text())
    idl = cv.ideal(ideal_spec["kind"], cv.net_index(net))
    x = _parse_point(p, args.point)
    if args.mode == "liminf":
        verdict = cv.converges_liminf(p, net, x, idl)
    elif args.mode == "family":
        verdict = cv.converges_family_liminf(p, net, x, idl)
    elif args.mode == "eventual":
        verdict = cv.is_eventual_liminf(p, net, x, idl)
    elif args.mode == "topo":
        topo = args.topology if isinstance(p, SideNat) else tp.finite_topology(p, args.topology)
        verdict = cv.converges_topological(p, net, x, idl, topo)
    else:
        raise DomainCheckError(f"unknown mode {args.mode!r}")
    out = {"mode": args.mode, "point": args.point, "ideal": idl.kind}
    if args.mode == "topo":
        out["topology"] = args.topology
    out.update(verdict.to_dict())
    _emit(out)
    return 0


def _cmd_rudin(args: argparse.Namespace) -> int:
    p = _resolve_backend(args.poset)
    fam_spec = json.loads(Path(args.family).read_text())
    if isinstance(p, SideNat):
        raise DomainCheckError("directed transversals are extracted on finite posets")
    members = [p.mask_of(s) for s in fam_spec["sets"]]
    report = rd.extract_directed(p, members)
    _emit(report.to_dict(p))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domaincheck",
        description="Order-theoretic verification workbench for finite posets "
        "and the side-point dcpo.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    default_seed = int(os.environ.get("DOMAINCHECK_SEED", "0"))
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, help="suite name or 'all'")
    v.add_argument("--max-size", type=int, default=5, help="largest exhaustive poset size")
    v.add_argument("--seed", type=int, default=default_seed)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.set_defaults(fn=_cmd_verify)

    c = sub.add_parser("corpus", help="inspect the poset corpus")
    c.add_argument("action", choices=("list",))
    c.add_argument("--max-size", type=int, default=5)
    c.set_defaults(fn=_cmd_corpus)

    cl = sub.add_parser("classify", help="dcpo / continuity classification")
    cl.add_argument("--poset", required=True)
    cl.set_defaults(fn=_cmd_classify)

    w = sub.add_parser("waybelow", help="tabulate the way-below relation")
    w.add_argument("--poset", required=True)
    w.add_argument("--sets", action="store_true", help="include the finite-set relation")
    w.set_defaults(fn=_cmd_waybelow)

    t = sub.add_parser("topology", help="print a topology's open sets")
    t.add_argument("--poset", required=True)
    t.add_argument("--kind", required=True, choices=("scott", "lower", "lawson", "glim"))
    t.set_defaults(fn=_cmd_topology)

    g = sub.add_parser("converge", help="check one convergence instance")
    g.add_argument("--mode", required=True, choices=("liminf", "family", "eventual", "topo"))
    g.add_argument("--poset", required=True)
    g.add_argument("--net", required=True, help="net JSON file")
    g.add_argument("--ideal", required=True, help="ideal JSON file")
    g.add_argument("--point", required=True)
    g.add_argument("--topology", choices=("scott", "lower", "lawson"), default="scott")
    g.set_defaults(fn=_cmd_converge)

    r = sub.add_parser("rudin", help="extract a directed transversal")
    r.add_argument("--poset", required=True)
    r.add_argument("--family", required=True, help="family JSON file with a 'sets' list")
    r.set_defaults(fn=_cmd_rudin)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DomainCheckError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
