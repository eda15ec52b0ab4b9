"""Verification suites: one per checked statement, plus the aggregate.

Each suite replays one proposition or theorem across the corpus and
returns a report of cases run, cases passed, and machine-checkable
failure witnesses.  Failures never abort a suite; everything runs to
completion and aggregates.  Sampled suites draw from a generator seeded
per suite name, so reruns with the same seed are byte-identical.
"""

from __future__ import annotations

import json
import random
import time
import zlib
from dataclasses import dataclass, field

from . import convergence as cv
from . import corpus as cp
from . import rudin as rd
from . import sidenat as sn
from . import topology as tp
from . import waybelow as wb
from . import oplog
from .errors import NoWitness, UnknownSuite
from .oplog import logged
from .order import FinitePoset, bits
from .sidenat import A, TOP, SIDE_NAT


@dataclass
class SuiteReport:
    suite: str
    cases: int
    passed: int
    failures: list[dict]
    seed: int
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


@logged("suites.emit")
def emit_report(report: SuiteReport, fmt: str = "json") -> bytes:
    """Render a report; the JSON schema is stable and excludes wall time,
    so fixed-seed reruns are byte-identical."""
    if fmt == "json":
        payload = {
            "suite": report.suite,
            "cases": report.cases,
            "passed": report.passed,
            "failures": report.failures,
            "seed": report.seed,
        }
        return (json.dumps(payload, indent=2) + "\n").encode()
    if fmt == "text":
        lines = [
            f"suite {report.suite}: {report.passed}/{report.cases} passed"
            f" (seed {report.seed}, {report.wall_time:.2f}s)"
        ]
        for f in report.failures:
            lines.append(f"  FAIL {f.get('case', '?')}: {json.dumps(f, sort_keys=True)}")
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")


def parse_report(data: bytes) -> SuiteReport:
    d = json.loads(data)
    return SuiteReport(d["suite"], d["cases"], d["passed"], d["failures"], d["seed"])


@dataclass
class _Ctx:
    max_size: int
    seed: int
    corpus: dict[str, FinitePoset] = field(default_factory=dict)

    def rng(self, suite: str) -> random.Random:
        return random.Random(self.seed ^ zlib.crc32(suite.encode()))


class _Run:
    def __init__(self, suite: str, seed: int) -> None:
        self.suite = suite
        self.seed = seed
        self.cases = 0
        self.failures: list[dict] = []

    def check(self, case: str, ok: bool, witness: dict | None = None) -> None:
        self.cases += 1
        if not ok:
            entry = {"case": case}
            entry.update(witness or {})
            self.failures.append(entry)

    def report(self, wall: float) -> SuiteReport:
        return SuiteReport(
            self.suite, self.cases, self.cases - len(self.failures), self.failures, self.seed, wall
        )


# -- individual suites -------------------------------------------------------


def _suite_interpolation(run: _Run, ctx: _Ctx) -> None:
    """Between a set way below a point there is an interpolating finite set."""
    for name, p in ctx.corpus.items():
        for h in p.iter_antichain_masks():
            for ix in range(p.n):
                if not wb.set_way_below(p, h, 1 << ix):
                    continue
                f = wb.interpolate(p, h, p.elements[ix])
                ok = wb.set_way_below(p, h, f) and wb.set_way_below(p, f, 1 << ix)
                run.check(
                    f"{name}:{sorted(p.ids_of(h))}<<{p.elements[ix]}",
                    ok,
                    {"between": list(p.ids_of(f))} if not ok else None,
                )
    for h in sn.iter_antichains_upto(4):
        for x in (A, TOP, 0, 1, 3, 6):
            if not wb.set_way_below(SIDE_NAT, h, (x,)):
                continue
            f = wb.interpolate(SIDE_NAT, h, x)
            ok = wb.set_way_below(SIDE_NAT, h, f) and wb.set_way_below(SIDE_NAT, f, (x,))
            run.check(f"side:{h}<<{x}", ok, {"between": [str(e) for e in f]} if not ok else None)


def _suite_liminf_topology(run: _Run, ctx: _Ctx) -> None:
    """The topology induced by lim-inf convergence is the Scott topology."""
    for name, p in ctx.corpus.items():
        derived = cv.derive_convergence_topology(p, "liminf")
        sc = tp.scott_topology(p)
        run.check(
            f"{name}:liminf=scott",
            derived.opens == sc.opens,
            {"derived": len(derived.opens), "scott": len(sc.opens)},
        )


def _suite_liminf_to_family(run: _Run, ctx: _Ctx) -> None:
    """Lim-inf convergence implies family lim-inf convergence."""
    rng = ctx.rng(run.suite)
    for name, p in ctx.corpus.items():
        for i in range(200):
            net, idl = _sample_net(p, rng)
            x = rng.randrange(p.n)
            if cv.converges_liminf(p, net, x, idl).holds:
                ok = cv.converges_family_liminf(p, net, x, idl).holds
                run.check(f"{name}:{i}", ok, _triple_witness(p, net, x, idl))
    I = cv.ideal("eventual")
    for label, net in _side_nets():
        for x in (A, TOP, 0, 2, 5):
            if cv.converges_liminf(SIDE_NAT, net, x, I).holds:
                ok = cv.converges_family_liminf(SIDE_NAT, net, x, I).holds
                run.check(f"side:{label}:{x}", ok)


def _suite_family_forces_waybelow(run: _Run, ctx: _Ctx) -> None:
    """If a set is not way below a point, some family-convergent net escapes
    its upper set: the constant net at the point, under the eventual ideal."""
    I = cv.ideal("eventual")
    for name, p in ctx.corpus.items():
        for g in p.iter_antichain_masks():
            for ix in range(p.n):
                if wb.set_way_below(p, g, 1 << ix):
                    continue
                net = cv.track_net(cv.const_track(p.elements[ix]))
                conv = cv.converges_family_liminf(p, net, ix, I).holds
                escaped = not cv.ideal_member(I, cv.exception_set(p, net, p.up_of_mask(g)))
                run.check(f"{name}:{sorted(p.ids_of(g))}:{p.elements[ix]}", conv and escaped)


def _suite_waybelow_forces_family(run: _Run, ctx: _Ctx) -> None:
    """On quasi-continuous posets, a net trapped by every set way below a
    point family-converges to that point."""
    rng = ctx.rng(run.suite)
    for name, p in ctx.corpus.items():
        waydowns = [
            [g for g in p.iter_antichain_masks() if wb.set_way_below(p, g, 1 << ix)]
            for ix in range(p.n)
        ]
        for i in range(200):
            net, idl = _sample_net(p, rng)
            x = rng.randrange(p.n)
            premise = all(
                cv.ideal_member(idl, cv.exception_set(p, net, p.up_of_mask(g)))
                for g in waydowns[x]
            )
            if premise:
                ok = cv.converges_family_liminf(p, net, x, idl).holds
                run.check(f"{name}:{i}", ok, _triple_witness(p, net, x, idl))
    I = cv.ideal("eventual")
    for label, net in _side_nets():
        gi = cv.eventual_family(SIDE_NAT, net, I)
        for x in (A, TOP, 0, 3):
            premise = _side_waydown_trapped(gi, x)
            if premise:
                ok = cv.converges_family_liminf(SIDE_NAT, net, x, I).holds
                run.check(f"side:{label}:{x}", ok)


def _side_waydown_trapped(gi: cv.SideGiFamily, x) -> bool:
    """Whether every finite set way below ``x`` traps the net (via the
    closed-form eventually-below family).

    The sets way below the side point are exactly the pairs, those below
    the top are all singletons and all pairs, and those below a natural
    are the singletons and pairs cut at it."""
    if x == A:
        return gi.pairs[0] == "all"
    if x == TOP:
        return gi.singles[0] == "all" and gi.pairs[0] == "all"
    need = x + 1
    singles_ok = gi.singles[0] == "all" or gi.singles[1] >= need
    pairs_ok = gi.pairs[0] == "all" or gi.pairs[1] >= need
    return singles_ok and pairs_ok


def _suite_finest_topology(run: _Run, ctx: _Ctx) -> None:
    """The derived family-convergence topology is finest: any topology in
    which every family-convergent net converges is contained in it."""
    probe_class = cv.NetClass(max_index_size=2, omega_tracks=True, max_track_period=2)
    for name, p in ctx.corpus.items():
        derived = cv.derive_convergence_topology(p, "family")
        pool = {
            "indiscrete": tp.indiscrete_topology(p),
            "scott": tp.scott_topology(p),
            "lawson": tp.lawson_topology(p),
            "discrete": tp.discrete_topology(p),
        }
        for label, topo in pool.items():
            premise = True
            for net in cv.generate_nets(p, probe_class):
                idl = cv.ideal("eventual", cv.net_index(net))
                for ix in range(p.n):
                    if cv.converges_family_liminf(p, net, ix, idl).holds:
                        if not cv.converges_topological(p, net, ix, idl, topo).holds:
                            premise = False
                            break
                if not premise:
                    break
            if premise:
                run.check(f"{name}:{label}", topo.opens <= derived.opens)
            else:
                run.check(f"{name}:{label}:vacuous", True)


def _suite_family_topology_reduction(run: _Run, ctx: _Ctx) -> None:
    """The net-derived family topology equals the family-defined one."""
    for name, p in ctx.corpus.items():
        derived = cv.derive_convergence_topology(p, "family")
        direct = tp.family_liminf_topology(p, method="reduced")
        run.check(f"{name}", derived.opens == direct.opens)


def _suite_family_topology_is_scott(run: _Run, ctx: _Ctx) -> None:
    """The family lim-inf topology is the Scott topology, by both the
    naive family enumeration and the reduced computation."""
    for name, p in ctx.corpus.items():
        sc = tp.scott_topology(p)
        naive = tp.family_liminf_topology(p, method="naive")
        reduced = tp.family_liminf_topology(p, method="reduced")
        run.check(f"{name}:naive", naive.opens == sc.opens)
        run.check(f"{name}:reduced", reduced.opens == sc.opens)


def _suite_family_convergence_topological(run: _Run, ctx: _Ctx) -> None:
    """Family lim-inf convergence coincides with Scott-topological ideal
    convergence; lim-inf convergence implies it; the trivial ideal makes
    every net converge to every point."""
    rng = ctx.rng(run.suite)
    for name, p in ctx.corpus.items():
        sc = tp.scott_topology(p)
        trivial_checked = False
        for i in range(1000):
            net, idl = _sample_net(p, rng)
            x = rng.randrange(p.n)
            fam = cv.converges_family_liminf(p, net, x, idl).holds
            topo = cv.converges_topological(p, net, x, idl, sc).holds
            if fam != topo:
                run.check(f"{name}:{i}:scott", False, _triple_witness(p, net, x, idl))
                continue
            if cv.converges_liminf(p, net, x, idl).holds and not fam:
                run.check(f"{name}:{i}:liminf", False, _triple_witness(p, net, x, idl))
                continue
            if idl.kind == "trivial":
                trivial_checked = True
                if not fam:
                    run.check(f"{name}:{i}:trivial", False, _triple_witness(p, net, x, idl))
                    continue
            run.check(f"{name}:{i}", True)
        run.check(f"{name}:trivial-sampled", trivial_checked)


def _suite_lawson_below_eventual(run: _Run, ctx: _Ctx) -> None:
    """The Lawson topology is contained in the derived eventual-liminf
    topology (over finite-index net classes)."""
    for name, p in ctx.corpus.items():
        law = tp.lawson_topology(p)
        derived = cv.derive_convergence_topology(p, "eventual")
        run.check(f"{name}", law.opens <= derived.opens)


def _suite_eventual_liminf_lawson(run: _Run, ctx: _Ctx) -> None:
    """Eventual lim-inf status coincides with Lawson-topological ideal
    convergence for every net over a finite directed index.

    Periodic nets over the naturals are excluded from the equivalence:
    on them the literal eventual-liminf definition outruns Lawson
    convergence, and the last cases pin those counterexamples down so
    the gap stays visible.
    """
    I_by_index: dict = {}
    for name, p in ctx.corpus.items():
        if p.n > 4:
            continue
        law = tp.lawson_topology(p)
        for idx in cp.directed_index_posets(3):
            idl = I_by_index.setdefault(idx.name, cv.ideal("eventual", idx))
            for values in _all_value_tuples(p, idx.n):
                net = cv.FiniteNet(idx, values)
                for ix in range(p.n):
                    a = cv.is_eventual_liminf(p, net, ix, idl).holds
                    b = cv.converges_topological(p, net, ix, idl, law).holds
                    if a != b:
                        run.check(
                            f"{name}:{idx.name}:{values}:{p.elements[ix]}",
                            False,
                            {"eventual": a, "lawson": b},
                        )
        run.check(f"{name}:exhaustive", True)
    d = ctx.corpus["diamond"]
    I = cv.ideal("eventual")
    alt = cv.track_net(cv.const_track("l"), cv.const_track("top"))
    gap_finite = (
        cv.is_eventual_liminf(d, alt, "l", I).holds
        and not cv.converges_topological(d, alt, "l", I, tp.lawson_topology(d)).holds
    )
    run.check("pinned:periodic-net-gap:diamond", gap_finite)
    net = cv.track_net(cv.ascend_track(), cv.const_track(A))
    gap_side = (
        cv.is_eventual_liminf(SIDE_NAT, net, A, I).holds
        and not cv.converges_topological(SIDE_NAT, net, A, I, "lawson").holds
    )
    run.check("pinned:periodic-net-gap:side", gap_side)


def _suite_continuity_criterion(run: _Run, ctx: _Ctx) -> None:
    """Quasi-continuity plus meet-continuity yields continuity; every
    finite poset has all of them, and the side-point dcpo is the
    standard witness that quasi-continuity alone does not suffice."""
    for name, p in ctx.corpus.items():
        rep = wb.classify(p)
        all_four = (
            rep.is_dcpo and rep.is_continuous and rep.is_quasi_continuous and rep.is_meet_continuous
        )
        run.check(f"{name}:classify", all_four, rep.to_dict())
        implied = (not (rep.is_quasi_continuous and rep.is_meet_continuous)) or rep.is_continuous
        run.check(f"{name}:criterion", implied)
    side = wb.classify(SIDE_NAT)
    run.check(
        "side:classify",
        side.is_dcpo
        and side.is_quasi_continuous
        and not side.is_continuous
        and not side.is_meet_continuous,
        side.to_dict(),
    )
    run.check("side:criterion", not (side.is_quasi_continuous and side.is_meet_continuous))


def _suite_rudin(run: _Run, ctx: _Ctx) -> None:
    """Every Smyth-directed family of at most three antichains yields a
    verified directed transversal, and the upper-set corollary finds its
    member for every qualifying Scott-open target."""
    from itertools import combinations

    for name, p in ctx.corpus.items():
        antichains = list(p.iter_antichain_masks())
        sc = tp.scott_topology(p)
        directed_fams = []
        for k in (1, 2, 3):
            for fam in combinations(antichains, k):
                if rd.is_directed_family(p, fam):
                    directed_fams.append(fam)
        for fam in directed_fams:
            try:
                rep = rd.extract_directed(p, fam)
            except NoWitness as e:
                run.check(f"{name}:extract:{fam}", False, {"error": str(e)})
                continue
            ok = (
                p.is_directed_mask_pairwise(rep.directed_set)
                and all(rep.directed_set & f for f in fam)
                and rep.directed_set & ~_union(fam) == 0
            )
            run.check(f"{name}:extract:{fam}", ok, rep.to_dict(p) if not ok else None)
        corollary_cases = 0
        for fam in directed_fams:
            meet = p.universe
            for f in fam:
                meet &= p.up_of_mask(f)
            for u in sc.opens:
                if meet & ~u:
                    continue
                try:
                    member = rd.rudin_corollary(p, fam, u)
                except NoWitness:
                    run.check(f"{name}:corollary:{fam}:{u}", False)
                    continue
                corollary_cases += 1
                if p.up_of_mask(member) & ~u:
                    run.check(f"{name}:corollary:{fam}:{u}", False, {"member": list(p.ids_of(member))})
        run.check(f"{name}:corollary-count", corollary_cases > 0, {"count": corollary_cases})


def _union(masks) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def _suite_sidenat(run: _Run, ctx: _Ctx) -> None:
    """The side-point dcpo behaves exactly as advertised: the pair sets
    are way below the side point, their upper sets intersect down to its
    upper set, the interleaved net separates the two convergence modes,
    and the classification flags are reproduced."""
    for n in range(101):
        run.check(f"pair-waybelow:{n}", wb.set_way_below(SIDE_NAT, (n, A), (A,)))
    for g, h in _side_antichain_pairs(6):
        rule = wb.set_way_below(SIDE_NAT, g, h)
        oracle = wb.side_way_below_oracle(g, h)
        run.check(f"oracle:{g}:{h}", rule == oracle, {"rule": rule, "oracle": oracle})
    fam = wb.side_family(pairs_from=0)
    run.check("pairs-meet-is-upper-side", fam.upset_intersection() == sn.up_set(A))
    meet = sn.FULL
    for n in range(31):
        meet = sn.inter(meet, sn.up_closure(sn.side_set_of((n, A))))
        expected = sn.union(sn.up_set(A), sn.up_set(n))
        run.check(f"partial-meet:{n}", meet == expected)
    run.check("directed-shape", sn.is_directed_set(sn.sideset(nats=range(3))))
    run.check("directed-sup", sn.directed_sup(sn.sideset(tail=0)) == TOP)
    run.check("down-closure", sn.down_closure(sn.up_set(3)) == sn.FULL)
    run.check("down-closure:side", sn.down_closure(sn.side_set_of((A,))) == sn.side_set_of((A,)))
    net = cv.track_net(cv.ascend_track(), cv.const_track(A))
    I = cv.ideal("eventual")
    run.check("interleaved:family", cv.converges_family_liminf(SIDE_NAT, net, A, I).holds)
    run.check("interleaved:liminf", not cv.converges_liminf(SIDE_NAT, net, A, I).holds)
    exc = cv.exception_set(SIDE_NAT, net, sn.up_closure(sn.side_set_of((5, A))))
    lvl = cv.level_set(SIDE_NAT, net, sn.up_closure(sn.side_set_of((5, A))))
    run.check("interleaved:exceptions", exc == cv.finite_omega([0, 2, 4, 6, 8]))
    run.check("interleaved:levels", cv.omega_inter(exc, lvl) == cv.OMEGA_EMPTY)
    rep = wb.classify(SIDE_NAT)
    run.check(
        "classify",
        rep.is_quasi_continuous and not rep.is_continuous and not rep.is_meet_continuous,
        rep.to_dict(),
    )
    run.check("classify:dcpo", rep.is_dcpo)
    for f in ((3,), (3, A), (A,), (TOP,)):
        up = sn.up_closure(sn.side_set_of(f))
        run.check(
            f"way-up:{f}",
            wb.way_up(SIDE_NAT, f) == tp.side_interior("scott", up),
        )
    run.check("scott-open:upper-tail", tp.side_is_open("scott", sn.up_set(4)))
    run.check("scott-open:side-upset", not tp.side_is_open("scott", sn.up_set(A)))


def _side_antichain_pairs(bound: int):
    chains = list(sn.iter_antichains_upto(bound))
    for g in chains:
        for h in chains:
            yield g, h


def _suite_finite_collapse(run: _Run, ctx: _Ctx) -> None:
    """On finite posets the approximation relations collapse: way below is
    the order, set way below is the Smyth preorder, the Lawson topology is
    discrete, and the Scott topology is the family of upper sets."""
    for name, p in ctx.corpus.items():
        ok_pts = all(
            wb.point_way_below(p, x, y) == p.leq(x, y) for x in p.elements for y in p.elements
        )
        run.check(f"{name}:points", ok_pts)
        ok_sets = all(
            wb.set_way_below(p, g, h) == wb.smyth_leq(p, g, h)
            for g in p.iter_antichain_masks()
            for h in p.iter_antichain_masks()
        )
        run.check(f"{name}:sets", ok_sets)
        law = tp.lawson_topology(p)
        run.check(f"{name}:lawson-discrete", len(law.opens) == 1 << p.n)
        sc = tp.scott_topology(p)
        uppers = frozenset(m for m in range(p.universe + 1) if p.is_upper_mask(m))
        run.check(f"{name}:scott-upper", sc.opens == uppers)
        probe = p.up[0]
        run.check(f"{name}:interior-dual", sc.interior(probe) == probe)
        run.check(
            f"{name}:closure-dual",
            sc.closure(probe) == p.universe & ~sc.interior(p.universe & ~probe),
        )


def _suite_topology_axioms(run: _Run, ctx: _Ctx) -> None:
    """Every constructed finite topology contains the empty set and the
    whole space and is closed under unions and intersections."""
    for name, p in ctx.corpus.items():
        families = {
            "scott": tp.scott_topology(p),
            "lower": tp.lower_topology(p),
            "lawson": tp.lawson_topology(p),
            "glim": tp.family_liminf_topology(p),
            "net-family": cv.derive_convergence_topology(p, "family"),
        }
        for label, topo in families.items():
            opens = topo.opens
            ok = 0 in opens and p.universe in opens
            for u in opens:
                if not ok:
                    break
                for v in opens:
                    if (u | v) not in opens or (u & v) not in opens:
                        ok = False
                        break
            run.check(f"{name}:{label}", ok)


def _suite_inject_failure(run: _Run, ctx: _Ctx) -> None:
    """Hidden self-test: always fails, to exercise reporting paths."""
    run.check("synthetic", False, {"reason": "injected failure for harness tests"})


# -- net sampling -------------------------------------------------------------


def _all_value_tuples(p: FinitePoset, n: int):
    from itertools import product

    return product(p.elements, repeat=n)


def _sample_net(p: FinitePoset, rng: random.Random) -> tuple[cv.Net, cv.Ideal]:
    indexes = cp.directed_index_posets(3)
    if rng.random() < 0.5:
        idx = indexes[rng.randrange(len(indexes))]
        values = tuple(p.elements[rng.randrange(p.n)] for _ in range(idx.n))
        net: cv.Net = cv.FiniteNet(idx, values)
        kind = ("eventual", "trivial")[rng.randrange(2)]
        return net, cv.ideal(kind, idx)
    period = 1 + rng.randrange(3)
    tracks = tuple(cv.const_track(p.elements[rng.randrange(p.n)]) for _ in range(period))
    net = cv.TrackNet(period, tracks)
    kind = ("eventual", "finite", "density0", "trivial")[rng.randrange(4)]
    return net, cv.ideal(kind)


def _triple_witness(p: FinitePoset, net: cv.Net, x: int, idl: cv.Ideal) -> dict:
    if isinstance(net, cv.FiniteNet):
        desc: dict = {"index": net.index.name, "map": dict(zip(net.index.elements, net.values))}
    else:
        desc = {"index": "omega", "tracks": list(net.tracks)}
    return {"net": desc, "point": p.elements[x], "ideal": idl.kind}


def _side_nets() -> list[tuple[str, cv.TrackNet]]:
    return [
        ("interleaved", cv.track_net(cv.ascend_track(), cv.const_track(A))),
        ("ascend", cv.track_net(cv.ascend_track())),
        ("const-side", cv.track_net(cv.const_track(A))),
        ("const-top", cv.track_net(cv.const_track(TOP))),
        ("const-3", cv.track_net(cv.const_track(3))),
        ("mixed", cv.track_net(cv.const_track(2), cv.const_track(A), cv.const_track(TOP))),
    ]


# -- registry and entry points -------------------------------------------------


SUITES = {
    "interpolation": _suite_interpolation,
    "liminf-topology": _suite_liminf_topology,
    "liminf-to-family": _suite_liminf_to_family,
    "family-forces-waybelow": _suite_family_forces_waybelow,
    "waybelow-forces-family": _suite_waybelow_forces_family,
    "finest-topology": _suite_finest_topology,
    "family-topology-reduction": _suite_family_topology_reduction,
    "family-topology-is-scott": _suite_family_topology_is_scott,
    "family-convergence-topological": _suite_family_convergence_topological,
    "lawson-below-eventual": _suite_lawson_below_eventual,
    "eventual-liminf-lawson": _suite_eventual_liminf_lawson,
    "continuity-criterion": _suite_continuity_criterion,
    "rudin": _suite_rudin,
    "sidenat": _suite_sidenat,
    "finite-collapse": _suite_finite_collapse,
    "topology-axioms": _suite_topology_axioms,
    "_inject-failure": _suite_inject_failure,
}


def suite_names() -> tuple[str, ...]:
    return tuple(name for name in SUITES if not name.startswith("_"))


@logged("suites.run")
def run_suite(name: str, *, max_size: int = 5, seed: int = 0) -> SuiteReport:
    if name == "all":
        return _run_all(max_size=max_size, seed=seed)
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(suite_names())}, all")
    ctx = _Ctx(max_size=max_size, seed=seed, corpus=cp.all_corpus(max_size))
    run = _Run(name, seed)
    t0 = time.perf_counter()
    SUITES[name](run, ctx)
    return run.report(time.perf_counter() - t0)


def _run_all(*, max_size: int, seed: int) -> SuiteReport:
    ctx = _Ctx(max_size=max_size, seed=seed, corpus=cp.all_corpus(max_size))
    t0 = time.perf_counter()
    total = _Run("all", seed)
    for name in suite_names():
        sub = _Run(name, seed)
        SUITES[name](sub, ctx)
        report = sub.report(0.0)
        roundtrip = parse_report(emit_report(report, "json"))
        total.cases += report.cases
        total.failures.extend(
            {**f, "case": f"{name}:{f.get('case', '?')}"} for f in report.failures
        )
        total.check(f"{name}:roundtrip", roundtrip.failures == report.failures)
    missing = sorted(oplog.missing_ops())
    total.check("coverage:all-ops", not missing, {"missing": missing})
    return total.report(time.perf_counter() - t0)
