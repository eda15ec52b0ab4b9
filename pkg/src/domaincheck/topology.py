"""Scott, lower, Lawson, and convergence-derived topologies.

Finite backends get explicit open-set families as frozensets of masks.
Every finite topological space is closed under arbitrary intersections,
so a subbasis generates its topology through minimal neighborhoods:
``m(x)`` is the intersection of the subbasic sets containing ``x``, and a
set is open iff it contains the minimal neighborhood of each of its
points.

The side-point dcpo gets predicate versions of the same topologies,
evaluated on canonical :class:`~domaincheck.sidenat.SideSet` values.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from . import sidenat as sn
from .errors import PreconditionFailed, TooLarge, UnknownElement
from .oplog import logged
from .order import FinitePoset, bits
from .sidenat import EMPTY, FULL, SideElement, SideSet, sideset

MAX_TOPOLOGY_ELEMENTS = 14

TOPOLOGY_KINDS = ("scott", "lower", "lawson")


@dataclass(frozen=True)
class Topology:
    """A topology on a finite poset, validated on construction.

    The axioms are checked for real: the empty set and the carrier must
    be present and the family must be closed under pairwise union and
    intersection, which on a finite carrier is full closure.
    """

    poset: FinitePoset
    kind: str
    opens: frozenset[int]

    def __post_init__(self) -> None:
        if 0 not in self.opens or self.poset.universe not in self.opens:
            raise PreconditionFailed(f"{self.kind} on {self.poset.name!r}: missing empty set or carrier")
        for u, v in combinations(self.opens, 2):
            if u | v not in self.opens or u & v not in self.opens:
                raise PreconditionFailed(f"{self.kind} on {self.poset.name!r}: not closed under union/intersection")

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    def opens_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens))

    @logged("topology.interior")
    def interior(self, mask: int) -> int:
        out = 0
        for u in self.opens:
            if u & ~mask == 0:
                out |= u
        return out

    @logged("topology.closure")
    def closure(self, mask: int) -> int:
        return self.poset.universe & ~self.interior(self.poset.universe & ~mask)

    def neighborhoods(self, x: str) -> tuple[int, ...]:
        bit = 1 << self.poset.index(x)
        return tuple(sorted(u for u in self.opens if u & bit))


def _guard_size(p: FinitePoset) -> None:
    if p.n > MAX_TOPOLOGY_ELEMENTS:
        raise TooLarge(f"topology enumeration over {p.n} elements is not supported")


def topology_from_subbasis(p: FinitePoset, subbasis: Iterable[int], kind: str) -> Topology:
    """Generate the topology with the given subbasis via minimal neighborhoods."""
    _guard_size(p)
    subs = tuple(subbasis)
    mins = []
    for i in range(p.n):
        m = p.universe
        for s in subs:
            if s >> i & 1:
                m &= s
        mins.append(m)
    opens = []
    for mask in range(p.universe + 1):
        if all(mins[i] & ~mask == 0 for i in bits(mask)):
            opens.append(mask)
    return Topology(p, kind, frozenset(opens))


def _scott_open_definitional(p: FinitePoset, mask: int) -> bool:
    """Upper, and inaccessible by suprema of directed sets."""
    if p.up_of_mask(mask) != mask:
        return False
    for d in p.iter_directed_masks():
        if mask >> p.directed_sup_mask(d) & 1 and d & mask == 0:
            return False
    return True


@logged("topology.scott")
def scott_topology(p: FinitePoset) -> Topology:
    """Scott opens of a finite poset.

    On a finite poset every directed set contains its supremum, so the
    inaccessibility condition is automatic and the opens are exactly the
    upper sets.  Both characterizations are computed and compared, which
    keeps the shortcut honest.
    """
    _guard_size(p)
    uppers = frozenset(p.iter_upper_masks())
    definitional = frozenset(m for m in range(p.universe + 1) if _scott_open_definitional(p, m))
    if uppers != definitional:
        raise PreconditionFailed(f"scott opens disagree with upper sets on {p.name!r}")
    return Topology(p, "scott", uppers)


@logged("topology.lower")
def lower_topology(p: FinitePoset) -> Topology:
    """Topology generated by the complements of principal upper sets."""
    return topology_from_subbasis(p, (p.universe & ~u for u in p.up), "lower")


@logged("topology.lawson")
def lawson_topology(p: FinitePoset) -> Topology:
    """Join of the Scott and lower topologies."""
    subs = list(scott_topology(p).opens) + [p.universe & ~u for u in p.up]
    return topology_from_subbasis(p, subs, "lawson")


def finite_topology(p: FinitePoset, kind: str) -> Topology:
    if kind == "scott":
        return scott_topology(p)
    if kind == "lower":
        return lower_topology(p)
    if kind == "lawson":
        return lawson_topology(p)
    raise UnknownElement(f"unknown topology kind {kind!r}")


def indiscrete_topology(p: FinitePoset) -> Topology:
    return Topology(p, "indiscrete", frozenset({0, p.universe}))


def discrete_topology(p: FinitePoset) -> Topology:
    _guard_size(p)
    return Topology(p, "discrete", frozenset(range(p.universe + 1)))


# -- topology induced by family convergence -------------------------------


def _directed_antichain_families(p: FinitePoset, family_bound: int):
    """Smyth-directed families of at most ``family_bound`` antichains."""
    chains = tuple(p.iter_antichain_masks())
    ups = {f: p.up_of_mask(f) for f in chains}
    for size in range(1, family_bound + 1):
        for fam in combinations(chains, size):
            directed = True
            for f, g in combinations(fam, 2):
                meet = ups[f] & ups[g]
                if not any(ups[h] & ~meet == 0 for h in fam):
                    directed = False
                    break
            if directed:
                yield fam, tuple(ups[f] for f in fam)


@logged("topology.family_liminf")
def family_liminf_topology(p: FinitePoset, *, family_bound: int = 4, method: str = "naive") -> Topology:
    """The topology induced by lim-inf convergence along directed families.

    A set ``U`` is open iff for every Smyth-directed family ``fam`` and
    every point ``x`` whose upper set absorbs the intersection of the
    family's upper sets, ``x`` in ``U`` forces some member's upper set
    inside ``U``.  A net converging along the family is trapped in each
    member's upper set up to an ideal-small exception, and adversarial
    nets realize exactly those traps, so this is the net-free reduction
    of the convergence topology.

    The ``reduced`` method returns the upper sets directly.  The two are
    compared by the verification suites rather than trusted here.
    """
    _guard_size(p)
    if method == "reduced":
        return Topology(p, "glim", frozenset(p.iter_upper_masks()))
    if method != "naive":
        raise UnknownElement(f"unknown method {method!r}")
    constraints = []
    for _fam, ups in _directed_antichain_families(p, family_bound):
        meet = p.universe
        for u in ups:
            meet &= u
        xmask = 0
        for x in range(p.n):
            if meet & ~p.up[x] == 0:
                xmask |= 1 << x
        if xmask:
            constraints.append((xmask, ups))
    opens = []
    for mask in range(p.universe + 1):
        if all(not (xmask & mask) or any(u & ~mask == 0 for u in ups) for xmask, ups in constraints):
            opens.append(mask)
    return Topology(p, "glim", frozenset(opens))


# -- the side-point dcpo ---------------------------------------------------


@logged("topology.is_open")
def side_is_open(kind: str, s: SideSet) -> bool:
    """Decide openness of a canonical subset of the side-point dcpo.

    Scott opens are the upper sets that contain a tail of the naturals
    whenever they contain the top, since the chain of naturals has the
    top as its supremum.  Lawson opens drop the upperness requirement:
    every point except the top is isolated because ``{n}`` and ``{a}``
    are differences of Scott opens and principal upper sets.  Lower opens
    are the whole space, or any down-closed set of naturals together
    with an optional ``{a}``.
    """
    if kind == "scott":
        return sn.is_upper(s) and (not s.has_top or s.tail is not None)
    if kind == "lawson":
        return not s.has_top or s.tail is not None
    if kind == "lower":
        if s == FULL:
            return True
        if s.has_top:
            return False
        all_nats = s.tail == 0 and not s.nats
        initial = s.tail is None and s.nats == frozenset(range(len(s.nats)))
        return all_nats or initial
    raise UnknownElement(f"unknown topology kind {kind!r}")


def side_interior(kind: str, s: SideSet) -> SideSet:
    if kind == "scott":
        if s.has_top and s.tail is not None:
            return sideset(tail=s.tail, has_a=s.has_a, has_top=True)
        return EMPTY
    if kind == "lawson":
        if side_is_open(kind, s):
            return s
        return sn.diff(s, sideset(has_top=True))
    if kind == "lower":
        if s == FULL:
            return FULL
        if s.tail == 0 and not s.nats:
            return sideset(tail=0, has_a=s.has_a)
        missing = 0
        while missing in s:
            missing += 1
        return sideset(nats=range(missing), has_a=s.has_a)
    raise UnknownElement(f"unknown topology kind {kind!r}")


def side_closure(kind: str, s: SideSet) -> SideSet:
    return sn.complement(side_interior(kind, sn.complement(s)))


def side_binding_opens(kind: str, x: SideElement, stab: int) -> tuple[SideSet, ...]:
    """A finite family of opens around ``x`` that decides convergence.

    Every open neighborhood of ``x`` contains one of these up to a set
    of naturals below ``stab``, so once exception sets are stable past
    ``stab`` (the caller derives that bound from the net), checking the
    family is equivalent to checking all neighborhoods.  For isolated
    points the singleton neighborhood is the whole answer; for points
    whose neighborhoods are tails, the family ranges over cut points up
    to ``stab``.
    """
    ts = range(stab + 1)
    if kind == "scott":
        if isinstance(x, int):
            return (sn.up_set(x),)
        if x == sn.A:
            return tuple(sideset(tail=t, has_a=True, has_top=True) for t in ts)
        return tuple(sideset(tail=t, has_top=True) for t in ts)
    if kind == "lawson":
        if isinstance(x, int):
            return (sideset(nats=[x]),)
        if x == sn.A:
            return (sideset(has_a=True),)
        return tuple(sideset(tail=t, has_top=True) for t in ts)
    if kind == "lower":
        if isinstance(x, int):
            return (sideset(nats=range(x + 1)),)
        if x == sn.A:
            return (sideset(has_a=True),)
        return (FULL,)
    raise UnknownElement(f"unknown topology kind {kind!r}")
