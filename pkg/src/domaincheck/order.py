"""Finite partial orders over explicit element sets.

Elements are referred to by string ids.  A poset stores, for every element
index ``i``, the bitmask of indices weakly above it (``up``) and weakly
below it (``down``), both reflexively and transitively closed.  Subsets of
a poset are plain ints throughout the package, so set algebra is bitwise
arithmetic and enumeration loops stay tight.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .oplog import logged
from .errors import CycleError, DuplicateElement, NotDirected, UnknownElement


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class FinitePoset:
    """An immutable finite poset with precomputed reachability masks.

    ``up[i]`` and ``down[i]`` include ``i`` itself.  Instances are built
    through :func:`build_finite_poset`, which closes and validates the
    relation; the constructor trusts its inputs.
    """

    name: str
    elements: tuple[str, ...]
    up: tuple[int, ...]
    down: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.elements)})

    # -- element level ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def universe(self) -> int:
        """Mask of the whole carrier set."""
        return (1 << self.n) - 1

    def index(self, element: str) -> int:
        try:
            return self._index[element]  # type: ignore[attr-defined]
        except KeyError:
            raise UnknownElement(f"{element!r} is not an element of {self.name!r}") from None

    @logged("order.leq")
    def leq(self, x: str, y: str) -> bool:
        return bool(self.up[self.index(x)] >> self.index(y) & 1)

    def leq_ix(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    # -- masks <-> ids ------------------------------------------------

    def mask_of(self, ids: Iterable[str]) -> int:
        mask = 0
        for e in ids:
            mask |= 1 << self.index(e)
        return mask

    def ids_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))

    # -- closures and extrema ------------------------------------------

    def up_of_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def down_of_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.down[i]
        return out

    def is_upper_mask(self, mask: int) -> bool:
        return self.up_of_mask(mask) == mask

    def is_lower_mask(self, mask: int) -> bool:
        return self.down_of_mask(mask) == mask

    def min_mask(self, mask: int) -> int:
        """Minimal elements of ``mask``: those above no other member."""
        out = 0
        for i in bits(mask):
            if self.down[i] & mask == 1 << i:
                out |= 1 << i
        return out

    def max_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            if self.up[i] & mask == 1 << i:
                out |= 1 << i
        return out

    def is_antichain_mask(self, mask: int) -> bool:
        return self.min_mask(mask) == mask

    # -- directedness --------------------------------------------------

    def greatest_of_mask(self, mask: int) -> int | None:
        """Index of the greatest member of ``mask``, or None."""
        for i in bits(mask):
            if mask & ~self.down[i] == 0:
                return i
        return None

    def is_directed_mask(self, mask: int) -> bool:
        """Nonempty and every pair has an upper bound inside the set.

        On a finite poset that is equivalent to having a greatest member,
        which is what this checks.  ``is_directed_mask_pairwise`` is the
        literal definition, kept as an independent oracle.
        """
        return mask != 0 and self.greatest_of_mask(mask) is not None

    def is_directed_mask_pairwise(self, mask: int) -> bool:
        if mask == 0:
            return False
        members = list(bits(mask))
        for i in members:
            for j in members:
                if not any(self.leq_ix(i, k) and self.leq_ix(j, k) for k in members):
                    return False
        return True

    def directed_sup_mask(self, mask: int) -> int:
        """Index of the supremum of a directed subset (its greatest member)."""
        g = self.greatest_of_mask(mask) if mask else None
        if g is None:
            raise NotDirected(f"mask {mask:#x} is not directed in {self.name!r}")
        return g

    # -- enumeration ---------------------------------------------------

    @logged("order.enumerate_directed")
    def iter_directed_masks(self) -> Iterator[int]:
        """All directed subsets, grouped by their greatest element.

        For greatest element ``g`` the directed subsets are exactly
        ``{g} | S`` with ``S`` ranging over subsets of the strict
        down-set of ``g``, so each subset is produced once.
        """
        for g in range(self.n):
            below = self.down[g] & ~(1 << g)
            sub = below
            while True:
                yield sub | 1 << g
                if sub == 0:
                    break
                sub = (sub - 1) & below

    def iter_upper_masks(self) -> Iterator[int]:
        for mask in range(self.universe + 1):
            if self.up_of_mask(mask) == mask:
                yield mask

    def iter_antichain_masks(self, *, nonempty: bool = True) -> Iterator[int]:
        for mask in range(self.universe + 1):
            if mask == 0 and nonempty:
                continue
            if self.min_mask(mask) == mask:
                yield mask


@logged("order.build_poset")
def build_finite_poset(name: str, elements: Iterable[str], le: Iterable[tuple[str, str]]) -> FinitePoset:
    """Construct a poset from generating pairs ``x <= y``.

    The pairs may be any relation whose reflexive-transitive closure is
    antisymmetric; covers are enough.  Raises :class:`DuplicateElement`
    for repeated ids and :class:`CycleError` if the closure identifies
    two distinct elements.
    """
    elems = tuple(elements)
    if len(set(elems)) != len(elems):
        raise DuplicateElement(f"duplicate element ids in {name!r}")
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    up = [1 << i for i in range(n)]
    for x, y in le:
        if x not in index:
            raise UnknownElement(f"{x!r} is not an element of {name!r}")
        if y not in index:
            raise UnknownElement(f"{y!r} is not an element of {name!r}")
        up[index[x]] |= 1 << index[y]
    for k in range(n):
        kbit = 1 << k
        for i in range(n):
            if up[i] & kbit:
                up[i] |= up[k]
    for i in range(n):
        for j in bits(up[i]):
            if i != j and up[j] >> i & 1:
                raise CycleError(f"{elems[i]!r} and {elems[j]!r} are equivalent under closure in {name!r}")
    down = [0] * n
    for i in range(n):
        for j in bits(up[i]):
            down[j] |= 1 << i
    return FinitePoset(name, elems, tuple(up), tuple(down))


def poset_to_json(p: FinitePoset) -> str:
    """Serialize as the full closed relation, sorted, reflexive pairs included."""
    le = sorted((x, p.elements[j]) for i, x in enumerate(p.elements) for j in bits(p.up[i]))
    return json.dumps({"name": p.name, "elements": list(p.elements), "le": le}, indent=2)


def poset_from_json(text: str) -> FinitePoset:
    data = json.loads(text)
    return build_finite_poset(data["name"], data["elements"], [tuple(pair) for pair in data["le"]])
