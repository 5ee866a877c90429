"""Order ideals of a heap: enumeration, toggles, and dynamics.

Ideals are bit masks over heap elements.  The lattice enumerator walks
the cover graph upward from the empty ideal and then freezes a
deterministic indexing (by cardinality, then by mask value), so ideal
indices are stable across runs.  When the heap carries a base weight,
every ideal also gets the weight obtained by applying the reflections
of any linear extension of the ideal to the base.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable
from dataclasses import dataclass
from functools import cached_property

from .bits import iter_bits
from .cartan import Weight, _check_node, simple_reflection
from .errors import DomainError, InternalCheckError, ResourceLimitError
from .heap import Heap

DEFAULT_IDEAL_CAP = 10**6


def is_ideal(h: Heap, mask: int) -> bool:
    return all(h.below[p] & mask == h.below[p] for p in iter_bits(mask))


def addable_elements(h: Heap, mask: int) -> list[int]:
    """Elements whose insertion keeps ``mask`` an ideal; equivalently the
    minimal elements of the complement."""
    return [
        p
        for p in range(len(h))
        if not mask >> p & 1 and h.below[p] & mask == h.below[p]
    ]


def removable_elements(h: Heap, mask: int) -> list[int]:
    """Maximal elements of the ideal."""
    return [p for p in iter_bits(mask) if h.above[p] & mask == 0]


def toggle(h: Heap, mask: int, p: int) -> int:
    """Symmetric difference with {p} when that is an ideal, else ``mask``."""
    bit = 1 << p
    if mask & bit:
        return mask ^ bit if h.above[p] & mask == 0 else mask
    return mask | bit if h.below[p] & mask == h.below[p] else mask


def toggle_label(h: Heap, mask: int, i: int) -> int:
    """Toggle every element of the label fiber; the fiber contains no
    covers, so the order does not matter."""
    _check_node(h.cartan, i)
    for p in h.fibers[i]:
        mask = toggle(h, mask, p)
    return mask


def ideal_weight(h: Heap, mask: int) -> Weight:
    """Weight of an ideal: fold the reflections of a linear extension
    over the base weight.  Ascending positions are such an extension."""
    if h.base is None:
        raise DomainError("heap carries no base weight")
    w = h.base
    cd = h.cartan
    for p in iter_bits(mask):
        w = simple_reflection(cd, h.labels[p], w)
    return w


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """All order ideals of a heap, with cover edges ``(lo, hi, element)``."""

    heap: Heap
    ideals: tuple[int, ...]
    covers: tuple[tuple[int, int, int], ...]
    weights: tuple[Weight, ...] | None

    @cached_property
    def index(self) -> dict[int, int]:
        return {m: k for k, m in enumerate(self.ideals)}

    def __len__(self) -> int:
        return len(self.ideals)

    @cached_property
    def down_degrees(self) -> tuple[int, ...]:
        """Number of lattice elements covered by each ideal; equals the
        count of its maximal elements."""
        h = self.heap
        return tuple(len(removable_elements(h, m)) for m in self.ideals)

    @cached_property
    def up_degrees(self) -> tuple[int, ...]:
        h = self.heap
        return tuple(len(addable_elements(h, m)) for m in self.ideals)

    @cached_property
    def add_sites(self) -> tuple[tuple[int, ...], ...]:
        """Per heap element, the ideal indices it can be toggled into."""
        sites: list[list[int]] = [[] for _ in range(len(self.heap))]
        for k, m in enumerate(self.ideals):
            for p in addable_elements(self.heap, m):
                sites[p].append(k)
        return tuple(tuple(s) for s in sites)

    @cached_property
    def remove_sites(self) -> tuple[tuple[int, ...], ...]:
        sites: list[list[int]] = [[] for _ in range(len(self.heap))]
        for k, m in enumerate(self.ideals):
            for p in removable_elements(self.heap, m):
                sites[p].append(k)
        return tuple(tuple(s) for s in sites)

    @cached_property
    def strictly_below(self) -> tuple[tuple[int, ...], ...]:
        """Per ideal, the indices of its proper subsets."""
        out = []
        for k, m in enumerate(self.ideals):
            out.append(tuple(j for j, mj in enumerate(self.ideals) if mj != m and mj & ~m == 0))
        return tuple(out)

    @cached_property
    def strictly_above(self) -> tuple[tuple[int, ...], ...]:
        above: list[list[int]] = [[] for _ in self.ideals]
        for k, lows in enumerate(self.strictly_below):
            for j in lows:
                above[j].append(k)
        return tuple(tuple(a) for a in above)


def enumerate_ideals(h: Heap, cap: int = DEFAULT_IDEAL_CAP) -> IdealLattice:
    """Enumerate J(P) by walking up the cover graph from the empty ideal."""
    weights: dict[int, Weight] | None = {0: h.base} if h.base is not None else None
    seen = {0}
    queue = deque([0])
    while queue:
        m = queue.popleft()
        for p in addable_elements(h, m):
            nm = m | (1 << p)
            if nm not in seen:
                if len(seen) >= cap:
                    raise ResourceLimitError(f"ideal count exceeds cap of {cap}")
                seen.add(nm)
                if weights is not None:
                    weights[nm] = simple_reflection(h.cartan, h.labels[p], weights[m])
                queue.append(nm)

    masks = sorted(seen, key=lambda m: (m.bit_count(), m))
    index = {m: k for k, m in enumerate(masks)}
    covers = []
    for k, m in enumerate(masks):
        for p in addable_elements(h, m):
            covers.append((k, index[m | (1 << p)], p))
    frozen_weights = tuple(weights[m] for m in masks) if weights is not None else None
    return IdealLattice(h, tuple(masks), tuple(covers), frozen_weights)


@dataclass(frozen=True)
class CommutationReport:
    """Exhaustive check that label toggles match simple reflections
    through the ideal-to-weight map."""

    instances: int
    violations: tuple[tuple[int, int], ...]  # (ideal index, node)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_commutation(lattice: IdealLattice) -> CommutationReport:
    h = lattice.heap
    if lattice.weights is None:
        raise DomainError("lattice carries no weights; build the heap with a base weight")
    cd = h.cartan
    violations = []
    for k, mask in enumerate(lattice.ideals):
        w = lattice.weights[k]
        for i in cd.nodes:
            toggled = lattice.index[toggle_label(h, mask, i)]
            if lattice.weights[toggled] != simple_reflection(cd, i, w):
                violations.append((k, i))
    return CommutationReport(len(lattice) * cd.rank, tuple(violations))


def rowmotion(h: Heap, mask: int) -> int:
    """The ideal generated by the minimal elements of the complement."""
    out = 0
    for p in addable_elements(h, mask):
        out |= h.below[p] | (1 << p)
    return out


def rowmotion_by_toggles(h: Heap, mask: int) -> int:
    """Rowmotion as a top-to-bottom toggle sweep; agrees with
    ``rowmotion`` on every ideal."""
    for p in reversed(range(len(h))):
        mask = toggle(h, mask, p)
    return mask


def gyration(h: Heap, mask: int, even_first: bool = True) -> int:
    """Toggle all even-rank elements, then all odd-rank ones.

    Within a parity class no two elements form a cover (the heap is
    graded), so the toggles commute and the phase is order-free.  The
    ``even_first`` flag swaps the two phases.
    """
    if not h.is_graded:
        raise DomainError("gyration needs a graded heap")
    phases = (0, 1) if even_first else (1, 0)
    for parity in phases:
        for p in range(len(h)):
            if h.ranks[p] % 2 == parity:
                mask = toggle(h, mask, p)
    return mask


def action_orbits(
    lattice: IdealLattice, step: Callable[[Heap, int], int]
) -> tuple[tuple[int, ...], ...]:
    """Cycle decomposition of a bijection on the lattice.

    ``step`` maps (heap, ideal mask) to an ideal mask.  Orbits are listed
    by smallest member, each starting from that member.  A non-bijective
    map raises InternalCheckError.
    """
    h = lattice.heap
    perm = []
    for m in lattice.ideals:
        image = lattice.index.get(step(h, m))
        if image is None:
            raise InternalCheckError("action left the ideal lattice")
        perm.append(image)
    if sorted(perm) != list(range(len(perm))):
        raise InternalCheckError("action is not a bijection on ideals")

    orbits = []
    visited = [False] * len(perm)
    for start in range(len(perm)):
        if visited[start]:
            continue
        cycle = []
        k = start
        while not visited[k]:
            visited[k] = True
            cycle.append(k)
            k = perm[k]
        orbits.append(tuple(cycle))
    return tuple(orbits)
