"""Weyl orbit of a dominant weight as a graded cover digraph.

The orbit is the closure of {lambda} under all simple reflections,
ordered with lambda at the bottom: mu is covered by mu - alpha_i
whenever (mu, alpha_i^vee) = 1, so walking up subtracts simple roots.
For a minuscule lambda this digraph is the full weight poset of the
representation and forms a distributive lattice; ``verify_minuscule``
certifies exactly that and reports any violation it finds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .bits import iter_bits
from .cartan import CartanDatum, Weight, is_dominant, is_integral, simple_reflection
from .errors import DomainError, ResourceLimitError

DEFAULT_ORBIT_CAP = 10**6

# verify_minuscule builds quadratic meet/join tables; past this many
# weights that is no longer desk scale.
DEFAULT_LATTICE_CAP = 5000


@dataclass(frozen=True, eq=False)
class OrbitPoset:
    """Orbit weights with cover edges ``(u, v, i)`` meaning v = u - alpha_i."""

    cartan: CartanDatum
    weights: tuple[Weight, ...]
    covers: tuple[tuple[int, int, int], ...]
    layers: tuple[int, ...]

    @cached_property
    def index(self) -> dict[Weight, int]:
        return {w: k for k, w in enumerate(self.weights)}

    @property
    def bottom(self) -> int:
        return 0

    @cached_property
    def up_adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per weight, the outgoing covers as sorted (label, target) pairs."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.weights]
        for u, v, i in self.covers:
            adj[u].append((i, v))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def down_adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        adj: list[list[tuple[int, int]]] = [[] for _ in self.weights]
        for u, v, i in self.covers:
            adj[v].append((i, u))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def minimal_indices(self) -> tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.down_adjacency) if not a)

    @cached_property
    def maximal_indices(self) -> tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.up_adjacency) if not a)

    @property
    def top(self) -> int:
        maxima = self.maximal_indices
        if len(maxima) != 1:
            raise DomainError(f"orbit has {len(maxima)} maximal weights, not 1")
        return maxima[0]

    @cached_property
    def below_masks(self) -> tuple[int, ...]:
        """Strict down-sets as bit masks over weight indices."""
        below = [0] * len(self.weights)
        for u in self._topological_order():
            for _, v in self.up_adjacency[u]:
                below[v] |= below[u] | (1 << u)
        return tuple(below)

    @cached_property
    def above_masks(self) -> tuple[int, ...]:
        above = [0] * len(self.weights)
        for v, mask in enumerate(self.below_masks):
            for u in iter_bits(mask):
                above[u] |= 1 << v
        return tuple(above)

    def _topological_order(self) -> list[int]:
        n = len(self.weights)
        indeg = [len(a) for a in self.down_adjacency]
        queue = deque(k for k in range(n) if indeg[k] == 0)
        order = []
        while queue:
            u = queue.popleft()
            order.append(u)
            for _, v in self.up_adjacency[u]:
                indeg[v] -= 1
                if indeg[v] == 0:
                    queue.append(v)
        if len(order) != n:
            raise DomainError("cover digraph contains a cycle")
        return order

    def __len__(self) -> int:
        return len(self.weights)


def generate_orbit(cd: CartanDatum, lam: Weight, cap: int = DEFAULT_ORBIT_CAP) -> OrbitPoset:
    """Close {lam} under all simple reflections, breadth first.

    Weight indices are deterministic: by reflection distance from lam,
    then lexicographically within a layer.  Covers are recorded wherever
    a coordinate equals 1.  Raises DomainError for non-dominant or
    non-integral lam, ResourceLimitError if the orbit outgrows ``cap``.
    """
    if len(lam) != cd.rank:
        raise DomainError(f"weight has {len(lam)} coordinates, expected {cd.rank}")
    if not is_integral(lam):
        raise DomainError(f"weight {lam} is not integral")
    if not is_dominant(lam):
        raise DomainError(f"weight {lam} is not dominant")
    lam = tuple(int(m) for m in lam)

    seen = {lam}
    order = [lam]
    layers = [0]
    frontier = [lam]
    layer = 0
    while frontier:
        layer += 1
        fresh = set()
        for mu in frontier:
            for i in cd.nodes:
                nu = simple_reflection(cd, i, mu)
                if nu != mu and nu not in seen:
                    fresh.add(nu)
        if len(seen) + len(fresh) > cap:
            raise ResourceLimitError(f"orbit exceeds cap of {cap} weights")
        frontier = sorted(fresh)
        seen.update(fresh)
        for nu in frontier:
            order.append(nu)
            layers.append(layer)

    index = {w: k for k, w in enumerate(order)}
    covers = []
    for u, mu in enumerate(order):
        for i in cd.nodes:
            if mu[i - 1] == 1:
                covers.append((u, index[simple_reflection(cd, i, mu)], i))
    return OrbitPoset(cd, tuple(order), tuple(covers), tuple(layers))


@dataclass(frozen=True)
class MinusculeReport:
    """Outcome of the minuscule certification of an orbit poset."""

    size: int
    pairing_violations: tuple[tuple[Weight, int, int], ...]
    minimal_count: int
    maximal_count: int
    missing_meets: tuple[tuple[int, int], ...]
    missing_joins: tuple[tuple[int, int], ...]
    distributivity_violations: tuple[tuple[int, int, int], ...]
    lattice_checked: bool

    @property
    def ok(self) -> bool:
        return (
            not self.pairing_violations
            and self.minimal_count == 1
            and self.maximal_count == 1
            and self.lattice_checked
            and not self.missing_meets
            and not self.missing_joins
            and not self.distributivity_violations
        )

    def summary(self) -> str:
        if self.ok:
            return f"minuscule: {self.size} weights form a distributive lattice"
        parts = []
        if self.pairing_violations:
            w, i, v = self.pairing_violations[0]
            parts.append(
                f"{len(self.pairing_violations)} coroot pairings outside"
                f" {{-1,0,1}} (first: weight {w} pairs to {v} at node {i})"
            )
        if self.minimal_count != 1:
            parts.append(f"{self.minimal_count} minimal weights")
        if self.maximal_count != 1:
            parts.append(f"{self.maximal_count} maximal weights")
        if self.missing_meets or self.missing_joins:
            parts.append(
                f"{len(self.missing_meets)} pairs without meet,"
                f" {len(self.missing_joins)} without join"
            )
        if self.distributivity_violations:
            parts.append(f"{len(self.distributivity_violations)} non-distributive triples")
        if not self.lattice_checked and not parts:
            parts.append("lattice structure not checked")
        return "not minuscule: " + "; ".join(parts)


def verify_minuscule(
    cd: CartanDatum, orbit: OrbitPoset, lattice_cap: int = DEFAULT_LATTICE_CAP
) -> MinusculeReport:
    """Certify that an orbit is the weight lattice of a minuscule representation.

    Checks, in order: every coroot pairing lies in {-1, 0, 1}; the cover
    digraph has a unique minimal and a unique maximal weight; every pair
    has a meet and a join; every triple satisfies the distributive law.
    The lattice phase is brute force and only runs once the cheaper
    checks pass (any pairing violation already refutes minuscularity).
    """
    pairing = tuple(
        (w, i, w[i - 1])
        for w in orbit.weights
        for i in cd.nodes
        if not -1 <= w[i - 1] <= 1
    )
    n = len(orbit)
    nmin = len(orbit.minimal_indices)
    nmax = len(orbit.maximal_indices)
    if pairing or nmin != 1 or nmax != 1:
        return MinusculeReport(n, pairing, nmin, nmax, (), (), (), False)
    if n > lattice_cap:
        raise ResourceLimitError(f"orbit of {n} weights exceeds lattice check cap {lattice_cap}")

    down = [m | (1 << k) for k, m in enumerate(orbit.below_masks)]
    up = [m | (1 << k) for k, m in enumerate(orbit.above_masks)]
    down_index = {m: k for k, m in enumerate(down)}
    up_index = {m: k for k, m in enumerate(up)}

    missing_meets = []
    missing_joins = []
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            m = down_index.get(down[x] & down[y], -1)
            j = up_index.get(up[x] & up[y], -1)
            if m < 0:
                missing_meets.append((x, y))
            if j < 0:
                missing_joins.append((x, y))
            meet[x][y] = meet[y][x] = m
            join[x][y] = join[y][x] = j
    if missing_meets or missing_joins:
        return MinusculeReport(
            n, (), 1, 1, tuple(missing_meets), tuple(missing_joins), (), True
        )

    bad_triples = []
    for x in range(n):
        meet_x = meet[x]
        for y in range(n):
            join_y = join[y]
            join_xy = join[meet_x[y]]
            for z in range(y, n):
                if meet_x[join_y[z]] != join_xy[meet_x[z]]:
                    bad_triples.append((x, y, z))
    return MinusculeReport(n, (), 1, 1, (), (), tuple(bad_triples), True)


def saturated_chain(orbit: OrbitPoset) -> tuple[int, ...]:
    """Labels along the bottom-to-top chain taking the smallest node at each step.

    Assumes a verified minuscule orbit, where every such walk is a
    maximal chain of full length.
    """
    word = []
    u = orbit.bottom
    up = orbit.up_adjacency
    while up[u]:
        i, u = up[u][0]
        word.append(i)
    return tuple(word)


def join_irreducible_indices(orbit: OrbitPoset) -> tuple[int, ...]:
    """Weights covering exactly one weight; in a distributive lattice these
    are the join-irreducible elements."""
    return tuple(k for k, a in enumerate(orbit.down_adjacency) if len(a) == 1)
