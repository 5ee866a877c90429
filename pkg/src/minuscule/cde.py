"""Distributions on an ideal lattice and down-degree expectation checks.

Covers the uniform, maximal-chain, and k-chain distributions (in both
the strict-chain and multichain readings), toggle symmetry, uniform
distributions on action orbits, and an exact linear-programming
certificate that the down-degree expectation is the same for every
toggle-symmetric distribution.

Chain counts are computed by a two-pass dynamic program (chains ending
at, and chains starting from, each ideal); the counts grow like
standard-tableaux numbers, so everything stays in arbitrary-precision
integers and only the final probabilities become fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from weakref import WeakKeyDictionary

from .errors import DomainError, InternalCheckError
from .ideals import IdealLattice, action_orbits, gyration, rowmotion
from .simplex import OPTIMAL, solve_lp
from .stats import tcde_constant

Distribution = tuple[Fraction, ...]

STRICT = "strict"
MULTI = "multi"

_chain_table_cache: "WeakKeyDictionary[IdealLattice, dict[str, tuple[list, list]]]" = (
    WeakKeyDictionary()
)


def make_distribution(values) -> Distribution:
    probs = tuple(Fraction(v) for v in values)
    if any(p < 0 for p in probs):
        raise DomainError("distribution has a negative entry")
    if sum(probs) != 1:
        raise DomainError("distribution does not sum to 1")
    return probs


def expectation(dist: Distribution, values) -> Fraction:
    values = tuple(values)
    if len(values) != len(dist):
        raise DomainError(f"statistic has {len(values)} entries, expected {len(dist)}")
    return sum((p * v for p, v in zip(dist, values)), Fraction(0))


def uniform_distribution(lattice: IdealLattice) -> Distribution:
    n = len(lattice)
    return tuple(Fraction(1, n) for _ in range(n))


def _chain_tables(lattice: IdealLattice, mode: str, levels: int) -> tuple[list, list]:
    """Tables down[m][k] / up[m][k]: chains of m+1 ideals ending / starting
    at ideal k, strict or weakly increasing according to ``mode``."""
    cache = _chain_table_cache.setdefault(lattice, {})
    if mode not in cache:
        n = len(lattice)
        cache[mode] = ([[1] * n], [[1] * n])
    down, up = cache[mode]
    n = len(lattice)
    while len(down) <= levels:
        prev = down[-1]
        if mode == STRICT:
            down.append([sum(prev[j] for j in lattice.strictly_below[k]) for k in range(n)])
        else:
            down.append(
                [prev[k] + sum(prev[j] for j in lattice.strictly_below[k]) for k in range(n)]
            )
        prev = up[-1]
        if mode == STRICT:
            up.append([sum(prev[j] for j in lattice.strictly_above[k]) for k in range(n)])
        else:
            up.append(
                [prev[k] + sum(prev[j] for j in lattice.strictly_above[k]) for k in range(n)]
            )
    return down, up


def chain_distribution(lattice: IdealLattice, k: int, mode: str = STRICT) -> Distribution:
    """Probability of each ideal proportional to the number of k-chains
    through it.

    A k-chain is a tuple of k+1 ideals, strictly increasing in strict
    mode and weakly increasing in multi mode; in multi mode an ideal is
    counted once per position it occupies.  k = 0 gives the uniform
    distribution in both modes; in strict mode k = |P| gives the
    maximal-chain distribution and larger k is out of range.
    """
    if mode not in (STRICT, MULTI):
        raise DomainError(f"unknown chain mode {mode!r}")
    if k < 0:
        raise DomainError("chain length must be nonnegative")
    rank = len(lattice.heap)
    if mode == STRICT and k > rank:
        raise DomainError(f"strict chain length {k} exceeds lattice rank {rank}")
    down, up = _chain_tables(lattice, mode, k)
    counts = [
        sum(down[a][i] * up[k - a][i] for a in range(k + 1)) for i in range(len(lattice))
    ]
    total = sum(counts)
    return tuple(Fraction(c, total) for c in counts)


def maxchain_distribution(lattice: IdealLattice) -> Distribution:
    return chain_distribution(lattice, len(lattice.heap), STRICT)


@dataclass(frozen=True)
class ToggleSymmetryReport:
    """Per-element comparison of insert and delete expectations."""

    instances: int
    violations: tuple[tuple[int, Fraction, Fraction], ...]  # (element, E_plus, E_minus)

    @property
    def ok(self) -> bool:
        return not self.violations


def toggle_symmetry_report(lattice: IdealLattice, dist: Distribution) -> ToggleSymmetryReport:
    if len(dist) != len(lattice):
        raise DomainError("distribution length does not match lattice")
    violations = []
    for p in range(len(lattice.heap)):
        e_plus = sum((dist[k] for k in lattice.add_sites[p]), Fraction(0))
        e_minus = sum((dist[k] for k in lattice.remove_sites[p]), Fraction(0))
        if e_plus != e_minus:
            violations.append((p, e_plus, e_minus))
    return ToggleSymmetryReport(len(lattice.heap), tuple(violations))


def orbit_distribution(lattice: IdealLattice, orbit: tuple[int, ...]) -> Distribution:
    """Uniform on the given ideal indices, zero elsewhere."""
    if not orbit:
        raise DomainError("empty orbit")
    share = Fraction(1, len(orbit))
    probs = [Fraction(0)] * len(lattice)
    for k in orbit:
        probs[k] = share
    return tuple(probs)


@dataclass(frozen=True)
class LpCertificate:
    """Exact optima of the down-degree expectation over the polytope of
    toggle-symmetric distributions, with optimal vertices and bases."""

    minimum: Fraction
    maximum: Fraction
    minimizer: Distribution
    maximizer: Distribution
    min_basis: tuple[int, ...]
    max_basis: tuple[int, ...]

    @property
    def constant(self) -> bool:
        return self.minimum == self.maximum


def toggle_polytope(lattice: IdealLattice) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Equality system of the toggle-symmetric polytope: probabilities
    sum to one and every element is as likely to be insertable as
    deletable."""
    n = len(lattice)
    rows = [[Fraction(1)] * n]
    rhs = [Fraction(1)]
    for p in range(len(lattice.heap)):
        row = [Fraction(0)] * n
        for k in lattice.add_sites[p]:
            row[k] += 1
        for k in lattice.remove_sites[p]:
            row[k] -= 1
        rows.append(row)
        rhs.append(Fraction(0))
    return rows, rhs


def lp_certificate(lattice: IdealLattice) -> LpCertificate:
    """Minimize and maximize E(mu; ddeg) over toggle-symmetric mu.

    The uniform distribution is always toggle-symmetric, so the polytope
    is never empty; a failed solve therefore signals a bug.
    """
    rows, rhs = toggle_polytope(lattice)
    objective = [Fraction(d) for d in lattice.down_degrees]
    low = solve_lp(objective, rows, rhs, maximize=False)
    high = solve_lp(objective, rows, rhs, maximize=True)
    if low.status != OPTIMAL or high.status != OPTIMAL:
        raise InternalCheckError(
            f"toggle polytope solve failed ({low.status}/{high.status})"
        )
    return LpCertificate(
        low.objective, high.objective, low.solution, high.solution, low.basis, high.basis
    )


ACTIONS = {"rowmotion": rowmotion, "gyration": gyration}


@dataclass(frozen=True)
class HomomesyRow:
    orbit: tuple[int, ...]
    mean: Fraction
    matches: bool


@dataclass(frozen=True)
class HomomesyReport:
    action: str
    constant: Fraction
    rows: tuple[HomomesyRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.matches for r in self.rows)


def homomesy_report(lattice: IdealLattice, action: str = "rowmotion") -> HomomesyReport:
    """Mean down-degree of every orbit of the action, against the
    toggle-symmetric constant of the underlying minuscule weight."""
    if action not in ACTIONS:
        raise DomainError(f"unknown action {action!r}")
    h = lattice.heap
    if h.base is None:
        raise DomainError("heap carries no base weight")
    constant = tcde_constant(h.cartan, h.base)
    degrees = lattice.down_degrees
    rows = []
    for orbit in action_orbits(lattice, ACTIONS[action]):
        mean = Fraction(sum(degrees[k] for k in orbit), len(orbit))
        rows.append(HomomesyRow(orbit, mean, mean == constant))
    return HomomesyReport(action, constant, tuple(rows))
