"""Simply laced root data: Cartan matrices, inner products, reflections.

Weights are plain tuples of coordinates in the fundamental-weight basis,
so the i-th coordinate of ``mu`` is the coroot pairing (mu, alpha_i^vee).
All roots are normalized to squared length 2, which makes coroots
coincide with roots; the simple root alpha_i then has coordinate vector
equal to row i of the Cartan matrix, and both reflections and coroot
pairings are integer row operations.

Node numbering follows Bourbaki.  In type D the fork sits at node
rank-2, with nodes rank-1 and rank as the two prongs.  In type E the
chain is 1-3-4-5-6(-7) and node 2 hangs off node 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigurationError, DomainError

Rational = int | Fraction
Weight = tuple[Rational, ...]


def _dynkin_edges(family: str, rank: int) -> list[tuple[int, int]]:
    if family == "A" and rank >= 1:
        return [(i, i + 1) for i in range(1, rank)]
    if family == "D" and rank >= 3:
        edges = [(i, i + 1) for i in range(1, rank - 2)]
        edges += [(rank - 2, rank - 1), (rank - 2, rank)]
        return edges
    if family == "E" and rank in (6, 7):
        chain = [1, 3, 4, 5, 6, 7][: rank - 1]
        edges = list(zip(chain, chain[1:]))
        edges.append((2, 4))
        return sorted(edges)
    raise ConfigurationError(f"unsupported Cartan type {family}{rank}")


def _invert(matrix: tuple[tuple[int, ...], ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Exact Gauss-Jordan inverse."""
    n = len(matrix)
    aug = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ConfigurationError("singular Cartan matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True, eq=False)
class CartanDatum:
    """A simply laced Cartan matrix with its exact inverse."""

    family: str
    rank: int
    matrix: tuple[tuple[int, ...], ...]
    inverse: tuple[tuple[Fraction, ...], ...]
    omega_sq: Fraction

    @property
    def nodes(self) -> range:
        """Node indices, 1-based."""
        return range(1, self.rank + 1)

    def __repr__(self) -> str:
        return f"CartanDatum({self.family}{self.rank})"


def build_cartan(family: str, rank: int) -> CartanDatum:
    """Build the Cartan datum for ``family`` in {A, D, E} at ``rank``.

    Supported ranks: A with rank >= 1, D with rank >= 3, E with rank 6
    or 7.  Anything else raises ConfigurationError naming the pair.
    """
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise ConfigurationError(f"rank must be an integer, got {rank!r}")
    edges = _dynkin_edges(family, rank)
    matrix = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for a, b in edges:
        matrix[a - 1][b - 1] = -1
        matrix[b - 1][a - 1] = -1
    frozen = tuple(tuple(row) for row in matrix)
    return CartanDatum(family, rank, frozen, _invert(frozen), Fraction(2))


def _check_node(cd: CartanDatum, i: int) -> None:
    if not 1 <= i <= cd.rank:
        raise DomainError(f"node {i} out of range for {cd.family}{cd.rank}")


def _check_weight(cd: CartanDatum, mu: Weight) -> None:
    if len(mu) != cd.rank:
        raise DomainError(f"weight has {len(mu)} coordinates, expected {cd.rank}")


def fundamental_weight(cd: CartanDatum, k: int) -> Weight:
    _check_node(cd, k)
    return tuple(int(j == k - 1) for j in range(cd.rank))


def simple_root(cd: CartanDatum, i: int) -> Weight:
    """alpha_i in fundamental-weight coordinates (row i of the Cartan matrix)."""
    _check_node(cd, i)
    return cd.matrix[i - 1]


def coroot_pairing(cd: CartanDatum, mu: Weight, i: int) -> Rational:
    """(mu, alpha_i^vee); just the i-th fundamental coordinate."""
    _check_node(cd, i)
    _check_weight(cd, mu)
    return mu[i - 1]


def inner_product(cd: CartanDatum, mu: Weight, nu: Weight) -> Fraction:
    """Exact inner product, via (omega_i, omega_j) = inverse[i][j] * omega_sq / 2."""
    _check_weight(cd, mu)
    _check_weight(cd, nu)
    total = Fraction(0)
    for i, mi in enumerate(mu):
        if mi == 0:
            continue
        row = cd.inverse[i]
        total += mi * sum(nj * row[j] for j, nj in enumerate(nu) if nj != 0)
    return total * cd.omega_sq / 2


def simple_reflection(cd: CartanDatum, i: int, mu: Weight) -> Weight:
    """Reflect mu through alpha_i: mu - (mu, alpha_i^vee) alpha_i."""
    _check_node(cd, i)
    _check_weight(cd, mu)
    mi = mu[i - 1]
    if mi == 0:
        return tuple(mu)
    row = cd.matrix[i - 1]
    return tuple(m - mi * a for m, a in zip(mu, row))


def is_integral(mu: Weight) -> bool:
    return all(isinstance(m, int) or (isinstance(m, Fraction) and m.denominator == 1) for m in mu)


def is_dominant(mu: Weight) -> bool:
    return all(m >= 0 for m in mu)


def minuscule_catalog(cd: CartanDatum) -> tuple[int, ...]:
    """Nodes k for which omega_k is a minuscule weight.

    The list is a lookup; it is cross-validated at runtime by the orbit
    verifier, which accepts exactly these nodes.
    """
    if cd.family == "A":
        return tuple(cd.nodes)
    if cd.family == "D":
        return (1, cd.rank - 1, cd.rank)
    if cd.rank == 6:
        return (1, 6)
    return (7,)
