"""Toggle indicator statistics on ideals and exact identity checks.

For an ideal I and element p, the indicators record whether toggling at
p would insert p (plus), delete p (minus), or fix I.  Down-degree is
the number of deletable elements.  The checks in this module certify,
with exact rational arithmetic, the identities tying those indicators
to inner products of the ideal's weight:

* the count of label-i elements of I equals
  2 ((base, omega_i) - (w, omega_i)) / (alpha_i, alpha_i);
* the signed indicator sum over the label-i fiber equals (w, alpha_i^vee);
* the position-weighted sum  sum_j (j-1) plus_j - j minus_j  over the
  fiber equals  count_i(I) (w, alpha_i^vee);
* the fiber statistic defined below equals
  (2/(alpha_i, alpha_i)) (w, omega_i) (w, alpha_i^vee);
* down-degree decomposes as the constant 2 (base, base) / omega_sq plus
  a fixed linear combination of signed indicators,

where w is the weight of I.  Summed over nodes i, the fiber statistics
add up to that same constant on every ideal, which is what pins the
expected down-degree of every toggle-symmetric distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import (
    CartanDatum,
    Weight,
    _check_node,
    coroot_pairing,
    fundamental_weight,
    inner_product,
    simple_root,
)
from .errors import DomainError
from .heap import Heap
from .ideals import IdealLattice, addable_elements, ideal_weight, removable_elements


@dataclass(frozen=True)
class ToggleSnapshot:
    """Per-element toggle eligibility for one ideal, as bit masks."""

    adds: int
    removes: int

    def plus(self, p: int) -> int:
        return self.adds >> p & 1

    def minus(self, p: int) -> int:
        return self.removes >> p & 1

    def signed(self, p: int) -> int:
        return (self.adds >> p & 1) - (self.removes >> p & 1)


def snapshot(h: Heap, mask: int) -> ToggleSnapshot:
    adds = removes = 0
    for p in addable_elements(h, mask):
        adds |= 1 << p
    for p in removable_elements(h, mask):
        removes |= 1 << p
    return ToggleSnapshot(adds, removes)


def down_degree(h: Heap, mask: int) -> int:
    """Number of maximal elements of the ideal; equals its down-degree
    in the lattice cover graph and the total minus-indicator."""
    return len(removable_elements(h, mask))


def up_degree(h: Heap, mask: int) -> int:
    return len(addable_elements(h, mask))


def label_count(h: Heap, mask: int, i: int) -> int:
    """How many elements of the ideal carry label ``i``."""
    _check_node(h.cartan, i)
    return (mask & h.fiber_masks[i]).bit_count()


def tcde_constant(cd: CartanDatum, lam: Weight) -> Fraction:
    """2 (lam, lam) / omega_sq: the down-degree expectation shared by all
    toggle-symmetric distributions on the lattice of the minuscule heap."""
    return 2 * inner_product(cd, lam, lam) / cd.omega_sq


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    lhs: Fraction
    rhs: Fraction


def _weight_of(h: Heap, mask: int, weight: Weight | None) -> Weight:
    return weight if weight is not None else ideal_weight(h, mask)


def check_label_count_formula(
    h: Heap, mask: int, i: int, weight: Weight | None = None
) -> CheckResult:
    """Label count against its inner-product form."""
    cd = h.cartan
    if h.base is None:
        raise DomainError("heap carries no base weight")
    w = _weight_of(h, mask, weight)
    omega = fundamental_weight(cd, i)
    alpha = simple_root(cd, i)
    lhs = Fraction(label_count(h, mask, i))
    rhs = (
        2
        * (inner_product(cd, h.base, omega) - inner_product(cd, w, omega))
        / inner_product(cd, alpha, alpha)
    )
    return CheckResult(lhs == rhs, lhs, rhs)


def check_signed_toggle_sum(
    h: Heap, mask: int, i: int, weight: Weight | None = None
) -> CheckResult:
    """Signed indicator sum over the fiber against the coroot pairing."""
    w = _weight_of(h, mask, weight)
    snap = snapshot(h, mask)
    lhs = Fraction(sum(snap.signed(p) for p in h.fibers[i]))
    rhs = Fraction(coroot_pairing(h.cartan, w, i))
    return CheckResult(lhs == rhs, lhs, rhs)


def check_weighted_toggle_sum(
    h: Heap, mask: int, i: int, weight: Weight | None = None
) -> CheckResult:
    """Position-weighted indicator sum, with fiber positions j counted
    from 1 in heap order: sum_j (j-1) plus_j - j minus_j."""
    w = _weight_of(h, mask, weight)
    snap = snapshot(h, mask)
    lhs = Fraction(
        sum(
            (j - 1) * snap.plus(p) - j * snap.minus(p)
            for j, p in enumerate(h.fibers[i], start=1)
        )
    )
    rhs = label_count(h, mask, i) * Fraction(coroot_pairing(h.cartan, w, i))
    return CheckResult(lhs == rhs, lhs, rhs)


def fiber_statistic(h: Heap, mask: int, i: int) -> Fraction:
    """Indicator combination attached to one label fiber:

        sum_j minus_j - sum_j (j-1) signed_j
          + (2 (base, omega_i) / (alpha_i, alpha_i)) sum_j signed_j.

    Its expectation vanishes against the signed part of any
    toggle-symmetric distribution, and over all nodes these statistics
    sum to the constant 2 (base, base) / omega_sq on every ideal.
    """
    cd = h.cartan
    if h.base is None:
        raise DomainError("heap carries no base weight")
    snap = snapshot(h, mask)
    fiber = h.fibers[i]
    minus_total = sum(snap.minus(p) for p in fiber)
    weighted = sum((j - 1) * snap.signed(p) for j, p in enumerate(fiber, start=1))
    signed_total = sum(snap.signed(p) for p in fiber)
    omega = fundamental_weight(cd, i)
    alpha = simple_root(cd, i)
    scale = 2 * inner_product(cd, h.base, omega) / inner_product(cd, alpha, alpha)
    return Fraction(minus_total - weighted) + scale * signed_total


def check_fiber_statistic(
    h: Heap, mask: int, i: int, weight: Weight | None = None
) -> CheckResult:
    cd = h.cartan
    w = _weight_of(h, mask, weight)
    omega = fundamental_weight(cd, i)
    alpha = simple_root(cd, i)
    lhs = fiber_statistic(h, mask, i)
    rhs = (
        Fraction(2)
        / inner_product(cd, alpha, alpha)
        * inner_product(cd, w, omega)
        * coroot_pairing(cd, w, i)
    )
    return CheckResult(lhs == rhs, lhs, rhs)


@dataclass(frozen=True)
class DecompositionCheck:
    """Down-degree against its constant-plus-indicators form, together
    with the fiber statistics summing to the constant."""

    ddeg: Fraction
    reconstructed: Fraction
    statistic_sum: Fraction
    constant: Fraction

    @property
    def ok(self) -> bool:
        return self.ddeg == self.reconstructed and self.statistic_sum == self.constant


def check_ddeg_decomposition(h: Heap, mask: int) -> DecompositionCheck:
    """ddeg(I) = constant + sum_{i,j} c_{i,j} signed_{i,j}(I) with
    c_{i,j} = (j-1) - 2 (base, omega_i) / (alpha_i, alpha_i)."""
    cd = h.cartan
    if h.base is None:
        raise DomainError("heap carries no base weight")
    snap = snapshot(h, mask)
    constant = tcde_constant(cd, h.base)
    total = constant
    stat_sum = Fraction(0)
    for i in cd.nodes:
        omega = fundamental_weight(cd, i)
        alpha = simple_root(cd, i)
        scale = 2 * inner_product(cd, h.base, omega) / inner_product(cd, alpha, alpha)
        for j, p in enumerate(h.fibers[i], start=1):
            total += ((j - 1) - scale) * snap.signed(p)
        stat_sum += fiber_statistic(h, mask, i)
    return DecompositionCheck(Fraction(down_degree(h, mask)), total, stat_sum, constant)


@dataclass(frozen=True)
class SuiteRow:
    check: str
    instances: int
    failures: int


def identity_suite(lattice: IdealLattice) -> tuple[SuiteRow, ...]:
    """Run every identity check on every (ideal, node) pair of a lattice."""
    h = lattice.heap
    cd = h.cartan
    if lattice.weights is None:
        raise DomainError("lattice carries no weights; build the heap with a base weight")
    per_node_checks = (
        ("label_count", check_label_count_formula),
        ("signed_toggle_sum", check_signed_toggle_sum),
        ("weighted_toggle_sum", check_weighted_toggle_sum),
        ("fiber_statistic", check_fiber_statistic),
    )
    failures = {name: 0 for name, _ in per_node_checks}
    decomposition_failures = 0
    for k, mask in enumerate(lattice.ideals):
        w = lattice.weights[k]
        for name, fn in per_node_checks:
            for i in cd.nodes:
                if not fn(h, mask, i, weight=w).ok:
                    failures[name] += 1
        if not check_ddeg_decomposition(h, mask).ok:
            decomposition_failures += 1
    pairs = len(lattice) * cd.rank
    rows = [SuiteRow(name, pairs, failures[name]) for name, _ in per_node_checks]
    rows.append(SuiteRow("ddeg_decomposition", len(lattice), decomposition_failures))
    return tuple(rows)
