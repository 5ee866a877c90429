"""JSON-friendly dictionaries and DOT renderings of the core structures.

Rationals are serialized as "num/den" strings (JSON numbers cannot
carry exactness); ideals are serialized as 0/1 strings indexed by heap
element.  All emitted orderings are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .bits import bit_string
from .cartan import CartanDatum
from .heap import Heap
from .ideals import IdealLattice
from .orbit import OrbitPoset


def frac_str(value) -> str:
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def cartan_to_dict(cd: CartanDatum) -> dict:
    return {
        "family": cd.family,
        "rank": cd.rank,
        "numbering": "bourbaki",
        "matrix": [list(row) for row in cd.matrix],
        "omega_sq": frac_str(cd.omega_sq),
    }


def orbit_to_dict(orbit: OrbitPoset) -> dict:
    return {
        "size": len(orbit),
        "weights": [list(w) for w in orbit.weights],
        "covers": [list(c) for c in orbit.covers],
        "layers": list(orbit.layers),
        "bottom": orbit.bottom,
        "top": orbit.top,
    }


def heap_to_dict(h: Heap) -> dict:
    return {
        "size": len(h),
        "labels": list(h.labels),
        "covers": [list(c) for c in h.covers],
        "ranks": list(h.ranks),
        "names": [list(n) for n in h.names],
        "base": list(h.base) if h.base is not None else None,
    }


def lattice_to_dict(lattice: IdealLattice) -> dict:
    width = len(lattice.heap)
    return {
        "count": len(lattice),
        "ideals": [bit_string(m, width) for m in lattice.ideals],
        "covers": [list(c) for c in lattice.covers],
        "weights": [list(w) for w in lattice.weights] if lattice.weights else None,
    }


def orbit_dot(orbit: OrbitPoset) -> str:
    lines = ["digraph orbit {", "  rankdir=BT;"]
    for k, w in enumerate(orbit.weights):
        coords = ",".join(str(c) for c in w)
        lines.append(f'  w{k} [label="({coords})"];')
    for u, v, i in orbit.covers:
        lines.append(f'  w{u} -> w{v} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def heap_dot(h: Heap) -> str:
    lines = ["digraph heap {", "  rankdir=BT;"]
    for p, label in enumerate(h.labels):
        lines.append(f'  p{p} [label="{p} (node {label})"];')
    for a, b in h.covers:
        lines.append(f"  p{a} -> p{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
