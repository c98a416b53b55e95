"""Decide whether two elements are automorphic images of each other.

Some automorphism maps x to y exactly when G/<x> and G/<y> are isomorphic, so
the decision reduces to comparing canonical quotient keys.  An order pre-check
short-circuits the common negative case: automorphisms preserve order, and the
quotients already differ in cardinality when the orders differ.
"""

from __future__ import annotations

from . import fastquot, snf
from .errors import DimensionMismatch
from .groups import AbelianGroup, CanonicalGroupKey, GroupElement, element_order

METHODS = ("fast", "snf")


def quotient_key(G: AbelianGroup, x: GroupElement, method: str = "fast") -> CanonicalGroupKey:
    """Canonical key of G / <x> via the chosen path ('fast' or 'snf').

    Both paths agree on every input; the switch exists for cross-validation
    and benchmarking.
    """
    if method == "fast":
        return fastquot.quotient(G, x)
    if method == "snf":
        return snf.quotient_by_snf(G, x)
    raise ValueError(f"method must be one of {METHODS}, got {method!r}")


def are_automorphic(
    G: AbelianGroup, x: GroupElement, y: GroupElement, method: str = "fast"
) -> bool:
    """True iff some automorphism of G maps x to y.

    >>> from .groups import make_group
    >>> G = make_group([4, 4])
    >>> are_automorphic(G, G.element([1, 0]), G.element([0, 3]))
    True
    >>> G2 = make_group([2, 4])
    >>> are_automorphic(G2, G2.element([1, 0]), G2.element([0, 2]))
    False
    """
    n = len(G.moduli)
    if len(x.coords) != n or len(y.coords) != n:
        raise DimensionMismatch(
            f"expected {n} coordinates, got {len(x.coords)} and {len(y.coords)}"
        )
    if element_order(x) != element_order(y):
        return False
    return quotient_key(G, x, method) == quotient_key(G, y, method)
