"""Enumerate the automorphic orbits of a finite abelian group.

Within one p-primary part, every element is automorphic to its reduced form
(p^{b_1}, ..., p^{b_n}) with 0 <= b_i <= e_i (b_i = e_i standing for the zero
coordinate), so iterating the prod(e_i + 1) reduced forms and grouping them by
the canonical key of the quotient they generate yields the per-prime orbits;
the number of ordinary elements sharing a reduced form is the product over
coordinates of phi(p^{e_i - b_i}) (one, for a zero coordinate).  Orbits of the
whole group are Cartesian products of per-prime orbits, with multiplying
sizes and merged quotient keys.

Enumeration is capped (default 10**7 combined reduced forms) and fails loudly
with CapacityExceeded rather than hang.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .arith import crt, phi_prime_power
from .errors import CapacityExceeded
from .fastquot import PPrimaryPart, p_group_quotient, sylow_decompose
from .groups import AbelianGroup, CanonicalGroupKey, GroupElement

DEFAULT_ENUMERATION_CAP = 10_000_000


@dataclass(frozen=True)
class ReducedForm:
    """Per-prime exponent tuples (b_1, ..., b_n) naming the element whose
    p-primary coordinates are (p^{b_1}, ..., p^{b_n}); sorted by prime."""

    parts: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def from_map(cls, by_prime: dict[int, tuple[int, ...]]) -> "ReducedForm":
        return cls(tuple((p, tuple(by_prime[p])) for p in sorted(by_prime)))

    @property
    def by_prime(self) -> dict[int, tuple[int, ...]]:
        return dict(self.parts)

    def merge(self, other: "ReducedForm") -> "ReducedForm":
        mine = self.by_prime
        theirs = other.by_prime
        if mine.keys() & theirs.keys():
            raise ValueError("reduced forms share primes")
        mine.update(theirs)
        return ReducedForm.from_map(mine)

    def realize(self, G: AbelianGroup) -> GroupElement:
        """The concrete element of G this reduced form names."""
        congruences: list[list[tuple[int, int]]] = [[] for _ in G.moduli]
        for p, bs in self.parts:
            triples = G._primary[p]
            if len(bs) != len(triples):
                raise ValueError(f"arity mismatch for prime {p}")
            for (pos, _e, pe), b in zip(triples, bs):
                congruences[pos].append((pe, pow(p, b) % pe))
        return GroupElement(G, tuple(crt(c) for c in congruences))


@dataclass(frozen=True)
class OrbitSummary:
    """One automorphic orbit: the canonical key of the quotient it corresponds
    to, every reduced form it contains, and its exact element count."""

    quotient_key: CanonicalGroupKey
    representatives: tuple[ReducedForm, ...]
    size: int


def reduced_form(G: AbelianGroup, x: GroupElement) -> ReducedForm:
    """Strip unit multipliers from x: per prime, the coordinate valuations
    (clamped to the exponent for zero coordinates).

    >>> from .groups import make_group
    >>> G = make_group([4, 8])
    >>> reduced_form(G, G.element([3, 6])).parts
    ((2, (0, 1)),)
    """
    return ReducedForm.from_map(
        {p: part.valuations() for p, part in sylow_decompose(G, x).items()}
    )


def p_group_orbits(
    p: int, exponents: tuple[int, ...], cap: int = DEFAULT_ENUMERATION_CAP
) -> list[OrbitSummary]:
    """Orbits of the p-group with the given component exponents.

    Iterates reduced forms in mixed-radix (odometer) order, groups them by the
    canonical quotient key, and sums exact element counts.  Output order is
    first occurrence.

    >>> [(o.quotient_key.describe_invariant(), o.size) for o in p_group_orbits(2, (2,))]
    [('C1', 2), ('C2', 1), ('C4', 1)]
    """
    if any(e < 1 for e in exponents):
        raise ValueError("component exponents must be >= 1")
    total = math.prod(e + 1 for e in exponents)
    if total > cap:
        raise CapacityExceeded(f"{total} reduced forms exceed cap {cap}")
    buckets: dict[CanonicalGroupKey, tuple[list[tuple[int, ...]], list[int]]] = {}
    for b in itertools.product(*(range(e + 1) for e in exponents)):
        exps = p_group_quotient(PPrimaryPart(p, tuple(zip(b, exponents))))
        key = CanonicalGroupKey.from_map({p: exps} if exps else {})
        count = 1
        for b_i, e_i in zip(b, exponents):
            if b_i != e_i:
                count *= phi_prime_power(p, e_i - b_i)
        forms, sizes = buckets.setdefault(key, ([], []))
        forms.append(b)
        sizes.append(count)
    return [
        OrbitSummary(
            key,
            tuple(ReducedForm(((p, b),)) for b in forms),
            sum(sizes),
        )
        for key, (forms, sizes) in buckets.items()
    ]


def enumerate_orbits(
    G: AbelianGroup, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[OrbitSummary]:
    """All automorphic orbits of G, with exact sizes summing to |G|.

    Per-prime orbits are combined by Cartesian product: sizes multiply,
    quotient keys merge, and representative reduced forms pair up.  The
    combined representative count is exactly prod_i tau(d_i), which is what
    the cap limits.

    >>> from .groups import make_group
    >>> [(o.quotient_key.describe_invariant(), o.size) for o in enumerate_orbits(make_group([6]))]
    [('C1', 2), ('C3', 1), ('C2', 2), ('C6', 1)]
    """
    total_forms = 1
    for p in G.primes():
        total_forms *= math.prod(e + 1 for e in G.primary_exponents(p))
        if total_forms > cap:
            raise CapacityExceeded(f"{total_forms}+ reduced forms exceed cap {cap}")
    per_prime = [p_group_orbits(p, G.primary_exponents(p), cap) for p in G.primes()]
    if not per_prime:
        return [OrbitSummary(CanonicalGroupKey(()), (ReducedForm(()),), 1)]
    combined = []
    for combo in itertools.product(*per_prime):
        key = CanonicalGroupKey(())
        size = 1
        for o in combo:
            key = key.merge(o.quotient_key)
            size *= o.size
        reps = tuple(
            ReducedForm(tuple(itertools.chain.from_iterable(rf.parts for rf in row)))
            for row in itertools.product(*(o.representatives for o in combo))
        )
        combined.append(OrbitSummary(key, reps, size))
    return combined
