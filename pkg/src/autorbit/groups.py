"""Finite abelian groups presented as direct sums of cyclic groups.

A group is normalized at construction time: every supplied cyclic order is
factorized, the prime-power cyclic factors are collected per prime, and both
the canonical isomorphism key and the invariant-factor chain are derived from
them.  Any list of cyclic orders is accepted, not just invariant-factor
chains; orders equal to 1 contribute nothing to the canonical key but are kept
in ``moduli`` so element coordinates keep their arity.

All types are immutable after construction and all operations are pure, so
everything here can be shared across threads freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .arith import crt, factorize
from .errors import DimensionMismatch, NonPositiveModulus


def format_cyclic(orders: Iterable[int]) -> str:
    """Render cyclic orders as 'C2 x C8 x C8'; the trivial group is 'C1'.

    >>> format_cyclic([2, 8, 8])
    'C2 x C8 x C8'
    >>> format_cyclic([])
    'C1'
    """
    parts = [f"C{d}" for d in orders]
    return " x ".join(parts) if parts else "C1"


@dataclass(frozen=True)
class CanonicalGroupKey:
    """Isomorphism-class fingerprint of a finite abelian group.

    ``parts`` maps each prime (ascending) to the descending list of its
    elementary-divisor exponents; no exponent is zero.  By the structure
    theorem two finite abelian groups are isomorphic exactly when their keys
    are equal.
    """

    parts: tuple[tuple[int, tuple[int, ...]], ...]

    @classmethod
    def from_map(cls, primary: dict[int, Iterable[int]]) -> "CanonicalGroupKey":
        """Build a key from a prime -> exponent-iterable map, dropping zero
        exponents and empty primes and sorting everything canonically.

        >>> CanonicalGroupKey.from_map({2: [1, 3, 2], 3: [0]})
        CanonicalGroupKey(parts=((2, (3, 2, 1)),))
        """
        parts = []
        for p in sorted(primary):
            exps = tuple(sorted((e for e in primary[p] if e > 0), reverse=True))
            if exps:
                parts.append((p, exps))
        return cls(tuple(parts))

    @property
    def primary_parts(self) -> dict[int, tuple[int, ...]]:
        return dict(self.parts)

    def is_trivial(self) -> bool:
        return not self.parts

    def order(self) -> int:
        n = 1
        for p, exps in self.parts:
            n *= p ** sum(exps)
        return n

    def elementary_divisors(self) -> list[int]:
        """All prime-power cyclic factors, ascending.

        >>> CanonicalGroupKey.from_map({2: [2, 1], 3: [1]}).elementary_divisors()
        [2, 3, 4]
        """
        return sorted(p**e for p, exps in self.parts for e in exps)

    def invariant_factors(self) -> list[int]:
        """The divisibility chain m_1 | m_2 | ... | m_k, ascending.

        Zips the per-prime exponent lists largest-first: the j-th largest
        invariant factor is the product of the j-th largest prime powers.

        >>> CanonicalGroupKey.from_map({2: [2, 1], 3: [1]}).invariant_factors()
        [2, 12]
        """
        width = max((len(exps) for _, exps in self.parts), default=0)
        out = []
        for j in range(width):
            m = 1
            for p, exps in self.parts:
                if j < len(exps):
                    m *= p ** exps[j]
            out.append(m)
        out.reverse()
        return out

    def merge(self, other: "CanonicalGroupKey") -> "CanonicalGroupKey":
        """Union of keys with disjoint prime support (direct sum of coprime parts)."""
        mine = self.primary_parts
        theirs = other.primary_parts
        overlap = mine.keys() & theirs.keys()
        if overlap:
            raise ValueError(f"keys share primes {sorted(overlap)}")
        mine.update(theirs)
        return CanonicalGroupKey.from_map({p: list(v) for p, v in mine.items()})

    def describe_elementary(self) -> str:
        return format_cyclic(self.elementary_divisors())

    def describe_invariant(self) -> str:
        return format_cyclic(self.invariant_factors())

    def __str__(self) -> str:
        return self.describe_invariant()


class AbelianGroup:
    """A finite abelian group given as C_{d_1} + ... + C_{d_n}.

    >>> G = AbelianGroup([8, 2, 4])
    >>> G.invariant_factors
    (2, 4, 8)
    >>> G.canonical
    CanonicalGroupKey(parts=((2, (3, 2, 1)),))
    >>> AbelianGroup([1]).canonical.is_trivial()
    True
    """

    __slots__ = ("moduli", "canonical", "invariant_factors", "order", "_primary")

    def __init__(self, moduli: Iterable[int]):
        mods = tuple(int(d) for d in moduli)
        for d in mods:
            if d <= 0:
                raise NonPositiveModulus(f"cyclic order must be >= 1, got {d}")
        # _primary: prime -> ((position, exponent, p**exponent), ...) over the
        # coordinates whose order that prime divides, in position order.
        primary: dict[int, list[tuple[int, int, int]]] = {}
        for i, d in enumerate(mods):
            for p, e in factorize(d).items():
                primary.setdefault(p, []).append((i, e, p**e))
        self.moduli = mods
        self._primary = {p: tuple(primary[p]) for p in sorted(primary)}
        self.canonical = CanonicalGroupKey.from_map(
            {p: [e for _, e, _ in triples] for p, triples in self._primary.items()}
        )
        self.invariant_factors = tuple(self.canonical.invariant_factors())
        self.order = math.prod(mods)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def primes(self) -> tuple[int, ...]:
        return tuple(self._primary)

    def primary_exponents(self, p: int) -> tuple[int, ...]:
        """Position-aligned exponents of the p-primary part."""
        return tuple(e for _, e, _ in self._primary.get(p, ()))

    def element(self, coords: Iterable[int]) -> "GroupElement":
        cs = tuple(int(c) for c in coords)
        if len(cs) != len(self.moduli):
            raise DimensionMismatch(
                f"expected {len(self.moduli)} coordinates, got {len(cs)}"
            )
        return GroupElement(self, tuple(c % d for c, d in zip(cs, self.moduli)))

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.moduli))

    def elements(self) -> Iterator["GroupElement"]:
        """All elements in mixed-radix (odometer) order; meant for small groups."""
        n = len(self.moduli)
        coords = [0] * n
        while True:
            yield GroupElement(self, tuple(coords))
            i = n - 1
            while i >= 0:
                coords[i] += 1
                if coords[i] < self.moduli[i]:
                    break
                coords[i] = 0
                i -= 1
            else:
                return

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return self.moduli == other.moduli

    def __hash__(self) -> int:
        return hash(self.moduli)

    def __repr__(self) -> str:
        return f"AbelianGroup({list(self.moduli)})"

    def __str__(self) -> str:
        return format_cyclic(d for d in self.moduli if d > 1)


@dataclass(frozen=True)
class GroupElement:
    """A tuple of residues, one per cyclic factor of its parent group."""

    parent: AbelianGroup
    coords: tuple[int, ...]

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(
            self.parent,
            tuple(
                (a + b) % d
                for a, b, d in zip(self.coords, other.coords, self.parent.moduli)
            ),
        )

    def __neg__(self) -> "GroupElement":
        return GroupElement(
            self.parent,
            tuple((-a) % d for a, d in zip(self.coords, self.parent.moduli)),
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "GroupElement":
        return GroupElement(
            self.parent,
            tuple((k * a) % d for a, d in zip(self.coords, self.parent.moduli)),
        )

    def is_identity(self) -> bool:
        return not any(self.coords)

    def order(self) -> int:
        return element_order(self)

    def __repr__(self) -> str:
        return f"GroupElement({list(self.coords)} in {self.parent!r})"


def make_group(moduli: Iterable[int]) -> AbelianGroup:
    """Normalize a list of cyclic orders into an AbelianGroup.

    >>> make_group([6, 4]).invariant_factors
    (2, 12)
    """
    return AbelianGroup(moduli)


def element_order(x: GroupElement) -> int:
    """Order of x: lcm over coordinates of d_i / gcd(d_i, x_i); 1 iff identity.

    >>> element_order(make_group([2, 4]).element([1, 2]))
    2
    """
    o = 1
    for c, d in zip(x.coords, x.parent.moduli):
        step = d // math.gcd(d, c)
        o = o * step // math.gcd(o, step)
    return o


def to_invariant_coordinates(G: AbelianGroup, x: GroupElement) -> tuple[int, ...]:
    """Re-express x in the invariant-factor presentation of G.

    The isomorphism splits every coordinate into its prime-power residues,
    assigns each prime's factors to the invariant slots largest-to-largest
    (ties kept in position order), and recombines per slot by CRT.  The result
    is aligned with ``G.invariant_factors``.

    >>> G = make_group([6, 4])
    >>> to_invariant_coordinates(G, G.element([3, 2]))
    (1, 6)
    """
    k = G.rank
    slots: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for p, triples in G._primary.items():
        ranked = sorted(triples, key=lambda t: t[1])  # ascending exponent, stable
        offset = k - len(ranked)
        for j, (pos, _e, pe) in enumerate(ranked):
            slots[offset + j].append((pe, x.coords[pos] % pe))
    return tuple(crt(parts) for parts in slots)
