"""Cofinite additive submonoids of the nonnegative integers.

The workhorse structure is the residue table: for each residue class
modulo the smallest generator, the least monoid element in that class.
The table decides membership in O(1), yields the largest gap (maximum
table entry minus the modulus) and the conductor tail, and is computed by
round-robin relaxation, shortest-path style, so no search bound ever has
to be guessed.

``reachable_bitmask`` is the deliberately separate ground truth: plain
closure-by-shifting reachability with no residue reasoning, used by tests
to cross-check the table route and at construction time to strip
redundant generators.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .errors import BudgetError

__all__ = ["NumericalMonoid", "reachable_bitmask"]

_BITMASK_LIMIT = 200_000_000  # bits; ~25 MB of big-int
_RESIDUE_LIMIT = 2_000_000


def reachable_bitmask(generators: Sequence[int], bound: int) -> int:
    """Bitmask of all generator sums in [0, bound]; bit i set iff i is a sum.

    Closure under each generator is achieved by doubling shifts, so the cost
    is O(len(generators) * log(bound)) big-int operations.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound > _BITMASK_LIMIT:
        raise BudgetError("reachability bitmask too large", bound=bound, limit=_BITMASK_LIMIT)
    mask = (1 << (bound + 1)) - 1
    reach = 1
    for g in sorted(set(generators)):
        if g <= 0:
            raise ValueError(f"generators must be positive integers, got {g}")
        shift = g
        while shift <= bound:
            reach |= (reach << shift) & mask
            shift <<= 1
    return reach


def _bit_positions(mask: int, limit: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        i = low.bit_length() - 1
        if i > limit:
            break
        out.append(i)
        mask ^= low
    return out


def _relax_residues(generators: Sequence[int], modulus: int) -> list[int]:
    # Least monoid element in each class mod `modulus`, by repeated
    # round-robin relaxation; stabilizes in at most `modulus` passes.
    table: list[int | None] = [None] * modulus
    table[0] = 0
    changed = True
    while changed:
        changed = False
        for r in range(modulus):
            base = table[r]
            if base is None:
                continue
            for g in generators:
                v = base + g
                rr = v % modulus
                cur = table[rr]
                if cur is None or v < cur:
                    table[rr] = v
                    changed = True
    assert all(entry is not None for entry in table)
    return table  # type: ignore[return-value]


class NumericalMonoid:
    """Submonoid of the nonnegative integers with finite complement.

    Construction requires gcd 1 of the generators (otherwise the complement
    is infinite: divide the gcd out first).  Generators are deduplicated,
    sorted, and stripped down to the unique minimal generating set, so input
    order never affects results.  Instances are immutable; the residue table
    and largest gap are computed once at construction.
    """

    __slots__ = ("_min_gens", "_apery", "_frobenius")

    def __init__(self, generators: Iterable[int]):
        gens = sorted(set(generators))
        if not gens:
            raise ValueError("at least one generator is required")
        for g in gens:
            if not isinstance(g, int) or isinstance(g, bool) or g < 1:
                raise ValueError(f"generators must be integers >= 1, got {g!r}")
        if math.gcd(*gens) != 1:
            raise ValueError(
                f"not cofinite: gcd of generators is {math.gcd(*gens)}; divide it out first"
            )
        if gens[0] > _RESIDUE_LIMIT:
            raise BudgetError("multiplicity too large for the residue table", multiplicity=gens[0], limit=_RESIDUE_LIMIT)
        self._min_gens = self._minimalize(gens)
        self._apery = tuple(_relax_residues(self._min_gens, self._min_gens[0]))
        self._frobenius = max(self._apery) - self._min_gens[0]

    @staticmethod
    def _minimalize(gens: list[int]) -> tuple[int, ...]:
        # A generator is redundant iff it splits as a sum of two nonzero
        # monoid elements; both parts are then strictly smaller, so the
        # reachability mask up to max(gens) settles every case.
        bound = gens[-1]
        reach = reachable_bitmask(gens, bound)
        elements = [i + 1 for i in _bit_positions(reach >> 1, bound - 1)]  # nonzero elements
        keep = []
        for g in gens:
            split = False
            for u in elements:
                if 2 * u > g:
                    break
                if (reach >> (g - u)) & 1:
                    split = True
                    break
            if not split:
                keep.append(g)
        return tuple(keep)

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        return self._min_gens

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero element."""
        return self._min_gens[0]

    @property
    def apery(self) -> tuple[int, ...]:
        """Residue table with respect to the multiplicity; entry 0 is 0."""
        return self._apery

    @property
    def frobenius(self) -> int:
        """Largest integer outside the monoid; -1 when the monoid is all of N0."""
        return self._frobenius

    @property
    def conductor(self) -> int:
        """Least c with every integer >= c inside the monoid."""
        return self._frobenius + 1

    def contains(self, x: int) -> bool:
        if x < 0:
            raise ValueError(f"membership is defined on nonnegative integers, got {x}")
        m = self._min_gens[0]
        return self._apery[x % m] <= x

    def __contains__(self, x: int) -> bool:
        return self.contains(x)

    def apery_set(self, modulus: int | None = None) -> tuple[int, ...]:
        """Least monoid element in each residue class mod ``modulus``.

        ``modulus`` must itself belong to the monoid (default: the
        multiplicity, for which the table is cached).
        """
        if modulus is None or modulus == self._min_gens[0]:
            return self._apery
        if modulus < 1 or not self.contains(modulus):
            raise ValueError(f"{modulus} is not a nonzero element of the monoid")
        if modulus > _RESIDUE_LIMIT:
            raise BudgetError("residue table too large", modulus=modulus, limit=_RESIDUE_LIMIT)
        return tuple(_relax_residues(self._min_gens, modulus))

    def gaps(self) -> tuple[int, ...]:
        """All nonnegative integers outside the monoid, in increasing order."""
        return tuple(x for x in range(self._frobenius + 1) if not self.contains(x))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalMonoid):
            return NotImplemented
        return self._min_gens == other._min_gens

    def __hash__(self) -> int:
        return hash(self._min_gens)

    def __repr__(self) -> str:
        return f"NumericalMonoid({list(self._min_gens)})"
