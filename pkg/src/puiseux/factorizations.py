"""Atoms, factorization sets, and length sets.

An atom is a nonzero element with no split into two nonzero elements.  A
factorization of x is a multiset of atoms summing to x; its length is the
number of parts counted with multiplicity.  Enumeration orders atoms
descending and bounds each multiplicity by floor(remaining / atom), which
gives canonical output order and tight pruning without heuristics.

Atomicity verdicts are per family:

* finite generator lists are atomic with atoms the minimal generators of
  the scaled numerical monoid;
* families streamed in increasing order (increasing sequences, geometric
  ratios above 1, shifted Cantor endpoints) are atomic, and a generator is
  an atom iff it is not a sum from the earlier generators, the only
  candidates below it;
* the prime-reciprocal family is atomic with every generator an atom: all
  generators lie below 2, the least possible value of any two-part sum;
* unit-fraction powers (and geometric ratios 1/b) have no atoms at all:
  every generator splits as base copies of the next one;
* the dense-atom family is atomic because distinct generators carry powers
  of distinct primes in their denominators;
* contracting geometric ratios with nonunit numerator are deliberately
  reported unknown: no decision criterion is implemented, and guessing
  would be worse than saying so.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import BudgetError
from .families import (
    CantorShift,
    DenseAtoms,
    FiniteGenerators,
    Geometric,
    IncreasingSequence,
    MonoidSpec,
    PrimeReciprocalShift,
    UnitFractionPowers,
    DEFAULT_NODE_BUDGET,
    _bounded_member,
    canonical_fg,
    cantor_generators,
    depth_for_complete,
    generator_count,
    generator_stream,
    prime_reciprocal_solutions,
)
from .rationals import RationalLike, require_nonnegative

__all__ = [
    "AtomicityKind",
    "AtomicityVerdict",
    "Factorization",
    "FactorizationSet",
    "LengthSet",
    "atoms",
    "factorizations",
    "length_set",
]

DEFAULT_ATOM_LIMIT = 64


class AtomicityKind(str, Enum):
    ATOMIC = "atomic"
    ANTIMATTER = "antimatter"
    NOT_ATOMIC = "not_atomic"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class AtomicityVerdict:
    kind: AtomicityKind
    atoms_shown: tuple[Fraction, ...]
    truncated: bool
    rule: str


@dataclass(frozen=True)
class Factorization:
    """Multiset of atoms with multiplicities; parts keep atoms descending."""

    parts: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        for (a, c) in self.parts:
            if c < 1:
                raise ValueError("multiplicities must be >= 1")
            if a <= 0:
                raise ValueError("atoms must be positive")
        for (a, _), (b, _) in zip(self.parts, self.parts[1:]):
            if not a > b:
                raise ValueError("parts must list atoms in strictly descending order")

    @property
    def length(self) -> int:
        return sum(c for _, c in self.parts)

    @property
    def value(self) -> Fraction:
        return sum((a * c for a, c in self.parts), Fraction(0))


@dataclass(frozen=True)
class FactorizationSet:
    """All factorizations found for x; ``complete`` means all that exist."""

    x: Fraction
    items: tuple[Factorization, ...]
    complete: bool
    note: str | None = None

    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted({f.length for f in self.items}))


@dataclass(frozen=True)
class LengthSet:
    x: Fraction
    lengths: tuple[int, ...]
    complete: bool


_RULE_FINITE = "atoms.finite: minimal generators of the scaled numerical monoid"
_RULE_INCREASING = (
    "atoms.increasing-filter: a generator is an atom iff it is not a sum of earlier "
    "generators, the only candidates below it in an ascending stream"
)
_RULE_PRS = (
    "atoms.prime-reciprocal: every generator lies below 2, the least possible "
    "two-part sum, so all generators are atoms"
)
_RULE_ANTIMATTER = (
    "atoms.antimatter: each generator equals base times the next smaller one, "
    "so nothing is irreducible"
)
_RULE_DENSE = (
    "atoms.distinct-prime-powers: each generator's denominator is a power of its "
    "own prime, so no generator is a sum of the others"
)
_RULE_UNKNOWN = (
    "atoms.unknown: no criterion for contracting geometric ratios with nonunit numerator"
)


def _increasing_filter(
    stream: Sequence[Fraction], budget: int
) -> list[Fraction]:
    kept: list[Fraction] = []
    for g in stream:
        found, _ = _bounded_member(kept, g, budget)
        if found is None:
            raise BudgetError("atom filter exceeded node budget", node_budget=budget)
        if not found:
            kept.append(g)
    return kept


def atoms(
    spec: MonoidSpec, limit: int = DEFAULT_ATOM_LIMIT, budget: int = DEFAULT_NODE_BUDGET
) -> AtomicityVerdict:
    """Atomicity verdict with up to ``limit`` atoms listed.

    Truncation is always reported via the ``truncated`` flag, never silent.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")

    if isinstance(spec, FiniteGenerators):
        cf = canonical_fg(spec)
        assert cf is not None
        full = cf.atoms()
        return AtomicityVerdict(
            AtomicityKind.ATOMIC, full[:limit], truncated=len(full) > limit, rule=_RULE_FINITE
        )

    if isinstance(spec, UnitFractionPowers):
        return AtomicityVerdict(AtomicityKind.ANTIMATTER, (), truncated=False, rule=_RULE_ANTIMATTER)

    if isinstance(spec, Geometric):
        if spec.ratio < 1:
            if spec.ratio.numerator == 1:
                return AtomicityVerdict(
                    AtomicityKind.ANTIMATTER, (), truncated=False, rule=_RULE_ANTIMATTER
                )
            return AtomicityVerdict(AtomicityKind.UNKNOWN, (), truncated=False, rule=_RULE_UNKNOWN)
        if spec.ratio.denominator == 1:
            # Integer ratio: 1 generates everything, so the monoid is all of N0.
            return AtomicityVerdict(
                AtomicityKind.ATOMIC, (Fraction(1),), truncated=False, rule=_RULE_FINITE
            )
        shown = _increasing_filter(generator_stream(spec, limit), budget)
        return AtomicityVerdict(AtomicityKind.ATOMIC, tuple(shown), truncated=True, rule=_RULE_INCREASING)

    if isinstance(spec, IncreasingSequence):
        cf = canonical_fg(spec)  # affine tails reduce to a finite generator list
        if cf is not None:
            full = cf.atoms()
            return AtomicityVerdict(
                AtomicityKind.ATOMIC, full[:limit], truncated=len(full) > limit, rule=_RULE_FINITE
            )
        shown = _increasing_filter(generator_stream(spec, limit), budget)
        return AtomicityVerdict(AtomicityKind.ATOMIC, tuple(shown), truncated=True, rule=_RULE_INCREASING)

    if isinstance(spec, CantorShift):
        total = generator_count(spec)
        stream = generator_stream(spec, min(limit, total))
        shown = _increasing_filter(stream, budget)
        return AtomicityVerdict(
            AtomicityKind.ATOMIC, tuple(shown), truncated=limit < total, rule=_RULE_INCREASING
        )

    if isinstance(spec, PrimeReciprocalShift):
        total = generator_count(spec)
        take = limit if total is None else min(limit, total)
        shown = _increasing_filter(generator_stream(spec, take), budget)
        truncated = total is None or take < total
        return AtomicityVerdict(AtomicityKind.ATOMIC, tuple(shown), truncated=truncated, rule=_RULE_PRS)

    if isinstance(spec, DenseAtoms):
        shown = generator_stream(spec, limit)
        return AtomicityVerdict(AtomicityKind.ATOMIC, shown, truncated=True, rule=_RULE_DENSE)

    raise TypeError(f"not a monoid description: {spec!r}")


def _atoms_below(
    spec: MonoidSpec, x: Fraction, budget: int, depth_cap: int = 64
) -> tuple[list[Fraction], bool]:
    """Atoms of the monoid that are <= x, with a completeness flag."""
    if isinstance(spec, FiniteGenerators):
        cf = canonical_fg(spec)
        assert cf is not None
        return [a for a in cf.atoms() if a <= x], True
    if isinstance(spec, CantorShift):
        gens = [g for g in cantor_generators(spec.depth) if g <= x]
        return _increasing_filter(gens, budget), True
    if isinstance(spec, (Geometric, IncreasingSequence)):
        depth = depth_for_complete(spec, x)
        if depth is None:
            gens = [g for g in generator_stream(spec, depth_cap) if g <= x]
            return _increasing_filter(gens, budget), False
        gens = [g for g in generator_stream(spec, depth) if g <= x]
        return _increasing_filter(gens, budget), True
    raise TypeError(f"no atom enumeration below a bound for {type(spec).__name__}")


def _enumerate(
    atoms_desc: list[Fraction], x: Fraction, node_budget: int
) -> tuple[list[Factorization], bool]:
    """Complete descending-atom enumeration of multisets summing to x."""
    found: list[Factorization] = []
    stack: list[tuple[Fraction, int]] = []
    nodes = 0
    exhausted = True

    def walk(i: int, rem: Fraction) -> None:
        nonlocal nodes, exhausted
        nodes += 1
        if nodes > node_budget:
            exhausted = False
            return
        if rem == 0:
            found.append(Factorization(tuple(stack)))
            return
        if i == len(atoms_desc):
            return
        a = atoms_desc[i]
        walk(i + 1, rem)  # low multiplicities first; results are sorted afterwards
        for c in range(1, int(rem / a) + 1):
            if not exhausted:
                return
            stack.append((a, c))
            walk(i + 1, rem - c * a)
            stack.pop()

    walk(0, x)
    return sorted(found, key=lambda f: f.parts), exhausted


def factorizations(
    spec: MonoidSpec, x: RationalLike, budget: int = DEFAULT_NODE_BUDGET
) -> FactorizationSet:
    """The set of factorizations of x into atoms.

    Complete whenever the atoms below x form a computable finite set (finite
    generator lists, ascending streams below their limit, prime-reciprocal
    families); otherwise the result is flagged partial.  Antimatter and
    unknown-atom families are errors.
    """
    q = require_nonnegative(x, what="element")

    if isinstance(spec, UnitFractionPowers) or (
        isinstance(spec, Geometric) and spec.ratio < 1 and spec.ratio.numerator == 1
    ):
        raise ValueError("no atoms: the monoid is antimatter")
    if isinstance(spec, Geometric) and spec.ratio < 1:
        raise ValueError("atom set unknown for contracting geometric ratios with nonunit numerator")
    if isinstance(spec, DenseAtoms):
        if q == 0:
            return FactorizationSet(q, (Factorization(()),), complete=True)
        raise ValueError("infinitely many atoms below any positive bound; no complete enumeration")

    if q == 0:
        return FactorizationSet(q, (Factorization(()),), complete=True)

    if isinstance(spec, PrimeReciprocalShift):
        try:
            sols = prime_reciprocal_solutions(q, spec.prime_bound, budget)
        except BudgetError:
            return FactorizationSet(q, (), complete=False, note="node budget exhausted")
        items = []
        for ones, primes in sols:
            parts: list[tuple[Fraction, int]] = []
            for p in sorted(set(primes)):
                parts.append((1 + Fraction(1, p), primes.count(p)))
            if ones:
                parts.append((Fraction(1), ones))
            items.append(Factorization(tuple(sorted(parts, reverse=True))))
        return FactorizationSet(q, tuple(sorted(items, key=lambda f: f.parts)), complete=True)

    below, below_complete = _atoms_below(spec, q, budget)
    items, exhausted = _enumerate(sorted(below, reverse=True), q, budget)
    complete = below_complete and exhausted
    note = None
    if not below_complete:
        note = "atom truncation: infinitely many atoms at or below x"
    elif not exhausted:
        note = "node budget exhausted"
    return FactorizationSet(q, tuple(items), complete=complete, note=note)


def length_set(
    spec: MonoidSpec, x: RationalLike, budget: int = DEFAULT_NODE_BUDGET
) -> LengthSet:
    """Image of the factorization set under length."""
    fs = factorizations(spec, x, budget)
    return LengthSet(fs.x, fs.lengths(), fs.complete)
