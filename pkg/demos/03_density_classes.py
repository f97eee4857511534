#!/usr/bin/env python3
"""How much of the half-line does a monoid fill?

Four classes: dense, eventually dense (dense past some point) but not
dense, somewhere dense (which for these monoids is the same thing as
eventually dense), and nowhere dense.  The classifier cites the rule
behind each verdict; probes supply empirical evidence at a chosen
resolution but never override a rule-backed classification.
"""

from fractions import Fraction as F

from puiseux import (
    CantorShift,
    DenseAtoms,
    FiniteGenerators,
    Geometric,
    HarmonicTail,
    IncreasingSequence,
    PrimeReciprocalShift,
    UnitFractionPowers,
    classify_density,
    eventual_window_check,
    probe_density,
    right_isolation,
)

catalog = [
    UnitFractionPowers(2),
    Geometric(F(2, 3)),
    DenseAtoms(200),
    FiniteGenerators([6, 9, 20]),
    Geometric(F(3, 2)),
    IncreasingSequence(HarmonicTail(2, F(1, 2))),
    CantorShift(6),
    PrimeReciprocalShift(100),
    PrimeReciprocalShift(None),
]
for spec in catalog:
    verdict = classify_density(spec)
    print(f"{type(spec).__name__:22s} -> {verdict.klass.value}")
    print(f"    {verdict.rule}")
    if verdict.note:
        print(f"    note: {verdict.note}")

# Probes: multiples of 1/2**14 tile [0, 10] far below the 1/1000 resolution.
report = probe_density(UnitFractionPowers(2), 0, 10, F(1, 1000), depth=14)
print("\nprobe of <1/2^n> on [0,10] at 1/1000:", report.result.value,
      f"({report.elements_found} elements)")

# A finitely generated monoid shows a provable gap instead.
report = probe_density(FiniteGenerators([2, 3]), 0, 1, F(1, 2))
print("probe of <2,3> on [0,1] at 1/2:", report.result.value, "gap", report.gap)

# Density on a window propagates to its multiples (closure under addition).
for r in eventual_window_check(CantorShift(6), 2, 4, 3, F(1, 10)):
    print("cantor window", tuple(map(str, r.interval)), "->", r.result.value)

# Increasing monoids: every element is isolated from the right.
inc = IncreasingSequence(HarmonicTail(2, F(1, 2)))
print("\nright-isolation radii below 15/8:")
for element, radius in right_isolation(inc, F(15, 8)):
    print(f"  ({element}, {element} + {radius}) is empty")

# The prime-reciprocal element 1 is approached from the right as the prime
# bound grows, so the truncations' radii at 1 shrink.
for bound in (20, 50, 100):
    radius = dict(right_isolation(PrimeReciprocalShift(bound), F(3, 2)))[F(1)]
    print(f"radius at 1 with primes up to {bound}: {radius}")
