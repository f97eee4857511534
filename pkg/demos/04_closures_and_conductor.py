#!/usr/bin/env python3
"""Difference groups, root closures, and conductors.

The difference group collects all differences of monoid elements; the
root closure is its nonnegative part, equivalently the elements with
some positive multiple inside the monoid.  A monoid is finitely
generated exactly when its closure is a lattice; otherwise group and
closure are dense.  The conductor (elements that absorb the whole
closure back into the monoid) follows a small rule table.
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
    build_increasing,
    conductor,
    difference_group,
    gp_density,
    root_closure,
)

# <1/2, 1/3>: differences generate the lattice of sixths.
spec = FiniteGenerators([F(1, 2), F(1, 3)])
print("difference group of <1/2,1/3>:", difference_group(spec).describe())
clo = root_closure(spec)
print("closure membership: 1/6 ->", clo.member(F(1, 6)), "| 1/4 ->", clo.member(F(1, 4)))

# Geometric powers of 2/3: the closure is generated by 1/3**n.
geo = Geometric(F(2, 3))
print("\nclosure generators for powers of 2/3:", root_closure(geo).generators(5))
print("density:", gp_density(geo).kind.value)
print("a closure element below 1e-6:", root_closure(geo).element_below(F(1, 10**6)))

# Unit-fraction powers are root-closed: closure equals monoid.
print("\nunit-fraction powers of 2 conductor:", conductor(UnitFractionPowers(2)).describe())

# Finitely generated: the closure is an exact lattice and the conductor a tail.
for spec in [FiniteGenerators([6, 9, 20]), CantorShift(2), build_increasing("affine", offset=2, slope=3)]:
    verdict = gp_density(spec)
    print(f"\n{type(spec).__name__}: lattice step {verdict.lattice_step}")
    print("  conductor:", conductor(spec).describe())

# Not finitely generated and increasing: empty conductor.
inc = IncreasingSequence(HarmonicTail(2, F(1, 2)), prefix=[F(3, 2), F(5, 3), F(7, 4)])
print("\nbounded increasing conductor:", conductor(inc).describe())

# The all-primes reciprocal family also has an empty conductor, without
# being increasing (1 is approached from the right).
print("all-primes reciprocal conductor:", conductor(PrimeReciprocalShift(None)).describe())

# Honest unknowns: cases the rule table does not decide.
for spec in [Geometric(F(2, 3)), PrimeReciprocalShift(100), DenseAtoms(50)]:
    r = conductor(spec)
    print(f"{type(spec).__name__:22s} -> {r.kind.value}: {r.reason}")
