#!/usr/bin/env python3
"""Atoms, factorizations, and length sets, cross-checked by brute force.

An atom is a nonzero element that never splits as a sum of two nonzero
elements.  Factorizations of x are multisets of atoms summing to x; the
length set collects their sizes.  The fast enumeration is validated here
against the plain nested-loop oracle.
"""

from fractions import Fraction as F

from puiseux import (
    FiniteGenerators,
    IncreasingSequence,
    HarmonicTail,
    PrimeReciprocalShift,
    UnitFractionPowers,
    atoms,
    factorizations,
    length_set,
)
from puiseux.oracle import enumerate_monoid, naive_atoms, naive_factorization_parts

spec = FiniteGenerators([2, 3])
print("atoms of <2,3>:", atoms(spec).atoms_shown)
for x in (6, 12):
    fs = factorizations(spec, x)
    print(f"factorizations of {x}:")
    for f in fs.items:
        pretty = " + ".join(f"{a}*{m}" for a, m in f.parts)
        print(f"  {pretty}   (length {f.length})")
    print("  length set:", length_set(spec, x).lengths)

# The brute-force oracle agrees.
oracle_parts = naive_factorization_parts([F(2), F(3)], 12)
fast_parts = tuple(sorted(f.parts for f in factorizations(spec, 12).items))
print("oracle match on x=12:", oracle_parts == fast_parts)

# Atoms found by the ascending filter match decomposition-free elements.
enum = enumerate_monoid(spec, 10, 2)
print("brute-force atoms up to 10:", naive_atoms(enum))

# 7/6 = 1/2 + 2/3, so it is not an atom of <2/3, 1/2, 7/6>.
mixed = FiniteGenerators([F(2, 3), F(1, 2), F(7, 6)])
print("\natoms of <2/3, 1/2, 7/6>:", atoms(mixed).atoms_shown)

# The prime-reciprocal family keeps every generator irreducible, and its
# factorization sets stay finite and fully enumerable.
prs = PrimeReciprocalShift(None)
print("\nfactorizations of 4 over {1} and {1+1/p}:")
for f in factorizations(prs, 4).items:
    print("  ", f.parts, "length", f.length)

# Bounded increasing sequences are atomic; every generator is an atom.
inc = IncreasingSequence(HarmonicTail(2, F(1, 2)))
print("\nfirst atoms of the 2 - 1/(2k) monoid:", atoms(inc, limit=5).atoms_shown)

# Antimatter: no atoms at all, so factorization requests are refused.
try:
    factorizations(UnitFractionPowers(2), F(1, 2))
except ValueError as e:
    print("\nunit-fraction powers:", e)
