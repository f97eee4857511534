#!/usr/bin/env python3
"""Finitely generated monoids: canonical form, gaps, membership.

A monoid generated by finitely many positive rationals is a scaled copy of
a numerical monoid (a cofinite set of nonnegative integers).  Everything
about it is exactly computable: scale out the denominators, reduce to the
minimal generating set, and read membership off a residue table.
"""

from fractions import Fraction as F

from puiseux import (
    FiniteGenerators,
    NumericalMonoid,
    canonicalize,
    conductor,
    spec_member,
)

# The classic integer example: which amounts can 6, 9, and 20 make?
nm = NumericalMonoid([6, 9, 20])
print("minimal generators:", nm.minimal_generators)
print("residue table (mod 6):", nm.apery)
print("largest gap:", nm.frobenius)            # 43
print("conductor:", nm.conductor)              # everything from 44 up
print("all gaps:", nm.gaps())
print("43 in the monoid?", nm.contains(43), "| 44?", nm.contains(44))

# Redundant generators disappear: 4 = 2 + 2.
print("\n<2,3,4> minimizes to:", NumericalMonoid([2, 3, 4]).minimal_generators)

# Rational generators reduce to the same machinery.
cf = canonicalize([F(1, 2), F(1, 3)])
print("\n<1/2, 1/3> = scale * numerical monoid")
print("  scale:", cf.scale, "| scaled monoid:", cf.nm.minimal_generators)
print("  5/6 is a member:", cf.member(F(5, 6)))
print("  1/6 is a member:", cf.member(F(1, 6)), " (the closure has it, the monoid does not)")

# Membership at the description level returns certificates.
spec = FiniteGenerators([F(1, 2), F(1, 3)])
result = spec_member(spec, F(5, 6))
print("\ncertificate for 5/6:", result.certificate)

# The conductor of a finitely generated monoid is always a tail.
print("\nconductor of <6,9,20>:", conductor(FiniteGenerators([6, 9, 20])).describe())
print("conductor of <1/2,1/3>:", conductor(spec).describe())
