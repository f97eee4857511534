#!/usr/bin/env python3
"""The example constructions, materialized.

* dense atoms: an atomic monoid whose atoms spread through the half-line;
* shifted Cantor endpoints: nowhere dense atoms whose pairwise sums tile
  a whole interval;
* increasing sequences from the tail catalog.

Every construction emits a description that round-trips through the JSON
wire format consumed by the CLI.
"""

from fractions import Fraction as F

from puiseux import (
    build_cantor_shift,
    build_dense_atoms,
    build_increasing,
    dumps_spec,
    loads_spec,
    point_set_report,
)

# Dense atoms: entry k approximates the k-th seed rational within 1/k using
# a denominator that is a power of the k-th prime.
out = build_dense_atoms(12)
print("first dense-atom entries (index, target, atom, error):")
for e in out.entries[:8]:
    print(f"  {e.index:3d}  {str(e.target):>6s}  {str(e.atom):>8s}  {e.error}")

# With the low-discrepancy seed the first 200 atoms already cover [0, 5]
# at resolution 1/20.
atoms_200 = build_dense_atoms(200, seed="low_discrepancy").atoms()
report = point_set_report(sorted(atoms_200), 0, 5, F(1, 20))
print("\n200 low-discrepancy atoms on [0,5] at 1/20:", report.result.value)

# The calkin_wilf seed needs exponentially many terms to reach small values
# (1/n first appears at position 2**(n-1)), so its short prefix leaves gaps.
atoms_cw = build_dense_atoms(200).atoms()
report = point_set_report(sorted(atoms_cw), 0, 5, F(1, 20))
print("200 calkin_wilf atoms on [0,5] at 1/20:", report.result.value,
      "largest gap", report.gap)

# Cantor endpoints: one removal round keeps {0, 1/3, 2/3, 1}.
out = build_cantor_shift(1)
print("\ndepth-1 generators:", out.generators)
out = build_cantor_shift(6)
sums = sorted({a + b for a in out.generators for b in out.generators})
gaps = {b - a for a, b in zip(sums, sums[1:])}
print(f"depth-6: {len(out.generators)} generators, pairwise sums tile [2,4]:",
      sums[0] == 2 and sums[-1] == 4 and gaps == {F(1, 3**6)})
print("no generator inside (4/3, 5/3):",
      not any(F(4, 3) < g < F(5, 3) for g in out.generators))

# Increasing sequences, including the geometric alias.
for spec in [
    build_increasing("affine", offset=2, slope=3),
    build_increasing("harmonic", limit=2, coeff=F(1, 2)),
    build_increasing("prime_harmonic", limit=2, coeff=1),
    build_increasing("geometric", ratio=F(3, 2)),
]:
    text = dumps_spec(spec)
    assert loads_spec(text) == spec
    print("\nspec JSON:", text)
