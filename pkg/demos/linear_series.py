#!/usr/bin/env python3
"""Walkthrough: which complete linear series live on a general octic?

A degree-20 divisor D on a smooth plane curve of degree 8 (genus 21)
moves in a complete two-dimensional series exactly when its Hilbert
function satisfies HF(5) = 18.  Enumerating the admissible Hilbert
functions and running each through the containment decision classifies
every such series on a general curve, together with two finer
properties: whether D + H is non-special and whether D - H is effective.
"""

from curvedet import SeriesQuery, ShiftedProperty, analyze, genus

query = SeriesQuery(
    curve_degree=8,
    divisor_degree=20,
    series_dim=2,
    properties=(ShiftedProperty(1, "nonspecial"), ShiftedProperty(-1, "effective")),
)
print(f"curve degree {query.curve_degree}, genus {genus(query.curve_degree)}")
print(f"looking for complete series of degree {query.divisor_degree} and dimension {query.series_dim}")
print()

answer = analyze(query)
print("constraints on the divisor's Hilbert function:")
for c in answer.constraints:
    tag = "required" if c.mandatory else "flag"
    print(f"  HF({c.level}) {c.relation} {c.value}   [{tag}: {c.label}]")
print()

print(f"{len(answer.rows)} compatible Hilbert functions, all realized on a general curve:")
for label, row in zip("abcd", answer.rows):
    hf = ", ".join(str(v) for v in row.hilbert_values(7))
    flags = "  ".join(f"{name}: {'yes' if ok else 'no'}" for name, ok in row.flags)
    print(f" ({label}) HF = {hf}, ...")
    print(f"      generators {row.betti.gens}, syzygies {row.betti.syz}")
    print(f"      exists on a general octic: {'yes' if row.exists_on_general_curve else 'no'};  {flags}")
print()
print("every combination of the two properties occurs, so the general octic")
print("carries four genuinely different kinds of complete 2-dimensional")
print("degree-20 series.")
