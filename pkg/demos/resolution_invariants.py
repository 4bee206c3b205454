#!/usr/bin/env python3
"""Walkthrough: resolution invariants of zero-dimensional plane schemes.

Generator degrees a_1 >= ... >= a_n and syzygy degrees b_1 >= ... >= b_{n-1}
determine everything numeric about a scheme of points: its degree, its
Hilbert function, its h-vector, and the stabilization level.  This
script plays those identities forward and backward.
"""

from curvedet import (
    BettiData,
    generic_betti,
    h0_ideal,
    hilbert_function,
    hvector_from_betti,
    incidence_dimension,
    is_numerically_minimal,
    minimalize,
    scheme_degree,
    stabilization_bound,
)

print("=" * 72)
print("22 points presented by generators (7, 6, 4) and syzygies (9, 8)")
print("=" * 72)
B = BettiData.of([7, 6, 4], [9, 8])
print("scheme degree:", scheme_degree(B))
print("Hilbert function:", [hilbert_function(B, t) for t in range(10)])
print("stabilizes at level b_1 - 2 =", stabilization_bound(B))
print("sections of the ideal: quartics =", h0_ideal(B, 4), ", quintics =", h0_ideal(B, 5))
print()
print("with a 21-dimensional family of such schemes, the incidence variety")
print("of (quartic, scheme) pairs has dimension", incidence_dimension(21, B, 4)[0])
print("and for quintics it jumps to", incidence_dimension(21, B, 5)[0])
print()

print("=" * 72)
print("h-vectors and cancellation-free Betti numbers")
print("=" * 72)
ghost = BettiData.of([7, 7, 5, 5, 5], [8, 8, 7, 6])
print("a 20-point scheme with a redundant degree-7 pair:")
print("  gens", ghost.gens, " syz", ghost.syz, " minimal?", is_numerically_minimal(ghost))
h = hvector_from_betti(ghost)
print("its h-vector:", h, "(sums to", sum(h), ")")
clean = minimalize(ghost)
print("after cancelling the matching pair:  gens", clean.gens, " syz", clean.syz)
print("generic Betti numbers recovered from the h-vector alone:")
re = generic_betti(h)
print("  gens", re.gens, " syz", re.syz)
assert re == clean
print()

print("round trip on a few complete intersections:")
for gens, syz in (([2, 2], [4]), ([1, 4], [5]), ([3, 3], [6])):
    B = BettiData.of(gens, syz)
    h = hvector_from_betti(B)
    print(f"  gens {gens}, syz {syz}: degree {scheme_degree(B)}, h-vector {h}")
