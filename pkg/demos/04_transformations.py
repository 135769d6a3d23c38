"""Hypertree rewrites, the exact ordering, and majorization chains.

Moving an edge toward a vertex with a larger principal-eigenvector entry
strictly raises the spectral radius; releasing a non-pendent edge does
too.  The underlying comparisons live in an exact partial order on
hyperforests of equal order: T1 precedes T2 when phi(T1) dominates
phi(T2) beyond rho(T1).  The verdicts printed here come from Sturm-chain
root isolation over rationals, not from floating point.
"""

from hypertree_spectra import (
    build_Ra,
    compare_order,
    edge_release,
    hyperstar,
    is_isomorphic,
    majorization_chain,
    move_edges,
    spectral_radius_power,
    Hypergraph,
)

P4 = Hypergraph(2, 4, [(0, 1), (1, 2), (2, 3)])
chain3 = build_Ra(2, 3)

print("== edge moving ==")
moved = move_edges(P4, 1, [((2, 3), 2)])
print("move (2,3) from 2 to 1 on the path:", moved.edges)
before = spectral_radius_power(P4).rho
after = spectral_radius_power(moved).rho
print(f"rho rises from {before:.6f} to {after:.6f}")

print()
print("== edge releasing ==")
released = edge_release(chain3, (0, 1, 2))
print("releasing the middle 3-edge gives a hyperstar:", is_isomorphic(released, hyperstar(3, 3)))

print()
print("== the exact order ==")
for first, second, label in [
    (P4, hyperstar(3, 2), "P4 vs K_{1,3}"),
    (chain3, hyperstar(3, 3), "3-chain vs S_3^3"),
]:
    rel = compare_order(first, second)
    print(f"{label}: {rel.tag}")
    print(f"   certificate: {rel.witness}")

print()
print("== majorization chains (unit moves between pendant layouts) ==")
for lower, upper in [((2, 2, 2), (3, 2, 1)), ((2, 1, 1, 0), (4, 0, 0, 0))]:
    chain = majorization_chain(lower, upper)
    print(f"{upper} -> {lower}: " + " -> ".join(str(v.entries) for v in chain))
