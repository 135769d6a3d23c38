"""Counting hypertree classes, and how we know none are missing.

The generator grows every class from the single edge by pendent
attachment and deduplicates by canonical code.  Three independent
cross-checks guard completeness:

1. For ordinary trees (r = 2), decode every Prufer sequence and
   canonicalize by a different scheme (centroid rooting on the tree
   itself rather than centers of the incidence forest).
2. A generate-all-and-filter oracle over labeled edge subsets, feasible
   for the small cells.
3. The exact labeled count n^(m-1) (n-1)! / (m! ((r-1)!)^m), which must
   equal the sum of n!/|Aut| over the classes found.
"""

from hypertree_spectra import (
    automorphism_count,
    enumerate_hypertrees,
    labeled_count_from_classes,
    labeled_hypertree_count,
    naive_filter_class_count,
    tree_class_count_prufer,
)

print("== class counts by edge count ==")
for r, m_max in [(2, 9), (3, 7), (4, 5), (5, 5)]:
    counts = [len(enumerate_hypertrees(m, r)) for m in range(1, m_max + 1)]
    print(f"r={r}: {counts}")

print()
print("== oracle 1: Prufer + centroid codes (r = 2) ==")
for m in range(1, 7):
    grown = len(enumerate_hypertrees(m, 2))
    slow = tree_class_count_prufer(m + 1)
    print(f"m={m}: grown {grown}, oracle {slow} -> {grown == slow}")

print()
print("== oracle 2: generate-all-and-filter on the small cells ==")
for m, r in [(3, 2), (4, 2), (3, 3), (4, 3), (3, 4)]:
    naive = naive_filter_class_count(m, r)
    grown = len(enumerate_hypertrees(m, r))
    print(f"(m={m}, r={r}): naive {naive}, grown {grown} -> {naive == grown}")

print()
print("== oracle 3: the labeled-count identity ==")
for m, r in [(4, 2), (5, 3), (4, 4), (5, 4)]:
    classes = enumerate_hypertrees(m, r)
    n = m * (r - 1) + 1
    summed = labeled_count_from_classes(m, r)
    closed = labeled_hypertree_count(m, r)
    parts = " + ".join(f"{n}!/{automorphism_count(H)}" for H in classes[:4])
    more = " + ..." if len(classes) > 4 else ""
    print(f"(m={m}, r={r}): {parts}{more} = {summed}; closed form {closed} -> {summed == closed}")
