"""Tour: multiset problems that get easy when few distinct values occur.

Each solver builds a small integer program whose variable count depends on
the number of distinct values only, then extracts a checkable certificate.
Run:  python3 demos/variety_tour.py
"""

from varsolve import (Multiset, dump_program, solve_3partition, solve_num_3dm,
                      solve_partition, solve_subset_sum)
from varsolve.variety import subset_sum_program

print("=== Subset sum ===")
bags = Multiset(((16, 10), (17, 10), (23, 10), (24, 10), (39, 10), (40, 10)))
print(f"multiset with {bags.cardinality()} elements, "
      f"but only {bags.variety()} distinct values")
print("\nthe constructed program:")
print(dump_program(subset_sum_program(bags, 100)))
cert = solve_subset_sum(bags, 100)
print("\nselection reaching 100:", dict(cert.counts))
print("check:", sum(v * c for v, c in cert.counts.items()))

print("\n=== Partition ===")
weights = Multiset(((7, 3), (3, 5), (2, 2)))
cert = solve_partition(weights)
print(f"total {weights.total()} splits evenly:", dict(cert.counts),
      "sums to", cert.selection_sum())

print("\n=== 3-partition ===")
jobs = Multiset(((4, 4), (5, 4), (3, 4)))
cover = solve_3partition(jobs)
print(f"{jobs.cardinality()} values into equal-sum triples:")
for first, second, third, count in cover.triples:
    print(f"  {{{first}, {second}, {third}}} x{count}  (sum {first+second+third})")

print("\n=== Numerical 3-dimensional matching ===")
a = Multiset.from_values([1, 2, 2])
b = Multiset.from_values([3, 3, 4])
c = Multiset.from_values([5, 4, 4])
cover = solve_num_3dm(a, b, c, 9)
print("triples hitting 9:", cover.triples if cover else "impossible")
