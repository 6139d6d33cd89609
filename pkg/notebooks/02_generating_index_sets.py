"""
Generating index sets
=====================

Which ``n`` positions of a size-``n`` triangle pin down the whole triangle?
Exactly those whose binomial-parity matrix ``M_A`` is invertible over GF(2).
"""

# %%
from steinhaus import IndexSet, build_MA, enumerate_generating, is_generating, reconstruct, d3_orbits
from steinhaus.gensets import count_subsets, is_generating_bruteforce
from steinhaus import BitRow

a = IndexSet(3, [(0, 0), (0, 2), (1, 1)])
print(build_MA(a))
print("generating:", is_generating(a), "| brute force:", is_generating_bruteforce(a))

# %%
# Reading (1, 0, 1) at those positions leaves exactly one triangle.
print(reconstruct(a, BitRow.from_string("101")).pretty())

# %%
# For n = 3: 16 of the 20 three-point subsets generate, in 4 symmetry classes.
sets = enumerate_generating(3)
print(len(sets), "of", count_subsets(3))
for orbit in d3_orbits(sets):
    print(f"{len(orbit)} x {orbit.representative.to_text()}")

# %%
# Counts grow quickly.
for n in range(1, 7):
    print(n, len(enumerate_generating(n)), count_subsets(n))
