"""
Every graph inside a Steinhaus graph
====================================

A graph on ``n`` vertices is the subgraph induced on ``W_n = {1, 2, 4, 7, ...}``
of exactly one Steinhaus graph of order ``t_{n-1} + 1``. ``embed`` finds its
defining sequence by block forward substitution.
"""

# %%
import random
import time

from steinhaus import SimpleGraph, embed, extract, graph_from_seq, w_set
from steinhaus import BitRow

path = SimpleGraph.from_edges(3, [(1, 2), (2, 3)])
g = embed(path)
print("S =", g.seq, "order =", g.order, "W_3 =", w_set(3))
print(g.to_dot())
assert extract(g) == path

# %%
# The Petersen graph needs a Steinhaus graph of order 46.
outer = [(i, i % 5 + 1) for i in range(1, 6)]
inner = [(i, (i + 1) % 5 + 6) for i in range(6, 11)]
spokes = [(i, i + 5) for i in range(1, 6)]
petersen = SimpleGraph.from_edges(10, outer + inner + spokes)
g = embed(petersen)
print("order", g.order, "S =", g.seq)
assert extract(g) == petersen

# %%
# A random 100-vertex graph: a GF(2) system of dimension 4950.
rng = random.Random(0)
h = SimpleGraph.from_triangle_bits(100, BitRow(4950, rng.getrandbits(4950)))
start = time.perf_counter()
g = embed(h)
print(f"embedded into order {g.order} in {time.perf_counter() - start:.2f}s")
assert extract(g) == h
