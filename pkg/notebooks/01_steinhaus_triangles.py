"""
Steinhaus triangles
===================

A triangle is fixed by its top row: every entry below is the XOR of the two
entries above it. The same triangle can be rebuilt from its left or right
side, and the three readings agree entry by entry.
"""

# %%
from steinhaus import BitRow, from_top_row, from_left_side, from_right_side
from steinhaus import entry_via_top, entry_via_right, entry_via_left

top = BitRow.from_string("0010100")
tri = from_top_row(top)
print(tri.pretty())

# %%
# The two other sides, read top to bottom.
print("left  side:", tri.left_side())
print("right side:", tri.right_side())
assert from_left_side(tri.left_side()) == tri
assert from_right_side(tri.right_side()) == tri

# %%
# Any entry can be computed from one side alone, through binomial parities.
p = (3, 2)
print(tri[p], entry_via_top(top, p), entry_via_right(tri.right_side(), p), entry_via_left(tri.left_side(), p))

# %%
# Rotating by 120 degrees puts the right side on top; reflecting mirrors each row.
print(tri.rotate120().pretty())
print()
print(tri.reflect().pretty())

# %%
# Triangles of a given size form a vector space: XOR of two triangles is the
# triangle of the XOR of their top rows.
other = from_top_row(BitRow.from_string("1100011"))
assert (tri ^ other) == from_top_row(top ^ other.top_row)
