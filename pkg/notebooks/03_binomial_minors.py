"""
Binomial minors
===============

``det B(a_1..a_n; 0..n-1)`` equals the product of differences of the ``a_i``
divided by ``0! 1! ... (n-1)!``. On the triangular numbers it collapses to a
product of odd numbers, so those matrices are invertible mod 2.
"""

# %%
from steinhaus import binomial_submatrix, minor_bareiss, minor_vandermonde, triangular_minor_closed_form
from steinhaus import triangular_number

sub = binomial_submatrix([0, 1, 3, 6], [0, 1, 2, 3])
for row in sub.exact:
    print(row)
print(minor_vandermonde([0, 1, 3, 6]), minor_bareiss([0, 1, 3, 6]))

# %%
for n in range(1, 11):
    rows = [triangular_number(k) for k in range(n)]
    v = triangular_minor_closed_form(n)
    assert v == minor_vandermonde(rows) == minor_bareiss(rows)
    print(n, v, "odd" if v % 2 else "even")

# %%
# Reversing the columns only changes the sign.
print(minor_bareiss([0, 1, 3], [2, 1, 0]))
