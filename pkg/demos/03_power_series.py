"""
Quasi-symmetric functions as series in partially commuting variables
====================================================================

x_{a,i} and x_{b,j} commute when i != j.  M_I becomes the sum of all
monomials with the rows of I placed at strictly increasing positions.
Positions beyond a bound N are set to zero; everything below is exact.
"""

# %%
from hopftrees import MultiSeq, expand_m, normalize, pc_multiply, quasi_shuffle, recognize
from hopftrees.pcseries import doubling_coproduct_oracle

# letters are (colour, position); the normal form sorts stably by position
print(normalize([(1, 3), (2, 1), (1, 1), (2, 3), (1, 1)]))

# %%
N = 3
p = expand_m(MultiSeq.parse("2,1,1;1,2"), N)
for mono in p.terms:
    print(mono.code)

# %%
# Multiplying series reproduces the quasi-shuffle product.
i, j = MultiSeq.parse("1;2"), MultiSeq.parse("2")
prod = pc_multiply(expand_m(i, 4), expand_m(j, 4))
print(recognize(prod))
print(quasi_shuffle(i, j))

# %%
# Doubling the alphabet (y's placed after all x's) gives the coproduct.
print(doubling_coproduct_oracle(MultiSeq.parse("1,2;2"), 2))
