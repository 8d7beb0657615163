"""
Coloured non-commutative and quasi-symmetric functions
======================================================

Both bases are indexed by multisequences such as ``1,2;2`` (rows separated by
``;``).  H_I is a bunch of coloured ladders, M_I is its dual basis element.
"""

# %%
from hopftrees import (LinComb, MultiSeq, check_bialgebra, check_duality, deconcat_coproduct_m,
                       embed_as_bunch, h_coproduct, nsym_algebra, qsym_algebra, quasi_shuffle)

I = MultiSeq.parse("1,2;2")
print(embed_as_bunch(I))          # the same bunch as a tree
print(h_coproduct(MultiSeq.parse("1,2")))

# %%
# Quasi-shuffle: rows interleave and adjacent rows from the two sides may merge.
print(quasi_shuffle(MultiSeq.parse("1;2"), MultiSeq.parse("2")))
print(deconcat_coproduct_m(I))

# %%
# With two colours the product is not commutative: merged rows keep the left row first.
a, b = MultiSeq.parse("1"), MultiSeq.parse("2")
print(quasi_shuffle(a, b))
print(quasi_shuffle(b, a))

# %%
# Exhaustive checks at small weight.
print(check_bialgebra(nsym_algebra(2), 3).summary())
print(check_bialgebra(qsym_algebra(2), 3).summary())
print(check_duality(qsym_algebra(2), nsym_algebra(2), 3).summary())
