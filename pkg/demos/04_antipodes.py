"""
Antipodes by recursion
======================

In a graded connected bialgebra the antipode is determined by
S(u) = -u - sum S(u') u'' over the reduced coproduct; the mirror recursion
must give the same map.
"""

# %%
from hopftrees import LinComb, MultiSeq, RocTree, antipode, check_antipode
from hopftrees import nsym_algebra, qsym_algebra, tree_algebra

h = nsym_algebra(2)
x = LinComb.basis(MultiSeq.parse("1,2"))
print(antipode(x, h, side="left"))
print(antipode(x, h, side="right"))

# %%
print(antipode(LinComb.basis(MultiSeq.parse("1;2")), qsym_algebra(2)))
print(antipode(LinComb.basis(RocTree.parse("(1(2))")), tree_algebra(2)))

# %%
for alg in (tree_algebra(2), nsym_algebra(2), qsym_algebra(2)):
    print(check_antipode(alg, 3).summary())
