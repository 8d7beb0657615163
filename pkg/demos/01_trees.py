"""
Coloured ordered trees and their two Hopf structures
=====================================================

Trees are written as parenthesis words: ``(c`` goes down an edge of colour
``c``, ``)`` comes back.  ``(2(1))(2)`` is a root with two children along
edges of colour 2, the first of which carries one more edge of colour 1.
"""

# %%
from hopftrees import RocTree, concat, enumerate_trees, tree_count
from hopftrees.roctree import deconcat_coproduct, grafting_product, graftings, pruning_coproduct

t = RocTree.parse("(2(1))(2)")
print(t, "edges:", t.weight, "json:", t.to_json())

# %%
# There are n^k C_k trees with k edges and n colours.
for k in range(5):
    print(k, len(enumerate_trees(2, k)), tree_count(2, k))

# %%
# Product: glue the roots.  Coproduct: sum over admissible subtrees t_s,
# written t_c (x) t_s where t_c is the concatenation of the pruned branches.
print(concat(RocTree.parse("(2(1)(2))"), RocTree.parse("(2)(3)")))
for (cut, kept), c in pruning_coproduct(t).items():
    print(f"{c} * {cut.code or '•'} (x) {kept.code or '•'}")

# %%
# The dual structure: deconcatenate planted factors, and graft the factors of
# the left tree onto the right one keeping their order.
print(deconcat_coproduct(t))
left, right = RocTree.parse("(1)(2)"), RocTree.parse("(2)")
print(len(graftings(left, right)), "graftings")
print(grafting_product(left, right))
