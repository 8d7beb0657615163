"""Exact Hopf algebras of rooted ordered coloured trees, NSym_n and QSym_n.

Submodules:

- ``core``: linear combinations, convolution, antipode, axiom and duality checks
- ``roctree``: trees with (concatenation, pruning) and (grafting, deconcatenation)
- ``nsym`` / ``qsym``: the H and M bases, quasi-shuffles, Sym specialisation
- ``pcseries``: truncated series in partially commutative variables
- ``weyl``: exact matrix checks for Weyl pairs over cyclotomic fields
"""
from .core import (Bialgebra, GradedBasis, LinComb, NonConnectedError, Report, ResourceLimitError,
                   antipode, check_antipode, check_bialgebra, check_duality, convolution,
                   make_antipode, pairing, tensor)
from .nsym import (EMPTY, Composition, MultiSeq, Partition, compositions, embed_as_bunch,
                   enumerate_multiseqs, flower, h_coproduct, h_product, multiseq_count,
                   nsym_algebra, partitions)
from .pcseries import (PCMonomial, PCPolynomial, doubling_coproduct_oracle, expand_m,
                       normalize, pc_multiply, recognize)
from .qsym import (complete_hom_sym, deconcat_coproduct_m, duality_pairing, hall_pairing,
                   monomial_sym, qsym_algebra, quasi_shuffle, sym_coproduct_m)
from .roctree import (TRIVIAL, ColourRangeError, RocTree, admissible_cuts, concat,
                      deconcat_coproduct, dual_tree_algebra, enumerate_trees, grafting_product,
                      graftings, plant, pruning_coproduct, tree_algebra, tree_count)

__version__ = "0.1.0"
