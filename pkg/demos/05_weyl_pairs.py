"""
Weyl pairs and the inverse of a 2x2 generator matrix
====================================================

Clock and shift matrices of size d satisfy Y X = q X Y with q a primitive
d-th root of unity.  Two commuting copies give x1, y1, x2, y2; the blocks
of the inverse of [[y1, x2], [x1, y2]] satisfy the same relations with
q^-1.  All arithmetic is exact in Q(zeta_d).
"""

# %%
from hopftrees.weyl import (build_quadruple, build_weyl_pair, check_barxx_identity,
                            check_dual_relations, extract_q, invert_A, verify)

X, Y, q = build_weyl_pair(3)
print("q =", q, " YX == qXY:", Y * X == (X * Y) * q)

# %%
quad = build_quadruple(3, (1, 2, 3, 5))
inv = invert_A(quad)
for check in check_dual_relations(inv) + check_barxx_identity(inv):
    print("ok  " if check.residual_is_zero else "FAIL", check.relation)
print("extracted q:", extract_q(quad))

# %%
# With all scales equal to 1 the matrix is singular; the first scale is bumped by a prime.
print(invert_A(build_quadruple(2, (1, 1, 1, 1))).quad.scales)

# %%
for d in (2, 3, 5):
    print(d, verify(d).passed)
