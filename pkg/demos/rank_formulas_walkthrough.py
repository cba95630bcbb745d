"""
Weight multiplicities from small matrices
=========================================

A few weight spaces of a simple GL_n module in characteristic p can be
read off from the ranks of small recursively defined matrices, instead of
building the Gram matrix of the contravariant form.  This script compares
the two routes on one weight and then runs the multiplicity formula for
L(lam) (x) wedge^2 V*.
"""

from itertools import combinations

from glwedge import build_M, build_X, gram_matrix, multiplicity_main, simple_character
from glwedge.gram_oracle import dim_simple_weight_space
from glwedge.rank_formulas import x_rank
from glwedge.weights import alpha, distinguished, sub

lam, p = (3, 1, 1, 0, 0), 5
n = len(lam)

# the Gram matrix at lam - (eps_1 - eps_3), rows labelled by PBW monomials
g = gram_matrix(lam, sub(lam, alpha(n, 1, 3)))
print("Gram matrix rows:", [repr(m) for m in g.row_labels])
print(g.entries)
print("rank over Q:", g.rank_q(), " rank mod p:", g.rank_mod(p))

# the X recursion gives a matrix of the same size whose rank agrees
x = build_X(1, 3, 1, 1, lam)
print("\nX matrix:")
print(x.entries)
print("rank mod p:", x.rank_mod(p))

# every x_{i,j} at once, both ways
for i, j in combinations(range(1, n + 1), 2):
    mu = sub(lam, alpha(n, i, j))
    print(f"x_{i}{j}: recursion {x_rank(i, j, lam, p)}  oracle {dim_simple_weight_space(lam, mu, p)}")

# the 3x3-block matrix for the weight mu^1
d = distinguished(lam, 1)
print("\nmu^1 =", d.mu_up_i, " M rank:", build_M(1, lam).rank_mod(p),
      " oracle:", dim_simple_weight_space(lam, d.mu_up_i, p))

###############################################################################
# The multiplicity of L(lam - eps_i - eps_s) in L(lam) (x) wedge^2 V*

report = multiplicity_main(lam, 1, p)
print("\nt values:", report.t)
print("hypotheses:", report.hypotheses)
print("multiplicity:", report.multiplicity if report.applicable else "not covered")

# the full character, for comparison with a table
ch = simple_character(lam, p)
print("\ndim L(lam) =", ch.dim())
for w, m in sorted(ch.dominant_part().items(), reverse=True):
    print(" ", w, m)
