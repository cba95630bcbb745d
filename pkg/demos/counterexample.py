"""
When the (1,1)-slice is not enough
==================================

Under linkage and degree conditions the multiplicity of L(mu) in
L(lam) (x) wedge^2 V* equals the multiplicity of L(mu_hat) in the slice of
L(lam) where the last two coordinates are (1,1) and E_{n-1,n} acts by zero.
With n = 5, p = 7, lam = (4,0,0,0,0), mu = (2,0,0,0,0) the linkage
condition fails and the slice misses the summand.
"""

from glwedge import level_multiplicity, simple_character, tensor_multiplicity
from glwedge.tensor_oracle import key_theorem_conditions, level_gl_character
from glwedge.weights import linked

lam, mu, p = (4, 0, 0, 0, 0), (2, 0, 0, 0, 0), 7

# mu is linked to lam - eps_1 - eps_5 = (3,0,0,0,-1): the condition fails
print("linked(mu, lam - eps_1 - eps_5):", linked(mu, (3, 0, 0, 0, -1), p))
print("conditions hold:", key_theorem_conditions(lam, mu, p))

print("\n[L(lam) (x) wedge^2 V* : L(mu)] =", tensor_multiplicity(lam, mu, p))

# the whole (1,1)-level of L(4) is a copy of S^2 of the natural GL_3 module
level = level_gl_character(lam, p, slice_only=False)
print("\n(1,1)-level:", dict(level.items()))
print("same as L(2,0,0) for GL_3:", level == simple_character((2, 0, 0), p))
print("multiplicity in the level:", level_multiplicity(lam, mu, p, slice_only=False))

# but E_45 is injective on it, so the slice is empty
sl = level_gl_character(lam, p, slice_only=True)
print("\nslice:", dict(sl.items()))
print("multiplicity in the slice:", level_multiplicity(lam, mu, p, slice_only=True))
