"""Walk through the two group families and their conjugacy structure.

The wreath group on 2n points is the pair-of-blocks group: two independent
permutations of n points, plus an optional swap of the blocks.  Hidden
subgroups of interest are {1, m} where m is a block-swapping involution.
"""

from cosetlab.groups import (
    Permutation,
    cached_group,
    conjugate,
    involution_class,
    parse_cycles,
)

sym = cached_group("sym:3")
print(f"{sym.spec}: order {sym.order}")
for cls in sym.conjugacy_classes():
    rep = cls.representative
    print(f"  class of {rep} (cycle type {rep.cycle_type()}), size {cls.size}")

t = parse_cycles("(01)", 3)
c = parse_cycles("(012)", 3)
print(f"\ncomposition: (01) * (012) = {t * c}")
print(f"conjugation: (012)^-1 (01) (012) = {conjugate(t, c)}")

wreath = cached_group("wreath:2")
print(f"\n{wreath.spec}: order {wreath.order}")
for cls in wreath.conjugacy_classes():
    print(f"  class of {cls.representative}, size {cls.size}")

M = involution_class(wreath)
print(f"\nblock-swapping involution class: size {M.size}")
for m in M.members:
    square = m * m
    print(f"  m = {m}, m^2 = {square} (identity: {square == wreath.elements[0]})")

# each member is ((gamma, gamma^-1), swap) for some gamma
for m in M.members:
    gamma = m.alpha
    print(f"  alpha = {gamma}, beta = {m.beta}, beta == alpha^-1: {m.beta == gamma.inverse()}")
