"""Generators: which cyclic permutations contain a block diagram
=================================================================

A cyclic permutation generates a block diagram when the diagram's arcs
all appear among its own.  With m blocks and l isolated vertices there
are exactly 2**(m-l) * (m-1)! generators; three independent routes
enumerate them and must agree.
"""

from arcdiagrams import (
    arc_set,
    canonical_generator,
    common_generators,
    complement,
    complete_table,
    count_generators,
    cut_set,
    enumerate_generators,
    generators_oracle,
    parse_bdiagram,
    parse_perm,
)

b = parse_bdiagram("1 2 3 | 4 7 8 | 5 6")
print("diagram:", b)

# concatenating the blocks is always one generator
sigma = canonical_generator(b)
print("canonical generator:", sigma)
print("contains the arcs?", b.arcs() <= arc_set(sigma).arcs)

# the count comes from a closed formula
print("count:", count_generators(b), "(m=3 blocks, no singletons)")

# route 1: arrange blocks around the cycle, optionally reversing each
by_blocks = enumerate_generators(b)
# route 2: complete the missing rows of the arc table by backtracking
by_table = complete_table(b)
# route 3: filter the whole universe
by_scan = generators_oracle(b)
print("routes agree:", by_blocks == by_table == by_scan)
for p in by_blocks[:4]:
    print("   ", p, "...")

# the cut set records which arcs a generator adds on top of the diagram;
# it always has one arc per block
cut = cut_set(sigma, b)
print("cut set of the canonical generator:", sorted(cut), "size", len(cut))

# those arcs form the complement diagram; complementing twice comes back
other = parse_perm("1 2 3 8 7 5 4 6")
small = parse_bdiagram("1 6 4 | 2 3 8 | 5 7")
comp = complement(other, small)
print("complement of", small, "in", other, "is", comp)
print("twice:", complement(other, comp) == small.normalized())

# two diagrams share generators when one arc set contains the other --
# and occasionally even without that (small n leaves little room)
wide = parse_bdiagram("1 6 | 2 3 | 4 8 7 | 5")
narrow = parse_bdiagram("3 2 1 6 | 5 4 8 7")
shared = common_generators(wide, narrow)
print()
print(f"{wide}  vs  {narrow}")
print("arc subset?", shared.first_in_second, "| shared generators:", len(shared.generators))
tiny = common_generators(parse_bdiagram("1 2 | 3"), parse_bdiagram("2 3 | 1"))
print("n=3 twist: no subset relation, yet", len(tiny.generators), "common generators")
