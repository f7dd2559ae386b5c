# Young's lattice L(m,n) and its composition model
# -------------------------------------------------
# A partition with at most m parts, each of size at most n, is encoded
# by its multiplicity vector (a_0, ..., a_n): entry i counts the parts
# equal to i.  The encoding is a rank-preserving poset isomorphism, so
# everything downstream works with plain integer tuples.

from unimodal_chains import (
    conjugate,
    count_compositions,
    enumerate_compositions,
    from_counts,
    leq,
    rank,
    to_counts,
    to_gaps,
    upper_covers,
    weight,
)

parts = (0, 1, 1, 3)  # a partition with 4 parts bounded by 3
comp = to_counts(parts, 3)
print(f"partition {parts}  ->  multiplicities {comp}")
print(f"rank (sum of parts): {rank(comp)}")
print(f"weight (mn - 2 rank): {weight(comp)}")
print(f"round trip: {from_counts(comp)}")
print()

# Conjugation flips the Ferrers diagram; the gap encoding of the
# conjugate equals the multiplicity encoding of the original.
print(f"conjugate of {parts} inside the 4x3 box: {conjugate(parts, 3)}")
print(f"gap encoding of the conjugate: {to_gaps(conjugate(parts, 3), 4)}")
print()

# The whole poset for m = n = 2, with its cover relations.
print("all of the (n=2, m=2) poset, lexicographic:")
for c in enumerate_compositions(2, 2):
    ups = ", ".join(f"{u} (color {col})" for col, u in upper_covers(c))
    print(f"  {c}  rank {rank(c)}  covers above: {ups or '-'}")
print()

print(f"element count equals C(4,2): {count_compositions(2, 2)}")
print(f"(2,0,0) below (0,0,2): {leq((2, 0, 0), (0, 0, 2))}")
print(f"(1,0,1) and (0,2,0) incomparable: "
      f"{not leq((1, 0, 1), (0, 2, 0)) and not leq((0, 2, 0), (1, 0, 1))}")
