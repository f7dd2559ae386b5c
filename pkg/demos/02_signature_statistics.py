# Spread, degree, and the signature classification
# -------------------------------------------------
# The spread is the largest sum of two adjacent entries; removing as
# many spread-sized adjacent pairs as possible shrinks the tuple, and
# iterating the removal produces the signature, a vector that splits
# each poset into centered classes.

from unimodal_chains import (
    degree,
    enumerate_signatures,
    highest_weight,
    maximal_structure,
    remove_maximal_pairs,
    signature,
    signature_classes,
    spread,
)

a = (2, 0, 1, 0, 0, 2)
ms = maximal_structure(a)
print(f"element {a}")
print(f"  adjacent sums attain spread {ms.spread} at left indices {ms.mset}")
print(f"  runs of maximal indices: {ms.components}; active entries {ms.active}")
print(f"  degree (edge-cover count of the runs): {degree(a)}")
print(f"  after removing the maximal pairs: {remove_maximal_pairs(a)}")
print(f"  signature: {signature(a)}")
print()

# the recursion in slow motion
cur = a
while len(cur) > 2:
    nxt = remove_maximal_pairs(cur)
    print(f"  {cur}  spread={spread(cur)} degree={degree(cur)}  ->  {nxt}")
    cur = nxt
print()

# all signatures with mass 5 for n = 5, with class sizes and tops
print("signature classes of the (n=5, m=5) poset:")
classes = signature_classes(5, 5)
for d in enumerate_signatures(5, 5):
    cls = classes[d]
    top = highest_weight(5, d)
    print(f"  {d}: {len(cls):3} elements, highest weight {top}")
print(f"  total {sum(len(c) for c in classes.values())} = C(10,5) = 252")
