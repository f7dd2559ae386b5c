# The raising and lowering algorithms and their transversal chains
# -----------------------------------------------------------------
# Starting from any maximal pair, raising walks up in weight until the
# leading entry holds the whole spread (an initial element); lowering
# walks down until the trailing entry does (a terminal element).  The
# two walks glue into a saturated chain on which spread, degree, and
# signature never change.

from unimodal_chains import (
    chains_through,
    closed_form_colors,
    closed_form_terminal,
    flip,
    flip_chain,
    lower_run,
    raise_run,
    signature,
    transversal_chain,
    weight,
)

a = (0, 1, 1)
print(f"raising from {a} at the maximal pair with left index 1:")
for step in raise_run(a, 1):
    print(f"  {step}  weight {weight(step)}  signature {signature(step)}")
print()

print("lowering from (2,0,0):")
for step in lower_run((2, 0, 0), 0):
    print(f"  {step}  weight {weight(step)}")
print()

ch = transversal_chain(a, 1)
print(f"the chain through {a}: top {ch.top}, colors {ch.colors}")
print(f"  elements: {ch.elements()}")
print(f"  color sequence from the closed form: {closed_form_colors(ch.top)}")
print(f"  terminal element from the closed form: {closed_form_terminal(ch.top)}")
print()

# one chain per run of maximal indices
b = (2, 0, 1, 0, 0, 2)
print(f"{b} lies on {len(chains_through(b))} distinct chains:")
for c in chains_through(b):
    print(f"  top {c.top}, colors {c.colors}")
print()

# the chain set is closed under the rank-flipping involution
mirrored = flip_chain(ch)
print(f"flip of the chain through {a}: top {mirrored.top}, colors {mirrored.colors}")
print(f"same as the chain computed at {flip(ch.bottom())}: "
      f"{mirrored == transversal_chain(flip(ch.bottom()), 0)}")
