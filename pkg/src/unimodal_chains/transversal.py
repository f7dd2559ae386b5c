"""Raising and lowering along maximal pairs, and the transversal chains.

Both algorithms walk the Hasse diagram one cover at a time while the
spread, degree, and signature stay fixed, so each run stays inside one
signature class.  A chain is stored as its highest-weight element plus
the color sequence read downward; the element list is rebuilt on demand.
"""

from __future__ import annotations

from dataclasses import dataclass

from .posets import Composition, apply_color_down, InconsistencyError
from .statistics import _components, spread


def is_initial(comp: Composition) -> bool:
    """True iff the leading pair (a_0, a_1) is a maximal pair with a_1 = 0."""
    if len(comp) < 2:
        raise ValueError("need at least two entries")
    return comp[1] == 0 and comp[0] == spread(comp)


def is_terminal(comp: Composition) -> bool:
    """Mirror of is_initial at the right end."""
    if len(comp) < 2:
        raise ValueError("need at least two entries")
    return comp[-2] == 0 and comp[-1] == spread(comp)


def _check_pair(comp, i):
    if not 0 <= i <= len(comp) - 2 or comp[i] + comp[i + 1] != spread(comp):
        raise ValueError(f"index {i} is not a maximal pair of {comp}")


def _raise_path(comp, i):
    """Weight-increasing trajectory from comp plus traversed edge colors.

    At a pair (a_i, a_{i+1}) with i >= 1 a unit moves from entry i+1 to
    entry i while a_{i+1} exceeds a_{i-1}; on equality the pair drifts
    one step left.  At the leading pair, a_1 drains into a_0, and the
    run ends when a_1 = 0 (an initial element).
    """
    a = list(comp)
    elems = [comp]
    colors = []
    while True:
        if i >= 1:
            if a[i + 1] > a[i - 1]:
                a[i + 1] -= 1
                a[i] += 1
                elems.append(tuple(a))
                colors.append(i + 1)
            else:
                i -= 1
        else:
            if a[1] == 0:
                return elems, colors
            a[1] -= 1
            a[0] += 1
            elems.append(tuple(a))
            colors.append(1)


def _lower_path(comp, i):
    """Weight-decreasing trajectory from comp plus traversed edge colors.

    Works on the pair with right index j, starting at j = i + 1; drifts
    right on equality and ends at a terminal element (a_{n-1} = 0).
    """
    n = len(comp) - 1
    a = list(comp)
    elems = [comp]
    colors = []
    j = i + 1
    while True:
        if j <= n - 1:
            if a[j - 1] > a[j + 1]:
                a[j - 1] -= 1
                a[j] += 1
                elems.append(tuple(a))
                colors.append(j)
            else:
                j += 1
        else:
            if a[n - 1] == 0:
                return elems, colors
            a[n - 1] -= 1
            a[n] += 1
            elems.append(tuple(a))
            colors.append(n)


def raise_run(comp: Composition, i: int) -> list[Composition]:
    """Run the raising algorithm from the maximal pair at left index i."""
    _check_pair(comp, i)
    return _raise_path(comp, i)[0]


def lower_run(comp: Composition, i: int) -> list[Composition]:
    """Run the lowering algorithm from the maximal pair at left index i."""
    _check_pair(comp, i)
    return _lower_path(comp, i)[0]


@dataclass(frozen=True)
class Chain:
    """Saturated chain: highest-weight element plus downward color sequence."""

    top: Composition
    colors: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.colors)

    def elements(self) -> list[Composition]:
        out = [self.top]
        cur = self.top
        for c in self.colors:
            cur = apply_color_down(cur, c)
            out.append(cur)
        return out

    def bottom(self) -> Composition:
        return self.elements()[-1]

    def to_dict(self) -> dict:
        return {"top": list(self.top), "colors": list(self.colors)}

    @classmethod
    def from_dict(cls, data: dict) -> "Chain":
        return cls(tuple(data["top"]), tuple(data["colors"]))


def transversal_chain(comp: Composition, i: int) -> Chain:
    """The chain through comp at the maximal-pair component containing i.

    Raising ends at an initial element (the top) and lowering at a
    terminal one; comp sits where the two runs are glued.
    """
    _check_pair(comp, i)
    up_elems, up_colors = _raise_path(comp, i)
    _, down_colors = _lower_path(comp, i)
    return Chain(up_elems[-1], tuple(reversed(up_colors)) + tuple(down_colors))


def chains_through(comp: Composition) -> list[Chain]:
    """One transversal chain per component of the maximal index set."""
    _, runs = _components(comp)
    return [transversal_chain(comp, start) for start, _ in runs]


def closed_form_colors(comp: Composition) -> tuple[int, ...]:
    """Color sequence of the chain topped by an initial element.

    Color j occurs a_0 - a_j - a_{j+1} times (a_1 and a_{n+1} read as
    zero).  Exponents are nonnegative for genuine initial elements; a
    negative one is flagged, never clamped.
    """
    if not is_initial(comp):
        raise ValueError(f"{comp} is not initial")
    n = len(comp) - 1
    ext = comp + (0,)
    a0 = comp[0]
    out = []
    for j in range(1, n + 1):
        e = a0 - ext[j] - ext[j + 1]
        if e < 0:
            raise InconsistencyError(f"negative color multiplicity at {j} for {comp}")
        out.extend([j] * e)
    return tuple(out)


def closed_form_terminal(comp: Composition) -> Composition:
    """Terminal element of the chain topped by an initial element."""
    if not is_initial(comp):
        raise ValueError(f"{comp} is not initial")
    return comp[2:] + (0, comp[0])


def flip_chain(chain: Chain) -> Chain:
    """Image of a chain under the rank-flipping involution.

    The flipped bottom becomes the top and color j becomes n + 1 - j in
    reversed order; the element set is the entrywise flip of the
    original's.
    """
    n = len(chain.top) - 1
    bottom = chain.bottom()
    return Chain(bottom[::-1], tuple(n + 1 - c for c in reversed(chain.colors)))
