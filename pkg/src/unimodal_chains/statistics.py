"""Spread, degree, and signature statistics on the composition poset.

The spread of a composition is the largest sum of two adjacent entries;
a maximal pair is an adjacent pair attaining it.  Removing as many
maximal pairs as possible drops mass and length in a controlled way,
and iterating the removal yields the signature: a vector refining both
statistics that is constant on saturated transversal chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .posets import (
    Composition,
    InconsistencyError,
    count_compositions,
    enumerate_compositions,
)

Signature = tuple  # (d_0, ..., d_k) with k = n//2


def spread(comp: Composition) -> int:
    """Max adjacent-entry sum; by convention the mass when n <= 1, 0 if empty."""
    n = len(comp) - 1
    if n < 0:
        return 0
    if n == 0:
        return comp[0]
    return max(comp[i] + comp[i + 1] for i in range(n))


def _components(comp):
    """Spread plus the maximal runs of left indices of maximal pairs."""
    n = len(comp) - 1
    if n < 1:
        return spread(comp), []
    sums = [comp[i] + comp[i + 1] for i in range(n)]
    s = max(sums)
    runs = []
    start = None
    for i, v in enumerate(sums):
        if v == s:
            if start is None:
                start = i
        elif start is not None:
            runs.append((start, i - 1))
            start = None
    if start is not None:
        runs.append((start, n - 1))
    return s, runs


def maximal_pairs(comp: Composition) -> tuple[int, ...]:
    """Left indices i with comp[i] + comp[i+1] equal to the spread."""
    _, runs = _components(comp)
    return tuple(i for start, end in runs for i in range(start, end + 1))


@dataclass(frozen=True)
class MaximalStructure:
    spread: int
    mset: tuple[int, ...]
    components: tuple[tuple[int, int], ...]
    active: tuple[int, ...]


def maximal_structure(comp: Composition) -> MaximalStructure:
    s, runs = _components(comp)
    mset = tuple(i for start, end in runs for i in range(start, end + 1))
    active = tuple(i for start, end in runs for i in range(start, end + 2))
    return MaximalStructure(s, mset, tuple(runs), active)


def degree(comp: Composition) -> int:
    """Edge-cover number of the maximal index set; 0 when n <= 0."""
    _, runs = _components(comp)
    return sum((end - start) // 2 + 1 for start, end in runs)


def remove_maximal_pairs(comp: Composition) -> Composition:
    """Delete the largest possible number of maximal pairs.

    Every component of the maximal index set spans an active block of
    entries; even-length runs delete their whole block, odd-length runs
    leave a single entry carrying the block's left value.  Survivors
    keep their relative order.  The result has degree() fewer pairs and
    mass reduced by degree()*spread().
    """
    _, runs = _components(comp)
    if not runs:
        return comp
    out = []
    pos = 0
    for start, end in runs:
        out.extend(comp[pos:start])
        if (end - start) % 2 == 1:
            out.append(comp[start])
        pos = end + 2
    out.extend(comp[pos:])
    return tuple(out)


@lru_cache(maxsize=None)
def signature(comp: Composition) -> Signature:
    """Signature vector (d_0, ..., d_k), k = n//2; () for the empty tuple.

    Defined by iterated maximal-pair removal: with r the degree and s
    the spread, the vector starts with r-1 zeros, then s minus the
    spread of the removal image, then the image's signature.  For
    n <= 1 the signature is the single entry m.
    """
    n = len(comp) - 1
    if n < 0:
        return ()
    m = sum(comp)
    if n <= 1:
        return (m,)
    s, runs = _components(comp)
    r = sum((end - start) // 2 + 1 for start, end in runs)
    image = remove_maximal_pairs(comp)
    d = (0,) * (r - 1) + (s - spread(image),) + signature(image)
    if len(d) != n // 2 + 1:
        raise InconsistencyError(f"signature length for {comp}: {d}")
    if sum((j + 1) * dj for j, dj in enumerate(d)) != m:
        raise InconsistencyError(f"signature mass for {comp}: {d}")
    if m > 0 and sum(d) != s:
        raise InconsistencyError(f"signature spread for {comp}: {d}")
    return d


def clear_caches() -> None:
    """Drop memoized signatures (useful between large sweeps)."""
    signature.cache_clear()
    _classes_cache.clear()


def signature_mass(d: Signature) -> int:
    """Mass of any composition with signature d: sum of (j+1)*d_j."""
    return sum((j + 1) * dj for j, dj in enumerate(d))


def chain_length(n: int, d: Signature) -> int:
    """Common length of all transversal chains in the class (n, d)."""
    return sum((n - 2 * j) * dj for j, dj in enumerate(d))


def enumerate_signatures(n: int, m: int) -> list[Signature]:
    """All length-(n//2 + 1) vectors of nonnegative d_j with mass m."""
    if n == -1:
        return [()] if m == 0 else []
    if n < -1 or m < 0:
        raise ValueError("need n >= -1 and m >= 0")
    return _sigs(n // 2, m)


def _sigs(k, m):
    if k == 0:
        return [(m,)]
    out = []
    for dk in range(m // (k + 1) + 1):
        for prefix in _sigs(k - 1, m - (k + 1) * dk):
            out.append(prefix + (dk,))
    return out


_classes_cache: dict = {}
_CLASSES_CACHE_LIMIT = 50_000


def signature_classes(n: int, m: int) -> dict[Signature, tuple[Composition, ...]]:
    """Group all of the (n, m) composition poset by signature.

    Classes appear in the enumerate_signatures order; empty classes are
    kept (as empty tuples) so callers can report them.  Elements within
    a class are in lexicographic order.
    """
    key = (n, m)
    cached = _classes_cache.get(key)
    if cached is not None:
        return cached
    groups: dict = {d: [] for d in enumerate_signatures(n, m)}
    for comp in enumerate_compositions(n, m):
        d = signature(comp)
        if d not in groups:
            raise InconsistencyError(f"signature {d} of {comp} not enumerated")
        groups[d].append(comp)
    result = {d: tuple(cs) for d, cs in groups.items()}
    if count_compositions(n, m) <= _CLASSES_CACHE_LIMIT:
        _classes_cache[key] = result
    return result


def signature_class(n: int, d: Signature) -> tuple[Composition, ...]:
    """All compositions of the (n, implied-mass) poset with signature d."""
    m = signature_mass(d)
    if n >= 0 and len(d) != n // 2 + 1:
        raise ValueError(f"signature {d} has wrong length for n={n}")
    return signature_classes(n, m)[tuple(d)]


def highest_weight(n: int, d: Signature) -> Composition:
    """The class's unique highest-weight element: zeros at odd positions,
    suffix sums of d at even positions.

    Raises InconsistencyError if the constructed element's signature is
    not d; that flags a boundary defect of the closed form rather than
    silently returning a wrong representative.
    """
    k = n // 2
    if len(d) != k + 1:
        raise ValueError(f"signature {d} has wrong length for n={n}")
    h = [0] * (n + 1)
    acc = 0
    for i in range(k, -1, -1):
        acc += d[i]
        h[2 * i] = acc
    h = tuple(h)
    if signature(h) != tuple(d):
        raise InconsistencyError(
            f"highest-weight formula gives {h} with signature {signature(h)}, not {d}"
        )
    return h
