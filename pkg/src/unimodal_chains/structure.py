"""Split-extension structure of signature classes and chain decompositions.

Each signature class projects onto a smaller class by maximal-pair
removal; prepending spread-sized blocks is a section of the projection,
and every fiber is order-isomorphic to a small Young's lattice whose
coordinates count raising steps.  Iterating this picture decomposes the
whole composition poset into saturated chains whose per-length tops are
centered and unimodal, which is exactly the unimodality certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .posets import (
    Composition,
    InconsistencyError,
    cover_color,
    count_compositions,
    from_gaps,
    leq,
    rank,
    upper_covers,
    weight,
)
from .qpoly import gaussian, is_unimodal
from .statistics import (
    Signature,
    _components,
    chain_length,
    degree,
    remove_maximal_pairs,
    signature,
    signature_class,
    signature_classes,
    signature_mass,
    spread,
)
from .transversal import Chain, flip_chain, transversal_chain


def project(a: Composition) -> Composition:
    """Maximal-pair removal in its role as the bundle projection."""
    return remove_maximal_pairs(a)


def section(b: Composition, r: int, s: int) -> Composition:
    """Prepend r blocks (s, 0); the order-preserving section of project().

    Requires s > spread(b) so the prepended blocks carry the maximal
    pairs; r = 0 returns b unchanged.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return b
    if s <= spread(b):
        raise ValueError(f"section needs s > spread({b}) = {spread(b)}")
    return (s, 0) * r + b


def _raise_to_initial(a: Composition) -> tuple[int, Composition]:
    """Bulk-run the raising algorithm from the leftmost maximal pair.

    Returns the number of unit moves and the initial element reached.
    Identical trajectory to raise_run, with each pair's moves applied in
    one arithmetic step.
    """
    s, runs = _components(a)
    i = runs[0][0] if runs else 0
    v = list(a)
    steps = 0
    while i >= 1:
        t = v[i + 1] - v[i - 1]
        steps += t
        v[i] += t
        v[i + 1] -= t
        i -= 1
    steps += v[1]
    v[0] += v[1]
    v[1] = 0
    return steps, tuple(v)


def first_coordinate_closed_form(a: Composition) -> int:
    """Raising-step count to reach an initial element, in closed form.

    With (a_i, a_{i+1}) the leftmost maximal pair and s the spread, the
    count is (i+1)s - a_i - 2(a_0 + ... + a_{i-1}).
    """
    if sum(a) == 0:
        return 0
    s, runs = _components(a)
    i = runs[0][0]
    return (i + 1) * s - a[i] - 2 * sum(a[:i])


def fiber_coordinates(a: Composition, b: Composition) -> tuple[int, ...]:
    """Coordinates of a within the fiber over b: one raising count per level.

    Each level counts the moves needed to reach an initial element,
    strips its leading block, and recurses; after degree(a) levels the
    residue must be b.  The counts are weakly increasing and bounded by
    the class's transversal length; violations are hard failures.
    """
    if remove_maximal_pairs(a) != b:
        raise ValueError(f"{b} is not the projection of {a}")
    r = degree(a)
    ell = chain_length(len(a) - 1, signature(a))
    cur = a
    out = []
    for _ in range(r):
        steps, init = _raise_to_initial(cur)
        out.append(steps)
        cur = init[2:]
    if cur != b:
        raise InconsistencyError(f"stripping {a} left {cur}, expected {b}")
    if any(x > y for x, y in zip(out, out[1:])) or (out and not 0 <= out[-1] <= ell):
        raise InconsistencyError(f"non-monotone fiber coordinates {out} for {a}")
    return tuple(out)


def fiber_element(lam: tuple[int, ...], b: Composition, s: int) -> Composition:
    """Inverse of fiber_coordinates: rebuild the element from coordinates.

    Starting at the section image, follow the transversal chain at the
    leading component for lam[-1] steps, then the new element's chain
    for lam[-2] steps, and so on down to lam[0].
    """
    r = len(lam)
    if any(x > y for x, y in zip(lam, lam[1:])) or any(x < 0 for x in lam):
        raise ValueError(f"coordinates {lam} not weakly increasing and nonnegative")
    x = (s, 0) * r + tuple(b)
    for t in reversed(lam):
        ch = transversal_chain(x, 0)
        if t > ch.length:
            raise ValueError(f"coordinate {t} exceeds chain length {ch.length}")
        x = ch.elements()[t]
    if remove_maximal_pairs(x) != tuple(b):
        raise InconsistencyError(f"rebuilt element {x} does not project to {b}")
    return x


def _fiber_by_coordinates(b, r, s, ell):
    """All fiber elements keyed by coordinates, sharing chain prefixes.

    Walks the coordinate tree from the section image; the chain from a
    partial element is materialized once per distinct coordinate tail,
    so the whole fiber costs about one chain step per element.
    """
    out = {}

    def walk(x, remaining, cap, tail):
        if remaining == 0:
            out[tail[::-1]] = x
            return
        ch = transversal_chain(x, 0)
        if ch.length != ell:
            raise InconsistencyError(
                f"chain of length {ch.length} != {ell} inside fiber over {b}"
            )
        elems = ch.elements()
        for t in range(min(cap, ch.length) + 1):
            walk(elems[t], remaining - 1, t, tail + (t,))

    walk((s, 0) * r + tuple(b), r, ell, ())
    return out


def _partition_suffix_matrix(elements):
    """Rows of suffix sums (number of parts >= j for j = 1..n)."""
    arr = np.array(elements, dtype=np.int64)
    if arr.size == 0:
        return arr.reshape(len(elements), 0)
    rev = arr[:, ::-1].cumsum(axis=1)[:, ::-1]
    return rev[:, 1:]


def _leq_matrix(suffixes, block=1024):
    """Boolean comparability matrix from suffix-sum rows."""
    count = suffixes.shape[0]
    out = np.empty((count, count), dtype=bool)
    if suffixes.shape[1] == 0:
        out[:] = True
        return out
    for lo in range(0, count, block):
        hi = min(lo + block, count)
        out[lo:hi] = (suffixes[lo:hi, None, :] <= suffixes[None, :, :]).all(axis=2)
    return out


@dataclass
class SplitExtensionReport:
    n: int
    d: Signature
    r: int
    ell: int
    base_signature: Signature
    fiber_count: int
    degenerate: bool
    checks: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict[str, list] = field(default_factory=dict)
    defect_counts: dict[str, int] = field(default_factory=dict)

    def passed(self) -> bool:
        return all(self.checks.values())

    def _fail(self, name, detail):
        self.checks[name] = False
        self.defect_counts[name] = self.defect_counts.get(name, 0) + 1
        self.counterexamples.setdefault(name, [])
        if len(self.counterexamples[name]) < 10:
            self.counterexamples[name].append(detail)


def verify_split_extension(n: int, d: Signature) -> SplitExtensionReport:
    """Exhaustively check the fibration picture for one signature class.

    Verifies surjectivity of the projection onto the base class, the
    section property and its order-preservation, that the coordinate
    maps are mutually inverse rank-shifted order isomorphisms from each
    fiber to the coordinate lattice, and cover-level order preservation
    of the projection.  Failures are recorded, never raised.
    """
    d = tuple(d)
    cls = signature_class(n, d)
    if not cls:
        raise ValueError(f"empty class {d} for n={n}")
    m = signature_mass(d)
    s = sum(d)
    top = min(cls, key=rank)
    r = degree(top)
    ell = chain_length(n, d)
    base_d = d[r:]
    report = SplitExtensionReport(
        n=n, d=d, r=r, ell=ell, base_signature=base_d, fiber_count=0, degenerate=False
    )
    if r == 0:
        report.checks["base_case"] = True
        return report

    base = signature_class(n - 2 * r, base_d)
    base_set = set(base)
    cls_set = set(cls)
    report.fiber_count = len(base)
    report.degenerate = any(s <= spread(b) for b in base)

    fibers: dict = {}
    report.checks["projection_into_base"] = True
    for a in cls:
        image = remove_maximal_pairs(a)
        if image not in base_set:
            report._fail("projection_into_base", {"element": a, "image": image})
        fibers.setdefault(image, []).append(a)
    report.checks["projection_surjective"] = set(fibers) == base_set
    if not report.checks["projection_surjective"]:
        report.counterexamples["projection_surjective"] = [
            {"missing": sorted(base_set - set(fibers))[:10]}
        ]

    report.checks["section_property"] = True
    for b in base:
        image = (s, 0) * r + b
        if image not in cls_set or remove_maximal_pairs(image) != b:
            report._fail("section_property", {"base": b, "section": image})

    # order-preservation of the section, all comparable base pairs at once
    if len(base) > 1:
        base_leq = _leq_matrix(_partition_suffix_matrix(base))
        img_leq = _leq_matrix(
            _partition_suffix_matrix([(s, 0) * r + b for b in base])
        )
        ok = bool((~base_leq | img_leq).all())
        report.checks["section_order_preserving"] = ok
        if not ok:
            bad = np.argwhere(base_leq & ~img_leq)[:10]
            report.counterexamples["section_order_preserving"] = [
                {"base_pair": (base[i], base[j])} for i, j in bad
            ]
    else:
        report.checks["section_order_preserving"] = True

    expected_fiber = comb(r + ell, r)
    report.checks["fiber_sizes"] = True
    report.checks["coordinates_bijective"] = True
    report.checks["coordinates_mutually_inverse"] = True
    report.checks["first_coordinate_closed_form"] = True
    report.checks["fiber_rank_shift"] = True
    report.checks["fiber_cover_correspondence"] = True
    report.checks["fiber_order_isomorphism"] = True
    for b in base:
        fiber = fibers.get(b, [])
        if len(fiber) != expected_fiber:
            report._fail("fiber_sizes", {"base": b, "size": len(fiber)})
            continue
        try:
            coords = {a: fiber_coordinates(a, b) for a in fiber}
            rebuilt = _fiber_by_coordinates(b, r, s, ell)
        except (InconsistencyError, ValueError) as exc:
            report._fail("coordinates_bijective", {"base": b, "error": str(exc)})
            continue
        if sorted(coords.values()) != sorted(rebuilt):
            report._fail("coordinates_bijective", {"base": b})
            continue
        sec_rank = rank((s, 0) * r + b)
        fiber_set = set(fiber)
        for a, lam in coords.items():
            if rebuilt[lam] != a:
                report._fail("coordinates_mutually_inverse", {"element": a, "lam": lam})
            if rank(a) != sec_rank + sum(lam):
                report._fail("fiber_rank_shift", {"element": a, "lam": lam})
            if lam and first_coordinate_closed_form(a) != lam[0]:
                report._fail(
                    "first_coordinate_closed_form", {"element": a, "lam": lam}
                )
        # covers inside the fiber must match covers of coordinate vectors
        for a, lam in coords.items():
            for _, up in upper_covers(a):
                if up not in fiber_set:
                    continue
                lam_up = coords[up]
                diffs = [i for i in range(r) if lam[i] != lam_up[i]]
                if len(diffs) != 1 or lam_up[diffs[0]] != lam[diffs[0]] + 1:
                    report._fail(
                        "fiber_cover_correspondence",
                        {"lower": a, "upper": up, "coords": (lam, lam_up)},
                    )
            for i in range(r):
                bumped = lam[:i] + (lam[i] + 1,) + lam[i + 1 :]
                if (i + 1 < r and bumped[i] > bumped[i + 1]) or bumped[i] > ell:
                    continue
                other = rebuilt[bumped]
                if cover_color(a, other) is None:
                    report._fail(
                        "fiber_cover_correspondence",
                        {"lower": a, "upper": other, "coords": (lam, bumped)},
                    )
        if r >= 2:
            # full pairwise order check against the coordinate lattice
            elems = list(fiber)
            lam_rows = np.array([coords[a] for a in elems], dtype=np.int64)
            fib_leq = _leq_matrix(_partition_suffix_matrix(elems))
            lam_leq = _leq_matrix(lam_rows)
            if not bool((fib_leq == lam_leq).all()):
                bad = np.argwhere(fib_leq != lam_leq)[:10]
                for i, j in bad:
                    report._fail(
                        "fiber_order_isomorphism",
                        {"pair": (elems[i], elems[j])},
                    )
        # r == 1: the fiber is one saturated chain, whose induced order is
        # total; bijection + cover correspondence already pin the isomorphism.

    report.checks["projection_order_preserving"] = True
    report.checks["stripped_cover_preserved"] = True
    if n >= 2:
        for a in cls:
            pa = remove_maximal_pairs(a)
            for _, up in upper_covers(a):
                if up not in cls_set:
                    continue
                pu = remove_maximal_pairs(up)
                if pa != pu and not leq(pa, pu):
                    report._fail(
                        "projection_order_preserving", {"lower": a, "upper": up}
                    )
                if not _same_transversal_chain(a, up):
                    qq = _raise_to_initial(a)[1][2:]
                    pp = _raise_to_initial(up)[1][2:]
                    if cover_color(qq, pp) is None:
                        report._fail(
                            "stripped_cover_preserved",
                            {"lower": a, "upper": up, "stripped": (qq, pp)},
                        )
    return report


def _same_transversal_chain(a: Composition, up: Composition) -> bool:
    """True iff the cover a -> up is a step of some transversal chain of a."""
    _, runs = _components(a)
    for start, _ in runs:
        ch = transversal_chain(a, start)
        elems = ch.elements()
        pos = elems.index(a)
        if pos + 1 < len(elems) and elems[pos + 1] == up:
            return True
    return False


@dataclass
class ClassDecomposition:
    signature: Signature
    r: int
    ell: int
    chains: tuple[Chain, ...]


@dataclass
class Decomposition:
    n: int
    m: int
    classes: tuple[ClassDecomposition, ...]
    index: dict[Composition, int] = field(compare=False, repr=False)

    def chains(self) -> list[Chain]:
        return [ch for cd in self.classes for ch in cd.chains]


_decompose_cache: dict = {}
_DECOMPOSE_CACHE_LIMIT = 50_000


def decompose_class(n: int, d: Signature) -> list[Chain]:
    """Partition one signature class into saturated chains.

    Transversal fibers do the job when the class's degree is 1; for
    degree r >= 2 the fibers are coordinate lattices, so the recursive
    decomposition of the matching composition poset is transported
    through the coordinate maps.  Length-0 classes fall apart into
    singletons.
    """
    d = tuple(d)
    cls = signature_class(n, d)
    if not cls:
        return []
    top = min(cls, key=rank)
    r = degree(top)
    s = sum(d)
    ell = chain_length(n, d)
    if ell == 0 or r == 0:
        return [Chain(a, ()) for a in cls]
    base = signature_class(n - 2 * r, d[r:])
    if r == 1:
        return [transversal_chain((s, 0) + b, 0) for b in base]
    sub_chains = _decompose_chains(r, ell)
    out = []
    for b in base:
        rebuilt = _fiber_by_coordinates(b, r, s, ell)
        for sub in sub_chains:
            images = [rebuilt[from_gaps(e)] for e in sub.elements()]
            colors = []
            for low, high in zip(images, images[1:]):
                c = cover_color(low, high)
                if c is None:
                    raise InconsistencyError(
                        f"transported chain not saturated at {low} -> {high}"
                    )
                colors.append(c)
            out.append(Chain(images[0], tuple(colors)))
    return out


def _decompose_chains(n: int, m: int) -> tuple[Chain, ...]:
    key = (n, m)
    cached = _decompose_cache.get(key)
    if cached is None:
        cached = tuple(decompose_all(n, m).chains())
        if count_compositions(n, m) <= _DECOMPOSE_CACHE_LIMIT:
            _decompose_cache[key] = cached
    return cached


def decompose_all(n: int, m: int) -> Decomposition:
    """Partition the whole (n, m) composition poset into saturated chains.

    Chains are grouped by signature class; element coverage and
    disjointness are checked and any defect is a hard failure.
    """
    if n < 0 or m < 0:
        raise ValueError("need n >= 0 and m >= 0")
    classes = signature_classes(n, m)
    out = []
    index: dict[Composition, int] = {}
    chain_id = 0
    for d, cls in classes.items():
        if not cls:
            continue
        chains = decompose_class(n, d)
        top = min(cls, key=rank)
        out.append(
            ClassDecomposition(d, degree(top), chain_length(n, d), tuple(chains))
        )
        for ch in chains:
            for e in ch.elements():
                if e in index:
                    raise InconsistencyError(f"element {e} covered twice")
                index[e] = chain_id
            chain_id += 1
    total = count_compositions(n, m)
    if len(index) != total:
        raise InconsistencyError(
            f"decomposition covers {len(index)} of {total} elements"
        )
    return Decomposition(n=n, m=m, classes=tuple(out), index=index)


def flip_stability(dec: Decomposition) -> tuple[bool, list[Chain]]:
    """Check the chain set is closed under the rank-flipping involution.

    Saturated chains with equal element sets are equal as (top, colors),
    so membership of each flipped chain settles set-level stability.
    """
    keys = {(ch.top, ch.colors) for ch in dec.chains()}
    offenders = []
    for ch in dec.chains():
        fl = flip_chain(ch)
        if (fl.top, fl.colors) not in keys:
            offenders.append(ch)
    return not offenders, offenders


@dataclass
class UnimodalityCertificate:
    n: int
    m: int
    top_weights_by_length: dict[int, dict[int, int]]
    symmetric_lengths: dict[int, bool]
    unimodal_lengths: dict[int, bool]
    reconstruction: tuple
    matches_gaussian: bool

    def passed(self) -> bool:
        return (
            all(self.symmetric_lengths.values())
            and all(self.unimodal_lengths.values())
            and self.matches_gaussian
        )


def unimodality_certificate(dec: Decomposition) -> UnimodalityCertificate:
    """Certify rank-unimodality from the chain decomposition alone.

    Chains of one length are summarized by their multiset of top
    weights; each multiset must be symmetric about the length and
    unimodal, and stacking all chains must rebuild the exact rank
    generating function.
    """
    by_length: dict[int, dict[int, int]] = {}
    hist = [0] * (dec.m * dec.n + 1)
    for ch in dec.chains():
        top_w = weight(ch.top)
        counts = by_length.setdefault(ch.length, {})
        counts[top_w] = counts.get(top_w, 0) + 1
        base_rank = rank(ch.top)
        for t in range(ch.length + 1):
            hist[base_rank + t] += 1
    symmetric = {}
    unimodal = {}
    for length, counts in by_length.items():
        symmetric[length] = all(
            counts.get(2 * length - w, 0) == c for w, c in counts.items()
        )
        lo, hi = min(counts), max(counts)
        seq = [counts.get(w, 0) for w in range(lo, hi + 1, 2)]
        unimodal[length] = is_unimodal(tuple(seq))
    reconstruction = tuple(hist)
    return UnimodalityCertificate(
        n=dec.n,
        m=dec.m,
        top_weights_by_length=by_length,
        symmetric_lengths=symmetric,
        unimodal_lengths=unimodal,
        reconstruction=reconstruction,
        matches_gaussian=reconstruction == gaussian(dec.m, dec.n),
    )


def decomposition_to_dict(dec: Decomposition) -> dict:
    return {
        "n": dec.n,
        "m": dec.m,
        "classes": [
            {
                "signature": list(cd.signature),
                "r": cd.r,
                "ell": cd.ell,
                "chains": [ch.to_dict() for ch in cd.chains],
            }
            for cd in dec.classes
        ],
    }


def decomposition_from_dict(data: dict) -> Decomposition:
    classes = tuple(
        ClassDecomposition(
            tuple(cd["signature"]),
            cd["r"],
            cd["ell"],
            tuple(Chain.from_dict(c) for c in cd["chains"]),
        )
        for cd in data["classes"]
    )
    index: dict[Composition, int] = {}
    chain_id = 0
    for cd in classes:
        for ch in cd.chains:
            for e in ch.elements():
                index[e] = chain_id
            chain_id += 1
    return Decomposition(n=data["n"], m=data["m"], classes=classes, index=index)


def clear_caches() -> None:
    _decompose_cache.clear()
