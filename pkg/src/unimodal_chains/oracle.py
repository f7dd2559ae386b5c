"""Independent brute-force verification of every statistic and claim.

Each check recomputes its target through a route the optimized code
never takes: partition-side window maxima for spread and degree,
exhaustive removal orders for the removal map, set algebra for class
partitions, and full re-walks of every chain.  Failures are recorded
with reproducible inputs, never raised.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .posets import (
    count_compositions,
    enumerate_compositions,
    flip,
    format_composition,
    from_gaps,
    cover_color,
    rank,
    upper_covers,
    weight,
)
from .qpoly import gaussian, rank_generating_function
from .statistics import (
    chain_length,
    clear_caches,
    degree,
    enumerate_signatures,
    highest_weight,
    maximal_structure,
    remove_maximal_pairs,
    signature,
    signature_classes,
    signature_mass,
    spread,
)
from .structure import (
    decompose_all,
    flip_stability,
    unimodality_certificate,
    verify_split_extension,
)
from .transversal import (
    chains_through,
    closed_form_colors,
    closed_form_terminal,
    flip_chain,
    is_initial,
    is_terminal,
    raise_run,
    transversal_chain,
)
from .posets import InconsistencyError

COUNTEREXAMPLE_CAP = 10
ORDER_INDEPENDENCE_CAP = 3000  # poset size up to which removal orders are explored

# checks reporting a known boundary defect; nonempty censuses here do not
# flip the process exit code unless the waiver is withdrawn
DEFAULT_WAIVED = frozenset(
    ["degree_formula", "projection_order_preserving", "stripped_cover_preserved"]
)


def _repro(comp) -> str:
    return f"unimodal-chains signature '{format_composition(comp)}'"


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexamples: list = field(default_factory=list)
    info: dict = field(default_factory=dict)

    def add(self, detail) -> None:
        self.passed = False
        if len(self.counterexamples) < COUNTEREXAMPLE_CAP:
            self.counterexamples.append(detail)


@dataclass
class VerificationReport:
    scope: str
    n: int
    m: int
    checks: list[CheckResult]
    elapsed: float = 0.0

    def passed(self, waived: frozenset = DEFAULT_WAIVED) -> bool:
        return all(c.passed or c.name in waived for c in self.checks)

    def failed_names(self, waived: frozenset = DEFAULT_WAIVED) -> list[str]:
        return [c.name for c in self.checks if not c.passed and c.name not in waived]

    def to_dict(self, with_timing: bool = False) -> dict:
        # timing is excluded by default so identical invocations render
        # byte-identical output
        out = {
            "scope": self.scope,
            "n": self.n,
            "m": self.m,
        }
        if with_timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        out["checks"] = [
            {
                "name": c.name,
                "passed": c.passed,
                "counterexamples": c.counterexamples,
                "info": c.info,
            }
            for c in self.checks
        ]
        return out

    def to_text(self, waived: frozenset = DEFAULT_WAIVED) -> str:
        lines = [f"[{self.scope}] n={self.n} m={self.m}"]
        for c in self.checks:
            mark = "ok" if c.passed else ("WAIVED" if c.name in waived else "FAIL")
            extra = ""
            if c.info:
                keys = ", ".join(f"{k}={v}" for k, v in sorted(c.info.items())
                                 if not isinstance(v, list))
                if keys:
                    extra = f"  [{keys}]"
            lines.append(f"  {mark:6} {c.name}{extra}")
            for ce in c.counterexamples[:3]:
                lines.append(f"         e.g. {ce}")
        return "\n".join(lines)


def spread_degree_via_partition(comp) -> tuple[int, int]:
    """Spread and degree straight from the partition-side definitions.

    Expands to the partition given by suffix sums, pads with 0 below and
    the mass above, takes the maximum two-apart window difference and
    the edge-cover count of the indices attaining it.
    """
    n = len(comp) - 1
    if n < 1:
        raise ValueError("need n >= 1")
    lam = from_gaps(comp)
    m = sum(comp)
    ext = (0,) + lam + (m,)
    wins = [ext[i + 1] - ext[i - 1] for i in range(1, n + 1)]
    s = max(wins)
    deg = 0
    run = 0
    for v in wins:
        if v == s:
            run += 1
        elif run:
            deg += (run + 1) // 2
            run = 0
    if run:
        deg += (run + 1) // 2
    return s, deg


def _max_removals(comp, s, memo):
    """Outcomes of removing the most adjacent pairs that sum to s."""
    got = memo.get(comp)
    if got is not None:
        return got
    pairs = [i for i in range(len(comp) - 1) if comp[i] + comp[i + 1] == s]
    if not pairs:
        res = (0, frozenset([comp]))
    else:
        best = -1
        outs: set = set()
        for i in pairs:
            k, sub = _max_removals(comp[:i] + comp[i + 2 :], s, memo)
            if k + 1 > best:
                best, outs = k + 1, set(sub)
            elif k + 1 == best:
                outs |= sub
        res = (best, frozenset(outs))
    memo[comp] = res
    return res


def check_statistics(n: int, m: int) -> VerificationReport:
    """Exhaustive statistics checks over one composition poset."""
    t0 = time.time()
    counting = CheckResult("element_count", True)
    partition_side = CheckResult("partition_side_agreement", True)
    flip_removal = CheckResult("flip_removal_commute", True)
    flip_sig = CheckResult("flip_signature_invariant", True)
    sums = CheckResult("signature_sum_identities", True)
    containment = CheckResult("removal_containment", True)
    strict = CheckResult("spread_strict_decrease", True)
    deg_formula = CheckResult("degree_formula", True)
    partition_prop = CheckResult("classes_partition_poset", True)
    class_flip = CheckResult("classes_flip_stable", True)
    class_deg = CheckResult("class_degree_consistent", True)
    unique_top = CheckResult("unique_highest_weight", True)
    empties = CheckResult("empty_class_census", True)
    order_ind = CheckResult("removal_order_independence", True)

    classes = signature_classes(n, m)
    total = 0
    census = []
    spread_boundary = []
    k = n // 2 if n >= 0 else -1
    for comp in enumerate_compositions(n, m):
        total += 1
        d = signature(comp)
        s = spread(comp)
        r = degree(comp)
        image = remove_maximal_pairs(comp)
        if n >= 1:
            ps, pd = spread_degree_via_partition(comp)
            if (ps, pd) != (s, r):
                partition_side.add(
                    {"element": comp, "a_side": (s, r), "partition_side": (ps, pd),
                     "repro": _repro(comp)}
                )
        fl = flip(comp)
        if remove_maximal_pairs(fl) != flip(image):
            flip_removal.add({"element": comp, "repro": _repro(comp)})
        if signature(fl) != d:
            flip_sig.add({"element": comp, "repro": _repro(comp)})
        if (
            len(d) != k + 1
            or signature_mass(d) != m
            or (m > 0 and sum(d) != s)
        ):
            sums.add({"element": comp, "signature": d, "repro": _repro(comp)})
        if len(image) != len(comp) - 2 * r or sum(image) != m - r * s:
            containment.add({"element": comp, "image": image, "repro": _repro(comp)})
        if len(image) >= 3 and spread(image) >= s and m > 0:
            strict.add({"element": comp, "image": image, "repro": _repro(comp)})
        elif m > 0 and len(image) < 3 and spread(image) >= s:
            spread_boundary.append(comp)
        if m > 0:
            formula_r = 1 + min(j for j, dj in enumerate(d) if dj > 0)
            if formula_r != r:
                census.append(comp)

    counting.passed = total == count_compositions(n, m)
    counting.info["count"] = total

    deg_formula.info["census_size"] = len(census)
    deg_formula.info["census"] = [list(c) for c in census]
    if census:
        deg_formula.passed = False
        deg_formula.counterexamples = [
            {"element": c, "repro": _repro(c)} for c in census[:COUNTEREXAMPLE_CAP]
        ]
    strict.info["boundary_census_size"] = len(spread_boundary)
    strict.info["boundary_census"] = [list(c) for c in spread_boundary]

    if sum(len(cls) for cls in classes.values()) != total:
        partition_prop.add({"detail": "class sizes do not sum to poset size"})
    empty = [d for d, cls in classes.items() if not cls]
    empties.info["empty_signatures"] = [list(d) for d in empty]
    empties.info["empty_count"] = len(empty)

    flagged_tops = []
    for d, cls in classes.items():
        if not cls:
            continue
        cset = set(cls)
        if any(flip(a) not in cset for a in cls):
            class_flip.add({"signature": d})
        degs = {degree(a) for a in cls}
        if len(degs) != 1:
            class_deg.add({"signature": d, "degrees": sorted(degs)})
        best_w = max(weight(a) for a in cls)
        tops = [a for a in cls if weight(a) == best_w]
        try:
            h = highest_weight(n, d)
            formula_ok = True
        except InconsistencyError:
            h = None
            formula_ok = False
            flagged_tops.append(list(d))
        if formula_ok:
            if len(tops) != 1 or tops[0] != h:
                unique_top.add({"signature": d, "tops": tops, "formula": h})
        # a failing formula must be a flagged boundary case, which the
        # except branch above just recorded; nothing more to assert here
    unique_top.info["flagged_signatures"] = flagged_tops

    if count_compositions(n, m) <= ORDER_INDEPENDENCE_CAP:
        memos: dict = {}
        for comp in enumerate_compositions(n, m):
            if n < 1 or m == 0:
                continue
            s = spread(comp)
            best, outs = _max_removals(comp, s, memos.setdefault(s, {}))
            if best != degree(comp) or set(outs) != {remove_maximal_pairs(comp)}:
                order_ind.add(
                    {"element": comp, "outcomes": sorted(outs), "repro": _repro(comp)}
                )
        order_ind.info["explored"] = True
    else:
        order_ind.info["explored"] = False
        order_ind.info["skipped_reason"] = (
            f"poset larger than {ORDER_INDEPENDENCE_CAP}; see ORDER_INDEPENDENCE_CAP"
        )

    checks = [
        counting, partition_side, flip_removal, flip_sig, sums, containment,
        strict, deg_formula, partition_prop, class_flip, class_deg, unique_top,
        empties, order_ind,
    ]
    return VerificationReport("statistics", n, m, checks, time.time() - t0)


def check_chains(n: int, m: int) -> VerificationReport:
    """Exhaustive checks of both algorithms and every transversal chain."""
    t0 = time.time()
    bijection = CheckResult("chains_per_component", True)
    invariance = CheckResult("statistic_invariance_on_chains", True)
    saturation = CheckResult("chain_saturation", True)
    uniform = CheckResult("uniform_chain_length", True)
    endpoints = CheckResult("initial_terminal_endpoints", True)
    closed = CheckResult("closed_form_color_sequence", True)
    duality = CheckResult("endpoint_duality", True)
    flip_dual = CheckResult("flip_duality", True)

    classes = signature_classes(n, m)
    for d, cls in classes.items():
        if not cls:
            continue
        cset = set(cls)
        ell = chain_length(n, d)
        for a in cls:
            if n < 1:
                continue
            ms = maximal_structure(a)
            chains = chains_through(a)
            if len(chains) != len(ms.components) or len(
                {(c.top, c.colors) for c in chains}
            ) != len(chains):
                bijection.add({"element": a, "repro": _repro(a)})
            for ch in chains:
                elems = ch.elements()
                if a not in elems:
                    bijection.add({"element": a, "chain": ch.to_dict()})
                if ch.length != ell:
                    uniform.add(
                        {"element": a, "length": ch.length, "expected": ell,
                         "repro": _repro(a)}
                    )
                if any(e not in cset for e in elems):
                    invariance.add({"element": a, "chain": ch.to_dict()})
                # a verified cover forces the rank +1 / weight -2 step
                for low, high in zip(elems, elems[1:]):
                    if cover_color(low, high) is None:
                        saturation.add({"lower": low, "upper": high})
                if m > 0 and not (
                    is_initial(elems[0]) and is_terminal(elems[-1])
                ):
                    endpoints.add({"chain": ch.to_dict()})
            if m > 0 and is_initial(a):
                ch0 = transversal_chain(a, 0)
                if ch0.colors != closed_form_colors(a) or ch0.bottom() != (
                    closed_form_terminal(a)
                ):
                    closed.add({"element": a, "repro": _repro(a)})
                bottom = ch0.bottom()
                rightmost = max(maximal_structure(bottom).mset)
                up = raise_run(bottom, rightmost)
                if up[::-1] != ch0.elements():
                    duality.add({"element": a, "repro": _repro(a)})
                mirrored = transversal_chain(flip(bottom), 0)
                if flip_chain(ch0) != mirrored:
                    flip_dual.add({"element": a, "repro": _repro(a)})

    checks = [bijection, invariance, saturation, uniform, endpoints, closed,
              duality, flip_dual]
    return VerificationReport("chains", n, m, checks, time.time() - t0)


def check_structure(
    n: int, m: int, include_decomposition: bool = True
) -> VerificationReport:
    """Split extensions, the full decomposition, and the certificate.

    The decomposition and certificate can be skipped for very large
    posets; the per-class split-extension checks always run.
    """
    t0 = time.time()
    gen_fun = CheckResult("rank_generating_function", True)
    split_checks: dict[str, CheckResult] = {}
    partition = CheckResult("decomposition_partitions", True)
    tau_stable = CheckResult("decomposition_flip_stable", True)
    certificate = CheckResult("unimodality_certificate", True)

    if rank_generating_function(enumerate_compositions(n, m)) != gaussian(m, n):
        gen_fun.add({"detail": f"rank histogram differs from gaussian({m},{n})"})

    classes = signature_classes(n, m)
    degenerate = []
    for d, cls in classes.items():
        if not cls:
            continue
        rep = verify_split_extension(n, d)
        if rep.degenerate:
            degenerate.append(list(d))
        for name, ok in rep.checks.items():
            agg = split_checks.setdefault(name, CheckResult(name, True))
            if not ok:
                agg.add(
                    {"signature": d,
                     "examples": rep.counterexamples.get(name, [])[:3]}
                )
                agg.info["failing_classes"] = agg.info.get("failing_classes", 0) + 1
                agg.info["failing_pairs"] = (
                    agg.info.get("failing_pairs", 0) + rep.defect_counts[name]
                )
    for agg in split_checks.values():
        agg.info.setdefault("failing_classes", 0)
    if degenerate:
        sec = split_checks.setdefault(
            "section_property", CheckResult("section_property", True)
        )
        sec.info["degenerate_classes"] = degenerate

    checks = [gen_fun, *split_checks.values()]
    if include_decomposition:
        try:
            dec = decompose_all(n, m)
            ok, offenders = flip_stability(dec)
            if not ok:
                for ch in offenders[:COUNTEREXAMPLE_CAP]:
                    tau_stable.add({"chain": ch.to_dict()})
            cert = unimodality_certificate(dec)
            if not cert.passed():
                certificate.add(
                    {
                        "symmetric": cert.symmetric_lengths,
                        "unimodal": cert.unimodal_lengths,
                        "matches_gaussian": cert.matches_gaussian,
                    }
                )
            certificate.info["chains"] = sum(len(c.chains) for c in dec.classes)
        except InconsistencyError as exc:
            partition.add({"error": str(exc)})
        checks += [partition, tau_stable, certificate]
    return VerificationReport("structure", n, m, checks, time.time() - t0)


def sweep_pairs(max_size: int, max_dim: int = 12) -> list[tuple[int, int]]:
    """(n, m) grid, capped per axis and by poset size."""
    return [
        (n, m)
        for n in range(max_dim + 1)
        for m in range(max_dim + 1)
        if count_compositions(n, m) <= max_size
    ]


def run_pair(n: int, m: int, include=("statistics", "chains", "structure")):
    reports = []
    if "statistics" in include:
        reports.append(check_statistics(n, m))
    if "chains" in include:
        reports.append(check_chains(n, m))
    if "structure" in include:
        reports.append(check_structure(n, m))
    return reports


def run_sweep(
    max_size: int = 200_000,
    max_dim: int = 12,
    jobs: int = 1,
    include=("statistics", "chains", "structure"),
) -> list[VerificationReport]:
    """All checks over every (n, m) within the bounds, reports sorted."""
    pairs = sweep_pairs(max_size, max_dim)
    out: list[VerificationReport] = []
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for reports in pool.map(_run_pair_star, [(p, include) for p in pairs]):
                out.extend(reports)
    else:
        for n, m in pairs:
            out.extend(run_pair(n, m, include))
            if count_compositions(n, m) > 50_000:
                clear_caches()
    out.sort(key=lambda r: (r.n, r.m, r.scope))
    return out


def _run_pair_star(args):
    (n, m), include = args
    return run_pair(n, m, include)


# split-extension checks expected to hold with zero exceptions
SPLIT_SOUND_CHECKS = (
    "projection_into_base",
    "projection_surjective",
    "section_property",
    "section_order_preserving",
    "fiber_sizes",
    "coordinates_bijective",
    "coordinates_mutually_inverse",
    "first_coordinate_closed_form",
    "fiber_rank_shift",
    "fiber_cover_correspondence",
    "fiber_order_isomorphism",
)

# checks of the claimed stronger projection property, kept as censuses:
# exhaustive verification finds genuine counterexamples (see the shipped
# projection_order_census golden file)
SPLIT_DEFECT_CHECKS = ("projection_order_preserving", "stripped_cover_preserved")


def run_acceptance_sweep(
    max_size: int = 200_000,
    max_dim: int = 12,
    decomposition_max: int = 50_000,
    jobs: int = 1,
) -> dict[tuple[int, int], dict[str, VerificationReport]]:
    """Every check family over the sweep, keyed by (n, m) then scope.

    Decomposition checks are gated at decomposition_max elements; the
    statistics, chain, and split-extension checks run everywhere.
    """
    pairs = sweep_pairs(max_size, max_dim)
    tasks = [
        (n, m, count_compositions(n, m) <= decomposition_max) for n, m in pairs
    ]
    out: dict = {}
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for (n, m, _), reports in zip(tasks, pool.map(_acceptance_worker, tasks)):
                out[(n, m)] = reports
    else:
        for task in tasks:
            n, m, _ = task
            out[(n, m)] = _acceptance_worker(task)
            if count_compositions(n, m) > 50_000:
                clear_caches()
                from .structure import clear_caches as clear_structure_caches

                clear_structure_caches()
    return out


def _acceptance_worker(task):
    n, m, with_decomposition = task
    return {
        "statistics": check_statistics(n, m),
        "chains": check_chains(n, m),
        "structure": check_structure(n, m, include_decomposition=with_decomposition),
    }
