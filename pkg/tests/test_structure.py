from math import comb

import pytest

from unimodal_chains.posets import (
    InconsistencyError,
    count_compositions,
    leq,
    rank,
)
from unimodal_chains.qpoly import gaussian
from unimodal_chains.statistics import signature_class, signature_classes
from unimodal_chains.structure import (
    decompose_all,
    decompose_class,
    decomposition_from_dict,
    decomposition_to_dict,
    fiber_coordinates,
    fiber_element,
    first_coordinate_closed_form,
    flip_stability,
    project,
    section,
    unimodality_certificate,
    verify_split_extension,
)


def test_section_examples():
    assert section((0,), 1, 2) == (2, 0, 0)
    assert section((1, 0), 2, 2) == (2, 0, 2, 0, 1, 0)
    assert section((3, 1), 0, 99) == (3, 1)
    with pytest.raises(ValueError):
        section((2, 0), 1, 2)  # needs s > spread(b)


def test_project_examples():
    assert project((0, 1, 1)) == (0,)
    assert project((2, 0, 1, 0, 0, 2)) == (1, 0)
    assert project(section((1, 0), 2, 2)) == (1, 0)


def test_fiber_coordinates_examples():
    assert fiber_coordinates((0, 1, 1), (0,)) == (3,)
    assert fiber_coordinates((2, 0, 0), (0,)) == (0,)
    assert fiber_coordinates((0, 0, 2), (0,)) == (4,)
    with pytest.raises(ValueError):
        fiber_coordinates((0, 1, 1), (1,))


def test_first_coordinate_closed_form_examples():
    assert first_coordinate_closed_form((0, 1, 1)) == 3
    assert first_coordinate_closed_form((2, 0, 0)) == 0
    assert first_coordinate_closed_form((0, 2, 0)) == 2


def test_first_coordinate_matches_steps_exhaustive():
    from unimodal_chains.posets import enumerate_compositions
    from unimodal_chains.statistics import degree

    for comp in enumerate_compositions(5, 4):
        if sum(comp) == 0:
            continue
        lam = fiber_coordinates(comp, project(comp))
        if degree(comp) >= 1:
            assert lam[0] == first_coordinate_closed_form(comp)


def test_fiber_element_examples():
    assert fiber_element((0,), (0,), 2) == (2, 0, 0)
    assert fiber_element((3,), (0,), 2) == (0, 1, 1)
    with pytest.raises(ValueError):
        fiber_element((2, 1), (0,), 2)  # not weakly increasing


def test_fiber_bijection_small_class():
    # the 15-element coordinate lattice of each fiber over Q_1(1)
    cls = signature_class(5, (0, 1, 1))
    assert len(cls) == 30
    for b in [(1, 0), (0, 1)]:
        fiber = [a for a in cls if project(a) == b]
        assert len(fiber) == comb(2 + 4, 2)
        seen = set()
        for a in fiber:
            lam = fiber_coordinates(a, b)
            assert fiber_element(lam, b, 2) == a
            seen.add(lam)
        assert len(seen) == len(fiber)


def test_verify_split_extension_plain_class():
    rep = verify_split_extension(2, (2, 0))
    assert rep.r == 1 and rep.ell == 4 and rep.fiber_count == 1
    assert not rep.degenerate
    assert rep.passed()


def test_verify_split_extension_degenerate_singleton():
    rep = verify_split_extension(2, (0, 1))
    assert rep.degenerate
    assert rep.fiber_count == 1
    assert rep.passed()


def test_verify_split_extension_two_fibers():
    rep = verify_split_extension(5, (0, 1, 1))
    assert rep.r == 2 and rep.ell == 4 and rep.fiber_count == 2
    # the fibration itself is sound ...
    for name in (
        "projection_into_base", "projection_surjective", "section_property",
        "section_order_preserving", "fiber_sizes", "coordinates_bijective",
        "coordinates_mutually_inverse", "fiber_rank_shift",
        "fiber_cover_correspondence", "fiber_order_isomorphism",
    ):
        assert rep.checks[name], name
    # ... while the projection is not order-preserving on this class: a
    # known defect of the claimed stronger property, kept as a census
    assert not rep.checks["projection_order_preserving"]
    assert not rep.checks["stripped_cover_preserved"]


def test_projection_order_defect_witness():
    # regression pin for the documented counterexample pair
    low, high = (1, 1, 0, 1, 0, 2), (1, 0, 1, 1, 0, 2)
    from unimodal_chains.posets import cover_color
    from unimodal_chains.statistics import signature

    assert cover_color(low, high) is not None
    assert signature(low) == signature(high) == (0, 1, 1)
    assert project(low) == (0, 1) and project(high) == (1, 0)
    assert leq(project(high), project(low))
    assert not leq(project(low), project(high))


def test_decompose_class_examples():
    chains = decompose_class(2, (2, 0))
    assert len(chains) == 1 and chains[0].length == 4
    chains = decompose_class(2, (0, 1))
    assert len(chains) == 1 and chains[0].length == 0
    chains = decompose_class(5, (0, 1, 1))
    assert sum(ch.length + 1 for ch in chains) == 30
    covered = {e for ch in chains for e in ch.elements()}
    assert covered == set(signature_class(5, (0, 1, 1)))


def test_decompose_all_examples():
    dec = decompose_all(2, 2)
    assert sorted(ch.length for ch in dec.chains()) == [0, 4]
    dec0 = decompose_all(0, 9)
    assert [ch.length for ch in dec0.chains()] == [0]
    dec1 = decompose_all(1, 6)
    assert [ch.length for ch in dec1.chains()] == [6]


@pytest.mark.parametrize("n,m", [(2, 2), (3, 3), (4, 4), (5, 5), (4, 2), (2, 6)])
def test_decompose_all_partitions_poset(n, m):
    dec = decompose_all(n, m)
    seen = set()
    for ch in dec.chains():
        for e in ch.elements():
            assert e not in seen
            seen.add(e)
    assert len(seen) == count_compositions(n, m)
    assert set(dec.index) == seen


@pytest.mark.parametrize("n,m", [(2, 2), (3, 3), (4, 4), (5, 5), (6, 3)])
def test_decompose_all_flip_stable(n, m):
    ok, offenders = flip_stability(decompose_all(n, m))
    assert ok, offenders


def test_certificate_2_2():
    cert = unimodality_certificate(decompose_all(2, 2))
    assert cert.top_weights_by_length == {4: {4: 1}, 0: {0: 1}}
    assert cert.passed()
    assert cert.reconstruction == (1, 1, 2, 1, 1)


def test_certificate_reconstructs_gaussian():
    for n, m in [(3, 3), (4, 4), (5, 5), (1, 7), (6, 2)]:
        cert = unimodality_certificate(decompose_all(n, m))
        assert cert.passed()
        assert cert.reconstruction == gaussian(m, n)


def test_certificate_single_chain_poset():
    cert = unimodality_certificate(decompose_all(1, 5))
    assert cert.passed()
    assert cert.top_weights_by_length == {5: {5: 1}}


def test_fiber_rank_shift_formula():
    # ranks inside a fiber are the section rank plus the coordinate mass
    cls = signature_class(5, (0, 1, 1))
    for b in [(1, 0), (0, 1)]:
        base_rank = rank(section(b, 2, 2))
        for a in cls:
            if project(a) == b:
                lam = fiber_coordinates(a, b)
                assert rank(a) == base_rank + sum(lam)


def test_decomposition_json_round_trip():
    dec = decompose_all(3, 3)
    data = decomposition_to_dict(dec)
    back = decomposition_from_dict(data)
    assert back.n == dec.n and back.m == dec.m
    assert back.classes == dec.classes
    assert back.index == dec.index


def test_decompose_rejects_bad_input():
    with pytest.raises(ValueError):
        decompose_all(-1, 2)
