import json
from importlib import resources

import pytest

from corpora import fixture, ideal, small_corpus
from morseres import subsets as ss
from morseres.catalog import (
    adjacent_precedences,
    assemble_matching,
    assemble_with_reports,
    catalog,
    check_entry,
    fiber_matching,
    match_complex,
    restrict_to_J,
    search_matching,
)
from morseres.errors import UnsupportedError
from morseres.fibers import lift_matching, strip_fiber
from morseres.monomial import lcm_lattice
from morseres.morse import Matching, betti_from_matching, check_matching, critical_vertices, verify_bw
from morseres.oracle import minimal_betti
from morseres.simplicial import SimplicialComplex


def S(*idx):
    return ss.as_mask(idx)


def cx(*facets):
    return SimplicialComplex.from_facets([ss.as_mask(f) for f in facets])


MIXED_CRITICAL = [
    {2, 5, 6, 7}, {1, 2, 5, 7}, {1, 2, 3, 4}, {1, 2, 3, 7}, {2, 5, 6},
    {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 7}, {1, 5, 7},
    {5, 6, 7}, {2, 5, 7}, {2, 6, 7}, {1, 2, 7}, {2, 3, 4},
    {2, 3, 7}, {1, 2, 3}, {1, 4}, {2, 4}, {3, 4},
    {5, 6}, {5, 7}, {1, 5}, {2, 5}, {6, 7},
    {2, 6}, {1, 7}, {2, 7}, {3, 7}, {1, 2},
    {1, 3}, {2, 3}, {1}, {2}, {3},
    {4}, {5}, {6}, {7},
]


def test_catalog_shape():
    entries = catalog()
    assert len(entries) == 29
    assert all(e.nverts <= 4 for e in entries)
    doc = json.loads(resources.files("morseres").joinpath("data/catalog.json").read_text())
    assert doc["format"] == "morseres-catalog/1" and len(doc["entries"]) == 29


def test_catalog_entries_pass_checks():
    for e in catalog():
        assert check_entry(e.complex, e.matching) is None
        sizes = [ss.size(f) for f in e.critical_faces]
        adjacent = [(a, b) for a in e.critical_faces for b in e.critical_faces
                    if ss.size(b) == ss.size(a) + 1]
        if repr(e.complex) == "<1,23,24,34>":
            assert adjacent == [(S(1), S(2, 4))]
            assert not adjacent_precedences(e.complex.faces, e.matching.edges, e.complex.vertices)
        else:
            assert not adjacent, (repr(e.complex), sizes)


def test_catalog_examples():
    by_name = {repr(e.complex): e for e in catalog()}
    e = by_name["<1,23>"]
    assert e.matching.edges == {(S(2), 0), (S(2, 3), S(3))}
    assert e.critical_faces == (S(1),)
    empty = by_name["<>"]
    assert len(empty.matching) == 0 and empty.critical_faces == (0,)
    assert by_name["<1234>"].critical_faces == ()


def test_check_entry_catches_bad_matchings():
    tri = cx({1, 2, 3})
    assert "leaves" in check_entry(tri, Matching([(S(1, 4), S(1))]))
    edge = cx({1, 2})
    # one edge leaves {2} and {1,2} critical, of adjacent size and related
    assert check_entry(edge, Matching([(S(1), 0)])) is not None
    assert check_entry(edge, Matching([(S(1), 0), (S(1, 2), S(2))])) is None


def test_match_complex_examples():
    entry, mapping = match_complex(cx({1, 3}, {2, 3}))
    assert repr(entry.complex) == "<13,23>" and mapping == {1: 1, 2: 2, 3: 3}
    entry, mapping = match_complex(cx({1, 2}, {1, 3}))
    assert repr(entry.complex) == "<13,23>" and mapping == {1: 3, 2: 1, 3: 2}
    entry, mapping = match_complex(cx({1, 2, 3}))
    assert repr(entry.complex) == "<123>" and mapping == {1: 1, 2: 2, 3: 3}
    with pytest.raises(UnsupportedError):
        match_complex(cx({1, 2, 3, 4, 5}))


def test_match_complex_every_relabelling():
    # each entry, relabelled by a vertex shift, still finds itself
    for e in catalog():
        used = ss.members(e.complex.used_vertices())
        if len(used) < 2:
            continue
        shift = {v: used[(k + 1) % len(used)] for k, v in enumerate(used)}
        got, mapping = match_complex(e.complex.relabel(shift))
        assert got is e
        assert e.complex.relabel(shift).relabel(mapping) == e.complex


def test_fiber_matchings_mixed():
    I = fixture("mixed")
    M = fiber_matching(I, (3, 3, 2, 1))
    # identity is the first isomorphism onto the stored <12> entry
    assert M.edges == {(S(1, 2, 3, 5, 6), S(2, 3, 5, 6)), (S(1, 3, 5, 6), S(3, 5, 6))}
    # swapping the two vertices of the fiber complex gives the other canonical choice
    red = strip_fiber(I, (3, 3, 2, 1))
    entry, _ = match_complex(red.delta)
    swapped = Matching((ss.as_mask({1: 2, 2: 1}[j] for j in ss.members(a)),
                        ss.as_mask({1: 2, 2: 1}[j] for j in ss.members(b)))
                       for a, b in entry.matching.edges)
    assert lift_matching(red, swapped).edges == {
        (S(1, 2, 3, 5, 6), S(1, 3, 5, 6)), (S(2, 3, 5, 6), S(3, 5, 6))}
    M = fiber_matching(I, (4, 3, 2, 2))
    assert len(M) == 4
    assert check_matching(I, M).ok
    assert {I.label(v) for v in M.vertices()} == {(4, 3, 2, 2)}
    singles = [u for u, f in lcm_lattice(I).fibers().items() if len(f) == 1]
    assert singles and all(len(fiber_matching(I, u)) == 0 for u in singles)


def test_mixed_assembly():
    I = fixture("mixed")
    asm = assemble_with_reports(I)
    assert len(asm.matching) == 44
    crit = critical_vertices(I, asm.matching)
    assert sorted(crit) == sorted(ss.as_mask(t) for t in MIXED_CRITICAL)
    assert asm.report.passed
    assert betti_from_matching(I, asm.matching).totals() == (7, 15, 13, 4)
    assert len(asm.restricted) == 0 and asm.restricted_report.passed
    J = I.base_ideal()
    assert minimal_betti(J).totals() == (3, 3, 1)


def test_path_assembly():
    I = fixture("path")
    asm = assemble_with_reports(I)
    assert len(asm.matching) == 47
    assert len(critical_vertices(I, asm.matching)) == 33
    assert asm.restricted.edges == {(S(1, 2, 3), S(2, 3))}
    assert asm.report.passed and asm.restricted_report.passed
    assert betti_from_matching(I, asm.matching) == minimal_betti(I)
    J = I.base_ideal()
    assert betti_from_matching(J, asm.restricted) == minimal_betti(J)


def test_cross_fiber_independence():
    I = fixture("path")
    seen = set()
    for u in lcm_lattice(I).keys:
        verts = fiber_matching(I, u).vertices()
        assert not verts & seen
        seen |= verts


def test_r_above_four_rejected():
    I = ideal([(1, 1, 0, 0, 0), (0, 1, 1, 0, 0), (0, 0, 1, 1, 0), (0, 0, 0, 1, 1), (1, 0, 0, 0, 1)])
    with pytest.raises(UnsupportedError):
        assemble_matching(I)


def test_search_reproduces_catalog_counts():
    for e in catalog():
        found = search_matching(e.complex)
        assert found is not None and len(found) == len(e.matching)
        assert check_entry(e.complex, found) is None


def test_search_method_matches_oracle_on_fixtures():
    for name in ("small", "mixed", "path"):
        I = fixture(name)
        M = assemble_matching(I, "search")
        assert verify_bw(I, M).passed
        assert betti_from_matching(I, M) == minimal_betti(I)
        MJ = restrict_to_J(M, I.r)
        assert verify_bw(I.base_ideal(), MJ).passed


def test_search_matches_catalog_betti_on_corpus():
    for I in small_corpus(40, seed=7):
        a = assemble_matching(I)
        b = assemble_matching(I, "search")
        assert verify_bw(I, b).passed
        assert betti_from_matching(I, a) == betti_from_matching(I, b)
