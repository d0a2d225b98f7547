from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

import naive
from corpora import fixture, ideal, small_corpus
from morseres import subsets as ss
from morseres.errors import CharacteristicMismatch, FaceBudgetExceeded
from morseres.monomial import MonomialIdeal, lcm_lattice
from morseres.oracle import SECOND_PRIME, minimal_betti, reduced_homology, upper_koszul
from morseres.simplicial import SimplicialComplex


def as_dict(table):
    return {k: v for k, v in table.entries.items()}


def test_reduced_homology_basics():
    circle = SimplicialComplex.simplex([1, 2, 3]).skeleton(1)
    assert reduced_homology(circle).dims[:3] == (0, 0, 1)
    assert all(d == 0 for d in reduced_homology(SimplicialComplex.simplex([1, 2, 3])).dims)
    assert reduced_homology(SimplicialComplex([0])).degree(-1) == 1
    assert all(d == 0 for d in reduced_homology(SimplicialComplex.void(0b11)).dims)


def test_reduced_homology_torsion_depends_on_field():
    # six-vertex real projective plane: H~_1 = Z/2
    facets = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5),
              (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
    rp2 = SimplicialComplex.from_facets([ss.as_mask(f) for f in facets])
    assert reduced_homology(rp2, 2).degree(1) == 1
    assert reduced_homology(rp2, 3).degree(1) == 0


def test_face_budget():
    with pytest.raises(FaceBudgetExceeded):
        reduced_homology(SimplicialComplex.simplex(range(1, 6)), face_budget=8)


def test_upper_koszul_examples():
    I = fixture("small")
    K = upper_koszul(I, (1, 1, 0))
    assert K.faces == {0}
    assert upper_koszul(I, (1, 0, 0)).is_void()
    assert minimal_betti(I).get(2, (1, 2, 2)) == 1


def test_two_generators():
    J = ideal([(1, 1, 0), (1, 0, 1)], plain=True)
    t = minimal_betti(J)
    assert t.totals() == (2, 1)
    assert t.get(1, (1, 1, 1)) == 1


def test_small_resolution_multidegrees():
    t = minimal_betti(fixture("small"))
    assert t.totals() == (5, 6, 2)
    assert sorted(t.degrees(2)) == [(1, 2, 2), (2, 1, 1)]


def test_double_betti_number():
    I = fixture("double")
    t = minimal_betti(I)
    assert t.get(2, (2, 2, 1, 1)) == 2
    assert naive.taylor_betti(I.generators)[(2, (2, 2, 1, 1))] == 2
    assert as_dict(t) == naive.taylor_betti(I.generators)


def test_routes_and_second_prime_agree_on_fixtures():
    for name in ("small", "mixed", "path", "five", "disjoint", "level", "double"):
        I = fixture(name)
        a = minimal_betti(I, cross_check=SECOND_PRIME)
        assert a == minimal_betti(I, route="complex")


def test_characteristic_mismatch_surfaces():
    # squarefree ideal of the six-vertex projective plane's Stanley-Reisner ring:
    # the Betti numbers differ between characteristic 2 and 3
    facets = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5),
              (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]
    faces = set()
    for f in facets:
        for k in range(4):
            faces.update(frozenset(c) for c in combinations(f, k))
    nonfaces = []
    for k in range(1, 7):
        for c in combinations(range(1, 7), k):
            if frozenset(c) not in faces and all(frozenset(s) in faces for s in combinations(c, k - 1)):
                nonfaces.append(c)
    gens = tuple(tuple(1 if i + 1 in c else 0 for i in range(6)) for c in nonfaces)
    I = MonomialIdeal(gens)
    with pytest.raises(CharacteristicMismatch) as ex:
        minimal_betti(I, p=2, cross_check=3)
    assert ex.value.differences


def test_small_corpus_against_taylor_homology():
    for I in small_corpus(25, seed=99):
        if I.q <= 7:
            assert as_dict(minimal_betti(I)) == naive.taylor_betti(I.generators)


gens_strategy = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 2)] * n).filter(any), min_size=1, max_size=6)
)


@settings(max_examples=40)
@given(gens_strategy)
def test_oracle_properties(gens):
    I = MonomialIdeal(tuple(dict.fromkeys(gens)))
    t = minimal_betti(I)
    minimal = [g for g in I.generators
               if not any(h != g and h.divides(g) for h in I.generators)]
    assert sorted(t.degrees(0)) == sorted(minimal)
    assert all(v == 1 for (i, _), v in t.entries.items() if i == 0)
    totals = t.totals()
    assert sum((-1) ** i * b for i, b in enumerate(totals)) == 1
    assert all(b <= comb(I.q, i + 1) for i, b in enumerate(totals))
    assert set(u for _, u in t.entries) <= set(lcm_lattice(I).keys)
    assert as_dict(t) == naive.taylor_betti(I.generators)
