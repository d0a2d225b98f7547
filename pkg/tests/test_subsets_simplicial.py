import pytest
from hypothesis import given, strategies as st

from morseres import subsets as ss
from morseres.errors import IndexOutOfRange, MorseResError
from morseres.simplicial import SimplicialComplex


def test_mask_roundtrip():
    assert ss.as_mask([1, 4, 5]) == 0b11001
    assert ss.members(0b11001) == (1, 4, 5)
    assert ss.as_mask([]) == 0
    assert ss.fmt(0) == "{}"
    assert ss.fmt(ss.as_mask([2, 3])) == "{2,3}"


def test_mask_rejects_bad_indices():
    with pytest.raises(IndexOutOfRange):
        ss.as_mask([0])
    with pytest.raises(IndexOutOfRange):
        ss.check_range(ss.as_mask([4]), 3)


def test_sort_key_orders_by_size_then_mask():
    masks = [0b100, 0b011, 0b001, 0b111, 0b010]
    assert sorted(masks, key=ss.sort_key) == [0b001, 0b010, 0b100, 0b011, 0b111]


@given(st.integers(0, 255), st.integers(0, 8))
def test_subsets_of_size(mask, k):
    subs = list(ss.subsets_of_size(mask, k))
    assert len(subs) == len(set(subs))
    assert all(ss.size(s) == k and s & ~mask == 0 for s in subs)
    from math import comb
    assert len(subs) == comb(ss.size(mask), k)


def test_complex_basics():
    tri = SimplicialComplex.simplex([1, 2, 3])
    assert len(tri) == 8
    assert tri.f_vector() == (1, 3, 3, 1)
    assert tri.facets == [0b111]
    assert repr(tri) == "<123>"
    bd = tri.skeleton(1)
    assert bd.f_vector() == (1, 3, 3)
    assert SimplicialComplex.void().is_void()
    assert SimplicialComplex([0]).dim == -1


def test_complex_requires_downward_closed():
    with pytest.raises(MorseResError):
        SimplicialComplex([0, 0b11])


def test_join_and_relabel():
    a = SimplicialComplex.from_facets([ss.as_mask([1])])
    b = SimplicialComplex.from_facets([ss.as_mask([2]), ss.as_mask([3])])
    j = a.join(b)
    assert j.facets == [ss.as_mask([1, 2]), ss.as_mask([1, 3])]
    r = j.relabel({1: 3, 2: 1, 3: 2})
    assert r.facets == [ss.as_mask([1, 3]), ss.as_mask([2, 3])]
