"""Catalog of small complexes with canonical matchings, and global assembly.

Every fiber of an Artinian reduction with ``r <= 4`` original generators
reduces to a simplicial complex on at most four vertices. The shipped data
file lists one complex per isomorphism class (29 of them) with an acyclic
matching on its faces. A fiber is matched by finding its class, relabelling
the stored matching and lifting it back through ``phi``; the union over all
lattice keys is a matching of ``G_I``.

Matchings on a complex are stored on its faces (``P, P - {j}``). Lifted to a
fiber they point the other way, since ``phi`` reverses inclusion; the
precedence test at load time is done in that lifted orientation.
"""
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import permutations

import numpy as np

from . import _kernels
from . import subsets as ss
from .errors import FaceBudgetExceeded, MorseResError, UnsupportedError
from .fibers import lift_matching, strip_fiber
from .morse import Matching, verify_bw
from .simplicial import SimplicialComplex

CATALOG_VERTEX_LIMIT = 4
SEARCH_FACE_LIMIT = 16


class CatalogError(MorseResError):
    """The shipped catalog failed its load-time verification."""


@dataclass(frozen=True)
class CatalogEntry:
    complex: SimplicialComplex
    matching: Matching
    critical_faces: tuple

    @property
    def nverts(self):
        return ss.size(self.complex.used_vertices())


def _lifted(faces, edges, ground):
    """Complemented faces, partner array and critical cells in the lifted orientation."""
    comp = {ground ^ f for f in faces}
    partner = np.full(1 << max(ground.bit_length(), 1), -1, dtype=np.int64)
    for big, small in edges:
        a, b = ground ^ small, ground ^ big
        partner[a] = b
        partner[b] = a
    crit = sorted((c for c in comp if partner[c] < 0), key=ss.sort_key)
    return comp, partner, crit


def adjacent_precedences(faces, edges, ground):
    """Critical pairs of adjacent size related by precedence after lifting.

    Paths are confined to the complemented faces; they form one fiber once
    lifted, and a precedence path between equal labels cannot leave it.
    """
    comp, partner, crit = _lifted(faces, edges, ground)
    q = max(ground.bit_length(), 1)
    allowed = np.zeros(1 << q, dtype=np.uint8)
    for c in comp:
        allowed[c] = 1
    out = []
    for high in crit:
        lows = [c for c in crit if ss.size(c) == ss.size(high) - 1]
        if not lows:
            continue
        seen = _kernels.reach(partner, q, list(ss.subsets_of_size(high, ss.size(high) - 1)), allowed)
        out.extend((ground ^ high, ground ^ low) for low in lows if seen[low])
    return out


def check_entry(cx, matching):
    """Reason string if ``matching`` is unusable on ``cx``, else None."""
    faces = cx.faces
    for big, small in matching.edges:
        if big not in faces or small not in faces:
            return f"edge ({ss.fmt(big)}, {ss.fmt(small)}) leaves the complex"
    if matching.shared_vertex() is not None:
        return "edges share a face"
    ground = cx.vertices
    width = max(ground.bit_length(), 1)
    if _kernels.find_cycle(matching.partner_array(width), width) is not None:
        return "matching has a directed cycle"
    if adjacent_precedences(faces, matching.edges, ground):
        return "critical faces of adjacent size are related by precedence"
    return None


def _critical(cx, matching):
    used = matching.vertices()
    return tuple(f for f in cx.sorted_faces() if f not in used)


def _load_records():
    text = resources.files("morseres").joinpath("data/catalog.json").read_text()
    return json.loads(text)["entries"]


@lru_cache(maxsize=None)
def catalog():
    """The 29 entries, each verified on load."""
    entries = []
    for rec in _load_records():
        facets = [ss.as_mask(f) for f in rec["facets"]]
        cx = SimplicialComplex.from_facets(facets)
        m = Matching((ss.as_mask(a), ss.as_mask(b)) for a, b in rec["matching"])
        reason = check_entry(cx, m)
        if reason:
            raise CatalogError(f"catalog entry {cx!r}: {reason}")
        entries.append(CatalogEntry(cx, m, _critical(cx, m)))
    if len(entries) != 29:
        raise CatalogError(f"expected 29 entries, found {len(entries)}")
    for i, a in enumerate(entries):
        for b in entries[i + 1:]:
            if _find_perm(a.complex, b.complex) is not None:
                raise CatalogError(f"entries {a.complex!r} and {b.complex!r} are isomorphic")
    return tuple(entries)


def _profile(cx):
    return ss.size(cx.used_vertices()), cx.f_vector()


def _find_perm(cx, target):
    """Lexicographically first bijection of used vertices carrying ``cx`` onto ``target``."""
    if _profile(cx) != _profile(target):
        return None
    src = ss.members(cx.used_vertices())
    dst = ss.members(target.used_vertices())
    for image in permutations(dst):
        mapping = dict(zip(src, image))
        if {_image(f, mapping) for f in cx.faces} == target.faces:
            return mapping
    return None


def _image(mask, mapping):
    return ss.as_mask(mapping[j] for j in ss.members(mask))


@lru_cache(maxsize=4096)
def _match_faces(faces):
    cx = SimplicialComplex(faces, check=False)
    if ss.size(cx.used_vertices()) > CATALOG_VERTEX_LIMIT:
        raise UnsupportedError(
            f"complex {cx!r} uses more than {CATALOG_VERTEX_LIMIT} vertices"
        )
    for k, entry in enumerate(catalog()):
        mapping = _find_perm(cx, entry.complex)
        if mapping is not None:
            return k, tuple(sorted(mapping.items()))
    raise AssertionError(f"no catalog entry matches {cx!r}")


def match_complex(delta):
    """``(entry, mapping)`` with ``mapping`` sending used vertices of ``delta`` to the entry's."""
    k, mapping = _match_faces(delta.faces)
    return catalog()[k], dict(mapping)


def _relabel_matching(m, mapping):
    return Matching((_image(a, mapping), _image(b, mapping)) for a, b in m.edges)


# exhaustive fallback -------------------------------------------------------


def _covering_pairs(faces):
    out = []
    for f in sorted(faces, key=ss.sort_key):
        for j in ss.members(f):
            g = f & ~(1 << (j - 1))
            out.append((f, g))
    return out


def search_matching(cx, face_limit=SEARCH_FACE_LIMIT):
    """Largest acyclic matching on the faces of ``cx`` passing ``check_entry``.

    Branch and bound over the covering pairs in (size, mask) order; ties are
    broken by the first matching found, so the result is deterministic.
    """
    if len(cx) > face_limit:
        raise FaceBudgetExceeded(f"{len(cx)} faces exceed the search limit {face_limit}")
    pairs = _covering_pairs(cx.faces)
    width = max(cx.vertices.bit_length(), 1)
    best = [None, -1]
    chosen = []
    used = set()

    def acyclic():
        partner = np.full(1 << width, -1, dtype=np.int64)
        for a, b in chosen:
            partner[a] = b
            partner[b] = a
        return _kernels.find_cycle(partner, width) is None

    def rec(i):
        free = len(cx) - len(used)
        if len(chosen) + free // 2 <= best[1]:
            return
        if i == len(pairs):
            m = Matching(chosen)
            if check_entry(cx, m) is None:
                best[0], best[1] = m, len(chosen)
            return
        a, b = pairs[i]
        if a not in used and b not in used:
            chosen.append((a, b))
            used.update((a, b))
            if acyclic():  # cycles persist when edges are added, so prune here
                rec(i + 1)
            chosen.pop()
            used.difference_update((a, b))
        rec(i + 1)

    rec(0)
    return best[0]


@lru_cache(maxsize=None)
def _searched(k):
    return search_matching(catalog()[k].complex)


# fiber matchings and assembly ----------------------------------------------


def _require_small(I, allow_unsupported):
    if not I.is_artinian:
        raise UnsupportedError("catalog matchings need an Artinian reduction")
    if I.r > CATALOG_VERTEX_LIMIT and not allow_unsupported:
        raise UnsupportedError(
            f"r = {I.r} original generators; the catalog covers r <= {CATALOG_VERTEX_LIMIT}. "
            "Pass allow_unsupported=True to try the exhaustive search instead"
        )


def delta_matching(delta, method="catalog"):
    """A matching on the faces of ``delta`` for the given method."""
    if method not in ("catalog", "search"):
        raise ValueError("method must be 'catalog' or 'search'")
    if ss.size(delta.used_vertices()) > CATALOG_VERTEX_LIMIT:
        return search_matching(delta)
    k, mapping = _match_faces(delta.faces)
    mapping = dict(mapping)
    back = {v: k_ for k_, v in mapping.items()}
    stored = catalog()[k].matching if method == "catalog" else _searched(k)
    return _relabel_matching(stored, back)


def fiber_matching(I, u, method="catalog", allow_unsupported=False):
    _require_small(I, allow_unsupported)
    red = strip_fiber(I, u)
    return lift_matching(red, delta_matching(red.delta, method))


def assemble_matching(I, method="catalog", allow_unsupported=False):
    """Union of the fiber matchings over all lattice keys (lexicographic order)."""
    _require_small(I, allow_unsupported)
    edges = []
    for u in I.table().keys:
        edges.extend(fiber_matching(I, u, method, allow_unsupported).edges)
    return Matching(edges)


def restrict_to_J(M, r):
    """Edges of ``M`` with both endpoints inside ``[r]``."""
    return M.restrict(ss.full(r))


@dataclass
class Assembly:
    matching: Matching
    report: object
    restricted: Matching
    restricted_report: object


def assemble_with_reports(I, method="catalog", allow_unsupported=False):
    M = assemble_matching(I, method, allow_unsupported)
    MJ = restrict_to_J(M, I.r)
    J = I.base_ideal()
    return Assembly(M, verify_bw(I, M), MJ, verify_bw(J, MJ))
