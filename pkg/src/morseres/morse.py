"""Matchings on the directed hypercube, Morse complexes and Betti tables.

``G_q`` has the subsets of ``[q]`` as vertices and an edge ``T -> T - {j}``
for every ``j in T``. For a matching ``M`` the graph ``G^M`` reverses the
matched edges. A homogeneous acyclic matching whose precedence-adjacent
critical cells never share a label supports a minimal free resolution; its
critical cells then count the multigraded Betti numbers.
"""
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from . import subsets as ss
from .errors import (
    MalformedEdgeError,
    NotMinimalError,
    SizeMismatchError,
    WidthLimitExceeded,
)
from .monomial import DEFAULT_WIDTH_LIMIT, Monomial

BW_WIDTH_LIMIT = 16


def _edge(pair):
    a, b = pair
    a, b = ss.as_mask(a), ss.as_mask(b)
    if ss.size(a) < ss.size(b):
        a, b = b, a
    diff = a ^ b
    if b & ~a or ss.size(diff) != 1:
        raise MalformedEdgeError(
            f"({ss.fmt(a)}, {ss.fmt(b)}) is not a covering pair (T, T - {{j}})"
        )
    return a, b


def _edge_key(e):
    return ss.sort_key(e[0]), ss.sort_key(e[1])


class Matching:
    """A set of covering pairs ``(T, T - {j})``, stored larger set first.

    The pairs need not be vertex-disjoint; ``check_matching`` reports that.
    Pairs may be given in either order.
    """

    __slots__ = ("edges",)

    def __init__(self, pairs=()):
        self.edges = frozenset(_edge(p) for p in pairs)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.sorted_edges())

    def __contains__(self, pair):
        return _edge(pair) in self.edges

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def __or__(self, other):
        return Matching(self.edges | other.edges)

    def __repr__(self):
        body = ", ".join(f"({ss.fmt(a)},{ss.fmt(b)})" for a, b in self.sorted_edges())
        return f"Matching([{body}])"

    def sorted_edges(self):
        return sorted(self.edges, key=_edge_key)

    def vertices(self):
        out = set()
        for a, b in self.edges:
            out.add(a)
            out.add(b)
        return out

    def shared_vertex(self):
        """A vertex lying on two edges, or None."""
        seen = set()
        for a, b in self.sorted_edges():
            for v in (a, b):
                if v in seen:
                    return v
                seen.add(v)
        return None

    def max_mask(self):
        out = 0
        for a, _ in self.edges:
            out |= a
        return out

    def restrict(self, ground):
        """Edges whose endpoints lie inside the subset ``ground``."""
        ground = ss.as_mask(ground)
        return Matching(e for e in self.edges if not e[0] & ~ground)

    def partner_array(self, q):
        """``partner[v]`` is the vertex matched with ``v``, -1 if unmatched."""
        partner = np.full(1 << q, -1, dtype=np.int64)
        for a, b in self.edges:
            partner[a] = b
            partner[b] = a
        return partner

    def to_lists(self):
        return [[list(ss.members(a)), list(ss.members(b))] for a, b in self.sorted_edges()]


@dataclass
class MatchingReport:
    """Outcome of ``check_matching``.

    ``is_acyclic`` is None when the edges are not vertex-disjoint, because
    ``G^M`` is only defined for a matching.
    """

    is_matching: bool
    is_homogeneous: bool
    is_acyclic: object
    cycle_witness: tuple = None
    offending_pair: tuple = None
    shared_vertex: int = None

    @property
    def ok(self):
        return self.is_matching and self.is_homogeneous and bool(self.is_acyclic)


def _check_edges(I, M):
    for a, _ in M.edges:
        ss.check_range(a, I.q)


def check_matching(I, M, max_width=DEFAULT_WIDTH_LIMIT):
    _check_edges(I, M)
    ids = I.table(max_width).ids
    offending = None
    for a, b in M.sorted_edges():
        if ids[a] != ids[b]:
            offending = (a, b)
            break
    shared = M.shared_vertex()
    if shared is not None:
        return MatchingReport(False, offending is None, None, None, offending, shared)
    cycle = _kernels.find_cycle(M.partner_array(I.q), I.q)
    if cycle is not None:
        cycle = tuple(int(v) for v in cycle)
    return MatchingReport(True, offending is None, cycle is None, cycle, offending)


def _assert_cycle(I, M, cycle):
    n = len(cycle)
    partner = M.partner_array(I.q)
    for k, v in enumerate(cycle):
        w = cycle[(k + 1) % n]
        up = partner[v] == w and w & v == v and w != v
        down = v & w == w and ss.size(v ^ w) == 1 and partner[v] != w
        assert up or down, f"{ss.fmt(v)} -> {ss.fmt(w)} is not an edge of G^M"


def find_cycle(I, M):
    """A directed cycle of ``G^M`` as a vertex tuple (closing edge implied), or None.

    For homogeneous ``M`` the cycle is checked to have even length at least six
    and a single label.
    """
    _check_edges(I, M)
    shared = M.shared_vertex()
    if shared is not None:
        raise MalformedEdgeError(f"edges share the vertex {ss.fmt(shared)}; not a matching")
    cycle = _kernels.find_cycle(M.partner_array(I.q), I.q)
    if cycle is None:
        return None
    cycle = tuple(int(v) for v in cycle)
    _assert_cycle(I, M, cycle)
    ids = I.table().ids
    if all(ids[a] == ids[b] for a, b in M.edges):
        assert len(cycle) % 2 == 0 and len(cycle) >= 6, f"cycle of length {len(cycle)}"
        assert len({int(ids[v]) for v in cycle}) == 1, "cycle crosses labels"
    return cycle


def _popcounts(q):
    counts = np.zeros(1 << q, dtype=np.int64)
    for j in range(q):
        lo = 1 << j
        counts[lo:2 * lo] = counts[:lo] + 1
    return counts


def critical_vertices(I, M):
    """Nonempty subsets on no matching edge, ascending by (size, mask)."""
    _check_edges(I, M)
    partner = M.partner_array(I.q)
    partner[0] = 0  # the empty set is never reported
    free = np.nonzero(partner < 0)[0]
    order = np.lexsort((free, _popcounts(I.q)[free]))
    return [int(v) for v in free[order]]


def _sources(high, k):
    return list(ss.subsets_of_size(high, k))


def _reached(I, M, partner, high, k, allowed=None):
    if allowed is None:
        allowed = np.ones(1 << I.q, dtype=np.uint8)
    return _kernels.reach(partner, I.q, _sources(high, k), allowed)


def _divisible_mask(I, u):
    """uint8 indicator of the subsets whose label is divisible by ``u``."""
    labels = I.table().labels
    return np.all(labels >= np.asarray(u, dtype=np.int64), axis=1).astype(np.uint8)


def _is_homogeneous(I, M):
    ids = I.table().ids
    return all(ids[a] == ids[b] for a, b in M.edges)


def precedes(I, M, low, high):
    """Whether critical ``low`` precedes critical ``high`` (``|high| = |low| + 1``).

    True when ``low`` is a subset of ``high`` or is reached by a directed path
    of ``G^M`` (length zero allowed) from some ``|low|``-subset of ``high``.
    """
    low, high = ss.as_mask(low), ss.as_mask(high)
    ss.check_range(low | high, I.q)
    if ss.size(high) != ss.size(low) + 1:
        raise SizeMismatchError(
            f"|{ss.fmt(high)}| must be |{ss.fmt(low)}| + 1"
        )
    if low & high == low:
        return True
    partner = M.partner_array(I.q)
    allowed = None
    if _is_homogeneous(I, M):
        # labels never increase along G^M, so every path vertex is a multiple of m_low
        allowed = _divisible_mask(I, I.table().labels[low])
    return bool(_reached(I, M, partner, high, ss.size(low), allowed)[low])


@dataclass(frozen=True)
class Cell:
    mask: int
    dim: int
    label: Monomial

    @property
    def indices(self):
        return ss.members(self.mask)


@dataclass
class MorseComplex:
    """Critical cells and the precedence relation between adjacent dimensions."""

    cells: list
    precedence: list = field(default_factory=list)  # (low mask, high mask)

    def by_dimension(self):
        counts = defaultdict(int)
        for c in self.cells:
            counts[c.dim] += 1
        if not counts:
            return ()
        return tuple(counts[d] for d in range(max(counts) + 1))


def morse_complex(I, M, with_precedence=True):
    report = check_matching(I, M)
    if not report.is_matching:
        raise MalformedEdgeError("edges share a vertex; not a matching")
    labels = I.table().labels
    crit = critical_vertices(I, M)
    cells = [Cell(v, ss.size(v) - 1, Monomial(labels[v])) for v in crit]
    prec = []
    if with_precedence:
        partner = M.partner_array(I.q)
        homog = report.is_homogeneous
        by_size = defaultdict(list)
        for v in crit:
            by_size[ss.size(v)].append(v)
        for high in crit:
            k = ss.size(high) - 1
            lows = by_size.get(k)
            if k == 0 or not lows:
                continue
            allowed = None
            if homog:
                # labels along paths from subsets of high divide m_high
                allowed = np.all(labels <= labels[high], axis=1).astype(np.uint8)
            seen = _reached(I, M, partner, high, k, allowed)
            prec.extend((low, high) for low in lows if seen[low])
    return MorseComplex(cells, prec)


class BettiTable:
    """Map ``(i, u) -> rank`` with zero entries omitted."""

    def __init__(self, entries=None):
        self.entries = {}
        for (i, u), rank in (entries or {}).items():
            if rank < 0:
                raise ValueError("negative Betti number")
            if rank:
                self.entries[(int(i), Monomial(u))] = int(rank)

    @classmethod
    def from_cells(cls, cells):
        counts = defaultdict(int)
        for c in cells:
            counts[(c.dim, c.label)] += 1
        return cls(counts)

    def get(self, i, u):
        return self.entries.get((i, Monomial(u)), 0)

    def totals(self):
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        out = [0] * (top + 1)
        for (i, _), rank in self.entries.items():
            out[i] += rank
        return tuple(out)

    def degrees(self, i):
        """Multidegrees in homological degree ``i`` with their ranks."""
        return {u: r for (j, u), r in self.entries.items() if j == i}

    def sorted_entries(self):
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], kv[0][1].degree, kv[0][1]))

    def diff(self, other):
        """Entries where the two tables disagree: ``{(i, u): (self, other)}``."""
        keys = set(self.entries) | set(other.entries)
        out = {}
        for k in keys:
            a, b = self.entries.get(k, 0), other.entries.get(k, 0)
            if a != b:
                out[k] = (a, b)
        return out

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"BettiTable(totals={self.totals()})"


@dataclass
class BWReport:
    """Result of ``verify_bw``; ``offending_pair`` is ``(T', T)`` on failure."""

    passed: bool
    matching: MatchingReport
    offending_pair: tuple = None
    shared_label: Monomial = None
    reason: str = ""


def verify_bw(I, M, allow_large=False):
    """Check that ``M`` is homogeneous, acyclic and has no labelled precedence.

    Only critical pairs with equal labels are tested. For a homogeneous
    matching labels are non-increasing along ``G^M``, so a path between two
    such cells stays inside their common fiber; the search is confined there.
    """
    if I.q > BW_WIDTH_LIMIT and not allow_large:
        raise WidthLimitExceeded(
            f"verify_bw on {I.q} generators; pass allow_large=True to run it anyway"
        )
    report = check_matching(I, M)
    if not report.is_matching:
        return BWReport(False, report, reason="edges share a vertex")
    if not report.is_homogeneous:
        return BWReport(False, report, reason="matching is not homogeneous")
    if not report.is_acyclic:
        return BWReport(False, report, reason="matching has a directed cycle")
    tab = I.table()
    crit = critical_vertices(I, M)
    groups = defaultdict(lambda: defaultdict(list))
    for v in crit:
        groups[int(tab.ids[v])][ss.size(v)].append(v)
    partner = M.partner_array(I.q)
    worst = None
    for key, sizes in groups.items():
        for k, highs in sizes.items():
            lows = sizes.get(k - 1)
            if not lows:
                continue
            allowed = (tab.ids == key).astype(np.uint8)
            for high in highs:
                seen = _reached(I, M, partner, high, k - 1, allowed)
                for low in lows:
                    if seen[low]:
                        cand = (ss.sort_key(high), ss.sort_key(low), low, high)
                        if worst is None or cand < worst:
                            worst = cand
                        break
    if worst is not None:
        low, high = worst[2], worst[3]
        return BWReport(
            False,
            report,
            (low, high),
            Monomial(tab.labels[high]),
            "precedence-adjacent critical cells share a label",
        )
    return BWReport(True, report)


def betti_from_matching(I, M, allow_nonminimal=False):
    """Betti table counted from the critical cells of a BW-matching.

    With ``allow_nonminimal=True`` the count is returned even when the check
    fails; it is then only an upper bound for the minimal Betti numbers.
    """
    rep = verify_bw(I, M)
    if not rep.passed and not allow_nonminimal:
        raise NotMinimalError(f"matching is not a BW-matching: {rep.reason}", rep)
    labels = I.table().labels
    cells = [Cell(v, ss.size(v) - 1, Monomial(labels[v])) for v in critical_vertices(I, M)]
    return BettiTable.from_cells(cells)
