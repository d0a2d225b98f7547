"""Closed forms for Artinian reductions of two-generated ideals.

Here ``I = (u_1, u_2, x_1^{e_1}, ..., x_n^{e_n})`` with ``u_1 = x^a`` and
``u_2 = x^b``. Generator index ``i + 2`` stands for the pure power of
``x_i``; ``X = {3, ..., n + 2}``. All sets below are sets of generator
indices, stored as bitmasks internally and exposed as frozensets.
"""
from dataclasses import dataclass
from math import comb

from . import subsets as ss
from .errors import ClosedFormNotApplicable, SetupViolation
from .monomial import Monomial, scarf_complex
from .morse import BettiTable, Cell, Matching
from .simplicial import SimplicialComplex

ONE = 1 << 0
TWO = 1 << 1


def _require_two(I):
    if not I.is_artinian or I.r != 2:
        raise SetupViolation(
            "this construction needs the Artinian reduction of a two-generated ideal "
            f"(got kind={I.kind}, r={I.r}); use the catalog method for r <= 4",
            "r = 2",
        )


@dataclass(frozen=True)
class PPartition:
    P0: frozenset
    P1: frozenset
    P2: frozenset
    A: frozenset
    B: frozenset
    a: tuple
    b: tuple
    e: tuple

    @property
    def n(self):
        return len(self.e)

    def mask(self, name):
        return ss.as_mask(getattr(self, name))

    @property
    def X(self):
        return ss.full(self.n + 2) & ~(ONE | TWO)


def p_partition(I):
    _require_two(I)
    a, b = I.generators[0], I.generators[1]
    P0, P1, P2, A, B = set(), set(), set(), set(), set()
    for i, (ai, bi) in enumerate(zip(a, b)):
        k = i + 3
        if ai + bi == 0:
            raise SetupViolation(f"x{i + 1} divides neither generator", "a_i + b_i > 0")
        (P0 if ai == bi else P1 if ai > bi else P2).add(k)
        if ai:
            A.add(k)
        if bi:
            B.add(k)
    return PPartition(*(frozenset(s) for s in (P0, P1, P2, A, B)), tuple(a), tuple(b), I.e)


def label_formula(part, T):
    """The four-case label of ``T`` read off from ``a``, ``b`` and ``e``."""
    T = ss.as_mask(T)
    out = []
    for i in range(part.n):
        if T >> (i + 2) & 1:
            out.append(part.e[i])
        elif T & ONE and T & TWO:
            out.append(max(part.a[i], part.b[i]))
        elif T & ONE:
            out.append(part.a[i])
        elif T & TWO:
            out.append(part.b[i])
        else:
            out.append(0)
    return Monomial(out)


def _within(small, big):
    return small & ~big == 0


def _rule_edge(part, T, full):
    """The matching edge with top vertex ``T``, or None."""
    P1, P2, A, B = (part.mask(k) for k in ("P1", "P2", "A", "B"))
    has1, has2 = bool(T & ONE), bool(T & TWO)
    if has1 and has2:
        if _within(P1, T):
            return T ^ ONE
        if _within(P2, T):
            return T ^ TWO
    elif has1:
        if _within(A, T):
            return T ^ ONE
    elif has2:
        if _within(B, T) and T != full ^ ONE:
            return T ^ TWO
    return None


def explicit_matching(I):
    part = p_partition(I)
    q = part.n + 2
    full = ss.full(q)
    edges = []
    for T in range(1, 1 << q):
        low = _rule_edge(part, T, full)
        if low is not None:
            edges.append((T, low))
    return Matching(edges)


def is_admissible(part, T):
    """Admissibility in the sense of Algorithm 1's definition.

    ``T`` meets ``{1, 2}``; if ``1 not in T`` it contains ``P0, P2`` and 2; if
    ``2 not in T`` it contains ``P0, P1`` and 1.
    """
    T = ss.as_mask(T)
    P0, P1, P2 = part.mask("P0"), part.mask("P1"), part.mask("P2")
    if not T & (ONE | TWO):
        return False
    if not T & ONE and not _within(P0 | P2 | TWO, T):
        return False
    if not T & TWO and not _within(P0 | P1 | ONE, T):
        return False
    return True


def _strict_admissible(part, T):
    # the condition forced by equal labels: B and 2 when 1 is missing, A and 1 when 2 is
    A, B = part.mask("A"), part.mask("B")
    if not T & (ONE | TWO):
        return False
    if not T & ONE and not _within(B | TWO, T):
        return False
    if not T & TWO and not _within(A | ONE, T):
        return False
    return True


def algorithm1_matching(I, literal=False):
    """Greedy construction by decreasing size.

    ``literal=True`` uses ``is_admissible`` as written; that test is weaker
    than equal labels require whenever ``P1 & B`` or ``P2 & A`` is nonempty
    and then admits non-homogeneous edges. The default uses the label-exact
    test with ``A`` and ``B``. The final complementation step is the identity
    on the pairs built here, which already live in ``G_I``.
    """
    part = p_partition(I)
    q = part.n + 2
    full = ss.full(q)
    admissible = is_admissible if literal else _strict_admissible
    # m'_1 and m'_2 have supports P1 and P2; only supports matter for the gcd tests
    m1, m2 = part.mask("P1"), part.mask("P2")
    edges = [(full, full ^ ONE)]
    used = {full, full ^ ONE}
    for k in range(q - 1, 2, -1):
        for T in ss.subsets_of_size(full, k):
            if T in used or not admissible(part, T):
                continue
            comp = full ^ T
            star = comp & (ONE | TWO)
            low = None
            if star == 0:
                # gcd(m_comp, m'_j) = 1 iff comp misses the support of m'_j
                if comp & m1 == 0:
                    low = T ^ ONE
                elif comp & m2 == 0:
                    low = T ^ TWO
            elif star == ONE:
                low = T ^ TWO
            elif star == TWO:
                low = T ^ ONE
            if low is not None and low not in used:
                edges.append((T, low))
                used.update((T, low))
    return Matching(edges)


def _is_critical(part, T):
    P0, P1, P2, A, B = (part.mask(k) for k in ("P0", "P1", "P2", "A", "B"))
    has1, has2 = bool(T & ONE), bool(T & TWO)
    if has1 and has2:
        return not _within(P1, T) and not _within(P2, T)
    if has1:
        return (_within(P1 | P2, T) and not _within(P0, T)) or (
            not _within(P2, T) and not _within(A, T)
        )
    if has2:
        return not _within(B, T) and not _within(P1, T)
    return not _within(A, T) and not _within(B, T)


def critical_closed_form(I):
    """Critical subsets of the explicit matching, without building it."""
    part = p_partition(I)
    q = part.n + 2
    out = [T for T in range(1, 1 << q) if _is_critical(part, T)]
    return sorted(out, key=ss.sort_key)


def cm_type_formula(part):
    return len(part.A & part.B) + len(part.P1) * len(part.P2)


def betti_and_cm_type(I):
    part = p_partition(I)
    cells = [
        Cell(T, ss.size(T) - 1, label_formula(part, T)) for T in critical_closed_form(I)
    ]
    table = BettiTable.from_cells(cells)
    assert all(v == 1 for v in table.entries.values()), "multigraded Betti number above 1"
    return table, cm_type_formula(part)


@dataclass(frozen=True)
class ScarfStructure:
    complex: SimplicialComplex
    betti: tuple
    matches_scarf: bool
    matches_critical: bool


def scarf_betti_formula(p1, p2):
    """Face counts of ``skel(P1) * skel(P2) * <12>`` by homological degree."""
    top = p1 + p2
    out = []
    for i in range(top):
        total = 0
        for a in range(min(p1 - 1, i + 1) + 1):
            for b in range(min(p2 - 1, i + 1 - a) + 1):
                c = i + 1 - a - b
                if 0 <= c <= 2:
                    total += comb(p1, a) * comb(p2, b) * comb(2, c)
        out.append(total)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def scarf_structure(I):
    part = p_partition(I)
    if part.A & part.B:
        raise ClosedFormNotApplicable(
            f"u_1 and u_2 share the variables {sorted(i - 2 for i in part.A & part.B)}; "
            "use scarf_complex for the general Scarf complex"
        )
    p1 = SimplicialComplex.simplex(part.mask("P1"))
    p2 = SimplicialComplex.simplex(part.mask("P2"))
    cx = (
        p1.skeleton(len(part.P1) - 2)
        .join(p2.skeleton(len(part.P2) - 2))
        .join(SimplicialComplex.simplex(ONE | TWO))
    )
    cx = SimplicialComplex(cx.faces, ss.full(part.n + 2), check=False)
    betti = scarf_betti_formula(len(part.P1), len(part.P2))
    crit = set(critical_closed_form(I)) | {0}
    return ScarfStructure(
        cx,
        betti,
        matches_scarf=scarf_complex(I) == cx,
        matches_critical=crit == set(cx.faces),
    )


@dataclass
class LevelReport:
    is_level: bool
    alpha: int = None
    beta: int = None
    gamma: int = None
    witness: tuple = None
    top_degrees: dict = None
    direct_level: bool = None


def _constant(values):
    vals = set(values)
    if not vals:
        return None, True
    if len(vals) == 1:
        return vals.pop(), True
    return None, False


def is_level(I):
    """Level test from the shift constants, with the top-cell degrees alongside.

    An empty index set imposes no condition; in particular ``gamma`` is None
    when both ``(P2 & A) | P0`` and ``P1 & B`` are empty.
    """
    part = p_partition(I)
    a, b, e = part.a, part.b, part.e
    alpha, ok1 = _constant(a[k - 3] - e[k - 3] for k in part.P1)
    beta, ok2 = _constant(b[k - 3] - e[k - 3] for k in part.P2)
    gamma, ok3 = _constant(
        [a[k - 3] - e[k - 3] for k in (part.P2 & part.A) | part.P0]
        + [b[k - 3] - e[k - 3] for k in part.P1 & part.B]
    )
    ok4 = True
    if gamma is not None and ok1 and ok2:
        ok4 = alpha is not None and beta is not None and gamma == alpha + beta
    level = ok1 and ok2 and ok3 and ok4

    crit = critical_closed_form(I)
    top = max(ss.size(T) for T in crit)
    degrees = {T: label_formula(part, T).degree for T in crit if ss.size(T) == top}
    hi = max(degrees.values())
    lo = min(degrees.values())
    witness = None
    if hi != lo:
        witness = (
            min(T for T, d in degrees.items() if d == hi),
            min(T for T, d in degrees.items() if d == lo),
        )
    return LevelReport(level, alpha, beta, gamma, witness, degrees, hi == lo)
