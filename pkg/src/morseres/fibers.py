"""Reduction of one lcm fiber of an Artinian reduction to a small complex.

For ``I = (u_1..u_r, x_1^{e_1}..x_n^{e_n})`` and a lattice key ``u = x^b``
the variables with ``b_i = e_i`` (set ``B``) force their pure powers into
every member of the fiber ``I_u``; the rest of the fiber is decided by the
original generators restricted to the other variables (those with
``0 < b_i < e_i``, set ``A``, and those absent from ``u``). Complementing inside ``[r]`` turns the fiber into
the faces of a simplicial complex ``Delta`` on ``[r] - V``, and the map
``phi`` is an inclusion-reversing bijection from ``I_u`` onto ``Delta``.
"""
from dataclasses import dataclass

import numpy as np

from . import _kernels
from . import subsets as ss
from .errors import MalformedEdgeError, NotInFiberError, SetupViolation
from .monomial import Monomial
from .morse import Matching
from .simplicial import SimplicialComplex


def _fiber_of(U, u):
    """Subsets ``T`` of ``[len(U)]`` (empty set included) with lcm ``u``."""
    mat = np.array(U, dtype=np.int64).reshape(len(U), len(u))
    labels = _kernels.subset_labels(mat)
    hit = np.all(labels == np.asarray(u, dtype=np.int64), axis=1)
    return [int(t) for t in np.nonzero(hit)[0]]


def delta_of_fiber(U, u):
    """``(V, Delta)`` with the complement fiber of ``u`` equal to ``Delta * {V}``.

    ``U`` is a list of exponent vectors (repeats and the unit allowed).
    ``V`` holds the indices whose monomial does not divide ``u``.
    """
    U = [Monomial(m) for m in U]
    u = Monomial(u)
    r = len(U)
    fiber = _fiber_of(U, u)
    if not fiber:
        raise NotInFiberError(f"{u} is not the lcm of any subset")
    V = ss.as_mask(j + 1 for j, m in enumerate(U) if not m.divides(u))
    full = ss.full(r)
    faces = []
    for T in fiber:
        comp = full ^ T
        if comp & V != V:
            raise AssertionError("complement fiber does not contain V")
        faces.append(comp & ~V)
    delta = SimplicialComplex(faces, full & ~V, check=False)
    if not delta.is_downward_closed():
        raise AssertionError(f"complement fiber of {u} is not a simplicial complex")
    return V, delta


@dataclass(frozen=True)
class FiberReduction:
    """Data of one fiber; sets of variables and generator indices are 1-based."""

    ideal: object
    u: Monomial
    A: frozenset
    B: frozenset
    Z: frozenset  # variables with b_i = 0
    Uprime: tuple
    uprime: Monomial
    Xprime: frozenset
    V: frozenset
    delta: SimplicialComplex
    fiber: tuple  # masks of I_u, ascending by (size, mask)

    @property
    def r(self):
        return self.ideal.r

    @property
    def xmask(self):
        return ss.as_mask(self.Xprime)

    @property
    def vmask(self):
        return ss.as_mask(self.V)


def strip_fiber(I, u):
    if not I.is_artinian:
        raise SetupViolation("fiber reduction needs an Artinian reduction", "artinian")
    u = Monomial(u)
    tab = I.table()
    hit = np.nonzero(np.all(tab.labels == np.asarray(u, dtype=np.int64), axis=1))[0]
    fiber = tuple(sorted((int(t) for t in hit if t), key=ss.sort_key))
    if not fiber:
        raise NotInFiberError(f"{u} is not in the lcm lattice of the ideal")
    r, n, e = I.r, I.n, I.e
    A = frozenset(i + 1 for i in range(n) if 0 < u[i] < e[i])
    B = frozenset(i + 1 for i in range(n) if u[i] == e[i])
    Z = frozenset(i + 1 for i in range(n) if u[i] == 0)
    # keep the variables missing from u as well: a generator using one of them
    # can never lie in the fiber, and restricting to A alone would hide that
    keep = A | Z
    Up = tuple(m.restrict(keep) for m in I.generators[:r])
    up = u.restrict(keep)
    Xp = frozenset(r + i for i in B)
    vmask, delta = delta_of_fiber(Up, up)
    red = FiberReduction(
        I, u, A, B, Z, Up, up, Xp, frozenset(ss.members(vmask)), delta, fiber
    )
    _check_reduction(red)
    return red


def _check_reduction(red):
    sub = _fiber_of(red.Uprime, red.uprime)
    if not sub:
        raise AssertionError("u' is not an lcm of U'")
    x = red.xmask
    rebuilt = sorted((t | x for t in sub), key=ss.sort_key)
    if tuple(rebuilt) != red.fiber:
        raise AssertionError("fiber differs from U'_{u'} * {X'}")
    if len(red.delta) != len(red.fiber):
        raise AssertionError("phi is not a bijection onto Delta")


def phi(red, T):
    """``([r] - (T - X')) - V`` for a member ``T`` of the fiber."""
    T = ss.as_mask(T)
    if T not in red.fiber:
        raise NotInFiberError(f"{ss.fmt(T)} does not carry the label {red.u}")
    full = ss.full(red.r)
    return (full & ~(T & ~red.xmask)) & ~red.vmask


def phi_inverse(red, P):
    P = ss.as_mask(P)
    if P not in red.delta:
        raise NotInFiberError(f"{ss.fmt(P)} is not a face of Delta")
    full = ss.full(red.r)
    return ((full & ~red.vmask) & ~P) | red.xmask


def lift_matching(red, Mdelta):
    """Transport a matching on the faces of ``Delta`` into ``G_I``.

    A ``Delta`` edge ``(P, P - {j})`` becomes ``(phi^-1(P - {j}), phi^-1(P))``
    because ``phi`` reverses inclusion.
    """
    edges = []
    for big, small in Matching(Mdelta).edges:
        if big not in red.delta or small not in red.delta:
            raise MalformedEdgeError(
                f"({ss.fmt(big)}, {ss.fmt(small)}) is not an edge between faces of Delta"
            )
        edges.append((phi_inverse(red, small), phi_inverse(red, big)))
    return Matching(edges)
