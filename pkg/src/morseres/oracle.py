"""Brute-force minimal Betti numbers from upper Koszul complexes.

For a monomial ``u`` the upper Koszul complex ``K^u`` consists of the
squarefree sets ``W`` in the support of ``u`` with ``u / x^W`` in the ideal.
Over a field ``k``, ``beta_{i,u} = dim H~_{i-1}(K^u; k)``. Only lcm-lattice
keys can carry nonzero Betti numbers, so only those are evaluated.
"""
from dataclasses import dataclass

import numpy as np

from . import _kernels
from . import subsets as ss
from .errors import CharacteristicMismatch, FaceBudgetExceeded
from .monomial import DEFAULT_WIDTH_LIMIT, Monomial
from .morse import BettiTable
from .simplicial import SimplicialComplex

DEFAULT_FACE_BUDGET = 1 << 16
SECOND_PRIME = 32749


@dataclass(frozen=True)
class ChainComplexRanks:
    """``dims[k + 1]`` is the dimension of reduced homology in degree ``k``."""

    dims: tuple

    def degree(self, k):
        idx = k + 1
        return self.dims[idx] if 0 <= idx < len(self.dims) else 0


def _check_prime(p):
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")


def upper_koszul(I, u):
    u = Monomial(u)
    if len(u) != I.n:
        raise ValueError(f"multidegree has {len(u)} exponents, the ideal {I.n} variables")
    support = u.support()
    ground = ss.as_mask(support)
    faces = []
    for w in range(1 << len(support)):
        quot = list(u)
        for t, i in enumerate(support):
            if w >> t & 1:
                quot[i - 1] -= 1
        if I.contains(quot):
            faces.append(ss.as_mask(support[t] for t in range(len(support)) if w >> t & 1))
    return SimplicialComplex(faces, ground, check=False)


def reduced_homology(K, p=2, face_budget=DEFAULT_FACE_BUDGET):
    """Reduced homology dimensions of ``K`` over GF(p), degrees -1, 0, 1, ..."""
    _check_prime(p)
    if len(K) > face_budget:
        raise FaceBudgetExceeded(f"{len(K)} faces exceed the budget {face_budget}")
    nverts = ss.size(K.vertices)
    if K.is_void():
        return ChainComplexRanks((0,) * (nverts + 1))
    by_size = [[] for _ in range(nverts + 1)]
    for f in K.sorted_faces():
        by_size[ss.size(f)].append(f)
    # lexicographic order on index tuples within each size
    by_size = [sorted(fs, key=ss.members) for fs in by_size]
    index = [{f: i for i, f in enumerate(fs)} for fs in by_size]
    ranks = [0] * (nverts + 2)
    for k in range(1, nverts + 1):
        if not by_size[k] or not by_size[k - 1]:
            continue
        mat = np.zeros((len(by_size[k]), len(by_size[k - 1])), dtype=np.int64)
        for r, f in enumerate(by_size[k]):
            for pos, j in enumerate(ss.members(f)):
                mat[r, index[k - 1][f & ~(1 << (j - 1))]] = -1 if pos % 2 else 1
        ranks[k] = _kernels.rank_mod_p(mat, p)
    dims = tuple(len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(nverts + 1))
    return ChainComplexRanks(dims)


def _betti_at_prime(I, p, route, max_width):
    tab = I.table(max_width)
    gens = I.generator_matrix()
    entries = {}
    for u in tab.keys:
        if route == "kernel":
            dims = _kernels.koszul_homology(gens, np.asarray(u, dtype=np.int64), p)
        else:
            dims = reduced_homology(upper_koszul(I, u), p).dims
        for i, d in enumerate(dims):
            if d:
                entries[(i, u)] = d
    return BettiTable(entries)


def minimal_betti(I, p=2, cross_check=None, route="kernel", max_width=DEFAULT_WIDTH_LIMIT):
    """Minimal multigraded Betti numbers of ``I`` over GF(p).

    ``route="complex"`` builds each ``K^u`` explicitly and runs
    ``reduced_homology``; the default uses the fused kernel. With
    ``cross_check=p2`` the table is recomputed over GF(p2) and any difference
    raises ``CharacteristicMismatch``.
    """
    _check_prime(p)
    if route not in ("kernel", "complex"):
        raise ValueError("route must be 'kernel' or 'complex'")
    table = _betti_at_prime(I, p, route, max_width)
    if cross_check is not None:
        _check_prime(cross_check)
        other = _betti_at_prime(I, cross_check, route, max_width)
        diff = table.diff(other)
        if diff:
            raise CharacteristicMismatch(
                f"Betti numbers over GF({p}) and GF({cross_check}) differ at {len(diff)} entries",
                diff,
            )
    return table
