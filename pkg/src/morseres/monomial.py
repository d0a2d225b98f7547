"""Monomials, monomial ideals, Artinian reductions and lcm lattices.

Monomials are exponent vectors. An ideal is an ordered list of ``q``
generators; subsets ``T`` of ``[q]`` are bitmasks (see ``subsets``) and the
label of ``T`` is the lcm of its generators, with ``label(∅) = 1``.
"""
import re
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels
from . import subsets as ss
from .errors import (
    DuplicateGeneratorError,
    LengthMismatchError,
    NotInFiberError,
    SetupViolation,
    WidthLimitExceeded,
)
from .simplicial import SimplicialComplex

DEFAULT_WIDTH_LIMIT = 20


class Monomial(tuple):
    """Exponent vector of a monomial in ``n`` variables."""

    def __new__(cls, exponents):
        exps = tuple(int(a) for a in exponents)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        if any(a < 0 for a in exps):
            raise ValueError(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def unit(cls, n):
        return cls((0,) * n)

    @classmethod
    def pure_power(cls, n, var, exponent):
        """``x_var ** exponent`` with ``var`` 1-based."""
        exps = [0] * n
        exps[var - 1] = exponent
        return cls(exps)

    @property
    def nvars(self):
        return len(self)

    @property
    def degree(self):
        return sum(self)

    def is_unit(self):
        return not any(self)

    def support(self):
        """1-based indices of the variables that occur."""
        return tuple(i + 1 for i, a in enumerate(self) if a)

    def is_pure_power(self):
        return len(self.support()) == 1

    def _check(self, other):
        if len(self) != len(other):
            raise LengthMismatchError(
                f"monomials in {len(self)} and {len(other)} variables"
            )

    def lcm(self, other):
        self._check(other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def gcd(self, other):
        self._check(other)
        return Monomial(min(a, b) for a, b in zip(self, other))

    def divides(self, other):
        self._check(other)
        return all(a <= b for a, b in zip(self, other))

    def restrict(self, variables):
        """Keep only the exponents of the given 1-based variables."""
        keep = set(variables)
        return Monomial(a if i + 1 in keep else 0 for i, a in enumerate(self))

    def format(self, names=None):
        if names is None:
            names = [f"x{i + 1}" for i in range(len(self))]
        parts = []
        for name, a in zip(names, self):
            if a == 1:
                parts.append(name)
            elif a > 1:
                parts.append(f"{name}^{a}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Monomial({self.format()})"


_TERM = re.compile(r"([A-Za-z_][A-Za-z_0-9]*?)(?:\^(\d+))?$")


def parse_monomial(text, variables):
    """Parse ``"x1^2*x2"`` (``*`` or whitespace separated) over ``variables``."""
    names = list(variables)
    exps = [0] * len(names)
    text = text.strip()
    if text == "1":
        return Monomial(exps)
    for token in re.split(r"[*\s]+", text):
        if not token:
            continue
        m = _TERM.match(token)
        if m is None or m.group(1) not in names:
            raise ValueError(f"cannot parse factor {token!r} over {names}")
        exps[names.index(m.group(1))] += int(m.group(2) or 1)
    return Monomial(exps)


def lcm_monomials(a, b):
    """Componentwise maximum of two exponent vectors."""
    a, b = Monomial(a), Monomial(b)
    return a.lcm(b)


@dataclass(frozen=True)
class _SubsetTable:
    labels: np.ndarray  # (2**q, n) exponent rows indexed by mask
    ids: np.ndarray  # lattice-key index per mask, -1 for the empty set
    keys: tuple  # lattice keys in lexicographic exponent order
    counts: np.ndarray  # fiber size per key


@dataclass(frozen=True)
class MonomialIdeal:
    """An ordered list of nontrivial monomial generators.

    ``kind`` is ``"plain"`` or ``"artinian"``. An Artinian reduction stores
    the number ``r`` of original generators and the pure-power exponents
    ``e``; its generators are ``u_1..u_r`` followed by ``x_1^{e_1}..x_n^{e_n}``.
    Plain ideals may repeat generators or be non-minimally generated; those
    conditions are reported by ``has_duplicates`` and ``is_minimal``.
    """

    generators: tuple
    variables: tuple = None
    kind: str = "plain"
    r: int = None
    e: tuple = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        gens = tuple(Monomial(g) for g in self.generators)
        if not gens:
            raise SetupViolation("an ideal needs at least one generator", "nonempty")
        n = len(gens[0])
        for g in gens:
            if len(g) != n:
                raise LengthMismatchError("generators have different numbers of variables")
            if g.is_unit():
                raise SetupViolation("the unit monomial is not allowed as a generator", "nontrivial")
        names = self.variables
        if names is None:
            names = tuple(f"x{i + 1}" for i in range(n))
        names = tuple(names)
        if len(names) != n:
            raise LengthMismatchError(f"{len(names)} variable names for {n} variables")
        if len(set(names)) != n:
            raise SetupViolation("variable names must be distinct", "names")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "variables", names)
        if self.kind == "plain":
            object.__setattr__(self, "r", len(gens) if self.r is None else self.r)
            object.__setattr__(self, "e", None)
        elif self.kind == "artinian":
            if self.r is None or self.e is None:
                raise SetupViolation("an Artinian reduction needs r and e", "setup")
            object.__setattr__(self, "e", tuple(int(x) for x in self.e))
            _check_artinian_setup(gens[: self.r], self.e, gens[self.r:])
        else:
            raise ValueError(f"unknown ideal kind {self.kind!r}")

    @property
    def q(self):
        return len(self.generators)

    @property
    def n(self):
        return len(self.variables)

    @property
    def is_artinian(self):
        return self.kind == "artinian"

    @cached_property
    def has_duplicates(self):
        return len(set(self.generators)) != len(self.generators)

    @cached_property
    def is_minimal(self):
        gens = self.generators
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if i != j and g.divides(h):
                    return False
        return True

    def require_distinct(self, what):
        if self.has_duplicates:
            raise DuplicateGeneratorError(
                f"{what} needs distinct generators; the generating multiset repeats a monomial",
                "distinct generators",
            )

    def base_ideal(self):
        """The ideal of the first ``r`` generators (``J`` for an Artinian reduction)."""
        return MonomialIdeal(self.generators[: self.r], self.variables)

    def generator_matrix(self):
        return np.array(self.generators, dtype=np.int64).reshape(self.q, self.n)

    def table(self, max_width=DEFAULT_WIDTH_LIMIT):
        """Per-subset labels and lattice-key ids (computed once, width-guarded)."""
        if self.q > max_width:
            raise WidthLimitExceeded(
                f"{self.q} generators exceed the subset-width limit {max_width}"
            )
        tab = self._cache.get("table")
        if tab is None:
            labels = _kernels.subset_labels(self.generator_matrix())
            keys, inv, counts = np.unique(
                labels[1:], axis=0, return_inverse=True, return_counts=True
            )
            ids = np.empty(1 << self.q, dtype=np.int64)
            ids[0] = -1
            ids[1:] = inv.reshape(-1)
            tab = _SubsetTable(
                labels=labels,
                ids=ids,
                keys=tuple(Monomial(k) for k in keys),
                counts=counts,
            )
            self._cache["table"] = tab
        return tab

    def label(self, subset):
        mask = ss.as_mask(subset)
        ss.check_range(mask, self.q)
        if self.q <= DEFAULT_WIDTH_LIMIT and "table" in self._cache:
            return Monomial(self._cache["table"].labels[mask])
        out = [0] * self.n
        for j in ss.members(mask):
            out = [max(a, b) for a, b in zip(out, self.generators[j - 1])]
        return Monomial(out)

    def contains(self, monomial):
        """Ideal membership: some generator divides ``monomial``."""
        m = Monomial(monomial)
        return any(g.divides(m) for g in self.generators)

    def format_monomial(self, m):
        return Monomial(m).format(self.variables)

    def __str__(self):
        return "(" + ", ".join(g.format(self.variables) for g in self.generators) + ")"


def _check_artinian_setup(us, e, powers):
    n = len(e)
    if len(powers) != n:
        raise SetupViolation(
            "an Artinian reduction lists exactly one pure power per variable after u_1..u_r",
            "generator order",
        )
    for i, (p, ei) in enumerate(zip(powers, e)):
        if tuple(p) != tuple(Monomial.pure_power(n, i + 1, ei)):
            raise SetupViolation(
                f"generator r+{i + 1} must be x{i + 1}^{ei}", "generator order"
            )
    _check_base(us, n, allow_drop=False)
    for i in range(n):
        top = max(u[i] for u in us)
        if e[i] <= top:
            raise SetupViolation(
                f"e_{i + 1} = {e[i]} must exceed max_j alpha_(j,{i + 1}) = {top}",
                "e_i > max alpha",
            )


def _check_base(us, n, allow_drop):
    """Setup hypotheses on u_1..u_r; returns the unused variables."""
    if not us:
        raise SetupViolation("J needs at least one generator", "nonempty")
    if len(set(us)) != len(us):
        raise DuplicateGeneratorError("J repeats a generator", "minimally generated")
    for i, a in enumerate(us):
        for j, b in enumerate(us):
            if i != j and a.divides(b):
                raise SetupViolation(
                    f"u_{i + 1} divides u_{j + 1}: J is not minimally generated",
                    "minimally generated",
                )
    for j, u in enumerate(us):
        if u.is_pure_power():
            raise SetupViolation(
                f"u_{j + 1} = {u} is a pure power", "no pure-power generators"
            )
    unused = [i + 1 for i in range(n) if all(u[i] == 0 for u in us)]
    if unused and not allow_drop:
        raise SetupViolation(
            f"variables {unused} divide no generator of J", "every variable used"
        )
    return unused


def artinian_reduction(J, e=None, unused="reject"):
    """``J + (x_1^{e_1}, ..., x_n^{e_n})`` in the fixed generator order.

    When ``e`` is omitted each ``e_i`` is one more than the largest exponent of
    ``x_i`` in ``J``. ``unused="drop"`` removes variables that occur in no
    generator instead of rejecting them.
    """
    if J.kind != "plain":
        raise SetupViolation("J must be a plain ideal", "plain input")
    if unused not in ("reject", "drop"):
        raise ValueError("unused must be 'reject' or 'drop'")
    us = list(J.generators)
    names = list(J.variables)
    dropped = _check_base(us, J.n, allow_drop=unused == "drop")
    if dropped:
        keep = [i for i in range(J.n) if i + 1 not in dropped]
        us = [Monomial(u[i] for i in keep) for u in us]
        names = [names[i] for i in keep]
        if e is not None:
            e = [e[i] for i in keep]
    n = len(names)
    tops = [max(u[i] for u in us) for i in range(n)]
    if e is None:
        e = [t + 1 for t in tops]
    e = tuple(int(x) for x in e)
    if len(e) != n:
        raise LengthMismatchError(f"{len(e)} exponents for {n} variables")
    powers = [Monomial.pure_power(n, i + 1, e[i]) for i in range(n)]
    return MonomialIdeal(tuple(us) + tuple(powers), tuple(names), "artinian", len(us), e)


def label_of_subset(I, T):
    """lcm of the generators indexed by ``T``; ``1`` for the empty set."""
    return I.label(T)


class LcmLattice:
    """Labels of all nonempty subsets, grouped into fibers.

    ``keys`` are ordered lexicographically by exponent vector; ``fiber(u)``
    lists the masks with label ``u`` ascending by (size, mask).
    """

    def __init__(self, ideal, table):
        self.ideal = ideal
        self.keys = table.keys
        self._index = {k: i for i, k in enumerate(self.keys)}
        order = np.argsort(table.ids[1:], kind="stable") + 1
        bounds = np.concatenate(([0], np.cumsum(table.counts)))
        self._fibers = []
        for i in range(len(self.keys)):
            masks = [int(m) for m in order[bounds[i]:bounds[i + 1]]]
            self._fibers.append(tuple(sorted(masks, key=ss.sort_key)))

    def __len__(self):
        return len(self.keys)

    def __contains__(self, u):
        return Monomial(u) in self._index

    def index(self, u):
        try:
            return self._index[Monomial(u)]
        except KeyError:
            raise NotInFiberError(f"{Monomial(u)} is not in the lcm lattice") from None

    def fiber(self, u):
        return self._fibers[self.index(u)]

    def fibers(self):
        return dict(zip(self.keys, self._fibers))

    def leq(self, u, v):
        """Divisibility order on keys."""
        return Monomial(u).divides(Monomial(v))

    def complement_fiber(self, u):
        full = ss.full(self.ideal.q)
        return tuple(sorted((full ^ t for t in self.fiber(u)), key=ss.sort_key))


def lcm_lattice(I, max_width=DEFAULT_WIDTH_LIMIT):
    return LcmLattice(I, I.table(max_width))


def scarf_complex(I, max_width=DEFAULT_WIDTH_LIMIT):
    """Subsets whose label is carried by no other subset (plus the empty face)."""
    I.require_distinct("the Scarf complex")
    tab = I.table(max_width)
    unique = tab.counts[tab.ids[1:]] == 1
    faces = [0] + [int(m) + 1 for m in np.nonzero(unique)[0]]
    cx = SimplicialComplex(faces, ss.full(I.q), check=False)
    if not cx.is_downward_closed():
        raise AssertionError("Scarf complex is not downward closed")
    return cx
