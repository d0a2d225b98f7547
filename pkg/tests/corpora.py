"""Fixture ideals and seeded random corpora shared by the tests."""
import random

from morseres.monomial import MonomialIdeal, artinian_reduction


def ideal(gens, e=None, plain=False):
    J = MonomialIdeal(tuple(tuple(g) for g in gens))
    return J if plain else artinian_reduction(J, e)


# worked examples: (original generators, pure-power exponents or None for max+1)
SMALL = ([(1, 1, 0), (1, 0, 1)], None)  # (x1x2, x1x3)
MIXED = ([(2, 2, 0, 0), (1, 0, 1, 0), (3, 0, 0, 1)], (4, 3, 2, 2))  # (x1^2x2^2, x1x3, x1^3x4)
PATH = ([(1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1)], None)  # (x1x2, x1x3, x2x4)
FIVE = ([(1, 2, 1, 1, 0), (1, 1, 2, 0, 1)], (2, 3, 3, 2, 2))
DISJOINT = ([(1, 1, 0, 0), (0, 0, 1, 1)], None)  # (x1x2, x3x4)
LEVEL = ([(1, 2, 0), (1, 0, 2)], (3, 3, 3))
DOUBLE = ([(2, 0, 1, 0), (1, 1, 1, 1), (2, 1, 0, 1)], (3, 2, 2, 2))  # a Betti number 2
NONSCARF = [(2, 1), (1, 2), (3, 0), (0, 3)]  # plain ideal, listed with its pure powers

FIXTURES = {
    "small": SMALL,
    "mixed": MIXED,
    "path": PATH,
    "five": FIVE,
    "disjoint": DISJOINT,
    "level": LEVEL,
    "double": DOUBLE,
}


def fixture(name):
    gens, e = FIXTURES[name]
    return ideal(gens, e)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def valid_base(gens):
    """Setup hypotheses: minimal, no pure powers, every variable used."""
    n = len(gens[0])
    if len(set(gens)) != len(gens):
        return False
    for g in gens:
        if sum(1 for a in g if a) < 2:
            return False
    for i, g in enumerate(gens):
        for j, h in enumerate(gens):
            if i != j and _divides(g, h):
                return False
    return all(any(g[i] for g in gens) for i in range(n))


def random_base(rng, r, n, top, tries=500):
    """Random generators meeting the setup, or None if none turned up.

    Some shapes admit no valid set at all (four generators in two
    variables with exponents at most 3), hence the bounded retries.
    """
    for _ in range(tries):
        gens = [tuple(rng.randint(0, top) for _ in range(n)) for _ in range(r)]
        if valid_base(gens):
            return gens
    return None


def random_artinian(rng, r, n, top, slack=1):
    gens = random_base(rng, r, n, top)
    if gens is None:
        return None
    e = [max(g[i] for g in gens) + 1 + rng.randint(0, slack) for i in range(n)]
    return artinian_reduction(MonomialIdeal(tuple(gens)), e)


def _corpus(count, seed, draw_shape, top):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r, n = draw_shape(rng)
        I = random_artinian(rng, r, n, top)
        if I is not None:
            out.append(I)
    return out


def two_gen_corpus(count=500, seed=20240501):
    """Two generators, n in 2..6, exponents at most 4."""
    return _corpus(count, seed, lambda rng: (2, rng.randint(2, 6)), 4)


def small_corpus(count=200, seed=4242):
    """r in 1..4, n in 2..4, exponents at most 3."""
    return _corpus(count, seed, lambda rng: (rng.randint(1, 4), rng.randint(2, 4)), 3)
