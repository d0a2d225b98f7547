"""Subsets of ``[q]`` as bitmasks.

Index ``j`` (1-based) is bit ``j - 1``. Every public function that takes a
subset accepts either a mask or an iterable of 1-based indices.
"""
from itertools import combinations

from .errors import IndexOutOfRange


def as_mask(subset):
    if isinstance(subset, int):
        if subset < 0:
            raise IndexOutOfRange(f"negative mask {subset}")
        return subset
    mask = 0
    for j in subset:
        if j < 1:
            raise IndexOutOfRange(f"index {j} is not a positive integer")
        mask |= 1 << (j - 1)
    return mask


def members(mask):
    """Ascending 1-based indices in ``mask``."""
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def size(mask):
    return bin(mask).count("1")


def full(q):
    return (1 << q) - 1


def check_range(mask, q):
    if mask >> q:
        raise IndexOutOfRange(f"subset {list(members(mask))} is not contained in [{q}]")


def sort_key(mask):
    """The (size, mask value) order used for every reported list of subsets."""
    return (size(mask), mask)


def subsets_of_size(mask, k):
    """All ``k``-element subsets of ``mask``."""
    bits = [1 << (j - 1) for j in members(mask)]
    for combo in combinations(bits, k):
        yield sum(combo)


def fmt(mask):
    """Compact display, e.g. ``{1,4,5}``; the empty set prints as ``{}``."""
    return "{" + ",".join(str(j) for j in members(mask)) + "}"
