"""Finite simplicial complexes as sets of bitmask faces."""
from . import subsets as ss
from .errors import MorseResError


class SimplicialComplex:
    """A downward-closed family of subsets of a ground set.

    ``vertices`` is the ground set as a mask; it may contain vertices that lie
    in no face. The void complex has no faces at all, while ``{∅}`` has the
    single empty face.
    """

    __slots__ = ("faces", "vertices")

    def __init__(self, faces, vertices=None, check=True):
        faces = frozenset(ss.as_mask(f) for f in faces)
        ground = 0
        for f in faces:
            ground |= f
        if vertices is None:
            vertices = ground
        else:
            vertices = ss.as_mask(vertices)
        if ground & ~vertices:
            raise MorseResError("faces use vertices outside the ground set")
        self.faces = faces
        self.vertices = vertices
        if check and not self.is_downward_closed():
            raise MorseResError("face family is not closed under taking subsets")

    @classmethod
    def from_facets(cls, facets, vertices=None):
        faces = set()
        for f in facets:
            f = ss.as_mask(f)
            sub = f
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return cls(faces, vertices, check=False)

    @classmethod
    def void(cls, vertices=0):
        return cls((), vertices, check=False)

    @classmethod
    def simplex(cls, vertices):
        return cls.from_facets([ss.as_mask(vertices)], vertices)

    def is_void(self):
        return not self.faces

    def is_downward_closed(self):
        for f in self.faces:
            b = f
            while b:
                low = b & -b
                b ^= low
                if f ^ low not in self.faces:
                    return False
        return True

    @property
    def facets(self):
        out = [f for f in self.faces if not any(f != g and f & g == f for g in self.faces)]
        return sorted(out, key=ss.sort_key)

    @property
    def dim(self):
        if not self.faces:
            return None
        return max(ss.size(f) for f in self.faces) - 1

    def f_vector(self):
        """Face counts by size: entry ``k`` counts faces with ``k`` elements."""
        if not self.faces:
            return ()
        counts = [0] * (max(ss.size(f) for f in self.faces) + 1)
        for f in self.faces:
            counts[ss.size(f)] += 1
        return tuple(counts)

    def used_vertices(self):
        out = 0
        for f in self.faces:
            out |= f
        return out

    def skeleton(self, d):
        """Faces of dimension at most ``d``."""
        return SimplicialComplex(
            (f for f in self.faces if ss.size(f) <= d + 1), self.vertices, check=False
        )

    def join(self, other):
        """Face-wise union ``{X ∪ Y}`` of the two families."""
        return SimplicialComplex(
            {x | y for x in self.faces for y in other.faces},
            self.vertices | other.vertices,
            check=False,
        )

    def relabel(self, mapping):
        """Image under a vertex map given as ``{old_index: new_index}``."""

        def image(mask):
            return ss.as_mask(mapping[j] for j in ss.members(mask))

        return SimplicialComplex(
            (image(f) for f in self.faces), image(self.vertices), check=False
        )

    def sorted_faces(self):
        return sorted(self.faces, key=ss.sort_key)

    def __contains__(self, face):
        return ss.as_mask(face) in self.faces

    def __iter__(self):
        return iter(self.sorted_faces())

    def __len__(self):
        return len(self.faces)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.faces == other.faces

    def __hash__(self):
        return hash(self.faces)

    def __repr__(self):
        if not self.faces:
            return "SimplicialComplex(void)"
        body = ",".join("".join(str(j) for j in ss.members(f)) for f in self.facets)
        return f"<{body}>"
