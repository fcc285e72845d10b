"""Abstract simplicial complexes on labeled ground sets.

A complex lives on vertices 1..n and is stored by its facets, the
inclusion-maximal faces. Faces are never materialized wholesale unless
asked for; membership is a subset test against the facet list, done on
bitmasks. The empty simplex is a face of every complex, including the
complex whose facet list is just the empty set (the join identity).

Everything is intended for desk-scale ground sets: enumerating faces or
minimal nonfaces walks subsets of 1..n and refuses to run for n above
`GROUND_LIMIT`.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

Simplex = frozenset[int]

GROUND_LIMIT = 22


def _mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << (v - 1)
    return m


def _unmask(m: int) -> Simplex:
    out = []
    v = 1
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def _face_key(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


class SimplicialComplex:
    """A finite simplicial complex, canonically represented.

    The constructor accepts any family of generating faces, drops the
    ones contained in another, and stores the resulting antichain sorted
    lexicographically. Two complexes are equal iff they have the same
    ground size and the same facet antichain. Instances are treated as
    immutable; nothing in this package mutates one after construction.
    """

    __slots__ = ("n", "facets", "_facet_masks")

    n: int
    facets: tuple[Simplex, ...]

    def __init__(self, n: int, facets: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("ground set size must be nonnegative")
        sets = {frozenset(f) for f in facets}
        sets.add(frozenset())
        for f in sets:
            if f and (min(f) < 1 or max(f) > n):
                raise ValueError(f"facet {sorted(f)} is not a subset of 1..{n}")
        maximal = [f for f in sets if not any(f < g for g in sets)]
        self.n = n
        self.facets = tuple(sorted(maximal, key=_face_key))
        self._facet_masks = tuple(_mask(f) for f in self.facets)

    # -- basic queries ------------------------------------------------

    @property
    def dim(self) -> int:
        """Dimension: largest facet size minus one. The empty-only complex has dim -1."""
        return max(len(f) for f in self.facets) - 1

    def is_face(self, s: Iterable[int]) -> bool:
        m = _mask(s)
        return any(m & fm == m for fm in self._facet_masks)

    def face_masks(self, max_size: int | None = None) -> list[int]:
        """All face bitmasks, optionally capped in cardinality, sorted by (size, lex)."""
        if self.n > GROUND_LIMIT:
            raise ValueError(f"face enumeration refused for ground sets above {GROUND_LIMIT}")
        seen: set[int] = set()
        if max_size is None:
            for fm in self._facet_masks:
                sub = fm
                while True:
                    seen.add(sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & fm
        else:
            for f in self.facets:
                elems = sorted(f)
                top = min(max_size, len(elems))
                for size in range(0, top + 1):
                    for combo in combinations(elems, size):
                        seen.add(_mask(combo))
        return sorted(seen, key=lambda m: (m.bit_count(), _face_key(_unmask(m))))

    def faces(self, max_size: int | None = None) -> list[Simplex]:
        return [_unmask(m) for m in self.face_masks(max_size)]

    # -- derived complexes --------------------------------------------

    def skeleton(self, k: int) -> "SimplicialComplex":
        """Subcomplex of faces of dimension at most k. Needs k >= -1."""
        if k < -1:
            raise ValueError("skeleton dimension below -1")
        top = k + 1
        gens: list[Iterable[int]] = []
        for f in self.facets:
            if len(f) <= top:
                gens.append(f)
            else:
                gens.extend(combinations(sorted(f), top))
        return SimplicialComplex(self.n, gens)

    def cone(self) -> "SimplicialComplex":
        """Join with one fresh vertex, labeled n+1."""
        apex = self.n + 1
        return SimplicialComplex(apex, [set(f) | {apex} for f in self.facets])

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Simplicial join; the other complex is relabeled to n+1..n+m."""
        shift = self.n
        gens = [
            set(f) | {v + shift for v in g}
            for f in self.facets
            for g in other.facets
        ]
        return SimplicialComplex(self.n + other.n, gens)

    def minimal_nonfaces(self) -> tuple[Simplex, ...]:
        """Inclusion-minimal subsets of 1..n that are not faces.

        Enumerated in increasing cardinality; any candidate containing an
        already-found nonface is skipped, so the result is an antichain.
        Returned in the canonical lexicographic order shared by every
        face family in this package.
        """
        if self.n > GROUND_LIMIT:
            raise ValueError(f"nonface enumeration refused for ground sets above {GROUND_LIMIT}")
        found: list[Simplex] = []
        found_masks: list[int] = []
        labels = range(1, self.n + 1)
        for size in range(1, self.n + 1):
            for combo in combinations(labels, size):
                m = _mask(combo)
                if any(fm & m == fm for fm in found_masks):
                    continue
                if not any(m & fm == m for fm in self._facet_masks):
                    found.append(frozenset(combo))
                    found_masks.append(m)
        return tuple(sorted(found, key=_face_key))

    # -- plumbing ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.n == other.n
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __repr__(self) -> str:
        inner = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, facets=[{inner}])"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "facets": [sorted(f) for f in self.facets]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimplicialComplex":
        return cls(int(data["n"]), [list(map(int, f)) for f in data["facets"]])


def simplex_complex(N: int) -> SimplicialComplex:
    """The full simplex on N+1 vertices (dimension N). Needs N >= -1."""
    if N < -1:
        raise ValueError("simplex dimension below -1")
    return SimplicialComplex(N + 1, [range(1, N + 2)])


def complex_from_forbidden(forbidden: Iterable[Iterable[int]], n: int) -> SimplicialComplex:
    """Largest complex on 1..n none of whose faces contains a forbidden set.

    The forbidden family must be an antichain of nonempty subsets of
    1..n; it then comes back verbatim as the minimal nonfaces of the
    result. Runs over all 2^n subsets via superset marking, so the same
    ground-set cap applies as elsewhere.
    """
    if n < 0:
        raise ValueError("ground set size must be nonnegative")
    if n > GROUND_LIMIT:
        raise ValueError(f"forbidden-family construction refused for ground sets above {GROUND_LIMIT}")
    fam = {frozenset(g) for g in forbidden}
    for g in fam:
        if not g:
            raise ValueError("forbidden sets must be nonempty")
        if min(g) < 1 or max(g) > n:
            raise ValueError(f"forbidden set {sorted(g)} is not a subset of 1..{n}")
    for g in fam:
        if any(h < g for h in fam):
            raise ValueError("forbidden family must be an antichain")

    total = 1 << n
    is_face = bytearray([1]) * total
    full = total - 1
    for g in fam:
        gm = _mask(g)
        rest = full & ~gm
        # mark every superset of gm
        sub = rest
        while True:
            is_face[gm | sub] = 0
            if sub == 0:
                break
            sub = (sub - 1) & rest

    bit_of = [1 << i for i in range(n)]
    facets = []
    for m in range(total):
        if not is_face[m]:
            continue
        if all((m & b) or not is_face[m | b] for b in bit_of):
            facets.append(_unmask(m))
    return SimplicialComplex(n, facets)


def minimal_nonfaces(K: SimplicialComplex) -> tuple[Simplex, ...]:
    return K.minimal_nonfaces()
