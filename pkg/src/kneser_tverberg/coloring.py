"""Weak colorings of uniform hypergraphs.

A coloring assigns one of k colors to every vertex; it is proper when no
hyperedge is monochromatic. The exact chromatic number is found by
resolving feasibility for increasing k with a saturation-guided
backtracking search, and the returned witness coloring is the
lexicographically least proper one (vertex by vertex in id order), which
makes results reproducible across runs and platforms.

The greedy least-label bound, the floor-formula bound, the fractional
width bound, and the machinery for pushing a coloring of the minimal
nonfaces up to all faces live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .hypergraphs import Hypergraph, generalized_kneser, width
from .simplicial import SimplicialComplex, Simplex, _mask, _unmask

DEFAULT_VERTEX_LIMIT = 64


@dataclass(frozen=True)
class Coloring:
    """A total assignment of colors 1..k to vertex ids 0..len(colors)-1."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("palette size must be nonnegative")
        if any(c < 1 or c > self.k for c in self.colors):
            raise ValueError("colors must lie in 1..k")

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "assignment": {str(i): c for i, c in enumerate(self.colors)},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Coloring":
        assignment = {int(i): int(c) for i, c in data["assignment"].items()}
        if sorted(assignment) != list(range(len(assignment))):
            raise ValueError("assignment must cover vertex ids 0..len-1")
        return cls(int(data["k"]), tuple(assignment[i] for i in range(len(assignment))))


def is_proper(H: Hypergraph, coloring: Coloring) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Check weak propriety; on failure return the first monochromatic edge."""
    if len(coloring.colors) != H.n_vertices:
        raise ValueError("coloring must assign a color to every vertex")
    cols = coloring.colors
    for e in H.edges:
        first = cols[e[0]]
        if all(cols[v] == first for v in e[1:]):
            return False, e
    return True, None


@dataclass(frozen=True)
class ChromaticResult:
    chi: int
    coloring: Coloring
    search_nodes: int
    refuted_k: Optional[int]
    refutation_nodes: Optional[int]

    def to_json_dict(self) -> dict:
        out = {"chi": self.chi, "search_nodes": self.search_nodes}
        out["coloring"] = self.coloring.to_json_dict()
        if self.refuted_k is not None:
            out["refutation"] = {"k": self.refuted_k, "nodes": self.refutation_nodes}
        return out


def _adjacency_masks(H: Hypergraph) -> list[int]:
    adj = [0] * H.n_vertices
    for a, b in H.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def _greedy_clique_size(adj: Sequence[int], order: Sequence[int]) -> int:
    clique_mask = 0
    size = 0
    for v in order:
        if clique_mask & ~adj[v] == 0:
            clique_mask |= 1 << v
            size += 1
    return size


class _Budget:
    __slots__ = ("nodes",)

    def __init__(self):
        self.nodes = 0


def _feasible_graph(adj: list[int], degrees: list[int], k: int, budget: _Budget) -> Optional[list[int]]:
    """Backtracking k-colorability for the 2-uniform case.

    Vertex choice: most saturated, then highest degree, then lowest id.
    Colors are introduced canonically (a vertex may use at most one color
    beyond those already in use), and coloring a vertex updates the
    saturation masks of its uncolored neighbors, pruning any neighbor
    left without an available color.
    """
    n = len(adj)
    colors = [0] * n
    nbr_colors = [0] * n
    full = (1 << k) - 1

    def rec(done: int, used: int) -> bool:
        budget.nodes += 1
        if done == n:
            return True
        best = -1
        best_key = None
        for v in range(n):
            if colors[v] == 0:
                key = (nbr_colors[v].bit_count(), degrees[v], -v)
                if best_key is None or key > best_key:
                    best_key = key
                    best = v
        v = best
        avail = ~nbr_colors[v] & ((1 << min(used + 1, k)) - 1)
        while avail:
            bit = avail & -avail
            avail -= bit
            c = bit.bit_length()
            colors[v] = c
            touched = []
            dead = False
            nb = adj[v]
            while nb:
                u_bit = nb & -nb
                nb -= u_bit
                u = u_bit.bit_length() - 1
                if colors[u] == 0 and not nbr_colors[u] & bit:
                    nbr_colors[u] |= bit
                    touched.append(u)
                    if nbr_colors[u] == full:
                        dead = True
            if not dead and rec(done + 1, max(used, c)):
                return True
            for u in touched:
                nbr_colors[u] &= ~bit
            colors[v] = 0
        return False

    return colors if rec(0, 0) else None


def _feasible_uniform(H: Hypergraph, k: int, budget: _Budget) -> Optional[list[int]]:
    """Backtracking k-colorability for arity three and up.

    Static vertex order by descending degree; a color is rejected when it
    completes a monochromatic edge among already-colored vertices.
    """
    n = H.n_vertices
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in H.edges:
        for v in e:
            incident[v].append(tuple(u for u in e if u != v))
    order = sorted(range(n), key=lambda v: (-len(incident[v]), v))
    colors = [0] * n

    def rec(pos: int, used: int) -> bool:
        budget.nodes += 1
        if pos == n:
            return True
        v = order[pos]
        for c in range(1, min(used + 1, k) + 1):
            if any(all(colors[u] == c for u in rest) for rest in incident[v]):
                continue
            colors[v] = c
            if rec(pos + 1, max(used, c)):
                return True
            colors[v] = 0
        return False

    return colors if rec(0, 0) else None


def _lex_least_coloring(H: Hypergraph, k: int) -> list[int]:
    """First proper k-coloring in lexicographic order of the color vector.

    Colors ascend and may exceed the used count by at most one, which is
    harmless: the lexicographically least proper coloring introduces
    colors in increasing order anyway.
    """
    n = H.n_vertices
    colors = [0] * n
    if H.r == 2:
        adj = _adjacency_masks(H)

        def rec2(v: int, used: int) -> bool:
            if v == n:
                return True
            forbidden = 0
            nb = adj[v]
            while nb:
                bit = nb & -nb
                nb -= bit
                u = bit.bit_length() - 1
                if u < v:
                    forbidden |= 1 << (colors[u] - 1)
            for c in range(1, min(used + 1, k) + 1):
                if forbidden >> (c - 1) & 1:
                    continue
                colors[v] = c
                if rec2(v + 1, max(used, c)):
                    return True
            colors[v] = 0
            return False

        if not rec2(0, 0):
            raise ArithmeticError("witness search failed at the established chromatic number")
        return colors

    incident: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in H.edges:
        top = max(e)
        incident[top].append(tuple(u for u in e if u != top))

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(1, min(used + 1, k) + 1):
            if any(all(colors[u] == c for u in rest) for rest in incident[v]):
                continue
            colors[v] = c
            if rec(v + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    if not rec(0, 0):
        raise ArithmeticError("witness search failed at the established chromatic number")
    return colors


def chromatic_number(H: Hypergraph, max_vertices: int = DEFAULT_VERTEX_LIMIT) -> ChromaticResult:
    """Exact weak chromatic number with a certificate.

    Feasibility is decided for k = lower bound, lower bound + 1, ... in
    turn; the first feasible k is returned together with the node count
    of the failed search at k - 1 (when one was run), so the result
    carries both halves of the proof. Refuses hypergraphs with more than
    max_vertices vertices.
    """
    n = H.n_vertices
    if n > max_vertices:
        raise ValueError(f"vertex count {n} exceeds the limit {max_vertices}")
    if n == 0:
        return ChromaticResult(0, Coloring(0, ()), 0, None, None)
    if not H.edges:
        return ChromaticResult(1, Coloring(1, (1,) * n), 0, None, None)

    if H.r == 2:
        adj = _adjacency_masks(H)
        degrees = [a.bit_count() for a in adj]
        order = sorted(range(n), key=lambda v: (-degrees[v], v))
        lower = max(2, _greedy_clique_size(adj, order))
    else:
        lower = 2

    total_nodes = 0
    refuted_k = None
    refutation_nodes = None
    for k in range(lower, n + 1):
        budget = _Budget()
        if H.r == 2:
            found = _feasible_graph(adj, degrees, k, budget)
        else:
            found = _feasible_uniform(H, k, budget)
        total_nodes += budget.nodes
        if found is not None:
            witness = _lex_least_coloring(H, k)
            return ChromaticResult(k, Coloring(k, tuple(witness)), total_nodes, refuted_k, refutation_nodes)
        refuted_k = k
        refutation_nodes = budget.nodes
    raise ArithmeticError("no feasible palette up to the vertex count")


@dataclass(frozen=True)
class GreedyColoring:
    coloring: Coloring
    colors_used: int
    proper: bool
    witness: Optional[tuple[int, ...]]

    def to_json_dict(self) -> dict:
        out = {
            "colors_used": self.colors_used,
            "proper": self.proper,
            "coloring": self.coloring.to_json_dict(),
        }
        if self.witness is not None:
            out["monochromatic_edge"] = list(self.witness)
        return out


def greedy_least_label(
    H: Hypergraph,
    r: int,
    N: int,
    d: int | None = None,
    max_colors: int | None = None,
) -> GreedyColoring:
    """Color each vertex by the block of its least label.

    Vertex sets live over 1..N+1; the color of a set with least element
    m is ceil(m / (r-1)), optionally clamped to max_colors. Whether the
    result is proper depends on the instance, so it is checked and
    reported rather than assumed. The d argument only feeds the caller's
    bookkeeping (the floor-formula target) and is not used here.
    """
    if r != H.r:
        raise ValueError("arity mismatch between hypergraph and bound parameters")
    if max_colors is not None and max_colors < 1:
        raise ValueError("max_colors must be positive")
    values = []
    for vset in H.vertices:
        if not vset:
            raise ValueError("greedy coloring needs nonempty vertex sets")
        if max(vset) > N + 1:
            raise ValueError(f"vertex set {sorted(vset)} exceeds ground set 1..{N + 1}")
        c = (min(vset) + r - 2) // (r - 1)
        if max_colors is not None:
            c = min(c, max_colors)
        values.append(c)
    k = max(values) if values else 0
    coloring = Coloring(k, tuple(values))
    ok, witness = is_proper(H, coloring)
    return GreedyColoring(coloring, len(set(values)), ok, witness)


def bound_floor_formula(N: int, r: int, d: int) -> int:
    """floor(N / (r-1)) - d."""
    if r < 2:
        raise ValueError("need r >= 2")
    if N < 0:
        raise ValueError("need N >= 0")
    if d < -1:
        raise ValueError("dimension below -1")
    return N // (r - 1) - d


def kriz_bound(K: SimplicialComplex, r: int) -> Fraction:
    """r-fold width of the complex divided by r - 1, exact."""
    return Fraction(width(K, r), r - 1)


def face_relabeling_for_greedy(
    K: SimplicialComplex, r: int, d: int
) -> Optional[tuple[SimplicialComplex, dict[int, int]]]:
    """Permute labels so some face of size (r-1)d + 1 sits on the top labels.

    Returns the relabeled complex and the old-to-new label map, or None
    when no face is large enough. Useful before greedy_least_label,
    whose guarantee wants the top block of labels to span a face.
    """
    if r < 2 or d < 0:
        raise ValueError("need r >= 2 and d >= 0")
    size = (r - 1) * d + 1
    if size > K.n:
        return None
    target = None
    for m in K.face_masks(max_size=size):
        if m.bit_count() == size:
            target = sorted(_unmask(m))
            break
    if target is None:
        return None
    rest = [v for v in range(1, K.n + 1) if v not in set(target)]
    mapping = {old: new for new, old in enumerate(rest, start=1)}
    mapping.update({old: new for new, old in enumerate(target, start=len(rest) + 1)})
    relabeled = SimplicialComplex(K.n, [[mapping[v] for v in f] for f in K.facets])
    return relabeled, mapping


def extend_coloring(
    K: SimplicialComplex, L: SimplicialComplex, r: int, coloring: Coloring
) -> dict[Simplex, int]:
    """Push a proper coloring of the minimal outside faces to all of them.

    Every face of L that is not a face of K gets the least color among
    the minimal such faces it contains. Raises if the input coloring is
    not proper for the disjointness hypergraph of the minimal faces.
    """
    H = generalized_kneser(K, L, r)
    ok, witness = is_proper(H, coloring)
    if not ok:
        raise ValueError(f"input coloring is improper, monochromatic edge {witness}")
    vertex_color = {_mask(v): coloring.colors[i] for i, v in enumerate(H.vertices)}
    out: dict[Simplex, int] = {}
    for fm in L.face_masks():
        face = _unmask(fm)
        if K.is_face(face):
            continue
        out[face] = min(c for vm, c in vertex_color.items() if vm & fm == vm)
    return out


def verify_constraint_property(
    K: SimplicialComplex, L: SimplicialComplex, r: int, coloring: Coloring
) -> tuple[bool, Optional[tuple[tuple[Simplex, ...], int]]]:
    """Check the color-set disjointness property of the extended coloring.

    For faces sigma of L, let A(sigma) collect the extended colors of the
    subfaces of sigma that lie outside K; equivalently, the colors of the
    minimal outside faces contained in sigma. The property: any r
    pairwise disjoint faces of L have color sets with empty common
    intersection. Returns (True, None) or (False, (faces, shared color)).

    Exhaustive over all r-tuples of disjoint nonempty faces of L, with
    the running intersection pruning dead branches, so only usable at
    small ground sets; that is the regime this package targets.
    """
    H = generalized_kneser(K, L, r)
    ok, witness = is_proper(H, coloring)
    if not ok:
        raise ValueError(f"input coloring is improper, monochromatic edge {witness}")
    vertex_bit = {_mask(v): 1 << (coloring.colors[i] - 1) for i, v in enumerate(H.vertices)}

    face_list = L.face_masks()
    colorset: dict[int, int] = {}
    for fm in face_list:
        acc = vertex_bit.get(fm, 0)
        rest = fm
        while rest:
            bit = rest & -rest
            rest -= bit
            acc |= colorset[fm & ~bit]
        colorset[fm] = acc

    nonempty = [(fm, colorset[fm]) for fm in face_list if fm and colorset[fm]]
    chosen: list[int] = []

    def rec(start: int, union: int, common: int) -> Optional[tuple[tuple[int, ...], int]]:
        if len(chosen) == r:
            return tuple(chosen), common
        need = r - len(chosen)
        for i in range(start, len(nonempty) - need + 1):
            fm, bits = nonempty[i]
            if fm & union:
                continue
            nxt = common & bits if chosen else bits
            if not nxt:
                continue
            chosen.append(fm)
            hit = rec(i + 1, union | fm, nxt)
            if hit:
                return hit
            chosen.pop()
        return None

    bad = rec(0, 0, 0)
    if bad is None:
        return True, None
    masks, common = bad
    color = (common & -common).bit_length()
    return False, (tuple(_unmask(m) for m in masks), color)
