"""Exact cube factors: enumeration, three solvers, and verification.

A cube factor partitions the vertex set into subsets each inducing a
hypercube (dimensions may differ per part); an optimal factor minimizes
the number of parts. Three independent routes produce factors:

* ``exact_min_factor``      -- branch-and-bound exact cover over all
                               enumerated induced cubes;
* ``greedy_layered_factor`` -- for each dimension from the largest down,
                               an exact maximum disjoint packing of that
                               dimension's cubes among remaining vertices;
* ``structural_factor``     -- the recursive lift-and-embed construction
                               that mirrors the polynomial recurrence.

All tie-breaking is canonical (lowest uncovered vertex first, descending
dimension, lexicographic vertex arrays), so repeated runs return
byte-identical factors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import LabeledGraph, build_graph
from .polynomials import Family, _family

__all__ = [
    "EXACT_SEARCH_CAP",
    "InducedCube",
    "CubeFactor",
    "FactorProfile",
    "FactorViolation",
    "enumerate_cubes",
    "exact_min_factor",
    "greedy_layered_factor",
    "structural_factor",
    "verify_factor",
    "factor_to_json",
    "factor_from_json",
]

EXACT_SEARCH_CAP = 64


@dataclass(frozen=True)
class InducedCube:
    dimension: int
    vertices: tuple[int, ...]  # sorted vertex ids, length 2**dimension


@dataclass(frozen=True)
class CubeFactor:
    parts: tuple[InducedCube, ...]

    @property
    def part_count(self) -> int:
        return len(self.parts)

    def profile(self) -> FactorProfile:
        top = max((p.dimension for p in self.parts), default=0)
        counts = [0] * (top + 1)
        for p in self.parts:
            counts[p.dimension] += 1
        return FactorProfile(tuple(counts))


@dataclass(frozen=True)
class FactorProfile:
    counts: tuple[int, ...]  # counts[k] = number of dimension-k parts

    @property
    def total_parts(self) -> int:
        return sum(self.counts)

    def covered_vertices(self) -> int:
        return sum(c * 2**k for k, c in enumerate(self.counts))


@dataclass(frozen=True)
class FactorViolation:
    kind: str  # "bad-vertex" | "not-a-cube" | "disjointness" | "coverage"
    message: str
    part_index: int | None = None


def _mask_of(vertices: tuple[int, ...]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def enumerate_cubes(g: LabeledGraph, k_max: int) -> list[list[InducedCube]]:
    """All induced k-cubes for k = 0..k_max, canonically ordered per level.

    Level 0 is the single vertices. Level k+1 joins two disjoint level-k
    cubes whose connecting edges form a perfect matching that is an
    isomorphism between them; since any hypercube splits that way along
    each direction, the level-by-level join finds every induced cube.
    """
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    nv = g.vertex_count
    levels: list[list[InducedCube]] = [[InducedCube(0, (v,)) for v in range(nv)]]
    masks: list[int] = [1 << v for v in range(nv)]
    for k in range(1, k_max + 1):
        prev = levels[k - 1]
        found: set[tuple[int, ...]] = set()
        for i, a in enumerate(prev):
            mask_a = masks[i]
            for j in range(i + 1, len(prev)):
                b = prev[j]
                if mask_a & masks[j]:
                    continue
                joined = _join_cubes(g, a, mask_a, b, masks[j])
                if joined is not None:
                    found.add(joined)
        cubes = [InducedCube(k, verts) for verts in sorted(found)]
        levels.append(cubes)
        masks = [_mask_of(c.vertices) for c in cubes]
        if not cubes:
            levels.extend([] for _ in range(k + 1, k_max + 1))
            break
    return levels


def _join_cubes(
    g: LabeledGraph, a: InducedCube, mask_a: int, b: InducedCube, mask_b: int
) -> tuple[int, ...] | None:
    # cross edges must form a perfect matching that maps a onto b
    # edge-preservingly; equal edge counts then force an isomorphism
    phi: dict[int, int] = {}
    for u in a.vertices:
        cross = g.adj[u] & mask_b
        if cross.bit_count() != 1:
            return None
        phi[u] = cross.bit_length() - 1
    for w in b.vertices:
        if (g.adj[w] & mask_a).bit_count() != 1:
            return None
    if len(set(phi.values())) != len(a.vertices):
        return None
    for u in a.vertices:
        for v in _bits(g.adj[u] & mask_a):
            if u < v and not g.has_edge(phi[u], phi[v]):
                return None
    return tuple(sorted(a.vertices + b.vertices))


def _max_possible_dimension(nv: int) -> int:
    k = 0
    while 2 ** (k + 1) <= nv:
        k += 1
    return k


# ---------------------------------------------------------------------------
# exact minimum-part factor (branch-and-bound exact cover)
# ---------------------------------------------------------------------------


def exact_min_factor(g: LabeledGraph, cap: int = EXACT_SEARCH_CAP) -> CubeFactor:
    """A cube factor with the minimum number of parts, by exact search.

    Branch on the lowest-indexed uncovered vertex; try covering cubes in
    descending dimension then canonical order. Prune with the bound
    parts_used + ceil(remaining / 2**k_fit) where k_fit is the largest
    dimension that still has a cube fitting the uncovered set; a visited
    table prunes re-reaching a covered set at no fewer parts.
    """
    nv = g.vertex_count
    if nv > cap:
        raise ValueError(f"graph has {nv} vertices, above the exact-search cap {cap}")
    if nv == 0:
        return CubeFactor(())
    levels = enumerate_cubes(g, _max_possible_dimension(nv))
    ordered: list[InducedCube] = [c for level in reversed(levels) for c in level]
    cube_masks = [_mask_of(c.vertices) for c in ordered]
    dim_masks: list[list[int]] = [
        [_mask_of(c.vertices) for c in level] for level in levels
    ]
    by_vertex: list[list[int]] = [[] for _ in range(nv)]
    for idx, cube in enumerate(ordered):
        for v in cube.vertices:
            by_vertex[v].append(idx)
    full = (1 << nv) - 1

    best_count = nv + 1
    best_choice: list[int] | None = None
    choice: list[int] = []
    visited: dict[int, int] = {}

    def lower_bound(covered: int, remaining: int) -> int:
        for k in range(len(dim_masks) - 1, 0, -1):
            for m in dim_masks[k]:
                if m & covered == 0:
                    return -(-remaining >> k)  # ceil(remaining / 2**k)
            # level k has no fitting cube, fall through to smaller k
        return remaining

    def search(covered: int, remaining: int) -> None:
        nonlocal best_count, best_choice
        if remaining == 0:
            if len(choice) < best_count:
                best_count = len(choice)
                best_choice = list(choice)
            return
        if len(choice) + lower_bound(covered, remaining) >= best_count:
            return
        seen = visited.get(covered)
        if seen is not None and seen <= len(choice):
            return
        visited[covered] = len(choice)
        uncovered = ~covered & full
        v = (uncovered & -uncovered).bit_length() - 1
        for idx in by_vertex[v]:
            m = cube_masks[idx]
            if m & covered:
                continue
            choice.append(idx)
            search(covered | m, remaining - m.bit_count())
            choice.pop()

    search(0, nv)
    assert best_choice is not None  # singleton cubes guarantee a cover
    parts = sorted(
        (ordered[idx] for idx in best_choice), key=lambda c: (-c.dimension, c.vertices)
    )
    return CubeFactor(tuple(parts))


# ---------------------------------------------------------------------------
# layered greedy (exact maximum packing per dimension, top down)
# ---------------------------------------------------------------------------


def greedy_layered_factor(g: LabeledGraph, cap: int = EXACT_SEARCH_CAP) -> CubeFactor:
    """Factor built by taking a maximum disjoint k-cube packing for each
    dimension k from the largest down, deleting covered vertices between
    layers. Each layer's packing is solved exactly."""
    nv = g.vertex_count
    if nv > cap:
        raise ValueError(f"graph has {nv} vertices, above the exact-search cap {cap}")
    if nv == 0:
        return CubeFactor(())
    levels = enumerate_cubes(g, _max_possible_dimension(nv))
    remaining = (1 << nv) - 1
    parts: list[InducedCube] = []
    for k in range(len(levels) - 1, 0, -1):
        candidates = [c for c in levels[k] if _mask_of(c.vertices) & ~remaining == 0]
        if not candidates:
            continue
        chosen = _max_packing(candidates, remaining, k)
        parts.extend(chosen)
        for c in chosen:
            remaining &= ~_mask_of(c.vertices)
    for v in _bits(remaining):
        parts.append(InducedCube(0, (v,)))
    return CubeFactor(tuple(parts))


def _max_packing(candidates: list[InducedCube], avail: int, k: int) -> list[InducedCube]:
    """Maximum vertex-disjoint subset of equal-dimension cubes within avail.

    Branch on the lowest available vertex still coverable: either pack one
    of the cubes containing it (canonical order) or leave it unpacked.
    """
    masks = [_mask_of(c.vertices) for c in candidates]
    best_count = -1
    best_sel: list[int] = []
    sel: list[int] = []

    def search(pool: int, count: int) -> None:
        nonlocal best_count, best_sel
        if count + (pool.bit_count() >> k) <= best_count:
            return
        branch_v = -1
        for m in masks:
            if m & ~pool == 0:
                v = (m & -m).bit_length() - 1
                branch_v = v if branch_v < 0 else min(branch_v, v)
        if branch_v < 0:
            if count > best_count:
                best_count = count
                best_sel = list(sel)
            return
        # vertices below branch_v can never be covered any more; drop them
        pool &= ~((1 << branch_v) - 1)
        bit = 1 << branch_v
        for idx, m in enumerate(masks):
            if m & bit and m & ~pool == 0:
                sel.append(idx)
                search(pool & ~m, count + 1)
                sel.pop()
        search(pool & ~bit, count)

    search(avail, 0)
    return [candidates[i] for i in sorted(best_sel)]


# ---------------------------------------------------------------------------
# structural (recursive lift-and-embed) factor
# ---------------------------------------------------------------------------


_GAMMA_BASE_PARTS: dict[int, list[tuple[int, tuple[str, ...]]]] = {
    0: [(0, ("",))],
    1: [(1, ("0", "1"))],
    2: [(1, ("00", "01")), (0, ("10",))],
}

_OMEGA_BASE_PARTS: dict[int, list[tuple[int, tuple[str, ...]]]] = {
    0: [(0, ("0",))],
    1: [(1, ("0", "1"))],
    2: [(1, ("0", "1")), (0, ("2",))],
    3: [(1, ("0", "1")), (1, ("2", "3"))],
    4: [(2, ("00", "01", "100", "101")), (1, ("02", "03")), (0, ("102",))],
}


def _structural_parts(fam: Family, n: int) -> list[tuple[int, tuple[str, ...]]]:
    base = _GAMMA_BASE_PARTS if fam is Family.GAMMA else _OMEGA_BASE_PARTS
    if n in base:
        return [(k, tuple(labels)) for k, labels in base[n]]
    lifted = [
        (k + 1, tuple(sorted(["00" + lab for lab in labels] + ["10" + lab for lab in labels])))
        for k, labels in _structural_parts(fam, n - 2)
    ]
    embedded = [
        (k, tuple(sorted("010" + lab for lab in labels)))
        for k, labels in _structural_parts(fam, n - 3)
    ]
    return lifted + embedded


def structural_factor(
    family: Family | str, n: int, g: LabeledGraph | None = None
) -> CubeFactor:
    """Factor from the recursive construction behind the recurrence.

    A dimension-k part of the factor two indices down is lifted across the
    "00"/"10" prefix pair into a (k+1)-cube, and the factor three indices
    down is embedded under the "010" prefix; base factors are explicit.
    Vertex ids refer to the built graph of the same family and order.
    """
    fam = _family(family)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if g is None:
        g = build_graph(fam, n)
    elif g.family != fam.value or g.n != n:
        raise ValueError("graph does not match the requested family member")
    parts = [
        InducedCube(k, tuple(sorted(g.index_of(lab) for lab in labels)))
        for k, labels in _structural_parts(fam, n)
    ]
    parts.sort(key=lambda c: (-c.dimension, c.vertices))
    return CubeFactor(tuple(parts))


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


def _is_induced_cube(g: LabeledGraph, vertices: tuple[int, ...], dimension: int) -> bool:
    """Exact hypercube recognition on the induced subgraph.

    Assigns each vertex a coordinate mask by BFS from the lowest vertex
    (a vertex of a k-cube IS its coordinate vector once the root's k
    neighbours get the unit masks), then confirms adjacency is exactly
    Hamming distance 1 over all pairs. The final all-pairs check makes
    the recognition sound; the BFS makes it complete.
    """
    size = len(vertices)
    if size != 1 << dimension or len(set(vertices)) != size:
        return False
    if size == 1:
        return True
    members = _mask_of(vertices)
    local = {v: g.adj[v] & members for v in vertices}
    if any(a.bit_count() != dimension for a in local.values()):
        return False

    root = vertices[0]
    coord: dict[int, int] = {root: 0}
    for i, u in enumerate(_bits(local[root])):
        coord[u] = 1 << i
    frontier = list(_bits(local[root]))
    dist = 1
    while frontier:
        nxt = []
        dist += 1
        for u in frontier:
            for w in _bits(local[u]):
                if w in coord or w in nxt:
                    continue
                below = [coord[x] for x in _bits(local[w]) if x in coord]
                below = [m for m in below if m.bit_count() == dist - 1]
                if len(below) != dist:
                    return False
                merged = 0
                for m in below:
                    merged |= m
                if merged.bit_count() != dist:
                    return False
                coord[w] = merged
                nxt.append(w)
        frontier = nxt
    if len(coord) != size or len(set(coord.values())) != size:
        return False
    verts = list(vertices)
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            is_edge = bool(local[u] >> v & 1)
            if is_edge != ((coord[u] ^ coord[v]).bit_count() == 1):
                return False
    return True


def verify_factor(g: LabeledGraph, factor: CubeFactor) -> FactorProfile | FactorViolation:
    """Check disjointness, coverage, and the induced-cube property.

    Returns the per-dimension profile on success, otherwise the first
    violation found (violations are data, not exceptions).
    """
    nv = g.vertex_count
    covered = 0
    for i, part in enumerate(factor.parts):
        if any(v < 0 or v >= nv for v in part.vertices):
            return FactorViolation("bad-vertex", f"part {i} references a vertex outside the graph", i)
        if tuple(sorted(part.vertices)) != part.vertices:
            return FactorViolation("bad-vertex", f"part {i} vertices are not sorted", i)
        if not _is_induced_cube(g, part.vertices, part.dimension):
            return FactorViolation(
                "not-a-cube",
                f"part {i} does not induce a {part.dimension}-cube",
                i,
            )
        mask = _mask_of(part.vertices)
        if mask & covered:
            overlap = next(_bits(mask & covered))
            return FactorViolation(
                "disjointness",
                f"part {i} reuses vertex {g.labels[overlap]!r}",
                i,
            )
        covered |= mask
    if covered != (1 << nv) - 1:
        missing = next(_bits(~covered & ((1 << nv) - 1)))
        return FactorViolation("coverage", f"vertex {g.labels[missing]!r} is uncovered", None)
    return factor.profile()


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def factor_to_json(g: LabeledGraph, factor: CubeFactor) -> str:
    """JSON text: parts as {"k", "vertices": [labels]} plus the profile."""
    payload = {
        "family": g.family,
        "n": g.n,
        "parts": [
            {"k": p.dimension, "vertices": [g.labels[v] for v in p.vertices]}
            for p in factor.parts
        ],
        "profile": [str(c) for c in factor.profile().counts],
    }
    return json.dumps(payload, separators=(",", ":"))


def factor_from_json(g: LabeledGraph, text: str) -> CubeFactor:
    """Parse a factor back against a graph; accepts the object form or a
    bare list of parts. Unknown labels raise ValueError."""
    data = json.loads(text)
    raw_parts = data["parts"] if isinstance(data, dict) else data
    parts = []
    for item in raw_parts:
        try:
            dimension = int(item["k"])
            labels = item["vertices"]
        except (KeyError, TypeError):
            raise ValueError(f"malformed factor part: {item!r}") from None
        try:
            ids = tuple(sorted(g.index_of(lab) for lab in labels))
        except KeyError as exc:
            raise ValueError(f"unknown vertex label {exc.args[0]!r}") from None
        parts.append(InducedCube(dimension, ids))
    return CubeFactor(tuple(parts))
