"""Explicit construction of the two cube families as labeled graphs.

The gamma family lives on the binary strings of length n with no two
consecutive 1s, adjacent at Hamming distance 1. The omega family is built
recursively: paths for n <= 3, and for n >= 4 a copy of member n-1
(labels prefixed "0") plus a copy of member n-2 (labels prefixed "10")
joined by a perfect matching onto the canonical n-2 subcopy of the n-1
part. Subcopy annotations record the recursion parts so the structural
factor construction and the decomposition checks can extract them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .polynomials import Family, _family
from .sequences import fib, lucas

__all__ = [
    "DEFAULT_MAX_N",
    "LabeledGraph",
    "Subcopy",
    "build_gamma",
    "build_omega",
    "build_graph",
    "canonical_subgraph",
    "custom_graph",
    "export_graph",
    "find_isomorphism",
    "expected_vertex_count",
]

DEFAULT_MAX_N = 16


@dataclass(frozen=True)
class Subcopy:
    """Annotated vertex subset isomorphic to a smaller family member."""

    vertices: tuple[int, ...]
    target_family: Family
    target_n: int
    relabel: dict[str, str]  # old label -> label in the target graph


@dataclass(frozen=True)
class LabeledGraph:
    family: str  # "gamma" | "omega" | "custom"
    n: int
    labels: tuple[str, ...]  # sorted; vertex id = position
    adj: tuple[int, ...]  # bit set of neighbour ids per vertex
    subcopies: dict[str, Subcopy] = field(default_factory=dict)

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(len(self.adj)):
            rest = self.adj[u] >> (u + 1)
            while rest:
                low = rest & -rest
                yield u, u + low.bit_length()
                rest ^= low
        return

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except AttributeError:
            object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})
            return self._index[label]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def is_connected(self) -> bool:
        if not self.labels:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            rest = frontier
            while rest:
                low = rest & -rest
                nxt |= self.adj[low.bit_length() - 1]
                rest ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << len(self.labels)) - 1


def _assemble(
    family: str,
    n: int,
    labels: list[str],
    edge_pairs: list[tuple[str, str]],
    subcopy_specs: dict[str, tuple[list[str], Family, int, dict[str, str]]],
) -> LabeledGraph:
    ordered = tuple(sorted(labels))
    index = {lab: i for i, lab in enumerate(ordered)}
    if len(index) != len(labels):
        raise ValueError("duplicate vertex labels")
    adj = [0] * len(ordered)
    for a, b in edge_pairs:
        i, j = index[a], index[b]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    subcopies = {
        name: Subcopy(
            tuple(sorted(index[lab] for lab in members)), target_fam, target_n, dict(relabel)
        )
        for name, (members, target_fam, target_n, relabel) in subcopy_specs.items()
    }
    return LabeledGraph(family, n, ordered, tuple(adj), subcopies)


# ---------------------------------------------------------------------------
# gamma family
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _fibonacci_strings(n: int) -> tuple[str, ...]:
    if n == 0:
        return ("",)
    if n == 1:
        return ("0", "1")
    # append "0" to any shorter string, "01" to strings two shorter
    return tuple(sorted(
        [s + "0" for s in _fibonacci_strings(n - 1)]
        + [s + "01" for s in _fibonacci_strings(n - 2)]
    ))


def _check_cap(n: int, max_n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the construction cap {max_n}")


def build_gamma(n: int, max_n: int = DEFAULT_MAX_N) -> LabeledGraph:
    """Fibonacci-string graph of order n with its recursion annotations."""
    _check_cap(n, max_n)
    labels = list(_fibonacci_strings(n))
    present = set(labels)
    edges = []
    # raising a 0 to 1 finds each Hamming-distance-1 pair exactly once,
    # from its lexicographically smaller endpoint
    for s in labels:
        for i in range(n):
            if s[i] == "0":
                t = s[:i] + "1" + s[i + 1:]
                if t in present:
                    edges.append((s, t))

    def prefixed(prefix: str) -> list[str]:
        return [s for s in labels if s.startswith(prefix)]

    def strip_map(prefix: str) -> dict[str, str]:
        return {s: s[len(prefix):] for s in prefixed(prefix)}

    subs: dict[str, tuple[list[str], Family, int, dict[str, str]]] = {}
    if n >= 1:
        subs["first"] = (prefixed("0"), Family.GAMMA, n - 1, strip_map("0"))
    if n >= 2:
        subs["second"] = (prefixed("10"), Family.GAMMA, n - 2, strip_map("10"))
    if n >= 3:
        subs["cube-pair-0"] = (prefixed("00"), Family.GAMMA, n - 2, strip_map("00"))
        subs["cube-pair-1"] = (prefixed("10"), Family.GAMMA, n - 2, strip_map("10"))
        subs["third"] = (prefixed("010"), Family.GAMMA, n - 3, strip_map("010"))
    return _assemble("gamma", n, labels, edges, subs)


# ---------------------------------------------------------------------------
# omega family
# ---------------------------------------------------------------------------


def _omega_embed(m: int, label: str) -> str:
    # canonical embedding of member m-1 into member m: the "0"-prefixed part
    # for m >= 4, the leading path vertices (same labels) for the path bases
    if m >= 4:
        return "0" + label
    return label


@lru_cache(maxsize=None)
def _omega_parts(n: int) -> tuple[tuple[str, ...], tuple[tuple[str, str], ...]]:
    if n <= 3:
        size = (1, 2, 3, 4)[n]
        labels = tuple(str(i) for i in range(size))
        edges = tuple((str(i), str(i + 1)) for i in range(size - 1))
        return labels, edges
    a_labels, a_edges = _omega_parts(n - 1)
    b_labels, b_edges = _omega_parts(n - 2)
    labels = tuple("0" + w for w in a_labels) + tuple("10" + w for w in b_labels)
    edges = (
        tuple(("0" + u, "0" + v) for u, v in a_edges)
        + tuple(("10" + u, "10" + v) for u, v in b_edges)
        + tuple(("10" + w, "0" + _omega_embed(n - 1, w)) for w in b_labels)
    )
    return labels, edges


def build_omega(n: int, max_n: int = DEFAULT_MAX_N) -> LabeledGraph:
    """Matchable-Lucas-cube reconstruction of order n with annotations."""
    _check_cap(n, max_n)
    labels_t, edges_t = _omega_parts(n)
    labels = list(labels_t)
    edges = list(edges_t)

    def prefixed(prefix: str) -> list[str]:
        return [s for s in labels if s.startswith(prefix)]

    def strip_map(prefix: str) -> dict[str, str]:
        return {s: s[len(prefix):] for s in prefixed(prefix)}

    subs: dict[str, tuple[list[str], Family, int, dict[str, str]]] = {}
    if 1 <= n <= 3:
        # canonical smaller member = leading path vertices, labels unchanged
        head = [str(i) for i in range(n)]
        subs["first"] = (head, Family.OMEGA, n - 1, {lab: lab for lab in head})
    elif n >= 4:
        subs["first"] = (prefixed("0"), Family.OMEGA, n - 1, strip_map("0"))
        subs["second"] = (prefixed("10"), Family.OMEGA, n - 2, strip_map("10"))
        if n >= 5:
            subs["cube-pair-0"] = (prefixed("00"), Family.OMEGA, n - 2, strip_map("00"))
            subs["cube-pair-1"] = (prefixed("10"), Family.OMEGA, n - 2, strip_map("10"))
            subs["third"] = (prefixed("010"), Family.OMEGA, n - 3, strip_map("010"))
    return _assemble("omega", n, labels, edges, subs)


def build_graph(family: Family | str, n: int, max_n: int = DEFAULT_MAX_N) -> LabeledGraph:
    fam = _family(family)
    return build_gamma(n, max_n) if fam is Family.GAMMA else build_omega(n, max_n)


def custom_graph(labels: list[str], edges: list[tuple[str, str]]) -> LabeledGraph:
    """Ad-hoc labeled graph from explicit labels and label pairs."""
    return _assemble("custom", 0, list(labels), list(edges), {})


# ---------------------------------------------------------------------------
# subcopies, export, isomorphism
# ---------------------------------------------------------------------------


def canonical_subgraph(g: LabeledGraph, name: str) -> LabeledGraph:
    """Extract an annotated subcopy, relabeled, and verify it is the
    named smaller member (label-for-label and edge-for-edge)."""
    if name not in g.subcopies:
        known = ", ".join(sorted(g.subcopies)) or "none"
        raise ValueError(f"unknown annotation {name!r} (known: {known})")
    sub = g.subcopies[name]
    target = build_graph(sub.target_family, sub.target_n)
    members = set(sub.vertices)
    relabeled = {g.labels[v]: sub.relabel[g.labels[v]] for v in sub.vertices}
    if sorted(relabeled.values()) != sorted(target.labels):
        raise RuntimeError(f"subcopy {name!r} does not relabel onto the target vertex set")
    for u in sub.vertices:
        for v in _bits(g.adj[u]):
            if v in members and u < v:
                a, b = relabeled[g.labels[u]], relabeled[g.labels[v]]
                if not target.has_edge(target.index_of(a), target.index_of(b)):
                    raise RuntimeError(f"subcopy {name!r} has an edge missing from the target")
    induced_edges = sum(
        1 for u in sub.vertices for v in _bits(g.adj[u]) if v in members and u < v
    )
    if induced_edges != target.edge_count:
        raise RuntimeError(f"subcopy {name!r} edge count differs from the target")
    return target


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def export_graph(g: LabeledGraph, fmt: str) -> str:
    """Deterministic text export: 'edgelist' or 'dot'.

    Edge list: one "label1 label2" pair per line with label1 < label2,
    lines sorted. DOT: quoted labels as node names, nodes then edges,
    both sorted.
    """
    pairs = sorted(
        (min(g.labels[u], g.labels[v]), max(g.labels[u], g.labels[v])) for u, v in g.edges()
    )
    if fmt == "edgelist":
        return "".join(f"{a} {b}\n" for a, b in pairs)
    if fmt == "dot":
        lines = [f"graph {g.family}_{g.n} {{"]
        lines.extend(f'  "{lab}";' for lab in g.labels)
        lines.extend(f'  "{a}" -- "{b}";' for a, b in pairs)
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}; expected 'edgelist' or 'dot'")


def find_isomorphism(g: LabeledGraph, h: LabeledGraph) -> dict[str, str] | None:
    """Backtracking isomorphism search; returns a label mapping or None.

    Intended for the small graphs that appear in structure checks (a few
    dozen vertices); prunes on degree and on partial adjacency agreement.
    """
    k = g.vertex_count
    if k != h.vertex_count or g.edge_count != h.edge_count:
        return None
    deg_g = [g.degree(v) for v in range(k)]
    deg_h = [h.degree(v) for v in range(k)]
    if sorted(deg_g) != sorted(deg_h):
        return None
    order = sorted(range(k), key=lambda v: (-deg_g[v], v))
    candidates: dict[int, list[int]] = {}
    for w in range(k):
        candidates.setdefault(deg_h[w], []).append(w)
    mapping = [-1] * k
    used = [False] * k

    def backtrack(pos: int) -> bool:
        if pos == k:
            return True
        v = order[pos]
        for w in candidates.get(deg_g[v], ()):
            if used[w]:
                continue
            ok = True
            for earlier in order[:pos]:
                if (g.adj[v] >> earlier & 1) != (h.adj[w] >> mapping[earlier] & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if backtrack(pos + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    if not backtrack(0):
        return None
    return {g.labels[v]: h.labels[mapping[v]] for v in range(k)}


def expected_vertex_count(family: Family | str, n: int) -> int:
    """fib(n+2) for gamma; lucas(n) for omega at n >= 2, else 1, 2."""
    fam = _family(family)
    if fam is Family.GAMMA:
        return fib(n + 2)
    return lucas(n) if n >= 2 else n + 1
