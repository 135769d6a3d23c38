"""Data model and structural operations for r-uniform linear hypergraphs.

A hypergraph is stored as a declared edge size r, a vertex count n with
dense vertex ids 0..n-1, and a normalized tuple of edges (each edge a
sorted tuple of distinct vertex ids, edges sorted lexicographically).
Construction rejects duplicate edges and out-of-range vertex ids; edge
size and pairwise-intersection violations are surfaced by `validate`,
which reports findings instead of raising.

Acyclicity is decided on the bipartite vertex-edge incidence graph: a
linear hypergraph is acyclic exactly when that graph is a forest.  On
hyperforests the incidence forest also drives canonical codes (rooted
AHU encoding at the tree centers), isomorphism tests, and automorphism
counts.  All operations are pure functions over immutable values.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

CanonicalCode = bytes


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph with dense integer vertex ids.

    `r` is the declared uniformity: edges of a different size can be
    constructed (so that `validate` can report them) but every algorithm
    beyond validation assumes r-uniform linear input.
    """

    r: int
    n: int
    edges: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"edge size r must be at least 2, got {self.r}")
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        norm = []
        for e in self.edges:
            t = tuple(sorted({int(v) for v in e}))
            if not t:
                raise ValueError("empty edge")
            if t[0] < 0 or t[-1] >= self.n:
                raise ValueError(f"edge {t} has a vertex outside 0..{self.n - 1}")
            norm.append(t)
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def edge_tuple(self, e: Iterable[int]) -> tuple[int, ...]:
        """Normalize `e` and check membership."""
        t = tuple(sorted({int(v) for v in e}))
        if t not in self.edges:
            raise ValueError(f"edge {t} not present")
        return t

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")
        return v


class DeletionResult(NamedTuple):
    """Deletion output: the new hypergraph plus the old->new vertex id map."""

    hypergraph: Hypergraph
    vertex_map: dict[int, int]


@dataclass(frozen=True)
class ValidationReport:
    uniform: bool
    linear: bool
    connected: bool
    acyclic: bool
    is_hypertree: bool
    violations: tuple[str, ...]


def single_edge(r: int) -> Hypergraph:
    """The one-edge r-uniform hypergraph on vertices 0..r-1."""
    return Hypergraph(r, r, (tuple(range(r)),))


# ---------------------------------------------------------------------------
# validation and local structure
# ---------------------------------------------------------------------------


def _forest_scan(H: Hypergraph) -> tuple[bool, int]:
    """(acyclic, component count) via union-find over vertices.

    An edge whose vertices already meet a common component closes a cycle
    in the incidence graph; this matches the walk-based cycle notion for
    linear hypergraphs and flags any pair of edges sharing >= 2 vertices.
    """
    parent = list(range(H.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    acyclic = True
    components = H.n
    for e in H.edges:
        roots = {find(v) for v in e}
        if len(roots) < len(e):
            acyclic = False
        roots = list(roots)
        for other in roots[1:]:
            parent[other] = roots[0]
        components -= len(roots) - 1
    return acyclic, components


def is_acyclic(H: Hypergraph) -> bool:
    return _forest_scan(H)[0]


def is_connected(H: Hypergraph) -> bool:
    return _forest_scan(H)[1] <= 1


def validate(H: Hypergraph) -> ValidationReport:
    """Check uniformity, linearity, connectivity, and acyclicity.

    Never raises: findings are returned as human-readable violations.
    """
    violations = []
    uniform = True
    for e in H.edges:
        if len(e) != H.r:
            uniform = False
            violations.append(f"edge {e} has {len(e)} vertices, expected {H.r}")
    linear = True
    for i, a in enumerate(H.edges):
        sa = set(a)
        for b in H.edges[i + 1 :]:
            shared = sa.intersection(b)
            if len(shared) > 1:
                linear = False
                violations.append(f"edges {a} and {b} share {len(shared)} vertices")
    acyclic, components = _forest_scan(H)
    connected = components <= 1
    if not connected:
        violations.append(f"{components} connected components")
    if not acyclic:
        violations.append("contains a cycle")
    return ValidationReport(
        uniform=uniform,
        linear=linear,
        connected=connected,
        acyclic=acyclic,
        is_hypertree=connected and acyclic,
        violations=tuple(violations),
    )


def degree(H: Hypergraph, v: int) -> int:
    """Number of edges containing v."""
    H.check_vertex(v)
    return sum(1 for e in H.edges if v in e)


def vertex_kind(H: Hypergraph, v: int) -> str:
    """'core' (degree 1), 'intersection' (degree > 1), or 'isolated'."""
    d = degree(H, v)
    if d == 0:
        return "isolated"
    return "core" if d == 1 else "intersection"


def is_pendent_edge(H: Hypergraph, e: Iterable[int]) -> bool:
    """An edge is pendent when all but one of its vertices have degree 1."""
    t = H.edge_tuple(e)
    core = sum(1 for v in t if degree(H, v) == 1)
    return core == len(t) - 1


# ---------------------------------------------------------------------------
# partial hypergraphs
# ---------------------------------------------------------------------------


def delete_edge(H: Hypergraph, e: Iterable[int]) -> Hypergraph:
    """Remove one edge, keeping every vertex."""
    t = H.edge_tuple(e)
    return Hypergraph(H.r, H.n, tuple(x for x in H.edges if x != t))


def delete_vertices(H: Hypergraph, remove: Iterable[int]) -> DeletionResult:
    """Keep exactly the edges contained in the remaining vertex set.

    Vertex ids are re-compacted (order preserving); the old->new map is
    returned so callers can track surviving vertices.
    """
    gone = set(remove)
    for v in gone:
        H.check_vertex(v)
    keep = [v for v in range(H.n) if v not in gone]
    vmap = {old: new for new, old in enumerate(keep)}
    edges = tuple(
        tuple(vmap[v] for v in e) for e in H.edges if gone.isdisjoint(e)
    )
    return DeletionResult(Hypergraph(H.r, len(keep), edges), vmap)


def delete_vertex(H: Hypergraph, v: int) -> DeletionResult:
    return delete_vertices(H, (v,))


def delete_edge_closed(H: Hypergraph, e: Iterable[int]) -> DeletionResult:
    """Remove all vertices of e (and with them every edge meeting e)."""
    return delete_vertices(H, H.edge_tuple(e))


def restrict(H: Hypergraph, vertices: Iterable[int]) -> DeletionResult:
    """Induced partial hypergraph on a vertex subset, ids re-compacted."""
    keep = set(vertices)
    return delete_vertices(H, (v for v in range(H.n) if v not in keep))


def disjoint_union(G: Hypergraph, H: Hypergraph) -> Hypergraph:
    """Disjoint union; vertex ids of H are shifted by G.n."""
    if G.r != H.r:
        raise ValueError(f"edge sizes differ: {G.r} vs {H.r}")
    shifted = tuple(tuple(v + G.n for v in e) for e in H.edges)
    return Hypergraph(G.r, G.n + H.n, G.edges + shifted)


def connected_components(H: Hypergraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, in sorted order."""
    parent = list(range(H.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in H.edges:
        root = find(e[0])
        for v in e[1:]:
            parent[find(v)] = root
    groups: dict[int, list[int]] = {}
    for v in range(H.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


# ---------------------------------------------------------------------------
# paths and the Helly property
# ---------------------------------------------------------------------------


def find_path(H: Hypergraph, u: int, v: int) -> Optional[list]:
    """Alternating vertex-edge path from u to v, or None if disconnected.

    Returned as [u, e1, w1, e2, ..., v] with edges as vertex tuples.  BFS
    gives a shortest path; on a hypertree the edge sequence is the unique
    one.
    """
    H.check_vertex(u)
    H.check_vertex(v)
    if u == v:
        return [u]
    incident: dict[int, list[tuple[int, ...]]] = {}
    for e in H.edges:
        for w in e:
            incident.setdefault(w, []).append(e)
    prev: dict[int, tuple[int, tuple[int, ...]]] = {}
    frontier = [u]
    seen = {u}
    while frontier:
        nxt = []
        for w in frontier:
            for e in incident.get(w, ()):
                for z in e:
                    if z not in seen:
                        seen.add(z)
                        prev[z] = (w, e)
                        if z == v:
                            path: list = [v]
                            cur = v
                            while cur != u:
                                back, via = prev[cur]
                                path.append(via)
                                path.append(back)
                                cur = back
                            path.reverse()
                            return path
                        nxt.append(z)
        frontier = nxt
    return None


def common_vertex(H: Hypergraph, edges: Iterable[Iterable[int]]) -> Optional[int]:
    """Lowest-id vertex lying in every given edge, or None.

    On a hypertree every intersecting family has such a vertex (the Helly
    property of subtree hypergraphs); for |F| >= 2 linearity makes it
    unique.
    """
    family = [H.edge_tuple(e) for e in edges]
    if not family:
        raise ValueError("empty edge family")
    shared = set(family[0])
    for e in family[1:]:
        shared.intersection_update(e)
    return min(shared) if shared else None


# ---------------------------------------------------------------------------
# canonical codes for hyperforests
# ---------------------------------------------------------------------------


def _incidence_adjacency(H: Hypergraph) -> list[list[int]]:
    """Adjacency of the incidence graph: nodes 0..n-1 vertices, n..n+m-1 edges."""
    adj: list[list[int]] = [[] for _ in range(H.n + H.m)]
    for j, e in enumerate(H.edges):
        node = H.n + j
        for v in e:
            adj[v].append(node)
            adj[node].append(v)
    return adj


def _component_nodes(H: Hypergraph) -> list[list[int]]:
    comps = connected_components(H)
    edge_home = {}
    for j, e in enumerate(H.edges):
        edge_home[H.n + j] = e[0]
    out = []
    for comp in comps:
        members = set(comp)
        nodes = list(comp) + [node for node, home in edge_home.items() if home in members]
        out.append(sorted(nodes))
    return out


def _tree_centers(adj: list[list[int]], nodes: list[int]) -> list[int]:
    """Center node(s) of a tree component by iterative leaf removal."""
    if len(nodes) == 1:
        return list(nodes)
    members = set(nodes)
    deg = {x: sum(1 for y in adj[x] if y in members) for x in nodes}
    remaining = set(nodes)
    layer = [x for x in nodes if deg[x] <= 1]
    while len(remaining) > 2:
        nxt = []
        for x in layer:
            remaining.discard(x)
            for y in adj[x]:
                if y in remaining:
                    deg[y] -= 1
                    if deg[y] == 1:
                        nxt.append(y)
        layer = nxt
    return sorted(remaining)


def _rooted_code(adj: list[list[int]], n: int, root: int) -> str:
    def go(node: int, parent: int) -> str:
        kids = sorted(go(x, node) for x in adj[node] if x != parent)
        tag = "v" if node < n else "e"
        return tag + "(" + "".join(kids) + ")"

    return go(root, -1)


def _rooted_code_aut(adj: list[list[int]], n: int, root: int) -> tuple[str, int]:
    def go(node: int, parent: int) -> tuple[str, int]:
        kids = [go(x, node) for x in adj[node] if x != parent]
        kids.sort(key=lambda t: t[0])
        aut = 1
        for _, sub_aut in kids:
            aut *= sub_aut
        i = 0
        while i < len(kids):
            j = i
            while j < len(kids) and kids[j][0] == kids[i][0]:
                j += 1
            aut *= math.factorial(j - i)
            i = j
        tag = "v" if node < n else "e"
        return tag + "(" + "".join(c for c, _ in kids) + ")", aut

    return go(root, -1)


def canonical_code(H: Hypergraph) -> CanonicalCode:
    """Canonical byte code of a hyperforest.

    Rooted AHU encoding of each incidence tree at its center(s), minimized
    over the at most two centers, with per-component codes sorted and
    concatenated.  Two hyperforests get equal codes iff they are
    isomorphic; cyclic input is rejected.
    """
    if not is_acyclic(H):
        raise ValueError("canonical code is defined for hyperforests only")
    adj = _incidence_adjacency(H)
    codes = []
    for nodes in _component_nodes(H):
        centers = _tree_centers(adj, nodes)
        codes.append(min(_rooted_code(adj, H.n, c) for c in centers))
    codes.sort()
    return (f"r{H.r}:" + "".join(codes)).encode("ascii")


def is_isomorphic(G: Hypergraph, H: Hypergraph) -> bool:
    """Isomorphism test for hyperforests via canonical codes."""
    if G.r != H.r or G.n != H.n or G.m != H.m:
        return False
    return canonical_code(G) == canonical_code(H)


def automorphism_count(H: Hypergraph) -> int:
    """Order of the automorphism group of a hyperforest.

    Computed on the incidence forest: within a component the root is the
    unique center, or the vertex-side center when there are two (the two
    centers always differ in kind, so no automorphism can swap them).
    Identical components multiply in with a factorial for each block.
    """
    if not is_acyclic(H):
        raise ValueError("automorphism count implemented for hyperforests only")
    adj = _incidence_adjacency(H)
    comps = []
    for nodes in _component_nodes(H):
        centers = _tree_centers(adj, nodes)
        root = centers[0] if len(centers) == 1 else min(c for c in centers if c < H.n)
        comps.append(_rooted_code_aut(adj, H.n, root))
    comps.sort(key=lambda t: t[0])
    total = 1
    i = 0
    while i < len(comps):
        j = i
        while j < len(comps) and comps[j][0] == comps[i][0]:
            total *= comps[j][1]
            j += 1
        total *= math.factorial(j - i)
        i = j
    return total


def relabel(H: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Apply a vertex permutation (perm[old] = new)."""
    if sorted(perm) != list(range(H.n)):
        raise ValueError("not a permutation of the vertex ids")
    return Hypergraph(H.r, H.n, tuple(tuple(perm[v] for v in e) for e in H.edges))


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------


def to_json_dict(H: Hypergraph) -> dict:
    """Stable JSON form: edges sorted ascending, lexicographic order."""
    return {"r": H.r, "n": H.n, "edges": [list(e) for e in H.edges]}


def from_json_dict(data: dict) -> Hypergraph:
    """Readers accept edges in any order; normalization re-sorts."""
    return Hypergraph(int(data["r"]), int(data["n"]), tuple(tuple(e) for e in data["edges"]))


def to_json(H: Hypergraph) -> str:
    return json.dumps(to_json_dict(H), separators=(", ", ": "))


def from_json(text: str) -> Hypergraph:
    return from_json_dict(json.loads(text))


def load(path: str) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json_dict(json.load(fh))


def save(H: Hypergraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json_dict(H), fh)
        fh.write("\n")
