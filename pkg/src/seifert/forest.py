"""Labeled forests: parsing, Dynkin/star generators, matchings, removal."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class ForestError(ValueError):
    """Invalid forest input (syntax, cycle, bad labels)."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Forest:
    """Acyclic graph on vertices 0..vertex_count-1; connectivity optional."""

    vertex_count: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        v = self.vertex_count
        if v < 0:
            raise ForestError("negative vertex count")
        seen = set()
        parent = list(range(v))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.edges:
            if len(e) != 2:
                raise ForestError("edge must be a pair")
            a, b = e
            if a == b:
                raise ForestError("self-loop at vertex %d" % a)
            if not (0 <= a < v and 0 <= b < v):
                raise ForestError("vertex label out of range: %r" % (e,))
            if e != _norm_edge(a, b):
                raise ForestError("edges must be stored as (min, max) pairs")
            if e in seen:
                raise ForestError("duplicate edge %r" % (e,))
            seen.add(e)
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ForestError("cycle detected")
            parent[ra] = rb

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Forest":
        return cls(vertex_count, frozenset(_norm_edge(u, v) for u, v in edges))

    @property
    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> List[int]:
        return sorted(a ^ b ^ v for a, b in self.edges if v in (a, b))

    def components(self) -> List[List[int]]:
        parent = list(range(self.vertex_count))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in self.edges:
            parent[find(a)] = find(b)
        comps: dict[int, List[int]] = {}
        for v in range(self.vertex_count):
            comps.setdefault(find(v), []).append(v)
        return sorted(comps.values())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_text(self) -> str:
        lines = ["v %d" % self.vertex_count]
        lines += ["e %d %d" % e for e in self.sorted_edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a forest."""

    edges: Tuple[Edge, ...]

    def __post_init__(self):
        used = set()
        for a, b in self.edges:
            if a in used or b in used:
                raise ForestError("matching edges share a vertex")
            used.update((a, b))
        if list(self.edges) != sorted(self.edges):
            raise ForestError("matching edges must be sorted")

    def __len__(self):
        return len(self.edges)

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for e in self.edges for v in e)


def parse_forest(text: str) -> Forest:
    """Parse the line-oriented forest format.

    Comment lines start with '#'; the first real line is "v <count>",
    followed by zero or more "e <u> <v>" lines.
    """
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v":
            if vertex_count is not None:
                raise ForestError("line %d: duplicate 'v' line" % lineno)
            if len(parts) != 2 or not parts[1].isdigit():
                raise ForestError("line %d: expected 'v <count>'" % lineno)
            vertex_count = int(parts[1])
        elif parts[0] == "e":
            if vertex_count is None:
                raise ForestError("line %d: 'e' before 'v'" % lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except (IndexError, ValueError):
                raise ForestError("line %d: expected 'e <u> <v>'" % lineno)
            if len(parts) != 3:
                raise ForestError("line %d: expected 'e <u> <v>'" % lineno)
            if _norm_edge(u, v) in (_norm_edge(a, b) for a, b in edges):
                raise ForestError("line %d: duplicate edge" % lineno)
            edges.append((u, v))
        else:
            raise ForestError("line %d: unknown directive %r" % (lineno, parts[0]))
    if vertex_count is None:
        raise ForestError("missing 'v <count>' line")
    return Forest.from_edges(vertex_count, edges)


def dynkin(family: str, n: int) -> Forest:
    """Simply-laced Dynkin tree A_n, D_n or E_n on n vertices."""
    family = family.upper()
    if family == "A":
        if n < 1:
            raise ForestError("A_n needs n >= 1")
        return Forest.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == "D":
        if n < 4:
            raise ForestError("D_n needs n >= 4")
        edges = [(i, i + 1) for i in range(n - 3)]
        edges += [(0, n - 2), (0, n - 1)]
        return Forest.from_edges(n, edges)
    if family == "E":
        if n not in (6, 7, 8):
            raise ForestError("E_n needs n in {6, 7, 8}")
        edges = [(i, i + 1) for i in range(n - 2)]
        edges.append((2, n - 1))
        return Forest.from_edges(n, edges)
    raise ForestError("unknown family %r" % family)


def star(n: int) -> Forest:
    """Star on n vertices: vertex 0 of degree n-1, the rest leaves."""
    if n < 2:
        raise ForestError("star needs n >= 2")
    return Forest.from_edges(n, [(0, i) for i in range(1, n)])


def path(n: int) -> Forest:
    return dynkin("A", n)


def remove_vertices(f: Forest, s) -> Forest:
    """Induced forest on the remaining vertices, relabeled 0..V-|s|-1
    preserving relative order."""
    s = set(s)
    for v in s:
        if not (0 <= v < f.vertex_count):
            raise ForestError("vertex %r not in forest" % (v,))
    keep = [v for v in range(f.vertex_count) if v not in s]
    new_label = {v: i for i, v in enumerate(keep)}
    edges = [(new_label[a], new_label[b]) for a, b in f.edges
             if a not in s and b not in s]
    return Forest.from_edges(len(keep), edges)


def disjoint_union(f: Forest, g: Forest) -> Forest:
    """f followed by g with g's labels shifted by f.vertex_count."""
    off = f.vertex_count
    edges = list(f.edges) + [(a + off, b + off) for a, b in g.edges]
    return Forest.from_edges(off + g.vertex_count, edges)


def relabel(f: Forest, perm: Sequence[int]) -> Forest:
    if sorted(perm) != list(range(f.vertex_count)):
        raise ForestError("not a permutation of 0..V-1")
    return Forest.from_edges(f.vertex_count,
                             [(perm[a], perm[b]) for a, b in f.edges])


def enumerate_matchings(f: Forest) -> List[Matching]:
    """All matchings, empty one included, in lexicographic order of their
    sorted edge lists."""
    edges = f.sorted_edges
    out: List[Matching] = []

    def gen(start: int, chosen: List[Edge], used: set):
        out.append(Matching(tuple(chosen)))
        for i in range(start, len(edges)):
            a, b = edges[i]
            if a in used or b in used:
                continue
            chosen.append(edges[i])
            used.update((a, b))
            gen(i + 1, chosen, used)
            chosen.pop()
            used.difference_update((a, b))

    gen(0, [], set())
    return out


def matchings_by_size(f: Forest) -> List[List[Matching]]:
    """enumerate_matchings grouped by size, order preserved within a size."""
    max_size = f.vertex_count // 2
    groups: List[List[Matching]] = [[] for _ in range(max_size + 1)]
    for m in enumerate_matchings(f):
        groups[len(m)].append(m)
    while len(groups) > 1 and not groups[-1]:
        groups.pop()
    return groups


def perfect_matching(f: Forest) -> Optional[Matching]:
    """The unique perfect matching of a forest, if any, by leaf peeling:
    a degree-1 vertex forces its edge."""
    degree = [0] * f.vertex_count
    adj: List[set] = [set() for _ in range(f.vertex_count)]
    for a, b in f.edges:
        adj[a].add(b)
        adj[b].add(a)
        degree[a] += 1
        degree[b] += 1
    alive = set(range(f.vertex_count))
    chosen = []
    leaves = [v for v in alive if degree[v] == 1]
    while leaves:
        v = leaves.pop()
        if v not in alive:
            continue
        if degree[v] == 0:
            return None
        w = next(iter(adj[v]))
        chosen.append(_norm_edge(v, w))
        for x, y in ((v, w), (w, v)):
            alive.discard(x)
            for z in adj[x]:
                adj[z].discard(x)
                degree[z] -= 1
                if degree[z] == 1 and z in alive:
                    leaves.append(z)
        adj[v].clear()
        adj[w].clear()
    if alive:
        return None  # leftover isolated vertices (or nothing matchable)
    return Matching(tuple(sorted(chosen)))
