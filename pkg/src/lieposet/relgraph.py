"""Relation graphs of height-one signed posets.

A relation graph has one vertex per pair {-i, i}.  A relation -i ≺ j gives a
solid edge {i, j} (a solid self-loop when i == j) and -i ≺ -j gives a dashed
edge {i, j}.  Each edge also stands for one row of the matrix M(G):

    dashed {i, j}, i < j   ->  x_i - x_j
    solid loop at i        ->  -2 x_i
    solid {i, j}, i != j   ->  -x_i - x_j

Row operations on M(G) are what the rewrites in this module preserve.  They
work on arbitrary graphs, not only on graphs that come from posets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .errors import (HeightError, NoEvenCycle, NotConnected, RewriteStuck,
                     SeparableInput)
from .poset import SignedPoset, fmt, height

SOLID = "solid"
DASHED = "dashed"


class Edge(NamedTuple):
    kind: str
    u: int
    v: int

    @classmethod
    def make(cls, kind: str, a: int, b: int) -> "Edge":
        if kind not in (SOLID, DASHED):
            raise ValueError(f"unknown edge kind {kind!r}")
        if kind == DASHED and a == b:
            raise ValueError("dashed self-loops do not exist")
        return cls(kind, min(a, b), max(a, b))

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u

    def sort_key(self) -> tuple:
        return (self.u, self.v, self.kind)


@dataclass(frozen=True)
class RelationGraph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(set(self.vertices))))
        vs = set(self.vertices)
        for e in self.edges:
            if e.u not in vs or e.v not in vs:
                raise ValueError(f"edge {e} has an endpoint outside the vertex set")
            if e.kind == DASHED and e.is_loop:
                raise ValueError("dashed self-loops do not exist")

    @classmethod
    def of(cls, vertices, solid=(), dashed=(), loops=()) -> "RelationGraph":
        edges = {Edge.make(SOLID, a, b) for a, b in solid}
        edges |= {Edge.make(DASHED, a, b) for a, b in dashed}
        edges |= {Edge.make(SOLID, i, i) for i in loops}
        return cls(tuple(vertices), frozenset(edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=Edge.sort_key)

    @property
    def dashed(self) -> list[Edge]:
        return sorted((e for e in self.edges if e.kind == DASHED), key=Edge.sort_key)

    @property
    def loops(self) -> list[Edge]:
        return sorted((e for e in self.edges if e.kind == SOLID and e.is_loop), key=Edge.sort_key)

    @property
    def solid(self) -> list[Edge]:
        return sorted((e for e in self.edges if e.kind == SOLID and not e.is_loop), key=Edge.sort_key)

    def incident(self, x: int) -> list[Edge]:
        return sorted((e for e in self.edges if x in (e.u, e.v)), key=Edge.sort_key)

    def degree(self, x: int) -> int:
        return sum(2 if e.is_loop else 1 for e in self.edges if x in (e.u, e.v))

    def has_pair(self, a: int, b: int) -> bool:
        a, b = min(a, b), max(a, b)
        return any(e.u == a and e.v == b for e in self.edges)

    def replace(self, remove: Edge, add: Edge) -> "RelationGraph":
        if remove not in self.edges:
            raise KeyError(remove)
        if add in self.edges:
            raise RewriteStuck(f"rewrite would duplicate edge {add}")
        return RelationGraph(self.vertices, (self.edges - {remove}) | {add})

    def remove(self, e: Edge) -> "RelationGraph":
        return RelationGraph(self.vertices, self.edges - {e})

    def components(self) -> list[tuple[int, ...]]:
        adj = {v: set() for v in self.vertices}
        for e in self.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = []
            queue = deque([s])
            seen.add(s)
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def subgraph(self, keep) -> "RelationGraph":
        keep = set(keep)
        return RelationGraph(tuple(keep), frozenset(e for e in self.edges if e.u in keep and e.v in keep))


def build_relation_graph(p: SignedPoset) -> RelationGraph:
    if height(p) > 1:
        raise HeightError(f"HeightError: relation graphs need height <= 1, poset has height {height(p)}")
    edges = set()
    for x, y in p.relations:
        if x == 0 or y == 0:
            continue
        if x < 0 < y:
            edges.add(Edge.make(SOLID, -x, y))
        elif y < 0:
            edges.add(Edge.make(DASHED, -x, -y))
    return RelationGraph(tuple(range(1, p.n + 1)), frozenset(edges))


@dataclass(frozen=True)
class ComponentInfo:
    vertices: tuple[int, ...]
    vertex_count: int
    edge_count: int
    has_odd_cycle: bool
    is_tree: bool
    is_single_odd_cycle: bool


@dataclass(frozen=True)
class ComponentCensus:
    components: tuple[ComponentInfo, ...]

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def eta(self) -> int:
        return sum(not c.has_odd_cycle for c in self.components)


def _is_bipartite(g: RelationGraph, comp: tuple[int, ...]) -> bool:
    members = set(comp)
    colour = {comp[0]: 0}
    queue = deque([comp[0]])
    adj: dict[int, list[int]] = {v: [] for v in comp}
    for e in g.edges:
        if e.u not in members:
            continue
        if e.is_loop:
            return False
        adj[e.u].append(e.v)
        adj[e.v].append(e.u)
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in colour:
                colour[y] = 1 - colour[x]
                queue.append(y)
            elif colour[y] == colour[x]:
                return False
    return True


def census(g: RelationGraph) -> ComponentCensus:
    infos = []
    for comp in g.components():
        members = set(comp)
        m = sum(1 for e in g.edges if e.u in members)
        odd = not _is_bipartite(g, comp)
        infos.append(ComponentInfo(comp, len(comp), m, odd,
                                   is_tree=(m == len(comp) - 1),
                                   is_single_odd_cycle=(m == len(comp) and odd)))
    return ComponentCensus(tuple(infos))


class Violation(NamedTuple):
    pattern: str
    i: int
    j: int
    k: int | None = None


def forbidden_patterns(g: RelationGraph) -> list[Violation]:
    """All occurrences of the two-edge subgraphs a height-one poset cannot produce.

    (a) dashed {i,j} with a loop at j, i > j
    (b) a dashed and a solid edge on the same pair
    (c) dashed {i,j} and solid {j,k}, i > j
    (d) dashed {i,j}, {j,k} with j strictly between i and k
    """
    out = []
    loops = {e.u for e in g.loops}
    solid_pairs = {(e.u, e.v) for e in g.solid}
    for d in g.dashed:
        a, b = d.u, d.v  # a < b
        if a in loops:
            out.append(Violation("a", b, a))
        if (a, b) in solid_pairs:
            out.append(Violation("b", a, b))
        for s in g.solid:
            if a in (s.u, s.v):
                k = s.other(a)
                if k != b:
                    out.append(Violation("c", b, a, k))
    for j in g.vertices:
        nbrs = [e.other(j) for e in g.dashed if j in (e.u, e.v)]
        lower = sorted(x for x in nbrs if x < j)
        upper = sorted(x for x in nbrs if x > j)
        out.extend(Violation("d", i, j, k) for i in lower for k in upper)
    return out


def m_rows(g: RelationGraph) -> list[list[int]]:
    """Rows of M(G): dashed (lexicographic), then loops, then solid edges."""
    col = {v: c for c, v in enumerate(g.vertices)}
    rows = []
    for e in g.dashed + g.loops + g.solid:
        row = [0] * len(g.vertices)
        if e.kind == DASHED:
            row[col[e.u]] += 1
            row[col[e.v]] -= 1
        elif e.is_loop:
            row[col[e.u]] -= 2
        else:
            row[col[e.u]] -= 1
            row[col[e.v]] -= 1
        rows.append(row)
    return rows


def _sign(e: Edge) -> int:
    return -1 if e.kind == SOLID else 1


def _tree_path(parent: dict, x: int) -> list[int]:
    path = [x]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]][0])
    return path


def unbalanced_cycle(g: RelationGraph) -> list[Edge] | None:
    """A non-loop cycle with an odd number of solid edges, or None.

    Uses sign potentials along a BFS forest: every unbalanced graph has an
    unbalanced fundamental cycle.
    """
    adj: dict[int, list[Edge]] = {v: [] for v in g.vertices}
    for e in g.sorted_edges():
        if not e.is_loop:
            adj[e.u].append(e)
            adj[e.v].append(e)
    parent: dict[int, tuple[int, Edge] | None] = {}
    sign: dict[int, int] = {}
    tree_edges: set[Edge] = set()
    for root in g.vertices:
        if root in parent:
            continue
        parent[root] = None
        sign[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for e in adj[x]:
                y = e.other(x)
                if y not in parent:
                    parent[y] = (x, e)
                    sign[y] = sign[x] * _sign(e)
                    tree_edges.add(e)
                    queue.append(y)
    for e in g.sorted_edges():
        if e.is_loop or e in tree_edges:
            continue
        # balanced edge: sign[u] * sign[v] == sign(e)
        if sign[e.u] * sign[e.v] != _sign(e):
            return _fundamental_cycle(parent, e)
    return None


def _fundamental_cycle(parent: dict, e: Edge) -> list[Edge]:
    pu = _tree_path(parent, e.u)
    pv = _tree_path(parent, e.v)
    common = set(pu) & set(pv)
    lca = next(x for x in pu if x in common)
    edges = []
    for path in (pu, pv):
        for x in path:
            if x == lca:
                break
            edges.append(parent[x][1])
    edges.append(e)
    return edges


def simple_cycles(g: RelationGraph) -> Iterator[list[Edge]]:
    """Every simple cycle of length >= 2 (loops excluded) once, as an edge list."""
    adj: dict[int, list[Edge]] = {v: [] for v in g.vertices}
    for e in g.sorted_edges():
        if not e.is_loop:
            adj[e.u].append(e)
            adj[e.v].append(e)
    seen: set[frozenset[Edge]] = set()
    for start in g.vertices:
        stack = [(start, [start], [])]
        while stack:
            x, path, used = stack.pop()
            for e in adj[x]:
                if used and e == used[-1]:
                    continue
                y = e.other(x)
                if y == start and used:
                    key = frozenset(used + [e])
                    if key not in seen:
                        seen.add(key)
                        yield used + [e]
                elif y > start and y not in path:
                    stack.append((y, path + [y], used + [e]))


def balanced_cycle(g: RelationGraph) -> list[Edge] | None:
    """A non-loop cycle with an even number of solid edges, or None."""
    for cyc in simple_cycles(g):
        if sum(e.kind == SOLID for e in cyc) % 2 == 0:
            return cyc
    return None


class RewriteStep(NamedTuple):
    rule: str
    removed: Edge
    added: Edge
    graph: RelationGraph


def dashed_elimination_steps(g: RelationGraph) -> Iterator[RewriteStep]:
    """Yield each rewrite that trades a dashed edge for a solid edge or loop.

    Rules, tried in this order:

    loop-path      a loop exists: the dashed edge reached first from a loop
                   along solid edges becomes solid on the same pair
    odd-cycle      no loop, some cycle has an odd number of solid edges: a
                   dashed edge of that cycle (any edge if none is dashed)
                   becomes a loop at its smaller endpoint
    adjacent-solid otherwise: dashed {i,j} next to solid {j,k} becomes solid {i,k}

    Every step replaces one row of M(G) by a ±1 combination of rows that
    includes it, so rank(M) is unchanged.
    """
    if not g.is_connected():
        raise NotConnected("dashed-edge elimination needs a connected graph")
    if not g.solid and not g.loops:
        raise SeparableInput("dashed-edge elimination needs a solid edge or a loop")
    while g.dashed:
        if g.loops:
            step = _loop_path_step(g)
        else:
            cyc = unbalanced_cycle(g)
            step = _odd_cycle_step(g, cyc) if cyc is not None else _adjacent_solid_step(g)
        yield step
        g = step.graph


def eliminate_dashed(g: RelationGraph) -> RelationGraph:
    for step in dashed_elimination_steps(g):
        g = step.graph
    return g


def _loop_path_step(g: RelationGraph) -> RewriteStep:
    reached = {e.u for e in g.loops}
    queue = deque(sorted(reached))
    while queue:
        x = queue.popleft()
        for e in g.incident(x):
            if e.kind == SOLID and not e.is_loop:
                y = e.other(x)
                if y not in reached:
                    reached.add(y)
                    queue.append(y)
    d = next(e for e in g.dashed if e.u in reached or e.v in reached)
    new = Edge.make(SOLID, d.u, d.v)
    return RewriteStep("loop-path", d, new, g.replace(d, new))


def _odd_cycle_step(g: RelationGraph, cyc: list[Edge]) -> RewriteStep:
    dashed = sorted((e for e in cyc if e.kind == DASHED), key=Edge.sort_key)
    target = dashed[0] if dashed else min(cyc, key=Edge.sort_key)
    loop = Edge.make(SOLID, target.u, target.u)
    return RewriteStep("odd-cycle", target, loop, g.replace(target, loop))


def _adjacent_solid_step(g: RelationGraph) -> RewriteStep:
    for d in g.dashed:
        for j in (d.u, d.v):
            i = d.other(j)
            for s in g.solid:
                if j not in (s.u, s.v):
                    continue
                k = s.other(j)
                if k == i or g.has_pair(i, k):
                    continue
                new = Edge.make(SOLID, i, k)
                return RewriteStep("adjacent-solid", d, new, g.replace(d, new))
    raise RewriteStuck("no dashed edge has a usable solid neighbour")


def delete_even_cycle_edge(g: RelationGraph) -> RelationGraph:
    """Drop one edge of a cycle carrying an even number of solid edges.

    That edge's row of M(G) is a ±1 combination of the other rows of the
    cycle, so rank(M) is unchanged.  A dashed cycle edge is preferred so that
    solid edges survive.
    """
    cyc = balanced_cycle(g)
    if cyc is None:
        raise NoEvenCycle("graph has no cycle with an even number of solid edges")
    dashed = sorted((e for e in cyc if e.kind == DASHED), key=Edge.sort_key)
    victim = dashed[0] if dashed else min(cyc, key=Edge.sort_key)
    return g.remove(victim)


def relation_graph_dot(g: RelationGraph, name: str = "RG") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  {v} [label="{v}"];' for v in g.vertices]
    for e in g.sorted_edges():
        style = " [style=dashed]" if e.kind == DASHED else ""
        lines.append(f"  {e.u} -- {e.v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_dot(p: SignedPoset, name: str = "Hasse") -> str:
    def node(x: int) -> str:
        return f"m{-x}" if x < 0 else f"p{x}"

    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    lines += [f'  {node(x)} [label="{fmt(x)}"];' for x in p.elements]
    lines += [f"  {node(x)} -> {node(y)};" for x, y in p.covers()]
    lines.append("}")
    return "\n".join(lines) + "\n"
