"""Multidigraphs attached to the interpolating arrangements and the burning run.

For parameters (n, k) the graph has an arc (i, j) for every equality
hyperplane x_i = x_j and an arc (j, i) for every offset hyperplane
x_i = x_j + c.  Its rooted companion adds a vertex 0 joined to everything,
reverses all arcs, and fixes a deterministic neighbor order; a depth-first
burn over that order decides membership in the graph's parking-function set
and, on success, produces a spanning tree that the inverse replay turns back
into the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Word


def _check_nk(n: int, k: int) -> None:
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    if not 2 <= k <= n:
        raise ValueError(f"k={k} outside [2, {n}]")


@dataclass(frozen=True, eq=False)
class MultiDiGraph:
    """Loopless directed multigraph on [1, n]; arcs carry multiplicities."""

    n: int
    arcs: tuple[tuple[int, int, int], ...]   # (source, target, multiplicity)

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(tuple(arc) for arc in self.arcs))
        if self.n < 1:
            raise ValueError("n must be >= 1")
        seen = set()
        out: dict[int, list[tuple[int, int]]] = {u: [] for u in range(1, self.n + 1)}
        for u, v, mult in self.arcs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u}, {v}) outside [1, {self.n}]")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if mult < 1:
                raise ValueError(f"arc ({u}, {v}) with multiplicity {mult}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc entry ({u}, {v})")
            seen.add((u, v))
            out[u].append((v, mult))
        object.__setattr__(self, "_out", out)

    def multiplicity(self, u: int, v: int) -> int:
        for target, mult in self._out.get(u, ()):
            if target == v:
                return mult
        return 0

    def out_arcs(self, u: int) -> list[tuple[int, int]]:
        """Outgoing (target, multiplicity) pairs of u."""
        return list(self._out[u])

    def total_arcs(self) -> int:
        return sum(mult for _, _, mult in self.arcs)

    def is_connected(self) -> bool:
        """Connectivity of the underlying undirected graph."""
        if self.n == 1:
            return True
        adj: dict[int, set[int]] = {u: set() for u in range(1, self.n + 1)}
        for u, v, _ in self.arcs:
            adj[u].add(v)
            adj[v].add(u)
        seen = {1}
        stack = [1]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n


def build_gkn(n: int, k: int) -> MultiDiGraph:
    """Graph for parameters (n, k): k = 2 gives the complete digraph.

    Arcs: (i, j) for every 1 <= i < j <= n; (j, 1) with multiplicity
    min(j, k) - 1 for every j >= 2; (j, i) for every k <= i < j <= n.
    """
    _check_nk(n, k)
    counts: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            counts[(i, j)] = counts.get((i, j), 0) + 1
    for j in range(2, n + 1):
        counts[(j, 1)] = counts.get((j, 1), 0) + min(j, k) - 1
    for i in range(k, n + 1):
        for j in range(i + 1, n + 1):
            counts[(j, i)] = counts.get((j, i), 0) + 1
    arcs = tuple((u, v, m) for (u, v), m in sorted(counts.items()))
    g = MultiDiGraph(n, arcs)
    assert g.is_connected(), "construction always yields a connected graph"
    return g


@dataclass(frozen=True, eq=False)
class RootedGraph:
    """Root 0 joined to every vertex, arcs reversed, neighbor lists ordered.

    Entry j of a neighbor list addresses the vertex Mod(j, n) in [1, n];
    parallel arcs to the same vertex are told apart by j = v + m*n with
    m = 0, 1, ...  The orders are fixed: N(0) = <n, ..., 1>; N(1) sorted by
    target descending then m descending; N(i) for i >= 2 sorted by target
    descending, where targets above i exist exactly when i >= k.
    """

    n: int
    k: int
    neighbors: tuple[tuple[int, ...], ...]   # index 0..n

    def __post_init__(self) -> None:
        object.__setattr__(self, "neighbors", tuple(tuple(lst) for lst in self.neighbors))
        if len(self.neighbors) != self.n + 1:
            raise ValueError("need one neighbor list per vertex 0..n")
        if self.neighbors[0] != tuple(range(self.n, 0, -1)):
            raise ValueError("the root list must be <n, ..., 1>")
        for i, lst in enumerate(self.neighbors):
            if len(set(lst)) != len(lst):
                raise ValueError(f"repeated encoded entry in list of vertex {i}")
            for j in lst:
                if j < 1:
                    raise ValueError(f"encoded entry {j} in list of vertex {i}")

    def decode(self, j: int) -> int:
        """Vertex addressed by an encoded entry: the representative of j in [1, n]."""
        return (j - 1) % self.n + 1


def build_rooted(n: int, k: int) -> RootedGraph:
    _check_nk(n, k)
    lists: list[tuple[int, ...]] = [tuple(range(n, 0, -1))]
    from_one: list[int] = []
    for i in range(n, 1, -1):
        for m in range(min(i, k) - 2, -1, -1):
            from_one.append(i + m * n)
    lists.append(tuple(from_one))
    for i in range(2, n + 1):
        highs = list(range(n, i, -1)) if i >= k else []
        lows = list(range(i - 1, 0, -1))
        lists.append(tuple(highs + lows))
    return RootedGraph(n, k, tuple(lists))


@dataclass(frozen=True, eq=False)
class BurnReport:
    """Outcome of one depth-first burn: visit order, tree arcs, dampened arcs."""

    burnt: tuple[int, ...]                    # starts with the root 0
    tree: tuple[tuple[int, int], ...]         # encoded arcs, in insertion order
    dampened: tuple[tuple[int, int], ...]     # encoded arcs, in insertion order
    success: bool                             # all of {0} u [n] burnt

    def to_json(self) -> dict:
        return {
            "burnt": list(self.burnt),
            "tree": [list(arc) for arc in self.tree],
            "damp": [list(arc) for arc in self.dampened],
            "success": self.success,
        }


def dfs_burn(g: RootedGraph, a: Word) -> BurnReport:
    """Depth-first burn from the root over the ordered neighbor lists.

    An unburnt target with count 1 burns (arc joins the tree, search
    descends); otherwise the arc is dampened and the count drops by one.
    The recursion of the textbook formulation is replaced by an explicit
    frame stack, preserving the exact visit order.
    """
    if a.n != g.n:
        raise ValueError(f"dimension mismatch: word n={a.n}, graph n={g.n}")
    n = g.n
    vals = [0] + list(a.values)
    burnt_flag = [False] * (n + 1)
    burnt_flag[0] = True
    burnt = [0]
    tree: list[tuple[int, int]] = []
    damp: list[tuple[int, int]] = []
    stack: list[list[int]] = [[0, 0]]
    while stack:
        frame = stack[-1]
        i, pos = frame
        nbrs = g.neighbors[i]
        if pos == len(nbrs):
            stack.pop()
            continue
        frame[1] = pos + 1
        j = nbrs[pos]
        jn = (j - 1) % n + 1
        if burnt_flag[jn]:
            continue
        if vals[jn] == 1:
            tree.append((i, j))
            burnt.append(jn)
            burnt_flag[jn] = True
            stack.append([jn, 0])
        else:
            damp.append((i, j))
            vals[jn] -= 1
    return BurnReport(tuple(burnt), tuple(tree), tuple(damp), len(burnt) == n + 1)


def tree_to_word(g: RootedGraph, tree: Iterable[Sequence[int]]) -> Word:
    """Replay the traversal with the given spanning tree pinned; recover the word.

    The tree must consist of encoded arcs of g, oriented away from the root,
    with every vertex of [1, n] entered exactly once.  Starting from the
    all-ones word, every non-tree arc scanned into a not-yet-entered vertex
    bumps that vertex's entry by one.
    """
    n = g.n
    arcs = [tuple(arc) for arc in tree]
    if len(arcs) != n:
        raise ValueError(f"a spanning tree of the rooted graph has {n} arcs, got {len(arcs)}")
    parent: dict[int, int] = {}
    for i, j in arcs:
        if not 0 <= i <= n:
            raise ValueError(f"arc source {i} outside [0, {n}]")
        if j not in g.neighbors[i]:
            raise ValueError(f"arc ({i}, {j}) is not an arc of the graph")
        jn = g.decode(j)
        if jn in parent:
            raise ValueError(f"vertex {jn} entered twice: not a tree")
        parent[jn] = i
    reached = {0}
    frontier = True
    while frontier:
        frontier = False
        for jn, i in parent.items():
            if jn not in reached and i in reached:
                reached.add(jn)
                frontier = True
    if len(reached) != n + 1:
        raise ValueError("arcs are not oriented away from the root: not a spanning tree")

    tree_set = set(arcs)
    vals = [1] * (n + 1)
    burnt_flag = [False] * (n + 1)
    burnt_flag[0] = True
    stack: list[list[int]] = [[0, 0]]
    while stack:
        frame = stack[-1]
        i, pos = frame
        nbrs = g.neighbors[i]
        if pos == len(nbrs):
            stack.pop()
            continue
        frame[1] = pos + 1
        j = nbrs[pos]
        jn = (j - 1) % n + 1
        if burnt_flag[jn]:
            continue
        if (i, j) in tree_set:
            burnt_flag[jn] = True
            stack.append([jn, 0])
        else:
            vals[jn] += 1
    return Word(tuple(vals[1:]))


def is_g_parking(g: RootedGraph, a: Word) -> bool:
    """Membership via burning: the run must burn every vertex."""
    return dfs_burn(g, a).success


def is_g_parking_bruteforce(g: MultiDiGraph, a: Word) -> bool:
    """Membership straight from the definition, over all vertex subsets.

    For every non-empty I subset of [n] some i in I must send at least
    a[i] - 1 arcs (with multiplicity) out of I.
    """
    if a.n != g.n:
        raise ValueError(f"dimension mismatch: word n={a.n}, graph n={g.n}")
    n = g.n
    if n > 16:
        raise ValueError(f"subset sweep refused for n={n} > 16")
    vals = a.values
    out = [[] for _ in range(n + 1)]
    for u, v, mult in g.arcs:
        out[u].append((v, mult))
    for mask in range(1, 1 << n):
        found = False
        for i in range(1, n + 1):
            if not mask >> (i - 1) & 1:
                continue
            need = vals[i - 1] - 1
            if need <= 0:
                found = True
                break
            deg = 0
            for v, mult in out[i]:
                if not mask >> (v - 1) & 1:
                    deg += mult
                    if deg >= need:
                        break
            if deg >= need:
                found = True
                break
        if not found:
            return False
    return True


def graph_to_dot(g: MultiDiGraph, name: str = "g") -> str:
    """DOT rendering with parallel arcs drawn separately, labelled by copy index."""
    lines = [f"digraph {name} {{"]
    for v in range(1, g.n + 1):
        lines.append(f"  {v};")
    for u, v, mult in g.arcs:
        if mult == 1:
            lines.append(f"  {u} -> {v};")
        else:
            for m in range(mult):
                lines.append(f'  {u} -> {v} [label="{m}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def rooted_to_dot(g: RootedGraph, name: str = "rooted") -> str:
    """DOT rendering of the rooted graph; encoded parallel arcs keep their code."""
    lines = [f"digraph {name} {{"]
    for v in range(0, g.n + 1):
        lines.append(f"  {v};")
    for i, nbrs in enumerate(g.neighbors):
        for j in nbrs:
            jn = g.decode(j)
            if j == jn:
                lines.append(f"  {i} -> {jn};")
            else:
                lines.append(f'  {i} -> {jn} [label="{j}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
