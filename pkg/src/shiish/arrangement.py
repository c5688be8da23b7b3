"""Hyperplane families between the Shi and Ish arrangements.

An arrangement is a list of hyperplanes x_p - x_q = c.  A region is a
feasible total choice of side (strictly below or strictly above) for every
hyperplane; feasibility of the strict system is decided exactly with a
difference-constraint graph over scaled integers, and a rational witness
point falls out of the shortest-path potentials.  Regions are enumerated by
breadth-first search from the base chamber, flipping one sign at a time,
and labelled three independent ways.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .core import BudgetError, Label, Permutation

#: Default ceiling on n for full region enumeration ((n+1)**(n-1) chambers).
DEFAULT_REGION_MAX_N = 6

BELOW = 0
ABOVE = 1

SignAssignment = Union[Mapping[int, int], Sequence[Optional[int]]]


@dataclass(frozen=True)
class Hyperplane:
    """The hyperplane x_p - x_q = c, with p < q and c >= 0."""

    p: int
    q: int
    c: int

    def __post_init__(self) -> None:
        if not 1 <= self.p < self.q:
            raise ValueError(f"need 1 <= p < q, got p={self.p}, q={self.q}")
        if self.c < 0:
            raise ValueError(f"offset must be >= 0, got {self.c}")

    def equation(self) -> str:
        if self.c == 0:
            return f"x{self.p} = x{self.q}"
        return f"x{self.p} = x{self.q} + {self.c}"


@dataclass(frozen=True, eq=False)
class ArrangementSpec:
    """Parameters (n, k) plus the canonical ordered hyperplane list."""

    n: int
    k: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self) -> None:
        index = {}
        offsets: dict[tuple[int, int], int] = {}
        for pos, hp in enumerate(self.hyperplanes):
            if hp.q > self.n:
                raise ValueError(f"{hp} uses a coordinate beyond n={self.n}")
            key = (hp.p, hp.q, hp.c)
            if key in index:
                raise ValueError(f"duplicate hyperplane {hp}")
            index[key] = pos
            if hp.c >= 1:
                pair = (hp.p, hp.q)
                offsets[pair] = max(offsets.get(pair, 0), hp.c)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_max_offset", offsets)

    def index_of(self, p: int, q: int, c: int) -> int:
        return self._index[(p, q, c)]

    def has_hyperplane(self, p: int, q: int, c: int) -> bool:
        return (p, q, c) in self._index

    def max_offset(self, i: int, j: int) -> int:
        """Largest positive offset c with x_i - x_j = c in the arrangement, else 0."""
        return self._max_offset.get((i, j), 0)


def build_arrangement(n: int, k: int) -> ArrangementSpec:
    """Canonical arrangement for (n, k); k = 2 is Shi, k = n is Ish.

    Hyperplanes: x_i = x_j for all i < j; x_1 = x_j + c for 1 <= c < min(j, k);
    x_i = x_j + 1 for k <= i < j.  Sorted by (p, q, c).
    """
    if n < 2:
        raise ValueError(f"n={n} must be >= 2")
    if not 2 <= k <= n:
        raise ValueError(f"k={k} outside [2, {n}]")
    planes = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            planes.add((i, j, 0))
    for j in range(2, n + 1):
        for c in range(1, min(j, k)):
            planes.add((1, j, c))
    for i in range(k, n + 1):
        for j in range(i + 1, n + 1):
            planes.add((i, j, 1))
    ordered = tuple(Hyperplane(*t) for t in sorted(planes))
    return ArrangementSpec(n, k, ordered)


@dataclass(frozen=True)
class Region:
    """A chamber, identified by its side of every hyperplane (0 below, 1 above).

    A rational interior point is kept alongside; construction checks that it
    satisfies every strict inequality, so a Region certifies its own
    non-emptiness.  Equality and hashing use the sign vector only.
    """

    spec: ArrangementSpec = field(compare=False, repr=False)
    signs: tuple[int, ...]
    witness: tuple[Fraction, ...] = field(compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "signs", tuple(self.signs))
        object.__setattr__(self, "witness", tuple(Fraction(x) for x in self.witness))
        spec = self.spec
        if len(self.signs) != len(spec.hyperplanes):
            raise ValueError("one sign per hyperplane required")
        if len(self.witness) != spec.n:
            raise ValueError("witness has the wrong dimension")
        for s, hp in zip(self.signs, spec.hyperplanes):
            if s not in (BELOW, ABOVE):
                raise ValueError(f"sign {s!r} is neither below (0) nor above (1)")
            diff = self.witness[hp.p - 1] - self.witness[hp.q - 1]
            if s == BELOW and not diff < hp.c:
                raise ValueError(f"witness violates {hp.equation()} side 'below'")
            if s == ABOVE and not diff > hp.c:
                raise ValueError(f"witness violates {hp.equation()} side 'above'")

    def sign_string(self) -> str:
        return "".join("1" if s == ABOVE else "0" for s in self.signs)


@dataclass(frozen=True, eq=False)
class RegionDescription:
    """Coordinate order plus the pairwise difference information of a region.

    `windows` holds triples (i, j, a): the difference x_i - x_j sits in the
    open unit window (a - 1, a) cut out by an actual hyperplane.  `overflow`
    holds pairs (i, j) with x_i > x_j whose difference has cleared every
    offset hyperplane available for that pair.
    """

    w: Permutation
    windows: frozenset[tuple[int, int, int]]
    overflow: frozenset[tuple[int, int]]


@dataclass(frozen=True, eq=False)
class Diagram:
    """Arc-decorated permutation word: the windows that survive the omission rule."""

    w: Permutation
    arcs: tuple[tuple[int, int, int], ...]


def _scaled_edges(spec: ArrangementSpec, assigned: list[tuple[int, int]], scale: int):
    """Difference-constraint edges for the strict system, scaled to integers.

    Each strict constraint x_u - x_v < b becomes the slack constraint
    X_u - X_v <= b*scale - 1 on X = scale*x, i.e. an edge v -> u of that
    weight.  With scale > number of constraints, the scaled system has a
    negative cycle exactly when the strict system is infeasible.
    """
    edges = []
    for pos, side in assigned:
        hp = spec.hyperplanes[pos]
        if side == BELOW:
            edges.append((hp.q - 1, hp.p - 1, hp.c * scale - 1))
        else:
            edges.append((hp.p - 1, hp.q - 1, -hp.c * scale - 1))
    return edges


def _solve(spec: ArrangementSpec, assigned: list[tuple[int, int]]) -> Optional[list[Fraction]]:
    """Shortest-path relaxation over the constraint graph; witness or None.

    All potentials start at zero (equivalent to a virtual source), so n
    relaxation rounds suffice; one more scan that still relaxes means a
    negative cycle, hence infeasibility.
    """
    n = spec.n
    scale = len(assigned) + 1
    edges = _scaled_edges(spec, assigned, scale)
    dist = [0] * n
    for _ in range(n):
        changed = False
        for u, v, wgt in edges:
            alt = dist[u] + wgt
            if alt < dist[v]:
                dist[v] = alt
                changed = True
        if not changed:
            break
    else:
        for u, v, wgt in edges:
            if dist[u] + wgt < dist[v]:
                return None
    return [Fraction(d, scale) for d in dist]


def _normalize_assignment(spec: ArrangementSpec, signs: SignAssignment) -> list[tuple[int, int]]:
    if isinstance(signs, Mapping):
        items = sorted(signs.items())
    else:
        items = [(pos, side) for pos, side in enumerate(signs) if side is not None]
        if len(signs) > len(spec.hyperplanes):
            raise ValueError("more signs than hyperplanes")
    for pos, side in items:
        if not 0 <= pos < len(spec.hyperplanes):
            raise ValueError(f"hyperplane index {pos} out of range")
        if side not in (BELOW, ABOVE):
            raise ValueError(f"sign {side!r} is neither below (0) nor above (1)")
    return items


def is_feasible(spec: ArrangementSpec, signs: SignAssignment) -> bool:
    """Does the (partial or total) strict sign assignment cut out a non-empty set?"""
    return _solve(spec, _normalize_assignment(spec, signs)) is not None


def base_region(spec: ArrangementSpec) -> Region:
    """The chamber of the equally spaced point x_i = (n - i)/n.

    All coordinates descend with gaps below one, so the region lies above
    every equality hyperplane and below every offset hyperplane.
    """
    n = spec.n
    witness = tuple(Fraction(n - i, n) for i in range(1, n + 1))
    signs = tuple(ABOVE if hp.c == 0 else BELOW for hp in spec.hyperplanes)
    return Region(spec, signs, witness)


def _increment_index(hp: Hyperplane) -> int:
    # Crossing an equality hyperplane away from the base bumps coordinate p;
    # crossing any offset hyperplane bumps coordinate q.
    return hp.p if hp.c == 0 else hp.q


def enumerate_regions(
    spec: ArrangementSpec, max_n: int = DEFAULT_REGION_MAX_N
) -> list[tuple[Region, Label]]:
    """All chambers with their labels, by sign-flip search from the base chamber.

    Neighbors differ in exactly one sign; a flip survives only if the new
    sign vector is feasible.  Crossing a hyperplane away from the base side
    adds the hyperplane's increment to the label, crossing back subtracts
    it.  Output is sorted by sign vector, so the search order never shows.
    """
    if spec.n > max_n:
        raise BudgetError(f"region enumeration refused for n={spec.n} > {max_n}")
    base = base_region(spec)
    base_signs = base.signs
    hyperplanes = spec.hyperplanes
    n_planes = len(hyperplanes)
    labels: dict[tuple[int, ...], tuple[int, ...]] = {base_signs: (1,) * spec.n}
    regions: dict[tuple[int, ...], Region] = {base_signs: base}
    dead: set[tuple[int, ...]] = set()
    queue = deque([base_signs])
    while queue:
        signs = queue.popleft()
        label = labels[signs]
        for pos in range(n_planes):
            flipped = signs[:pos] + (1 - signs[pos],) + signs[pos + 1 :]
            if flipped in labels or flipped in dead:
                continue
            witness = _solve(spec, list(enumerate(flipped)))
            if witness is None:
                dead.add(flipped)
                continue
            idx = _increment_index(hyperplanes[pos]) - 1
            delta = 1 if signs[pos] == base_signs[pos] else -1
            new_label = label[:idx] + (label[idx] + delta,) + label[idx + 1 :]
            labels[flipped] = new_label
            regions[flipped] = Region(spec, flipped, tuple(witness))
            queue.append(flipped)
    return [(regions[s], Label(labels[s])) for s in sorted(regions)]


def label_direct(spec: ArrangementSpec, region: Region) -> Label:
    """Label from scratch: all-ones plus one increment per separating hyperplane."""
    base_signs = base_region(spec).signs
    entries = [1] * spec.n
    for s, b, hp in zip(region.signs, base_signs, spec.hyperplanes):
        if s != b:
            entries[_increment_index(hp) - 1] += 1
    return Label(tuple(entries))


def describe(spec: ArrangementSpec, region: Region) -> RegionDescription:
    """Read the coordinate order and per-pair difference windows off the signs."""
    n = spec.n
    signs = region.signs
    above = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            above[(i, j)] = signs[spec.index_of(i, j, 0)] == ABOVE
    # In a chamber the comparisons form a strict total order, so the number
    # of coordinates each one beats determines its rank.
    wins = {i: 0 for i in range(1, n + 1)}
    for (i, j), is_above in above.items():
        if is_above:
            wins[i] += 1
        else:
            wins[j] += 1
    order = sorted(range(1, n + 1), key=lambda v: -wins[v])
    windows = set()
    overflow = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not above[(i, j)]:
                continue
            cut = None
            for c in range(1, spec.max_offset(i, j) + 1):
                if signs[spec.index_of(i, j, c)] == BELOW:
                    cut = c
                    break
            if cut is None:
                overflow.add((i, j))
            else:
                windows.add((i, j, cut))
    return RegionDescription(Permutation(tuple(order)), frozenset(windows), frozenset(overflow))


def label_from_description(spec: ArrangementSpec, desc: RegionDescription) -> Label:
    """Label from the description: order statistic plus window and overflow bumps.

    Start from t with t[w_i] = |{j <= i : w_j >= w_i}|, add (a - 1) to
    coordinate j for every window (i, j, a), and add the pair's maximal
    offset to coordinate j for every overflow pair (i, j).
    """
    images = desc.w.images
    entries = [0] * spec.n
    for pos, v in enumerate(images, start=1):
        entries[v - 1] = sum(1 for u in images[:pos] if u >= v)
    for _, j, a in desc.windows:
        entries[j - 1] += a - 1
    for i, j in desc.overflow:
        entries[j - 1] += spec.max_offset(i, j)
    return Label(tuple(entries))


def draw_diagram(spec: ArrangementSpec, desc: RegionDescription) -> Diagram:
    """Apply the omission rule: drop a window nested inside an equal-valued one.

    Nesting is read along the displayed word: the arc of (j, p, a) is
    omitted when some other window (i, m, a) has i positioned at or before j
    and m positioned at or after p.  Equal-valued nested windows carry no
    extra information, since the outer difference bounds the inner one.
    """
    position = {v: pos for pos, v in enumerate(desc.w.images, start=1)}
    kept = []
    for j, p, a in sorted(desc.windows):
        dominated = any(
            (i, m) != (j, p)
            and am == a
            and position[i] <= position[j]
            and position[p] <= position[m]
            for i, m, am in desc.windows
        )
        if not dominated:
            kept.append((j, p, a))
    return Diagram(desc.w, tuple(kept))


def region_record(spec: ArrangementSpec, region: Region, label: Label) -> dict:
    """JSON-ready record of one region, for file export."""
    desc = describe(spec, region)
    diagram = draw_diagram(spec, desc)
    return {
        "signs": region.sign_string(),
        "w": list(desc.w.images),
        "H": [list(t) for t in sorted(desc.windows)],
        "I": [list(t) for t in sorted(desc.overflow)],
        "label": label.to_json(),
        "diagram": [list(t) for t in diagram.arcs],
    }
