"""Red/blue colourings of complete graphs.

A colouring of K_N is stored as one red-neighbourhood bitmask per vertex
(Python ints); the blue neighbourhood is the complement minus the vertex
itself.  Vertex sets are plain int bitmasks throughout the package.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, Optional

VertexSet = int


class Colour(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED

    @classmethod
    def from_char(cls, ch: str) -> "Colour":
        try:
            return cls(ch)
        except ValueError:
            raise ValueError(f"illegal colour character {ch!r}") from None


RED = Colour.RED
BLUE = Colour.BLUE


class FormatError(ValueError):
    """Raised when an rcm/rcmcert text cannot be parsed."""


# ---------------------------------------------------------------------------
# vertex-set helpers
# ---------------------------------------------------------------------------

def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> Iterator[int]:
    """Yield the vertices of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


def size(mask: VertexSet) -> int:
    return mask.bit_count()


# ---------------------------------------------------------------------------
# the graph
# ---------------------------------------------------------------------------

class ColouredCompleteGraph:
    """Immutable 2-edge-coloured K_N.

    >>> g = build_colouring(3, [(0, 1)])
    >>> g.colour(1, 0), g.colour(0, 2)
    (<Colour.RED: 'R'>, <Colour.BLUE: 'B'>)
    """

    __slots__ = ("order", "full", "_red", "_blue")

    def __init__(self, order: int, red_rows: Iterable[int]):
        if order < 1:
            raise ValueError("vertex count must be positive")
        rows = tuple(red_rows)
        if len(rows) != order:
            raise ValueError("need one red row per vertex")
        full = (1 << order) - 1
        for v, row in enumerate(rows):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad red row for vertex {v}")
        for u, row in enumerate(rows):
            for v in members(row):
                if not rows[v] >> u & 1:
                    raise ValueError(f"asymmetric pair {{{u}, {v}}}")
        self.order = order
        self.full = full
        self._red = rows
        self._blue = tuple(full ^ row ^ (1 << v) for v, row in enumerate(rows))

    def adjacency(self, colour: Colour) -> tuple[int, ...]:
        """Per-vertex neighbourhood masks in `colour`."""
        return self._red if colour is RED else self._blue

    def neighbours(self, v: int, colour: Colour) -> VertexSet:
        return self.adjacency(colour)[v]

    def colour(self, u: int, v: int) -> Colour:
        if u == v:
            raise ValueError("no colour on the diagonal")
        return RED if self._red[u] >> v & 1 else BLUE

    def swapped(self) -> "ColouredCompleteGraph":
        """The same graph with red and blue exchanged."""
        return ColouredCompleteGraph(self.order, self._blue)

    def red_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in members(self._red[u] >> (u + 1) << (u + 1))]

    def induced(self, vertices: list[int]) -> "ColouredCompleteGraph":
        """Colouring induced on `vertices`, relabelled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in members(self._red[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return ColouredCompleteGraph(len(vertices), rows)

    def __eq__(self, other):
        if not isinstance(other, ColouredCompleteGraph):
            return NotImplemented
        return self.order == other.order and self._red == other._red

    def __hash__(self):
        return hash((self.order, self._red))

    def __repr__(self):
        return f"ColouredCompleteGraph(order={self.order}, red_edges={sum(map(size, self._red)) // 2})"


def build_colouring(vertex_count: int, red_pairs: Iterable[tuple[int, int]]) -> ColouredCompleteGraph:
    """Colour the listed pairs red and everything else blue."""
    if vertex_count < 1:
        raise ValueError("vertex count must be positive")
    rows = [0] * vertex_count
    for u, v in red_pairs:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"vertex out of range in pair ({u}, {v})")
        if u == v:
            raise ValueError(f"self-loop pair ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return ColouredCompleteGraph(vertex_count, rows)


# ---------------------------------------------------------------------------
# components, cliques, packings
# ---------------------------------------------------------------------------

def colour_components(g: ColouredCompleteGraph, colour: Colour, within: Optional[VertexSet] = None) -> list[VertexSet]:
    """Connected components of the `colour` subgraph induced on `within`.

    Components are returned ordered by their smallest vertex.
    """
    adj = g.adjacency(colour)
    left = g.full if within is None else within
    parts = []
    while left:
        frontier = left & -left
        comp = frontier
        while frontier:
            reach = 0
            for v in members(frontier):
                reach |= adj[v]
            frontier = reach & left & ~comp
            comp |= frontier
        parts.append(comp)
        left &= ~comp
    return parts


def is_connected(g: ColouredCompleteGraph, colour: Colour, within: Optional[VertexSet] = None) -> bool:
    return len(colour_components(g, colour, within)) <= 1


def is_monochromatic_clique(g: ColouredCompleteGraph, s: VertexSet, colour: Colour) -> bool:
    adj = g.adjacency(colour)
    for v in members(s):
        if (s & ~(1 << v)) & ~adj[v]:
            return False
    return True


def colour_classes(adj, mask: int, stop: Optional[int] = None) -> list[int]:
    """Greedy partition of `mask` into independent sets of `adj`, lowest vertex first.

    With `stop`, the vertices left after that many classes are lumped into
    one final entry (enough to show the clique number may reach `stop`).
    """
    classes = []
    left = mask
    while left and (stop is None or len(classes) < stop):
        avail = left
        taken = 0
        while avail:
            low = avail & -avail
            taken |= low
            avail &= ~adj[low.bit_length() - 1] & ~low
        classes.append(taken)
        left &= ~taken
    if left:
        classes.append(left)
    return classes


def _first_clique(adj, cand: int, need: int) -> Optional[list[int]]:
    # lexicographically smallest `need`-clique inside cand
    if need == 0:
        return []
    if need == 2:
        for v in members(cand):
            nb = cand & adj[v] & ~((2 << v) - 1)
            if nb:
                return [v, lowest(nb)]
        return None
    if need >= 3 and len(colour_classes(adj, cand, need)) < need:
        return None
    while cand and cand.bit_count() >= need:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if need == 1:
            return [v]
        rest = _first_clique(adj, cand & adj[v], need - 1)
        if rest is not None:
            return [v] + rest
    return None


def iter_cliques(adj, cand: int, need: int) -> Iterator[list[int]]:
    """All `need`-cliques inside cand, in lexicographic order."""
    if need == 0:
        yield []
        return
    if need >= 3 and len(colour_classes(adj, cand, need)) < need:
        return
    while cand and cand.bit_count() >= need:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if need == 1:
            yield [v]
            continue
        for rest in iter_cliques(adj, cand & adj[v], need - 1):
            yield [v] + rest


def find_clique(g: ColouredCompleteGraph, colour: Colour, r: int, within: Optional[VertexSet] = None) -> Optional[tuple[int, ...]]:
    """Lexicographically first monochromatic r-clique inside `within`, or None."""
    if r < 1:
        raise ValueError("r must be positive")
    found = _first_clique(g.adjacency(colour), g.full if within is None else within, r)
    return None if found is None else tuple(found)


class CliquePacking:
    """Disjoint monochromatic r-cliques of one colour."""

    def __init__(self, colour: Colour, cliques: Iterable[Iterable[int]] = ()):
        self.colour = colour
        self.cliques: list[tuple[int, ...]] = []
        self.covered: VertexSet = 0
        for c in cliques:
            self.add(c)

    def add(self, clique: Iterable[int]) -> None:
        c = tuple(sorted(clique))
        mask = vertex_set(c)
        if mask & self.covered:
            raise ValueError(f"clique {c} overlaps the packing")
        self.cliques.append(c)
        self.covered |= mask

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def is_valid(self, g: ColouredCompleteGraph, r: int) -> bool:
        return all(len(c) == r and is_monochromatic_clique(g, vertex_set(c), self.colour) for c in self.cliques)


def extend_packing(g: ColouredCompleteGraph, packing: CliquePacking, r: int, within: Optional[VertexSet] = None) -> CliquePacking:
    """Greedily add cliques on the uncovered part of `within` until maximal.

    Scanning vertices in increasing order and taking the first clique whose
    smallest vertex is the scanned one gives the same result as repeatedly
    taking the lexicographically smallest clique: removing vertices never
    creates a clique that an earlier scan missed.
    """
    adj = g.adjacency(packing.colour)
    avail = (g.full if within is None else within) & ~packing.covered
    for v in members(avail):
        if not avail >> v & 1:
            continue
        higher = avail & ~((2 << v) - 1)
        rest = _first_clique(adj, higher & adj[v], r - 1)
        if rest is not None:
            clique = [v] + rest
            packing.add(clique)
            avail &= ~vertex_set(clique)
    return packing


def greedy_clique_packing(g: ColouredCompleteGraph, colour: Colour, r: int, within: Optional[VertexSet] = None) -> CliquePacking:
    if r < 2:
        raise ValueError("r must be at least 2")
    return extend_packing(g, CliquePacking(colour), r, within)


def connecting_edges(g: ColouredCompleteGraph, colour: Colour, terminals: Iterable[int]) -> list[tuple[int, int]]:
    """Edges of `colour` forming paths from the first terminal to all others.

    Breadth-first tree paths; terminals outside the first terminal's
    component are silently unreachable (no edges emitted for them).
    """
    terms = list(terminals)
    if not terms:
        return []
    adj = g.adjacency(colour)
    root = terms[0]
    parent = {root: root}
    frontier = [root]
    seen = 1 << root
    while frontier:
        nxt = []
        for v in frontier:
            for w in members(adj[v] & ~seen):
                seen |= 1 << w
                parent[w] = v
                nxt.append(w)
        frontier = nxt
    edges = set()
    for t in terms[1:]:
        while t in parent and parent[t] != t:
            p = parent[t]
            edges.add((min(p, t), max(p, t)))
            t = p
    return sorted(edges)


# ---------------------------------------------------------------------------
# rcm v1 text format
# ---------------------------------------------------------------------------

def serialize(g: ColouredCompleteGraph) -> str:
    lines = ["rcm 1", str(g.order)]
    red = g.adjacency(RED)
    for i in range(1, g.order):
        row = red[i]
        lines.append("".join("R" if row >> j & 1 else "B" for j in range(i)))
    return "\n".join(lines) + "\n"


def parse(text: str) -> ColouredCompleteGraph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2 or lines[0].strip() != "rcm 1":
        raise FormatError("missing 'rcm 1' header")
    try:
        order = int(lines[1])
    except ValueError:
        raise FormatError(f"bad vertex count {lines[1]!r}") from None
    if order < 1:
        raise FormatError("vertex count must be positive")
    body = [line.rstrip("\r") for line in lines[2:]]
    # characters first, so a stray symbol is reported as such
    for i, line in enumerate(body, 1):
        bad = set(line) - {"R", "B"}
        if bad:
            raise FormatError(f"illegal character {min(bad)!r} in row {i}")
    if len(body) != order - 1:
        raise FormatError(f"expected {order - 1} rows, found {len(body)}")
    rows = [0] * order
    for i, line in enumerate(body, 1):
        if len(line) != i:
            raise FormatError(f"row {i} has length {len(line)}, expected {i}")
        for j, ch in enumerate(line):
            if ch == "R":
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return ColouredCompleteGraph(order, rows)
