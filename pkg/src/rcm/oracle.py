"""Exact ground truth at desk scale.

Independent certificate checking, exact maximum clique packings by
branch-and-bound, the connected/unconnected decision problem, and the
exhaustive computation of tiny connected-matching Ramsey numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .certificate import Certificate
from .colouring import (
    BLUE,
    RED,
    Colour,
    ColouredCompleteGraph,
    colour_classes,
    colour_components,
    connecting_edges,
    is_monochromatic_clique,
    members,
    vertex_set,
)
from .extremal import burr_colouring

DEFAULT_BUDGET = 1 << 30


class BudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# certificate verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rejection:
    clause: str
    vertices: tuple[int, ...] = ()

    def __str__(self):
        if self.vertices:
            return f"{self.clause}: {' '.join(map(str, self.vertices))}"
        return self.clause


def verify_certificate(g: ColouredCompleteGraph, cert: Certificate, r: int, n: int) -> Optional[Rejection]:
    """None if `cert` is a valid monochromatic connected nK_r in `g`, else the first failed clause."""
    if len(cert.cliques) != n:
        return Rejection("wrong number of cliques", (len(cert.cliques),))
    seen: dict[int, int] = {}
    for idx, clique in enumerate(cert.cliques):
        if len(clique) != r or len(set(clique)) != r:
            return Rejection("clique of wrong size", tuple(clique))
        for v in clique:
            if not 0 <= v < g.order:
                return Rejection("vertex out of range", (v,))
            if v in seen:
                return Rejection("not disjoint", (v,))
            seen[v] = idx
    for clique in cert.cliques:
        for i, u in enumerate(clique):
            for v in clique[i + 1:]:
                if g.colour(u, v) is not cert.colour:
                    return Rejection("not monochromatic", (u, v))
    # breadth-first search in the certificate colour from one clique vertex
    reach = _reachable(g, cert.colour, cert.cliques[0][0]) if cert.cliques else 0
    stray = tuple(v for v in sorted(seen) if not reach >> v & 1)
    if stray:
        return Rejection("not in one component", stray)
    for u, v in cert.witness_edges:
        if not (0 <= u < g.order and 0 <= v < g.order) or u == v or g.colour(u, v) is not cert.colour:
            return Rejection("bad witness edge", (u, v))
    return None


def _reachable(g: ColouredCompleteGraph, colour: Colour, start: int) -> int:
    adj = g.adjacency(colour)
    seen = 1 << start
    stack = [start]
    while stack:
        v = stack.pop()
        new = adj[v] & ~seen
        seen |= new
        stack.extend(members(new))
    return seen


def is_disjoint_monochromatic(g: ColouredCompleteGraph, colour: Colour, cliques, r: int, n: int) -> bool:
    """The unconnected-mode witness check: n disjoint monochromatic r-sets."""
    if len(cliques) != n:
        return False
    used = 0
    for c in cliques:
        m = vertex_set(c)
        if len(c) != r or m.bit_count() != r or m & used or not is_monochromatic_clique(g, m, colour):
            return False
        used |= m
    return True


# ---------------------------------------------------------------------------
# exact packing
# ---------------------------------------------------------------------------

class _Counter:
    __slots__ = ("used", "budget")

    def __init__(self, budget: Optional[int]):
        self.used = 0
        self.budget = budget

    def tick(self):
        self.used += 1
        if self.budget is not None and self.used > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")


def packing_upper_bound(adj, mask: int, r: int) -> int:
    """Upper bound on disjoint r-cliques inside `mask`.

    A clique meets each independent set at most once, so k disjoint cliques
    need sum(min(|I|, k)) >= k*r over any partition into independent sets.
    """
    total = mask.bit_count()
    hi = total // r
    if hi == 0:
        return 0
    sizes = [c.bit_count() for c in colour_classes(adj, mask)]
    if len(sizes) < r:
        return 0
    lo = 0
    while lo < hi:
        k = (lo + hi + 1) // 2
        if sum(min(s, k) for s in sizes) >= k * r:
            lo = k
        else:
            hi = k - 1
    return lo


def _cliques_through(adj, v: int, cand: int, need: int, counter: _Counter):
    """Cliques {v} + (need vertices of cand), lexicographic, with a colouring cut."""
    def rec(prefix, cand, need):
        counter.tick()
        if need == 0:
            yield prefix
            return
        if cand.bit_count() < need:
            return
        if need >= 3 and len(colour_classes(adj, cand, need)) < need:
            return
        while cand and cand.bit_count() >= need:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            yield from rec(prefix + [w], cand & adj[w], need - 1)
    yield from rec([v], cand & adj[v], need)


def max_packing(
    g: ColouredCompleteGraph,
    colour: Colour,
    r: int,
    within: Optional[int] = None,
    target: Optional[int] = None,
    budget: Optional[int] = None,
    _counter: Optional[_Counter] = None,
) -> list[tuple[int, ...]]:
    """Maximum set of disjoint monochromatic r-cliques inside `within`.

    Branch-and-bound on the lowest remaining vertex: either it is left
    uncovered or it is the smallest vertex of one of the packed cliques.
    Stops early once `target` cliques are found.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    adj = g.adjacency(colour)
    counter = _counter or _Counter(budget)
    best: list[list[int]] = []
    goal = target if target is not None else g.order

    class Done(Exception):
        pass

    def rec(mask, chosen):
        nonlocal best
        counter.tick()
        if len(chosen) > len(best):
            best = list(chosen)
            if len(best) >= goal:
                raise Done
        if mask.bit_count() < r:
            return
        ceiling = len(chosen) + packing_upper_bound(adj, mask, r)
        if ceiling <= len(best):
            return
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        for clique in _cliques_through(adj, v, rest, r - 1, counter):
            chosen.append(clique)
            rec(rest & ~vertex_set(clique), chosen)
            chosen.pop()
            if len(best) >= ceiling:
                return
        if len(chosen) + packing_upper_bound(adj, rest, r) > len(best):
            rec(rest, chosen)

    try:
        rec(g.full if within is None else within, [])
    except Done:
        pass
    return [tuple(c) for c in best]


def max_connected_packing(g: ColouredCompleteGraph, colour: Colour, r: int, budget: Optional[int] = None) -> int:
    """Largest disjoint monochromatic K_r packing lying inside one colour component."""
    counter = _Counter(budget)
    best = 0
    for comp in sorted(colour_components(g, colour), key=lambda m: -m.bit_count()):
        if comp.bit_count() // r <= best:
            break
        best = max(best, len(max_packing(g, colour, r, comp, _counter=counter)))
    return best


# ---------------------------------------------------------------------------
# decision
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecisionResult:
    answer: bool
    mode: str
    witness: Optional[Certificate] = None
    nodes: int = 0


def decide(g: ColouredCompleteGraph, r: int, n: int, mode: str = "connected", budget: Optional[int] = DEFAULT_BUDGET) -> DecisionResult:
    """Does `g` contain a monochromatic (connected) nK_r?

    Raises BudgetExceeded when the search needs more than `budget` nodes.
    """
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    if mode not in ("connected", "unconnected"):
        raise ValueError(f"unknown mode {mode!r}")
    counter = _Counter(budget)
    for colour in (RED, BLUE):
        comps = colour_components(g, colour)
        if mode == "connected":
            for comp in comps:
                if comp.bit_count() < r * n:
                    continue
                found = max_packing(g, colour, r, comp, target=n, _counter=counter)
                if len(found) >= n:
                    return DecisionResult(True, mode, _witness(g, colour, found[:n], comp), counter.used)
        else:
            found = []
            for comp in comps:
                if comp.bit_count() >= r:
                    found += max_packing(g, colour, r, comp, target=n - len(found), _counter=counter)
                if len(found) >= n:
                    cert = Certificate(colour, tuple(found[:n]))
                    return DecisionResult(True, mode, cert, counter.used)
    return DecisionResult(False, mode, None, counter.used)


def _witness(g, colour, cliques, comp) -> Certificate:
    reps = [c[0] for c in cliques]
    return Certificate(
        colour,
        tuple(cliques),
        component=(comp & -comp).bit_length() - 1,
        witness_edges=tuple(connecting_edges(g, colour, reps)),
    )


# ---------------------------------------------------------------------------
# exhaustive Ramsey search
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RamseyResult:
    value: Optional[int]
    witness: Optional[ColouredCompleteGraph]
    leaves: int
    reason: str = ""


def _yes(rows: list[int], m: int, r: int, n: int) -> bool:
    return _partial_yes(rows, None, m, r, n)


class _RowsGraph(ColouredCompleteGraph):
    """Unchecked colouring used inside the enumeration hot loop."""

    __slots__ = ()

    def __init__(self, red, m, blue=None):
        full = (1 << m) - 1
        self.order = m
        self.full = full
        self._red = red
        self._blue = blue if blue is not None else [full ^ row ^ (1 << v) for v, row in enumerate(red)]


def _partial_yes(red, blue, m, r, n) -> bool:
    # with blue given, only decided edges are present in either colour; a
    # witness found here survives every completion since colour classes grow
    g = _RowsGraph(red, m, blue)
    counter = _Counter(None)
    for colour in (RED, BLUE):
        for comp in colour_components(g, colour):
            if comp.bit_count() >= r * n and len(max_packing(g, colour, r, comp, target=n, _counter=counter)) >= n:
                return True
    return False


def ramsey_connected_exact(r: int, n: int, m_max: int, budget: int = DEFAULT_BUDGET) -> RamseyResult:
    """Least m <= m_max with every 2-colouring of K_m containing a monochromatic connected nK_r.

    Failing colourings are hereditary (a witness in an induced subcolouring
    stays a witness), so failing colourings of K_m are enumerated by
    extending failing colourings of K_{m-1} one vertex at a time, edge by
    edge, pruning any branch whose already-coloured edges contain a witness.
    Edge {0,1} is fixed red by colour symmetry.  The Burr colouring seeds
    the lower end.  Returns value None when m_max or the budget is too small.
    """
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    counter = _Counter(budget)
    start = 1
    witness = None
    burr = burr_colouring(r, n)
    try:
        if burr.order <= m_max and not _yes(list(burr.adjacency(RED)), burr.order, r, n):
            start = burr.order + 1
            witness = burr
    except BudgetExceeded:
        return RamseyResult(None, None, counter.used, "budget")
    if start > m_max:
        return RamseyResult(None, witness, counter.used, "m_max")

    # failing colourings of K_m as (red rows, blue rows); K_1 has one
    level = [([0], [0])]
    m = 1
    try:
        while True:
            if m >= start:
                if not level:
                    return RamseyResult(m, witness, counter.used)
                witness = _RowsGraph(list(level[0][0]), m).induced(list(range(m)))
            if m == m_max:
                return RamseyResult(None, witness, counter.used, "m_max")
            if (1 << ((m + 1) * m // 2 - 1)) > budget:
                return RamseyResult(None, witness, counter.used, "budget")
            level = _extend_level(level, m, r, n, counter)
            m += 1
    except BudgetExceeded:
        return RamseyResult(None, witness, counter.used, "budget")


def _extend_level(level, m, r, n, counter):
    """All failing colourings of K_{m+1} extending failing colourings of K_m."""
    out = []
    new = 1 << m
    for red0, blue0 in level:
        red = list(red0) + [0]
        blue = list(blue0) + [0]

        def rec(j):
            if j == m:
                counter.tick()
                if not _yes(red, m + 1, r, n):
                    out.append((tuple(red), tuple(blue)))
                return
            for colour_rows in (red, blue):
                if m == 1 and colour_rows is blue:
                    continue  # edge {0,1} fixed red
                colour_rows[j] |= new
                colour_rows[m] |= 1 << j
                if j == m - 1 or not _partial_yes(red, blue, m + 1, r, n):
                    rec(j + 1)
                colour_rows[j] &= ~new
                colour_rows[m] &= ~(1 << j)

        rec(0)
    return out
