"""Constructive search for a monochromatic connected nK_r.

On a 2-coloured K_N with N >= (r^2 - r + 1)n - r + 1, r >= 4 and
n >= R(K_r), the loop below always ends in a certificate:

1. pick a colour that is connected on all of K_N and call it red;
2. keep a maximal packing of red K_r's; n of them is a red answer;
3. the vertices outside the packing split into blue components; one that
   holds n greedily packed blue K_r's is a blue answer;
4. every structural defect among the packing and the components is turned
   into an explicit exchange that grows the red packing (an Augmentation);
5. with no defect left the outside is r-1 blue cliques, pairwise red, each
   packing clique attaches to them in one of two ways, and a counting
   argument picks a component that hosts n blue K_r's.

Internally the search colour is always RED; certificates are translated
back to the caller's colours at the end.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional, Union

from .certificate import Certificate
from .colouring import (
    BLUE,
    RED,
    Colour,
    ColouredCompleteGraph,
    CliquePacking,
    colour_components,
    connecting_edges,
    extend_packing,
    is_connected,
    is_monochromatic_clique,
    lowest,
    members,
    vertex_set,
)
from .extremal import theorem_bound

log = logging.getLogger(__name__)

# R(K_r); larger r needs a caller-supplied bound
RAMSEY_CONSTANTS = {2: 2, 3: 6, 4: 18}

Clique = tuple[int, ...]


class PreconditionError(ValueError):
    pass


class StructureViolation(RuntimeError):
    """A structural fact the argument relies on failed and no exchange applies."""

    def __init__(self, stage: str, evidence, state: Optional[dict] = None):
        super().__init__(f"{stage}: {evidence}")
        self.stage = stage
        self.evidence = evidence
        self.state = state or {}

    def dump(self) -> str:
        lines = [f"stage={self.stage}", f"evidence={self.evidence}"]
        lines += [f"{k}={v}" for k, v in self.state.items()]
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Params:
    r: int
    n: int
    N: int
    ramsey_bound: Optional[int] = None

    def ramsey_constant(self) -> Optional[int]:
        if self.ramsey_bound is not None:
            return self.ramsey_bound
        return RAMSEY_CONSTANTS.get(self.r)

    def regime_problem(self) -> Optional[str]:
        """Why the inputs fall outside the guaranteed regime, or None."""
        if self.r < 4:
            return f"r={self.r} below 4"
        rk = self.ramsey_constant()
        if rk is None:
            return f"no value of R(K_{self.r}) known; supply a bound"
        if self.n < rk:
            return f"n={self.n} below R(K_{self.r})={rk}"
        if self.N < theorem_bound(self.r, self.n):
            return f"N={self.N} below theorem bound {theorem_bound(self.r, self.n)}"
        return None

    @property
    def theorem_regime(self) -> bool:
        return self.regime_problem() is None


# ---------------------------------------------------------------------------
# result types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Augmentation:
    retire: tuple[Clique, ...]
    install: tuple[Clique, ...]
    rule: str


@dataclass
class BlueStructure:
    components: list[int]
    absorbed_z: int = 0
    pairwise_red: bool = True


@dataclass
class BlueWin:
    component: int
    cliques: list[Clique]


@dataclass(frozen=True)
class TypeI:
    clique: Clique
    selections: tuple[int, ...]  # selections[i]: vertex attached to component i


@dataclass(frozen=True)
class TypeII:
    clique: Clique
    singles: tuple[tuple[int, int], ...]  # (component, vertex)
    triple: tuple[int, int, int]
    triple_component: int


@dataclass
class CliqueClassification:
    components: list[int]
    type_s: list[TypeI]
    type_t: list[TypeII]
    s_sets: list[list[int]]
    t_star: list[list[int]]
    t_delta: list[list[tuple[int, int, int]]]
    d_sets: list[int]
    b_tilde: list[int] = field(default_factory=list)

    def d_size(self, i: int) -> int:
        return self.d_sets[i].bit_count()

    def delta_size(self, i: int) -> int:
        return 3 * len(self.t_delta[i])


@dataclass(frozen=True)
class AugmentationEvent:
    rule: str
    before: int
    after: int
    retired: int
    installed: int


@dataclass
class FindResult:
    certificate: Certificate
    augmentations: list[AugmentationEvent]
    swapped: bool
    outcome: str
    report: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# step 1: colour choice
# ---------------------------------------------------------------------------

def choose_search_colour(g: ColouredCompleteGraph) -> tuple[Colour, bool]:
    """A colour whose subgraph spans K_N connectedly; red when both are."""
    if g.order < 2:
        raise ValueError("need at least two vertices")
    if is_connected(g, RED):
        return RED, False
    return BLUE, True


# ---------------------------------------------------------------------------
# helpers for building exchanges
# ---------------------------------------------------------------------------

def _lowest_bits(mask: int, k: int) -> list[int]:
    out = []
    while mask and len(out) < k:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _distinct_representatives(masks: list[int]) -> Optional[list[int]]:
    """One vertex from each mask, all distinct, lexicographically first."""
    k = len(masks)
    options = [_lowest_bits(m, k) for m in masks]
    for choice in product(*options):
        if len(set(choice)) == k:
            return list(choice)
    return None


def _fill_units(g: ColouredCompleteGraph, units: list[tuple[tuple[int, ...], Optional[int]]], components: list[int]) -> Optional[list[Clique]]:
    """Complete each unit to a red K_r with one vertex from each component.

    A unit is (vertices, skipped component); the unit takes one vertex from
    every other component, red to all of its vertices.  Vertices taken from
    the same component by different units are distinct.
    """
    red = g.adjacency(RED)
    picks: list[list[int]] = [list(u[0]) for u in units]
    for j, comp in enumerate(components):
        needing = [k for k, (_, skip) in enumerate(units) if skip != j]
        masks = []
        for k in needing:
            m = comp
            for x in units[k][0]:
                m &= red[x]
            masks.append(m)
        chosen = _distinct_representatives(masks)
        if chosen is None:
            return None
        for k, v in zip(needing, chosen):
            picks[k].append(v)
    return [tuple(sorted(p)) for p in picks]


# ---------------------------------------------------------------------------
# step 3: blue structure outside the packing
# ---------------------------------------------------------------------------

def analyse_blue_structure(g: ColouredCompleteGraph, packing: CliquePacking, r: int, n: int) -> Union[BlueStructure, Augmentation, BlueWin]:
    """Blue components of the vertices outside the red packing.

    Returns a BlueWin if some component holds n greedily packed blue K_r's,
    an Augmentation if the components betray a red K_r outside the packing,
    and otherwise the stable structure of r-1 pairwise-red blue cliques.
    """
    outside = g.full & ~packing.covered
    comps = colour_components(g, BLUE, outside)

    blue_pack = extend_packing(g, CliquePacking(BLUE), r, outside)
    for comp in comps:
        inside = [c for c in blue_pack if vertex_set(c) & comp]
        if len(inside) >= n:
            return BlueWin(comp, inside[:n])
    leftover = outside & ~blue_pack.covered

    if len(comps) >= r:
        clique = tuple(sorted(lowest(c) for c in comps[:r]))
        return Augmentation((), (clique,), "component-count")
    if len(comps) == r - 1:
        red = g.adjacency(RED)
        for i, comp in enumerate(comps):
            for v in members(comp):
                inner = red[v] & comp & ~((2 << v) - 1)
                if inner:
                    w = lowest(inner)
                    others = [lowest(c) for j, c in enumerate(comps) if j != i]
                    clique = tuple(sorted([v, w] + others[: r - 2]))
                    return Augmentation((), (clique,), "red-edge-inside")
        return BlueStructure(comps, absorbed_z=leftover, pairwise_red=True)
    raise StructureViolation(
        "component-count",
        f"{len(comps)} blue components outside the red packing, expected {r - 1}",
        {"component_sizes": [c.bit_count() for c in comps], "packing": len(packing)},
    )


# ---------------------------------------------------------------------------
# step 4: clique types
# ---------------------------------------------------------------------------

def classify_clique(clique: Clique, structure: BlueStructure, g: ColouredCompleteGraph) -> Union[TypeI, TypeII, Augmentation]:
    """How one red packing clique attaches to the blue components.

    A vertex is *solo* if it has a red neighbour in every component (it
    alone extends to a red K_r).  A vertex blue-complete to a component has
    that component as a home; two vertices sharing a home extend together
    to a red K_r through the other components.  Two disjoint such units
    inside one clique give two red K_r's in place of one.  Every exchange
    is completed against the actual red neighbourhoods, so a vertex with
    stray blue neighbours elsewhere simply fails to complete a unit.
    """
    comps = structure.components
    k = len(comps)
    red = g.adjacency(RED)
    red_count = {c: [(red[c] & comp).bit_count() for comp in comps] for c in clique}
    blue_count = {c: [comps[i].bit_count() - red_count[c][i] for i in range(k)] for c in clique}

    solos = [c for c in clique if all(red_count[c])]
    by_home: dict[int, list[int]] = {}
    for c in clique:
        for i in range(k):
            if red_count[c][i] == 0:
                by_home.setdefault(i, []).append(c)
    homes = sorted(by_home)

    candidates: list[tuple[str, list]] = []
    for a, b in combinations(solos, 2):
        candidates.append(("two-red-neighbours", [((a,), None), ((b,), None)]))
    for s in solos:
        for h in homes:
            for pair in combinations(by_home[h], 2):
                candidates.append(("red-neighbour-plus-pair", [((s,), None), (pair, h)]))
    for h1, h2 in combinations(homes, 2):
        for p1 in combinations(by_home[h1], 2):
            for p2 in combinations(by_home[h2], 2):
                if not set(p1) & set(p2):
                    candidates.append(("two-pairs", [(p1, h1), (p2, h2)]))
    for h in homes:
        for quad in combinations(by_home[h], 4):
            candidates.append(("four-with-same", [(quad[:2], h), (quad[2:], h)]))
    for rule, units in candidates:
        installs = _fill_units(g, units, comps)
        if installs is not None:
            return Augmentation((clique,), tuple(installs), rule)

    # no exchange: read off the type
    selection = _inject(clique, red_count, blue_count, k)
    if selection is not None:
        return TypeI(clique, tuple(selection))
    for j in homes:
        for triple in combinations(by_home[j], 3):
            rest = [c for c in clique if c not in triple]
            singles = _assign_singles(rest, [i for i in range(k) if i != j], red_count)
            if singles is not None:
                return TypeII(clique, tuple(sorted(singles)), triple, j)

    aug = exchange_search(g, [clique], comps, len(clique))
    if aug is not None:
        return aug
    raise StructureViolation("clique-type", {
        "clique": clique,
        "red_counts": [red_count[c] for c in clique],
        "blue_counts": [blue_count[c] for c in clique],
    })


def _assign_singles(vertices, targets, red_count) -> Optional[list[tuple[int, int]]]:
    # each vertex blue-complete to its own distinct component among targets
    def rec(idx, used):
        if idx == len(vertices):
            return []
        v = vertices[idx]
        for i in targets:
            if i not in used and red_count[v][i] == 0:
                rest = rec(idx + 1, used | {i})
                if rest is not None:
                    return [(i, v)] + rest
        return None
    return rec(0, frozenset())


def _inject(clique, red_count, blue_count, k) -> Optional[list[int]]:
    """Distinct vertices, one per component, each blue to all but <= 1 of it."""
    options = []
    for i in range(k):
        opts = [c for c in clique if red_count[c][i] == 0 and blue_count[c][i] > 0]
        opts += [c for c in clique if red_count[c][i] == 1 and blue_count[c][i] > 0]
        if not opts:
            return None
        options.append(opts)
    used: set[int] = set()
    chosen: list[int] = []

    def rec(i):
        if i == k:
            return True
        for c in options[i]:
            if c not in used:
                used.add(c)
                chosen.append(c)
                if rec(i + 1):
                    return True
                used.discard(c)
                chosen.pop()
        return False

    return chosen if rec(0) else None


def check_triple_blue(triples: list[tuple[Clique, tuple[int, int, int]]], i: int, structure: BlueStructure, g: ColouredCompleteGraph) -> Optional[Augmentation]:
    """None when all edges between the triples paired with component i are blue.

    A red edge x1y1 between triples {x1,x2,x3} and {y1,y2,y3} yields three
    red K_r's, from {x1,y1}, {x2,x3}, {y2,y3}, in place of their two cliques.
    """
    for (c1, t1), (c2, t2) in combinations(triples, 2):
        for x in t1:
            for y in t2:
                if g.colour(x, y) is not RED:
                    continue
                units = [
                    ((x, y), i),
                    (tuple(v for v in t1 if v != x), i),
                    (tuple(v for v in t2 if v != y), i),
                ]
                installs = _fill_units(g, units, structure.components)
                if installs is not None:
                    return Augmentation((c1, c2), tuple(installs), "triple-red-edge")
                raise StructureViolation("triple-red-edge", {"edge": (x, y), "cliques": (c1, c2)})
    return None


def exchange_search(g: ColouredCompleteGraph, cliques: list[Clique], components: list[int], r: int) -> Optional[Augmentation]:
    """Brute-force exchange: len(cliques)+1 red K_r's inside the cliques plus the components.

    Used only where the structured rules do not apply.  Each new clique is a
    subset of the old vertices plus at most one vertex per component (the
    components are blue cliques).
    """
    pool = sorted(v for c in cliques for v in c)
    red = g.adjacency(RED)
    goal = len(cliques) + 1
    k = len(components)

    def fits(units):
        # units: disjoint red subsets of pool, each needing r-|unit| components
        chosen_sets = []
        for unit in units:
            need = r - len(unit)
            if need > k:
                return None
            chosen_sets.append(need)
        # assign components to units by brute force over subsets
        per_unit = []
        for unit, need in zip(units, chosen_sets):
            masks = []
            for comp in components:
                m = comp
                for x in unit:
                    m &= red[x]
                masks.append(m)
            per_unit.append([s for s in combinations(range(k), need) if all(masks[j] for j in s)])
            if not per_unit[-1]:
                return None
        for combo in product(*per_unit):
            # distinct vertices per component
            picks = [list(u) for u in units]
            ok = True
            for j, comp in enumerate(components):
                users = [t for t, s in enumerate(combo) if j in s]
                if not users:
                    continue
                masks = []
                for t in users:
                    m = comp
                    for x in units[t]:
                        m &= red[x]
                    masks.append(m)
                rep = _distinct_representatives(masks)
                if rep is None:
                    ok = False
                    break
                for t, v in zip(users, rep):
                    picks[t].append(v)
            if ok:
                return [tuple(sorted(p)) for p in picks]
        return None

    red_subsets = [s for size_ in range(1, r + 1) for s in combinations(pool, size_)
                   if is_monochromatic_clique(g, vertex_set(s), RED)]

    def rec(start_units, used, idx):
        if len(start_units) == goal:
            return fits(start_units)
        for t in range(idx, len(red_subsets)):
            s = red_subsets[t]
            m = vertex_set(s)
            if m & used:
                continue
            found = rec(start_units + [s], used | m, t + 1)
            if found is not None:
                return found
        return None

    installs = rec([], 0, 0)
    if installs is None:
        return None
    return Augmentation(tuple(cliques), tuple(installs), "exchange-search")


def classify_all(g: ColouredCompleteGraph, packing: CliquePacking, structure: BlueStructure, r: int) -> Union[CliqueClassification, Augmentation]:
    comps = structure.components
    k = len(comps)
    type_s: list[TypeI] = []
    type_t: list[TypeII] = []
    for clique in packing:
        kind = classify_clique(clique, structure, g)
        if isinstance(kind, Augmentation):
            return kind
        (type_s if isinstance(kind, TypeI) else type_t).append(kind)

    s_sets: list[list[int]] = [[] for _ in range(k)]
    t_star: list[list[int]] = [[] for _ in range(k)]
    t_delta: list[list[tuple[int, int, int]]] = [[] for _ in range(k)]
    for kind in type_s:
        for i, v in enumerate(kind.selections):
            s_sets[i].append(v)
    triples_by: list[list[tuple[Clique, tuple[int, int, int]]]] = [[] for _ in range(k)]
    for kind in type_t:
        for i, v in kind.singles:
            t_star[i].append(v)
        t_delta[kind.triple_component].append(kind.triple)
        triples_by[kind.triple_component].append((kind.clique, kind.triple))
    for i in range(k):
        aug = check_triple_blue(triples_by[i], i, structure, g)
        if aug is not None:
            return aug

    d_sets = []
    for i in range(k):
        d = comps[i] | vertex_set(s_sets[i]) | vertex_set(t_star[i])
        for t in t_delta[i]:
            d |= vertex_set(t)
        d_sets.append(d)
    cls = CliqueClassification(comps, type_s, type_t, s_sets, t_star, t_delta, d_sets)
    _check_classification(cls, g, packing, r)
    return cls


def _check_classification(cls: CliqueClassification, g, packing, r) -> None:
    n_total = len(cls.type_s) + sum(d.bit_count() for d in cls.d_sets)
    union = 0
    for d in cls.d_sets:
        if d & union:
            raise StructureViolation("counting", "the sets D_i overlap")
        union |= d
    if n_total != g.order:
        raise StructureViolation("counting", f"|S| + sum|D_i| = {n_total} != N = {g.order}")


# ---------------------------------------------------------------------------
# step 5: choose a host and embed
# ---------------------------------------------------------------------------

def select_target(cls: CliqueClassification, r: int, n: int) -> int:
    """First component whose host set is large enough for the embedding.

    Qualifies: |D_i| >= rn + 1, or |D_i| >= rn with the number of triple
    vertices different from 3.
    """
    for i in range(len(cls.d_sets)):
        size = cls.d_size(i)
        if size >= r * n + 1 or (size >= r * n and cls.delta_size(i) != 3):
            return i
    raise StructureViolation("select-target", {"d_sizes": [cls.d_size(i) for i in range(len(cls.d_sets))],
                                               "delta_sizes": [cls.delta_size(i) for i in range(len(cls.d_sets))],
                                               "S": len(cls.type_s), "T": len(cls.type_t)})


def embed_blue_matching(i: int, cls: CliqueClassification, g: ColouredCompleteGraph, r: int, n: int) -> list[Clique]:
    """n disjoint blue K_r's inside D_i, all in the blue component of B_i."""
    red = g.adjacency(RED)
    comp = cls.components[i]
    pool = list(members(comp))
    out: list[Clique] = []

    def need_vertices(k, stage):
        if len(pool) < k:
            raise StructureViolation("embedding", f"stage {stage}: need {k} vertices of B_i, {len(pool)} left",
                                     {"component": i, "d_size": cls.d_size(i)})

    # (a) every S_i / T_i* vertex takes r-1 partners, avoiding its red neighbour
    consumers = sorted(cls.s_sets[i] + cls.t_star[i])
    allocation: list[list[int]] = []
    for u in consumers:
        need_vertices(r - 1, "a")
        forbidden = red[u] & comp
        picks = [v for v in pool if not forbidden >> v & 1][: r - 1]
        if len(picks) < r - 1:
            # pool is exactly r-1 long and holds u's one forbidden vertex f:
            # hand f to an earlier consumer and take one of its partners
            f = next(v for v in pool if forbidden >> v & 1)
            for k, (w, partners) in enumerate(zip(consumers, allocation)):
                if not red[w] >> f & 1:
                    g_ = partners[-1]
                    partners[-1] = f
                    pool.remove(f)
                    pool.append(g_)
                    pool.sort()
                    out[k] = tuple(sorted([w] + partners))
                    break
            picks = [v for v in pool if not forbidden >> v & 1][: r - 1]
            if len(picks) < r - 1:
                raise StructureViolation("embedding", f"stage a: no swap repairs consumer {u}")
        allocation.append(picks)
        for v in picks:
            pool.remove(v)
        out.append(tuple(sorted([u] + picks)))

    # (b) triple vertices: red inside a triple, blue across triples and to B_i
    triangles = [list(t) for t in cls.t_delta[i]]
    m = len(triangles)
    if m == 1:
        if len(out) < n:
            for x in triangles[0][:2]:
                need_vertices(r - 1, "b1")
                out.append(tuple(sorted([x] + pool[: r - 1])))
                del pool[: r - 1]
    elif 2 <= m <= r - 1:
        for col in range(3):
            need_vertices(r - m, "b2")
            out.append(tuple(sorted([t[col] for t in triangles] + pool[: r - m])))
            del pool[: r - m]
    elif m >= r:
        # column-major order: any r consecutive entries hit distinct triangles
        seq = [t[col] for col in range(3) for t in triangles]
        for start in range(0, len(seq), r):
            chunk = seq[start:start + r]
            pad = r - len(chunk)
            if pad:
                need_vertices(pad, "b3")
                chunk = chunk + pool[:pad]
                del pool[:pad]
            out.append(tuple(sorted(chunk)))

    # (c) the rest of B_i
    while len(out) < n:
        need_vertices(r, "c")
        out.append(tuple(pool[:r]))
        del pool[:r]
    cls.b_tilde = [vertex_set(pool)]
    out = out[:n]
    for c in out:
        if not is_monochromatic_clique(g, vertex_set(c), BLUE):
            raise StructureViolation("embedding", f"clique {c} is not blue")
    return out


# ---------------------------------------------------------------------------
# the loop
# ---------------------------------------------------------------------------

def apply_augmentation(g: ColouredCompleteGraph, packing: CliquePacking, aug: Augmentation) -> CliquePacking:
    if len(aug.install) < len(aug.retire) + 1:
        raise ValueError(f"augmentation {aug.rule} does not grow the packing")
    current = set(packing.cliques)
    for c in aug.retire:
        if c not in current:
            raise ValueError(f"retired clique {c} not in the packing")
    keep = [c for c in packing if c not in set(aug.retire)]
    result = CliquePacking(RED, keep)
    for c in aug.install:
        if not is_monochromatic_clique(g, vertex_set(c), RED):
            raise ValueError(f"installed clique {c} is not red")
        result.add(c)  # raises on overlap
    return result


def _certificate(g: ColouredCompleteGraph, colour: Colour, cliques: list[Clique], swapped: bool) -> Certificate:
    reps = [c[0] for c in cliques]
    comp = next(c for c in colour_components(g, colour) if c >> reps[0] & 1)
    edges = connecting_edges(g, colour, reps)
    real = colour.other if swapped else colour
    return Certificate(real, tuple(sorted(cliques)), lowest(comp), tuple(edges), swapped)


def find_connected_clique_matching(
    g: ColouredCompleteGraph,
    r: int,
    n: int,
    ramsey_bound: Optional[int] = None,
    check_regime: bool = True,
) -> FindResult:
    """Certified monochromatic connected nK_r in `g`.

    Raises PreconditionError outside the guaranteed regime (unless
    check_regime is False) and StructureViolation if the structural
    argument breaks down on the given input.
    """
    params = Params(r, n, g.order, ramsey_bound)
    if check_regime:
        problem = params.regime_problem()
        if problem:
            raise PreconditionError(problem)

    search_colour, swapped = choose_search_colour(g)
    h = g.swapped() if swapped else g
    packing = extend_packing(h, CliquePacking(RED), r)
    events: list[AugmentationEvent] = []
    report: dict = {"swapped": int(swapped)}

    def augment(aug: Augmentation):
        nonlocal packing
        before = len(packing)
        packing = extend_packing(h, apply_augmentation(h, packing, aug), r)
        events.append(AugmentationEvent(aug.rule, before, len(packing), len(aug.retire), len(aug.install)))
        log.debug("augmentation %s: %d -> %d", aug.rule, before, len(packing))

    while True:
        if len(packing) >= n:
            report["packing"] = len(packing)
            cert = _certificate(h, RED, packing.cliques[:n], swapped)
            return FindResult(cert, events, swapped, "red-packing", report)

        try:
            found = analyse_blue_structure(h, packing, r, n)
        except StructureViolation as exc:
            exc.state.update(_state(h, packing, events))
            raise
        if isinstance(found, BlueWin):
            report["packing"] = len(packing)
            cert = _certificate(h, BLUE, found.cliques, swapped)
            return FindResult(cert, events, swapped, "blue-component", report)
        if isinstance(found, Augmentation):
            augment(found)
            continue

        structure = found
        try:
            cls = classify_all(h, packing, structure, r)
            if isinstance(cls, Augmentation):
                augment(cls)
                continue
            i = select_target(cls, r, n)
            cliques = embed_blue_matching(i, cls, h, r, n)
        except StructureViolation as exc:
            exc.state.update(_state(h, packing, events, structure))
            raise
        report.update(
            packing=len(packing),
            component_sizes=",".join(str(c.bit_count()) for c in structure.components),
            z=structure.absorbed_z.bit_count(),
            S=len(cls.type_s),
            T=len(cls.type_t),
            D=",".join(str(cls.d_size(j)) for j in range(len(cls.d_sets))),
            delta=",".join(str(cls.delta_size(j)) for j in range(len(cls.d_sets))),
            target=i,
        )
        cert = _certificate(h, BLUE, cliques, swapped)
        return FindResult(cert, events, swapped, "blue-embedding", report)


def _state(h, packing, events, structure=None) -> dict:
    state = {
        "packing": ";".join(" ".join(map(str, c)) for c in packing),
        "trace": ",".join(f"{e.rule}:{e.before}->{e.after}" for e in events),
    }
    if structure is not None:
        state["components"] = ";".join(" ".join(map(str, members(c))) for c in structure.components)
    return state
