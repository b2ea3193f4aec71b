"""Lower-bound constructions and seeded test corpora."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

from .colouring import ColouredCompleteGraph, RED
from .rng import SplitMix64, threshold

Probability = Union[Fraction, int, float, str]


@dataclass(frozen=True)
class BurrParams:
    chi: int
    order: int
    sigma: int

    def __post_init__(self):
        if self.chi < 2 or self.order < self.chi or self.sigma < 1:
            raise ValueError(f"invalid parameters {self}")


def burr_lower_bound(p: BurrParams) -> int:
    """(chi - 1)(order - 1) + sigma: no colouring of one fewer vertex is forced."""
    return (p.chi - 1) * (p.order - 1) + p.sigma


def theorem_bound(r: int, n: int) -> int:
    """Vertex count forcing a monochromatic connected nK_r (r >= 4, n >= R(K_r))."""
    return (r * r - r + 1) * n - r + 1


def burr_parts(r: int, n: int) -> list[range]:
    """Index ranges of the construction: r-1 parts of size rn-1, then Y of size n-1."""
    parts = [range(i * (r * n - 1), (i + 1) * (r * n - 1)) for i in range(r - 1)]
    start = (r - 1) * (r * n - 1)
    parts.append(range(start, start + n - 1))
    return parts


def burr_colouring(r: int, n: int) -> ColouredCompleteGraph:
    """Blue inside each part, red between parts.

    Blue components have rn-1 vertices and every red K_r needs a vertex of
    the (n-1)-vertex part, so there is no monochromatic connected nK_r.
    """
    if r < 2 or n < 1:
        raise ValueError("need r >= 2 and n >= 1")
    parts = burr_parts(r, n)
    total = parts[-1].stop
    full = (1 << total) - 1
    rows = []
    for part in parts:
        inside = ((1 << part.stop) - 1) ^ ((1 << part.start) - 1)
        rows.extend([full & ~inside] * len(part))
    return ColouredCompleteGraph(total, rows)


def as_probability(p: Probability) -> Fraction:
    q = Fraction(p) if not isinstance(p, float) else Fraction(str(p))
    if not 0 <= q <= 1:
        raise ValueError("probability must lie in [0, 1]")
    return q


def random_colouring(order: int, red_probability: Probability, seed: int) -> ColouredCompleteGraph:
    """Each pair red independently with the given probability.

    Pairs are drawn in rcm row order ((1,0), (2,0), (2,1), (3,0), ...), one
    SplitMix64 output per pair; the pair is red iff the output is below
    floor(p * 2**64).
    """
    if order < 1:
        raise ValueError("vertex count must be positive")
    cut = threshold(as_probability(red_probability))
    rng = SplitMix64(seed)
    rows = [0] * order
    for i in range(1, order):
        for j in range(i):
            if rng.next() < cut:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return ColouredCompleteGraph(order, rows)


def pair_at(index: int) -> tuple[int, int]:
    """The index-th pair in rcm row order, as (i, j) with j < i."""
    i = (1 + isqrt(8 * index + 1)) // 2
    return i, index - i * (i - 1) // 2


def perturb(g: ColouredCompleteGraph, flips: int, seed: int) -> ColouredCompleteGraph:
    """Toggle exactly `flips` distinct pairs chosen uniformly without replacement.

    Selection is a partial Fisher-Yates shuffle over pair indices (sparse
    swap table), so the same seed always picks the same pairs and perturbing
    twice restores the input.
    """
    total = g.order * (g.order - 1) // 2
    if not 0 <= flips <= total:
        raise ValueError(f"cannot flip {flips} of {total} pairs")
    rng = SplitMix64(seed)
    swaps: dict[int, int] = {}
    rows = list(g.adjacency(RED))
    for k in range(flips):
        j = k + rng.below(total - k)
        chosen = swaps.get(j, j)
        swaps[j] = swaps.get(k, k)
        u, v = pair_at(chosen)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return ColouredCompleteGraph(g.order, rows)


def add_vertex(g: ColouredCompleteGraph, red_probability: Probability, seed: int) -> ColouredCompleteGraph:
    """Append one vertex whose edges to 0..N-1 are red with the given probability."""
    cut = threshold(as_probability(red_probability))
    rng = SplitMix64(seed)
    new = g.order
    rows = list(g.adjacency(RED)) + [0]
    for v in range(g.order):
        if rng.next() < cut:
            rows[v] |= 1 << new
            rows[new] |= 1 << v
    return ColouredCompleteGraph(g.order + 1, rows)


def perturbed_burr(r: int, n: int, flips: int, seed: int) -> ColouredCompleteGraph:
    """Burr colouring plus one fair-coin vertex, then `flips` seeded toggles.

    The extra vertex brings the order to exactly the theorem bound.
    """
    base = add_vertex(burr_colouring(r, n), Fraction(1, 2), seed)
    return perturb(base, flips, seed ^ 0x5DEECE66D)


def planted_colouring(
    r: int,
    n: int,
    seed: int,
    cliques: Optional[int] = None,
    triple_share: Probability = Fraction(1, 2),
    cross_red: Probability = Fraction(1, 20),
    order: Optional[int] = None,
    scrambled: bool = False,
) -> ColouredCompleteGraph:
    """Near-stable colouring: r-1 blue cliques plus red K_r's attached to them.

    Each planted red clique either has one vertex blue-complete to every
    component and a second one doubling up, or three vertices blue-complete
    to one component and single vertices on all but one of the others.  A
    planted vertex is blue-complete to its home component and red-complete
    to the others.  Edges between planted cliques are red with probability
    `cross_red`, the rest blue.  The component sizes are a seeded random
    split of the leftover vertices.  With `scrambled`, every planted vertex
    gets an independent uniform home instead, which produces the patterns
    a maximal packing has to exchange away.
    """
    order = theorem_bound(r, n) if order is None else order
    k = n - 1 if cliques is None else cliques
    if r < 4 or k * r > order:
        raise ValueError("need r >= 4 and room for the planted cliques")
    rng = SplitMix64(seed)
    share = threshold(as_probability(triple_share))
    cross = threshold(as_probability(cross_red))

    homes: list[int] = []
    for _ in range(k):
        if scrambled:
            homes += [rng.below(r - 1) for _ in range(r)]
        elif rng.next() < share:
            j = rng.below(r - 1)
            skip = (j + 1 + rng.below(r - 2)) % (r - 1)
            homes += [j, j, j] + [c for c in range(r - 1) if c not in (j, skip)]
        else:
            homes += list(range(r - 1)) + [rng.below(r - 1)]
    planted = len(homes)
    rest = order - planted
    # every component gets at least one vertex; the remainder is split at random
    sizes = [1] * (r - 1)
    for _ in range(rest - (r - 1)):
        sizes[rng.below(r - 1)] += 1
    comp_of = list(homes)
    for i, s in enumerate(sizes):
        comp_of += [i] * s

    rows = [0] * order
    for u in range(order):
        for v in range(u):
            pu, pv = u < planted, v < planted
            if pu and pv:
                red = u // r == v // r or rng.next() < cross
            else:
                red = comp_of[u] != comp_of[v]
            if red:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return ColouredCompleteGraph(order, rows)
