import itertools
import sys

import pytest

from rcm.colouring import BLUE, RED, build_colouring, vertex_set


def all_red(n):
    return build_colouring(n, itertools.combinations(range(n), 2))


def all_blue(n):
    return build_colouring(n, [])


@pytest.fixture
def pentagon():
    return build_colouring(5, [(i, (i + 1) % 5) for i in range(5)])


def structured(sizes, extra, blue_to, red_inside=(), blue_between=()):
    """Blue-clique components (pairwise red) plus `extra` further vertices.

    blue_to maps an extra vertex to {component index: set of blue partners in
    that component, or "all"}; every other edge from an extra vertex to a
    component is red.  Extra vertices are red to each other unless listed in
    blue_between; red_inside lists red edges within components.
    """
    comps, start = [], 0
    for s in sizes:
        comps.append(list(range(start, start + s)))
        start += s
    extras = list(range(start, start + extra))
    N = start + extra
    red = set()
    for a, b in itertools.combinations(range(len(comps)), 2):
        red.update((u, v) for u in comps[a] for v in comps[b])
    red.update(red_inside)
    for x in extras:
        for i, comp in enumerate(comps):
            partners = blue_to.get(x, {}).get(i, set())
            if partners == "all":
                partners = set(comp)
            red.update((x, v) for v in comp if v not in partners)
    blue_pairs = {frozenset(p) for p in blue_between}
    red.update(p for p in itertools.combinations(extras, 2) if frozenset(p) not in blue_pairs)
    return build_colouring(N, red), [vertex_set(c) for c in comps], extras


def naive_cliques(g, colour, r, vertices=None):
    vertices = range(g.order) if vertices is None else vertices
    return [c for c in itertools.combinations(sorted(vertices), r)
            if all(g.colour(u, v) is colour for u, v in itertools.combinations(c, 2))]


def naive_components(g, colour):
    parent = list(range(g.order))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in itertools.combinations(range(g.order), 2):
        if g.colour(u, v) is colour:
            parent[find(u)] = find(v)
    return [find(v) for v in range(g.order)]


def naive_max_packing(g, colour, r, vertices=None):
    cliques = naive_cliques(g, colour, r, vertices)
    best = 0

    def rec(idx, used, count):
        nonlocal best
        best = max(best, count)
        for k in range(idx, len(cliques)):
            if not used & set(cliques[k]):
                rec(k + 1, used | set(cliques[k]), count + 1)

    rec(0, set(), 0)
    return best


def naive_connected_yes(g, r, n):
    """Brute force: some colour component holds n disjoint r-cliques."""
    for colour in (RED, BLUE):
        roots = naive_components(g, colour)
        for root in set(roots):
            members = [v for v in range(g.order) if roots[v] == root]
            if len(members) >= r * n and naive_max_packing(g, colour, r, members) >= n:
                return True
    return False


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
