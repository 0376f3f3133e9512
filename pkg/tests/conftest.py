from __future__ import annotations

import itertools

import pytest

from htgaut.graph import Graph, build_graph
from htgaut.htg import HtgParams, validate_params


def all_valid_triples(max_order: int, normal_only: bool = False) -> list[HtgParams]:
    out = []
    for m in range(1, max_order // 4 + 1):
        for n in range(4, max_order // m + 1, 2):
            top = n // 2 + 1 if normal_only else n
            for ell in range(m % 2, top, 2):
                if m == 1 and ell in (1, n - 1):
                    continue
                out.append(validate_params(m, n, ell))
    return out


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def brute_force_automorphism_count(g: Graph) -> int:
    """Count vertex bijections preserving adjacency by plain backtracking."""
    n = g.order
    adj = [set(a) for a in g.adjacency]
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for w in range(n):
            if used[w] or len(adj[w]) != len(adj[v]):
                continue
            if all((image[u] in adj[w]) == (u in adj[v]) for u in range(v)):
                image[v] = w
                used[w] = True
                total += extend(v + 1)
                used[w] = False
        image[v] = -1
        return total

    return extend(0)


def brute_force_girth(g: Graph) -> float:
    """Shortest cycle by trying every vertex subset in increasing size."""
    edges = g.edge_set
    for k in range(3, g.order + 1):
        for subset in itertools.combinations(range(g.order), k):
            first, rest = subset[0], subset[1:]
            for order in itertools.permutations(rest):
                if order[0] > order[-1]:
                    continue
                cyc = (first,) + order
                if all(
                    (min(a, b), max(a, b)) in edges for a, b in zip(cyc, cyc[1:] + cyc[:1])
                ):
                    return k
    return float("inf")


@pytest.fixture(params=["python", "cython"])
def backend(request):
    from htgaut.aut import kernel

    if request.param not in kernel.available():
        pytest.skip("compiled kernel not built")
    previous = kernel.backend
    kernel.use(request.param)
    yield request.param
    kernel.use(previous)


def pytest_terminal_summary(terminalreporter):
    try:
        from tests.test_acceptance import REPORT
    except ImportError:
        try:
            from test_acceptance import REPORT
        except ImportError:
            return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
