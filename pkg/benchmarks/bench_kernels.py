"""Compare the compiled and pure-Python refinement kernels.

Times (a) root refinement plus one individualization on each graph and
(b) the full automorphism search, for both backends, and checks that the two
produce the same traces and group orders.

    python benchmarks/bench_kernels.py [--repeat 5] [--max-order 200]
"""

from __future__ import annotations

import argparse
import statistics
import time

from htgaut.aut import automorphisms, kernel
from htgaut.aut.search import Tree
from htgaut.classify import normal_form_triples
from htgaut.htg import build_htg, validate_params
from htgaut.named import Kind, named

SAMPLE = [(1, 26, 7), (1, 18, 5), (4, 8, 4), (3, 18, 9), (5, 40, 5), (2, 100, 10), (7, 28, 7)]


def corpus(max_order: int):
    graphs = [(f"HTG{t}", build_htg(validate_params(*t)).graph) for t in SAMPLE if t[0] * t[1] <= max_order]
    graphs += [("Heawood", named(Kind.HEAWOOD)), ("Pappus", named(Kind.PAPPUS)), ("GPr(10)", named(Kind.GPR, 10))]
    return graphs


def refine_only(g) -> int:
    tree = Tree(g)
    node = tree.child(tree.root(), 0)
    return node.trace


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--max-order", type=int, default=200)
    args = parser.parse_args()
    backends = kernel.available()
    if "cython" not in backends:
        print("compiled kernel not built; only the python backend is available")
    graphs = corpus(args.max_order)
    sweep = [build_htg(p, check=False).graph for p in normal_form_triples(60)]

    header = f"{'graph':<18}{'V':>5}" + "".join(f"{b + ' refine':>16}{b + ' aut':>14}" for b in backends)
    print(header)
    totals = {b: 0.0 for b in backends}
    for name, g in graphs:
        line = f"{name:<18}{g.order:>5}"
        seen = {}
        for b in backends:
            kernel.use(b)
            t_ref = best_of(lambda: refine_only(g), args.repeat)
            t_aut = best_of(lambda: automorphisms(g), args.repeat)
            seen[b] = (refine_only(g), automorphisms(g).order())
            totals[b] += t_aut
            line += f"{t_ref * 1e3:>13.3f} ms{t_aut * 1e3:>11.2f} ms"
        if len(set(seen.values())) != 1:
            raise SystemExit(f"backends disagree on {name}: {seen}")
        print(line)
    for b in backends:
        kernel.use(b)
        runs = [best_of(lambda: [automorphisms(g) for g in sweep], 1) for _ in range(args.repeat)]
        print(f"{b:>8}: all {len(sweep)} normal-form HTGs with mn <= 60 in {statistics.median(runs):.3f} s")
    if len(backends) == 2:
        print(f"speedup on full searches: {totals['python'] / totals['cython']:.2f}x")


if __name__ == "__main__":
    main()
