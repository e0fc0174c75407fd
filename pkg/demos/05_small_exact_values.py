"""
Exact anagram-free chromatic numbers of tiny graphs
===================================================

Brute force over colourings up to renaming gives exact values on a handful
of vertices; compare the ladder's values with the log2(n + 1) lower bound.
"""

import math

from anagramfree.graphs import Graph, build_ladder, build_path_graph
from anagramfree.oracle import brute_asf_max, brute_min_afcn

for n in range(1, 7):
    print(f"path P_{n}: {brute_min_afcn(build_path_graph(n), n)}")

for n in range(1, 4):
    g, _ = build_ladder(n)
    print(f"ladder n={n}: {brute_min_afcn(g, 2 * n)} colours needed, "
          f"lower bound log2(n+1) = {math.log2(n + 1):.2f}")

# open question from the remarks: the plain 2 x n grid
for n in range(1, 4):
    edges = [(2 * i, 2 * i + 1) for i in range(n)]
    edges += [(2 * i + s, 2 * i + 2 + s) for i in range(n - 1) for s in (0, 1)]
    print(f"2 x {n} grid: {brute_min_afcn(Graph(2 * n, tuple(edges)), 2 * n)}")

for sigma in (1, 2, 3):
    print(f"longest abelian-square-free word over {sigma} letters: {brute_asf_max(sigma)}")
