"""
Defeating colourings of the clique chain
========================================

n cliques of size k, consecutive ones completely joined: pathwidth 2k-1.
Below (k-2) log2(n/3) colours an interval of cliques admits subsets in
which every colour appears an even number of times; matching and splitting
those vertices yields an anagram path that zig-zags through the interval.
"""

import math
import random

from anagramfree.adversary import (bichromatic_matching, check_anagram_path,
                                   find_anagram_clique_chain, find_even_interval,
                                   red_blue_label)
from anagramfree.colouring import Colouring
from anagramfree.graphs import build_clique_chain

k, n = 5, 48
sigma = math.ceil((k - 2) * math.log2(n / 3)) - 1
g, meta = build_clique_chain(n, k)
print(f"clique chain n={n}, k={k}: bound (k-2)log2(n/3) = {(k - 2) * math.log2(n / 3):.1f}, "
      f"using {sigma} colours")

rng = random.Random(3)
# no repeated colour inside a clique, otherwise a single edge already wins
colours = tuple(c for _ in range(n) for c in rng.sample(range(sigma), k))
phi = Colouring(sigma, colours)

sets = [{phi[v] for v in meta.clique(i)} for i in range(1, n + 1)]
w = find_even_interval(sets, k)
print(f"even interval: cliques {w.i}..{w.j}")
for i, sub in zip(range(w.i, w.j + 1), w.subsets):
    print(f"  X_{i} = {sorted(sets[i - 1])} -> kept {sorted(sub)}")

kept = [[v for v in meta.clique(i) if phi[v] in sub]
        for i, sub in zip(range(w.i, w.j + 1), w.subsets)]
labelled = red_blue_label(kept)
print("red/blue:", labelled)
print("matching:", bichromatic_matching(labelled))

ap = find_anagram_clique_chain(n, k, phi)
half = len(ap.path) // 2
print("path    :", ap.path)
print("colours :", ap.colours[:half], "|", ap.colours[half:])
print("valid   :", not check_anagram_path(g, phi, ap))
