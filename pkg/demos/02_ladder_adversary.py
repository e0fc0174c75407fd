"""
Defeating colourings of the ladder
==================================

The 2n-vertex ladder (rungs, rails and both diagonals) has pathwidth 3 and
maximum degree 5, yet every colouring with fewer than log2(n + 1) colours
contains an anagram path.  The adversary builds that path explicitly.
"""

import math
import random

from anagramfree.adversary import check_anagram_path, find_anagram_ladder
from anagramfree.colouring import Colouring
from anagramfree.graphs import build_ladder, ladder_decomposition, validate_decomposition

n = 31
g, meta = build_ladder(n)
print(f"ladder n={n}: {g.vertex_count} vertices, {len(g.edges)} edges, "
      f"max degree {g.max_degree()}, "
      f"decomposition width {validate_decomposition(g, ladder_decomposition(n)).width}")

colours_allowed = math.ceil(math.log2(n + 1)) - 1
print(f"colours below log2(n+1) = {math.log2(n + 1):.2f}: {colours_allowed}")

rng = random.Random(1)
for trial in range(5):
    phi = Colouring(colours_allowed, tuple(rng.randrange(colours_allowed) for _ in range(2 * n)))
    ap = find_anagram_ladder(n, phi)
    half = len(ap.path) // 2
    names = [f"{'xy'[v % 2]}{v // 2 + 1}" for v in ap.path]
    print(f"trial {trial}: columns {ap.interval}, path {' '.join(names)}")
    print(f"   colours {ap.colours[:half]} | {ap.colours[half:]}",
          "valid" if not check_anagram_path(g, phi, ap) else "INVALID")
