"""
Upper bounds: divide and conquer, and 4-colouring paths
=======================================================

Colouring the middle bag of a path decomposition with fresh colours and
recursing on both sides uses O(width * log n) colours and is anagram-free.
Paths need only 4 colours, via an abelian-square-free word.
"""

from anagramfree.colouring import (colour_path_asf, dnc_colour, dnc_colour_bound,
                                   verify_anagram_free)
from anagramfree.graphs import (build_clique_chain, build_ladder, build_path_graph,
                                clique_chain_decomposition, ladder_decomposition,
                                path_graph_decomposition)

cases = [
    ("ladder n=8", build_ladder(8)[0], ladder_decomposition(8)),
    ("path n=16", build_path_graph(16), path_graph_decomposition(16)),
    ("clique chain n=4 k=3", build_clique_chain(4, 3)[0], clique_chain_decomposition(4, 3)),
]
for name, g, d in cases:
    phi = dnc_colour(g, d)
    verdict = verify_anagram_free(g, phi)
    print(f"{name:22s} colours {phi.colours_used():2d} "
          f"(bound {dnc_colour_bound(d.width, len(d.bags))}), "
          f"{verdict.status.value} after {verdict.paths_checked} paths")

phi = colour_path_asf(200)
print("P_200 word prefix:", "".join("abcd"[c] for c in phi.colours[:40]), "...")
print("P_200 verdict    :", verify_anagram_free(build_path_graph(200), phi).status.value)
