"""
Even blocks and balanced splits
===============================

A colour string with few symbols always contains a pair-aligned block in
which every colour occurs an even number of times, and any such block can
be split pair by pair into two halves with identical colour counts.
"""

import random

from anagramfree.words import (complement_pairs, find_even_substring, parity_vector,
                               select_pairs, split_even_pairs)

rng = random.Random(138)

# 3 symbols and 8 pairs: 3 < log2(9), so an even block must exist.
s = [rng.randrange(3) for _ in range(16)]
print("string         ", s)

# Prefix parities repeat somewhere; the first repeat marks the block.
for j in range(9):
    print(f"  parity of first {j} pairs:", parity_vector(s[:2 * j], 3))

w = find_even_substring(s)
block = s[2 * w.i:2 * w.j]
print(f"even block      pairs {w.i}..{w.j - 1}: {block}")

# Pick one entry of every pair so both halves carry the same colours.
v = split_even_pairs(block)
print("split bits     ", v)
print("chosen half    ", sorted(select_pairs(block, v)))
print("other half     ", sorted(complement_pairs(block, v)))
