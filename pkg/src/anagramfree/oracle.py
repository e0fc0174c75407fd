"""Brute-force reference implementations.

Everything here is deliberately naive and shares no code with the main
algorithms; it exists to cross-check them on small inputs.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceededError, EnumerationOverflowError, InvalidInputError


def _halves_match(colours) -> bool:
    m = len(colours) // 2
    return len(colours) > 0 and len(colours) % 2 == 0 and \
        sorted(colours[:m]) == sorted(colours[m:])


def _neighbours(vertex_count, edges):
    nbrs = {v: set() for v in range(vertex_count)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def brute_find_anagram_path(g, phi, cap: int = 10**7) -> Optional[tuple]:
    """Any simple path whose colour string is an anagram, or ``None``.

    Recursive search over directed paths, highest start vertex first.
    `cap` bounds the number of directed paths visited.
    """
    nbrs = _neighbours(g.vertex_count, g.edges)
    colours = list(phi.colours)
    visited = 0

    def grow(path):
        nonlocal visited
        for w in sorted(nbrs[path[-1]], reverse=True):
            if w in path:
                continue
            visited += 1
            if visited > cap:
                raise EnumerationOverflowError(cap)
            longer = path + [w]
            if _halves_match([colours[v] for v in longer]):
                return tuple(longer)
            found = grow(longer)
            if found:
                return found
        return None

    for start in reversed(range(g.vertex_count)):
        found = grow([start])
        if found:
            return found
    return None


def canonical_colourings(vertex_count: int, colours: int) -> Iterator[tuple]:
    """Colourings in first-occurrence form: each new colour is the next unused one."""
    def extend(prefix, used):
        if len(prefix) == vertex_count:
            yield tuple(prefix)
            return
        for c in range(min(used + 1, colours)):
            yield from extend(prefix + [c], max(used, c + 1))
    yield from extend([], 0)


def brute_min_afcn(g, max_colours: int, cap: int = 10**7) -> Optional[int]:
    """Smallest number of colours admitting an anagram-free colouring (up to
    `max_colours`), found by trying every canonical colouring."""
    from .colouring import Colouring

    for c in range(1, max_colours + 1):
        for colours in canonical_colourings(g.vertex_count, c):
            phi = Colouring(c, colours)
            if brute_find_anagram_path(g, phi, cap) is None:
                return c
    return None


def brute_split(s: Sequence[int]) -> Optional[tuple]:
    """First vector v (lexicographic) with ``n_a(s_v) = n_a(s) / 2`` for all a."""
    s = list(s)
    if len(s) % 2:
        raise InvalidInputError("brute_split needs an even-length string")
    total = Counter(s)
    if any(c % 2 for c in total.values()):
        return None
    target = {a: c // 2 for a, c in total.items()}
    for v in itertools.product((0, 1), repeat=len(s) // 2):
        picked = Counter(s[2 * l + b] for l, b in enumerate(v))
        if dict(picked) == target:
            return v
    return None


def brute_assignment(sets: Sequence, cap: int,
                     symbols: Optional[Sequence] = None) -> bool:
    """Whether every symbol can go to a set containing it with at most `cap`
    symbols per set; exhaustive over all choices (with load pruning)."""
    sets = [set(x) for x in sets]
    if symbols is None:
        symbols = sorted(set().union(*sets))
    symbols = list(symbols)
    load = [0] * len(sets)

    def place(t):
        if t == len(symbols):
            return True
        for i, x in enumerate(sets):
            if symbols[t] in x and load[i] < cap:
                load[i] += 1
                if place(t + 1):
                    return True
                load[i] -= 1
        return False

    return place(0)


def brute_abelian_squares(s: Sequence[int]) -> Iterator[tuple]:
    """Every ``(start, half_length)`` whose factor is an abelian square."""
    s = list(s)
    for start in range(len(s)):
        for h in range(1, (len(s) - start) // 2 + 1):
            if sorted(s[start:start + h]) == sorted(s[start + h:start + 2 * h]):
                yield (start, h)


def _has_abelian_square_suffix(word) -> bool:
    n = len(word)
    return any(Counter(word[n - 2 * h:n - h]) == Counter(word[n - h:])
               for h in range(1, n // 2 + 1))


def brute_asf_max(alphabet_size: int, cap: int = 10**6) -> int:
    """Length of the longest abelian-square-free word over the alphabet.

    Plain depth-first search over every word; raises
    :class:`BudgetExceededError` after `cap` nodes, which is expected from
    four letters on since such words are then unbounded.
    """
    if alphabet_size < 1:
        raise InvalidInputError("alphabet_size must be positive")
    best = 0
    nodes = 0
    stack = [[]]
    while stack:
        word = stack.pop()
        best = max(best, len(word))
        for c in range(alphabet_size):
            nodes += 1
            if nodes > cap:
                raise BudgetExceededError(cap, "abelian-square-free enumeration")
            longer = word + [c]
            if not _has_abelian_square_suffix(longer):
                stack.append(longer)
    return best
