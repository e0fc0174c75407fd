"""Strings over small integer alphabets.

Symbols are the integers ``0 .. alphabet_size - 1``.  Most functions accept
either a :class:`ColorString` or any plain sequence of ints; the alphabet
size is only needed where the result depends on it (parity vectors).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

from .errors import BudgetExceededError, InvalidInputError, PreconditionError

DEFAULT_ASF_BUDGET = 10**7


@dataclass(frozen=True)
class ColorString:
    alphabet_size: int
    entries: tuple

    def __post_init__(self):
        if self.alphabet_size < 0:
            raise InvalidInputError("alphabet size must be non-negative")
        object.__setattr__(self, "entries", tuple(self.entries))
        for a in self.entries:
            if not 0 <= a < self.alphabet_size:
                raise InvalidInputError(
                    f"symbol {a} outside alphabet of size {self.alphabet_size}")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, item):
        return self.entries[item]

    def count(self, a):
        """Number of occurrences of symbol `a`."""
        return self.entries.count(a)


Word = Union[ColorString, Sequence[int]]


class EvenSubstringWitness(NamedTuple):
    """Pair indices ``i < j``; entries ``2i .. 2j-1`` form an even substring."""
    i: int
    j: int


def _entries(s: Word) -> tuple:
    return s.entries if isinstance(s, ColorString) else tuple(s)


def _alphabet_size(s: Word, alphabet_size: Optional[int]) -> int:
    if alphabet_size is not None:
        return alphabet_size
    if isinstance(s, ColorString):
        return s.alphabet_size
    return max(s, default=-1) + 1


def parity_vector(s: Word, alphabet_size: Optional[int] = None) -> tuple:
    """Per-symbol occurrence counts modulo 2, one bit per alphabet symbol."""
    size = _alphabet_size(s, alphabet_size)
    bits = [0] * size
    for a in _entries(s):
        bits[a] ^= 1
    return tuple(bits)


def is_even(s: Word) -> bool:
    return all(c % 2 == 0 for c in Counter(_entries(s)).values())


def find_even_substring(s: Word) -> Optional[EvenSubstringWitness]:
    """Locate a non-empty pair-aligned even substring ``s[2i:2j]``.

    Prefix parities are kept as bitmasks; the first repeated mask (smallest
    ``j``) gives the witness.  A witness is guaranteed whenever the alphabet
    has fewer than ``log2(n + 1)`` symbols, by pigeonhole on the ``n + 1``
    prefix masks.
    """
    entries = _entries(s)
    if len(entries) % 2:
        raise InvalidInputError("find_even_substring needs an even-length string")
    seen = {0: 0}
    mask = 0
    for j in range(1, len(entries) // 2 + 1):
        mask ^= (1 << entries[2 * j - 2]) ^ (1 << entries[2 * j - 1])
        if mask in seen:
            return EvenSubstringWitness(seen[mask], j)
        seen[mask] = j
    return None


def split_even_pairs(s: Word) -> tuple:
    """Choose one entry of each consecutive pair so the chosen half has
    exactly half of every symbol count.

    Each pair ``(s[2l], s[2l+1])`` is an edge of a multigraph on the
    symbols.  All degrees are even, so the edge set splits into closed
    trails; walking each trail orients every edge, and selecting the tail
    of each edge takes every symbol exactly ``deg/2`` times.  Returns the bit
    vector ``v`` with ``v[l] = 1`` iff ``s[2l+1]`` is selected.
    """
    entries = _entries(s)
    if len(entries) % 2:
        raise InvalidInputError("split_even_pairs needs an even-length string")
    if not is_even(entries):
        raise PreconditionError("split_even_pairs needs an even string")
    r = len(entries) // 2
    incident = {}
    for pair in range(r):
        a, b = entries[2 * pair], entries[2 * pair + 1]
        incident.setdefault(a, []).append(pair)
        if b != a:
            incident.setdefault(b, []).append(pair)
    pointer = dict.fromkeys(incident, 0)
    used = [False] * r
    v = [0] * r

    def next_edge(u):
        edges = incident[u]
        p = pointer[u]
        while p < len(edges) and used[edges[p]]:
            p += 1
        pointer[u] = p
        return edges[p] if p < len(edges) else None

    for start in sorted(incident):
        while (pair := next_edge(start)) is not None:
            u = start
            while pair is not None:
                used[pair] = True
                a, b = entries[2 * pair], entries[2 * pair + 1]
                if a == u:
                    v[pair] = 0
                    u = b
                else:
                    v[pair] = 1
                    u = a
                pair = next_edge(u)
            # even degrees force every trail to close where it started
            assert u == start
    return tuple(v)


def select_pairs(s: Word, v: Sequence[int]) -> tuple:
    """The selected string ``s_v`` (entry ``2l + v[l]`` of every pair)."""
    entries = _entries(s)
    return tuple(entries[2 * l + bit] for l, bit in enumerate(v))


def complement_pairs(s: Word, v: Sequence[int]) -> tuple:
    """The unselected entries, ``s[2l + 1 - v[l]]`` for every pair."""
    entries = _entries(s)
    return tuple(entries[2 * l + 1 - bit] for l, bit in enumerate(v))


def is_anagram(s: Word) -> bool:
    entries = _entries(s)
    n = len(entries)
    if n == 0 or n % 2:
        return False
    return Counter(entries[: n // 2]) == Counter(entries[n // 2:])


def find_abelian_square(s: Word) -> Optional[tuple]:
    """First factor ``s[start : start + 2h]`` that is an anagram.

    Half-lengths are tried shortest first, then starts left to right.
    Each half-length is one sliding-window pass over a count-difference
    table, so the whole scan is quadratic.
    """
    entries = _entries(s)
    n = len(entries)
    for h in range(1, n // 2 + 1):
        diff = Counter()
        for t in range(h):
            diff[entries[t]] += 1
            diff[entries[h + t]] -= 1
        nonzero = sum(1 for c in diff.values() if c)
        start = 0
        while True:
            if nonzero == 0:
                return (start, h)
            if start + 2 * h >= n:
                break
            # slide: drop entries[start] from the left half, move
            # entries[start+h] across the centre, add entries[start+2h]
            for sym, delta in ((entries[start], -1),
                               (entries[start + h], 2),
                               (entries[start + 2 * h], -1)):
                before = diff[sym]
                diff[sym] = before + delta
                nonzero += (diff[sym] != 0) - (before != 0)
            start += 1
    return None


def generate_asf_word(length: int, alphabet_size: int,
                      budget: int = DEFAULT_ASF_BUDGET) -> Optional[ColorString]:
    """Abelian-square-free word by depth-first backtracking.

    Symbols are tried smallest first.  Returns ``None`` when the search
    space is exhausted, and raises :class:`BudgetExceededError` after
    `budget` candidate extensions.
    """
    if length < 1 or alphabet_size < 1:
        raise InvalidInputError("length and alphabet_size must be positive")
    # Prefix counts packed into one int: symbol a owns bits [a*width, (a+1)*width).
    # A suffix of length 2h is an abelian square iff P[L] + P[L-2h] == 2 P[L-h].
    width = length.bit_length() + 2
    unit = [1 << (width * a) for a in range(alphabet_size)]
    word = []
    prefix = [0]
    next_symbol = [0]
    nodes = 0
    while len(word) < length:
        size = len(word) + 1
        c = next_symbol[-1]
        while c < alphabet_size:
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(budget, "abelian-square-free search")
            p = prefix[-1] + unit[c]
            if all(p + prefix[size - 2 * h] != 2 * prefix[size - h]
                   for h in range(1, size // 2 + 1)):
                break
            c += 1
        if c < alphabet_size:
            next_symbol[-1] = c + 1
            word.append(c)
            prefix.append(p)
            next_symbol.append(0)
        else:
            next_symbol.pop()
            if not word:
                return None
            word.pop()
            prefix.pop()
    return ColorString(alphabet_size, word)
