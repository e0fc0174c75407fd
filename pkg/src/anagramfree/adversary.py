"""Constructive lower bounds: turn an under-budget colouring of a ladder or a
clique chain into an explicit anagram path.

Clique indices in this module are 1-based, matching ``CliqueChainMeta.clique``.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .colouring import Colouring
from .errors import InvalidInputError, PreconditionError
from .graphs import Graph, build_clique_chain, build_ladder, is_simple_path
from .words import find_even_substring, is_anagram, select_pairs, split_even_pairs


@dataclass(frozen=True)
class AnagramPath:
    path: tuple
    colours: tuple
    split: tuple = ()
    interval: Optional[tuple] = None
    provenance: str = ""

    def to_json(self) -> dict:
        out = {"path": list(self.path), "colours": list(self.colours),
               "split": list(self.split)}
        if self.interval is not None:
            out["interval"] = list(self.interval)
        if self.provenance:
            out["provenance"] = self.provenance
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AnagramPath":
        interval = data.get("interval")
        return cls(tuple(data["path"]), tuple(data["colours"]),
                   tuple(data.get("split", ())),
                   tuple(interval) if interval is not None else None,
                   data.get("provenance", ""))


@dataclass(frozen=True)
class IntervalWitness:
    """Sets ``X'_i .. X'_j``; ``subsets[t]`` belongs to clique ``i + t``."""
    i: int
    j: int
    subsets: tuple = field(default=())


def check_anagram_path(g: Graph, phi: Colouring, ap: AnagramPath) -> list:
    """Independent soundness checks; returns the list of failures (empty if sound)."""
    problems = []
    if not is_simple_path(g, ap.path):
        problems.append("not a simple path of the graph")
    if tuple(phi.spell(ap.path)) != tuple(ap.colours):
        problems.append("colour string does not match the colouring")
    if not is_anagram(ap.colours):
        problems.append("colour string is not an anagram")
    return problems


def find_anagram_ladder(n: int, phi: Colouring) -> Optional[AnagramPath]:
    """Anagram path in the 2n-vertex ladder, or ``None``.

    Reads the colours column by column as ``x_1 y_1 x_2 y_2 ...``, finds a
    pair-aligned even block of columns ``i..j``, splits each column so the
    chosen vertices carry exactly half of every colour, and walks the chosen
    vertices forward then the others backward.  A result is guaranteed when
    fewer than ``log2(n + 1)`` colours are used.
    """
    g, meta = build_ladder(n)
    phi.check_total(g)
    s = [phi[v] for i in range(1, n + 1) for v in (meta.x(i), meta.y(i))]
    witness = find_even_substring(s)
    if witness is None:
        return None
    lo, hi = witness
    v = split_even_pairs(s[2 * lo:2 * hi])
    columns = range(lo + 1, hi + 1)
    chosen = [meta.y(c) if bit else meta.x(c) for c, bit in zip(columns, v)]
    others = [meta.x(c) if bit else meta.y(c) for c, bit in zip(columns, v)]
    path = tuple(chosen + others[::-1])
    return AnagramPath(path, phi.spell(path), v, (lo + 1, hi), "even-substring+split")


def solve_capacitated_assignment(sets: Sequence, cap: int,
                                 symbols: Optional[Sequence] = None) -> Optional[dict]:
    """Map every symbol to an index of a set containing it, using each index
    at most `cap` times.  Returns ``{symbol: index}`` or ``None`` if impossible.

    `symbols` defaults to the union of `sets`.  Starts from a greedy
    assignment and repeatedly moves load off an overloaded index along a
    shortest alternating path to an index with spare capacity.  Each move
    lowers the total overload by one; if no such path exists the reachable
    indices violate Hall's condition and the instance is infeasible.
    """
    if cap < 1:
        raise PreconditionError("capacity must be at least 1")
    sets = [frozenset(x) for x in sets]
    if symbols is None:
        symbols = sorted(set().union(*sets))
    holders = {a: [i for i, x in enumerate(sets) if a in x] for a in symbols}
    if any(not h for h in holders.values()):
        return None
    f = {a: h[0] for a, h in holders.items()}
    assigned = [[] for _ in sets]
    for a in symbols:
        assigned[f[a]].append(a)

    for source in range(len(sets)):
        while len(assigned[source]) > cap:
            parent = {source: None}
            queue = deque([source])
            target = None
            while queue and target is None:
                i = queue.popleft()
                for a in assigned[i]:
                    for nxt in holders[a]:
                        if nxt in parent:
                            continue
                        parent[nxt] = (i, a)
                        if len(assigned[nxt]) < cap:
                            target = nxt
                            break
                        queue.append(nxt)
                    if target is not None:
                        break
            if target is None:
                return None
            node = target
            while parent[node] is not None:
                prev, a = parent[node]
                assigned[prev].remove(a)
                assigned[node].append(a)
                f[a] = node
                node = prev
    return f


def _validate_sets(sets: Sequence, k: int) -> list:
    sets = [frozenset(x) for x in sets]
    if k < 3:
        raise PreconditionError("k must be at least 3")
    for idx, x in enumerate(sets, 1):
        if len(x) != k:
            raise PreconditionError(f"set {idx} has size {len(x)}, expected {k}")
    return sets


def find_even_interval(sets: Sequence, k: int) -> Optional[IntervalWitness]:
    """Interval ``i < j`` and subsets ``X'_l`` of ``X_l`` (each of size >= 2)
    in which every symbol lies in an even number of subsets.

    Intervals are scanned shortest first, then left to right.  Symbols with
    an odd count in the interval each need one removal slot, and a set of
    size k can give up at most ``k - 2`` symbols; a capacitated assignment
    decides whether the slots suffice.  Success is guaranteed when fewer
    than ``(k - 2) * log2(n / 3)`` symbols are used.
    """
    sets = _validate_sets(sets, k)
    n = len(sets)
    for length in range(2, n + 1):
        for lo in range(n - length + 1):
            window = sets[lo:lo + length]
            counts = Counter(a for x in window for a in x)
            odd = sorted(a for a, c in counts.items() if c % 2)
            f = solve_capacitated_assignment(window, k - 2, odd)
            if f is None:
                continue
            subsets = [set(x) for x in window]
            for a in odd:
                subsets[f[a]].discard(a)
            return IntervalWitness(lo + 1, lo + length,
                                   tuple(frozenset(x) for x in subsets))
    return None


def red_blue_label(subsets: Sequence) -> list:
    """Split each vertex set into ``(reds, blues)``, lowest ids red.

    Even sets split evenly.  Odd sets alternate: the 1st, 3rd, ... odd set
    gets the extra red, the 2nd, 4th, ... the extra blue, so overall
    exactly half of the vertices are red.
    """
    subsets = [sorted(x) for x in subsets]
    if any(len(x) < 2 for x in subsets):
        raise InvalidInputError("every set needs at least two vertices")
    if sum(map(len, subsets)) % 2:
        raise InvalidInputError("total number of vertices must be even")
    labelled = []
    odd_seen = 0
    for x in subsets:
        half = len(x) // 2
        if len(x) % 2:
            odd_seen += 1
            if odd_seen % 2:
                half += 1
        labelled.append((tuple(x[:half]), tuple(x[half:])))
    return labelled


def bichromatic_matching(labelled: Sequence) -> list:
    """Perfect red-blue matching of a :func:`red_blue_label` output.

    Pairs are ``(red, blue)``.  Each set is matched internally; every odd
    set leaves one vertex over (red and blue alternately), and consecutive
    leftovers are matched to each other.
    """
    pairs = []
    leftovers = []
    for reds, blues in labelled:
        if not reds or not blues or abs(len(reds) - len(blues)) > 1:
            raise InvalidInputError("malformed red/blue labelling")
        pairs.extend(zip(reds, blues))
        if len(reds) > len(blues):
            leftovers.append((reds[-1], "red"))
        elif len(blues) > len(reds):
            leftovers.append((blues[-1], "blue"))
    if len(leftovers) % 2:
        raise InvalidInputError("odd number of unmatched vertices")
    for (u, cu), (w, cw) in zip(leftovers[::2], leftovers[1::2]):
        if cu == cw:
            raise InvalidInputError("unmatched vertices do not alternate colour")
        pairs.append((u, w) if cu == "red" else (w, u))
    return pairs


def find_anagram_clique_chain(n: int, k: int, phi: Colouring) -> Optional[AnagramPath]:
    """Anagram path in the clique chain of n cliques of size k, or ``None``.

    A repeated colour inside one clique is returned at once as a two-vertex
    path.  Otherwise the colour sets of the cliques go through
    :func:`find_even_interval`, the surviving vertices are matched red to
    blue, the matched pairs are split evenly, and the path runs through the
    chosen vertices clique by clique, then back through the rest.  A result
    is guaranteed when fewer than ``(k - 2) * log2(n / 3)`` colours are used.
    """
    g, meta = build_clique_chain(n, k)
    phi.check_total(g)
    for i in range(1, n + 1):
        first = {}
        for v in meta.clique(i):
            if phi[v] in first:
                path = (first[phi[v]], v)
                return AnagramPath(path, phi.spell(path), (0,), (i, i), "repeated colour")
            first[phi[v]] = v

    witness = find_even_interval(
        [{phi[v] for v in meta.clique(i)} for i in range(1, n + 1)], k)
    if witness is None:
        return None
    cliques = range(witness.i, witness.j + 1)
    kept = [[v for v in meta.clique(i) if phi[v] in x]
            for i, x in zip(cliques, witness.subsets)]
    pairs = bichromatic_matching(red_blue_label(kept))
    s = [phi[v] for pair in pairs for v in pair]
    bits = split_even_pairs(s)
    first_half = set(select_pairs([v for pair in pairs for v in pair], bits))
    forward = [v for block in kept for v in block if v in first_half]
    backward = [v for block in reversed(kept) for v in block if v not in first_half]
    path = tuple(forward + backward)
    return AnagramPath(path, phi.spell(path), bits, (witness.i, witness.j),
                       "even-interval+matching+split")
