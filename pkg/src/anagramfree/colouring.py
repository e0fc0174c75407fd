"""Vertex colourings: exhaustive anagram-free verification and two colourers."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidInputError, PreconditionError
from .graphs import DEFAULT_PATH_CAP, Graph, PathDecomposition, validate_decomposition
from .words import DEFAULT_ASF_BUDGET, generate_asf_word


@dataclass(frozen=True)
class Colouring:
    alphabet_size: int
    colours: tuple

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(self.colours))
        for c in self.colours:
            if not 0 <= c < self.alphabet_size:
                raise InvalidInputError(
                    f"colour {c} outside alphabet of size {self.alphabet_size}")

    def __len__(self):
        return len(self.colours)

    def __getitem__(self, v):
        return self.colours[v]

    def colours_used(self) -> int:
        return len(set(self.colours))

    def spell(self, path: Sequence[int]) -> tuple:
        return tuple(self.colours[v] for v in path)

    def check_total(self, g: Graph) -> None:
        if len(self.colours) != g.vertex_count:
            raise InvalidInputError(
                f"colouring has {len(self.colours)} entries, graph has {g.vertex_count} vertices")

    def to_json(self) -> dict:
        return {"alphabet_size": self.alphabet_size, "colours": list(self.colours)}

    @classmethod
    def from_json(cls, data: dict) -> "Colouring":
        try:
            return cls(int(data["alphabet_size"]), tuple(int(c) for c in data["colours"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed colouring JSON: {exc}") from exc


class Status(enum.Enum):
    OK = "ok"
    COUNTEREXAMPLE = "counterexample"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    path: Optional[tuple] = None
    paths_checked: int = 0

    @property
    def ok(self) -> bool:
        return self.status is Status.OK

    def to_json(self) -> dict:
        out = {"status": self.status.value, "paths_checked": self.paths_checked}
        if self.path is not None:
            out["path"] = list(self.path)
        return out


def verify_anagram_free(g: Graph, phi: Colouring, cap: int = DEFAULT_PATH_CAP) -> Verdict:
    """Exhaustively search for a simple path whose colour string is an anagram.

    Walks the same canonical depth-first order as
    :func:`~anagramfree.graphs.enumerate_simple_paths` and returns the first
    even-vertex-count anagram path found.  If more than `cap` canonical paths
    would be needed the verdict is ``UNKNOWN``; it is never ``OK`` without
    full coverage.

    Colour counts along the current path are kept as packed prefix sums
    ``P[0..L]``, so ``path[:2m]`` is an anagram iff ``P[2m] == 2 P[m]``.
    """
    phi.check_total(g)
    width = g.vertex_count.bit_length() + 2
    unit = [1 << (width * c) for c in phi.colours]
    adj = g.adjacency
    on_path = [False] * g.vertex_count
    checked = 0
    for start in range(g.vertex_count):
        path = [start]
        prefix = [0, unit[start]]
        on_path[start] = True
        stack = [iter(adj[start])]
        while stack:
            for w in stack[-1]:
                if not on_path[w]:
                    break
            else:
                stack.pop()
                on_path[path.pop()] = False
                prefix.pop()
                continue
            path.append(w)
            prefix.append(prefix[-1] + unit[w])
            on_path[w] = True
            stack.append(iter(adj[w]))
            if w > start:
                checked += 1
                if checked > cap:
                    return Verdict(Status.UNKNOWN, None, cap)
                size = len(path)
                if size % 2 == 0 and prefix[size] == 2 * prefix[size // 2]:
                    return Verdict(Status.COUNTEREXAMPLE, tuple(path), checked)
    return Verdict(Status.OK, None, checked)


def colour_path_asf(n: int, budget: int = DEFAULT_ASF_BUDGET) -> Colouring:
    """4-colour the path P_n with an abelian-square-free word.

    A path's simple subpaths are exactly the factors of its colour word, so
    an abelian-square-free word is an anagram-free colouring.
    """
    if n < 1:
        raise InvalidInputError("path colouring needs n >= 1")
    word = generate_asf_word(n, 4, budget)
    return Colouring(4, word.entries)


def dnc_colour(g: Graph, d: PathDecomposition) -> Colouring:
    """Divide-and-conquer colouring along a path decomposition.

    The middle bag of the current bag range is a separator.  Its not yet
    coloured vertices get distinct colours from a palette reserved for the
    current recursion depth; the bag ranges on either side are then coloured
    one level deeper.  At most ``(w + 1) * (floor(log2 m) + 1)`` colours for
    width ``w`` and ``m`` bags.
    """
    report = validate_decomposition(g, d)
    if not report.valid:
        raise PreconditionError("invalid decomposition: " + "; ".join(report.violations))
    tag = [None] * g.vertex_count
    ranges = [(0, len(d.bags), 0)]
    while ranges:
        lo, hi, depth = ranges.pop()
        if lo >= hi:
            continue
        mid = (lo + hi) // 2
        fresh = sorted(v for v in d.bags[mid] if tag[v] is None)
        for slot, v in enumerate(fresh):
            tag[v] = (depth, slot)
        ranges.append((mid + 1, hi, depth + 1))
        ranges.append((lo, mid, depth + 1))
    palette = {t: c for c, t in enumerate(sorted(set(tag)))}
    return Colouring(len(palette), tuple(palette[t] for t in tag))


def dnc_colour_bound(width: int, bag_count: int) -> int:
    """Upper bound on the number of colours used by :func:`dnc_colour`."""
    return (width + 1) * bag_count.bit_length()

