"""Pebble configurations, moves, goal predicates and potential functions.

A configuration is a plain tuple of non-negative per-vertex pebble counts.
A pebbling move removes two pebbles from a vertex and places one on an
adjacent vertex.  All operations are pure; inputs are never mutated.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import (
    Graph,
    max_undominated_component,
    support_mask,
)

Configuration = tuple[int, ...]
PebblingMove = tuple[int, int]  # (source, target), endpoints adjacent


class PebblingError(ValueError):
    """Illegal pebbling operation (bad move, size mismatch, bad count)."""


# ---------------------------------------------------------------------------
# configurations
# ---------------------------------------------------------------------------

def make_configuration(counts: Iterable[int]) -> Configuration:
    counts = tuple(int(c) for c in counts)
    if any(c < 0 for c in counts):
        raise PebblingError(f"negative pebble count in {counts}")
    return counts


def config_size(c: Sequence[int]) -> int:
    return sum(c)


def support(c: Sequence[int]) -> frozenset[int]:
    """Covered vertices: those holding at least one pebble."""
    return frozenset(v for v, k in enumerate(c) if k > 0)


def parse_configuration(text: str, n: int | None = None) -> Configuration:
    """Parse the comma-separated text form, e.g. ``"5,0,0,0"``."""
    try:
        counts = tuple(int(p.strip()) for p in text.split(","))
    except ValueError as exc:
        raise PebblingError(f"bad configuration text {text!r}") from exc
    if any(k < 0 for k in counts):
        raise PebblingError(f"negative count in configuration {text!r}")
    if n is not None and len(counts) != n:
        raise PebblingError(
            f"configuration has {len(counts)} entries, graph has {n} vertices")
    return counts


def format_configuration(c: Sequence[int]) -> str:
    return ",".join(str(k) for k in c)


def check_sized(g: Graph, c: Sequence[int]) -> None:
    if len(c) != g.n:
        raise PebblingError(
            f"configuration has {len(c)} entries, graph has {g.n} vertices")


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------

def apply_move(g: Graph, c: Sequence[int], move: PebblingMove) -> Configuration:
    """Apply one pebbling move, returning the new configuration.

    Requires at least two pebbles at the source and adjacent endpoints.
    """
    src, dst = move
    check_sized(g, c)
    if not g.is_edge(src, dst):
        raise PebblingError(f"move {src}->{dst}: endpoints not adjacent")
    if c[src] < 2:
        raise PebblingError(
            f"move {src}->{dst}: needs 2 pebbles at source, found {c[src]}")
    out = list(c)
    out[src] -= 2
    out[dst] += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# goal predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Goal:
    """When does a configuration solve the graph?

    ``domination``: every vertex covered or adjacent to a covered vertex.
    ``cover``: every vertex holds at least one pebble.
    ``subversion``: no undominated connected component has more than
    ``omega`` vertices (``omega=0`` coincides with domination).
    """

    kind: str
    omega: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("domination", "cover", "subversion"):
            raise ValueError(f"unknown goal kind {self.kind!r}")
        if self.omega < 0:
            raise ValueError("omega must be non-negative")
        if self.kind != "subversion" and self.omega != 0:
            raise ValueError(f"goal {self.kind!r} takes no omega")

    def describe(self) -> str:
        if self.kind == "subversion":
            return f"subversion(omega={self.omega})"
        return self.kind


DOMINATION = Goal("domination")
FULL_COVER = Goal("cover")


def subversion(omega: int) -> Goal:
    return Goal("subversion", omega)


def satisfies(g: Graph, c: Sequence[int], goal: Goal) -> bool:
    """Does ``c`` already satisfy ``goal`` on ``g`` (no moves made)?"""
    check_sized(g, c)
    if goal.kind == "cover":
        return all(k >= 1 for k in c)
    return satisfies_mask(g, support_mask(c), goal)


def satisfies_mask(g: Graph, covered_mask: int, goal: Goal) -> bool:
    """Support-only goal check on a covered-vertex bitmask (hot path).

    Valid for the domination and subversion goals, whose truth depends
    only on which vertices are covered.
    """
    if goal.kind == "cover":
        raise ValueError("full cover depends on counts, not only on support")
    limit = goal.omega if goal.kind == "subversion" else 0
    if limit == 0:
        out = 0
        m = covered_mask
        while m:
            low = m & -m
            out |= g.closed_masks[low.bit_length() - 1]
            m ^= low
        return out == g.full_mask
    return max_undominated_component(g, covered_mask) <= limit


# ---------------------------------------------------------------------------
# potential functions
# ---------------------------------------------------------------------------

def pairing_number(c: Sequence[int]) -> Fraction:
    """Half-integer count of spare pebble pairs.

    Sum over vertices of max(0, (count-1)/2), kept exact: equivalently
    (size - |support|) / 2.  Its ceiling lower-bounds the number of
    disjoint pairs of pebbles available for moves.
    """
    twice = sum(k - 1 for k in c if k >= 1)
    return Fraction(twice, 2)


def clumping_number(c: Sequence[int], d: int) -> int:
    """Potential for diameter-``d`` graphs, ``d >= 3``.

    Counts pebbles sitting in disjoint clumps of 2^(d-2) on single
    vertices, ignoring one pebble per occupied vertex.  Always divisible
    by 2^(d-2).
    """
    if d < 3:
        raise ValueError(f"clumping number needs diameter >= 3, got {d}")
    clump = 1 << (d - 2)
    total = 0
    for k in c:
        if k > clump:
            total += clump * ((k - 1) // clump)
    return total


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """Replayable move sequence witnessing solvability from ``initial``."""

    initial: Configuration
    moves: tuple[PebblingMove, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "initial", tuple(self.initial))
        object.__setattr__(self, "moves",
                           tuple((int(a), int(b)) for a, b in self.moves))

    def replay(self, g: Graph) -> Configuration:
        """Final configuration after all moves; raises PebblingError on an
        illegal step."""
        c = self.initial
        for mv in self.moves:
            c = apply_move(g, c, mv)
        return c

    def to_json(self) -> str:
        return json.dumps(
            {"initial": list(self.initial),
             "moves": [list(mv) for mv in self.moves]})

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        try:
            data = json.loads(text)
            initial = make_configuration(data["initial"])
            moves = tuple((int(a), int(b)) for a, b in data["moves"])
        except (KeyError, TypeError, ValueError) as exc:
            raise PebblingError(f"bad certificate JSON: {exc}") from exc
        return cls(initial, moves)


def legal_moves(g: Graph, c: Sequence[int]) -> list[PebblingMove]:
    """All currently legal moves, sorted by (source, target)."""
    out = []
    for u in range(g.n):
        if c[u] >= 2:
            for v in g.adj[u]:
                out.append((u, v))
    return out
