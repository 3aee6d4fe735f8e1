#!/usr/bin/env python3
"""Regenerate src/dcpebble/data/connected_{n}.g6 for n = 1..6.

Enumerates every labeled graph on n vertices, keeps the connected ones,
and writes one representative per isomorphism class: the graph whose
edge bitmask is minimal over all vertex permutations.  Brute force is fine
at this scale (2^15 masks and 720 permutations at n = 6).

Lines are ordered by (edge count, canonical mask).  Expected class counts:
1, 1, 2, 6, 21, 112.
"""

from __future__ import annotations

import sys
from itertools import combinations, permutations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from dcpebble.graphs import build_graph, emit_graph6  # noqa: E402

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def connected_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> bool:
    adj = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def canonical_masks(n: int) -> list[int]:
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    remaps = []
    for perm in permutations(range(n)):
        remap = [0] * len(pairs)
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            remap[i] = index[(a, b) if a < b else (b, a)]
        remaps.append(remap)

    out = []
    for mask in range(1 << len(pairs)):
        if not connected_mask(n, pairs, mask):
            continue
        is_canon = True
        for remap in remaps:
            other = 0
            m = mask
            while m:
                low = m & -m
                other |= 1 << remap[low.bit_length() - 1]
                m ^= low
            if other < mask:
                is_canon = False
                break
        if is_canon:
            out.append(mask)
    out.sort(key=lambda m: (m.bit_count(), m))
    return out


def main() -> None:
    data_dir = Path(__file__).resolve().parent.parent / "src" / "dcpebble" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    for n in range(1, 7):
        pairs = list(combinations(range(n), 2))
        masks = canonical_masks(n)
        assert len(masks) == EXPECTED[n], (n, len(masks))
        lines = []
        for mask in masks:
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            lines.append(emit_graph6(build_graph(n, edges)))
        (data_dir / f"connected_{n}.g6").write_text("\n".join(lines) + "\n")
        print(f"n={n}: {len(masks)} graphs")


if __name__ == "__main__":
    main()
