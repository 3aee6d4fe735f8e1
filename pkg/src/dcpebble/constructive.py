"""Constructive solvers with certificate output.

Each solver realizes one of the structural arguments behind the diameter
bounds as an executable algorithm: it takes a configuration at or above the
relevant size threshold and emits an explicit move sequence whose terminal
support meets the goal.  Every "choose some vertex" step is resolved with
lowest-index tie-breaking so certificates are reproducible.

The diameter-d solver carries its full bookkeeping state and can assert the
eight running invariants that make its accounting sound; a violation is an
implementation bug and is surfaced loudly, never papered over.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import (
    DisconnectedGraphError,
    Graph,
    induced_subgraph,
    support_mask,
)
from .pebbling import (
    Certificate,
    Configuration,
    Goal,
    PebblingMove,
    check_sized,
    clumping_number,
    satisfies,
    satisfies_mask,
)


class PreconditionError(ValueError):
    """A solver was called outside its guaranteed regime."""


class InvariantViolation(RuntimeError):
    """The solver's internal accounting broke: an implementation bug."""


# ---------------------------------------------------------------------------
# cover partition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoverPartition:
    """Three-way split of the vertices relative to a configuration.

    ``covered`` holds at least one pebble; ``fringe`` is uncovered but
    adjacent to a covered vertex; ``remote`` is everything else.  The
    remote set is exactly the set of undominated vertices.
    """

    covered: frozenset[int]
    fringe: frozenset[int]
    remote: frozenset[int]


def partition_covered(g: Graph, c: Sequence[int]) -> CoverPartition:
    check_sized(g, c)
    covered = frozenset(v for v in range(g.n) if c[v] > 0)
    fringe = frozenset(v for v in range(g.n)
                       if c[v] == 0 and any(w in covered for w in g.adj[v]))
    remote = frozenset(range(g.n)) - covered - fringe
    return CoverPartition(covered, fringe, remote)


# ---------------------------------------------------------------------------
# certificate verification (independent of all solvers)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failed_step: int | None = None
    reason: str = "ok"
    final: Configuration | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(g: Graph, cert: Certificate,
                       goal: Goal) -> VerificationResult:
    """Replay a certificate move by move and check the terminal goal.

    Never raises for an invalid certificate: an illegal move yields a
    failed result carrying the offending step index.
    """
    check_sized(g, cert.initial)
    counts = list(cert.initial)
    if any(k < 0 for k in counts):
        return VerificationResult(False, None, "negative-count")
    for i, (u, v) in enumerate(cert.moves):
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.is_edge(u, v):
            return VerificationResult(False, i, "illegal-move")
        if counts[u] < 2:
            return VerificationResult(False, i, "illegal-move")
        counts[u] -= 2
        counts[v] += 1
    final = tuple(counts)
    if not satisfies(g, final, goal):
        return VerificationResult(False, None, "goal-not-met", final)
    return VerificationResult(True, None, "ok", final)


# ---------------------------------------------------------------------------
# diameter <= 2: direct domination
# ---------------------------------------------------------------------------

def _is_dominated(g: Graph, counts: list[int], v: int) -> bool:
    return counts[v] > 0 or any(counts[w] > 0 for w in g.adj[v])


def _move(g: Graph, counts: list[int], moves: list[PebblingMove],
          src: int, dst: int) -> None:
    if counts[src] < 2 or not g.is_edge(src, dst):
        raise InvariantViolation(f"illegal internal move {src}->{dst}")
    counts[src] -= 2
    counts[dst] += 1
    moves.append((src, dst))


def _dominate_from_pair(g: Graph, counts: list[int], moves: list[PebblingMove],
                        z: int, sources: frozenset[int]) -> None:
    """Spend one pair from the nearest eligible source so that z becomes
    dominated: onto z itself at distance 1, onto a shared neighbor at
    distance 2."""
    best = None
    for w in sorted(sources):
        if counts[w] >= 2:
            d = g.dist[z][w]
            if best is None or d < best[0]:
                best = (d, w)
    if best is None:
        raise InvariantViolation(
            f"no pair left to dominate vertex {z}; accounting is wrong")
    d, w = best
    if d == 1:
        _move(g, counts, moves, w, z)
        return
    if d != 2:
        raise InvariantViolation(
            f"source {w} at distance {d} from {z}; expected at most 2")
    mids = sorted(g.adj_sets[w] & g.adj_sets[z])
    if not mids:
        raise InvariantViolation(f"no middle vertex between {w} and {z}")
    _move(g, counts, moves, w, mids[0])


def _dominate_core(g: Graph, counts: list[int]) -> list[PebblingMove]:
    """Shared engine of the diameter-2 bound: drive ``counts`` to a
    configuration whose support dominates ``g``.

    Only ever measures distances from originally covered vertices, which
    is what lets the subversion solver reuse it on an induced subgraph
    whose overall diameter may exceed 2.
    """
    part = partition_covered(g, counts)
    moves: list[PebblingMove] = []
    if not part.remote:
        return moves
    covered = part.covered
    a, b = len(part.fringe), len(part.remote)

    if a <= b:
        # Cover fringe vertices one pair each from adjacent sources while
        # pairs are within reach.
        for v in sorted(part.fringe):
            if counts[v] > 0:
                continue
            srcs = [w for w in g.adj[v] if w in covered and counts[w] >= 2]
            if srcs:
                _move(g, counts, moves, min(srcs), v)
        # Leftover fringe vertices sit at distance 2 from every remaining
        # pair; one pair each dominates them.
        for z in sorted(part.fringe):
            if counts[z] == 0 and not _is_dominated(g, counts, z):
                _dominate_from_pair(g, counts, moves, z, covered)
    else:
        # Dominate each remote vertex by covering a vertex between it and
        # a source, spending pairs from 3-or-more stacks first so sources
        # stay covered as long as possible.
        for v in sorted(part.remote):
            if _is_dominated(g, counts, v):
                continue
            src = None
            for w in sorted(covered):
                if counts[w] >= 3:
                    src = w
                    break
            if src is None:
                for w in sorted(covered):
                    if counts[w] >= 2:
                        src = w
                        break
            if src is None:
                raise InvariantViolation(
                    f"no pair left for remote vertex {v}; accounting is wrong")
            mids = sorted(g.adj_sets[src] & g.adj_sets[v])
            if not mids:
                raise InvariantViolation(
                    f"no vertex between source {src} and remote {v}")
            _move(g, counts, moves, src, mids[0])
        # Any fringe vertex whose source went dark still has a pair owed.
        for z in sorted(part.fringe):
            if counts[z] == 0 and not _is_dominated(g, counts, z):
                _dominate_from_pair(g, counts, moves, z, covered)

    if not satisfies_mask(g, support_mask(counts), Goal("domination")):
        raise InvariantViolation("terminal support fails to dominate")
    return moves


def solve_diameter2(g: Graph, c: Sequence[int]) -> Certificate:
    """Dominating certificate for any configuration of at least n-1 pebbles
    on a graph of diameter at most 2 (order at least 2).

    Splits on whether the fringe or the remote side is larger and spends
    the guaranteed spare pairs accordingly; empty certificate when the
    input already dominates.
    """
    check_sized(g, c)
    if g.n < 2:
        raise PreconditionError("needs at least 2 vertices")
    if g.diameter > 2:
        raise PreconditionError(
            f"graph has diameter {g.diameter}, needs at most 2")
    size = sum(c)
    if size < g.n - 1:
        raise PreconditionError(
            f"needs at least n-1 = {g.n - 1} pebbles, got {size}")
    counts = list(c)
    moves = _dominate_core(g, counts)
    return Certificate(tuple(c), tuple(moves))


def spread_diameter2(g: Graph, c: Sequence[int]) -> Certificate:
    """Greedy spreading certificate for dense diameter-2 graphs.

    While some vertex holds at least three pebbles and has an unoccupied
    neighbor, moves one pair there (lowest-index source, then lowest-index
    target).  With minimum degree above ceil((n-1)/2) and at least
    floor((4n-2m-3)/3) pebbles the terminal support dominates.
    """
    check_sized(g, c)
    if g.diameter > 2:
        raise PreconditionError(
            f"graph has diameter {g.diameter}, needs at most 2")
    n = g.n
    m = g.min_degree()
    if not m > -(-(n - 1) // 2):
        raise PreconditionError(
            f"minimum degree {m} not above ceil((n-1)/2) = {-(-(n - 1) // 2)}")
    threshold = (4 * n - 2 * m - 3) // 3
    size = sum(c)
    if size < threshold:
        raise PreconditionError(
            f"needs at least floor((4n-2m-3)/3) = {threshold} pebbles, got {size}")
    counts = list(c)
    moves: list[PebblingMove] = []
    while True:
        step = None
        for u in range(n):
            if counts[u] >= 3:
                for v in g.adj[u]:
                    if counts[v] == 0:
                        step = (u, v)
                        break
                if step:
                    break
        if step is None:
            break
        _move(g, counts, moves, *step)
    if not satisfies_mask(g, support_mask(counts), Goal("domination")):
        raise InvariantViolation("spread terminated without dominating")
    return Certificate(tuple(c), tuple(moves))


# ---------------------------------------------------------------------------
# diameter d >= 3
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SolverState:
    """Snapshot of the diameter-d solver after ``step`` iterations.

    ``covered`` holds the pebbled vertices, ``heavy`` those with at least
    2^(d-2)+1 pebbles (enough to ship a pebble anywhere within distance
    d-2 and stay covered), ``pending`` the uncovered vertices still under
    consideration and ``retired`` the uncovered vertices already dominated
    and parked at full distance d from every heavy vertex.
    """

    counts: Configuration
    covered: frozenset[int]
    heavy: frozenset[int]
    pending: frozenset[int]
    retired: frozenset[int]
    step: int


def check_solver_state(g: Graph, state: SolverState, initial: Configuration,
                       moves: Sequence[PebblingMove],
                       initial_pending: int) -> None:
    """Assert the eight running invariants of the diameter-d solver.

    Raises :class:`InvariantViolation` naming every failed condition:

    1. pending and retired vertices hold no pebbles, covered ones do;
    2. clumping potential covers the pending deficit:
       chi(counts) >= 2^(d-2) * (|pending| - 1);
    3. |pending| <= initial_pending - step;
    4. heavy is exactly the set of vertices with >= 2^(d-2)+1 pebbles;
    5. retired vertices sit at distance d from every heavy vertex, and
       some vertex realizes distance d from the retired set;
    6. covered, pending, retired partition the vertex set;
    7. every retired vertex is dominated;
    8. the move log replays from the initial configuration to counts.
    """
    d = g.diameter
    clump = 1 << (d - 2)
    counts = state.counts
    failed: list[str] = []

    if not all(counts[v] == 0 for v in state.pending | state.retired) or \
            not all(counts[v] > 0 for v in state.covered):
        failed.append("1 (pebble placement)")
    if clumping_number(counts, d) < clump * (len(state.pending) - 1):
        failed.append("2 (clumping potential)")
    if len(state.pending) > initial_pending - state.step:
        failed.append("3 (pending shrinks each step)")
    if state.heavy != frozenset(v for v in range(g.n)
                                if counts[v] >= clump + 1):
        failed.append("4 (heavy set definition)")
    if state.retired:
        if state.heavy:
            dist_hr = min(g.dist[u][v]
                          for u in state.heavy for v in state.retired)
            if dist_hr != d:
                failed.append("5 (heavy-retired distance)")
        if max(min(g.dist[v][w] for w in state.retired)
               for v in range(g.n)) != d:
            failed.append("5 (retired eccentricity)")
    sets = (state.covered, state.pending, state.retired)
    union = state.covered | state.pending | state.retired
    if union != frozenset(range(g.n)) or \
            sum(len(s) for s in sets) != g.n:
        failed.append("6 (partition)")
    cov_mask = support_mask(counts)
    for v in state.retired:
        if not (cov_mask >> v & 1 or
                any(cov_mask >> w & 1 for w in g.adj[v])):
            failed.append("7 (retired dominated)")
            break
    replay = list(initial)
    legal = True
    for u, v in moves:
        if replay[u] < 2 or not g.is_edge(u, v):
            legal = False
            break
        replay[u] -= 2
        replay[v] += 1
    if not legal or tuple(replay) != counts:
        failed.append("8 (reachability by replay)")

    if failed:
        raise InvariantViolation(
            f"solver state invalid at step {state.step}: "
            + "; ".join(failed))


def _lex_shortest_path(g: Graph, src: int, dst: int) -> list[int]:
    """Lexicographically smallest shortest path, built greedily: from each
    vertex step to its lowest-index neighbor closer to the target."""
    path = [src]
    cur = src
    while cur != dst:
        r = g.dist[cur][dst]
        nxt = min(w for w in g.adj[cur] if g.dist[w][dst] == r - 1)
        path.append(nxt)
        cur = nxt
    return path


def _cascade(g: Graph, counts: list[int], moves: list[PebblingMove],
             path: list[int]) -> None:
    """Ship 2^(len(path)-1) pebbles from the head of ``path``, delivering
    exactly one at the tail.  Intermediate vertices end with no net change."""
    hops = len(path) - 1
    for i in range(hops):
        for _ in range(1 << (hops - 1 - i)):
            _move(g, counts, moves, path[i], path[i + 1])


def solve_diameter_d(g: Graph, c: Sequence[int],
                     check_invariants: bool = True) -> Certificate:
    """Dominating certificate for a configuration of at least
    2^(d-2)*(n-2)+1 pebbles on a graph of diameter d >= 3.

    Repeatedly spends one clump of 2^(d-2) pebbles from a heavy vertex:
    directly onto a pending vertex within distance d-2 when one exists,
    otherwise relayed to distance d-2 along a full-length path and then
    split onto a neighbor of the far pending vertex, which is thereby
    dominated and retired.  With ``check_invariants`` the eight conditions
    of :func:`check_solver_state` are asserted after every iteration.
    """
    check_sized(g, c)
    d = g.diameter
    if d < 3:
        raise PreconditionError(f"graph has diameter {d}, needs at least 3")
    clump = 1 << (d - 2)
    need = clump * (g.n - 2) + 1
    size = sum(c)
    if size < need:
        raise PreconditionError(
            f"needs at least 2^(d-2)*(n-2)+1 = {need} pebbles, got {size}")

    initial = tuple(int(k) for k in c)
    counts = list(initial)
    moves: list[PebblingMove] = []
    covered = set(v for v in range(g.n) if counts[v] > 0)
    pending = set(range(g.n)) - covered
    retired: set[int] = set()
    initial_pending = len(pending)
    step = 0

    def heavy_set() -> set[int]:
        return set(v for v in range(g.n) if counts[v] >= clump + 1)

    heavy = heavy_set()

    def snapshot() -> SolverState:
        return SolverState(tuple(counts), frozenset(covered),
                           frozenset(heavy), frozenset(pending),
                           frozenset(retired), step)

    if check_invariants:
        check_solver_state(g, snapshot(), initial, moves, initial_pending)

    while True:
        undominated = [w for w in sorted(pending)
                       if not _is_dominated(g, counts, w)]
        if not undominated:
            break
        step += 1
        if step > initial_pending:
            raise InvariantViolation("solver failed to terminate in time")
        if len(pending) < 2:
            raise InvariantViolation(
                "a single pending vertex should already be dominated")
        if not heavy:
            raise InvariantViolation("no heavy vertex despite pending work")

        near = None
        for vp in sorted(heavy):
            for wp in sorted(pending):
                if g.dist[vp][wp] <= d - 2:
                    near = (vp, wp)
                    break
            if near:
                break

        if near is not None:
            vp, wp = near
            _cascade(g, counts, moves, _lex_shortest_path(g, vp, wp))
            pending.discard(wp)
            covered.add(wp)
        else:
            wp = undominated[0]
            if min(g.dist[vp][wp] for vp in heavy) != d:
                raise InvariantViolation(
                    f"undominated vertex {wp} not at full distance from heavy set")
            vp = min(heavy)
            path = _lex_shortest_path(g, vp, wp)
            vstar, wside = path[d - 2], path[d - 1]
            if counts[vstar] <= 0 or vstar in heavy:
                raise InvariantViolation(
                    f"relay vertex {vstar} must be covered but not heavy")
            if counts[wside] != 0 or wside not in pending:
                raise InvariantViolation(
                    f"split target {wside} must be uncovered and pending")
            _cascade(g, counts, moves, path[:d - 1])
            _move(g, counts, moves, vstar, wside)
            retired.add(wp)
            pending.discard(wp)
            covered.add(wside)
            pending.discard(wside)
            if counts[vstar] == 0:
                covered.discard(vstar)
                pending.add(vstar)

        heavy = heavy_set()
        if check_invariants:
            check_solver_state(g, snapshot(), initial, moves, initial_pending)

    if not satisfies_mask(g, support_mask(counts), Goal("domination")):
        raise InvariantViolation("terminal support fails to dominate")
    return Certificate(initial, tuple(moves))


# ---------------------------------------------------------------------------
# subversion on diameter <= 2
# ---------------------------------------------------------------------------

def solve_subversion_diameter2(g: Graph, c: Sequence[int],
                               omega: int) -> Certificate:
    """Certificate leaving at most ``omega`` undominated vertices in total
    (so no undominated component exceeds ``omega``) from any configuration
    of at least n-1-omega pebbles on a graph of diameter at most 2.

    If at most omega vertices are undominated already, no moves are
    needed.  Otherwise omega of the undominated (remote) vertices (the
    lowest-indexed ones) are set aside, and the diameter-2 domination
    engine runs on the remaining induced subgraph, where it has the n'-1
    pebbles it needs; its moves replayed on the full graph leave only the
    set-aside vertices possibly undominated.
    """
    check_sized(g, c)
    if g.diameter > 2:
        raise PreconditionError(
            f"graph has diameter {g.diameter}, needs at most 2")
    if omega < 1:
        raise PreconditionError("omega must be at least 1")
    if omega > g.n - 2:
        raise PreconditionError(
            f"omega={omega} leaves fewer than one pebble on {g.n} vertices; "
            "the bound n-1-omega is only meaningful for omega <= n-2")
    size = sum(c)
    if size < g.n - 1 - omega:
        raise PreconditionError(
            f"needs at least n-1-omega = {g.n - 1 - omega} pebbles, got {size}")

    initial = tuple(int(k) for k in c)
    part = partition_covered(g, initial)
    if len(part.remote) <= omega:
        return Certificate(initial, ())

    dropped = sorted(part.remote)[:omega]
    keep = sorted(set(range(g.n)) - set(dropped))
    try:
        sub, old_label = induced_subgraph(g, keep)
    except DisconnectedGraphError as exc:
        raise InvariantViolation(
            "removing remote vertices disconnected the graph") from exc
    sub_counts = [initial[v] for v in old_label]
    sub_moves = _dominate_core(sub, sub_counts)
    moves = tuple((old_label[u], old_label[v]) for u, v in sub_moves)

    cert = Certificate(initial, moves)
    final = cert.replay(g)
    dominated = 0
    mask = support_mask(final)
    for v in range(g.n):
        if mask >> v & 1 or any(mask >> w & 1 for w in g.adj[v]):
            dominated += 1
    if g.n - dominated > omega:
        raise InvariantViolation(
            f"{g.n - dominated} vertices left undominated, allowed {omega}")
    return cert
