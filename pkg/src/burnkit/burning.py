"""The burning process: round-by-round simulation, the closed-form burn-round
formula, and exact (modified) burning-number search.

A schedule of length k defines exactly k rounds. In round i the i-th source is
burned (a no-op if already burned) and fire spreads from every vertex burned
in round i-1 to its unburned neighbors. A modified schedule additionally burns
a preburn set U in round 1.

The exact solver is iterative deepening on k. Completeness of a length-k
schedule is equivalent, by the closed form burn_round(v) = min_i(i + d(v, x_i)),
to the distance balls B(x_i, k-i) covering all vertices; the search branches on
sources in ascending id order and prunes a prefix when the uncovered vertices
outnumber the best-case coverage of the remaining ball radii. The returned
witness is therefore the lexicographically smallest optimal schedule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import Disconnected, InvalidSource, TooLarge
from .graph import Graph

DEFAULT_EXACT_LIMIT = 64


@dataclass(frozen=True)
class BurningSchedule:
    """Ordered sources (x_1, ..., x_k); repeats are no-ops."""

    sources: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sources) < 1:
            raise InvalidSource("schedule needs at least one source")

    def __len__(self) -> int:
        return len(self.sources)

    def to_json_dict(self) -> dict:
        return {"sources": list(self.sources)}


@dataclass(frozen=True)
class ModifiedSchedule:
    """Preburn set U (burned in round 1) plus ordered sources."""

    preburn: tuple[int, ...]
    sources: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.sources) < 1:
            raise InvalidSource("schedule needs at least one source")
        object.__setattr__(self, "preburn", tuple(sorted(set(self.preburn))))

    def __len__(self) -> int:
        return len(self.sources)

    def to_json_dict(self) -> dict:
        return {"preburn": list(self.preburn), "sources": list(self.sources)}


def schedule_from_json_dict(d: dict) -> BurningSchedule | ModifiedSchedule:
    sources = tuple(d["sources"])
    preburn = tuple(d.get("preburn", ()))
    if preburn:
        return ModifiedSchedule(preburn=preburn, sources=sources)
    return BurningSchedule(sources=sources)


@dataclass(frozen=True)
class BurnMap:
    """Per-vertex burn round (None = unburned after the last round)."""

    rounds: tuple[int | None, ...]

    @property
    def completion(self) -> int | None:
        """Max burn round, or None if some vertex stayed unburned."""
        if any(r is None for r in self.rounds):
            return None
        return max(self.rounds) if self.rounds else 0

    def to_json_dict(self) -> dict:
        return {
            "rounds": [0 if r is None else r for r in self.rounds],
            "completion": 0 if self.completion is None else self.completion,
        }


def is_complete(bm: BurnMap) -> bool:
    return all(r is not None for r in bm.rounds)


def _check_ids(g: Graph, ids) -> None:
    for v in ids:
        if not (0 <= v < g.n):
            raise InvalidSource(f"vertex id {v} out of range for n={g.n}")


def simulate(g: Graph, s: BurningSchedule) -> BurnMap:
    """Run the burning process for exactly len(s) rounds."""
    return simulate_modified(g, ModifiedSchedule(preburn=(), sources=s.sources))


def simulate_modified(g: Graph, m: ModifiedSchedule) -> BurnMap:
    """Run the modified process: preburn set plus first source in round 1."""
    _check_ids(g, m.preburn)
    _check_ids(g, m.sources)
    rounds: list[int | None] = [None] * g.n
    frontier: list[int] = []
    for r, src in enumerate(m.sources, start=1):
        new: list[int] = []
        for u in frontier:
            for w in g.adj[u]:
                if rounds[w] is None:
                    rounds[w] = r
                    new.append(w)
        if r == 1:
            for v in m.preburn:
                if rounds[v] is None:
                    rounds[v] = 1
                    new.append(v)
        if rounds[src] is None:
            rounds[src] = r
            new.append(src)
        frontier = new
    return BurnMap(rounds=tuple(rounds))


def closed_form_rounds(g: Graph, m: ModifiedSchedule) -> BurnMap:
    """burn_round(v) = min_i(i + d(v, x_i)), plus 1 + d(v, u) over preburn u,
    capped at the schedule length. Independent oracle for simulate."""
    k = len(m.sources)
    best: list[float] = [math.inf] * g.n
    for i, src in enumerate(m.sources, start=1):
        for v, d in enumerate(g.distances_from(src)):
            if d is not None and i + d < best[v]:
                best[v] = i + d
    for u in m.preburn:
        for v, d in enumerate(g.distances_from(u)):
            if d is not None and 1 + d < best[v]:
                best[v] = 1 + d
    return BurnMap(rounds=tuple(int(b) if b <= k else None for b in best))


def _balls_by_radius(g: Graph, max_radius: int) -> list[list[int]]:
    """balls[r][v] = bitmask of vertices within distance r of v."""
    balls = [[1 << v for v in range(g.n)]]
    for _ in range(max_radius):
        prev = balls[-1]
        layer = []
        for v in range(g.n):
            mask = prev[v]
            for w in g.adj[v]:
                mask |= prev[w]
            layer.append(mask)
        balls.append(layer)
    return balls


def _search_depth(
    g: Graph, k: int, initial: int, balls: list[list[int]]
) -> tuple[int, ...] | None:
    """First (lexicographically smallest) source list of length k whose balls,
    together with the initial coverage, cover all vertices. None if none."""
    full = (1 << g.n) - 1
    maxcov = [max(mask.bit_count() for mask in layer) for layer in balls]
    # remaining_cap[i] = best-case coverage of positions i+1..k
    remaining_cap = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        remaining_cap[i] = remaining_cap[i + 1] + maxcov[k - 1 - i]
    prefix: list[int] = []

    def dfs(pos: int, covered: int) -> bool:
        if covered == full:
            prefix.extend([0] * (k - pos))
            return True
        if pos == k:
            return False
        if (full ^ covered).bit_count() > remaining_cap[pos]:
            return False
        radius = k - 1 - pos
        layer = balls[radius]
        for v in range(g.n):
            prefix.append(v)
            if dfs(pos + 1, covered | layer[v]):
                return True
            prefix.pop()
        return False

    if dfs(0, initial):
        return tuple(prefix)
    return None


def burning_number_exact(
    g: Graph, limit: int = DEFAULT_EXACT_LIMIT
) -> tuple[int, BurningSchedule]:
    """Minimum rounds to burn g, with the lexicographically smallest witness."""
    k, m = _modified_exact(g, (), limit)
    return k, BurningSchedule(sources=m.sources)


def modified_burning_number_exact(
    g: Graph, preburn, limit: int = DEFAULT_EXACT_LIMIT
) -> tuple[int, ModifiedSchedule]:
    """Minimum rounds for the modified process with the given preburn set."""
    u = tuple(sorted(set(preburn)))
    _check_ids(g, u)
    return _modified_exact(g, u, limit)


def _modified_exact(
    g: Graph, preburn: tuple[int, ...], limit: int
) -> tuple[int, ModifiedSchedule]:
    if g.n > limit:
        raise TooLarge(f"n={g.n} exceeds exact-solver limit {limit}")
    if not g.is_connected():
        raise Disconnected("exact solver requires a connected graph")
    balls = _balls_by_radius(g, g.n)
    for k in range(1, g.n + 1):
        initial = 0
        for v in preburn:
            initial |= balls[k - 1][v]
        witness = _search_depth(g, k, initial, balls)
        if witness is not None:
            found = ModifiedSchedule(preburn=preburn, sources=witness)
            bm = simulate_modified(g, found)
            assert is_complete(bm) and bm.completion <= k
            return k, found
    raise AssertionError("k = n always burns a connected graph")
