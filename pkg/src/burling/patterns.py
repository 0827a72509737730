"""Exact pattern detectors with witnesses, plus the clean-graft certifier.

Detectors: triangle, hole (iterator), wheel, theta, fan, guarded fan,
mountable path. All are exhaustive decision procedures that surrender a
Witness on success; a node budget can bound the search, in which case
running out raises SearchBudgetExceeded (inconclusive) rather than ever
reporting a truncated search as "holds".

The hole/wheel core is a DFS over induced paths grown from an anchor,
with a banned-vertex mask enforcing inducedness: extending past u bans
N(u), so later vertices cannot chord back. Vertices adjacent to the
anchor may only close a cycle, never sit inside the path.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import ClassVar

from .bits import bits
from .graph import Graph, Graft
from .witness import Witness
from .errors import (
    InvalidArgumentError, BudgetRequiredError, SearchBudgetExceeded,
)

__all__ = [
    "SearchBudget", "UNBUDGETED_MAX",
    "find_triangle", "find_hole", "find_wheel", "find_theta",
    "find_fan", "find_guarded_fan", "find_mountable_path",
    "Verdict", "CleanReport", "is_clean",
]

# Largest graph a detector will search without an explicit budget.
UNBUDGETED_MAX = 64

# Detectors count search nodes locally and flush in batches of this size,
# so an exceeded budget may overshoot by at most one batch per thread.
_FLUSH = 1024


class SearchBudget:
    """Node-tick accounting shared by the detectors.

    limit None means unlimited; nodes still accumulates so callers can
    report how much work a verdict took.
    """

    __slots__ = ("limit", "nodes", "_lock")

    def __init__(self, limit: int | None = None):
        if limit is not None and limit <= 0:
            raise InvalidArgumentError("budget limit must be positive")
        self.limit = limit
        self.nodes = 0
        self._lock = threading.Lock()

    def spend(self, k: int) -> None:
        """Add k nodes; raise once past the limit."""
        with self._lock:
            self.nodes += k
            if self.limit is not None and self.nodes > self.limit:
                raise SearchBudgetExceeded(self.nodes)

    def charge(self, k: int) -> None:
        """Add k nodes without enforcing the limit (final flushes)."""
        with self._lock:
            self.nodes += k


def _budget_for(g: Graph, budget) -> SearchBudget:
    if isinstance(budget, SearchBudget):
        return budget
    if budget is None:
        if g.n > UNBUDGETED_MAX:
            raise BudgetRequiredError(
                f"graph has {g.n} > {UNBUDGETED_MAX} vertices; "
                "pass an explicit search budget")
        return SearchBudget(None)
    return SearchBudget(int(budget))


# -- triangles -------------------------------------------------------------

def find_triangle(g: Graph, budget=None):
    """First triangle in lexicographic order, or None."""
    b = _budget_for(g, budget)
    adj = g.adj
    local = 0
    try:
        for u in range(g.n):
            above_u = adj[u] >> (u + 1) << (u + 1)
            for v in bits(above_u):
                local += 1
                if local >= _FLUSH:
                    b.spend(local)
                    local = 0
                common = adj[u] & (adj[v] >> (v + 1) << (v + 1))
                if common:
                    w = (common & -common).bit_length() - 1
                    return Witness("triangle", (u, v, w))
    finally:
        b.charge(local)
    return None


# -- holes and wheels -------------------------------------------------------

def _canon_cycle(cyc: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate/reflect so the lowest vertex leads, lower neighbor second."""
    i = cyc.index(min(cyc))
    rot = cyc[i:] + cyc[:i]
    rev = (rot[0],) + tuple(reversed(rot[1:]))
    return min(rot, rev)


def _hole_scan(g: Graph, s: int, allowed: int, min_len: int,
               budget: SearchBudget, hub_adj: int = 0, min_hits: int = 0,
               stop=None):
    """Yield induced cycles through anchor s as vertex lists.

    Non-anchor vertices are confined to the allowed mask. Each cycle is
    produced once: only the direction whose second vertex is smaller than
    its last survives. With hub_adj/min_hits set, cycles must carry at
    least min_hits vertices of hub_adj and hopeless branches are pruned.
    """
    adj = g.adj
    full = (1 << g.n) - 1
    allowed &= full & ~(1 << s)
    adjs = adj[s]
    base = (full ^ allowed) | (1 << s)
    hits0 = hub_adj >> s & 1
    path = [s]
    stack = []
    for v1 in reversed(list(bits(adjs & allowed))):
        stack.append((v1, base | (1 << v1), hits0 + (hub_adj >> v1 & 1), 1))
    local = 0
    try:
        while stack:
            v, banned, hits, depth = stack.pop()
            local += 1
            if local >= _FLUSH:
                budget.spend(local)
                local = 0
                if stop is not None and stop.is_set():
                    return
            del path[depth:]
            path.append(v)
            if min_hits and hits + (hub_adj & ~banned).bit_count() < min_hits:
                continue
            cands = adj[v] & ~banned
            if depth >= min_len - 2:
                closing = cands & adjs
                if closing:
                    first = path[1]
                    for c in bits(closing):
                        if c < first:
                            continue
                        if min_hits and hits + (hub_adj >> c & 1) < min_hits:
                            continue
                        yield path + [c]
            for c in reversed(list(bits(cands & ~adjs))):
                stack.append((c, banned | (1 << c) | adj[v],
                              hits + (hub_adj >> c & 1), depth + 1))
    finally:
        budget.charge(local)


def find_hole(g: Graph, min_len: int = 4, budget=None):
    """Iterate every hole of length >= min_len, canonically ordered
    (lowest vertex first, its lower cycle-neighbor second), each once.
    """
    if min_len < 4:
        raise InvalidArgumentError("holes have length at least 4")
    b = _budget_for(g, budget)
    return _hole_iter(g, min_len, b)


def _hole_iter(g: Graph, min_len: int, b: SearchBudget):
    full = (1 << g.n) - 1
    for s in range(g.n):
        above = full >> (s + 1) << (s + 1)
        for cyc in _hole_scan(g, s, above, min_len, b):
            yield Witness("hole", tuple(cyc))


def _wheel_at_hub(g: Graph, h: int, k: int, budget: SearchBudget, stop):
    """Smallest-anchor wheel search around one candidate hub."""
    if stop is not None and stop.is_set():
        return None
    full = (1 << g.n) - 1
    nh = g.adj[h]
    for a in bits(nh):
        allowed = full & ~(1 << h) & ~(nh & ((1 << a) - 1))
        for cyc in _hole_scan(g, a, allowed, 4, budget,
                              hub_adj=nh, min_hits=k, stop=stop):
            rim = _canon_cycle(tuple(cyc))
            hit = tuple(v for v in rim if nh >> v & 1)
            return Witness("wheel", rim, center=h, k=len(hit), hits=hit)
    return None


def find_wheel(g: Graph, k: int = 3, budget=None, threads: int = 1):
    """A hole plus an off-hole hub with >= k neighbors on it, or None.

    Hub-first: each vertex of degree >= k is tried as the hub, anchoring
    the rim DFS at its smallest rim neighbor. Single-threaded runs return
    the first witness in that fixed order; threaded runs may return any.
    """
    if k < 3:
        raise InvalidArgumentError("wheels need k >= 3")
    b = _budget_for(g, budget)
    hubs = [h for h in range(g.n) if g.adj[h].bit_count() >= k]
    if threads <= 1:
        for h in hubs:
            w = _wheel_at_hub(g, h, k, b, None)
            if w is not None:
                return w
        return None
    stop = threading.Event()
    with ThreadPoolExecutor(max_workers=threads) as ex:
        futures = [ex.submit(_wheel_at_hub, g, h, k, b, stop) for h in hubs]
        try:
            for f in as_completed(futures):
                w = f.result()
                if w is not None:
                    return w
            return None
        finally:
            stop.set()


# -- thetas -----------------------------------------------------------------

def _ab_paths(g: Graph, a: int, t: int, allowed: int, budget: SearchBudget):
    """Yield induced a-t paths (length >= 2) with interiors in allowed."""
    adj = g.adj
    full = (1 << g.n) - 1
    allowed &= full & ~(1 << a) & ~(1 << t)
    base = full ^ allowed
    tbit = 1 << t
    path = [a]
    stack = []
    for v1 in reversed(list(bits(adj[a] & allowed))):
        stack.append((v1, base | (1 << v1) | adj[a], 1))
    local = 0
    try:
        while stack:
            v, banned, depth = stack.pop()
            local += 1
            if local >= _FLUSH:
                budget.spend(local)
                local = 0
            del path[depth:]
            path.append(v)
            if adj[v] & tbit:
                # a neighbor of t must be the last interior vertex
                yield path + [t]
                continue
            for c in reversed(list(bits(adj[v] & ~banned))):
                stack.append((c, banned | (1 << c) | adj[v], depth + 1))
    finally:
        budget.charge(local)


def find_theta(g: Graph, budget=None):
    """Two non-adjacent branch vertices linked by three induced paths of
    length >= 2 with disjoint, pairwise non-adjacent interiors; or None.
    """
    b = _budget_for(g, budget)
    full = (1 << g.n) - 1
    adj = g.adj
    for x in range(g.n):
        if adj[x].bit_count() < 3:
            continue
        for y in range(x + 1, g.n):
            if adj[y].bit_count() < 3 or adj[x] >> y & 1:
                continue
            for p1 in _ab_paths(g, x, y, full, b):
                block1 = 0
                for v in p1[1:-1]:
                    block1 |= (1 << v) | adj[v]
                for p2 in _ab_paths(g, x, y, full & ~block1, b):
                    block2 = block1
                    for v in p2[1:-1]:
                        block2 |= (1 << v) | adj[v]
                    for p3 in _ab_paths(g, x, y, full & ~block2, b):
                        return Witness(
                            "theta", (x, y),
                            paths=(tuple(p1), tuple(p2), tuple(p3)))
    return None


# -- fans, guarded fans, mountable paths -------------------------------------

def _fan_scan(g: Graph, pivot: int, k: int, seed_mask: int, end_mask: int,
              budget: SearchBudget, stop=None):
    """DFS for an induced path avoiding pivot, starting in seed_mask,
    ending in end_mask, with >= k pivot neighbors on it.
    """
    adj = g.adj
    nf = adj[pivot]
    full = (1 << g.n) - 1
    allowed = full & ~(1 << pivot)
    base = full ^ allowed
    path = []
    stack = []
    for v0 in reversed(list(bits(seed_mask & allowed))):
        stack.append((v0, base | (1 << v0), nf >> v0 & 1, 0))
    local = 0
    try:
        while stack:
            v, banned, hits, depth = stack.pop()
            local += 1
            if local >= _FLUSH:
                budget.spend(local)
                local = 0
                if stop is not None and stop.is_set():
                    return None
            del path[depth:]
            path.append(v)
            if hits + (nf & ~banned).bit_count() < k:
                continue
            if hits >= k and end_mask >> v & 1:
                return list(path)
            for c in reversed(list(bits(adj[v] & ~banned))):
                stack.append((c, banned | (1 << c) | adj[v],
                              hits + (nf >> c & 1), depth + 1))
    finally:
        budget.charge(local)
    return None


def _fan_witness(g: Graph, kind: str, pivot: int, path: list[int]) -> Witness:
    nf = g.adj[pivot]
    hit = tuple(v for v in path if nf >> v & 1)
    return Witness(kind, tuple(path), center=pivot, k=len(hit), hits=hit)


def find_fan(g: Graph, k: int = 3, budget=None):
    """An induced path plus a pivot with >= k neighbors on it, or None."""
    if k < 3:
        raise InvalidArgumentError("fans need k >= 3")
    b = _budget_for(g, budget)
    full = (1 << g.n) - 1
    for f in range(g.n):
        if g.adj[f].bit_count() < k:
            continue
        path = _fan_scan(g, f, k, full, full, b)
        if path is not None:
            return _fan_witness(g, "fan", f, path)
    return None


def find_guarded_fan(gf: Graft, budget=None):
    """A fan whose path runs tip-to-tip, or None."""
    g = gf.graph
    b = _budget_for(g, budget)
    tm = gf.tip_mask
    for f in range(g.n):
        if g.adj[f].bit_count() < 3:
            continue
        path = _fan_scan(g, f, 3, tm, tm, b)
        if path is not None:
            return _fan_witness(g, "guarded-fan", f, path)
    return None


def find_mountable_path(gf: Graft, budget=None):
    """An induced path through >= 3 tips, or None.

    By minimality only paths with tip endpoints and exactly three tips
    need searching: any longer offender contains one.
    """
    g = gf.graph
    b = _budget_for(g, budget)
    adj = g.adj
    tm = gf.tip_mask
    if tm.bit_count() < 3:
        b.charge(1)
        return None
    path = []
    stack = []
    for v0 in reversed(list(bits(tm))):
        stack.append((v0, 1 << v0, 1, 0))
    local = 0
    try:
        while stack:
            v, banned, tc, depth = stack.pop()
            local += 1
            if local >= _FLUSH:
                b.spend(local)
                local = 0
            del path[depth:]
            path.append(v)
            if tc + (tm & ~banned).bit_count() < 3:
                continue
            cands = adj[v] & ~banned
            if tc == 2:
                closing = cands & tm
                if closing:
                    c = (closing & -closing).bit_length() - 1
                    out = path + [c]
                    hit = tuple(u for u in out if tm >> u & 1)
                    return Witness("mountable-path", tuple(out), hits=hit)
                ext = cands & ~tm
            else:
                ext = cands
            for c in reversed(list(bits(ext))):
                stack.append((c, banned | (1 << c) | adj[v],
                              tc + (tm >> c & 1), depth + 1))
    finally:
        b.charge(local)
    return None


# -- the clean certifier ------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    """One clean condition: holds, or fails with a witness."""

    holds: bool
    witness: Witness | None
    nodes: int


@dataclass(frozen=True)
class CleanReport:
    """The five clean-graft conditions, each with its own verdict."""

    triangle_free: Verdict
    tips_stable: Verdict
    wheel_free: Verdict
    no_guarded_fan: Verdict
    no_mountable_path: Verdict

    LABELS: ClassVar[tuple[tuple[str, str], ...]] = (
        ("(1) triangle-free", "triangle_free"),
        ("(2) tips-stable", "tips_stable"),
        ("(3) wheel-free", "wheel_free"),
        ("(4) no-guarded-fan", "no_guarded_fan"),
        ("(5) no-mountable-path", "no_mountable_path"),
    )

    def items(self) -> list[tuple[str, Verdict]]:
        return [(label, getattr(self, attr)) for label, attr in self.LABELS]

    @property
    def all_hold(self) -> bool:
        return all(v.holds for _, v in self.items())

    @property
    def nodes(self) -> int:
        return sum(v.nodes for _, v in self.items())


def _stable_verdict(gf: Graft) -> Verdict:
    g = gf.graph
    tm = gf.tip_mask
    checked = 0
    for t in sorted(gf.tips):
        checked += 1
        m = g.adj[t] & tm
        if m:
            u = (m & -m).bit_length() - 1
            w = Witness("stable-violation", (min(t, u), max(t, u)))
            return Verdict(False, w, checked)
    return Verdict(True, None, checked)


def is_clean(gf: Graft, budget=None, threads: int = 1) -> CleanReport:
    """Certify the five clean conditions, each exhaustively (or raise
    SearchBudgetExceeded; a truncated search never reports holds).

    budget: None (unlimited, graphs <= 64 vertices only), an int limit
    applied to each condition separately, or a shared SearchBudget.
    """
    g = gf.graph

    def run(fn, *args):
        b = _budget_for(g, budget)
        before = b.nodes
        w = fn(*args, budget=b)
        return Verdict(w is None, w, b.nodes - before)

    v1 = run(find_triangle, g)
    v2 = _stable_verdict(gf)
    v3 = run(lambda *, budget: find_wheel(g, 3, budget, threads))
    v4 = run(find_guarded_fan, gf)
    v5 = run(find_mountable_path, gf)
    return CleanReport(v1, v2, v3, v4, v5)
