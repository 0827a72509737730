"""Exact chromatic number with certificates, greedy bounds, and the
rainbow-tip search that powers the chromatic lower bound.

The exact solver is DSATUR-ordered branch and bound with color-symmetry
breaking (a fresh color may only be the next unused id). The rainbow
search enumerates proper colorings under the same symmetry breaking and
prunes as soon as any tip's neighborhood already shows k colors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import bits
from .graph import Graph, Graft
from .errors import CapError, InvalidArgumentError

__all__ = [
    "Coloring", "ChromaticCertificate", "is_proper",
    "chromatic_number", "bounds_only", "find_non_rainbow_coloring",
    "CHROMA_CAP", "RAINBOW_CAP",
]

CHROMA_CAP = 64
RAINBOW_CAP = 21


@dataclass(frozen=True)
class Coloring:
    """A vertex coloring using color ids 0..count-1, every class used."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        used = set(self.colors)
        if used and used != set(range(len(used))):
            raise InvalidArgumentError(
                "colors must be exactly 0..count-1 with no empty class")

    @property
    def count(self) -> int:
        return max(self.colors) + 1 if self.colors else 0


@dataclass(frozen=True)
class ChromaticCertificate:
    chi: int
    witness: Coloring
    lower_bound_proof: str


def is_proper(g: Graph, coloring) -> bool:
    """Independent validator: no edge joins two same-colored vertices."""
    colors = coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)
    if len(colors) != g.n:
        raise InvalidArgumentError("coloring length must match vertex count")
    return all(colors[u] != colors[v] for u, v in g.edges())


def _greedy_clique(g: Graph) -> list[int]:
    order = sorted(range(g.n), key=lambda v: -g.adj[v].bit_count())
    clique: list[int] = []
    cmask = 0
    for v in order:
        if g.adj[v] & cmask == cmask:
            clique.append(v)
            cmask |= 1 << v
    return clique


def _is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = side[v] ^ 1
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def _dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colors = [-1] * n
    seen = [0] * n  # bitmask of colors on each vertex's neighbors
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0),
                key=lambda u: (seen[u].bit_count(), g.adj[u].bit_count(), -u))
        c = 0
        while seen[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in bits(g.adj[v]):
            seen[u] |= 1 << c
    return colors


def chromatic_number(g: Graph, cap: int = CHROMA_CAP) -> ChromaticCertificate:
    """Exact chi with a witness coloring, by branch and bound."""
    if g.n > cap:
        raise CapError(f"exact solver capped at {cap} vertices, got {g.n}")
    n = g.n
    if n == 0:
        return ChromaticCertificate(0, Coloring(()), "exhaustive-search")
    greedy = _dsatur_greedy(g)
    best = [max(greedy) + 1, list(greedy)]
    lower = max(len(_greedy_clique(g)), 1 if n else 0)
    if not _is_bipartite(g):
        lower = max(lower, 3)

    colors = [-1] * n
    seen = [0] * n
    adj = g.adj

    def down(used: int) -> bool:
        """Extend the partial coloring; True aborts the whole search."""
        if used >= best[0]:
            return False
        uncolored = [u for u in range(n) if colors[u] < 0]
        if not uncolored:
            best[0] = used
            best[1] = list(colors)
            return best[0] <= lower
        v = max(uncolored,
                key=lambda u: (seen[u].bit_count(), adj[u].bit_count(), -u))
        # colors 0..used-1 plus one fresh color, fresh only if it can win
        limit = used + 1 if used + 1 < best[0] else used
        for c in range(limit):
            if seen[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for u in bits(adj[v]):
                if not seen[u] >> c & 1:
                    seen[u] |= 1 << c
                    touched.append(u)
            if down(max(used, c + 1)):
                return True
            colors[v] = -1
            for u in touched:
                seen[u] ^= 1 << c
        return False

    down(0)
    chi = best[0]
    return ChromaticCertificate(chi, Coloring(tuple(best[1])),
                                "exhaustive-search")


def bounds_only(g: Graph) -> tuple[int, int]:
    """Cheap (lower, upper) chromatic bounds for any size of graph."""
    if g.n == 0:
        return 0, 0
    if g.edge_count() == 0:
        return 1, 1
    lower = 2 if _is_bipartite(g) else 3
    upper = max(_dsatur_greedy(g)) + 1
    return lower, max(lower, upper)


def find_non_rainbow_coloring(gf: Graft, k: int, c: int,
                              cap: int = RAINBOW_CAP):
    """A proper coloring with at most c colors where every tip's
    neighborhood shows at most k-1 colors, or None if all proper
    c-colorings make some tip rainbow.

    None with c = k forces chi >= k+1: a tip over k neighbor colors
    plus its own distinct color needs k+1 colors.
    """
    g = gf.graph
    if g.n > cap:
        raise CapError(f"rainbow search capped at {cap} vertices, got {g.n}")
    if k < 1:
        raise InvalidArgumentError("k must be positive")
    if c < 1:
        raise InvalidArgumentError("c must be positive")
    n = g.n
    tips = sorted(gf.tips)
    adj = g.adj
    # watchers[v] = indices of tips whose neighborhood contains v
    watchers: list[list[int]] = [[] for _ in range(n)]
    for i, t in enumerate(tips):
        for v in bits(adj[t]):
            watchers[v].append(i)
    order = sorted(range(n),
                   key=lambda v: (-len(watchers[v]), -adj[v].bit_count(), v))
    colors = [-1] * n
    tip_seen = [0] * len(tips)

    def down(pos: int, used: int):
        if pos == n:
            return list(colors)
        v = order[pos]
        nseen = 0
        for u in bits(adj[v]):
            if colors[u] >= 0:
                nseen |= 1 << colors[u]
        for col in range(min(used + 1, c)):
            if nseen >> col & 1:
                continue
            bad = False
            touched = []
            for i in watchers[v]:
                if not tip_seen[i] >> col & 1:
                    tip_seen[i] |= 1 << col
                    touched.append(i)
                    if tip_seen[i].bit_count() >= k:
                        bad = True
            if not bad:
                colors[v] = col
                got = down(pos + 1, max(used, col + 1))
                if got is not None:
                    return got
                colors[v] = -1
            for i in touched:
                tip_seen[i] ^= 1 << col
        return None

    got = down(0, 0)
    if got is None:
        return None
    # normalize ids to first-use order over vertex ids
    remap: dict[int, int] = {}
    out = []
    for col in got:
        if col not in remap:
            remap[col] = len(remap)
        out.append(remap[col])
    return Coloring(tuple(out))
