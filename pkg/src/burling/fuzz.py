"""Randomized operation sequences for stress-testing the closure laws.

Starting from the one-tip K2 seed, a seeded RNG picks legal pendent,
clone, and join steps (join sides are grown to the right tip arity from
their own K2 seeds). Every run is reproducible from its seed, and any
failing sequence can be dumped as a script plus side-graft files that
the CLI replays verbatim.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field

from .build import _seed_graft
from .graph import Graft
from .io import dump_graft, format_script
from .ops import clone, join, pendent
from .patterns import CleanReport, is_clean
from .errors import InvalidArgumentError

__all__ = [
    "FuzzSequence", "FuzzResult", "generate_sequence", "run_sequence",
    "dump_failure", "DEFAULT_MAX_VERTICES",
]

DEFAULT_MAX_VERTICES = 40


@dataclass(frozen=True)
class FuzzSequence:
    """Op descriptors plus the side grafts the joins refer to.

    ops entries are ("pendent", t), ("clone", t), or
    ("join", (x0, x1, ...), side_name).
    """

    seed: int
    ops: tuple
    sides: dict = field(default_factory=dict)

    def script(self) -> str:
        lines = []
        for op in self.ops:
            if op[0] == "join":
                lines.append((op[0], list(op[1]), op[2]))
            else:
                lines.append((op[0], op[1]))
        return format_script(lines)


@dataclass
class FuzzResult:
    final: Graft
    reports: list[CleanReport]
    failed_at: int | None = None

    @property
    def ok(self) -> bool:
        return self.failed_at is None


def _grow_side(rng: random.Random, arity: int) -> Graft:
    gf = _seed_graft()
    while len(gf.tips) < arity:
        gf, _ = clone(gf, rng.choice(sorted(gf.tips)))
    for _ in range(rng.randint(0, 2)):
        gf, _ = pendent(gf, rng.choice(sorted(gf.tips)))
    return gf


def _pick_join(rng: random.Random, gf: Graft, room: int):
    # group tips by adjacency row; homogeneous targets come from one group
    groups: dict[int, list[int]] = {}
    for t in sorted(gf.tips):
        groups.setdefault(gf.graph.adj[t], []).append(t)
    pools = list(groups.values())
    grp = pools[rng.randrange(len(pools))]
    size = rng.randint(1, min(3, len(grp)))
    side = _grow_side(rng, size)
    if side.n - size > room:
        return None
    xs = tuple(sorted(rng.sample(grp, size)))
    return xs, side


def generate_sequence(seed: int, length: int = 8,
                      max_vertices: int = DEFAULT_MAX_VERTICES) -> FuzzSequence:
    """Deterministically generate a legal op sequence from a seed."""
    if length < 1:
        raise InvalidArgumentError("length must be positive")
    rng = random.Random(seed)
    gf = _seed_graft()
    ops = []
    sides: dict[str, Graft] = {}
    for _ in range(length):
        kind = rng.choice(("pendent", "clone", "clone", "join"))
        if kind == "join":
            picked = _pick_join(rng, gf, max_vertices - gf.n)
            if picked is None:
                kind = "clone"
            else:
                xs, side = picked
                name = f"side{len(sides)}.graph"
                sides[name] = side
                ops.append(("join", xs, name))
                gf, _ = join(gf, list(xs), side)
                continue
        if gf.n + 1 > max_vertices:
            break
        t = rng.choice(sorted(gf.tips))
        ops.append((kind, t))
        gf, _ = pendent(gf, t) if kind == "pendent" else clone(gf, t)
    return FuzzSequence(seed=seed, ops=tuple(ops), sides=sides)


def run_sequence(seq: FuzzSequence, budget=None,
                 check_each: bool = True) -> FuzzResult:
    """Apply the ops, certifying cleanness after each step."""
    gf = _seed_graft()
    reports: list[CleanReport] = []
    for i, op in enumerate(seq.ops):
        if op[0] == "pendent":
            gf, _ = pendent(gf, op[1])
        elif op[0] == "clone":
            gf, _ = clone(gf, op[1])
        elif op[0] == "join":
            gf, _ = join(gf, list(op[1]), seq.sides[op[2]])
        else:
            raise InvalidArgumentError(f"unknown op {op[0]!r}")
        if check_each:
            rep = is_clean(gf, budget=budget)
            reports.append(rep)
            if not rep.all_hold:
                return FuzzResult(gf, reports, failed_at=i)
    if not check_each:
        rep = is_clean(gf, budget=budget)
        reports.append(rep)
        if not rep.all_hold:
            return FuzzResult(gf, reports, failed_at=len(seq.ops) - 1)
    return FuzzResult(gf, reports)


def dump_failure(seq: FuzzSequence, dirpath: str) -> str:
    """Write a replayable script and its side grafts; returns script path."""
    os.makedirs(dirpath, exist_ok=True)
    for name, side in seq.sides.items():
        with open(os.path.join(dirpath, name), "w") as fh:
            dump_graft(side, fh, name=name.rsplit(".", 1)[0])
    path = os.path.join(dirpath, f"seq-{seq.seed}.ops")
    with open(path, "w") as fh:
        fh.write(seq.script())
    return path
