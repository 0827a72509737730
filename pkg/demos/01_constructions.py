# Build the two graph families and compare their growth.
#
# The pair family keeps explicit stable sets alongside the graph; the
# graft family keeps a tip set and is produced by clone/pendent/join
# rounds. Sizes explode fast, which is the point: chromatic number
# climbs one per level while the graphs stay triangle-free.

from burling import build_graft, burling_pair

print("level  pair |V|  |E|  stables (total size)   graft |V|   |E|  tips")
for k in range(1, 5):
    p = burling_pair(k)
    gf, _ = build_graft(k)
    print(f"{k:>5}  {p.graph.n:>8}  {p.graph.edge_count():>3}"
          f"  {len(p.stables):>7} {'(' + str(sum(len(s) for s in p.stables)) + ')':>12}"
          f"   {gf.graph.n:>9}  {gf.graph.edge_count():>4}  {len(gf.tips):>4}")

gf2, trace = build_graft(2)
print()
print("level-2 graft is a 5-cycle:", sorted(gf2.graph.edges()))
print("tips sit two steps apart:", sorted(gf2.tips))
print("level-ups recorded in the trace:", len(trace.levels))
