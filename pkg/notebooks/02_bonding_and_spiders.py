"""
Clique bonding and spiders
==========================

Gluing two trees at a vertex, splitting them back apart, and the spider
family whose hub always lies in the core.
"""

from stablecore import alpha_forest, canonical_split, clique_bond, core, path, pendant_vertices, spider

# P3 glued at its endpoints to another P3 is P5
t, m1, m2 = clique_bond(path(3), 2, path(3), 0)
print("bond:", t.edges, "maps", m1, m2)

# a core vertex splits alpha additively, minus the shared vertex
v = 2
s = canonical_split(t, v)
a1, a2 = alpha_forest(s.t1), alpha_forest(s.t2)
print(f"v={v} in core: {v in core(t)}; alpha(T)={alpha_forest(t)} = {a1} + {a2} - 1")

# the core of T is the union of the cores of the halves
c1 = {s.map1[x] for x in core(s.t1)}
c2 = {s.map2[x] for x in core(s.t2)}
print("core(T) =", sorted(core(t)), " union of halves =", sorted(c1 | c2))

# spiders: hub 0 of degree k, every leg of length two
for k in range(1, 7):
    sp = spider(k)
    cp = core(sp) & pendant_vertices(sp)
    print(f"spider({k}): alpha={alpha_forest(sp)}, hub in core={0 in core(sp)}, |core & pend|={len(cp)}")
