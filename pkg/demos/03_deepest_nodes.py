# # Counting deepest nodes with generating functions
#
# G(z, t) marks trees by size (z) and by how many nodes sit on the deepest
# level (t). It can be built level by level, or from a single sum over the
# kernel series v, q and delta. Both must agree term by term.

# %%

import time

from deepnodes import deepest_polynomial, gf_dG, gf_G
from deepnodes.genfun import identity_suite

# %%

G = gf_G(6)
print(G)

# %%
# On four nodes: seven trees with one deepest node, two with two, one with
# three.

print(G[4], deepest_polynomial(4))

# %%

for route in ("recursive", "explicit"):
    start = time.perf_counter()
    gf_G(30, route)
    print(route, f"{time.perf_counter() - start:.2f}s")
assert gf_G(30, "recursive") == gf_G(30, "explicit")

# %%
# Differentiating in t and setting t = 1 counts deepest nodes over all
# trees of a size. Three independent routes agree.

routes = [gf_dG(20, r) for r in ("derivative", "closed_sum", "level_recursion")]
assert routes[0] == routes[1] == routes[2]
print(routes[0])

# %%
# The algebraic identities behind the explicit form, checked exactly.

for r in identity_suite(40):
    print("ok " if r.passed else "BAD", r.name)
