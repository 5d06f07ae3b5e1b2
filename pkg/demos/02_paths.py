# # Trees, decorated Dyck paths and skew Dyck paths
#
# Walking around a tree gives a Dyck path: U going down an edge, D coming
# back up. A marked edge comes back as a red step L. Reading L as a
# (-1,-1) step instead of (1,-1) turns the path into a skew Dyck path.

# %%

from deepnodes import decode, generate, validate_skew
from deepnodes.paths import decorated_to_skew, decorated_to_tree, tree_to_decorated

# %%

t = decode("(()*(()))")
d = tree_to_decorated(t)
s = decorated_to_skew(d)
print(d.steps)
print(s.vertices)

# %%
# The walk back recovers the tree.

assert decorated_to_tree(d) == t

# %%
# A skew path may not reuse a segment. UL climbs a segment and walks back
# down it, so it is rejected, with the offending step.

print(validate_skew("UL"))
print(validate_skew("UUDL"))

# %%
# Every tree on up to eight nodes maps to a distinct valid skew path.

for n in range(1, 9):
    images = {decorated_to_skew(tree_to_decorated(t)).steps for t in generate(n)}
    assert all(validate_skew(p) for p in images)
    print(n, len(images))
