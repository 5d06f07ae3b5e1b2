# # Counting marked ordered trees
#
# A marked ordered tree is a plane tree where the edge to the last child of a
# node may carry a mark, as long as that child is not a leaf. Trees are
# written as bracket strings; a `*` before a subtree marks the edge into it.

# %%

from deepnodes import decode, encode, generate, gf_A, stats

# %%
# All trees on four nodes, with (nodes, height, deepest nodes, marks).

for t in generate(4):
    s = stats(t)
    print(f"{encode(t):12} {s.nodes} {s.height} {s.deepest} {s.marks}")

# %%
# The generating function gives the same counts without listing anything.

A = gf_A(12)
print(A)
for n in range(1, 10):
    assert len(generate(n)) == A[n]

# %%
# Heights count nodes on the longest root-to-leaf chain, so a single node
# has height 1 and a marked chain of three nodes has height 3.

print(stats(decode("()")))
print(stats(decode("(*(()))")))
