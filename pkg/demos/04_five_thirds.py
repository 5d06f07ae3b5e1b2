# # The average number of deepest nodes tends to 5/3
#
# Exact ratios of total deepest nodes to tree count approach 5/3 slowly.
# Near v = 1 the kernel sum behaves like c0 + c1 (1 - v) + ..., and the
# linear coefficient c1 = -1/3 is what produces the limit.

# %%

from deepnodes.asymptotics import LIMIT, eval_sum_F, ratio_table, singular_coefficient_fit

# %%

rows = ratio_table(200)
for n in (4, 10, 20, 50, 100, 200):
    r = rows[n - 1]
    print(n, r.ratio, float(abs(r.exact - LIMIT)))

# %%
# The gap shrinks roughly like 1/n.

for n in (20, 200):
    print(n, n * float(LIMIT - rows[n - 1].exact))

# %%
# Three-point fit of F near v = 1.

for pts in [(0.99, 0.995, 0.999), (0.999, 0.9995, 0.9999)]:
    c0, c1, c2 = singular_coefficient_fit(pts)
    print(pts, c1, abs(c1 + 1 / 3))

# %%

print(eval_sum_F(0.5), eval_sum_F(0.9), eval_sum_F(0.99))
