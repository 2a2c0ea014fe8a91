"""
Solving max cut
===============

Solve a few models and compare against exhaustive enumeration.
"""

# %%
from bubblecut import (
    brute_force_max_cut,
    build_bubble_model,
    clique_model,
    cut_size,
    random_model,
    realize_graph,
    solve_max_cut,
)
from bubblecut.graph import Graph

# %% A clique cuts best when split in half
for n in (4, 5, 10):
    print(f"K_{n}:", solve_max_cut(clique_model(n)).max_cut_size, "=", n * n // 4)

# %% Paths are bipartite, every edge can cross
path = build_bubble_model(Graph.path(200))
print("P_200:", solve_max_cut(path).max_cut_size)

# %% Random models, with the optimal cut reconstructed
for seed in range(5):
    m = random_model(11, seed)
    g = realize_graph(m)
    res = solve_max_cut(m, want_cut=True)
    print(
        f"seed {seed}: {g.m} edges, max cut {res.max_cut_size}, "
        f"brute force {brute_force_max_cut(g)}, cut {res.cut_vertices()} "
        f"(size {cut_size(g, res.cut)})"
    )
