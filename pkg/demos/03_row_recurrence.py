"""
The row recurrence and where it overshoots
==========================================

The row-by-row recurrence (``method="recurrence"``) is polynomial, but it
counts edges towards column j+1 from counts that are never tied to the cut
chosen for column j+1 itself. A three-vertex clique is enough to see it.
"""

# %%
from bubblecut import BubbleModel, brute_force_max_cut, realize_graph, solve_max_cut
from bubblecut.dp import dump_tables

# vertex 0 in column 1 row 2; bubble {1, 2} in column 2 row 1
m = BubbleModel.from_lists(3, [[[], [0]], [[1, 2]]])
g = realize_graph(m)
print("edges:", g.sorted_edges())

# %%
print("brute force:", brute_force_max_cut(g))
print("exact      :", solve_max_cut(m).max_cut_size)
print("recurrence :", solve_max_cut(m, method="recurrence").max_cut_size)

# %% Column 2's best split of {1, 2} scores 1; column 1 then counts both
# cross edges as if 1 and 2 sat on the same side, opposite vertex 0.
print(dump_tables(m))

# %% How often does that happen on random models?
from bubblecut import verify_dp

rep = verify_dp(300, 10, seed=0)
print(f"exact mismatches: {len(rep.mismatches)}; recurrence mismatches: {len(rep.recurrence_mismatches)} / 300")
