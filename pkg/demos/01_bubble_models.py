"""
Bubble models
=============

Build a bubble model from an edge list, look at it, and realize it back.
"""

# %%
from bubblecut import Graph, build_bubble_model, realize_graph, validate_model
from bubblecut.bubble import umbrella_ordering

# two triangles joined through vertex 3, plus a pendant vertex
g = Graph(7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (5, 6)])
print("umbrella ordering:", umbrella_ordering(g))

# %% Columns are cliques; a vertex sees the next column's bubbles in lower rows
model = build_bubble_model(g)
for j, col in enumerate(model.columns, 1):
    print(f"column {j}:", {i: list(b) for i, b in enumerate(col, 1) if b})

assert realize_graph(model) == g
assert validate_model(model, g) is None

# %% The JSON form omits empty rows
print(model.to_json(indent=2))

# %% Graphs that are not proper interval graphs are rejected
claw = Graph(4, [(0, 1), (0, 2), (0, 3)])
print("claw:", build_bubble_model(claw))
print("C4:", build_bubble_model(Graph.cycle(4)))
