"""Writes every graph on 1..7 vertices (one per isomorphism class) in graph6.

The minor-search and planarity tests read the output as their exhaustive host
corpus. Regenerate with: python3 tools/gen_atlas.py > fixtures/atlas7.g6
"""
import networkx as nx

for g in nx.graph_atlas_g():
    if g.number_of_nodes() == 0:
        continue
    print(nx.to_graph6_bytes(g, header=False).decode().strip())
