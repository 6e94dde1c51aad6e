"""Shared corpus generators.  All randomness is seeded from the manifest so
every failure is reproducible from the recorded seeds."""

import json
import random
from pathlib import Path

from domset.graphs import Graph

MANIFEST = json.loads((Path(__file__).parent / "test_manifest.json").read_text())


def er_graph(rng: random.Random, n_min: int, n_max: int) -> Graph:
    """Erdos-Renyi graph with size and edge density drawn from the rng."""
    n = rng.randint(n_min, n_max)
    p = rng.random()
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def corpus(name: str):
    cfg = MANIFEST[name]
    rng = random.Random(cfg["seed"])
    for _ in range(cfg["count"]):
        yield er_graph(rng, cfg["n_min"], cfg["n_max"])
