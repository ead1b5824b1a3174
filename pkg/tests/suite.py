"""The randomized instance suite shared by several test modules."""
import random
from functools import lru_cache

from saitotree.tree import random_tree

SEED = 20240611
SIZE = 500


@lru_cache(maxsize=None)
def random_suite(size: int = SIZE, seed: int = SEED, max_vertices: int = 12, max_n: int = 4):
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        N = rng.randint(1, max_vertices)
        tree = random_tree(rng, N, rule2_bias=rng.choice((0.2, 0.5, 0.8)))
        out.append((tree, tuple(rng.randint(0, max_n) for _ in range(N))))
    return tuple(out)
