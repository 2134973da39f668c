import numpy as np

# independent streams carved out of one campaign seed
SELECTION_STREAM = 1
CONSTRUCTION_STREAM = 2
WALK_STREAM = 3
EXECUTION_STREAM = 4


def derive_seed(seed, *path):
    """A 64-bit seed for the child stream `path` of `seed`."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=tuple(path))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed, *path):
    if path:
        seed = derive_seed(seed, *path)
    return np.random.default_rng(seed)
