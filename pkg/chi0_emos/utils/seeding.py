import hashlib

import numpy as np


def label_entropy(label: str) -> int:
    """First 8 bytes of the SHA-256 of a label, as an integer."""
    return int.from_bytes(hashlib.sha256(label.encode("utf-8")).digest()[:8], "big")


def stream_generator(master_seed: int, *labels: str) -> np.random.Generator:
    """Independent generator for a (master seed, labels) pair.

    The stream does not depend on scheduling order, so parallel cells draw the
    same numbers on every run.
    """
    entropy = [int(master_seed)] + [label_entropy(label) for label in labels]
    return np.random.default_rng(np.random.SeedSequence(entropy))
