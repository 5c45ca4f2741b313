from typing import Optional

import numpy as np


def generate(seed: Optional[int], purpose: str = "Lanczos start vector") -> int:
    """Negative or missing seeds are replaced by a fresh 32-bit seed from OS entropy."""
    if seed is None or seed < 0:
        seed = int(np.random.SeedSequence().entropy % 2**32)
        print(f"Drew a random seed for the {purpose}: {seed}")
    else:
        print(f"{purpose.capitalize()} seed: {seed}")
    return seed


def random_vector(seed: int, size: int) -> np.ndarray:
    return np.random.default_rng(seed).standard_normal(size)
