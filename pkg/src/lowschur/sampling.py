"""Seeded generators for admissible data and Schur-class rational functions."""

from __future__ import annotations

import numpy as np

from .algebra import RationalFn
from .schur import forward_schur_step, inverse_schur_data


def random_disk(rng: np.random.Generator, size=None, radius: float = 0.9):
    """Uniform samples from the disk |z| <= radius."""
    r = radius * np.sqrt(rng.uniform(0, 1, size))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, size))


def random_gammas(rng: np.random.Generator, n: int, radius: float = 0.9) -> np.ndarray:
    return random_disk(rng, n + 1, radius)


def random_data(rng: np.random.Generator, n: int, radius: float = 0.9) -> tuple[np.ndarray, np.ndarray]:
    """Admissible c_0..c_n together with the Schur parameters that generated it."""
    g = random_gammas(rng, n, radius)
    return inverse_schur_data(g), g


def random_schur_rational(rng: np.random.Generator, degree: int, radius: float = 0.9,
                          base=None) -> RationalFn:
    """Compose ``degree`` forward Schur steps on a base function.

    The default base is a nonzero constant with |w| in [0.05, radius]; since a
    nonzero constant does not vanish at infinity, every step raises the degree
    by one and the result has degree exactly ``degree``.
    """
    if base is None:
        mag = rng.uniform(0.05, radius)
        base = RationalFn.constant(mag * np.exp(2j * np.pi * rng.uniform()))
    f = base
    for _ in range(degree):
        f = forward_schur_step(f, random_disk(rng, None, radius))
    return f
