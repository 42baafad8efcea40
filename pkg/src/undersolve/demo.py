"""A 5x8 demonstration system used throughout the docs and tests."""

import numpy as np

DEMO_A = np.array([
    [2.0, 4.0, -3.0, 1.0, 0.0, 5.0, -7.0, 8.0],
    [3.0, 2.0, 10.0, -4.0, -1.0, -6.0, 4.0, 1.0],
    [9.0, 7.0, 3.0, 2.0, 0.0, 0.0, -4.0, 2.0],
    [6.0, 4.0, 0.0, -1.0, -1.0, 3.0, 10.0, 5.0],
    [5.0, 2.0, -3.0, -7.0, -5.0, 4.0, 8.0, -8.0],
])

DEMO_B = np.array([38.0, 20.0, 39.0, -16.0, -30.0])

DEMO_X0 = np.array([2.0, 0.0, -1.0, 2.0, 0.0, 0.0, -3.0, 1.0])


def demo_system():
    """Return copies of (A, b) for the demonstration system."""
    return DEMO_A.copy(), DEMO_B.copy()
