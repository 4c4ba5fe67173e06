"""Independent brute-force references shared by the tests."""
import numpy as np

TRAPEZOID_STEPS = 10 ** 6


def trapezoid_segment(f, z_end, steps=TRAPEZOID_STEPS):
    """Composite trapezoid for int_0^z_end f(zeta) d zeta on the straight segment."""
    s = np.linspace(0.0, 1.0, steps + 1)
    y = f(s * z_end)
    return complex((y.sum() - 0.5 * (y[0] + y[-1])) * z_end / steps)


def disk_points(rng, count, rmax=0.95):
    return rmax * np.sqrt(rng.random(count)) * np.exp(2j * np.pi * rng.random(count))
