"""Independent oracles for the frozen expected values in the C++ tests.

Nothing here calls the library: quadrature is scipy Simpson on dense grids or
closed forms, the noise generator is a from-scratch MT19937-64, and the exact
solution is evaluated with mpmath. Run with `python3 tests/oracles/oracles.py`;
the printed numbers are the constants pasted into the tests.
"""

import math

import mpmath
import numpy as np
from scipy.integrate import simpson

PI = math.pi


# ---------------------------------------------------------------- MT19937-64
class MT19937_64:
    N, M = 312, 156
    MATRIX_A = 0xB5026F5AA96619E9
    UM, LM = 0xFFFFFFFF80000000, 0x7FFFFFFF
    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.mt = [0] * self.N
        self.mt[0] = seed & self.MASK
        for i in range(1, self.N):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & self.MASK
        self.idx = self.N

    def _twist(self):
        mt = self.mt
        for i in range(self.N):
            x = (mt[i] & self.UM) | (mt[(i + 1) % self.N] & self.LM)
            xa = x >> 1
            if x & 1:
                xa ^= self.MATRIX_A
            mt[i] = mt[(i + self.M) % self.N] ^ xa
        self.idx = 0

    def __call__(self):
        if self.idx >= self.N:
            self._twist()
        y = self.mt[self.idx]
        self.idx += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & self.MASK


def gaussian_stream(seed):
    eng = MT19937_64(seed)
    inv = 1.0 / 9007199254740992.0
    while True:
        u1 = float((eng() >> 11) + 1) * inv
        u2 = float(eng() >> 11) * inv
        yield math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * PI * u2)


# ------------------------------------------------------------- F-transforms
def hat(x, c, h, lo, hi):
    """Triangular basis centred at c, clipped to [lo, hi]."""
    v = np.maximum(0.0, 1.0 - np.abs(x - c) / h)
    return np.where((x >= lo) & (x <= hi), v, 0.0)


def ft_component_simpson(f, a, b, n, i, pts=10_001):
    """Component i (1-based) by Simpson's rule on `pts` points over the support."""
    h = (b - a) / (n - 1)
    c = a + h * (i - 1)
    lo, hi = max(a, c - h), min(b, c + h)
    x = np.linspace(lo, hi, pts)
    w = hat(x, c, h, a, b)
    return simpson(f(x) * w, x=x) / simpson(w, x=x)


def sine_component_closed(k, x_i, h):
    """F-transform of sin(k x) for an interior hat of half-width h."""
    return math.sin(k * x_i) * 2.0 * (1.0 - math.cos(k * h)) / (k * h) ** 2


def trapezoid_ft(values, xs, a, b, n):
    """Hat-weighted trapezoid over the whole sample axis (numerator and denominator share weights)."""
    h = (b - a) / (n - 1)
    dx = xs[1] - xs[0]
    tw = np.full(xs.size, dx)
    tw[0] = tw[-1] = 0.5 * dx
    nodes = a + h * np.arange(n)
    nodes[-1] = b
    out = np.empty(n)
    for i in range(n):
        w = tw * hat(xs, nodes[i], h, a, b)
        out[i] = np.dot(w, values) / w.sum()
    return out, nodes


def inverse(F, nodes, h, xs):
    idx = np.clip(np.floor((xs - nodes[0]) / h).astype(int), 0, len(nodes) - 2)
    w_hi = (xs - nodes[idx]) / h
    return (1.0 - w_hi) * F[idx] + w_hi * F[idx + 1]


def main():
    np.set_printoptions(precision=17)

    eng = MT19937_64(5489)
    for _ in range(9999):
        eng()
    assert eng() == 9981545732273789042, "MT19937-64 self-check failed"
    print("mt19937_64 self-check ok")

    # 1. sin(pi x) components, n = 401 on [0, 10].
    a, b, n = 0.0, 10.0, 401
    h = (b - a) / (n - 1)
    f = lambda x: np.sin(PI * x)
    print("\n# ftransform_1d sin(pi x), n=401 (1-based i: simpson, closed form)")
    for i in (1, 2, 57, 201, 277, 400, 401):
        s = ft_component_simpson(f, a, b, n, i)
        cf = sine_component_closed(PI, a + h * (i - 1), h) if 1 < i < n else float("nan")
        print(f"i={i}: {s!r} {cf!r}")

    # 2. 2D spot values for sin(pi x) cos(pi t), 401 x 601 on [0,10]^2 (separable weight).
    m = 601
    ht = 10.0 / (m - 1)
    g = lambda t: np.cos(PI * t)
    print("\n# ftransform_2d sin(pi x)cos(pi t), 401x601")
    for (i, j) in ((201, 1), (201, 301), (57, 2), (2, 600)):
        fx = ft_component_simpson(f, a, b, n, i)
        gt = ft_component_simpson(g, 0.0, 10.0, m, j)
        print(f"(i,j)=({i},{j}): {fx * gt!r}")

    # 3. Inverse of exact sin components on 4001 probe points.
    nodes = a + h * np.arange(n)
    F_exact = np.array([ft_component_simpson(f, a, b, n, i + 1, 2001) for i in range(n)])
    probe = np.linspace(a, b, 4001)
    dev = np.max(np.abs(inverse(F_exact, nodes, h, probe) - np.sin(PI * probe)))
    print(f"\n# inverse 1D sin, n=401, 4001 probes: max deviation {dev!r}")

    # 4. 2D round trip at nodes: max |F_ij - f(x_i, t_j)|.
    tn = ht * np.arange(m)
    G_exact = np.array([ft_component_simpson(g, 0.0, 10.0, m, j + 1, 2001) for j in range(m)])
    node_err = np.max(np.abs(np.outer(G_exact, F_exact) - np.outer(np.cos(PI * tn), np.sin(PI * nodes))))
    print(f"# 2D round trip at nodes, 401x601: max node error {node_err!r}")

    # 5. Denoise: sin(pi x) + 0.1 N(0,1) (seed 42) on 14001 samples, n = 401.
    xs = np.linspace(a, b, 14001)
    xs[-1] = b
    clean = np.sin(PI * xs)
    gs = gaussian_stream(42)
    noisy = clean + 0.1 * np.array([next(gs) for _ in range(xs.size)])
    F, nd = trapezoid_ft(noisy, xs, a, b, n)
    den = inverse(F, nd, h, xs)
    rmse_noisy = math.sqrt(np.mean((noisy - clean) ** 2))
    rmse_den = math.sqrt(np.mean((den - clean) ** 2))
    print(f"\n# denoise seed 42 sigma 0.1: rmse_noisy {rmse_noisy!r} rmse_denoised {rmse_den!r} "
          f"ratio {rmse_den / rmse_noisy!r}")
    print(f"# first noisy samples: {noisy[:3]!r}")

    # 6. Pure sin(40 pi x), n = 401: period 2h, components vanish analytically.
    hf = np.sin(40.0 * PI * xs)
    F, nd = trapezoid_ft(hf, xs, a, b, n)
    den = inverse(F, nd, h, xs)
    print(f"# sin(40 pi x) denoised max amplitude {np.max(np.abs(den))!r}")

    # 7. Amplitude/phase noise, seed 42, alpha = beta = 0.1, on the 401-node grid.
    xg = a + h * np.arange(n)
    xg[-1] = b
    gs = gaussian_stream(42)
    xa = [next(gs) for _ in range(n)]
    xp = [next(gs) for _ in range(n)]
    sine = [(1 + 0.1 * xa[k]) * math.sin(PI * xg[k] + 0.1 * xp[k]) for k in (1, 2, 3)]
    s = np.sin(PI * xg)
    generic = [s[k] * (1 + 0.1 * xa[k]) + 0.1 * xp[k] * (s[k + 1] - s[k - 1]) / (xg[k + 1] - xg[k - 1])
               for k in (1, 2, 3)]
    print(f"\n# add_sine_noise x=0.025,0.05,0.075: {sine!r}")
    print(f"# add_noise (generic) x=0.025,0.05,0.075: {generic!r}")
    print(f"# first gaussian variates seed 42: {xa[:3]!r}")

    # 8. Exact solution at the slice coordinates.
    mpmath.mp.dps = 40
    u = lambda x, t: mpmath.sin(mpmath.pi * x) * mpmath.cos(mpmath.pi * t)
    print(f"\n# u(9.08, 3.63) = {mpmath.nstr(u(mpmath.mpf('9.08'), mpmath.mpf('3.63')), 20)}")
    print(f"# u(4.54, 5.45) = {mpmath.nstr(u(mpmath.mpf('4.54'), mpmath.mpf('5.45')), 20)}")


if __name__ == "__main__":
    main()
