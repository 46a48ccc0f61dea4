"""Independent term-by-term evaluation of the golden values frozen into the C++ tests.

Run: python3 tests/oracles/golden_values.py
"""
import math

import numpy as np
from scipy import integrate, optimize, stats

C = 299792458.0


def pathloss_ris(gt, gr, a, b, lam, n1, tx, ris, bob, normal, grad):
    v = np.subtract(tx, ris)
    d = np.linalg.norm(v)
    r = np.linalg.norm(np.subtract(bob, ris))
    cos_i = np.dot(v, normal) / d
    th_i = math.acos(cos_i)
    s_r = math.sin(th_i) + lam * grad / (2 * math.pi * n1)
    th_r = math.asin(s_r)
    u = math.pi * b / lam * (math.sin(th_i) - math.sin(th_r))
    sinc2 = 1.0 if u == 0 else (math.sin(u) / u) ** 2
    return gt * gr / (4 * math.pi) ** 2 * (a * b / (d * r)) ** 2 * cos_i ** 2 * sinc2


lam = C / 28e9
alice, eve, ris, bob = [100, 100, 1], [90, 100, 1], [90, 90, 1], [90, 80, 1]
normal = [0, 1, 0]
for g in (0.0, 5.0, -7.5):
    pa = pathloss_ris(1000, 1000, 0.5, 0.5, lam, 1.0, alice, ris, bob, normal, g)
    pe = pathloss_ris(1000, 1000, 0.5, 0.5, lam, 1.0, eve, ris, bob, normal, g)
    print(f"ris_pathloss grad={g}: alice={pa:.12e} eve={pe:.12e}")

for name, tx in (("alice", alice), ("eve", eve)):
    d = math.dist(tx, bob)
    print(f"fspl {name}->bob d={d:.6f}: {1e6 * (lam / (4 * math.pi * d)) ** 2:.12e}")

# Q-function tail by quadrature
q = integrate.quad(lambda t: math.exp(-t * t / 2) / math.sqrt(2 * math.pi), 1.2816, np.inf)[0]
print(f"Q(1.2816) quadrature = {q:.10f}")
print(f"2Q(3) quadrature = {2 * integrate.quad(lambda t: math.exp(-t*t/2)/math.sqrt(2*math.pi), 3, np.inf)[0]:.10e}")
# q_inv(0.025) by bisection on the quadrature tail
root = optimize.bisect(lambda x: integrate.quad(lambda t: math.exp(-t*t/2)/math.sqrt(2*math.pi), x, np.inf)[0] - 0.025, 0, 5, xtol=1e-12)
print(f"q_inv(0.025) bisection = {root:.10f}")

# folded normal via Monte Carlo of |2 + n|
rng = np.random.default_rng(20240611)
s = np.abs(2 + rng.standard_normal(10**6))
print(f"MC P(|2+n|<=1) = {np.mean(s <= 1):.5f}  mean={s.mean():.5f} var={s.var():.5f}")
