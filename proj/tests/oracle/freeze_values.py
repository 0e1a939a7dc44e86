#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Independent numpy oracle for the frozen expected values in the C++ tests.

Everything here is computed from closed-form physics and numpy's FFT, without
touching the C++ implementation. Re-run to regenerate the numbers quoted in
tests/*.cpp.
"""
import numpy as np

c, fc, df = 3e8, 28e9, 120e3
Nc = Nsym = 3360
N = Nf = Nt = 480
L = 7
Tu = 1.0 / df


def lR(R): return 2 * L * df * R * N / c
def lD(v): return 2 * L * Tu * fc * v * N / c


print("capabilities")
print("  range_res", c / (2 * Nc * df))
print("  vel_res  ", c / (2 * fc * Nt * L * Tu))
print("  r_max    ", c / (2 * L * df))
print("  v_max    ", c / (2 * fc * L * Tu))
print("overhead grid", Nf * Nt / (Nc * Nsym), "diag", N / (Nc * Nsym))


def power_db(sig, R): return 10 * np.log10(sig / R**4)


car = 10 ** 0.5
print("power gaps")
print("  6 vs 39  ", power_db(car, 6) - power_db(car, 39))
print("  18 vs 42 ", power_db(car, 18) - power_db(car, 42))
print("  truck/car", power_db(100, 40.2) - power_db(car, 10.6))
print("  moto/car ", power_db(1, 40) - power_db(car, 10.6))

# Grid: C(i,j) = exp(-j2pi p0 i/Nf) exp(+j2pi q0 j/Nt); Doppler DFT over j, range IDFT over i.
i = np.arange(Nf)[:, None]
j = np.arange(Nt)[None, :]
R, v = 40.0, 5.0
p0, q0 = lR(R), lD(v)
C = np.exp(-2j * np.pi * p0 * i / Nf) * np.exp(2j * np.pi * q0 * j / Nt)
Z = np.fft.ifft(np.fft.fft(C, axis=1), axis=0)
p, q = np.unravel_index(np.argmax(np.abs(Z)), Z.shape)
print("grid R=40 v=5 bins", p0, q0, "argmax", (p, q))
print("bins_to_estimate(108,26)", c * 108 / (2 * L * df * Nf), c * 26 / (2 * fc * L * Tu * Nt))

k = np.arange(N)
d = 0.5 * (np.exp(2j * np.pi * (p0 + q0) * k / N) + np.exp(2j * np.pi * abs(p0 - q0) * k / N))
S = np.abs(np.fft.fft(d))
top = sorted(np.argsort(S)[-8:])
print("dual-tone peak candidates", top, "top2", sorted(np.argsort(S)[-2:]))
single = np.exp(2j * np.pi * (q0 - p0) * k / N)
print("single-tone argmax", np.argmax(np.abs(np.fft.fft(single))), "expected", (q0 - p0) % N)


def cand(l1, l2):
    lm, ld = (l1 + l2) / 2, l2 - l1
    a = (c * lm / (2 * df * Nc), c * ld / (4 * Tu * fc * Nc))
    b = (c * ld / (4 * df * Nc), c * lm / (2 * Tu * fc * Nc))
    return a, b


print("candidates(81,134)", cand(81, 134))


def psl(win, offset=0.5, over=16, hw=1):
    w = np.ones(N) if win == "rect" else 0.54 - 0.46 * np.cos(2 * np.pi * k / (N - 1))
    x = w * np.exp(2j * np.pi * (100 + offset) * k / N)
    X = np.abs(np.fft.fft(x, N * over))
    db = 20 * np.log10(X / X.max())
    m = np.argmax(db)
    dist = np.minimum(np.abs(np.arange(N * over) - m), N * over - np.abs(np.arange(N * over) - m))
    return db[dist > hw * over].max()


print("psl rect half-bin x16", psl("rect"), "hamming", psl("ham", hw=2))
print("psl rect 0.3-bin x16", psl("rect", 0.3))
print("hamming w(0)", 0.54 - 0.46)
