"""Independent high-precision oracle for values frozen into the C++ tests.

Run with: python3 tests/oracles/frozen_values.py
Uses mpmath only; none of the library code paths are involved.
"""
import mpmath as mp

mp.mp.dps = 40


def bisect(fn, lo, hi, it=200):
    flo = fn(lo)
    for _ in range(it):
        mid = (lo + hi) / 2
        fm = fn(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def first_sign_change(fn, start, step):
    x = mp.mpf(start)
    fx = fn(x)
    while True:
        y = x + step
        fy = fn(y)
        if (fx > 0) != (fy > 0):
            return bisect(fn, x, y)
        x, fx = y, fy


print("# Bessel zeros / stationary points")
print("j_{3/2} (tan x = x) =", mp.nstr(bisect(lambda x: mp.tan(x) - x, mp.mpf(4.4), mp.mpf(4.6)), 15))
print("j_2 =", mp.nstr(first_sign_change(lambda x: mp.besselj(2, x), 3, mp.mpf("0.25")), 15))
print("theta_0(J_1) =", mp.nstr(first_sign_change(lambda x: mp.besselj(0, x) - mp.besselj(2, x), mp.mpf("0.5"), mp.mpf("0.25")), 15))

print("# lambda_d")
for d in range(2, 13):
    nu = mp.mpf(d) / 2
    j = first_sign_change(lambda x: mp.besselj(nu + 1, x), nu + 1, mp.mpf("0.25"))
    lam = -(2 ** nu) * mp.gamma(nu + 1) * mp.besselj(nu, j) / j ** nu
    print(d, mp.nstr(lam, 15))

print("# quartic root of H_4: sqrt((3+sqrt6)/(4pi))")
print(mp.nstr(mp.sqrt((3 + mp.sqrt(6)) / (4 * mp.pi)), 15))

print("# reference candidate")
a = [mp.mpf(-113) / 100, mp.mpf(1) / 25, mp.mpf(1) / 3240]
a.append((-a[0] - 12 * a[1] - 1680 * a[2]) / 665280)
print("alpha_3 =", mp.nstr(a[3], 20), " 71/359251200 =", mp.nstr(mp.mpf(71) / 359251200, 20))


def cand(x):
    y = mp.sqrt(2 * mp.pi) * x
    return sum(a[n] * mp.hermite(4 * n, y) for n in range(4)) * mp.exp(-mp.pi * x * x)


r = first_sign_change(cand, mp.mpf("0.3"), mp.mpf("0.001"))
print("first root after 0.3 =", mp.nstr(r, 15))
# largest sign change: scan out to 3
x = mp.mpf("0.001")
last = None
fx = cand(x)
while x < 3:
    y = x + mp.mpf("0.001")
    fy = cand(y)
    if (fx > 0) != (fy > 0):
        last = bisect(cand, x, y)
    x, fx = y, fy
print("largest root =", mp.nstr(last, 15))
m = mp.findroot(lambda t: mp.diff(cand, t), mp.mpf("0.899"))
print("local min near 0.899 at", mp.nstr(m, 15), "value", mp.nstr(cand(m), 15))

print("# tau_ub(0.45)")
A = mp.mpf("0.45")
pub = lambda x: mp.mpf(1) / 2 + (mp.sin(2 * mp.pi * (A - mp.mpf(1) / 4) * x) - mp.sin(2 * mp.pi * A * x)) / (mp.pi * x)
print(mp.nstr(mp.quad(pub, [mp.mpf(1) / 4, A]), 15))

print("# Lemma BesselComp: int_0^3 J_1(r) r^2 dr vs J_2(3)*9")
print(mp.nstr(mp.quad(lambda r: mp.besselj(1, r) * r ** 2, [0, 3]), 15), mp.nstr(mp.besselj(2, 3) * 9, 15))

print("# Bessel spot values")
for nu, x in [(0, 1), (0, 12), (0, 50), (1, 7.5), (2.5, 30), (10, 20), (10, 15.3), (30, 45), (60, 120), (60, 200), (0.25, 3), (45.5, 199.5)]:
    print(nu, x, mp.nstr(mp.besselj(nu, x), 20))

print("# hermite spot values e^{-x^2/2} H_n(x)")
for n, x in [(50, 1.5), (200, 3.0), (1000, 10.0), (20000, 0.7), (20000, 10.0)]:
    v = mp.hermite(n, x) * mp.exp(-mp.mpf(x) ** 2 / 2)
    print(n, x, mp.nstr(v, 20))

print("# laguerre spot values")
for n, nu, t in [(30, 0, 5.0), (500, 0.5, 2.0), (2000, 2, 3.0), (60, -0.5, 40.0)]:
    print(n, nu, t, mp.nstr(mp.laguerre(n, nu, t), 20))
