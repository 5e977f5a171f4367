"""Independent high-precision oracle values, frozen into the C++ tests.

Run with: python3 tests/oracle/freeze_values.py
"""
from mpmath import mp, mpf, quad, cosh, exp, log, gamma, pi, sqrt, besselk, inf, sinh, asinh

mp.dps = 40


def kappa(l):
    return pi ** (mpf(l) / 2) / gamma(mpf(l) / 2 + 1)


def chord(s, R, d):
    return kappa(d - 1) * (2 * exp(s) * (cosh(R) - cosh(s))) ** (mpf(d - 1) / 2)


def I(R, d):
    k = d - 1
    R = mpf(R)
    i1 = quad(lambda s: (cosh(R) - cosh(s)) ** (mpf(k) / 2) * exp(-mpf(k) / 2 * s), [0, R])
    i2 = quad(lambda s: (cosh(R) - cosh(s)) ** k, [0, R])
    i4 = quad(lambda s: (cosh(R) - cosh(s)) ** (2 * k) * exp(-k * s), [0, R])
    j = quad(lambda s: (1 - (cosh(s) - 1) / (cosh(R) - 1)) ** k, [0, R])
    return i1, i2, i4, j


def moments(R, d):
    R = mpf(R)
    k = d - 1
    mean = quad(lambda s: chord(s, R, d) * exp(-k * s), [-R, 0, R])
    var = quad(lambda s: chord(s, R, d) ** 2 * exp(-k * s), [-R, 0, R])
    return mean, var


print("lgamma(10)", log(gamma(10)))
print("log chord d=3 R=1 s=0.5", log(chord(mpf("0.5"), 1, 3)))
print("log C_10", log(2 ** (mpf(9) / 2) * kappa(9)))
for R, d in [(2, 3)]:
    i1, i2, i4, j = I(R, d)
    print(f"I(R={R},d={d}) logI1={log(i1)} logI2={log(i2)} logI4={log(i4)} J={j}")
for R, d in [(3, 3)]:
    m, v = moments(R, d)
    print(f"moments(R={R},d={d}) mean={m} var={v} logmean={log(m)} logvar={log(v)}")
i1, i2, i4, j = I(5, 3)
print("wass_integrals d=3 R=5", sqrt(2) * (sqrt(i4) / i2 + i1 / sqrt(i2)))
i1, i2, i4, j = I(8, 3)
print("J d=3 R=8", j, "bound", sqrt(2) * (1 / (sqrt(2) * j) + 2 / (2 * sqrt(j))))
print("K0(1)", besselk(0, 1), "K0(0.1)", besselk(0, mpf("0.1")))
for L in ["0.1", "0.5", "1", "2", "5"]:
    L = mpf(L)
    print("bessel L", L, quad(lambda x: exp(-x * x) / sqrt(1 + L * L * x * x), [0, 1, 5, inf]))
print("Phi(1)", (1 + mp.erf(1 / sqrt(2))) / 2)
print("kol(0.02)", sqrt(2 / sqrt(pi) * mpf("0.02")))
print("euclid d=2 R=1 var", mpf(16) / 3, "cum4", 2 * pi**2 * mpf(8) / 15)
print("euclid wass d=1 R=1", 2 / pi ** mpf("0.25") * gamma(mpf(3) / 2) * sqrt(1 / gamma(mpf(3) / 2)))
print("sample_signed_distance d=2 R=1 U=.5", -log(cosh(1)))
