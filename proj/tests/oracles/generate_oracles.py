"""Reference values for the unit and acceptance tests, computed with mpmath.

Run from the repository root:

    python3 tests/oracles/generate_oracles.py > tests/oracle_values.hpp

The C++ library never sees this script; it only consumes the frozen output.
"""

import mpmath as mp

mp.mp.dps = 60

ALPHAS = [(0.0, 0.5), (0.3, 0.4), (-0.2, 0.6), (0.1, 0.1)]


def big_n(n):
    return (n * n + 3 * n) // 2


def alpha_of(re, im):
    return mp.mpc(mp.mpf(re), mp.mpf(im))


def theorem_bounds(n, im):
    n = mp.mpf(n)
    lower = n * n * mp.log(n) / 2 - n * n
    upper = n * n * mp.log(n) / 2 + 8 * n * n - n * mp.log(abs(mp.mpf(im)))
    return lower, upper


def nodes(n, a):
    out = []
    for d in range(n + 1):
        for k in range(d + 1):
            out.append((d - k, k, (d - k) + k * a))
    return out


def beta(n, l, m, a):
    target = l + m * a
    prod = mp.mpc(1)
    for j, k, v in nodes(n, a):
        if (j, k) != (l, m):
            prod *= target - v
    return prod


def weights(n, a):
    vs = [v for _, _, v in nodes(n, a)]
    out = []
    for i, vi in enumerate(vs):
        p = mp.mpc(1)
        for j, vj in enumerate(vs):
            if i != j:
                p *= vi - vj
        out.append(1 / p)
    return out


def curve_sup(coeffs, exps, r, points=20000):
    best = mp.mpf(0)
    for s in range(points):
        t = r * mp.expjpi(mp.mpf(2 * s) / points)
        v = sum(c * mp.exp(e * t) for c, e in zip(coeffs, exps))
        best = max(best, abs(v))
    return best


def refine_sup(coeffs, exps, r, points=4096):
    """Grid max followed by a golden-section polish around the best angle."""
    def val(theta):
        t = r * mp.expj(theta)
        return abs(sum(c * mp.exp(e * t) for c, e in zip(coeffs, exps)))

    step = 2 * mp.pi / points
    best_theta = max((step * s for s in range(points)), key=val)
    lo, hi = best_theta - step, best_theta + step
    g = (mp.sqrt(5) - 1) / 2
    for _ in range(80):
        a_ = hi - g * (hi - lo)
        b_ = lo + g * (hi - lo)
        if val(a_) > val(b_):
            hi = b_
        else:
            lo = a_
    return val((lo + hi) / 2)


def f(x, digits=25):
    return mp.nstr(x, digits, min_fixed=-30, max_fixed=30)


def emit(name, value):
    print(f"inline constexpr double {name} = {f(value)};")


print("#pragma once")
print()
print("// Generated by tests/oracles/generate_oracles.py (mpmath, 60 digits). Do not edit.")
print()
print("namespace oracle {")
print()
print("struct BracketRow {")
print("    int n;")
print("    double re;")
print("    double im;")
print("    double lower;")
print("    double upper;")
print("};")
print()
print("inline constexpr BracketRow kTheoremBrackets[] = {")
for n in range(1, 6):
    for re, im in ALPHAS:
        lo, up = theorem_bounds(n, im)
        print(f"    {{{n}, {re}, {im}, {f(lo)}, {f(up)}}},")
print("};")
print()

a05 = alpha_of(0, 0.5)
a34 = alpha_of(0.3, 0.4)

emit("kLemmaExact_0_2_k2_a34", mp.fprod(abs(j - 2 * a34) for j in range(0, 3)))
emit("kLemmaExact_m1_1_k1_a05", mp.fprod(abs(j - 1 * a05) for j in range(-1, 2)))
emit("kLemmaLower_0_2_k2_a34", (mp.mpf(2) / (2 * mp.e)) ** 2 * abs(2 * mp.mpf("0.4")))
emit("kLemmaLower_5_7_k1_a05", (mp.mpf(2) / (2 * mp.e)) ** 2)

for m in (1, 2, 1000):
    emit(f"kStirling_{m}", mp.factorial(m) / ((mp.mpf(m) / mp.e) ** m * mp.sqrt(m)))
emit("kStirlingLimit", mp.sqrt(2 * mp.pi))
emit("kStirlingLow", mp.exp(mp.mpf(7) / 8))
emit("kHalfIntegerBound_3", (mp.mpf(3) / mp.e) ** 3)

# Products over the original (un-reindexed) ranges, n = 2, l = 0, m = 1.
n_, l_, m_ = 2, 0, 1
A1 = mp.fprod(abs(j - l_ - (m_ - k) * a05) for k in range(0, m_) for j in range(0, n_ - k + 1))
A2 = mp.fprod(abs(l_ - j - (k - m_) * a05) for k in range(m_ + 1, n_ + 1) for j in range(0, n_ - k + 1))
emit("kA1_n2_l0_m1_a05", A1)
emit("kA2_n2_l0_m1_a05", A2)
emit("kVietaSum_n1_t00_a05", abs(0.5j) + abs(1 + 0.5j) * 2 + 4)

emit("kCoeffLogUpper_n1_a05", mp.mpf("5.95") + mp.log(2))
emit("kCoeffLogUpper_n2_a05", 2 * mp.log(2) + mp.mpf("23.8") + 2 * mp.log(2))
emit("kCoeffLogUpper_n3_a01", mp.mpf("4.5") * mp.log(3) + mp.mpf("53.55") + 3 * mp.log(10))
emit("kBetaLogLower_n1_a05", -mp.mpf("2.25") + mp.log(mp.mpf("0.5")))
emit("kBetaLogLower_n2_a05", mp.mpf(-9))

for n in (1, 2, 4):
    N = big_n(n)
    emit(f"kProofFloor_n{n}", N * mp.log(mp.mpf(N) / n) - N)

print()
print("// ln|beta_lm| for n = 3, alpha = 0.3+0.4i, canonical target order.")
print("inline constexpr double kLogBeta_n3_a34[] = {")
for j, k, _ in nodes(3, a34):
    print(f"    {f(mp.log(abs(beta(3, j, k, a34))))},")
print("};")
print()

# Witness n=1, alpha=0.5i, normalized to max|c| = 1, and the norms that feed
# its lower bound at r = N/n = 2, evaluated on very fine grids with a local
# polish (no certification: these are the true sups to ~1e-15).
w = weights(1, a05)
scale = max(abs(c) for c in w)
wn = [c / scale for c in w]
exps = [v for _, _, v in nodes(1, a05)]
supK = refine_sup(wn, exps, 1)
supR = refine_sup(wn, exps, 2)
emit("kWitness1_supK", supK)
emit("kWitness1_supR2", supR)
emit("kWitness1_exactLower", mp.log(supR) - mp.log(supK) - 2)

# Witness n=2, alpha=0.3+0.4i: max relative power-sum residual is exactly 0
# in exact arithmetic; record sum c a^N for the unnormalized weights (=1).
w2 = weights(2, a34)
v2 = [v for _, _, v in nodes(2, a34)]
emit("kWitness2_leading_re", mp.re(sum(c * v ** 5 for c, v in zip(w2, v2))))

emit("kNormW_a05", mp.exp(mp.mpf("0.5")))
print()
print("}  // namespace oracle")
