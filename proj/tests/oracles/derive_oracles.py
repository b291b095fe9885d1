"""Independent high-precision oracle values, frozen into oracle_values.hpp.

Run from the repository root:  python3 tests/oracles/derive_oracles.py
Everything here is computed with mpmath quadrature and root finding, never
with the closed forms used by the C++ library.
"""

import mpmath as mp

mp.mp.dps = 30


def arcsine01_mean(f):
    # t = sin^2(theta) turns the arcsine law on [0,1] into uniform theta on [0, pi/2]
    return mp.quad(lambda th: f(mp.sin(th) ** 2), [0, mp.pi / 2]) * 2 / mp.pi


def arcsine_sym_mean(f):
    return mp.quad(lambda th: f(mp.cos(th)), [0, mp.pi / 2, mp.pi]) / mp.pi


def psi_of(mean):
    return lambda z: mean(lambda t: t * z / (1 - t * z))


def s_value(psi, w, z_lo, z_hi):
    """S(w) = chi(w) (1 + w) / w with chi the inverse of psi, by bisection."""
    lo, hi = mp.mpf(z_lo), mp.mpf(z_hi)
    for _ in range(110):
        mid = (lo + hi) / 2
        if psi(mid) < w:
            lo = mid
        else:
            hi = mid
    z = (lo + hi) / 2
    return z * (1 + w) / w


def two_atom_mean(a, b):
    return lambda f: (f(mp.mpf(a)) + f(mp.mpf(b))) / 2


def radial_pairs(psi, z_lo, ts):
    """(t, s(t)) with s = S(t - 1)^(-1/2)."""
    out = []
    for t in ts:
        s = s_value(psi, mp.mpf(t) - 1, z_lo, 0)
        out.append((t, 1 / mp.sqrt(s)))
    return out


def fmt(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-3, max_fixed=3)


lines = [
    "// Generated by tests/oracles/derive_oracles.py. Do not edit.",
    "#pragma once",
    "",
    "#include <array>",
    "#include <utility>",
    "",
    "namespace oracle {",
    "",
]


def scalar(name, value):
    lines.append(f"inline constexpr double {name} = {fmt(value)};")


def pairs(name, values):
    lines.append(f"inline constexpr std::array<std::pair<double, double>, {len(values)}> {name} = {{{{")
    for a, b in values:
        lines.append(f"    {{{fmt(a)}, {fmt(b)}}},")
    lines.append("}};")


# moments
for k in (1, 2, 3, 4):
    scalar(f"arcsine01_moment_{k}", arcsine01_mean(lambda t, k=k: t ** k))
scalar("arcsine_sym_moment_2", arcsine_sym_mean(lambda t: t ** 2))
scalar("arcsine_sym_moment_4", arcsine_sym_mean(lambda t: t ** 4))
scalar("arcsine01_one_eighth", arcsine01_mean(lambda t: t * (1 - t)))

# psi
scalar("psi_half_atoms_at_half", psi_of(two_atom_mean(0, 1))(mp.mpf(1) / 2))
scalar("psi_arcsine01_at_minus_one", psi_of(arcsine01_mean)(-1))

# S-transforms by numeric inversion
ws = [-mp.mpf(k) / 21 for k in range(1, 21)]
psi_arc = psi_of(arcsine01_mean)
pairs("s_arcsine01", [(w, s_value(psi_arc, w, -1e6, 0)) for w in ws])
psi_14 = psi_of(two_atom_mean(1, 4))
pairs("s_two_atom_1_4", [(w, s_value(psi_14, w, -1e6, 0)) for w in ws])
psi_q4 = psi_of(two_atom_mean(mp.mpf(1) / 4, 4))
pairs("s_two_atom_quarter_4", [(w, s_value(psi_q4, w, -1e6, 0)) for w in ws])

# radial law of the nilpotent sum: integrate (1/pi)(1-r^2)^-2 against r dr dtheta
edge = 1 / mp.sqrt(2)
ss = [edge * k / 10 for k in range(1, 10)]
pairs("nilpotent_sum_cdf", [(s, mp.quad(lambda r: 2 * r / (1 - r * r) ** 2, [0, s])) for s in ss])

ts = [mp.mpf(k) / 20 for k in range(1, 20)]
# Haagerup-Larsen radii of 1/2(delta_1 + delta_4), as (t, s(t))
pairs("radial_two_atom_1_4", radial_pairs(psi_14, -1e6, ts))


# law of t(1-t), t arcsine on [0,1]
def product_law_mean(f):
    return arcsine01_mean(lambda t: f(t * (1 - t)))


pairs("radial_arcsine_product", radial_pairs(psi_of(product_law_mean), -1e6, ts))

# h = |x|, x arcsine on [-1, 1]
hm = []
for a in range(0, 5):
    for b in range(0, 5):
        hm.append((a * 10 + b, arcsine_sym_mean(lambda x, a=a, b=b: abs(x) ** a * (1 - x * x) ** (mp.mpf(b) / 2))))
pairs("h_moments", hm)


# log potential of the nilpotent-sum law by brute-force planar quadrature
def planar_log_potential(lam):
    dens = lambda r: 2 * r / (1 - r * r) ** 2 / (2 * mp.pi)
    inner = lambda r: mp.quad(lambda th: mp.log(abs(r * mp.expj(th) - lam)), [0, mp.pi, 2 * mp.pi])
    pts = [0, edge] if abs(lam) == 0 or abs(lam) >= edge else [0, abs(lam), edge]
    return mp.quad(lambda r: dens(r) * inner(r), pts)


pairs("nilpotent_sum_log_potential", [(lam, planar_log_potential(mp.mpf(lam))) for lam in (0.0, 0.3, 0.5, 1.0)])

# cardioid boundary at c = 2, theta = 0
scalar("cardioid_c2_small", (4 - mp.sqrt(12)) / 2)
scalar("cardioid_c2_big", (4 + mp.sqrt(12)) / 2)

lines += ["", "}  // namespace oracle", ""]
with open("tests/oracle_values.hpp", "w") as fh:
    fh.write("\n".join(lines))
print("wrote tests/oracle_values.hpp")
