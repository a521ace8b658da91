#!/usr/bin/env python3
"""Generate the water/steam property tables shipped under data/.

Implements the IAPWS-IF97 industrial formulation (regions 1, 2 and 4) and
samples it onto the CSV grids consumed by the library:

  data/saturation.csv   P,rho_w,rho_s,h_w,h_s,T_s         (saturation line)
  data/superheated.csv  P,h,rho                            (region-2 grid)

The superheated grid is boundary-fitted: for every pressure node the first
enthalpy row sits exactly on the saturation boundary and the remaining rows
share a fixed set of normalized offsets up to H_MAX.

Run from the repository root:  python3 tools/gen_steam_tables.py
"""

import math
import os
import sys

R = 0.461526e3  # J/(kg K), IF97 specific gas constant

# ---------------------------------------------------------------- region 4
N4 = [
    0.11670521452767e4, -0.72421316703206e6, -0.17073846940092e2,
    0.12020824702470e5, -0.32325550322333e7, 0.14915108613530e2,
    -0.48232657361591e4, 0.40511340542057e6, -0.23855557567849,
    0.65017534844798e3,
]


def tsat(p):
    """Saturation temperature [K] for pressure p [Pa]."""
    beta = (p / 1e6) ** 0.25
    e = beta * beta + N4[2] * beta + N4[5]
    f = N4[0] * beta * beta + N4[3] * beta + N4[6]
    g = N4[1] * beta * beta + N4[4] * beta + N4[7]
    d = 2.0 * g / (-f - math.sqrt(f * f - 4.0 * e * g))
    return 0.5 * (N4[9] + d - math.sqrt((N4[9] + d) ** 2 - 4.0 * (N4[8] + N4[9] * d)))


def psat(t):
    """Saturation pressure [Pa] for temperature t [K]."""
    v = t + N4[8] / (t - N4[9])
    a = v * v + N4[0] * v + N4[1]
    b = N4[2] * v * v + N4[3] * v + N4[4]
    c = N4[5] * v * v + N4[6] * v + N4[7]
    return 1e6 * (2.0 * c / (-b + math.sqrt(b * b - 4.0 * a * c))) ** 4


# ---------------------------------------------------------------- region 1
R1 = [
    (0, -2, 0.14632971213167), (0, -1, -0.84548187169114),
    (0, 0, -0.37563603672040e1), (0, 1, 0.33855169168385e1),
    (0, 2, -0.95791963387872), (0, 3, 0.15772038513228),
    (0, 4, -0.16616417199501e-1), (0, 5, 0.81214629983568e-3),
    (1, -9, 0.28319080123804e-3), (1, -7, -0.60706301565874e-3),
    (1, -1, -0.18990068218419e-1), (1, 0, -0.32529748770505e-1),
    (1, 1, -0.21841717175414e-1), (1, 3, -0.52838357969930e-4),
    (2, -3, -0.47184321073267e-3), (2, 0, -0.30001780793026e-3),
    (2, 1, 0.47661393906987e-4), (2, 3, -0.44141845330846e-5),
    (2, 17, -0.72694996297594e-15), (3, -4, -0.31679644845054e-4),
    (3, 0, -0.28270797985312e-5), (3, 6, -0.85205128120103e-9),
    (4, -5, -0.22425281908000e-5), (4, -2, -0.65171222895601e-6),
    (4, 10, -0.14341729937924e-12), (5, -8, -0.40516996860117e-6),
    (8, -11, -0.12734301741641e-8), (8, -6, -0.17424871230634e-9),
    (21, -29, -0.68762131295531e-18), (23, -31, 0.14478307828521e-19),
    (29, -38, 0.26335781662795e-22), (30, -39, -0.11947622640071e-22),
    (31, -40, 0.18228094581404e-23), (32, -41, -0.93537087292458e-25),
]


def region1_vh(t, p):
    """(v [m3/kg], h [J/kg]) of compressed/saturated liquid at (t, p)."""
    pi = p / 16.53e6
    tau = 1386.0 / t
    gp = 0.0  # d(gamma)/d(pi)
    gt = 0.0  # d(gamma)/d(tau)
    for i, j, n in R1:
        a = (7.1 - pi) ** i
        b = (tau - 1.222) ** j
        if i != 0:
            gp -= n * i * (7.1 - pi) ** (i - 1) * b
        if j != 0:
            gt += n * a * j * (tau - 1.222) ** (j - 1)
    v = R * t / p * pi * gp
    h = R * t * tau * gt
    return v, h


# ---------------------------------------------------------------- region 2
R2_IDEAL = [
    (0, -0.96927686500217e1), (1, 0.10086655968018e2),
    (-5, -0.56087911283020e-2), (-4, 0.71452738081455e-1),
    (-3, -0.40710498223928), (-2, 0.14240819171444e1),
    (-1, -0.43839511319450e1), (2, -0.28408632460772),
    (3, 0.21268463753307e-1),
]

R2_RES = [
    (1, 0, -0.17731742473213e-2), (1, 1, -0.17834862292358e-1),
    (1, 2, -0.45996013696365e-1), (1, 3, -0.57581259083432e-1),
    (1, 6, -0.50325278727930e-1), (2, 1, -0.33032641670203e-4),
    (2, 2, -0.18948987516315e-3), (2, 4, -0.39392777243355e-2),
    (2, 7, -0.43797295650573e-1), (2, 36, -0.26674547914087e-4),
    (3, 0, 0.20481737692309e-7), (3, 1, 0.43870667284435e-6),
    (3, 3, -0.32277677238570e-4), (3, 6, -0.15033924542148e-2),
    (3, 35, -0.40668253562649e-1), (4, 1, -0.78847309559367e-9),
    (4, 2, 0.12790717852285e-7), (4, 3, 0.48225372718507e-6),
    (5, 7, 0.22922076337661e-5), (6, 3, -0.16714766451061e-10),
    (6, 16, -0.21171472321355e-2), (6, 35, -0.23895741934104e2),
    (7, 0, -0.59059564324270e-17), (7, 11, -0.12621808899101e-5),
    (7, 25, -0.38946842435739e-1), (8, 8, 0.11256211360459e-10),
    (8, 36, -0.82311340897998e1), (9, 13, 0.19809712802088e-7),
    (10, 4, 0.10406965210174e-18), (10, 10, -0.10234747095929e-12),
    (10, 14, -0.10018179379511e-8), (16, 29, -0.80882908646985e-10),
    (16, 50, 0.10693031879409), (18, 57, -0.33662250574171),
    (20, 20, 0.89185845355421e-24), (20, 35, 0.30629316876232e-12),
    (20, 48, -0.42002467698208e-5), (21, 21, -0.59056029685639e-25),
    (22, 53, 0.37826947613457e-5), (23, 39, -0.12768608934681e-14),
    (24, 26, 0.73087610595061e-28), (24, 40, 0.55414715350778e-16),
    (24, 58, -0.94369707241210e-6),
]


def region2_vh(t, p):
    """(v [m3/kg], h [J/kg]) of steam at (t, p)."""
    pi = p / 1e6
    tau = 540.0 / t
    g0t = 0.0
    for j, n in R2_IDEAL:
        if j != 0:
            g0t += n * j * tau ** (j - 1)
    grp = 0.0
    grt = 0.0
    for i, j, n in R2_RES:
        grp += n * i * pi ** (i - 1) * (tau - 0.5) ** j
        if j != 0:
            grt += n * pi ** i * j * (tau - 0.5) ** (j - 1)
    v = R * t / p * (1.0 + pi * grp)
    h = R * t * tau * (1.0 / pi * 0.0 + g0t + grt)
    return v, h


def region2_t_from_ph(p, h):
    """Invert h = h2(T, p) for T by bisection (monotone in T)."""
    lo = tsat(p)
    hi = 1073.15
    flo = region2_vh(lo, p)[1] - h
    fhi = region2_vh(hi, p)[1] - h
    if flo > 0.0 or fhi < 0.0:
        raise ValueError(f"enthalpy {h} out of region-2 range at P={p}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if region2_vh(mid, p)[1] - h > 0.0:
            hi = mid
        else:
            lo = mid
        if hi - lo < 1e-10:
            break
    return 0.5 * (lo + hi)


# ------------------------------------------------------------- self checks
def _close(a, b, rtol):
    return abs(a - b) <= rtol * abs(b)


def self_check():
    # Release verification tables for regions 1, 2 and 4.
    checks = []
    v, h = region1_vh(300.0, 3e6)
    checks.append(_close(v, 0.100215168e-2, 1e-8))
    checks.append(_close(h, 0.115331273e6, 1e-8))
    v, h = region1_vh(300.0, 80e6)
    checks.append(_close(v, 0.971180894e-3, 1e-8))
    checks.append(_close(h, 0.184142828e6, 1e-8))
    v, h = region1_vh(500.0, 3e6)
    checks.append(_close(v, 0.120241800e-2, 1e-8))
    checks.append(_close(h, 0.975542239e6, 1e-8))
    v, h = region2_vh(300.0, 0.0035e6)
    checks.append(_close(v, 0.394913866e2, 1e-8))
    checks.append(_close(h, 0.254991145e7, 1e-8))
    v, h = region2_vh(700.0, 0.0035e6)
    checks.append(_close(v, 0.923015898e2, 1e-8))
    checks.append(_close(h, 0.333568375e7, 1e-8))
    v, h = region2_vh(700.0, 30e6)
    checks.append(_close(v, 0.542946619e-2, 1e-8))
    checks.append(_close(h, 0.263149474e7, 1e-8))
    checks.append(_close(psat(300.0), 0.353658941e4, 1e-8))
    checks.append(_close(psat(500.0), 0.263889776e7, 1e-8))
    checks.append(_close(psat(600.0), 0.123443146e8, 1e-8))
    checks.append(_close(tsat(0.1e6), 0.372755919e3, 1e-8))
    checks.append(_close(tsat(1e6), 0.453035632e3, 1e-8))
    checks.append(_close(tsat(10e6), 0.584149488e3, 1e-8))
    if not all(checks):
        raise SystemExit(f"IF97 self-check FAILED: {checks}")
    print("IF97 self-check passed (18/18 release verification values)")


# ------------------------------------------------------------------- grids
P_MIN = 0.1e6
P_MAX = 3.0e6
N_P = 60
H_MAX = 3.6e6

# Normalized enthalpy offsets above the saturation boundary; clustered near
# the boundary where the simulator operates.
SIGMA = [0.0, 0.004, 0.01, 0.02, 0.035, 0.055, 0.08, 0.11, 0.15, 0.20,
         0.26, 0.33, 0.41, 0.50, 0.60, 0.71, 0.84, 1.0]


def p_nodes():
    ratio = (P_MAX / P_MIN) ** (1.0 / (N_P - 1))
    return [P_MIN * ratio ** i for i in range(N_P)]


def saturation_row(p):
    t = tsat(p)
    vw, hw = region1_vh(t, p)
    vs, hs = region2_vh(t, p)
    return (p, 1.0 / vw, 1.0 / vs, hw, hs, t)


def main():
    self_check()
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    data = os.path.join(root, "data")
    os.makedirs(data, exist_ok=True)

    rows = [saturation_row(p) for p in p_nodes()]
    with open(os.path.join(data, "saturation.csv"), "w") as f:
        f.write("P,rho_w,rho_s,h_w,h_s,T_s\n")
        for r in rows:
            f.write(",".join(f"{x:.12e}" for x in r) + "\n")
    print(f"saturation.csv: {len(rows)} rows")

    count = 0
    with open(os.path.join(data, "superheated.csv"), "w") as f:
        f.write("P,h,rho\n")
        for p in p_nodes():
            hs = region2_vh(tsat(p), p)[1]
            for s in SIGMA:
                h = hs + s * (H_MAX - hs)
                t = tsat(p) if s == 0.0 else region2_t_from_ph(p, h)
                rho = 1.0 / region2_vh(t, p)[0]
                f.write(f"{p:.12e},{h:.12e},{rho:.12e}\n")
                count += 1
    print(f"superheated.csv: {count} rows ({N_P} x {len(SIGMA)})")

    # Reference prints for test anchoring.
    for p in (1.0e6, 1.65e6):
        r = saturation_row(p)
        print(f"P={p:.4g}: rho_w={r[1]:.7g} rho_s={r[2]:.7g} "
              f"h_w={r[3]:.7g} h_s={r[4]:.7g} T_s={r[5]:.7g}")
        print(f"        1/rho_w={1/r[1]:.6g} 1/rho_s={1/r[2]:.6g} "
              f"C3={(1/r[1]-1/r[2])/(r[4]-r[3]):.6g}")
    p = 1.65e6
    hs = region2_vh(tsat(p), p)[1]
    t = region2_t_from_ph(p, hs + 2e5)
    print(f"superheated (1.65 MPa, h_s+2e5): rho={1/region2_vh(t, p)[0]:.7g} "
          f"T={t:.6g}")


if __name__ == "__main__":
    sys.exit(main())
