# Independent high-precision evaluation of the RDDI coefficients and derived
# operating-point numbers. Frozen outputs are pasted into the C++ tests.
import mpmath as mp

mp.mp.dps = 40


def rddi(zeta, theta=mp.pi / 2, gamma=1):
    zeta = mp.mpf(zeta)
    c2 = mp.cos(theta) ** 2
    delta = mp.mpf(3) * gamma / 4 * (
        -(1 - c2) * mp.cos(zeta) / zeta
        + (1 - 3 * c2) * (mp.sin(zeta) / zeta**2 + mp.cos(zeta) / zeta**3))
    g12 = mp.mpf(3) * gamma / 2 * (
        (1 - c2) * mp.sin(zeta) / zeta
        + (1 - 3 * c2) * (mp.cos(zeta) / zeta**2 - mp.sin(zeta) / zeta**3))
    return delta, g12


if __name__ == "__main__":
    for z, th in [("0.033", mp.pi / 2), ("0.1", mp.pi / 2), ("0.001", mp.pi / 2),
                  ("0.0005", mp.pi / 2), ("0.5", mp.pi / 3), ("1000", mp.pi / 2),
                  ("0.05", mp.mpf("0.3"))]:
        d, g = rddi(mp.mpf(z), th)
        print(f"zeta={z} theta={mp.nstr(th, 6)} delta={mp.nstr(d, 17)} "
              f"gamma12={mp.nstr(g, 17)} gamma_minus={mp.nstr(1 - g, 17)}")
    z = mp.mpf("0.033")
    x = z
    om = 300 / mp.sqrt(2) * (1 - mp.expj(-x))
    op = 300 / mp.sqrt(2) * (1 + mp.expj(-x))
    print("omega_minus(|Omega|=300)", om, abs(om))
    print("omega_plus(|Omega|=300)", op, abs(op))
    print("omega_minus(|Omega|=1)", om / 300, "omega_plus", op / 300)
    d, g = rddi(z)
    print("Gamma_G(300)", (1 + g) * abs(op) ** 2 / (2 * d) ** 2)
    # stationary point of A/W + B W for the printed rotation budget
    A = mp.pi * z / (5 * mp.sqrt(2))
    B = 8 * mp.sqrt(2) * mp.pi * z**5 / 9
    print("rotation stationary", mp.sqrt(A / B), "min", 2 * mp.sqrt(A * B))
    xi = mp.mpf("0.1")
    A = 2 * mp.pi * xi / 5
    B = 16 * mp.pi * xi**5 / 9
    print("cphase stationary", mp.sqrt(A / B), "min", 2 * mp.sqrt(A * B),
          "at50", A / 50 + B * 50)
    zr = mp.mpf("0.033")
    print("delta_e", 300**2 / abs(om), "P_e", mp.pi / (2 * 300**2 / abs(om)))
