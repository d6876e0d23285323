#!/usr/bin/env python3
"""Regenerate the high-precision golden files under crates/core/data/.

Values are computed with mpmath at 40 significant digits and stored as
mantissa * exp(exponent) with an integer exponent = floor(ln |value|).
"""
import os
import sys

import mpmath as mp

mp.mp.dps = 40
HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "crates", "core", "data")


def split(v):
    v = mp.mpf(v)
    if v == 0:
        return "0", "0"
    e = int(mp.floor(mp.log(abs(v))))
    m = v / mp.exp(e)
    return mp.nstr(m, 25, strip_zeros=False), str(e)


def specfun_rows():
    xs = ["0.01", "0.5", "2", "10", "30", "50", "200", "1000"]
    for nu in ["-1.25", "-0.5", "-0.25", "0", "0.5", "1", "2.5", "5", "10"]:
        for x in xs:
            yield "struve_l", nu, x, mp.struvel(mp.mpf(nu), mp.mpf(x))
    for nu in ["-1", "-0.5", "-0.25", "0", "0.5", "1", "2.5", "5", "10"]:
        for x in xs:
            yield "bessel_i", nu, x, mp.besseli(mp.mpf(nu), mp.mpf(x))
    for nu in ["0", "0.5", "1", "2.5", "5", "12.5"]:
        for x in ["0.001", "0.1", "1", "5", "30", "100", "1000"]:
            yield "bessel_k", nu, x, mp.besselk(mp.mpf(nu), mp.mpf(x))
    for a in ["0.5", "1", "2.5", "10", "50", "200"]:
        for x in ["0.1", "1", "5", "20", "100", "400"]:
            yield "lower_gamma", a, x, mp.gammainc(mp.mpf(a), 0, mp.mpf(x))
    for x in ["0.1", "0.5", "1", "1.5", "2.5", "7.3", "20", "50", "170.5"]:
        yield "gamma", "0", x, mp.gamma(mp.mpf(x))


def integrand(kind, nu, beta):
    order = nu if kind == "F" else nu + 1
    return lambda t: mp.exp(-beta * t) * t**nu * mp.struvel(order, t)


def termwise(kind, nu, beta, x):
    """Integrates the Struve series term by term; each term is an exact
    incomplete gamma (or a monomial at beta = 0)."""
    mu = nu if kind == "F" else nu + 1
    total, k = mp.mpf(0), 0
    while True:
        p = nu + mu + 2 * k + 2
        if beta == 0:
            piece = x ** p / p
        else:
            piece = beta ** (-p) * mp.gammainc(p, 0, beta * x)
        term = piece / (mp.mpf(2) ** (mu + 2 * k + 1) * mp.gamma(k + mp.mpf(3) / 2) * mp.gamma(k + mu + mp.mpf(3) / 2))
        total += term
        if k > x and term < total * mp.mpf(10) ** (-mp.mp.dps):
            return total
        k += 1


def checked(kind, nu, beta, x, pts):
    exact = termwise(kind, nu, beta, x)
    by_quad = mp.quad(integrand(kind, nu, beta), pts)
    gap = abs(by_quad / exact - 1)
    if gap > mp.mpf("1e-12"):
        print(f"note: quad differs from series by {mp.nstr(gap, 3)} at {kind} {nu} {beta} {x}", file=sys.stderr)
    return exact


def integral_rows():
    for kind in ["F", "G"]:
        for nu in ["-0.9", "-0.49", "0", "1", "2.5", "10"]:
            for beta in ["0", "0.25", "0.5", "1"]:
                for x in ["0.5", "5", "25"]:
                    n, b, xx = mp.mpf(nu), mp.mpf(beta), mp.mpf(x)
                    pts = [xx * mp.mpf(i) / 8 for i in range(9)]
                    yield kind, nu, beta, x, checked(kind, n, b, xx, pts)
    for nu in ["0", "1", "5"]:
        for beta in ["0.25", "0.5", "0.75"]:
            for x in ["400", "1000"]:
                n, b, xx = mp.mpf(nu), mp.mpf(beta), mp.mpf(x)
                pts = [mp.mpf(0), xx / 2] + [xx - 40 + 4 * i for i in range(11)]
                yield "F", nu, beta, x, checked("F", n, b, xx, pts)


def main():
    # `gen_golden.py integrals` regenerates only the integral file
    if sys.argv[1:] != ["integrals"]:
        with open(os.path.join(DATA, "specfun_golden.csv"), "w") as f:
            f.write("function,nu,x,value_mantissa,value_exponent\n")
            for name, nu, x, v in specfun_rows():
                m, e = split(v)
                f.write(f"{name},{nu},{x},{m},{e}\n")
    with open(os.path.join(DATA, "integral_golden.csv"), "w") as f:
        f.write("kind,nu,beta,x,value_mantissa,value_exponent\n")
        for kind, nu, beta, x, v in integral_rows():
            m, e = split(v)
            f.write(f"{kind},{nu},{beta},{x},{m},{e}\n")


if __name__ == "__main__":
    main()
