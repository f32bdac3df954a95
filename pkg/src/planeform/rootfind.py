"""Root extraction for monic stack polynomials.

Exact mode clears denominators so the polynomial has Gaussian-integer
coefficients; every root in Q(i) is then a Gaussian integer dividing the
constant term, and the divisors are enumerated from the Gaussian prime
factorisation. Numeric mode runs Aberth's simultaneous iteration at raised
working precision and groups the approximations into clusters.
"""

from __future__ import annotations

from math import lcm

import mpmath
from gmpy2 import mpq

from .arith import (
    DEFAULT_TOL,
    GaussianRational,
    MonicPoly,
    RootMultiset,
    exact,
)
from .errors import ClusterAmbiguityError, IrreducibleError

# Gaussian integers are plain (re, im) tuples of Python ints here.


def gi_mul(z, w):
    return (z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0])


def gi_norm(z):
    return z[0] * z[0] + z[1] * z[1]


def gi_exact_div(z, w):
    """``z / w`` if it is a Gaussian integer, else None."""
    n = gi_norm(w)
    re = z[0] * w[0] + z[1] * w[1]
    im = z[1] * w[0] - z[0] * w[1]
    if re % n or im % n:
        return None
    return (re // n, im // n)


def _round_div(a, b):
    # nearest integer to a/b for b > 0
    return (2 * a + b) // (2 * b)


def gi_gcd(z, w):
    while w != (0, 0):
        n = gi_norm(w)
        re = z[0] * w[0] + z[1] * w[1]
        im = z[1] * w[0] - z[0] * w[1]
        q = (_round_div(re, n), _round_div(im, n))
        qw = gi_mul(q, w)
        z, w = w, (z[0] - qw[0], z[1] - qw[1])
    return z


def _sqrt_minus_one(p):
    for c in range(2, p):
        t = pow(c, (p - 1) // 4, p)
        if t * t % p == p - 1:
            return t
    raise ArithmeticError(f"no square root of -1 modulo {p}")


def gaussian_primes_over(p: int) -> list:
    """Gaussian primes (up to units) lying over the rational prime ``p``."""
    if p == 2:
        return [(1, 1)]
    if p % 4 == 3:
        return [(p, 0)]
    pi = gi_gcd((p, 0), (_sqrt_minus_one(p), 1))
    return [pi, (pi[0], -pi[1])]


def gaussian_divisors(z) -> list:
    """All Gaussian-integer divisors of a nonzero ``z``, sorted by norm."""
    from sympy import factorint

    if z == (0, 0):
        raise ValueError("zero has infinitely many divisors")
    factors = []
    for p in factorint(gi_norm(z)):
        for pi in gaussian_primes_over(p):
            e, rest = 0, z
            while True:
                q = gi_exact_div(rest, pi)
                if q is None:
                    break
                e, rest = e + 1, q
            if e:
                factors.append((pi, e))
    divisors = [(1, 0)]
    for pi, e in factors:
        extended = []
        for d in divisors:
            power = (1, 0)
            for _ in range(e + 1):
                extended.append(gi_mul(d, power))
                power = gi_mul(power, pi)
        divisors = extended
    units = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    found = {gi_mul(d, u) for d in divisors for u in units}
    return sorted(found, key=lambda d: (gi_norm(d), d))


def _gi_eval(coeffs, z):
    acc = (0, 0)
    for c in reversed(coeffs):
        acc = gi_mul(acc, z)
        acc = (acc[0] + c[0], acc[1] + c[1])
    return acc


def _gi_deflate(coeffs, z):
    """Divide by (X - z); ``coeffs`` ascending and z a known root."""
    deg = len(coeffs) - 1
    out = [None] * deg
    carry = (0, 0)
    for k in range(deg, 0, -1):
        carry = (coeffs[k][0] + carry[0], coeffs[k][1] + carry[1])
        out[k - 1] = carry
        carry = gi_mul(carry, z)
    return out


def exact_roots(p: MonicPoly) -> RootMultiset:
    """Factor ``p`` completely over Q(i) or raise :class:`IrreducibleError`."""
    coeffs = [exact(c) for c in p.coefficients()]
    counts: dict = {}
    while len(coeffs) > 1 and not coeffs[0]:
        counts[GaussianRational(0)] = counts.get(GaussianRational(0), 0) + 1
        coeffs = coeffs[1:]
    deg = len(coeffs) - 1
    if deg:
        # substitute X = Y / D so that the scaled polynomial is monic over Z[i]
        den = lcm(*(int(c.re.denominator) for c in coeffs), *(int(c.im.denominator) for c in coeffs))
        scaled = []
        for k, c in enumerate(coeffs):
            f = den ** (deg - k)
            scaled.append((int(c.re * f), int(c.im * f)))
        for z in gaussian_divisors(scaled[0]):
            while len(scaled) > 1 and _gi_eval(scaled, z) == (0, 0):
                root = GaussianRational(mpq(z[0], den), mpq(z[1], den))
                counts[root] = counts.get(root, 0) + 1
                scaled = _gi_deflate(scaled, z)
            if len(scaled) == 1:
                break
        if len(scaled) > 1:
            raise IrreducibleError(
                f"a degree-{len(scaled) - 1} factor has no roots in Q(i); "
                "use numeric mode for this input"
            )
    return RootMultiset(tuple(counts.items()))


# -- numeric ---------------------------------------------------------------

def _working_dps(degree: int) -> int:
    # a k-fold root is only resolved to about eps_w**(1/k)
    return 20 + 10 * degree


def aberth(coeffs, dps: int | None = None, maxiter: int = 2000) -> list:
    """Simultaneous Aberth-Ehrlich iteration; ``coeffs`` ascending, monic.

    Returns mpmath complex approximations of all roots.
    """
    deg = len(coeffs) - 1
    if dps is None:
        dps = _working_dps(deg)
    with mpmath.workdps(dps):
        c = [_to_mpc(x) for x in coeffs]
        dc = [k * c[k] for k in range(1, deg + 1)]
        if deg == 1:
            return [-c[0]]
        center = -c[deg - 1] / deg
        radius = 1 + max(abs(x) for x in c[:-1])
        z = [center + radius * mpmath.expj(2 * mpmath.pi * k / deg + 0.4) for k in range(deg)]
        eps = mpmath.mpf(10) ** (-(dps - 5))
        best, stale = None, 0
        for _ in range(maxiter):
            biggest = mpmath.mpf(0)
            for k in range(deg):
                zk = z[k]
                pz = mpmath.polyval(c[::-1], zk)
                if pz == 0:
                    continue
                ratio = pz / mpmath.polyval(dc[::-1], zk)
                s = mpmath.mpc(0)
                for j in range(deg):
                    if j != k:
                        diff = zk - z[j]
                        if diff == 0:
                            diff = eps
                        s += 1 / diff
                w = ratio / (1 - ratio * s)
                z[k] = zk - w
                size = abs(w) / (1 + abs(z[k]))
                if size > biggest:
                    biggest = size
            if biggest <= eps:
                break
            # linear convergence near multiple roots stalls at the precision floor
            if best is None or biggest < best / 2:
                best, stale = biggest, 0
            else:
                stale += 1
                if stale >= 25:
                    break
        return z


def _to_mpc(x):
    if isinstance(x, GaussianRational):
        return mpmath.mpc(mpmath.mpf(x.re.numerator) / x.re.denominator,
                          mpmath.mpf(x.im.numerator) / x.im.denominator)
    return mpmath.mpc(complex(x))


def cluster(points: list, tol: float) -> list:
    """Group points whose distance is <= tol (union-find); returns lists of points.

    Two points left in different groups yet within 2*tol of each other make
    the grouping ambiguous.
    """
    order = sorted(range(len(points)), key=lambda k: (float(mpmath.re(points[k])),
                                                        float(mpmath.im(points[k]))))
    parent = list(range(len(points)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    near = []
    for a_pos, a in enumerate(order):
        for b in order[a_pos + 1:]:
            d = float(abs(points[a] - points[b]))
            if d <= tol:
                parent[find(a)] = find(b)
            elif d <= 2 * tol:
                near.append((a, b, d))
    for a, b, d in near:
        if find(a) != find(b):
            raise ClusterAmbiguityError(
                f"roots {complex(points[a])} and {complex(points[b])} are {d:.3g} apart, "
                f"inside the ambiguity band ({tol:g}, {2 * tol:g}]"
            )
    groups: dict = {}
    for k in order:
        groups.setdefault(find(k), []).append(points[k])
    return list(groups.values())


def numeric_roots(p: MonicPoly, tol: float = DEFAULT_TOL) -> RootMultiset:
    approximations = aberth(p.coefficients())
    entries = []
    for group in cluster(approximations, tol):
        mean = sum(group) / len(group)
        entries.append((complex(mean), len(group)))
    return RootMultiset(tuple(entries))


__all__ = [
    "aberth",
    "cluster",
    "exact_roots",
    "gaussian_divisors",
    "numeric_roots",
]
