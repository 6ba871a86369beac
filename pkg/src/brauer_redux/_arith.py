"""Small integer helpers shared by the other modules."""

from math import gcd, isqrt, lcm


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def factor(n: int) -> dict[int, int]:
    f: dict[int, int] = {}
    x = n
    q = 2
    while q * q <= x:
        while x % q == 0:
            f[q] = f.get(q, 0) + 1
            x //= q
        q = 3 if q == 2 else q + 2
    if x > 1:
        f[x] = f.get(x, 0) + 1
    return f


def divisors(n: int) -> list[int]:
    ds = [1]
    for q, e in factor(n).items():
        ds = [d * q**k for d in ds for k in range(e + 1)]
    return sorted(ds)


def split_prime_part(n: int, p: int) -> tuple[int, int]:
    """Return (p**v_p(n), n / p**v_p(n))."""
    pk = p ** vp(n, p)
    return pk, n // pk


def gcd_all(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, v)
    return out
