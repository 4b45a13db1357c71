"""Number-theoretic helpers: factorization, primitive prime divisors, screens.

A prime p is a primitive prime divisor of q^n - 1 if p divides q^n - 1 but
divides no q^i - 1 with 1 <= i < n.  Zsigmondy's theorem says such a prime
exists except in a short list of cases; `primitive_prime_divisors` reports
the primes together with an exception flag for the empty cases.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

_UINT_LIMIT = 2**63


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: multiplicity}. Trial division + Pollard rho."""
    if n == 0:
        raise ValueError("cannot factorize 0")
    if n < 0 or n > _UINT_LIMIT:
        raise ValueError("argument out of supported range")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    rng = random.Random(0xA11A)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return sorted(ds)


@dataclass(frozen=True)
class PpdResult:
    q: int
    n: int
    primes: frozenset[int]
    is_zsigmondy_exception: bool


def primitive_prime_divisors(q: int, n: int) -> PpdResult:
    """Primes dividing q^n - 1 but no smaller q^i - 1, with exception flag."""
    if q < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")
    if q**n > _UINT_LIMIT:
        raise ValueError("q^n exceeds the 64-bit range")
    target = q**n - 1
    primes = set()
    for p in factorize(target):
        # ord_p(q) divides n; p is primitive iff no proper divisor of n works
        if all(pow(q, d, p) != 1 for d in divisors(n) if d < n):
            primes.add(p)
    exception = False
    if not primes:
        if n == 1 and q == 2:
            exception = True
        elif n == 2:
            m = q + 1
            exception = m & (m - 1) == 0
        elif (q, n) == (2, 6):
            exception = True
    return PpdResult(q, n, frozenset(primes), exception)


def degree_divisibility_screen(group_order: int, m: int) -> bool:
    """Necessary condition for a transitive action of degree m: m | group order."""
    if group_order < 1 or m < 1:
        raise ValueError("arguments must be positive")
    return group_order % m == 0
