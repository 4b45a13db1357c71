"""Small finite fields GF(p^k) and dense linear algebra mod p.

Fields are tiny (p^k <= a few hundred); elements are integers 0..p^k-1
encoding polynomial coefficient vectors base p.  Matrices are numpy int
arrays reduced mod p.
"""

from __future__ import annotations

import numpy as np

_IRREDUCIBLE = {
    (2, 2): (1, 1, 1),          # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),       # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),    # x^4 + x + 1
    (3, 2): (2, 1, 1),          # x^2 + x + 2
    (3, 3): (1, 2, 0, 1),       # x^3 + 2x + 1
}


class SmallField:
    """GF(p^k) with multiplication via log/antilog tables."""

    def __init__(self, p: int, k: int = 1):
        self.p = p
        self.k = k
        self.size = p**k
        if k == 1:
            self.modulus = None
        else:
            try:
                self.modulus = _IRREDUCIBLE[(p, k)]
            except KeyError:
                raise ValueError(f"no modulus table entry for GF({p}^{k})")
        self._build_tables()

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _undigits(self, ds) -> int:
        a = 0
        for d in reversed(ds):
            a = a * self.p + d
        return a

    def add(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        return self._undigits([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def _poly_mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce by modulus
        mod = self.modulus
        for i in range(2 * self.k - 1, self.k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.k):
                    prod[i - self.k + j] = (prod[i - self.k + j] - c * mod[j]) % self.p
        return self._undigits(prod[: self.k])

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]

    def _build_tables(self):
        if self.k == 1:
            g = self._find_primitive_prime()
            self.generator = g
            return
        # find a generator by brute force
        for g in range(2, self.size):
            seen = set()
            x = 1
            for _ in range(self.size - 1):
                seen.add(x)
                x = self._poly_mul(x, g)
            if len(seen) == self.size - 1:
                self.generator = g
                break
        else:
            raise RuntimeError("no field generator found")
        self._exp = [1] * (self.size - 1)
        self._log = [0] * self.size
        x = 1
        for i in range(self.size - 1):
            self._exp[i] = x
            self._log[x] = i
            x = self._poly_mul(x, self.generator)

    def _find_primitive_prime(self) -> int:
        for g in range(2, self.p):
            x, seen = 1, set()
            for _ in range(self.p - 1):
                x = x * g % self.p
                seen.add(x)
            if len(seen) == self.p - 1:
                return g
        return 1

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("field inverse of 0")
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.size - 1 - self._log[a]) % (self.size - 1)]

    def pow(self, a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def elements(self) -> range:
        return range(self.size)

    def as_vector(self, a: int) -> list[int]:
        """Coefficient vector over GF(p), lowest degree first."""
        return self._digits(a)

    def from_vector(self, v) -> int:
        return self._undigits(list(v))


# --- matrices over GF(p) ----------------------------------------------------


def mat(p: int, rows) -> np.ndarray:
    return np.array(rows, dtype=np.int64) % p


def mat_mul(p: int, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a @ b) % p


def mat_pow(p: int, a: np.ndarray, n: int) -> np.ndarray:
    r = np.eye(a.shape[0], dtype=np.int64)
    while n:
        if n & 1:
            r = mat_mul(p, r, a)
        a = mat_mul(p, a, a)
        n >>= 1
    return r


def mat_order(p: int, a: np.ndarray, cap: int = 10**6) -> int:
    e = np.eye(a.shape[0], dtype=np.int64)
    x = a % p
    for n in range(1, cap + 1):
        if (x == e).all():
            return n
        x = mat_mul(p, x, a)
    raise RuntimeError("matrix order exceeds cap")


def mat_inv(p: int, a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    aug = np.concatenate([a % p, np.eye(n, dtype=np.int64)], axis=1)
    row = 0
    for col in range(n):
        piv = None
        for r in range(row, n):
            if aug[r, col] % p:
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular")
        aug[[row, piv]] = aug[[piv, row]]
        aug[row] = aug[row] * pow(int(aug[row, col]), p - 2, p) % p
        for r in range(n):
            if r != row and aug[r, col]:
                aug[r] = (aug[r] - aug[r, col] * aug[row]) % p
        row += 1
    return aug[:, n:] % p


def is_invertible(p: int, a: np.ndarray) -> bool:
    try:
        mat_inv(p, a)
        return True
    except ValueError:
        return False


def nullspace(p: int, a: np.ndarray) -> np.ndarray:
    """Basis (rows) of the right nullspace of a over GF(p)."""
    m = (a % p).copy()
    rows, cols = m.shape
    pivots = []
    row = 0
    for col in range(cols):
        piv = None
        for r in range(row, rows):
            if m[r, col] % p:
                piv = r
                break
        if piv is None:
            continue
        m[[row, piv]] = m[[piv, row]]
        m[row] = m[row] * pow(int(m[row, col]), p - 2, p) % p
        for r in range(rows):
            if r != row and m[r, col]:
                m[r] = (m[r] - m[r, col] * m[row]) % p
        pivots.append(col)
        row += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = np.zeros(cols, dtype=np.int64)
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-m[r, fc]) % p
        basis.append(v % p)
    return np.array(basis, dtype=np.int64) if basis else np.zeros((0, cols), dtype=np.int64)
