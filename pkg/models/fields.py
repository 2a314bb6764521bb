"""Small finite fields for building linear groups.

Elements of GF(p^k) are encoded as integers 0..q-1 whose base-p digits are
polynomial coefficients (constant term first), reduced modulo the least monic
irreducible polynomial of degree k. For GF(4) that is x^2+x+1 and for GF(9)
it is x^2+1, so 3 encodes i in GF(9) = GF(3)[i].
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product

import numpy as np

from models.utils import prime_factorization


def _digits(value: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(value % p)
        value //= p
    return out


def _encode(coeffs, p: int) -> int:
    return sum(int(c) * p ** i for i, c in enumerate(coeffs))


def _poly_mod(coeffs: list[int], modulus: list[int], p: int) -> list[int]:
    """Remainder of a polynomial modulo a monic polynomial, coefficients mod p."""
    coeffs = [c % p for c in coeffs]
    k = len(modulus) - 1
    for top in range(len(coeffs) - 1, k - 1, -1):
        c = coeffs[top]
        if c:
            for i, m in enumerate(modulus):
                coeffs[top - k + i] = (coeffs[top - k + i] - c * m) % p
    return (coeffs + [0] * k)[:k]


def _has_factor(modulus: list[int], p: int) -> bool:
    k = len(modulus) - 1
    for degree in range(1, k // 2 + 1):
        for low in product(range(p), repeat=degree):
            divisor = list(low) + [1]
            if not any(_poly_mod(modulus, divisor, p)):
                return True
    return False


def irreducible_polynomial(p: int, k: int) -> list[int]:
    """Least monic irreducible polynomial of degree k over GF(p), constant term first."""
    for code in range(p ** k):
        candidate = _digits(code, p, k) + [1]
        if not _has_factor(candidate, p):
            return candidate
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True, eq=False)
class GaloisField:
    """The field with q elements, q a prime power."""

    q: int

    def __post_init__(self):
        factors = prime_factorization(self.q) if self.q > 1 else {}
        if len(factors) != 1:
            raise ValueError(f"field order must be a prime power, got {self.q}")

    @cached_property
    def characteristic(self) -> int:
        return next(iter(prime_factorization(self.q)))

    @cached_property
    def degree(self) -> int:
        return prime_factorization(self.q)[self.characteristic]

    @cached_property
    def modulus(self) -> list[int]:
        return irreducible_polynomial(self.characteristic, self.degree)

    @cached_property
    def add_table(self) -> np.ndarray:
        p, k = self.characteristic, self.degree
        digits = np.array([_digits(x, p, k) for x in range(self.q)], dtype=np.int64)
        weights = p ** np.arange(k)
        sums = (digits[:, None, :] + digits[None, :, :]) % p
        return sums @ weights

    @cached_property
    def mul_table(self) -> np.ndarray:
        p, k = self.characteristic, self.degree
        table = np.zeros((self.q, self.q), dtype=np.int64)
        for a in range(self.q):
            da = _digits(a, p, k)
            for b in range(a, self.q):
                db = _digits(b, p, k)
                raw = [0] * (2 * k - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        raw[i + j] += x * y
                table[a, b] = table[b, a] = _encode(_poly_mod(raw, self.modulus, p), p)
        return table

    @cached_property
    def negatives(self) -> np.ndarray:
        return np.argmax(self.add_table == 0, axis=1)

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.zeros(self.q, dtype=np.int64)
        inv[1:] = np.argmax(self.mul_table[1:] == 1, axis=1)
        return inv

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def additive_basis(self) -> list[int]:
        """1, x, x^2, ... as encoded elements."""
        return [self.characteristic ** i for i in range(self.degree)]

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.negatives[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.negatives[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return int(self.inverses[a])

    def __str__(self) -> str:
        return f"GF({self.q})"
