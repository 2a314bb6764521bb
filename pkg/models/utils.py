"""Utility functions for the kappa toolkit.

This module contains helper functions used across the application:
- prime_factors / prime_factorization / is_prime: integer arithmetic on group orders
- lcm_all: least common multiple of cycle lengths and element orders
- bits_from_mask / mask_from_bits: bitset <-> numpy boolean mask conversion
- similarity_score / find_similar_strings: fuzzy name matching for typo suggestions
"""

from math import lcm

import numpy as np


def is_prime(n: int) -> bool:
    """Return True if n is a prime number (trial division; n is desk-scale)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factorization(n: int) -> dict[int, int]:
    """Factor a positive integer.

    Args:
        n: Positive integer

    Returns:
        Dict mapping each prime divisor to its exponent (empty for n == 1)
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_factors(n: int) -> list[int]:
    """Sorted list of distinct primes dividing n."""
    return sorted(prime_factorization(n))


def lcm_all(values) -> int:
    """Least common multiple of an iterable of positive integers (1 if empty)."""
    result = 1
    for v in values:
        result = lcm(result, v)
    return result


def bits_from_mask(mask: np.ndarray) -> int:
    """Pack a boolean mask into a Python integer bitset (bit i <-> mask[i])."""
    packed = np.packbits(mask.astype(np.uint8), bitorder='little')
    return int.from_bytes(packed.tobytes(), 'little')


def mask_from_bits(bits: int, size: int) -> np.ndarray:
    """Unpack an integer bitset into a boolean mask of the given length."""
    nbytes = (size + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, 'little'), dtype=np.uint8)
    return np.unpackbits(raw, bitorder='little')[:size].astype(bool)


def similarity_score(s1: str, s2: str) -> int:
    """Score how closely two names match, case-insensitively.

    100 for equal names, 80 when one is a prefix of the other, 60 for a
    substring. Otherwise up to 50 in proportion to the greedy in-order
    character matches of s1 within s2, with scores of 20 or less dropped to 0.
    """
    a, b = s1.lower(), s2.lower()
    if a == b:
        return 100
    if a.startswith(b) or b.startswith(a):
        return 80
    if a in b or b in a:
        return 60

    remaining = iter(b)
    matches = sum(1 for char in a if char in remaining)
    score = int(matches / max(len(a), len(b)) * 50)
    return score if score > 20 else 0


def find_similar_strings(target: str, candidates: list[str], limit: int = 5, threshold: float = 0.0) -> list[str]:
    """Candidates scoring above threshold against target, best first."""
    scored = ((similarity_score(target, c), c) for c in candidates)
    ranked = sorted((pair for pair in scored if pair[0] > threshold), key=lambda pair: pair[0], reverse=True)
    return [c for _, c in ranked[:limit]]
