"""Shared integer-arithmetic helpers: sieves, Kronecker symbol, squarefree kernels."""

from __future__ import annotations

import numpy as np


def prime_sieve(limit: int) -> np.ndarray:
    """All primes <= limit as an int64 array."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


def smallest_prime_factors(limit: int) -> np.ndarray:
    """spf[n] = smallest prime factor of n (spf[0] = spf[1] = 0)."""
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, limit + 1):
        if spf[p] == 0:
            spf[p::p] = np.where(spf[p::p] == 0, p, spf[p::p])
    return spf


def squarefree_mask(limit: int) -> np.ndarray:
    """mask[n] true iff n is squarefree, for 0 <= n <= limit (mask[0] false)."""
    mask = np.ones(limit + 1, dtype=bool)
    mask[0] = False
    p = 2
    while p * p <= limit:
        mask[p * p :: p * p] = False
        p += 1
    return mask


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        while n % d == 0:
            n //= d
        d += 1
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for the sizes this package meets."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_kernel(n: int) -> tuple[int, int]:
    """Write n = k * s^2 with k squarefree (k keeps the sign of n). Returns (k, s)."""
    if n == 0:
        raise ValueError("0 has no squarefree kernel")
    sign = -1 if n < 0 else 1
    k, s = 1, 1
    for p, e in factorize(n).items():
        if e % 2:
            k *= p
        s *= p ** (e // 2)
    return sign * k, s


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol (d|n), fully extended to all integers n (including n <= 0, 2|n)."""
    if n == 0:
        return 1 if d in (1, -1) else 0
    if d % 2 == 0 and n % 2 == 0:
        return 0
    result = 1
    if n < 0:
        n = -n
        if d < 0:
            result = -result
    tz = 0
    while n % 2 == 0:
        n //= 2
        tz += 1
    if tz % 2 == 1 and d % 8 in (3, 5):
        result = -result
    # n odd positive from here; Jacobi-style loop, top may be negative or even
    a = d % n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def quadratic_residue_table(q: int) -> np.ndarray:
    """Legendre values (n|q) for n = 0..q-1 at an odd prime q, as int8."""
    table = np.full(q, -1, dtype=np.int8)
    idx = (np.arange(q, dtype=np.int64) ** 2) % q
    table[idx] = 1
    table[0] = 0
    return table


# (2|n) for odd n by n mod 8, zero on even n
_TWO_TABLE = np.array([0, 1, 0, -1, 0, -1, 0, 1], dtype=np.int8)
# (-1)^((n-1)/2) for odd n, zero placeholder on even slots
_SIGN_TABLE = np.array([0, 1, 0, -1], dtype=np.int8)


def character_values(d: int, limit: int) -> np.ndarray:
    """chi_d(n) = kronecker(d, n) for n = 0..limit as an int8 array.

    Bulk path used by the twist scans; supports d = 1 mod 4 and d = 0 mod 4
    (every quadratic-field discriminant falls in one of these classes, as do
    squares times discriminants).  For d = 2, 3 mod 4 only the scalar
    kronecker() is available.
    """
    if d == 0:
        raise ValueError("d must be nonzero")
    n = np.arange(0, limit + 1, dtype=np.int64)
    if d % 4 not in (0, 1):
        raise ValueError("bulk character needs d = 0 or 1 mod 4; use kronecker() pointwise")

    k, s = squarefree_kernel(d)
    chi = np.ones(limit + 1, dtype=np.int8)
    if d % 4 == 0:
        # (4|n) contributes an odd-n indicator; remaining top factor is k*(s/2)^2-ish:
        # peel a single factor 4 and recurse on the odd/even structure below.
        chi[0::2] = 0
    # square part zeroes n sharing a prime with s
    for p in factorize(s):
        if p == 2:
            continue  # handled by the even-n mask when d = 0 mod 4
        chi[::p] = 0
    # factor k = (+-1) * 2^f * (odd squarefree part)
    kk = k
    if kk % 2 == 0:
        chi = chi * _TWO_TABLE[n % 8]
        kk //= 2
    # kk odd (possibly negative); use (kk|n) = (n | |kk|) * (-1)^(eps*(n-1)/2) on odd n,
    # with eps = ((|kk|-1)/2 + [kk<0]) mod 2 by quadratic reciprocity.
    eps = ((abs(kk) - 1) // 2 + (1 if kk < 0 else 0)) % 2
    if eps:
        if d % 4 != 0:
            raise ValueError("bulk character needs d = 0 or 1 mod 4")  # d odd = 3 mod 4
        chi = chi * _SIGN_TABLE[n % 4]
    for q in factorize(abs(kk)):
        chi = chi * quadratic_residue_table(q)[n % q]
    chi[0] = 1 if d in (1, -1) else 0
    return chi
