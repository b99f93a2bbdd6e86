"""Which odd orders n are known to admit an ODC of K_n by Hamiltonian paths.

Two decision procedures are implemented.  The *product criterion* certifies
n = base * q_1 * ... * q_r where the base is a previously-known order (one of
three quadratic forms or a sporadic list) and every q_i is a qualifying prime
power congruent to 1 mod 4.  The *prime-complement criterion* holds whenever
2n+1 is prime, in which case the discrete-log construction in this package
produces a cover directly.  An order is *new* when only the second criterion
applies: the discrete-log route certifies it and the product criterion does
not.

Verdicts never assert non-existence; "not covered" means not covered by
these criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from . import modnum

SPORADIC_BASES = frozenset({3, 7, 11, 15, 19, 21, 33, 57, 69, 77, 93})

# Strict bound for the small-prime factor rule: primes below 10**5 qualify.
SMALL_PRIME_BOUND = 10**5

HALF_SQUARE_PLUS = "half-square-plus"  # (k^2+1)/2
SQUARE = "square"  # k^2
SQUARE_PLUS = "square-plus"  # k^2+1
SPORADIC = "sporadic"
SMALL_PRIME_1MOD4 = "small-prime-1mod4"


@dataclass(frozen=True)
class FormTag:
    """Why a number qualifies: the matched form and its witnessing integer.

    witness is the k of the matched quadratic form, or the value itself for
    sporadic / small-prime matches.
    """

    kind: str
    witness: int


def _form_tag(v: int) -> FormTag | None:
    """First quadratic-form match among (k^2+1)/2, k^2, k^2+1 with k >= 1."""
    k = isqrt(2 * v - 1)
    if k >= 1 and k * k == 2 * v - 1:
        return FormTag(HALF_SQUARE_PLUS, k)
    k = isqrt(v)
    if k >= 1 and k * k == v:
        return FormTag(SQUARE, k)
    k = isqrt(v - 1) if v >= 1 else 0
    if k >= 1 and k * k == v - 1:
        return FormTag(SQUARE_PLUS, k)
    return None


def qualifies_base(a: int) -> FormTag | None:
    """Tag for an odd base order with a previously-known cover; None otherwise.

    Match order: the three quadratic forms, then the sporadic list.  a = 1
    qualifies (half-square-plus with k = 1), covering trivial decompositions.
    """
    if a < 1:
        raise ValueError(f"base order must be positive, got {a}")
    if a % 2 == 0:
        raise ValueError(f"base order must be odd, got {a}")
    tag = _form_tag(a)
    if tag is not None:
        return tag
    if a in SPORADIC_BASES:
        return FormTag(SPORADIC, a)
    return None


@lru_cache(maxsize=None)
def qualifies_prime_power(q: int) -> FormTag | None:
    """Tag for a prime power usable as an expansion factor; None otherwise.

    Requires q ≡ 1 (mod 4).  A prime below 10**5 then qualifies outright
    (first match); otherwise one of the three quadratic forms must hold.
    Raises for arguments that are not prime powers.
    """
    factors = modnum.factorize(q)
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    _, e = factors[0]
    if q % 4 != 1:
        return None
    if e == 1 and q < SMALL_PRIME_BOUND:
        return FormTag(SMALL_PRIME_1MOD4, q)
    return _form_tag(q)


@dataclass(frozen=True)
class ProductCertificate:
    """A decomposition n = base * prod(factors) with every piece qualifying."""

    base: int
    base_tag: FormTag
    factors: tuple[tuple[int, FormTag], ...]

    @property
    def product(self) -> int:
        out = self.base
        for q, _ in self.factors:
            out *= q
        return out


@lru_cache(maxsize=None)
def _exponent_partition(p: int, e: int) -> tuple[int, ...] | None:
    """Smallest non-decreasing tuple of exponents t summing to e with every
    p**t a qualifying prime power; None when no such partition exists."""
    usable = [t for t in range(1, e + 1) if qualifies_prime_power(p**t) is not None]

    def rec(remaining: int, floor: int) -> tuple[int, ...] | None:
        if remaining == 0:
            return ()
        for t in usable:
            if t < floor or t > remaining:
                continue
            rest = rec(remaining - t, t)
            if rest is not None:
                return (t, *rest)
        return None

    return rec(e, 1)


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in modnum.factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def product_certificate(n: int, *, allow_trivial_cofactor: bool = True) -> ProductCertificate | None:
    """First qualifying decomposition of odd n, or None.

    The trivial decomposition (base n, no factors) is preferred when the
    whole of n qualifies as a base; otherwise proper bases are tried in
    ascending order, splitting each cofactor prime by prime with the
    smallest qualifying exponent partition.  Deterministic throughout.
    With allow_trivial_cofactor=False the trivial decomposition is skipped,
    forcing at least one prime-power factor.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need an odd n >= 3, got {n}")
    if allow_trivial_cofactor:
        tag = qualifies_base(n)
        if tag is not None:
            return ProductCertificate(n, tag, ())
    for base in _divisors(n):
        if base == n:
            continue
        tag = qualifies_base(base)
        if tag is None:
            continue
        cofactor = n // base
        qs: list[int] = []
        for p, e in modnum.factorize(cofactor):
            parts = _exponent_partition(p, e)
            if parts is None:
                qs = []
                break
            qs.extend(p**t for t in parts)
        if qs:
            qs.sort()
            factors = tuple((q, qualifies_prime_power(q)) for q in qs)
            return ProductCertificate(base, tag, factors)
    return None


@dataclass(frozen=True)
class CoverageVerdict:
    """Which criteria certify a cover of K_n for odd n."""

    n: int
    product_cert: ProductCertificate | None
    complement_prime: bool  # 2n+1 prime: the discrete-log construction applies

    @property
    def is_new(self) -> bool:
        """Certified by the discrete-log route only."""
        return self.complement_prime and self.product_cert is None

    @property
    def covered(self) -> bool:
        return self.complement_prime or self.product_cert is not None


def classify(n: int) -> CoverageVerdict:
    """Coverage verdict for odd n >= 3."""
    if n % 2 == 0 or n < 3:
        raise ValueError(f"need an odd n >= 3, got {n}")
    if n >= 1 << 64:
        raise ValueError(f"n must fit in 64 bits, got {n}")
    return CoverageVerdict(n, product_certificate(n), modnum.is_prime(2 * n + 1))


def enumerate_eligible(lo: int, hi: int) -> list[int]:
    """Ascending odd n in [lo, hi] with 2n+1 prime, for 3 <= lo <= hi."""
    if not 3 <= lo <= hi:
        raise ValueError(f"need 3 <= lo <= hi, got [{lo}, {hi}]")
    start = lo if lo % 2 else lo + 1
    return [n for n in range(start, hi + 1, 2) if modnum.is_prime(2 * n + 1)]


# Descriptive families of new values, derived from n's own arithmetic.
FAMILY_P7MOD8 = "p7mod8"  # n ≡ 3 (mod 4), so 2n+1 ≡ 7 (mod 8)
FAMILY_SOPHIE_GERMAIN = "sophie-germain"  # n itself prime
FAMILY_EVEN_3MOD4_PRODUCT = "even-product-3mod4"  # even count of distinct primes ≡ 3 (mod 4)


@dataclass(frozen=True)
class NewValue:
    verdict: CoverageVerdict
    families: tuple[str, ...]


def enumerate_new_values(hi: int) -> list[NewValue]:
    """All verdicts with is_new for odd n <= hi, tagged with their families.

    Families are descriptive metadata: n ≡ 3 (mod 4) (equivalently
    2n+1 ≡ 7 mod 8); n itself prime (a Sophie Germain prime); or n ≡ 1
    (mod 4) and a product of an even number of distinct primes, all ≡ 3
    (mod 4).  A value may belong to several families, or to none.
    """
    if hi < 3:
        raise ValueError(f"need hi >= 3, got {hi}")
    out = []
    for n in enumerate_eligible(3, hi):
        verdict = classify(n)
        if not verdict.is_new:
            continue
        families = []
        if n % 4 == 3:
            families.append(FAMILY_P7MOD8)
        if modnum.is_prime(n):
            families.append(FAMILY_SOPHIE_GERMAIN)
        if n % 4 == 1:
            factors = modnum.factorize(n)
            if len(factors) % 2 == 0 and all(
                e == 1 and p % 4 == 3 for p, e in factors
            ):
                families.append(FAMILY_EVEN_3MOD4_PRODUCT)
        out.append(NewValue(verdict, tuple(families)))
    return out
