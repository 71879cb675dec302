"""The ternary quadratic form x^2 + 2y^2 + 2z^2 and triangular numbers.

By Dickson's representability criterion the form represents every
positive integer not of the shape 4^a*(8b+7).  For h >= 2 the number
(2h+1)^2 + 4 is 5 mod 8, hence representable, and a parity argument
forces a representation with x, y, z all odd; writing x=2m+1, y=2r+1,
z=2s+1 turns it into h(h+1)/2 = m(m+1)/2 + r(r+1) + s(s+1), which
supplies a second 4-core partition of every triangular number beyond 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .generate import count_t_cores
from .qseries import triple_triangular_series


@dataclass(frozen=True)
class OddRepresentation:
    """An all-odd representation (2h+1)^2 + 4 = x^2 + 2y^2 + 2z^2 together
    with the triangular-number decomposition it encodes."""

    h: int
    x: int
    y: int
    z: int
    m: int
    r: int
    s: int

    def __post_init__(self):
        if self.h < 2:
            raise ValueError(f"h must be at least 2, got {self.h}")
        target = (2 * self.h + 1) ** 2 + 4
        if self.x ** 2 + 2 * self.y ** 2 + 2 * self.z ** 2 != target:
            raise ValueError(f"not a representation of {target}: {self}")
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if v < 1 or v % 2 == 0:
                raise ValueError(f"{name} must be a positive odd integer, got {v}")
        if (self.x, self.y, self.z) != (
            2 * self.m + 1,
            2 * self.r + 1,
            2 * self.s + 1,
        ):
            raise ValueError(f"(m, r, s) do not match (x, y, z): {self}")
        lhs = self.h * (self.h + 1) // 2
        rhs = (
            self.m * (self.m + 1) // 2
            + self.r * (self.r + 1)
            + self.s * (self.s + 1)
        )
        if lhs != rhs:
            raise ValueError(f"triangular identity fails: {lhs} != {rhs}")


def is_dickson_excluded(n: int) -> bool:
    """True when n has the shape 4^a*(8b+7), the integers the form
    x^2 + 2y^2 + 2z^2 does not represent."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    while n % 4 == 0:
        n //= 4
    return n % 8 == 7


def represent_ternary(n: int) -> tuple[int, int, int] | None:
    """Lexicographically smallest (x, y, z) of non-negative integers with
    x^2 + 2y^2 + 2z^2 = n, or None when no representation exists.

    Bounded exhaustive search: x up to sqrt(n), y up to sqrt(n/2), z fixed
    by the remainder.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for x in range(isqrt(n) + 1):
        rest = n - x * x
        if rest % 2:
            continue
        half = rest // 2  # y^2 + z^2
        for y in range(isqrt(half) + 1):
            z2 = half - y * y
            z = isqrt(z2)
            if z * z == z2:
                return (x, y, z)
    return None


def representable_flags(n_max: int) -> list[bool]:
    """flags[n] for 1 <= n <= n_max: does x^2 + 2y^2 + 2z^2 = n have a
    solution?  One sieve pass over all value triples up to the bound."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    flags = bytearray(n_max + 1)
    x = 0
    while x * x <= n_max:
        a = x * x
        y = 0
        while a + 2 * y * y <= n_max:
            b = a + 2 * y * y
            z = 0
            while True:
                v = b + 2 * z * z
                if v > n_max:
                    break
                flags[v] = 1
                z += 1
            y += 1
        x += 1
    return [bool(v) for v in flags]


def odd_representation(h: int) -> OddRepresentation:
    """The lexicographically smallest all-odd (x, y, z) representing
    (2h+1)^2 + 4, packaged with m = (x-1)/2, r = (y-1)/2, s = (z-1)/2."""
    if h < 2:
        raise ValueError(f"h must be at least 2, got {h}")
    target = (2 * h + 1) ** 2 + 4
    x = 1
    while x * x <= target:
        half = (target - x * x) // 2  # target - x^2 is 4 mod 8, so exact
        y = 1
        while y * y <= half:
            z2 = half - y * y
            z = isqrt(z2)
            if z * z == z2 and z % 2 == 1:
                return OddRepresentation(
                    h=h,
                    x=x,
                    y=y,
                    z=z,
                    m=(x - 1) // 2,
                    r=(y - 1) // 2,
                    s=(z - 1) // 2,
                )
            y += 2
        x += 2
    raise RuntimeError(f"no all-odd representation found for h={h}")


def check_triangular_4core_pair(
    h_max: int, enum_budget: int = 600
) -> tuple[bool, list[str]]:
    """For every 2 <= h <= h_max and n = h(h+1)/2: the triple triangular
    series coefficient at n is at least 2, and (for n within the
    enumeration budget) so is the number of 4-core partitions of n."""
    if h_max < 2:
        raise ValueError(f"h_max must be at least 2, got {h_max}")
    n_top = h_max * (h_max + 1) // 2
    series = triple_triangular_series(n_top)
    failures = []
    for h in range(2, h_max + 1):
        n = h * (h + 1) // 2
        if series[n] < 2:
            failures.append(f"series coefficient at n={n} is {series[n]} < 2")
        if n <= enum_budget and count_t_cores(n, 4) < 2:
            failures.append(f"fewer than two 4-cores of n={n}")
    return not failures, failures
