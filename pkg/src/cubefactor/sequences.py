"""Exact integer sequences and combinatorial triangles.

Fibonacci, Lucas and Padovan numbers, binomial coefficients with the two
boundary conventions the cube-factor formulas rely on, and the (1,2)-Pascal
triangle (Lucas triangle). Everything is plain Python ints, so values stay
exact at every index exercised by the test suite (up to n = 500).
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

__all__ = [
    "fib",
    "lucas",
    "padovan",
    "padovan_closed",
    "binom_ext",
    "binom_ext_div3",
    "lucas_triangle",
    "lucas_triangle_row",
]


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    """n-th Fibonacci number, F(0) = 0, F(1) = 1."""
    _check_index(n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def lucas(n: int) -> int:
    """n-th Lucas number, L(0) = 2, L(1) = 1."""
    _check_index(n)
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def padovan(n: int) -> int:
    """n-th Padovan number: p(0) = p(1) = p(2) = 1, p(n) = p(n-2) + p(n-3)."""
    _check_index(n)
    a, b, c = 1, 1, 1
    for _ in range(n):
        a, b, c = b, c, a + b
    return a


def padovan_closed(n: int) -> int:
    """Padovan number as the binomial sum over j of C(j+1, n-2j).

    Independent of :func:`padovan`; the two must agree everywhere. The sum
    runs over floor((n+1)/3) <= j <= floor(n/2), outside of which every
    term vanishes.
    """
    _check_index(n)
    return sum(binom_ext(j + 1, n - 2 * j) for j in range((n + 1) // 3, n // 2 + 1))


def binom_ext(n: int, k: int) -> int:
    """Binomial coefficient with extended boundary conventions.

    Standard C(n, k) for 0 <= k <= n, the single special value
    C(-1, -1) = 1, and 0 for every other pair (k < 0, k > n, or n < 0).
    """
    if n == -1 and k == -1:
        return 1
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def binom_ext_div3(numerator: int, k: int) -> int:
    """C(numerator/3, k), or 0 when the upper index is not an integer.

    The closed-form coefficient formulas only ever divide the upper index
    by 3, so the "non-integer upper index gives 0" convention reduces to a
    divisibility test followed by :func:`binom_ext`.
    """
    if numerator % 3 != 0:
        return 0
    return binom_ext(numerator // 3, k)


def lucas_triangle(n: int, k: int) -> int:
    """Entry Y(n, k) of the Lucas triangle, via C(n,k) + C(n-1,k-1).

    Rows start 2 / 1 2 / 1 3 2 / ...; the apex Y(0,0) = 2 comes from the
    C(-1,-1) = 1 convention. Rejects k outside [0, n].
    """
    _check_index(n)
    if k < 0 or k > n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    return binom_ext(n, k) + binom_ext(n - 1, k - 1)


def lucas_triangle_row(n: int) -> list[int]:
    """Row n of the Lucas triangle, built by the Pascal-style recurrence.

    Interior entries satisfy Y(n,k) = Y(n-1,k-1) + Y(n-1,k); the boundary
    columns are seeds (the Pascal step alone would give row 1 = [2, 2]
    instead of [1, 2]). Serves as the second, independent computation
    route next to :func:`lucas_triangle`.
    """
    _check_index(n)
    row = [2]
    for m in range(1, n + 1):
        prev = row
        row = [1] + [prev[k - 1] + prev[k] for k in range(1, m)] + [2]
    return row
