"""Closed-form bounds on the metric dimension of Johnson graphs.

Everything here is exact integer or :class:`fractions.Fraction` arithmetic;
real-valued lower bounds are rounded up because the quantity bounded is an
integer.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, floor

from .errors import InvalidParameters


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def sigma_closed_form(m: int, k: int) -> int:
    """Known exact values for ``k = 1`` and ``k = 2``."""
    if k not in (1, 2):
        raise InvalidParameters(f"closed form only known for k in {{1, 2}}, got k={k}")
    if m < k + 1:
        raise InvalidParameters(f"need m >= k+1, got m={m}, k={k}")
    if k == 1:
        return m - 1
    base = _ceil(Fraction(2 * (m - 1), 3))
    return base if (m == 5 or m % 3 == 0) else base + 1


def counting_bound(m: int, k: int) -> int:
    """Least ``t`` with ``(k+1)^t >= C(m, k)``: each coordinate takes k+1 values."""
    n = comb(m, k)
    t, reach = 0, 1
    while reach < n:
        t += 1
        reach *= k + 1
    return t


def lower_bound_terms(m: int, k: int) -> list[tuple[str, int]]:
    """Each lower-bound term (already rounded up) with a source label."""
    if k < 3:
        raise InvalidParameters(f"lower bound formulas need k >= 3, got k={k}")
    if m < 2 * k - 1:
        raise InvalidParameters(f"lower bound formulas need m >= 2k-1, got m={m}, k={k}")
    terms = [("general-k (6m-8)/(3k+1)", _ceil(Fraction(6 * m - 8, 3 * k + 1)))]
    if k == 3:
        terms.append(("k=3 refined (36m-50)/59", _ceil(Fraction(36 * m - 50, 59))))
    terms.append(("base-size floor(2(m-1)/(k+1))", (2 * (m - 1)) // (k + 1)))
    terms.append(("plumbing: counting log_{k+1} C(m,k)", counting_bound(m, k)))
    return terms


def lower_bound(m: int, k: int) -> int:
    return max(v for _, v in lower_bound_terms(m, k))


def start_bound(m: int, k: int) -> int:
    """A valid lower bound for every ``m >= k >= 1``, used to seed searches."""
    if k >= 3 and m >= 2 * k - 1:
        return lower_bound(m, k)
    return counting_bound(m, k)


def block_size(k: int) -> int:
    """The block length ``4((k-1)^(2k) - 1)/(k-2)`` of the general upper bound."""
    if k < 3:
        raise InvalidParameters(f"need k >= 3, got k={k}")
    num = 4 * ((k - 1) ** (2 * k) - 1)
    assert num % (k - 2) == 0
    return num // (k - 2)


def upper_bound_terms(m: int, k: int) -> list[tuple[str, int]]:
    if k < 3:
        raise InvalidParameters(f"upper bound formulas need k >= 3, got k={k}")
    if m < 2 * k - 1:
        raise InvalidParameters(f"upper bound formulas need m >= 2k-1, got m={m}, k={k}")
    kp = block_size(k)
    q, r = divmod(m, kp)
    step = k // 2 + 1
    terms = [("general-k 2k'q/k + (floor(k/2)+1)r", floor(Fraction(2 * kp * q, k)) + step * r)]
    if k == 3:
        q13, r13 = divmod(m, 13)
        terms.append(("k=3 refined 8q+2r", 8 * q13 + 2 * r13))
    return terms


def upper_bound_value(m: int, k: int) -> int:
    return min(v for _, v in upper_bound_terms(m, k))


def group_rank_bound(n: int, r: int) -> int:
    """Upper bound ``n - r + 1`` for a transitive group of degree n and rank r."""
    if not 2 <= r <= n:
        raise InvalidParameters(f"need 2 <= r <= n, got n={n}, r={r}")
    return n - r + 1


__all__ = [
    "sigma_closed_form", "counting_bound", "lower_bound_terms", "lower_bound", "start_bound",
    "block_size", "upper_bound_terms", "upper_bound_value", "group_rank_bound",
]
