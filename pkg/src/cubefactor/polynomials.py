"""Optimal cube factor polynomials of the two cube families.

The coefficient q_k of the polynomial for index n counts the dimension-k
components of an optimal (minimum-component) cube factor. Three independent
routes compute the same coefficients:

* ``qpoly_rec``  -- the base cases plus the recurrence
                    Q(n, x) = x * Q(n-2, x) + Q(n-3, x);
* ``q_closed``   -- binomial / Lucas-triangle closed forms;
* ``gf_series``  -- truncated expansion of the rational generating function
                    in y, with polynomial-in-x coefficients.

``identity_audit`` replays every identity and case-split formula as a
prediction and reports PASS / FAIL / INFO per entry; predictions are never
used as the computation path, so a wrong prediction shows up in the report
instead of poisoning the numbers.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .sequences import binom_ext, binom_ext_div3, fib, lucas, padovan

__all__ = [
    "Family",
    "CubeFactorPolynomial",
    "SeriesExpansion",
    "DiagonalProfile",
    "AuditEntry",
    "AuditReport",
    "qpoly_rec",
    "q_closed",
    "gf_series",
    "padovan_gf_series",
    "eval_at",
    "poly_degree",
    "antidiagonal_profile",
    "identity_audit",
    "poly_to_json",
    "poly_from_json",
    "triangle_csv",
]


class Family(str, Enum):
    """The two graph families with cube-factor polynomials."""

    GAMMA = "gamma"
    OMEGA = "omega"


def _family(value: Family | str) -> Family:
    if isinstance(value, Family):
        return value
    try:
        return Family(str(value).lower())
    except ValueError:
        raise ValueError(f"unknown family {value!r}; expected 'gamma' or 'omega'") from None


# base-case coefficient rows; the recurrence takes over right after them
_BASE: dict[Family, tuple[tuple[int, ...], ...]] = {
    Family.GAMMA: ((1,), (0, 1), (1, 1)),
    Family.OMEGA: ((1,), (0, 1), (1, 1), (0, 2), (1, 1, 1)),
}


@dataclass(frozen=True)
class CubeFactorPolynomial:
    """Dense coefficient array for one family member; coeffs[k] = q_k."""

    family: Family
    n: int
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def nonzero_count(self) -> int:
        return sum(1 for c in self.coeffs if c != 0)

    def coefficient(self, k: int) -> int:
        """q_k, reading coefficients beyond the degree as 0."""
        if k < 0:
            return 0
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        return eval_at(self, x)


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _shift_add(shifted: Sequence[int], plain: Sequence[int]) -> tuple[int, ...]:
    # x * shifted + plain, as coefficient arrays
    out = [0] * max(len(shifted) + 1, len(plain))
    for i, c in enumerate(shifted):
        out[i + 1] += c
    for i, c in enumerate(plain):
        out[i] += c
    return _strip(out)


# grow-only memo tables; the lock serializes extension, lookups of already
# present rows are safe without it
_COEFFS: dict[Family, list[tuple[int, ...]]] = {
    fam: [tuple(row) for row in rows] for fam, rows in _BASE.items()
}
_COEFFS_LOCK = threading.Lock()


def _coeffs_upto(fam: Family, n: int) -> tuple[int, ...]:
    table = _COEFFS[fam]
    if len(table) <= n:
        with _COEFFS_LOCK:
            while len(table) <= n:
                m = len(table)
                table.append(_shift_add(table[m - 2], table[m - 3]))
    return table[n]


def qpoly_rec(family: Family | str, n: int) -> CubeFactorPolynomial:
    """Polynomial for index n via the base cases and the recurrence."""
    fam = _family(family)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return CubeFactorPolynomial(fam, n, _coeffs_upto(fam, n))


def poly_degree(family: Family | str, n: int) -> int:
    """Degree of the polynomial: ceil(n/2) for gamma, floor(n/2) for omega.

    The omega value follows the tabulated polynomials: degree 0 at n = 0
    and degree 1 at n = 1, then floor(n/2) from n = 2 on.
    """
    fam = _family(family)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if fam is Family.GAMMA:
        return (n + 1) // 2
    return 1 if n == 1 else n // 2


def _y_ext(m: int, k: int) -> int:
    # Lucas triangle entry extended by 0 outside 0 <= k <= m
    return binom_ext(m, k) + binom_ext(m - 1, k - 1)


def q_closed(family: Family | str, n: int, k: int) -> int:
    """Coefficient q_k by the closed form, independent of the recurrence.

    gamma (n >= 0):  C((n+k)/3, k) + C((n+k+1)/3, k), a term vanishing
    whenever 3 does not divide its numerator.

    omega (n >= 2):  C((n+k+1)/3 - 1, k) + C((n+k)/3 - 1, k-1)
    + Y((n+k-1)/3, k), with the same vanishing rule; exactly one term can
    survive. The formula is not valid below n = 2 (it would give 2 instead
    of 0 for q_0 at n = 1), so n < 2 delegates to the recurrence.
    """
    fam = _family(family)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0:
        return 0
    if fam is Family.GAMMA:
        return binom_ext_div3(n + k, k) + binom_ext_div3(n + k + 1, k)
    if n < 2:
        return qpoly_rec(fam, n).coefficient(k)
    total = 0
    if (n + k + 1) % 3 == 0:
        total += binom_ext((n + k + 1) // 3 - 1, k)
    if (n + k) % 3 == 0:
        total += binom_ext((n + k) // 3 - 1, k - 1)
    if (n + k - 1) % 3 == 0:
        total += _y_ext((n + k - 1) // 3, k)
    return total


@dataclass(frozen=True)
class SeriesExpansion:
    """Truncated power-series expansion in y; terms[n] is a poly in x."""

    family: Family
    order: int
    terms: tuple[tuple[int, ...], ...]


def _expand_rational(numerator: dict[int, list[int]], order: int) -> list[tuple[int, ...]]:
    """Expand numerator / (1 - x*y^2 - y^3) to the given order in y.

    Exact polynomial long division: the quotient terms R satisfy
    R[n] = numerator[n] + x * R[n-2] + R[n-3], which is the
    multiply-accumulate form of the denominator's geometric series.
    """
    out: list[tuple[int, ...]] = []
    for n in range(order + 1):
        acc = list(numerator.get(n, [0]))
        if n >= 2:
            prev = out[n - 2]
            if len(acc) < len(prev) + 1:
                acc.extend([0] * (len(prev) + 1 - len(acc)))
            for i, c in enumerate(prev):
                acc[i + 1] += c
        if n >= 3:
            prev = out[n - 3]
            if len(acc) < len(prev):
                acc.extend([0] * (len(prev) - len(acc)))
            for i, c in enumerate(prev):
                acc[i] += c
        out.append(_strip(acc))
    return out


def gf_series(family: Family | str, order: int) -> SeriesExpansion:
    """Expand the family's generating function in y up to the given order.

    gamma:  (1 + x*y + y^2) / (1 - x*y^2 - y^3)
    omega:  (1 + y)(1 + y - y^3) / (1 - x*y^2 - y^3) + (x - 2)*y,
            the correction being added to the y^1 coefficient.
    """
    fam = _family(family)
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if fam is Family.GAMMA:
        terms = _expand_rational({0: [1], 1: [0, 1], 2: [1]}, order)
    else:
        # (1 + y)(1 + y - y^3) = 1 + 2y + y^2 - y^3 - y^4
        terms = _expand_rational({0: [1], 1: [2], 2: [1], 3: [-1], 4: [-1]}, order)
        if order >= 1:
            corrected = list(terms[1]) + [0] * max(0, 2 - len(terms[1]))
            corrected[0] -= 2
            corrected[1] += 1
            terms[1] = _strip(corrected)
    return SeriesExpansion(fam, order, tuple(terms))


def padovan_gf_series(order: int) -> list[int]:
    """Padovan numbers from the generating function (1+y) / (1 - y^2 - y^3)."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    out: list[int] = []
    for n in range(order + 1):
        value = 1 if n <= 1 else 0
        if n >= 2:
            value += out[n - 2]
        if n >= 3:
            value += out[n - 3]
        out.append(value)
    return out


def eval_at(poly: CubeFactorPolynomial | Sequence[int], x: int) -> int:
    """Evaluate a coefficient array at an integer point, exactly."""
    coeffs = poly.coeffs if isinstance(poly, CubeFactorPolynomial) else tuple(poly)
    result = 0
    for c in reversed(coeffs):
        result = result * x + c
    return result


@dataclass(frozen=True)
class DiagonalProfile:
    """Diagonal slices through the coefficient triangle at a fixed n.

    Every value is read off recurrence-built polynomials, never off the
    diagonal-sum formulas, so the profile can serve as the oracle side
    when those formulas are audited.
    """

    family: Family
    n: int
    anti_terms: tuple[int, ...]  # q_k(G_{n-k}) for k = 0..n
    anti_sum: int
    shifted_terms: tuple[int, ...]  # q_k(G_{n+2k}) for k = 0..cap
    skew_terms: tuple[int, ...]  # q_k(G_{n-4k}) for 4k <= n
    skew_sum: int


def antidiagonal_profile(family: Family | str, n: int, cap: int = 10) -> DiagonalProfile:
    """Anti-diagonal, shifted and skew-diagonal coefficient slices at n."""
    fam = _family(family)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if cap < 0:
        raise ValueError(f"cap must be non-negative, got {cap}")
    anti = tuple(qpoly_rec(fam, n - k).coefficient(k) for k in range(n + 1))
    shifted = tuple(qpoly_rec(fam, n + 2 * k).coefficient(k) for k in range(cap + 1))
    skew = tuple(qpoly_rec(fam, n - 4 * k).coefficient(k) for k in range(n // 4 + 1))
    return DiagonalProfile(fam, n, anti, sum(anti), shifted, skew, sum(skew))


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def poly_to_json(poly: CubeFactorPolynomial) -> str:
    """JSON text with coefficients as decimal strings (exact past 64 bits)."""
    payload = {
        "family": poly.family.value,
        "n": poly.n,
        "coeffs": [str(c) for c in poly.coeffs],
    }
    return json.dumps(payload, separators=(",", ":"))


def poly_from_json(text: str) -> CubeFactorPolynomial:
    data = json.loads(text)
    return CubeFactorPolynomial(
        _family(data["family"]), int(data["n"]), tuple(int(c) for c in data["coeffs"])
    )


def triangle_csv(family: Family | str, rows: int) -> str:
    """Coefficient triangle as CSV, one polynomial per row, n = 0..rows-1."""
    fam = _family(family)
    if rows < 0:
        raise ValueError(f"rows must be non-negative, got {rows}")
    lines = [",".join(str(c) for c in qpoly_rec(fam, n).coeffs) for n in range(rows)]
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# identity audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AuditEntry:
    name: str
    status: str  # PASS | FAIL | INFO
    detail: str

    def line(self) -> str:
        return f"{self.status} {self.name}: {self.detail}"


@dataclass
class AuditReport:
    family: Family
    n_max: int
    entries: list[AuditEntry] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return not any(e.status == "FAIL" for e in self.entries)

    def lines(self) -> list[str]:
        return [e.line() for e in self.entries]

    def to_json(self) -> str:
        payload = {
            "family": self.family.value,
            "n_max": self.n_max,
            "entries": [
                {"name": e.name, "status": e.status, "detail": e.detail}
                for e in self.entries
            ],
        }
        return json.dumps(payload, separators=(",", ":"))


def _first_mismatch(pairs: Iterable[tuple[int, int, int]]) -> tuple[int, int, int] | None:
    # pairs of (n, expected, actual); returns the first disagreement
    for n, expected, actual in pairs:
        if expected != actual:
            return n, expected, actual
    return None


def _equality_entry(name, pairs, ok_detail) -> AuditEntry:
    miss = _first_mismatch(pairs)
    if miss is None:
        return AuditEntry(name, "PASS", ok_detail)
    n, expected, actual = miss
    return AuditEntry(name, "FAIL", f"first failure at n={n}: expected {expected}, got {actual}")


def identity_audit(family: Family | str, n_max: int) -> AuditReport:
    """Audit every polynomial identity and case-split prediction up to n_max.

    Each entry is PASS/FAIL with the first failing index, or INFO for the
    documented prediction discrepancies (which are reported with the
    empirically matching reading instead of gating the result).
    """
    fam = _family(family)
    if n_max < 5:
        raise ValueError(f"n_max must be at least 5, got {n_max}")
    report = AuditReport(fam, n_max)
    add = report.entries.append
    polys = [qpoly_rec(fam, n) for n in range(n_max + 1)]
    rng = f"[n=0..{n_max}]"

    # value identities
    add(_equality_entry(
        f"{fam.value} eval-at-1 equals padovan(n+1)",
        ((n, padovan(n + 1), eval_at(polys[n], 1)) for n in range(n_max + 1)),
        rng,
    ))
    if fam is Family.GAMMA:
        add(_equality_entry(
            "gamma eval-at-2 equals fibonacci(n+2)",
            ((n, fib(n + 2), eval_at(polys[n], 2)) for n in range(n_max + 1)),
            rng,
        ))
    else:
        add(_equality_entry(
            "omega eval-at-2 equals lucas(n)",
            ((n, lucas(n), eval_at(polys[n], 2)) for n in range(2, n_max + 1)),
            f"[n=2..{n_max}]",
        ))

    # route agreement
    lo = 0 if fam is Family.GAMMA else 2
    def closed_pairs():
        for n in range(lo, n_max + 1):
            for k in range(polys[n].degree + 2):
                yield n, polys[n].coefficient(k), q_closed(fam, n, k)
    add(_equality_entry(
        f"{fam.value} closed-form coefficients equal recurrence",
        closed_pairs(),
        f"[n={lo}..{n_max}, all k]",
    ))
    series = gf_series(fam, n_max)
    add(_equality_entry(
        f"{fam.value} series-expansion terms equal recurrence",
        ((n, 0, 0 if series.terms[n] == polys[n].coeffs else 1) for n in range(n_max + 1)),
        rng,
    ))
    add(_equality_entry(
        f"{fam.value} padovan series equals recurrence padovan",
        ((n, padovan(n), v) for n, v in enumerate(padovan_gf_series(n_max))),
        rng,
    ))

    # structural counts
    if fam is Family.GAMMA:
        add(_equality_entry(
            "gamma nonzero-count equals floor((n+4)/3)",
            ((n, (n + 4) // 3, polys[n].nonzero_count) for n in range(n_max + 1)),
            rng,
        ))
        add(_equality_entry(
            "gamma degree equals ceil(n/2)",
            ((n, (n + 1) // 2, polys[n].degree) for n in range(n_max + 1)),
            rng,
        ))
        add(AuditEntry(
            "gamma degree convention",
            "INFO",
            "degree follows ceil(n/2); the floor(n/2) reading disagrees first at n=1 "
            f"(degree {polys[1].degree})",
        ))
    else:
        miss = _first_mismatch(
            (n, (n + 5) // 3, polys[n].nonzero_count) for n in range(4, n_max + 1)
        )
        if miss is None:
            add(AuditEntry(
                "omega nonzero-count equals floor((n+5)/3)", "PASS", f"[n=4..{n_max}]",
            ))
        else:
            n, expected, actual = miss
            add(AuditEntry(
                "omega nonzero-count equals floor((n+5)/3)",
                "FAIL",
                f"first failure at n={n}: predicted {expected}, got {actual}; "
                "observed count is floor(n/2)+1 minus 1 when 3 divides n",
            ))
        add(_equality_entry(
            "omega degree equals floor(n/2)",
            ((n, n // 2, polys[n].degree) for n in range(2, n_max + 1)),
            f"[n=2..{n_max}]",
        ))

    # diagonal slices, oracle side from the recurrence polynomials
    profiles = [antidiagonal_profile(fam, n, cap=(n_max - n) // 2) for n in range(n_max + 1)]

    if fam is Family.GAMMA:
        def anti_expected(n: int) -> int:
            if n % 3 == 2:
                return 2 ** ((n + 1) // 3)
            if n % 3 == 0:
                return 2 ** (n // 3)
            return 0
        add(_equality_entry(
            "gamma anti-diagonal sum equals 2^m on n=3m-1,3m else 0",
            ((n, anti_expected(n), profiles[n].anti_sum) for n in range(n_max + 1)),
            rng,
        ))

        def anti_perk_pairs():
            for n in range(n_max + 1):
                for k in range(n + 1):
                    if n % 3 == 2:
                        expected = binom_ext((n + 1) // 3, k)
                    elif n % 3 == 0:
                        expected = binom_ext(n // 3, k)
                    else:
                        expected = 0
                    yield n, expected, profiles[n].anti_terms[k]
        add(_equality_entry(
            "gamma anti-diagonal per-k values follow the C(m,k) case split",
            anti_perk_pairs(),
            rng,
        ))

        def shifted_pairs():
            for n in range(n_max + 1):
                for k, value in enumerate(profiles[n].shifted_terms):
                    if n % 3 == 2:
                        expected = binom_ext((n + 1) // 3 + k, k)
                    elif n % 3 == 0:
                        expected = binom_ext(n // 3 + k, k)
                    else:
                        expected = 0
                    yield n, expected, value
        add(_equality_entry(
            "gamma shifted-index values q_k(n+2k) equal C(m+k,k) on n=3m-1,3m else 0",
            shifted_pairs(),
            rng,
        ))

        # skew sums: scan fibonacci index shifts, report the one that matches;
        # a negative predicted index counts as a mismatch for that shift
        def fib_or_none(i: int) -> int | None:
            return fib(i) if i >= 0 else None

        matching_shifts = []
        for shift in range(-2, 4):
            ok = True
            for n in range(n_max + 1):
                s = profiles[n].skew_sum
                if n % 3 == 2:
                    ok = s == fib_or_none((n + 1) // 3 + shift)
                elif n % 3 == 0:
                    ok = s == fib_or_none(n // 3 + shift)
                else:
                    ok = s == 0
                if not ok:
                    break
            if ok:
                matching_shifts.append(shift)
        add(AuditEntry(
            "gamma skew-diagonal sum vs fibonacci index",
            "INFO",
            f"predicted fib(m) on n=3m-1,3m; matching shifts {matching_shifts} "
            f"(observed fib(m+1)) {rng}",
        ))
    else:
        def anti_expected(n: int) -> int:
            if n % 3 == 2:
                return 2 ** ((n + 1) // 3 - 1)
            if n % 3 == 0:
                return 2 ** (n // 3 - 1)
            return 3 * 2 ** ((n - 1) // 3 - 1)
        add(_equality_entry(
            "omega anti-diagonal sum follows the 2^(m-1) / 3*2^(m-1) case split",
            ((n, anti_expected(n), profiles[n].anti_sum) for n in range(3, n_max + 1)),
            f"[n=3..{n_max}]",
        ))

        def anti_perk_pairs():
            # the per-k case split restates the closed form; valid for
            # inner index n-k >= 2 and k >= 2
            for n in range(n_max + 1):
                for k in range(2, n - 1):
                    if n % 3 == 2:
                        expected = binom_ext((n + 1) // 3 - 1, k)
                    elif n % 3 == 0:
                        expected = binom_ext(n // 3 - 1, k - 1)
                    else:
                        expected = _y_ext((n - 1) // 3, k)
                    yield n, expected, profiles[n].anti_terms[k]
        add(_equality_entry(
            "omega anti-diagonal per-k values follow the closed-form case split",
            anti_perk_pairs(),
            f"[n=0..{n_max}, k>=2, n-k>=2]",
        ))

        # shifted-index prediction: audit the printed reading against the
        # substituted one and report which matches
        printed_ok = True
        printed_example = None
        substituted_ok = True
        substituted_example = None
        for n in range(n_max + 1):
            if n == 1:
                continue
            for k, value in enumerate(profiles[n].shifted_terms):
                if k == 0:
                    continue
                if n % 3 == 2:
                    m = (n + 1) // 3
                    printed, substituted = binom_ext(m + k, k), binom_ext(m + k - 1, k)
                elif n % 3 == 0:
                    m = n // 3
                    printed, substituted = binom_ext(m + k - 1, k), binom_ext(m + k - 1, k - 1)
                else:
                    m = (n - 1) // 3
                    printed = substituted = _y_ext(m + k, k)
                if printed != value and printed_example is None:
                    printed_ok = False
                    printed_example = (n, k, printed, value)
                if substituted != value and substituted_example is None:
                    substituted_ok = False
                    substituted_example = (n, k, substituted, value)
        detail = (
            f"printed reading matches: {printed_ok}"
            + (f" (first miss n={printed_example[0]}, k={printed_example[1]}: "
               f"predicted {printed_example[2]}, got {printed_example[3]})"
               if printed_example else "")
            + f"; substituted reading matches: {substituted_ok}"
            + (f" (first miss n={substituted_example[0]}, k={substituted_example[1]})"
               if substituted_example else "")
        )
        add(AuditEntry("omega shifted-index values q_k(n+2k), dual reading", "INFO", detail))

        def skew_pairs():
            for n in range(6, n_max + 1):
                if n % 3 == 2:
                    expected = fib((n + 1) // 3)
                elif n % 3 == 0:
                    expected = fib(n // 3 - 1)
                else:
                    expected = lucas((n - 1) // 3)
                yield n, expected, profiles[n].skew_sum
        add(_equality_entry(
            "omega skew-diagonal sum follows the fib/lucas case split",
            skew_pairs(),
            f"[n=6..{n_max}]",
        ))

    if fam is Family.GAMMA:
        def detailed_pairs():
            for n in range(n_max + 1):
                for k in range(polys[n].degree + 2):
                    if (n + k) % 3 == 2:
                        expected = binom_ext((n + k + 1) // 3, k)
                    elif (n + k) % 3 == 0:
                        expected = binom_ext((n + k) // 3, k)
                    else:
                        expected = 0
                    yield n, expected, q_closed(fam, n, k)
        add(_equality_entry(
            "gamma two-term closed form follows the C(m,k) case split",
            detailed_pairs(),
            rng,
        ))

    return report
