"""Worked problems built on eta: trailing zeros of factorials and their
inverse, smallest factorial multiples of factored targets, a prime
characterization scan, and table emission for regression and cross-checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .errors import SearchBudgetError
from .eta import EtaResult, eta, eta_p
from .exprs import FactoredExpr
from .number_core import factorize, is_prime, legendre_valuation

TABLE_FORMATS = ("plain", "csv", "json-lines")

# Factorials with zero trailing zeros, for callers asking about z = 0.
# solve_trailing_zeros itself starts at z = 1 (m = 0 is excluded from
# members, so z = 0 would otherwise be a special case).
ZERO_ZEROS_MEMBERS = (1, 2, 3, 4)


@dataclass(frozen=True)
class ZerosSolution:
    """All m >= 1 whose factorial ends in exactly z zeros.

    members is ascending and contiguous: empty when no factorial attains z
    (the count jumps past it at a higher power of 5), otherwise exactly the
    five integers from one multiple of 5 up to the next.
    """

    z: int
    members: tuple[int, ...]

    def __post_init__(self):
        if len(self.members) not in (0, 5):
            raise ValueError(f"members must have 0 or 5 elements, got {len(self.members)}")
        if self.members:
            first = self.members[0]
            if self.members != tuple(range(first, first + 5)):
                raise ValueError(f"members must be contiguous, got {self.members}")
            if first % 5 != 0:
                raise ValueError(f"members must start at a multiple of 5, got {first}")


def trailing_zeros(m: int) -> int:
    """Count of trailing base-10 zeros of m!.

    Factors of 5 are scarcer than factors of 2 in a factorial, so this is
    just the 5-adic valuation of m!.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return legendre_valuation(m, 5)


def solve_trailing_zeros(z: int) -> ZerosSolution:
    """All m whose factorial has exactly z >= 1 trailing zeros.

    The least candidate is eta_5(z); eta_2(z) <= eta_5(z) is checked at
    runtime instead of assumed, so eta of 10^z never has to be formed. If
    the candidate overshoots z, no factorial attains z and the solution is
    empty; otherwise it is the five integers up to the next multiple of 5.
    """
    if z < 1:
        raise ValueError(f"z must be >= 1, got {z}")
    candidate = eta_p(z, 5)
    if eta_p(z, 2) > candidate:
        raise RuntimeError(f"eta_2({z}) > eta_5({z}): 2-adic side cannot dominate")
    if trailing_zeros(candidate) != z:
        return ZerosSolution(z, ())
    if trailing_zeros(candidate + 5) <= z:
        raise RuntimeError(f"zero count fails to increase after {candidate + 4}")
    return ZerosSolution(z, tuple(range(candidate, candidate + 5)))


def smallest_factorial_multiple(n: FactoredExpr) -> EtaResult:
    """eta over a parsed expression: least m with m! a multiple of the input."""
    return eta(n.to_factorization())


def prime_characterization_scan(limit: int, budget: int = 10**6) -> list[int]:
    """Every n in (4, limit] where (eta(n) == n) disagrees with primality.

    Expected to return an empty list; a nonempty result means a bug. The
    bound n > 4 matters: eta(4) = 4 although 4 is composite.
    """
    if limit <= 4:
        raise ValueError(f"limit must be > 4, got {limit}")
    if limit > budget:
        raise SearchBudgetError(f"scan limit {limit} exceeds budget {budget}")
    violations = []
    for n in range(5, limit + 1):
        if (eta(factorize(n)).value == n) != is_prime(n):
            violations.append(n)
    return violations


def emit_table(start: int, end: int, fmt: str = "plain") -> Iterator[str]:
    """Lines of an n -> eta(n) table for n in [start, end], stable per format.

    plain:      `<n> <eta>`
    csv:        a `# convention: eta(1)=0` comment, header `n,eta,argmax_prime`,
                then integer rows (argmax column empty for n = 1)
    json-lines: one object per line, keys n / eta / witness, where witness
                is a [prime, exponent, eta_p] triple per factor

    eta(1) = 0 here; widely published tables start at 1 instead, hence the
    csv convention marker.
    """
    if start < 1:
        raise ValueError(f"start must be >= 1, got {start}")
    if end < start:
        raise ValueError(f"end must be >= start, got {start}..{end}")
    if fmt not in TABLE_FORMATS:
        raise ValueError(f"format must be one of {TABLE_FORMATS}, got {fmt!r}")
    if fmt == "csv":
        yield "# convention: eta(1)=0"
        yield "n,eta,argmax_prime"
    for n in range(start, end + 1):
        result = eta(factorize(n))
        if fmt == "plain":
            yield f"{n} {result.value}"
        elif fmt == "csv":
            argmax = "" if result.argmax_prime is None else str(result.argmax_prime)
            yield f"{n},{result.value},{argmax}"
        else:
            record = {
                "n": n,
                "eta": result.value,
                "witness": [[p, a, e] for p, a, e in result.per_prime],
            }
            yield json.dumps(record, separators=(",", ":"))
