#!/usr/bin/env python3
"""Regenerate data/a002034.txt, the vendored reference table for eta.

Values are computed by literal factorial divisibility (grow m! until n
divides it), deliberately bypassing the library, so the snapshot is an
independent cross-check target. The file follows the published convention
for this sequence (b-file rows `n value`, value 1 at n = 1); the library
itself returns eta(1) = 0 and the cross-check test offsets index 1.
"""

import argparse
from pathlib import Path


def smallest_factorial_multiple_brute(n: int) -> int:
    """Least m >= 1 with n | m!, by multiplying factorials outright."""
    m = 1
    factorial = 1
    while factorial % n != 0:
        m += 1
        factorial *= m
    return m


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100, help="number of terms")
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parents[1] / "data" / "a002034.txt",
    )
    args = parser.parse_args()

    lines = ["# A002034 reference snapshot (published convention: value 1 at n=1)"]
    lines += [f"{n} {smallest_factorial_multiple_brute(n)}" for n in range(1, args.count + 1)]
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("\n".join(lines) + "\n", encoding="ascii")
    print(f"wrote {args.count} terms to {args.out}")


if __name__ == "__main__":
    main()
